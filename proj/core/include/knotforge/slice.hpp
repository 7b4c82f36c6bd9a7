#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotforge/braid.hpp"
#include "knotforge/grid_homology.hpp"
#include "knotforge/laurent.hpp"
#include "knotforge/seifert.hpp"

namespace knotforge {

/// Primitive class p*x + q*y in H_1 of a genus-one surface, normalized so
/// that p > 0, or (p, q) = (0, 1).
struct MetabolizerClass {
  std::int64_t p = 0;
  std::int64_t q = 1;

  /// Normalizes sign and divides by gcd. Throws InvalidArgument for (0, 0).
  static MetabolizerClass normalized(std::int64_t p, std::int64_t q);

  std::string to_string() const;
  friend auto operator<=>(const MetabolizerClass&, const MetabolizerClass&) = default;
};

/// Self-linking a p^2 + (b + c) p q + d q^2 of a class under ((a, b), (c, d)).
BigInt self_linking(const SeifertMatrix& v, const MetabolizerClass& cls);

/// All classes with vanishing self-linking, sorted descending; 0 or 2 entries.
/// Throws NotGenusOne unless v is 2x2.
std::vector<MetabolizerClass> metabolizers(const SeifertMatrix& v);

struct SliceCheck {
  bool algebraically_slice = false;
  std::vector<MetabolizerClass> metabolizers;
  /// Linear factor with Delta = +-f(t) f(1/t), recorded when slice.
  std::optional<LaurentPoly> f;
  /// Delta = 1: the Alexander module is trivial and has no Lagrangians.
  bool trivial_alexander_module = false;
};

SliceCheck is_algebraically_slice(const SeifertMatrix& v);

struct DerivativeInput {
  MetabolizerClass cls;
  std::optional<BraidWord> braid;
  /// Genus of the derivative in S^3 when the caller knows it exactly.
  std::optional<int> genus_s3_exact;
};

struct DerivativeReport {
  MetabolizerClass cls;
  std::optional<BraidWord> braid;
  int genus_s3_lower = 0;
  std::optional<int> genus_s3_exact;
  std::optional<Rho0> rho;
  int dg_contribution = 0;
  /// False when nothing was supplied for this class.
  bool complete = false;
};

struct DgReport {
  /// max over derivatives of max(genus lower bound, ceil(|rho| / 2)).
  int dg_lower = 0;
  /// The part of dg_lower that comes from rho alone.
  int dg_lower_rho = 0;
  std::vector<DerivativeReport> per_derivative;
  std::vector<std::string> certificate_notes;
};

/// Smallest integer k with 2k >= |rho|, certified against the error bound.
int rho_genus_bound(const Rho0& rho);

/// Throws NotGenusOne, NotAlgebraicallySlice, MismatchedClass (a class that is
/// not a metabolizer), InconsistentGenus (contribution above a supplied exact
/// genus), NotAKnot for a derivative braid with several components.
DgReport dg_lower_bound(const SeifertMatrix& v, const std::vector<DerivativeInput>& derivatives);

struct FamilyKnot {
  std::int64_t m = 0;
  std::string name;
  SeifertMatrix seifert;
  std::vector<MetabolizerClass> metabolizers;
  LaurentPoly alexander;
  bool algebraically_slice = false;
};

/// Genus-one knot with Seifert form ((m, -2), (-1, 0)); m = 3n gives K_n.
FamilyKnot family_kn(std::int64_t m);

struct SurfaceCertificate {
  int genus = 0;
  bool certified_unique = false;
  std::uint64_t top_rank = 0;
};

/// Genus from the rank table; uniqueness certified for genus one with total
/// rank below 4 in Alexander grading 1. Throws EmptyRanks.
SurfaceCertificate unique_surface_certificate(const BigradedRanks& ranks);

}  // namespace knotforge

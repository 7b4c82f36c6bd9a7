#include "knotforge/slice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "knotforge/error.hpp"

namespace knotforge {

MetabolizerClass MetabolizerClass::normalized(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) raise(ErrorCode::InvalidArgument, "class (0, 0) is not primitive");
  const std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  return MetabolizerClass{p, q};
}

std::string MetabolizerClass::to_string() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

namespace {

struct Form {
  BigInt a, b, c, d;
};

Form form_of(const SeifertMatrix& v) {
  if (v.size() != 2) raise(ErrorCode::NotGenusOne, "expected a 2x2 Seifert matrix, got size " + std::to_string(v.size()));
  const auto& m = v.matrix();
  return Form{m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

std::int64_t to_i64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    raise(ErrorCode::Overflow, "metabolizer coordinate exceeds 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

MetabolizerClass make_class(const BigInt& p, const BigInt& q) {
  const BigInt g = boost::multiprecision::gcd(p, q);
  return MetabolizerClass::normalized(to_i64(p / g), to_i64(q / g));
}

}  // namespace

BigInt self_linking(const SeifertMatrix& v, const MetabolizerClass& cls) {
  const Form f = form_of(v);
  const BigInt p = cls.p;
  const BigInt q = cls.q;
  return f.a * p * p + (f.b + f.c) * p * q + f.d * q * q;
}

std::vector<MetabolizerClass> metabolizers(const SeifertMatrix& v) {
  const Form f = form_of(v);
  const BigInt bc = f.b + f.c;
  std::vector<MetabolizerClass> out;
  if (f.a == 0 && f.d == 0) {
    // Q = (b + c) p q.
    out = {make_class(1, 0), make_class(0, 1)};
  } else if (f.a == 0) {
    // Q = q ((b + c) p + d q).
    out = {make_class(1, 0), make_class(f.d, -bc)};
  } else if (f.d == 0) {
    // Q = p (a p + (b + c) q).
    out = {make_class(0, 1), make_class(bc, -f.a)};
  } else {
    const BigInt disc = bc * bc - 4 * f.a * f.d;
    if (disc < 0) return out;
    const BigInt s = boost::multiprecision::sqrt(disc);
    if (s * s != disc) return out;
    out = {make_class(-bc + s, 2 * f.a), make_class(-bc - s, 2 * f.a)};
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() != 2) raise(ErrorCode::Internal, "metabolizer count is not 0 or 2");
  for (const auto& cls : out) {
    if (self_linking(v, cls) != 0) raise(ErrorCode::Internal, "class " + cls.to_string() + " has nonzero self-linking");
  }
  return out;
}

SliceCheck is_algebraically_slice(const SeifertMatrix& v) {
  SliceCheck out;
  out.metabolizers = metabolizers(v);
  out.algebraically_slice = !out.metabolizers.empty();
  if (!out.algebraically_slice) return out;

  const LaurentPoly delta = alexander_polynomial(v);
  out.trivial_alexander_module = delta == LaurentPoly(1);
  // Delta = c1 t + c0 + c1 t^-1 = e (alpha t + beta)(alpha t^-1 + beta):
  // alpha beta = e c1, alpha^2 + beta^2 = e c0.
  const BigInt c1 = delta.coefficient(1);
  const BigInt c0 = delta.coefficient(0);
  for (const int e : {1, -1}) {
    const BigInt sum_sq = e * c0;
    const BigInt prod = e * c1;
    if (sum_sq <= 0) continue;
    for (BigInt alpha = 1; alpha * alpha <= sum_sq; ++alpha) {
      if (prod % alpha != 0) continue;
      const BigInt beta = prod / alpha;
      if (alpha * alpha + beta * beta != sum_sq || abs(beta) > alpha) continue;
      const LaurentPoly f =
          beta == 0 ? LaurentPoly(1)
                    : LaurentPoly::from_terms({{1, static_cast<LaurentPoly::Coeff>(alpha)}, {0, static_cast<LaurentPoly::Coeff>(beta)}});
      LaurentPoly check = f * f.inverted();
      if (e < 0) check = -check;
      if (beta == 0) check = LaurentPoly(e);
      if (check != delta) continue;
      out.f = f;
      return out;
    }
  }
  raise(ErrorCode::Internal, "Alexander polynomial of an algebraically slice form does not factor");
}

int rho_genus_bound(const Rho0& rho) {
  if (rho.exact) {
    // ceil(|num| / (2 den)).
    const auto num = std::abs(rho.exact->numerator());
    const auto den = rho.exact->denominator();
    return static_cast<int>((num + 2 * den - 1) / (2 * den));
  }
  const double lower = std::max(0.0, std::abs(rho.value) - rho.error_bound);
  return static_cast<int>(std::ceil(lower / 2.0 - 1e-12));
}

DgReport dg_lower_bound(const SeifertMatrix& v, const std::vector<DerivativeInput>& derivatives) {
  const auto classes = metabolizers(v);
  if (classes.empty()) raise(ErrorCode::NotAlgebraicallySlice, "Seifert form has no metabolizer");
  for (const auto& d : derivatives) {
    if (std::find(classes.begin(), classes.end(), d.cls) == classes.end()) {
      raise(ErrorCode::MismatchedClass, "class " + d.cls.to_string() + " is not a metabolizer");
    }
  }

  DgReport report;
  bool any_genus_part = false;
  for (const auto& cls : classes) {
    bool supplied = false;
    for (const auto& d : derivatives) {
      if (d.cls != cls) continue;
      supplied = true;
      DerivativeReport r;
      r.cls = cls;
      r.braid = d.braid;
      r.genus_s3_exact = d.genus_s3_exact;
      if (d.braid) {
        const BraidGenus g = seifert_genus(*d.braid);
        r.genus_s3_lower = g.exact ? g.genus : burau_alexander(*d.braid).span() / 2;
        r.rho = rho0(seifert_matrix_from_braid(*d.braid));
        r.complete = true;
      }
      if (d.genus_s3_exact) {
        if (*d.genus_s3_exact < 0) raise(ErrorCode::InvalidArgument, "negative genus supplied");
        r.genus_s3_lower = std::max(r.genus_s3_lower, *d.genus_s3_exact);
        r.complete = true;
      }
      const int from_rho = r.rho ? rho_genus_bound(*r.rho) : 0;
      r.dg_contribution = std::max(r.genus_s3_lower, from_rho);
      if (d.genus_s3_exact && r.dg_contribution > *d.genus_s3_exact) {
        raise(ErrorCode::InconsistentGenus, "derivative " + cls.to_string() + " has bound " +
                                                std::to_string(r.dg_contribution) + " above the supplied genus " +
                                                std::to_string(*d.genus_s3_exact));
      }
      report.dg_lower = std::max(report.dg_lower, r.dg_contribution);
      report.dg_lower_rho = std::max(report.dg_lower_rho, from_rho);
      any_genus_part = any_genus_part || r.genus_s3_lower > from_rho;
      report.per_derivative.push_back(std::move(r));
    }
    if (!supplied) {
      DerivativeReport r;
      r.cls = cls;
      report.per_derivative.push_back(r);
      report.certificate_notes.push_back("class " + cls.to_string() + ": no derivative supplied, contributes 0 (incomplete)");
    }
  }
  report.certificate_notes.push_back(
      "the rho part is a lower bound for every genus one Seifert surface of the knot");
  if (any_genus_part) {
    report.certificate_notes.push_back(
        "genus bounds of derivatives bound dg only if the genus one Seifert surface is unique up to isotopy; "
        "check unique_surface_certificate");
  }
  bool all_rho_zero = true;
  for (const auto& r : report.per_derivative) all_rho_zero = all_rho_zero && (!r.rho || rho_genus_bound(*r.rho) == 0);
  if (report.dg_lower == 0 && all_rho_zero) {
    report.certificate_notes.push_back(
        "bound is 0: derivative signatures vanish, but dg can still be positive through the genus of a "
        "derivative in the complement of the knot (9_46 has dg = 1), which is not computed");
  }
  return report;
}

FamilyKnot family_kn(std::int64_t m) {
  FamilyKnot k;
  k.m = m;
  if (m % 3 == 0) {
    k.name = "K_" + std::to_string(m / 3);
  } else {
    k.name = "K_{" + std::to_string(m) + "/3}";
  }
  if (m == 0) k.name += " (9_46)";
  if (m == 1) k.name += " (11n139)";
  k.seifert = SeifertMatrix(IntMatrix{{m, -2}, {-1, 0}});
  k.metabolizers = metabolizers(k.seifert);
  const std::int64_t g = std::gcd<std::int64_t, std::int64_t>(3, m);
  const std::vector<MetabolizerClass> expected{MetabolizerClass::normalized(3 / g, m / g), MetabolizerClass{0, 1}};
  if (k.metabolizers != expected) raise(ErrorCode::Internal, "family metabolizers disagree with the closed form");
  k.alexander = alexander_polynomial(k.seifert);
  k.algebraically_slice = true;
  return k;
}

SurfaceCertificate unique_surface_certificate(const BigradedRanks& ranks) {
  if (ranks.empty()) raise(ErrorCode::EmptyRanks, "rank table is empty");
  SurfaceCertificate c;
  c.genus = ranks.max_alexander();
  c.top_rank = ranks.total_at_alexander(1);
  c.certified_unique = c.genus == 1 && c.top_rank < 4;
  return c;
}

}  // namespace knotforge

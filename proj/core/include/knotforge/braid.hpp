#pragma once

#include <string>
#include <vector>

#include "knotforge/laurent.hpp"
#include "knotforge/seifert.hpp"

namespace knotforge {

/// Braid on `strands` strands. Letter +i is a positive crossing between
/// strands i and i+1, -i the negative one.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws InvalidArgument if strands < 1 or some |letter| is outside [1, strands-1].
  BraidWord(int strands, std::vector<int> word);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& word() const noexcept { return word_; }
  std::size_t crossings() const noexcept { return word_.size(); }

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> word_;
};

/// Strand limit keeping the Burau determinant within laurent_det's bound.
inline constexpr int kMaxStrands = static_cast<int>(kMaxLaurentDetSize) + 1;

/// Number of cycles of the permutation induced by the word.
int closure_components(const BraidWord& b);

/// Every generator used with a single sign, and every generator present.
bool is_homogeneous(const BraidWord& b);

struct BraidGenus {
  int genus;
  /// True when the braid is homogeneous, so the Seifert's-algorithm surface is minimal.
  bool exact;
};

/// Genus of the Seifert's-algorithm surface, (crossings - strands + 1) / 2.
BraidGenus seifert_genus(const BraidWord& b);

/// Alexander polynomial of the closure via the reduced Burau representation.
LaurentPoly burau_alexander(const BraidWord& b);

/// Seifert matrix of the Seifert's-algorithm surface. Basis: one band cycle
/// per pair of consecutive occurrences of a generator, ordered by
/// (generator, position of the first occurrence).
SeifertMatrix seifert_matrix_from_braid(const BraidWord& b);

}  // namespace knotforge

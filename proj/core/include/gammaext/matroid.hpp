#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gammaext/element_set.hpp"
#include "gammaext/gf2.hpp"

namespace gammaext {

/// A subset of the ground set as a bit mask: bit i corresponds to
/// labels()[i] of the matroid the mask belongs to. Mask order is an internal
/// detail — anything user-visible goes through ElementSet, which sorts.
using Mask = std::uint64_t;

/// Exhaustive searches (circuit enumeration and friends) refuse ground sets
/// larger than this unless the caller raises the bound explicitly.
inline constexpr std::size_t kDefaultEnumerationBound = 16;

/// A binary matroid: distinct ground-set labels over a GF(2) representation
/// kept in standard form [I_r | D]. Immutable after construction; all
/// operations are pure, so instances can be shared freely across threads.
///
/// `create` enforces the standing assumptions — loopless (no zero column)
/// and coloopless (no element in every basis). `create_raw` skips the coloop
/// check; deletions and extensions sometimes produce coloops on purpose, and
/// those intermediates are still useful as rank oracles. Zero columns are
/// rejected either way, since a loop has no standard-form representation.
class BinaryMatroid {
 public:
  static BinaryMatroid create(const Gf2Matrix& matrix, std::vector<std::string> labels);
  static BinaryMatroid create_raw(const Gf2Matrix& matrix, std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t rank() const noexcept { return rep_.n_rows(); }
  bool validated() const noexcept { return validated_; }

  /// Labels in representation order: the first rank() of them index the
  /// identity block.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Gf2Matrix& representation() const noexcept { return rep_; }

  ElementSet ground_set() const;
  bool contains(std::string_view label) const;
  /// Position of `label` in labels(); unknown label → LabelError.
  std::size_t index_of(std::string_view label) const;
  /// Column i of the representation as a bit pattern (bit j = row j).
  std::uint64_t column_bits(std::size_t i) const { return cols_[i]; }

  std::size_t rank_of(const ElementSet& s) const;
  bool is_independent(const ElementSet& s) const;

  Mask mask_of(const ElementSet& s) const;
  Mask full_mask() const noexcept;
  ElementSet set_of(Mask mask) const;
  std::size_t rank_of_mask(Mask mask) const;

 private:
  BinaryMatroid() = default;
  static BinaryMatroid build(const Gf2Matrix& matrix, std::vector<std::string> labels,
                             bool validate);

  std::vector<std::string> labels_;            // representation column order
  Gf2Matrix rep_;                              // [I_r | D]
  std::vector<std::uint64_t> cols_;            // column bit patterns of rep_
  std::unordered_map<std::string, std::size_t> index_;
  bool validated_ = false;
};

enum class DeleteMode { strict, raw };

/// All circuits (minimal dependent sets), sorted. Ground sets larger than
/// `bound` → SizeError.
std::vector<ElementSet> circuits(const BinaryMatroid& m,
                                 std::size_t bound = kDefaultEnumerationBound);
std::vector<Mask> circuit_masks(const BinaryMatroid& m,
                                std::size_t bound = kDefaultEnumerationBound);

/// Circuits of the dual, same labels. For a raw matroid each coloop shows up
/// as a singleton cocircuit.
std::vector<ElementSet> cocircuits(const BinaryMatroid& m,
                                   std::size_t bound = kDefaultEnumerationBound);
std::vector<Mask> cocircuit_masks(const BinaryMatroid& m,
                                  std::size_t bound = kDefaultEnumerationBound);

/// Minimum circuit / cocircuit size; SIZE_MAX when the family is empty
/// (possible only for raw matroids).
std::size_t girth(const BinaryMatroid& m, std::size_t bound = kDefaultEnumerationBound);
std::size_t cogirth(const BinaryMatroid& m, std::size_t bound = kDefaultEnumerationBound);

/// Dual matroid on the same labels ([I_r|D] -> [Dᵀ|I_{n-r}]). A validated
/// matroid has a validated dual; the dual of a raw matroid with a coloop
/// would need a loop, which is unrepresentable → LoopError.
BinaryMatroid dual(const BinaryMatroid& m);

/// Matroid on S∖y (columns of y removed, rows re-standardized). y must be a
/// proper subset of the ground set: unknown label → LabelError, y = S →
/// EmptyError. Strict mode validates the result; raw mode keeps coloops,
/// which rank-drop experiments rely on.
BinaryMatroid delete_elements(const BinaryMatroid& m, const ElementSet& y,
                              DeleteMode mode = DeleteMode::strict);

/// Connected components: the finest partition in which any two elements
/// sharing a circuit are together. Elements on no circuit (coloops of raw
/// matroids) become singletons. Blocks are sorted.
std::vector<ElementSet> components(const BinaryMatroid& m,
                                   std::size_t bound = kDefaultEnumerationBound);

/// The same partition as masks, unsorted and unbounded — cheap (no circuit
/// enumeration: components are read off the block structure of [I_r | D]),
/// so sweeps can test connectivity without paying for a full search.
std::vector<Mask> component_masks(const BinaryMatroid& m);
std::size_t component_count(const BinaryMatroid& m);

/// Block-diagonal sum. Colliding labels are disambiguated by prefixing every
/// label: "a:" on the left operand, "b:" on the right.
BinaryMatroid direct_sum(const BinaryMatroid& m1, const BinaryMatroid& m2);

/// Same ground set and same row space after aligning columns by label. This
/// determines the matroid: two standard representations on the same labeled
/// ground set give equal matroids iff their row spaces match.
bool equals(const BinaryMatroid& m1, const BinaryMatroid& m2);

}  // namespace gammaext

#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gammaext/errors.hpp"

namespace gammaext {

/// Incremental basis of GF(2) vectors packed into single 64-bit words, one
/// slot per leading bit. insert returns the slot it filled so a search can
/// backtrack with remove — the pair is O(1) beyond the reduction itself,
/// which keeps exhaustive rank-driven searches allocation-free.
class Gf2Basis {
 public:
  /// Reduces v against the basis; the result is 0 iff v is in the span.
  std::uint64_t reduce(std::uint64_t v) const noexcept {
    while (v) {
      const int lead = 63 - std::countl_zero(v);
      if (slot_[lead] == 0) break;
      v ^= slot_[lead];
    }
    return v;
  }

  /// Inserts v if independent of the basis; returns the slot filled, or -1
  /// when v is already in the span (basis unchanged).
  int insert(std::uint64_t v) noexcept {
    v = reduce(v);
    if (v == 0) return -1;
    const int lead = 63 - std::countl_zero(v);
    slot_[lead] = v;
    ++size_;
    return lead;
  }

  /// Undoes an insert that returned `slot`; a no-op for -1.
  void remove(int slot) noexcept {
    if (slot < 0) return;
    slot_[slot] = 0;
    --size_;
  }

  std::size_t size() const noexcept { return size_; }

 private:
  std::array<std::uint64_t, 64> slot_{};
  std::size_t size_ = 0;
};

/// Dense bit matrix over GF(2). Rows are packed into 64-bit words; all
/// arithmetic is XOR. 0-row and 0-column shapes are legal. Values are cheap
/// to copy and are treated as immutable by every algorithm in the library.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t n_rows, std::size_t n_cols);

  /// Builds from explicit 0/1 entries; every inner list is one row.
  static Gf2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);
  static Gf2Matrix identity(std::size_t n);

  std::size_t n_rows() const noexcept { return n_rows_; }
  std::size_t n_cols() const noexcept { return n_cols_; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  bool get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, bool value);

  /// row `dst` ^= row `src`
  void xor_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t row) const;

  std::span<const std::uint64_t> row_words(std::size_t row) const;

  /// Column as a bit pattern, bit i = entry in row i. Requires n_rows <= 64.
  std::uint64_t column_bits(std::size_t col) const;
  bool column_is_zero(std::size_t col) const;

  bool operator==(const Gf2Matrix& other) const = default;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> words_;  // row-major
};

struct RrefResult {
  Gf2Matrix matrix;                  // reduced row echelon form, zero rows at the bottom
  std::vector<std::size_t> pivots;   // pivot columns in row order
};

/// Reduced row echelon form over GF(2). Elimination always picks the topmost
/// unused row with a 1 in the current pivot column, so the output is the
/// canonical RREF of the row space (hence idempotent).
RrefResult rref(const Gf2Matrix& m);

/// Number of pivots of rref(m); equals column-space rank.
std::size_t rank(const Gf2Matrix& m);

Gf2Matrix transpose(const Gf2Matrix& m);

/// True iff the two row spaces coincide. Throws DimensionError when the
/// column counts differ.
bool row_space_equal(const Gf2Matrix& a, const Gf2Matrix& b);

struct StandardFormResult {
  Gf2Matrix matrix;                      // [I_r | D], full row rank
  std::vector<std::string> labels;       // column labels after the permutation
  std::vector<std::size_t> permutation;  // permutation[new_col] = old_col
};

/// Permutes columns so that a basis comes first, yielding [I_r | D] with the
/// same row space. Dependent rows are dropped silently. Throws LoopError on a
/// zero column (labelled with the offending column's label) and
/// DimensionError when |labels| != n_cols.
StandardFormResult standard_form(const Gf2Matrix& m, std::vector<std::string> labels);

}  // namespace gammaext

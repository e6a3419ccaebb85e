#include "gammaext/gf2.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>

namespace gammaext {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n_cols) { return (n_cols + kWordBits - 1) / kWordBits; }
}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t n_rows, std::size_t n_cols)
    : n_rows_(n_rows),
      n_cols_(n_cols),
      words_per_row_(words_for(n_cols)),
      words_(n_rows * words_per_row_, 0) {}

Gf2Matrix Gf2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> copy;
  copy.reserve(rows.size());
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(copy);
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = n_rows == 0 ? 0 : rows.front().size();
  Gf2Matrix m(n_rows, n_cols);
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (rows[i].size() != n_cols) throw DimensionError("ragged row list");
    for (std::size_t j = 0; j < n_cols; ++j) m.set(i, j, rows[i][j] != 0);
  }
  return m;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

bool Gf2Matrix::get(std::size_t row, std::size_t col) const {
  assert(row < n_rows_ && col < n_cols_);
  return (words_[row * words_per_row_ + col / kWordBits] >> (col % kWordBits)) & 1u;
}

void Gf2Matrix::set(std::size_t row, std::size_t col, bool value) {
  assert(row < n_rows_ && col < n_cols_);
  const std::uint64_t bit = std::uint64_t{1} << (col % kWordBits);
  std::uint64_t& word = words_[row * words_per_row_ + col / kWordBits];
  if (value) {
    word |= bit;
  } else {
    word &= ~bit;
  }
}

void Gf2Matrix::xor_row(std::size_t dst, std::size_t src) {
  assert(dst < n_rows_ && src < n_rows_);
  const std::size_t d = dst * words_per_row_;
  const std::size_t s = src * words_per_row_;
  for (std::size_t w = 0; w < words_per_row_; ++w) words_[d + w] ^= words_[s + w];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  const std::size_t pa = a * words_per_row_;
  const std::size_t pb = b * words_per_row_;
  for (std::size_t w = 0; w < words_per_row_; ++w) std::swap(words_[pa + w], words_[pb + w]);
}

bool Gf2Matrix::row_is_zero(std::size_t row) const {
  const std::size_t p = row * words_per_row_;
  for (std::size_t w = 0; w < words_per_row_; ++w) {
    if (words_[p + w] != 0) return false;
  }
  return true;
}

std::span<const std::uint64_t> Gf2Matrix::row_words(std::size_t row) const {
  return {words_.data() + row * words_per_row_, words_per_row_};
}

std::uint64_t Gf2Matrix::column_bits(std::size_t col) const {
  if (n_rows_ > kWordBits) throw DimensionError("column_bits requires n_rows <= 64");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n_rows_; ++i) {
    if (get(i, col)) bits |= std::uint64_t{1} << i;
  }
  return bits;
}

bool Gf2Matrix::column_is_zero(std::size_t col) const {
  for (std::size_t i = 0; i < n_rows_; ++i) {
    if (get(i, col)) return false;
  }
  return true;
}

RrefResult rref(const Gf2Matrix& m) {
  RrefResult out{m, {}};
  Gf2Matrix& a = out.matrix;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.n_cols() && pivot_row < a.n_rows(); ++col) {
    std::size_t found = a.n_rows();
    for (std::size_t r = pivot_row; r < a.n_rows(); ++r) {
      if (a.get(r, col)) {
        found = r;
        break;
      }
    }
    if (found == a.n_rows()) continue;
    a.swap_rows(pivot_row, found);
    for (std::size_t r = 0; r < a.n_rows(); ++r) {
      if (r != pivot_row && a.get(r, col)) a.xor_row(r, pivot_row);
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const Gf2Matrix& m) {
  // Forward elimination only; avoids the full RREF copy for the common
  // narrow case (one word per row) with a stack-resident working set.
  const std::size_t wpr = m.words_per_row();
  if (wpr <= 1) {
    std::array<std::uint64_t, 64> basis{};  // basis[b] has leading bit b
    std::size_t rk = 0;
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
      std::uint64_t v = m.row_words(r).empty() ? 0 : m.row_words(r)[0];
      while (v != 0) {
        const int lead = 63 - std::countl_zero(v);
        if (basis[static_cast<std::size_t>(lead)] == 0) {
          basis[static_cast<std::size_t>(lead)] = v;
          ++rk;
          break;
        }
        v ^= basis[static_cast<std::size_t>(lead)];
      }
    }
    return rk;
  }
  return rref(m).pivots.size();
}

Gf2Matrix transpose(const Gf2Matrix& m) {
  Gf2Matrix t(m.n_cols(), m.n_rows());
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    for (std::size_t j = 0; j < m.n_cols(); ++j) {
      if (m.get(i, j)) t.set(j, i, true);
    }
  }
  return t;
}

bool row_space_equal(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.n_cols() != b.n_cols()) {
    throw DimensionError("row_space_equal: column counts differ (" + std::to_string(a.n_cols()) +
                         " vs " + std::to_string(b.n_cols()) + ")");
  }
  const RrefResult ra = rref(a);
  const RrefResult rb = rref(b);
  if (ra.pivots != rb.pivots) return false;
  const std::size_t rk = ra.pivots.size();
  for (std::size_t r = 0; r < rk; ++r) {
    const auto wa = ra.matrix.row_words(r);
    const auto wb = rb.matrix.row_words(r);
    if (!std::equal(wa.begin(), wa.end(), wb.begin(), wb.end())) return false;
  }
  return true;
}

StandardFormResult standard_form(const Gf2Matrix& m, std::vector<std::string> labels) {
  if (labels.size() != m.n_cols()) {
    throw DimensionError("standard_form: " + std::to_string(labels.size()) + " labels for " +
                         std::to_string(m.n_cols()) + " columns");
  }
  for (std::size_t c = 0; c < m.n_cols(); ++c) {
    if (m.column_is_zero(c)) throw LoopError(labels[c]);
  }
  const RrefResult rr = rref(m);
  const std::size_t rk = rr.pivots.size();

  std::vector<std::size_t> perm;
  perm.reserve(m.n_cols());
  std::vector<bool> is_pivot(m.n_cols(), false);
  for (std::size_t p : rr.pivots) {
    perm.push_back(p);
    is_pivot[p] = true;
  }
  for (std::size_t c = 0; c < m.n_cols(); ++c) {
    if (!is_pivot[c]) perm.push_back(c);
  }

  StandardFormResult out;
  out.matrix = Gf2Matrix(rk, m.n_cols());
  out.labels.reserve(m.n_cols());
  for (std::size_t nc = 0; nc < m.n_cols(); ++nc) {
    out.labels.push_back(labels[perm[nc]]);
    for (std::size_t r = 0; r < rk; ++r) {
      if (rr.matrix.get(r, perm[nc])) out.matrix.set(r, nc, true);
    }
  }
  out.permutation = std::move(perm);
  return out;
}

}  // namespace gammaext

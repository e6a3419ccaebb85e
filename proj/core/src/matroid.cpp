#include "gammaext/matroid.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_set>
#include <utility>

#include "gammaext/errors.hpp"

namespace gammaext {

namespace {

/// Circuits of the column family `cols` as masks, each found exactly once:
/// the DFS grows an independent prefix in ascending index order, and a set C
/// is a circuit iff its first |C|-1 indices are independent and the last
/// column equals their XOR. A dependent extension that is not a circuit
/// closes the whole subtree — any superset would contain a smaller circuit.
void circuit_dfs(const std::vector<std::uint64_t>& cols, std::size_t first, Gf2Basis& basis,
                 std::uint64_t xor_all, Mask chosen, std::vector<Mask>& out) {
  for (std::size_t j = first; j < cols.size(); ++j) {
    const std::uint64_t c = cols[j];
    const int slot = basis.insert(c);
    if (slot < 0) {
      if (c == xor_all) out.push_back(chosen | (Mask{1} << j));
    } else {
      circuit_dfs(cols, j + 1, basis, xor_all ^ c, chosen | (Mask{1} << j), out);
      basis.remove(slot);
    }
  }
}

std::vector<Mask> circuits_of_columns(const std::vector<std::uint64_t>& cols, std::size_t bound,
                                      const char* what) {
  if (cols.size() > bound || cols.size() > 64)
    throw SizeError(std::string(what) + ": ground set of " + std::to_string(cols.size()) +
                    " exceeds the enumeration bound " +
                    std::to_string(std::min<std::size_t>(bound, 64)));
  std::vector<Mask> out;
  Gf2Basis basis;
  circuit_dfs(cols, 0, basis, 0, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Columns of [Dᵀ | I_{n-r}], the dual of [I_r | D], in the same label order.
std::vector<std::uint64_t> dual_columns(const Gf2Matrix& rep) {
  const std::size_t r = rep.n_rows();
  const std::size_t n = rep.n_cols();
  std::vector<std::uint64_t> cols(n, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = r; j < n; ++j)
      if (rep.get(i, j)) cols[i] |= std::uint64_t{1} << (j - r);
  for (std::size_t j = r; j < n; ++j) cols[j] = std::uint64_t{1} << (j - r);
  return cols;
}

std::vector<ElementSet> masks_to_sets(const BinaryMatroid& m, const std::vector<Mask>& masks) {
  std::vector<ElementSet> out;
  out.reserve(masks.size());
  for (Mask mask : masks) out.push_back(m.set_of(mask));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BinaryMatroid BinaryMatroid::create(const Gf2Matrix& matrix, std::vector<std::string> labels) {
  return build(matrix, std::move(labels), true);
}

BinaryMatroid BinaryMatroid::create_raw(const Gf2Matrix& matrix, std::vector<std::string> labels) {
  return build(matrix, std::move(labels), false);
}

BinaryMatroid BinaryMatroid::build(const Gf2Matrix& matrix, std::vector<std::string> labels,
                                   bool validate) {
  {
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) throw LabelError("duplicate label '" + l + "'");
  }
  StandardFormResult sf = standard_form(matrix, std::move(labels));
  const std::size_t r = sf.matrix.n_rows();
  const std::size_t n = sf.matrix.n_cols();
  if (r > 64) throw SizeError("rank " + std::to_string(r) + " exceeds the supported 64");
  if (validate) {
    // In [I_r | D] the only coloop candidates are basis elements, and basis
    // element i is a coloop exactly when row i of D is zero.
    for (std::size_t i = 0; i < r; ++i) {
      bool alone = true;
      for (std::size_t j = r; j < n && alone; ++j) alone = !sf.matrix.get(i, j);
      if (alone) throw ColoopError(sf.labels[i]);
    }
  }

  BinaryMatroid m;
  m.labels_ = std::move(sf.labels);
  m.rep_ = std::move(sf.matrix);
  m.cols_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) m.cols_.push_back(m.rep_.column_bits(j));
  for (std::size_t j = 0; j < n; ++j) m.index_.emplace(m.labels_[j], j);
  m.validated_ = validate;
  return m;
}

ElementSet BinaryMatroid::ground_set() const { return ElementSet(labels_); }

bool BinaryMatroid::contains(std::string_view label) const {
  return index_.find(std::string(label)) != index_.end();
}

std::size_t BinaryMatroid::index_of(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) throw LabelError("unknown element '" + std::string(label) + "'");
  return it->second;
}

std::size_t BinaryMatroid::rank_of(const ElementSet& s) const {
  Gf2Basis basis;
  for (const auto& label : s) basis.insert(cols_[index_of(label)]);
  return basis.size();
}

bool BinaryMatroid::is_independent(const ElementSet& s) const { return rank_of(s) == s.size(); }

Mask BinaryMatroid::mask_of(const ElementSet& s) const {
  if (size() > 64) throw SizeError("mask API needs a ground set of at most 64 elements");
  Mask mask = 0;
  for (const auto& label : s) mask |= Mask{1} << index_of(label);
  return mask;
}

Mask BinaryMatroid::full_mask() const noexcept {
  const std::size_t n = size();
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

ElementSet BinaryMatroid::set_of(Mask mask) const {
  std::vector<std::string> members;
  members.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask) {
    members.push_back(labels_[static_cast<std::size_t>(std::countr_zero(mask))]);
    mask &= mask - 1;
  }
  return ElementSet(std::move(members));
}

std::size_t BinaryMatroid::rank_of_mask(Mask mask) const {
  Gf2Basis basis;
  while (mask) {
    basis.insert(cols_[static_cast<std::size_t>(std::countr_zero(mask))]);
    mask &= mask - 1;
  }
  return basis.size();
}

std::vector<Mask> circuit_masks(const BinaryMatroid& m, std::size_t bound) {
  std::vector<std::uint64_t> cols(m.labels().size());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = m.column_bits(j);
  return circuits_of_columns(cols, bound, "circuits");
}

std::vector<ElementSet> circuits(const BinaryMatroid& m, std::size_t bound) {
  return masks_to_sets(m, circuit_masks(m, bound));
}

std::vector<Mask> cocircuit_masks(const BinaryMatroid& m, std::size_t bound) {
  return circuits_of_columns(dual_columns(m.representation()), bound, "cocircuits");
}

std::vector<ElementSet> cocircuits(const BinaryMatroid& m, std::size_t bound) {
  return masks_to_sets(m, cocircuit_masks(m, bound));
}

namespace {
std::size_t min_popcount(const std::vector<Mask>& masks) {
  std::size_t best = SIZE_MAX;
  for (Mask mask : masks) best = std::min(best, static_cast<std::size_t>(std::popcount(mask)));
  return best;
}
}  // namespace

std::size_t girth(const BinaryMatroid& m, std::size_t bound) {
  return min_popcount(circuit_masks(m, bound));
}

std::size_t cogirth(const BinaryMatroid& m, std::size_t bound) {
  return min_popcount(cocircuit_masks(m, bound));
}

BinaryMatroid dual(const BinaryMatroid& m) {
  const std::size_t r = m.rank();
  const std::size_t n = m.size();
  Gf2Matrix d(n - r, n);
  for (std::size_t i = 0; i + r < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool bit = j < r ? m.representation().get(j, i + r) : (j - r == i);
      if (bit) d.set(i, j, true);
    }
  return m.validated() ? BinaryMatroid::create(d, m.labels())
                       : BinaryMatroid::create_raw(d, m.labels());
}

BinaryMatroid delete_elements(const BinaryMatroid& m, const ElementSet& y, DeleteMode mode) {
  for (const auto& label : y) (void)m.index_of(label);  // LabelError on unknown
  if (y.size() == m.size()) throw EmptyError("deletion would empty the ground set");
  std::vector<std::string> kept;
  kept.reserve(m.size() - y.size());
  for (const auto& label : m.labels())
    if (!y.contains(label)) kept.push_back(label);
  Gf2Matrix sub(m.rank(), kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j) {
    const std::uint64_t bits = m.column_bits(m.index_of(kept[j]));
    for (std::size_t i = 0; i < m.rank(); ++i)
      if (bits >> i & 1) sub.set(i, j, true);
  }
  return mode == DeleteMode::strict ? BinaryMatroid::create(sub, std::move(kept))
                                    : BinaryMatroid::create_raw(sub, std::move(kept));
}

std::vector<Mask> component_masks(const BinaryMatroid& m) {
  // Two elements share a circuit iff they end up in the same block of the
  // block-diagonal decomposition of [I_r | D], and that decomposition is
  // visible in any standard form: union basis element i with every non-basis
  // element whose column has a 1 in row i. Coloops (zero D-row, raw matroids
  // only) stay singletons, matching "element on no circuit".
  const std::size_t n = m.size();
  const std::size_t r = m.rank();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  const auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t j = r; j < n; ++j) {
    std::uint64_t bits = m.column_bits(j);
    while (bits) {
      const auto row = static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      parent[find(row)] = find(j);
    }
  }
  std::vector<Mask> block_of(n, 0);
  for (std::size_t i = 0; i < n; ++i) block_of[find(i)] |= Mask{1} << i;
  std::vector<Mask> out;
  for (std::size_t i = 0; i < n; ++i)
    if (block_of[i] != 0) out.push_back(block_of[i]);
  return out;
}

std::size_t component_count(const BinaryMatroid& m) { return component_masks(m).size(); }

std::vector<ElementSet> components(const BinaryMatroid& m, std::size_t bound) {
  if (m.size() > bound || m.size() > 64)
    throw SizeError("components: ground set of " + std::to_string(m.size()) +
                    " exceeds the enumeration bound " +
                    std::to_string(std::min<std::size_t>(bound, 64)));
  std::vector<ElementSet> out;
  for (Mask mask : component_masks(m)) out.push_back(m.set_of(mask));
  std::sort(out.begin(), out.end());
  return out;
}

BinaryMatroid direct_sum(const BinaryMatroid& m1, const BinaryMatroid& m2) {
  std::vector<std::string> labels1 = m1.labels();
  std::vector<std::string> labels2 = m2.labels();
  const bool collide = std::any_of(labels2.begin(), labels2.end(),
                                   [&](const std::string& l) { return m1.contains(l); });
  if (collide) {
    for (auto& l : labels1) l = "a:" + l;
    for (auto& l : labels2) l = "b:" + l;
  }
  const std::size_t r1 = m1.rank();
  const std::size_t n1 = m1.size();
  Gf2Matrix block(r1 + m2.rank(), n1 + m2.size());
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      if (m1.representation().get(i, j)) block.set(i, j, true);
  for (std::size_t i = 0; i < m2.rank(); ++i)
    for (std::size_t j = 0; j < m2.size(); ++j)
      if (m2.representation().get(i, j)) block.set(r1 + i, n1 + j, true);
  labels1.insert(labels1.end(), std::make_move_iterator(labels2.begin()),
                 std::make_move_iterator(labels2.end()));
  return m1.validated() && m2.validated() ? BinaryMatroid::create(block, std::move(labels1))
                                          : BinaryMatroid::create_raw(block, std::move(labels1));
}

bool equals(const BinaryMatroid& m1, const BinaryMatroid& m2) {
  if (m1.size() != m2.size() || m1.rank() != m2.rank()) return false;
  std::vector<std::string> order1 = m1.labels();
  std::sort(order1.begin(), order1.end());
  for (const auto& label : order1)
    if (!m2.contains(label)) return false;
  const auto aligned = [&order1](const BinaryMatroid& m) {
    Gf2Matrix a(m.rank(), m.size());
    for (std::size_t j = 0; j < order1.size(); ++j) {
      const std::uint64_t bits = m.column_bits(m.index_of(order1[j]));
      for (std::size_t i = 0; i < m.rank(); ++i)
        if (bits >> i & 1) a.set(i, j, true);
    }
    return a;
  };
  return row_space_equal(aligned(m1), aligned(m2));
}

}  // namespace gammaext

#include "gammaext/catalog.hpp"

#include <algorithm>
#include <cstdint>

#include "gammaext/connectivity.hpp"
#include "gammaext/errors.hpp"
#include "gammaext/matrix_io.hpp"

namespace gammaext {

BinaryMatroid fano() {
  return BinaryMatroid::create(Gf2Matrix::from_rows({{1, 0, 0, 0, 1, 1, 1},
                                                     {0, 1, 0, 1, 0, 1, 1},
                                                     {0, 0, 1, 1, 1, 0, 1}}),
                               default_labels(7));
}

namespace {

/// Cycle matroid of the complete graph on m vertices: the GF(2) vertex-edge
/// incidence matrix, edge labels "ij" (i < j, vertices 1..m). Construction
/// drops one dependent row, leaving rank m-1.
BinaryMatroid complete_graph_cycles(std::size_t m) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> rows(m);
  for (auto& row : rows) row.assign(m * (m - 1) / 2, 0);
  std::size_t e = 0;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) {
      rows[i - 1][e] = 1;
      rows[j - 1][e] = 1;
      labels.push_back(std::to_string(i) + std::to_string(j));
      ++e;
    }
  return BinaryMatroid::create(Gf2Matrix::from_rows(rows), std::move(labels));
}

/// Rank-4 matroid on the eight columns (1,x,y,z), (x,y,z) ∈ {0,1}³ in
/// lexicographic order: the binary affine cube. Girth and cogirth are both
/// 4, which makes it the natural probe for order-4 connectivity sweeps.
BinaryMatroid affine_cube() {
  std::vector<std::vector<int>> rows(4, std::vector<int>(8, 0));
  for (int j = 0; j < 8; ++j) {
    rows[0][j] = 1;
    for (int i = 0; i < 3; ++i) rows[i + 1][j] = j >> (2 - i) & 1;
  }
  return BinaryMatroid::create(Gf2Matrix::from_rows(rows), default_labels(8));
}

}  // namespace

BinaryMatroid named(std::string_view name) {
  if (name == "fano") return fano();
  if (name == "fano-dual") return dual(fano());
  if (name == "u23")
    return BinaryMatroid::create(Gf2Matrix::from_rows({{1, 0, 1}, {0, 1, 1}}), {"a", "b", "c"});
  if (name == "ag32") return affine_cube();
  if (name == "k4-cycle") return complete_graph_cycles(4);
  if (name == "k5-cycle") return complete_graph_cycles(5);
  std::string known;
  for (const auto& entry : named_list()) {
    if (!known.empty()) known += ", ";
    known += entry;
  }
  throw UnknownNameError("unknown fixture '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<std::string> named_list() {
  return {"ag32", "fano", "fano-dual", "k4-cycle", "k5-cycle", "u23"};
}

std::vector<CatalogEntry> named_entries() {
  std::vector<CatalogEntry> entries;
  for (const auto& name : named_list()) {
    BinaryMatroid m = named(name);
    std::vector<std::string> tags = tags_for(m);
    entries.push_back({name, std::move(m), std::move(tags)});
  }
  return entries;
}

std::vector<std::string> tags_for(const BinaryMatroid& m) {
  std::vector<std::string> tags;
  tags.push_back(component_count(m) == 1 ? "connected" : "disconnected");
  for (std::size_t k = 2; k <= 4; ++k)
    if (is_k_connected(m, k)) tags.push_back(std::to_string(k) + "-connected");
  return tags;
}

namespace {

/// Columns as projective points: value v in 1..2^r-1 read as the bit vector
/// (row 0 = most significant), so ascending v is lexicographic bit-vector
/// order. Gf2Basis work uses v directly; only the final matrix needs the
/// row layout.
Gf2Matrix matrix_of_points(const std::vector<std::uint32_t>& points, std::size_t r) {
  Gf2Matrix m(r, points.size());
  for (std::size_t j = 0; j < points.size(); ++j)
    for (std::size_t i = 0; i < r; ++i)
      if (points[j] >> (r - 1 - i) & 1) m.set(i, j, true);
  return m;
}

std::size_t rank_of_points(const std::vector<std::uint32_t>& points, std::size_t skip) {
  Gf2Basis basis;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (i != skip) basis.insert(points[i]);
  return basis.size();
}

bool keep_under_filter(const BinaryMatroid& m, const EnumerateOptions& options) {
  switch (options.filter) {
    case MatroidFilter::all: return true;
    case MatroidFilter::connected: return component_count(m) == 1;
    case MatroidFilter::disconnected: return component_count(m) > 1;
    case MatroidFilter::k_connected: return is_k_connected(m, options.k);
  }
  return true;
}

}  // namespace

std::vector<CatalogEntry> enumerate_matroids(std::size_t r, std::size_t n,
                                             const EnumerateOptions& options) {
  if (r < 1 || r > options.max_rank || n > options.max_size)
    throw SizeError("enumeration bounds are rank <= " + std::to_string(options.max_rank) +
                    ", size <= " + std::to_string(options.max_size));
  const std::uint32_t point_count = (std::uint32_t{1} << r) - 1;
  const std::string stem =
      "r" + std::to_string(r) + "n" + std::to_string(n) + (options.allow_parallel ? "p#" : "#");

  std::vector<CatalogEntry> out;
  std::vector<std::uint32_t> chosen;
  std::size_t candidate_index = 0;

  auto emit = [&]() {
    if (rank_of_points(chosen, SIZE_MAX) != r) return;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      if (rank_of_points(chosen, i) != r) return;  // dropping element i loses rank: coloop
    BinaryMatroid m = BinaryMatroid::create(matrix_of_points(chosen, r), default_labels(n));
    std::string name = stem;
    const std::string digits = std::to_string(candidate_index++);
    name.append(digits.size() < 4 ? 4 - digits.size() : 0, '0');
    name += digits;
    if (keep_under_filter(m, options)) out.push_back({std::move(name), std::move(m), {}});
  };

  auto choose = [&](auto&& self, std::uint32_t next) -> void {
    if (chosen.size() == n) {
      emit();
      return;
    }
    for (std::uint32_t v = next; v <= point_count; ++v) {
      chosen.push_back(v);
      self(self, options.allow_parallel ? v : v + 1);
      chosen.pop_back();
    }
  };
  choose(choose, 1);
  return out;
}

namespace {

BinaryMatroid relabeled(const BinaryMatroid& m, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(m.size());
  for (const auto& label : m.labels()) labels.push_back(prefix + label);
  return BinaryMatroid::create(m.representation(), std::move(labels));
}

}  // namespace

std::vector<CatalogEntry> direct_sum_pool(std::size_t max_total, std::size_t max_component_rank,
                                          std::size_t parts_max) {
  std::vector<CatalogEntry> parts;
  EnumerateOptions connected_only;
  connected_only.filter = MatroidFilter::connected;
  for (std::size_t r = 2; r <= max_component_rank; ++r)
    for (std::size_t n = r + 1; n + 3 <= max_total && n < (std::size_t{1} << r); ++n) {
      auto slice = enumerate_matroids(r, n, connected_only);
      parts.insert(parts.end(), std::make_move_iterator(slice.begin()),
                   std::make_move_iterator(slice.end()));
    }

  static constexpr const char* kPrefixes[] = {"a:", "b:", "c:", "d:"};
  std::vector<CatalogEntry> out;
  std::vector<std::size_t> pick;

  auto emit = [&]() {
    std::string name = "sum(";
    BinaryMatroid sum = relabeled(parts[pick[0]].matroid, kPrefixes[0]);
    name += parts[pick[0]].name;
    for (std::size_t i = 1; i < pick.size(); ++i) {
      sum = direct_sum(sum, relabeled(parts[pick[i]].matroid, kPrefixes[i]));
      name += ",";
      name += parts[pick[i]].name;
    }
    name += ")";
    out.push_back({std::move(name), std::move(sum), {"disconnected"}});
  };

  auto choose = [&](auto&& self, std::size_t next, std::size_t total) -> void {
    if (pick.size() >= 2) emit();
    if (pick.size() == parts_max) return;
    for (std::size_t i = next; i < parts.size(); ++i) {
      const std::size_t size = parts[i].matroid.size();
      if (total + size > max_total) continue;
      pick.push_back(i);
      self(self, i, total + size);
      pick.pop_back();
    }
  };
  choose(choose, 0, 0);
  return out;
}

}  // namespace gammaext

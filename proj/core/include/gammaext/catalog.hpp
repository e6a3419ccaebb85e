#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gammaext/matroid.hpp"

namespace gammaext {

/// A matroid with a stable name for sweep instance keys, plus property tags
/// ("connected", "3-connected", …). Tags are filled by tags_for on demand;
/// enumeration leaves them empty to keep the streams cheap.
struct CatalogEntry {
  std::string name;
  BinaryMatroid matroid;
  std::vector<std::string> tags;
};

/// The rank-3 matroid on all seven nonzero vectors of GF(2)³, labels 1..7,
/// with its customary standard representation (columns 1,2,3 the identity,
/// 4=(0,1,1), 5=(1,0,1), 6=(1,1,0), 7=(1,1,1)).
BinaryMatroid fano();

/// Fixtures by name: u23, fano, fano-dual, k4-cycle, k5-cycle, ag32.
/// Unknown names → UnknownNameError.
BinaryMatroid named(std::string_view name);

/// Sorted list of the names `named` accepts.
std::vector<std::string> named_list();

/// All named fixtures as entries, tags filled in.
std::vector<CatalogEntry> named_entries();

enum class MatroidFilter { all, connected, disconnected, k_connected };

struct EnumerateOptions {
  MatroidFilter filter = MatroidFilter::all;
  std::size_t k = 2;             // order for MatroidFilter::k_connected
  bool allow_parallel = false;   // permit repeated columns (girth-2 instances)
  std::size_t max_rank = 5;      // hard bounds; exceeding them → SizeError
  std::size_t max_size = 12;
};

/// Every matroid on n points of the rank-r binary projective geometry:
/// choose n distinct nonzero columns (combinations in lexicographic
/// bit-vector order; multisets when allow_parallel), keep those of full
/// rank r with no coloop, label the columns "1".."n". Names are
/// "r<r>n<n>#<idx>" ("r<r>n<n>p#<idx>" with parallel columns allowed), where
/// idx counts valid candidates pre-filter, so an entry keeps its name no
/// matter which filter selected it. Names are unique but entries need not be
/// pairwise distinct as labeled matroids: different column selections can
/// standardize to the same representation (every coloop-free choice of four
/// rank-3 columns comes out as [I₃|1], for instance).
std::vector<CatalogEntry> enumerate_matroids(std::size_t r, std::size_t n,
                                             const EnumerateOptions& options = {});

/// Property tags: "connected"/"disconnected" plus "k-connected" for each
/// k ∈ {2,3,4} that holds (no (k−1)-separation).
std::vector<std::string> tags_for(const BinaryMatroid& m);

/// Direct sums of 2..`parts_max` connected enumerated matroids of rank ≤
/// `max_component_rank`, total size ≤ max_total. Parts are relabeled with
/// "a:", "b:", "c:" prefixes before summing, so sums of equal parts stay
/// well-formed and instance keys show which part an element came from.
std::vector<CatalogEntry> direct_sum_pool(std::size_t max_total,
                                          std::size_t max_component_rank = 3,
                                          std::size_t parts_max = 3);

}  // namespace gammaext

#pragma once

#include <cstddef>
#include <optional>

#include "gammaext/element_set.hpp"
#include "gammaext/matroid.hpp"
#include "gammaext/report.hpp"

namespace gammaext {

/// A j-separation: a bipartition (A,B) of the ground set with
/// min(|A|,|B|) ≥ j and r(A) + r(B) − r(M) ≤ j − 1. Canonical form keeps
/// the lexicographically least label in side_a.
struct Separation {
  ElementSet side_a;
  ElementSet side_b;
  std::size_t order = 0;
};

/// Bipartition searches refuse ground sets larger than this by default.
inline constexpr std::size_t kDefaultSeparationBound = 20;

/// The j-separation with lexicographically least side_a (among canonical
/// forms, compared as sorted label sequences), or nullopt if none exists.
/// Exhaustive search with size and rank pruning; SizeError above `bound`.
std::optional<Separation> find_separation(const BinaryMatroid& m, std::size_t j,
                                          std::size_t bound = kDefaultSeparationBound);

/// Existence only — stops at the first j-separation instead of finding the
/// least one, which is what the connectivity sweeps want.
bool has_separation(const BinaryMatroid& m, std::size_t j,
                    std::size_t bound = kDefaultSeparationBound);

/// Two readings of "k-connected", which coincide on every instance the law
/// sweeps touch but differ in general:
///   paper      — no (k−1)-separation exists;
///   cumulative — no j-separation exists for any j ≤ k−1 (Tutte).
enum class ConnectivityMode { paper, cumulative };

/// k ≥ 2 required. 2-connected means connected in both modes.
bool is_k_connected(const BinaryMatroid& m, std::size_t k,
                    ConnectivityMode mode = ConnectivityMode::paper,
                    std::size_t bound = kDefaultSeparationBound);

/// Evaluates the girth bound that k-connectedness forces on a matroid with
/// at least 2(k−1) elements: every circuit and every cocircuit has ≥ k
/// elements. The hypotheses are the caller's to establish (law sweeps filter
/// instances first); this evaluates the conclusion and reports the smallest
/// offending circuit or cocircuit on fail. law_id "lemma-2.3".
LawReport girth_bound_check(const BinaryMatroid& m, std::size_t k,
                            std::size_t bound = kDefaultEnumerationBound);

}  // namespace gammaext

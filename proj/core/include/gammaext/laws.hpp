#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammaext/catalog.hpp"
#include "gammaext/connectivity.hpp"
#include "gammaext/element_set.hpp"
#include "gammaext/extensions.hpp"
#include "gammaext/matroid.hpp"
#include "gammaext/report.hpp"

namespace gammaext {

/// Seed of the sampling fallback in verify_rank_lemma, frozen so sampled
/// reports are reproducible. The seed is echoed in the report instance key.
inline constexpr std::uint64_t kRankLemmaSamplingSeed = 0x6d61747231303164ull;

/// Exhaustive subset checks switch to sampling above this many elements.
inline constexpr std::size_t kRankLemmaExhaustiveLimit = 12;

/// The circuit characterization of M^X: the claimed circuit family is
///   (i)   the circuits of M;
///   (ii)  {x_i, x_j, γ_i, γ_j} for distinct x_i, x_j ∈ X;
///   (iii) J ∪ (D − X_J) for J ⊆ Γ with |J| even and ≥ 2 (J = Γ included)
///         and D a circuit of M containing X_J = {x_i : γ_i ∈ J}.
/// Returned sorted; verify_circuit_characterization compares this against
/// the enumerated circuits of g.result. law_id "lemma-2.2".
std::vector<ElementSet> predicted_circuits(const BinaryMatroid& m, const GammaExtension& g,
                                           std::size_t bound = kDefaultEnumerationBound);

LawReport verify_circuit_characterization(const BinaryMatroid& m, const ElementSet& x,
                                          std::size_t bound = kDefaultEnumerationBound);

/// The four rank laws of the extension, law_id "lemma-2.1":
///   (i)   Γ is independent in M^X;
///   (ii)  r'(A) = r(A) for every A ⊆ S;
///   (iii) r'(A) ≥ r(S∩A) + 1 for every A meeting Γ;
///   (iv)  r'(M^X) = r(M) + 1.
/// (ii) and (iii) run exhaustively when |S∪Γ| ≤ exhaustive_limit, otherwise
/// on 4096 seeded random subsets (the instance key then records the seed).
LawReport verify_rank_lemma(const BinaryMatroid& m, const ElementSet& x,
                            std::size_t exhaustive_limit = kRankLemmaExhaustiveLimit);

/// The connectivity criterion for extensions, law_id "theorem-2.6": for
/// k-connected M with at least 2(k−1) elements,
///   M^X is k-connected  ⇔  |X| ≥ k and 2 ≤ k ≤ 4.
/// Verdict is precondition_unmet unless M is k-connected (paper mode) with
/// |S| ≥ 2(k−1); pass `m_is_k_connected` when the caller already knows.
/// Both connectivity modes are evaluated on M^X and any disagreement is a
/// fail in its own right.
LawReport verify_theorem_2_6(const BinaryMatroid& m, const ElementSet& x, std::size_t k,
                             std::optional<bool> m_is_k_connected = {},
                             std::size_t separation_bound = kDefaultSeparationBound);

/// The connectivity criterion for disconnected M, law_id "theorem-2.7":
///   M^X is connected  ⇔  every component of M intersects X.
/// precondition_unmet unless M has at least two components.
LawReport verify_theorem_2_7(const BinaryMatroid& m, const ElementSet& x);

/// Rank-drop deletions expose cocircuits, law_id "lemma-2.4": every Y ⊆ S
/// whose removal drops the rank by exactly one contains a cocircuit.
/// Checked for all such Y.
LawReport verify_cocircuit_lemma(const BinaryMatroid& m,
                                 std::size_t bound = kDefaultEnumerationBound);

/// Small deletions keep the rank, law_id "corollary-2.5": in a k-connected
/// matroid with |S| ≥ 2(k−1), deleting any Y with |Y| < k leaves the rank
/// unchanged. precondition_unmet unless M qualifies.
LawReport verify_deletion_rank(const BinaryMatroid& m, std::size_t k,
                               std::optional<bool> m_is_k_connected = {},
                               std::size_t separation_bound = kDefaultSeparationBound);

/// No extension is ever 5-connected, law_id "never-5": when |X| ≥ 2, M^X
/// contains a 4-element circuit, and is therefore not 5-connected whenever
/// it has at least 8 elements. precondition_unmet when |X| < 2.
LawReport verify_never_five_connected(const BinaryMatroid& m, const ElementSet& x,
                                      std::size_t separation_bound = kDefaultSeparationBound);

struct SweepOptions {
  std::optional<std::size_t> k;       // required by laws 2.3, 2.5, 2.6
  std::size_t max_x_size = SIZE_MAX;  // cap on |X| (laws quantifying over X)
  std::size_t max_union = 12;         // cap on |S∪Γ| (law 2.1 only)
  bool keep_records = false;          // retain per-instance reports
  std::size_t threads = 1;            // pool shards; output is order-stable
  std::size_t enumeration_bound = kDefaultEnumerationBound;
  std::size_t separation_bound = kDefaultSeparationBound;
};

struct SweepResult {
  std::string law_id;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t precondition_unmet = 0;
  std::vector<LawReport> failures;  // all fails, in instance order
  std::vector<LawReport> records;   // every report, when keep_records

  std::string summary() const;
};

/// Runs one law over a catalog pool. `law` is one of "2.1", "2.2", "2.3",
/// "2.4", "2.5", "2.6", "2.7", "never-5". Laws quantifying over X visit
/// every non-empty independent X (label-lex order) within the option caps;
/// per-matroid preconditions are checked once per pool entry and produce a
/// single precondition_unmet record. Instance keys look like
/// "M=r3n7#0000;X={1,2};k=3". Results are identical for any thread count.
SweepResult sweep_law(std::string_view law, const std::vector<CatalogEntry>& pool,
                      const SweepOptions& options = {});

}  // namespace gammaext

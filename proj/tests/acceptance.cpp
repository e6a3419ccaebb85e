// Acceptance gate: ten standalone checks over the library, one line of
// output each ("criterion N: PASS|FAIL — detail (T s)"). Runs everything by
// default; `--criterion N` runs a single check. Exit status is the number of
// failed criteria, so the harness can register each line as its own test.
//
// Criterion 4 currently FAILS, and that is the honest result: the claimed
// three-family circuit description of M^X misses circuits built from
// ground-set circuits that meet X in a proper nonempty subset. The sweep
// prints the first divergence; see the unit suite for the frozen analysis.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "gammaext/catalog.hpp"
#include "gammaext/connectivity.hpp"
#include "gammaext/element_set.hpp"
#include "gammaext/extensions.hpp"
#include "gammaext/gf2.hpp"
#include "gammaext/laws.hpp"
#include "gammaext/matrix_io.hpp"
#include "gammaext/matroid.hpp"

namespace {

using namespace gammaext;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string counts(const SweepResult& s) {
  return "pass=" + std::to_string(s.passed) + " fail=" + std::to_string(s.failed) +
         " precondition-unmet=" + std::to_string(s.precondition_unmet);
}

// Enumerated pools by increasing rank and size; n never exceeds the number
// of nonzero vectors available at each rank.
std::vector<CatalogEntry> slices(std::size_t max_r, std::size_t max_n, MatroidFilter filter) {
  std::vector<CatalogEntry> pool;
  EnumerateOptions opt;
  opt.filter = filter;
  for (std::size_t r = 2; r <= max_r; ++r) {
    const std::size_t top = std::min(max_n, (std::size_t{1} << r) - 1);
    for (std::size_t n = r + 1; n <= top; ++n) {
      auto batch = enumerate_matroids(r, n, opt);
      std::move(batch.begin(), batch.end(), std::back_inserter(pool));
    }
  }
  return pool;
}

std::vector<CatalogEntry> named_connected_up_to(std::size_t max_n) {
  std::vector<CatalogEntry> pool;
  for (auto& e : named_entries()) {
    if (e.matroid.size() > max_n) continue;
    if (std::find(e.tags.begin(), e.tags.end(), "connected") == e.tags.end()) continue;
    pool.push_back(std::move(e));
  }
  return pool;
}

// The pool of criterion 4; criteria 8 and 9 run their identities over the
// exact same instances.
std::vector<CatalogEntry> characterization_pool() {
  std::vector<CatalogEntry> pool = named_connected_up_to(8);
  auto enumerated = slices(4, 8, MatroidFilter::connected);
  std::move(enumerated.begin(), enumerated.end(), std::back_inserter(pool));
  return pool;
}

// Every non-empty independent X ⊆ S with |X| ≤ max_size, in label-lex order
// (the same order the sweeps visit, so failure keys are comparable).
template <typename Visit>
void for_each_independent(const BinaryMatroid& m, std::size_t max_size, Visit&& visit) {
  std::vector<std::string> order = m.labels();
  std::sort(order.begin(), order.end());
  Gf2Basis basis;
  std::vector<std::string> chosen;
  const std::function<void(std::size_t)> step = [&](std::size_t start) {
    if (!chosen.empty()) visit(ElementSet(chosen));
    if (chosen.size() == max_size) return;
    for (std::size_t i = start; i < order.size(); ++i) {
      const int slot = basis.insert(m.column_bits(m.index_of(order[i])));
      if (slot < 0) continue;
      chosen.push_back(order[i]);
      step(i + 1);
      chosen.pop_back();
      basis.remove(slot);
    }
  };
  step(0);
}

constexpr std::string_view kMatrixX =
    "labels: 1 2 3 4 5 6 7 g1 g2\n"
    "4 9\n"
    "1 0 0 0 1 1 1 1 0\n"
    "0 1 0 1 0 1 1 0 1\n"
    "0 0 1 1 1 0 1 0 0\n"
    "0 0 0 0 0 0 0 1 1\n";

constexpr std::string_view kMatrixY =
    "labels: 1 2 3 4 5 6 7 g1 g2 g3\n"
    "4 10\n"
    "1 0 0 0 1 1 1 1 0 0\n"
    "0 1 0 1 0 1 1 0 1 0\n"
    "0 0 1 1 1 0 1 0 0 1\n"
    "0 0 0 0 0 0 0 1 1 1\n";

// 1. The seven-point fixture is 3-connected under both connectivity
//    readings, in under a second.
Outcome criterion_1() {
  const auto t0 = Clock::now();
  const BinaryMatroid f7 = fano();
  const bool paper = is_k_connected(f7, 3, ConnectivityMode::paper);
  const bool cumulative = is_k_connected(f7, 3, ConnectivityMode::cumulative);
  const double t = seconds_since(t0);
  return {paper && cumulative && t < 1.0,
          "fano 3-connected (both modes): " + std::string(paper && cumulative ? "yes" : "NO") +
              ", budget 1 s"};
}

// 2. The two worked extensions of the seven-point fixture: exact matrices
//    and their connectivity, in under five seconds.
Outcome criterion_2() {
  const auto t0 = Clock::now();
  const BinaryMatroid f7 = fano();
  const GammaExtension gx = gamma_extension(f7, ElementSet{"1", "2"});
  const GammaExtension gy = gamma_extension(f7, ElementSet{"1", "2", "3"});

  const bool matrices = render_matrix(gx.matrix, gx.matrix_labels) == kMatrixX &&
                        render_matrix(gy.matrix, gy.matrix_labels) == kMatrixY;
  const bool connectivity = is_k_connected(gy.result, 3) && !is_k_connected(gx.result, 3) &&
                            is_k_connected(gx.result, 2);
  const double t = seconds_since(t0);
  return {matrices && connectivity && t < 5.0,
          std::string("4x9 and 4x10 matrices ") + (matrices ? "exact" : "WRONG") +
              "; two-point extension 2- but not 3-connected, three-point one 3-connected: " +
              (connectivity ? "yes" : "NO") + "; budget 5 s"};
}

// 3. The four rank identities of the extension: exhaustively on the two
//    worked instances, then swept over the catalog within the subset cap.
Outcome criterion_3() {
  const BinaryMatroid f7 = fano();
  const LawReport rx = verify_rank_lemma(f7, ElementSet{"1", "2"});
  const LawReport ry = verify_rank_lemma(f7, ElementSet{"1", "2", "3"});

  std::vector<CatalogEntry> pool = named_entries();
  auto enumerated = slices(4, 7, MatroidFilter::all);
  std::move(enumerated.begin(), enumerated.end(), std::back_inserter(pool));
  const SweepResult sweep = sweep_law("2.1", pool);  // default |S∪Γ| ≤ 12 cap

  const bool pass = rx.verdict == Verdict::pass && ry.verdict == Verdict::pass &&
                    sweep.failed == 0 && sweep.passed > 0;
  return {pass, "rank identities: fano instances pass, sweep " + counts(sweep)};
}

// 4. The claimed circuit description of M^X over every connected catalog
//    matroid with n ≤ 8 and every independent X with |X| ≤ 3. This check is
//    faithful to the claim and the claim does not hold, so the criterion
//    fails; the first divergence is printed in full.
Outcome criterion_4() {
  const auto t0 = Clock::now();
  SweepOptions opt;
  opt.max_x_size = 3;
  const SweepResult s = sweep_law("2.2", characterization_pool(), opt);
  const double t = seconds_since(t0);

  std::string detail = "circuit families: " + counts(s);
  if (!s.failures.empty()) {
    const LawReport& first = s.failures.front();
    detail += "; first divergence " + first.instance + ": " +
              first.counterexample.value_or("-");
  }
  detail += "; budget 600 s";
  return {s.failed == 0 && t < 600.0, detail};
}

// 5. The connectivity criterion for extensions at k ∈ {2,3,4}: over the
//    whole pool, M^X is k-connected exactly when |X| ≥ k. Matroids that are
//    not k-connected to begin with report precondition-unmet, never pass;
//    there is no 4-connected matroid in the pool (ag32 is not), so the k=4
//    slice is all-unmet by design.
Outcome criterion_5() {
  std::vector<CatalogEntry> pool = named_entries();
  auto enumerated = slices(4, 10, MatroidFilter::all);
  std::move(enumerated.begin(), enumerated.end(), std::back_inserter(pool));

  bool pass = true;
  std::string detail = "k-connectivity biconditional:";
  for (std::size_t k = 2; k <= 4; ++k) {
    SweepOptions opt;
    opt.k = k;
    opt.max_x_size = k + 1;
    const SweepResult s = sweep_law("2.6", pool, opt);
    pass = pass && s.failed == 0 && (s.passed > 0 || s.precondition_unmet > 0);
    detail += " k=" + std::to_string(k) + " [" + counts(s) + "]";
  }
  return {pass, detail};
}

// 6. No extension by |X| ≥ 2 is ever 5-connected: it always carries a
//    4-element circuit, which caps the girth below what 5-connectedness
//    would force once |S∪Γ| ≥ 8.
Outcome criterion_6() {
  std::vector<CatalogEntry> pool = named_entries();
  auto enumerated = slices(4, 8, MatroidFilter::all);
  std::move(enumerated.begin(), enumerated.end(), std::back_inserter(pool));
  const SweepResult s = sweep_law("never-5", pool);  // |X| capped by rank only
  return {s.failed == 0 && s.passed > 0, "never 5-connected: " + counts(s)};
}

// 7. Connectivity of extensions of disconnected matroids: over direct sums
//    of 2–3 connected enumerated matroids (total n ≤ 10), M^X is connected
//    exactly when X meets every component.
Outcome criterion_7() {
  const auto pool = direct_sum_pool(10, 4);
  SweepOptions opt;
  opt.max_x_size = 4;
  const SweepResult s = sweep_law("2.7", pool, opt);
  return {s.failed == 0 && s.passed > 0,
          "component coverage over " + std::to_string(pool.size()) + " direct sums: " +
              counts(s)};
}

// 8. Composition identity on every instance of criterion 4's sweep:
//    splitting the parallel extension by Γ rebuilds the Γ-extension.
Outcome criterion_8() {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;
  for (const auto& e : characterization_pool()) {
    for_each_independent(e.matroid, 3, [&](const ElementSet& x) {
      ++checked;
      if (!compose_check(e.matroid, x) && failed++ == 0)
        first = "M=" + e.name + ";X=" + x.to_string();
    });
  }
  std::string detail = "split∘parallel = extension on " + std::to_string(checked) +
                       " instances, " + std::to_string(failed) + " failures";
  if (failed > 0) detail += "; first " + first;
  return {failed == 0 && checked > 0, detail};
}

// 9. Deleting Γ from M^X gives back M, on the same instances.
Outcome criterion_9() {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;
  for (const auto& e : characterization_pool()) {
    for_each_independent(e.matroid, 3, [&](const ElementSet& x) {
      ++checked;
      const GammaExtension g = gamma_extension(e.matroid, x);
      if (!equals(delete_elements(g.result, g.gamma_labels), e.matroid) && failed++ == 0)
        first = "M=" + e.name + ";X=" + x.to_string();
    });
  }
  std::string detail = "delete(M^X, Γ) = M on " + std::to_string(checked) + " instances, " +
                       std::to_string(failed) + " failures";
  if (failed > 0) detail += "; first " + first;
  return {failed == 0 && checked > 0, detail};
}

// 10. Cross-validation of the base operations: row-space equality agrees
//     with circuit-set equality on all pairs of small enumerated matroids
//     (coloop-freeness makes the circuit family determine the ground set),
//     and the cocircuit / deletion-rank laws hold over everything with
//     n ≤ 8.
Outcome criterion_10() {
  const auto small = slices(3, 6, MatroidFilter::all);
  std::vector<std::vector<ElementSet>> circuit_sets;
  circuit_sets.reserve(small.size());
  for (const auto& e : small) circuit_sets.push_back(circuits(e.matroid));

  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      ++pairs;
      if (equals(small[i].matroid, small[j].matroid) != (circuit_sets[i] == circuit_sets[j]))
        ++mismatches;
    }
  }

  std::vector<CatalogEntry> pool = named_connected_up_to(8);
  auto enumerated = slices(4, 8, MatroidFilter::all);
  std::move(enumerated.begin(), enumerated.end(), std::back_inserter(pool));
  const SweepResult cocircuit = sweep_law("2.4", pool);
  bool deletion_ok = true;
  for (std::size_t k = 2; k <= 4; ++k) {
    SweepOptions opt;
    opt.k = k;
    deletion_ok = deletion_ok && sweep_law("2.5", pool, opt).failed == 0;
  }

  const bool pass =
      mismatches == 0 && cocircuit.failed == 0 && cocircuit.passed > 0 && deletion_ok;
  return {pass, "equality vs circuits on " + std::to_string(pairs) + " pairs: " +
                    std::to_string(mismatches) + " mismatches; cocircuit sweep " +
                    counts(cocircuit) + "; deletion-rank sweeps " +
                    (deletion_ok ? "clean" : "FAILED")};
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t only = 0;
  if (argc == 3 && std::string_view(argv[1]) == "--criterion") {
    only = static_cast<std::size_t>(std::atoi(argv[2]));
    if (only < 1 || only > 10) {
      std::fprintf(stderr, "error: criterion must be 1..10\n");
      return 64;
    }
  } else if (argc != 1) {
    std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
    return 64;
  }

  using Check = Outcome (*)();
  const Check checks[10] = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};

  int failures = 0;
  for (std::size_t i = 1; i <= 10; ++i) {
    if (only != 0 && i != only) continue;
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = checks[i - 1]();
    } catch (const std::exception& e) {
      out = {false, std::string("unexpected exception: ") + e.what()};
    }
    std::printf("criterion %zu: %s — %s (%.2f s)\n", i, out.pass ? "PASS" : "FAIL",
                out.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures;
}

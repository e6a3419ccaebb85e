#include "gammaext/laws.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <functional>
#include <iterator>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <utility>

#include "gammaext/errors.hpp"

namespace gammaext {
namespace {

// Bit in ext's mask space for each column of m (the matroid rebuilds its
// standard form on construction, so the shared labels can sit at different
// positions in the two matroids).
std::vector<Mask> embedding(const BinaryMatroid& m, const BinaryMatroid& ext) {
  std::vector<Mask> to_ext(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    to_ext[i] = Mask{1} << ext.index_of(m.labels()[i]);
  }
  return to_ext;
}

Mask remap(Mask src, const std::vector<Mask>& to_ext) {
  Mask out = 0;
  while (src != 0) {
    out |= to_ext[static_cast<std::size_t>(std::countr_zero(src))];
    src &= src - 1;
  }
  return out;
}

// The claimed circuit family of M^X in ext-mask space, sorted:
//   (i)   every circuit of M;
//   (ii)  {x_i, x_j, γ_i, γ_j} for each pair from X;
//   (iii) J ∪ (D − X_J) for J ⊆ Γ, |J| even ≥ 2, D a circuit of M ⊇ X_J.
// The three families are pairwise disjoint — (i) misses Γ, and the Γ-part of
// a family-(iii) member recovers J — so the merge below cannot duplicate.
std::vector<Mask> predicted_circuit_masks(const BinaryMatroid& m, const GammaExtension& g,
                                          const std::vector<Mask>& m_circuits) {
  const BinaryMatroid& ext = g.result;
  const std::vector<Mask> to_ext = embedding(m, ext);
  const std::size_t t = g.pairing.size();
  std::vector<Mask> x_bit(t);      // in m's mask space
  std::vector<Mask> gamma_bit(t);  // in ext's mask space
  for (std::size_t i = 0; i < t; ++i) {
    x_bit[i] = Mask{1} << m.index_of(g.pairing[i].first);
    gamma_bit[i] = Mask{1} << ext.index_of(g.pairing[i].second);
  }

  std::vector<Mask> out;
  for (const Mask c : m_circuits) {
    out.push_back(remap(c, to_ext));
  }
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      out.push_back(remap(x_bit[i] | x_bit[j], to_ext) | gamma_bit[i] | gamma_bit[j]);
    }
  }
  for (std::uint64_t sel = 0; (sel >> t) == 0; ++sel) {
    const int picked = std::popcount(sel);
    if (picked < 2 || picked % 2 != 0) {
      continue;
    }
    Mask x_j = 0;    // X_J in m's mask space
    Mask j_ext = 0;  // J in ext's mask space
    for (std::uint64_t rest = sel; rest != 0; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      x_j |= x_bit[i];
      j_ext |= gamma_bit[i];
    }
    for (const Mask d : m_circuits) {
      if ((d & x_j) == x_j) {
        out.push_back(j_ext | remap(d & ~x_j, to_ext));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LawReport check_circuits(const BinaryMatroid& m, const ElementSet& x,
                         const std::vector<Mask>& m_circuits, std::size_t bound) {
  LawReport report{.law_id = "lemma-2.2", .instance = "X=" + x.to_string()};
  const GammaExtension g = gamma_extension(m, x);
  const std::vector<Mask> predicted = predicted_circuit_masks(m, g, m_circuits);
  const std::vector<Mask> enumerated = circuit_masks(g.result, bound);
  if (predicted == enumerated) {
    return report;
  }
  report.verdict = Verdict::fail;
  std::vector<Mask> missing;
  std::vector<Mask> unexpected;
  std::set_difference(predicted.begin(), predicted.end(), enumerated.begin(), enumerated.end(),
                      std::back_inserter(missing));
  std::set_difference(enumerated.begin(), enumerated.end(), predicted.begin(), predicted.end(),
                      std::back_inserter(unexpected));
  std::string detail = "predicted=" + std::to_string(predicted.size()) +
                       ";enumerated=" + std::to_string(enumerated.size());
  if (!missing.empty()) {
    detail += ";missing circuit " + g.result.set_of(missing.front()).to_string();
  }
  if (!unexpected.empty()) {
    detail += ";unexpected circuit " + g.result.set_of(unexpected.front()).to_string();
  }
  report.counterexample = std::move(detail);
  return report;
}

std::string hex_string(std::uint64_t v) {
  std::ostringstream out;
  out << "0x" << std::hex << v;
  return out.str();
}

std::size_t require_k(const SweepOptions& options, std::string_view law) {
  if (!options.k) {
    throw Error("law " + std::string(law) + " needs k (SweepOptions::k)");
  }
  return *options.k;
}

// Visits every non-empty independent set of size ≤ cap in lexicographic
// label order ({1}, {1,2}, {1,2,3}, …): depth-first over label-sorted
// columns, growing an XOR basis incrementally.
void for_each_independent_set(const BinaryMatroid& m, std::size_t cap,
                              const std::function<void(const ElementSet&)>& visit) {
  if (cap == 0 || m.size() == 0) {
    return;
  }
  std::vector<std::size_t> order(m.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.labels()[a] < m.labels()[b];
  });

  Gf2Basis basis;
  std::vector<std::string> current;
  auto grow = [&](auto&& self, std::size_t start) -> void {
    if (!current.empty()) {
      visit(ElementSet(current));
      if (current.size() == cap) {
        return;
      }
    }
    for (std::size_t pos = start; pos < order.size(); ++pos) {
      const std::size_t i = order[pos];
      const int slot = basis.insert(m.column_bits(i));
      if (slot < 0) {
        continue;
      }
      current.push_back(m.labels()[i]);
      self(self, pos + 1);
      current.pop_back();
      basis.remove(slot);
    }
  };
  grow(grow, 0);
}

// One pool entry under one law; the caller merges results in pool order.
std::vector<LawReport> run_entry(std::string_view law, const CatalogEntry& entry,
                                 const SweepOptions& opt) {
  std::vector<LawReport> out;
  const BinaryMatroid& m = entry.matroid;
  auto emit = [&](LawReport r) {
    r.instance = "M=" + entry.name + (r.instance.empty() ? "" : ";" + r.instance);
    out.push_back(std::move(r));
  };
  // X large enough to push S∪Γ past an exhaustive bound is out of domain.
  auto room_below = [&](std::size_t bound) {
    return bound > m.size() ? bound - m.size() : 0;
  };

  if (law == "2.1") {
    const std::size_t cap = std::min(opt.max_x_size, room_below(opt.max_union));
    for_each_independent_set(m, cap, [&](const ElementSet& x) {
      emit(verify_rank_lemma(m, x, kRankLemmaExhaustiveLimit));
    });
  } else if (law == "2.2") {
    const std::size_t cap = std::min(opt.max_x_size, room_below(opt.enumeration_bound));
    if (cap > 0) {
      const std::vector<Mask> m_circuits = circuit_masks(m, opt.enumeration_bound);
      for_each_independent_set(m, cap, [&](const ElementSet& x) {
        emit(check_circuits(m, x, m_circuits, opt.enumeration_bound));
      });
    }
  } else if (law == "2.3") {
    const std::size_t k = require_k(opt, law);
    if (k < 2 || m.size() < 2 * (k - 1) ||
        !is_k_connected(m, k, ConnectivityMode::paper, opt.separation_bound)) {
      emit(LawReport{.law_id = "lemma-2.3",
                     .instance = "k=" + std::to_string(k),
                     .verdict = Verdict::precondition_unmet});
    } else {
      emit(girth_bound_check(m, k, opt.enumeration_bound));
    }
  } else if (law == "2.4") {
    emit(verify_cocircuit_lemma(m, opt.enumeration_bound));
  } else if (law == "2.5") {
    const std::size_t k = require_k(opt, law);
    emit(verify_deletion_rank(m, k, std::nullopt, opt.separation_bound));
  } else if (law == "2.6") {
    const std::size_t k = require_k(opt, law);
    if (k < 2 || m.size() < 2 * (k - 1) ||
        !is_k_connected(m, k, ConnectivityMode::paper, opt.separation_bound)) {
      emit(LawReport{.law_id = "theorem-2.6",
                     .instance = "k=" + std::to_string(k),
                     .verdict = Verdict::precondition_unmet});
    } else {
      for_each_independent_set(m, opt.max_x_size, [&](const ElementSet& x) {
        emit(verify_theorem_2_6(m, x, k, true, opt.separation_bound));
      });
    }
  } else if (law == "2.7") {
    if (component_count(m) < 2) {
      emit(LawReport{.law_id = "theorem-2.7", .verdict = Verdict::precondition_unmet});
    } else {
      for_each_independent_set(m, opt.max_x_size, [&](const ElementSet& x) {
        emit(verify_theorem_2_7(m, x));
      });
    }
  } else if (law == "never-5") {
    for_each_independent_set(m, opt.max_x_size, [&](const ElementSet& x) {
      if (x.size() >= 2) {
        emit(verify_never_five_connected(m, x, opt.separation_bound));
      }
    });
  }
  return out;
}

bool known_law(std::string_view law) {
  static constexpr std::string_view kLaws[] = {"2.1", "2.2", "2.3", "2.4",
                                               "2.5", "2.6", "2.7", "never-5"};
  return std::find(std::begin(kLaws), std::end(kLaws), law) != std::end(kLaws);
}

}  // namespace

std::vector<ElementSet> predicted_circuits(const BinaryMatroid& m, const GammaExtension& g,
                                           std::size_t bound) {
  const std::vector<Mask> masks = predicted_circuit_masks(m, g, circuit_masks(m, bound));
  std::vector<ElementSet> out;
  out.reserve(masks.size());
  for (const Mask mask : masks) {
    out.push_back(g.result.set_of(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LawReport verify_circuit_characterization(const BinaryMatroid& m, const ElementSet& x,
                                          std::size_t bound) {
  return check_circuits(m, x, circuit_masks(m, bound), bound);
}

LawReport verify_rank_lemma(const BinaryMatroid& m, const ElementSet& x,
                            std::size_t exhaustive_limit) {
  LawReport report{.law_id = "lemma-2.1", .instance = "X=" + x.to_string()};
  const GammaExtension g = gamma_extension(m, x);
  const BinaryMatroid& ext = g.result;

  const Mask gamma_mask = ext.mask_of(g.gamma_labels);
  if (ext.rank_of_mask(gamma_mask) != g.gamma_labels.size()) {  // (i)
    report.verdict = Verdict::fail;
    report.counterexample = "dependent gamma set " + g.gamma_labels.to_string();
    return report;
  }
  if (ext.rank() != m.rank() + 1) {  // (iv)
    report.verdict = Verdict::fail;
    report.counterexample = "r(M^X)=" + std::to_string(ext.rank()) + ", expected r(M)+1=" +
                            std::to_string(m.rank() + 1);
    return report;
  }

  // m-space bit of each ext column that names an element of S (0 for Γ).
  std::vector<Mask> to_base(ext.size(), 0);
  for (std::size_t i = 0; i < ext.size(); ++i) {
    if (m.contains(ext.labels()[i])) {
      to_base[i] = Mask{1} << m.index_of(ext.labels()[i]);
    }
  }

  // (ii) A ⊆ S keeps its rank; (iii) A meeting Γ gains at least one.
  auto check_subset = [&](Mask a) -> bool {
    Mask base = 0;
    for (Mask rest = a & ~gamma_mask; rest != 0; rest &= rest - 1) {
      base |= to_base[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    const std::size_t r_ext = ext.rank_of_mask(a);
    const std::size_t r_base = m.rank_of_mask(base);
    const bool meets_gamma = (a & gamma_mask) != 0;
    if (meets_gamma ? r_ext >= r_base + 1 : r_ext == r_base) {
      return true;
    }
    report.verdict = Verdict::fail;
    report.counterexample = "A=" + ext.set_of(a).to_string() + ";r'(A)=" +
                            std::to_string(r_ext) + ";r(S∩A)=" + std::to_string(r_base) +
                            (meets_gamma ? ";expected r'(A)>=r(S∩A)+1" : ";expected r'(A)=r(A)");
    return false;
  };

  const Mask full = ext.full_mask();
  if (ext.size() <= exhaustive_limit) {
    for (Mask a = 0;; ++a) {
      if (!check_subset(a)) {
        return report;
      }
      if (a == full) {
        break;
      }
    }
  } else {
    report.instance += ";sampled;seed=" + hex_string(kRankLemmaSamplingSeed);
    std::mt19937_64 rng(kRankLemmaSamplingSeed);
    for (int i = 0; i < 4096; ++i) {
      if (!check_subset(rng() & full)) {
        return report;
      }
    }
  }
  return report;
}

LawReport verify_theorem_2_6(const BinaryMatroid& m, const ElementSet& x, std::size_t k,
                             std::optional<bool> m_is_k_connected, std::size_t separation_bound) {
  LawReport report{.law_id = "theorem-2.6",
                   .instance = "X=" + x.to_string() + ";k=" + std::to_string(k)};
  if (k < 2 || m.size() < 2 * (k - 1)) {
    report.verdict = Verdict::precondition_unmet;
    return report;
  }
  const bool base_connected =
      m_is_k_connected ? *m_is_k_connected
                       : is_k_connected(m, k, ConnectivityMode::paper, separation_bound);
  if (!base_connected) {
    report.verdict = Verdict::precondition_unmet;
    return report;
  }

  const GammaExtension g = gamma_extension(m, x);
  const bool lhs = is_k_connected(g.result, k, ConnectivityMode::paper, separation_bound);
  // Cumulative mode adds the separation orders below k−1; it can only
  // differ when paper mode said yes.
  bool lhs_cumulative = lhs;
  for (std::size_t j = 1; lhs_cumulative && j + 1 < k; ++j) {
    lhs_cumulative = !has_separation(g.result, j, separation_bound);
  }
  if (lhs != lhs_cumulative) {
    report.verdict = Verdict::fail;
    report.counterexample = std::string("connectivity modes disagree: paper=") +
                            (lhs ? "true" : "false") +
                            ", cumulative=" + (lhs_cumulative ? "true" : "false");
    return report;
  }

  const bool rhs = x.size() >= k && k <= 4;
  if (lhs == rhs) {
    return report;
  }
  report.verdict = Verdict::fail;
  if (rhs) {
    std::string detail =
        "expected " + std::to_string(k) + "-connected; " + std::to_string(k - 1) + "-separation";
    if (const auto sep = find_separation(g.result, k - 1, separation_bound)) {
      detail += " " + sep->side_a.to_string() + "|" + sep->side_b.to_string();
    }
    report.counterexample = std::move(detail);
  } else {
    report.counterexample = std::to_string(k) + "-connected although |X|=" +
                            std::to_string(x.size()) + (k > 4 ? " and k>4" : "<k");
  }
  return report;
}

LawReport verify_theorem_2_7(const BinaryMatroid& m, const ElementSet& x) {
  LawReport report{.law_id = "theorem-2.7", .instance = "X=" + x.to_string()};
  const std::vector<Mask> comps = component_masks(m);
  if (comps.size() < 2) {
    report.verdict = Verdict::precondition_unmet;
    return report;
  }
  const Mask x_mask = m.mask_of(x);
  Mask missed = 0;
  for (const Mask c : comps) {
    if ((c & x_mask) == 0) {
      missed = c;
      break;
    }
  }
  const GammaExtension g = gamma_extension(m, x);
  const bool connected = component_count(g.result) == 1;
  const bool every_component_met = missed == 0;
  if (connected == every_component_met) {
    return report;
  }
  report.verdict = Verdict::fail;
  report.counterexample =
      every_component_met
          ? "every component meets X yet M^X is disconnected"
          : "component " + m.set_of(missed).to_string() + " misses X yet M^X is connected";
  return report;
}

LawReport verify_cocircuit_lemma(const BinaryMatroid& m, std::size_t bound) {
  LawReport report{.law_id = "lemma-2.4",
                   .instance =
                       "n=" + std::to_string(m.size()) + ";r=" + std::to_string(m.rank())};
  const std::vector<Mask> cocircs = cocircuit_masks(m, bound);
  const Mask full = m.full_mask();
  const std::size_t r = m.rank();
  for (Mask y = 1; y < full; ++y) {  // proper non-empty Y
    if (m.rank_of_mask(full & ~y) != r - 1) {
      continue;
    }
    bool contains_cocircuit = false;
    for (const Mask c : cocircs) {
      if ((c & ~y) == 0) {
        contains_cocircuit = true;
        break;
      }
    }
    if (!contains_cocircuit) {
      report.verdict = Verdict::fail;
      report.counterexample =
          "Y=" + m.set_of(y).to_string() + " drops the rank but contains no cocircuit";
      return report;
    }
  }
  return report;
}

LawReport verify_deletion_rank(const BinaryMatroid& m, std::size_t k,
                               std::optional<bool> m_is_k_connected,
                               std::size_t separation_bound) {
  LawReport report{.law_id = "corollary-2.5",
                   .instance = "n=" + std::to_string(m.size()) +
                               ";r=" + std::to_string(m.rank()) + ";k=" + std::to_string(k)};
  if (k < 2 || m.size() < 2 * (k - 1)) {
    report.verdict = Verdict::precondition_unmet;
    return report;
  }
  const bool connected =
      m_is_k_connected ? *m_is_k_connected
                       : is_k_connected(m, k, ConnectivityMode::paper, separation_bound);
  if (!connected) {
    report.verdict = Verdict::precondition_unmet;
    return report;
  }

  const Mask full = m.full_mask();
  const std::size_t r = m.rank();
  // |Y| < k ≤ n keeps Y proper, so every deletion below is legal.
  auto visit = [&](auto&& self, std::size_t start, Mask y, std::size_t taken) -> bool {
    if (taken > 0 && m.rank_of_mask(full & ~y) != r) {
      report.verdict = Verdict::fail;
      report.counterexample = "rank drops after deleting Y=" + m.set_of(y).to_string();
      return false;
    }
    if (taken + 1 >= k) {
      return true;
    }
    for (std::size_t i = start; i < m.size(); ++i) {
      if (!self(self, i + 1, y | (Mask{1} << i), taken + 1)) {
        return false;
      }
    }
    return true;
  };
  visit(visit, 0, 0, 0);
  return report;
}

LawReport verify_never_five_connected(const BinaryMatroid& m, const ElementSet& x,
                                      std::size_t separation_bound) {
  LawReport report{.law_id = "never-5", .instance = "X=" + x.to_string()};
  if (x.size() < 2) {
    report.verdict = Verdict::precondition_unmet;
    return report;
  }
  const GammaExtension g = gamma_extension(m, x);
  const BinaryMatroid& ext = g.result;
  const ElementSet quad_set{g.pairing[0].first, g.pairing[0].second, g.pairing[1].first,
                            g.pairing[1].second};
  const Mask quad = ext.mask_of(quad_set);

  bool is_circuit = ext.rank_of_mask(quad) == 3;  // dependent, corank one
  for (Mask rest = quad; is_circuit && rest != 0; rest &= rest - 1) {
    const Mask without_one = quad & ~(rest & (~rest + 1));
    is_circuit = ext.rank_of_mask(without_one) == 3;  // every 3-subset independent
  }
  if (!is_circuit) {
    report.verdict = Verdict::fail;
    report.counterexample = quad_set.to_string() + " is not a 4-circuit";
    return report;
  }
  if (ext.size() >= 8 && is_k_connected(ext, 5, ConnectivityMode::paper, separation_bound)) {
    report.verdict = Verdict::fail;
    report.counterexample = "5-connected despite the 4-circuit " + quad_set.to_string();
  }
  return report;
}

std::string SweepResult::summary() const {
  return "law " + law_id + ": pass=" + std::to_string(passed) +
         " fail=" + std::to_string(failed) +
         " precondition-unmet=" + std::to_string(precondition_unmet);
}

SweepResult sweep_law(std::string_view law, const std::vector<CatalogEntry>& pool,
                      const SweepOptions& options) {
  if (!known_law(law)) {
    throw UnknownNameError("unknown law '" + std::string(law) +
                           "'; expected 2.1, 2.2, 2.3, 2.4, 2.5, 2.6, 2.7 or never-5");
  }
  if ((law == "2.3" || law == "2.5" || law == "2.6") && !options.k) {
    throw Error("law " + std::string(law) + " needs k (SweepOptions::k)");
  }

  SweepResult result;
  result.law_id = std::string(law);
  std::vector<std::vector<LawReport>> slots(pool.size());

  const std::size_t workers = std::max<std::size_t>(
      1, std::min({options.threads, pool.size(), std::size_t{64}}));
  if (workers <= 1) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      slots[i] = run_entry(law, pool[i], options);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_lock;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < pool.size(); i = next.fetch_add(1)) {
          try {
            slots[i] = run_entry(law, pool[i], options);
          } catch (...) {
            const std::lock_guard<std::mutex> guard(error_lock);
            if (!first_error) {
              first_error = std::current_exception();
            }
          }
        }
      });
    }
    for (std::thread& t : threads) {
      t.join();
    }
    if (first_error) {
      std::rethrow_exception(first_error);
    }
  }

  for (std::vector<LawReport>& slot : slots) {
    for (LawReport& r : slot) {
      switch (r.verdict) {
        case Verdict::pass:
          ++result.passed;
          break;
        case Verdict::fail:
          ++result.failed;
          result.failures.push_back(r);
          break;
        case Verdict::precondition_unmet:
          ++result.precondition_unmet;
          break;
      }
      if (options.keep_records) {
        result.records.push_back(std::move(r));
      }
    }
  }
  const auto by_instance = [](const LawReport& a, const LawReport& b) {
    return a.instance < b.instance;
  };
  std::sort(result.failures.begin(), result.failures.end(), by_instance);
  std::sort(result.records.begin(), result.records.end(), by_instance);
  return result;
}

}  // namespace gammaext

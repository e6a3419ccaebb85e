#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace gammaext {

/// Outcome of one law check on one instance. precondition_unmet means the
/// law's hypotheses did not hold, so nothing was verified — deliberately
/// distinct from pass, so sweeps can count how often a law was exercised.
enum class Verdict { pass, fail, precondition_unmet };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "precondition-unmet";
  }
}

/// One law check on one instance. A fail always carries a counterexample
/// whose content can be re-checked with the base operations (the offending
/// subset, circuit, or separation is spelled out in full).
struct LawReport {
  std::string law_id;    // e.g. "lemma-2.2"
  std::string instance;  // e.g. "M=r3n7#0000;X={1,2};k=3"
  Verdict verdict = Verdict::pass;
  std::optional<std::string> counterexample;

  /// law_id, instance, verdict, counterexample-or-dash, tab-separated.
  std::string to_tsv_line() const {
    std::string line = law_id;
    line += '\t';
    line += instance;
    line += '\t';
    line += to_string(verdict);
    line += '\t';
    line += counterexample ? *counterexample : "-";
    return line;
  }
};

}  // namespace gammaext

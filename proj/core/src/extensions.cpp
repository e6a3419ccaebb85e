#include "gammaext/extensions.hpp"

#include <algorithm>
#include <iterator>

#include "gammaext/errors.hpp"

namespace gammaext {

namespace {

/// Shared argument validation; returns the γ-labels in X's label order.
std::vector<std::string> check_extension_args(
    const BinaryMatroid& m, const ElementSet& x,
    const std::optional<std::vector<std::string>>& gamma_names) {
  if (x.empty()) throw EmptyError("extension needs a non-empty set");
  for (const auto& label : x) (void)m.index_of(label);
  if (!m.is_independent(x)) throw DependentError("set " + x.to_string() + " is dependent");

  std::vector<std::string> gammas;
  if (gamma_names) {
    if (gamma_names->size() != x.size())
      throw LabelError("expected " + std::to_string(x.size()) + " gamma labels, got " +
                       std::to_string(gamma_names->size()));
    gammas = *gamma_names;
  } else {
    for (const auto& label : x) gammas.push_back("g" + label);
  }
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (m.contains(gammas[i]))
      throw LabelError("gamma label '" + gammas[i] + "' collides with the ground set");
    for (std::size_t j = i + 1; j < gammas.size(); ++j)
      if (gammas[i] == gammas[j]) throw LabelError("duplicate gamma label '" + gammas[i] + "'");
  }
  return gammas;
}

/// The representation plus duplicate columns for X (γ-columns in X label
/// order), optionally with the extra indicator row that turns M' into M^X.
Gf2Matrix extended_matrix(const BinaryMatroid& m, const ElementSet& x, bool indicator_row) {
  const std::size_t r = m.rank();
  const std::size_t n = m.size();
  Gf2Matrix a(r + (indicator_row ? 1 : 0), n + x.size());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.representation().get(i, j)) a.set(i, j, true);
  std::size_t col = n;
  for (const auto& label : x) {
    const std::uint64_t bits = m.column_bits(m.index_of(label));
    for (std::size_t i = 0; i < r; ++i)
      if (bits >> i & 1) a.set(i, col, true);
    if (indicator_row) a.set(r, col, true);
    ++col;
  }
  return a;
}

}  // namespace

GammaExtension gamma_extension(const BinaryMatroid& m, const ElementSet& x,
                               const std::optional<std::vector<std::string>>& gamma_names) {
  std::vector<std::string> gammas = check_extension_args(m, x, gamma_names);

  Gf2Matrix matrix = extended_matrix(m, x, true);
  std::vector<std::string> matrix_labels = m.labels();
  matrix_labels.insert(matrix_labels.end(), gammas.begin(), gammas.end());

  std::vector<std::pair<std::string, std::string>> pairing;
  auto xi = x.begin();
  for (const auto& gamma : gammas) pairing.emplace_back(*xi++, gamma);

  BinaryMatroid result = x.size() >= 2 && m.validated()
                             ? BinaryMatroid::create(matrix, matrix_labels)
                             : BinaryMatroid::create_raw(matrix, matrix_labels);
  return GammaExtension{.result = std::move(result),
                        .gamma_labels = ElementSet(std::move(gammas)),
                        .pairing = std::move(pairing),
                        .matrix = std::move(matrix),
                        .matrix_labels = std::move(matrix_labels)};
}

Gf2Matrix splitting_matrix(const BinaryMatroid& m, const ElementSet& y) {
  if (y.empty()) throw EmptyError("splitting needs a non-empty set");
  const std::size_t r = m.rank();
  Gf2Matrix a(r + 1, m.size());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m.representation().get(i, j)) a.set(i, j, true);
  for (const auto& label : y) a.set(r, m.index_of(label), true);
  return a;
}

BinaryMatroid splitting(const BinaryMatroid& m, const ElementSet& y) {
  return BinaryMatroid::create_raw(splitting_matrix(m, y), m.labels());
}

BinaryMatroid parallel_extension(const BinaryMatroid& m, const ElementSet& x,
                                 const std::optional<std::vector<std::string>>& gamma_names) {
  std::vector<std::string> gammas = check_extension_args(m, x, gamma_names);
  std::vector<std::string> labels = m.labels();
  labels.insert(labels.end(), std::make_move_iterator(gammas.begin()),
                std::make_move_iterator(gammas.end()));
  return BinaryMatroid::create_raw(extended_matrix(m, x, false), std::move(labels));
}

bool compose_check(const BinaryMatroid& m, const ElementSet& x) {
  const GammaExtension g = gamma_extension(m, x);
  const BinaryMatroid prime = parallel_extension(m, x);
  return equals(splitting(prime, g.gamma_labels), g.result);
}

}  // namespace gammaext

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gammaext/element_set.hpp"
#include "gammaext/gf2.hpp"
#include "gammaext/matroid.hpp"

namespace gammaext {

/// The Γ-extension of a matroid M by an independent set X: one new element
/// γ_i per x_i ∈ X. Besides the result matroid this keeps the constructed
/// matrix A^X and its column labels, because downstream output wants the
/// matrix exactly as built (original columns first, γ-columns after, the
/// all-γ indicator row at the bottom) rather than the re-standardized form
/// stored inside the matroid.
struct GammaExtension {
  BinaryMatroid result;                     // matroid on S ∪ Γ
  ElementSet gamma_labels;                  // Γ
  std::vector<std::pair<std::string, std::string>> pairing;  // (x_i, γ_i), X in label order
  Gf2Matrix matrix;                         // A^X as constructed
  std::vector<std::string> matrix_labels;   // its column labels
};

/// Builds M^X: for each x_i ∈ X (in label order) append a copy of x_i's
/// column labeled γ_i, then append one extra row carrying 1 exactly in the
/// γ-columns. Default γ-labels are "g<x label>".
///
/// x must be non-empty (EmptyError), independent (DependentError) and inside
/// the ground set (LabelError); γ-labels must be fresh (LabelError).
///
/// The result is validated when |X| ≥ 2 and the input was validated. With
/// |X| = 1 both circuit families that could cover γ₁ are empty, so γ₁ is
/// always a coloop and the result can only be returned raw.
GammaExtension gamma_extension(const BinaryMatroid& m, const ElementSet& x,
                               const std::optional<std::vector<std::string>>& gamma_names = {});

/// The matrix A_Y: the standard representation of m plus one extra row with
/// 1 exactly in the columns labeled by y. Column labels are m.labels().
Gf2Matrix splitting_matrix(const BinaryMatroid& m, const ElementSet& y);

/// The splitting matroid M_Y, i.e. the vector matroid of splitting_matrix.
/// y must be non-empty (EmptyError) and inside the ground set (LabelError).
/// Always returned raw: nothing guarantees M_Y is coloop-free (splitting by
/// a single element always makes it a coloop).
BinaryMatroid splitting(const BinaryMatroid& m, const ElementSet& y);

/// The parallel extension M': a duplicate column γ_i for each x_i ∈ X, no
/// extra row, so each {x_i, γ_i} is a 2-circuit. Same argument rules as
/// gamma_extension. Returned raw — parallel pairs are the whole point here.
BinaryMatroid parallel_extension(const BinaryMatroid& m, const ElementSet& x,
                                 const std::optional<std::vector<std::string>>& gamma_names = {});

/// Checks the composition identity: splitting the parallel extension by Γ
/// yields exactly the Γ-extension, i.e.
/// equals(splitting(parallel_extension(m,x), Γ), gamma_extension(m,x).result).
bool compose_check(const BinaryMatroid& m, const ElementSet& x);

}  // namespace gammaext

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gammaext/gf2.hpp"

namespace gammaext {

/// A matrix read from text, together with its column labels.  `had_labels`
/// records whether the text carried an explicit label line; parsing fills in
/// "1".."n" when it did not.
struct ParsedMatrix {
  Gf2Matrix matrix;
  std::vector<std::string> labels;
  bool had_labels = false;
};

/// Column labels "1".."n" — the default when a matrix file has no label line.
std::vector<std::string> default_labels(std::size_t n);

/// Parses the matrix text format:
///
///     labels: a b c d      (optional)
///     2 4
///     1 0 1 1
///     0 1 0 1
///
/// The header line gives "rows cols"; each body row has exactly `cols`
/// whitespace-separated 0/1 entries.  Blank lines and lines starting with '#'
/// are skipped.  Malformed input throws ParseError carrying the 1-based line
/// number.
ParsedMatrix parse_matrix(std::string_view text);

/// Renders a matrix in the format parse_matrix reads.  The label line is
/// emitted only when `labels` differs from default_labels(n_cols), so a
/// default-labeled matrix round-trips to the bare two-part form.
std::string render_matrix(const Gf2Matrix& m, const std::vector<std::string>& labels);

}  // namespace gammaext

#include "gammaext/matrix_io.hpp"

#include <cstddef>
#include <sstream>
#include <unordered_set>

#include "gammaext/errors.hpp"

namespace gammaext {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

namespace {

// Splits a line on blanks/tabs; never yields empty tokens.
std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_size(const std::string& tok, std::size_t& out) {
  if (tok.empty() || tok.size() > 9) return false;
  out = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + static_cast<std::size_t>(c - '0');
  }
  return true;
}

}  // namespace

ParsedMatrix parse_matrix(std::string_view text) {
  // Collect meaningful lines with their original 1-based numbers so errors
  // point at the right place even with blank/comment lines interspersed.
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t nl = text.find('\n', start);
      const std::string_view raw =
          text.substr(start, (nl == std::string_view::npos ? text.size() : nl) - start);
      ++line_no;
      std::string_view stripped = raw;
      while (!stripped.empty() && (stripped.back() == '\r' || stripped.back() == ' ' ||
                                   stripped.back() == '\t'))
        stripped.remove_suffix(1);
      std::string_view lead = stripped;
      while (!lead.empty() && (lead.front() == ' ' || lead.front() == '\t')) lead.remove_prefix(1);
      if (!lead.empty() && lead.front() != '#') lines.emplace_back(line_no, std::string(stripped));
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
  }
  if (lines.empty()) throw ParseError(1, "empty matrix text");

  ParsedMatrix out;
  std::size_t cursor = 0;

  // Optional label line.
  {
    auto toks = tokens_of(lines[cursor].second);
    if (!toks.empty() && toks[0] == "labels:") {
      out.had_labels = true;
      out.labels.assign(toks.begin() + 1, toks.end());
      std::unordered_set<std::string_view> seen;
      for (const auto& l : out.labels)
        if (!seen.insert(l).second)
          throw ParseError(lines[cursor].first, "duplicate label '" + l + "'");
      ++cursor;
      if (cursor == lines.size()) throw ParseError(lines[cursor - 1].first, "missing header line");
    }
  }

  // Header: "rows cols".
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  {
    const auto& [line_no, line] = lines[cursor];
    auto toks = tokens_of(line);
    if (toks.size() != 2 || !parse_size(toks[0], n_rows) || !parse_size(toks[1], n_cols))
      throw ParseError(line_no, "malformed header '" + line + "' (expected 'rows cols')");
    ++cursor;
  }
  if (out.had_labels && out.labels.size() != n_cols)
    throw ParseError(lines[0].first, "label count " + std::to_string(out.labels.size()) +
                                         " does not match column count " +
                                         std::to_string(n_cols));
  if (!out.had_labels) out.labels = default_labels(n_cols);

  out.matrix = Gf2Matrix(n_rows, n_cols);
  for (std::size_t r = 0; r < n_rows; ++r, ++cursor) {
    if (cursor == lines.size())
      throw ParseError(lines.back().first,
                       "expected " + std::to_string(n_rows) + " rows, found " + std::to_string(r));
    const auto& [line_no, line] = lines[cursor];
    auto toks = tokens_of(line);
    if (toks.size() != n_cols)
      throw ParseError(line_no, "expected " + std::to_string(n_cols) + " entries, found " +
                                    std::to_string(toks.size()));
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (toks[c] == "1") {
        out.matrix.set(r, c, true);
      } else if (toks[c] != "0") {
        throw ParseError(line_no, "non-binary entry '" + toks[c] + "'");
      }
    }
  }
  if (cursor != lines.size())
    throw ParseError(lines[cursor].first, "trailing content after matrix body");
  return out;
}

std::string render_matrix(const Gf2Matrix& m, const std::vector<std::string>& labels) {
  if (labels.size() != m.n_cols())
    throw DimensionError("render_matrix: " + std::to_string(labels.size()) + " labels for " +
                         std::to_string(m.n_cols()) + " columns");
  std::ostringstream out;
  if (labels != default_labels(m.n_cols())) {
    out << "labels:";
    for (const auto& l : labels) out << ' ' << l;
    out << '\n';
  }
  out << m.n_rows() << ' ' << m.n_cols() << '\n';
  for (std::size_t r = 0; r < m.n_rows(); ++r) {
    for (std::size_t c = 0; c < m.n_cols(); ++c) {
      if (c != 0) out << ' ';
      out << (m.get(r, c) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace gammaext

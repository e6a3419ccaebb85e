#include "gammaext/element_set.hpp"

#include <algorithm>

#include "gammaext/errors.hpp"

namespace gammaext {

namespace {
void normalize(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}
}  // namespace

ElementSet::ElementSet(std::initializer_list<std::string> members) : members_(members) {
  normalize(members_);
}

ElementSet::ElementSet(std::vector<std::string> members) : members_(std::move(members)) {
  normalize(members_);
}

ElementSet ElementSet::from_csv(std::string_view csv) {
  std::vector<std::string> members;
  if (csv.empty()) return ElementSet{};
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    const std::string_view piece = csv.substr(start, comma - start);
    if (piece.empty()) throw LabelError("empty label in list '" + std::string(csv) + "'");
    members.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ElementSet(std::move(members));
}

bool ElementSet::contains(std::string_view label) const {
  return std::binary_search(members_.begin(), members_.end(), label);
}

bool ElementSet::subset_of(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool ElementSet::intersects(const ElementSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

ElementSet ElementSet::union_with(const ElementSet& other) const {
  std::vector<std::string> out;
  out.reserve(size() + other.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out));
  ElementSet result;
  result.members_ = std::move(out);
  return result;
}

ElementSet ElementSet::minus(const ElementSet& other) const {
  std::vector<std::string> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  ElementSet result;
  result.members_ = std::move(out);
  return result;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  std::vector<std::string> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
  ElementSet result;
  result.members_ = std::move(out);
  return result;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i != 0) out += ',';
    out += members_[i];
  }
  out += '}';
  return out;
}

}  // namespace gammaext

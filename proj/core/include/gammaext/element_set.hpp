#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace gammaext {

/// A subset of ground-set labels. Members are kept sorted and unique, so the
/// natural ordering is lexicographic on the sorted label sequence and is used
/// everywhere deterministic output is required.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<std::string> members);
  explicit ElementSet(std::vector<std::string> members);

  /// Splits "a,b,c" on commas; empty pieces are a LabelError.
  static ElementSet from_csv(std::string_view csv);

  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<std::string>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(std::string_view label) const;
  bool subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet union_with(const ElementSet& other) const;
  ElementSet minus(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;

  /// "{a,b,c}"; "{}" when empty.
  std::string to_string() const;

  auto operator<=>(const ElementSet& other) const = default;

 private:
  std::vector<std::string> members_;
};

}  // namespace gammaext

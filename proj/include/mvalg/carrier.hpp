#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvalg/element_set.hpp"

namespace mvalg {

/// Ordered list of distinct element labels. Index order is the canonical
/// iteration order for every scan in the library.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws InputError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  std::string render(ElementSet s) const;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace mvalg

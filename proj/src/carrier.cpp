#include "mvalg/carrier.hpp"

#include <unordered_set>

#include "mvalg/error.hpp"

namespace mvalg {

Carrier::Carrier(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InputError("carrier must have at least one element");
  if (names_.size() > kMaxElements) {
    throw InputError("carrier has " + std::to_string(names_.size()) + " elements; the limit is " +
                     std::to_string(kMaxElements));
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw InputError("duplicate element label '" + n + "'");
  }
}

std::optional<std::size_t> Carrier::find(std::string_view label) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t Carrier::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown element label '" + std::string(label) + "'");
}

std::string Carrier::render(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s) {
    if (!first) out += ",";
    first = false;
    out += i < names_.size() ? names_[i] : "#" + std::to_string(i);
  }
  return out + "}";
}

}  // namespace mvalg

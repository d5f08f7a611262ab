#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvalg/io.hpp"

namespace mvalg::corpus {

/// Q₂ on ("0", "1", "-1").
FiniteMultiring q2();
/// Krasner K on ("0", "1"): 1 + 1 = {0, 1}.
FiniteMultiring krasner();
/// Z/n as a multiring with singleton sums, labels "0".."n-1".
FiniteMultiring zn(std::size_t n);
/// {0, 1, -1} with 1 + 1 = {1, -1}: M of the trivial special group on Z₂.
FiniteMultiring weak_sign();

/// Every bundled structure, in a fixed order. Names are file stems.
const std::vector<StructureFile>& all();
std::optional<StructureFile> find(const std::string& name);

template <class T>
std::vector<std::pair<std::string, T>> of_type() {
  std::vector<std::pair<std::string, T>> out;
  for (const auto& f : all()) {
    if (const T* p = std::get_if<T>(&f.value)) out.push_back({f.name, *p});
  }
  return out;
}

}  // namespace mvalg::corpus

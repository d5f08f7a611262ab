#pragma once

#include <cstddef>
#include <vector>

#include "mvalg/element_set.hpp"

namespace mvalg::detail {

/// Depth-first search over maps {0..n-1} → {0..m-1}, assigning index k at
/// depth k and trying candidates in increasing order. `allowed[k]` restricts
/// the candidates for k; `consistent(f, k)` sees f[0..k] and must check every
/// constraint whose largest index is k. `emit(f)` returns false to stop.
/// With `injective`, images are pairwise distinct.
template <class Consistent, class Emit>
void backtrack_maps(std::size_t n, const std::vector<ElementSet>& allowed, bool injective, Consistent&& consistent,
                    Emit&& emit) {
  std::vector<std::size_t> f(n, 0);
  ElementSet used;
  bool stop = false;
  auto go = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      if (!emit(static_cast<const std::vector<std::size_t>&>(f))) stop = true;
      return;
    }
    for (std::size_t v : allowed[k]) {
      if (injective && used.contains(v)) continue;
      f[k] = v;
      if (!consistent(static_cast<const std::vector<std::size_t>&>(f), k)) continue;
      if (injective) used.insert(v);
      self(self, k + 1);
      if (injective) used.erase(v);
      if (stop) return;
    }
  };
  go(go, 0);
}

}  // namespace mvalg::detail

#include "stratsys/roots.hpp"

#include "stratsys/homology.hpp"

#include <algorithm>
#include <functional>

namespace stratsys {

long long tits_form(const Quiver& q, const DimVector& x) { return euler_form(q, x, x); }

bool is_real_root(const Quiver& q, const DimVector& x0) {
  if (!x0.is_positive() || tits_form(q, x0) != 1) return false;
  DimVector x = x0;
  const std::size_t n = q.vertex_count();
  while (x.total() > 1) {
    // (x, e_i) = 2 x_i - sum over arrows at i of the other end.
    bool moved = false;
    for (std::size_t i = 0; i < n && !moved; ++i) {
      long long pairing = 2 * x[i];
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const std::size_t s = q.source_index(a), t = q.target_index(a);
        if (s == i) pairing -= x[t];
        if (t == i) pairing -= x[s];
      }
      if (pairing > 0) {
        x[i] -= pairing;
        if (x[i] < 0) return false;
        moved = true;
      }
    }
    if (!moved) return false;
  }
  return true;
}

std::vector<DimVector> real_roots(const Quiver& q, long long total_cap) {
  const std::size_t n = q.vertex_count();
  std::vector<DimVector> out;
  DimVector cur(n);
  std::function<void(std::size_t, long long)> walk = [&](std::size_t v, long long left) {
    if (v == n) {
      if (is_real_root(q, cur)) out.push_back(cur);
      return;
    }
    for (long long a = 0; a <= left; ++a) {
      cur[v] = a;
      walk(v + 1, left - a);
    }
    cur[v] = 0;
  };
  walk(0, total_cap);
  std::stable_sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
    return a.total() != b.total() ? a.total() < b.total() : a < b;
  });
  return out;
}

std::optional<Representation> generic_exceptional(std::shared_ptr<const Quiver> q, const DimVector& x, int attempts) {
  unsigned long long seed = 0x9e3779b97f4a7c15ULL;
  for (std::size_t k = 0; k < x.size(); ++k) seed = seed * 1000003ULL + static_cast<unsigned long long>(x[k]);
  for (int t = 0; t < attempts; ++t) {
    Representation r = random_representation(q, x, seed + static_cast<unsigned long long>(t), 2 + t);
    if (is_exceptional(r)) return r;
  }
  return std::nullopt;
}

}  // namespace stratsys

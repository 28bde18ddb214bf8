#pragma once

// Dense-grid brute-force minimizer used as an independent oracle. Depends on
// nothing from the library under test.

#include <cstddef>
#include <functional>
#include <vector>

namespace grid_oracle {

struct GridMinimum {
  double value;
  std::vector<double> point;
};

/// Exhaustive minimum of f over the axis-aligned grid with `points_per_axis`
/// equally spaced samples per dimension (bounds included).
inline GridMinimum grid_minimum(const std::function<double(const std::vector<double>&)>& f,
                                const std::vector<double>& lower,
                                const std::vector<double>& upper,
                                std::size_t points_per_axis) {
  const std::size_t dim = lower.size();
  std::vector<std::size_t> index(dim, 0);
  std::vector<double> x(dim);
  GridMinimum best{0.0, {}};
  bool first = true;
  while (true) {
    for (std::size_t i = 0; i < dim; ++i) {
      const double t = static_cast<double>(index[i]) / static_cast<double>(points_per_axis - 1);
      x[i] = lower[i] + (upper[i] - lower[i]) * t;
    }
    const double v = f(x);
    if (first || v < best.value) {
      best.value = v;
      best.point = x;
      first = false;
    }
    std::size_t d = 0;
    while (d < dim && ++index[d] == points_per_axis) {
      index[d] = 0;
      ++d;
    }
    if (d == dim) break;
  }
  return best;
}

}  // namespace grid_oracle

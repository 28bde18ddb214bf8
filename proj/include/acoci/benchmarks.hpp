#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "acoci/types.hpp"

namespace acoci::benchmarks {

// Standard unconstrained test functions with documented optimizer points.
// Optimizer coordinates for the non-analytic optima (Hartmann, Shekel,
// Shubert, Schwefel) are frozen from a high-precision offline refinement so
// the registry self-check holds at 1e-6.

inline double sphere(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

inline double rosenbrock(const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = 1.0 - x[i];
    s += 100.0 * a * a + b * b;
  }
  return s;
}

inline double ackley(const std::vector<double>& x) {
  const double n = static_cast<double>(x.size());
  double sq = 0.0, cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * std::numbers::pi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

inline double rastrigin(const std::vector<double>& x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
  return s;
}

inline double griewank(const std::vector<double>& x) {
  double sum = 0.0, prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i] / 4000.0;
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sum - prod + 1.0;
}

inline double levy(const std::vector<double>& x) {
  const auto w = [&](std::size_t i) { return 1.0 + (x[i] - 1.0) / 4.0; };
  const double pi = std::numbers::pi;
  const double s0 = std::sin(pi * w(0));
  double s = s0 * s0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double wi = w(i);
    const double t = std::sin(pi * wi + 1.0);
    s += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * t * t);
  }
  const double wl = w(x.size() - 1);
  const double tl = std::sin(2.0 * pi * wl);
  return s + (wl - 1.0) * (wl - 1.0) * (1.0 + tl * tl);
}

inline double matyas(const std::vector<double>& x) {
  return 0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1];
}

inline double booth(const std::vector<double>& x) {
  const double a = x[0] + 2.0 * x[1] - 7.0;
  const double b = 2.0 * x[0] + x[1] - 5.0;
  return a * a + b * b;
}

inline double easom(const std::vector<double>& x) {
  const double pi = std::numbers::pi;
  const double dx = x[0] - pi, dy = x[1] - pi;
  return -std::cos(x[0]) * std::cos(x[1]) * std::exp(-(dx * dx + dy * dy));
}

inline double branin(const std::vector<double>& x) {
  const double pi = std::numbers::pi;
  const double b = 5.1 / (4.0 * pi * pi), c = 5.0 / pi;
  const double s = 10.0, t = 1.0 / (8.0 * pi);
  const double u = x[1] - b * x[0] * x[0] + c * x[0] - 6.0;
  return u * u + s * (1.0 - t) * std::cos(x[0]) + s;
}

inline double goldstein_price(const std::vector<double>& x) {
  const double x1 = x[0], x2 = x[1];
  const double u = x1 + x2 + 1.0;
  const double v = 2.0 * x1 - 3.0 * x2;
  const double f1 =
      1.0 + u * u * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
  const double f2 = 30.0 + v * v * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 -
                                    36.0 * x1 * x2 + 27.0 * x2 * x2);
  return f1 * f2;
}

inline double hartmann3(const std::vector<double>& x) {
  static constexpr std::array<double, 4> alpha{1.0, 1.2, 3.0, 3.2};
  static constexpr std::array<std::array<double, 3>, 4> A{
      {{3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}}};
  static constexpr std::array<std::array<double, 3>, 4> P{{{0.3689, 0.1170, 0.2673},
                                                           {0.4699, 0.4387, 0.7470},
                                                           {0.1091, 0.8732, 0.5547},
                                                           {0.0381, 0.5743, 0.8828}}};
  double s = 0.0;
  for (int j = 0; j < 4; ++j) {
    double e = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double d = x[i] - P[j][i];
      e += A[j][i] * d * d;
    }
    s += alpha[j] * std::exp(-e);
  }
  return -s;
}

inline double hartmann6(const std::vector<double>& x) {
  static constexpr std::array<double, 4> alpha{1.0, 1.2, 3.0, 3.2};
  static constexpr std::array<std::array<double, 6>, 4> A{
      {{10.0, 3.0, 17.0, 3.5, 1.7, 8.0},
       {0.05, 10.0, 17.0, 0.1, 8.0, 14.0},
       {3.0, 3.5, 1.7, 10.0, 17.0, 8.0},
       {17.0, 8.0, 0.05, 10.0, 0.1, 14.0}}};
  static constexpr std::array<std::array<double, 6>, 4> P{
      {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
       {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
       {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
       {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}}};
  double s = 0.0;
  for (int j = 0; j < 4; ++j) {
    double e = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double d = x[i] - P[j][i];
      e += A[j][i] * d * d;
    }
    s += alpha[j] * std::exp(-e);
  }
  return -s;
}

inline double six_hump_camel(const std::vector<double>& x) {
  const double x1 = x[0], x2 = x[1];
  const double x1s = x1 * x1, x2s = x2 * x2;
  return (4.0 - 2.1 * x1s + x1s * x1s / 3.0) * x1s + x1 * x2 + (-4.0 + 4.0 * x2s) * x2s;
}

namespace detail {
inline constexpr std::array<std::array<double, 4>, 10> kShekelA{
    {{4.0, 4.0, 4.0, 4.0},
     {1.0, 1.0, 1.0, 1.0},
     {8.0, 8.0, 8.0, 8.0},
     {6.0, 6.0, 6.0, 6.0},
     {3.0, 7.0, 3.0, 7.0},
     {2.0, 9.0, 2.0, 9.0},
     {5.0, 5.0, 3.0, 3.0},
     {8.0, 1.0, 8.0, 1.0},
     {6.0, 2.0, 6.0, 2.0},
     {7.0, 3.6, 7.0, 3.6}}};
inline constexpr std::array<double, 10> kShekelC{0.1, 0.2, 0.2, 0.4, 0.4,
                                                 0.6, 0.3, 0.7, 0.5, 0.5};
}  // namespace detail

template <int M>
inline double shekel(const std::vector<double>& x) {
  static_assert(M == 5 || M == 7 || M == 10);
  double s = 0.0;
  for (int j = 0; j < M; ++j) {
    double d = detail::kShekelC[j];
    for (int i = 0; i < 4; ++i) {
      const double t = x[i] - detail::kShekelA[j][i];
      d += t * t;
    }
    s += 1.0 / d;
  }
  return -s;
}

inline double shubert(const std::vector<double>& x) {
  double s1 = 0.0, s2 = 0.0;
  for (int j = 1; j <= 5; ++j) {
    s1 += j * std::cos((j + 1.0) * x[0] + j);
    s2 += j * std::cos((j + 1.0) * x[1] + j);
  }
  return s1 * s2;
}

inline double schwefel(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * std::sin(std::sqrt(std::abs(v)));
  return -s;
}

/// One registry row: the problem, its documented optimizer and optimum, and
/// (where identifiable from published comparative runs of this hybrid) the
/// reference best value. The association is inferred, not authoritative.
struct BenchmarkEntry {
  std::string name;
  Problem problem;
  double known_optimum;
  std::vector<double> optimizer;
  std::optional<double> reference_best;
  bool scalable = false;
  std::size_t default_dimension = 2;
};

namespace detail {

inline BenchmarkEntry make(const std::string& name, double (*fn)(const std::vector<double>&),
                           Bounds bounds, std::vector<double> optimizer, double optimum,
                           std::optional<double> reference_best = std::nullopt,
                           bool scalable = false) {
  const std::size_t dim = bounds.dimension();
  return BenchmarkEntry{name,
                        Problem(name, fn, {}, std::move(bounds), optimum),
                        optimum,
                        std::move(optimizer),
                        reference_best,
                        scalable,
                        dim};
}

inline constexpr double kSchwefelX = 420.96874657644923;
inline constexpr double kSchwefelPerDim = -418.9828872724338;

}  // namespace detail

/// Build one entry at an explicit dimension (scalable functions only accept
/// dimensions other than their default).
inline BenchmarkEntry make_entry(const std::string& name, std::size_t dimension) {
  using detail::make;
  const double pi = std::numbers::pi;
  if (name == "sphere")
    return make(name, sphere, Bounds(dimension, -100.0, 100.0),
                std::vector<double>(dimension, 0.0), 0.0, std::nullopt, true);
  if (name == "rosenbrock")
    return make(name, rosenbrock, Bounds(dimension, -30.0, 30.0),
                std::vector<double>(dimension, 1.0), 0.0, std::nullopt, true);
  if (name == "ackley")
    return make(name, ackley, Bounds(dimension, -32.768, 32.768),
                std::vector<double>(dimension, 0.0), 0.0, std::nullopt, true);
  if (name == "rastrigin")
    return make(name, rastrigin, Bounds(dimension, -5.12, 5.12),
                std::vector<double>(dimension, 0.0), 0.0, std::nullopt, true);
  if (name == "griewank")
    return make(name, griewank, Bounds(dimension, -600.0, 600.0),
                std::vector<double>(dimension, 0.0), 0.0, std::nullopt, true);
  if (name == "levy")
    return make(name, levy, Bounds(dimension, -10.0, 10.0), std::vector<double>(dimension, 1.0),
                0.0, std::nullopt, true);
  if (name == "schwefel")
    return make(name, schwefel, Bounds(dimension, -500.0, 500.0),
                std::vector<double>(dimension, detail::kSchwefelX),
                detail::kSchwefelPerDim * static_cast<double>(dimension), std::nullopt, true);

  const auto fixed = [&](BenchmarkEntry entry) {
    if (dimension != entry.default_dimension)
      throw ValidationError("benchmarks: '" + name + "' has fixed dimension " +
                            std::to_string(entry.default_dimension));
    return entry;
  };
  if (name == "matyas")
    return fixed(make(name, matyas, Bounds(2, -10.0, 10.0), {0.0, 0.0}, 0.0));
  if (name == "booth")
    return fixed(make(name, booth, Bounds(2, -10.0, 10.0), {1.0, 3.0}, 0.0));
  if (name == "easom")
    return fixed(make(name, easom, Bounds(2, -100.0, 100.0), {pi, pi}, -1.0));
  if (name == "branin")
    return fixed(make(name, branin, Bounds({-5.0, 0.0}, {10.0, 15.0}), {pi, 2.275},
                0.39788735772973816, 0.4033));
  if (name == "goldstein-price")
    return fixed(make(name, goldstein_price, Bounds(2, -2.0, 2.0), {0.0, -1.0}, 3.0, 3.1298));
  if (name == "hartmann-3")
    return fixed(make(name, hartmann3, Bounds(3, 0.0, 1.0),
                {0.1145888427934893, 0.5556488935123884, 0.8525469840071349},
                -3.862779787332662, -3.7948));
  if (name == "hartmann-6")
    return fixed(make(name, hartmann6, Bounds(6, 0.0, 1.0),
                {0.20168951392161702, 0.1500106851353169, 0.47687396356769685,
                 0.27533242464458585, 0.31165161010692516, 0.6573005294043179},
                -3.32236801141551, -2.882));
  if (name == "six-hump-camel")
    return fixed(make(name, six_hump_camel, Bounds({-3.0, -2.0}, {3.0, 2.0}),
                {0.08984200893527233, -0.712656403019058}, -1.0316284534898774, -1.0300));
  if (name == "shekel-5")
    return fixed(make(name, shekel<5>, Bounds(4, 0.0, 10.0),
                {4.000037150433155, 4.000133275333364, 4.000037152154564, 4.0001332774950615},
                -10.153199679058229));
  if (name == "shekel-7")
    return fixed(make(name, shekel<7>, Bounds(4, 0.0, 10.0),
                {4.00057291634447, 4.000689366344016, 3.999489708205183, 3.9996061602255644},
                -10.402940566818664));
  if (name == "shekel-10")
    return fixed(make(name, shekel<10>, Bounds(4, 0.0, 10.0),
                {4.000746530891488, 4.00059293099781, 3.9996633975896243, 3.999509801875715},
                -10.536409816692046));
  if (name == "shubert")
    return fixed(make(name, shubert, Bounds(2, -10.0, 10.0),
                {-1.425128429239448, -0.8003210989985915}, -186.73090883102387, -186.14));
  throw ValidationError("benchmarks: unknown function '" + name + "'");
}

/// All registered functions at their default dimensions (scalable ones at 30
/// except rosenbrock and levy, which default to 2).
inline const std::vector<BenchmarkEntry>& registry() {
  static const std::vector<BenchmarkEntry> entries = [] {
    std::vector<BenchmarkEntry> r;
    r.push_back(make_entry("sphere", 30));
    r.push_back(make_entry("rosenbrock", 2));
    r.push_back(make_entry("ackley", 30));
    r.push_back(make_entry("rastrigin", 30));
    r.push_back(make_entry("griewank", 30));
    r.push_back(make_entry("levy", 2));
    r.push_back(make_entry("matyas", 2));
    r.push_back(make_entry("booth", 2));
    r.push_back(make_entry("easom", 2));
    r.push_back(make_entry("branin", 2));
    r.push_back(make_entry("goldstein-price", 2));
    r.push_back(make_entry("hartmann-3", 3));
    r.push_back(make_entry("hartmann-6", 6));
    r.push_back(make_entry("six-hump-camel", 2));
    r.push_back(make_entry("shekel-5", 4));
    r.push_back(make_entry("shekel-7", 4));
    r.push_back(make_entry("shekel-10", 4));
    r.push_back(make_entry("shubert", 2));
    r.push_back(make_entry("schwefel", 30));
    return r;
  }();
  return entries;
}

inline const BenchmarkEntry& find_entry(const std::string& name) {
  for (const auto& e : registry())
    if (e.name == name) return e;
  throw ValidationError("benchmarks: unknown function '" + name + "'");
}

/// Evaluate a registered function. Scalable functions accept any positive
/// dimension; fixed ones require an exact match.
inline double evaluate(const std::string& name, const std::vector<double>& x) {
  const BenchmarkEntry& entry = find_entry(name);
  if (x.size() != entry.default_dimension) {
    if (!entry.scalable || x.empty())
      throw ValidationError("benchmarks: '" + name + "' expects dimension " +
                            std::to_string(entry.default_dimension) + ", got " +
                            std::to_string(x.size()));
  }
  return entry.problem.objective(x);
}

}  // namespace acoci::benchmarks

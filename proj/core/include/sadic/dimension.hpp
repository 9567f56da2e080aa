#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sadic/comboset.hpp"
#include "sadic/cylinder.hpp"
#include "sadic/rational.hpp"

namespace sadic {

/// sum_k N_k (1/s)^(k alpha) = 1, with N_k the number of k-digit words.
class MoranEquation {
 public:
  /// Throws InvalidEquation unless s >= 2, every k >= 1, every N_k >= 0 and
  /// sum N_k >= 1. Zero counts are dropped.
  MoranEquation(int s, std::map<int, long> counts);

  static MoranEquation from_alphabet(const ComboAlphabet& a);

  int base() const { return s_; }
  const std::map<int, long>& counts() const { return counts_; }
  long total() const;

  /// F(alpha) = sum_k N_k s^(-k alpha), strictly decreasing in alpha.
  double evaluate(double alpha) const;

 private:
  int s_;
  std::map<int, long> counts_;
};

/// A root written in elementary functions, with its double value.
struct ClosedForm {
  std::string expression;
  double value = 0.0;
};

struct DimensionResult {
  double alpha = 0.0;
  double residual = 0.0;  // |F(alpha) - 1|
  double lo = 0.0;        // final bracket, F(lo) >= 1 >= F(hi)
  double hi = 0.0;
  std::optional<ClosedForm> closed_form;
};

inline constexpr double kDefaultTolerance = 1e-12;

/// Bisection on F over [0, 1], widened upward while F(hi) > 1, until the
/// bracket is no wider than `tol`. One word gives 0 exactly; a single length
/// k holding all s^k words gives 1 exactly.
DimensionResult moran_solve(const MoranEquation& eq, double tol = kDefaultTolerance);

/// Closed form in t = s^-alpha when the equation is linear, quadratic with
/// only N_1 and N_2, or a single power N_k t^k = 1.
std::optional<ClosedForm> closed_form(const MoranEquation& eq);

/// Dimension of S_(s,u): one word per admissible block c, of length c.
DimensionResult dim_S(int s, int u, double tol = kDefaultTolerance);

/// Dimension of the tilde set: one 1-digit word and s-1 words of each length
/// 2..s-1.
DimensionResult dim_tilde(int s, double tol = kDefaultTolerance);

DimensionResult dim_alphabet(const ComboAlphabet& a, double tol = kDefaultTolerance);

struct ScaleCount {
  int exponent = 0;  // epsilon = s^-exponent
  std::size_t count = 0;
};

struct BoxCountOptions {
  /// Coarsest scales left out of the fit when at least `drop_threshold`
  /// scales are supplied.
  std::size_t drop_coarsest = 2;
  std::size_t drop_threshold = 5;
};

struct BoxCountResult {
  double slope = 0.0;
  std::vector<ScaleCount> counts;  // one per scale, in the order given
  std::size_t fitted = 0;          // scales used by the fit
};

/// Counts the half-open boxes [i eps, (i+1) eps) meeting any hull, for each
/// eps = s^-j, and fits log N against log(1/eps) by least squares.
/// Throws RangeError with fewer than three scales, or when a scale is finer
/// than the hulls (j > hull_depth).
BoxCountResult box_count_estimate(std::span<const Hull> hulls, int s, std::span<const int> exponents,
                                  std::size_t hull_depth, const BoxCountOptions& options = {});

/// Number of boxes of side s^-exponent meeting the union of the hulls.
std::size_t count_boxes(std::span<const Hull> hulls, int s, int exponent);

/// Least-squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

}  // namespace sadic

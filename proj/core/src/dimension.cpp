#include "sadic/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sadic/error.hpp"
#include "sadic/parallel.hpp"

namespace sadic {
namespace {

std::string log_base(int s, const std::string& arg) { return "log_" + std::to_string(s) + "(" + arg + ")"; }

bool single_power(const MoranEquation& eq, int& k, long& n) {
  if (eq.counts().size() != 1) return false;
  k = eq.counts().begin()->first;
  n = eq.counts().begin()->second;
  return true;
}

// s^k when it fits in a long, else -1.
long small_power(int s, int k) {
  long p = 1;
  for (int i = 0; i < k; ++i) {
    if (p > (1L << 40) / s) return -1;
    p *= s;
  }
  return p;
}

}  // namespace

MoranEquation::MoranEquation(int s, std::map<int, long> counts) : s_(s) {
  if (s_ < 2) throw InvalidEquation("base must be at least 2, got " + std::to_string(s_));
  for (const auto& [k, n] : counts) {
    if (k < 1) throw InvalidEquation("word length " + std::to_string(k) + " must be at least 1");
    if (n < 0) throw InvalidEquation("count for length " + std::to_string(k) + " is negative");
    if (n > 0) counts_[k] = n;
  }
  if (counts_.empty()) throw InvalidEquation("all counts are zero");
}

MoranEquation MoranEquation::from_alphabet(const ComboAlphabet& a) {
  return MoranEquation(a.base(), a.length_counts());
}

long MoranEquation::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0L,
                         [](long acc, const auto& kv) { return acc + kv.second; });
}

double MoranEquation::evaluate(double alpha) const {
  const double ls = std::log(static_cast<double>(s_));
  double f = 0.0;
  for (const auto& [k, n] : counts_) f += static_cast<double>(n) * std::exp(-static_cast<double>(k) * alpha * ls);
  return f;
}

std::optional<ClosedForm> closed_form(const MoranEquation& eq) {
  const int s = eq.base();
  const double ls = std::log(static_cast<double>(s));
  if (eq.total() == 1) return ClosedForm{"0", 0.0};

  int k = 0;
  long n = 0;
  if (single_power(eq, k, n)) {
    if (n == small_power(s, k)) return ClosedForm{"1", 1.0};
    const std::string base = log_base(s, std::to_string(n));
    const double v = std::log(static_cast<double>(n)) / ls / k;
    return ClosedForm{k == 1 ? base : "(1/" + std::to_string(k) + ")*" + base, v};
  }

  const auto& c = eq.counts();
  if (c.size() == 2 && c.count(1) && c.count(2)) {
    // N1 t + N2 t^2 = 1  =>  1/t = 2 N2 / (sqrt(N1^2 + 4 N2) - N1)
    const long a = c.at(1);
    const long b = c.at(2);
    const long disc = a * a + 4 * b;
    const long r = std::lround(std::sqrt(static_cast<double>(disc)));
    const double inv_t = 2.0 * static_cast<double>(b) / (std::sqrt(static_cast<double>(disc)) - static_cast<double>(a));
    const double v = std::log(inv_t) / ls;
    if (r * r == disc) {
      long p = 2 * b;
      long q = r - a;
      const long g = std::gcd(p, q);
      p /= g;
      q /= g;
      return ClosedForm{log_base(s, q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q)), v};
    }
    std::ostringstream arg;
    arg << 2 * b << "/(sqrt(" << disc << ")" << (a != 0 ? "-" + std::to_string(a) : "") << ")";
    return ClosedForm{log_base(s, arg.str()), v};
  }
  return std::nullopt;
}

DimensionResult moran_solve(const MoranEquation& eq, double tol) {
  if (!(tol > 0.0)) throw RangeError("tolerance must be positive");
  DimensionResult r;
  r.closed_form = closed_form(eq);

  int k = 0;
  long n = 0;
  if (eq.total() == 1) return r;  // alpha = 0, F(0) = 1
  if (single_power(eq, k, n) && n == small_power(eq.base(), k)) {
    r.alpha = r.lo = r.hi = 1.0;
    r.residual = std::abs(eq.evaluate(1.0) - 1.0);
    return r;
  }

  double lo = 0.0;
  double hi = 1.0;
  while (eq.evaluate(hi) > 1.0) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (eq.evaluate(mid) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  r.lo = lo;
  r.hi = hi;
  r.alpha = 0.5 * (lo + hi);
  r.residual = std::abs(eq.evaluate(r.alpha) - 1.0);
  return r;
}

DimensionResult dim_S(int s, int u, double tol) {
  check_set_params(s, u);
  std::map<int, long> counts;
  for (int c = 1; c < s; ++c)
    if (c != u) counts[c] = 1;
  return moran_solve(MoranEquation(s, std::move(counts)), tol);
}

DimensionResult dim_tilde(int s, double tol) {
  if (s < 3) throw RangeError("s must be at least 3, got " + std::to_string(s));
  std::map<int, long> counts{{1, 1}};
  for (int k = 2; k <= s - 1; ++k) counts[k] = s - 1;
  return moran_solve(MoranEquation(s, std::move(counts)), tol);
}

DimensionResult dim_alphabet(const ComboAlphabet& a, double tol) {
  return moran_solve(MoranEquation::from_alphabet(a), tol);
}

std::size_t count_boxes(std::span<const Hull> hulls, int s, int exponent) {
  const Rational scale = Rational::power(s, exponent);
  std::vector<std::pair<std::int64_t, std::int64_t>> spans;
  spans.reserve(hulls.size());
  for (const Hull& h : hulls) spans.emplace_back((h.lower * scale).floor_int64(), (h.upper * scale).floor_int64());
  std::sort(spans.begin(), spans.end());
  std::size_t count = 0;
  std::optional<std::int64_t> last;  // highest box index already counted
  for (const auto& [a, b] : spans) {
    const std::int64_t from = last ? std::max(a, *last + 1) : a;
    if (b >= from) {
      count += static_cast<std::size_t>(b - from + 1);
      last = b;
    }
  }
  return count;
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

BoxCountResult box_count_estimate(std::span<const Hull> hulls, int s, std::span<const int> exponents,
                                  std::size_t hull_depth, const BoxCountOptions& options) {
  if (s < 2) throw RangeError("base must be at least 2");
  if (exponents.size() < 3) throw RangeError("box counting needs at least 3 scales");
  if (hulls.empty()) throw RangeError("box counting needs at least one hull");
  for (int j : exponents) {
    if (j < 0) throw RangeError("scale exponent must be nonnegative");
    if (static_cast<std::size_t>(j) > hull_depth)
      throw RangeError("scale s^-" + std::to_string(j) + " is finer than the hull depth " + std::to_string(hull_depth));
  }
  std::vector<int> order(exponents.begin(), exponents.end());
  std::sort(order.begin(), order.end());
  if (std::adjacent_find(order.begin(), order.end()) != order.end())
    throw RangeError("box counting scales must be distinct");

  BoxCountResult r;
  r.counts.resize(exponents.size());
  parallel_for(exponents.size(), [&](std::size_t i) { r.counts[i] = {exponents[i], count_boxes(hulls, s, exponents[i])}; });

  const std::size_t drop = exponents.size() >= options.drop_threshold ? options.drop_coarsest : 0;
  std::vector<double> x, y;
  const double ls = std::log(static_cast<double>(s));
  for (const auto& sc : r.counts) {
    // exponents are ranked coarse-to-fine by value; skip the `drop` smallest.
    const auto rank = static_cast<std::size_t>(std::lower_bound(order.begin(), order.end(), sc.exponent) - order.begin());
    if (rank < drop) continue;
    x.push_back(sc.exponent * ls);
    y.push_back(std::log(static_cast<double>(sc.count)));
  }
  r.fitted = x.size();
  r.slope = least_squares_slope(x, y);
  return r;
}

}  // namespace sadic

#pragma once

// Test-only reference computations. These deliberately avoid the library's
// own evaluation paths: plain digit sums, brute-force enumeration and Newton
// iteration on polynomials.

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sadic/rational.hpp"

namespace oracle {

/// sum_{i<n} d_i s^-(i+1), evaluated term by term.
inline sadic::Rational partial_sum(int s, const std::function<int(std::size_t)>& digit, std::size_t n) {
  sadic::Rational sum;
  sadic::Rational w(1);
  for (std::size_t i = 0; i < n; ++i) {
    w /= sadic::Rational(s);
    sum += sadic::Rational(digit(i)) * w;
  }
  return sum;
}

/// Every digit word of length <= max_len that spells a whole number of blocks
/// u^(c-1) c with c in 1..s-1, c != u.
inline std::set<std::vector<int>> member_words(int s, int u, std::size_t max_len) {
  std::set<std::vector<int>> out{{}};
  std::vector<std::vector<int>> frontier{{}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      for (int c = 1; c < s; ++c) {
        if (c == u || w.size() + static_cast<std::size_t>(c) > max_len) continue;
        auto v = w;
        v.insert(v.end(), static_cast<std::size_t>(c - 1), u);
        v.push_back(c);
        if (out.insert(v).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

/// Root in (0, 1) of sum_k n_k t^k = 1 by Newton's method from t = 1.
inline double polynomial_root(const std::map<int, long>& counts) {
  double t = 1.0;
  for (int it = 0; it < 200; ++it) {
    double f = -1.0;
    double df = 0.0;
    for (const auto& [k, n] : counts) {
      f += static_cast<double>(n) * std::pow(t, k);
      df += static_cast<double>(n) * k * std::pow(t, k - 1);
    }
    const double step = f / df;
    t -= step;
    if (std::abs(step) < 1e-16) break;
  }
  return t;
}

inline double dimension_from_root(double t, int s) { return -std::log(t) / std::log(static_cast<double>(s)); }

/// Number of word sequences with total length exactly n, for word lengths
/// given as a histogram.
inline long sequences_of_length(const std::map<int, long>& lengths, int n) {
  std::vector<long> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (const auto& [k, count] : lengths)
      if (k <= i) ways[static_cast<std::size_t>(i)] += count * ways[static_cast<std::size_t>(i - k)];
  return ways[static_cast<std::size_t>(n)];
}

/// Random admissible block list for S_(s,u).
inline std::vector<int> random_blocks(std::mt19937_64& rng, int s, int u, std::size_t len) {
  std::vector<int> alphabet;
  for (int c = 1; c < s; ++c)
    if (c != u) alphabet.push_back(c);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<int> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(alphabet[pick(rng)]);
  return out;
}

}  // namespace oracle

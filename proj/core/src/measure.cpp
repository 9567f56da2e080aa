#include "sadic/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sadic/error.hpp"
#include "sadic/parallel.hpp"

namespace sadic {
namespace {

Digits admissible(int s, int u) {
  Digits out;
  for (int c = 1; c < s; ++c)
    if (c != u) out.push_back(c);
  return out;
}

}  // namespace

Rational sigma(int s, int u) {
  check_set_params(s, u);
  Rational sum;
  for (int c : admissible(s, u)) sum += Rational::power(s, -c);
  return sum;
}

double stage_bit_estimate(int s, int u, std::size_t k) {
  check_set_params(s, u);
  const Digits alphabet = admissible(s, u);
  const auto m = static_cast<double>(alphabet.size());
  double block_sum = 0.0;
  for (int c : alphabet) block_sum += c;
  const double log2s = std::log2(static_cast<double>(s));
  const auto kd = static_cast<double>(k);
  // Each hull carries two endpoints with denominators near s^(C + s) where C
  // is the base's digit length; summed over all m^k bases C totals
  // k m^(k-1) sum(c).
  const double count = std::pow(m, kd);
  const double digit_total = kd * std::pow(m, kd - 1.0) * block_sum;
  return 2.0 * log2s * (digit_total + count * s);
}

CoverStage cover_stage(int s, int u, std::size_t k, std::size_t bit_budget) {
  check_set_params(s, u);
  if (k < 1) throw RangeError("stage rank k must be at least 1");
  const double estimate = stage_bit_estimate(s, u, k);
  if (estimate > static_cast<double>(bit_budget))
    throw ResourceError("stage k=" + std::to_string(k) + " needs about " + std::to_string(static_cast<long long>(estimate)) +
                        " denominator bits, over the budget of " + std::to_string(bit_budget));

  const Digits alphabet = admissible(s, u);
  CoverStage st;
  st.s = s;
  st.u = u;
  st.k = k;

  // Base number i written in radix m picks the blocks, most significant first.
  const std::size_t m = alphabet.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= m;
  st.cylinders.resize(count);
  parallel_for(count, [&](std::size_t index) {
    Digits base(k);
    for (std::size_t i = k, rest = index; i-- > 0; rest /= m) base[i] = alphabet[rest % m];
    st.cylinders[index] = make_cylinder(s, u, base);
  });
  for (const auto& c : st.cylinders) st.total_length += c.diameter();

  Rational ratio = sigma(s, u);
  Rational closed = set_diameter(s, u);
  for (std::size_t i = 0; i < k; ++i) closed *= ratio;
  st.closed_form = closed;
  if (!st.consistent())
    throw std::logic_error("stage length " + st.total_length.str() + " differs from sigma^k d0 = " + closed.str());
  return st;
}

std::vector<StageMeasure> measure_decay_report(int s, int u, std::size_t k_max, std::size_t bit_budget) {
  if (k_max < 1) throw RangeError("k_max must be at least 1");
  std::vector<StageMeasure> out;
  for (std::size_t k = 1; k <= k_max; ++k) out.push_back({k, cover_stage(s, u, k, bit_budget).total_length});
  return out;
}

}  // namespace sadic

#include "sadic/normality.hpp"

#include <cmath>
#include <stdexcept>

#include "sadic/error.hpp"

namespace sadic {

Rational FrequencyProfile::frequency(int digit) const {
  return Rational(static_cast<long>(counts.at(static_cast<std::size_t>(digit))), static_cast<long>(k));
}

std::vector<Rational> FrequencyProfile::frequencies() const {
  std::vector<Rational> out;
  for (int i = 0; i < s; ++i) out.push_back(frequency(i));
  return out;
}

FrequencyProfile digit_frequencies(const DigitString& d, std::size_t k) {
  if (k < 1) throw RangeError("prefix length k must be at least 1");
  const auto& pre = d.preperiod();
  if (d.is_finite() && pre.size() < k)
    throw RangeError("finite word has " + std::to_string(pre.size()) + " digits, fewer than k=" + std::to_string(k));
  FrequencyProfile p;
  p.s = d.base();
  p.k = k;
  p.counts.assign(static_cast<std::size_t>(p.s), 0);
  const std::size_t head = std::min(k, pre.size());
  for (std::size_t i = 0; i < head; ++i) ++p.counts[static_cast<std::size_t>(pre[i])];
  if (k > head) {
    const auto& per = *d.period();
    const std::size_t rest = k - head;
    const std::size_t full = rest / per.size();
    for (int digit : per) p.counts[static_cast<std::size_t>(digit)] += full;
    for (std::size_t i = 0; i < rest % per.size(); ++i) ++p.counts[static_cast<std::size_t>(per[i])];
  }
  return p;
}

Rational structural_zero_frequency(int s) {
  if (s < 3) throw RangeError("s must be at least 3, got " + std::to_string(s));
  return Rational(static_cast<long>(s - 2) * (s - 1), 2L * s);
}

NormalVerdict normal_candidate_exists(int s) {
  NormalVerdict v;
  v.s = s;
  v.zero_frequency = structural_zero_frequency(s);
  v.uniform = Rational(1, s);
  v.exists = v.zero_frequency == v.uniform;
  if (v.exists) {
    v.explanation = "forced zero frequency (s-2)(s-1)/(2s) = " + v.zero_frequency.str() + " equals 1/s; normal numbers exist in S_(" +
                    std::to_string(s) + ",0)";
  } else {
    v.explanation = "forced zero frequency (s-2)(s-1)/(2s) = " + v.zero_frequency.str() + " differs from 1/s = " +
                    v.uniform.str() + "; no element of the union of S_(" + std::to_string(s) + ",u) is normal";
  }
  return v;
}

NormalityBounds normality_dimension_bounds() {
  NormalityBounds b;
  b.lower = moran_solve(MoranEquation(3, {{3, 2}}));
  b.upper = dim_S(3, 0);
  const double l3 = std::log(3.0);
  b.lower_exact = {"(1/3)*log_3(2)", std::log(2.0) / l3 / 3.0};
  b.upper_exact = {"log_3(2/(sqrt(5)-1))", std::log(2.0 / (std::sqrt(5.0) - 1.0)) / l3};
  if (std::abs(b.lower.alpha - b.lower_exact.value) > 1e-9 || std::abs(b.upper.alpha - b.upper_exact.value) > 1e-9)
    throw std::logic_error("normality dimension bounds disagree with their closed forms");
  return b;
}

PrefixDecode decode_prefix(const DigitString& d, int u, std::size_t k) {
  const int s = d.base();
  check_set_params(s, u);
  if (d.is_finite() && d.preperiod().size() < k)
    throw RangeError("finite word has " + std::to_string(d.preperiod().size()) + " digits, fewer than k=" + std::to_string(k));
  PrefixDecode out;
  std::size_t pos = 0;
  while (pos < k) {
    std::size_t run = 0;
    while (pos < k && d.at(pos) == u) {
      ++run;
      ++pos;
    }
    if (pos == k) {
      if (static_cast<long>(run) > s - 2)
        throw NotAMember(pos, "run of " + std::to_string(run) + " copies of " + std::to_string(u) + " cannot close a block");
      out.open_run = run;
      break;
    }
    const int t = d.at(pos);
    if (t == 0) throw NotAMember(pos, "digit 0 cannot close a block");
    if (t != static_cast<int>(run) + 1)
      throw NotAMember(pos, "block closed by " + std::to_string(t) + " after " + std::to_string(run) + " copies of " +
                                std::to_string(u) + " (expected " + std::to_string(run + 1) + ")");
    out.blocks.push_back(t);
    ++pos;
    out.consumed = pos;
  }
  return out;
}

IdentityResidual structural_identity_residual(const DigitString& d, int u, std::size_t k) {
  const PrefixDecode dec = decode_prefix(d, u, k);
  const FrequencyProfile p = digit_frequencies(d, k);
  const int s = d.base();
  IdentityResidual r;
  r.bound = s - 2;
  long implied = 0;
  for (int c = 2; c < s; ++c)
    if (c != u) implied += static_cast<long>(c - 1) * static_cast<long>(p.counts[static_cast<std::size_t>(c)]);
  r.residual = static_cast<long>(p.counts[static_cast<std::size_t>(u)]) - implied;
  r.on_boundary = dec.open_run == 0;
  if (!r.on_boundary)
    r.note = "k=" + std::to_string(k) + " falls inside a block; residual counts the " + std::to_string(dec.open_run) +
             " unmatched filler digits (at most s-2 = " + std::to_string(r.bound) + ")";
  return r;
}

}  // namespace sadic

#include "sadic/audit.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "sadic/error.hpp"

namespace sadic::audit {
namespace {

Digits admissible(int s, int u) {
  Digits out;
  for (int c = 1; c < s; ++c)
    if (c != u) out.push_back(c);
  return out;
}

// Value of the finite digit word (zero tail).
Rational finite_value(int s, const Digits& w) { return digits_to_rational(DigitString(s, w)); }

struct BlockWalk {
  int s;
  Digits alphabet;
  std::vector<Rational> word_values;  // per alphabet entry
  std::vector<Rational> tail_values;  // (c)^inf block tails
  std::size_t base_digits;

  // Visits prefix extensions depth-first; `visit` returns whether to descend.
  template <typename Visit>
  void walk(const Rational& prefix, std::size_t extra, std::size_t max_extra, Visit& visit) const {
    if (!visit(prefix, extra)) return;
    const Rational scale = Rational::power(s, -static_cast<long>(base_digits + extra));
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      const auto c = static_cast<std::size_t>(alphabet[i]);
      if (extra + c > max_extra) continue;
      walk(prefix + scale * word_values[i], extra + c, max_extra, visit);
    }
  }
};

BlockWalk make_walk(int s, int u, std::span<const int> base) {
  check_set_params(s, u);
  check_blocks(s, u, base);
  BlockWalk w{s, admissible(s, u), {}, {}, 0};
  for (int c : w.alphabet) {
    w.word_values.push_back(finite_value(s, block_word(u, c)));
    w.tail_values.push_back(digits_to_rational(block_encode(BlockSequence(s, u, {}, Digits{c}))));
  }
  w.base_digits = static_cast<std::size_t>(std::accumulate(base.begin(), base.end(), 0L));
  return w;
}

Rational base_prefix(int s, int u, std::span<const int> base) {
  return digits_to_rational(block_encode(BlockSequence(s, u, Digits(base.begin(), base.end()))));
}

}  // namespace

Bounds cylinder_bounds(int s, int u, std::span<const int> base, std::size_t depth) {
  const BlockWalk w = make_walk(s, u, base);
  Bounds b;
  auto visit = [&](const Rational& prefix, std::size_t extra) {
    if (extra < depth) return true;
    const Rational x = prefix + Rational::power(s, -static_cast<long>(w.base_digits + extra)) * w.tail_values.front();
    if (b.samples == 0 || x < b.min) b.min = x;
    if (b.samples == 0 || x > b.max) b.max = x;
    ++b.samples;
    return false;
  };
  w.walk(base_prefix(s, u, base), 0, SIZE_MAX, visit);
  return b;
}

std::vector<Rational> cylinder_elements(int s, int u, std::span<const int> base, std::size_t depth) {
  const BlockWalk w = make_walk(s, u, base);
  std::vector<Rational> out;
  auto visit = [&](const Rational& prefix, std::size_t extra) {
    const Rational scale = Rational::power(s, -static_cast<long>(w.base_digits + extra));
    for (const Rational& t : w.tail_values) out.push_back(prefix + scale * t);
    return true;
  };
  w.walk(base_prefix(s, u, base), 0, depth, visit);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ComboAudit audit_combo_extrema(const ComboAlphabet& a, const Rational& inf, const Rational& sup, std::size_t depth) {
  const int s = a.base();
  const std::size_t m = a.size();
  std::vector<Rational> values, tails;
  for (const auto& word : a.words()) {
    values.push_back(finite_value(s, word));
    tails.push_back(digits_to_rational(DigitString(s, {}, word)));
  }

  ComboAudit r;
  auto record = [&](const Rational& x, const std::string& where) {
    if (r.samples == 0 || x < r.min) r.min = x;
    if (r.samples == 0 || x > r.max) r.max = x;
    ++r.samples;
    if (r.ok && (x < inf || x > sup)) {
      r.ok = false;
      r.violation = where + " gives " + x.str() + " outside [" + inf.str() + ", " + sup.str() + "]";
    }
  };

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Digits period = a.word(i);
      period.insert(period.end(), a.word(j).begin(), a.word(j).end());
      record(digits_to_rational(DigitString(s, {}, period)),
             "periodic pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  // Depth-first over word sequences; close each one that reaches `depth`.
  std::vector<std::pair<Rational, std::size_t>> stack{{Rational(0), 0}};
  while (!stack.empty()) {
    auto [prefix, digits] = std::move(stack.back());
    stack.pop_back();
    const Rational scale = Rational::power(s, -static_cast<long>(digits));
    if (digits >= depth) {
      for (std::size_t t = 0; t < m; ++t) record(prefix + scale * tails[t], "word sequence closed by tail " + std::to_string(t));
      continue;
    }
    for (std::size_t i = 0; i < m; ++i) stack.emplace_back(prefix + scale * values[i], digits + a.word(i).size());
  }

  const Rational slack = (sup - inf) * Rational::power(s, -static_cast<long>(depth));
  if (r.ok && r.min - inf > slack) {
    r.ok = false;
    r.violation = "no sample within " + slack.str() + " of the claimed inf " + inf.str();
  }
  if (r.ok && sup - r.max > slack) {
    r.ok = false;
    r.violation = "no sample within " + slack.str() + " of the claimed sup " + sup.str();
  }
  return r;
}

}  // namespace sadic::audit

#include "sadic/digits.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sadic/error.hpp"

namespace sadic {
namespace {

void check_digits(int base, const Digits& digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= base)
      throw InvalidDigit("digit " + std::to_string(digits[i]) + " at position " + std::to_string(i) +
                         " is outside 0.." + std::to_string(base - 1));
  }
}

// Smallest p dividing v.size() such that v is a repetition of its first p entries.
Digits minimal_period(const Digits& v) {
  const std::size_t n = v.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = v[i] == v[i - p];
    if (ok) return Digits(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return v;
}

// Shortest (preperiod, period) pair for the same sequence; no twin handling.
void reduce(Digits& pre, Digits& per) {
  per = minimal_period(per);
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
  }
}

// Integer whose base-s digits are `digits`, most significant first.
mpz_class digits_as_integer(int s, const Digits& digits) {
  mpz_class n = 0;
  for (int d : digits) n = n * s + d;
  return n;
}

mpz_class pow_z(int s, std::size_t e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(s), e);
  return p;
}

// mpq arithmetic requires canonical operands.
mpq_class frac(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

DigitString::DigitString(int base, Digits preperiod, std::optional<Digits> period)
    : base_(base), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (base_ < 2) throw RangeError("base must be at least 2, got " + std::to_string(base_));
  check_digits(base_, preperiod_);
  if (period_) {
    if (period_->empty()) throw RangeError("period must be nonempty");
    check_digits(base_, *period_);
  }
}

int DigitString::at(std::size_t index) const {
  if (index < preperiod_.size()) return preperiod_[index];
  if (!period_)
    throw RangeError("finite digit word of length " + std::to_string(preperiod_.size()) +
                     " has no digit " + std::to_string(index));
  return (*period_)[(index - preperiod_.size()) % period_->size()];
}

Digits DigitString::prefix(std::size_t n) const {
  Digits out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

DigitString DigitString::canonical() const {
  Digits pre = preperiod_;
  if (!period_) {
    while (!pre.empty() && pre.back() == 0) pre.pop_back();
    return DigitString(base_, std::move(pre));
  }
  Digits per = *period_;
  reduce(pre, per);
  if (per.size() == 1 && per[0] == 0) {
    while (!pre.empty() && pre.back() == 0) pre.pop_back();
    return DigitString(base_, std::move(pre));
  }
  if (per.size() == 1 && per[0] == base_ - 1 && !pre.empty()) {
    // reduce() guarantees pre.back() != s-1 here.
    pre.back() += 1;
    return DigitString(base_, std::move(pre));
  }
  return DigitString(base_, std::move(pre), std::move(per));
}

std::optional<DigitString> DigitString::twin() const {
  DigitString c = canonical();
  if (!c.is_finite() || c.preperiod_.empty()) return std::nullopt;
  Digits pre = c.preperiod_;
  pre.back() -= 1;
  return DigitString(base_, std::move(pre), Digits{base_ - 1});
}

void check_set_params(int s, int u) {
  if (s < 3) throw RangeError("s must be at least 3, got " + std::to_string(s));
  if (u < 0 || u >= s)
    throw RangeError("u must lie in 0.." + std::to_string(s - 1) + ", got " + std::to_string(u));
}

void check_blocks(int s, int u, std::span<const int> blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const int c = blocks[i];
    if (c < 1 || c >= s || c == u)
      throw InvalidBase("block " + std::to_string(c) + " at index " + std::to_string(i) +
                        " is not in {1.." + std::to_string(s - 1) + "} \\ {" + std::to_string(u) + "}");
  }
}

BlockSequence::BlockSequence(int base, int marker, Digits blocks, std::optional<Digits> tail)
    : base_(base), marker_(marker), blocks_(std::move(blocks)), tail_(std::move(tail)) {
  check_set_params(base_, marker_);
  check_blocks(base_, marker_, blocks_);
  if (tail_) {
    if (tail_->empty()) throw InvalidBase("block tail must be nonempty");
    check_blocks(base_, marker_, *tail_);
  }
}

BlockSequence BlockSequence::canonical() const {
  if (!tail_) return *this;
  Digits pre = blocks_;
  Digits per = *tail_;
  reduce(pre, per);
  return BlockSequence(base_, marker_, std::move(pre), std::move(per));
}

bool operator==(const BlockSequence& a, const BlockSequence& b) {
  if (a.base_ != b.base_ || a.marker_ != b.marker_) return false;
  const BlockSequence ca = a.canonical();
  const BlockSequence cb = b.canonical();
  return ca.blocks_ == cb.blocks_ && ca.tail_ == cb.tail_;
}

Digits block_word(int u, int c) {
  Digits w(static_cast<std::size_t>(c - 1), u);
  w.push_back(c);
  return w;
}

Rational digits_to_rational(const DigitString& d) {
  const int s = d.base();
  const auto& pre = d.preperiod();
  mpq_class value = frac(digits_as_integer(s, pre), pow_z(s, pre.size()));
  if (d.period()) {
    const auto& per = *d.period();
    // s^-p * P / (s^q - 1), P the period read as an integer.
    mpz_class den = pow_z(s, pre.size()) * (pow_z(s, per.size()) - 1);
    value += frac(digits_as_integer(s, per), den);
  }
  return Rational(value);
}

DigitString rational_to_digits(const Rational& x, int s, std::size_t n) {
  if (s < 2) throw RangeError("base must be at least 2");
  if (x < Rational(0) || x > Rational(1))
    throw RangeError("value " + x.str() + " is outside [0, 1]");
  if (x == Rational(1)) return DigitString(s, Digits(n, s - 1));
  Digits out;
  out.reserve(n);
  mpz_class num = x.raw().get_num();
  const mpz_class& den = x.raw().get_den();
  for (std::size_t i = 0; i < n; ++i) {
    num *= s;
    mpz_class q;
    mpz_fdiv_qr(q.get_mpz_t(), num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.push_back(static_cast<int>(q.get_si()));
  }
  return DigitString(s, std::move(out));
}

DigitString rational_to_expansion(const Rational& x, int s, std::size_t max_digits) {
  if (s < 2) throw RangeError("base must be at least 2");
  if (x < Rational(0) || x > Rational(1))
    throw RangeError("value " + x.str() + " is outside [0, 1]");
  if (x == Rational(1)) return DigitString(s, {}, Digits{s - 1});
  std::map<mpz_class, std::size_t> seen;
  Digits out;
  mpz_class rem = x.raw().get_num();
  const mpz_class& den = x.raw().get_den();
  while (rem != 0) {
    auto [it, inserted] = seen.emplace(rem, out.size());
    if (!inserted) {
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      Digits pre(out.begin(), out.begin() + start);
      Digits per(out.begin() + start, out.end());
      return DigitString(s, std::move(pre), std::move(per)).canonical();
    }
    if (out.size() >= max_digits)
      throw ResourceError("expansion longer than " + std::to_string(max_digits) + " digits");
    rem *= s;
    mpz_class q;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t());
    out.push_back(static_cast<int>(q.get_si()));
  }
  return DigitString(s, std::move(out)).canonical();
}

DigitString block_encode(const BlockSequence& b) {
  const int u = b.marker();
  Digits pre;
  for (int c : b.blocks()) {
    const Digits w = block_word(u, c);
    pre.insert(pre.end(), w.begin(), w.end());
  }
  std::optional<Digits> per;
  if (b.tail()) {
    per.emplace();
    for (int c : *b.tail()) {
      const Digits w = block_word(u, c);
      per->insert(per->end(), w.begin(), w.end());
    }
  }
  return DigitString(b.base(), std::move(pre), std::move(per));
}

BlockSequence block_decode(const DigitString& d, int u) {
  const int s = d.base();
  check_set_params(s, u);
  const std::size_t p = d.preperiod().size();
  const std::size_t q = d.period() ? d.period()->size() : 0;
  const std::size_t finite_len = p;

  Digits blocks;
  std::map<std::size_t, std::size_t> phase_to_block;  // period phase -> block index
  std::size_t pos = 0;
  while (true) {
    if (d.is_finite() && pos == finite_len) return BlockSequence(s, u, std::move(blocks));
    if (!d.is_finite() && pos >= p) {
      const std::size_t phase = (pos - p) % q;
      auto [it, inserted] = phase_to_block.emplace(phase, blocks.size());
      if (!inserted) {
        const auto cut = static_cast<std::ptrdiff_t>(it->second);
        Digits head(blocks.begin(), blocks.begin() + cut);
        Digits tail(blocks.begin() + cut, blocks.end());
        return BlockSequence(s, u, std::move(head), std::move(tail)).canonical();
      }
    }
    // A run of u longer than preperiod + period never terminates.
    std::size_t run = 0;
    while (true) {
      if (d.is_finite() && pos == finite_len)
        throw NotAMember(pos, "word ends inside a block after " + std::to_string(run) + " copies of " +
                                  std::to_string(u));
      if (d.at(pos) != u) break;
      ++run;
      ++pos;
      if (!d.is_finite() && run > p + q)
        throw NotAMember(pos, "periodic tail of " + std::to_string(u) + " never closes a block");
    }
    const int t = d.at(pos);
    const auto expected = static_cast<long>(run) + 1;
    if (t == 0)
      throw NotAMember(pos, "digit 0 cannot close a block");
    if (t != expected) {
      if (expected > s - 1)
        throw NotAMember(pos, "run of " + std::to_string(run) + " copies of " + std::to_string(u) +
                                  " needs block value " + std::to_string(expected) + " > s-1");
      throw NotAMember(pos, "block closed by " + std::to_string(t) + " after " + std::to_string(run) +
                                " copies of " + std::to_string(u) + " (expected " + std::to_string(expected) +
                                ")");
    }
    blocks.push_back(t);
    ++pos;
  }
}

Rational element_value(const BlockSequence& b) {
  const int s = b.base();
  const int u = b.marker();
  mpq_class value = frac(u, s - 1);
  std::size_t depth = 0;
  for (int c : b.blocks()) {
    depth += static_cast<std::size_t>(c);
    value += frac(c - u, pow_z(s, depth));
  }
  if (b.tail()) {
    mpq_class inner = 0;
    std::size_t span = 0;
    for (int c : *b.tail()) {
      span += static_cast<std::size_t>(c);
      inner += frac(c - u, pow_z(s, span));
    }
    // One tail period scaled by s^-depth, repeated: times s^span / (s^span - 1).
    const mpz_class full = pow_z(s, span);
    inner *= frac(full, full - 1);
    inner /= pow_z(s, depth);
    value += inner;
  }
  value.canonicalize();
  return Rational(value);
}

}  // namespace sadic

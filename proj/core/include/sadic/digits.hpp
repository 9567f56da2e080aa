#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sadic/rational.hpp"

namespace sadic {

using Digits = std::vector<int>;

/// A base-s digit word alpha_1 alpha_2 ... made of a finite preperiod and an
/// optional repeating period. Without a period the word is finite and stands
/// for the expansion followed by zeros.
class DigitString {
 public:
  DigitString(int base, Digits preperiod, std::optional<Digits> period = std::nullopt);

  int base() const { return base_; }
  const Digits& preperiod() const { return preperiod_; }
  const std::optional<Digits>& period() const { return period_; }
  bool is_finite() const { return !period_.has_value(); }

  /// Digit at zero-based position `index`, unrolling the period.
  /// Throws RangeError past the end of a finite word.
  int at(std::size_t index) const;

  /// The first n digits; throws RangeError if a finite word is shorter.
  Digits prefix(std::size_t n) const;

  /// Shortest preperiod and period describing the same digit sequence, with
  /// an (s-1)-tail replaced by its (0)-tail twin. The single exception is
  /// x = 1, whose only expansion is (s-1)^inf.
  DigitString canonical() const;

  /// For an s-adic-rational value other than 0 (a finite canonical word)
  /// returns the other representation, ending in period (s-1).
  std::optional<DigitString> twin() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  int base_;
  Digits preperiod_;
  std::optional<Digits> period_;
};

/// Sequence of block values c_1 c_2 ... of an element of S_(s,u): each c is in
/// {1..s-1} with c != u, and spells the digits u^(c-1) c. An optional periodic
/// tail makes the sequence infinite.
///
/// Equality compares the infinite (or finite) block sequences themselves, so
/// different preperiod/period splits of the same sequence are equal.
class BlockSequence {
 public:
  BlockSequence(int base, int marker, Digits blocks, std::optional<Digits> tail = std::nullopt);

  int base() const { return base_; }
  int marker() const { return marker_; }
  const Digits& blocks() const { return blocks_; }
  const std::optional<Digits>& tail() const { return tail_; }
  bool is_finite() const { return !tail_.has_value(); }

  BlockSequence canonical() const;

  friend bool operator==(const BlockSequence& a, const BlockSequence& b);

 private:
  int base_;
  int marker_;
  Digits blocks_;
  std::optional<Digits> tail_;
};

/// Checks 3 <= s and 0 <= u < s; throws RangeError otherwise.
void check_set_params(int s, int u);

/// Throws InvalidBase unless every value is a legal block (1..s-1, != u).
void check_blocks(int s, int u, std::span<const int> blocks);

/// The digits u^(c-1) c of a single block.
Digits block_word(int u, int c);

/// Exact value sum alpha_k s^-k, with any periodic tail summed in closed form.
Rational digits_to_rational(const DigitString& d);

/// First n digits of the canonical expansion of x in [0, 1].
DigitString rational_to_digits(const Rational& x, int s, std::size_t n);

/// The complete canonical (preperiod, period) expansion of x in [0, 1].
/// Throws ResourceError if preperiod plus period would exceed max_digits.
DigitString rational_to_expansion(const Rational& x, int s, std::size_t max_digits = 1u << 20);

DigitString block_encode(const BlockSequence& b);

/// Inverse of block_encode. Throws NotAMember with the offending digit offset
/// when the digit sequence does not follow the block pattern for marker u.
BlockSequence block_decode(const DigitString& d, int u);

/// u/(s-1) + sum (c_k - u) / s^(c_1+...+c_k). For a finite sequence this is
/// the partial sum, i.e. the blocks followed by u^inf.
Rational element_value(const BlockSequence& b);

}  // namespace sadic

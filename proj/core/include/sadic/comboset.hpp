#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "sadic/cylinder.hpp"
#include "sadic/digits.hpp"
#include "sadic/rational.hpp"

namespace sadic {

/// Finite set of fixed digit words sigma_1..sigma_m. The set E it generates
/// holds every number whose base-s expansion is a concatenation of the words.
class ComboAlphabet {
 public:
  /// Throws InvalidAlphabet on an empty set, an empty word, a digit outside
  /// 0..s-1 or a repeated word.
  ComboAlphabet(int s, std::vector<Digits> words);

  int base() const { return s_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Digits>& words() const { return words_; }
  const Digits& word(std::size_t i) const { return words_.at(i); }
  std::size_t max_length() const;

  /// word length k -> N(sigma^k)
  const std::map<int, long>& length_counts() const { return length_counts_; }

  /// Index of `w` in the alphabet, or size() when absent.
  std::size_t find(std::span<const int> w) const;

  /// True when no word is a proper prefix of another. Alphabets that fail this
  /// are still usable for dimension work, but their cylinders may overlap.
  bool prefix_free() const;

 private:
  int s_;
  std::vector<Digits> words_;
  std::map<int, long> length_counts_;
};

/// {u^(c-1) c : c in {1..s-1}, u in {0..s-1}, c != u}; s^2 - 3s + 3 words.
ComboAlphabet tilde_alphabet(int s);

/// {021, 102} in base 3.
ComboAlphabet sprime3_alphabet();

/// S_(s,u) written as a combination set: {u^(c-1) c : c in {1..s-1} \ {u}}.
ComboAlphabet block_alphabet(int s, int u);

/// Value of the finite word w (followed by zeros).
Rational word_value(int s, std::span<const int> w);

/// Value of w repeated forever.
Rational periodic_value(int s, std::span<const int> w);

struct ComboExtrema {
  Rational inf;
  Rational sup;
  std::size_t inf_word = 0;  // index of sigma' with (sigma')^inf = inf E
  std::size_t sup_word = 0;  // index of sigma'' with (sigma'')^inf = sup E

  Rational diameter() const { return sup - inf; }
  Hull hull() const { return {inf, sup}; }
};

/// Extrema of E from the periodic values of single words.
ComboExtrema comboset_extrema(const ComboAlphabet& a);

struct ComboCylinder {
  std::vector<std::size_t> base;  // word indices
  std::size_t total_digits = 0;
  Rational prefix_value;          // value of the concatenated base, zero-filled
  Rational inf;
  Rational sup;

  Rational diameter() const { return sup - inf; }
  Hull hull() const { return {inf, sup}; }
};

/// Cylinder of E whose first words are `base_words`. Throws InvalidBase when a
/// word is not in the alphabet.
ComboCylinder combo_cylinder(const ComboAlphabet& a, std::span<const Digits> base_words);
ComboCylinder combo_cylinder_by_index(const ComboAlphabet& a, std::span<const std::size_t> base);

struct PrefixHull {
  std::vector<std::size_t> words;
  std::size_t digits = 0;
  Hull hull;
};

/// Every combination cylinder whose base has a total digit count in
/// (max_digits - L, max_digits], L the longest word. Together they cover E.
/// Throws ResourceError past `max_count` hulls.
std::vector<PrefixHull> enumerate_prefixes(const ComboAlphabet& a, std::size_t max_digits,
                                           std::size_t max_count = std::size_t{1} << 22);

/// Only the hulls, in enumeration order.
std::vector<Hull> prefix_hulls(const ComboAlphabet& a, std::size_t max_digits,
                               std::size_t max_count = std::size_t{1} << 22);

}  // namespace sadic

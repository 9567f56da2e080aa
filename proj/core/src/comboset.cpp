#include "sadic/comboset.hpp"

#include <algorithm>
#include <string>

#include "sadic/error.hpp"

namespace sadic {

ComboAlphabet::ComboAlphabet(int s, std::vector<Digits> words) : s_(s), words_(std::move(words)) {
  if (s_ < 2) throw InvalidAlphabet("alphabet base must be at least 2, got " + std::to_string(s_));
  if (words_.empty()) throw InvalidAlphabet("alphabet has no words");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Digits& w = words_[i];
    if (w.empty()) throw InvalidAlphabet("word " + std::to_string(i) + " is empty");
    for (int d : w)
      if (d < 0 || d >= s_)
        throw InvalidAlphabet("word " + std::to_string(i) + " has digit " + std::to_string(d) +
                              " outside 0.." + std::to_string(s_ - 1));
    for (std::size_t j = 0; j < i; ++j)
      if (words_[j] == w) throw InvalidAlphabet("word " + std::to_string(i) + " repeats word " + std::to_string(j));
    ++length_counts_[static_cast<int>(w.size())];
  }
}

std::size_t ComboAlphabet::max_length() const {
  std::size_t L = 0;
  for (const auto& w : words_) L = std::max(L, w.size());
  return L;
}

std::size_t ComboAlphabet::find(std::span<const int> w) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (std::equal(words_[i].begin(), words_[i].end(), w.begin(), w.end())) return i;
  return words_.size();
}

bool ComboAlphabet::prefix_free() const {
  for (const auto& a : words_)
    for (const auto& b : words_)
      if (&a != &b && a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin())) return false;
  return true;
}

ComboAlphabet tilde_alphabet(int s) {
  if (s < 3) throw RangeError("s must be at least 3, got " + std::to_string(s));
  std::vector<Digits> words;
  for (int c = 1; c < s; ++c) {
    for (int u = 0; u < s; ++u) {
      if (u == c) continue;
      Digits w = block_word(u, c);
      if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(std::move(w));
    }
  }
  return ComboAlphabet(s, std::move(words));
}

ComboAlphabet sprime3_alphabet() { return ComboAlphabet(3, {{0, 2, 1}, {1, 0, 2}}); }

ComboAlphabet block_alphabet(int s, int u) {
  check_set_params(s, u);
  std::vector<Digits> words;
  for (int c = 1; c < s; ++c)
    if (c != u) words.push_back(block_word(u, c));
  return ComboAlphabet(s, std::move(words));
}

Rational word_value(int s, std::span<const int> w) {
  return digits_to_rational(DigitString(s, Digits(w.begin(), w.end())));
}

Rational periodic_value(int s, std::span<const int> w) {
  return digits_to_rational(DigitString(s, {}, Digits(w.begin(), w.end())));
}

ComboExtrema comboset_extrema(const ComboAlphabet& a) {
  ComboExtrema e;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational v = periodic_value(a.base(), a.word(i));
    if (i == 0 || v < e.inf) {
      e.inf = v;
      e.inf_word = i;
    }
    if (i == 0 || v > e.sup) {
      e.sup = v;
      e.sup_word = i;
    }
  }
  return e;
}

ComboCylinder combo_cylinder_by_index(const ComboAlphabet& a, std::span<const std::size_t> base) {
  const int s = a.base();
  ComboCylinder cyl;
  cyl.base.assign(base.begin(), base.end());
  for (std::size_t idx : base) {
    if (idx >= a.size()) throw InvalidBase("word index " + std::to_string(idx) + " is not in the alphabet");
    const Digits& w = a.word(idx);
    cyl.prefix_value += Rational::power(s, -static_cast<long>(cyl.total_digits)) * word_value(s, w);
    cyl.total_digits += w.size();
  }
  const ComboExtrema e = comboset_extrema(a);
  const Rational scale = Rational::power(s, -static_cast<long>(cyl.total_digits));
  cyl.inf = cyl.prefix_value + scale * e.inf;
  cyl.sup = cyl.prefix_value + scale * e.sup;
  return cyl;
}

ComboCylinder combo_cylinder(const ComboAlphabet& a, std::span<const Digits> base_words) {
  std::vector<std::size_t> idx;
  idx.reserve(base_words.size());
  for (const Digits& w : base_words) {
    const std::size_t i = a.find(w);
    if (i == a.size()) {
      std::string text;
      for (int d : w) text += std::to_string(d) + (a.base() > 10 ? "," : "");
      throw InvalidBase("word '" + text + "' is not in the alphabet");
    }
    idx.push_back(i);
  }
  return combo_cylinder_by_index(a, idx);
}

namespace {

struct PrefixWalker {
  const ComboAlphabet& alphabet;
  std::size_t max_digits;
  std::size_t window_low;  // emit when window_low < digits <= max_digits
  std::size_t max_count;
  std::vector<Rational> values;  // word_value per word
  Rational inf, sup;
  std::vector<std::size_t> path;
  std::vector<PrefixHull>* out;

  void walk(const Rational& prefix, std::size_t digits) {
    if (digits > window_low) {
      if (out->size() >= max_count)
        throw ResourceError("more than " + std::to_string(max_count) + " prefix hulls");
      const Rational scale = Rational::power(alphabet.base(), -static_cast<long>(digits));
      out->push_back({path, digits, {prefix + scale * inf, prefix + scale * sup}});
    }
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      const std::size_t len = alphabet.word(i).size();
      if (digits + len > max_digits) continue;
      path.push_back(i);
      walk(prefix + Rational::power(alphabet.base(), -static_cast<long>(digits)) * values[i], digits + len);
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<PrefixHull> enumerate_prefixes(const ComboAlphabet& a, std::size_t max_digits, std::size_t max_count) {
  const std::size_t L = a.max_length();
  if (max_digits < L)
    throw RangeError("max_digits " + std::to_string(max_digits) + " is below the longest word length " +
                     std::to_string(L));
  const ComboExtrema e = comboset_extrema(a);
  std::vector<PrefixHull> out;
  PrefixWalker walker{a, max_digits, max_digits - L, max_count, {}, e.inf, e.sup, {}, &out};
  for (const auto& w : a.words()) walker.values.push_back(word_value(a.base(), w));
  walker.walk(Rational(0), 0);
  return out;
}

std::vector<Hull> prefix_hulls(const ComboAlphabet& a, std::size_t max_digits, std::size_t max_count) {
  std::vector<Hull> hulls;
  for (auto& p : enumerate_prefixes(a, max_digits, max_count)) hulls.push_back(std::move(p.hull));
  return hulls;
}

}  // namespace sadic

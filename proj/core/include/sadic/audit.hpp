#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sadic/comboset.hpp"
#include "sadic/digits.hpp"
#include "sadic/rational.hpp"

/// Brute-force oracles. Every value here is an actual element of the set,
/// built from a digit word and evaluated with digits_to_rational; nothing in
/// this namespace uses the closed-form endpoint formulas.
namespace sadic::audit {

struct Bounds {
  Rational min;
  Rational max;
  std::size_t samples = 0;
};

/// One element per block extension w of `base` whose digit length first
/// reaches `depth` (base w t^inf, t the smallest admissible block). The
/// extensions partition the cylinder into pieces of diameter at most
/// s^-depth times its own, so min/max land within that distance of the true
/// inf/sup.
Bounds cylinder_bounds(int s, int u, std::span<const int> base, std::size_t depth);

/// Every element base w t^inf with w at most `depth` extra digits and t any
/// admissible block, sorted and deduplicated.
std::vector<Rational> cylinder_elements(int s, int u, std::span<const int> base, std::size_t depth);

struct ComboAudit {
  bool ok = true;
  Rational min;
  Rational max;
  std::size_t samples = 0;
  std::optional<std::string> violation;
};

/// Checks claimed extrema of a combination set against sampled elements:
/// every word sequence reaching `depth` digits closed by each single-word
/// tail, plus every two-word periodic pattern. Fails when a sample escapes
/// [inf, sup] or when the sampled min/max stay farther than s^-depth d(E)
/// from the claimed values.
ComboAudit audit_combo_extrema(const ComboAlphabet& a, const Rational& inf, const Rational& sup, std::size_t depth);

}  // namespace sadic::audit

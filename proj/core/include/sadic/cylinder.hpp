#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sadic/digits.hpp"
#include "sadic/rational.hpp"

namespace sadic {

/// Closed interval [lower, upper] with exact endpoints.
struct Hull {
  Rational lower;
  Rational upper;

  Rational length() const { return upper - lower; }
  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
  bool contains(const Hull& h) const { return lower <= h.lower && h.upper <= upper; }
  friend bool operator==(const Hull&, const Hull&) = default;
};

/// Rank-n cylinder of S_(s,u): all elements whose first n blocks are `base`.
struct Cylinder {
  int s = 3;
  int u = 0;
  Digits base;
  /// Position of the cylinder before scaling: sum (c_k-u) s^-(c_1+..+c_k) plus
  /// the u-filler sum_{k <= c_1+..+c_n} u s^-k. Equals g_n when u = 0.
  Rational tau;
  Rational inf;
  Rational sup;

  Rational diameter() const { return sup - inf; }
  Hull hull() const { return {inf, sup}; }
  std::size_t digit_length() const;
};

/// Open interval between two sibling cylinders; disjoint from the set.
struct GapInterval {
  Rational lower;
  Rational upper;

  bool contains(const Rational& x) const { return lower < x && x < upper; }
};

/// inf and sup of S_(s,u), dispatched on the u-regime.
Hull set_extrema(int s, int u);

/// d(S_(s,u)) = sup - inf.
Rational set_diameter(int s, int u);

/// Exact endpoints of the cylinder with the given base. An empty base is the
/// whole set.
Hull cylinder_endpoints(int s, int u, std::span<const int> base);

/// u = 0 endpoints computed from g_n = sum c_k s^-(c_1+..+c_k) directly. An
/// independent route to the same values as cylinder_endpoints(s, 0, base).
Hull cylinder_endpoints_g(int s, std::span<const int> base);

/// Diameter by closed form: the explicit u = 0 expression, else
/// s^-(c_1+..+c_n) d(S_(s,u)).
Rational cylinder_diameter(int s, int u, std::span<const int> base);

Cylinder make_cylinder(int s, int u, std::span<const int> base);

/// One child per admissible next block, in increasing block order.
std::vector<Cylinder> children(int s, int u, std::span<const int> base);

/// (sup of child p+1, inf of child p) below `base`, for u = 0 and 1 <= p <= s-2.
GapInterval gap_interval(int s, std::span<const int> base, int p);

enum class Order {
  Decreasing,   // child p lies wholly above child p+1
  Increasing,   // child p lies wholly below child p+1
  Overlapping,  // hulls meet; never expected for S_(s,u)
};

std::string to_string(Order o);

struct OrderVerdict {
  Order observed;
  /// What the regime table predicts for (s, u, p).
  Order predicted;
  bool matches() const { return observed == predicted; }
};

/// Regime table: u in {0,1} decreasing; u in {s-2,s-1} increasing; otherwise
/// increasing while p+1 <= u and decreasing once p > u.
Order predicted_order(int s, int u, int p);

/// Compares children p and p+1 of `base` by exact endpoints. Both p and p+1
/// must be admissible blocks.
OrderVerdict cylinder_order(int s, int u, std::span<const int> base, int p);

struct Location {
  enum class Kind { Inside, Excluded, Undecided };

  Kind kind = Kind::Undecided;
  /// Blocks of the cylinder chain followed so far.
  Digits chain;
  /// For exclusions: the gap between siblings that contains x, or nothing
  /// when x fell outside a hull altogether.
  std::optional<GapInterval> gap;
  std::string reason;
};

std::string to_string(Location::Kind k);

/// Follows the nested cylinder hulls containing x down to `depth` blocks.
Location point_locate(const Rational& x, int s, int u, std::size_t depth);

}  // namespace sadic

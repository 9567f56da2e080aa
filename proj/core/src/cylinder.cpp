#include "sadic/cylinder.hpp"

#include <algorithm>
#include <numeric>

#include "sadic/error.hpp"

namespace sadic {
namespace {

long digit_sum(std::span<const int> base) { return std::accumulate(base.begin(), base.end(), 0L); }

Rational inv_pow(int s, long e) { return Rational::power(s, -e); }

// sum (c_k - u) s^-(c_1+..+c_k) + sum_{k <= c_1+..+c_n} u s^-k
Rational tau_of(int s, int u, std::span<const int> base) {
  Rational t;
  long depth = 0;
  for (int c : base) {
    depth += c;
    t += Rational(c - u) * inv_pow(s, depth);
  }
  t += Rational(u, s - 1) * (Rational(1) - inv_pow(s, depth));
  return t;
}

void validate(int s, int u, std::span<const int> base) {
  check_set_params(s, u);
  check_blocks(s, u, base);
}

Digits extended(std::span<const int> base, int c) {
  Digits b(base.begin(), base.end());
  b.push_back(c);
  return b;
}

}  // namespace

std::size_t Cylinder::digit_length() const { return static_cast<std::size_t>(digit_sum(base)); }

Hull set_extrema(int s, int u) {
  check_set_params(s, u);
  const Rational filler(u, s - 1);
  Hull h;
  if (u == 0 || u == 1)
    h.lower = Rational(s - u - 1) / (Rational::power(s, s - 1) - 1) + filler;
  else
    h.lower = Rational(1, s - 1);

  if (u == 0)
    h.upper = Rational(1, s - 1);
  else if (u <= s - 2)
    h.upper = Rational(1) / (Rational::power(s, u + 1) - 1) + filler;
  else
    h.upper = Rational(1) - Rational(1) / (Rational::power(s, s - 2) - 1);
  return h;
}

Rational set_diameter(int s, int u) { return set_extrema(s, u).length(); }

Hull cylinder_endpoints(int s, int u, std::span<const int> base) {
  validate(s, u, base);
  const Hull whole = set_extrema(s, u);
  const Rational scale = inv_pow(s, digit_sum(base));
  const Rational tau = tau_of(s, u, base);
  return {tau + scale * whole.lower, tau + scale * whole.upper};
}

Hull cylinder_endpoints_g(int s, std::span<const int> base) {
  validate(s, 0, base);
  Rational g;
  long depth = 0;
  for (int c : base) {
    depth += c;
    g += Rational(c) * inv_pow(s, depth);
  }
  const Rational scale = inv_pow(s, depth);
  return {g + Rational(s - 1) * scale / (Rational::power(s, s - 1) - 1), g + scale / Rational(s - 1)};
}

Rational cylinder_diameter(int s, int u, std::span<const int> base) {
  validate(s, u, base);
  const Rational scale = inv_pow(s, digit_sum(base));
  if (u == 0) {
    const Rational top = Rational::power(s, s - 1) - 1;
    return (top - Rational(s - 1) * Rational(s - 1)) / (Rational(s - 1) * top) * scale;
  }
  return scale * set_diameter(s, u);
}

Cylinder make_cylinder(int s, int u, std::span<const int> base) {
  Cylinder c;
  c.s = s;
  c.u = u;
  c.base.assign(base.begin(), base.end());
  const Hull h = cylinder_endpoints(s, u, base);
  c.tau = tau_of(s, u, base);
  c.inf = h.lower;
  c.sup = h.upper;
  return c;
}

std::vector<Cylinder> children(int s, int u, std::span<const int> base) {
  validate(s, u, base);
  std::vector<Cylinder> out;
  for (int c = 1; c < s; ++c) {
    if (c == u) continue;
    out.push_back(make_cylinder(s, u, extended(base, c)));
  }
  return out;
}

GapInterval gap_interval(int s, std::span<const int> base, int p) {
  validate(s, 0, base);
  if (p < 1 || p > s - 2)
    throw RangeError("gap index p must lie in 1.." + std::to_string(s - 2) + ", got " + std::to_string(p));
  const Hull upper_child = cylinder_endpoints(s, 0, extended(base, p));
  const Hull lower_child = cylinder_endpoints(s, 0, extended(base, p + 1));
  return {lower_child.upper, upper_child.lower};
}

std::string to_string(Order o) {
  switch (o) {
    case Order::Decreasing: return "decreasing";
    case Order::Increasing: return "increasing";
    case Order::Overlapping: return "overlapping";
  }
  return "?";
}

Order predicted_order(int s, int u, int p) {
  if (u == 0 || u == 1) return Order::Decreasing;
  if (u >= s - 2) return Order::Increasing;
  return p + 1 <= u ? Order::Increasing : Order::Decreasing;
}

OrderVerdict cylinder_order(int s, int u, std::span<const int> base, int p) {
  validate(s, u, base);
  if (p < 1 || p + 1 > s - 1 || p == u || p + 1 == u)
    throw InvalidBase("children " + std::to_string(p) + " and " + std::to_string(p + 1) +
                      " are not both admissible for s=" + std::to_string(s) + ", u=" + std::to_string(u));
  const Hull a = cylinder_endpoints(s, u, extended(base, p));
  const Hull b = cylinder_endpoints(s, u, extended(base, p + 1));
  Order observed = Order::Overlapping;
  if (a.lower > b.upper)
    observed = Order::Decreasing;
  else if (a.upper < b.lower)
    observed = Order::Increasing;
  return {observed, predicted_order(s, u, p)};
}

std::string to_string(Location::Kind k) {
  switch (k) {
    case Location::Kind::Inside: return "inside";
    case Location::Kind::Excluded: return "excluded";
    case Location::Kind::Undecided: return "undecided";
  }
  return "?";
}

Location point_locate(const Rational& x, int s, int u, std::size_t depth) {
  check_set_params(s, u);
  if (depth < 1) throw RangeError("depth must be at least 1");
  Location loc;
  const Hull whole = set_extrema(s, u);
  if (!whole.contains(x)) {
    loc.kind = Location::Kind::Excluded;
    loc.reason = "outside the hull [" + whole.lower.str() + ", " + whole.upper.str() + "]";
    return loc;
  }
  for (std::size_t level = 0; level < depth; ++level) {
    std::vector<Cylinder> kids = children(s, u, loc.chain);
    std::sort(kids.begin(), kids.end(), [](const Cylinder& a, const Cylinder& b) { return a.inf < b.inf; });
    std::vector<const Cylinder*> hits;
    for (const auto& k : kids)
      if (k.hull().contains(x)) hits.push_back(&k);
    if (hits.size() > 1) {
      loc.kind = Location::Kind::Undecided;
      loc.reason = "x lies in " + std::to_string(hits.size()) + " touching child hulls at rank " +
                   std::to_string(level + 1);
      return loc;
    }
    if (hits.empty()) {
      loc.kind = Location::Kind::Excluded;
      for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
        if (kids[i].sup < x && x < kids[i + 1].inf) {
          loc.gap = GapInterval{kids[i].sup, kids[i + 1].inf};
          break;
        }
      }
      loc.reason = loc.gap ? "x lies in a gap between rank-" + std::to_string(level + 1) + " cylinders"
                           : "x is outside every rank-" + std::to_string(level + 1) + " hull";
      return loc;
    }
    loc.chain.push_back(hits.front()->base.back());
  }
  loc.kind = Location::Kind::Inside;
  loc.reason = "x lies in the rank-" + std::to_string(depth) + " hull chain";
  return loc;
}

}  // namespace sadic

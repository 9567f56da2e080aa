#include "sadic/cylinder.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sadic/audit.hpp"
#include "sadic/error.hpp"

using sadic::Digits;
using sadic::Hull;
using sadic::Order;
using sadic::Rational;

namespace {

// Element with the given blocks followed by t^inf, evaluated digit by digit.
Rational element(int s, int u, const Digits& blocks, int t) {
  Digits pre;
  for (int c : blocks) {
    const auto w = sadic::block_word(u, c);
    pre.insert(pre.end(), w.begin(), w.end());
  }
  return sadic::digits_to_rational(sadic::DigitString(s, pre, sadic::block_word(u, t)));
}

std::vector<int> admissible(int s, int u) {
  std::vector<int> out;
  for (int c = 1; c < s; ++c)
    if (c != u) out.push_back(c);
  return out;
}

}  // namespace

TEST(SetExtrema, KnownValues) {
  EXPECT_EQ(sadic::set_extrema(3, 0), (Hull{Rational(1, 4), Rational(1, 2)}));
  EXPECT_EQ(sadic::set_extrema(4, 1), (Hull{Rational(23, 63), Rational(2, 5)}));
  EXPECT_EQ(sadic::set_extrema(4, 3), (Hull{Rational(1, 3), Rational(14, 15)}));
  EXPECT_EQ(sadic::set_extrema(5, 2), (Hull{Rational(1, 4), Rational(1, 2) + Rational(1, 124)}));
  EXPECT_EQ(sadic::set_diameter(3, 0), Rational(1, 4));
}

TEST(SetExtrema, AttainedByPeriodicElements) {
  for (int s = 3; s <= 9; ++s) {
    for (int u = 0; u < s; ++u) {
      const Hull h = sadic::set_extrema(s, u);
      Rational lo = element(s, u, {}, admissible(s, u).front());
      Rational hi = lo;
      for (int t : admissible(s, u)) {
        lo = std::min(lo, element(s, u, {}, t));
        hi = std::max(hi, element(s, u, {}, t));
      }
      EXPECT_EQ(h.lower, lo) << "s=" << s << " u=" << u;
      EXPECT_EQ(h.upper, hi) << "s=" << s << " u=" << u;
    }
  }
}

TEST(SetExtrema, RejectsBadParameters) {
  EXPECT_THROW(sadic::set_extrema(2, 0), sadic::RangeError);
  EXPECT_THROW(sadic::set_extrema(5, 5), sadic::RangeError);
  EXPECT_THROW(sadic::set_extrema(5, -1), sadic::RangeError);
}

TEST(CylinderEndpoints, SmallBase) {
  const Hull h = sadic::cylinder_endpoints(3, 0, Digits{2});
  // 02 (1)^inf-style bounds: 2/9 + inf/sup of S scaled by 1/9.
  EXPECT_EQ(h.lower, Rational(2, 9) + Rational(1, 36));
  EXPECT_EQ(h.upper, Rational(2, 9) + Rational(1, 18));
  EXPECT_EQ(sadic::cylinder_endpoints(3, 0, Digits{}), sadic::set_extrema(3, 0));
  EXPECT_THROW(sadic::cylinder_endpoints(3, 0, Digits{0}), sadic::InvalidBase);
  EXPECT_THROW(sadic::cylinder_endpoints(4, 2, Digits{2}), sadic::InvalidBase);
}

TEST(CylinderEndpoints, TwoRoutesAgreeForZeroMarker) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const int s = 3 + static_cast<int>(rng() % 8);
    const auto base = oracle::random_blocks(rng, s, 0, rng() % 7);
    EXPECT_EQ(sadic::cylinder_endpoints(s, 0, base), sadic::cylinder_endpoints_g(s, base));
  }
}

TEST(CylinderEndpoints, MatchBruteForceBounds) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const int s = 3 + static_cast<int>(rng() % 4);
    const int u = static_cast<int>(rng() % static_cast<unsigned>(s));
    const auto base = oracle::random_blocks(rng, s, u, rng() % 4);
    const Hull h = sadic::cylinder_endpoints(s, u, base);
    const std::size_t depth = 8;
    const auto b = sadic::audit::cylinder_bounds(s, u, base, depth);
    const Rational slack = h.length() * Rational::power(s, -static_cast<long>(depth));
    EXPECT_LE(h.lower, b.min);
    EXPECT_GE(h.upper, b.max);
    EXPECT_LE(b.min - h.lower, slack) << "s=" << s << " u=" << u;
    EXPECT_LE(h.upper - b.max, slack) << "s=" << s << " u=" << u;
  }
}

TEST(CylinderDiameter, ClosedFormAndScaling) {
  for (int s = 3; s <= 8; ++s) {
    for (int u = 0; u < s; ++u) {
      std::mt19937_64 rng(static_cast<unsigned>(s * 31 + u));
      for (int trial = 0; trial < 20; ++trial) {
        const auto base = oracle::random_blocks(rng, s, u, 1 + rng() % 5);
        const auto c = sadic::make_cylinder(s, u, base);
        EXPECT_EQ(c.diameter(), sadic::cylinder_diameter(s, u, base));
        long total = 0;
        for (int x : base) total += x;
        EXPECT_EQ(c.diameter(), sadic::set_diameter(s, u) * Rational::power(s, -total));
        EXPECT_EQ(c.digit_length(), static_cast<std::size_t>(total));
      }
    }
  }
}

TEST(CylinderDiameter, SingleBlockSetsArePoints) {
  EXPECT_TRUE(sadic::set_diameter(3, 1).is_zero());
  EXPECT_EQ(sadic::set_extrema(3, 2), (Hull{Rational(1, 2), Rational(1, 2)}));
}

TEST(Children, NestInsideParentAndDoNotOverlap) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int s = 3 + static_cast<int>(rng() % 7);
    const int u = static_cast<int>(rng() % static_cast<unsigned>(s));
    const auto base = oracle::random_blocks(rng, s, u, rng() % 4);
    const auto parent = sadic::make_cylinder(s, u, base);
    auto kids = sadic::children(s, u, base);
    ASSERT_EQ(kids.size(), admissible(s, u).size());
    for (const auto& k : kids) EXPECT_TRUE(parent.hull().contains(k.hull()));
    std::sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) { return a.inf < b.inf; });
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) EXPECT_LT(kids[i].sup, kids[i + 1].inf);
  }
}

TEST(Ordering, TableMatchesObservationEverywhere) {
  for (int s = 3; s <= 10; ++s) {
    for (int u = 0; u < s; ++u) {
      std::mt19937_64 rng(static_cast<unsigned>(s * 100 + u));
      for (int p = 1; p + 1 < s; ++p) {
        if (p == u || p + 1 == u) continue;
        for (int trial = 0; trial < 5; ++trial) {
          const auto base = oracle::random_blocks(rng, s, u, rng() % 4);
          const auto v = sadic::cylinder_order(s, u, base, p);
          EXPECT_TRUE(v.matches()) << "s=" << s << " u=" << u << " p=" << p << " observed "
                                   << sadic::to_string(v.observed);
          EXPECT_NE(v.observed, Order::Overlapping);
        }
      }
    }
  }
}

TEST(Ordering, RegimeTable) {
  EXPECT_EQ(sadic::predicted_order(5, 0, 2), Order::Decreasing);
  EXPECT_EQ(sadic::predicted_order(5, 1, 2), Order::Decreasing);
  EXPECT_EQ(sadic::predicted_order(5, 3, 1), Order::Increasing);
  EXPECT_EQ(sadic::predicted_order(5, 4, 2), Order::Increasing);
  EXPECT_EQ(sadic::predicted_order(7, 3, 1), Order::Increasing);
  EXPECT_EQ(sadic::predicted_order(7, 3, 4), Order::Decreasing);
  EXPECT_THROW(sadic::cylinder_order(5, 2, Digits{}, 2), sadic::InvalidBase);
  EXPECT_THROW(sadic::cylinder_order(5, 0, Digits{}, 4), sadic::InvalidBase);
}

TEST(Gaps, HoldNoElements) {
  for (int s = 3; s <= 5; ++s) {
    for (const Digits& base : {Digits{}, Digits{1}, Digits{s - 1, 1}}) {
      const auto elements = sadic::audit::cylinder_elements(s, 0, base, s == 5 ? 7 : 9);
      for (int p = 1; p + 1 < s; ++p) {
        const auto g = sadic::gap_interval(s, base, p);
        EXPECT_LT(g.lower, g.upper);
        auto it = std::upper_bound(elements.begin(), elements.end(), g.lower);
        EXPECT_TRUE(it == elements.end() || *it >= g.upper) << "s=" << s << " p=" << p;
        // Endpoints are attained in the limit: elements come arbitrarily close.
        EXPECT_TRUE(std::binary_search(elements.begin(), elements.end(), g.lower) ||
                    std::binary_search(elements.begin(), elements.end(), g.upper));
      }
    }
  }
  EXPECT_THROW(sadic::gap_interval(3, Digits{}, 2), sadic::RangeError);
}

TEST(PointLocate, ElementsAreInside) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int s = 3 + static_cast<int>(rng() % 6);
    const int u = static_cast<int>(rng() % static_cast<unsigned>(s));
    const auto blocks = oracle::random_blocks(rng, s, u, 1 + rng() % 6);
    const auto tail = oracle::random_blocks(rng, s, u, 1)[0];
    const auto loc = sadic::point_locate(element(s, u, blocks, tail), s, u, blocks.size() + 2);
    EXPECT_EQ(loc.kind, sadic::Location::Kind::Inside) << loc.reason;
    EXPECT_TRUE(std::equal(blocks.begin(), blocks.end(), loc.chain.begin()));
  }
}

TEST(PointLocate, GapPointsAreExcluded) {
  const auto g = sadic::gap_interval(4, Digits{3}, 1);
  const Rational mid = (g.lower + g.upper) / Rational(2);
  const auto loc = sadic::point_locate(mid, 4, 0, 6);
  EXPECT_EQ(loc.kind, sadic::Location::Kind::Excluded);
  ASSERT_TRUE(loc.gap.has_value());
  EXPECT_EQ(loc.gap->lower, g.lower);
  EXPECT_EQ(loc.gap->upper, g.upper);
  EXPECT_EQ(loc.chain, Digits{3});

  const auto outside = sadic::point_locate(Rational(9, 10), 3, 0, 4);
  EXPECT_EQ(outside.kind, sadic::Location::Kind::Excluded);
  EXPECT_FALSE(outside.gap.has_value());
}

TEST(PointLocate, FinitePartialSumsFallInGaps) {
  // 0.021 in base 3 (blocks 2,1 then zeros) is not an element of S_(3,0).
  const auto loc = sadic::point_locate(Rational(7, 27), 3, 0, 8);
  EXPECT_EQ(loc.kind, sadic::Location::Kind::Excluded);
}

TEST(PointLocate, ExtremePointsAndRootGap) {
  const auto sup = sadic::point_locate(Rational(1, 2), 3, 0, 8);
  EXPECT_EQ(sup.kind, sadic::Location::Kind::Inside);
  EXPECT_EQ(sup.chain, Digits(8, 1));
  const auto inf = sadic::point_locate(Rational(1, 4), 3, 0, 8);
  EXPECT_EQ(inf.kind, sadic::Location::Kind::Inside);
  EXPECT_EQ(inf.chain, Digits(8, 2));
  const auto third = sadic::point_locate(Rational(1, 3), 3, 0, 3);
  EXPECT_EQ(third.kind, sadic::Location::Kind::Excluded);
  ASSERT_TRUE(third.gap.has_value());
  EXPECT_EQ(third.gap->lower, Rational(5, 18));
  EXPECT_EQ(third.gap->upper, Rational(5, 12));
}

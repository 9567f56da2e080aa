#include "sadic/cli/reproduce.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "sadic/audit.hpp"
#include "sadic/comboset.hpp"
#include "sadic/cylinder.hpp"
#include "sadic/dimension.hpp"
#include "sadic/error.hpp"
#include "sadic/measure.hpp"
#include "sadic/normality.hpp"
#include "sadic/parallel.hpp"

namespace sadic::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct Spec {
  int id;
  const char* group;
  const char* title;
  std::function<void(CriterionRow&, const ReproduceOptions&)> run;
};

std::string fmt(double v, int digits = 12) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Digits admissible(int s, int u) {
  Digits out;
  for (int c = 1; c < s; ++c)
    if (c != u) out.push_back(c);
  return out;
}

Digits random_blocks(std::mt19937_64& rng, int s, int u, std::size_t n) {
  const Digits a = admissible(s, u);
  std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
  Digits out(n);
  for (auto& c : out) c = a[pick(rng)];
  return out;
}

// Records the first failure message; later ones only bump the count.
class Failures {
 public:
  void add(const std::string& what) {
    std::lock_guard lock(m_);
    if (count_++ == 0) first_ = what;
  }
  std::size_t count() const { return count_; }
  const std::string& first() const { return first_; }

 private:
  std::mutex m_;
  std::size_t count_ = 0;
  std::string first_;
};

std::string describe(int s, int u, std::span<const int> base) {
  std::string out = "s=" + std::to_string(s) + " u=" + std::to_string(u) + " base=[";
  for (std::size_t i = 0; i < base.size(); ++i) out += (i ? "," : "") + std::to_string(base[i]);
  return out + "]";
}

void finish(CriterionRow& row, const Failures& f, std::size_t checks) {
  row.passed = f.count() == 0;
  row.observed = std::to_string(f.count()) + " failures in " + std::to_string(checks) + " checks";
  if (f.count()) row.observed += "; first: " + f.first();
  row.expected = "0 failures";
}

// 1. Closed-form dimensions through the dim subcommand.
void closed_form_dimensions(CriterionRow& row, const ReproduceOptions&) {
  const double golden = std::log((std::sqrt(5.0) + 1) / 2) / std::log(3.0);
  const double third = std::log(2.0) / std::log(3.0) / 3;
  struct Case {
    std::vector<std::string> args;
    double target;
  } cases[] = {{{"dim", "--s", "3", "--u", "0"}, golden}, {{"dim", "--alphabet", "sprime3"}, third}};
  row.passed = true;
  std::string observed;
  for (const auto& c : cases) {
    std::ostringstream out, err;
    const auto t0 = Clock::now();
    const int code = run(c.args, out, err);
    const double secs = seconds_since(t0);
    double alpha = -1;
    if (code == kOk) alpha = json::parse(out.str()).at("alpha").get<double>();
    const bool ok = code == kOk && std::abs(alpha - c.target) <= 1e-9 && secs < 0.1;
    row.passed = row.passed && ok;
    std::string command;
    for (const auto& a : c.args) command += (command.empty() ? "" : " ") + a;
    observed += (observed.empty() ? "" : "; ") + command + ": alpha=" + fmt(alpha) + " in " + fmt(secs, 2) + "s";
  }
  row.observed = observed;
  row.expected = "0.438017879486 and 0.210309917857 within 1e-9, < 0.1 s each";
}

// 2. One word gives 0 exactly; s one-digit words give 1.
void remark_edge_cases(CriterionRow& row, const ReproduceOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  Failures f;
  std::size_t checks = 0;
  for (int s = 2; s <= 16; ++s) {
    for (int trial = 0; trial < 10; ++trial) {
      Digits w(1 + rng() % 8);
      for (auto& d : w) d = static_cast<int>(rng() % static_cast<unsigned>(s));
      const double a = dim_alphabet(ComboAlphabet(s, {w})).alpha;
      ++checks;
      if (a != 0.0) f.add("single word in base " + std::to_string(s) + " gave " + fmt(a));
    }
    std::vector<Digits> all;
    for (int d = 0; d < s; ++d) all.push_back({d});
    const double a = dim_alphabet(ComboAlphabet(s, all)).alpha;
    ++checks;
    if (std::abs(a - 1.0) > 1e-12) f.add("full alphabet in base " + std::to_string(s) + " gave " + fmt(a, 17));
  }
  finish(row, f, checks);
}

// 3. Diameter identity, child/parent ratio and brute-force endpoint bounds.
void cylinder_identities(CriterionRow& row, const ReproduceOptions& opt) {
  constexpr std::size_t kCases = 1000;
  constexpr std::size_t kDepth = 10;
  struct Case {
    int s, u;
    Digits base;
  };
  std::mt19937_64 rng(opt.seed ^ 3);
  std::vector<Case> cases;
  for (std::size_t i = 0; i < kCases; ++i) {
    const int s = 3 + static_cast<int>(rng() % 6);
    const int u = static_cast<int>(rng() % static_cast<unsigned>(s));
    cases.push_back({s, u, random_blocks(rng, s, u, rng() % 4)});
  }
  Failures f;
  std::atomic<std::size_t> checks{0};
  const auto t0 = Clock::now();
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto& [s, u, base] = cases[i];
    const std::string where = describe(s, u, base);
    const Hull h = cylinder_endpoints(s, u, base);
    if (h.upper - h.lower != cylinder_diameter(s, u, base)) f.add(where + ": sup - inf differs from the diameter formula");
    if (u == 0 && cylinder_endpoints_g(s, base) != h) f.add(where + ": endpoint routes disagree");
    for (const auto& child : children(s, u, base)) {
      const Rational ratio = Rational::power(s, -child.base.back());
      if (child.diameter() != ratio * h.length()) f.add(where + ": child " + std::to_string(child.base.back()) + " ratio");
      checks += 1;
    }
    const auto b = audit::cylinder_bounds(s, u, base, kDepth);
    const Rational tail = h.length() * Rational::power(s, -static_cast<long>(kDepth));
    if (b.min < h.lower || b.max > h.upper) f.add(where + ": sampled element outside the hull");
    if (b.min - h.lower > tail || h.upper - b.max > tail) f.add(where + ": endpoints farther than the tail bound");
    checks += 3;
  });
  finish(row, f, checks);
  const double secs = seconds_since(t0);
  if (secs >= 60) {
    row.passed = false;
    row.observed += "; runtime " + fmt(secs, 3) + "s";
  }
  row.expected = "0 failures over 1000 cases, < 60 s";
}

// 4. Ordering table, disjointness and empty gaps for ranks <= 3.
void ordering_and_gaps(CriterionRow& row, const ReproduceOptions&) {
  Failures f;
  std::atomic<std::size_t> checks{0};
  std::vector<std::pair<int, int>> sets;
  for (int s = 3; s <= 8; ++s)
    for (int u = 0; u < s; ++u) sets.emplace_back(s, u);
  parallel_for(sets.size(), [&](std::size_t index) {
    const auto [s, u] = sets[index];
    const Digits alpha = admissible(s, u);
    std::vector<Digits> parents{{}};
    for (std::size_t rank = 0; rank < 2; ++rank) {
      const std::size_t n = parents.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (parents[i].size() != rank) continue;
        for (int c : alpha) {
          Digits next = parents[i];
          next.push_back(c);
          parents.push_back(next);
        }
      }
    }
    std::vector<Rational> elements;
    if (u == 0) elements = audit::cylinder_elements(s, 0, Digits{}, 12);
    for (const auto& base : parents) {
      auto kids = children(s, u, base);
      std::sort(kids.begin(), kids.end(), [](const Cylinder& a, const Cylinder& b) { return a.inf < b.inf; });
      for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
        ++checks;
        if (!(kids[i].sup < kids[i + 1].inf)) f.add(describe(s, u, base) + ": child hulls meet");
      }
      for (int p = 1; p + 1 < s; ++p) {
        if (p == u || p + 1 == u) continue;
        ++checks;
        const OrderVerdict v = cylinder_order(s, u, base, p);
        if (!v.matches())
          f.add(describe(s, u, base) + " p=" + std::to_string(p) + ": observed " + to_string(v.observed) +
                ", table says " + to_string(v.predicted));
        if (u != 0) continue;
        ++checks;
        const GapInterval g = gap_interval(s, base, p);
        const auto it = std::upper_bound(elements.begin(), elements.end(), g.lower);
        if (it != elements.end() && *it < g.upper)
          f.add(describe(s, u, base) + " p=" + std::to_string(p) + ": element " + it->str() + " inside the gap");
      }
    }
  });
  finish(row, f, checks);
}

// 5. lambda(E_k) = sigma^k d0 exactly.
void measure_recursion(CriterionRow& row, const ReproduceOptions&) {
  Failures f;
  std::size_t checks = 0;
  const auto t0 = Clock::now();
  Rational last;
  for (int s : {3, 4}) {
    Rational closed = set_diameter(s, 0);
    for (std::size_t k = 1; k <= 8; ++k) {
      closed *= sigma(s, 0);
      ++checks;
      try {
        const CoverStage st = cover_stage(s, 0, k);
        if (st.total_length != closed) f.add("s=" + std::to_string(s) + " k=" + std::to_string(k) + " mismatch");
        if (s == 3 && k == 8) last = st.total_length;
      } catch (const std::logic_error& e) {
        f.add(e.what());
      }
    }
  }
  const Rational e8 = Rational::power(4, 8) / Rational::power(9, 8) / Rational(4);
  ++checks;
  if (last != e8 || !(last < Rational(1, 1000))) f.add("s=3 lambda(E_8) = " + last.str());
  finish(row, f, checks);
  const double secs = seconds_since(t0);
  row.observed += "; lambda(E_8) = " + last.str() + " ~ " + fmt(last.to_double(), 4) + " in " + fmt(secs, 2) + "s";
  if (secs >= 30) row.passed = false;
  row.expected = "exact equality for s in {3,4}, k <= 8; (4/9)^8/4 < 1e-3; < 30 s";
}

// 6. Set extrema three ways.
void extrema_cross_check(CriterionRow& row, const ReproduceOptions&) {
  Failures f;
  std::atomic<std::size_t> checks{0};
  std::vector<std::pair<int, int>> sets;
  for (int s = 3; s <= 8; ++s)
    for (int u = 0; u < s; ++u) sets.emplace_back(s, u);
  parallel_for(sets.size(), [&](std::size_t i) {
    const auto [s, u] = sets[i];
    const Hull h = set_extrema(s, u);
    const auto where = describe(s, u, {});
    if (comboset_extrema(block_alphabet(s, u)).hull() != h) f.add(where + ": comboset extrema differ");
    const auto b = audit::cylinder_bounds(s, u, Digits{}, 10);
    const Rational tail = h.length() * Rational::power(s, -10);
    if (b.min < h.lower || b.max > h.upper || b.min - h.lower > tail || h.upper - b.max > tail)
      f.add(where + ": brute-force bounds [" + b.min.str() + ", " + b.max.str() + "]");
    checks += 2;
  });
  finish(row, f, checks);
}

// 7. Box-count slope against the Moran root.
void box_count_oracle(CriterionRow& row, const ReproduceOptions& opt) {
  const std::vector<int> scales{4, 5, 6, 7, 8, 9, 10};
  struct Case {
    const char* name;
    ComboAlphabet alphabet;
  } cases[] = {{"S(3,0)", block_alphabet(3, 0)}, {"S(4,0)", block_alphabet(4, 0)}, {"tilde(3)", tilde_alphabet(3)}};
  row.passed = true;
  for (const auto& c : cases) {
    const auto t0 = Clock::now();
    const auto hulls = prefix_hulls(c.alphabet, 12);
    const double slope = box_count_estimate(hulls, c.alphabet.base(), scales, 12).slope;
    const double secs = seconds_since(t0);
    const double target = dim_alphabet(c.alphabet).alpha;
    const bool ok = std::abs(slope - target) <= opt.boxcount_tolerance && secs < 10;
    row.passed = row.passed && ok;
    row.observed += std::string(row.observed.empty() ? "" : "; ") + c.name + " slope " + fmt(slope, 5) + " vs " +
                    fmt(target, 5) + (ok ? "" : " (off)");
  }
  row.expected = "|slope - alpha| <= " + fmt(opt.boxcount_tolerance, 3) + ", < 10 s per set";
}

// 8. Normality dichotomy and a long S'_3 element.
void normality_dichotomy(CriterionRow& row, const ReproduceOptions& opt) {
  Failures f;
  std::size_t checks = 1;
  if (structural_zero_frequency(3) != Rational(1, 3) || !normal_candidate_exists(3).exists)
    f.add("s=3 should admit normal numbers");
  for (int s = 4; s <= 10; ++s) {
    ++checks;
    if (structural_zero_frequency(s) == Rational(1, s) || normal_candidate_exists(s).exists)
      f.add("s=" + std::to_string(s) + " should not admit normal numbers");
  }

  constexpr std::size_t k = 30000;
  const ComboAlphabet a = sprime3_alphabet();
  std::mt19937_64 rng(opt.seed ^ 8);
  Digits digits;
  while (digits.size() < k) {
    const auto& w = a.word(rng() % a.size());
    digits.insert(digits.end(), w.begin(), w.end());
  }
  const DigitString x(3, digits, a.word(0));
  const FrequencyProfile p = digit_frequencies(x, k);
  double worst = 0;
  for (const auto& fr : p.frequencies()) worst = std::max(worst, std::abs(fr.to_double() - 1.0 / 3));
  ++checks;
  if (worst > 0.01) f.add("digit frequency off by " + fmt(worst, 3));

  const PrefixDecode decoded = decode_prefix(x, 0, k);
  std::vector<std::size_t> boundaries;
  std::size_t at = 0;
  for (int c : decoded.blocks) boundaries.push_back(at += static_cast<std::size_t>(c));
  parallel_for(boundaries.size(), [&](std::size_t i) {
    const IdentityResidual r = structural_identity_residual(x, 0, boundaries[i]);
    if (r.residual != 0 || !r.on_boundary)
      f.add("residual " + std::to_string(r.residual) + " at k=" + std::to_string(boundaries[i]));
  });
  checks += boundaries.size();
  finish(row, f, checks);
  row.observed += "; max |freq - 1/3| = " + fmt(worst, 3) + ", " + std::to_string(boundaries.size()) + " boundaries";
  row.expected = "only s=3 admits normal numbers; freq within 0.01; residual 0 at every boundary";
}

// 9. Codec roundtrip and injectivity.
void bijection(CriterionRow& row, const ReproduceOptions& opt) {
  constexpr std::size_t kPerSet = 10000;
  Failures f;
  std::atomic<std::size_t> checks{0};
  std::vector<std::pair<int, int>> sets;
  for (int s = 3; s <= 8; ++s)
    for (int u = 0; u < s; ++u) sets.emplace_back(s, u);
  parallel_for(sets.size(), [&](std::size_t i) {
    const auto [s, u] = sets[i];
    std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(s * 100 + u));
    std::vector<std::pair<Rational, BlockSequence>> images;
    images.reserve(kPerSet);
    for (std::size_t n = 0; n < kPerSet; ++n) {
      const BlockSequence b(s, u, random_blocks(rng, s, u, rng() % 9), random_blocks(rng, s, u, 1 + rng() % 3));
      const DigitString d = block_encode(b);
      if (!(block_decode(d, u) == b) || !(block_decode(d.canonical(), u) == b))
        f.add(describe(s, u, b.blocks()) + ": roundtrip failed");
      images.emplace_back(digits_to_rational(d), b);
    }
    std::sort(images.begin(), images.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t n = 1; n < images.size(); ++n)
      if (images[n].first == images[n - 1].first && !(images[n].second == images[n - 1].second))
        f.add(describe(s, u, images[n].second.blocks()) + ": two sequences share the value " + images[n].first.str());
    checks += 2 * kPerSet;
  });
  finish(row, f, checks);
  row.expected = "0 roundtrip failures, 0 collisions over 10^4 sequences per (s,u), s in 3..8";
}

const std::vector<Spec>& specs() {
  static const std::vector<Spec> all{
      {1, "dimension", "closed-form dimensions", closed_form_dimensions},
      {2, "dimension", "degenerate alphabets", remark_edge_cases},
      {3, "cylinder", "cylinder identities", cylinder_identities},
      {4, "cylinder", "ordering and gaps", ordering_and_gaps},
      {5, "measure", "covering measure recursion", measure_recursion},
      {6, "cylinder", "extrema cross-check", extrema_cross_check},
      {7, "dimension", "box-count oracle", box_count_oracle},
      {8, "normality", "normality dichotomy", normality_dichotomy},
      {9, "codec", "encode/decode bijection", bijection},
  };
  return all;
}

}  // namespace

std::vector<int> select_criteria(const std::vector<std::string>& only) {
  std::set<int> chosen;
  for (const auto& item : only) {
    bool matched = false;
    for (const auto& s : specs()) {
      if (item == s.group || item == std::to_string(s.id)) {
        chosen.insert(s.id);
        matched = true;
      }
    }
    if (!matched) throw RangeError("unknown criterion or group '" + item + "'");
  }
  if (only.empty())
    for (const auto& s : specs()) chosen.insert(s.id);
  return {chosen.begin(), chosen.end()};
}

std::vector<CriterionRow> reproduce_all(const ReproduceOptions& options) {
  if (!(options.boxcount_tolerance > 0)) throw RangeError("box-count tolerance must be positive");
  std::vector<CriterionRow> rows;
  for (int id : select_criteria(options.only)) {
    const Spec& s = specs()[static_cast<std::size_t>(id - 1)];
    CriterionRow row;
    row.id = s.id;
    row.group = s.group;
    row.title = s.title;
    const auto t0 = Clock::now();
    try {
      s.run(row, options);
    } catch (const std::exception& e) {
      row.passed = false;
      row.observed = std::string("threw: ") + e.what();
    }
    row.seconds = seconds_since(t0);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_table(const std::vector<CriterionRow>& rows) {
  std::string out;
  std::size_t failed = 0;
  for (const auto& r : rows) {
    char head[96];
    std::snprintf(head, sizeof head, "%s criterion %d [%s] %s (%.2fs)", r.passed ? "PASS" : "FAIL", r.id,
                  r.group.c_str(), r.title.c_str(), r.seconds);
    out += std::string(head) + "\n    observed: " + r.observed + "\n    expected: " + r.expected + "\n";
    failed += r.passed ? 0 : 1;
  }
  out += std::to_string(rows.size() - failed) + "/" + std::to_string(rows.size()) + " criteria passed\n";
  return out;
}

json rows_to_json(const std::vector<CriterionRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"id", r.id},
                   {"group", r.group},
                   {"title", r.title},
                   {"passed", r.passed},
                   {"observed", r.observed},
                   {"expected", r.expected}});
  return out;
}

}  // namespace sadic::cli

#include "sadic/cli/app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <map>
#include <optional>

#include "sadic/cli/io.hpp"
#include "sadic/cli/reproduce.hpp"
#include "sadic/cylinder.hpp"
#include "sadic/dimension.hpp"
#include "sadic/error.hpp"
#include "sadic/measure.hpp"
#include "sadic/normality.hpp"

namespace sadic::cli {
namespace {

struct Report {
  json body;
  std::string csv;  // empty when the command has no CSV form
  int exit_code = kOk;
  std::string text;  // preferred human-readable form (reproduce)
};

std::string format_of(const RunConfig& c, const char* fallback) { return c.format.empty() ? fallback : c.format; }

double tolerance_or(const RunConfig& c, double fallback) { return c.tolerance > 0 ? c.tolerance : fallback; }

json counts_json(const std::map<int, long>& counts) {
  json j = json::object();
  for (const auto& [k, n] : counts) j[std::to_string(k)] = n;
  return j;
}

Report cmd_dim(const RunConfig& c) {
  Report r;
  r.body = envelope("dim");
  const double tol = tolerance_or(c, kDefaultTolerance);
  DimensionResult d;
  if (!c.alphabet.empty()) {
    const ComboAlphabet a = load_alphabet(c.alphabet);
    r.body["set"] = c.alphabet;
    r.body["s"] = a.base();
    r.body["counts"] = counts_json(a.length_counts());
    r.body["prefix_free"] = a.prefix_free();
    d = dim_alphabet(a, tol);
  } else {
    check_set_params(c.s, c.u);
    r.body["set"] = "S(" + std::to_string(c.s) + "," + std::to_string(c.u) + ")";
    r.body["s"] = c.s;
    r.body["u"] = c.u;
    r.body["counts"] = counts_json(block_alphabet(c.s, c.u).length_counts());
    d = dim_S(c.s, c.u, tol);
  }
  r.body.update(to_json(d));
  r.body["tolerance"] = tol;
  char line[160];
  std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,", d.alpha, d.residual, d.lo, d.hi);
  r.csv = std::string("alpha,residual,lo,hi,closed_form\n") + line +
          (d.closed_form ? d.closed_form->expression : std::string()) + "\n";
  return r;
}

Report cmd_cylinder(const RunConfig& c) {
  Report r;
  const Digits base = parse_digits(c.base, c.s);
  const Cylinder cyl = make_cylinder(c.s, c.u, base);
  r.body = envelope("cylinder");
  r.body.update(to_json(cyl));
  r.body["digit_length"] = cyl.digit_length();
  r.csv = "field,num,den,approx\ninf," + csv_rational(cyl.inf) + "\nsup," + csv_rational(cyl.sup) + "\ndiameter," +
          csv_rational(cyl.diameter()) + "\n";
  if (c.children) {
    r.body["children"] = json::array();
    for (const auto& k : children(c.s, c.u, base)) r.body["children"].push_back(to_json(k));
  }
  return r;
}

Report cmd_gaps(const RunConfig& c) {
  Report r;
  const Digits base = parse_digits(c.base, c.s);
  check_blocks(c.s, 0, base);
  r.body = envelope("gaps");
  r.body["s"] = c.s;
  r.body["u"] = 0;
  r.body["base"] = base;
  r.body["gaps"] = json::array();
  r.csv = "p,lower_num,lower_den,lower_approx,upper_num,upper_den,upper_approx\n";
  std::vector<int> ps;
  if (c.p != 0) {
    ps.push_back(c.p);
  } else {
    for (int p = 1; p <= c.s - 2; ++p) ps.push_back(p);
  }
  for (int p : ps) {
    const GapInterval g = gap_interval(c.s, base, p);
    r.body["gaps"].push_back({{"p", p}, {"lower", to_json(g.lower)}, {"upper", to_json(g.upper)}});
    r.csv += std::to_string(p) + "," + csv_rational(g.lower) + "," + csv_rational(g.upper) + "\n";
  }
  return r;
}

Report cmd_generate(const RunConfig& c) {
  Report r;
  check_set_params(c.s, c.u);
  Digits blocks = parse_digits(c.blocks, c.s);
  std::optional<Digits> tail;
  if (!c.tail.empty()) tail = parse_digits(c.tail, c.s);
  if (c.random > 0) {
    Digits admissible;
    for (int b = 1; b < c.s; ++b)
      if (b != c.u) admissible.push_back(b);
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<std::size_t> pick(0, admissible.size() - 1);
    for (std::size_t i = 0; i < c.random; ++i) blocks.push_back(admissible[pick(rng)]);
  }
  const BlockSequence seq(c.s, c.u, blocks, tail);
  // A finite list stands for its blocks followed by u forever; show those digits.
  DigitString digits = block_encode(seq);
  if (!seq.tail() && c.u != 0) digits = DigitString(c.s, digits.preperiod(), Digits{c.u});
  const Rational value = element_value(seq);
  r.body = envelope("generate");
  r.body["s"] = c.s;
  r.body["u"] = c.u;
  r.body["blocks"] = seq.blocks();
  r.body["tail"] = seq.tail() ? json(*seq.tail()) : json(nullptr);
  r.body["digits"] = to_json(digits);
  r.body["value"] = to_json(value);
  r.body["member"] = seq.tail().has_value();
  r.csv = "num,den,approx\n" + csv_rational(value) + "\n";
  return r;
}

Report cmd_boxcount(const RunConfig& c) {
  Report r;
  const ComboAlphabet a = c.alphabet.empty() ? block_alphabet(c.s, c.u) : load_alphabet(c.alphabet);
  const std::vector<int> scales = parse_scales(c.scales);
  const auto hulls = prefix_hulls(a, c.depth);
  const BoxCountResult b = box_count_estimate(hulls, a.base(), scales, c.depth);
  const DimensionResult moran = dim_alphabet(a);
  r.body = envelope("boxcount");
  r.body["set"] = c.alphabet.empty() ? "S(" + std::to_string(c.s) + "," + std::to_string(c.u) + ")" : c.alphabet;
  r.body["s"] = a.base();
  r.body["depth"] = c.depth;
  r.body["hulls"] = hulls.size();
  r.body["slope"] = b.slope;
  r.body["fitted"] = b.fitted;
  r.body["moran_alpha"] = moran.alpha;
  r.body["counts"] = json::array();
  r.csv = "exponent,epsilon,count\n";
  for (const auto& sc : b.counts) {
    r.body["counts"].push_back({{"scale", sc.exponent}, {"count", sc.count}});
    char eps[32];
    std::snprintf(eps, sizeof eps, "%.17g", std::pow(static_cast<double>(a.base()), -sc.exponent));
    r.csv += std::to_string(sc.exponent) + "," + eps + "," + std::to_string(sc.count) + "\n";
  }
  return r;
}

Report cmd_measure(const RunConfig& c) {
  Report r;
  const auto rows = measure_decay_report(c.s, c.u, c.k, c.budget ? c.budget : kDefaultBitBudget);
  r.body = envelope("measure");
  r.body["s"] = c.s;
  r.body["u"] = c.u;
  r.body["sigma"] = to_json(sigma(c.s, c.u));
  r.body["d0"] = to_json(set_diameter(c.s, c.u));
  r.body["stages"] = json::array();
  r.csv = "k,num,den,approx\n";
  for (const auto& row : rows) {
    r.body["stages"].push_back({{"k", row.k}, {"length", to_json(row.length)}});
    r.csv += std::to_string(row.k) + "," + csv_rational(row.length) + "\n";
  }
  return r;
}

Report cmd_freq(const RunConfig& c) {
  Report r;
  std::optional<Digits> period;
  if (!c.period.empty()) period = parse_digits(c.period, c.s);
  const DigitString d(c.s, parse_digits(c.prefix, c.s), period);
  const FrequencyProfile p = digit_frequencies(d, c.k);
  r.body = envelope("freq");
  r.body["s"] = c.s;
  r.body["k"] = c.k;
  r.body["counts"] = p.counts;
  r.body["frequencies"] = json::array();
  r.csv = "digit,count,num,den,approx\n";
  for (int i = 0; i < c.s; ++i) {
    const Rational f = p.frequency(i);
    r.body["frequencies"].push_back(to_json(f));
    r.csv += std::to_string(i) + "," + std::to_string(p.counts[static_cast<std::size_t>(i)]) + "," + csv_rational(f) + "\n";
  }
  if (c.u_given) {
    const IdentityResidual res = structural_identity_residual(d, c.u, c.k);
    r.body["u"] = c.u;
    r.body["identity"] = {{"residual", res.residual}, {"on_boundary", res.on_boundary}, {"bound", res.bound},
                          {"note", res.note}};
  }
  return r;
}

Report cmd_normal(const RunConfig& c) {
  Report r;
  const NormalVerdict v = normal_candidate_exists(c.s);
  r.body = envelope("normal");
  r.body["s"] = c.s;
  r.body["exists"] = v.exists;
  r.body["zero_frequency"] = to_json(v.zero_frequency);
  r.body["uniform"] = to_json(v.uniform);
  r.body["explanation"] = v.explanation;
  if (v.exists) {
    const NormalityBounds b = normality_dimension_bounds();
    r.body["dimension_bounds"] = {
        {"lower", {{"alpha", b.lower.alpha}, {"closed_form", b.lower_exact.expression}}},
        {"upper", {{"alpha", b.upper.alpha}, {"closed_form", b.upper_exact.expression}}}};
  }
  r.csv = "s,exists,zero_num,zero_den,zero_approx\n" + std::to_string(c.s) + "," + (v.exists ? "true" : "false") +
          "," + csv_rational(v.zero_frequency) + "\n";
  return r;
}

Report cmd_reproduce(const RunConfig& c) {
  Report r;
  ReproduceOptions opt;
  opt.seed = c.seed;
  if (c.tolerance > 0) opt.boxcount_tolerance = c.tolerance;
  for (const auto& item : parse_token_list(c.only)) opt.only.push_back(item);
  const auto rows = reproduce_all(opt);
  r.body = envelope("reproduce");
  r.body["seed"] = c.seed;
  r.body["rows"] = rows_to_json(rows);
  r.text = format_table(rows);
  for (const auto& row : rows)
    if (!row.passed) r.exit_code = kDomainError;
  return r;
}

Report run_command(const RunConfig& c) {
  if (c.subcommand == "dim") return cmd_dim(c);
  if (c.subcommand == "cylinder") return cmd_cylinder(c);
  if (c.subcommand == "gaps") return cmd_gaps(c);
  if (c.subcommand == "generate") return cmd_generate(c);
  if (c.subcommand == "boxcount") return cmd_boxcount(c);
  if (c.subcommand == "measure") return cmd_measure(c);
  if (c.subcommand == "freq") return cmd_freq(c);
  if (c.subcommand == "normal") return cmd_normal(c);
  if (c.subcommand == "reproduce") return cmd_reproduce(c);
  throw RangeError("unknown subcommand '" + c.subcommand + "'");
}

void validate(const RunConfig& c) {
  if (c.depth < 1) throw RangeError("--depth must be at least 1");
  if (c.tolerance < 0) throw RangeError("--tolerance must be positive");
  if (!c.format.empty() && c.format != "json" && c.format != "csv" &&
      !(c.subcommand == "reproduce" && c.format == "text"))
    throw RangeError("--format must be json or csv");
}

}  // namespace

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const Report r = run_command(config);
    const char* fallback = config.subcommand == "measure" ? "csv" : (config.subcommand == "reproduce" ? "text" : "json");
    const std::string format = format_of(config, fallback);
    std::string payload;
    if (format == "csv" && !r.csv.empty()) {
      payload = r.csv;
    } else if (format == "text" && !r.text.empty()) {
      payload = r.text;
    } else {
      payload = r.body.dump(2) + "\n";
    }
    if (config.output.empty()) {
      out << payload;
    } else {
      std::ofstream file(config.output);
      if (!file) throw ResourceError("cannot write '" + config.output + "'");
      file << payload;
    }
    return r.exit_code;
  } catch (const DomainError& e) {
    err << "sadic " << config.subcommand << ": " << e.what() << "\n";
    return kDomainError;
  } catch (const ResourceError& e) {
    err << "sadic " << config.subcommand << ": resource limit: " << e.what() << "\n";
    return kResourceError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digit-restricted s-adic sets: cylinders, dimensions, measure and digit frequencies", "sadic"};
  app.set_version_flag("--version", SADIC_VERSION);
  app.require_subcommand(1);
  RunConfig c;
  app.add_option("--seed", c.seed, "Seed for randomized sampling")->capture_default_str();

  const auto with_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json or csv");
    sub->add_option("--output,-o", c.output, "Write the report to a file");
  };
  const auto with_set = [&](CLI::App* sub) {
    sub->add_option("--s", c.s, "Base s >= 3")->capture_default_str();
    sub->add_option_function<int>(
        "--u", [&](int u) { c.u = u; c.u_given = true; }, "Marker digit u (default 0)");
  };

  auto* dim = app.add_subcommand("dim", "Dimension of S(s,u) or of a combination alphabet");
  with_set(dim);
  dim->add_option("--alphabet", c.alphabet, "sprime3, tilde:<s>, block:<s>:<u> or a JSON file");
  dim->add_option("--tolerance", c.tolerance, "Bisection bracket width (default 1e-12)");
  with_format(dim);

  auto* cyl = app.add_subcommand("cylinder", "Endpoints of a cylinder");
  with_set(cyl);
  cyl->add_option("--base", c.base, "Blocks, e.g. 1,2");
  cyl->add_flag("--children", c.children, "Also list the rank n+1 children");
  with_format(cyl);

  auto* gaps = app.add_subcommand("gaps", "Gap intervals between sibling cylinders of S(s,0)");
  gaps->add_option("--s", c.s, "Base s >= 3")->capture_default_str();
  gaps->add_option("--base", c.base, "Blocks of the parent cylinder");
  gaps->add_option("--p", c.p, "Sibling pair p, p+1 (default: all)");
  with_format(gaps);

  auto* gen = app.add_subcommand("generate", "Digits and value of an element from its blocks");
  with_set(gen);
  gen->add_option("--blocks", c.blocks, "Leading blocks");
  gen->add_option("--tail", c.tail, "Repeating blocks (omit for a finite partial sum)");
  gen->add_option("--random", c.random, "Append this many random blocks (see --seed)");
  with_format(gen);

  auto* box = app.add_subcommand("boxcount", "Box-counting slope from cylinder hulls");
  with_set(box);
  box->add_option("--alphabet", c.alphabet, "Use a combination alphabet instead of S(s,u)");
  box->add_option("--depth", c.depth, "Hull depth in digits")->capture_default_str();
  box->add_option("--scales", c.scales, "Exponents j of s^-j, e.g. 4..10")->capture_default_str();
  with_format(box);

  auto* meas = app.add_subcommand("measure", "Length of the covering stages E_1..E_k");
  with_set(meas);
  meas->add_option("--k", c.k, "Last stage")->capture_default_str();
  meas->add_option("--budget", c.budget, "Denominator bit budget per stage");
  with_format(meas);

  auto* freq = app.add_subcommand("freq", "Digit frequencies over a prefix");
  with_set(freq);
  freq->add_option("--prefix", c.prefix, "Preperiod digits");
  freq->add_option("--period", c.period, "Repeating digits");
  freq->add_option("--k", c.k, "Prefix length")->required();
  with_format(freq);

  auto* normal = app.add_subcommand("normal", "Whether S(s,0) can hold normal numbers");
  normal->add_option("--s", c.s, "Base s >= 3")->capture_default_str();
  with_format(normal);

  auto* repro = app.add_subcommand("reproduce", "Run the acceptance criteria");
  repro->add_option("--only", c.only, "Comma-separated criterion ids or groups");
  repro->add_option("--tolerance", c.tolerance, "Box-count tolerance (default 0.05)");
  repro->add_option("--seed", c.seed, "Seed for randomized sampling");
  repro->add_option("--format", c.format, "text or json");
  repro->add_option("--output,-o", c.output, "Write the report to a file");

  std::vector<std::string> argv_store{"sadic"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << SADIC_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "sadic: " << e.what() << "\n";
    return kDomainError;
  }
  for (const auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  return dispatch(c, out, err);
}

}  // namespace sadic::cli

#include "sadic/cli/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include "sadic/error.hpp"

namespace sadic::cli {
namespace {

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw RangeError("not an integer: '" + std::string(text) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

json to_json(const Rational& r) {
  return {{"num", r.numerator()}, {"den", r.denominator()}, {"approx", r.to_double()}};
}

json to_json(const DigitString& d) {
  json j{{"s", d.base()}, {"preperiod", d.preperiod()}};
  j["period"] = d.period() ? json(*d.period()) : json(nullptr);
  return j;
}

json to_json(const Cylinder& c) {
  return {{"s", c.s},         {"u", c.u},         {"base", c.base},
          {"inf", to_json(c.inf)}, {"sup", to_json(c.sup)}, {"diameter", to_json(c.diameter())}};
}

json to_json(const DimensionResult& r) {
  json j{{"alpha", r.alpha}, {"residual", r.residual}, {"bracket", {r.lo, r.hi}}};
  if (r.closed_form)
    j["closed_form"] = {{"expression", r.closed_form->expression}, {"value", r.closed_form->value}};
  else
    j["closed_form"] = nullptr;
  return j;
}

Rational rational_from_json(const json& j) {
  return Rational::parse(j.at("num").get<std::string>(), j.at("den").get<std::string>());
}

json envelope(std::string_view command) {
  return {{"version", SADIC_VERSION}, {"schema", kSchemaVersion}, {"command", command}};
}

std::string csv_rational(const Rational& r) {
  char approx[32];
  std::snprintf(approx, sizeof approx, "%.17g", r.to_double());
  return r.numerator() + "," + r.denominator() + "," + approx;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_int(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Digits parse_digits(std::string_view text, int s) {
  text = trim(text);
  Digits out;
  if (text.find(',') != std::string_view::npos) {
    out = parse_int_list(text);
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw InvalidDigit(std::string("not a digit: '") + ch + "'");
      out.push_back(ch - '0');
    }
  }
  for (int d : out)
    if (d < 0 || d >= s) throw InvalidDigit("digit " + std::to_string(d) + " is outside 0.." + std::to_string(s - 1));
  return out;
}

std::vector<std::string> parse_token_list(std::string_view text) {
  std::vector<std::string> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<int> parse_scales(std::string_view text) {
  text = trim(text);
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) return parse_int_list(text);
  const int lo = parse_int(trim(text.substr(0, dots)));
  const int hi = parse_int(trim(text.substr(dots + 2)));
  if (hi < lo) throw RangeError("empty scale range '" + std::string(text) + "'");
  std::vector<int> out;
  for (int j = lo; j <= hi; ++j) out.push_back(j);
  return out;
}

ComboAlphabet alphabet_from_json(const json& j) {
  try {
    const int s = j.at("s").get<int>();
    if (s < 2) throw InvalidAlphabet("alphabet base must be at least 2");
    std::vector<Digits> words;
    for (const auto& w : j.at("combos")) {
      if (w.is_string()) {
        if (s > 10) throw InvalidAlphabet("string words need s <= 10; use integer arrays");
        words.push_back(parse_digits(w.get<std::string>(), s));
      } else {
        words.push_back(w.get<Digits>());
      }
    }
    return ComboAlphabet(s, std::move(words));
  } catch (const json::exception& e) {
    throw InvalidAlphabet(std::string("malformed alphabet: ") + e.what());
  } catch (const InvalidDigit& e) {
    throw InvalidAlphabet(e.what());
  }
}

ComboAlphabet load_alphabet(const std::string& source) {
  if (source == "sprime3") return sprime3_alphabet();
  if (source.rfind("tilde:", 0) == 0) return tilde_alphabet(parse_int(source.substr(6)));
  if (source.rfind("block:", 0) == 0) {
    const auto colon = source.find(':', 6);
    if (colon == std::string::npos) throw InvalidAlphabet("expected block:<s>:<u>, got '" + source + "'");
    return block_alphabet(parse_int(std::string_view(source).substr(6, colon - 6)),
                          parse_int(std::string_view(source).substr(colon + 1)));
  }
  std::ifstream in(source);
  if (!in) throw InvalidAlphabet("cannot open alphabet file '" + source + "': file not found");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidAlphabet("alphabet file '" + source + "' is not valid JSON: " + e.what());
  }
  return alphabet_from_json(j);
}

}  // namespace sadic::cli

#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "sadic/comboset.hpp"
#include "sadic/cylinder.hpp"
#include "sadic/digits.hpp"
#include "sadic/dimension.hpp"
#include "sadic/rational.hpp"

namespace sadic::cli {

using nlohmann::json;

/// Report schema version, bumped on any change to field names or shapes.
inline constexpr int kSchemaVersion = 1;

/// {"num": "...", "den": "...", "approx": double}
json to_json(const Rational& r);
json to_json(const DigitString& d);
json to_json(const Cylinder& c);
json to_json(const DimensionResult& r);

/// Rational back from its JSON form.
Rational rational_from_json(const json& j);

/// Common envelope: {"version": ..., "schema": ..., "command": ...}.
json envelope(std::string_view command);

/// "num,den,approx" with the double printed to 17 significant digits.
std::string csv_rational(const Rational& r);

/// Digits from "021" (one digit per character) or "0,2,1".
Digits parse_digits(std::string_view text, int s);

/// Comma-separated integers; the empty string gives an empty list.
std::vector<int> parse_int_list(std::string_view text);

/// Comma-separated words with surrounding spaces removed; empty items dropped.
std::vector<std::string> parse_token_list(std::string_view text);

/// "4..10" or "4,5,6".
std::vector<int> parse_scales(std::string_view text);

/// Builtin names sprime3, tilde:<s>, block:<s>:<u>, or a JSON file
/// {"s": n, "combos": ["021", ...] or [[0,2,1], ...]}. Throws InvalidAlphabet
/// for missing or malformed files.
ComboAlphabet load_alphabet(const std::string& source);
ComboAlphabet alphabet_from_json(const json& j);

}  // namespace sadic::cli

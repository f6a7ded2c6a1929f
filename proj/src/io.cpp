#include "qpr/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qpr {

namespace {

void skip_spaces(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// [sign] digits [ / digits ]
Rational parse_rational(const std::string& s, size_t& i) {
  skip_spaces(s, i);
  size_t start = i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  size_t digits_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits_start) throw InputError("cyclotomic literal: expected digits at '" +
                                          s.substr(start) + "'");
  std::string num = s.substr(start, i - start);
  std::string den = "1";
  if (i < s.size() && s[i] == '/') {
    ++i;
    size_t den_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start) throw InputError("cyclotomic literal: expected denominator digits");
    den = s.substr(den_start, i - den_start);
  }
  Rational q(num + "/" + den, 10);
  q.canonicalize();
  return q;
}

}  // namespace

CycNum parse_cyclotomic_literal(const std::string& text, long long level) {
  if (level < 1) throw InputError("cyclotomic literal: level must be >= 1");
  size_t i = 0;
  skip_spaces(text, i);
  if (i == text.size()) throw InputError("cyclotomic literal: empty string");

  std::vector<Rational> raw(static_cast<size_t>(level), Rational(0));
  bool first = true;
  while (true) {
    skip_spaces(text, i);
    if (i == text.size()) {
      if (first) throw InputError("cyclotomic literal: empty string");
      break;
    }
    int sign = 1;
    if (!first) {
      if (text[i] == '+') {
        ++i;
      } else if (text[i] == '-') {
        sign = -1;
        ++i;
      } else {
        throw InputError("cyclotomic literal: expected '+' or '-' near '" + text.substr(i) + "'");
      }
      skip_spaces(text, i);
    }
    Rational coeff = parse_rational(text, i);
    if (sign < 0) coeff = -coeff;
    long long power = 0;
    skip_spaces(text, i);
    if (i + 2 < text.size() && text[i] == '*' && text[i + 1] == 'z' && text[i + 2] == '^') {
      i += 3;
      skip_spaces(text, i);
      size_t start = i;
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
      size_t ds = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == ds) throw InputError("cyclotomic literal: expected exponent after z^");
      power = std::stoll(text.substr(start, i - start));
    }
    long long k = ((power % level) + level) % level;
    raw[static_cast<size_t>(k)] += coeff;
    first = false;
  }
  return CycNum::from_coeffs(level, std::move(raw));
}

namespace {
using nlohmann::json;
}

LiftingDatum parse_input_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("input is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.contains("group") || !doc["group"].contains("invariant_factors"))
      throw InputError("input: missing group.invariant_factors");
    std::vector<long long> factors = doc["group"]["invariant_factors"].get<std::vector<long long>>();
    FinAbGroup group(factors);

    if (!doc.contains("generators") || !doc["generators"].is_array() ||
        doc["generators"].empty())
      throw InputError("input: missing non-empty generators array");

    LiftingDatum d{group, 0, {}, {}, {}};
    for (const auto& gen : doc["generators"]) {
      if (!gen.contains("g") || !gen.contains("chi"))
        throw InputError("input: each generator needs fields g and chi");
      d.g.push_back(group.element(gen["g"].get<std::vector<long long>>()));
      d.chi.push_back(group.character(gen["chi"].get<std::vector<long long>>()));
    }
    d.theta = static_cast<int>(d.g.size());

    if (!doc.contains("alpha")) throw InputError("input: missing alpha matrix");
    const auto& alpha = doc["alpha"];
    if (!alpha.is_array() || static_cast<int>(alpha.size()) != d.theta)
      throw InputError("input: alpha must be a theta x theta matrix of literals");
    long long level = group.exponent();
    for (const auto& row : alpha) {
      if (!row.is_array() || static_cast<int>(row.size()) != d.theta)
        throw InputError("input: alpha must be a theta x theta matrix of literals");
      std::vector<CycNum> out_row;
      for (const auto& cell : row)
        out_row.push_back(parse_cyclotomic_literal(cell.get<std::string>(), level));
      d.alpha.push_back(std::move(out_row));
    }
    return d;
  } catch (const json::exception& e) {
    throw InputError(std::string("input: malformed document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("input: ") + e.what());
  }
}

LiftingDatum load_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_input_document(buf.str());
}

std::string input_document_to_json(const LiftingDatum& d) {
  nlohmann::ordered_json doc;
  doc["group"]["invariant_factors"] = d.group.invariant_factors();
  doc["generators"] = nlohmann::ordered_json::array();
  for (int i = 0; i < d.theta; ++i) {
    nlohmann::ordered_json gen;
    gen["g"] = d.g[i].e;
    gen["chi"] = d.chi[i].e;
    doc["generators"].push_back(gen);
  }
  doc["alpha"] = nlohmann::ordered_json::array();
  for (const auto& row : d.alpha) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (const auto& cell : row) jrow.push_back(cell.to_string());
    doc["alpha"].push_back(jrow);
  }
  return doc.dump(2);
}

}  // namespace qpr

#include "hadprod/polyspec.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace hadprod {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

json to_object(const Poly& p, std::optional<std::size_t> tag) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  if (p.is_zero()) coeffs.push_back("0");
  json obj = {{"coeffs", coeffs}};
  if (tag) obj["degree_tag"] = *tag;
  return obj;
}

} // namespace

Rational parse_rational(const std::string& text) {
  const std::string s = trim(text);
  const auto slash = s.find('/');
  const std::string num = trim(s.substr(0, slash));
  const std::string den = slash == std::string::npos ? "1" : trim(s.substr(slash + 1));
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw PreconditionError("malformed coefficient '" + s + "' (expected an integer or num/den)");
  Integer n(num[0] == '+' ? num.substr(1) : num), q(den);
  if (q == 0) throw PreconditionError("zero denominator in coefficient '" + s + "'");
  Rational r(n, q);
  r.canonicalize();
  return r;
}

Poly parse_coeffs(const std::string& text) {
  if (trim(text).empty()) throw PreconditionError("empty coefficient list");
  std::vector<Rational> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
  if (!text.empty() && text.back() == ',') throw PreconditionError("trailing comma in coefficient list");
  return Poly(std::move(c));
}

PolySpec parse_polyspec_json(const std::string& text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw PreconditionError(std::string("invalid PolySpec JSON: ") + e.what());
  }
  if (!obj.is_object() || !obj.contains("coeffs") || !obj["coeffs"].is_array())
    throw PreconditionError("PolySpec must be an object with a \"coeffs\" array");
  if (obj["coeffs"].empty()) throw PreconditionError("PolySpec \"coeffs\" is empty");
  std::vector<Rational> c;
  for (const auto& v : obj["coeffs"]) {
    if (v.is_string()) c.push_back(parse_rational(v.get<std::string>()));
    else if (v.is_number_integer()) c.push_back(parse_rational(v.dump()));
    else throw PreconditionError("PolySpec coefficient must be a string or an integer: " + v.dump());
  }
  PolySpec spec{Poly(std::move(c)), std::nullopt};
  if (obj.contains("degree_tag")) {
    const auto& t = obj["degree_tag"];
    if (!t.is_number_unsigned()) throw PreconditionError("PolySpec \"degree_tag\" must be a nonnegative integer");
    spec.degree_tag = t.get<std::size_t>();
    if (spec.poly.degree() && *spec.poly.degree() > *spec.degree_tag)
      throw PreconditionError("PolySpec \"degree_tag\" is below the degree of the polynomial");
  }
  return spec;
}

PolySpec read_polyspec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read PolySpec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_polyspec_json(buf.str());
}

std::string polyspec_json(const Poly& p, std::optional<std::size_t> degree_tag) {
  return to_object(p, degree_tag).dump();
}

std::string polyspec_json(const TaggedPoly& t) { return polyspec_json(t.poly, t.ref_degree); }

} // namespace hadprod

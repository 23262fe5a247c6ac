#ifndef HADPROD_POLYSPEC_HPP
#define HADPROD_POLYSPEC_HPP

#include "hadprod/operators.hpp"
#include "hadprod/poly.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace hadprod {

/// Wire form of a polynomial: ascending coefficients plus an optional degree tag.
struct PolySpec {
  Poly poly;
  std::optional<std::size_t> degree_tag;
};

/// One coefficient: an integer or "num/den" with nonzero den.
Rational parse_rational(const std::string& text);

/// Comma-separated ascending coefficients, e.g. "1,-2,3/4".
Poly parse_coeffs(const std::string& text);

/// {"coeffs": ["1", "3/4"], "degree_tag": 3}; integers are also accepted as
/// JSON numbers. The tag must not be below the parsed degree.
PolySpec parse_polyspec_json(const std::string& text);

/// Reads one PolySpec JSON object from a file.
PolySpec read_polyspec_file(const std::string& path);

/// Serializes to the JSON object form; the tag is omitted when absent.
std::string polyspec_json(const Poly& p, std::optional<std::size_t> degree_tag = std::nullopt);
std::string polyspec_json(const TaggedPoly& t);

} // namespace hadprod

#endif

#include "sposet/rational.hpp"

#include "sposet/errors.hpp"

namespace sposet {

std::string to_string(const Rational& value) {
  return value.str();
}

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw InputError("not a rational number: '" + text + "'");
  }
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace sposet

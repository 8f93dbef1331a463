#include "pin2fill/rational.hpp"

#include <cctype>
#include <sstream>

namespace pin2fill {

Int floor_rational(const Rational& r) {
  Int n = numerator(r);
  Int d = denominator(r);  // always > 0 in canonical form
  Int q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;  // cpp_rational streams as "p" or "p/q" in lowest terms
  return os.str();
}

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') i++;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    i++;
    digits++;
  }
  if (digits == 0) return std::nullopt;
  std::string num = text.substr(0, i);
  if (i == text.size()) return Rational(Int(num));
  if (text[i] != '/') return std::nullopt;
  i++;
  std::size_t den_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) i++;
  if (i != text.size() || den_start == i) return std::nullopt;
  Int den(text.substr(den_start));
  if (den == 0) return std::nullopt;
  return Rational(Int(num), den);
}

}  // namespace pin2fill

#include "cheby/rational.hpp"

#include <cctype>
#include <limits>

#include "cheby/errors.hpp"

namespace cheby {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool valid_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  };
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer_token(num) || !valid_integer_token(den)) fail();
  Integer n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) fail();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational mod_rational(const Rational& x, const Rational& period) {
  Rational q = x / period;
  Integer fl = floor_rational(q);
  Rational out = x - Rational(fl) * period;
  // Guard against x being an exact multiple.
  if (out == period) out = 0;
  return out;
}

Integer floor_rational(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Integer denominator_lcm(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  return l;
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

std::int64_t to_int64(const Rational& r) {
  if (!is_integral(r)) throw Error(ErrorCode::Overflow, "not an integer: " + to_string(r));
  return to_int64(r.get_num());
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::Overflow, "integer out of range: " + z.get_str());
  long v = z.get_si();
  return static_cast<std::int64_t>(v);
}

}  // namespace cheby

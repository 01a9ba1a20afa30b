#include "folres/rational.hpp"

#include <sstream>

#include "folres/error.hpp"

namespace folres {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
  if (sgn(den) == 0) fail(Errc::MalformedInput, "zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Errc::MalformedInput, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(Errc::MalformedInput, "inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(Errc::MalformedInput, "empty rational literal");
  auto slash = s.find('/');
  auto check_int = [&](const std::string& t) {
    if (t.empty()) fail(Errc::MalformedInput, "bad rational literal: " + text);
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) fail(Errc::MalformedInput, "bad rational literal: " + text);
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i])))
        fail(Errc::MalformedInput, "bad rational literal: " + text);
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  return Rational(Integer(num), Integer(den));
}

std::string Rational::str() const {
  std::ostringstream os;
  os << v_.get_num();
  if (v_.get_den() != 1) os << "/" << v_.get_den();
  return os.str();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  Integer g, l;
  mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
  return Rational(g, l);
}

std::vector<Rational> parse_rational_vector(const std::string& text) {
  std::vector<Rational> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(Rational::parse(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(Rational::parse(cur));
  return out;
}

}  // namespace folres

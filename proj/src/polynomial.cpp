#include "folres/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "folres/error.hpp"

namespace folres {

int Monomial::degree() const {
  int d = 0;
  for (int e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  if (exp.size() != m.exp.size()) return false;
  for (size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > m.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < exp.size(); ++i) r.exp[i] += m.exp[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < exp.size(); ++i) {
    r.exp[i] -= m.exp[i];
    if (r.exp[i] < 0) fail(Errc::Internal, "monomial quotient is not exact");
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < a.exp.size(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int i = static_cast<int>(a.exp.size()) - 1; i >= 0; --i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  return false;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.exp.size(); ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
  return false;
}

bool block_less(const Monomial& a, const Monomial& b, int split) {
  auto part_deg = [&](const Monomial& m, int lo, int hi) {
    int d = 0;
    for (int i = lo; i < hi; ++i) d += m.exp[i];
    return d;
  };
  auto grevlex_part = [&](int lo, int hi) -> int {
    int da = part_deg(a, lo, hi), db = part_deg(b, lo, hi);
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
    return 0;
  };
  int n = static_cast<int>(a.exp.size());
  int c = grevlex_part(0, split);
  if (c != 0) return c < 0;
  return grevlex_part(split, n) < 0;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_[Monomial::one(nvars)] = c;
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 1 || i > nvars) fail(Errc::IndexOutOfRange, "variable index " + std::to_string(i));
  Monomial m = Monomial::one(nvars);
  m.exp[i - 1] = 1;
  return term(nvars, m, 1);
}

Polynomial Polynomial::term(int nvars, const Monomial& m, const Rational& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_[m] = c;
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp[var - 1]);
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::check_ambient(const Polynomial& o) const {
  if (nvars_ != o.nvars_) fail(Errc::AmbientMismatch, "polynomials live in different rings");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ambient(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ambient(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial poly_mul_serial(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.nvars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial poly_mul_parallel(const Polynomial& a, const Polynomial& b) {
#ifdef _OPENMP
  std::vector<const std::pair<const Monomial, Rational>*> at;
  at.reserve(a.terms().size());
  for (const auto& t : a.terms()) at.push_back(&t);
  int nthreads = omp_get_max_threads();
  std::vector<Polynomial> partial(nthreads, Polynomial(a.nvars()));
#pragma omp parallel num_threads(nthreads)
  {
    int tid = omp_get_thread_num();
    Polynomial local(a.nvars());
#pragma omp for schedule(static)
    for (long i = 0; i < static_cast<long>(at.size()); ++i)
      for (const auto& [mb, cb] : b.terms()) local.add_term(at[i]->first * mb, at[i]->second * cb);
    partial[tid] = std::move(local);
  }
  Polynomial r(a.nvars());
  for (auto& p : partial) r += p;
  return r;
#else
  return poly_mul_serial(a, b);
#endif
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) fail(Errc::AmbientMismatch, "product across different rings");
  // Parallel kernel pays off only on large term grids.
  if (a.term_count() * b.term_count() >= 65536) return poly_mul_parallel(a, b);
  return poly_mul_serial(a, b);
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [mm, v] : terms_) r.terms_.emplace(mm * m, v * c);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) fail(Errc::MalformedInput, "negative exponent");
  Polynomial r = one(nvars_), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = (e >>= 1) > 0 ? base * base : base;
  }
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 1 || var > nvars_) fail(Errc::IndexOutOfRange, "derivative index");
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m.exp[var - 1];
    if (e == 0) continue;
    Monomial mm = m;
    mm.exp[var - 1] = e - 1;
    r.add_term(mm, c * Rational(e));
  }
  return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) fail(Errc::AmbientMismatch, "point dimension");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m.exp[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    fail(Errc::AmbientMismatch, "compose needs one image per variable");
  int target = images.empty() ? 0 : images[0].nvars();
  for (const auto& f : images)
    if (f.nvars() != target) fail(Errc::AmbientMismatch, "images in different rings");
  // Cache variable powers up to the max exponent used.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) powers[i].push_back(Polynomial::one(target));
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (int i = 0; i < nvars_; ++i) {
      int e = m.exp[i];
      while (static_cast<int>(powers[i].size()) <= e)
        powers[i].push_back(powers[i].back() * images[i]);
      if (e > 0) t = t * powers[i][e];
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::translate(const std::vector<Rational>& p) const {
  if (static_cast<int>(p.size()) != nvars_) fail(Errc::AmbientMismatch, "translate point dimension");
  std::vector<Polynomial> images;
  images.reserve(nvars_);
  for (int i = 1; i <= nvars_; ++i)
    images.push_back(variable(nvars_, i) + constant(nvars_, p[i - 1]));
  return compose(images);
}

Rational Polynomial::content() const {
  Rational g(0);
  for (const auto& [m, c] : terms_) g = rational_gcd(g, c);
  return g;
}

Monomial grevlex_leading_monomial(const Polynomial& p) {
  if (p.is_zero()) fail(Errc::Internal, "leading monomial of zero");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (!best || grevlex_less(*best, m)) best = &m;
  return *best;
}

Polynomial primitive_normalize(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational c = p.content();
  Polynomial r = p.scaled(c.inverse());
  if (r.coefficient(grevlex_leading_monomial(r)).sign() < 0) r = -r;
  return r;
}

bool try_exact_div(const Polynomial& a, const Polynomial& b, Polynomial& quotient) {
  if (b.is_zero()) return false;
  Polynomial rem = a, q(a.nvars());
  Monomial ltb = grevlex_leading_monomial(b);
  Rational lcb = b.coefficient(ltb);
  while (!rem.is_zero()) {
    Monomial ltr = grevlex_leading_monomial(rem);
    if (!ltb.divides(ltr)) return false;
    Rational c = rem.coefficient(ltr) / lcb;
    Monomial m = ltr / ltb;
    q.add_term(m, c);
    rem -= b.times_term(m, c);
  }
  quotient = q;
  return true;
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  Polynomial q(a.nvars());
  if (!try_exact_div(a, b, q)) fail(Errc::Internal, "exact_div: divisor does not divide");
  return q;
}

namespace {

// Decompose p as a univariate polynomial in z_var with polynomial coefficients.
std::map<int, Polynomial> univariate_parts(const Polynomial& p, int var) {
  std::map<int, Polynomial> parts;
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    int e = mm.exp[var - 1];
    mm.exp[var - 1] = 0;
    auto it = parts.find(e);
    if (it == parts.end()) it = parts.emplace(e, Polynomial(p.nvars())).first;
    it->second.add_term(mm, c);
  }
  return parts;
}

Polynomial rebuild(const std::map<int, Polynomial>& parts, int var, int nvars) {
  Polynomial r(nvars);
  for (const auto& [e, coeff] : parts) {
    Monomial m = Monomial::one(nvars);
    m.exp[var - 1] = e;
    r += coeff.times_term(m, 1);
  }
  return r;
}

// Content of p viewed in (Q[rest])[z_var]: gcd of the coefficient polynomials.
Polynomial content_in(const Polynomial& p, int var) {
  Polynomial g(p.nvars());
  for (const auto& [e, coeff] : univariate_parts(p, var)) g = poly_gcd(g, coeff);
  return g;
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, int var) {
  auto pb = univariate_parts(b, var);
  int db = pb.rbegin()->first;
  Polynomial lcb = pb.rbegin()->second;
  while (!a.is_zero()) {
    auto pa = univariate_parts(a, var);
    int da = pa.rbegin()->first;
    if (da < db) break;
    Polynomial lca = pa.rbegin()->second;
    Monomial shift = Monomial::one(a.nvars());
    shift.exp[var - 1] = da - db;
    a = a * lcb - b.times_term(shift, 1) * lca;
  }
  return a;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return primitive_normalize(b);
  if (b.is_zero()) return primitive_normalize(a);
  if (a.is_constant() || b.is_constant()) return Polynomial::one(a.nvars());
  int var = 0;
  for (int i = a.nvars(); i >= 1; --i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
      var = i;
      break;
    }
  if (a.degree_in(var) == 0) {
    // a does not involve the main variable of b: gcd(a, content_in(b, var)).
    return poly_gcd(a, content_in(b, var));
  }
  if (b.degree_in(var) == 0) return poly_gcd(content_in(a, var), b);

  Polynomial ca = content_in(a, var), cb = content_in(b, var);
  Polynomial c = poly_gcd(ca, cb);
  Polynomial pa = exact_div(a, ca), pb = exact_div(b, cb);
  while (!pb.is_zero()) {
    Polynomial r = pseudo_remainder(pa, pb, var);
    pa = pb;
    if (r.is_zero()) {
      pb = r;
    } else {
      Polynomial cr = content_in(r, var);
      pb = exact_div(r, cr);
    }
  }
  return primitive_normalize(c * pa);
}

std::string Polynomial::str(char prefix) const {
  if (terms_.empty()) return "0";
  // Deterministic order: grevlex descending.
  std::vector<const std::pair<const Monomial, Rational>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(),
            [](auto* x, auto* y) { return grevlex_less(y->first, x->first); });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    Rational c = t->second;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    bool printed_coef = false;
    if (!(c == Rational(1)) || t->first.is_one()) {
      os << c.str();
      printed_coef = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      int e = t->first.exp[i];
      if (e == 0) continue;
      if (printed_coef) os << "*";
      os << prefix << (i + 1);
      if (e > 1) os << "^" << e;
      printed_coef = true;
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  std::string s;
  size_t i = 0;
  explicit Lexer(const std::string& text) {
    for (char c : text)
      if (!isspace(static_cast<unsigned char>(c))) s += c;
  }
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  char next() { return s[i++]; }
  std::string number() {
    std::string r;
    while (!done() && isdigit(static_cast<unsigned char>(peek()))) r += next();
    return r;
  }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, int nvars, char prefix) {
  Lexer lx(text);
  Polynomial result(nvars);
  if (lx.done()) fail(Errc::MalformedInput, "empty polynomial");
  bool expect_term = true;
  int sign = 1;
  while (!lx.done() || expect_term) {
    if (expect_term) {
      if (lx.done()) fail(Errc::MalformedInput, "dangling operator in: " + text);
      // Leading signs.
      while (!lx.done() && (lx.peek() == '+' || lx.peek() == '-')) {
        if (lx.next() == '-') sign = -sign;
      }
      // One term: factors joined by '*'.
      Rational coef(sign);
      Monomial mono = Monomial::one(nvars);
      bool any_factor = false;
      while (true) {
        if (lx.done()) break;
        char c = lx.peek();
        if (isdigit(static_cast<unsigned char>(c))) {
          std::string num = lx.number();
          if (!lx.done() && lx.peek() == '/') {
            lx.next();
            std::string den = lx.number();
            if (den.empty()) fail(Errc::MalformedInput, "bad rational in: " + text);
            coef *= Rational(Integer(num), Integer(den));
          } else {
            coef *= Rational(Integer(num));
          }
          any_factor = true;
        } else if (c == prefix) {
          lx.next();
          std::string idx = lx.number();
          if (idx.empty()) fail(Errc::MalformedInput, "variable without index in: " + text);
          int vi = std::stoi(idx);
          if (vi < 1 || vi > nvars)
            fail(Errc::IndexOutOfRange,
                 std::string(1, prefix) + idx + " out of range 1.." + std::to_string(nvars));
          int e = 1;
          if (!lx.done() && lx.peek() == '^') {
            lx.next();
            std::string es = lx.number();
            if (es.empty()) fail(Errc::MalformedInput, "bad exponent in: " + text);
            e = std::stoi(es);
          }
          mono.exp[vi - 1] += e;
          any_factor = true;
        } else {
          fail(Errc::MalformedInput, std::string("unexpected character '") + c + "' in: " + text);
        }
        if (!lx.done() && lx.peek() == '*') {
          lx.next();
          continue;
        }
        break;
      }
      if (!any_factor) fail(Errc::MalformedInput, "empty term in: " + text);
      result.add_term(mono, coef);
      expect_term = false;
      sign = 1;
    } else {
      char c = lx.next();
      if (c == '+') {
        expect_term = true;
      } else if (c == '-') {
        expect_term = true;
        sign = -1;
      } else {
        fail(Errc::MalformedInput, std::string("expected +/- but found '") + c + "' in: " + text);
      }
    }
  }
  return result;
}

}  // namespace folres

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "folres/error.hpp"
#include "folres/groebner.hpp"

using namespace folres;

namespace {

Polynomial P(const std::string& s, int n) { return Polynomial::parse(s, n); }

Ideal I(std::vector<std::string> gens, int n) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(g, n));
  return Ideal(n, std::move(ps));
}

Polynomial random_poly(std::mt19937_64& rng, int nvars, int max_deg, int terms) {
  Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m = Monomial::one(nvars);
    int budget = static_cast<int>(rng() % (max_deg + 1));
    for (int b = 0; b < budget; ++b) ++m.exp[rng() % nvars];
    p.add_term(m, Rational(static_cast<long>(rng() % 7) - 3));
  }
  return p;
}

}  // namespace

TEST_CASE("reduced basis on easy ideals") {
  auto g = groebner(I({"z1", "z2"}, 2));
  REQUIRE(g.basis.size() == 2);
  // Sorted by leading monomial ascending: z2 < z1 under grevlex.
  CHECK(g.basis[0] == P("z2", 2));
  CHECK(g.basis[1] == P("z1", 2));

  // A redundant generator disappears.
  auto g2 = groebner(I({"z1^2-z1", "z1"}, 1));
  REQUIRE(g2.basis.size() == 1);
  CHECK(g2.basis[0] == P("z1", 1));
}

TEST_CASE("staircase of (z1^2 - z2, z2^2)") {
  auto g = groebner(I({"z1^2-z2", "z2^2"}, 2));
  CHECK(standard_monomial_count(g) == 4);
  CHECK(normal_form(P("z1^2", 2), g) == P("z2", 2));
  CHECK(normal_form(P("z1*z2", 2), g) == P("z1*z2", 2));
  CHECK(normal_form(P("z1^4", 2), g) == Polynomial::zero(2));
}

TEST_CASE("groebner is idempotent and order-stable") {
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    auto g = groebner(I({"z1^2-z2", "z2^2", "z1*z2-z2"}, 2), order);
    Ideal again(2, g.basis);
    auto g2 = groebner(again, order);
    CHECK(g.basis == g2.basis);
  }
}

TEST_CASE("normal form membership") {
  auto g = groebner(I({"z1"}, 2));
  CHECK(normal_form(P("z1^2", 2), g).is_zero());
  CHECK(normal_form(Polynomial::one(2), g) == Polynomial::one(2));
  auto proper = groebner(I({"z1^2-z2", "z2^2"}, 2));
  CHECK(normal_form(Polynomial::one(2), proper) == Polynomial::one(2));
}

TEST_CASE("divide_with_cofactors reproduces the pinned identity") {
  Ideal ideal = I({"z1^2-z2", "z2^2"}, 2);
  auto g = groebner(ideal, MonomialOrder::grevlex(), true);
  auto d = divide_with_cofactors(P("z1^4", 2), g);
  CHECK(d.remainder.is_zero());
  REQUIRE(d.cofactors.size() == 2);
  CHECK(d.cofactors[0] == P("z1^2+z2", 2));
  CHECK(d.cofactors[1] == Polynomial::one(2));

  auto d2 = divide_with_cofactors(P("z1", 1), groebner(I({"z1"}, 1), MonomialOrder::grevlex(), true));
  CHECK(d2.remainder.is_zero());
  CHECK(d2.cofactors[0] == Polynomial::one(1));

  auto d3 = divide_with_cofactors(Polynomial::one(2),
                                  groebner(I({"z1", "z2"}, 2), MonomialOrder::grevlex(), true));
  CHECK(d3.remainder == Polynomial::one(2));
  CHECK(d3.cofactors[0].is_zero());
  CHECK(d3.cofactors[1].is_zero());
}

TEST_CASE("membership equivalences on random ideal elements") {
  std::mt19937_64 rng(5);
  Ideal ideal = I({"z1^2-z2", "z2^2-z1*z2"}, 2);
  auto g = groebner(ideal, MonomialOrder::grevlex(), true);
  for (int trial = 0; trial < 15; ++trial) {
    Polynomial member(2);
    for (const auto& gen : ideal.gens) member += random_poly(rng, 2, 2, 3) * gen;
    CHECK(normal_form(member, g).is_zero());
    auto d = divide_with_cofactors(member, g);
    CHECK(d.remainder.is_zero());
    Polynomial rebuilt(2);
    for (size_t j = 0; j < d.cofactors.size(); ++j) rebuilt += d.cofactors[j] * ideal.gens[j];
    CHECK(rebuilt == member);
  }
}

TEST_CASE("krull dimension") {
  CHECK(krull_dimension(I({"z4", "z5", "z6", "z7", "z8", "z9"}, 9)) == 3);
  CHECK(krull_dimension(I({"z1", "z2", "z3"}, 3)) == 0);
  CHECK(krull_dimension(I({"z1^2-z2", "z2^2"}, 2)) == 0);
  CHECK(krull_dimension(I({"1"}, 2)) == -1);       // unit ideal: empty variety
  CHECK(krull_dimension(I({"z1-1"}, 2)) == 1);
  CHECK(krull_dimension(Ideal(3, {})) == 3);       // zero ideal
}

TEST_CASE("krull dimension agrees with point counts on linear products") {
  // V(z1) in C^3 has dimension 2, V(z1, z2) has 1, etc.
  for (int cut = 1; cut <= 3; ++cut) {
    std::vector<Polynomial> gens;
    for (int i = 1; i <= cut; ++i) gens.push_back(Polynomial::variable(3, i));
    CHECK(krull_dimension(Ideal(3, gens)) == 3 - cut);
  }
  // Products of linear forms: finitely many points (dimension 0) when every
  // variable is cut, a union of hyperplanes otherwise.
  CHECK(krull_dimension(I({"z1^2-z1", "z2"}, 2)) == 0);          // {0,1} x {0}
  CHECK(krull_dimension(I({"z1^2-z1", "z2^2-z2"}, 2)) == 0);     // four points
  CHECK(standard_monomial_count(groebner(I({"z1^2-z1", "z2^2-z2"}, 2))) == 4);
  CHECK(krull_dimension(I({"z1*z2"}, 2)) == 1);                  // two lines
}

TEST_CASE("variable powers in zero-dimensional ideals") {
  auto g = groebner(I({"z1^2", "z2"}, 2), MonomialOrder::grevlex(), true);
  CHECK(variable_power_in_ideal(g, 1).exponent == 2);
  CHECK(variable_power_in_ideal(g, 2).exponent == 1);

  auto g2 = groebner(I({"z1^2-z2", "z2^2"}, 2), MonomialOrder::grevlex(), true);
  auto vp = variable_power_in_ideal(g2, 1);
  CHECK(vp.exponent == 4);
  Polynomial rebuilt(2);
  rebuilt += vp.cofactors[0] * P("z1^2-z2", 2);
  rebuilt += vp.cofactors[1] * P("z2^2", 2);
  CHECK(rebuilt == P("z1^4", 2));
  CHECK(variable_power_in_ideal(g2, 2).exponent == 2);

  auto g3 = groebner(I({"z1-z2", "z2^3"}, 2), MonomialOrder::grevlex(), true);
  CHECK(variable_power_in_ideal(g3, 1).exponent == 3);
  CHECK(variable_power_in_ideal(g3, 2).exponent == 3);

  // Zero-dimensional but not supported at the origin alone: no pure power.
  auto g4 = groebner(I({"z1^2-1", "z2"}, 2), MonomialOrder::grevlex(), true);
  CHECK_THROWS_AS(variable_power_in_ideal(g4, 1), Error);
}

TEST_CASE("standard monomial counts") {
  CHECK(standard_monomial_count(groebner(I({"z1", "z2"}, 2))) == 1);
  CHECK(standard_monomial_count(groebner(I({"z1^2", "z2"}, 2))) == 2);
  CHECK(standard_monomial_count(groebner(I({"z1^2-z2", "z2^2"}, 2))) == 4);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      auto g = groebner(I({"z1^" + std::to_string(a), "z2^" + std::to_string(b)}, 2));
      CHECK(standard_monomial_count(g) == a * b);
    }
  CHECK_THROWS_AS(standard_monomial_count(groebner(I({"z1"}, 2))), Error);
}

TEST_CASE("eliminants and the origin-only certificate") {
  CHECK(eliminant(I({"z1^2-z2", "z2^2"}, 2), 1) == P("z1^4", 2));
  CHECK(eliminant(I({"z1^2-z2", "z2^2"}, 2), 2) == P("z2^2", 2));
  CHECK(eliminant(I({"z1^2-1", "z2"}, 2), 1) == P("z1^2-1", 2));

  CHECK(zero_locus_is_origin_only(I({"z1^2", "z2"}, 2)));
  CHECK_FALSE(zero_locus_is_origin_only(I({"z1^2-1", "z2"}, 2)));
  CHECK(zero_locus_is_origin_only(I({"z1^2-z2", "z2^2"}, 2)));
  CHECK_FALSE(zero_locus_is_origin_only(I({"z1"}, 2)));  // positive-dimensional
  CHECK(zero_locus_is_origin_only(I({"z1-z2", "z2^3"}, 2)));
}

#include "folres/groebner.hpp"

#include <algorithm>
#include <set>

#include "folres/error.hpp"

namespace folres {

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::Grevlex: return grevlex_less(a, b);
    case Kind::Lex: return lex_less(a, b);
    case Kind::Block: return block_less(a, b, split);
  }
  return false;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "block@" + std::to_string(split);
  }
  return "?";
}

Ideal::Ideal(int n, std::vector<Polynomial> g) : nvars(n) {
  for (auto& p : g) {
    if (p.nvars() != n) fail(Errc::AmbientMismatch, "ideal generator ring mismatch");
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
}

bool GroebnerBasis::is_unit() const {
  return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

Monomial GroebnerBasis::leading_monomial(const Polynomial& p) const {
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (!best || order.less(*best, m)) best = &m;
  if (!best) fail(Errc::Internal, "leading monomial of zero polynomial");
  return *best;
}

namespace {

struct Tracked {
  Polynomial p;
  std::vector<Polynomial> rep;  // p = sum rep[j] * gens[j]
  Monomial lm;
  Rational lc;
};

Monomial leading(const Polynomial& p, const MonomialOrder& ord) {
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (!best || ord.less(*best, m)) best = &m;
  return *best;
}

// Full reduction of p by the current basis, tracking the representation.
void reduce_full(Polynomial& p, std::vector<Polynomial>& rep, const std::vector<Tracked>& basis,
                 const MonomialOrder& ord, bool track, int skip = -1) {
  bool changed = true;
  while (changed && !p.is_zero()) {
    changed = false;
    // Reduce the largest reducible term first; deterministic scan.
    std::vector<const std::pair<const Monomial, Rational>*> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(),
              [&](auto* x, auto* y) { return ord.less(y->first, x->first); });
    for (auto* t : terms) {
      for (size_t bi = 0; bi < basis.size(); ++bi) {
        if (static_cast<int>(bi) == skip || basis[bi].p.is_zero()) continue;
        if (!basis[bi].lm.divides(t->first)) continue;
        Monomial q = t->first / basis[bi].lm;
        Rational c = t->second / basis[bi].lc;
        p -= basis[bi].p.times_term(q, c);
        if (track)
          for (size_t j = 0; j < rep.size(); ++j)
            rep[j] -= basis[bi].rep[j].times_term(q, c);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
}

}  // namespace

GroebnerBasis groebner(const Ideal& ideal, MonomialOrder order, bool track_cofactors) {
  const int n = ideal.nvars;
  const size_t ngens = ideal.gens.size();
  std::vector<Tracked> work;
  auto unit_rep = [&](size_t j) {
    std::vector<Polynomial> r(ngens, Polynomial(n));
    r[j] = Polynomial::one(n);
    return r;
  };
  for (size_t j = 0; j < ngens; ++j) {
    Tracked t{ideal.gens[j],
              track_cofactors ? unit_rep(j) : std::vector<Polynomial>(),
              Monomial::one(n), Rational(1)};
    t.lm = leading(t.p, order);
    t.lc = t.p.coefficient(t.lm);
    work.push_back(std::move(t));
  }

  // Pair queue ordered by (lcm degree, lcm, indices) for determinism.
  struct Pair {
    Monomial lcm;
    size_t i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (!(a.lcm == b.lcm)) return order.less(a.lcm, b.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> queue;
  std::set<std::pair<size_t, size_t>> pending;
  auto push_pairs_with = [&](size_t k) {
    for (size_t i = 0; i < k; ++i) {
      if (work[i].p.is_zero()) continue;
      queue.push_back({Monomial::lcm(work[i].lm, work[k].lm), i, k});
      pending.insert({i, k});
    }
    std::sort(queue.begin(), queue.end(), pair_less);
  };
  for (size_t k = 1; k < work.size(); ++k) push_pairs_with(k);

  while (!queue.empty()) {
    Pair pr = queue.front();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});
    const Tracked& f = work[pr.i];
    const Tracked& g = work[pr.j];
    if (f.p.is_zero() || g.p.is_zero()) continue;
    // Product criterion: coprime leading monomials reduce to zero.
    if (Monomial::lcm(f.lm, g.lm) == f.lm * g.lm) continue;
    // Chain criterion: drop the pair when a third element divides the lcm and
    // both side pairs were already handled.
    {
      bool skip = false;
      for (size_t k = 0; k < work.size() && !skip; ++k) {
        if (k == pr.i || k == pr.j || work[k].p.is_zero()) continue;
        if (!work[k].lm.divides(pr.lcm)) continue;
        auto key_ik = std::minmax(pr.i, k);
        auto key_jk = std::minmax(pr.j, k);
        if (!pending.count({key_ik.first, key_ik.second}) &&
            !pending.count({key_jk.first, key_jk.second}))
          skip = true;
      }
      if (skip) continue;
    }
    // S-polynomial.
    Monomial mf = pr.lcm / f.lm, mg = pr.lcm / g.lm;
    Polynomial s = f.p.times_term(mf, f.lc.inverse()) - g.p.times_term(mg, g.lc.inverse());
    std::vector<Polynomial> rep;
    if (track_cofactors) {
      rep.assign(ngens, Polynomial(n));
      for (size_t j = 0; j < ngens; ++j)
        rep[j] = f.rep[j].times_term(mf, f.lc.inverse()) - g.rep[j].times_term(mg, g.lc.inverse());
    }
    reduce_full(s, rep, work, order, track_cofactors);
    if (s.is_zero()) continue;
    Tracked t{std::move(s), std::move(rep), Monomial::one(n), Rational(1)};
    t.lm = leading(t.p, order);
    t.lc = t.p.coefficient(t.lm);
    work.push_back(std::move(t));
    push_pairs_with(work.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  for (size_t i = 0; i < work.size(); ++i) {
    if (work[i].p.is_zero()) continue;
    for (size_t j = 0; j < work.size(); ++j) {
      if (i == j || work[j].p.is_zero()) continue;
      if (work[j].lm.divides(work[i].lm) && !(i < j && work[i].lm == work[j].lm)) {
        work[i].p = Polynomial(n);
        break;
      }
    }
  }
  // Tail-reduce the survivors against each other.
  std::vector<Tracked> kept;
  for (auto& t : work)
    if (!t.p.is_zero()) kept.push_back(std::move(t));
  for (size_t i = 0; i < kept.size(); ++i) {
    Polynomial p = kept[i].p;
    std::vector<Polynomial> rep = kept[i].rep;
    reduce_full(p, rep, kept, order, track_cofactors, static_cast<int>(i));
    kept[i].p = std::move(p);
    kept[i].rep = std::move(rep);
    if (!kept[i].p.is_zero()) {
      kept[i].lm = leading(kept[i].p, order);
      kept[i].lc = kept[i].p.coefficient(kept[i].lm);
    }
  }
  // Monicize and sort by leading monomial.
  std::vector<Tracked> fin;
  for (auto& t : kept) {
    if (t.p.is_zero()) continue;
    Rational inv = t.lc.inverse();
    t.p = t.p.scaled(inv);
    if (track_cofactors)
      for (auto& r : t.rep) r = r.scaled(inv);
    t.lc = Rational(1);
    fin.push_back(std::move(t));
  }
  std::sort(fin.begin(), fin.end(),
            [&](const Tracked& a, const Tracked& b) { return order.less(a.lm, b.lm); });

  GroebnerBasis out;
  out.order = order;
  out.ambient = n;
  out.has_cofactors = track_cofactors;
  if (track_cofactors) out.gens = ideal.gens;
  for (auto& t : fin) {
    out.basis.push_back(std::move(t.p));
    if (track_cofactors) out.reps.push_back(std::move(t.rep));
  }
  return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  if (p.nvars() != g.ambient) fail(Errc::AmbientMismatch, "normal form ring mismatch");
  std::vector<Tracked> basis;
  for (const auto& b : g.basis) {
    Tracked t{b, {}, Monomial::one(g.ambient), Rational(1)};
    t.lm = leading(b, g.order);
    t.lc = b.coefficient(t.lm);
    basis.push_back(std::move(t));
  }
  Polynomial r = p;
  std::vector<Polynomial> rep;
  reduce_full(r, rep, basis, g.order, false);
  return r;
}

DivisionResult divide_with_cofactors(const Polynomial& p, const GroebnerBasis& g) {
  if (!g.has_cofactors) fail(Errc::Internal, "basis lacks cofactor tracking");
  std::vector<Tracked> basis;
  for (size_t i = 0; i < g.basis.size(); ++i) {
    Tracked t{g.basis[i], g.reps[i], Monomial::one(g.ambient), Rational(1)};
    t.lm = leading(g.basis[i], g.order);
    t.lc = g.basis[i].coefficient(t.lm);
    basis.push_back(std::move(t));
  }
  // Divide p by the basis; quotients compose with the tracked representations.
  Polynomial r = p;
  std::vector<Polynomial> cof(g.gens.size(), Polynomial(g.ambient));
  bool changed = true;
  while (changed && !r.is_zero()) {
    changed = false;
    std::vector<const std::pair<const Monomial, Rational>*> terms;
    for (const auto& t : r.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(),
              [&](auto* x, auto* y) { return g.order.less(y->first, x->first); });
    for (auto* t : terms) {
      for (size_t bi = 0; bi < basis.size(); ++bi) {
        if (!basis[bi].lm.divides(t->first)) continue;
        Monomial q = t->first / basis[bi].lm;
        Rational c = t->second / basis[bi].lc;
        r -= basis[bi].p.times_term(q, c);
        for (size_t j = 0; j < cof.size(); ++j) cof[j] += basis[bi].rep[j].times_term(q, c);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  // Self-certify the division identity before returning it.
  Polynomial check = r;
  for (size_t j = 0; j < cof.size(); ++j) check += cof[j] * g.gens[j];
  if (!(check == p)) fail(Errc::Internal, "cofactor identity failed verification");
  return {std::move(cof), std::move(r)};
}

int krull_dimension(const GroebnerBasis& g) {
  const int n = g.ambient;
  if (g.is_unit()) return -1;
  if (g.basis.empty()) return n;
  std::vector<Monomial> lms;
  for (const auto& b : g.basis) lms.push_back(g.leading_monomial(b));
  // Max independent variable subset: no leading monomial supported inside it.
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : lms) {
      bool inside = true;
      for (int i = 0; i < n && inside; ++i)
        if (m.exp[i] > 0 && !(mask >> i & 1u)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

int krull_dimension(const Ideal& ideal) {
  if (ideal.gens.empty()) return ideal.nvars;
  return krull_dimension(groebner(ideal));
}

long standard_monomial_count(const GroebnerBasis& g) {
  if (krull_dimension(g) != 0)
    fail(Errc::NotZeroDimensional, "standard monomials of a non-zero-dimensional ideal");
  std::vector<Monomial> lms;
  for (const auto& b : g.basis) lms.push_back(g.leading_monomial(b));
  auto reducible = [&](const Monomial& m) {
    for (const auto& l : lms)
      if (l.divides(m)) return true;
    return false;
  };
  const int n = g.ambient;
  std::set<Monomial> standard;
  std::vector<Monomial> frontier{Monomial::one(n)};
  if (reducible(frontier[0])) return 0;
  standard.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (int i = 0; i < n; ++i) {
        Monomial mm = m;
        ++mm.exp[i];
        if (standard.count(mm) || reducible(mm)) continue;
        standard.insert(mm);
        next.push_back(mm);
      }
    frontier = std::move(next);
  }
  return static_cast<long>(standard.size());
}

VariablePower variable_power_in_ideal(const GroebnerBasis& g, int var) {
  if (!g.has_cofactors) fail(Errc::Internal, "variable_power_in_ideal needs cofactor tracking");
  long bound = standard_monomial_count(g);  // also certifies zero-dimensionality
  const int n = g.ambient;
  Polynomial zi = Polynomial::variable(n, var);
  Polynomial cur = normal_form(Polynomial::one(n), g);
  int a = 0;
  while (!cur.is_zero()) {
    cur = normal_form(cur * zi, g);
    ++a;
    if (a > bound + 1)
      fail(Errc::NotIsolated, "no pure power of z" + std::to_string(var) + " lies in the ideal");
  }
  DivisionResult d = divide_with_cofactors(zi.pow(a), g);
  if (!d.remainder.is_zero()) fail(Errc::Internal, "variable power has nonzero remainder");
  return {a, std::move(d.cofactors)};
}

Polynomial eliminant(const Ideal& ideal, int var) {
  const int n = ideal.nvars;
  if (var < 1 || var > n) fail(Errc::IndexOutOfRange, "eliminant variable");
  // Rename z_var to the last slot and run a block elimination order on the
  // first n-1 variables.
  std::vector<Polynomial> images(n, Polynomial(n));
  std::vector<int> perm(n);  // perm[old] = new (1-based positions)
  int pos = 1;
  for (int i = 1; i <= n; ++i) perm[i - 1] = (i == var) ? n : pos++;
  for (int i = 1; i <= n; ++i) images[i - 1] = Polynomial::variable(n, perm[i - 1]);
  std::vector<Polynomial> gens;
  for (const auto& p : ideal.gens) gens.push_back(p.compose(images));
  GroebnerBasis g = groebner(Ideal(n, gens), MonomialOrder::block(n - 1));
  Polynomial best(n);
  for (const auto& b : g.basis) {
    bool univariate = true;
    for (const auto& [m, c] : b.terms())
      for (int i = 0; i < n - 1 && univariate; ++i)
        if (m.exp[i] > 0) univariate = false;
    if (!univariate) continue;
    if (best.is_zero() || b.degree_in(n) < best.degree_in(n)) best = b;
  }
  if (best.is_zero()) return Polynomial(n);
  // Map back to z_var.
  std::vector<Polynomial> back(n, Polynomial(n));
  for (int i = 1; i <= n; ++i) back[perm[i - 1] - 1] = Polynomial::variable(n, i);
  return best.compose(back);
}

bool zero_locus_is_origin_only(const Ideal& ideal) {
  GroebnerBasis g = groebner(ideal);
  int dim = krull_dimension(g);
  if (dim != 0) return false;
  for (int var = 1; var <= ideal.nvars; ++var) {
    Polynomial e = eliminant(ideal, var);
    if (e.is_zero()) return false;
    // Pure power: a single term z_var^d.
    if (e.term_count() != 1) return false;
    const auto& m = e.terms().begin()->first;
    for (int i = 0; i < ideal.nvars; ++i)
      if (i != var - 1 && m.exp[i] > 0) return false;
    if (m.exp[var - 1] == 0) return false;
  }
  return true;
}

}  // namespace folres

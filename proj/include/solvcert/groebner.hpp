#ifndef SOLVCERT_GROEBNER_HPP
#define SOLVCERT_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "solvcert/errors.hpp"
#include "solvcert/monomial.hpp"
#include "solvcert/polynomial.hpp"

namespace solvcert {

/// Reduced grevlex Groebner basis of an ideal of K[X1..Xn], optionally
/// together with an implicit power part <X>^cap.
///
/// With a cap the explicit basis only holds elements whose terms all have
/// degree < cap; the full reduced basis is the explicit part plus the
/// degree-cap monomials not divisible by an explicit leading monomial.
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis(F field, std::size_t n_vars, std::vector<Polynomial<F>> basis, std::optional<std::uint32_t> cap)
      : field_(std::move(field)), n_vars_(n_vars), basis_(std::move(basis)), cap_(cap) {}

  const F& field() const { return field_; }
  std::size_t n_vars() const { return n_vars_; }
  const std::vector<Polynomial<F>>& basis() const { return basis_; }
  std::optional<std::uint32_t> power_cap() const { return cap_; }

  bool is_unit() const { return basis_.size() == 1 && basis_.front().leading_monomial().is_one(); }

  /// True if some explicit leading monomial divides m, or m lies in the power part.
  bool is_leading_multiple(const Monomial& m) const {
    if (cap_ && m.degree() >= *cap_) return true;
    for (const auto& g : basis_)
      if (g.leading_monomial().divides(m)) return true;
    return false;
  }

  /// The full reduced basis, power-part monomials included.
  std::vector<Polynomial<F>> full_basis() const {
    std::vector<Polynomial<F>> out = basis_;
    if (cap_ && !is_unit()) {
      for (const auto& m : monomials_of_degree(n_vars_, *cap_)) {
        bool covered = false;
        for (const auto& g : basis_)
          if (g.leading_monomial().divides(m)) covered = true;
        if (!covered) out.push_back(Polynomial<F>::term(field_, m, field_.one()));
      }
      std::sort(out.begin(), out.end(), [](const Polynomial<F>& a, const Polynomial<F>& b) {
        return grevlex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
      });
    }
    return out;
  }

 private:
  F field_;
  std::size_t n_vars_;
  std::vector<Polynomial<F>> basis_;
  std::optional<std::uint32_t> cap_;
};

namespace detail {

template <class F>
using WorkPoly = std::map<Monomial, typename F::value_type, GrevlexDescending>;

template <class F>
WorkPoly<F> to_work(const Polynomial<F>& f, std::optional<std::uint32_t> cap) {
  WorkPoly<F> w;
  for (const auto& [m, c] : f.terms())
    if (!cap || m.degree() < *cap) w.emplace_hint(w.end(), m, c);
  return w;
}

template <class F>
const Polynomial<F>* find_reducer(const std::vector<Polynomial<F>>& basis, const Monomial& m) {
  for (const auto& g : basis)
    if (g.leading_monomial().degree() <= m.degree() && g.leading_monomial().divides(m)) return &g;
  return nullptr;
}

/// Full reduction of f modulo basis (+ <X>^cap). Basis elements need not be monic.
template <class F>
Polynomial<F> reduce(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis, std::optional<std::uint32_t> cap) {
  const F& k = f.field();
  auto work = to_work(f, cap);
  std::vector<typename Polynomial<F>::Term> remainder;
  while (!work.empty()) {
    auto lead = work.begin();
    const Polynomial<F>* g = find_reducer(basis, lead->first);
    if (!g) {
      remainder.emplace_back(lead->first, std::move(lead->second));
      work.erase(lead);
      continue;
    }
    Monomial mult = lead->first / g->leading_monomial();
    auto factor = k.div(lead->second, g->leading_coefficient());
    work.erase(lead);
    bool first = true;
    for (const auto& [gm, gc] : g->terms()) {
      if (first) {
        first = false;
        continue;
      }
      Monomial m = gm * mult;
      if (cap && m.degree() >= *cap) continue;
      auto delta = k.mul(factor, gc);
      auto it = work.find(m);
      if (it == work.end()) {
        work.emplace(m, k.neg(delta));
      } else {
        it->second = k.sub(it->second, delta);
        if (k.is_zero(it->second)) work.erase(it);
      }
    }
  }
  return Polynomial<F>(k, f.n_vars(), std::move(remainder));
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& a, const Polynomial<F>& b, std::optional<std::uint32_t> cap) {
  Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
  const F& k = a.field();
  auto sa = a.times_term(l / a.leading_monomial(), k.inv(a.leading_coefficient()));
  auto sb = b.times_term(l / b.leading_monomial(), k.inv(b.leading_coefficient()));
  auto s = sa - sb;
  return cap ? s.truncated(*cap) : s;
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;  // j == npos marks a power-part pair (element i times `multiplier`)
  Monomial lcm;
  Monomial multiplier;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

}  // namespace detail

/// Buchberger's algorithm with the Gebauer-Moeller criteria. When cap is set
/// the ideal computed is <generators> + <X>^cap.
template <class F>
GroebnerBasis<F> buchberger(const F& field, std::size_t n, const std::vector<Polynomial<F>>& generators,
                            std::optional<std::uint32_t> cap = std::nullopt) {
  for (const auto& g : generators)
    if (g.n_vars() != n || !(g.field() == field)) throw ArityError("generator lives in a different ring");
  if (cap && *cap == 0) throw ArityError("power cap must be positive");
  if (generators.empty() && !cap) throw ArityError("buchberger needs at least one generator");

  using detail::CriticalPair;
  std::vector<Polynomial<F>> G;
  std::vector<CriticalPair> pairs;
  bool unit = false;

  auto add_power_pairs = [&](std::size_t idx) {
    if (!cap) return;
    const auto& g = G[idx];
    std::uint32_t e = g.leading_monomial().degree();
    if (e >= *cap || g.order() == e) return;  // homogeneous: every power-part syzygy truncates to 0
    for (const auto& w : monomials_of_degree(n, *cap - e))
      pairs.push_back({idx, CriticalPair::npos, g.leading_monomial() * w, w});
  };

  auto update = [&](Polynomial<F> h) {
    h = h.monic();
    const Monomial& lh = h.leading_monomial();
    if (lh.is_one()) {
      unit = true;
      return;
    }
    const std::size_t hi = G.size();
    // Gebauer-Moeller: candidate pairs (h, g).
    std::vector<CriticalPair> candidates;
    for (std::size_t g = 0; g < G.size(); ++g)
      candidates.push_back({g, hi, lcm(G[g].leading_monomial(), lh), Monomial()});
    std::vector<CriticalPair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto& p = candidates[c];
      bool keep = coprime(G[p.i].leading_monomial(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t o = c + 1; o < candidates.size() && keep; ++o)
          if (candidates[o].lcm.divides(p.lcm)) keep = false;
        for (std::size_t o = 0; o < kept.size() && keep; ++o)
          if (kept[o].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::vector<CriticalPair> next;
    for (auto& p : pairs) {
      if (p.j != CriticalPair::npos && lh.divides(p.lcm)) {
        Monomial l1 = lcm(G[p.i].leading_monomial(), lh);
        Monomial l2 = lcm(G[p.j].leading_monomial(), lh);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      next.push_back(std::move(p));
    }
    for (auto& p : kept)
      if (!coprime(G[p.i].leading_monomial(), lh)) next.push_back(std::move(p));
    pairs = std::move(next);
    G.push_back(std::move(h));
    add_power_pairs(hi);
  };

  for (const auto& g : generators) {
    if (unit) break;
    auto r = detail::reduce(g, G, cap);
    if (!r.is_zero()) update(std::move(r));
  }

  while (!pairs.empty() && !unit) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const CriticalPair& a, const CriticalPair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      int c = grevlex_compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    CriticalPair p = *best;
    pairs.erase(best);
    Polynomial<F> s(field, n);
    if (p.j == CriticalPair::npos) {
      s = G[p.i].times_term(p.multiplier, field.one()).truncated(*cap);
    } else {
      // a pair whose lcm lies in the power part is implied by power-part pairs
      if (cap && p.lcm.degree() >= *cap) continue;
      s = detail::s_polynomial(G[p.i], G[p.j], cap);
    }
    auto r = detail::reduce(s, G, cap);
    if (!r.is_zero()) update(std::move(r));
  }

  if (unit) return GroebnerBasis<F>(field, n, {Polynomial<F>::constant(field, n, field.one())}, cap);

  // Minimalize, then inter-reduce.
  std::vector<Polynomial<F>> minimal;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = G[a].leading_monomial();
      const auto& lb = G[b].leading_monomial();
      if (lb.divides(la) && (!(la == lb) || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[a]);
  }
  std::vector<Polynomial<F>> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial<F>> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (a != b) others.push_back(minimal[b]);
    reduced.push_back(detail::reduce(minimal[a], others, cap).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial<F>& a, const Polynomial<F>& b) {
    return grevlex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return GroebnerBasis<F>(field, n, std::move(reduced), cap);
}

template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& generators, std::optional<std::uint32_t> cap = std::nullopt) {
  if (generators.empty()) throw ArityError("buchberger needs at least one generator");
  return buchberger(generators.front().field(), generators.front().n_vars(), generators, cap);
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  if (f.n_vars() != gb.n_vars() || !(f.field() == gb.field()))
    throw ArityError("polynomial and basis live in different rings");
  return detail::reduce(f, gb.basis(), gb.power_cap());
}

template <class F>
bool ideal_membership(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  return normal_form(f, gb).is_zero();
}

template <class F>
bool is_zero_dimensional(const GroebnerBasis<F>& gb) {
  if (gb.power_cap() || gb.is_unit()) return true;
  std::vector<bool> seen(gb.n_vars(), false);
  for (const auto& g : gb.basis()) {
    std::size_t v = g.leading_monomial().pure_power_variable();
    if (v < gb.n_vars()) seen[v] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Standard monomials in ascending grevlex order (1 first), or nullopt when the
/// quotient is infinite-dimensional. Throws TooLargeError past `limit`.
template <class F>
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis<F>& gb,
                                                        std::size_t limit = static_cast<std::size_t>(-1)) {
  if (!is_zero_dimensional(gb)) return std::nullopt;
  std::vector<Monomial> out;
  if (gb.is_unit()) return out;
  const std::size_t n = gb.n_vars();
  // Walk the order ideal: extend by variables of index >= the last one used,
  // pruning at non-standard monomials since all their multiples are too.
  std::function<void(const Monomial&, std::size_t)> walk = [&](const Monomial& m, std::size_t from) {
    if (gb.is_leading_multiple(m)) return;
    out.push_back(m);
    if (out.size() > limit) throw TooLargeError("quotient dimension exceeds " + std::to_string(limit));
    for (std::size_t i = from; i < n; ++i) walk(m * Monomial::variable(n, i), i);
  };
  walk(Monomial(n), 0);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
  return out;
}

/// Largest degree of a standard monomial of a zero-dimensional, non-unit ideal.
template <class F>
std::uint32_t max_standard_degree(const GroebnerBasis<F>& gb) {
  if (!is_zero_dimensional(gb) || gb.is_unit()) throw InfiniteDimensionalError("no finite standard monomial set");
  const std::size_t n = gb.n_vars();
  if (gb.power_cap()) {
    // Search downward with early exit; cheap when standard monomials are plentiful.
    for (std::uint32_t k = *gb.power_cap(); k-- > 0;) {
      bool found = false;
      std::vector<std::uint32_t> e(n, 0);
      std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
        if (found) return;
        if (i + 1 == n) {
          e[i] = left;
          if (!gb.is_leading_multiple(Monomial(e))) found = true;
          e[i] = 0;
          return;
        }
        for (std::uint32_t a = 0; a <= left && !found; ++a) {
          e[i] = a;
          rec(i + 1, left - a);
        }
        e[i] = 0;
      };
      rec(0, k);
      if (found) return k;
    }
    return 0;
  }
  std::uint32_t best = 0;
  for (const auto& m : *standard_monomials(gb)) best = std::max(best, m.degree());
  return best;
}

/// True if every monomial of degree k lies in the ideal.
template <class F>
bool contains_power(const GroebnerBasis<F>& gb, std::uint32_t k) {
  if (gb.is_unit()) return true;
  if (gb.power_cap() && k >= *gb.power_cap()) return true;
  bool all = true;
  std::vector<std::uint32_t> e(gb.n_vars(), 0);
  const std::size_t n = gb.n_vars();
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (!all) return;
    if (i + 1 == n) {
      e[i] = left;
      Monomial m(e);
      // a standard monomial is its own normal form
      if (!gb.is_leading_multiple(m) ||
          !ideal_membership(Polynomial<F>::term(gb.field(), m, gb.field().one()), gb))
        all = false;
      e[i] = 0;
      return;
    }
    for (std::uint32_t a = left + 1; a-- > 0 && all;) {
      e[i] = a;
      rec(i + 1, left - a);
    }
    e[i] = 0;
  };
  rec(0, k);
  return all;
}

/// Smallest l with <X>^l contained in the ideal, or nullopt if there is none
/// (infinite-dimensional, or finite but not local at the origin).
template <class F>
std::optional<std::uint32_t> minimal_power_cap(const GroebnerBasis<F>& gb) {
  if (gb.is_unit()) return 0;
  std::uint32_t upper;
  if (gb.power_cap()) {
    upper = *gb.power_cap();
  } else {
    auto std_monos = standard_monomials(gb);
    if (!std_monos) return std::nullopt;
    // If the quotient is local of dimension D then R^D = 0.
    upper = static_cast<std::uint32_t>(std_monos->size());
    auto capped = buchberger(gb.field(), gb.n_vars(), gb.basis(), upper);
    if (standard_monomials(capped)->size() != std_monos->size()) return std::nullopt;
  }
  while (upper > 0 && contains_power(gb, upper - 1)) --upper;
  return upper;
}

/// The same ideal with the power part at the smallest possible cap and the
/// explicit basis restricted below it. This representation is canonical.
template <class F>
std::optional<GroebnerBasis<F>> canonical_capped(const GroebnerBasis<F>& gb) {
  if (gb.is_unit()) return gb;
  auto cap = minimal_power_cap(gb);
  if (!cap) return std::nullopt;
  std::vector<Polynomial<F>> kept;
  for (const auto& g : gb.basis())
    if (g.leading_monomial().degree() < *cap) kept.push_back(g);
  return GroebnerBasis<F>(gb.field(), gb.n_vars(), std::move(kept), *cap);
}

template <class F>
bool ideal_equal(const GroebnerBasis<F>& a, const GroebnerBasis<F>& b) {
  if (a.n_vars() != b.n_vars() || !(a.field() == b.field())) throw ArityError("ideals live in different rings");
  if (a.is_unit() || b.is_unit()) return a.is_unit() && b.is_unit();
  if (!a.power_cap() && !b.power_cap()) return a.basis() == b.basis();
  auto ca = canonical_capped(a);
  auto cb = canonical_capped(b);
  if (!ca || !cb) return false;  // exactly one of them contains a power of <X>
  return ca->power_cap() == cb->power_cap() && ca->basis() == cb->basis();
}

}  // namespace solvcert

#endif  // SOLVCERT_GROEBNER_HPP

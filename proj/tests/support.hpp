// Shared helpers for the test suites: seeded random generators and oracles
// that avoid Groebner bases entirely (plain linear algebra in K[X]/<X>^l).
#ifndef SOLVCERT_TESTS_SUPPORT_HPP
#define SOLVCERT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "solvcert/algebra.hpp"
#include "solvcert/field.hpp"
#include "solvcert/fixtures.hpp"
#include "solvcert/linalg.hpp"
#include "solvcert/parser.hpp"
#include "solvcert/polynomial.hpp"

namespace solvcert {
// Readable gtest failure messages.
template <class F>
void PrintTo(const Polynomial<F>& p, std::ostream* os) {
  *os << p.to_string();
}
inline void PrintTo(const Monomial& m, std::ostream* os) { *os << m.to_string(default_variable_names(m.n_vars())); }
}  // namespace solvcert

namespace testsupport {

using namespace solvcert;
using Q = RationalField;
using Fp = PrimeField;
using PolyQ = Polynomial<Q>;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return engine_() & 1; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

template <class F>
Monomial random_monomial(Rng& rng, std::size_t n, std::uint32_t degree) {
  std::vector<std::uint32_t> e(n, 0);
  for (std::uint32_t k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(n) - 1))];
  return Monomial(e);
}

/// Random polynomial with up to `terms` terms of degree in [min_deg, max_deg].
template <class F>
Polynomial<F> random_poly(Rng& rng, const F& k, std::size_t n, std::uint32_t min_deg, std::uint32_t max_deg,
                          int terms, std::int64_t coeff = 5) {
  std::vector<typename Polynomial<F>::Term> ts;
  for (int t = 0; t < terms; ++t) {
    auto d = static_cast<std::uint32_t>(rng.range(min_deg, max_deg));
    auto c = rng.range(-coeff, coeff);
    if (c == 0) c = 1;
    ts.emplace_back(random_monomial<F>(rng, n, d), k.from_int(c));
  }
  return Polynomial<F>(k, n, std::move(ts));
}

template <class F>
Polynomial<F> random_form(Rng& rng, const F& k, std::size_t n, std::uint32_t degree, int terms, std::int64_t coeff = 5) {
  return random_poly(rng, k, n, degree, degree, terms, coeff);
}

template <class F>
Polynomial<F> parse(const F& k, const std::vector<std::string>& vars, const std::string& text) {
  return parse_polynomial(k, vars, text);
}

inline PolyQ q(const std::vector<std::string>& vars, const std::string& text) { return parse(Q{}, vars, text); }

/// Random invertible matrix with entries in [-2, 2].
template <class F>
LinearChange<F> random_change(Rng& rng, const F& k, std::size_t n) {
  while (true) {
    std::vector<std::vector<typename F::value_type>> rows(n, std::vector<typename F::value_type>(n, k.zero()));
    for (auto& r : rows)
      for (auto& v : r) v = k.from_int(rng.range(-2, 2));
    try {
      return LinearChange<F>(k, std::move(rows));
    } catch (const SingularMatrixError&) {
    }
  }
}

/// Span of <gens> + <X>^l inside K[X]/<X>^l, built from all products m * g.
template <class F>
class TruncatedSpan {
 public:
  TruncatedSpan(const F& k, std::size_t n, const std::vector<Polynomial<F>>& gens, std::uint32_t l)
      : k_(k), n_(n), l_(l) {
    for (std::uint32_t d = 0; d < l; ++d)
      for (const auto& m : monomials_of_degree(n, d)) {
        col_.emplace(m, monos_.size());
        monos_.push_back(m);
      }
    span_.emplace(k, monos_.size());
    for (const auto& g : gens)
      for (std::uint32_t d = 0; d < l; ++d)
        for (const auto& m : monomials_of_degree(n, d)) {
          auto t = g.times_term(m, k.one()).truncated(l);
          if (!t.is_zero()) span_->insert(row(t));
        }
  }

  std::size_t n_monomials() const { return monos_.size(); }
  std::size_t rank() const { return span_->rank(); }
  /// dim K[X] / (I + <X>^l)
  std::size_t quotient_dim() const { return monos_.size() - rank(); }

  bool contains(const Polynomial<F>& f) const { return span_->contains(to_dense(k_, row(f.truncated(l_)), monos_.size())); }

  /// dim K[X] / (I + <X>^d) for d <= l, by projecting the span.
  std::size_t quotient_dim_below(std::uint32_t d) const {
    std::size_t width = 0;
    while (width < monos_.size() && monos_[width].degree() < d) ++width;
    EchelonBasis<F> proj(k_, width);
    for (const auto& r : span_->rows()) {
      SparseRow<F> cut;
      for (const auto& [c, v] : r)
        if (c < width) cut.emplace_back(c, v);
      proj.insert(cut);
    }
    return width - proj.rank();
  }

  /// Smallest l' <= l with every monomial of degree l' in the span.
  std::uint32_t minimal_power() const {
    for (std::uint32_t d = 0; d < l_; ++d) {
      bool all = true;
      for (const auto& m : monomials_of_degree(n_, d))
        if (!contains(Polynomial<F>::term(k_, m, k_.one()))) {
          all = false;
          break;
        }
      if (all) return d;
    }
    return l_;
  }

 private:
  SparseRow<F> row(const Polynomial<F>& f) const {
    SparseRow<F> r;
    for (const auto& [m, c] : f.terms()) r.emplace_back(col_.at(m), c);
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  }

  F k_;
  std::size_t n_;
  std::uint32_t l_;
  std::vector<Monomial> monos_;  // ascending degree
  std::unordered_map<Monomial, std::size_t, MonomialHash> col_;
  std::optional<EchelonBasis<F>> span_;
};

/// Random homogeneous admissible presentation: a few forms of degree in
/// [2, l-1] plus the power cap l.
inline IdealPresentation<Q> random_homogeneous_presentation(Rng& rng, std::size_t n, std::uint32_t l, int n_gens,
                                                            int terms = 3, std::int64_t coeff = 3) {
  Q k;
  std::vector<PolyQ> gens;
  for (int i = 0; i < n_gens; ++i) {
    auto d = static_cast<std::uint32_t>(rng.range(2, l - 1));
    auto f = random_form(rng, k, n, d, terms, coeff);
    if (!f.is_zero()) gens.push_back(f);
  }
  return IdealPresentation<Q>(k, n, gens, l);
}

/// Random admissible presentation with non-homogeneous generators (order >= 2).
inline IdealPresentation<Q> random_presentation(Rng& rng, std::size_t n, std::uint32_t l, int n_gens) {
  Q k;
  std::vector<PolyQ> gens;
  for (int i = 0; i < n_gens; ++i) {
    auto f = random_poly(rng, k, n, 2, l, 3, 3);
    if (!f.is_zero()) gens.push_back(f);
  }
  return IdealPresentation<Q>(k, n, gens, l);
}

/// A built-in char-0 fixture as a presentation.
inline IdealPresentation<Q> fixture(const std::string& name) {
  const auto* f = fixture_by_name(name);
  if (!f) throw InputError("no fixture " + name);
  return build_presentation(parse_source(std::string(f->text)), Q{});
}

inline AdmissiblePresentation<Q> fixture_ap(const std::string& name) { return validate_admissible(fixture(name)); }

/// Names of char-0 fixtures small enough for exhaustive checks.
inline std::vector<std::string> small_fixtures() {
  return {"ex3_5", "ex5_5", "ex5_6_n3", "ex5_7", "ex5_8_small", "ex6_1_small", "ex6_3_small",
          "kx_x2", "kx_x3", "m2_n2", "remark6_8_n4"};
}

/// Span equality of two lists of forms: mutual membership via a rank check.
inline bool same_span(const std::vector<PolyQ>& a, const std::vector<PolyQ>& b) {
  std::unordered_map<Monomial, std::size_t, MonomialHash> col;
  for (const auto* list : {&a, &b})
    for (const auto& f : *list)
      for (const auto& [m, c] : f.terms()) col.try_emplace(m, col.size());
  auto rank = [&](std::initializer_list<const std::vector<PolyQ>*> lists) {
    EchelonBasis<Q> e(Q{}, col.size());
    for (const auto* list : lists)
      for (const auto& f : *list) {
        SparseRow<Q> row;
        for (const auto& [m, c] : f.terms()) row.emplace_back(col.at(m), c);
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        e.insert(row);
      }
    return e.rank();
  };
  auto ra = rank({&a}), rb = rank({&b});
  return ra == rb && rank({&a, &b}) == ra;
}

}  // namespace testsupport

#endif  // SOLVCERT_TESTS_SUPPORT_HPP

#ifndef SOLVCERT_DERORACLE_HPP
#define SOLVCERT_DERORACLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solvcert/algebra.hpp"
#include "solvcert/certifier.hpp"
#include "solvcert/errors.hpp"
#include "solvcert/linalg.hpp"

// Der(A) by brute-force linear algebra. A derivation is fixed by the images
// of x1..xn; a tuple (v1..vn) extends to A iff sum_i v_i * dg/dX_i = 0 in A for
// every g in a generating set of I.

namespace solvcert {

/// images[i] = D(x_i), in coordinates of the standard monomial basis.
template <class F>
struct Derivation {
  std::vector<std::vector<typename F::value_type>> images;
};

template <class F>
struct DerivationAlgebra {
  std::vector<Derivation<F>> basis;
  std::size_t dim() const { return basis.size(); }
};

struct DerivedSeries {
  std::vector<std::size_t> dims;
  bool solvable = false;
};

namespace detail {

template <class F>
std::vector<typename F::value_type> flatten(const Derivation<F>& d) {
  std::vector<typename F::value_type> out;
  for (const auto& v : d.images) out.insert(out.end(), v.begin(), v.end());
  return out;
}

template <class F>
Derivation<F> unflatten(const std::vector<typename F::value_type>& flat, std::size_t n, std::size_t dim) {
  Derivation<F> d;
  for (std::size_t i = 0; i < n; ++i) d.images.emplace_back(flat.begin() + i * dim, flat.begin() + (i + 1) * dim);
  return d;
}

/// D applied to every basis monomial: table[b] = D(basis[b]).
template <class F>
std::vector<std::vector<typename F::value_type>> derivation_table(const QuotientAlgebra<F>& qa, const Derivation<F>& d) {
  const auto& basis = qa.basis();
  std::vector<std::vector<typename F::value_type>> table(basis.size());
  table[0] = qa.zero();
  for (std::size_t b = 1; b < basis.size(); ++b) {
    const Monomial& m = basis[b];
    std::size_t i = 0;
    while (m[i] == 0) ++i;
    Monomial rest = m / Monomial::variable(qa.n_vars(), i);
    // D(x_i * rest) = x_i * D(rest) + rest * D(x_i)
    auto v = qa.times_var(i, table[qa.index_of(rest)]);
    auto w = qa.times_monomial(rest, d.images[i]);
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = qa.field().add(v[c], w[c]);
    table[b] = std::move(v);
  }
  return table;
}

template <class F>
std::vector<typename F::value_type> apply_table(const QuotientAlgebra<F>& qa,
                                                const std::vector<std::vector<typename F::value_type>>& table,
                                                const std::vector<typename F::value_type>& a) {
  const F& k = qa.field();
  auto out = qa.zero();
  for (std::size_t b = 0; b < a.size(); ++b) {
    if (k.is_zero(a[b])) continue;
    for (std::size_t c = 0; c < out.size(); ++c)
      if (!k.is_zero(table[b][c])) out[c] = k.add(out[c], k.mul(a[b], table[b][c]));
  }
  return out;
}

template <class F>
Derivation<F> bracket_from_tables(const QuotientAlgebra<F>& qa, const Derivation<F>& d,
                                  const std::vector<std::vector<typename F::value_type>>& d_table, const Derivation<F>& e,
                                  const std::vector<std::vector<typename F::value_type>>& e_table) {
  Derivation<F> out;
  for (std::size_t i = 0; i < qa.n_vars(); ++i) {
    auto a = apply_table(qa, d_table, e.images[i]);
    auto b = apply_table(qa, e_table, d.images[i]);
    for (std::size_t c = 0; c < a.size(); ++c) a[c] = qa.field().sub(a[c], b[c]);
    out.images.push_back(std::move(a));
  }
  return out;
}

}  // namespace detail

/// Residual of the well-definedness system for a candidate tuple; all zero iff
/// the tuple defines a derivation.
template <class F>
std::vector<std::vector<typename F::value_type>> derivation_residuals(const QuotientAlgebra<F>& qa,
                                                                      const AdmissiblePresentation<F>& ap,
                                                                      const Derivation<F>& d) {
  std::vector<std::vector<typename F::value_type>> out;
  for (const auto& g : ap.gb.full_basis()) {
    auto acc = qa.zero();
    for (std::size_t i = 0; i < qa.n_vars(); ++i) {
      auto c = qa.coordinates(normal_form(partial_derivative(g, i), ap.gb));
      auto prod = qa.multiply(c, d.images[i]);
      for (std::size_t r = 0; r < acc.size(); ++r) acc[r] = qa.field().add(acc[r], prod[r]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

template <class F>
DerivationAlgebra<F> derivation_space(const QuotientAlgebra<F>& qa, const AdmissiblePresentation<F>& ap) {
  const F& k = qa.field();
  const std::size_t n = qa.n_vars(), dim = qa.dim();
  const std::size_t unknowns = n * dim;
  EchelonBasis<F> constraints(k, unknowns);
  for (const auto& g : ap.gb.full_basis()) {
    // columns[(i, b)] = basis[b] * NF(dg/dX_i), one block of dim equations
    std::vector<std::vector<typename F::value_type>> rows(dim, std::vector<typename F::value_type>(unknowns, k.zero()));
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      auto c = qa.coordinates(normal_form(partial_derivative(g, i), ap.gb));
      bool zero = true;
      for (const auto& x : c) zero = zero && k.is_zero(x);
      if (zero) continue;
      any = true;
      for (std::size_t b = 0; b < dim; ++b) {
        auto col = qa.times_monomial(qa.basis()[b], c);
        for (std::size_t r = 0; r < dim; ++r)
          if (!k.is_zero(col[r])) rows[r][i * dim + b] = col[r];
      }
    }
    if (!any) continue;
    for (auto& r : rows) constraints.insert(std::move(r));
  }
  DerivationAlgebra<F> out;
  for (auto& v : nullspace(k, constraints.rows(), unknowns)) out.basis.push_back(detail::unflatten<F>(v, n, dim));
  return out;
}

template <class F>
std::vector<typename F::value_type> apply_derivation(const QuotientAlgebra<F>& qa, const Derivation<F>& d,
                                                     const std::vector<typename F::value_type>& a) {
  return detail::apply_table(qa, detail::derivation_table(qa, d), a);
}

template <class F>
Derivation<F> lie_bracket(const QuotientAlgebra<F>& qa, const Derivation<F>& d, const Derivation<F>& e) {
  return detail::bracket_from_tables(qa, d, detail::derivation_table(qa, d), e, detail::derivation_table(qa, e));
}

/// Dimensions of L, [L, L], [[L, L], [L, L]], ... until 0 or a repeat.
template <class F>
DerivedSeries derived_series(const QuotientAlgebra<F>& qa, const std::vector<Derivation<F>>& generators) {
  const F& k = qa.field();
  const std::size_t width = qa.n_vars() * qa.dim();
  std::vector<Derivation<F>> level;
  {
    EchelonBasis<F> span(k, width);
    for (const auto& d : generators)
      if (span.insert(detail::flatten(d)) != EchelonBasis<F>::npos) level.push_back(d);
  }
  DerivedSeries s;
  s.dims.push_back(level.size());
  while (!level.empty()) {
    std::vector<std::vector<std::vector<typename F::value_type>>> tables;
    for (const auto& d : level) tables.push_back(detail::derivation_table(qa, d));
    EchelonBasis<F> span(k, width);
    std::vector<Derivation<F>> next;
    for (std::size_t a = 0; a < level.size(); ++a)
      for (std::size_t b = a + 1; b < level.size(); ++b) {
        auto br = detail::bracket_from_tables(qa, level[a], tables[a], level[b], tables[b]);
        if (span.insert(detail::flatten(br)) != EchelonBasis<F>::npos) next.push_back(std::move(br));
      }
    s.dims.push_back(next.size());
    if (next.size() == level.size()) break;
    level = std::move(next);
  }
  s.solvable = s.dims.back() == 0;
  return s;
}

template <class F>
DerivedSeries derived_series(const QuotientAlgebra<F>& qa, const DerivationAlgebra<F>& l) {
  return derived_series(qa, l.basis);
}

struct OracleLimits {
  std::size_t dim_cap = kDefaultDimCap;
  /// Bound on n * dim A, the number of unknowns of the derivation system.
  std::size_t unknown_cap = 1000;
};

struct OracleResult {
  std::size_t der_dim = 0;
  DerivedSeries series;
};

template <class F>
OracleResult run_oracle(const AdmissiblePresentation<F>& ap, const OracleLimits& limits = {}) {
  auto qa = quotient_algebra(ap, limits.dim_cap);
  if (qa.n_vars() * qa.dim() > limits.unknown_cap)
    throw TooLargeError("derivation system has " + std::to_string(qa.n_vars() * qa.dim()) + " unknowns, above the cap of " +
                        std::to_string(limits.unknown_cap));
  auto der = derivation_space(qa, ap);
  return OracleResult{der.dim(), derived_series(qa, der)};
}

enum class CrossCheck { Pass, Fail, NotApplicable };

inline const char* to_string(CrossCheck c) {
  switch (c) {
    case CrossCheck::Pass: return "PASS";
    case CrossCheck::Fail: return "FAIL";
    case CrossCheck::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

struct ConsistencyResult {
  CrossCheck status = CrossCheck::NotApplicable;
  std::string annotation;
};

/// Compares a certified verdict with Lie solvability of Der(A). Meaningful in
/// characteristic 0 only.
inline ConsistencyResult cross_check(Verdict verdict, const OracleResult& oracle, std::uint64_t characteristic) {
  if (characteristic != 0)
    return {CrossCheck::NotApplicable, "characteristic p: Lie solvability of Der(A) is reported for information only"};
  const bool solvable = oracle.series.solvable;
  switch (verdict) {
    case Verdict::CertifiedSolvable:
      return {solvable ? CrossCheck::Pass : CrossCheck::Fail, solvable ? "" : "certified solvable but Der(A) is not"};
    case Verdict::CertifiedNotSolvable:
      return {solvable ? CrossCheck::Fail : CrossCheck::Pass, solvable ? "certified not solvable but Der(A) is" : ""};
    case Verdict::Inconclusive:
      return {CrossCheck::Pass, std::string("inconclusive; Der(A) is ") + (solvable ? "solvable" : "not solvable")};
  }
  return {};
}

}  // namespace solvcert

#endif  // SOLVCERT_DERORACLE_HPP

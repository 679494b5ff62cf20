#ifndef SOLVCERT_ALGEBRA_HPP
#define SOLVCERT_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "solvcert/errors.hpp"
#include "solvcert/groebner.hpp"
#include "solvcert/linalg.hpp"
#include "solvcert/polynomial.hpp"

namespace solvcert {

/// An ideal of K[X1..Xn] as written by the user, before validation. The
/// optional power cap l stands for the extra generators <X>^l.
template <class F>
struct IdealPresentation {
  F field;
  std::size_t n_vars = 0;
  std::vector<std::string> names;
  std::vector<Polynomial<F>> generators;
  std::optional<std::uint32_t> power_cap;

  IdealPresentation(F k, std::size_t n, std::vector<Polynomial<F>> gens,
                    std::optional<std::uint32_t> cap = std::nullopt, std::vector<std::string> var_names = {})
      : field(std::move(k)), n_vars(n), names(std::move(var_names)), generators(std::move(gens)), power_cap(cap) {
    if (n_vars == 0) throw ArityError("at least one variable is required");
    if (names.empty()) names = default_variable_names(n_vars);
    if (names.size() != n_vars) throw ArityError("variable name count does not match n_vars");
    for (const auto& g : generators)
      if (g.n_vars() != n_vars || !(g.field() == field)) throw ArityError("generator lives in a different ring");
  }
};

/// A validated presentation <X>^l + <P1..Pm> with <X>^l in I in <X>^2.
template <class F>
struct AdmissiblePresentation {
  IdealPresentation<F> base;
  std::uint32_t lowey;
  GroebnerBasis<F> gb;  // explicit part below degree `lowey`, power cap `lowey`
  /// Generators with their degree >= lowey parts removed; zero ones dropped.
  std::vector<Polynomial<F>> normalized_gens;

  const F& field() const { return base.field; }
  std::size_t n_vars() const { return base.n_vars; }
  const std::vector<std::string>& names() const { return base.names; }
};

template <class F>
AdmissiblePresentation<F> validate_admissible(const IdealPresentation<F>& p) {
  const std::size_t n = p.n_vars;
  for (const auto& g : p.generators) {
    if (g.is_zero()) throw NotAdmissibleError("generator is the zero polynomial");
    if (*g.order() < 2)
      throw NotAdmissibleError("generator " + g.to_string(p.names) +
                               " has a nonzero constant or linear part");
  }
  if (p.power_cap && *p.power_cap < 2)
    throw NotAdmissibleError("lowey cap must be at least 2 (the ideal must lie in <X>^2)");

  std::uint32_t cap;
  GroebnerBasis<F> gb(p.field, n, {}, std::nullopt);
  if (p.power_cap) {
    cap = *p.power_cap;
    gb = buchberger(p.field, n, p.generators, cap);
  } else {
    if (p.generators.empty()) throw InfiniteDimensionalError("no generators and no lowey cap");
    auto free_gb = buchberger(p.field, n, p.generators);
    auto std_monos = standard_monomials(free_gb);
    if (!std_monos) throw InfiniteDimensionalError("quotient is infinite-dimensional");
    // R^D = 0 when the quotient is local of dimension D.
    cap = static_cast<std::uint32_t>(std_monos->size()) + 1;
    gb = buchberger(p.field, n, p.generators, cap);
    if (standard_monomials(gb)->size() != std_monos->size())
      throw NotAdmissibleError("quotient is not local: no power of <X> lies in the ideal");
  }
  auto canonical = canonical_capped(gb);
  std::uint32_t lowey = *canonical->power_cap();

  std::vector<Polynomial<F>> normalized;
  for (const auto& g : p.generators) {
    auto t = g.truncated(lowey);
    if (!t.is_zero()) normalized.push_back(std::move(t));
  }
  return AdmissiblePresentation<F>{p, lowey, std::move(*canonical), std::move(normalized)};
}

template <class F>
std::uint32_t lowey_length(const AdmissiblePresentation<F>& ap) {
  return ap.lowey;
}

/// Every homogeneous component of every generator lies in I.
template <class F>
bool is_homogeneous_ideal(const AdmissiblePresentation<F>& ap) {
  for (const auto& g : ap.normalized_gens) {
    if (g.is_homogeneous()) continue;
    for (const auto& [d, c] : homogeneous_components(g))
      if (!ideal_membership(c, ap.gb)) return false;
  }
  return true;
}

/// A = K[X]/I with the standard-monomial basis (ascending, 1 first) and the
/// matrices of multiplication by each variable.
template <class F>
class QuotientAlgebra {
 public:
  using Scalar = typename F::value_type;
  using Vector = std::vector<Scalar>;

  QuotientAlgebra(const AdmissiblePresentation<F>& ap, std::size_t dim_cap) : field_(ap.field()), n_(ap.n_vars()) {
    basis_ = *standard_monomials(ap.gb, dim_cap);
    for (std::size_t b = 0; b < basis_.size(); ++b) index_.emplace(basis_[b], b);
    mult_by_var_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (const auto& m : basis_) {
        auto prod = Polynomial<F>::term(field_, m * Monomial::variable(n_, i), field_.one());
        mult_by_var_[i].push_back(to_sparse(field_, coordinates(normal_form(prod, ap.gb))));
      }
    }
  }

  const F& field() const { return field_; }
  std::size_t n_vars() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }

  /// Column b of the matrix of multiplication by X_i: NF(X_i * basis[b]).
  const SparseRow<F>& var_times_basis(std::size_t i, std::size_t b) const { return mult_by_var_.at(i).at(b); }

  std::size_t index_of(const Monomial& m) const { return index_.at(m); }
  bool is_standard(const Monomial& m) const { return index_.count(m) != 0; }

  Vector zero() const { return Vector(dim(), field_.zero()); }
  Vector one() const {
    auto v = zero();
    v[0] = field_.one();
    return v;
  }

  /// Coordinates of a polynomial that is already in normal form.
  Vector coordinates(const Polynomial<F>& reduced) const {
    auto v = zero();
    for (const auto& [m, c] : reduced.terms()) v.at(index_.at(m)) = c;
    return v;
  }

  Vector times_var(std::size_t i, const Vector& v) const {
    auto out = zero();
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (field_.is_zero(v[b])) continue;
      for (const auto& [c, val] : mult_by_var_[i][b]) out[c] = field_.add(out[c], field_.mul(v[b], val));
    }
    return out;
  }

  Vector times_monomial(const Monomial& m, Vector v) const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) v = times_var(i, v);
    return v;
  }

  Vector multiply(const Vector& a, const Vector& b) const {
    auto out = zero();
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (field_.is_zero(a[j])) continue;
      auto t = times_monomial(basis_[j], b);
      for (std::size_t c = 0; c < t.size(); ++c)
        if (!field_.is_zero(t[c])) out[c] = field_.add(out[c], field_.mul(a[j], t[c]));
    }
    return out;
  }

  Polynomial<F> to_polynomial(const Vector& v) const {
    std::vector<typename Polynomial<F>::Term> terms;
    for (std::size_t b = 0; b < v.size(); ++b)
      if (!field_.is_zero(v[b])) terms.emplace_back(basis_[b], v[b]);
    return Polynomial<F>(field_, n_, std::move(terms));
  }

 private:
  F field_;
  std::size_t n_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<std::vector<SparseRow<F>>> mult_by_var_;
};

inline constexpr std::size_t kDefaultDimCap = 1000;

template <class F>
QuotientAlgebra<F> quotient_algebra(const AdmissiblePresentation<F>& ap, std::size_t dim_cap = kDefaultDimCap) {
  return QuotientAlgebra<F>(ap, dim_cap);
}

/// dim R^d / R^{d+1} for d = 0, 1, ..., l-1, via dim K[X]/(I + <X>^d).
template <class F>
std::vector<std::size_t> radical_filtration(const AdmissiblePresentation<F>& ap,
                                            std::size_t limit = static_cast<std::size_t>(-1)) {
  std::vector<std::size_t> codims{0};
  for (std::uint32_t d = 1; d <= ap.lowey; ++d) {
    auto gb = d == ap.lowey ? ap.gb : buchberger(ap.field(), ap.n_vars(), ap.gb.basis(), d);
    codims.push_back(standard_monomials(gb, limit)->size());
  }
  std::vector<std::size_t> dims;
  for (std::size_t d = 0; d + 1 < codims.size(); ++d) dims.push_back(codims[d + 1] - codims[d]);
  return dims;
}

namespace detail {

/// Monomials of degree <= max_degree with a column index; columns ordered by
/// ascending degree.
class TruncatedColumns {
 public:
  TruncatedColumns(std::size_t n, std::uint32_t max_degree) {
    for (std::uint32_t d = 0; d <= max_degree; ++d) {
      degree_start_.push_back(monos_.size());
      for (const auto& m : monomials_of_degree(n, d)) {
        index_.emplace(m, monos_.size());
        monos_.push_back(m);
      }
    }
  }
  std::size_t size() const { return monos_.size(); }
  std::size_t index(const Monomial& m) const { return index_.at(m); }
  const Monomial& monomial(std::size_t c) const { return monos_[c]; }
  bool has(const Monomial& m) const { return index_.count(m) != 0; }

  template <class F>
  SparseRow<F> row(const Polynomial<F>& f) const {
    SparseRow<F> r;
    for (const auto& [m, c] : f.terms())
      if (has(m)) r.emplace_back(index(m), c);
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  }

 private:
  std::vector<Monomial> monos_;
  std::vector<std::size_t> degree_start_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

}  // namespace detail

/// Truncation columns needed for the generator count: C(n + l, n).
template <class F>
std::uint64_t generator_count_columns(const AdmissiblePresentation<F>& ap) {
  return binomial(ap.n_vars() + ap.lowey, ap.n_vars());
}

inline constexpr std::uint64_t kDefaultTruncationLimit = 20000;

/// m = dim I / <X>I, the minimal number of generators of I. Computed inside
/// K[X]/<X>^{l+1}; nullopt when that truncation exceeds `column_limit`.
template <class F>
std::optional<std::size_t> minimal_generator_count(const AdmissiblePresentation<F>& ap,
                                                   std::uint64_t column_limit = kDefaultTruncationLimit) {
  if (generator_count_columns(ap) > column_limit) return std::nullopt;
  const std::size_t n = ap.n_vars();
  const std::uint32_t l = ap.lowey;
  detail::TruncatedColumns cols(n, l);
  const F& k = ap.field();
  EchelonBasis<F> ideal(k, cols.size()), product(k, cols.size());
  for (const auto& g : ap.normalized_gens) {
    for (std::uint32_t d = 0; d + *g.order() <= l; ++d) {
      for (const auto& m : monomials_of_degree(n, d)) {
        auto row = cols.row(g.times_term(m, k.one()));
        ideal.insert(row);
        if (d > 0) product.insert(row);
      }
    }
  }
  for (const auto& m : monomials_of_degree(n, l))
    ideal.insert(cols.row(Polynomial<F>::term(k, m, k.one())));
  return ideal.rank() - product.rank();
}

/// The associated graded ideal I_*, spanned by lowest-degree forms of the
/// elements of I. Returned with the same power cap.
template <class F>
IdealPresentation<F> associated_graded_ideal(const AdmissiblePresentation<F>& ap) {
  const std::size_t n = ap.n_vars();
  const std::uint32_t l = ap.lowey;
  const F& k = ap.field();
  if (is_homogeneous_ideal(ap)) {
    std::vector<Polynomial<F>> gens;
    for (const auto& g : ap.normalized_gens)
      for (const auto& [d, c] : homogeneous_components(g)) gens.push_back(c);
    return IdealPresentation<F>(k, n, gens, l, ap.names());
  }
  detail::TruncatedColumns cols(n, l - 1);
  EchelonBasis<F> span(k, cols.size());
  for (const auto& g : ap.normalized_gens)
    for (std::uint32_t d = 0; d + *g.order() < l; ++d)
      for (const auto& m : monomials_of_degree(n, d)) span.insert(cols.row(g.times_term(m, k.one()).truncated(l)));
  std::vector<Polynomial<F>> forms;
  for (const auto& row : span.rows()) {
    std::uint32_t d = cols.monomial(row.front().first).degree();
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& [c, v] : row)
      if (cols.monomial(c).degree() == d) terms.emplace_back(cols.monomial(c), v);
    forms.emplace_back(k, n, std::move(terms));
  }
  auto gb = buchberger(k, n, forms, l);
  return IdealPresentation<F>(k, n, gb.basis(), l, ap.names());
}

}  // namespace solvcert

#endif  // SOLVCERT_ALGEBRA_HPP

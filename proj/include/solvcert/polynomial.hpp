#ifndef SOLVCERT_POLYNOMIAL_HPP
#define SOLVCERT_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "solvcert/errors.hpp"
#include "solvcert/field.hpp"
#include "solvcert/monomial.hpp"

namespace solvcert {

inline std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
  return names;
}

/// Sparse multivariate polynomial over F. Terms are kept sorted in descending
/// grevlex order with no zero coefficients, so equality is structural.
template <class F>
class Polynomial {
 public:
  using Field = F;
  using Scalar = typename F::value_type;
  using Term = std::pair<Monomial, Scalar>;

  Polynomial(F field, std::size_t n_vars) : field_(std::move(field)), n_vars_(n_vars) {
    if (n_vars_ == 0) throw ArityError("a polynomial ring needs at least one variable");
  }

  /// Builds from arbitrary terms; combines duplicates and drops zeros.
  Polynomial(F field, std::size_t n_vars, std::vector<Term> terms) : Polynomial(std::move(field), n_vars) {
    for (auto& [m, c] : terms)
      if (m.n_vars() != n_vars_) throw ArityError("monomial arity does not match polynomial ring");
    std::unordered_map<Monomial, Scalar, MonomialHash> acc;
    for (auto& [m, c] : terms) {
      auto [it, inserted] = acc.try_emplace(m, c);
      if (!inserted) it->second = field_.add(it->second, c);
    }
    assign_from(acc);
  }

  static Polynomial constant(const F& field, std::size_t n_vars, const Scalar& c) {
    Polynomial p(field, n_vars);
    if (!field.is_zero(c)) p.terms_.emplace_back(Monomial(n_vars), c);
    return p;
  }

  static Polynomial term(const F& field, const Monomial& m, const Scalar& c) {
    Polynomial p(field, m.n_vars());
    if (!field.is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }

  static Polynomial variable(const F& field, std::size_t n_vars, std::size_t i) {
    if (i >= n_vars) throw ArityError("variable index out of range");
    return term(field, Monomial::variable(n_vars, i), field.one());
  }

  const F& field() const { return field_; }
  std::size_t n_vars() const { return n_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; nullopt for the zero polynomial.
  std::optional<std::uint32_t> degree() const {
    if (is_zero()) return std::nullopt;
    return terms_.front().first.degree();
  }

  /// Smallest degree of a term; nullopt for the zero polynomial.
  std::optional<std::uint32_t> order() const {
    if (is_zero()) return std::nullopt;
    std::uint32_t o = terms_.front().first.degree();
    for (const auto& [m, c] : terms_) o = std::min(o, m.degree());
    return o;
  }

  const Monomial& leading_monomial() const { return terms_.front().first; }
  const Scalar& leading_coefficient() const { return terms_.front().second; }

  bool is_homogeneous() const {
    for (const auto& [m, c] : terms_)
      if (m.degree() != terms_.front().first.degree()) return false;
    return true;
  }

  bool is_monomial() const { return terms_.size() == 1; }

  /// Variables that occur in some term.
  std::vector<std::size_t> support() const {
    std::vector<bool> used(n_vars_, false);
    for (const auto& [m, c] : terms_)
      for (std::size_t i : m.support()) used[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_vars_; ++i)
      if (used[i]) out.push_back(i);
    return out;
  }

  Scalar coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
      return grevlex_compare(t.first, key) > 0;
    });
    if (it != terms_.end() && it->first == m) return it->second;
    return field_.zero();
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = field_.neg(c);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_, a.n_vars_);
    if (b.size() == 1) return a.times_term(b.terms_[0].first, b.terms_[0].second);
    if (a.size() == 1) return b.times_term(a.terms_[0].first, a.terms_[0].second);
    std::unordered_map<Monomial, Scalar, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto prod = a.field_.mul(ca, cb);
        auto [it, inserted] = acc.try_emplace(ma * mb, prod);
        if (!inserted) it->second = a.field_.add(it->second, prod);
      }
    Polynomial r(a.field_, a.n_vars_);
    r.assign_from(acc);
    return r;
  }

  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const Scalar& c) const {
    if (field_.is_zero(c)) return Polynomial(field_, n_vars_);
    Polynomial r = *this;
    for (auto& [m, v] : r.terms_) v = field_.mul(v, c);
    return r;
  }

  /// c * m * this. Multiplying by a monomial preserves the term order.
  Polynomial times_term(const Monomial& m, const Scalar& c) const {
    if (field_.is_zero(c)) return Polynomial(field_, n_vars_);
    Polynomial r(field_, n_vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [tm, tc] : terms_) {
      auto v = field_.mul(tc, c);
      if (!field_.is_zero(v)) r.terms_.emplace_back(tm * m, v);
    }
    return r;
  }

  Polynomial pow(std::uint32_t e) const {
    Polynomial result = constant(field_, n_vars_, field_.one());
    Polynomial base = *this;
    while (e) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading_coefficient()));
  }

  /// Drops every term of degree >= bound (reduction modulo <X>^bound).
  Polynomial truncated(std::uint32_t bound) const {
    Polynomial r(field_, n_vars_);
    for (const auto& t : terms_)
      if (t.first.degree() < bound) r.terms_.push_back(t);
    return r;
  }

  /// Homogeneous part of the given degree.
  Polynomial component(std::uint32_t d) const {
    Polynomial r(field_, n_vars_);
    for (const auto& t : terms_)
      if (t.first.degree() == d) r.terms_.push_back(t);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_vars_ == b.n_vars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// Canonical text: descending grevlex, coefficients as `a` or `a/b`.
  std::string to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& [m, c] = terms_[k];
      std::string cs = field_.to_string(c);
      bool negative = !cs.empty() && cs[0] == '-';
      if (negative) cs.erase(0, 1);
      if (k == 0)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (m.is_one()) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += m.to_string(names);
      }
    }
    return out;
  }

  std::string to_string() const { return to_string(default_variable_names(n_vars_)); }

  void check_compatible(const Polynomial& other) const {
    if (n_vars_ != other.n_vars_ || !(field_ == other.field_))
      throw ArityError("polynomials live in different rings");
  }

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    a.check_compatible(b);
    const F& k = a.field_;
    Polynomial r(k, a.n_vars_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int cmp;
      if (i == a.size())
        cmp = -1;
      else if (j == b.size())
        cmp = 1;
      else
        cmp = grevlex_compare(a.terms_[i].first, b.terms_[j].first);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        const auto& [m, c] = b.terms_[j++];
        r.terms_.emplace_back(m, subtract ? k.neg(c) : c);
      } else {
        auto v = subtract ? k.sub(a.terms_[i].second, b.terms_[j].second)
                          : k.add(a.terms_[i].second, b.terms_[j].second);
        if (!k.is_zero(v)) r.terms_.emplace_back(a.terms_[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return r;
  }

  void assign_from(std::unordered_map<Monomial, Scalar, MonomialHash>& acc) {
    terms_.clear();
    for (auto& [m, c] : acc)
      if (!field_.is_zero(c)) terms_.emplace_back(m, std::move(c));
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return grevlex_compare(x.first, y.first) > 0; });
  }

  F field_;
  std::size_t n_vars_;
  std::vector<Term> terms_;
};

/// Formal partial derivative with respect to X_{i+1} (0-based index i).
template <class F>
Polynomial<F> partial_derivative(const Polynomial<F>& f, std::size_t i) {
  if (i >= f.n_vars()) throw ArityError("derivative index out of range");
  const F& k = f.field();
  std::vector<typename Polynomial<F>::Term> out;
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    auto e = m.exponents();
    auto coeff = k.mul(c, k.from_int(static_cast<std::int64_t>(e[i])));
    --e[i];
    if (!k.is_zero(coeff)) out.emplace_back(Monomial(std::move(e)), coeff);
  }
  return Polynomial<F>(k, f.n_vars(), std::move(out));
}

/// degree -> homogeneous component; components sum to f.
template <class F>
std::map<std::uint32_t, Polynomial<F>> homogeneous_components(const Polynomial<F>& f) {
  if (f.is_zero()) throw ZeroPolynomialError("homogeneous components of the zero polynomial");
  std::map<std::uint32_t, std::vector<typename Polynomial<F>::Term>> buckets;
  for (const auto& t : f.terms()) buckets[t.first.degree()].push_back(t);
  std::map<std::uint32_t, Polynomial<F>> out;
  for (auto& [d, terms] : buckets) out.emplace(d, Polynomial<F>(f.field(), f.n_vars(), std::move(terms)));
  return out;
}

template <class F>
Polynomial<F> lowest_component(const Polynomial<F>& f) {
  return homogeneous_components(f).begin()->second;
}

/// An invertible n x n matrix acting by X_j -> sum_i m(i, j) X_i.
template <class F>
class LinearChange {
 public:
  using Scalar = typename F::value_type;

  LinearChange(F field, std::vector<std::vector<Scalar>> rows) : field_(std::move(field)), rows_(std::move(rows)) {
    const std::size_t n = rows_.size();
    if (n == 0) throw ArityError("empty linear change");
    for (const auto& r : rows_)
      if (r.size() != n) throw ArityError("linear change matrix must be square");
    if (field_.is_zero(determinant())) throw SingularMatrixError("linear change matrix is singular");
  }

  static LinearChange identity(const F& field, std::size_t n) {
    std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(n, field.zero()));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = field.one();
    return LinearChange(field, std::move(rows));
  }

  std::size_t size() const { return rows_.size(); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const F& field() const { return field_; }

  Scalar determinant() const {
    auto a = rows_;
    const std::size_t n = a.size();
    Scalar det = field_.one();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && field_.is_zero(a[p][c])) ++p;
      if (p == n) return field_.zero();
      if (p != c) {
        std::swap(a[p], a[c]);
        det = field_.neg(det);
      }
      det = field_.mul(det, a[c][c]);
      auto inv = field_.inv(a[c][c]);
      for (std::size_t r = c + 1; r < n; ++r) {
        if (field_.is_zero(a[r][c])) continue;
        auto factor = field_.mul(a[r][c], inv);
        for (std::size_t k = c; k < n; ++k) field_.sub_mul(a[r][k], factor, a[c][k]);
      }
    }
    return det;
  }

  /// Matrix product this * other.
  LinearChange operator*(const LinearChange& other) const {
    const std::size_t n = size();
    std::vector<std::vector<Scalar>> out(n, std::vector<Scalar>(n, field_.zero()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
          out[i][j] = field_.add(out[i][j], field_.mul(rows_[i][k], other.rows_[k][j]));
    return LinearChange(field_, std::move(out));
  }

 private:
  F field_;
  std::vector<std::vector<Scalar>> rows_;
};

/// f(XM). Composition: apply(apply(f, M), N) == apply(f, N * M).
template <class F>
Polynomial<F> apply_linear_change(const Polynomial<F>& f, const LinearChange<F>& change) {
  const std::size_t n = f.n_vars();
  if (change.size() != n) throw ArityError("linear change size does not match the number of variables");
  const F& k = f.field();
  std::vector<Polynomial<F>> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (std::size_t i = 0; i < n; ++i) terms.emplace_back(Monomial::variable(n, i), change(i, j));
    images.emplace_back(k, n, std::move(terms));
  }
  std::vector<std::map<std::uint32_t, Polynomial<F>>> powers(n);
  auto power = [&](std::size_t j, std::uint32_t e) -> const Polynomial<F>& {
    auto it = powers[j].find(e);
    if (it == powers[j].end()) it = powers[j].emplace(e, images[j].pow(e)).first;
    return it->second;
  };
  Polynomial<F> result(k, n);
  for (const auto& [m, c] : f.terms()) {
    auto t = Polynomial<F>::constant(k, n, c);
    for (std::size_t j = 0; j < n; ++j)
      if (m[j]) t *= power(j, m[j]);
    result += t;
  }
  return result;
}

}  // namespace solvcert

#endif  // SOLVCERT_POLYNOMIAL_HPP

#ifndef SOLVCERT_MONOMIAL_HPP
#define SOLVCERT_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "solvcert/errors.hpp"

namespace solvcert {

/// X1^e1 ... Xn^en with a cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n_vars) : exps_(n_vars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
  }

  static Monomial variable(std::size_t n_vars, std::size_t i, std::uint32_t power = 1) {
    Monomial m(n_vars);
    m.exps_.at(i) = power;
    m.degree_ = power;
    return m;
  }

  std::size_t n_vars() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// Variables with a nonzero exponent.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i]) s.push_back(i);
    return s;
  }

  /// Index of the only variable if this is a pure power X_i^k (k >= 1), else n_vars.
  std::size_t pure_power_variable() const {
    std::size_t found = exps_.size();
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (!exps_[i]) continue;
      if (found != exps_.size()) return exps_.size();
      found = i;
    }
    return found;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_vars());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_vars());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_vars());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] && b.exps_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (!exps_[i]) continue;
      if (!out.empty()) out += '*';
      out += names.at(i);
      if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic order with X1 > X2 > ... > Xn.
/// Returns <0, 0, >0 as a is smaller, equal, larger than b.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.n_vars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

/// Strict "comes first" for descending grevlex iteration.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Calls visit(m) for every monomial of total degree d in n variables.
inline void for_each_monomial_of_degree(std::size_t n, std::uint32_t d,
                                        const std::function<void(const Monomial&)>& visit) {
  if (n == 0) return;
  std::vector<std::uint32_t> e(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == n) {
      e[i] = left;
      visit(Monomial(e));
      e[i] = 0;
      return;
    }
    for (std::uint32_t k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, d);
}

/// All monomials of degree d, sorted descending in grevlex.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  for_each_monomial_of_degree(n, d, [&](const Monomial& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(), GrevlexDescending{});
  return out;
}

/// All monomials of degree < bound, sorted descending in grevlex.
inline std::vector<Monomial> monomials_below_degree(std::size_t n, std::uint32_t bound) {
  std::vector<Monomial> out;
  for (std::uint32_t d = 0; d < bound; ++d)
    for_each_monomial_of_degree(n, d, [&](const Monomial& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(), GrevlexDescending{});
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace solvcert

#endif  // SOLVCERT_MONOMIAL_HPP

#ifndef SOLVCERT_CERTIFIER_HPP
#define SOLVCERT_CERTIFIER_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "solvcert/algebra.hpp"
#include "solvcert/errors.hpp"
#include "solvcert/groebner.hpp"
#include "solvcert/linalg.hpp"
#include "solvcert/polynomial.hpp"

namespace solvcert {

enum class Verdict { CertifiedSolvable, CertifiedNotSolvable, Inconclusive };
enum class Polarity { Solvable, NotSolvable };

enum class RuleTag {
  N1_SINGLE_VAR,
  PW_POWER_IDEAL,
  D2_DIM_TWO,
  C1_REGULAR_SEQUENCE,
  C23_NONSINGULAR,
  QD_QUADRIC,
  PS_PROPERTY_SHARP,
  SP_SUBPOWER,
  PK_GENERATOR_COUNT,
  GR_GRADED_FALLBACK,
};

inline const char* to_string(RuleTag t) {
  switch (t) {
    case RuleTag::N1_SINGLE_VAR: return "N1_SINGLE_VAR";
    case RuleTag::PW_POWER_IDEAL: return "PW_POWER_IDEAL";
    case RuleTag::D2_DIM_TWO: return "D2_DIM_TWO";
    case RuleTag::C1_REGULAR_SEQUENCE: return "C1_REGULAR_SEQUENCE";
    case RuleTag::C23_NONSINGULAR: return "C23_NONSINGULAR";
    case RuleTag::QD_QUADRIC: return "QD_QUADRIC";
    case RuleTag::PS_PROPERTY_SHARP: return "PS_PROPERTY_SHARP";
    case RuleTag::SP_SUBPOWER: return "SP_SUBPOWER";
    case RuleTag::PK_GENERATOR_COUNT: return "PK_GENERATOR_COUNT";
    case RuleTag::GR_GRADED_FALLBACK: return "GR_GRADED_FALLBACK";
  }
  return "?";
}

inline const char* to_string(Polarity p) { return p == Polarity::Solvable ? "solvable" : "not_solvable"; }

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedSolvable: return "certified_solvable";
    case Verdict::CertifiedNotSolvable: return "certified_not_solvable";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// A rule that fired, with a printable witness and the argument it rests on.
struct RuleFiring {
  RuleTag tag;
  Polarity polarity;
  std::string witness;
  std::string rationale;
  /// For GR_GRADED_FALLBACK: the rule that fired on I_*.
  std::optional<RuleTag> source;
};

struct SearchConfig {
  std::uint64_t seed = 0;
  std::uint32_t trials = 64;
  std::int64_t coefficient_bound = 10;
  /// Limit on quotient dimension / truncation sizes for the reported invariants.
  std::size_t invariant_limit = 100000;

  void validate() const {
    if (trials < 1) throw InputError("trials must be at least 1");
    if (coefficient_bound < 1) throw InputError("coefficient bound must be at least 1");
  }
};

// ---------------------------------------------------------------------------
// Minimal degree subspace

template <class F>
struct MinimalDegreeSubspace {
  std::uint32_t degree = 0;
  std::size_t dim = 0;
  /// Empty with materialized == false when W is all of K[X]_l and too big to list.
  std::vector<Polynomial<F>> basis;
  bool materialized = true;
};

inline constexpr std::size_t kMaxPowerSubspace = 10000;

/// W = I ∩ K[X]_d for a homogeneous ideal, d the smallest degree occurring in I.
template <class F>
MinimalDegreeSubspace<F> minimal_degree_subspace(const AdmissiblePresentation<F>& ap) {
  if (!is_homogeneous_ideal(ap)) throw NotHomogeneousError("minimal degree subspace needs a homogeneous ideal");
  const F& k = ap.field();
  MinimalDegreeSubspace<F> w;
  w.degree = ap.lowey;
  for (const auto& g : ap.normalized_gens) w.degree = std::min(w.degree, *g.order());
  if (w.degree == ap.lowey) {
    // Only the power part reaches the minimal degree.
    w.dim = binomial(ap.n_vars() + ap.lowey - 1, ap.n_vars() - 1);
    if (w.dim > kMaxPowerSubspace) {
      w.materialized = false;
      return w;
    }
    for (const auto& m : monomials_of_degree(ap.n_vars(), ap.lowey)) w.basis.push_back(Polynomial<F>::term(k, m, k.one()));
    return w;
  }
  std::vector<Polynomial<F>> candidates;
  for (const auto& g : ap.normalized_gens) {
    auto c = g.component(w.degree);
    if (!c.is_zero()) candidates.push_back(std::move(c));
  }
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  for (const auto& c : candidates)
    for (const auto& [m, v] : c.terms()) column.try_emplace(m, column.size());
  EchelonBasis<F> span(k, column.size());
  for (const auto& c : candidates) {
    SparseRow<F> row;
    for (const auto& [m, v] : c.terms()) row.emplace_back(column.at(m), v);
    if (span.insert(row) != EchelonBasis<F>::npos) w.basis.push_back(c);
  }
  w.dim = w.basis.size();
  return w;
}

// ---------------------------------------------------------------------------
// Non-singular forms

namespace detail {

template <class F>
bool partials_zero_dimensional(const Polynomial<F>& f) {
  std::vector<Polynomial<F>> partials;
  for (std::size_t i = 0; i < f.n_vars(); ++i) partials.push_back(partial_derivative(f, i));
  return is_zero_dimensional(buchberger(f.field(), f.n_vars(), partials));
}

inline constexpr std::uint64_t kReductionPrime = 4294967291ull;

/// Reduction of a rational form modulo p, or nullopt when a denominator vanishes.
inline std::optional<Polynomial<PrimeField>> reduce_mod_p(const Polynomial<RationalField>& f, const PrimeField& fp) {
  std::vector<typename Polynomial<PrimeField>::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    if (c.get_den() % mpz_class(static_cast<unsigned long>(fp.characteristic())) == 0) return std::nullopt;
    terms.emplace_back(m, fp.from_mpz(c.get_num(), c.get_den()));
  }
  return Polynomial<PrimeField>(fp, f.n_vars(), std::move(terms));
}

}  // namespace detail

/// True iff the partial derivatives of the form f have no common zero but 0.
/// Over Q a non-singular reduction modulo a large prime settles the question
/// first: the resultant of the partials is an integer polynomial in the
/// coefficients, so it cannot vanish over Q when it survives modulo p.
template <class F>
bool is_nonsingular(const Polynomial<F>& f) {
  if (f.is_zero() || !f.is_homogeneous()) throw NotHomogeneousError("non-singularity is defined for nonzero forms");
  if constexpr (std::is_same_v<F, RationalField>) {
    PrimeField fp(detail::kReductionPrime);
    auto r = detail::reduce_mod_p(f, fp);
    if (r && !r->is_zero() && detail::partials_zero_dimensional(*r)) return true;
  }
  return detail::partials_zero_dimensional(f);
}

/// Deterministic draws for one search trial. Bounded integers use rejection
/// sampling on the raw engine output so every platform sees the same values.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial) : engine_(mix(mix(seed) ^ (trial + 0x632BE59BD9B4E019ull))) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

/// Where d is small enough relative to the characteristic for the
/// non-singular criterion to apply.
inline bool nonsingular_search_applicable(std::uint32_t degree, std::uint64_t characteristic) {
  if (degree < 3) return false;
  if (characteristic == 0) return true;
  return characteristic > 3 && degree < characteristic;
}

template <class F>
struct NonsingularSearch {
  bool applicable = false;
  std::optional<Polynomial<F>> witness;
  /// 0 when a basis element was the witness, else the 1-based random trial.
  std::uint32_t trial = 0;
  std::vector<std::int64_t> coefficients;
};

template <class F>
NonsingularSearch<F> search_nonsingular(const MinimalDegreeSubspace<F>& w, const F& field, const SearchConfig& cfg) {
  cfg.validate();
  NonsingularSearch<F> out;
  out.applicable = nonsingular_search_applicable(w.degree, field.characteristic()) && w.materialized && w.dim > 0;
  if (!out.applicable) return out;
  for (std::size_t b = 0; b < w.basis.size(); ++b) {
    if (is_nonsingular(w.basis[b])) {
      out.witness = w.basis[b];
      out.coefficients.assign(w.dim, 0);
      out.coefficients[b] = 1;
      return out;
    }
  }
  const std::size_t n = w.basis.front().n_vars();
  for (std::uint32_t t = 1; t <= cfg.trials; ++t) {
    TrialRng rng(cfg.seed, t);
    std::vector<std::int64_t> c(w.dim, 0);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& x : c) {
        x = rng.uniform(-cfg.coefficient_bound, cfg.coefficient_bound);
        nonzero = nonzero || x != 0;
      }
    }
    Polynomial<F> f(field, n);
    for (std::size_t b = 0; b < w.dim; ++b)
      if (c[b]) f += w.basis[b].scaled(field.from_int(c[b]));
    if (!f.is_zero() && is_nonsingular(f)) {
      out.witness = std::move(f);
      out.trial = t;
      out.coefficients = std::move(c);
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rules. Each returns a firing when its hypotheses hold, else nothing.

namespace detail {

template <class F>
std::string join_polys(const std::vector<Polynomial<F>>& ps, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].to_string(names);
  return out + "}";
}

template <class F>
GroebnerBasis<F> power_plus(const F& k, std::size_t n, std::uint32_t l, const std::vector<Polynomial<F>>& extra) {
  return buchberger(k, n, extra, l);
}

inline std::string power_ideal_name(std::size_t n, std::uint32_t l) {
  return "<X1..X" + std::to_string(n) + ">^" + std::to_string(l);
}

}  // namespace detail

/// n = 1: solvable for every admissible ideal. n >= 2 and I = <X>^l: not solvable.
template <class F>
std::optional<RuleFiring> rule_power_ideal(const AdmissiblePresentation<F>& ap) {
  if (ap.n_vars() == 1)
    return RuleFiring{RuleTag::N1_SINGLE_VAR, Polarity::Solvable, "n = 1, A = K[X]/<X^" + std::to_string(ap.lowey) + ">",
                      "the image in GL(R/R^2) lies in GL_1, and the kernel is unipotent", std::nullopt};
  auto power = detail::power_plus(ap.field(), ap.n_vars(), ap.lowey, {});
  if (!ideal_equal(ap.gb, power)) return std::nullopt;
  return RuleFiring{RuleTag::PW_POWER_IDEAL, Polarity::NotSolvable,
                    "I = " + detail::power_ideal_name(ap.n_vars(), ap.lowey),
                    "Aut(A) contains GL_n acting linearly on the variables", std::nullopt};
}

/// n = 2, char 0: solvable unless A = K[X,Y]/<X,Y>^l.
template <class F>
std::optional<RuleFiring> rule_dim_two(const AdmissiblePresentation<F>& ap) {
  if (ap.n_vars() != 2 || ap.field().characteristic() != 0) return std::nullopt;
  auto power = detail::power_plus(ap.field(), 2, ap.lowey, {});
  if (ideal_equal(ap.gb, power))
    return RuleFiring{RuleTag::D2_DIM_TWO, Polarity::NotSolvable, "I = <X1, X2>^" + std::to_string(ap.lowey),
                      "dim R/R^2 = 2 and A is the truncated polynomial algebra", std::nullopt};
  return RuleFiring{RuleTag::D2_DIM_TWO, Polarity::Solvable, "I != <X1, X2>^" + std::to_string(ap.lowey),
                    "dim R/R^2 = 2 and A is not a truncated polynomial algebra", std::nullopt};
}

/// char 0, d < l, dim W = n and a basis of W is a regular sequence.
template <class F>
std::optional<RuleFiring> rule_condition_1(const AdmissiblePresentation<F>& ap, const MinimalDegreeSubspace<F>& w) {
  if (ap.field().characteristic() != 0 || w.degree >= ap.lowey || w.dim != ap.n_vars()) return std::nullopt;
  auto gb = buchberger(ap.field(), ap.n_vars(), w.basis);
  if (!is_zero_dimensional(gb)) return std::nullopt;
  return RuleFiring{RuleTag::C1_REGULAR_SEQUENCE, Polarity::Solvable, "W = span" + detail::join_polys(w.basis, ap.names()),
                    "dim W = n and K[X]/<W> is finite-dimensional, so the basis of W is a regular sequence",
                    std::nullopt};
}

template <class F>
std::optional<RuleFiring> rule_nonsingular(const AdmissiblePresentation<F>& ap, const MinimalDegreeSubspace<F>& w,
                                           const SearchConfig& cfg, std::vector<std::string>* notes = nullptr) {
  if (w.degree >= ap.lowey) return std::nullopt;
  auto search = search_nonsingular(w, ap.field(), cfg);
  if (!search.applicable) return std::nullopt;
  if (!search.witness) {
    if (notes)
      notes->push_back("no non-singular element of W found in " + std::to_string(cfg.trials) +
                       " trials; this is not a certificate of absence");
    return std::nullopt;
  }
  std::string where = search.trial == 0 ? "basis element of W" : "random trial " + std::to_string(search.trial);
  return RuleFiring{RuleTag::C23_NONSINGULAR, Polarity::Solvable, search.witness->to_string(ap.names()),
                    "W contains a non-singular form of degree " + std::to_string(w.degree) + " (" + where + ")",
                    std::nullopt};
}

/// I = <X>^l + <q> with q a non-singular quadratic form, char != 2.
template <class F>
std::optional<RuleFiring> rule_quadric(const AdmissiblePresentation<F>& ap, const MinimalDegreeSubspace<F>& w) {
  if (ap.field().characteristic() == 2 || w.degree != 2 || w.dim != 1 || ap.lowey <= 2) return std::nullopt;
  const auto& q = w.basis.front();
  auto candidate = detail::power_plus(ap.field(), ap.n_vars(), ap.lowey, {q});
  if (!ideal_equal(ap.gb, candidate) || !is_nonsingular(q)) return std::nullopt;
  std::string witness = "I = " + detail::power_ideal_name(ap.n_vars(), ap.lowey) + " + <" + q.to_string(ap.names()) + ">";
  if (ap.n_vars() >= 3)
    return RuleFiring{RuleTag::QD_QUADRIC, Polarity::NotSolvable, witness,
                      "G_A contains the special orthogonal group of q, which is not solvable for n > 2", std::nullopt};
  return RuleFiring{RuleTag::QD_QUADRIC, Polarity::Solvable, witness,
                    "the identity component of the stabilizer of a non-singular binary quadratic form is a "
                    "one-dimensional torus, so the similitude group is solvable",
                    std::nullopt};
}

/// Every generator is a non-monomial form in X3..Xn only; GL_2 on X1, X2 then
/// stabilizes I.
template <class F>
std::optional<RuleFiring> rule_property_sharp(const AdmissiblePresentation<F>& ap) {
  if (ap.n_vars() < 4 || ap.normalized_gens.empty()) return std::nullopt;
  for (const auto& g : ap.normalized_gens) {
    if (!g.is_homogeneous() || g.is_monomial()) return std::nullopt;
    for (std::size_t v : g.support())
      if (v < 2) return std::nullopt;
  }
  return RuleFiring{RuleTag::PS_PROPERTY_SHARP, Polarity::NotSolvable,
                    "generators " + detail::join_polys(ap.normalized_gens, ap.names()) + " avoid " + ap.names()[0] +
                        ", " + ap.names()[1],
                    "every change of variables in GL_2 acting on the first two variables fixes I", std::nullopt};
}

inline constexpr std::size_t kMaxSubpowerVars = 16;

/// I = <X>^l + <S>^m' for a proper subset S of the variables, |S| >= 2, m' < l.
template <class F>
std::optional<RuleFiring> rule_subpower(const AdmissiblePresentation<F>& ap, const MinimalDegreeSubspace<F>& w,
                                        std::vector<std::string>* notes = nullptr) {
  const std::size_t n = ap.n_vars();
  if (n < 3) return std::nullopt;
  if (n > kMaxSubpowerVars) {
    if (notes) notes->push_back("sub-power rule skipped: more than " + std::to_string(kMaxSubpowerVars) + " variables");
    return std::nullopt;
  }
  const F& k = ap.field();
  for (std::uint32_t mp = 2; mp < ap.lowey; ++mp) {
    // <X>^l + <S>^m' has order m', so only m' = d can match.
    if (mp != w.degree) continue;
    std::vector<bool> pure_in_ideal(n);
    for (std::size_t i = 0; i < n; ++i)
      pure_in_ideal[i] = ideal_membership(Polynomial<F>::term(k, Monomial::variable(n, i, mp), k.one()), ap.gb);
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> subset;
      bool possible = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1)) continue;
        subset.push_back(i);
        possible = possible && pure_in_ideal[i];
      }
      if (subset.size() < 2 || !possible) continue;
      std::vector<Polynomial<F>> gens;
      std::vector<std::uint32_t> e(n, 0);
      for_each_monomial_of_degree(subset.size(), mp, [&](const Monomial& m) {
        for (std::size_t j = 0; j < subset.size(); ++j) e[subset[j]] = m[j];
        gens.push_back(Polynomial<F>::term(k, Monomial(e), k.one()));
      });
      if (!ideal_equal(ap.gb, detail::power_plus(k, n, ap.lowey, gens))) continue;
      std::string s;
      for (std::size_t j = 0; j < subset.size(); ++j) s += (j ? ", " : "") + ap.names()[subset[j]];
      return RuleFiring{RuleTag::SP_SUBPOWER, Polarity::NotSolvable,
                        "I = " + detail::power_ideal_name(n, ap.lowey) + " + <" + s + ">^" + std::to_string(mp),
                        "GL acting on the variables of S fixes I, and |S| >= 2", std::nullopt};
    }
  }
  return std::nullopt;
}

/// char 0: m < n + d - 1 with m the minimal number of generators and d the order of I.
template <class F>
std::optional<RuleFiring> rule_generator_count(const AdmissiblePresentation<F>& ap, std::uint32_t order,
                                               std::optional<std::size_t> generators,
                                               std::vector<std::string>* notes = nullptr) {
  if (ap.field().characteristic() != 0) return std::nullopt;
  if (!generators) {
    if (notes) notes->push_back("generator-count rule skipped: truncation too large for the minimal generator count");
    return std::nullopt;
  }
  const std::size_t bound = ap.n_vars() + order - 1;
  if (*generators >= bound) return std::nullopt;
  if (notes)
    notes->push_back("generator-count rule: I is contained only in the maximal ideal <X>, and I lies in <X>^" +
                     std::to_string(order) + ", so the maximal-ideal condition holds");
  return RuleFiring{RuleTag::PK_GENERATOR_COUNT, Polarity::Solvable,
                    "m = " + std::to_string(*generators) + " < n + d - 1 = " + std::to_string(bound),
                    "few generators relative to n and the order of I", std::nullopt};
}

// ---------------------------------------------------------------------------
// Monomial advisory

struct MonomialAdvisory {
  bool predicts_solvable = false;
  std::string note;
};

inline constexpr std::size_t kMaxAdvisoryMonomials = 200000;

/// Checks X_i ~ X_j (every monomial of I stays in I after replacing one X_j by
/// X_i and vice versa) for monomial ideals. Advisory only.
template <class F>
std::optional<MonomialAdvisory> monomial_advisory(const AdmissiblePresentation<F>& ap) {
  if (ap.field().characteristic() != 0) return std::nullopt;
  for (const auto& g : ap.normalized_gens)
    if (!g.is_monomial()) return std::nullopt;
  const std::size_t n = ap.n_vars();
  if (binomial(n + ap.lowey - 1, n) > kMaxAdvisoryMonomials) return std::nullopt;
  std::vector<Monomial> gens;
  for (const auto& g : ap.normalized_gens) gens.push_back(g.leading_monomial());
  auto in_ideal = [&](const Monomial& m) {
    if (m.degree() >= ap.lowey) return true;
    for (const auto& g : gens)
      if (g.divides(m)) return true;
    return false;
  };
  std::vector<Monomial> members;
  for (const auto& m : monomials_below_degree(n, ap.lowey))
    if (in_ideal(m)) members.push_back(m);
  auto replace_ok = [&](std::size_t from, std::size_t to) {
    for (const auto& m : members) {
      if (!m[from]) continue;
      auto e = m.exponents();
      --e[from];
      ++e[to];
      if (!in_ideal(Monomial(e))) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (replace_ok(i, j) && replace_ok(j, i))
        return MonomialAdvisory{false, "criterion predicts not solvable: " + ap.names()[i] + " ~ " + ap.names()[j]};
  return MonomialAdvisory{true, "criterion predicts solvable: no two variables are interchangeable"};
}

// ---------------------------------------------------------------------------
// Certification

struct Invariants {
  std::optional<std::size_t> dim_A;
  std::size_t n = 0;
  std::uint32_t lowey = 0;
  std::size_t dim_W = 0;
  std::uint32_t min_degree = 0;
  std::optional<std::size_t> min_generators;
  bool homogeneous = false;
  std::optional<std::vector<std::size_t>> radical_filtration;
  /// Printed basis of W (of I_* when I is not homogeneous); empty if not listed.
  std::vector<std::string> W;
};

struct CertReport {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<RuleFiring> rules;
  Invariants invariants;
  std::size_t rank_bound = 0;
  std::vector<std::string> notes;
  std::optional<std::string> nilpotency_annotation;
  std::optional<MonomialAdvisory> advisory;
};

namespace detail {

/// Rules that need a homogeneous ideal, in evaluation order.
template <class F>
std::vector<RuleFiring> homogeneous_rules(const AdmissiblePresentation<F>& ap, const MinimalDegreeSubspace<F>& w,
                                          const SearchConfig& cfg, std::vector<std::string>& notes) {
  std::vector<RuleFiring> out;
  auto push = [&](std::optional<RuleFiring> r) {
    if (r) out.push_back(std::move(*r));
  };
  push(rule_condition_1(ap, w));
  push(rule_nonsingular(ap, w, cfg, &notes));
  push(rule_quadric(ap, w));
  push(rule_property_sharp(ap));
  push(rule_subpower(ap, w, &notes));
  return out;
}

template <class F>
std::optional<std::size_t> count_or_null(const AdmissiblePresentation<F>& ap, std::size_t limit) {
  try {
    return standard_monomials(ap.gb, limit)->size();
  } catch (const TooLargeError&) {
    return std::nullopt;
  }
}

}  // namespace detail

template <class F>
CertReport certify(const AdmissiblePresentation<F>& ap, const SearchConfig& cfg = {}) {
  cfg.validate();
  CertReport rep;
  const std::size_t n = ap.n_vars();
  const bool char0 = ap.field().characteristic() == 0;
  auto& inv = rep.invariants;
  inv.n = n;
  inv.lowey = ap.lowey;
  inv.homogeneous = is_homogeneous_ideal(ap);
  inv.dim_A = detail::count_or_null(ap, cfg.invariant_limit);
  if (inv.dim_A) inv.radical_filtration = radical_filtration(ap, cfg.invariant_limit);
  inv.min_generators = minimal_generator_count(ap, cfg.invariant_limit);

  std::vector<RuleFiring> fired;
  auto push = [&](std::optional<RuleFiring> r) {
    if (r) fired.push_back(std::move(*r));
  };
  push(rule_power_ideal(ap));
  push(rule_dim_two(ap));

  // The homogeneous rules run on I itself, or on I_* with only solvable
  // verdicts carried back to A.
  std::optional<AdmissiblePresentation<F>> graded;
  if (!inv.homogeneous) graded = validate_admissible(associated_graded_ideal(ap));
  const AdmissiblePresentation<F>& hom = graded ? *graded : ap;
  auto w = minimal_degree_subspace(hom);
  inv.dim_W = w.dim;
  inv.min_degree = w.degree;
  for (const auto& b : w.basis) inv.W.push_back(b.to_string(ap.names()));
  if (char0) push(rule_generator_count(ap, w.degree, inv.min_generators, &rep.notes));

  std::vector<std::string> hom_notes;
  auto hom_fired = detail::homogeneous_rules(hom, w, cfg, hom_notes);
  bool c23_witness = false;
  for (auto& r : hom_fired) {
    if (r.tag == RuleTag::C23_NONSINGULAR) c23_witness = true;
    if (!graded) {
      fired.push_back(std::move(r));
    } else if (r.polarity == Polarity::Solvable) {
      fired.push_back(RuleFiring{RuleTag::GR_GRADED_FALLBACK, Polarity::Solvable,
                                 std::string(to_string(r.tag)) + " on I_*: " + r.witness,
                                 "G of the associated graded algebra is solvable, hence so is G_A", r.tag});
    } else {
      rep.notes.push_back(std::string(to_string(r.tag)) + " on I_* predicts not solvable for the associated graded "
                          "algebra; this does not transfer to A");
    }
  }
  for (auto& s : hom_notes) rep.notes.push_back(graded ? "on I_*: " + s : s);
  if (graded) rep.notes.push_back("I is not homogeneous; the graded rules ran on I_*");

  bool any_solvable = false, any_not = false;
  for (const auto& r : fired) (r.polarity == Polarity::Solvable ? any_solvable : any_not) = true;
  if (any_solvable && any_not) {
    std::string msg = "rules disagree:";
    for (const auto& r : fired) msg += std::string(" ") + to_string(r.tag) + "=" + to_string(r.polarity);
    throw ConflictError(msg);
  }
  rep.verdict = any_solvable ? Verdict::CertifiedSolvable : any_not ? Verdict::CertifiedNotSolvable : Verdict::Inconclusive;
  rep.rules = std::move(fired);
  rep.rank_bound = c23_witness ? std::min(n, w.dim) : n;
  if (n == 1 && ap.lowey == 2)
    rep.nilpotency_annotation = "torus: R != 0, R^2 = 0 and dim R = 1, so A = K[X]/<X>^2 and G_A is a one-dimensional torus";
  rep.advisory = monomial_advisory(ap);
  return rep;
}

}  // namespace solvcert

#endif  // SOLVCERT_CERTIFIER_HPP

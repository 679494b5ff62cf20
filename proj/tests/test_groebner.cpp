#include <gtest/gtest.h>

#include <algorithm>

#include "solvcert/groebner.hpp"
#include "support.hpp"

using namespace solvcert;
using namespace testsupport;

namespace {

const std::vector<std::string> XY{"X", "Y"};
const std::vector<std::string> XYZ{"X", "Y", "Z"};
const std::vector<std::string> X123{"X1", "X2", "X3"};

std::vector<PolyQ> qs(const std::vector<std::string>& vars, std::initializer_list<const char*> texts) {
  std::vector<PolyQ> out;
  for (const char* t : texts) out.push_back(q(vars, t));
  return out;
}

GroebnerBasis<Q> gbq(const std::vector<std::string>& vars, std::initializer_list<const char*> texts,
                     std::optional<std::uint32_t> cap = std::nullopt) {
  return buchberger(Q{}, vars.size(), qs(vars, texts), cap);
}

constexpr int kCases = 200;

}  // namespace

TEST(Buchberger, ReducesSumOfSquares) {
  auto gb = gbq(XY, {"X^2+Y^2", "Y^2"});
  EXPECT_EQ(gb.basis(), qs(XY, {"X^2", "Y^2"}));
}

TEST(Buchberger, MonomialIdealAlreadyReduced) {
  auto gb = gbq(XY, {"X^2", "X*Y", "Y^2"});
  EXPECT_EQ(gb.basis(), qs(XY, {"X^2", "X*Y", "Y^2"}));
}

TEST(Buchberger, RegularSequenceWithPowerPartIsFinite) {
  auto gb = gbq(XYZ, {"X^2+Y^2", "Y^2+Z^2", "Y*Z"}, 5);
  auto sm = standard_monomials(gb);
  ASSERT_TRUE(sm.has_value());
  // Hilbert series (1 + t)^3 of a complete intersection of three quadrics.
  EXPECT_EQ(sm->size(), 8u);
}

TEST(Buchberger, MonicBasis) {
  auto gb = gbq(XY, {"3*X^2 + 6*Y^2", "2*X*Y"});
  for (const auto& g : gb.basis()) EXPECT_EQ(g.leading_coefficient(), 1);
}

TEST(Buchberger, UnitIdealIsFlagged) {
  auto gb = gbq(XY, {"X^2 + 1", "X"});
  EXPECT_TRUE(gb.is_unit());
}

TEST(Buchberger, EmptyGeneratorsNeedCap) {
  EXPECT_THROW(buchberger(std::vector<PolyQ>{}), ArityError);
  auto gb = buchberger(Q{}, 2, {}, 2);
  EXPECT_EQ(standard_monomials(gb)->size(), 3u);
}

TEST(NormalForm, FullyReducible) {
  auto gb = gbq(XY, {"X^2", "Y^2"});
  EXPECT_TRUE(normal_form(q(XY, "X^2+Y^2"), gb).is_zero());
}

TEST(NormalForm, IrreducibleMonomialStays) {
  auto gb = gbq(XY, {"X^2", "Y^2"});
  EXPECT_EQ(normal_form(q(XY, "X*Y"), gb), q(XY, "X*Y"));
}

TEST(NormalForm, QuadricSingleDivisionStep) {
  auto gb = gbq(X123, {"X1^2+X2^2+X3^2"}, 3);
  EXPECT_EQ(normal_form(q(X123, "X1^2"), gb), q(X123, "-X2^2 - X3^2"));
}

TEST(NormalForm, PowerPartDropsHighDegree) {
  auto gb = gbq(XY, {"X^2"}, 3);
  EXPECT_EQ(normal_form(q(XY, "X*Y + Y^3 + X*Y^5"), gb), q(XY, "X*Y"));
}

TEST(IdealMembership, Examples) {
  EXPECT_TRUE(ideal_membership(q(XY, "X^2+Y^2"), gbq(XY, {"X^2", "Y^2"})));
  EXPECT_FALSE(ideal_membership(q(XY, "Y^3"), gbq(XY, {"X^2"})));
  EXPECT_TRUE(ideal_membership(q(XY, "X^3"), gbq(XY, {"X^2+Y^2", "Y^2"})));
}

TEST(IdealEqual, Examples) {
  EXPECT_TRUE(ideal_equal(gbq(XY, {"X^2+Y^2", "Y^2"}), gbq(XY, {"X^2", "Y^2"})));
  EXPECT_FALSE(ideal_equal(gbq(XY, {"X^2"}), gbq(XY, {"X^2", "X*Y"})));
  auto m2 = gbq(XY, {"X^2", "X*Y", "Y^2"});
  EXPECT_TRUE(ideal_equal(m2, m2));
}

TEST(IdealEqual, CapRepresentationsAgree) {
  // <X,Y>^2 given explicitly, via cap 2, and via a loose cap.
  auto explicit_m2 = gbq(XY, {"X^2", "X*Y", "Y^2"});
  auto capped = buchberger(Q{}, 2, {}, 2);
  auto loose = gbq(XY, {"X^2", "X*Y", "Y^2"}, 6);
  EXPECT_TRUE(ideal_equal(explicit_m2, capped));
  EXPECT_TRUE(ideal_equal(capped, loose));
  EXPECT_FALSE(ideal_equal(capped, buchberger(Q{}, 2, {}, 3)));
}

TEST(StandardMonomials, Examples) {
  auto sm = standard_monomials(gbq(XY, {"X^2", "X*Y", "Y^2"}));
  ASSERT_TRUE(sm.has_value());
  std::vector<Monomial> expect{Monomial({0, 0}), Monomial({0, 1}), Monomial({1, 0})};
  EXPECT_EQ(*sm, expect);
  EXPECT_FALSE(standard_monomials(gbq(XY, {"X*Y"})).has_value());
}

TEST(StandardMonomials, PowerIdealCounts) {
  for (auto [n, l, count] : std::vector<std::tuple<std::size_t, std::uint32_t, std::size_t>>{
           {2, 3, 6}, {3, 5, 35}, {4, 3, 15}}) {
    auto gb = buchberger(Q{}, n, {}, l);
    EXPECT_EQ(standard_monomials(gb)->size(), count) << n << " " << l;
    EXPECT_EQ(count, binomial(n + l - 1, n));
  }
}

TEST(StandardMonomials, LimitThrows) {
  EXPECT_THROW(standard_monomials(buchberger(Q{}, 3, {}, 5), 10), TooLargeError);
}

TEST(ZeroDimensional, Examples) {
  EXPECT_TRUE(is_zero_dimensional(gbq(XY, {"X^2", "Y^3"})));
  EXPECT_TRUE(is_zero_dimensional(gbq(XYZ, {"X^2+Y^2", "Y^2+Z^2", "Y*Z"})));
  EXPECT_FALSE(is_zero_dimensional(gbq(XY, {"X^2", "X*Y"})));
}

TEST(ZeroDimensional, PrimeField) {
  Fp f2(2);
  // X^2 + Y^2 = (X + Y)^2 in char 2, so the pair is not a regular sequence.
  std::vector<Polynomial<Fp>> gens{parse(f2, XY, "X^2+Y^2"), parse(f2, XY, "X^2 + X*Y + Y^2")};
  EXPECT_TRUE(is_zero_dimensional(buchberger(gens)));
  std::vector<Polynomial<Fp>> bad{parse(f2, XY, "X^2+Y^2"), parse(f2, XY, "X*Y + Y^2")};
  EXPECT_FALSE(is_zero_dimensional(buchberger(bad)));
}

TEST(MinimalPowerCap, MembershipBased) {
  // Non-homogeneous: X^2 + Y^3 with cap 5 misses X*Y^3, which is -X^3 modulo I.
  auto gb = gbq(XY, {"X^2+Y^3"}, 5);
  EXPECT_EQ(*minimal_power_cap(gb), 5u);
  EXPECT_EQ(*minimal_power_cap(gbq(XY, {"X^2+Y^3", "X^3", "Y^4"}, 5)), 4u);
  // Finite but not local: X^2 - X has a root at X = 1.
  EXPECT_FALSE(minimal_power_cap(gbq(std::vector<std::string>{"X"}, {"X^2 - X"})).has_value());
  EXPECT_EQ(*minimal_power_cap(gbq(std::vector<std::string>{"X"}, {"X^3"})), 3u);
}

// Property suites.

namespace {

IdealPresentation<Q> random_capped(Rng& rng) {
  std::size_t n = static_cast<std::size_t>(rng.range(2, 3));
  auto l = static_cast<std::uint32_t>(rng.range(3, 5));
  int gens = static_cast<int>(rng.range(1, 3));
  return rng.coin() ? random_homogeneous_presentation(rng, n, l, gens) : random_presentation(rng, n, l, gens);
}

}  // namespace

TEST(GroebnerProperty, CanonicalUnderPermutation) {
  Rng rng(2001);
  for (int c = 0; c < kCases; ++c) {
    auto p = random_capped(rng);
    if (p.generators.empty()) continue;
    auto gb = buchberger(p.field, p.n_vars, p.generators, p.power_cap);
    auto perm = p.generators;
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    // Scaling generators must not matter either.
    for (auto& g : perm) g = g.scaled(Q{}.from_mpz(mpz_class(static_cast<long>(rng.range(1, 5))), mpz_class(static_cast<long>(rng.range(1, 5)))));
    auto gb2 = buchberger(p.field, p.n_vars, perm, p.power_cap);
    ASSERT_EQ(gb.basis(), gb2.basis()) << "case " << c;
    std::string a, b;
    for (const auto& g : gb.basis()) a += g.to_string() + ";";
    for (const auto& g : gb2.basis()) b += g.to_string() + ";";
    ASSERT_EQ(a, b);
  }
}

TEST(GroebnerProperty, BuchbergerCriterionPostHoc) {
  Rng rng(2002);
  for (int c = 0; c < kCases; ++c) {
    auto p = random_capped(rng);
    if (p.generators.empty()) continue;
    auto gb = buchberger(p.field, p.n_vars, p.generators, p.power_cap);
    if (gb.is_unit()) continue;
    auto full = gb.full_basis();
    // Check against the uncapped reading: every S-polynomial of the full basis
    // reduces to zero by the full basis alone.
    GroebnerBasis<Q> plain(p.field, p.n_vars, full, std::nullopt);
    for (std::size_t i = 0; i < full.size(); ++i) {
      ASSERT_EQ(full[i].leading_coefficient(), 1);
      for (std::size_t j = 0; j < full.size(); ++j) {
        if (i != j) ASSERT_FALSE(full[i].leading_monomial().divides(full[j].leading_monomial()));
        if (j <= i) continue;
        const auto& a = full[i];
        const auto& b = full[j];
        auto m = lcm(a.leading_monomial(), b.leading_monomial());
        auto s = a.times_term(m / a.leading_monomial(), Q{}.one()) - b.times_term(m / b.leading_monomial(), Q{}.one());
        ASSERT_TRUE(normal_form(s, plain).is_zero()) << "case " << c << " pair " << i << "," << j;
      }
    }
  }
}

TEST(GroebnerProperty, NormalFormIdempotent) {
  Rng rng(2003);
  Q k;
  for (int c = 0; c < kCases; ++c) {
    auto p = random_capped(rng);
    if (p.generators.empty()) continue;
    auto gb = buchberger(p.field, p.n_vars, p.generators, p.power_cap);
    auto f = random_poly(rng, k, p.n_vars, 0, 6, 6);
    auto nf = normal_form(f, gb);
    ASSERT_EQ(normal_form(nf, gb), nf) << "case " << c;
    ASSERT_TRUE(ideal_membership(f - nf, gb)) << "case " << c;
    for (const auto& [m, coeff] : nf.terms()) ASSERT_FALSE(gb.is_leading_multiple(m));
  }
}

TEST(GroebnerProperty, MembershipAgreesWithTruncatedSpan) {
  Rng rng(2004);
  Q k;
  int members = 0;
  for (int c = 0; c < kCases; ++c) {
    auto p = random_capped(rng);
    auto l = *p.power_cap;
    auto gb = buchberger(p.field, p.n_vars, p.generators, l);
    TruncatedSpan<Q> span(k, p.n_vars, p.generators, l);
    // Random combinations of generator multiples are members; random
    // polynomials usually are not.
    for (int t = 0; t < 4; ++t) {
      PolyQ f = random_poly(rng, k, p.n_vars, 0, l + 1, 4);
      if (t % 2 == 0 && !p.generators.empty()) {
        f = PolyQ(k, p.n_vars);
        for (const auto& g : p.generators) f += g * random_poly(rng, k, p.n_vars, 0, 2, 2);
        f += random_form(rng, k, p.n_vars, l, 2);
      }
      bool a = ideal_membership(f, gb), b = span.contains(f);
      members += a;
      ASSERT_EQ(a, b) << "case " << c << " f=" << f.to_string();
    }
    ASSERT_EQ(standard_monomials(gb)->size(), span.quotient_dim()) << "case " << c;
  }
  EXPECT_GT(members, kCases / 2);
}

TEST(GroebnerProperty, CanonicalCappedMatchesTruncatedSpanPower) {
  Rng rng(2005);
  Q k;
  for (int c = 0; c < kCases; ++c) {
    auto p = random_capped(rng);
    auto gb = buchberger(p.field, p.n_vars, p.generators, p.power_cap);
    TruncatedSpan<Q> span(k, p.n_vars, p.generators, *p.power_cap);
    ASSERT_EQ(*minimal_power_cap(gb), span.minimal_power()) << "case " << c;
  }
}

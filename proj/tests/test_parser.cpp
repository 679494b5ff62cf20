#include <gtest/gtest.h>

#include "solvcert/fixtures.hpp"
#include "solvcert/parser.hpp"
#include "support.hpp"

using namespace solvcert;
using namespace testsupport;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    auto src = parse_source(text);
    if (src.field.characteristic == 0)
      build_presentation(src, Q{});
    else
      build_presentation(src, Fp(src.field.characteristic));
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(Parser, TwoVariableRational) {
  auto p = build_presentation(parse_source("field 0\nvars X Y\ngen X^2 + Y^2\n"), Q{});
  EXPECT_EQ(p.n_vars, 2u);
  EXPECT_EQ(p.names, (std::vector<std::string>{"X", "Y"}));
  ASSERT_EQ(p.generators.size(), 1u);
  EXPECT_EQ(p.generators[0].to_string(p.names), "X^2 + Y^2");
  EXPECT_FALSE(p.power_cap.has_value());
}

TEST(Parser, MixedProductsAndCoefficients) {
  auto p = build_presentation(parse_source("field 0\nvars X1 X2 X3\ngen X1*X2^2 - 3*X3^3\n"), Q{});
  const std::vector<std::string> v{"X1", "X2", "X3"};
  std::vector<PolyQ::Term> terms{{Monomial({1, 2, 0}), mpq_class(1)}, {Monomial({0, 0, 3}), mpq_class(-3)}};
  EXPECT_EQ(p.generators[0], PolyQ(Q{}, 3, terms));
}

TEST(Parser, NonPrimeFieldRejected) {
  EXPECT_THROW(parse_source("field 4\nvars X\n"), FieldError);
  EXPECT_THROW(parse_source("field 1\nvars X\n"), FieldError);
  EXPECT_NO_THROW(parse_source("field 5\nvars X\n"));
}

TEST(Parser, CommentsBlankLinesAndLowey) {
  auto src = parse_source("# header\n\nfield 0   # rationals\nvars X Y\nlowey 4\n  gen  X*Y  # monomial\n");
  ASSERT_TRUE(src.lowey.has_value());
  EXPECT_EQ(*src.lowey, 4u);
  ASSERT_EQ(src.generators.size(), 1u);
  auto p = build_presentation(src, Q{});
  EXPECT_EQ(p.generators[0].to_string(p.names), "X*Y");
}

TEST(Parser, ParenthesesPowersAndRationals) {
  auto p = build_presentation(parse_source("field 0\nvars X Y\ngen (X + Y)^2 - 1/2*(X - Y)*(X + Y)\n"), Q{});
  EXPECT_EQ(p.generators[0], q({"X", "Y"}, "1/2*X^2 + 2*X*Y + 3/2*Y^2"));
}

TEST(Parser, UnaryMinus) {
  auto p = build_presentation(parse_source("field 0\nvars X Y\ngen -X^2 - -Y^2\n"), Q{});
  EXPECT_EQ(p.generators[0], q({"X", "Y"}, "Y^2 - X^2"));
}

TEST(Parser, PrimeFieldCoefficientsReduce) {
  auto p = build_presentation(parse_source("field 3\nvars X Y\ngen 4*X^2 + 3*Y^2 + X*Y\n"), Fp(3));
  EXPECT_EQ(p.generators[0].to_string(p.names), "X^2 + X*Y");
}

TEST(Parser, UndeclaredVariable) {
  auto e = parse_error("field 0\nvars X Y\ngen X^2 + Z^2\n");
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(e.column(), 11);
}

TEST(Parser, SyntaxErrorLocation) {
  auto e = parse_error("field 0\nvars X Y\n\ngen X^2 + * Y\n");
  EXPECT_EQ(e.line(), 4);
  EXPECT_EQ(e.column(), 11);
}

TEST(Parser, MalformedInputs) {
  parse_error("vars X\ngen X^2\n");                  // missing field
  parse_error("field 0\ngen X^2\n");                 // missing vars
  parse_error("field 0\nfield 0\nvars X\n");         // duplicate field
  parse_error("field 0\nvars X\nvars Y\n");          // duplicate vars
  parse_error("field 0\nvars X X\n");                // repeated name
  parse_error("field 0\nvars 1X\n");                 // bad name
  parse_error("field 0\nvars X\nlowey\n");           // missing integer
  parse_error("field 0\nvars X\nlowey -3\n");        // not an integer
  parse_error("field 0\nvars X\nrelation X^2\n");    // unknown keyword
  parse_error("field 0\nvars X\ngen\n");             // empty generator
  parse_error("field 0\nvars X\ngen (X^2\n");        // unbalanced
  parse_error("field 0\nvars X\ngen X^\n");          // missing exponent
  parse_error("field 0\nvars X\ngen X^2 X\n");       // juxtaposition
  parse_error("field 0\nvars X\ngen 1/0*X^2\n");     // zero denominator
  parse_error("field 7\nvars X\ngen 1/7*X^2\n");     // denominator vanishes mod p
  parse_error("field 0\nvars X\ngen X^99999999999\n");  // exponent overflow
}

TEST(Parser, ZeroGeneratorRejected) {
  EXPECT_THROW(build_presentation(parse_source("field 0\nvars X\ngen X^2 - X^2\n"), Q{}), ZeroPolynomialError);
}

TEST(Parser, FieldMismatch) {
  EXPECT_THROW(build_presentation(parse_source("field 5\nvars X\n"), Q{}), FieldError);
}

TEST(Parser, CanonicalPrintRoundTripsFixtures) {
  for (const auto& f : kFixtureFiles) {
    auto src = parse_source(std::string(f.text));
    if (src.field.characteristic != 0) continue;
    auto p = build_presentation(src, Q{});
    auto printed = print_presentation(p);
    auto p2 = build_presentation(parse_source(printed), Q{});
    EXPECT_EQ(p2.names, p.names) << f.name;
    EXPECT_EQ(p2.power_cap, p.power_cap) << f.name;
    EXPECT_EQ(p2.generators, p.generators) << f.name;
    EXPECT_EQ(print_presentation(p2), printed) << f.name;
  }
}

TEST(ParserProperty, RandomPresentationsRoundTrip) {
  Rng rng(6001);
  for (int c = 0; c < 200; ++c) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
    auto l = static_cast<std::uint32_t>(rng.range(3, 6));
    auto p = random_presentation(rng, n, l, static_cast<int>(rng.range(0, 4)));
    auto printed = print_presentation(p);
    auto p2 = build_presentation(parse_source(printed), Q{});
    ASSERT_EQ(p2.generators, p.generators) << printed;
    ASSERT_EQ(p2.power_cap, p.power_cap) << printed;
    ASSERT_EQ(p2.names, p.names) << printed;
  }
}

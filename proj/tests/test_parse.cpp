#include <gtest/gtest.h>

#include "padent/parse.hpp"
#include "padent/selftest.hpp"

using namespace padent;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Parse, Polynomial) {
  const auto f = parse_poly("2*t^2 - t + 2");
  EXPECT_EQ(f.group().dim, 1);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.coeff({2}), 2);
  EXPECT_EQ(f.coeff({1}), -1);
  EXPECT_EQ(f.coeff({0}), 2);
  EXPECT_EQ(to_string(f), "2*t^2 - t + 2");
}

TEST(Parse, Constant) {
  const auto f = parse_poly("1");
  EXPECT_EQ(f.size(), 1u);
  EXPECT_EQ(f.constant_term(), 1);
  EXPECT_EQ(to_string(parse_poly("0")), "0");
}

TEST(Parse, Matrix) {
  const auto F = parse_laurent_matrix("[[1+3*x, 3],[0, 1]]");
  EXPECT_EQ(F.size(), 2u);
  EXPECT_EQ(F(0, 0), parse_poly("3*t + 1"));
  EXPECT_EQ(F(0, 1), parse_poly("3"));
  EXPECT_TRUE(F(1, 0).is_zero());
  EXPECT_EQ(to_string(F), "[[3*t + 1, 3], [0, 1]]");
}

TEST(Parse, VariablesAndExponents) {
  const auto f = parse_poly("t1^-2*t3 - 4 t2 + y^(-1)", 3);
  EXPECT_EQ(f.coeff({-2, 0, 1}), 1);
  EXPECT_EQ(f.coeff({0, 1, 0}), -4);
  EXPECT_EQ(f.coeff({0, -1, 0}), 1);
  EXPECT_EQ(parse_poly("t*t*t"), parse_poly("t^3"));
  EXPECT_EQ(parse_poly("x + y").group().dim, 2);
  EXPECT_EQ(parse_poly("2 + 3", 1), parse_poly("5"));
}

TEST(Parse, HeisenbergOrderMatters) {
  const auto a = parse_heisenberg("x*y"), b = parse_heisenberg("y*x");
  EXPECT_EQ(a.terms().begin()->first, (HeisenbergGroup::element{1, 1, 1}));
  EXPECT_EQ(b.terms().begin()->first, (HeisenbergGroup::element{1, 1, 0}));
  EXPECT_EQ(to_string(a), "x*y");
  EXPECT_EQ(to_string(b), "x*y*z^-1");
}

TEST(Parse, Errors) {
  EXPECT_EQ(code_of([] { parse_poly("2*t^"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_poly("2 + + t"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_poly("w"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_poly("t)"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_laurent_matrix("[[1, 2], [3]]"); }), ErrorCode::DimensionInconsistent);
  EXPECT_EQ(code_of([] { parse_laurent_matrix("[[1, 2]]"); }), ErrorCode::DimensionInconsistent);
  EXPECT_EQ(code_of([] { parse_poly("[[1]]"); }), ErrorCode::DimensionInconsistent);
  try {
    parse_poly("1 + t ^ ^");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
  }
}

TEST(Parse, RoundTrip) {
  gen::Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    const int d = static_cast<int>(gen::uniform(rng, 1, 3));
    const auto f = gen::random_elem(rng, FreeAbelianGroup{d}, 5, 50, 3);
    EXPECT_EQ(parse_poly(to_string(f), d), f) << to_string(f);
    const auto h = gen::random_elem(rng, HeisenbergGroup{}, 4, 50, 2);
    EXPECT_EQ(parse_heisenberg(to_string(h)), h) << to_string(h);
    const auto F = gen::random_matrix(rng, FreeAbelianGroup{d}, 2, 3, 9, 2);
    EXPECT_EQ(parse_laurent_matrix(to_string(F), d), F) << to_string(F);
  }
}

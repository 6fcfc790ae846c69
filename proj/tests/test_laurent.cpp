#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "ggraph/laurent.hpp"

using ggraph::LaurentPoly;

TEST_CASE("laurent arithmetic") {
  const LaurentPoly x = LaurentPoly::x(), xi = LaurentPoly::x_inv();
  CHECK(x + xi == LaurentPoly{{1, 1}, {-1, 1}});
  CHECK(LaurentPoly::x_minus_x_inv() * x == LaurentPoly{{2, 1}, {0, -1}});
  CHECK((LaurentPoly{{3, 2}, {-1, 5}} * LaurentPoly()).is_zero());
  CHECK((x - x).is_zero());
  CHECK(-x == LaurentPoly::monomial(-1, 1));
  LaurentPoly p{{0, 1}};
  p.add_scaled(x, 3, -2);
  CHECK(p == LaurentPoly{{0, 1}, {-1, 3}});
}

TEST_CASE("bar and coefficients") {
  CHECK(LaurentPoly::x().bar() == LaurentPoly::x_inv());
  CHECK(LaurentPoly{{0, 3}, {2, 2}}.bar() == LaurentPoly{{0, 3}, {-2, 2}});
  CHECK(LaurentPoly().bar().is_zero());
  const LaurentPoly p{{-1, 1}, {0, 2}};
  CHECK(p.coeff(-1) == 1);
  CHECK(p.coeff(0) == 2);
  CHECK(LaurentPoly().coeff(5) == 0);
  CHECK(LaurentPoly::x_inv().in_neg_span());
  CHECK_FALSE((LaurentPoly{{0, 1}, {-2, 1}}).in_neg_span());
  CHECK(LaurentPoly().in_neg_span());
  CHECK(p.eval_at_one() == 3);
}

TEST_CASE("ring identities on random-ish inputs") {
  const LaurentPoly a{{-2, 3}, {0, -1}, {3, 4}}, b{{-1, 2}, {1, 1}}, c{{0, 5}, {2, -3}};
  CHECK(a * (b + c) == a * b + a * c);
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * b).bar() == a.bar() * b.bar());
  CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
}

TEST_CASE("to_string") {
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly{{-2, 1}, {0, 3}, {1, -1}}.to_string() == "x^-2 + 3 - x");
}

TEST_CASE("overflow is reported") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(LaurentPoly(big) + LaurentPoly(1), std::overflow_error);
  CHECK_THROWS_AS(LaurentPoly(big) * LaurentPoly(2), std::overflow_error);
}

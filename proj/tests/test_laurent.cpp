#include <doctest.h>

#include "nw/laurent.hpp"

using nw::Laurent;

TEST_CASE("laurent formatting") {
  Laurent p = Laurent::monomial(-1, 5) + Laurent::monomial(-1, -3) +
              Laurent::monomial(1, -7);
  CHECK(p.str() == "-t^5 - t^-3 + t^-7");
  CHECK(Laurent::one().str() == "1");
  CHECK(Laurent::zero().str() == "0");
  CHECK(Laurent::monomial(1, 1).str() == "t");
  CHECK(Laurent::monomial(-1, 1).str() == "-t");
  CHECK((Laurent::monomial(3, 2) + Laurent::monomial(-2, 0)).str() == "3t^2 - 2");
  CHECK(Laurent::loop_factor().str() == "-t^2 - t^-2");
}

TEST_CASE("laurent ring ops") {
  Laurent t = Laurent::monomial(1, 1);
  Laurent tinv = Laurent::monomial(1, -1);
  Laurent square = (t + tinv) * (t + tinv);
  CHECK(square == Laurent::monomial(1, 2) + Laurent::monomial(2, 0) +
                      Laurent::monomial(1, -2));
  CHECK((t - t).is_zero());
  CHECK(Laurent::neg_t_pow(3) == Laurent::monomial(-1, 3));
  CHECK(Laurent::neg_t_pow(-4) == Laurent::monomial(1, -4));
  CHECK(Laurent::neg_t_pow(-9) == Laurent::monomial(-1, -9));
  CHECK(square.shifted(3).coeff(5) == 1);
  CHECK(square.inverted_variable() == square);
  Laurent asym = Laurent::monomial(2, 3) + Laurent::monomial(5, -1);
  CHECK(asym.inverted_variable() == Laurent::monomial(2, -3) + Laurent::monomial(5, 1));
  CHECK((-asym) + asym == Laurent::zero());
}

TEST_CASE("laurent pairs descend") {
  Laurent p = Laurent::monomial(1, -7) + Laurent::monomial(-1, 5);
  auto pr = p.pairs();
  REQUIRE(pr.size() == 2);
  CHECK(pr[0].first == 5);
  CHECK(pr[1].first == -7);
}

#include <doctest.h>

#include "oracles.hpp"
#include "schurthom/thom.hpp"
#include "support.hpp"

using namespace schurthom;

TEST_CASE("parameter validation names the violated precondition") {
  CHECK_NOTHROW((SingularityParams{2, 1, 0}.validate()));
  CHECK_THROWS_WITH((SingularityParams{0, 0, 1}.validate()), "i must be at least 1");
  CHECK_THROWS_WITH((SingularityParams{2, -1, 0}.validate()), "j must be nonnegative");
  CHECK_THROWS_WITH((SingularityParams{2, 3, 0}.validate()), "j must not exceed i");
  CHECK_THROWS_WITH((SingularityParams{2, 1, -2}.validate()), "h = r + i must be at least 1");
  CHECK(SingularityParams{2, 1, 0}.k() == 2);
  CHECK(SingularityParams{3, 2, 0}.k() == 5);
}

TEST_CASE("route resolution") {
  CHECK((resolve_route({2, 2, -1}, Route::automatic) == Route::main1));
  CHECK((resolve_route({2, 1, 0}, Route::automatic) == Route::main2nice));
  CHECK((resolve_route({2, 2, 0}, Route::automatic) == Route::general));
  CHECK_THROWS_AS(resolve_route(SingularityParams{2, 1, 0}, Route::main1), std::invalid_argument);
  CHECK_THROWS_AS(resolve_route(SingularityParams{2, 2, 0}, Route::main2), std::invalid_argument);
  CHECK_THROWS_AS(resolve_route(SingularityParams{2, 0, 0}, Route::automatic), std::invalid_argument);
  for (auto r : {Route::automatic, Route::main1, Route::main2, Route::main2nice, Route::general})
    CHECK(parse_route(route_name(r)) == r);
  CHECK_THROWS(parse_route("fast"));
}

TEST_CASE("small closed forms") {
  CHECK(tp_main1(1, 1).to_string() == "s[2] + 2*s[1,1]");
  CHECK(tp_main2nice(1, 0).to_string() == "s[2] + 2*s[1,1]");
  CHECK(support::to_expansion(tp_main2nice(2, 0)) == oracle::sigma21(0));
  CHECK(support::to_expansion(tp_main1(3, 2)) == oracle::sigma_lowest(3, 2));
}

TEST_CASE("Gysin pushforward on P^1") {
  // Gr_1 of a rank-2 bundle: pi_* s_1(R)^m s_0(Q), keeping the outer alphabet trivial
  GrassmannClass x;
  x[{Partition{1}, Partition{}}] = SchurExpr::one();
  CHECK(gysin_push(x, 1, 1).to_string() == "-1");
  GrassmannClass y;
  y[{Partition{}, Partition{1}}] = SchurExpr::one();
  CHECK(gysin_push(y, 1, 1).to_string() == "1");
}

TEST_CASE("lifting rejects partitions outside the rank") {
  CHECK_THROWS(lift_to_universal(BivariateSchurExpr::basis({1, 1, 1}, {}), 2, 1));
  CHECK_THROWS(lift_to_universal(BivariateSchurExpr::basis({}, {1, 1}), 2, 1));
  CHECK(lift_to_universal(BivariateSchurExpr::one(), 2, 1) == SchurExpr::basis({2}));
}

TEST_CASE("Sigma^{2,2}(0) from the pushforward") {
  const SchurExpr x = tp_general(2, 2, 0);
  CHECK(x.is_homogeneous());
  CHECK(x.max_degree() == 10);
  CHECK(x.size() == 18);
  CHECK(x.coefficient({5, 5}) == 1);
  for (const auto& [lambda, c] : x.terms()) CHECK(c > 0);
}

TEST_CASE("Thom series") {
  const ThomSeriesExpr s = thom_series(1, 3);
  CHECK(s.length() == 2);
  for (int m = 0; m <= 4; ++m) CHECK(s.terms.at({m, -m}) == Integer(1) << m);
  CHECK(s.sign_pattern_holds());
  for (int r = 0; r <= 3; ++r) CHECK(s.evaluate(r + 1) == tp_main2nice(1, r));
  const ThomSeriesExpr a = extract_series(tp_main2nice(2, 1), 2, 1);
  const ThomSeriesExpr b = extract_series(tp_main2nice(2, 3), 2, 3);
  CHECK(series_consistent(a, 3, b, 5));
  CHECK_THROWS(extract_series(SchurExpr::basis({5}), 2, 0));  // wider than 2i
}

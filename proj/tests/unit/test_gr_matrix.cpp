#include <doctest.h>

#include "fivedual/gr_matrix.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace fivedual;

namespace {

GroupRingElement poly(const GroupPtr& g, std::string_view text) { return parse_cyclic_polynomial(g, text); }
GRMatrix scalar(const GroupPtr& g, std::string_view text) { return GRMatrix::scalar(poly(g, text)); }

}  // namespace

TEST_SUITE("gr_matrix") {
  TEST_CASE("composition") {
    const auto g = cyclic_group(5);
    CHECK((scalar(g, "1 - t") * GRMatrix::scalar(norm_element(g))).is_zero());
    const auto b = testgen::random_gr_matrix(g, 2, 3);
    CHECK(GRMatrix::identity(g, 2) * b == b);
    CHECK_THROWS_AS(GRMatrix::identity(g, 3) * b, ShapeError);
    CHECK_THROWS_AS(GRMatrix::identity(cyclic_group(3), 2) * b, ShapeError);
  }

  TEST_CASE("alpha x = beta - 1 in Z[C_5]") {
    const auto g = cyclic_group(5);
    const auto alpha = scalar(g, "t^2 + t - t^4 - t^3");
    const auto target = scalar(g, "t - t^3");  // beta - 1
    const auto x = solve_gr_linear(alpha, target);
    REQUIRE(x.has_value());
    CHECK(alpha * *x == target);
  }

  TEST_CASE("dual matrices") {
    const auto g = cyclic_group(6);
    CHECK(dual_matrix(scalar(g, "1 - t")) == scalar(g, "1 - t^-1"));
    const auto a = testgen::random_gr_matrix(g, 2, 3);
    const auto d = dual_matrix(a);
    CHECK(d.rows() == 3);
    CHECK(d.cols() == 2);
    CHECK(dual_matrix(d) == a);
  }

  TEST_CASE("regular expansion examples") {
    const auto c3 = cyclic_group(3);
    CHECK(expand_regular(GRMatrix::identity(c3, 1)) == IntegerMatrix::identity(3));
    for (std::size_t n : {2, 5, 8}) {
      const auto g = cyclic_group(n);
      const auto sigma = expand_regular(GRMatrix::scalar(norm_element(g)));
      bool all_ones = true;
      for (const auto& e : sigma.entries()) all_ones = all_ones && e == 1;
      CHECK(all_ones);
      CHECK(integer_rank(sigma) == 1);
      CHECK(integer_rank(expand_regular(scalar(g, "1 - t"))) == n - 1);
    }
  }

  TEST_CASE("expansion of a cyclic element matches the oracle multiplication matrix") {
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = cyclic_group(static_cast<std::size_t>(testgen::uniform(1, 9)));
      const auto a = testgen::random_element(g);
      CHECK(testgen::to_oracle(expand_regular(GRMatrix::scalar(a))) == oracle::cyclic_multiplication_matrix(a.coeffs()));
    }
  }

  TEST_CASE("augmentation of matrices") {
    const auto g = cyclic_group(4);
    CHECK(augment_matrix(scalar(g, "1 - t")) == IntegerMatrix{{0}});
    CHECK(augment_matrix(GRMatrix::scalar(norm_element(g))) == IntegerMatrix{{4}});
    for (int trial = 0; trial < 100; ++trial) {
      const auto h = testgen::random_group();
      const auto a = testgen::random_gr_matrix(h, 2, 3), b = testgen::random_gr_matrix(h, 3, 2);
      CHECK(augment_matrix(a * b) == augment_matrix(a) * augment_matrix(b));
    }
  }

  TEST_CASE("linear solving over ZG") {
    const auto g = cyclic_group(5);
    const auto beta = poly(g, "1 + t - t^3");
    const auto alpha = scalar(g, "t^2 + t - t^4 - t^3");
    const auto x = solve_gr_linear(scalar(g, "1 - t^-1"), alpha);
    REQUIRE(x.has_value());
    CHECK(scalar(g, "1 - t^-1") * *x == alpha);
    CHECK(GRMatrix::scalar(beta) * GRMatrix::scalar(poly(g, "1 - t^-1")) == alpha);

    const auto inv = solve_gr_linear(GRMatrix::scalar(beta), GRMatrix::identity(g, 1));
    REQUIRE(inv.has_value());
    CHECK(beta * (*inv)(0, 0) == GroupRingElement::one(g));
    const auto c2 = cyclic_group(2);
    CHECK_FALSE(solve_gr_linear(GRMatrix::scalar(norm_element(c2)), GRMatrix::identity(c2, 1)).has_value());
    CHECK_THROWS_AS(solve_gr_linear(GRMatrix::identity(g, 2), GRMatrix::identity(g, 1)), ShapeError);
  }

  TEST_CASE("inverses") {
    const auto g = cyclic_group(5);
    const auto inv = gr_inverse(GRMatrix::scalar(poly(g, "1 + t - t^3")));
    REQUIRE(inv.has_value());
    CHECK(*inv == GRMatrix::scalar(poly(g, "t - t^2 + t^3")));
    CHECK_FALSE(gr_inverse(scalar(g, "1 - t")).has_value());
    auto [p, q] = testgen::random_elementary(g, 3);
    CHECK(gr_inverse(p) == q);
  }

  TEST_CASE("block helpers and direct sums") {
    const auto g = cyclic_group(3);
    const auto a = testgen::random_gr_matrix(g, 2, 2), b = testgen::random_gr_matrix(g, 1, 3);
    const auto s = direct_sum(a, b);
    CHECK(s.rows() == 3);
    CHECK(s.cols() == 5);
    CHECK(s.block(0, 0, 2, 2) == a);
    CHECK(s.block(2, 2, 1, 3) == b);
    CHECK(s.block(0, 2, 2, 3).is_zero());
    CHECK_THROWS_AS(s.block(2, 2, 2, 2), ShapeError);
    const auto v = testgen::random_gr_matrix(g, 4, 1);
    CHECK(fold_vector(g, expand_vector(v)) == v);
  }

  TEST_CASE("algebraic laws on random matrices") {
    for (int trial = 0; trial < 200; ++trial) {
      const auto g = testgen::random_group();
      const auto r = static_cast<std::size_t>(testgen::uniform(0, 3));
      const auto m = static_cast<std::size_t>(testgen::uniform(0, 3));
      const auto c = static_cast<std::size_t>(testgen::uniform(0, 3));
      const auto a = testgen::random_gr_matrix(g, r, m), b = testgen::random_gr_matrix(g, m, c);
      CHECK(dual_matrix(a * b) == dual_matrix(b) * dual_matrix(a));
      CHECK(expand_regular(a * b) == expand_regular(a) * expand_regular(b));
      CHECK(expand_regular(dual_matrix(a)) == expand_regular(a).transpose());
      // multiplication by a unit on either side keeps the rank
      auto [p, q] = testgen::random_elementary(g, r);
      CHECK(integer_rank(expand_regular(p * a)) == integer_rank(expand_regular(a)));
      const auto x = solve_gr_linear(a, a * b);
      REQUIRE(x.has_value());
      CHECK(a * *x == a * b);
    }
  }
}

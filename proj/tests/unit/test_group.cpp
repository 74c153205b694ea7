#include <doctest.h>

#include "fivedual/group.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace fivedual;

namespace {

GroupRingElement poly(const GroupPtr& g, std::string_view text) { return parse_cyclic_polynomial(g, text); }

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("cyclic groups") {
    const auto trivial = cyclic_group(1);
    CHECK(trivial->order() == 1);
    CHECK(trivial->inverse_table() == std::vector<ElementIndex>{0});

    const auto c2 = cyclic_group(2);
    CHECK(c2->table() == std::vector<std::vector<ElementIndex>>{{0, 1}, {1, 0}});
    CHECK(c2->inverse_table() == std::vector<ElementIndex>{0, 1});

    const auto c5 = cyclic_group(5);
    CHECK(c5->inverse_table() == std::vector<ElementIndex>{0, 4, 3, 2, 1});
    for (ElementIndex g = 0; g < 5; ++g) {
      ElementIndex found = 5;
      for (ElementIndex h = 0; h < 5; ++h)
        if (c5->mul(g, h) == c5->identity() && c5->mul(h, g) == c5->identity()) found = h;
      CHECK(c5->inv(g) == found);
    }
    CHECK(c5->is_standard_cyclic());
    CHECK_THROWS_AS(cyclic_group(0), DomainError);
  }

  TEST_CASE("groups from tables") {
    const auto v4 = group_from_table(oracle::klein_four_table());
    CHECK(v4->order() == 4);
    for (ElementIndex g = 0; g < 4; ++g) CHECK(v4->inv(g) == g);
    CHECK_FALSE(v4->is_standard_cyclic());
    CHECK(v4->associativity_verified());

    const auto c2 = group_from_table({{0, 1}, {1, 0}});
    CHECK(same_group(c2, cyclic_group(2)));

    const auto s3 = group_from_table(oracle::symmetric_three_table());
    CHECK(s3->order() == 6);
    bool commutative = true;
    for (ElementIndex a = 0; a < 6; ++a)
      for (ElementIndex b = 0; b < 6; ++b) commutative = commutative && s3->mul(a, b) == s3->mul(b, a);
    CHECK_FALSE(commutative);
  }

  TEST_CASE("table defects are reported distinctly") {
    const auto defect_of = [](const std::vector<std::vector<ElementIndex>>& t) {
      try {
        group_from_table(t);
      } catch (const GroupTableError& e) {
        return e.defect();
      }
      FAIL("table was accepted");
      return GroupTableDefect::kEmpty;
    };
    CHECK(defect_of({}) == GroupTableDefect::kEmpty);
    CHECK(defect_of({{0, 1}, {1}}) == GroupTableDefect::kNotSquare);
    CHECK(defect_of({{0, 2}, {1, 0}}) == GroupTableDefect::kIndexOutOfRange);
    CHECK(defect_of({{0, 1}, {1, 1}}) == GroupTableDefect::kNotLatinSquare);
    CHECK(defect_of({{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}) == GroupTableDefect::kNoIdentity);
    // Latin square with identity 0 but a non-associative product.
    CHECK(defect_of({{0, 1, 2, 3, 4},
                     {1, 0, 3, 4, 2},
                     {2, 4, 0, 1, 3},
                     {3, 2, 4, 0, 1},
                     {4, 3, 1, 2, 0}}) == GroupTableDefect::kNotAssociative);
    // A loop in which element 2 has different left and right inverses.
    CHECK(defect_of({{0, 1, 2, 3, 4},
                     {1, 0, 3, 4, 2},
                     {2, 3, 4, 0, 1},
                     {3, 4, 1, 2, 0},
                     {4, 2, 0, 1, 3}}) == GroupTableDefect::kNoInverse);
  }

  TEST_CASE("multiplication examples") {
    const auto g = cyclic_group(5);
    CHECK((poly(g, "1 - t") * norm_element(g)).is_zero());
    CHECK(poly(g, "1 + t - t^3") * poly(g, "1 - t^4") == poly(g, "t + t^2 - t^3 - t^4"));
    CHECK(poly(g, "t^2 - 1") * poly(g, "1 + t^2 + t^4") == poly(g, "t - 1"));
    // (t^2 - 1)(1 + t^2 + ... + t^8) vanishes in Z[C_5]: the sum is Sigma.
    CHECK((poly(g, "t^2 - 1") * poly(g, "1 + t^2 + t^4 + t^6 + t^8")).is_zero());
    CHECK_THROWS_AS(gr_mul(GroupRingElement::one(g), GroupRingElement::one(cyclic_group(3))), ShapeError);
  }

  TEST_CASE("involution, augmentation, norm element") {
    const auto g = cyclic_group(7);
    CHECK(gr_involute(poly(g, "1 - t")) == poly(g, "1 - t^-1"));
    CHECK(gr_involute(norm_element(g)) == norm_element(g));
    CHECK(augmentation(norm_element(g)) == 7);
    CHECK(augmentation(poly(g, "1 - t")) == 0);
    CHECK(norm_element(cyclic_group(3)) == poly(cyclic_group(3), "1 + t + t^2"));
    CHECK(norm_element(cyclic_group(1)) == GroupRingElement::one(cyclic_group(1)));
    for (long k = 1; k <= 6; ++k) {
      const auto h = cyclic_group(static_cast<std::size_t>(4 * k + 1));
      std::vector<std::pair<long, long>> terms;
      for (long r = -k + 1; r <= k; ++r) terms.emplace_back(1, r);
      for (long r = k + 2; r <= 3 * k; ++r) terms.emplace_back(-1, r);
      CHECK(augmentation(GroupRingElement::polynomial(h, terms)) == 1);
    }
  }

  TEST_CASE("printing and parsing") {
    const auto g = cyclic_group(5);
    CHECK(to_string(poly(g, "1 + t - t^3")) == "1 + t - t^3");
    CHECK(to_string(poly(g, "2*t^3 - t + 4")) == "4 - t + 2t^3");
    CHECK(to_string(GroupRingElement::zero(g)) == "0");
    CHECK(poly(g, "t^-1") == poly(g, "t^4"));
    CHECK(poly(g, " - t ") == -poly(g, "t"));
    CHECK_THROWS_AS(poly(g, "1 + x"), DomainError);
    CHECK_THROWS_AS(poly(g, "1 +"), DomainError);
    const auto v4 = group_from_table(oracle::klein_four_table());
    auto a = GroupRingElement::basis(v4, 2, 3) - GroupRingElement::one(v4);
    CHECK(to_string(a) == "-g0 + 3*g2");
  }

  TEST_CASE("products agree with the polynomial oracle") {
    for (int trial = 0; trial < 200; ++trial) {
      const auto n = static_cast<std::size_t>(testgen::uniform(1, 12));
      const auto g = cyclic_group(n);
      const auto a = testgen::random_element(g), b = testgen::random_element(g);
      CHECK(gr_mul(a, b).coeffs() == oracle::cyclic_product(a.coeffs(), b.coeffs()));
    }
  }

  TEST_CASE("ring laws on random elements") {
    for (int trial = 0; trial < 300; ++trial) {
      const auto g = testgen::random_group();
      const auto a = testgen::random_element(g), b = testgen::random_element(g), c = testgen::random_element(g);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(gr_involute(a * b) == gr_involute(b) * gr_involute(a));
      CHECK(gr_involute(gr_involute(a)) == a);
      CHECK(augmentation(a * b) == augmentation(a) * augmentation(b));
      const auto sigma = norm_element(g);
      CHECK(sigma * a == a * sigma);
      CHECK(sigma * a == sigma * augmentation(a));
    }
  }
}

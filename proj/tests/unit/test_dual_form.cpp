#include <doctest.h>

#include <set>

#include "fivedual/assembly.hpp"
#include "fivedual/duality.hpp"
#include "fivedual/lens.hpp"
#include "generators.hpp"

using namespace fivedual;

namespace {

GroupRingElement poly(const GroupPtr& g, std::string_view text) { return parse_cyclic_polynomial(g, text); }

std::vector<AbelianGroupInfo> all_homology(const ChainComplex& c, Coefficients k) {
  std::vector<AbelianGroupInfo> out;
  for (std::size_t d = 0; d <= c.top_degree(); ++d) out.push_back(homology(c, d, k));
  return out;
}

// lens(n) with the basis of F_1 changed by the unit u: an ALG5 complex
// that is not in dual form.
ChainComplex twisted_lens(std::size_t n, const GroupRingElement& u) {
  const auto a = lens_complex(n);
  const auto inv = gr_inverse(GRMatrix::scalar(u));
  REQUIRE(inv.has_value());
  return a.with_boundary(1, a.boundary(1) * *inv).with_boundary(2, GRMatrix::scalar(u) * a.boundary(2));
}

DualFormView view_of(const ChainComplex& c) {
  auto r = recognize_dual_form(c);
  REQUIRE_MESSAGE(r.view.has_value(), r.diagnostic);
  return *r.view;
}

}  // namespace

TEST_SUITE("moves") {
  TEST_CASE("stabilization") {
    const auto a = lens_complex(5);
    CHECK(stabilize(a, 0).ranks() == a.ranks());
    CHECK(stabilize(a, 0).boundaries() == a.boundaries());
    const auto s = stabilize(a, 2);
    CHECK(s.ranks() == std::vector<std::size_t>{1, 1, 1, 1, 1, 3});
    CHECK(s.boundary(5).block(0, 0, 1, 1) == a.boundary(5));
    CHECK(s.boundary(5).block(0, 1, 1, 2).is_zero());
    for (std::size_t d = 0; d <= 4; ++d)
      CHECK(homology(s, d, Coefficients::kIntegral) == homology(a, d, Coefficients::kIntegral));
    CHECK(homology(s, 5, Coefficients::kIntegral).free_rank == homology(a, 5, Coefficients::kIntegral).free_rank + 10);
  }

  TEST_CASE("simple moves") {
    const auto a = lens_complex(5);
    const auto g = a.group();
    const auto m = expand_move(a, 0, 1);
    CHECK(m.complex.ranks() == std::vector<std::size_t>{2, 2, 1, 1, 1, 1});
    GRMatrix expected(g, 2, 2);
    expected(0, 0) = poly(g, "1 - t");
    expected(1, 1) = GroupRingElement::one(g);
    CHECK(m.complex.boundary(1) == expected);
    CHECK(is_chain_map(m.inclusion).commutes);
    CHECK(is_chain_map(m.projection).commutes);
    CHECK(verify_homotopy(m.homotopy).verified);
    CHECK(compose(m.projection, m.inclusion).components() == ChainMap::identity(a).components());
    CHECK(collapse_move(m.complex, m.record) == a);

    for (std::size_t p = 0; p <= 4; ++p) {
      const auto u = GRMatrix::scalar(poly(g, "1 + t - t^3"));
      const auto mv = expand_move(a, p, 1, u, "unit block");
      CHECK(validate_complex(mv.complex).valid());
      CHECK(verify_homotopy(mv.homotopy).verified);
      CHECK(collapse_move(mv.complex, mv.record) == a);
      for (auto k : {Coefficients::kIntegral, Coefficients::kTrivial})
        CHECK(all_homology(mv.complex, k) == all_homology(a, k));
    }
    CHECK_THROWS_AS(expand_move(a, 5, 1), DomainError);
    CHECK_THROWS_AS(expand_move(a, 1, 1, GRMatrix::scalar(poly(g, "1 - t"))), DomainError);
    CHECK_THROWS_AS(collapse_move(a, MoveRecord{0, 1, ""}), DomainError);
  }

  TEST_CASE("stage 6 pipeline") {
    for (std::size_t n : {2, 3, 4, 5, 9, 13}) {
      const auto a = lens_complex(n);
      const auto s = to_dual_form_stage6(a);
      CHECK(s.complex.ranks() == std::vector<std::size_t>{2, 4, 6, 6, 4, 2});
      CHECK(s.moves.size() == 5);
      CHECK(validate_complex(s.complex).valid());
      CHECK(euler_characteristic(s.complex) == 0);
      CHECK(is_alg5(s.complex).member);
      for (auto k : {Coefficients::kIntegral, Coefficients::kTrivial})
        CHECK(all_homology(s.complex, k) == all_homology(a, k));
      CHECK(is_chain_map(s.inclusion).commutes);
      CHECK(is_chain_map(s.projection).commutes);
      for (std::size_t i = 0; i <= 5; ++i) CHECK(s.complex.rank(i) == s.complex.rank(5 - i));
    }
    const auto g = cyclic_group(3);
    const auto bad = lens_complex(3).with_boundary(1, GRMatrix(g, 1, 1)).with_generators({});
    CHECK_THROWS_AS(to_dual_form_stage6(bad), DomainError);
  }

  TEST_CASE("stage 6 of a complex outside dual form is not recognized") {
    const auto g = cyclic_group(5);
    const auto c = twisted_lens(5, poly(g, "1 + t - t^3"));
    CHECK(is_alg5(c).member);
    CHECK_FALSE(recognize_dual_form(c).view.has_value());
    const auto s = to_dual_form_stage6(c);
    const auto r = recognize_dual_form(s.complex);
    CHECK_FALSE(r.view.has_value());
    CHECK_FALSE(r.diagnostic.empty());
  }
}

TEST_SUITE("dual_form") {
  TEST_CASE("recognition") {
    for (std::size_t n : {2, 5, 8}) {
      const auto v = view_of(lens_complex(n));
      CHECK(v.d3 == GRMatrix::scalar(poly(v.base.group(), "1 - t^-1")));
      CHECK(v.j_rank == n - 1);
    }
    const auto t = lens_asd_transform(5);
    CHECK(view_of(t.a_prime).d3 == GRMatrix::scalar(t.unit.alpha));
    const auto not_mirrored = expand_move(lens_complex(5), 0, 1).complex;
    const auto r = recognize_dual_form(not_mirrored);
    CHECK_FALSE(r.view.has_value());
    CHECK(r.diagnostic.find("mirror") != std::string::npos);
  }

  TEST_CASE("anti-self-duality") {
    for (std::size_t n = 5; n <= 25; n += 4) CHECK(asd_check(view_of(lens_asd_transform(n).a_prime)));
    for (std::size_t n = 2; n <= 12; ++n) CHECK_FALSE(asd_check(view_of(lens_complex(n))));
    const auto a = lens_complex(6);
    CHECK(asd_check(view_of(a.with_boundary(3, GRMatrix(a.group(), 1, 1)).with_generators({}))));
  }

  TEST_CASE("obstruction") {
    const auto o4 = obstruction_check(view_of(lens_complex(4)));
    CHECK(o4.group_order_even);
    CHECK(o4.h3_free_rank == 0);
    CHECK(o4.obstructed);
    CHECK(o4.h3_cross_check);
    const auto o5 = obstruction_check(view_of(lens_complex(5)));
    CHECK_FALSE(o5.obstructed);
    for (std::size_t n = 2; n <= 20; ++n) {
      const auto o = obstruction_check(view_of(lens_complex(n)));
      CHECK(o.j_rank == n - 1);
      CHECK(o.j_rank_congruence == n - 1);
      CHECK(o.h3_cross_check);
      CHECK(o.form_rank <= o.j_rank);
    }
    // With d_3 = 0 the form vanishes and H_3 of the cover is all of J.
    const auto a = lens_complex(6);
    const auto zero = obstruction_check(view_of(a.with_boundary(3, GRMatrix(a.group(), 1, 1)).with_generators({})));
    CHECK(zero.h3_free_rank == 5);
    CHECK(zero.h3_cross_check);
    CHECK_FALSE(zero.obstructed);
  }
}

TEST_SUITE("assembly") {
  TEST_CASE("identical segments give the identity") {
    const auto a = lens_complex(5);
    const auto out = solve_chain_isomorphism(tail_segment(a), head_segment(a));
    REQUIRE(out.iso.has_value());
    for (std::size_t d = 0; d <= 2; ++d) CHECK(out.iso->forward.component(d).is_identity());
    const auto assembled = assemble_dual_form(a, *out.iso);
    CHECK(assembled.complex == a);
  }

  TEST_CASE("segments differing by a monomial unit") {
    const auto a = lens_complex(7);
    const auto g = a.group();
    const auto u = -GroupRingElement::basis(g, 3);
    const auto tail = tail_segment(a);
    const auto u_inv = gr_inverse(GRMatrix::scalar(u));
    REQUIRE(u_inv.has_value());
    const auto head = tail.with_boundary(1, tail.boundary(1) * *u_inv).with_boundary(2, GRMatrix::scalar(u) * tail.boundary(2));
    const auto out = solve_chain_isomorphism(tail, head);
    REQUIRE(out.iso.has_value());
    CHECK(verify_segment_iso(*out.iso).verified);
    CHECK(out.iso->forward.component(0).is_identity());
    CHECK(out.iso->forward.component(1) == GRMatrix::scalar(u));
  }

  TEST_CASE("shape mismatch") {
    const auto a = lens_complex(5);
    const auto s = to_dual_form_stage6(a).complex;
    CHECK_THROWS_AS(solve_chain_isomorphism(tail_segment(a), tail_segment(s)), ShapeError);
  }

  TEST_CASE("end isomorphism for complexes outside dual form") {
    const auto g = cyclic_group(5);
    std::set<std::string> methods;
    for (const auto& c : {twisted_lens(5, poly(g, "1 + t - t^3")), expand_move(lens_complex(5), 2, 1).complex,
                          twisted_lens(5, poly(g, "t - t^2 + t^3"))}) {
      const auto pipeline = to_dual_form(c);
      REQUIRE_MESSAGE(pipeline.assembled.has_value(), pipeline.solver.detail);
      methods.insert(pipeline.solver.iso->method);
      const auto& d = pipeline.assembled->complex;
      CHECK(verify_segment_iso(*pipeline.solver.iso).verified);
      CHECK(is_alg5(d).member);
      CHECK(is_chain_map(pipeline.assembled->equivalence).commutes);
      for (auto k : {Coefficients::kIntegral, Coefficients::kTrivial})
        CHECK(all_homology(d, k) == all_homology(c, k));
      CHECK((pipeline.assembled->view.j_rank + 1) % 5 == 0);
    }
    CHECK(methods == std::set<std::string>{"monomial search", "whitehead swap"});
  }

  TEST_CASE("assembly rejects a non-invertible map") {
    const auto a = lens_complex(5);
    auto out = solve_chain_isomorphism(tail_segment(a), head_segment(a));
    REQUIRE(out.iso.has_value());
    const auto g = a.group();
    const auto two = GroupRingElement::one(g) * Integer(2);
    SegmentIso bad{ChainMap::scalar(out.iso->forward.source(), out.iso->forward.target(), {two, two, two}),
                   out.iso->inverse, "scaled"};
    CHECK_FALSE(verify_segment_iso(bad).verified);
    CHECK_THROWS_AS(assemble_dual_form(a, bad), DomainError);
  }
}

TEST_SUITE("duality") {
  TEST_CASE("normalizing the lens duality map") {
    for (std::size_t n = 2; n <= 12; ++n) {
      const auto a = lens_complex(n);
      const auto v = view_of(a);
      const auto nd = normalize_duality(v, lens_duality_map(n));
      CHECK_FALSE(nd.negated);
      CHECK(is_chain_map(nd.psi).commutes);
      CHECK(verify_homotopy(nd.homotopy).verified);
      CHECK(central_square_holds(v, nd.theta1, nd.theta2));
      const auto one = GRMatrix::identity(a.group(), 1);
      CHECK(nd.psi.component(0) == one);
      CHECK(nd.psi.component(1) == one);
      CHECK(nd.psi.component(4) == -one);
      CHECK(nd.psi.component(5) == -one);
      CHECK(nd.homotopy.component(2).is_zero());
    }
  }

  TEST_CASE("already normalized maps are fixed") {
    const auto v = view_of(lens_complex(7));
    const auto first = normalize_duality(v, lens_duality_map(7));
    const auto second = normalize_duality(v, first.psi);
    CHECK(second.psi.components() == first.psi.components());
    CHECK(second.homotopy.support().empty());
  }

  TEST_CASE("global sign and bad scalars") {
    const auto v = view_of(lens_complex(5));
    const auto phi = lens_duality_map(5);
    const auto nd = normalize_duality(v, phi.negated());
    CHECK(nd.negated);
    CHECK(verify_homotopy(nd.homotopy).verified);
    std::vector<GRMatrix> doubled;
    for (const auto& c : phi.components()) doubled.push_back(c + c);
    CHECK_THROWS_AS(normalize_duality(v, ChainMap(phi.source(), phi.target(), doubled)), DomainError);
  }

  TEST_CASE("conjugated duality on the anti-self-dual representative") {
    const auto t = lens_asd_transform(5);
    const auto v = view_of(t.a_prime);
    const auto nd = normalize_duality(v, t.conjugated);
    CHECK(verify_homotopy(nd.homotopy).verified);
    CHECK(central_square_holds(v, nd.theta1, nd.theta2));
  }
}

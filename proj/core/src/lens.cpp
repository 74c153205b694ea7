#include "fivedual/lens.hpp"

namespace fivedual {

namespace {

GroupRingElement t_power(const GroupPtr& g, long e) { return GroupRingElement::polynomial(g, {{1, e}}); }

GRMatrix one_by_one(const GroupRingElement& x) { return GRMatrix::scalar(x); }

IntegerMatrix ones(std::size_t rows, std::size_t cols) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = 1;
  return m;
}

}  // namespace

ChainComplex lens_complex(std::size_t n) {
  if (n < 2) throw DomainError("lens_complex: n must be at least 2");
  const auto G = cyclic_group(n);
  const auto one = GroupRingElement::one(G);
  const auto sigma = norm_element(G);
  const auto d1 = one - t_power(G, 1);
  const auto d_odd = one - t_power(G, -1);
  GeneratorCertificates gens{ones(n, 1), ones(1, n)};
  return ChainComplex(G, {1, 1, 1, 1, 1, 1},
                      {one_by_one(d1), one_by_one(sigma), one_by_one(d_odd), one_by_one(sigma), one_by_one(d_odd)},
                      std::move(gens));
}

ChainMap lens_duality_map(std::size_t n) {
  const auto a = lens_complex(n);
  const auto& G = a.group();
  const auto one = GroupRingElement::one(G);
  return ChainMap::scalar(dualize_complex(a), a, {-one, -one, -t_power(G, 1), one, one, one});
}

AsdUnit asd_unit(std::size_t n) {
  if (n < 5 || n % 4 != 1) throw DomainError("asd_unit: n must be 4k + 1 with k >= 1");
  const long k = static_cast<long>((n - 1) / 4);
  const auto G = cyclic_group(n);
  auto alpha = GroupRingElement::polynomial(G, {{1, k + 1}, {1, k}, {-1, -k}, {-1, -k - 1}});
  std::vector<std::pair<long, long>> terms;
  for (long r = -k + 1; r <= k; ++r) terms.emplace_back(1, r);
  for (long r = k + 2; r <= 3 * k; ++r) terms.emplace_back(-1, r);
  auto beta = GroupRingElement::polynomial(G, terms);

  const auto one = GroupRingElement::one(G);
  auto inv = solve_gr_linear(one_by_one(beta), one_by_one(one));
  if (!inv) throw DomainError("asd_unit: beta is not a unit");
  auto beta_inv = (*inv)(0, 0);

  const auto fail = [&](const char* identity) {
    throw DomainError(std::string("asd_unit: identity fails for n = ") + std::to_string(n) + ": " + identity);
  };
  if (!(beta * beta_inv == one) || !(beta_inv * beta == one)) fail("beta beta_inv = 1");
  if (!(beta * (one - t_power(G, -1)) == alpha)) fail("beta (1 - t^-1) = alpha");
  const auto sigma = norm_element(G);
  if (!(sigma * beta == sigma)) fail("Sigma beta = Sigma");
  if (!(alpha * (t_power(G, 1 + k) + t_power(G, 1 - k)) == t_power(G, 2) - one)) fail("alpha (t^(1+k) + t^(1-k)) = t^2 - 1");
  return AsdUnit{static_cast<std::size_t>(k), std::move(alpha), std::move(beta), std::move(beta_inv)};
}

AsdTransform lens_asd_transform(std::size_t n) {
  auto unit = asd_unit(n);
  const auto a = lens_complex(n);
  const auto& G = a.group();
  const auto one = GroupRingElement::one(G);
  auto a_prime = a.with_boundary(3, one_by_one(unit.alpha));

  auto f = ChainMap::scalar(a, a_prime, {one, one, one, unit.beta, one, one});
  auto conjugated = compose(f, compose(lens_duality_map(n), dual_chain_map(f)));

  for (int sign : {1, -1}) {
    const GroupRingElement s = GroupRingElement::one(G) * Integer(sign);
    auto target = ChainMap::scalar(dualize_complex(a_prime), a_prime, {-s, -s, -s, s, s, s});
    auto x = solve_gr_linear(one_by_one(unit.alpha), conjugated.component(2) - target.component(2));
    if (!x) continue;
    auto homotopy = ChainHomotopy::single(conjugated, target, 2, *x);
    if (!verify_homotopy(homotopy).verified) continue;
    auto x_value = (*x)(0, 0);
    return AsdTransform{std::move(unit),     std::move(a_prime), std::move(f),      std::move(conjugated),
                        std::move(x_value),  std::move(target),  sign,              std::move(homotopy)};
  }
  throw DomainError("lens_asd_transform: no single-component homotopy to a signed diagonal for n = " +
                    std::to_string(n));
}

LensInstance lens_instance(std::size_t n) {
  LensInstance instance{n, lens_complex(n), lens_duality_map(n), std::nullopt};
  if (n >= 5 && n % 4 == 1) instance.asd = lens_asd_transform(n);
  return instance;
}

}  // namespace fivedual

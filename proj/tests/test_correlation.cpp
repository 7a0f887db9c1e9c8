#include <doctest.h>

#include <cmath>

#include "eberlein/correlation.hpp"
#include "eberlein/json_io.hpp"
#include "eberlein/spectral.hpp"
#include "oracles.hpp"

using namespace eberlein;

namespace {

SequenceSpec spec_of(Generator g) { return SequenceSpec{std::move(g), std::nullopt, std::nullopt, ""}; }

// full-period prefix windows [1, p], [1, 2p], ...
WindowFamily period_windows(std::int64_t p, std::int64_t count) {
  std::vector<Interval> ivs;
  for (std::int64_t m = 1; m <= count; ++m) ivs.push_back({1, m * p});
  return WindowFamily(WindowKind::Custom, std::move(ivs), "periods");
}

}  // namespace

TEST_CASE("mean of the constant function is one at every window") {
  auto one = generate(spec_of(ConstantOneGen{}), {-64, 64});
  auto est = mean(one, make_symmetric(64));
  for (const auto& v : est.per_window) CHECK(v == Complex{1.0, 0.0});
  CHECK(est.defect == 0.0);
}

TEST_CASE("mean of the sign comb vanishes exactly on symmetric windows") {
  auto sign = generate(spec_of(SignGen{}), {-2000, 2000});
  auto est = mean(sign, make_symmetric(2000));
  for (const auto& v : est.per_window) CHECK(v == Complex{0.0, 0.0});
}

TEST_CASE("mean of a nontrivial character vanishes over full periods") {
  auto chi = generate(spec_of(CharacterGen{1.0 / 3.0}), {1, 3000});
  auto est = mean(chi, period_windows(3, 1000));
  for (const auto& v : est.per_window) CHECK(std::abs(v) <= 1e-10);
}

TEST_CASE("mean demands genuine support") {
  auto one = generate(spec_of(ConstantOneGen{}), {0, 10});
  CHECK_THROWS_AS(mean(one, make_symmetric(11)), std::out_of_range);
}

TEST_CASE("dirac comb autocorrelates to one at every lag and window") {
  auto comb = generate(spec_of(DiracCombGen{}), {-80, 80});
  auto est = reflected_eberlein(comb, comb, make_symmetric(16), symmetric_lags(8));
  for (const auto& row : est.values)
    for (const auto& v : row) CHECK(v == Complex{1.0, 0.0});
}

TEST_CASE("comb against sign comb vanishes within the boundary bound") {
  const std::int64_t n_max = 500, L = 16;
  auto comb = generate(spec_of(DiracCombGen{}), {-n_max - L, n_max + L});
  auto sign = generate(spec_of(SignGen{}), {-n_max - L, n_max + L});
  auto est = reflected_eberlein(comb, sign, make_symmetric(n_max), symmetric_lags(L));
  for (std::size_t i = 0; i < est.lags.size(); ++i)
    for (std::size_t j = 0; j < est.values[i].size(); ++j) {
      double bound = (std::abs(static_cast<double>(est.lags[i])) + 1.0) / (static_cast<double>(j) + 1.0);
      CHECK(std::abs(est.values[i][j]) <= bound);
    }
}

TEST_CASE("sign comb against itself approaches one") {
  const std::int64_t n_max = 500, L = 16;
  auto sign = generate(spec_of(SignGen{}), {-n_max - L, n_max + L});
  auto est = reflected_eberlein(sign, sign, make_symmetric(n_max), symmetric_lags(L));
  for (std::size_t i = 0; i < est.lags.size(); ++i)
    for (std::size_t j = 0; j < est.values[i].size(); ++j) {
      double n = static_cast<double>(j) + 1.0;
      double bound = 2.0 * (std::abs(static_cast<double>(est.lags[i])) + 1.0) / (2.0 * n + 1.0);
      CHECK(std::abs(est.values[i][j] - Complex{1.0, 0.0}) <= bound);
    }
}

TEST_CASE("lag sums never pad silently") {
  auto f = generate(spec_of(DiracCombGen{}), {1, 100});
  auto g = generate(spec_of(DiracCombGen{}), {1, 100});  // no slack for lags
  auto w = make_prefix(100);
  CHECK_THROWS_AS(reflected_eberlein(f, g, w, {3}), std::out_of_range);
  CHECK_NOTHROW(reflected_eberlein(f, g, w, {0}));
}

TEST_CASE("autocorrelation exemplars") {
  SUBCASE("thue-morse gamma(1) is -1/3") {
    const std::int64_t N = 300000, L = 4;
    auto tm = thue_morse_pm1({1 - L, N + L});
    auto gamma = autocorrelation(tm, make_prefix(N).thin(16), L);
    auto oracle = oracles::thue_morse_gamma(L);
    CHECK(std::abs(gamma.at(1).real() - oracle[1]) <= 0.005);
    CHECK(std::abs(gamma.at(1) - Complex{-1.0 / 3.0, 0.0}) <= 0.005);
    CHECK(gamma.at(0) == Complex{1.0, 0.0});
  }
  SUBCASE("bernoulli off-zero lags vanish") {
    const std::int64_t N = 100000, L = 16;
    auto b = bernoulli_pm1(0.5, 42, {1 - L, N + L});
    auto gamma = autocorrelation(b, make_prefix(N).thin(16), L);
    for (std::int64_t t = 1; t <= L; ++t)
      CHECK(std::abs(gamma.at(t)) <= 5.0 / std::sqrt(static_cast<double>(N)));
  }
  SUBCASE("period-two pattern (1, i)") {
    auto p = generate(spec_of(PeriodicGen{{Complex{1, 0}, Complex{0, 1}}}), {-10, 2000});
    auto gamma = autocorrelation(p, period_windows(2, 500), 2);
    CHECK(std::abs(gamma.at(0) - Complex{1, 0}) <= 1e-12);
    CHECK(std::abs(gamma.at(1)) <= 1e-12);
    CHECK(std::abs(gamma.at(2) - Complex{1, 0}) <= 1e-12);
  }
}

TEST_CASE("autocorrelation is hermitian and real at zero") {
  auto f = generate(spec_of(TrigPolynomialGen{{{Complex{1, 1}, 0.2}, {Complex{0, -0.5}, 0.7}}}),
                    {-40, 1040});
  auto gamma = autocorrelation(f, make_prefix(1000).thin(8), 32);
  CHECK(gamma.at(0).imag() == 0.0);
  CHECK(gamma.gamma0() >= 0.0);
  for (std::int64_t t = 0; t <= 32; ++t) CHECK(gamma.at(-t) == std::conj(gamma.at(t)));
}

TEST_CASE("hermitian pairing up to the boundary defect") {
  const std::int64_t N = 20000, L = 12;
  auto f = fibonacci_pm1({1 - L, N + L});
  auto g = bernoulli_pm1(0.5, 7, {1 - L, N + L});
  auto w = make_prefix(N).thin(16);
  auto fg = reflected_eberlein(f, g, w, symmetric_lags(L));
  auto gf = reflected_eberlein(g, f, w, symmetric_lags(L));
  for (std::int64_t t = -L; t <= L; ++t)
    for (std::size_t j = 0; j < w.size(); ++j) {
      double bound = 2.0 * (std::abs(static_cast<double>(t)) + 1.0) /
                     static_cast<double>(w.interval(j).length());
      Complex lhs = gf.values[gf.lag_index(-t)][j];
      Complex rhs = std::conj(fg.values[fg.lag_index(t)][j]);
      CHECK(std::abs(lhs - rhs) <= bound);
    }
}

TEST_CASE("positive definiteness of autocorrelations within the finite-N floor") {
  const std::int64_t N = 50000, L = 24;
  std::vector<SampledSequence> exemplars;
  exemplars.push_back(fibonacci_pm1({1 - L, N + L}));
  exemplars.push_back(thue_morse_pm1({1 - L, N + L}));
  exemplars.push_back(bernoulli_pm1(0.5, 42, {1 - L, N + L}));
  exemplars.push_back(generate(spec_of(PeriodicGen{{Complex{1, 0}, Complex{0, 1}}}),
                               {1 - L, N + L}));
  auto w = make_prefix(N).thin(16);
  for (const auto& f : exemplars) {
    auto gamma = autocorrelation(f, w, L);
    double floor = min_toeplitz_eigenvalue(gamma);
    CHECK(floor >= -psd_tolerance(f.sup_norm_bound, static_cast<std::size_t>(L) + 1, N));
  }
}

TEST_CASE("correlation values obey the universal modulus bound") {
  const std::int64_t N = 10000, L = 8;
  auto f = fibonacci_pm1({1 - L, N + L});
  auto g = thue_morse_pm1({1 - L, N + L});
  auto est = reflected_eberlein(f, g, make_prefix(N).thin(16), symmetric_lags(L));
  for (const auto& row : est.values)
    for (const auto& v : row)
      CHECK(std::abs(v) <= f.sup_norm_bound * g.sup_norm_bound * (1.0 + 1e-12));
}

TEST_CASE("the mean is translation invariant up to boundary terms") {
  const std::int64_t N = 10000, t0 = 37;
  auto f = thue_morse_pm1({1 - t0 - 1, N + t0 + 1});
  auto w = make_prefix(N).thin(16);
  auto m0 = mean(f, w);
  auto m1 = mean(translate(f, t0), w);
  for (std::size_t j = 0; j < w.size(); ++j)
    CHECK(std::abs(m1.per_window[j] - m0.per_window[j]) <=
          2.0 * f.sup_norm_bound * static_cast<double>(t0) /
              static_cast<double>(w.interval(j).length()));
}

TEST_CASE("sesquilinearity is an exact finite-sum identity") {
  const std::int64_t L = 6;
  std::vector<Complex> fv, gv, hv;
  for (std::int64_t k = 0; k < 1019; ++k) {
    fv.emplace_back(unit_uniform(1, k) - 0.5, unit_uniform(2, k) - 0.5);
    gv.emplace_back(unit_uniform(3, k) - 0.5, unit_uniform(4, k) - 0.5);
    hv.emplace_back(unit_uniform(5, k) - 0.5, unit_uniform(6, k) - 0.5);
  }
  auto mk = [](std::vector<Complex> v) {
    SampledSequence s{-6, std::move(v), 1.0};
    return s;
  };
  auto f = mk(fv), g = mk(gv), h = mk(hv);
  auto w = make_prefix(1000).thin(8);

  SUBCASE("identity case") {
    auto rep = sesquilinearity_check(f, g, h, Complex{1, 0}, Complex{0, 0}, w, symmetric_lags(L));
    CHECK(rep.pass);
  }
  SUBCASE("random complex coefficients") {
    auto rep = sesquilinearity_check(f, g, h, Complex{2, -1}, Complex{3, 0}, w, symmetric_lags(L));
    CHECK(rep.pass);
    CHECK(rep.max_gap <= rep.bound);
  }
  SUBCASE("cancelling combination") {
    auto rep = sesquilinearity_check(f, g, f, Complex{2, 1}, Complex{-2, -1}, w, symmetric_lags(L));
    CHECK(rep.pass);
  }
}

TEST_CASE("translation covariance holds within the boundary-shift bound") {
  SUBCASE("t0 = 0 is exact") {
    auto f = thue_morse_pm1({-20, 1020});
    auto rep = translation_covariance_check(f, f, 0, make_prefix(1000).thin(8), symmetric_lags(4));
    CHECK(rep.pass);
    CHECK(rep.max_gap == 0.0);
  }
  SUBCASE("dirac comb is shift-fixed") {
    auto comb = generate(spec_of(DiracCombGen{}), {-200, 1200});
    auto rep =
        translation_covariance_check(comb, comb, 11, make_prefix(1000).thin(8), symmetric_lags(4));
    CHECK(rep.pass);
    CHECK(rep.max_gap <= 1e-14);
  }
  SUBCASE("bernoulli within 2 sup^2 t0 / N") {
    const std::int64_t N = 100000;
    auto b = bernoulli_pm1(0.5, 42, {1 - 40, N + 40});
    auto rep = translation_covariance_check(b, b, 7, make_prefix(N).thin(8), symmetric_lags(8));
    CHECK(rep.pass);
  }
}

TEST_CASE("correlation estimate JSON round trip") {
  auto f = thue_morse_pm1({-20, 520});
  auto est = reflected_eberlein(f, f, make_prefix(500).thin(5), symmetric_lags(3));
  auto back = correlation_from_json(to_json(est));
  CHECK(back.lags == est.lags);
  CHECK(back.final == est.final);
  CHECK(back.values == est.values);
  CHECK(back.cauchy_defect == est.cauchy_defect);

  auto gamma = autocorrelation(f, make_prefix(500).thin(5), 3);
  auto gback = autocorrelation_from_json(to_json(gamma));
  CHECK(gback.gamma == gamma.gamma);
  CHECK(gback.n_used == gamma.n_used);
}

TEST_CASE("cauchy defect tracks tail oscillation") {
  std::vector<Complex> conv, osc;
  for (int i = 0; i < 64; ++i) {
    conv.emplace_back(1.0 + std::pow(0.8, i), 0.0);
    osc.emplace_back((i % 2) ? 1.0 : -1.0, 0.0);
  }
  CHECK(cauchy_defect(conv) < 0.01);
  CHECK(cauchy_defect(osc) == 2.0);
}

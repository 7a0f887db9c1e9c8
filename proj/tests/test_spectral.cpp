#include <doctest.h>

#include <cmath>

#include "eberlein/json_io.hpp"
#include "eberlein/spectral.hpp"
#include "oracles.hpp"

using namespace eberlein;

namespace {

SequenceSpec spec_of(Generator g) { return SequenceSpec{std::move(g), std::nullopt, std::nullopt, ""}; }

WindowFamily period_windows(std::int64_t p, std::int64_t count) {
  std::vector<Interval> ivs;
  for (std::int64_t m = 1; m <= count; ++m) ivs.push_back({1, m * p});
  return WindowFamily(WindowKind::Custom, std::move(ivs), "periods");
}

Autocorrelation exact_gamma(std::vector<Complex> half, std::int64_t n_used) {
  // builds the symmetric grid from gamma(0..L)
  Autocorrelation a;
  std::int64_t L = static_cast<std::int64_t>(half.size()) - 1;
  a.lags = symmetric_lags(L);
  a.gamma.resize(static_cast<std::size_t>(2 * L + 1));
  for (std::int64_t t = 0; t <= L; ++t) {
    a.gamma[static_cast<std::size_t>(L + t)] = half[static_cast<std::size_t>(t)];
    a.gamma[static_cast<std::size_t>(L - t)] = std::conj(half[static_cast<std::size_t>(t)]);
  }
  a.window_label = "exact";
  a.n_used = n_used;
  return a;
}

}  // namespace

TEST_CASE("fourier-bohr exemplars") {
  SUBCASE("dirac comb at theta 0") {
    auto comb = generate(spec_of(DiracCombGen{}), {-64, 64});
    auto est = fourier_bohr(comb, 0.0, make_symmetric(64));
    for (const auto& v : est.per_window) CHECK(v == Complex{1.0, 0.0});
  }
  SUBCASE("sign comb at theta 0 vanishes exactly at every n") {
    auto sign = generate(spec_of(SignGen{}), {-3000, 3000});
    auto est = fourier_bohr(sign, 0.0, make_symmetric(3000));
    for (const auto& v : est.per_window) CHECK(v == Complex{0.0, 0.0});
  }
  SUBCASE("character picks itself out on full periods") {
    auto chi = generate(spec_of(CharacterGen{0.25}), {1, 4000});
    auto w = period_windows(4, 1000);
    auto hit = fourier_bohr(chi, 0.25, w);
    for (const auto& v : hit.per_window) CHECK(std::abs(v - Complex{1, 0}) <= 1e-10);
    auto miss = fourier_bohr(chi, 0.0, w);
    for (const auto& v : miss.per_window) CHECK(std::abs(v) <= 1e-10);
  }
}

TEST_CASE("fourier-bohr modulus never exceeds the sup norm") {
  auto f = generate(spec_of(TrigPolynomialGen{{{Complex{0.5, 1.0}, 0.3}}}), {1, 3000});
  for (double theta : {0.0, 0.3, 0.77}) {
    auto est = fourier_bohr(f, theta, make_prefix(3000).thin(16));
    for (const auto& v : est.per_window) CHECK(std::abs(v) <= f.sup_norm_bound + 1e-12);
  }
}

TEST_CASE("herglotz inversion of the constant lag sequence") {
  // gamma == 1 is the autocorrelation of the dirac comb: one unit atom at 0
  auto gamma = exact_gamma(std::vector<Complex>(65, Complex{1, 0}), 100000);
  HerglotzOptions opts;
  opts.grid_size = 128;
  auto est = herglotz_invert(gamma, opts);
  REQUIRE(est.atoms.size() == 1);
  CHECK(est.atoms[0].theta == 0.0);
  CHECK(est.atoms[0].mass == doctest::Approx(1.0));
  CHECK(est.ac_integral <= 0.01);
  CHECK(est.residual_sc_mass <= 0.01);
}

TEST_CASE("herglotz inversion of the delta lag sequence") {
  // gamma = delta_{t,0} is the bernoulli limit: Lebesgue measure, no atoms
  std::vector<Complex> half(257, Complex{0, 0});
  half[0] = Complex{1, 0};
  auto gamma = exact_gamma(std::move(half), 100000);
  HerglotzOptions opts;
  opts.grid_size = 64;
  auto est = herglotz_invert(gamma, opts);
  CHECK(est.atoms.empty());
  CHECK(est.ac_integral == doctest::Approx(1.0).epsilon(1e-9));
  for (double d : est.ac_density) CHECK(d == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(est.residual_sc_mass <= 1e-9);
}

TEST_CASE("thue-morse oracle gamma shows the singular continuous signature") {
  const std::int64_t L = 1 << 14;
  auto tm = oracles::thue_morse_gamma(L);
  std::vector<Complex> half(tm.size());
  for (std::size_t i = 0; i < tm.size(); ++i) half[i] = Complex{tm[i], 0.0};
  auto gamma = exact_gamma(std::move(half), std::int64_t{1} << 40);
  HerglotzOptions opts;
  opts.grid_size = 256;
  auto est = herglotz_invert(gamma, opts);

  // no atom at any dyadic candidate above 1e-3
  for (int q = 0; q < 256; ++q)
    CHECK(std::abs(wiener_atom_mass(gamma, q / 256.0)) <= 1e-3);
  CHECK(est.atoms.empty());
  CHECK(est.ac_integral <= 0.05);
  CHECK(est.residual_sc_mass >= 0.9);
}

TEST_CASE("atom extraction is exact on periodic inputs") {
  // acceptance-grade oracle equivalence, p = 1..12
  for (std::int64_t p = 1; p <= 12; ++p) {
    std::vector<Complex> pattern;
    for (std::int64_t j = 0; j < p; ++j)
      pattern.emplace_back(unit_uniform(10 + p, j) - 0.3, unit_uniform(20 + p, j) - 0.5);
    const std::int64_t L = 6 * p;  // 2L is a multiple of p
    auto f = generate(spec_of(PeriodicGen{pattern}), {1 - L, 40 * p + L});
    auto gamma = autocorrelation(f, period_windows(p, 40), L);
    auto oracle = oracles::periodic_atom_masses(pattern);
    for (std::int64_t k = 0; k < p; ++k) {
      double est = wiener_atom_mass(gamma, static_cast<double>(k) / static_cast<double>(p));
      CHECK(std::abs(est - oracle[static_cast<std::size_t>(k)]) <= 1e-9);
    }
  }
}

TEST_CASE("herglotz rejects sequences that are not positive definite") {
  auto gamma = exact_gamma({Complex{1, 0}, Complex{1.2, 0}, Complex{0.1, 0}}, 1000);
  HerglotzOptions opts;
  opts.psd_tolerance_override = 1e-6;
  CHECK_THROWS_AS(herglotz_invert(gamma, opts), std::invalid_argument);
}

TEST_CASE("mass bookkeeping is exact by construction") {
  const std::int64_t N = 30000, L = 128;
  std::vector<SampledSequence> exemplars;
  exemplars.push_back(fibonacci_pm1({1 - L, N + L}));
  exemplars.push_back(bernoulli_pm1(0.5, 42, {1 - L, N + L}));
  exemplars.push_back(thue_morse_pm1({1 - L, N + L}));
  for (const auto& f : exemplars) {
    auto est = herglotz_invert(autocorrelation(f, make_prefix(N).thin(16), L), HerglotzOptions{});
    double total = est.atom_mass_sum() + est.ac_integral + est.residual_sc_mass;
    CHECK(std::abs(total - est.total_mass) <= est.clipped_mass + 1e-12);
    for (const auto& a : est.atoms) CHECK(a.mass >= 0.0);
    for (double d : est.ac_density) CHECK(d >= 0.0);
    CHECK(est.residual_sc_mass >= 0.0);
  }
}

TEST_CASE("inversion reconstructs the lag sequence for pp and ac exemplars") {
  // L = 128 keeps the atom threshold 5/sqrt(L) below the 0.5 masses of the
  // period-two exemplar
  const std::int64_t N = 50000, L = 128;
  auto w = make_prefix(N).thin(16);
  std::vector<SampledSequence> exemplars;
  exemplars.push_back(generate(spec_of(DiracCombGen{}), {1 - L, N + L}));
  exemplars.push_back(bernoulli_pm1(0.5, 42, {1 - L, N + L}));
  exemplars.push_back(generate(spec_of(CharacterGen{0.25}), {1 - L, N + L}));
  exemplars.push_back(generate(spec_of(PeriodicGen{{Complex{1, 0}, Complex{0, 1}}}),
                               {1 - L, N + L}));
  for (const auto& f : exemplars) {
    auto gamma = autocorrelation(f, w, L);
    HerglotzOptions opts;
    opts.grid_size = 512;
    auto est = herglotz_invert(gamma, opts);
    for (std::int64_t t = -L / 4; t <= L / 4; ++t)
      CHECK(std::abs(reconstruct_gamma(est, t) - gamma.at(t)) <= 0.05 * gamma.gamma0());
  }
}

TEST_CASE("bragg scan classifies the canonical exemplars") {
  const std::int64_t N = 100000;
  auto w = make_prefix(N).thin(24);
  SUBCASE("dirac comb at 0 is an atom with unit intensity") {
    auto comb = generate(spec_of(DiracCombGen{}), {1, N});
    auto res = bragg_scan(comb, w, {0.0});
    REQUIRE(res.size() == 1);
    CHECK(res[0].verdict == BraggVerdict::Atom);
    CHECK(res[0].intensities.back() == doctest::Approx(1.0));
  }
  SUBCASE("sign comb at 0 is no atom despite the unit atom in the diffraction") {
    auto sign = generate(spec_of(SignGen{}), {-N, N});
    auto res = bragg_scan(sign, make_symmetric(N).thin(24), {0.0});
    CHECK(res[0].verdict == BraggVerdict::NoAtom);
    CHECK(res[0].intensities.back() == 0.0);
  }
  SUBCASE("fibonacci comb at 0 carries the squared mean") {
    auto fib = fibonacci_pm1({1, N});
    auto res = bragg_scan(fib, w, {0.0});
    CHECK(res[0].verdict == BraggVerdict::Atom);
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(res[0].intensities.back() - std::pow(2.0 / tau - 1.0, 2)) <= 0.01);
  }
  SUBCASE("bernoulli off-peak intensity decays like 1/N") {
    auto b = bernoulli_pm1(0.5, 42, {1, N});
    auto res = bragg_scan(b, w, {0.3});
    CHECK(res[0].verdict == BraggVerdict::NoAtom);
  }
}

TEST_CASE("atom verdict count is stable under grid refinement") {
  const std::int64_t N = 40000;
  auto p = generate(spec_of(PeriodicGen{{Complex{1, 0}, Complex{2, 0}, Complex{0, 1},
                                         Complex{-1, 0}}}),
                    {1, N});
  auto w = period_windows(4, N / 4).thin(24);
  auto count_atoms = [&](int grid) {
    int atoms = 0;
    std::vector<double> thetas;
    for (int i = 0; i < grid; ++i) thetas.push_back(static_cast<double>(i) / grid);
    for (const auto& r : bragg_scan(p, w, thetas))
      atoms += (r.verdict == BraggVerdict::Atom) ? 1 : 0;
    return atoms;
  };
  int coarse = count_atoms(64);
  int fine = count_atoms(128);
  CHECK(coarse == fine);
  CHECK(coarse == 4);  // all four DFT bins of this pattern are nonzero
}

TEST_CASE("consistent phase check on the canonical exemplars") {
  const std::int64_t N = 100000, L = 512;
  SUBCASE("dirac comb is consistent at 0") {
    auto comb = generate(spec_of(DiracCombGen{}), {1 - L, N + L});
    auto rep = consistent_phase_check(comb, make_prefix(N).thin(16), L, {0.0});
    CHECK(rep.pairs[0].fb_mass == doctest::Approx(1.0));
    CHECK(rep.pairs[0].atom_mass == doctest::Approx(1.0));
    CHECK(rep.max_gap <= 1e-9);
  }
  SUBCASE("fibonacci comb is consistent at 0 within 0.01") {
    auto fib = fibonacci_pm1({1 - L, N + L});
    auto rep = consistent_phase_check(fib, make_prefix(N).thin(16), L, {0.0});
    CHECK(rep.max_gap <= 0.01);
  }
  SUBCASE("sign comb violates the CPP without uniformity") {
    auto sign = generate(spec_of(SignGen{}), {-N - 64, N + 64});
    auto rep = consistent_phase_check(sign, make_symmetric(N).thin(16), 64, {0.0});
    CHECK(rep.pairs[0].fb_mass == 0.0);
    CHECK(rep.pairs[0].atom_mass == doctest::Approx(1.0).epsilon(0.01));
    CHECK(rep.max_gap == doctest::Approx(1.0).epsilon(0.01));
  }
}

TEST_CASE("default atom candidates cover the bundled exemplars") {
  auto c = default_atom_candidates();
  CHECK(!c.empty());
  CHECK(std::is_sorted(c.begin(), c.end()));
  bool has_zero = false, has_golden = false;
  const double golden = 2.0 / (1.0 + std::sqrt(5.0));
  for (double x : c) {
    has_zero = has_zero || x == 0.0;
    has_golden = has_golden || std::abs(x - golden) < 1e-12;
  }
  CHECK(has_zero);
  CHECK(has_golden);
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i] - c[i - 1] > 1e-12);
}

TEST_CASE("spectral measure JSON round trip") {
  auto gamma = exact_gamma(std::vector<Complex>(65, Complex{1, 0}), 100000);
  HerglotzOptions opts;
  opts.grid_size = 32;
  auto est = herglotz_invert(gamma, opts);
  auto back = spectral_measure_from_json(to_json(est));
  CHECK(back.atoms.size() == est.atoms.size());
  CHECK(back.ac_density == est.ac_density);
  CHECK(back.total_mass == est.total_mass);
  CHECK(back.residual_sc_mass == est.residual_sc_mass);
  CHECK(back.provenance.lag_cutoff == est.provenance.lag_cutoff);
  CHECK(back.provenance.kernel == "fejer");
}

#include "eberlein/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eberlein/parallel.hpp"

namespace eberlein {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex phase(double theta, std::int64_t k) {
  return std::polar(1.0, kTwoPi * std::remainder(theta * static_cast<double>(k), 1.0));
}

// Σ_{j=-L..L} w_j c(j) e^{-2πiθj} with a drift-corrected phase recurrence.
template <class Coef>
Complex modulated_sum(std::int64_t L, double theta, Coef coef) {
  Complex sum{0.0, 0.0};
  const Complex step = phase(theta, -1);
  Complex z = phase(theta, L);  // e^{-2πiθ·(-L)}
  for (std::int64_t j = -L; j <= L; ++j) {
    if ((j + L) % 1024 == 0) z = phase(theta, -j);  // renormalize drift
    sum += coef(j) * z;
    z *= step;
  }
  return sum;
}

}  // namespace

FourierBohrEstimate fourier_bohr(const SampledSequence& f, double theta, const WindowFamily& w) {
  SequenceSpec chi{CharacterGen{theta}, std::nullopt, std::nullopt, ""};
  SampledSequence chi_samples = generate(chi, w.hull());
  // (1/|A_n|) Σ conj(χ(k)) f(k) is the lag-0 correlation against χ
  auto series = correlate_lag(f, chi_samples, w, 0);
  FourierBohrEstimate est;
  est.theta = theta;
  est.per_window = std::move(series.per_window);
  est.final = series.final;
  est.cauchy_defect = series.defect;
  return est;
}

double wiener_atom_mass(const Autocorrelation& gamma, double theta) {
  const std::int64_t L = gamma.max_lag();
  if (L < 1) throw std::invalid_argument("wiener_atom_mass: need lag cutoff >= 1");
  const Complex* g = gamma.gamma.data() + L;
  Complex sum = modulated_sum(L, theta, [&](std::int64_t j) {
    double w = (j == -L || j == L) ? 0.5 : 1.0;
    return w * g[j];
  });
  return sum.real() / static_cast<double>(2 * L);
}

double SpectralMeasureEstimate::atom_mass_sum() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.mass;
  return s;
}

std::vector<double> default_atom_candidates(int rotation_depth, int dyadic_depth) {
  const double golden = 2.0 / (1.0 + std::sqrt(5.0));  // 1/τ
  std::set<double> cands;
  for (int k = -rotation_depth; k <= rotation_depth; ++k) {
    double x = std::fmod(k * golden, 1.0);
    if (x < 0) x += 1.0;
    cands.insert(x);
  }
  const int denom = 1 << dyadic_depth;
  for (int j = 0; j < denom; ++j) cands.insert(static_cast<double>(j) / denom);
  std::vector<double> out;
  for (double x : cands)
    if (out.empty() || x - out.back() > 1e-12) out.push_back(x);
  return out;
}

SpectralMeasureEstimate herglotz_invert(const Autocorrelation& gamma,
                                        const HerglotzOptions& opts) {
  const std::int64_t L = gamma.max_lag();
  if (L < 1) throw std::invalid_argument("herglotz_invert: need lag cutoff >= 1");
  if (gamma.gamma.size() != static_cast<std::size_t>(2 * L + 1))
    throw std::invalid_argument("herglotz_invert: gamma must cover -L..L");
  if (opts.grid_size == 0) throw std::invalid_argument("herglotz_invert: grid_size must be >= 1");
  for (std::int64_t t = 0; t <= L; ++t) {
    if (std::abs(gamma.at(-t) - std::conj(gamma.at(t))) > 1e-12 * (1.0 + std::abs(gamma.at(t))))
      throw std::invalid_argument("herglotz_invert: gamma is not hermitian-symmetric");
  }
  if (gamma.gamma0() < 0) throw std::invalid_argument("herglotz_invert: gamma(0) must be >= 0");

  const double eps_pd = opts.psd_tolerance_override
                            ? *opts.psd_tolerance_override
                            : psd_tolerance(std::sqrt(std::max(gamma.gamma0(), 0.0)),
                                            std::min<std::size_t>(129, 2 * L + 1),
                                            std::max<std::int64_t>(gamma.n_used, 1));
  double floor = min_toeplitz_eigenvalue(gamma);
  if (floor < -eps_pd) {
    std::ostringstream os;
    os << "herglotz_invert: lag sequence is not positive definite (eigenvalue floor " << floor
       << " below -" << eps_pd << ")";
    throw std::invalid_argument(os.str());
  }

  SpectralMeasureEstimate est;
  est.total_mass = gamma.gamma0();
  est.provenance.lag_cutoff = L;
  double threshold = opts.atom_threshold
                         ? *opts.atom_threshold
                         : std::max(1e-3, 5.0 / std::sqrt(static_cast<double>(L)));
  est.provenance.atom_threshold = threshold;

  const std::vector<double> cands =
      opts.atom_candidates.empty() ? default_atom_candidates() : opts.atom_candidates;
  std::vector<double> masses(cands.size());
  parallel_for(cands.size(),
               [&](std::size_t i) { masses[i] = wiener_atom_mass(gamma, cands[i]); });
  std::vector<Atom> detected;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (masses[i] >= threshold) detected.push_back({cands[i], masses[i]});

  // Candidates closer than the lag resolution 1/(2L) see the same atom:
  // cluster them (torus metric, including the wrap at 1) and keep the
  // strongest representative per cluster.
  const double resolution = 0.5 / static_cast<double>(L);
  std::sort(detected.begin(), detected.end(),
            [](const Atom& x, const Atom& y) { return x.theta < y.theta; });
  std::vector<std::vector<Atom>> clusters;
  for (const auto& atom : detected) {
    if (!clusters.empty() && atom.theta - clusters.back().back().theta < resolution)
      clusters.back().push_back(atom);
    else
      clusters.push_back({atom});
  }
  if (clusters.size() > 1) {
    double wrap_gap = clusters.front().front().theta + 1.0 - clusters.back().back().theta;
    if (wrap_gap < resolution) {
      for (auto& a : clusters.front()) clusters.back().push_back(a);
      clusters.erase(clusters.begin());
    }
  }
  for (const auto& cluster : clusters) {
    Atom best = cluster.front();
    for (const auto& a : cluster)
      if (a.mass > best.mass) best = a;
    est.atoms.push_back(best);
  }
  std::sort(est.atoms.begin(), est.atoms.end(),
            [](const Atom& x, const Atom& y) { return x.theta < y.theta; });

  // atom-free remainder: an atom of mass m at θ has lag transform m·e^{2πiθj}
  std::vector<Complex> reduced(gamma.gamma.begin(), gamma.gamma.end());
  for (const auto& atom : est.atoms)
    for (std::int64_t j = -L; j <= L; ++j)
      reduced[static_cast<std::size_t>(j + L)] -= atom.mass * phase(atom.theta, j);

  // Fejér smoothing; nonnegative in the limit, finite-L dips are clipped
  const std::size_t M = opts.grid_size;
  est.ac_density.assign(M, 0.0);
  const Complex* r = reduced.data() + L;
  std::vector<double> clipped(M, 0.0);
  parallel_for(M, [&](std::size_t m) {
    const double x = static_cast<double>(m) / static_cast<double>(M);
    Complex d = modulated_sum(L, x, [&](std::int64_t j) {
      return (1.0 - static_cast<double>(std::abs(j)) / static_cast<double>(L + 1)) * r[j];
    });
    if (d.real() >= 0.0) {
      est.ac_density[m] = d.real();
    } else {
      clipped[m] = -d.real();
    }
  });
  double acc = 0.0, clip = 0.0;
  for (std::size_t m = 0; m < M; ++m) {
    acc += est.ac_density[m];
    clip += clipped[m];
  }
  est.ac_integral = acc / static_cast<double>(M);
  est.clipped_mass = clip / static_cast<double>(M);

  double residual = est.total_mass - est.atom_mass_sum() - est.ac_integral;
  if (residual >= 0.0) {
    est.residual_sc_mass = residual;
  } else {
    est.residual_sc_mass = 0.0;
    est.clipped_mass += -residual;
  }
  return est;
}

Complex reconstruct_gamma(const SpectralMeasureEstimate& est, std::int64_t t) {
  Complex sum{0.0, 0.0};
  for (const auto& atom : est.atoms) sum += atom.mass * phase(atom.theta, t);
  const std::size_t M = est.ac_density.size();
  for (std::size_t m = 0; m < M; ++m)
    sum += est.ac_density[m] * phase(static_cast<double>(m) / static_cast<double>(M), t) /
           static_cast<double>(M);
  return sum;
}

std::vector<BraggClassification> bragg_scan(const SampledSequence& f, const WindowFamily& w,
                                            const std::vector<double>& thetas) {
  std::vector<BraggClassification> out(thetas.size());
  parallel_for(thetas.size(), [&](std::size_t i) {
    BraggClassification& bc = out[i];
    bc.theta = thetas[i];
    auto fb = fourier_bohr(f, thetas[i], w);
    bc.intensities.reserve(fb.per_window.size());
    for (const auto& v : fb.per_window) bc.intensities.push_back(std::norm(v));

    // An atom keeps |S_N|²/N² bounded away from 0; once the final intensity
    // falls below the fluctuation floor the slope estimate is meaningless and
    // the point is classified as no atom. Without the floor, oscillating
    // sidelobe tails near true atoms produce spurious flat fits.
    const double floor =
        std::max(1e-4, 1.0 / std::sqrt(static_cast<double>(w.largest().length())));
    const std::size_t n = bc.intensities.size();
    const std::size_t from = n / 2;
    bool vanished = bc.intensities.back() < floor;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t cnt = 0;
    for (std::size_t j = from; j < n && !vanished; ++j) {
      if (bc.intensities[j] <= 1e-300) {
        vanished = true;
        continue;
      }
      double x = std::log(static_cast<double>(w.interval(j).length()));
      double y = std::log(bc.intensities[j]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++cnt;
    }
    if (vanished || cnt < 2) {
      bc.scaling_exponent = -1.0;  // sentinel: intensity vanished / no spread
      bc.verdict = vanished ? BraggVerdict::NoAtom : BraggVerdict::Inconclusive;
      return;
    }
    double denom = sxx - sx * sx / static_cast<double>(cnt);
    if (denom <= 0) {
      bc.verdict = BraggVerdict::Inconclusive;
      return;
    }
    double slope = (sxy - sx * sy / static_cast<double>(cnt)) / denom;
    bc.scaling_exponent = slope;
    if (slope > -0.15 && slope <= 0.15)
      bc.verdict = BraggVerdict::Atom;
    else if (slope < -0.35)
      bc.verdict = BraggVerdict::NoAtom;
    else
      bc.verdict = BraggVerdict::Inconclusive;
  });
  return out;
}

ConsistentPhaseReport consistent_phase_check(const SampledSequence& f, const WindowFamily& w,
                                             std::int64_t L, const std::vector<double>& thetas) {
  auto gamma = autocorrelation(f, w, L);
  ConsistentPhaseReport rep;
  for (double theta : thetas) {
    PhasePair p;
    p.theta = theta;
    p.fb_mass = std::norm(fourier_bohr(f, theta, w).final);
    p.atom_mass = wiener_atom_mass(gamma, theta);
    p.gap = std::abs(p.fb_mass - p.atom_mass);
    rep.max_gap = std::max(rep.max_gap, p.gap);
    rep.pairs.push_back(p);
  }
  return rep;
}

double min_toeplitz_eigenvalue(const Autocorrelation& gamma, std::size_t max_dim) {
  const std::int64_t L = gamma.max_lag();
  const std::size_t dim = std::min<std::size_t>(static_cast<std::size_t>(L) + 1, max_dim);
  Eigen::MatrixXcd m(dim, dim);
  for (std::size_t s = 0; s < dim; ++s)
    for (std::size_t t = 0; t < dim; ++t)
      m(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) =
          gamma.at(static_cast<std::int64_t>(s) - static_cast<std::int64_t>(t));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace eberlein

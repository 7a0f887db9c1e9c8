#include "eberlein/hilbert.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eberlein/parallel.hpp"

namespace eberlein {

double TranslateFamily::max_sup_norm() const {
  double m = 0.0;
  for (const auto& s : base) m = std::max(m, s.sup_norm_bound);
  return m;
}

GramMatrix gram(const TranslateFamily& fam, const WindowFamily& w) {
  if (fam.base.empty() || fam.shifts.empty())
    throw std::invalid_argument("gram: family must have sequences and shifts");
  const std::size_t dim = fam.size();
  std::vector<SampledSequence> members;
  members.reserve(dim);
  for (const auto& f : fam.base)
    for (std::int64_t s : fam.shifts) members.push_back(translate(f, s));

  GramMatrix g;
  g.dim = dim;
  g.window_label = w.label();
  g.n_used = w.largest().length();
  g.entries.assign(dim * dim, Complex{});
  parallel_for(dim * dim, [&](std::size_t idx) {
    std::size_t i = idx / dim, j = idx % dim;
    g.entries[idx] = correlate_lag(members[i], members[j], w, 0).final;
  });

  double defect = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      Complex a = g.entries[i * dim + j], b = g.entries[j * dim + i];
      defect = std::max(defect, std::abs(a - std::conj(b)));
      Complex sym = 0.5 * (a + std::conj(b));
      g.entries[i * dim + j] = sym;
      g.entries[j * dim + i] = std::conj(sym);
    }
  g.hermiticity_defect = defect;
  return g;
}

double min_eigenvalue(const GramMatrix& g) {
  Eigen::MatrixXcd m(g.dim, g.dim);
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < g.dim; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g.at(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

CheckReport shift_unitarity_check(const TranslateFamily& fam, const WindowFamily& w,
                                  std::int64_t t0) {
  TranslateFamily shifted = fam;
  for (auto& s : shifted.shifts) s += t0;
  GramMatrix lhs = gram(shifted, w);
  GramMatrix rhs = gram(fam, w);

  double sup = fam.max_sup_norm();
  CheckReport rep;
  rep.bound = 2.0 * sup * sup * static_cast<double>(std::abs(t0)) /
                  static_cast<double>(w.largest().length()) +
              1e-13;
  rep.pass = true;
  for (std::size_t i = 0; i < lhs.entries.size(); ++i) {
    double gap = std::abs(lhs.entries[i] - rhs.entries[i]);
    rep.max_gap = std::max(rep.max_gap, gap);
    if (gap > rep.bound) rep.pass = false;
  }
  rep.detail = "gram shifted by " + std::to_string(t0) + " vs gram";
  return rep;
}

SpectralMeasureEstimate spectral_measure_of_vector(const SampledSequence& f,
                                                   const WindowFamily& w, std::int64_t L,
                                                   const HerglotzOptions& opts) {
  return herglotz_invert(autocorrelation(f, w, L), opts);
}

namespace {

enum class DominantPart { PurePoint, AbsolutelyContinuous, SingularContinuous };

DominantPart dominant(const SpectralMeasureEstimate& est) {
  double pp = est.atom_mass_sum();
  if (pp >= est.ac_integral && pp >= est.residual_sc_mass) return DominantPart::PurePoint;
  if (est.ac_integral >= est.residual_sc_mass) return DominantPart::AbsolutelyContinuous;
  return DominantPart::SingularContinuous;
}

bool atom_sets_disjoint(const SpectralMeasureEstimate& a, const SpectralMeasureEstimate& b) {
  for (const auto& x : a.atoms)
    for (const auto& y : b.atoms)
      if (std::abs(x.theta - y.theta) < 1e-9) return false;
  return true;
}

}  // namespace

OrthogonalityReport orthogonality_vs_singularity_check(const SampledSequence& f,
                                                       const SampledSequence& g,
                                                       const WindowFamily& w, std::int64_t L,
                                                       const HerglotzOptions& opts) {
  OrthogonalityReport rep;
  rep.rho_f = spectral_measure_of_vector(f, w, L, opts);
  rep.rho_g = spectral_measure_of_vector(g, w, L, opts);

  auto cross = reflected_eberlein(f, g, w, symmetric_lags(L));
  for (std::size_t i = 0; i < cross.final.size(); ++i) {
    rep.sup_cross = std::max(rep.sup_cross, std::abs(cross.final[i]));
    rep.cross_defect = std::max(rep.cross_defect, cross.cauchy_defect[i]);
  }

  DominantPart df = dominant(rep.rho_f), dg = dominant(rep.rho_g);
  if (df != dg) {
    rep.mutually_singular_estimate = true;  // dominant parts of distinct spectral type
  } else if (df == DominantPart::PurePoint) {
    rep.mutually_singular_estimate = atom_sets_disjoint(rep.rho_f, rep.rho_g);
  } else {
    rep.mutually_singular_estimate = false;  // ac/ac and sc/sc cannot be told apart
  }

  const double tol = 10.0 * f.sup_norm_bound * g.sup_norm_bound /
                     std::sqrt(static_cast<double>(w.largest().length()));
  bool orthogonal = rep.sup_cross <= tol;
  rep.consistent = !rep.mutually_singular_estimate || orthogonal;
  rep.converse_failure_witness = orthogonal && !rep.mutually_singular_estimate;
  rep.note = rep.converse_failure_witness
                 ? "orthogonal on the data without mutually singular spectral estimates"
                 : "";
  return rep;
}

double FiniteKernel::l1_norm() const {
  double s = 0.0;
  for (const auto& z : taps) s += std::abs(z);
  return s;
}

SampledSequence convolve(const SampledSequence& mu, const FiniteKernel& phi) {
  if (phi.taps.empty()) throw std::invalid_argument("convolve: empty kernel");
  const Interval sup = mu.support();
  const std::int64_t off_lo = phi.start, off_hi = phi.start + phi.width() - 1;
  Interval out_support{sup.lo + off_hi, sup.hi + off_lo};
  if (out_support.hi < out_support.lo)
    throw std::out_of_range("convolve: kernel wider than the sample support");
  SampledSequence out;
  out.start = out_support.lo;
  out.values.assign(static_cast<std::size_t>(out_support.length()), Complex{});
  const Complex* mp = mu.values.data() - mu.start;
  for (std::int64_t k = out_support.lo; k <= out_support.hi; ++k) {
    Complex acc{};
    for (std::int64_t u = off_lo; u <= off_hi; ++u)
      acc += phi.taps[static_cast<std::size_t>(u - phi.start)] * mp[k - u];
    out.values[static_cast<std::size_t>(k - out_support.lo)] = acc;
  }
  out.sup_norm_bound = mu.sup_norm_bound * phi.l1_norm();
  return out;
}

CheckReport smoothing_equivalence_check(const SampledSequence& mu, const FiniteKernel& phi,
                                        const FiniteKernel& psi, const WindowFamily& w,
                                        const std::vector<std::int64_t>& lags) {
  if (lags.empty()) throw std::invalid_argument("smoothing_equivalence_check: empty lag grid");
  SampledSequence left1 = convolve(mu, phi);
  SampledSequence left2 = convolve(mu, psi);
  auto lhs = reflected_eberlein(left1, left2, w, lags);

  // right side: lag grid enlarged by the kernel offsets, then finite convolution
  const std::int64_t phi_lo = phi.start, phi_hi = phi.start + phi.width() - 1;
  const std::int64_t psi_lo = psi.start, psi_hi = psi.start + psi.width() - 1;
  auto [tmin_it, tmax_it] = std::minmax_element(lags.begin(), lags.end());
  std::int64_t need_lo = *tmin_it - phi_hi + psi_lo;
  std::int64_t need_hi = *tmax_it - phi_lo + psi_hi;
  std::vector<std::int64_t> wide;
  for (std::int64_t t = need_lo; t <= need_hi; ++t) wide.push_back(t);
  auto base = reflected_eberlein(mu, mu, w, wide);
  auto h_at = [&](std::int64_t t) { return base.final[static_cast<std::size_t>(t - need_lo)]; };

  double max_abs_offset = 0.0;
  for (std::int64_t u = phi_lo; u <= phi_hi; ++u)
    max_abs_offset = std::max(max_abs_offset, static_cast<double>(std::abs(u)));

  CheckReport rep;
  rep.bound = 2.0 * mu.sup_norm_bound * mu.sup_norm_bound * phi.l1_norm() * psi.l1_norm() *
                  max_abs_offset / static_cast<double>(w.largest().length()) +
              1e-13;
  rep.pass = true;
  for (std::size_t i = 0; i < lags.size(); ++i) {
    Complex rhs{};
    for (std::int64_t u = phi_lo; u <= phi_hi; ++u)
      for (std::int64_t v = psi_lo; v <= psi_hi; ++v)
        rhs += phi.taps[static_cast<std::size_t>(u - phi.start)] *
               std::conj(psi.taps[static_cast<std::size_t>(v - psi.start)]) *
               h_at(lags[i] + v - u);
    double gap = std::abs(lhs.final[i] - rhs);
    rep.max_gap = std::max(rep.max_gap, gap);
    if (gap > rep.bound) rep.pass = false;
  }
  rep.detail = "two-path smoothing identity on the final window";
  return rep;
}

}  // namespace eberlein

#include "eberlein/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "eberlein/parallel.hpp"

namespace eberlein {

namespace {

[[noreturn]] void support_error(const Interval& need, const Interval& have, const char* what) {
  std::ostringstream os;
  os << what << ": need samples on [" << need.lo << "," << need.hi << "] but support is ["
     << have.lo << "," << have.hi << "]";
  throw std::out_of_range(os.str());
}

void require_cover(const SampledSequence& s, const Interval& need, const char* what) {
  if (!s.covers(need)) support_error(need, s.support(), what);
}

// Capture positions for prefix sums: each window needs S(a-1) and S(b).
struct Capture {
  std::int64_t pos;
  std::size_t slot;  // 2*window + (0 = low, 1 = high)
};

std::vector<Capture> capture_plan(const WindowFamily& w) {
  std::vector<Capture> caps;
  caps.reserve(2 * w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    caps.push_back({w.interval(j).lo - 1, 2 * j});
    caps.push_back({w.interval(j).hi, 2 * j + 1});
  }
  std::sort(caps.begin(), caps.end(),
            [](const Capture& x, const Capture& y) { return x.pos < y.pos; });
  return caps;
}

// Single accumulation pass over the hull; prefix sums are captured at window
// endpoints. seg(lo, hi) returns the sum of the term over [lo, hi]; segments
// are visited in ascending order, so the summation order is frozen.
template <class Scalar, class SegmentSum>
std::vector<Complex> windowed_means(const WindowFamily& w, SegmentSum seg) {
  const Interval hull = w.hull();
  const auto caps = capture_plan(w);
  std::vector<Scalar> at(2 * w.size(), Scalar{});
  std::size_t ci = 0;
  while (ci < caps.size() && caps[ci].pos < hull.lo) at[caps[ci++].slot] = Scalar{};
  Scalar run{};
  std::int64_t prev = hull.lo;
  while (ci < caps.size()) {
    const std::int64_t p = caps[ci].pos;
    if (p >= prev) {
      run += seg(prev, p);
      prev = p + 1;
    }
    while (ci < caps.size() && caps[ci].pos == p) at[caps[ci++].slot] = run;
  }
  std::vector<Complex> out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    Scalar s = at[2 * j + 1] - at[2 * j];
    out[j] = Complex(s) / static_cast<double>(w.interval(j).length());
  }
  return out;
}

// Four independent accumulator lanes keep the FMA chain from serializing;
// the lane layout is a pure function of the segment bounds, so results are
// reproducible across runs and thread counts.
double real_product_segment(const double* x, const double* y, std::int64_t n) {
  double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
  std::int64_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += x[i] * y[i];
    s1 += x[i + 1] * y[i + 1];
    s2 += x[i + 2] * y[i + 2];
    s3 += x[i + 3] * y[i + 3];
  }
  for (; i < n; ++i) s0 += x[i] * y[i];
  return (s0 + s1) + (s2 + s3);
}

Complex complex_product_segment(const Complex* x, const Complex* y, std::int64_t n) {
  Complex s0{}, s1{};
  std::int64_t i = 0;
  for (; i + 2 <= n; i += 2) {
    s0 += x[i] * std::conj(y[i]);
    s1 += x[i + 1] * std::conj(y[i + 1]);
  }
  for (; i < n; ++i) s0 += x[i] * std::conj(y[i]);
  return s0 + s1;
}

std::vector<double> real_parts(const SampledSequence& s) {
  std::vector<double> out(s.values.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.values[i].real();
  return out;
}

// Shared per-call state so the real-valued arrays are extracted once, not per
// lag.
struct CorrelationEngine {
  const SampledSequence& f;
  const SampledSequence& g;
  const WindowFamily& w;
  bool real_path;
  std::vector<double> fr, gr;

  CorrelationEngine(const SampledSequence& f_, const SampledSequence& g_, const WindowFamily& w_)
      : f(f_), g(g_), w(w_), real_path(f_.is_real() && g_.is_real()) {
    if (real_path) {
      fr = real_parts(f);
      gr = real_parts(g);
    }
  }

  std::vector<Complex> lag_values(std::int64_t t) const {
    const Interval hull = w.hull();
    require_cover(f, hull, "reflected_eberlein (left factor)");
    require_cover(g, hull.shifted(-t), "reflected_eberlein (right factor)");
    if (real_path) {
      const double* fp = fr.data() - f.start;
      const double* gp = gr.data() - g.start;
      return windowed_means<double>(w, [fp, gp, t](std::int64_t lo, std::int64_t hi) {
        return real_product_segment(fp + lo, gp + lo - t, hi - lo + 1);
      });
    }
    const Complex* fp = f.values.data() - f.start;
    const Complex* gp = g.values.data() - g.start;
    return windowed_means<Complex>(w, [fp, gp, t](std::int64_t lo, std::int64_t hi) {
      return complex_product_segment(fp + lo, gp + lo - t, hi - lo + 1);
    });
  }
};

SeriesEstimate to_series(std::vector<Complex> vals) {
  SeriesEstimate est;
  est.final = vals.back();
  est.defect = cauchy_defect(vals);
  est.per_window = std::move(vals);
  return est;
}

}  // namespace

SeriesEstimate mean(const SampledSequence& f, const WindowFamily& w) {
  require_cover(f, w.hull(), "mean");
  if (f.is_real()) {
    std::vector<double> fr = real_parts(f);
    const double* fp = fr.data() - f.start;
    return to_series(windowed_means<double>(w, [fp](std::int64_t lo, std::int64_t hi) {
      double s = 0;
      for (std::int64_t k = lo; k <= hi; ++k) s += fp[k];
      return s;
    }));
  }
  const Complex* fp = f.values.data() - f.start;
  return to_series(windowed_means<Complex>(w, [fp](std::int64_t lo, std::int64_t hi) {
    Complex s{};
    for (std::int64_t k = lo; k <= hi; ++k) s += fp[k];
    return s;
  }));
}

SeriesEstimate correlate_lag(const SampledSequence& f, const SampledSequence& g,
                             const WindowFamily& w, std::int64_t t) {
  return to_series(CorrelationEngine(f, g, w).lag_values(t));
}

std::size_t CorrelationEstimate::lag_index(std::int64_t t) const {
  auto it = std::find(lags.begin(), lags.end(), t);
  if (it == lags.end())
    throw std::out_of_range("CorrelationEstimate: lag " + std::to_string(t) + " not on the grid");
  return static_cast<std::size_t>(it - lags.begin());
}

CorrelationEstimate reflected_eberlein(const SampledSequence& f, const SampledSequence& g,
                                       const WindowFamily& w,
                                       const std::vector<std::int64_t>& lags) {
  if (lags.empty()) throw std::invalid_argument("reflected_eberlein: empty lag grid");
  const Interval hull = w.hull();
  require_cover(f, hull, "reflected_eberlein (left factor)");
  for (std::int64_t t : lags)
    require_cover(g, hull.shifted(-t), "reflected_eberlein (right factor)");

  CorrelationEstimate est;
  est.lags = lags;
  est.values.resize(lags.size());
  est.final.resize(lags.size());
  est.cauchy_defect.resize(lags.size());
  const CorrelationEngine engine(f, g, w);
  parallel_for(lags.size(), [&](std::size_t i) {
    auto vals = engine.lag_values(lags[i]);
    est.final[i] = vals.back();
    est.cauchy_defect[i] = cauchy_defect(vals);
    est.values[i] = std::move(vals);
  });
  return est;
}

std::vector<std::int64_t> symmetric_lags(std::int64_t L) {
  if (L < 0) throw std::invalid_argument("symmetric_lags: L must be >= 0");
  std::vector<std::int64_t> lags;
  lags.reserve(static_cast<std::size_t>(2 * L + 1));
  for (std::int64_t t = -L; t <= L; ++t) lags.push_back(t);
  return lags;
}

const Complex& Autocorrelation::at(std::int64_t t) const {
  std::int64_t L = max_lag();
  if (t < -L || t > L)
    throw std::out_of_range("Autocorrelation: lag " + std::to_string(t) + " beyond cutoff " +
                            std::to_string(L));
  return gamma[static_cast<std::size_t>(t + L)];
}

Autocorrelation autocorrelation(const SampledSequence& f, const WindowFamily& w, std::int64_t L) {
  auto est = reflected_eberlein(f, f, w, symmetric_lags(L));
  Autocorrelation ac;
  ac.lags = est.lags;
  ac.window_label = w.label();
  ac.n_used = w.largest().length();
  ac.gamma.resize(est.final.size());
  const std::size_t n = est.final.size();
  for (std::size_t i = 0; i < n; ++i) {
    // hermitian symmetrization; the asymmetry is pure boundary noise
    ac.gamma[i] = 0.5 * (est.final[i] + std::conj(est.final[n - 1 - i]));
  }
  return ac;
}

namespace {

SampledSequence linear_combination(Complex a, const SampledSequence& f, Complex b,
                                   const SampledSequence& h) {
  Interval sf = f.support(), sh = h.support();
  Interval common{std::max(sf.lo, sh.lo), std::min(sf.hi, sh.hi)};
  if (common.hi < common.lo)
    throw std::invalid_argument("linear_combination: disjoint supports");
  SampledSequence out;
  out.start = common.lo;
  out.values.reserve(static_cast<std::size_t>(common.length()));
  for (std::int64_t k = common.lo; k <= common.hi; ++k)
    out.values.push_back(a * f.at(k) + b * h.at(k));
  out.sup_norm_bound = std::abs(a) * f.sup_norm_bound + std::abs(b) * h.sup_norm_bound;
  return out;
}

}  // namespace

CheckReport sesquilinearity_check(const SampledSequence& f, const SampledSequence& g,
                                  const SampledSequence& h, Complex a, Complex b,
                                  const WindowFamily& w, const std::vector<std::int64_t>& lags) {
  auto combined = linear_combination(a, f, b, h);
  auto lhs = reflected_eberlein(combined, g, w, lags);
  auto cf = reflected_eberlein(f, g, w, lags);
  auto ch = reflected_eberlein(h, g, w, lags);

  double scale =
      (std::abs(a) * f.sup_norm_bound + std::abs(b) * h.sup_norm_bound) * g.sup_norm_bound;
  if (scale == 0.0) scale = 1.0;
  CheckReport rep;
  for (std::size_t i = 0; i < lags.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) {
      double gap = std::abs(lhs.values[i][j] - (a * cf.values[i][j] + b * ch.values[i][j]));
      rep.max_gap = std::max(rep.max_gap, gap);
    }
  rep.bound = 1e-12 * scale;
  rep.pass = rep.max_gap <= rep.bound;
  rep.detail = "relative gap " + std::to_string(rep.max_gap / scale);
  return rep;
}

CheckReport translation_covariance_check(const SampledSequence& f, const SampledSequence& g,
                                         std::int64_t t0, const WindowFamily& w,
                                         const std::vector<std::int64_t>& lags) {
  auto lhs = reflected_eberlein(translate(f, t0), g, w, lags);
  std::vector<std::int64_t> shifted;
  shifted.reserve(lags.size());
  for (std::int64_t t : lags) shifted.push_back(t - t0);
  auto rhs = reflected_eberlein(f, g, w, shifted);

  const double c = 2.0 * f.sup_norm_bound * g.sup_norm_bound * static_cast<double>(std::abs(t0));
  CheckReport rep;
  rep.pass = true;
  for (std::size_t i = 0; i < lags.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) {
      double gap = std::abs(lhs.values[i][j] - rhs.values[i][j]);
      double bound = c / static_cast<double>(w.interval(j).length()) + 1e-14;
      if (gap > rep.max_gap) {
        rep.max_gap = gap;
        rep.bound = bound;
      }
      if (gap > bound) rep.pass = false;
    }
  rep.detail = "boundary-shift bound 2·sup|f|·sup|g|·|t0|/|A_n|";
  return rep;
}

double psd_tolerance(double sup_norm, std::size_t dim, std::int64_t n_used) {
  return 10.0 * sup_norm * sup_norm * static_cast<double>(dim) * static_cast<double>(dim) /
         static_cast<double>(n_used);
}

}  // namespace eberlein

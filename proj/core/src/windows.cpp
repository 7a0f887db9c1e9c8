#include "eberlein/windows.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eberlein {

WindowFamily::WindowFamily(WindowKind kind, std::vector<Interval> intervals, std::string label)
    : kind_(kind), intervals_(std::move(intervals)), label_(std::move(label)) {
  if (intervals_.empty()) throw std::invalid_argument("WindowFamily: no intervals");
  std::int64_t prev_len = 0;
  for (const auto& iv : intervals_) {
    if (iv.hi < iv.lo) throw std::invalid_argument("WindowFamily: empty interval");
    if (iv.length() <= prev_len)
      throw std::invalid_argument("WindowFamily: lengths must be strictly increasing");
    prev_len = iv.length();
  }
}

const Interval& WindowFamily::interval(std::size_t n) const {
  if (n >= intervals_.size()) throw std::out_of_range("WindowFamily: index out of range");
  return intervals_[n];
}

Interval WindowFamily::hull() const {
  Interval h = intervals_.front();
  for (const auto& iv : intervals_) {
    h.lo = std::min(h.lo, iv.lo);
    h.hi = std::max(h.hi, iv.hi);
  }
  return h;
}

WindowFamily WindowFamily::select(const std::vector<std::size_t>& indices) const {
  if (indices.empty()) throw std::invalid_argument("WindowFamily::select: empty selection");
  std::vector<Interval> sel;
  sel.reserve(indices.size());
  std::size_t prev = 0;
  bool first = true;
  for (std::size_t i : indices) {
    if (!first && i <= prev)
      throw std::invalid_argument("WindowFamily::select: indices must be strictly increasing");
    sel.push_back(interval(i));
    prev = i;
    first = false;
  }
  return WindowFamily(kind_, std::move(sel), label_);
}

WindowFamily WindowFamily::thin(std::size_t max_count) const {
  if (max_count == 0) throw std::invalid_argument("WindowFamily::thin: max_count must be positive");
  if (intervals_.size() <= max_count) return *this;
  std::vector<std::size_t> idx;
  idx.reserve(max_count);
  // evenly spaced, last window always kept
  for (std::size_t j = 1; j <= max_count; ++j) {
    std::size_t i = j * intervals_.size() / max_count - 1;
    if (idx.empty() || i > idx.back()) idx.push_back(i);
  }
  return select(idx);
}

WindowFamily make_prefix(std::int64_t max_n) {
  if (max_n < 1) throw std::invalid_argument("make_prefix: max_n must be >= 1");
  std::vector<Interval> ivs;
  ivs.reserve(static_cast<std::size_t>(max_n));
  for (std::int64_t n = 1; n <= max_n; ++n) ivs.push_back({1, n});
  return WindowFamily(WindowKind::Prefix, std::move(ivs), "prefix:" + std::to_string(max_n));
}

WindowFamily make_symmetric(std::int64_t max_n) {
  if (max_n < 1) throw std::invalid_argument("make_symmetric: max_n must be >= 1");
  std::vector<Interval> ivs;
  ivs.reserve(static_cast<std::size_t>(max_n));
  for (std::int64_t n = 1; n <= max_n; ++n) ivs.push_back({-n, n});
  return WindowFamily(WindowKind::Symmetric, std::move(ivs), "symmetric:" + std::to_string(max_n));
}

std::int64_t boundary_cardinality(const Interval& a, std::int64_t K) {
  if (K < 1) throw std::invalid_argument("boundary_cardinality: K must be >= 1");
  if (a.hi < a.lo) throw std::invalid_argument("boundary_cardinality: empty interval");
  // Every boundary point lies within distance K of the interval, so scanning
  // [lo-K, hi+K] enumerates both defining sets exactly.
  std::int64_t count = 0;
  for (std::int64_t x = a.lo - K; x <= a.hi + K; ++x) {
    bool in_a = a.contains(x);
    if (!in_a) {
      // x ∈ (A + K) \ A  ⟺  some x - k with k ∈ [-K, K] lands in A
      bool hits = false;
      for (std::int64_t k = -K; k <= K && !hits; ++k) hits = a.contains(x - k);
      if (hits) ++count;
    } else {
      // x ∈ ((complement − K) ∩ A)  ⟺  some x + k with k ∈ [-K, K] escapes A
      bool escapes = false;
      for (std::int64_t k = -K; k <= K && !escapes; ++k) escapes = !a.contains(x + k);
      if (escapes) ++count;
    }
  }
  return count;
}

double boundary_ratio(const WindowFamily& w, std::size_t n, std::int64_t K) {
  const Interval& iv = w.interval(n);
  return static_cast<double>(boundary_cardinality(iv, K)) / static_cast<double>(iv.length());
}

double cauchy_defect(const std::vector<Complex>& v) {
  if (v.size() < 2) return 0.0;
  std::size_t start = v.size() - std::max<std::size_t>(v.size() / 4, 1) - 1;
  double d = 0.0;
  for (std::size_t i = start; i + 1 < v.size(); ++i) d = std::max(d, std::abs(v[i + 1] - v[i]));
  return d;
}

namespace {

std::vector<Complex> take(const std::vector<Complex>& v, const std::vector<std::size_t>& idx) {
  std::vector<Complex> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(v[i]);
  return out;
}

}  // namespace

DiagonalizationResult extract_convergent_subsequence(
    const WindowFamily& w, const std::vector<std::vector<Complex>>& values_per_lag,
    const std::vector<std::int64_t>& lags, double tol) {
  if (values_per_lag.size() != lags.size())
    throw std::invalid_argument("extract_convergent_subsequence: one value row per lag required");
  if (tol <= 0) throw std::invalid_argument("extract_convergent_subsequence: tol must be positive");

  std::vector<std::size_t> current(w.size());
  for (std::size_t i = 0; i < current.size(); ++i) current[i] = i;

  DiagonalizationResult result{SubsequenceSelector{w, {}}, false, {}};
  for (std::size_t li = 0; li < lags.size(); ++li) {
    const auto& row = values_per_lag[li];
    if (row.size() != w.size())
      throw std::invalid_argument("extract_convergent_subsequence: value row size mismatch");
    if (cauchy_defect(take(row, current)) <= tol) continue;  // already Cauchy along survivors

    // Greedy chain, earliest admissible start first.
    bool found = false;
    for (std::size_t s = 0; s + 1 < current.size() && !found; ++s) {
      std::vector<std::size_t> chain{current[s]};
      for (std::size_t j = s + 1; j < current.size(); ++j) {
        if (std::abs(row[current[j]] - row[chain.back()]) <= tol) chain.push_back(current[j]);
      }
      if (chain.size() >= 2 && cauchy_defect(take(row, chain)) <= tol) {
        current = std::move(chain);
        found = true;
      }
    }
    if (!found) {
      result.exhausted = true;
      result.note = "no Cauchy subsequence within tol for lag " + std::to_string(lags[li]) +
                    " in the stored range";
      break;
    }
  }
  result.selector.indices = std::move(current);
  return result;
}

}  // namespace eberlein

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace eberlein {

using Complex = std::complex<double>;

/// Closed integer interval [lo, hi].
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t length() const { return hi - lo + 1; }
  bool contains(std::int64_t k) const { return lo <= k && k <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  Interval shifted(std::int64_t t) const { return {lo + t, hi + t}; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class WindowKind { Prefix, Symmetric, Custom };

/// A van Hove sequence of integer intervals A_1 ⊂ ... with strictly
/// increasing lengths. All averaging in the toolkit runs along one of these.
class WindowFamily {
 public:
  WindowFamily(WindowKind kind, std::vector<Interval> intervals, std::string label);

  WindowKind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  const Interval& interval(std::size_t n) const;
  const Interval& largest() const { return intervals_.back(); }

  /// Smallest interval containing every window.
  Interval hull() const;

  /// Family restricted to the given (strictly increasing) indices.
  WindowFamily select(const std::vector<std::size_t>& indices) const;

  /// At most max_count windows, evenly spaced, always keeping the last.
  WindowFamily thin(std::size_t max_count) const;

 private:
  WindowKind kind_;
  std::vector<Interval> intervals_;
  std::string label_;
};

/// Windows [1,1], [1,2], ..., [1,max_n].
WindowFamily make_prefix(std::int64_t max_n);

/// Windows [-1,1], [-2,2], ..., [-max_n, max_n].
WindowFamily make_symmetric(std::int64_t max_n);

/// Cardinality of the K-boundary of an interval, computed by literal set
/// arithmetic from the definition (closure(A+K) \ A) ∪ ((complement − K) ∩ A)
/// with the compact set K = [-K, K]. Closure is the identity on ℤ.
std::int64_t boundary_cardinality(const Interval& a, std::int64_t K);

/// |∂^K A_n| / |A_n| for the n-th window.
double boundary_ratio(const WindowFamily& w, std::size_t n, std::int64_t K);

/// Strictly increasing indices into a parent family.
struct SubsequenceSelector {
  WindowFamily parent;
  std::vector<std::size_t> indices;

  WindowFamily materialize() const { return parent.select(indices); }
};

struct DiagonalizationResult {
  SubsequenceSelector selector;
  bool exhausted = false;     // no admissible subsequence within the stored range
  std::string note;
};

/// Convergence diagnostic used throughout: max |v_{n+1} - v_n| over the last
/// quarter of the entries (0 for fewer than two entries).
double cauchy_defect(const std::vector<Complex>& v);

/// Diagonal subsequence extraction: for each lag (in enumeration order) finds
/// a subsequence of the surviving indices along which the values are Cauchy
/// within tol, preferring the earliest admissible start index. "Cauchy within
/// tol" means the max successive difference over the last quarter of the
/// selected values is at most tol.
DiagonalizationResult extract_convergent_subsequence(
    const WindowFamily& w,
    const std::vector<std::vector<Complex>>& values_per_lag,
    const std::vector<std::int64_t>& lags, double tol);

}  // namespace eberlein

// Independent oracles used by the unit and acceptance suites. These stay on
// their own code paths: set enumeration instead of interval arithmetic, the
// literature recursion instead of windowed sums, single-period DFT instead of
// Wiener means, plain string rewriting instead of the production machinery.
#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "eberlein/windows.hpp"

namespace oracles {

using eberlein::Complex;
using eberlein::Interval;

// gamma(0) = 1, gamma(2n) = gamma(n), gamma(2n+1) = -(gamma(n)+gamma(n+1))/2
inline std::vector<double> thue_morse_gamma(std::int64_t L) {
  std::vector<double> g(static_cast<std::size_t>(L) + 2, 0.0);
  g[0] = 1.0;
  if (L >= 1) g[1] = -1.0 / 3.0;
  for (std::int64_t j = 2; j <= L + 1; ++j) {
    if (j % 2 == 0)
      g[static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(j / 2)];
    else {
      std::int64_t n = (j - 1) / 2;
      g[static_cast<std::size_t>(j)] =
          -(g[static_cast<std::size_t>(n)] + g[static_cast<std::size_t>(n + 1)]) / 2.0;
    }
  }
  g.resize(static_cast<std::size_t>(L) + 1);
  return g;
}

// |partial K-boundary| by materializing the two defining sets over a wide
// scan range: (closure(A+K) \ A) ∪ ((complement - K) ∩ closure(A)).
inline std::int64_t boundary_cardinality_brute(const Interval& a, std::int64_t K) {
  std::set<std::int64_t> a_plus_k;  // A + [-K, K]
  for (std::int64_t x = a.lo; x <= a.hi; ++x)
    for (std::int64_t k = -K; k <= K; ++k) a_plus_k.insert(x + k);
  std::set<std::int64_t> first;
  for (std::int64_t x : a_plus_k)
    if (!(a.lo <= x && x <= a.hi)) first.insert(x);

  // (complement - K) ∩ A within a scan range wide enough to see every element
  std::set<std::int64_t> second;
  for (std::int64_t y = a.lo - 3 * K - 2; y <= a.hi + 3 * K + 2; ++y) {
    if (a.lo <= y && y <= a.hi) continue;  // y in the complement only
    for (std::int64_t k = -K; k <= K; ++k) {
      std::int64_t x = y - k;
      if (a.lo <= x && x <= a.hi) second.insert(x);
    }
  }
  std::set<std::int64_t> boundary;  // union
  for (std::int64_t x : first) boundary.insert(x);
  for (std::int64_t x : second) boundary.insert(x);
  return static_cast<std::int64_t>(boundary.size());
}

// diffraction atom masses of a period-p pattern: |DFT(one period)/p|²
inline std::vector<double> periodic_atom_masses(const std::vector<Complex>& pattern) {
  const std::size_t p = pattern.size();
  std::vector<double> masses(p);
  for (std::size_t k = 0; k < p; ++k) {
    Complex a{};
    for (std::size_t j = 0; j < p; ++j)
      a += pattern[j] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k * j) /
                                            static_cast<double>(p));
    masses[k] = std::norm(a / static_cast<double>(p));
  }
  return masses;
}

// plain string rewriting of a -> ab, b -> a
inline std::string fibonacci_word_brute(std::size_t min_len) {
  std::string w = "a";
  while (w.size() < min_len) {
    std::string next;
    for (char c : w) next += (c == 'a') ? "ab" : "a";
    w = next;
  }
  return w;
}

}  // namespace oracles

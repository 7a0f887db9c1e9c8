#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eberlein/windows.hpp"

namespace eberlein {

/// A bounded complex-valued function on a finite integer window; the ℤ
/// realization of a translation-bounded measure.
struct SampledSequence {
  std::int64_t start = 0;
  std::vector<Complex> values;
  double sup_norm_bound = 0.0;

  Interval support() const {
    return {start, start + static_cast<std::int64_t>(values.size()) - 1};
  }
  bool covers(const Interval& iv) const { return support().contains(iv); }
  const Complex& at(std::int64_t k) const;
  bool is_real() const;
};

/// τ_t f, i.e. (τ_t f)(x) = f(x - t); exact re-indexing, values untouched.
SampledSequence translate(const SampledSequence& f, std::int64_t t);

enum class SpectralType { PurePoint, AbsolutelyContinuous, SingularContinuous };

struct SubstitutionGen {
  std::map<char, std::string> rules;
  std::map<char, Complex> weights;
};
struct BernoulliGen {
  double p = 0.5;
  std::uint64_t seed = 0;
};
struct PeriodicGen {
  std::vector<Complex> pattern;
};
struct CharacterGen {
  double theta = 0.0;  // torus point in [0,1)
};
struct TrigTerm {
  Complex amplitude;
  double theta = 0.0;
};
struct TrigPolynomialGen {
  std::vector<TrigTerm> terms;
};
struct SignGen {};
struct ConstantOneGen {};
struct DiracCombGen {};
struct FibonacciGen {};   // a→ab, b→a with weights +1/−1, two-sided fixed point
struct ThueMorseGen {};   // parity of binary digit sum, mirrored to n < 0
struct CustomGen {
  std::int64_t start = 0;
  std::vector<Complex> samples;
};

using Generator = std::variant<SubstitutionGen, BernoulliGen, PeriodicGen, CharacterGen,
                               TrigPolynomialGen, SignGen, ConstantOneGen, DiracCombGen,
                               FibonacciGen, ThueMorseGen, CustomGen>;

struct SequenceSpec {
  Generator generator;
  std::optional<Interval> support;           // absent = all of ℤ
  std::optional<SpectralType> declared_type; // analytic declaration for experiments
  std::string label;
};

/// Deterministic evaluation of the spec on the window. A pure function of
/// (spec, window): restricting a larger window gives identical values.
SampledSequence generate(const SequenceSpec& spec, const Interval& window);

SampledSequence fibonacci_pm1(const Interval& window);
SampledSequence thue_morse_pm1(const Interval& window);
SampledSequence bernoulli_pm1(double p, std::uint64_t seed, const Interval& window);

/// Some power of the incidence matrix is entrywise positive.
bool is_primitive(const SubstitutionGen& sub);

/// Letter frequencies of the two-sided fixed point, i.e. the normalized
/// Perron eigenvector of the incidence matrix (power iteration).
std::map<char, double> perron_frequencies(const SubstitutionGen& sub);

/// Counter-based uniform in [0,1); the frozen RNG behind BernoulliGen.
double unit_uniform(std::uint64_t seed, std::int64_t k);

void write_sequence_csv(const SampledSequence& s, const std::string& path);
SampledSequence read_sequence_csv(const std::string& path);

}  // namespace eberlein

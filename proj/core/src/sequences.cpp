#include "eberlein/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eberlein {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

[[noreturn]] void support_deficit(const Interval& need, const Interval& have,
                                  const std::string& what) {
  std::ostringstream os;
  os << what << ": need samples on [" << need.lo << "," << need.hi << "] but support is ["
     << have.lo << "," << have.hi << "]";
  throw std::out_of_range(os.str());
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Complex unit_character(double theta, std::int64_t k) {
  // remainder keeps the phase argument small so sin/cos stay accurate
  double frac = std::remainder(theta * static_cast<double>(k), 1.0);
  return std::polar(1.0, kTwoPi * frac);
}

// ---- substitution machinery ----

std::vector<char> alphabet_of(const SubstitutionGen& sub) {
  std::set<char> letters;
  for (const auto& [c, word] : sub.rules) {
    letters.insert(c);
    for (char x : word) letters.insert(x);
  }
  return {letters.begin(), letters.end()};
}

void validate_substitution(const SubstitutionGen& sub) {
  if (sub.rules.empty()) throw std::invalid_argument("substitution: no rules");
  auto alpha = alphabet_of(sub);
  for (char c : alpha) {
    auto it = sub.rules.find(c);
    if (it == sub.rules.end() || it->second.empty())
      throw std::invalid_argument(std::string("substitution: letter '") + c +
                                  "' lacks a nonempty image word");
    if (!sub.weights.count(c))
      throw std::invalid_argument(std::string("substitution: letter '") + c + "' lacks a weight");
  }
  if (!is_primitive(sub)) throw std::invalid_argument("substitution: not primitive");
}

std::string expand(const SubstitutionGen& sub, const std::string& w) {
  std::string out;
  for (char c : w) out += sub.rules.at(c);
  return out;
}

// Smallest (q, letter) such that sigma^q(letter) both starts and ends with the
// letter; the two-sided fixed point of sigma^q seeded from letter|letter is
// the bi-infinite word realized by generate().
std::pair<int, char> fixed_point_seed(const SubstitutionGen& sub) {
  auto alpha = alphabet_of(sub);
  auto first_of = [&](char c) { return sub.rules.at(c).front(); };
  auto last_of = [&](char c) { return sub.rules.at(c).back(); };
  int d = static_cast<int>(alpha.size());
  for (int q = 1; q <= 2 * d * d + 2; ++q) {
    for (char c : alpha) {
      char f = c, l = c;
      for (int i = 0; i < q; ++i) {
        f = first_of(f);
        l = last_of(l);
      }
      if (f == c && l == c) return {q, c};
    }
  }
  throw std::invalid_argument("substitution: no two-sided fixed-point seed found");
}

// Letters of the two-sided fixed point on [lo, hi].
std::string substitution_letters(const SubstitutionGen& sub, const Interval& window) {
  auto [q, seed] = fixed_point_seed(sub);
  auto expand_q = [&](const std::string& w) {
    std::string out = w;
    for (int i = 0; i < q; ++i) out = expand(sub, out);
    return out;
  };
  std::string right(1, seed);
  while (static_cast<std::int64_t>(right.size()) <= std::max<std::int64_t>(window.hi, 0))
    right = expand_q(right);
  std::string left(1, seed);
  while (static_cast<std::int64_t>(left.size()) < std::max<std::int64_t>(-window.lo, 1))
    left = expand_q(left);

  std::string out;
  out.reserve(static_cast<std::size_t>(window.length()));
  for (std::int64_t n = window.lo; n <= window.hi; ++n) {
    if (n >= 0)
      out += right[static_cast<std::size_t>(n)];
    else
      out += left[left.size() + static_cast<std::size_t>(n)];
  }
  return out;
}

double max_weight_modulus(const SubstitutionGen& sub) {
  double m = 0.0;
  for (const auto& [c, w] : sub.weights) m = std::max(m, std::abs(w));
  return m;
}

int thue_morse_value(std::int64_t n) {
  if (n < 0) n = -n - 1;  // reflection convention
  int parity = 0;
  for (std::uint64_t m = static_cast<std::uint64_t>(n); m != 0; m >>= 1) parity ^= (m & 1);
  return parity ? -1 : 1;
}

struct GenerateVisitor {
  const SequenceSpec& spec;
  const Interval& window;

  SampledSequence run(const std::vector<Complex>& vals, double bound) const {
    return SampledSequence{window.lo, vals, bound};
  }

  SampledSequence operator()(const SignGen&) const {
    std::vector<Complex> v;
    v.reserve(window.length());
    for (std::int64_t k = window.lo; k <= window.hi; ++k)
      v.emplace_back(k > 0 ? 1.0 : (k < 0 ? -1.0 : 0.0), 0.0);
    return run(v, 1.0);
  }
  SampledSequence operator()(const ConstantOneGen&) const {
    return run(std::vector<Complex>(window.length(), Complex{1.0, 0.0}), 1.0);
  }
  SampledSequence operator()(const DiracCombGen&) const {
    return run(std::vector<Complex>(window.length(), Complex{1.0, 0.0}), 1.0);
  }
  SampledSequence operator()(const CharacterGen& g) const {
    std::vector<Complex> v;
    v.reserve(window.length());
    for (std::int64_t k = window.lo; k <= window.hi; ++k) v.push_back(unit_character(g.theta, k));
    return run(v, 1.0);
  }
  SampledSequence operator()(const TrigPolynomialGen& g) const {
    std::vector<Complex> v(window.length(), Complex{0.0, 0.0});
    for (const auto& term : g.terms) {
      std::size_t i = 0;
      for (std::int64_t k = window.lo; k <= window.hi; ++k, ++i)
        v[i] += term.amplitude * unit_character(term.theta, k);
    }
    double bound = 0.0;
    for (const auto& term : g.terms) bound += std::abs(term.amplitude);
    return run(v, bound);
  }
  SampledSequence operator()(const PeriodicGen& g) const {
    if (g.pattern.empty()) throw std::invalid_argument("periodic generator: empty pattern");
    const auto p = static_cast<std::int64_t>(g.pattern.size());
    std::vector<Complex> v;
    v.reserve(window.length());
    for (std::int64_t k = window.lo; k <= window.hi; ++k) {
      std::int64_t r = ((k % p) + p) % p;
      v.push_back(g.pattern[static_cast<std::size_t>(r)]);
    }
    double bound = 0.0;
    for (const auto& z : g.pattern) bound = std::max(bound, std::abs(z));
    return run(v, bound);
  }
  SampledSequence operator()(const BernoulliGen& g) const {
    if (!(g.p >= 0.0 && g.p <= 1.0))
      throw std::invalid_argument("bernoulli generator: p must lie in [0,1]");
    std::vector<Complex> v;
    v.reserve(window.length());
    for (std::int64_t k = window.lo; k <= window.hi; ++k)
      v.emplace_back(unit_uniform(g.seed, k) < g.p ? 1.0 : -1.0, 0.0);
    return run(v, 1.0);
  }
  SampledSequence operator()(const SubstitutionGen& g) const {
    validate_substitution(g);
    std::string letters = substitution_letters(g, window);
    std::vector<Complex> v;
    v.reserve(letters.size());
    for (char c : letters) v.push_back(g.weights.at(c));
    return run(v, max_weight_modulus(g));
  }
  SampledSequence operator()(const FibonacciGen&) const { return fibonacci_pm1(window); }
  SampledSequence operator()(const ThueMorseGen&) const { return thue_morse_pm1(window); }
  SampledSequence operator()(const CustomGen& g) const {
    Interval sup{g.start, g.start + static_cast<std::int64_t>(g.samples.size()) - 1};
    if (g.samples.empty() || !sup.contains(window))
      support_deficit(window, g.samples.empty() ? Interval{0, -1} : sup, "custom generator");
    std::vector<Complex> v(g.samples.begin() + (window.lo - g.start),
                           g.samples.begin() + (window.hi - g.start + 1));
    double bound = 0.0;
    for (const auto& z : g.samples) bound = std::max(bound, std::abs(z));
    return run(v, bound);
  }
};

}  // namespace

const Complex& SampledSequence::at(std::int64_t k) const {
  if (!support().contains(k)) support_deficit({k, k}, support(), "SampledSequence::at");
  return values[static_cast<std::size_t>(k - start)];
}

bool SampledSequence::is_real() const {
  for (const auto& z : values)
    if (z.imag() != 0.0) return false;
  return true;
}

SampledSequence translate(const SampledSequence& f, std::int64_t t) {
  SampledSequence out = f;
  out.start += t;
  return out;
}

double unit_uniform(std::uint64_t seed, std::int64_t k) {
  std::uint64_t u = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(k)));
  return static_cast<double>(u >> 11) * 0x1.0p-53;
}

SampledSequence generate(const SequenceSpec& spec, const Interval& window) {
  if (window.hi < window.lo) throw std::invalid_argument("generate: empty window");
  if (spec.support && !spec.support->contains(window))
    support_deficit(window, *spec.support, "generate");
  return std::visit(GenerateVisitor{spec, window}, spec.generator);
}

SampledSequence fibonacci_pm1(const Interval& window) {
  SubstitutionGen fib;
  fib.rules = {{'a', "ab"}, {'b', "a"}};
  fib.weights = {{'a', Complex{1.0, 0.0}}, {'b', Complex{-1.0, 0.0}}};
  std::string letters = substitution_letters(fib, window);
  std::vector<Complex> v;
  v.reserve(letters.size());
  for (char c : letters) v.emplace_back(c == 'a' ? 1.0 : -1.0, 0.0);
  return SampledSequence{window.lo, std::move(v), 1.0};
}

SampledSequence thue_morse_pm1(const Interval& window) {
  if (window.hi < window.lo) throw std::invalid_argument("thue_morse_pm1: empty window");
  std::vector<Complex> v;
  v.reserve(window.length());
  for (std::int64_t k = window.lo; k <= window.hi; ++k)
    v.emplace_back(static_cast<double>(thue_morse_value(k)), 0.0);
  return SampledSequence{window.lo, std::move(v), 1.0};
}

SampledSequence bernoulli_pm1(double p, std::uint64_t seed, const Interval& window) {
  SequenceSpec spec{BernoulliGen{p, seed}, std::nullopt, std::nullopt, ""};
  return generate(spec, window);
}

bool is_primitive(const SubstitutionGen& sub) {
  auto alpha = alphabet_of(sub);
  const std::size_t d = alpha.size();
  auto index_of = [&](char c) {
    return static_cast<std::size_t>(std::lower_bound(alpha.begin(), alpha.end(), c) -
                                    alpha.begin());
  };
  std::vector<std::vector<bool>> reach(d, std::vector<bool>(d, false));
  for (std::size_t i = 0; i < d; ++i) {
    auto it = sub.rules.find(alpha[i]);
    if (it == sub.rules.end() || it->second.empty()) return false;
    for (char c : it->second) reach[i][index_of(c)] = true;
  }
  // Wielandt: a primitive matrix has a positive power by exponent (d-1)^2 + 1
  std::size_t needed = (d - 1) * (d - 1) + 1;
  auto cur = reach;
  for (std::size_t step = 1; step <= needed; ++step) {
    bool all = true;
    for (const auto& row : cur)
      for (bool b : row) all = all && b;
    if (all) return true;
    std::vector<std::vector<bool>> nxt(d, std::vector<bool>(d, false));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (cur[i][k])
          for (std::size_t j = 0; j < d; ++j)
            if (reach[k][j]) nxt[i][j] = true;
    cur = std::move(nxt);
  }
  bool all = true;
  for (const auto& row : cur)
    for (bool b : row) all = all && b;
  return all;
}

std::map<char, double> perron_frequencies(const SubstitutionGen& sub) {
  validate_substitution(sub);
  auto alpha = alphabet_of(sub);
  const std::size_t d = alpha.size();
  auto index_of = [&](char c) {
    return static_cast<std::size_t>(std::lower_bound(alpha.begin(), alpha.end(), c) -
                                    alpha.begin());
  };
  // M[i][j] = occurrences of letter i in the image of letter j; the letter
  // frequency vector is the Perron right eigenvector, normalized to sum 1.
  std::vector<std::vector<double>> m(d, std::vector<double>(d, 0.0));
  for (std::size_t j = 0; j < d; ++j)
    for (char c : sub.rules.at(alpha[j])) m[index_of(c)][j] += 1.0;
  std::vector<double> v(d, 1.0 / static_cast<double>(d));
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<double> nv(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) nv[i] += m[i][j] * v[j];
    double s = 0.0;
    for (double x : nv) s += x;
    for (double& x : nv) x /= s;
    v = std::move(nv);
  }
  std::map<char, double> out;
  for (std::size_t i = 0; i < d; ++i) out[alpha[i]] = v[i];
  return out;
}

void write_sequence_csv(const SampledSequence& s, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_sequence_csv: cannot open " + path);
  os << "index,re,im\n";
  char buf[128];
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g\n",
                  static_cast<long long>(s.start + static_cast<std::int64_t>(i)),
                  s.values[i].real(), s.values[i].imag());
    os << buf;
  }
}

SampledSequence read_sequence_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_sequence_csv: cannot open " + path);
  std::string line;
  if (!std::getline(is, line) || line.rfind("index,re,im", 0) != 0)
    throw std::runtime_error("read_sequence_csv: missing 'index,re,im' header in " + path);
  SampledSequence out;
  bool first = true;
  std::int64_t expect = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    long long idx;
    double re, im;
    if (std::sscanf(line.c_str(), "%lld,%lf,%lf", &idx, &re, &im) != 3)
      throw std::runtime_error("read_sequence_csv: bad row '" + line + "'");
    if (first) {
      out.start = idx;
      first = false;
    } else if (idx != expect) {
      throw std::runtime_error("read_sequence_csv: non-contiguous index " + std::to_string(idx));
    }
    expect = idx + 1;
    out.values.emplace_back(re, im);
    out.sup_norm_bound = std::max(out.sup_norm_bound, std::abs(out.values.back()));
  }
  if (out.values.empty()) throw std::runtime_error("read_sequence_csv: no samples in " + path);
  return out;
}

}  // namespace eberlein

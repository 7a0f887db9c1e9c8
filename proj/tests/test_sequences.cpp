#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "eberlein/json_io.hpp"
#include "eberlein/sequences.hpp"
#include "oracles.hpp"

using namespace eberlein;

namespace {
const double kTau = (1.0 + std::sqrt(5.0)) / 2.0;

SequenceSpec spec_of(Generator g) { return SequenceSpec{std::move(g), std::nullopt, std::nullopt, ""}; }
}  // namespace

TEST_CASE("sign comb with sgn(0) = 0") {
  auto s = generate(spec_of(SignGen{}), {-3, 3});
  std::vector<double> want{-1, -1, -1, 0, 1, 1, 1};
  REQUIRE(s.values.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) CHECK(s.values[i] == Complex{want[i], 0.0});
}

TEST_CASE("dirac comb and trivial character are all ones") {
  auto comb = generate(spec_of(DiracCombGen{}), {1, 4});
  for (const auto& v : comb.values) CHECK(v == Complex{1.0, 0.0});
  auto chi0 = generate(spec_of(CharacterGen{0.0}), {-5, 5});
  for (const auto& v : chi0.values) CHECK(v == Complex{1.0, 0.0});
}

TEST_CASE("fibonacci fixed point starts a b a a b a b a") {
  auto s = fibonacci_pm1({0, 7});
  std::string brute = oracles::fibonacci_word_brute(8);
  REQUIRE(brute.substr(0, 8) == "abaababa");
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(s.values[i].real() == (brute[i] == 'a' ? 1.0 : -1.0));
}

TEST_CASE("fibonacci letter frequency approaches 1/tau") {
  const std::int64_t N = 100000;
  auto s = fibonacci_pm1({0, N - 1});
  std::int64_t count_a = 0;
  for (const auto& v : s.values) count_a += (v.real() > 0) ? 1 : 0;
  double freq = static_cast<double>(count_a) / static_cast<double>(N);
  CHECK(std::abs(freq - 1.0 / kTau) <= 2.0 / static_cast<double>(N));
}

TEST_CASE("fibonacci prefix mean approaches 2/tau - 1") {
  const std::int64_t N = 100000;
  auto s = fibonacci_pm1({1, N});
  double sum = 0;
  for (const auto& v : s.values) sum += v.real();
  CHECK(std::abs(sum / static_cast<double>(N) - (2.0 / kTau - 1.0)) <=
        5.0 / std::sqrt(static_cast<double>(N)));
}

TEST_CASE("fibonacci left extension agrees with the two-sided fixed point") {
  // sigma^2 from a|a: positions -8..-1 read 'abaababa'
  auto s = fibonacci_pm1({-8, -1});
  std::string want = "abaababa";
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(s.values[i].real() == (want[i] == 'a' ? 1.0 : -1.0));
}

TEST_CASE("thue-morse digit-sum values and mirror convention") {
  auto s = thue_morse_pm1({0, 7});
  std::vector<double> want{1, -1, -1, 1, -1, 1, 1, -1};
  for (std::size_t i = 0; i < 8; ++i) CHECK(s.values[i].real() == want[i]);
  auto m = thue_morse_pm1({-8, 7});
  for (std::int64_t n = 0; n < 8; ++n) CHECK(m.at(-n - 1) == m.at(n));
}

TEST_CASE("thue-morse lag-1 average matches the recursion oracle") {
  const std::int64_t N = 300000;
  auto s = thue_morse_pm1({0, N});
  double sum = 0;
  for (std::int64_t k = 0; k < N; ++k) sum += s.at(k).real() * s.at(k + 1).real();
  double gamma1 = sum / static_cast<double>(N);
  auto oracle = oracles::thue_morse_gamma(1);
  CHECK(oracle[1] == doctest::Approx(-1.0 / 3.0));
  CHECK(std::abs(gamma1 - oracle[1]) <= 10.0 / static_cast<double>(N));
}

TEST_CASE("bernoulli generator is reproducible and unbiased") {
  auto ones = bernoulli_pm1(1.0, 7, {1, 50});
  for (const auto& v : ones.values) CHECK(v == Complex{1.0, 0.0});

  const std::int64_t N = 100000;
  auto s = bernoulli_pm1(0.5, 42, {1, N});
  double sum = 0;
  for (const auto& v : s.values) sum += v.real();
  CHECK(std::abs(sum / static_cast<double>(N)) <= 4.0 / std::sqrt(static_cast<double>(N)));

  auto again = bernoulli_pm1(0.5, 42, {1, N});
  CHECK(s.values == again.values);
}

TEST_CASE("bernoulli seed 42 golden pattern") {
  auto s = bernoulli_pm1(0.5, 42, {1, 8});
  auto golden = read_sequence_csv(std::string(TESTS_DATA_DIR) + "/bernoulli_seed42.csv");
  REQUIRE(golden.values.size() == 8);
  CHECK(golden.start == 1);
  for (std::size_t i = 0; i < 8; ++i) CHECK(s.values[i] == golden.values[i]);
}

TEST_CASE("generation restricts consistently") {
  std::vector<SequenceSpec> specs;
  specs.push_back(spec_of(FibonacciGen{}));
  specs.push_back(spec_of(ThueMorseGen{}));
  specs.push_back(spec_of(BernoulliGen{0.3, 99}));
  specs.push_back(spec_of(CharacterGen{1.0 / 3.0}));
  specs.push_back(spec_of(PeriodicGen{{Complex{1, 0}, Complex{0, 1}}}));
  specs.push_back(spec_of(SignGen{}));
  for (const auto& spec : specs) {
    auto big = generate(spec, {-40, 60});
    auto small = generate(spec, {-7, 13});
    for (std::int64_t k = -7; k <= 13; ++k) CHECK(big.at(k) == small.at(k));
  }
}

TEST_CASE("substitution generators respect the Perron frequencies") {
  SubstitutionGen tm;
  tm.rules = {{'a', "ab"}, {'b', "ba"}};
  tm.weights = {{'a', Complex{1, 0}}, {'b', Complex{-1, 0}}};
  REQUIRE(is_primitive(tm));
  auto freq = perron_frequencies(tm);
  CHECK(freq['a'] == doctest::Approx(0.5));

  const std::int64_t N = 100000;
  auto s = generate(spec_of(tm), {0, N - 1});
  std::int64_t count_a = 0;
  for (const auto& v : s.values) count_a += (v.real() > 0) ? 1 : 0;
  CHECK(std::abs(static_cast<double>(count_a) / N - freq['a']) <= 10.0 / std::sqrt(N));

  SubstitutionGen fib;
  fib.rules = {{'a', "ab"}, {'b', "a"}};
  fib.weights = {{'a', Complex{1, 0}}, {'b', Complex{-1, 0}}};
  auto ffreq = perron_frequencies(fib);
  CHECK(ffreq['a'] == doctest::Approx(1.0 / kTau).epsilon(1e-9));
}

TEST_CASE("non-primitive substitutions are rejected") {
  SubstitutionGen bad;
  bad.rules = {{'a', "a"}, {'b', "b"}};
  bad.weights = {{'a', Complex{1, 0}}, {'b', Complex{-1, 0}}};
  CHECK_FALSE(is_primitive(bad));
  CHECK_THROWS_AS(generate(spec_of(bad), {0, 10}), std::invalid_argument);
}

TEST_CASE("custom generator enforces its support") {
  CustomGen c{5, {Complex{1, 0}, Complex{2, 0}, Complex{3, 0}}};
  auto s = generate(spec_of(c), {5, 7});
  CHECK(s.at(6) == Complex{2, 0});
  CHECK_THROWS_AS(generate(spec_of(c), {4, 7}), std::out_of_range);
  SequenceSpec bounded = spec_of(SignGen{});
  bounded.support = Interval{0, 9};
  CHECK_THROWS_AS(generate(bounded, {-2, 4}), std::out_of_range);
}

TEST_CASE("values respect the declared sup-norm bound") {
  std::vector<SequenceSpec> specs;
  specs.push_back(spec_of(TrigPolynomialGen{{{Complex{0.5, 0.5}, 0.1}, {Complex{0, -1}, 0.7}}}));
  specs.push_back(spec_of(FibonacciGen{}));
  specs.push_back(spec_of(PeriodicGen{{Complex{2, 0}, Complex{0, 1}}}));
  specs.push_back(spec_of(BernoulliGen{0.5, 1}));
  for (const auto& spec : specs) {
    auto s = generate(spec, {-50, 50});
    for (const auto& v : s.values) CHECK(std::abs(v) <= s.sup_norm_bound + 1e-12);
  }
}

TEST_CASE("sequence CSV round trip") {
  auto s = generate(spec_of(TrigPolynomialGen{{{Complex{1, 0.25}, 0.37}}}), {-4, 9});
  std::string path = (std::filesystem::temp_directory_path() / "ebe_seq_roundtrip.csv").string();
  write_sequence_csv(s, path);
  auto back = read_sequence_csv(path);
  CHECK(back.start == s.start);
  REQUIRE(back.values.size() == s.values.size());
  for (std::size_t i = 0; i < s.values.size(); ++i) CHECK(back.values[i] == s.values[i]);
  std::remove(path.c_str());
}

TEST_CASE("sequence spec JSON round trip") {
  std::vector<SequenceSpec> specs;
  specs.push_back(spec_of(FibonacciGen{}));
  specs.push_back(spec_of(BernoulliGen{0.25, 1234}));
  specs.push_back(spec_of(CharacterGen{0.125}));
  specs.push_back(spec_of(PeriodicGen{{Complex{1, 0}, Complex{0, 1}}}));
  specs.push_back(spec_of(TrigPolynomialGen{{{Complex{1, -2}, 0.3}}}));
  specs.push_back(spec_of(CustomGen{-2, {Complex{5, 1}, Complex{0, 0}, Complex{1, 1}}}));
  SubstitutionGen sub;
  sub.rules = {{'a', "ab"}, {'b', "a"}};
  sub.weights = {{'a', Complex{1, 0}}, {'b', Complex{-1, 0}}};
  specs.push_back(spec_of(sub));
  specs.back().declared_type = SpectralType::PurePoint;
  specs.back().label = "fib-sub";

  for (const auto& spec : specs) {
    auto back = sequence_spec_from_json(to_json(spec));
    // customs only exist on their own support
    Interval window = std::holds_alternative<CustomGen>(spec.generator) ? Interval{-2, 0}
                                                                        : Interval{-6, 17};
    auto a = generate(spec, window);
    auto b = generate(back, window);
    CHECK(a.values == b.values);
    CHECK(back.declared_type == spec.declared_type);
    CHECK(back.label == spec.label);
  }
}

TEST_CASE("translate re-indexes exactly") {
  auto s = generate(spec_of(SignGen{}), {-3, 3});
  auto t = translate(s, 10);
  CHECK(t.support() == Interval{7, 13});
  CHECK(t.at(10) == Complex{0, 0});  // (tau_10 f)(10) = f(0)
  CHECK(t.at(13) == Complex{1, 0});
}

#include "eberlein/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace eberlein {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex value must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

namespace {

json complex_vector_to_json(const std::vector<Complex>& v) {
  json arr = json::array();
  for (const auto& z : v) arr.push_back(complex_to_json(z));
  return arr;
}

std::vector<Complex> complex_vector_from_json(const json& j) {
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

std::string kind_name(WindowKind k) {
  switch (k) {
    case WindowKind::Prefix: return "prefix";
    case WindowKind::Symmetric: return "symmetric";
    case WindowKind::Custom: return "custom";
  }
  return "custom";
}

WindowKind kind_from_name(const std::string& s) {
  if (s == "prefix") return WindowKind::Prefix;
  if (s == "symmetric") return WindowKind::Symmetric;
  if (s == "custom") return WindowKind::Custom;
  throw std::invalid_argument("unknown window kind '" + s + "'");
}

std::string spectral_type_name(SpectralType t) {
  switch (t) {
    case SpectralType::PurePoint: return "pp";
    case SpectralType::AbsolutelyContinuous: return "ac";
    case SpectralType::SingularContinuous: return "sc";
  }
  return "pp";
}

SpectralType spectral_type_from_name(const std::string& s) {
  if (s == "pp") return SpectralType::PurePoint;
  if (s == "ac") return SpectralType::AbsolutelyContinuous;
  if (s == "sc") return SpectralType::SingularContinuous;
  throw std::invalid_argument("unknown spectral type '" + s + "' (want pp/ac/sc)");
}

}  // namespace

json to_json(const WindowFamily& w) {
  json intervals = json::array();
  for (const auto& iv : w.intervals()) intervals.push_back(json::array({iv.lo, iv.hi}));
  return json{{"kind", kind_name(w.kind())}, {"intervals", intervals}, {"label", w.label()}};
}

WindowFamily window_family_from_json(const json& j) {
  std::vector<Interval> ivs;
  for (const auto& e : j.at("intervals"))
    ivs.push_back({e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>()});
  return WindowFamily(kind_from_name(j.at("kind").get<std::string>()), std::move(ivs),
                      j.value("label", std::string{}));
}

namespace {

struct SpecToJson {
  json& out;
  void operator()(const SubstitutionGen& g) {
    out["generator"] = "substitution";
    json rules = json::object(), weights = json::object();
    for (const auto& [c, word] : g.rules) rules[std::string(1, c)] = word;
    for (const auto& [c, wgt] : g.weights) weights[std::string(1, c)] = complex_to_json(wgt);
    out["rules"] = rules;
    out["weights"] = weights;
  }
  void operator()(const BernoulliGen& g) {
    out["generator"] = "bernoulli";
    out["p"] = g.p;
    out["seed"] = g.seed;
  }
  void operator()(const PeriodicGen& g) {
    out["generator"] = "periodic";
    out["pattern"] = complex_vector_to_json(g.pattern);
  }
  void operator()(const CharacterGen& g) {
    out["generator"] = "character";
    out["theta"] = g.theta;
  }
  void operator()(const TrigPolynomialGen& g) {
    out["generator"] = "trig_polynomial";
    json terms = json::array();
    for (const auto& t : g.terms)
      terms.push_back(json{{"amplitude", complex_to_json(t.amplitude)}, {"theta", t.theta}});
    out["terms"] = terms;
  }
  void operator()(const SignGen&) { out["generator"] = "sign"; }
  void operator()(const ConstantOneGen&) { out["generator"] = "constant_one"; }
  void operator()(const DiracCombGen&) { out["generator"] = "dirac_comb"; }
  void operator()(const FibonacciGen&) { out["generator"] = "fibonacci"; }
  void operator()(const ThueMorseGen&) { out["generator"] = "thue_morse"; }
  void operator()(const CustomGen& g) {
    out["generator"] = "custom";
    out["start"] = g.start;
    out["samples"] = complex_vector_to_json(g.samples);
  }
};

}  // namespace

json to_json(const SequenceSpec& s) {
  json out = json::object();
  SpecToJson visitor{out};
  std::visit(visitor, s.generator);
  if (s.support) out["support"] = json::array({s.support->lo, s.support->hi});
  if (s.declared_type) out["declared_type"] = spectral_type_name(*s.declared_type);
  if (!s.label.empty()) out["label"] = s.label;
  return out;
}

SequenceSpec sequence_spec_from_json(const json& j) {
  SequenceSpec spec;
  const std::string g = j.at("generator").get<std::string>();
  if (g == "substitution") {
    SubstitutionGen sub;
    for (const auto& [key, val] : j.at("rules").items()) {
      if (key.size() != 1) throw std::invalid_argument("substitution rules keys must be letters");
      sub.rules[key[0]] = val.get<std::string>();
    }
    for (const auto& [key, val] : j.at("weights").items()) {
      if (key.size() != 1) throw std::invalid_argument("substitution weight keys must be letters");
      sub.weights[key[0]] = complex_from_json(val);
    }
    spec.generator = sub;
  } else if (g == "bernoulli") {
    spec.generator = BernoulliGen{j.at("p").get<double>(), j.at("seed").get<std::uint64_t>()};
  } else if (g == "periodic") {
    spec.generator = PeriodicGen{complex_vector_from_json(j.at("pattern"))};
  } else if (g == "character") {
    spec.generator = CharacterGen{j.at("theta").get<double>()};
  } else if (g == "trig_polynomial") {
    TrigPolynomialGen tp;
    for (const auto& t : j.at("terms"))
      tp.terms.push_back({complex_from_json(t.at("amplitude")), t.at("theta").get<double>()});
    spec.generator = tp;
  } else if (g == "sign") {
    spec.generator = SignGen{};
  } else if (g == "constant_one") {
    spec.generator = ConstantOneGen{};
  } else if (g == "dirac_comb") {
    spec.generator = DiracCombGen{};
  } else if (g == "fibonacci") {
    spec.generator = FibonacciGen{};
  } else if (g == "thue_morse") {
    spec.generator = ThueMorseGen{};
  } else if (g == "custom") {
    spec.generator =
        CustomGen{j.at("start").get<std::int64_t>(), complex_vector_from_json(j.at("samples"))};
  } else {
    throw std::invalid_argument("unknown generator '" + g + "'");
  }
  if (j.contains("support"))
    spec.support = Interval{j["support"].at(0).get<std::int64_t>(),
                            j["support"].at(1).get<std::int64_t>()};
  if (j.contains("declared_type"))
    spec.declared_type = spectral_type_from_name(j["declared_type"].get<std::string>());
  spec.label = j.value("label", std::string{});
  return spec;
}

json to_json(const CorrelationEstimate& e) {
  json per_window = json::array();
  for (const auto& row : e.values) per_window.push_back(complex_vector_to_json(row));
  return json{{"lags", e.lags},
              {"per_window_values", per_window},
              {"final", complex_vector_to_json(e.final)},
              {"cauchy_defect", e.cauchy_defect}};
}

CorrelationEstimate correlation_from_json(const json& j) {
  CorrelationEstimate e;
  e.lags = j.at("lags").get<std::vector<std::int64_t>>();
  for (const auto& row : j.at("per_window_values"))
    e.values.push_back(complex_vector_from_json(row));
  e.final = complex_vector_from_json(j.at("final"));
  e.cauchy_defect = j.at("cauchy_defect").get<std::vector<double>>();
  return e;
}

json to_json(const Autocorrelation& a) {
  return json{{"lags", a.lags},
              {"gamma", complex_vector_to_json(a.gamma)},
              {"window_label", a.window_label},
              {"n_used", a.n_used}};
}

Autocorrelation autocorrelation_from_json(const json& j) {
  Autocorrelation a;
  a.lags = j.at("lags").get<std::vector<std::int64_t>>();
  a.gamma = complex_vector_from_json(j.at("gamma"));
  a.window_label = j.value("window_label", std::string{});
  a.n_used = j.value("n_used", std::int64_t{0});
  if (a.gamma.size() != a.lags.size())
    throw std::invalid_argument("autocorrelation: gamma/lags size mismatch");
  return a;
}

json to_json(const FourierBohrEstimate& e) {
  return json{{"theta", e.theta},
              {"per_window", complex_vector_to_json(e.per_window)},
              {"final", complex_to_json(e.final)},
              {"cauchy_defect", e.cauchy_defect}};
}

json to_json(const SpectralMeasureEstimate& e) {
  json atoms = json::array();
  for (const auto& a : e.atoms) atoms.push_back(json{{"theta", a.theta}, {"mass", a.mass}});
  return json{{"atoms", atoms},
              {"ac_density", e.ac_density},
              {"grid_size", e.ac_density.size()},
              {"total_mass", e.total_mass},
              {"ac_integral", e.ac_integral},
              {"residual_sc_mass", e.residual_sc_mass},
              {"clipped_mass", e.clipped_mass},
              {"provenance",
               json{{"lag_cutoff", e.provenance.lag_cutoff},
                    {"kernel", e.provenance.kernel},
                    {"atom_threshold", e.provenance.atom_threshold}}}};
}

SpectralMeasureEstimate spectral_measure_from_json(const json& j) {
  SpectralMeasureEstimate e;
  for (const auto& a : j.at("atoms"))
    e.atoms.push_back({a.at("theta").get<double>(), a.at("mass").get<double>()});
  e.ac_density = j.at("ac_density").get<std::vector<double>>();
  e.total_mass = j.at("total_mass").get<double>();
  e.ac_integral = j.at("ac_integral").get<double>();
  e.residual_sc_mass = j.at("residual_sc_mass").get<double>();
  e.clipped_mass = j.value("clipped_mass", 0.0);
  const auto& p = j.at("provenance");
  e.provenance.lag_cutoff = p.at("lag_cutoff").get<std::int64_t>();
  e.provenance.kernel = p.at("kernel").get<std::string>();
  e.provenance.atom_threshold = p.at("atom_threshold").get<double>();
  return e;
}

json to_json(const GramMatrix& g) {
  return json{{"dim", g.dim},
              {"entries", complex_vector_to_json(g.entries)},
              {"window_label", g.window_label},
              {"n_used", g.n_used},
              {"hermiticity_defect", g.hermiticity_defect}};
}

GramMatrix gram_from_json(const json& j) {
  GramMatrix g;
  g.dim = j.at("dim").get<std::size_t>();
  g.entries = complex_vector_from_json(j.at("entries"));
  if (g.entries.size() != g.dim * g.dim)
    throw std::invalid_argument("gram: entries must hold dim*dim values");
  g.window_label = j.value("window_label", std::string{});
  g.n_used = j.value("n_used", std::int64_t{0});
  g.hermiticity_defect = j.value("hermiticity_defect", 0.0);
  return g;
}

json load_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  json j;
  is >> j;
  return j;
}

void save_json_file(const json& j, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw std::runtime_error("cannot open " + tmp);
    os << j.dump(2) << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

}  // namespace eberlein

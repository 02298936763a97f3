#include "lowreg/harness/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lowreg/error.hpp"

namespace lowreg::harness {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>> kKnownKeys = {
    {"", {"name"}},
    {"equation", {"type", "p", "mu", "quad_zero_mode_fix", "allow_noninteger_p"}},
    {"grid", {"dimension", "K"}},
    {"initial", {"type", "theta", "seed", "normalize", "wave_number", "amplitude"}},
    {"schemes", {"list"}},
    {"time", {"T", "ladder", "denominator", "min_exp", "max_exp", "values"}},
    {"error", {"norm_r", "drop_large", "drop_small"}},
    {"reference", {"policy", "tau_ref"}},
    {"output", {"dir", "formats", "plot_data"}},
    {"run", {"workers"}},
};

constexpr std::pair<InitialKind, std::string_view> kInitialNames[] = {
    {InitialKind::Rough, "rough"},     {InitialKind::RawRand, "raw_rand"},
    {InitialKind::SinCos, "sin_cos"},  {InitialKind::Sin, "sin"},
    {InitialKind::PlaneWave, "plane_wave"},
};
constexpr std::pair<LadderKind, std::string_view> kLadderNames[] = {
    {LadderKind::Paper, "paper"}, {LadderKind::Dyadic, "dyadic"}, {LadderKind::Explicit, "explicit"}};
constexpr std::pair<ReferenceKind, std::string_view> kReferenceNames[] = {
    {ReferenceKind::SelfRefined, "self"},
    {ReferenceKind::StrangRefined, "strang"},
    {ReferenceKind::Exact, "exact"}};

template <class E, std::size_t N>
E parse_enum(const std::pair<E, std::string_view> (&names)[N], const std::string& value,
             const std::string& key) {
  for (const auto& [e, n] : names) {
    if (n == value) return e;
  }
  std::string allowed;
  for (const auto& [e, n] : names) allowed += (allowed.empty() ? "" : ", ") + std::string(n);
  throw ConfigError("invalid value '" + value + "' for " + key + " (allowed: " + allowed + ")");
}

template <class E, std::size_t N>
std::string_view enum_name(const std::pair<E, std::string_view> (&names)[N], E value) {
  for (const auto& [e, n] : names) {
    if (e == value) return n;
  }
  return "unknown";
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& s, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (trim(s.substr(pos)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("expected a number for " + key + ", got '" + s + "'");
}

long to_long(const std::string& s, const std::string& key) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (trim(s.substr(pos)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("expected an integer for " + key + ", got '" + s + "'");
}

std::uint64_t to_u64(const std::string& s, const std::string& key) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (trim(s.substr(pos)).empty() && s.find('-') == std::string::npos) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("expected an unsigned integer for " + key + ", got '" + s + "'");
}

bool to_bool(const std::string& s, const std::string& key) {
  if (s == "true" || s == "yes" || s == "1" || s == "on") return true;
  if (s == "false" || s == "no" || s == "0" || s == "off") return false;
  throw ConfigError("expected a boolean for " + key + ", got '" + s + "'");
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string_view to_string(InitialKind kind) { return enum_name(kInitialNames, kind); }
std::string_view to_string(LadderKind kind) { return enum_name(kLadderNames, kind); }
std::string_view to_string(ReferenceKind kind) { return enum_name(kReferenceNames, kind); }

std::vector<double> TauLadder::taus() const {
  std::vector<double> out;
  switch (kind) {
    case LadderKind::Paper:
      for (int j = denominator; j >= 1; --j) out.push_back(static_cast<double>(j) / denominator);
      break;
    case LadderKind::Dyadic:
      for (int e = min_exp; e <= max_exp; ++e) out.push_back(std::ldexp(1.0, -e));
      break;
    case LadderKind::Explicit:
      out = values;
      std::sort(out.begin(), out.end(), std::greater<>());
      break;
  }
  return out;
}

integrators::SchemeSpec StudyConfig::scheme_spec(SchemeKind kind, double tau) const {
  integrators::SchemeSpec s;
  s.kind = kind;
  s.equation = equation;
  s.mu = mu;
  s.p = p;
  s.tau = tau;
  s.quad_zero_mode_fix = quad_zero_mode_fix;
  s.allow_noninteger_p = allow_noninteger_p;
  return s;
}

double StudyConfig::reference_step() const {
  return tau_ref > 0.0 ? tau_ref : analysis::default_reference_step(T);
}

void StudyConfig::validate() const {
  if (dimension < 1) throw ConfigError("dimension must be >= 1");
  if (equation != Equation::PowerNls && dimension != 1) {
    throw ConfigError("quadratic equations require dimension 1");
  }
  if (dimension != 1) throw ConfigError("the built-in initial data are defined for dimension 1");
  if (K < 2 || (K & (K - 1)) != 0) throw ConfigError("K must be a power of two >= 2");
  if (!(T > 0.0) || !std::isfinite(T)) throw ConfigError("T must be positive");
  if (!std::isfinite(mu)) throw ConfigError("mu must be finite");
  if (!(error_norm_r >= 0.0)) throw ConfigError("error norm_r must be >= 0");
  if (schemes.empty()) throw ConfigError("no schemes selected");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (initial.kind == InitialKind::Rough && !(initial.theta >= 0.0)) {
    throw ConfigError("initial theta must be >= 0");
  }
  if (initial.kind == InitialKind::PlaneWave &&
      (initial.wave_number < -K || initial.wave_number >= K)) {
    throw ConfigError("plane wave number outside the grid");
  }
  if (initial.kind == InitialKind::SinCos && K < 4) throw ConfigError("sin_cos data need K >= 4");

  switch (ladder.kind) {
    case LadderKind::Paper:
      if (ladder.denominator < 1) throw ConfigError("ladder denominator must be >= 1");
      break;
    case LadderKind::Dyadic:
      if (ladder.min_exp > ladder.max_exp) throw ConfigError("ladder min_exp > max_exp");
      break;
    case LadderKind::Explicit:
      if (ladder.values.empty()) throw ConfigError("explicit ladder has no values");
      for (double v : ladder.values) {
        if (!(v > 0.0)) throw ConfigError("ladder values must be positive");
      }
      break;
  }

  const double tr = reference_step();
  for (double tau : ladder.taus()) {
    const long n = std::lround(T / tau);
    if (n < 1) throw ConfigError("step size " + fmt_double(tau) + " exceeds twice the final time");
    if (reference != ReferenceKind::Exact && !analysis::steps_to_reach(n * tau, tr)) {
      throw ConfigError("reference step " + fmt_double(tr) + " does not divide comparison time " +
                        fmt_double(n * tau) + " (tau = " + fmt_double(tau) + ")");
    }
  }

  for (auto kind : schemes) scheme_spec(kind, 1.0).validate(dimension);

  switch (reference) {
    case ReferenceKind::Exact:
      if (equation != Equation::PowerNls || initial.kind != InitialKind::PlaneWave) {
        throw ConfigError("exact reference requires power_nls with plane_wave data");
      }
      break;
    case ReferenceKind::StrangRefined:
      analysis::reference_scheme(scheme_spec(SchemeKind::LowRegExp, tr),
                                 analysis::ReferencePolicy::StrangRefined, tr)
          .validate(dimension);
      break;
    case ReferenceKind::SelfRefined:
      break;
  }
}

StudyConfig parse_config(const std::string& text) {
  pt::ptree tree;
  try {
    std::istringstream is(text);
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax error: ") + e.what());
  }

  for (const auto& [section, node] : tree) {
    if (node.empty()) {
      if (!kKnownKeys.at("").contains(section)) throw ConfigError("unknown key '" + section + "'");
      continue;
    }
    const auto it = kKnownKeys.find(section);
    if (it == kKnownKeys.end() || section.empty()) {
      throw ConfigError("unknown section [" + section + "]");
    }
    for (const auto& [key, value] : node) {
      if (!it->second.contains(key)) {
        throw ConfigError("unknown key '" + key + "' in section [" + section + "]");
      }
    }
  }

  auto get = [&](const std::string& path) -> std::optional<std::string> {
    if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '.'))) {
      return trim(*v);
    }
    return std::nullopt;
  };

  StudyConfig c;
  if (auto v = get("name")) c.name = *v;

  if (auto v = get("equation.type")) {
    auto eq = integrators::parse_equation(*v);
    if (!eq) throw ConfigError("invalid equation type '" + *v + "'");
    c.equation = *eq;
  }
  if (auto v = get("equation.p")) c.p = to_double(*v, "equation.p");
  if (auto v = get("equation.mu")) c.mu = to_double(*v, "equation.mu");
  if (auto v = get("equation.quad_zero_mode_fix")) {
    c.quad_zero_mode_fix = to_bool(*v, "equation.quad_zero_mode_fix");
  }
  if (auto v = get("equation.allow_noninteger_p")) {
    c.allow_noninteger_p = to_bool(*v, "equation.allow_noninteger_p");
  }

  if (auto v = get("grid.dimension")) c.dimension = static_cast<int>(to_long(*v, "grid.dimension"));
  if (auto v = get("grid.K")) c.K = static_cast<int>(to_long(*v, "grid.K"));

  if (auto v = get("initial.type")) c.initial.kind = parse_enum(kInitialNames, *v, "initial.type");
  if (auto v = get("initial.theta")) c.initial.theta = to_double(*v, "initial.theta");
  if (auto v = get("initial.seed")) c.initial.seed = to_u64(*v, "initial.seed");
  if (auto v = get("initial.normalize")) c.initial.normalize = to_bool(*v, "initial.normalize");
  if (auto v = get("initial.wave_number")) {
    c.initial.wave_number = static_cast<int>(to_long(*v, "initial.wave_number"));
  }
  if (auto v = get("initial.amplitude")) c.initial.amplitude = to_double(*v, "initial.amplitude");

  if (auto v = get("schemes.list")) {
    for (const auto& name : split_list(*v)) {
      auto kind = integrators::parse_scheme_kind(name);
      if (!kind) throw ConfigError("unknown scheme '" + name + "'");
      c.schemes.push_back(*kind);
    }
  }

  if (auto v = get("time.T")) c.T = to_double(*v, "time.T");
  if (auto v = get("time.ladder")) c.ladder.kind = parse_enum(kLadderNames, *v, "time.ladder");
  if (auto v = get("time.denominator")) {
    c.ladder.denominator = static_cast<int>(to_long(*v, "time.denominator"));
  }
  if (auto v = get("time.min_exp")) c.ladder.min_exp = static_cast<int>(to_long(*v, "time.min_exp"));
  if (auto v = get("time.max_exp")) c.ladder.max_exp = static_cast<int>(to_long(*v, "time.max_exp"));
  if (auto v = get("time.values")) {
    for (const auto& s : split_list(*v)) c.ladder.values.push_back(to_double(s, "time.values"));
  }

  if (auto v = get("error.norm_r")) c.error_norm_r = to_double(*v, "error.norm_r");
  if (auto v = get("error.drop_large")) {
    c.window.drop_large = static_cast<std::size_t>(to_u64(*v, "error.drop_large"));
  }
  if (auto v = get("error.drop_small")) {
    c.window.drop_small = static_cast<std::size_t>(to_u64(*v, "error.drop_small"));
  }

  if (auto v = get("reference.policy")) {
    c.reference = parse_enum(kReferenceNames, *v, "reference.policy");
  }
  if (auto v = get("reference.tau_ref")) c.tau_ref = to_double(*v, "reference.tau_ref");

  if (auto v = get("output.dir")) c.output_dir = *v;
  if (auto v = get("output.formats")) {
    c.write_csv = c.write_json = false;
    for (const auto& f : split_list(*v)) {
      if (f == "csv") {
        c.write_csv = true;
      } else if (f == "json") {
        c.write_json = true;
      } else {
        throw ConfigError("unknown output format '" + f + "'");
      }
    }
  }
  if (auto v = get("output.plot_data")) c.write_plot_data = to_bool(*v, "output.plot_data");

  if (auto v = get("run.workers")) c.workers = static_cast<int>(to_long(*v, "run.workers"));

  return c;
}

StudyConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string to_config_text(const StudyConfig& c) {
  std::ostringstream os;
  auto b = [](bool v) { return v ? "true" : "false"; };
  os << "name = " << c.name << "\n\n";
  os << "[equation]\n"
     << "type = " << integrators::to_string(c.equation) << "\n"
     << "p = " << fmt_double(c.p) << "\n"
     << "mu = " << fmt_double(c.mu) << "\n"
     << "quad_zero_mode_fix = " << b(c.quad_zero_mode_fix) << "\n"
     << "allow_noninteger_p = " << b(c.allow_noninteger_p) << "\n\n";
  os << "[grid]\n"
     << "dimension = " << c.dimension << "\n"
     << "K = " << c.K << "\n\n";
  os << "[initial]\n"
     << "type = " << to_string(c.initial.kind) << "\n"
     << "theta = " << fmt_double(c.initial.theta) << "\n"
     << "seed = " << c.initial.seed << "\n"
     << "normalize = " << b(c.initial.normalize) << "\n"
     << "wave_number = " << c.initial.wave_number << "\n"
     << "amplitude = " << fmt_double(c.initial.amplitude) << "\n\n";
  os << "[schemes]\nlist = ";
  for (std::size_t i = 0; i < c.schemes.size(); ++i) {
    os << (i ? ", " : "") << integrators::to_string(c.schemes[i]);
  }
  os << "\n\n[time]\n"
     << "T = " << fmt_double(c.T) << "\n"
     << "ladder = " << to_string(c.ladder.kind) << "\n"
     << "denominator = " << c.ladder.denominator << "\n"
     << "min_exp = " << c.ladder.min_exp << "\n"
     << "max_exp = " << c.ladder.max_exp << "\n";
  if (!c.ladder.values.empty()) {
    os << "values = ";
    for (std::size_t i = 0; i < c.ladder.values.size(); ++i) {
      os << (i ? ", " : "") << fmt_double(c.ladder.values[i]);
    }
    os << "\n";
  }
  os << "\n[error]\n"
     << "norm_r = " << fmt_double(c.error_norm_r) << "\n"
     << "drop_large = " << c.window.drop_large << "\n"
     << "drop_small = " << c.window.drop_small << "\n\n";
  os << "[reference]\n"
     << "policy = " << to_string(c.reference) << "\n"
     << "tau_ref = " << fmt_double(c.tau_ref) << "\n\n";
  std::string formats;
  if (c.write_csv) formats += "csv";
  if (c.write_json) formats += formats.empty() ? "json" : ", json";
  os << "[output]\n"
     << "dir = " << c.output_dir.string() << "\n"
     << "formats = " << formats << "\n"
     << "plot_data = " << b(c.write_plot_data) << "\n\n";
  os << "[run]\nworkers = " << c.workers << "\n";
  return os.str();
}

}  // namespace lowreg::harness

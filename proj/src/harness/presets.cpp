#include "lowreg/harness/presets.hpp"

#include <functional>
#include <map>

#include "lowreg/error.hpp"

namespace lowreg::harness {

namespace {

using SK = SchemeKind;

void apply_scale(StudyConfig& c, PresetScale scale) {
  if (scale == PresetScale::Desk) {
    c.K = 1 << 8;
    c.ladder.kind = LadderKind::Dyadic;
    c.ladder.min_exp = 4;
    c.ladder.max_exp = 10;
  } else {
    c.K = 1 << 10;
    c.ladder.kind = LadderKind::Paper;
    c.ladder.denominator = 512;
  }
}

StudyConfig power_rough(const std::string& name, double p, double theta) {
  StudyConfig c;
  c.name = name;
  c.equation = Equation::PowerNls;
  c.p = p;
  c.mu = 1.0;
  c.initial.kind = InitialKind::Rough;
  c.initial.theta = theta;
  c.schemes = {SK::LowRegExp, SK::ClassicalExp, SK::LieSplit, SK::StrangSplit};
  c.T = 1.0;
  c.error_norm_r = 1.0;
  c.reference = theta == 5.0 ? ReferenceKind::StrangRefined : ReferenceKind::SelfRefined;
  return c;
}

StudyConfig quad(const std::string& name, double mu, double T, bool smooth) {
  StudyConfig c;
  c.name = name;
  c.equation = Equation::QuadU2;
  c.mu = mu;
  c.initial.kind = smooth ? InitialKind::SinCos : InitialKind::RawRand;
  c.schemes = {SK::QuadU2, SK::ClassicalExp, SK::LieQuad, SK::StrangQuad};
  c.T = T;
  c.error_norm_r = 0.0;
  c.reference = smooth ? ReferenceKind::StrangRefined : ReferenceKind::SelfRefined;
  return c;
}

StudyConfig noninteger(const std::string& name, double p) {
  StudyConfig c;
  c.name = name;
  c.equation = Equation::PowerNls;
  c.p = p;
  c.mu = 1.0;
  c.allow_noninteger_p = true;
  c.initial.kind = InitialKind::Sin;
  c.schemes = {SK::LowRegExp, SK::ClassicalExp, SK::LieSplit, SK::StrangSplit};
  c.T = 1.0;
  c.error_norm_r = 1.0;
  c.reference = ReferenceKind::SelfRefined;
  return c;
}

using Factory = std::function<StudyConfig()>;

const std::vector<std::pair<std::string, Factory>>& registry() {
  static const std::vector<std::pair<std::string, Factory>> presets = [] {
    std::vector<std::pair<std::string, Factory>> out;
    const std::pair<const char*, double> thetas[] = {{"1.5", 1.5}, {"2", 2.0}, {"3", 3.0}, {"5", 5.0}};
    for (const auto& [label, theta] : thetas) {
      const std::string name = std::string("cubic-rough-") + label;
      out.emplace_back(name, [name, theta = theta] { return power_rough(name, 1.0, theta); });
    }
    for (const auto& [label, theta] : thetas) {
      const std::string name = std::string("quintic-rough-") + label;
      out.emplace_back(name, [name, theta = theta] { return power_rough(name, 2.0, theta); });
    }
    out.emplace_back("quad-smooth", [] { return quad("quad-smooth", 1.0, 1.0, true); });
    out.emplace_back("quad-rough", [] { return quad("quad-rough", 1.0, 1.0, false); });
    out.emplace_back("quad-small-mu", [] { return quad("quad-small-mu", 0.01, 10.0, true); });
    out.emplace_back("quad-small-mu-rough",
                     [] { return quad("quad-small-mu-rough", 0.01, 10.0, false); });
    const std::pair<const char*, double> ps[] = {{"1", 1.0}, {"0.75", 0.75}, {"0.5", 0.5}, {"0.25", 0.25}};
    for (const auto& [label, p] : ps) {
      const std::string name = std::string("noninteger-p-") + label;
      out.emplace_back(name, [name, p = p] { return noninteger(name, p); });
    }
    return out;
  }();
  return presets;
}

}  // namespace

std::optional<PresetScale> parse_preset_scale(std::string_view name) {
  if (name == "desk") return PresetScale::Desk;
  if (name == "paper") return PresetScale::Paper;
  return std::nullopt;
}

std::vector<std::string> list_presets() {
  std::vector<std::string> names;
  for (const auto& [name, factory] : registry()) names.push_back(name);
  return names;
}

StudyConfig preset(std::string_view name, PresetScale scale) {
  for (const auto& [n, factory] : registry()) {
    if (n == name) {
      StudyConfig c = factory();
      apply_scale(c, scale);
      c.output_dir = std::filesystem::path("results") / n;
      return c;
    }
  }
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

}  // namespace lowreg::harness

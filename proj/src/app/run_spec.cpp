#include "ptdimer/app/run_spec.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ptdimer/errors.hpp"

namespace ptdimer::app {

DimerRealization preset_realization(Kind kind, double gamma_magnitude, double n_real, double coupling) {
  if (!(gamma_magnitude > 0.0)) throw InvalidConfiguration("preset |gamma| must be positive");
  return realization_for_gamma(kind, -gamma_magnitude, n_real, coupling);
}

DimerRealization RunSpec::realization() const {
  if (!explicit_realization()) return preset_realization(kind, gamma_magnitude, n_real, coupling);
  DimerRealization r;
  r.kind = kind;
  r.n_real = n_real;
  r.coupling = coupling;
  r.n_imag = n_imag.value_or(0.0);
  r.n_imag1 = n_imag1.value_or(0.0);
  r.n_imag2 = n_imag2.value_or(0.0);
  ptdimer::validate(r);
  return r;
}

void validate(const RunSpec& spec) {
  if (!std::isfinite(spec.zeta_min) || spec.zeta_min < 0.0) throw InvalidArgument("zeta_min must be >= 0");
  if (!std::isfinite(spec.zeta_max) || !(spec.zeta_max > spec.zeta_min)) {
    throw InvalidArgument("zeta_max must exceed zeta_min");
  }
  if (spec.zeta_steps < 2) throw InvalidArgument("steps must be at least 2");
  if (requires_positive_zeta(spec.observable) && spec.zeta_min == 0.0) {
    throw InvalidArgument(std::string("observable '") + std::string(to_string(spec.observable)) +
                          "' is undefined at zeta = 0; use zeta_min > 0");
  }
  (void)spec.realization();
}

RunSpec parse_run_spec(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");

  RunSpec spec;
  try {
    if (j.contains("kind")) {
      const auto text = j.at("kind").get<std::string>();
      const auto kind = parse_kind(text);
      if (!kind) throw InvalidArgument("unknown kind '" + text + "'");
      spec.kind = *kind;
    }
    if (j.contains("observable")) {
      const auto text = j.at("observable").get<std::string>();
      const auto observable = parse_observable(text);
      if (!observable) throw InvalidArgument("unknown observable '" + text + "'");
      spec.observable = *observable;
    }
    if (j.contains("gamma")) spec.gamma_magnitude = j.at("gamma").get<double>();
    if (j.contains("nr")) spec.n_real = j.at("nr").get<double>();
    if (j.contains("g")) spec.coupling = j.at("g").get<double>();
    if (j.contains("n_imag")) spec.n_imag = j.at("n_imag").get<double>();
    if (j.contains("n_imag1")) spec.n_imag1 = j.at("n_imag1").get<double>();
    if (j.contains("n_imag2")) spec.n_imag2 = j.at("n_imag2").get<double>();
    if (j.contains("zeta_min")) spec.zeta_min = j.at("zeta_min").get<double>();
    if (j.contains("zeta_max")) spec.zeta_max = j.at("zeta_max").get<double>();
    if (j.contains("steps")) spec.zeta_steps = j.at("steps").get<std::size_t>();
    if (j.contains("out")) spec.out = j.at("out").get<std::string>();
  } catch (const nlohmann::json::type_error& e) {
    throw InvalidArgument(std::string("config field has the wrong type: ") + e.what());
  }
  return spec;
}

RunSpec load_run_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_run_spec(text.str());
}

}  // namespace ptdimer::app

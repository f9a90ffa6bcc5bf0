#include "eulerfan/cli/config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "eulerfan/cli/const_expr.hpp"
#include "eulerfan/errors.hpp"

namespace eulerfan::cli {

namespace {

using nlohmann::json;

std::string join(const std::string& base, const std::string& key) { return base + "/" + key; }

double number_at(const json& node, const std::string& where) {
  if (node.is_number()) return node.get<double>();
  if (node.is_string()) {
    try {
      return eval_const_expr(node.get<std::string>());
    } catch (const ParseError& e) {
      throw ConfigError(where, e.message(), e.offset());
    }
  }
  throw ConfigError(where, "expected a number or an expression string");
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(join(where, key), "missing required field");
  return *it;
}

double required_number(const json& obj, const std::string& key, const std::string& where) {
  return number_at(require(obj, key, where), join(where, key));
}

std::optional<double> optional_number(const json& obj, const std::string& key,
                                      const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (it->is_string() && it->get<std::string>() == "auto") return std::nullopt;
  return number_at(*it, join(where, key));
}

bool optional_bool(const json& obj, const std::string& key, const std::string& where,
                   bool fallback) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  if (!it->is_boolean()) throw ConfigError(join(where, key), "expected true or false");
  return it->get<bool>();
}

State parse_state(const json& node, const std::string& where) {
  State s{required_number(node, "rho", where), required_number(node, "u", where),
          required_number(node, "v", where)};
  try {
    s.validate();
  } catch (const DomainError& e) {
    throw ConfigError(where, e.what());
  }
  return s;
}

template <class Fn>
void check(const std::string& where, Fn&& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    throw ConfigError(where, e.what());
  }
}

}  // namespace

ConfigError::ConfigError(std::string where, std::string message, std::optional<std::size_t> offset)
    : std::runtime_error((where.empty() ? std::string("config") : where) + ": " + message +
                         (offset ? " (offset " + std::to_string(*offset) + ")" : "")),
      where_(std::move(where)),
      detail_(std::move(message)),
      offset_(offset) {}

RunConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", e.what(), e.byte);
  }
  if (!doc.is_object()) throw ConfigError("", "top level must be an object");

  RunConfig cfg;
  if (auto it = doc.find("name"); it != doc.end() && it->is_string()) cfg.name = *it;

  if (auto it = doc.find("eos"); it != doc.end()) {
    cfg.data.eos.K = required_number(*it, "K", "/eos");
    cfg.data.eos.gamma = required_number(*it, "gamma", "/eos");
  }
  check("/eos", [&] { cfg.data.eos.validate(); });

  const json& riemann = require(doc, "riemann", "");
  cfg.data.left = parse_state(require(riemann, "left", "/riemann"), "/riemann/left");
  cfg.data.right = parse_state(require(riemann, "right", "/riemann"), "/riemann/right");

  if (auto it = doc.find("subsolution"); it != doc.end() && !it->is_null()) {
    const std::string w = "/subsolution";
    FanSubsolution sub;
    sub.mu0 = required_number(*it, "mu0", w);
    sub.mu1 = required_number(*it, "mu1", w);
    sub.rho1 = required_number(*it, "rho1", w);
    sub.u1 = required_number(*it, "u1", w);
    sub.v1 = required_number(*it, "v1", w);
    sub.gamma1 = required_number(*it, "gamma1", w);
    sub.delta1 = required_number(*it, "delta1", w);
    sub.C1 = required_number(*it, "C1", w);
    check(w, [&] { sub.validate(); });
    cfg.subsolution = sub;
  }

  if (auto it = doc.find("times"); it != doc.end()) {
    cfg.T = required_number(*it, "T", "/times");
    cfg.T0 = optional_number(*it, "T0", "/times").value_or(cfg.T / 2.0);
  }
  if (!(cfg.T > 0.0)) throw ConfigError("/times/T", "must be positive");
  if (!(cfg.T0 > 0.0 && cfg.T0 < cfg.T)) throw ConfigError("/times/T0", "must lie in (0, T)");

  if (auto it = doc.find("window"); it != doc.end()) {
    cfg.L1 = optional_number(*it, "L1", "/window").value_or(1.0);
    cfg.L2 = optional_number(*it, "L2", "/window");
  }
  if (!(cfg.L1 > 0.0)) throw ConfigError("/window/L1", "must be positive");
  if (cfg.L2 && !(*cfg.L2 > 0.0)) throw ConfigError("/window/L2", "must be positive");

  if (auto it = doc.find("tolerances"); it != doc.end()) {
    const std::string w = "/tolerances";
    cfg.tolerances.residual_abs =
        optional_number(*it, "residual_abs", w).value_or(cfg.tolerances.residual_abs);
    cfg.tolerances.relative = optional_number(*it, "relative", w).value_or(cfg.tolerances.relative);
    cfg.tolerances.strict = optional_number(*it, "strict", w).value_or(cfg.tolerances.strict);
    if (!(cfg.tolerances.residual_abs > 0.0 && cfg.tolerances.relative > 0.0 &&
          cfg.tolerances.strict >= 0.0)) {
      throw ConfigError(w, "tolerances must be positive");
    }
  }

  if (auto it = doc.find("expect"); it != doc.end()) {
    const std::string w = "/expect";
    Expectations& e = cfg.expect;
    e.rho_M_below = optional_number(*it, "rho_M_below", w);
    e.rho_M_above = optional_number(*it, "rho_M_above", w);
    e.sigma_below = optional_number(*it, "sigma_below", w);
    e.sigma_above = optional_number(*it, "sigma_above", w);
    if (auto c = it->find("counterexample"); c != it->end() && !c->is_null()) {
      if (!c->is_boolean()) throw ConfigError(join(w, "counterexample"), "expected true or false");
      e.counterexample = c->get<bool>();
    }
    e.K_ex = optional_number(*it, "K_ex", w);
    e.K_1d_closed_form = optional_bool(*it, "K_1d_closed_form", w, false);
    e.horizon_beyond_2T0 = optional_bool(*it, "horizon_beyond_2T0", w, false);
  }

  if (auto it = doc.find("output"); it != doc.end()) {
    if (auto d = it->find("dir"); d != it->end()) {
      if (!d->is_string()) throw ConfigError("/output/dir", "expected a string");
      cfg.output_dir = *d;
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace eulerfan::cli

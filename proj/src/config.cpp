#include "rotorcom/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rotorcom/constants.hpp"
#include "rotorcom/errors.hpp"
#include "rotorcom/rotor.hpp"

namespace rotorcom {

namespace {

const std::set<std::string> kKnownKeys = {
    "c2_hz",       "q_hz",        "b_field_gauss", "delta_hf_hz",
    "n_atoms",     "u0_hz",       "gamma_hz",      "kappa_l_hz",
    "delta_hz",    "delta_over_gamma", "d_theta",  "temperature_k"};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size())
      throw ConfigError("trailing characters after number for " + key + ": " + value);
    if (!std::isfinite(v)) throw ConfigError(key + " must be finite");
    return v;
  } catch (const std::invalid_argument&) {
    throw ConfigError("not a number for " + key + ": " + value);
  } catch (const std::out_of_range&) {
    throw ConfigError("number out of range for " + key + ": " + value);
  }
}

}  // namespace

PhysicalParams parse_config_text(const std::string& text, const KeyValues& overrides) {
  std::map<std::string, std::string> kv;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!kKnownKeys.count(key))
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key " + key);
    if (value.empty())
      throw ConfigError("line " + std::to_string(line_no) + ": empty value for " + key);
    if (kv.count(key))
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key " + key);
    kv[key] = value;
  }
  for (const auto& [key, value] : overrides) {
    if (!kKnownKeys.count(key)) throw ConfigError("unknown key " + key);
    kv[key] = value;  // overrides win over the file and over earlier overrides
  }

  auto has = [&](const char* k) { return kv.count(k) != 0; };
  auto num = [&](const char* k) { return parse_number(k, kv.at(k)); };

  if (has("q_hz") && (has("b_field_gauss") || has("delta_hf_hz")))
    throw ConfigError("give either q_hz or the b_field_gauss / delta_hf_hz pair");
  if (has("b_field_gauss") != has("delta_hf_hz"))
    throw ConfigError("b_field_gauss and delta_hf_hz must be given together");
  if (!has("q_hz") && !has("b_field_gauss"))
    throw ConfigError("missing q_hz (or b_field_gauss + delta_hf_hz)");
  if (has("delta_hz") && has("delta_over_gamma"))
    throw ConfigError("give either delta_hz or delta_over_gamma, not both");
  if (!has("delta_hz") && !has("delta_over_gamma"))
    throw ConfigError("missing delta_hz (or delta_over_gamma)");
  for (const char* k : {"c2_hz", "n_atoms", "u0_hz", "gamma_hz", "kappa_l_hz"})
    if (!has(k)) throw ConfigError(std::string("missing ") + k);

  PhysicalParams p;
  p.c2 = kTwoPi * num("c2_hz");
  const double n_raw = num("n_atoms");
  if (n_raw != std::floor(n_raw) || n_raw < 2 || n_raw > 9e15)
    throw ConfigError("n_atoms must be an integer >= 2");
  p.n_atoms = static_cast<std::int64_t>(n_raw);
  p.u0 = kTwoPi * num("u0_hz");
  p.gamma = kTwoPi * num("gamma_hz");
  p.kappa_l = kTwoPi * num("kappa_l_hz");
  if (has("q_hz")) {
    p.q = kTwoPi * num("q_hz");
  } else {
    const double b_tesla = 1e-4 * num("b_field_gauss");
    const double delta_hf = kTwoPi * num("delta_hf_hz");
    if (!(delta_hf > 0)) throw ConfigError("delta_hf_hz must be positive");
    p.q = quadratic_zeeman(b_tesla, delta_hf);
  }
  p.delta = has("delta_hz") ? kTwoPi * num("delta_hz")
                            : num("delta_over_gamma") * p.gamma;
  p.temperature = has("temperature_k") ? num("temperature_k") : 0.0;
  p.d_theta = has("d_theta") ? num("d_theta") : 0.0;

  try {
    p.validate();
    if (!has("d_theta")) {
      // weak default friction: quality factor 100 on the bare mode
      const RotorModel m = build_rotor(p);
      p.d_theta = 0.01 * m.omega_theta * m.inertia;
    }
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
  return p;
}

PhysicalParams load_config_file(const std::string& path, const KeyValues& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), overrides);
}

}  // namespace rotorcom

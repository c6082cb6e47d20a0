#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "henkato/errors.hpp"
#include "henkato/gaussian_rational.hpp"
#include "henkato/germ.hpp"
#include "henkato/henon.hpp"
#include "henkato/kato.hpp"
#include "henkato/reconstruct.hpp"

namespace henkato {

using json = nlohmann::ordered_json;

namespace io {

inline GaussianRational coeff_from_json(const json& v, const std::string& where) {
  if (v.is_string()) {
    auto g = GaussianRational::parse(v.get<std::string>());
    if (!g) throw ValidationError("bad coefficient at " + where + ": '" + v.get<std::string>() + "'");
    return *g;
  }
  if (v.is_number_integer()) return GaussianRational(v.get<long>());
  if (v.is_object()) {
    GaussianRational re, im;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it.key() != "re" && it.key() != "im")
        throw ValidationError("unexpected key '" + it.key() + "' at " + where);
    }
    if (v.contains("re")) re = coeff_from_json(v.at("re"), where + ".re");
    if (v.contains("im")) im = coeff_from_json(v.at("im"), where + ".im");
    if (!re.is_real() || !im.is_real())
      throw ValidationError("parts of a coefficient must be plain rationals at " + where);
    return GaussianRational(re.re(), im.re());
  }
  throw ValidationError("coefficient at " + where + " must be a string, integer, or {re,im} object");
}

inline json coeff_to_json(const GaussianRational& v) {
  return json{{"re", v.re().get_str()}, {"im", v.im().get_str()}};
}

inline HenonMap map_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("factors"))
    throw ValidationError("map document must be an object with a 'factors' array");
  const json& fz = doc.at("factors");
  if (!fz.is_array() || fz.empty()) throw ValidationError("'factors' must be a nonempty array");
  std::vector<HenonFactor> factors;
  for (std::size_t idx = 0; idx < fz.size(); ++idx) {
    std::string where = "factors[" + std::to_string(idx) + "]";
    const json& f = fz[idx];
    if (!f.is_object() || !f.contains("poly") || !f.contains("a"))
      throw ValidationError(where + " must be an object with 'poly' and 'a'");
    const json& poly = f.at("poly");
    if (!poly.is_array() || poly.size() < 3)
      throw ValidationError(where + ".poly must be a dense ascending array of degree >= 2");
    HenonFactor hf;
    hf.d = static_cast<long>(poly.size()) - 1;
    for (std::size_t k = 0; k < poly.size(); ++k)
      hf.p_coeffs.push_back(coeff_from_json(poly[k], where + ".poly[" + std::to_string(k) + "]"));
    hf.a = coeff_from_json(f.at("a"), where + ".a");
    factors.push_back(std::move(hf));
  }
  HenonMap m(std::move(factors));
  auto bad = validate(m);
  if (!bad.empty()) {
    std::string msg = "invalid map:";
    for (const auto& b : bad) msg += " [" + b + "]";
    throw ValidationError(msg);
  }
  return m;
}

inline json map_to_json(const HenonMap& m) {
  json factors = json::array();
  for (long i = 1; i <= m.size(); ++i) {
    const HenonFactor& f = m.factor(i);
    json poly = json::array();
    for (const auto& c : f.p_coeffs) poly.push_back(coeff_to_json(c));
    factors.push_back(json{{"poly", std::move(poly)}, {"a", coeff_to_json(f.a)}});
  }
  return json{{"factors", std::move(factors)}};
}

inline json normal_form_to_json(const NormalForm& nf) {
  json g = json::object();
  for (long n = 1; n < static_cast<long>(nf.g.size()); ++n)
    if (!nf.g_at(n).is_zero()) g[std::to_string(n)] = nf.g_at(n).str();
  return json{{"p", nf.p},
              {"lambda", nf.lambda.str()},
              {"g", std::move(g)},
              {"c_undetermined", nf.c_undetermined}};
}

inline NormalForm normal_form_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("p") || !doc.contains("lambda") || !doc.contains("g"))
    throw ValidationError("normal-form document needs 'p', 'lambda', and 'g'");
  NormalForm nf;
  if (!doc.at("p").is_number_integer() || doc.at("p").get<long>() < 2)
    throw ValidationError("'p' must be an integer >= 2");
  nf.p = doc.at("p").get<long>();
  nf.lambda = coeff_from_json(doc.at("lambda"), "lambda");
  if (nf.lambda.is_zero()) throw ValidationError("'lambda' must be nonzero");
  nf.c_undetermined = nf.lambda.is_one();
  nf.g.assign(static_cast<std::size_t>(2 * nf.p - 1), GaussianRational());
  const json& g = doc.at("g");
  if (!g.is_object()) throw ValidationError("'g' must be an object keyed by exponent");
  for (auto it = g.begin(); it != g.end(); ++it) {
    long n = 0;
    try {
      std::size_t used = 0;
      n = std::stol(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("");
    } catch (...) {
      throw ValidationError("bad exponent key '" + it.key() + "' in g");
    }
    if (n < 1 || n > 2 * nf.p - 2)
      throw ValidationError("g exponent " + std::to_string(n) + " outside 1..2p-2");
    nf.g[static_cast<std::size_t>(n)] = coeff_from_json(it.value(), "g." + it.key());
  }
  return nf;
}

inline std::vector<long> degrees_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("degrees"))
    throw ValidationError("expected an object with a 'degrees' array");
  const json& ds = doc.at("degrees");
  if (!ds.is_array() || ds.empty()) throw ValidationError("'degrees' must be a nonempty array");
  std::vector<long> d;
  for (const auto& v : ds) {
    if (!v.is_number_integer() || v.get<long>() < 2)
      throw ValidationError("degrees must be integers >= 2");
    d.push_back(v.get<long>());
  }
  return d;
}

inline std::map<std::pair<long, long>, GaussianRational> indexed_coeffs_from_json(
    const json& obj, const std::string& where) {
  if (!obj.is_object()) throw ValidationError("'" + where + "' must be an object");
  std::map<std::pair<long, long>, GaussianRational> out;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    long i = 0;
    try {
      std::size_t used = 0;
      i = std::stol(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("");
    } catch (...) {
      throw ValidationError("bad factor index '" + it.key() + "' in " + where);
    }
    if (!it.value().is_object())
      throw ValidationError(where + "." + it.key() + " must be an object keyed by l");
    for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
      long l = 0;
      try {
        std::size_t used = 0;
        l = std::stol(jt.key(), &used);
        if (used != jt.key().size()) throw std::invalid_argument("");
      } catch (...) {
        throw ValidationError("bad slot index '" + jt.key() + "' in " + where + "." + it.key());
      }
      out[{i, l}] = coeff_from_json(jt.value(), where + "." + it.key() + "." + jt.key());
    }
  }
  return out;
}

inline TargetParameters target_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("target document must be an object");
  if (!doc.contains("lambda")) throw ValidationError("target document needs 'lambda'");
  GaussianRational lambda = coeff_from_json(doc.at("lambda"), "lambda");
  std::vector<long> d = degrees_from_json(doc);
  bool tilde = doc.contains("alpha_tilde");
  bool plain = doc.contains("alpha");
  if (tilde == plain)
    throw ValidationError("target document needs exactly one of 'alpha_tilde' or 'alpha'");
  if (tilde)
    return TargetParameters(lambda, d, indexed_coeffs_from_json(doc.at("alpha_tilde"), "alpha_tilde"));
  return convert_parametrization(lambda, d, indexed_coeffs_from_json(doc.at("alpha"), "alpha"));
}

inline json profile_to_json(const DlousskySequence& s) {
  json arr = json::array();
  for (long v : s) arr.push_back(v);
  return arr;
}

inline TowerDescription tower_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("steps"))
    throw ValidationError("tower document needs a 'steps' array");
  const json& steps = doc.at("steps");
  if (!steps.is_array() || steps.empty()) throw ValidationError("'steps' must be a nonempty array");
  TowerDescription t;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const json& s = steps[k];
    std::string where = "steps[" + std::to_string(k) + "]";
    if (!s.is_object()) throw ValidationError(where + " must be an object");
    TowerStep step;
    if (s.contains("touches")) {
      if (!s.at("touches").is_array()) throw ValidationError(where + ".touches must be an array");
      for (const auto& v : s.at("touches")) {
        if (!v.is_number_integer()) throw ValidationError(where + ".touches must hold integers");
        step.touches.push_back(v.get<long>());
      }
    }
    if (s.contains("glued_on_last")) {
      if (!s.at("glued_on_last").is_boolean())
        throw ValidationError(where + ".glued_on_last must be a boolean");
      step.glued_on_last = s.at("glued_on_last").get<bool>();
    }
    t.steps.push_back(std::move(step));
  }
  return t;
}

inline json tower_to_json(const TowerDescription& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json touches = json::array();
    for (long v : s.touches) touches.push_back(v);
    steps.push_back(json{{"touches", std::move(touches)}, {"glued_on_last", s.glued_on_last}});
  }
  return json{{"steps", std::move(steps)}};
}

}  // namespace io
}  // namespace henkato

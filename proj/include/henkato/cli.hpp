#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "henkato/decide.hpp"
#include "henkato/errors.hpp"
#include "henkato/germ.hpp"
#include "henkato/henon.hpp"
#include "henkato/io.hpp"
#include "henkato/kato.hpp"
#include "henkato/reconstruct.hpp"
#include "henkato/selftest.hpp"
#include "henkato/series.hpp"

namespace henkato {
namespace cli {

struct Options {
  std::string input;   // empty = stdin
  std::string second;  // for binary decisions
  long order = 0;      // 0 = default 2*deg(F)
  bool pretty = false;
};

namespace detail {

inline json read_json(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty()) {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad JSON: ") + e.what());
  }
}

inline void emit(const json& doc, const Options& opt, std::ostream& out) {
  out << (opt.pretty ? doc.dump(2) : doc.dump()) << "\n";
}

inline json decision_to_json(const std::optional<ConjugacyWitness>& w) {
  if (!w) return json{{"verdict", "no"}};
  json doc{{"verdict", "yes"}, {"e", w->e}, {"M", w->modulus}};
  if (auto zeta = zeta_from_exponent(w->e, w->modulus)) doc["zeta"] = zeta->str();
  return doc;
}

inline json decision_to_json(const std::optional<BiholoWitness>& w) {
  if (!w) return json{{"verdict", "no"}};
  json doc{{"verdict", "yes"}, {"k", w->k}, {"e", w->e}, {"M", w->modulus}};
  if (auto zeta = zeta_from_exponent(w->e, w->modulus)) doc["zeta"] = zeta->str();
  return doc;
}

}  // namespace detail

// Runs one subcommand. Exit codes: 0 ok, 1 internal contradiction,
// 2 validation error, 64 usage error.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact computer algebra for generalized Henon germs at infinity and their Kato surfaces"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_second) {
    cmd->add_option("-i,--input", opt.input, "input JSON file (default: stdin)");
    if (with_second) cmd->add_option("-s,--second", opt.second, "second input JSON file")->required();
    cmd->add_option("--order", opt.order, "working order override (default 2*deg F)");
    cmd->add_flag("--pretty", opt.pretty, "indent JSON output");
  };

  CLI::App* c_normal = app.add_subcommand("normal-form", "normal form of the germ at infinity");
  add_common(c_normal, false);
  CLI::App* c_recon = app.add_subcommand("reconstruct", "map back from a normal form");
  add_common(c_recon, false);
  CLI::App* c_solve = app.add_subcommand("solve", "map realizing prescribed germ coefficients");
  add_common(c_solve, false);
  CLI::App* c_dloussky = app.add_subcommand("dloussky", "self-intersection profile, closed form");
  add_common(c_dloussky, false);
  CLI::App* c_tower = app.add_subcommand("tower-sim", "run the blow-up bookkeeping");
  add_common(c_tower, false);
  CLI::App* c_inv = app.add_subcommand("invariants", "(p,q,j), type, and b2 for given degrees");
  add_common(c_inv, false);
  CLI::App* c_type = app.add_subcommand("type", "gcd-descent type of a support");
  add_common(c_type, false);
  CLI::App* c_b2 = app.add_subcommand("b2", "second Betti number for given degrees");
  add_common(c_b2, false);
  CLI::App* c_conj = app.add_subcommand("conjugate", "conjugacy near infinity of two maps");
  add_common(c_conj, true);
  CLI::App* c_biho = app.add_subcommand("biholomorphic", "biholomorphism of the Kato surfaces");
  add_common(c_biho, true);
  CLI::App* c_self = app.add_subcommand("selftest", "run the built-in consistency suites");
  c_self->add_flag("--pretty", opt.pretty, "indent JSON output");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 64;
  }

  try {
    if (c_normal->parsed()) {
      HenonMap m = io::map_from_json(detail::read_json(opt.input, in));
      detail::emit(io::normal_form_to_json(normal_form(m, opt.order)), opt, out);
    } else if (c_recon->parsed()) {
      NormalForm nf = io::normal_form_from_json(detail::read_json(opt.input, in));
      detail::emit(io::map_to_json(henon_from_normal_form(nf)), opt, out);
    } else if (c_solve->parsed()) {
      TargetParameters t = io::target_from_json(detail::read_json(opt.input, in));
      detail::emit(io::map_to_json(solve_surjectivity(t)), opt, out);
    } else if (c_dloussky->parsed()) {
      auto d = io::degrees_from_json(detail::read_json(opt.input, in));
      detail::emit(json{{"profile", io::profile_to_json(dloussky_closed(d))}, {"b2", b2(d)}}, opt,
                   out);
    } else if (c_tower->parsed()) {
      json doc = detail::read_json(opt.input, in);
      TowerDescription t =
          doc.contains("steps") ? io::tower_from_json(doc) : build_henon_tower(io::degrees_from_json(doc));
      json result{{"tower", io::tower_to_json(t)},
                  {"profile", io::profile_to_json(simulate_tower(t))}};
      detail::emit(result, opt, out);
    } else if (c_inv->parsed()) {
      auto d = io::degrees_from_json(detail::read_json(opt.input, in));
      KatoInvariants inv = invariants_closed(d);
      json type = json::array();
      for (long m : inv.type) type.push_back(m);
      detail::emit(json{{"p", inv.p}, {"q", inv.q}, {"j", inv.j}, {"type", std::move(type)},
                        {"b2", b2(d)}},
                   opt, out);
    } else if (c_type->parsed()) {
      json doc = detail::read_json(opt.input, in);
      long p = 0;
      std::set<long> support;
      if (doc.contains("support")) {
        if (!doc.contains("p") || !doc.at("p").is_number_integer())
          throw ValidationError("type needs integer 'p'");
        p = doc.at("p").get<long>();
        for (const auto& v : doc.at("support")) {
          if (!v.is_number_integer()) throw ValidationError("'support' must hold integers");
          support.insert(v.get<long>());
        }
      } else {
        NormalForm nf = io::normal_form_from_json(doc);
        p = nf.p;
        support = nf.support();
      }
      json type = json::array();
      for (long m : type_from_support(p, support)) type.push_back(m);
      detail::emit(json{{"p", p}, {"type", std::move(type)}}, opt, out);
    } else if (c_b2->parsed()) {
      auto d = io::degrees_from_json(detail::read_json(opt.input, in));
      detail::emit(json{{"b2", b2(d)}}, opt, out);
    } else if (c_conj->parsed()) {
      HenonMap f = io::map_from_json(detail::read_json(opt.input, in));
      HenonMap g = io::map_from_json(detail::read_json(opt.second, in));
      detail::emit(detail::decision_to_json(conjugate_near_infinity(f, g)), opt, out);
    } else if (c_biho->parsed()) {
      HenonMap f = io::map_from_json(detail::read_json(opt.input, in));
      HenonMap g = io::map_from_json(detail::read_json(opt.second, in));
      detail::emit(detail::decision_to_json(kato_biholomorphic(f, g)), opt, out);
    } else if (c_self->parsed()) {
      SelfTestReport report = run_selftest();
      json checks = json::array();
      for (const auto& c : report.checks)
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"total", c.total}});
      detail::emit(json{{"checks", std::move(checks)},
                        {"passed", report.passed()},
                        {"failed", report.failed()},
                        {"ok", report.ok()}},
                   opt, out);
      return report.ok() ? 0 : 1;
    }
    return 0;
  } catch (const InternalError& e) {
    err << json{{"error", {{"code", 1}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << json{{"error", {{"code", 2}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << json{{"error", {{"code", 2}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << json{{"error", {{"code", 2}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  }
}

}  // namespace cli
}  // namespace henkato

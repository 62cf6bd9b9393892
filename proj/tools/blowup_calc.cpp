// blowup-calc: exact intersection-theory and sheaf-invariant calculators
// for the blow-up of P^3 at a point.

#include "blowup/blowup.hpp"
#include "blowup/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace blowup;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "blowup-calc/1";

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitUnknownCommand = 64;
constexpr int kExitBadLiteral = 65;

struct Config {
  int epsilon = +1;
  std::string output = "json";  // json | csv | pretty
  bool paper_literal_mode = false;
};

// "blowup.toml"-style key/value file in the working directory, then the
// BLOWUP_EPSILON environment variable on top.
Config load_config() {
  Config cfg;
  std::ifstream in("blowup.toml");
  if (in) {
    for (std::string line; std::getline(in, line);) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\"");
        const auto b = s.find_last_not_of(" \t\"");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
      };
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key == "epsilon") cfg.epsilon = parse_integer(value) >= 0 ? +1 : -1;
      else if (key == "output") cfg.output = value;
      else if (key == "paper_literal_mode")
        cfg.paper_literal_mode = value == "true" || value == "1";
    }
  }
  if (const char* env = std::getenv("BLOWUP_EPSILON"))
    cfg.epsilon = parse_integer(env) >= 0 ? +1 : -1;
  return cfg;
}

ordered_json table_json(const CohomTable& t) {
  return {{"h0", t.h0}, {"h1", t.h1}, {"h2", t.h2}, {"h3", t.h3}};
}

ordered_json chern_json(const ChernData& d) {
  return {{"r", d.r}, {"a", d.a}, {"b", d.b},
          {"k", d.k}, {"l", d.l}, {"m", d.m}};
}

const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "unknown";
  }
}

void emit(const Config& cfg, ordered_json payload,
          const std::string& pretty_field = {}) {
  payload["schema"] = kSchema;
  if (cfg.output == "pretty" && !pretty_field.empty())
    std::cout << payload.at(pretty_field).dump() << "\n";
  else
    std::cout << payload.dump() << "\n";
}

ChernData chern_from_flags(long long rank, const std::string& c1,
                           const std::string& c2, long long m) {
  const auto [a, b] = parse_int_pair(c1);
  const auto [k, l] = parse_int_pair(c2);
  return make_chern_data(rank, a, b, k, l, m, /*allow_parity_violation=*/true);
}

std::vector<LineTag> parse_step_tags(const std::string& steps) {
  std::vector<LineTag> tags;
  for (const auto& c : parse_curve_literal(steps).components) {
    if (c.tag == LineTag::Custom)
      throw ParseError("transform steps must be catalog lines (P, F, X)");
    tags.push_back(c.tag);
  }
  return tags;
}

int run(int argc, char** argv) {
  const Config cfg = load_config();
  set_epsilon(cfg.epsilon);

  CLI::App app{"Exact Chow-ring, cohomology and instanton bookkeeping on the "
               "blow-up of P^3 at a point"};
  app.require_subcommand(1);

  // ---- chi ----
  auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic chi(F(p,q))");
  long long chi_rank = 1, chi_m = 0;
  std::string chi_c1 = "0,0", chi_c2 = "0,0", chi_twist = "0,0";
  chi_cmd->add_option("--rank", chi_rank);
  chi_cmd->add_option("--c1", chi_c1);
  chi_cmd->add_option("--c2", chi_c2);
  chi_cmd->add_option("--m", chi_m);
  chi_cmd->add_option("--twist", chi_twist);

  // ---- twist ----
  auto* twist_cmd = app.add_subcommand("twist", "Chern data of F(p,q)");
  long long tw_rank = 2, tw_m = 0;
  std::string tw_c1 = "0,0", tw_c2 = "0,0", tw_twist = "0,0";
  twist_cmd->add_option("--rank", tw_rank);
  twist_cmd->add_option("--c1", tw_c1);
  twist_cmd->add_option("--c2", tw_c2);
  twist_cmd->add_option("--m", tw_m);
  twist_cmd->add_option("--twist", tw_twist);

  // ---- cohom ----
  auto* cohom_cmd = app.add_subcommand("cohom", "Cohomology table of O(p,q) or Omega1(p,q)");
  std::string cohom_bundle;
  cohom_cmd->add_option("--bundle", cohom_bundle)->required();

  // ---- cohom-grid ----
  auto* grid_cmd = app.add_subcommand("cohom-grid", "Cohomology tables on a rectangle");
  long long pmin = 0, pmax = 0, qmin = 0, qmax = 0;
  std::string grid_format, grid_kind = "O";
  grid_cmd->add_option("--pmin", pmin)->required();
  grid_cmd->add_option("--pmax", pmax)->required();
  grid_cmd->add_option("--qmin", qmin)->required();
  grid_cmd->add_option("--qmax", qmax)->required();
  grid_cmd->add_option("--format", grid_format);
  grid_cmd->add_option("--kind", grid_kind);

  // ---- monad ----
  auto* monad_cmd = app.add_subcommand("monad", "Monad term multiplicities");
  long long monad_rank = 2, monad_gamma = 0;
  std::string monad_charge;
  monad_cmd->add_option("--rank", monad_rank);
  monad_cmd->add_option("--charge", monad_charge)->required();
  monad_cmd->add_option("--gamma", monad_gamma);

  // ---- check-instanton ----
  auto* check_cmd = app.add_subcommand("check-instanton",
                                       "Definition vanishing checklist");
  std::string tables_path;
  check_cmd->add_option("--tables", tables_path)->required();

  // ---- transform ----
  auto* transform_cmd = app.add_subcommand("transform",
                                           "Iterated elementary transforms");
  std::string seed_literal, steps_literal;
  transform_cmd->add_option("--seed", seed_literal)->required();
  transform_cmd->add_option("--steps", steps_literal);

  // ---- deform ----
  auto* deform_cmd = app.add_subcommand("deform", "Deformation report for a line transform");
  std::string deform_charge, deform_line;
  deform_cmd->add_option("--charge", deform_charge)->required();
  deform_cmd->add_option("--line", deform_line)->required();

  // ---- component-dim ----
  auto* dim_cmd = app.add_subcommand("component-dim", "t'Hooft component dimension");
  std::string dim_charge;
  dim_cmd->add_option("--charge", dim_charge)->required();

  app.add_subcommand("selftest", "Run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (chi_cmd->parsed()) {
    const ChernData d = chern_from_flags(chi_rank, chi_c1, chi_c2, chi_m);
    const auto [p, q] = parse_int_pair(chi_twist);
    const long long chi = euler_characteristic(d, {p, q});
    emit(cfg, {{"chi", chi}}, "chi");
  } else if (twist_cmd->parsed()) {
    const ChernData d = chern_from_flags(tw_rank, tw_c1, tw_c2, tw_m);
    const auto [p, q] = parse_int_pair(tw_twist);
    emit(cfg, chern_json(twist(d, {p, q})));
  } else if (cohom_cmd->parsed()) {
    emit(cfg, table_json(cohomology_table(parse_bundle(cohom_bundle))));
  } else if (grid_cmd->parsed()) {
    const BundleKind kind = grid_kind == "Omega1" ? BundleKind::OmegaTwist
                                                  : BundleKind::LineBundle;
    if (grid_format == "csv" || (grid_format.empty() && cfg.output == "csv")) {
      std::cout << "p,q,h0,h1,h2,h3\n";
      for (long long p = pmin; p <= pmax; ++p)
        for (long long q = qmin; q <= qmax; ++q) {
          const CohomTable t = cohomology_table({kind, {p, q}});
          std::cout << p << "," << q << "," << t.h0 << "," << t.h1 << ","
                    << t.h2 << "," << t.h3 << "\n";
        }
    } else {
      ordered_json cells = ordered_json::array();
      for (long long p = pmin; p <= pmax; ++p)
        for (long long q = qmin; q <= qmax; ++q) {
          ordered_json cell = table_json(cohomology_table({kind, {p, q}}));
          cell["p"] = p;
          cell["q"] = q;
          cells.push_back(std::move(cell));
        }
      emit(cfg, {{"cells", std::move(cells)}});
    }
  } else if (monad_cmd->parsed()) {
    const auto [k, l] = parse_int_pair(monad_charge);
    const InstantonData d =
        make_instanton(monad_rank, k, l, 0, Stability::Unknown, monad_gamma);
    const MonadShape s = monad_shape(d);
    const ChowClass total = monad_total_character(s);
    emit(cfg, {{"terms",
                {{"O(-1,1) deg -1", s.left_line},
                 {"Omega1(0,-1) deg -1", s.left_omega},
                 {"O(-1,1) deg 0", s.mid_line},
                 {"Omega1(1,-1) deg 0", s.mid_omega},
                 {"O(-1,0) deg 0", s.mid_line_b},
                 {"O deg 1", s.right_line}}},
               {"admissible", true},
               {"rank_check", total.c0 == monad_rank},
               {"c1_check", total.cH == 0 && total.cE == 0},
               {"chern_check", monad_chern_check(d, s)}});
  } else if (check_cmd->parsed()) {
    std::ifstream in(tables_path);
    if (!in) throw std::invalid_argument("cannot open " + tables_path);
    json doc = json::parse(in);
    const InstantonData d = make_instanton(
        doc.value("rank", 2LL), doc.at("charge").at(0).get<long long>(),
        doc.at("charge").at(1).get<long long>(), doc.value("m", 0LL),
        Stability::Unknown, doc.value("gamma", 0LL));
    TableMap tables;
    for (const auto& [key, value] : doc.at("tables").items()) {
      const auto [p, q] = parse_int_pair(key);
      tables[{p, q}] = {value.at(0).get<long long>(),
                        value.at(1).get<long long>(),
                        value.at(2).get<long long>(),
                        value.at(3).get<long long>()};
    }
    const ChecklistReport rep = definition_checklist(d, tables);
    emit(cfg, {{"h0(F)", status_str(rep.h0_untwisted)},
               {"h3(F(-4,1))", status_str(rep.h3_m4_1)},
               {"h1(F(-2,1))", status_str(rep.h1_m2_1)},
               {"h2(F(-2,1))", status_str(rep.h2_m2_1)},
               {"h2(F(0,-1))", status_str(rep.h2_0_m1)},
               {"h2(F(-1,1))", status_str(rep.h2_m1_1)},
               {"chi(F(-2,1))", status_str(rep.chi_m2_1)},
               {"instanton", rep.all_pass()}});
  } else if (transform_cmd->parsed()) {
    if (!seed_literal.starts_with("thooft:"))
      throw ParseError("seed must be of the form thooft:k,l");
    const auto [k, l] = parse_int_pair(seed_literal.substr(7));
    const THooftSeed seed = thooft_seed(k, l);
    std::vector<TransformStep> steps;
    for (LineTag tag : parse_step_tags(steps_literal)) {
      const CurveComponent c = tag == LineTag::PullbackLine ? pullback_line()
                               : tag == LineTag::FiberLine  ? fiber_line()
                                                            : exceptional_line();
      steps.push_back({{{{c}}, {c.genus - 1}}});
    }
    const Trajectory traj = iterate_transforms(seed.instanton(), steps);
    ordered_json out = ordered_json::array();
    long long literal_l = l;
    for (std::size_t i = 0; i < traj.steps.size(); ++i) {
      const auto& s = traj.steps[i];
      ordered_json entry = {
          {"charge", {s.state.chern.k, s.state.chern.l}},
          {"admissible", is_admissible_charge(2, s.state.chern.k, s.state.chern.l)},
          {"stable", s.state.stability == Stability::MuStable},
          {"quotient_charge", {s.quotient.first, s.quotient.second}}};
      if (cfg.paper_literal_mode) {
        // alternative reading of the exceptional-line example: charge gains
        // +1 on E^2 instead of the profile-derived -1
        literal_l += s.quotient.second < 0 ? +1 : s.quotient.second;
        entry["paper_literal_charge"] = {s.state.chern.k, literal_l};
      }
      out.push_back(std::move(entry));
    }
    ordered_json payload = {{"seed", {k, l}}, {"trajectory", std::move(out)}};
    if (!traj.ok) payload["failed_step"] = traj.failed_index;
    emit(cfg, std::move(payload));
    if (!traj.ok) return kExitValidation;
  } else if (deform_cmd->parsed()) {
    const auto [k, l] = parse_int_pair(deform_charge);
    LineTag tag;
    if (deform_line == "P") tag = LineTag::PullbackLine;
    else if (deform_line == "F") tag = LineTag::FiberLine;
    else if (deform_line == "X") tag = LineTag::ExceptionalLine;
    else throw ParseError("--line must be P or F (X has no deformation data)");
    const DeformationReport rep = transform_deformation_report(k, l, tag);
    emit(cfg, {{"ext1", rep.ext1},
               {"h0_local_ext", rep.h0_local_ext},
               {"h1_local_ext", rep.h1_local_ext},
               {"h1_hom", rep.h1_hom},
               {"component_dimension", rep.component_dimension},
               {"smooth", rep.smooth},
               {"boundary_component",
                {rep.boundary_component.first, rep.boundary_component.second}},
               {"notes", rep.notes}});
  } else if (dim_cmd->parsed()) {
    const auto [k, l] = parse_int_pair(dim_charge);
    emit(cfg, {{"dimension", thooft_component_dimension(k, l)}}, "dimension");
  } else {  // selftest
    bool all = true;
    for (const auto& r : selftest::run_all()) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
                << (r.detail.empty() ? "" : " -- " + r.detail) << "\n";
      all &= r.pass;
    }
    return all ? kExitOk : 1;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  static const std::set<std::string> known = {
      "chi",          "twist",     "cohom",         "cohom-grid",
      "monad",        "check-instanton", "transform", "deform",
      "component-dim", "selftest",  "--help",        "-h"};
  if (argc < 2 || !known.count(argv[1])) {
    std::cerr << "unknown subcommand" << (argc > 1 ? std::string(" '") + argv[1] + "'" : "")
              << "; see --help\n";
    return kExitUnknownCommand;
  }
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << json{{"schema", kSchema}, {"error", e.what()},
                      {"kind", "parse"}}.dump()
              << "\n";
    return kExitBadLiteral;
  } catch (const std::exception& e) {
    std::cout << json{{"schema", kSchema}, {"error", e.what()},
                      {"kind", "validation"}}.dump()
              << "\n";
    return kExitValidation;
  }
}

// Command line surface: load structures from files, run the axiom
// checkers and the theorem suite, compute constructions, search for
// isomorphisms.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 budget
// exceeded.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invcorr/bicategory.hpp"
#include "invcorr/fixtures.hpp"
#include "invcorr/io.hpp"
#include "invcorr/multiplier.hpp"
#include "invcorr/partial_bij.hpp"
#include "invcorr/verify.hpp"

using namespace invcorr;
using nlohmann::json;

namespace {

struct Options {
  long long budget = 0;  // 0: use env or default
  std::string format = "text";
  std::string out;
  std::string name;
};

Budget make_budget(const Options& opt) {
  Budget b;
  if (const char* env = std::getenv("INVCORR_BUDGET")) {
    b.nodes = std::atoll(env);
  }
  if (opt.budget > 0) {
    b.nodes = opt.budget;  // flag wins over the environment
  }
  return b;
}

// Reports are byte-identical across runs: wall time goes to stderr only,
// the structured report carries a null timing field.
struct Report {
  json j;
  std::chrono::steady_clock::time_point t0 =
      std::chrono::steady_clock::now();

  explicit Report(const std::string& command) {
    j["command"] = command;
    j["verdicts"] = json::array();
    j["timing_ms"] = nullptr;
  }
  void verdict(const std::string& name, bool pass,
               const json& detail = json()) {
    json v;
    v["name"] = name;
    v["pass"] = pass;
    if (!detail.is_null()) {
      v["detail"] = detail;
    }
    j["verdicts"].push_back(v);
  }
  bool all_pass() const {
    for (const auto& v : j["verdicts"]) {
      if (!v["pass"].get<bool>()) {
        return false;
      }
    }
    return true;
  }
  int finish(const Options& opt) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (opt.format == "structured") {
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& v : j["verdicts"]) {
        std::cout << (v["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
                  << v["name"].get<std::string>();
        if (v.contains("detail") && v["detail"].is_string()) {
          std::cout << "  [" << v["detail"].get<std::string>() << "]";
        } else if (v.contains("detail") && v["detail"].is_array()) {
          std::cout << "  at " << v["detail"].dump();
        }
        std::cout << "\n";
      }
    }
    std::cerr << "elapsed: " << ms << " ms\n";
    return all_pass() ? 0 : 1;
  }
};

json witness_json(const std::vector<Idx>& w) {
  json out = json::array();
  for (Idx x : w) {
    out.push_back(x);
  }
  return out;
}

int cmd_check(const std::string& path, const std::string& kind_flag,
              const Options& opt) {
  Workspace ws;
  Report report("check " + path);
  CheckedFile loaded = check_file(ws, path);
  if (!kind_flag.empty() && kind_from_name(kind_flag) != loaded.kind) {
    throw InputError("UNKNOWN_KIND: file is a " +
                     std::string(kind_name(loaded.kind)) + ", not a " +
                     kind_flag);
  }
  if (!loaded.loaded) {
    for (const auto& v : loaded.report.violations) {
      report.verdict(v.axiom, false, witness_json(v.witness));
    }
    return report.finish(opt);
  }
  switch (loaded.kind) {
    case FileKind::Semigroup:
      report.verdict("associative", true);
      report.verdict("inverse", true);
      break;
    case FileKind::Set: {
      if (ws.sets.count(loaded.name)) {
        const RightSet& u = ws.sets.at(loaded.name);
        auto reg = check_right_regular(u);
        for (const auto& v : reg.violations) {
          report.verdict(v.axiom, false, witness_json(v.witness));
        }
        if (reg.ok()) {
          report.verdict("regular", true);
          auto inv = check_right_inverse(u);
          report.verdict("inverse", inv.passed,
                         inv.passed ? json() : witness_json(inv.witness));
          report.verdict("right_full", true,
                         is_right_full(u) ? "full" : "not full");
        }
      } else {
        const LeftSet& u = ws.left_sets.at(loaded.name);
        auto reg = check_left_regular(u);
        for (const auto& v : reg.violations) {
          report.verdict(v.axiom, false, witness_json(v.witness));
        }
        if (reg.ok()) {
          report.verdict("regular", true);
          auto inv = check_left_inverse(u);
          report.verdict("inverse", inv.passed,
                         inv.passed ? json() : witness_json(inv.witness));
        }
      }
      break;
    }
    case FileKind::Morita: {
      auto rep = check_partial_morita(ws.moritas.at(loaded.name));
      for (const auto& v : rep.structure.violations) {
        report.verdict(v.axiom, false, witness_json(v.witness));
      }
      for (const auto& v : rep.left_regular.violations) {
        report.verdict("left " + v.axiom, false, witness_json(v.witness));
      }
      for (const auto& v : rep.right_regular.violations) {
        report.verdict("right " + v.axiom, false, witness_json(v.witness));
      }
      if (rep.ok()) {
        report.verdict("partial_morita", true);
        report.verdict("morita", true,
                       rep.morita() ? "both pairings full"
                                    : "partial only");
      }
      break;
    }
    case FileKind::Correspondence: {
      auto rep = check_correspondence(ws.correspondences.at(loaded.name));
      for (const auto& v : rep.violations) {
        report.verdict(v.axiom, false, witness_json(v.witness));
      }
      if (rep.ok()) {
        report.verdict("correspondence", true);
        report.verdict(
            "non_degenerate", true,
            is_non_degenerate(ws.correspondences.at(loaded.name))
                ? "non-degenerate"
                : "degenerate");
      }
      break;
    }
    case FileKind::McAlister:
      // axioms were enforced at load
      report.verdict("mcalister", true,
                     ws.mcalisters.at(loaded.name).full
                         ? "McAlister function (MF5 holds)"
                         : "partial McAlister function");
      break;
    case FileKind::Hom:
      report.verdict("hom", true);
      break;
    case FileKind::Presheaf:
      report.verdict("presheaf_conditions", true);
      report.verdict("left_inverse_set", true);
      break;
  }
  return report.finish(opt);
}

RightSet get_set(Workspace& ws, const std::string& name) {
  auto it = ws.sets.find(name);
  if (it != ws.sets.end()) {
    return it->second;
  }
  // a semigroup name stands for its canonical right set
  try {
    return semigroup_as_right_set(ws.semigroup(name));
  } catch (const InputError&) {
    throw InputError("input is not a right set: " + name);
  }
}

Correspondence get_correspondence(Workspace& ws, const std::string& name) {
  if (auto it = ws.correspondences.find(name);
      it != ws.correspondences.end()) {
    return it->second;
  }
  if (auto it = ws.moritas.find(name); it != ws.moritas.end()) {
    return from_morita(it->second);
  }
  throw InputError("input is not a correspondence: " + name);
}

int cmd_compute(const std::string& construction,
                const std::vector<std::string>& inputs,
                const std::vector<Idx>& members, const Options& opt) {
  Workspace ws;
  Budget budget = make_budget(opt);
  Report report("compute " + construction);
  std::vector<LoadedFile> loaded;
  for (size_t i = 0; i < inputs.size(); ++i) {
    const auto& path = inputs[i];
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
      loaded.push_back(load_file(ws, path, "arg" + std::to_string(i)));
    } else {
      loaded.push_back({FileKind::Semigroup, path});  // fixture or number
    }
  }
  std::string out_name = opt.name.empty()
                             ? construction + "-result"
                             : opt.name;
  std::string text;

  auto arg_semigroup = [&](size_t i) {
    return ws.semigroup(loaded.at(i).name);
  };

  if (construction == "L" || construction == "K") {
    RightSet u = get_set(ws, loaded.at(0).name);
    MapSemigroup m = construction == "L"
                         ? L_semigroup(u, budget)
                         : K_semigroup(u, budget).k;
    report.verdict(construction + " order", true,
                   std::to_string(m.sg->size()));
    text = semigroup_to_text(out_name, *m.sg);
  } else if (construction == "tensor") {
    auto a = get_correspondence(ws, loaded.at(0).name);
    auto b = get_correspondence(ws, loaded.at(1).name);
    auto tp = tensor(a, b);
    report.verdict("tensor size", true, std::to_string(tp.corr.size()));
    text = correspondence_to_text(out_name, tp.corr);
  } else if (construction == "multiplier") {
    auto m = multiplier(arg_semigroup(0), budget);
    report.verdict("multiplier order", true,
                   std::to_string(m.carrier.sg->size()));
    text = semigroup_to_text(out_name, *m.carrier.sg);
  } else if (construction == "opposite") {
    auto it = ws.moritas.find(loaded.at(0).name);
    if (it == ws.moritas.end()) {
      throw InputError("opposite expects a morita file");
    }
    auto o = opposite(it->second);
    report.verdict("opposite size", true, std::to_string(o.size));
    text = morita_to_text(out_name, o);
  } else if (construction == "rees-IM" || construction == "rees-Up") {
    auto it = ws.mcalisters.find(loaded.at(0).name);
    if (it == ws.mcalisters.end()) {
      throw InputError(construction + " expects a mcalister file");
    }
    if (construction == "rees-IM") {
      auto ir = inverse_rees(it->second);
      report.verdict("IM order", true, std::to_string(ir.sg->size()));
      text = semigroup_to_text(out_name, *ir.sg);
    } else {
      auto up = inverse_set_from_p(it->second);
      report.verdict("U_p size", true, std::to_string(up.set.size));
      text = morita_to_text(out_name, up.morita);
    }
  } else if (construction == "from-hom") {
    auto it = ws.homs.find(loaded.at(0).name);
    if (it == ws.homs.end()) {
      throw InputError("from-hom expects a hom file");
    }
    auto hc = from_hom(it->second);
    report.verdict("carrier size", true, std::to_string(hc.corr.size()));
    text = correspondence_to_text(out_name, hc.corr);
  } else if (construction == "enlargement") {
    auto enl = enlargement_set(arg_semigroup(0), members);
    auto rep = check_partial_morita(enl.morita);
    report.verdict("left_full", rep.left_full);
    report.verdict("morita", true, rep.morita() ? "yes" : "no");
    text = morita_to_text(out_name, enl.morita);
  } else if (construction == "presheaf") {
    auto it = ws.left_sets.find(loaded.at(0).name);
    if (it == ws.left_sets.end()) {
      throw InputError("presheaf expects a presheaf file");
    }
    report.verdict("carrier size", true, std::to_string(it->second.size));
    text = left_set_to_text(out_name, it->second, "");
  } else if (construction == "direct-sum") {
    auto sum = direct_sum(get_set(ws, loaded.at(0).name),
                          get_set(ws, loaded.at(1).name));
    report.verdict("carrier size", true, std::to_string(sum.set.size));
    text = set_to_text(out_name, sum.set, "");
  } else if (construction == "I_n") {
    Idx n = std::atoi(loaded.at(0).name.c_str());
    auto im = symmetric_inverse_monoid(n);
    report.verdict("order", true, std::to_string(im.sg->size()));
    text = semigroup_to_text("I" + std::to_string(n), *im.sg);
  } else if (construction == "partial-bijection-biset") {
    Idx nx = std::atoi(loaded.at(0).name.c_str());
    Idx ny = std::atoi(loaded.at(1).name.c_str());
    auto biset = partial_bijection_biset(nx, ny);
    report.verdict("carrier size", true, std::to_string(biset.morita.size));
    text = morita_to_text(out_name, biset.morita);
  } else {
    throw InputError("unknown construction: " + construction);
  }

  if (!opt.out.empty()) {
    write_file(opt.out, text);
  } else if (opt.format == "text") {
    std::cout << text;
  }
  return report.finish(opt);
}

int cmd_verify(const std::string& scope, const std::string& fixtures,
               const std::vector<std::string>& inputs, const Options& opt) {
  Workspace ws;
  for (const auto& path : inputs) {
    load_file(ws, path);
  }
  VerifyOptions vopt;
  vopt.scope = scope;
  vopt.budget = make_budget(opt);
  if (!fixtures.empty()) {
    std::stringstream ss(fixtures);
    std::string item;
    while (std::getline(ss, item, ',')) {
      vopt.fixtures.push_back(item);
    }
  }
  Report report("verify " + scope);
  auto results = verify_theorems(vopt, inputs.empty() ? nullptr : &ws);
  bool hard_failure = false, budget_failure = false;
  for (const auto& r : results) {
    report.verdict(r.scope + "/" + r.name + " @ " + r.subject, r.passed,
                   r.detail.empty() ? json() : json(r.detail));
    if (!r.passed) {
      (r.detail.find("SIZE_LIMIT") != std::string::npos ? budget_failure
                                                        : hard_failure) =
          true;
    }
  }
  int code = report.finish(opt);
  if (code != 0 && budget_failure && !hard_failure) {
    return 3;
  }
  return code;
}

int cmd_iso(const std::string& path_a, const std::string& path_b,
            const Options& opt) {
  Workspace ws;
  Report report("iso " + path_a + " " + path_b);
  LoadedFile a = load_file(ws, path_a, "iso-lhs");
  LoadedFile b = load_file(ws, path_b, "iso-rhs");
  if (a.kind != b.kind) {
    throw InputError("iso: files have different kinds");
  }
  std::optional<std::vector<Idx>> iso;
  switch (a.kind) {
    case FileKind::Semigroup:
      iso = find_isomorphism(*ws.semigroup(a.name), *ws.semigroup(b.name));
      break;
    case FileKind::Set:
      if (ws.sets.count(a.name)) {
        iso = find_set_isomorphism(ws.sets.at(a.name), ws.sets.at(b.name));
      } else {
        iso = find_left_set_isomorphism(ws.left_sets.at(a.name),
                                        ws.left_sets.at(b.name));
      }
      break;
    case FileKind::Correspondence:
    case FileKind::Morita:
      iso = find_correspondence_isomorphism(get_correspondence(ws, a.name),
                                            get_correspondence(ws, b.name));
      break;
    default:
      throw InputError("iso: unsupported kind " +
                       std::string(kind_name(a.kind)));
  }
  report.verdict("isomorphic", iso.has_value(),
                 iso ? witness_json(*iso) : json("none"));
  return report.finish(opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite inverse semigroups, inverse sets, and "
               "inverse correspondences"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--budget", opt.budget,
                 "search budget in nodes (overrides INVCORR_BUDGET)");
  app.add_option("--format", opt.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--out", opt.out, "output file for compute results");
  app.add_option("--name", opt.name, "name for computed structures");

  auto* check = app.add_subcommand("check", "run the axiom suite on a file");
  std::string check_path, check_kind;
  check->add_option("file", check_path)->required();
  check->add_option("--kind", check_kind,
                    "expected kind (semigroup/set/morita/correspondence/"
                    "mcalister)");

  auto* compute = app.add_subcommand("compute", "run a construction");
  std::string construction;
  std::vector<std::string> compute_inputs;
  std::string members_csv;
  compute->add_option("construction", construction)->required();
  compute->add_option("inputs", compute_inputs, "input files or numbers");
  compute->add_option("--members", members_csv,
                      "comma separated element indices (enlargement)");

  auto* verify = app.add_subcommand("verify", "run the theorem suite");
  std::string scope = "all", fixtures;
  std::vector<std::string> verify_inputs;
  verify->add_option("--scope", scope,
                     "all/core/sets/adjointable/correspondence/bicategory/"
                     "multiplier/rees");
  verify->add_option("--fixtures", fixtures, "comma separated fixture filter");
  verify->add_option("inputs", verify_inputs,
                     "additional structure files to include");

  auto* iso = app.add_subcommand("iso", "isomorphism search between files");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  try {
    app.parse(argc, argv);
    if (*check) {
      return cmd_check(check_path, check_kind, opt);
    }
    if (*compute) {
      std::vector<Idx> members;
      if (!members_csv.empty()) {
        std::stringstream ss(members_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
          members.push_back(std::atoi(item.c_str()));
        }
      }
      return cmd_compute(construction, compute_inputs, members, opt);
    }
    if (*verify) {
      return cmd_verify(scope, fixtures, verify_inputs, opt);
    }
    if (*iso) {
      return cmd_iso(iso_a, iso_b, opt);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range&) {
    std::cerr << "input error: missing argument\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

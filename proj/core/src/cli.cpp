#include "relkit/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "relkit/document.hpp"
#include "relkit/finrel.hpp"
#include "relkit/frobenius.hpp"
#include "relkit/hstar.hpp"
#include "relkit/monoids.hpp"
#include "relkit/poisson.hpp"
#include "relkit/relgpd.hpp"
#include "relkit/report.hpp"
#include "relkit/symplin.hpp"

namespace relkit::cli {

namespace {

using json = nlohmann::ordered_json;

json checks_json(const Report& rep) {
  json arr = json::array();
  for (const auto& c : rep.checks()) {
    json cj;
    cj["law"] = c.law;
    cj["ok"] = c.ok;
    cj["witnesses"] = c.witnesses;
    arr.push_back(std::move(cj));
  }
  return arr;
}

std::string human_checks(const Report& rep) {
  std::string out;
  for (const auto& c : rep.checks()) {
    out += c.law;
    out += c.ok ? ": pass\n" : ": FAIL\n";
    for (const auto& w : c.witnesses) out += "    " + w + "\n";
  }
  return out;
}

// pt -> X relation as its image atoms.
json unit_image_json(const finrel::Rel& r) {
  json arr = json::array();
  for (const auto& [p, x] : r.pairs()) arr.push_back(r.dst().at(x));
  return arr;
}

json pairs_json(const finrel::Rel& r) {
  json arr = json::array();
  for (const auto& [x, y] : r.pairs()) arr.push_back({r.src().at(x), r.dst().at(y)});
  return arr;
}

// X*X -> X relation as atom triples.
json triples_json(const finrel::Rel& r) {
  const int n = r.dst().size();
  json arr = json::array();
  for (const auto& [p, z] : r.pairs())
    arr.push_back({r.dst().at(p / n), r.dst().at(p % n), r.dst().at(z)});
  return arr;
}

struct Outcome {
  Report rep;
  json derived = json::object();
  std::string text;      // extra human lines ahead of the law listing
  std::string document;  // converted document, when the command emits one
};

Outcome run_check(const std::string& kind, const std::string& file, const Budget& budget) {
  Outcome out;
  const std::string text = doc::read_file(file);
  if (kind == "frobenius") {
    frobenius::FrobOptions opt;
    opt.budget = budget;
    auto fr = frobenius::check_frobenius_axioms(doc::parse_frobenius(text), opt);
    out.rep = fr.report;
    if (fr.unit) out.derived["unit"] = *fr.unit;
  } else if (kind == "hstar") {
    hstar::HStarOptions opt;
    opt.budget = budget;
    auto hr = hstar::check_hstar_axioms(doc::parse_hstar(text), opt);
    out.rep = hr.report;
    out.derived["star_double_containment"] = hr.star_double_containment;
    if (!hr.star_observation_failures.empty())
      out.derived["star_observations"] = hr.star_observation_failures;
  } else if (kind == "groupoid") {
    out.rep = frobenius::check_groupoid_axioms(doc::parse_groupoid(text), budget);
  } else if (kind == "semigroupoid") {
    out.rep = hstar::check_semigroupoid_properties(doc::parse_semigroupoid(text), budget).report;
  } else if (kind == "weak-monoid") {
    auto r = monoids::check_weak_monoid(doc::parse_weak_monoid(text), budget);
    out.rep = r.report;
    out.derived["L2"] = pairs_json(r.L2);
  } else if (kind == "star-monoid") {
    auto r = monoids::check_weak_star_monoid(doc::parse_star_monoid(text), budget);
    out.rep = r.report;
    out.derived["L1"] = unit_image_json(r.L1);
    out.derived["L2"] = pairs_json(r.L2);
  } else {  // cyclic-monoid
    auto r = monoids::check_cyclic_weak_star_monoid(doc::parse_cyclic_monoid(text), budget);
    out.rep = r.report;
    out.derived["L1"] = unit_image_json(r.L1);
    out.derived["L2"] = pairs_json(r.L2);
    out.derived["L3"] = triples_json(r.L3);
  }
  return out;
}

Outcome run_convert(const std::string& direction, const std::string& file, const Budget& budget) {
  Outcome out;
  const std::string text = doc::read_file(file);
  if (direction == "frob-to-gpd") {
    frobenius::FrobOptions opt;
    opt.budget = budget;
    out.document = doc::print_groupoid(frobenius::to_groupoid(doc::parse_frobenius(text), opt));
  } else if (direction == "gpd-to-frob") {
    out.document = doc::print_frobenius(frobenius::from_groupoid(doc::parse_groupoid(text), budget));
  } else if (direction == "hstar-to-sgpd") {
    hstar::HStarOptions opt;
    opt.budget = budget;
    out.document = doc::print_semigroupoid(hstar::to_semigroupoid(doc::parse_hstar(text), opt));
  } else {  // sgpd-to-hstar
    out.document = doc::print_hstar(hstar::from_semigroupoid(doc::parse_semigroupoid(text), budget));
  }
  out.derived["document"] = json::parse(out.document);
  return out;
}

Outcome run_rsg(const std::string& action, const std::string& file, const std::string& file2,
                const std::string& rel_file, const std::string& mode, const Budget& budget) {
  Outcome out;
  doc::RelGpdDoc d1 = doc::parse_relgpd(doc::read_file(file));
  if (action == "derive") {
    if (!d1.linear) {
      auto der = relgpd::derive(d1.set, budget);
      out.derived["L1"] = unit_image_json(der.L1);
      out.derived["L2"] = pairs_json(der.L2);
      out.derived["L3"] = triples_json(der.L3);
      out.derived["C"] = der.C;
      out.text = "|L1| = " + std::to_string(der.L1.pairs().size()) +
                 ", |L2| = " + std::to_string(der.L2.pairs().size()) +
                 ", |L3| = " + std::to_string(der.L3.pairs().size()) +
                 ", |C| = " + std::to_string(der.C.size()) + "\n";
    } else {
      auto der = relgpd::derive_linear(d1.lin);
      out.derived["dim_L1"] = der.L1.dim();
      out.derived["dim_L2"] = der.L2.graph.dim();
      out.derived["dim_L3"] = der.L3.graph.dim();
      out.derived["dim_C"] = der.C.dim();
      out.derived["L_lagrangian"] = der.L_lagrangian;
      out.derived["graph_I_lagrangian"] = der.graph_I_lagrangian;
      out.derived["L1_lagrangian"] = der.L1_lagrangian;
      out.derived["L2_lagrangian"] = der.L2_lagrangian;
      out.derived["L3_lagrangian"] = der.L3_lagrangian;
      out.text = "dim L1 = " + std::to_string(der.L1.dim()) +
                 ", dim L2 = " + std::to_string(der.L2.graph.dim()) +
                 ", dim L3 = " + std::to_string(der.L3.graph.dim()) +
                 ", dim C = " + std::to_string(der.C.dim()) + "\n";
    }
  } else if (action == "check") {
    out.rep = d1.linear ? relgpd::check_core_axioms_linear(d1.lin)
                        : relgpd::check_core_axioms(d1.set, budget);
  } else if (action == "regularity") {
    if (!d1.linear) {
      auto rd = relgpd::check_regularity(d1.set, budget);
      out.rep = rd.report;
      out.derived["C"] = rd.C;
      out.derived["M"] = rd.M;
      out.derived["S"] = pairs_json(rd.S);
      out.derived["T"] = pairs_json(rd.T);
    } else {
      auto rd = relgpd::check_regularity_linear(d1.lin);
      out.rep = rd.report;
      out.derived["dim_C"] = rd.C.dim();
      out.derived["object_dim"] = rd.object_dim;
    }
  } else if (action == "reduce") {
    auto g = d1.linear ? relgpd::reduce_to_groupoid_linear(d1.lin)
                       : relgpd::reduce_to_groupoid(d1.set, budget);
    out.document = doc::print_groupoid(g);
    out.derived["document"] = json::parse(out.document);
  } else {  // morphism
    if (file2.empty() || rel_file.empty())
      throw doc::DocError("rsg morphism needs two candidate files and --rel");
    doc::RelGpdDoc d2 = doc::parse_relgpd(doc::read_file(file2));
    if (d1.linear != d2.linear)
      throw doc::DocError("rsg morphism: candidates must share a mode");
    relgpd::RsgMode m =
        mode == "equivalence" ? relgpd::RsgMode::equivalence : relgpd::RsgMode::morphism;
    if (!d1.linear) {
      auto F = doc::parse_relation(doc::read_file(rel_file));
      out.rep = relgpd::check_morphism(F, d1.set, d2.set, m, budget);
    } else {
      auto F = doc::parse_linrel(doc::read_file(rel_file));
      out.rep = relgpd::check_morphism_linear(F, d1.lin, d2.lin, m);
    }
  }
  return out;
}

symplin::SympSpace space_or_standard(const std::string& space_file, int ambient) {
  if (!space_file.empty()) return doc::parse_symp_space(doc::read_file(space_file));
  return symplin::SympSpace::standard(ambient);
}

Outcome run_symp(const std::string& action, const std::string& file, const std::string& file2,
                 const std::string& space_file, const std::string& subspace_file,
                 const std::string& coiso_file, const std::string& rel_file) {
  Outcome out;
  if (action == "orthogonal" || action == "classify") {
    if (subspace_file.empty()) throw doc::DocError("symp " + action + " needs --subspace");
    auto W = doc::parse_subspace(doc::read_file(subspace_file));
    auto V = space_or_standard(space_file, W.ambient());
    if (V.dim != W.ambient())
      throw doc::DocError("symp: subspace ambient does not match the space dimension");
    if (action == "orthogonal") {
      auto Wp = symplin::orthogonal(V, W);
      out.document = doc::print_subspace(Wp);
      out.derived["dim"] = Wp.dim();
    } else {
      auto cl = symplin::classify_subspace(V, W);
      out.derived["isotropic"] = cl.isotropic;
      out.derived["coisotropic"] = cl.coisotropic;
      out.derived["lagrangian"] = cl.lagrangian;
      out.derived["symplectic"] = cl.symplectic;
      std::string label;
      if (cl.lagrangian) label = "lagrangian";
      else if (cl.isotropic) label = "isotropic";
      else if (cl.coisotropic) label = "coisotropic";
      else if (cl.symplectic) label = "symplectic";
      else label = "none";
      out.text = label + "\n";
    }
  } else if (action == "reduce") {
    if (coiso_file.empty()) throw doc::DocError("symp reduce needs --coiso");
    auto C = doc::parse_subspace(doc::read_file(coiso_file));
    auto V = space_or_standard(space_file, C.ambient());
    auto red = symplin::reduce(V, C);
    out.derived["quotient_dim"] = red.quotient.dim;
    if (!subspace_file.empty()) {
      auto L = doc::parse_subspace(doc::read_file(subspace_file));
      out.document = doc::print_subspace(symplin::project_lagrangian(V, red, L));
    } else {
      out.document = doc::print_symp_space(red.quotient);
    }
  } else if (action == "compose") {
    if (file.empty() || file2.empty()) throw doc::DocError("symp compose needs two relation files");
    auto r1 = doc::parse_linrel(doc::read_file(file));
    auto r2 = doc::parse_linrel(doc::read_file(file2));
    auto r = symplin::compose_linrel(r1, r2);
    out.rep.add("lagrangian.first", symplin::is_lagrangian_rel(r1));
    out.rep.add("lagrangian.second", symplin::is_lagrangian_rel(r2));
    out.rep.add("lagrangian.composite", symplin::is_lagrangian_rel(r));
    out.document = doc::print_linrel(r);
  } else if (action == "lift" || action == "project") {
    if (coiso_file.empty() || rel_file.empty())
      throw doc::DocError("symp " + action + " needs --coiso and --rel");
    auto C = doc::parse_subspace(doc::read_file(coiso_file));
    auto V = space_or_standard(space_file, C.ambient());
    auto rr = symplin::reduction_relations(V, C);
    auto r = doc::parse_linrel(doc::read_file(rel_file));
    auto res = action == "lift" ? symplin::lift_through(rr, r) : symplin::project_through(rr, r);
    out.rep.add("lagrangian.result", symplin::is_lagrangian_rel(res));
    out.document = doc::print_linrel(res);
  } else {  // dirac
    if (subspace_file.empty()) throw doc::DocError("symp dirac needs --subspace");
    auto L = doc::parse_subspace(doc::read_file(subspace_file));
    if (L.ambient() % 2 != 0)
      throw doc::DocError("symp dirac: the pairing space V + V* has even dimension");
    symplin::DiracSpace d{L.ambient() / 2};
    const bool ok = symplin::dirac_check(d, L);
    std::vector<std::string> wit;
    if (!ok) {
      auto Lp = symplin::pairing_orthogonal(d, L);
      wit.push_back("dim L = " + std::to_string(L.dim()) +
                    ", dim pairing orthogonal = " + std::to_string(Lp.dim()));
    }
    out.rep.add("dirac", ok, std::move(wit));
  }
  return out;
}

Outcome run_poisson(const std::string& action, const std::string& file) {
  Outcome out;
  const std::string text = doc::read_file(file);
  if (action == "check") {
    auto P = doc::parse_bivector(text);
    auto entries = poisson::jacobi_residual(P);
    std::vector<std::string> wit;
    bool ok = true;
    for (const auto& e : entries) {
      if (e.residual.is_zero()) continue;
      ok = false;
      wit.push_back("(" + std::to_string(e.s + 1) + "," + std::to_string(e.l + 1) + "," +
                    std::to_string(e.k + 1) + "): " + e.residual.to_string());
    }
    out.rep.add("jacobi", ok, std::move(wit));
    out.derived["is_poisson"] = ok;
  } else if (action == "from-lie") {
    auto lc = doc::parse_lie_constants(text);
    out.document = doc::print_bivector(poisson::from_structure_constants(lc.n, lc.c));
    out.derived["document"] = json::parse(out.document);
  } else {  // bracket
    auto P = doc::parse_bivector(text);
    auto f = doc::parse_bivector_poly(text, "f", P.n);
    auto g = doc::parse_bivector_poly(text, "g", P.n);
    if (!f || !g) throw doc::DocError("poisson bracket: the document needs 'f' and 'g' term arrays");
    auto h = poisson::poisson_bracket(P, *f, *g);
    out.derived["bracket"] = h.to_string();
    out.text = h.to_string() + "\n";
  }
  return out;
}

std::string error_report(const std::string& command, const std::string& message,
                         const Report* precondition) {
  json rj;
  rj["schema"] = 1;
  rj["command"] = command;
  rj["verdict"] = "error";
  rj["error"] = message;
  rj["checks"] = precondition ? checks_json(*precondition) : json::array();
  rj["derived"] = json::object();
  return rj.dump(2) + "\n";
}

}  // namespace

RunResult run_command(const std::vector<std::string>& args) {
  RunResult result;

  CLI::App app{"checks and converts finite relational, groupoid and symplectic structures"};
  app.name("relkit");
  app.require_subcommand(1);

  std::string report_path;
  long long budget_limit = -1;
  app.add_option("--report", report_path, "write the machine report JSON here");
  app.add_option("--budget", budget_limit, "largest tuple sweep a check may run");

  std::string kind, direction, action, file, file2, out_path;
  std::string rel_file, mode = "morphism";
  std::string space_file, subspace_file, coiso_file;

  auto* check = app.add_subcommand("check", "check the axioms of a structure document");
  check->fallthrough();
  check->add_option("kind", kind, "document kind")
      ->required()
      ->check(CLI::IsMember({"frobenius", "hstar", "groupoid", "semigroupoid", "weak-monoid",
                             "star-monoid", "cyclic-monoid"}));
  check->add_option("file", file, "document path")->required();

  auto* convert = app.add_subcommand("convert", "convert between equivalent presentations");
  convert->fallthrough();
  convert->add_option("direction", direction, "conversion")
      ->required()
      ->check(CLI::IsMember({"frob-to-gpd", "gpd-to-frob", "hstar-to-sgpd", "sgpd-to-hstar"}));
  convert->add_option("file", file, "document path")->required();
  convert->add_option("-o,--out", out_path, "write the converted document here");

  auto* rsg = app.add_subcommand("rsg", "relational groupoid candidates");
  rsg->fallthrough();
  rsg->add_option("action", action, "derive | check | regularity | reduce | morphism")
      ->required()
      ->check(CLI::IsMember({"derive", "check", "regularity", "reduce", "morphism"}));
  rsg->add_option("file", file, "candidate document")->required();
  rsg->add_option("file2", file2, "second candidate (morphism)");
  rsg->add_option("--rel", rel_file, "relation document (morphism)");
  rsg->add_option("--mode", mode, "morphism | equivalence")
      ->check(CLI::IsMember({"morphism", "equivalence"}));
  rsg->add_option("-o,--out", out_path, "write the reduced groupoid here");

  auto* symp = app.add_subcommand("symp", "symplectic linear algebra");
  symp->fallthrough();
  symp->add_option("action", action, "orthogonal | classify | reduce | compose | lift | project | dirac")
      ->required()
      ->check(CLI::IsMember({"orthogonal", "classify", "reduce", "compose", "lift", "project",
                             "dirac"}));
  symp->add_option("file", file, "first relation document (compose)");
  symp->add_option("file2", file2, "second relation document (compose)");
  symp->add_option("--space", space_file, "symplectic space document");
  symp->add_option("--subspace", subspace_file, "subspace document");
  symp->add_option("--coiso", coiso_file, "coisotropic subspace document");
  symp->add_option("--rel", rel_file, "linear relation document (lift, project)");
  symp->add_option("-o,--out", out_path, "write the result document here");

  auto* poisson_cmd = app.add_subcommand("poisson", "polynomial Poisson bivectors");
  poisson_cmd->fallthrough();
  poisson_cmd->add_option("action", action, "check | from-lie | bracket")
      ->required()
      ->check(CLI::IsMember({"check", "from-lie", "bracket"}));
  poisson_cmd->add_option("file", file, "document path")->required();
  poisson_cmd->add_option("-o,--out", out_path, "write the result document here");

  std::vector<const char*> argv;
  argv.push_back("relkit");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.output = std::string("error: ") + e.what() + "\n" + app.help();
    result.code = 2;
    return result;
  }

  std::string command = "relkit";
  for (const auto& a : args) {
    command += ' ';
    command += a;
  }

  Budget budget;
  if (budget_limit > 0) budget.limit = static_cast<std::uint64_t>(budget_limit);

  Outcome out;
  try {
    if (check->parsed()) {
      out = run_check(kind, file, budget);
    } else if (convert->parsed()) {
      out = run_convert(direction, file, budget);
    } else if (rsg->parsed()) {
      out = run_rsg(action, file, file2, rel_file, mode, budget);
    } else if (symp->parsed()) {
      out = run_symp(action, file, file2, space_file, subspace_file, coiso_file, rel_file);
    } else {
      out = run_poisson(action, file);
    }
  } catch (const PreconditionError& e) {
    result.code = 2;
    result.output = std::string("error: ") + e.what() + "\n" + human_checks(e.report());
    result.report = error_report(command, e.what(), &e.report());
  } catch (const std::exception& e) {
    result.code = 2;
    result.output = std::string("error: ") + e.what() + "\n";
    result.report = error_report(command, e.what(), nullptr);
  }

  if (result.code != 2) {
    const bool pass = out.rep.verdict();
    result.code = pass ? 0 : 1;
    std::string text = out.text + human_checks(out.rep);
    if (!out.rep.checks().empty())
      text += std::string("verdict: ") + (pass ? "pass" : "FAIL") + "\n";
    if (!out.document.empty()) {
      if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        f << out.document;
        if (!f) {
          result.code = 2;
          result.output = "error: cannot write " + out_path + "\n";
          result.report = error_report(command, "cannot write " + out_path, nullptr);
          return result;
        }
        text += "wrote " + out_path + "\n";
      } else {
        text += out.document;
      }
    }
    result.output = text;

    json rj;
    rj["schema"] = 1;
    rj["command"] = command;
    rj["verdict"] = pass ? "pass" : "fail";
    rj["checks"] = checks_json(out.rep);
    rj["derived"] = out.derived;
    result.report = rj.dump(2) + "\n";
  }

  if (!report_path.empty()) {
    std::ofstream f(report_path, std::ios::binary);
    f << result.report;
    if (!f) {
      result.code = 2;
      result.output += "error: cannot write " + report_path + "\n";
    }
  }
  return result;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  RunResult r = run_command(args);
  std::cout << r.output;
  return r.code;
}

}  // namespace relkit::cli

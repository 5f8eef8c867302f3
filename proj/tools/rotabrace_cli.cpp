// Command-line driver: verification, enumeration, brace/YBE construction and
// the catalog report pipeline.  All output is JSON by default; `report` also
// has an aligned text rendering.

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotabrace/parallel.hpp"
#include "rotabrace/report.hpp"

using namespace rotabrace;

namespace {

std::vector<Element> parse_member_list(const std::string& s) {
  std::vector<Element> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rota-Baxter operators, dual weak braces and Yang-Baxter solutions "
               "on finite Clifford semigroups"};
  app.require_subcommand(1);

  int workers = 0;
  unsigned long long seed = 0;
  PipelineOptions opts;
  app.add_option("--workers", workers, "worker threads (0 = hardware default)");
  app.add_option("--seed", seed, "seed for random-r");
  app.add_option("--max-order", opts.max_order, "enumeration order cap");
  app.add_option("--max-ideal-order", opts.max_ideal_order, "ideal search order cap");
  app.add_option("--max-equiv-order", opts.max_equiv_order, "equivalence search order cap");
  app.add_flag("--timing", opts.include_timing, "include wall-clock timings in reports");

  std::string arg_carrier, arg_file, arg_operator, arg_brace, arg_ideal;
  int arg_order = 3;

  auto* cmd_verify = app.add_subcommand("verify", "verify a carrier or spec file");
  cmd_verify->add_option("file", arg_file, "carrier/spec JSON file or builtin")->required();

  auto* cmd_enum = app.add_subcommand("enumerate-rb", "enumerate all Rota-Baxter operators");
  cmd_enum->add_option("carrier", arg_carrier)->required();

  auto* cmd_brace = app.add_subcommand("build-brace", "build the dual weak brace of an operator");
  cmd_brace->add_option("carrier", arg_carrier)->required();
  cmd_brace->add_option("operator-file", arg_operator)->required();

  auto* cmd_ybe = app.add_subcommand("check-ybe", "derive and check the solution of a brace");
  cmd_ybe->add_option("brace-file", arg_brace)->required();

  auto* cmd_classify = app.add_subcommand("classify", "group operators into equivalence classes");
  cmd_classify->add_option("carrier", arg_carrier)->required();

  auto* cmd_ideals = app.add_subcommand("ideals", "enumerate the ideals of a brace");
  cmd_ideals->add_option("brace-file", arg_brace)->required();

  auto* cmd_quot = app.add_subcommand("quotient", "quotient a brace by an ideal");
  cmd_quot->add_option("brace-file", arg_brace)->required();
  cmd_quot->add_option("ideal", arg_ideal, "comma-separated members, e.g. 0,2,4")->required();

  auto* cmd_report = app.add_subcommand("report", "full pipeline report over a carrier or 'all'");
  cmd_report->add_option("carrier", arg_carrier)->required();
  std::vector<std::string> stages;
  cmd_report->add_option("--stages", stages, "subset of enumerate classify braces ybe ideals")
      ->delimiter(',');
  bool as_json = false, as_text = false;
  auto* flag_json = cmd_report->add_flag("--json", as_json, "JSON output (default)");
  cmd_report->add_flag("--text", as_text, "aligned text output")->excludes(flag_json);

  auto* cmd_random = app.add_subcommand("random-r", "seeded random pair map + braid verdict");
  cmd_random->add_option("order", arg_order)->required();

  auto* cmd_oppvar =
      app.add_subcommand("opposite-variants",
                         "evaluate both published forms of the opposite operator");
  cmd_oppvar->add_option("carrier", arg_carrier)->required();

  CLI11_PARSE(app, argc, argv);
  par::set_workers(workers);

  try {
    if (cmd_verify->parsed()) {
      const CatalogEntry e = load_carrier(arg_file);
      Json j;
      j["name"] = e.name;
      j["kind"] = to_string(e.kind);
      j["order"] = e.carrier->order();
      j["verified"] = true;
      emit(j);
      return 0;
    }

    if (cmd_enum->parsed()) {
      const CatalogEntry e = load_carrier(arg_carrier);
      const auto ops = enumerate_rota_baxter(e.carrier, {opts.max_order});
      Json j;
      j["carrier"] = e.name;
      j["operator_count"] = static_cast<int>(ops.size());
      Json list = Json::array();
      for (const auto& op : ops) list.push_back(op.images);
      j["operators"] = std::move(list);
      emit(j);
      return 0;
    }

    if (cmd_brace->parsed()) {
      const CatalogEntry e = load_carrier(arg_carrier);
      const OperatorFile of = operator_file_from_json(load_json_file(arg_operator));
      if (static_cast<int>(of.images.size()) != e.carrier->order())
        throw PreconditionError("OperatorMalformed",
                                "operator image count does not match the carrier order");
      const DualWeakBrace B = brace_from_operator({e.carrier, of.images});
      emit(brace_to_json(e.name + "-brace", B));
      return 0;
    }

    if (cmd_ybe->parsed()) {
      const BraceFile bf = brace_file_from_json(load_json_file(arg_brace));
      SolutionMap r = solution_from_brace(bf.brace);
      const RegularityReport rep = regularity_report(bf.brace, r);
      Json j;
      j["brace"] = bf.name;
      j["solution"] = solution_to_json(r);
      j["braid"] = r.braid_ok.value_or(false);
      j["left_nondegenerate"] = rep.left_nondegenerate;
      j["right_nondegenerate"] = rep.right_nondegenerate;
      j["r_rop_r"] = rep.r_rop_r;
      j["rop_r_rop"] = rep.rop_r_rop;
      j["composites_commute"] = rep.composites_commute;
      j["skew"] = rep.skew;
      j["bijective"] = rep.r_bijective;
      j["inverse_is_opposite"] = rep.inverse_is_opposite;
      emit(j);
      return r.braid_ok.value_or(false) ? 0 : 1;
    }

    if (cmd_classify->parsed()) {
      const CatalogEntry e = load_carrier(arg_carrier);
      PipelineOptions copts = opts;
      copts.stages = {"enumerate", "classify"};
      const PipelineResult res = run_pipeline(e, copts);
      emit(res.json);
      return res.ok() ? 0 : 1;
    }

    if (cmd_ideals->parsed()) {
      const BraceFile bf = brace_file_from_json(load_json_file(arg_brace));
      const auto ideals = enumerate_ideals(bf.brace, opts.max_ideal_order);
      Json j;
      j["brace"] = bf.name;
      j["ideal_count"] = static_cast<int>(ideals.size());
      Json list = Json::array();
      for (const Ideal& I : ideals) list.push_back(I.members);
      j["ideals"] = std::move(list);
      j["socle"] = socle(bf.brace);
      emit(j);
      return 0;
    }

    if (cmd_quot->parsed()) {
      const BraceFile bf = brace_file_from_json(load_json_file(arg_brace));
      const QuotientResult q = quotient_brace(bf.brace, {parse_member_list(arg_ideal)});
      Json j = brace_to_json(bf.name + "-quotient", q.brace);
      j["projection"] = q.projection;
      j["representatives"] = q.representatives;
      emit(j);
      return 0;
    }

    if (cmd_report->parsed()) {
      if (!stages.empty()) opts.stages = stages;
      std::vector<CatalogEntry> entries;
      if (arg_carrier == "all") {
        for (const std::string& name : builtin_names()) entries.push_back(load_builtin(name));
      } else {
        entries.push_back(load_carrier(arg_carrier));
      }
      const PipelineResult res = run_catalog_pipeline(entries, opts);
      if (as_text)
        std::cout << render_text(res.json);
      else
        emit(res.json);
      return res.ok() ? 0 : 1;
    }

    if (cmd_random->parsed()) {
      const int n = arg_order;
      if (n <= 0) throw PreconditionError("SolutionMalformed", "order must be positive");
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> pick(0, n - 1);
      SolutionMap r;
      r.order = n;
      for (int i = 0; i < n * n; ++i) {
        r.left.push_back(pick(rng));
        r.right.push_back(pick(rng));
      }
      const BraidVerdict v = check_braid(r);
      Json j = solution_to_json(r);
      j["seed"] = seed;
      j["braid"] = v.ok;
      if (!v.ok) j["witness"] = {v.witness[0], v.witness[1], v.witness[2]};
      emit(j);
      return 0;
    }

    if (cmd_oppvar->parsed()) {
      const CatalogEntry e = load_carrier(arg_carrier);
      const CliffordSemigroup& S = *e.carrier;
      const auto ops = enumerate_rota_baxter(e.carrier, {opts.max_order});
      Json j;
      j["carrier"] = e.name;
      Json list = Json::array();
      for (const auto& op : ops) {
        ElementMap standard(S.order()), variant(S.order());
        for (Element a = 0; a < S.order(); ++a) {
          const Element na = S.inverse(a);
          standard[a] = S.op(na, op.images[na]);  // -a + R(-a)
          variant[a] = S.op(na, op.images[a]);    // -a + R(a)
        }
        Json oj;
        oj["images"] = op.images;
        oj["standard_opposite"] = standard;
        oj["standard_opposite_is_rb"] = is_rota_baxter(S, standard);
        oj["variant_opposite"] = variant;
        oj["variant_opposite_is_rb"] = is_rota_baxter(S, variant);
        list.push_back(std::move(oj));
      }
      j["operators"] = std::move(list);
      emit(j);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return 0;
}

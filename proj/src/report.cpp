#include "rotabrace/report.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace rotabrace {

namespace {

const std::vector<std::string>& known_stages() {
  static const std::vector<std::string> s = {"enumerate", "classify", "braces", "ybe",
                                             "ideals"};
  return s;
}

void validate_stages(const std::vector<std::string>& stages) {
  for (const std::string& s : stages)
    if (std::find(known_stages().begin(), known_stages().end(), s) == known_stages().end())
      throw PreconditionError("UnknownStage", "unknown pipeline stage: " + s);
  auto has = [&](const char* s) {
    return std::find(stages.begin(), stages.end(), s) != stages.end();
  };
  if (has("classify") && !has("enumerate"))
    throw PreconditionError("StageDependencyMissing", "classify requires enumerate");
  if (has("braces") && !has("enumerate"))
    throw PreconditionError("StageDependencyMissing", "braces requires enumerate");
  if (has("ybe") && !has("braces"))
    throw PreconditionError("StageDependencyMissing", "ybe requires braces");
  if (has("ideals") && !has("braces"))
    throw PreconditionError("StageDependencyMissing", "ideals requires braces");
}

Json table_rows(const CayleyTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) rows.push_back(row);
  return rows;
}

struct Checks {
  int passed = 0;
  int failed = 0;

  void note(bool ok) { ok ? ++passed : ++failed; }
};

// One carrier, selected stages, counters shared with the caller.
Json run_entry(const CatalogEntry& entry, const PipelineOptions& opts, Checks& checks) {
  const CliffordSemigroup& S = *entry.carrier;
  auto has = [&](const char* s) {
    return std::find(opts.stages.begin(), opts.stages.end(), s) != opts.stages.end();
  };

  Json j;
  j["name"] = entry.name;
  j["kind"] = to_string(entry.kind);
  j["provenance"] = entry.provenance;
  j["order"] = S.order();
  j["is_group"] = S.is_group();
  j["idempotents"] = S.idempotents();
  j["table"] = table_rows(S.table());

  std::vector<RotaBaxterOperator> ops;
  if (has("enumerate")) {
    ops = enumerate_rota_baxter(entry.carrier, {opts.max_order});
    Json stage;
    stage["operator_count"] = static_cast<int>(ops.size());
    Json list = Json::array();
    for (const auto& op : ops) {
      checks.note(is_rota_baxter(S, op.images));
      list.push_back(op.images);
    }
    stage["operators"] = std::move(list);
    j["enumerate"] = std::move(stage);
  }

  if (has("classify")) {
    std::vector<int> reps;  // indices into ops
    Json classes = Json::array();
    std::vector<Json> members_of;
    for (int i = 0; i < static_cast<int>(ops.size()); ++i) {
      bool placed = false;
      for (std::size_t c = 0; c < reps.size() && !placed; ++c) {
        const auto psi = equivalent_operators(ops[reps[c]], ops[i], opts.max_equiv_order);
        if (psi) {
          bool valid = true;
          for (Element a = 0; a < S.order() && valid; ++a)
            valid = (*psi)[ops[reps[c]].images[a]] == ops[i].images[(*psi)[a]];
          checks.note(valid);
          members_of[c].push_back(i);
          placed = true;
        }
      }
      if (!placed) {
        reps.push_back(i);
        members_of.push_back(Json::array({i}));
      }
    }
    for (std::size_t c = 0; c < reps.size(); ++c) {
      Json cls;
      cls["representative"] = reps[c];
      cls["representative_images"] = ops[reps[c]].images;
      cls["members"] = members_of[c];
      classes.push_back(std::move(cls));
    }
    Json stage;
    stage["class_count"] = static_cast<int>(reps.size());
    stage["classes"] = std::move(classes);
    j["classify"] = std::move(stage);
  }

  std::vector<DualWeakBrace> braces;
  if (has("braces")) {
    Json list = Json::array();
    for (int i = 0; i < static_cast<int>(ops.size()); ++i) {
      DualWeakBrace B = brace_from_operator(ops[i]);
      Json bj;
      bj["operator"] = i;
      bj["circ_table"] = table_rows(B.multiplicative().table());

      bool trivial = true, almost = true, inverse_formula = true;
      for (Element a = 0; a < S.order(); ++a) {
        for (Element b = 0; b < S.order(); ++b) {
          trivial = trivial && B.circ(a, b) == B.add(a, b);
          almost = almost && B.circ(a, b) == B.add(b, a);
        }
        const Element ra = ops[i].images[a];
        const Element expect = S.op(S.op(S.inverse(ra), S.inverse(a)), ra);
        inverse_formula = inverse_formula && B.inv(a) == expect;
      }
      checks.note(inverse_formula);
      const BiVerdict bi = is_bi_weak_brace(B);
      bj["trivial"] = trivial;
      bj["almost_trivial"] = almost;
      bj["bi_weak"] = bi.ok;
      bj["skew"] = B.additive().is_group();
      list.push_back(std::move(bj));
      braces.push_back(std::move(B));
    }
    j["braces"] = std::move(list);
  }

  if (has("ybe")) {
    Json list = Json::array();
    for (int i = 0; i < static_cast<int>(braces.size()); ++i) {
      SolutionMap r = solution_from_brace(braces[i]);
      const RegularityReport rep = regularity_report(braces[i], r);
      checks.note(r.braid_ok.value_or(false));
      checks.note(rep.r_rop_r && rep.rop_r_rop && rep.composites_commute);
      checks.note(rep.lambda_regular && rep.lambda_inv_regular &&
                  rep.lambda_composites_commute && rep.rho_regular &&
                  rep.rho_inv_regular && rep.rho_composites_commute);
      if (rep.skew) checks.note(rep.r_bijective && rep.inverse_is_opposite);

      Json sj;
      sj["operator"] = i;
      sj["r"] = solution_to_json(r)["r"];
      sj["braid"] = r.braid_ok.value_or(false);
      sj["left_nondegenerate"] = rep.left_nondegenerate;
      sj["right_nondegenerate"] = rep.right_nondegenerate;
      Json reg;
      reg["r_rop_r"] = rep.r_rop_r;
      reg["rop_r_rop"] = rep.rop_r_rop;
      reg["composites_commute"] = rep.composites_commute;
      reg["lambda_regular"] = rep.lambda_regular;
      reg["rho_regular"] = rep.rho_regular;
      sj["regularity"] = std::move(reg);
      sj["skew"] = rep.skew;
      sj["bijective"] = rep.r_bijective;
      sj["inverse_is_opposite"] = rep.inverse_is_opposite;
      list.push_back(std::move(sj));
    }
    j["ybe"] = std::move(list);
  }

  if (has("ideals")) {
    Json list = Json::array();
    for (int i = 0; i < static_cast<int>(braces.size()); ++i) {
      const DualWeakBrace& B = braces[i];
      const std::vector<Ideal> ideals = enumerate_ideals(B, opts.max_ideal_order);
      const std::vector<Element> soc = socle(B);
      checks.note(is_ideal(B, soc).ok);

      Json ij;
      ij["operator"] = i;
      ij["ideal_count"] = static_cast<int>(ideals.size());
      Json ideal_list = Json::array();
      Json quotient_orders = Json::array();
      for (const Ideal& I : ideals) {
        ideal_list.push_back(I.members);
        const QuotientResult q = quotient_brace(B, I);
        checks.note(q.brace.additive().idempotents().size() ==
                    B.additive().idempotents().size());
        quotient_orders.push_back(q.brace.order());
      }
      for (const Ideal& I : ideals)
        for (const Ideal& J : ideals) {
          const auto [sum, prod] = ideal_sum_and_product(B, I, J);
          checks.note(is_ideal(B, sum.members).ok && is_ideal(B, prod.members).ok);
        }
      ij["ideals"] = std::move(ideal_list);
      ij["quotient_orders"] = std::move(quotient_orders);
      ij["socle"] = soc;
      ij["socle_size"] = static_cast<int>(soc.size());
      list.push_back(std::move(ij));
    }
    j["ideals"] = std::move(list);
  }

  return j;
}

Json options_json(const PipelineOptions& opts) {
  Json o;
  o["stages"] = opts.stages;
  o["max_order"] = opts.max_order;
  o["max_ideal_order"] = opts.max_ideal_order;
  o["max_equiv_order"] = opts.max_equiv_order;
  return o;
}

}  // namespace

PipelineResult run_catalog_pipeline(const std::vector<CatalogEntry>& entries,
                                    const PipelineOptions& opts) {
  validate_stages(opts.stages);

  const auto t0 = std::chrono::steady_clock::now();
  PipelineResult result;
  result.json["schema"] = "rotabrace-report/1";
  result.json["options"] = options_json(opts);

  Checks checks;
  Json carriers = Json::array();
  Json timing = Json::array();
  for (const CatalogEntry& entry : entries) {
    const auto c0 = std::chrono::steady_clock::now();
    try {
      carriers.push_back(run_entry(entry, opts, checks));
    } catch (const Error& e) {
      Json err;
      err["name"] = entry.name;
      err["error"] = e.what();
      carriers.push_back(std::move(err));
      ++checks.failed;
    }
    if (opts.include_timing) {
      const auto c1 = std::chrono::steady_clock::now();
      Json tj;
      tj["name"] = entry.name;
      tj["ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(c1 - c0).count();
      timing.push_back(std::move(tj));
    }
  }
  result.json["carriers"] = std::move(carriers);
  result.json["checks"] = Json{{"passed", checks.passed}, {"failed", checks.failed}};
  if (opts.include_timing) {
    const auto t1 = std::chrono::steady_clock::now();
    result.json["timing"] = Json{
        {"total_ms", std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()},
        {"carriers", std::move(timing)}};
  }
  result.checks_passed = checks.passed;
  result.checks_failed = checks.failed;
  return result;
}

PipelineResult run_pipeline(const CatalogEntry& entry, const PipelineOptions& opts) {
  return run_catalog_pipeline({entry}, opts);
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << "rotabrace report (" << report.value("schema", "?") << ")\n";
  if (report.contains("options")) {
    os << "stages:";
    for (const auto& s : report.at("options").at("stages")) os << " " << s.get<std::string>();
    os << "\n";
  }

  const Json& carriers = report.at("carriers");
  std::size_t name_w = 7;
  for (const Json& c : carriers) name_w = std::max(name_w, c.value("name", "?").size());

  auto pad = [&](const std::string& s, std::size_t w) {
    std::string out = s;
    out.resize(std::max(w, s.size()), ' ');
    return out;
  };

  os << pad("carrier", name_w) << "  kind      order  ops  classes  braces  ybe  ideals  socle\n";
  for (const Json& c : carriers) {
    if (c.contains("error")) {
      os << pad(c.value("name", "?"), name_w) << "  ERROR: " << c.at("error").get<std::string>()
         << "\n";
      continue;
    }
    auto count_or_dash = [&](const char* stage, auto&& f) -> std::string {
      if (!c.contains(stage)) return "-";
      return f(c.at(stage));
    };
    os << pad(c.value("name", "?"), name_w) << "  " << pad(c.value("kind", "?"), 8) << "  "
       << pad(std::to_string(c.value("order", 0)), 5) << "  "
       << pad(count_or_dash("enumerate",
                            [](const Json& s) {
                              return std::to_string(s.value("operator_count", 0));
                            }),
              3)
       << "  "
       << pad(count_or_dash("classify",
                            [](const Json& s) { return std::to_string(s.value("class_count", 0)); }),
              7)
       << "  "
       << pad(count_or_dash("braces",
                            [](const Json& s) { return std::to_string(s.size()); }),
              6)
       << "  "
       << pad(count_or_dash("ybe",
                            [](const Json& s) {
                              for (const Json& e : s)
                                if (!e.value("braid", false)) return std::string("FAIL");
                              return std::string("ok");
                            }),
              3)
       << "  "
       << pad(count_or_dash("ideals",
                            [](const Json& s) {
                              int total = 0;
                              for (const Json& e : s) total += e.value("ideal_count", 0);
                              return std::to_string(total);
                            }),
              6)
       << "  "
       << count_or_dash("ideals",
                        [](const Json& s) {
                          std::string out;
                          for (const Json& e : s) {
                            if (!out.empty()) out += ",";
                            out += std::to_string(e.value("socle_size", 0));
                          }
                          return out.empty() ? std::string("-") : out;
                        })
       << "\n";
  }
  if (report.contains("checks"))
    os << "checks: " << report.at("checks").value("passed", 0) << " passed, "
       << report.at("checks").value("failed", 0) << " failed\n";
  return os.str();
}

}  // namespace rotabrace

// Command-line front end: verification, construction, dimension, census,
// isomorphism, oracles, sampling, and fixture export.
//
// Exit codes: 0 all requested checks passed, 1 a property check failed,
// 2 usage or file error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wq/census.hpp"
#include "wq/closure.hpp"
#include "wq/dimension.hpp"
#include "wq/fixtures.hpp"
#include "wq/groupoid.hpp"
#include "wq/iso.hpp"
#include "wq/oracle.hpp"
#include "wq/rmtester.hpp"
#include "wq/table_io.hpp"
#include "wq/word.hpp"

namespace {

using nlohmann::json;
using namespace wq;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct LoadedTable {
  TableFile file;
  std::string origin;
  std::optional<int> claimed_dimension;
};

// A positional argument may be a table file path or a bundled fixture id.
LoadedTable load_table_arg(const std::string& arg) {
  if (is_fixture_id(arg)) {
    FixtureRecord rec = load_fixture(arg);
    return {std::move(rec.file), "fixture " + arg, rec.claimed_dimension};
  }
  return {read_table_file(arg), arg, std::nullopt};
}

std::string witness_text(const CayleyTable& t, const Verdict& v) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < v.arity; ++i)
    os << (i ? ", " : "") << t.label(v.witness[i]);
  os << ")";
  return os.str();
}

json verdict_json(const CayleyTable& t, const Verdict& v) {
  json j;
  j["ok"] = v.ok;
  if (!v.ok) {
    std::vector<std::string> at;
    for (int i = 0; i < v.arity; ++i) at.push_back(t.label(v.witness[i]));
    j["counterexample"] = at;
  }
  return j;
}

json table_json(const TableFile& tf) {
  return json::parse(table_to_json(tf));
}

int cmd_verify(const std::string& target, std::optional<int> expect_dimension,
               bool as_json) {
  LoadedTable lt = load_table_arg(target);
  const CayleyTable& t = lt.file.table;
  if (!expect_dimension) expect_dimension = lt.claimed_dimension;

  IdentityReport rep = check_identities(t);
  OneStepResult os = is_one_step(t);
  bool ok = rep.all_ok() && os.ok;

  std::optional<bool> relation_ok;
  if (lt.file.relation) {
    relation_ok = evaluate(*lt.file.relation, t, lt.file.ctx) == lt.file.ctx.e;
    ok = ok && *relation_ok;
  }
  std::optional<DimensionReport> dim;
  std::string dim_error;
  try {
    dim = dimension(t, lt.file.ctx);
  } catch (const std::exception& ex) {
    dim_error = ex.what();
  }
  if (expect_dimension) ok = ok && dim && dim->value == *expect_dimension;

  if (as_json) {
    json j;
    j["target"] = lt.origin;
    j["order"] = t.order();
    for (const auto& [name, v] : rep.entries()) j["checks"][name] = verdict_json(t, *v);
    j["checks"]["one_step"]["ok"] = os.ok;
    if (!os.ok && os.failing_pair)
      j["checks"]["one_step"]["counterexample"] = {
          t.label(os.failing_pair->first), t.label(os.failing_pair->second)};
    if (!os.ok && os.everywhere_commutative)
      j["checks"]["one_step"]["everywhere_commutative"] = true;
    if (relation_ok) {
      j["relation"]["word"] = lt.file.relation->render();
      j["relation"]["ok"] = *relation_ok;
    }
    if (dim) {
      j["dimension"]["value"] = dim->value;
      j["dimension"]["witness"] = dim->witness.render();
    } else {
      j["dimension"]["error"] = dim_error;
    }
    if (expect_dimension) j["dimension"]["expected"] = *expect_dimension;
    j["ok"] = ok;
    std::cout << j.dump(2) << "\n";
    return ok ? kOk : kCheckFailed;
  }

  std::cout << "table: " << lt.origin << " (order " << t.order() << ")\n";
  for (const auto& [name, v] : rep.entries()) {
    std::cout << "  " << name << std::string(22 - name.size(), ' ')
              << (v->ok ? "ok" : "FAIL at " + witness_text(t, *v)) << "\n";
  }
  std::cout << "  one_step              ";
  if (os.ok)
    std::cout << "ok\n";
  else if (os.everywhere_commutative)
    std::cout << "FAIL (table is commutative)\n";
  else
    std::cout << "FAIL: pair (" << t.label(os.failing_pair->first) << ", "
              << t.label(os.failing_pair->second) << ") does not generate\n";
  if (relation_ok)
    std::cout << "  relation " << lt.file.relation->render() << "  "
              << (*relation_ok ? "ok (evaluates to e)" : "FAIL") << "\n";
  if (dim)
    std::cout << "  dimension             " << dim->value << " (witness "
              << dim->witness.render() << ")"
              << (expect_dimension
                      ? (dim->value == *expect_dimension ? " == expected"
                                                         : " != expected " +
                                                               std::to_string(
                                                                   *expect_dimension))
                      : "")
              << "\n";
  else
    std::cout << "  dimension             unavailable: " << dim_error << "\n";
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_construct(const std::string& relation, int budget, long long max_rounds,
                  const std::string& out_path, bool trace, bool as_json) {
  Word w = Word::parse(relation);
  ClosureOptions opts;
  opts.budget = budget;
  opts.max_rounds = max_rounds;
  opts.keep_trace = trace;
  ClosureOutcome out = construct(w, opts);

  auto print_trace = [&] {
    for (const auto& step : out.trace)
      std::cout << "    [" << step.rule << "] " << step.detail << "\n";
  };

  if (const auto* s = out.success()) {
    TableFile tf{s->table, s->ctx, w, true};
    if (!out_path.empty()) {
      std::ofstream of(out_path, std::ios::binary);
      if (!of) throw TableFormatError("cannot write " + out_path);
      write_table(of, tf);
    }
    if (as_json) {
      json j;
      j["outcome"] = "success";
      j["order"] = s->table.order();
      j["dimension"] = s->dim.value;
      j["dimension_witness"] = s->dim.witness.render();
      j["term_names"] = s->term_names;
      j["table"] = table_json(tf);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "success: order " << s->table.order() << ", dimension "
                << s->dim.value << " (witness " << s->dim.witness.render()
                << ")\n";
      if (trace) print_trace();
      if (out_path.empty())
        write_table(std::cout, tf);
      else
        std::cout << "written to " << out_path << "\n";
    }
    return kOk;
  }
  if (const auto* d = out.degenerate()) {
    if (as_json) {
      json j;
      j["outcome"] = "degenerate";
      j["reason"] = to_string(d->reason);
      j["detail"] = d->detail;
      if (d->fixpoint_order) j["fixpoint_order"] = d->fixpoint_order;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "degenerate: " << to_string(d->reason);
      if (!d->detail.empty()) std::cout << " -- " << d->detail;
      if (d->fixpoint_order)
        std::cout << " (saturated table had order " << d->fixpoint_order
                  << ")";
      std::cout << "\n";
      if (trace) print_trace();
    }
    return kCheckFailed;
  }
  const auto* b = out.budget_exceeded();
  if (as_json) {
    json j;
    j["outcome"] = "budget_exceeded";
    j["elements_reached"] = b->elements_reached;
    j["budget"] = b->budget;
    j["rounds_exhausted"] = b->rounds_exhausted;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "budget exceeded: " << b->elements_reached << " elements (cap "
              << b->budget << ")"
              << (b->rounds_exhausted ? ", round cap hit" : "") << "\n";
    if (trace) print_trace();
  }
  return kBudget;
}

int cmd_dimension(const std::string& target, bool all_pairs, bool as_json) {
  LoadedTable lt = load_table_arg(target);
  DimensionReport rep = dimension(lt.file.table, lt.file.ctx);
  std::optional<AllPairsReport> pairs;
  if (all_pairs) pairs = dimension_all_pairs(lt.file.table);
  if (as_json) {
    json j;
    j["target"] = lt.origin;
    j["value"] = rep.value;
    j["witness"] = rep.witness.render();
    if (pairs) {
      j["all_pairs"]["min"] = pairs->min;
      j["all_pairs"]["max"] = pairs->max;
      j["all_pairs"]["uniform"] = pairs->uniform;
      std::vector<json> items;
      for (const auto& p : pairs->pairs)
        items.push_back({{"e", p.e}, {"f", p.f}, {"value", p.value}});
      j["all_pairs"]["pairs"] = items;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "dimension " << rep.value << " (witness "
              << rep.witness.render() << ")\n";
    if (pairs)
      std::cout << "all " << pairs->pairs.size() << " ordered pairs: min "
                << pairs->min << ", max " << pairs->max
                << (pairs->uniform ? " (uniform)" : " (NOT uniform)") << "\n";
  }
  return kOk;
}

int cmd_census(int n, int budget, long long max_rounds, int jobs,
               const std::string& out_dir, bool as_json) {
  ClosureOptions opts;
  opts.budget = budget;
  opts.max_rounds = max_rounds;
  CensusReport rep = run_census(n, opts, jobs);
  auto tags = identity_tags(rep);

  if (!out_dir.empty()) {
    for (const auto& cls : rep.classes) {
      TableFile tf{cls.model, cls.ctx,
                   rep.words[cls.word_indices.front()].word, true};
      std::string path =
          out_dir + "/census_n" + std::to_string(n) + "_class" +
          std::to_string(cls.id) + ".wqt";
      std::ofstream of(path, std::ios::binary);
      if (!of) throw TableFormatError("cannot write " + path);
      write_table(of, tf);
    }
  }

  if (as_json) {
    json j;
    j["n"] = rep.n;
    j["total_words"] = rep.total_words;
    std::vector<json> words;
    for (const auto& wv : rep.words) {
      json e;
      e["word"] = wv.word.render();
      e["class"] = to_string(wv.kind);
      if (wv.reason) e["reason"] = to_string(*wv.reason);
      if (wv.kind == WordClass::reducible) {
        e["dimension"] = wv.dimension;
        e["witness"] = wv.reduced_witness->render();
      }
      if (wv.kind == WordClass::genuine) {
        e["order"] = wv.order;
        e["genuine_class"] = wv.genuine_class;
      }
      words.push_back(std::move(e));
    }
    j["words"] = std::move(words);
    std::vector<json> classes;
    for (const auto& cls : rep.classes) {
      json c;
      c["id"] = cls.id;
      c["order"] = cls.order;
      c["plain_class"] = cls.plain_class;
      std::vector<std::string> members;
      for (int i : cls.word_indices)
        members.push_back(rep.words[i].word.render());
      c["words"] = members;
      const auto& tag = tags[cls.id];
      c["relation_identity_holds"] = tag.relation_identity;
      std::vector<std::string> named;
      for (int idx : tag.catalog_matches) named.push_back(identity_catalog()[idx]);
      c["satisfied_identities"] = named;
      classes.push_back(std::move(c));
    }
    j["genuine_classes"] = std::move(classes);
    j["plain_class_count"] = rep.plain_class_count;
    j["M"] = rep.max_order;
    j["M_is_lower_bound"] = rep.max_order_is_lower_bound;
    j["budget_exceeded_words"] = rep.budget_exceeded_count;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "census n=" << rep.n << ": " << rep.total_words << " words\n";
    int deg = 0, red = 0, gen = 0;
    for (const auto& wv : rep.words) {
      if (wv.kind == WordClass::degenerate) ++deg;
      if (wv.kind == WordClass::reducible) ++red;
      if (wv.kind == WordClass::genuine) ++gen;
    }
    std::cout << "  degenerate " << deg << ", reducible " << red
              << ", genuine " << gen << " (in " << rep.classes.size()
              << " pointed classes, " << rep.plain_class_count
              << " plain classes)";
    if (rep.budget_exceeded_count)
      std::cout << ", budget-exceeded " << rep.budget_exceeded_count;
    std::cout << "\n";
    for (const auto& cls : rep.classes) {
      std::cout << "  class " << cls.id << ": order " << cls.order
                << ", words:";
      for (int i : cls.word_indices)
        std::cout << " " << rep.words[i].word.render();
      const auto& tag = tags[cls.id];
      if (!tag.catalog_matches.empty()) {
        std::cout << "  identities:";
        for (int idx : tag.catalog_matches)
          std::cout << " [" << identity_catalog()[idx] << "]";
      }
      std::cout << "\n";
    }
    std::cout << "  M(" << rep.n << ") = " << rep.max_order
              << (rep.max_order_is_lower_bound ? " (lower bound)" : "")
              << "\n";
  }
  return rep.budget_exceeded_count ? kBudget : kOk;
}

int cmd_iso(const std::string& file_a, const std::string& file_b, bool pointed,
            bool as_json) {
  LoadedTable a = load_table_arg(file_a);
  LoadedTable b = load_table_arg(file_b);
  IsoResult res = pointed
                      ? find_isomorphism(a.file.table, b.file.table,
                                         a.file.ctx, b.file.ctx)
                      : find_isomorphism(a.file.table, b.file.table);
  if (as_json) {
    json j;
    j["a"] = a.origin;
    j["b"] = b.origin;
    j["pointed"] = pointed;
    j["isomorphic"] = res.found();
    j["pairs_examined"] = res.pairs_examined;
    if (res.found()) j["map"] = *res.map;
    std::cout << j.dump(2) << "\n";
  } else {
    if (res.found()) {
      std::cout << "isomorphic (examined " << res.pairs_examined
                << " candidate pairs)\n  map:";
      for (std::size_t i = 0; i < res.map->size(); ++i)
        std::cout << " " << a.file.table.label(static_cast<int>(i)) << "->"
                  << b.file.table.label((*res.map)[i]);
      std::cout << "\n";
    } else {
      std::cout << "not isomorphic (examined " << res.pairs_examined
                << " candidate pairs)\n";
    }
  }
  return res.found() ? kOk : kCheckFailed;
}

SearchSpec parse_identities(int order, const std::string& list) {
  SearchSpec spec;
  spec.order = order;
  std::istringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "idempotent")
      spec.idempotent = true;
    else if (tok == "right_modular")
      spec.right_modular = true;
    else if (tok == "medial")
      spec.medial = true;
    else if (tok == "left_distributive")
      spec.left_distributive = true;
    else if (tok == "right_distributive")
      spec.right_distributive = true;
    else if (tok == "elastic")
      spec.elastic = true;
    else if (tok == "latin")
      spec.latin = true;
    else if (tok == "one_step")
      spec.one_step = true;
    else
      throw CLI::ValidationError("unknown identity '" + tok + "'");
  }
  return spec;
}

int cmd_oracle_search(int order, const std::string& identities,
                      const std::string& relation, int jobs, bool as_json) {
  SearchSpec spec = parse_identities(order, identities);
  if (!relation.empty()) spec.relation = Word::parse(relation);
  std::vector<CayleyTable> models = brute_force_models(spec, jobs);
  if (as_json) {
    json j;
    j["order"] = order;
    j["identities"] = identities;
    if (!relation.empty()) j["relation"] = relation;
    j["models_up_to_isomorphism"] = models.size();
    std::vector<json> tables;
    for (const auto& m : models) {
      TableFile tf{m, GeneratorContext{0, 1, m.order() > 1 ? m.at(0, 1) : 0,
                                       m.order() > 1 ? m.at(1, 0) : 0},
                   std::nullopt, false};
      tables.push_back(table_json(tf));
    }
    j["models"] = std::move(tables);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "order " << order << ", identities {" << identities << "}"
              << (relation.empty() ? "" : ", relation " + relation) << ": "
              << models.size() << " model(s) up to isomorphism\n";
    for (std::size_t i = 0; i < models.size(); ++i) {
      std::cout << "model " << i << ":\n";
      for (int x = 0; x < models[i].order(); ++x) {
        std::cout << " ";
        for (int y = 0; y < models[i].order(); ++y)
          std::cout << " " << models[i].at(x, y);
        std::cout << "\n";
      }
    }
  }
  return kOk;
}

int cmd_oracle_affine(int modulus, int phi, const std::string& out_path,
                      bool as_json) {
  CayleyTable t = affine_model(modulus, phi);
  GeneratorContext ctx = GeneratorContext::with(t, 0, 1);
  TableFile tf{t, ctx, std::nullopt, false};
  if (!out_path.empty()) {
    std::ofstream of(out_path, std::ios::binary);
    if (!of) throw TableFormatError("cannot write " + out_path);
    write_table(of, tf);
  }
  if (as_json) {
    json j;
    j["modulus"] = modulus;
    j["phi"] = phi;
    j["table"] = table_json(tf);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "affine model on Z_" << modulus << " with phi = " << phi
              << " (x*y = " << phi << "x + " << (1 - phi % modulus + modulus) % modulus
              << "y mod " << modulus << ")\n";
    if (out_path.empty())
      write_table(std::cout, tf);
    else
      std::cout << "written to " << out_path << "\n";
  }
  return kOk;
}

int cmd_sample_rm(const std::string& target, long long samples,
                  std::uint64_t seed, int swaps, long long trials,
                  const std::string& curve, const std::string& csv_path,
                  bool as_json) {
  LoadedTable lt = load_table_arg(target);
  CayleyTable t = lt.file.table;
  if (swaps > 0) t = perturb_swaps(t, swaps, seed);
  SamplePlan plan{samples, seed};
  SampleStats st = sample_rm(t, plan);

  std::vector<long long> ks;
  if (!curve.empty()) {
    std::istringstream ss(curve);
    std::string tok;
    while (std::getline(ss, tok, ',')) ks.push_back(std::stoll(tok));
  }
  std::vector<DetectionPoint> points;
  if (!ks.empty()) points = detection_curve(t, ks, trials, seed);

  if (!csv_path.empty() && !points.empty()) {
    std::ofstream of(csv_path, std::ios::binary);
    if (!of) throw TableFormatError("cannot write " + csv_path);
    of << "k,predicted,empirical,detecting_trials,trials\n";
    for (const auto& p : points)
      of << p.k << "," << p.predicted << "," << p.empirical << ","
         << p.detecting_trials << "," << p.trials << "\n";
  }

  if (as_json) {
    json j;
    j["target"] = lt.origin;
    j["note"] =
        "table fixed (after any swaps); probability is over sampled triples";
    j["swaps"] = swaps;
    j["seed"] = seed;
    j["samples"] = st.samples;
    j["violations_observed"] = st.violations_observed;
    j["observed_fraction"] = st.observed_fraction;
    j["exact_violations"] = st.exact_violations;
    j["exact_fraction"] = st.exact_fraction;
    j["detected"] = st.detected;
    if (!points.empty()) {
      std::vector<json> pts;
      for (const auto& p : points)
        pts.push_back({{"k", p.k},
                       {"predicted", p.predicted},
                       {"empirical", p.empirical},
                       {"detecting_trials", p.detecting_trials},
                       {"trials", p.trials}});
      j["detection_curve"] = std::move(pts);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "table " << lt.origin << " with " << swaps
              << " seeded swap(s); randomness is over sampled triples only\n";
    std::cout << "  sampled " << st.samples << " triples, observed "
              << st.violations_observed << " violations (fraction "
              << st.observed_fraction << ")\n";
    std::cout << "  exact violating fraction " << st.exact_fraction << " ("
              << st.exact_violations << " of n^3)\n";
    std::cout << "  detected: " << (st.detected ? "yes" : "no") << "\n";
    for (const auto& p : points)
      std::cout << "  k=" << p.k << ": predicted detection " << p.predicted
                << ", empirical " << p.empirical << " (" << p.detecting_trials
                << "/" << p.trials << ")\n";
  }
  return kOk;
}

int cmd_fixtures_list(bool as_json) {
  if (as_json) {
    std::vector<json> items;
    for (const auto& id : fixture_ids()) {
      FixtureRecord rec = load_fixture(id);
      items.push_back({{"id", id},
                       {"order", rec.claimed_order},
                       {"dimension", rec.claimed_dimension},
                       {"relation", rec.file.relation->render()},
                       {"note", rec.note}});
    }
    std::cout << json(items).dump(2) << "\n";
  } else {
    for (const auto& id : fixture_ids()) {
      FixtureRecord rec = load_fixture(id);
      std::cout << id << ": order " << rec.claimed_order << ", dimension "
                << rec.claimed_dimension << ", relation "
                << rec.file.relation->render() << "\n";
    }
  }
  return kOk;
}

int cmd_fixtures_dump(const std::string& id, bool as_json) {
  FixtureRecord rec = load_fixture(id);
  if (as_json)
    std::cout << table_to_json(rec.file) << "\n";
  else
    write_table(std::cout, rec.file);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for one-step idempotent right modular quasigroups"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output")->configurable(false);

  // verify
  auto* verify = app.add_subcommand("verify",
                                    "identity battery, one-step, relation and "
                                    "dimension checks on a table");
  std::string verify_target;
  std::optional<int> expect_dimension;
  verify->add_option("table", verify_target, "table file or fixture id")
      ->required();
  verify->add_option("--expect-dimension", expect_dimension,
                     "fail unless the dimension equals this");
  verify->add_flag("--json", as_json, "machine-readable output");

  // construct
  auto* cons = app.add_subcommand(
      "construct", "build the model forced by a relation e = w(f, ef)");
  std::string relation, out_path;
  int budget = 64;
  long long max_rounds = 1'000'000;
  bool trace = false;
  cons->add_option("--relation", relation, "word over {f, g}, e.g. \"(f g)\"")
      ->required();
  cons->add_option("--budget", budget, "element budget (default 64)");
  cons->add_option("--max-rounds", max_rounds, "saturation round cap");
  cons->add_option("--out", out_path, "write the table to this file");
  cons->add_flag("--trace", trace, "print the derivation log");
  cons->add_flag("--json", as_json, "machine-readable output");

  // dimension
  auto* dim = app.add_subcommand("dimension",
                                 "minimum word length expressing e over {f, ef}");
  std::string dim_target;
  bool all_pairs = false;
  dim->add_option("table", dim_target, "table file or fixture id")->required();
  dim->add_flag("--all-pairs", all_pairs,
                "compute for every ordered generator pair");
  dim->add_flag("--json", as_json, "machine-readable output");

  // census
  auto* census = app.add_subcommand(
      "census", "classify all words of a given length and compute M(n)");
  int census_n = 0, jobs = 1;
  int census_budget = 64;
  long long census_rounds = 1'000'000;
  std::string census_out;
  census->add_option("--n", census_n, "word length")->required();
  census->add_option("--budget", census_budget, "element budget per word");
  census->add_option("--max-rounds", census_rounds, "saturation round cap");
  census->add_option("--jobs", jobs, "worker threads (default 1)");
  census->add_option("--out", census_out,
                     "directory for genuine-class table files");
  census->add_flag("--json", as_json, "machine-readable output");

  // iso
  auto* iso = app.add_subcommand("iso", "isomorphism test between two tables");
  std::string iso_a, iso_b;
  bool pointed = false;
  iso->add_option("a", iso_a, "first table (one-step required)")->required();
  iso->add_option("b", iso_b, "second table")->required();
  iso->add_flag("--pointed", pointed, "require e->e, f->f");
  iso->add_flag("--json", as_json, "machine-readable output");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "independent ground-truth tools");
  oracle->require_subcommand(1);
  auto* search = oracle->add_subcommand(
      "search", "exhaustive model search at a fixed order (cap 6)");
  int search_order = 0, search_jobs = 1;
  std::string identities, search_relation;
  search->add_option("--order", search_order, "model order")->required();
  search
      ->add_option("--identities", identities,
                   "comma list: idempotent,right_modular,medial,"
                   "left_distributive,right_distributive,elastic,latin,"
                   "one_step")
      ->required();
  search->add_option("--relation", search_relation,
                     "require e = w(f, ef) with e=0, f=1");
  search->add_option("--jobs", search_jobs, "worker threads");
  search->add_flag("--json", as_json, "machine-readable output");
  auto* affine = oracle->add_subcommand(
      "affine", "affine model x*y = phi*x + (1-phi)*y on Z_mod");
  int modulus = 0, phi = 0;
  std::string affine_out;
  affine->add_option("--mod", modulus, "modulus")->required();
  affine->add_option("--phi", phi, "multiplier, phi^2 + phi - 1 = 0 (mod m)")
      ->required();
  affine->add_option("--out", affine_out, "write the table to this file");
  affine->add_flag("--json", as_json, "machine-readable output");

  // sample-rm
  auto* sample = app.add_subcommand(
      "sample-rm", "Monte-Carlo right-modularity violation detection");
  std::string sample_target, curve, csv_path;
  long long samples = 1000, trials = 1000;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int swaps = 0;
  sample->add_option("table", sample_target, "table file or fixture id")
      ->required();
  sample->add_option("--samples", samples, "triples per run")->required();
  sample->add_option("--seed", seed, "master seed (required: no hidden entropy)")
      ->required()
      ->each([&](const std::string&) { seed_set = true; });
  sample->add_option("--swaps", swaps, "same-row entry swaps to apply first");
  sample->add_option("--trials", trials, "trials for the detection curve");
  sample->add_option("--curve", curve, "comma list of k values, e.g. 1,10,100");
  sample->add_option("--csv", csv_path, "write the detection curve as CSV");
  sample->add_flag("--json", as_json, "machine-readable output");

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "bundled tables");
  fixtures->require_subcommand(1);
  auto* list = fixtures->add_subcommand("list", "list bundled fixtures");
  list->add_flag("--json", as_json, "machine-readable output");
  auto* dump = fixtures->add_subcommand("dump", "print one fixture");
  std::string dump_id;
  dump->add_option("id", dump_id, "fixture id")->required();
  dump->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(verify_target, expect_dimension, as_json);
    if (*cons)
      return cmd_construct(relation, budget, max_rounds, out_path, trace,
                           as_json);
    if (*dim) return cmd_dimension(dim_target, all_pairs, as_json);
    if (*census)
      return cmd_census(census_n, census_budget, census_rounds, jobs,
                        census_out, as_json);
    if (*iso) return cmd_iso(iso_a, iso_b, pointed, as_json);
    if (*oracle) {
      if (*search)
        return cmd_oracle_search(search_order, identities, search_relation,
                                 search_jobs, as_json);
      if (*affine) return cmd_oracle_affine(modulus, phi, affine_out, as_json);
    }
    if (*sample)
      return cmd_sample_rm(sample_target, samples, seed, swaps, trials, curve,
                           csv_path, as_json);
    if (*fixtures) {
      if (*list) return cmd_fixtures_list(as_json);
      if (*dump) return cmd_fixtures_dump(dump_id, as_json);
    }
  } catch (const WordSyntaxError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const TableFormatError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const NoSuchAutomorphism& ex) {
    std::cerr << "no such automorphism: " << ex.what() << "\n";
    return kCheckFailed;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

// kpack: fractional and integral K_k-packings, design-based decompositions,
// extremal blow-ups and counting bounds, with reproducible seeded runs and
// JSON payloads on stdout. Exit codes: 0 success / affirmative answer,
// 1 usage or parse error, 2 honest domain failure, 3 negative answer.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "kpack/bounds.hpp"
#include "kpack/decomposer.hpp"
#include "kpack/design.hpp"
#include "kpack/extremal.hpp"
#include "kpack/fractional.hpp"
#include "kpack/integral.hpp"
#include "kpack/json_io.hpp"
#include "kpack/lp.hpp"

namespace {

using kpack::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomainFailure = 2;
constexpr int kExitNegative = 3;

struct Run {
  std::string subcommand;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string manifest_path;
  json options = json::object();
  json inputs = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  json timings = json::object();

  std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kpack::ParamError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    inputs[path] = "fnv1a64:" + kpack::fnv1a64_hex(text);
    return text;
  }

  void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

  void finish() {
    if (manifest_path.empty()) return;
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    timings["total"] = elapsed;
    json manifest = {{"tool", "kpack"},
                     {"version", std::string(kpack::kVersion)},
                     {"subcommand", subcommand},
                     {"seed", seed},
                     {"jobs", jobs},
                     {"options", options},
                     {"inputs", inputs},
                     {"timings_ms", timings}};
    std::ofstream out(manifest_path);
    out << manifest.dump(2) << "\n";
  }
};

int print_schema(const std::vector<std::string>& names) {
  if (names.size() == 1) {
    std::cout << kpack::schema_source(names[0]) << "\n";
  } else {
    json bundle = json::object();
    for (const auto& n : names) bundle[n] = json::parse(kpack::schema_source(n));
    std::cout << bundle.dump(2) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- fracpack

struct FracpackOpts {
  int k = 3;
  std::string graph_file;
  std::string mode = "exact";
  double tol = 1e-9;
  std::string dump_lp_path;
};

int run_fracpack(Run& run, const FracpackOpts& o) {
  run.options = {{"k", o.k}, {"mode", o.mode}, {"tol", o.tol}};
  const kpack::Graph g = kpack::parse_graph(run.read_input(o.graph_file));
  if (!o.dump_lp_path.empty()) {
    std::vector<kpack::CliqueCopy> copies;
    if (o.k <= g.num_vertices() && o.k >= 2) copies = kpack::enumerate_cliques(g, o.k);
    std::ofstream out(o.dump_lp_path);
    out << kpack::dump_lp(kpack::build_packing_lp(g, o.k, copies));
  }
  if (o.mode == "exact") {
    const auto rep = kpack::fractional_packing_number(g, o.k);
    json payload = kpack::to_json(rep);
    payload["mode"] = "exact";
    run.emit(payload);
    return rep.is_fractional_decomposition ? kExitOk : kExitNegative;
  }
  // Float mode: approximate value, decomposition decided within tol.
  std::vector<kpack::CliqueCopy> copies;
  if (o.k <= g.num_vertices() && o.k >= 2) copies = kpack::enumerate_cliques(g, o.k);
  const auto lp = kpack::build_packing_lp(g, o.k, copies);
  const auto sol = kpack::solve_float(lp, o.tol);
  const kpack::Rational target(mpz_class(g.num_edges()), kpack::binomial(o.k, 2));
  const bool decomp = std::abs(sol.value - target.to_double()) <= o.tol;
  std::ostringstream value;
  value.precision(12);
  value << std::fixed << sol.value;
  json payload = {{"k", o.k},
                  {"lp_value", value.str()},
                  {"target", target.str()},
                  {"is_fractional_decomposition", decomp},
                  {"mode", "float"},
                  {"witness", json({{"k", o.k}, {"weights", json::array()}})}};
  run.emit(payload);
  return decomp ? kExitOk : kExitNegative;
}

// ----------------------------------------------------------------- intpack

struct IntpackOpts {
  int k = 3;
  std::string graph_file;
  std::string method = "exact";
  std::uint64_t budget = 50'000'000;
};

int run_intpack(Run& run, const IntpackOpts& o) {
  run.options = {{"k", o.k}, {"method", o.method}, {"budget", o.budget}};
  const kpack::Graph g = kpack::parse_graph(run.read_input(o.graph_file));
  kpack::IntegralPacking p;
  if (o.method == "exact")
    p = kpack::max_packing_exact(g, o.k, o.budget);
  else
    p = kpack::greedy_packing(g, o.k, run.seed);
  run.emit(kpack::to_json(p));
  return kExitOk;
}

// --------------------------------------------------------------------- gap

struct GapOpts {
  int k = 3;
  std::string graph_file;
  bool exact = false;
  std::uint64_t budget = 50'000'000;
};

int run_gap(Run& run, const GapOpts& o) {
  run.options = {{"k", o.k}, {"exact", o.exact}, {"budget", o.budget}};
  const kpack::Graph g = kpack::parse_graph(run.read_input(o.graph_file));
  const auto rep = kpack::gap_report(g, o.k, o.exact, o.budget, run.seed);
  run.emit(kpack::to_json(rep));
  return kExitOk;
}

// --------------------------------------------------------------- decompose

struct DecomposeOpts {
  int k = 3;
  std::string graph_file;
  int pg_q = -1;
  std::string design_file;
  bool search = false;
  std::uint64_t search_budget = 50'000'000;
  int attempts = 64;
  int maxdeg_cap = -1;
  int sat_cap = -1;
  bool keep_near_kt = false;
};

int run_decompose(Run& run, const DecomposeOpts& o) {
  run.options = {{"k", o.k},          {"pg", o.pg_q},
                 {"search", o.search}, {"attempts", o.attempts},
                 {"maxdeg_cap", o.maxdeg_cap}, {"saturation_cap", o.sat_cap},
                 {"keep_near_kt", o.keep_near_kt}};
  const int sources = (o.pg_q >= 0) + !o.design_file.empty() + o.search;
  if (sources != 1) {
    std::cerr << "decompose: pick exactly one of --pg, --design, --search\n";
    return kExitUsage;
  }
  const kpack::Graph g = kpack::parse_graph(run.read_input(o.graph_file));

  kpack::DecomposerConfig cfg;
  cfg.k = o.k;
  cfg.rng_seed = run.seed;
  cfg.sample_attempts = o.attempts;
  cfg.keep_near_kt = o.keep_near_kt;
  if (o.maxdeg_cap >= 0) cfg.maxdeg_cap = o.maxdeg_cap;
  if (o.sat_cap >= 0) cfg.saturation_cap = o.sat_cap;

  kpack::DesignSource source;
  if (o.pg_q >= 0)
    source = kpack::DesignSource::pg(o.pg_q);
  else if (o.search)
    source = kpack::DesignSource::searched(o.search_budget);
  else
    source = kpack::DesignSource::from_design(
        kpack::parse_design(run.read_input(o.design_file)));

  try {
    const auto cert = kpack::decompose(g, cfg, source);
    if (cert.below_paper_threshold)
      std::cerr << "warning: minimum degree below the asymptotic threshold; "
                   "success at this scale is opportunistic\n";
    run.emit(kpack::to_json(cert));
    return kExitOk;
  } catch (const kpack::DecomposeError& e) {
    run.emit(json{{"stage", e.stage}, {"error", e.what()}});
    return kExitDomainFailure;
  }
}

// ------------------------------------------------------------------ design

struct DesignOpts {
  int pg_q = -1;
  std::vector<int> search_nt;
  std::string validate_file;
  std::uint64_t budget = 50'000'000;
  std::string out_file;
};

int run_design(Run& run, const DesignOpts& o) {
  run.options = {{"pg", o.pg_q}, {"budget", o.budget}};
  const int modes = (o.pg_q >= 0) + !o.search_nt.empty() + !o.validate_file.empty();
  if (modes != 1) {
    std::cerr << "design: pick exactly one of --pg, --search, --validate\n";
    return kExitUsage;
  }
  if (o.pg_q >= 0) {
    const auto d = kpack::projective_plane_design(o.pg_q);
    if (!o.out_file.empty()) {
      std::ofstream out(o.out_file);
      out << kpack::serialize_design(d);
    }
    run.emit(kpack::to_json(d));
    return kExitOk;
  }
  if (!o.search_nt.empty()) {
    run.options["search"] = o.search_nt;
    const auto res = kpack::search_design(o.search_nt[0], o.search_nt[1], o.budget);
    json payload;
    switch (res.status) {
      case kpack::DesignSearchStatus::found:
        payload = {{"status", "found"}, {"nodes", res.nodes}, {"design", kpack::to_json(*res.design)}};
        if (!o.out_file.empty()) {
          std::ofstream out(o.out_file);
          out << kpack::serialize_design(*res.design);
        }
        run.emit(payload);
        return kExitOk;
      case kpack::DesignSearchStatus::none_exists:
        run.emit(json{{"status", "none_exists"}, {"nodes", res.nodes}});
        return kExitNegative;
      case kpack::DesignSearchStatus::divisibility:
        run.emit(json{{"status", "divisibility"}, {"nodes", res.nodes}});
        return kExitNegative;
      case kpack::DesignSearchStatus::budget_exceeded:
        run.emit(json{{"status", "budget_exceeded"}, {"nodes", res.nodes}});
        return kExitDomainFailure;
    }
  }
  // --validate
  try {
    const auto d = kpack::parse_design(run.read_input(o.validate_file));
    run.emit(kpack::to_json(kpack::validate_design(d)));
    return kExitOk;
  } catch (const kpack::ParamError& e) {
    run.emit(json{{"valid", false}, {"violations", json::array({e.what()})}});
    return kExitNegative;
  }
}

// ---------------------------------------------------------------- extremal

struct ExtremalOpts {
  int k = 3;
  bool mini = false;
  int part_cycle = -1;
  std::vector<int> part_circulant;
  std::vector<int> part_random;
  bool paper = false;
  long s = 1;
  std::string eps = "1/20";
  std::string verify_lp = "none";
  double tol = 1e-6;
};

int run_extremal(Run& run, const ExtremalOpts& o) {
  run.options = {{"k", o.k},         {"mini", o.mini},   {"paper", o.paper},
                 {"s", o.s},         {"eps", o.eps},     {"verify_lp", o.verify_lp},
                 {"tol", o.tol}};
  const int parts = (o.part_cycle > 0) + !o.part_circulant.empty() + !o.part_random.empty() +
                    o.paper;
  if (parts != 1) {
    std::cerr << "extremal: pick exactly one of --part-cycle, --part-circulant, "
                 "--part-random, --paper\n";
    return kExitUsage;
  }
  kpack::Graph g;
  kpack::BlowupSpec spec;
  if (o.paper) {
    std::tie(g, spec) =
        kpack::paper_blowup(o.k, o.s, kpack::Rational::from_string(o.eps), run.seed);
  } else {
    kpack::Graph part;
    if (o.part_cycle > 0)
      part = kpack::cycle_graph(o.part_cycle);
    else if (!o.part_circulant.empty())
      part = kpack::circulant_graph(o.part_circulant[0], o.part_circulant[1]);
    else
      part = kpack::random_regular(o.part_random[0], o.part_random[1], run.seed);
    std::tie(g, spec) = kpack::blow_up(o.k, part);
  }
  const auto rep = kpack::structural_bound_report(g, spec);

  kpack::ExtremalLPCheck lp_check;
  if (o.verify_lp == "exact") {
    lp_check.mode = "exact";
    lp_check.exact_value = kpack::fractional_packing_number(g, o.k).lp_value;
  } else if (o.verify_lp == "float") {
    lp_check.mode = "float";
    std::vector<kpack::CliqueCopy> copies;
    if (o.k <= g.num_vertices()) copies = kpack::enumerate_cliques(g, o.k);
    lp_check.float_value =
        kpack::solve_float(kpack::build_packing_lp(g, o.k, copies), o.tol).value;
  }
  run.emit(kpack::to_json(rep, lp_check));
  return kExitOk;
}

// ------------------------------------------------------------------ bounds

struct BoundsOpts {
  int t = 5;
  long n_star = -1;
  long deficit = -1;
  std::string gamma;
  std::string verify_file;
  std::uint64_t copy_budget = 10'000'000;
};

int run_bounds(Run& run, const BoundsOpts& o) {
  run.options = {{"t", o.t}, {"copy_budget", o.copy_budget}};
  const int modes = (o.n_star >= 0) + !o.gamma.empty() + !o.verify_file.empty();
  if (modes != 1) {
    std::cerr << "bounds: pick exactly one of --n/--deficit, --gamma, --verify\n";
    return kExitUsage;
  }
  if (o.n_star >= 0) {
    if (o.deficit < 0) {
      std::cerr << "bounds: --n requires --deficit\n";
      return kExitUsage;
    }
    const kpack::BoundQuery q{o.n_star, o.deficit, o.t};
    run.emit(kpack::to_json(q, kpack::lemma26_bound(q)));
    return kExitOk;
  }
  if (!o.gamma.empty()) {
    const auto gamma = kpack::Rational::from_string(o.gamma);
    run.emit(kpack::cor27_to_json(gamma, o.t, kpack::cor27_bound(gamma, o.t)));
    return kExitOk;
  }
  const kpack::Graph g = kpack::parse_graph(run.read_input(o.verify_file));
  const auto rep = kpack::verify_lemma26(g, o.t, o.copy_budget);
  run.emit(kpack::to_json(rep, o.t));
  return rep.holds ? kExitOk : kExitNegative;
}

// ------------------------------------------------------------------ verify

struct VerifyOpts {
  std::string payload_file;
  std::string graph_file;
  bool require_decomposition = false;
};

int run_verify(Run& run, const VerifyOpts& o) {
  run.options = {{"require_decomposition", o.require_decomposition}};
  const json payload = json::parse(run.read_input(o.payload_file));
  const kpack::Graph g = kpack::parse_graph(run.read_input(o.graph_file));
  kpack::ValidityReport rep;
  if (payload.contains("parts")) {
    const auto cert = kpack::certificate_from_json(payload);
    kpack::DecomposerConfig cfg;
    cfg.k = cert.k;
    rep = kpack::verify_certificate(g, cert, cfg);
  } else if (payload.contains("weights")) {
    rep = kpack::validate_fractional(g, kpack::fractional_from_json(payload),
                                     o.require_decomposition);
  } else if (payload.contains("copies")) {
    rep = kpack::verify_packing(g, kpack::packing_from_json(payload));
  } else {
    throw kpack::ParamError(
        "unrecognized payload: expected a certificate (parts), fractional packing "
        "(weights) or integral packing (copies)");
  }
  run.emit(kpack::to_json(rep));
  return rep.ok() ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K_k-packing toolkit: exact fractional/integral clique packings, "
               "design-based decompositions, extremal blow-ups"};
  app.require_subcommand(0, 1);

  Run run;
  bool want_schema = false;
  app.add_option("--seed", run.seed, "seed for all randomized steps")->capture_default_str();
  app.add_option("--jobs", run.jobs, "parallelism cap (current pipelines are sequential)")
      ->capture_default_str();
  app.add_flag("--json-schema", want_schema, "print the subcommand's payload schema and exit");
  app.add_option("--manifest", run.manifest_path,
                 "write a reproducibility manifest (inputs, options, timings) to this file");

  FracpackOpts frac;
  auto* cmd_frac = app.add_subcommand("fracpack", "fractional K_k-packing number via exact LP");
  cmd_frac->add_option("-k", frac.k, "clique order")->required();
  cmd_frac->add_option("graph", frac.graph_file, "graph file");
  cmd_frac->add_option("--mode", frac.mode, "exact|float")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  cmd_frac->add_option("--tol", frac.tol, "float-mode tolerance")->capture_default_str();
  cmd_frac->add_option("--dump-lp", frac.dump_lp_path, "write the LP in textual LP format");

  IntpackOpts ip;
  auto* cmd_ip = app.add_subcommand("intpack", "maximum (or greedy) integral K_k-packing");
  cmd_ip->add_option("-k", ip.k, "clique order")->required();
  cmd_ip->add_option("graph", ip.graph_file, "graph file");
  cmd_ip->add_option("--method", ip.method, "exact|greedy")
      ->check(CLI::IsMember({"exact", "greedy"}))
      ->capture_default_str();
  cmd_ip->add_option("--budget", ip.budget, "branch-and-bound node budget")
      ->capture_default_str();

  GapOpts gap;
  auto* cmd_gap = app.add_subcommand("gap", "nu* vs nu gap report");
  cmd_gap->add_option("-k", gap.k, "clique order")->required();
  cmd_gap->add_option("graph", gap.graph_file, "graph file");
  cmd_gap->add_flag("--exact", gap.exact, "exact nu by branch-and-bound");
  cmd_gap->add_option("--budget", gap.budget, "branch-and-bound node budget")
      ->capture_default_str();

  DecomposeOpts dec;
  auto* cmd_dec = app.add_subcommand("decompose", "{K_k, K_t, K_t-minus}-decomposition pipeline");
  cmd_dec->add_option("-k", dec.k, "clique order")->required();
  cmd_dec->add_option("graph", dec.graph_file, "graph file");
  cmd_dec->add_option("--pg", dec.pg_q, "use the projective plane PG(2,q), q in {2,3,4}");
  cmd_dec->add_option("--design", dec.design_file, "design file for the reduced order");
  cmd_dec->add_flag("--search", dec.search, "search a design for the reduced order");
  cmd_dec->add_option("--search-budget", dec.search_budget, "design search node budget")
      ->capture_default_str();
  cmd_dec->add_option("--attempts", dec.attempts, "permutation samples")->capture_default_str();
  cmd_dec->add_option("--maxdeg-cap", dec.maxdeg_cap, "bad-edge max degree cap (default formula)");
  cmd_dec->add_option("--sat-cap", dec.sat_cap, "per-vertex absorbed-edge cap (default formula)");
  cmd_dec->add_flag("--keep-near-kt", dec.keep_near_kt,
                    "emit near-complete elements directly as K_t-minus parts");

  DesignOpts des;
  auto* cmd_des = app.add_subcommand("design", "construct, search or validate Steiner systems");
  cmd_des->add_option("--pg", des.pg_q, "projective plane PG(2,q), q in {2,3,4}");
  cmd_des->add_option("--search", des.search_nt, "search S(2,t,n): two values n t")
      ->expected(2);
  cmd_des->add_option("--validate", des.validate_file, "validate a design file");
  cmd_des->add_option("--budget", des.budget, "search node budget")->capture_default_str();
  cmd_des->add_option("--out", des.out_file, "also write the design in text format");

  ExtremalOpts ext;
  auto* cmd_ext = app.add_subcommand("extremal", "blow-up constructions and structural bound");
  cmd_ext->add_option("-k", ext.k, "clique order")->required();
  cmd_ext->add_flag("--mini", ext.mini, "desk-scale instance (with --part-*)");
  cmd_ext->add_option("--part-cycle", ext.part_cycle, "part graph: cycle of this length");
  cmd_ext->add_option("--part-circulant", ext.part_circulant, "part graph: circulant nv deg")
      ->expected(2);
  cmd_ext->add_option("--part-random", ext.part_random, "part graph: random regular nv deg")
      ->expected(2);
  cmd_ext->add_flag("--paper", ext.paper, "parameterized family (with --s, --eps)");
  cmd_ext->add_option("--s", ext.s, "family scale parameter")->capture_default_str();
  cmd_ext->add_option("--eps", ext.eps, "degree-loss fraction (rational)")->capture_default_str();
  cmd_ext->add_option("--verify-lp", ext.verify_lp, "none|exact|float")
      ->check(CLI::IsMember({"none", "exact", "float"}))
      ->capture_default_str();
  cmd_ext->add_option("--tol", ext.tol, "float LP tolerance")->capture_default_str();

  BoundsOpts bnd;
  auto* cmd_bnd = app.add_subcommand("bounds", "per-edge clique-count bounds");
  cmd_bnd->add_option("--t", bnd.t, "clique order t")->required();
  cmd_bnd->add_option("--n", bnd.n_star, "vertex count (formula mode)");
  cmd_bnd->add_option("--deficit", bnd.deficit, "degree deficit (formula mode)");
  cmd_bnd->add_option("--gamma", bnd.gamma, "degree deficiency fraction (probability mode)");
  cmd_bnd->add_option("--verify", bnd.verify_file, "graph file: verify the bound empirically");
  cmd_bnd->add_option("--copy-budget", bnd.copy_budget, "enumeration budget")
      ->capture_default_str();

  VerifyOpts ver;
  auto* cmd_ver = app.add_subcommand("verify", "re-check a certificate or packing file");
  cmd_ver->add_option("payload", ver.payload_file, "JSON payload file");
  cmd_ver->add_option("graph", ver.graph_file, "graph file");
  cmd_ver->add_flag("--decomposition", ver.require_decomposition,
                    "require per-edge sums exactly 1 for fractional packings");

  // Global flags may also follow the subcommand (kpack intpack --seed 5 ...).
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::map<std::string, std::vector<std::string>> schemas = {
      {"fracpack", {"decomposition_report"}},
      {"intpack", {"integral_packing"}},
      {"gap", {"gap_report"}},
      {"decompose", {"certificate", "decompose_failure"}},
      {"design", {"design", "design_search", "verify_report"}},
      {"extremal", {"extremal_report"}},
      {"bounds", {"bounds_formula", "bounds_cor27", "bounds_verify"}},
      {"verify", {"verify_report"}},
  };

  try {
    CLI::App* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
    if (sub == nullptr) {
      if (want_schema) {
        json all = json::object();
        for (const auto& n : kpack::schema_names()) all[n] = json::parse(kpack::schema_source(n));
        std::cout << all.dump(2) << "\n";
        return kExitOk;
      }
      std::cerr << app.help();
      return kExitUsage;
    }
    run.subcommand = sub->get_name();
    if (want_schema) return print_schema(schemas.at(run.subcommand));

    auto need_file = [](const std::string& f, const char* what) {
      if (f.empty()) throw kpack::ParamError(std::string("missing ") + what);
    };

    int code = kExitUsage;
    if (sub == cmd_frac) {
      need_file(frac.graph_file, "graph file");
      code = run_fracpack(run, frac);
    } else if (sub == cmd_ip) {
      need_file(ip.graph_file, "graph file");
      code = run_intpack(run, ip);
    } else if (sub == cmd_gap) {
      need_file(gap.graph_file, "graph file");
      code = run_gap(run, gap);
    } else if (sub == cmd_dec) {
      need_file(dec.graph_file, "graph file");
      code = run_decompose(run, dec);
    } else if (sub == cmd_des) {
      code = run_design(run, des);
    } else if (sub == cmd_ext) {
      code = run_extremal(run, ext);
    } else if (sub == cmd_bnd) {
      code = run_bounds(run, bnd);
    } else if (sub == cmd_ver) {
      need_file(ver.payload_file, "payload file");
      need_file(ver.graph_file, "graph file");
      code = run_verify(run, ver);
    }
    run.finish();
    return code;
  } catch (const kpack::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const kpack::ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const kpack::BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitDomainFailure;
  } catch (const kpack::SolverError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitDomainFailure;
  } catch (const kpack::DecomposeError& e) {
    std::cerr << "pipeline failure: " << e.what() << "\n";
    return kExitDomainFailure;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitDomainFailure;
  }
}

#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lslab/documents.hpp"
#include "lslab/maxcut_to_wis.hpp"
#include "lslab/mis_pivot.hpp"
#include "lslab/rng.hpp"
#include "lslab/swop_to_circuit.hpp"

namespace lslab {

// Exit codes: 0 ok, 1 usage or parse or certification, 2 resource or budget,
// 3 promise violated, 4 verification failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitPromise = 3;
inline constexpr int kExitVerifyFailed = 4;

namespace cli_detail {

inline std::uint64_t env_budget(std::uint64_t fallback) {
  const char* v = std::getenv("LSLAB_BUDGET");
  if (!v) return fallback;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0' || parsed == 0) return fallback;
  return parsed;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputContractError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputContractError("cannot write file: " + path);
  out << text;
}

inline Json parse_json_text(const std::string& text, const char* what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputContractError(std::string(what) + ": malformed document");
  return j;
}

inline std::vector<Rat> parse_weight_csv(const std::string& csv) {
  std::vector<Rat> out;
  std::string cur;
  std::istringstream ss(csv);
  while (std::getline(ss, cur, ',')) out.push_back(parse_rat(cur));
  if (out.empty()) throw InputContractError("empty weight list");
  return out;
}

inline std::vector<std::vector<std::uint32_t>> parse_group_spec(const std::string& spec) {
  std::vector<std::vector<std::uint32_t>> out;
  std::string grp;
  std::istringstream ss(spec);
  while (std::getline(ss, grp, ';')) {
    std::vector<std::uint32_t> row;
    std::string item;
    std::istringstream gs(grp);
    while (std::getline(gs, item, ',')) row.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    if (!row.empty()) out.push_back(row);
  }
  return out;
}

struct RebuiltBundle {
  std::string reduction;
  std::optional<ReductionBundle> bundle;  // absent for the seeded chain construction
  Json target_doc;
  std::uint64_t declared_tightness = 0;
};

// Reductions are deterministic, so re-running them on the inline source
// reproduces the bundle; the manifest's target hash pins the result.
inline RebuiltBundle rebuild_bundle(const Json& manifest) {
  detail::require_schema(manifest, "bundle");
  RebuiltBundle out;
  out.reduction = manifest.value("reduction", "");
  if (out.reduction == "maxcut-to-wis") {
    MaxCutInstance mc = maxcut_from_json(manifest.at("source"));
    auto red = reduce_maxcut_to_wis(mc);
    out.bundle = red.to_bundle();
    out.target_doc = swop_to_json(*red.target);
    out.declared_tightness = red.declared_tightness;
  } else if (out.reduction == "swop-to-circuit") {
    SwopInstance src = swop_from_json(manifest.at("source"));
    auto red = reduce_swop_to_maxcircuit(src);
    out.bundle = red.to_bundle();
    out.target_doc = circuit_to_json(*red.target);
    out.declared_tightness = red.declared_tightness;
  } else if (out.reduction == "mis-to-wis-pivot") {
    MisInstance mis = mis_from_json(manifest.at("source"));
    SwopInstance seed = swop_from_json(manifest.at("seed"));
    Bits seed_start = Bits::from_string(manifest.at("seed_start").get<std::string>());
    auto red = reduce_mis_to_wis_pivot(mis, seed, seed_start);
    out.target_doc = swop_to_json(*red.target);
  } else {
    throw InputContractError("unknown reduction: " + out.reduction);
  }
  if (manifest.contains("target_hash") &&
      manifest["target_hash"].get<std::string>() != document_hash(out.target_doc))
    throw InputContractError("manifest target hash does not match the rebuilt target");
  return out;
}

inline int cmd_generate_maxcut(std::uint32_t n, const std::string& weights, std::uint64_t seed,
                               bool has_seed, std::uint64_t max_weight, const std::string& out_path,
                               std::ostream& out) {
  if (n < 2) throw InputContractError("at least two vertices required");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  if (n == 2)
    edges = {{0, 1}};
  else
    for (std::uint32_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  std::vector<Rat> w;
  if (!weights.empty()) {
    w = parse_weight_csv(weights);
    if (w.size() == 1) w.assign(edges.size(), w[0]);
    if (w.size() != edges.size()) throw InputContractError("one weight per edge required");
  } else if (has_seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < edges.size(); ++i)
      w.push_back(Rat(BigInt(1 + rng.next_below(max_weight))));
  } else {
    w.assign(edges.size(), Rat(1));
  }
  Json doc = maxcut_to_json(MaxCutInstance(n, edges, w));
  std::string text = canonical_dump(doc) + "\n";
  if (out_path.empty())
    out << text;
  else
    write_text_file(out_path, text);
  return kExitOk;
}

inline int cmd_generate_swop(const std::string& certifier, std::uint32_t cycle, std::uint32_t path,
                             std::uint32_t empty, bool unit_weights, const std::string& weights,
                             std::uint64_t seed, bool has_seed, std::uint64_t max_weight,
                             const std::string& groups, std::uint32_t c,
                             const std::string& out_path, std::ostream& out) {
  Graph g;
  if ((cycle > 0) + (path > 0) + (empty > 0) != 1)
    throw InputContractError("exactly one of --cycle, --path, --empty required");
  if (cycle > 0) {
    if (cycle < 3) throw InputContractError("a cycle needs at least three vertices");
    g.n = cycle;
    for (std::uint32_t v = 0; v < cycle; ++v) g.edges.emplace_back(v, (v + 1) % cycle);
  } else if (path > 0) {
    g.n = path;
    for (std::uint32_t v = 0; v + 1 < path; ++v) g.edges.emplace_back(v, v + 1);
  } else {
    g.n = empty;
  }
  std::uint32_t ground = g.n + static_cast<std::uint32_t>(g.edges.size());
  std::vector<Rat> w;
  if (unit_weights) {
    w.assign(ground, Rat(0));
    for (std::uint32_t v = 0; v < g.n; ++v) w[v] = Rat(1);
  } else if (!weights.empty()) {
    w = parse_weight_csv(weights);
    if (w.size() != ground) throw InputContractError("one weight per ground element required");
  } else if (has_seed) {
    Rng rng(seed);
    for (std::uint32_t i = 0; i < ground; ++i)
      w.push_back(Rat(BigInt(1 + rng.next_below(max_weight))));
  } else {
    throw InputContractError("one of --unit-weights, --weights, --seed required");
  }
  Certifier cert{Certifier::parse_kind(certifier), parse_group_spec(groups)};
  Json doc = swop_to_json(SwopInstance(g, w, cert, c));
  std::string text = canonical_dump(doc) + "\n";
  if (out_path.empty())
    out << text;
  else
    write_text_file(out_path, text);
  return kExitOk;
}

inline int cmd_generate_circuit(std::uint32_t identity, std::uint32_t inputs, std::uint32_t extra,
                                std::uint32_t outputs, std::uint64_t seed, bool has_seed,
                                std::uint64_t max_weight, const std::string& out_path,
                                std::ostream& out) {
  std::vector<Gate> gates;
  std::vector<std::uint32_t> outs;
  std::vector<Rat> w;
  std::uint32_t n_in = 0;
  if (identity > 0) {
    n_in = identity;
    for (std::uint32_t i = 0; i < identity; ++i) {
      gates.push_back(Gate::input());
      outs.push_back(i);
    }
    w = max_circuit_weights(identity, false);
  } else {
    if (inputs == 0 || outputs == 0) throw InputContractError("--inputs and --outputs required");
    if (!has_seed) throw InputContractError("--seed required for random circuits");
    if (outputs > inputs + extra) throw InputContractError("more outputs than gates");
    n_in = inputs;
    Rng rng(seed);
    for (std::uint32_t i = 0; i < inputs; ++i) gates.push_back(Gate::input());
    for (std::uint32_t i = 0; i < extra; ++i) {
      std::uint32_t wires = static_cast<std::uint32_t>(gates.size());
      switch (rng.next_below(3)) {
        case 0: gates.push_back(Gate::gnot(static_cast<std::uint32_t>(rng.next_below(wires)))); break;
        case 1:
          gates.push_back(Gate::gand({static_cast<std::uint32_t>(rng.next_below(wires)),
                                      static_cast<std::uint32_t>(rng.next_below(wires))}));
          break;
        default:
          gates.push_back(Gate::gor({static_cast<std::uint32_t>(rng.next_below(wires)),
                                     static_cast<std::uint32_t>(rng.next_below(wires))}));
      }
    }
    std::uint32_t total = static_cast<std::uint32_t>(gates.size());
    for (std::uint32_t i = total - outputs; i < total; ++i) outs.push_back(i);
    for (std::uint32_t i = 0; i < outputs; ++i) {
      std::int64_t mag = static_cast<std::int64_t>(1 + rng.next_below(max_weight));
      w.push_back(Rat(rng.next_bool() ? mag : -mag));
    }
  }
  Json doc = circuit_to_json(CircuitInstance(n_in, gates, outs, w));
  std::string text = canonical_dump(doc) + "\n";
  if (out_path.empty())
    out << text;
  else
    write_text_file(out_path, text);
  return kExitOk;
}

inline int cmd_reduce(const std::string& reduction, const std::string& in_path,
                      const std::string& out_prefix, const std::string& seed_file,
                      const std::string& seed_start, std::ostream& out) {
  Json in_doc = parse_json_text(read_text_file(in_path), "input");
  ParsedInstance src = parse_instance_document(in_doc);

  Json manifest;
  manifest["schema_version"] = kSchemaVersion;
  manifest["kind"] = "bundle";
  manifest["reduction"] = reduction;
  Json target_doc;

  if (reduction == "maxcut-to-wis") {
    if (src.kind != "maxcut") throw InputContractError("maxcut-to-wis expects a maxcut document");
    auto red = reduce_maxcut_to_wis(*src.maxcut);
    target_doc = swop_to_json(*red.target);
    manifest["source"] = in_doc;
    manifest["declared_tightness"] = red.declared_tightness;
    manifest["psi_rule"] = "anchor-projection";
    manifest["r_rule"] = "embedded-cut-images";
  } else if (reduction == "swop-to-circuit") {
    if (src.kind != "swop") throw InputContractError("swop-to-circuit expects a swop document");
    auto red = reduce_swop_to_maxcircuit(*src.swop);
    target_doc = circuit_to_json(*red.target);
    manifest["source"] = in_doc;
    manifest["declared_tightness"] = red.declared_tightness;
    manifest["psi_rule"] = "structured-decode";
    manifest["r_rule"] = "structured-strings";
  } else if (reduction == "mis-to-wis-pivot") {
    if (src.kind != "mis") throw InputContractError("mis-to-wis-pivot expects a mis document");
    if (seed_file.empty()) throw InputContractError("mis-to-wis-pivot requires --seed-file");
    if (seed_start.empty()) throw InputContractError("mis-to-wis-pivot requires --seed-start");
    Json seed_doc = parse_json_text(read_text_file(seed_file), "seed");
    SwopInstance seed = swop_from_json(seed_doc);
    Bits sstart = Bits::from_string(seed_start);
    auto red = reduce_mis_to_wis_pivot(*src.mis, seed, sstart);
    target_doc = swop_to_json(*red.target);
    manifest["source"] = in_doc;
    manifest["seed"] = seed_doc;
    manifest["seed_start"] = sstart.to_string();
    manifest["declared_tightness"] = 0;
    manifest["psi_rule"] = "seed-restriction";
    manifest["r_rule"] = "chain-states";
    manifest["start"] = red.start.to_string();
    manifest["bottleneck"] = red.bottleneck.to_string();
  } else {
    throw InputContractError("unknown reduction: " + reduction);
  }

  manifest["target_hash"] = document_hash(target_doc);
  write_text_file(out_prefix + ".target.json", canonical_dump(target_doc) + "\n");
  write_text_file(out_prefix + ".bundle.json", canonical_dump(manifest) + "\n");
  out << "reduction: " << reduction << "\n";
  out << "target: " << out_prefix << ".target.json (hash "
      << manifest["target_hash"].get<std::string>() << ")\n";
  out << "bundle: " << out_prefix << ".bundle.json\n";
  return kExitOk;
}

inline int cmd_solve(const std::string& in_path, const std::string& start_str,
                     const std::string& solver, const std::string& rule_name,
                     std::uint64_t rule_seed, std::optional<std::uint64_t> depth,
                     std::uint64_t budget, const std::string& out_path, std::ostream& out) {
  Json in_doc = parse_json_text(read_text_file(in_path), "input");
  ParsedInstance p = parse_instance_document(in_doc);
  if (!p.instance) throw InputContractError("this document kind cannot be solved directly");
  Bits start = Bits::from_string(start_str);
  p.instance->require_valid(start);
  PivotingRule rule{PivotingRule::parse_kind(rule_name), rule_seed};

  SolveReport rep;
  if (solver == "standard") {
    rep = standard_local_search(*p.instance, start, rule, budget);
  } else if (solver == "pivot-bounded") {
    if (!depth) throw InputContractError("pivot-bounded requires --depth");
    rep = pivot_search_bounded(*p.instance, start, *depth, budget);
  } else if (solver == "fpt-distinct-weights") {
    if (!p.swop) throw InputContractError("fpt-distinct-weights expects a swop document");
    rep = fpt_distinct_weights_solve(*p.swop, start, rule, budget);
  } else if (solver == "circuit-output-bounded") {
    if (!p.circuit) throw InputContractError("circuit-output-bounded expects a circuit document");
    rep = circuit_output_bounded_solve(*p.circuit, start, rule, budget);
  } else {
    throw InputContractError("unknown solver: " + solver);
  }

  out << "solver: " << solver << "  outcome: " << solve_outcome_name(rep.outcome)
      << "  steps: " << rep.steps << "  evaluations: " << rep.evaluations << "\n";
  out << "  0  " << rep.sequence.start.to_string() << "  "
      << format_rat(rep.sequence.objectives.front()) << "\n";
  for (std::size_t i = 0; i < rep.sequence.steps.size(); ++i)
    out << "  " << i + 1 << "  " << rep.sequence.steps[i].to_string() << "  "
        << format_rat(rep.sequence.objectives[i + 1]) << "\n";

  Json trace = trace_to_json(document_hash(in_doc), rep.sequence, rep.outcome);
  if (out_path.empty())
    out << canonical_dump(trace) << "\n";
  else
    write_text_file(out_path, canonical_dump(trace) + "\n");

  switch (rep.outcome) {
    case SolveOutcome::LocalOptimumFound: return kExitOk;
    case SolveOutcome::BudgetExhausted: return kExitResource;
    case SolveOutcome::PromiseViolated: return kExitPromise;
  }
  return kExitOk;
}

inline int cmd_export_dot(const std::string& in_path, const std::string& bundle_path,
                          std::uint64_t budget, const std::string& out_path, std::ostream& out) {
  Json in_doc = parse_json_text(read_text_file(in_path), "input");
  ParsedInstance p = parse_instance_document(in_doc);
  if (!p.instance) throw InputContractError("this document kind has no transition graph");

  std::function<bool(const Bits&)> r_member;
  if (!bundle_path.empty()) {
    Json manifest = parse_json_text(read_text_file(bundle_path), "bundle");
    RebuiltBundle rb = rebuild_bundle(manifest);
    if (!rb.bundle) throw InputContractError("this bundle does not mark target solutions");
    if (document_hash(rb.target_doc) != document_hash(in_doc))
      throw InputContractError("bundle target does not match the input document");
    r_member = rb.bundle->r_member;
  }

  std::string dot =
      transition_to_dot(*p.instance, budget, r_member ? &r_member : nullptr);
  if (out_path.empty())
    out << dot;
  else
    write_text_file(out_path, dot);
  return kExitOk;
}

inline int cmd_verify(const std::string& bundle_path, const std::string& checks,
                      std::optional<std::uint64_t> ell, std::uint64_t budget,
                      const std::string& out_path, std::ostream& out) {
  Json manifest = parse_json_text(read_text_file(bundle_path), "bundle");
  RebuiltBundle rb = rebuild_bundle(manifest);
  if (!rb.bundle)
    throw InputContractError("this bundle defines no projection; nothing to verify");

  TightnessReport rep;
  if (checks == "tight") {
    rep = check_tight_reduction(*rb.bundle, budget);
  } else if (checks == "l-tight") {
    rep = check_l_tight(*rb.bundle, ell ? *ell : rb.declared_tightness, budget);
  } else {
    throw InputContractError("unknown checks list: " + checks);
  }

  Json doc = tightness_to_json(rep);
  if (out_path.empty())
    out << canonical_dump(doc) << "\n";
  else
    write_text_file(out_path, canonical_dump(doc) + "\n");
  return rep.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace cli_detail

inline int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"local search laboratory"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write an instance document");
  gen->require_subcommand(1);
  std::uint32_t g_n = 0, g_cycle = 0, g_path = 0, g_empty = 0, g_c = 3;
  std::uint32_t g_identity = 0, g_inputs = 0, g_gates = 0, g_outputs = 0;
  std::uint64_t g_seed = 0, g_maxw = 8;
  std::string g_weights, g_certifier, g_groups, g_out;
  bool g_unit = false;

  auto* gen_mc = gen->add_subcommand("maxcut", "single edge (n=2) or cycle");
  gen_mc->add_option("--n", g_n, "vertex count")->required();
  gen_mc->add_option("--weights", g_weights, "edge weights, comma separated or one for all");
  auto* mc_seed = gen_mc->add_option("--seed", g_seed, "random weight seed");
  gen_mc->add_option("--max-weight", g_maxw, "random weight bound");
  gen_mc->add_option("--out", g_out, "output file (default standard output)");

  auto* gen_sw = gen->add_subcommand("swop", "certified subset instance over a graph");
  gen_sw->add_option("--certifier", g_certifier, "certifier name")->required();
  gen_sw->add_option("--cycle", g_cycle, "cycle graph vertex count");
  gen_sw->add_option("--path", g_path, "path graph vertex count");
  gen_sw->add_option("--empty", g_empty, "edgeless graph vertex count");
  gen_sw->add_flag("--unit-weights", g_unit, "vertex weights 1, edge coordinates 0");
  gen_sw->add_option("--weights", g_weights, "ground weights, comma separated");
  auto* sw_seed = gen_sw->add_option("--seed", g_seed, "random weight seed");
  gen_sw->add_option("--max-weight", g_maxw, "random weight bound");
  gen_sw->add_option("--groups", g_groups, "groups as 'a,b;c,d'");
  gen_sw->add_option("--c", g_c, "swap size bound");
  gen_sw->add_option("--out", g_out, "output file (default standard output)");

  auto* gen_ci = gen->add_subcommand("circuit", "identity or random gate DAG");
  gen_ci->add_option("--identity", g_identity, "identity circuit input count");
  gen_ci->add_option("--inputs", g_inputs, "random circuit input count");
  gen_ci->add_option("--gates", g_gates, "random circuit extra gate count");
  gen_ci->add_option("--outputs", g_outputs, "random circuit output count");
  auto* ci_seed = gen_ci->add_option("--seed", g_seed, "random circuit seed");
  gen_ci->add_option("--max-weight", g_maxw, "random weight magnitude bound");
  gen_ci->add_option("--out", g_out, "output file (default standard output)");

  // reduce
  auto* red = app.add_subcommand("reduce", "run a reduction, write target and bundle");
  std::string r_name, r_in, r_prefix, r_seed_file, r_seed_start;
  red->add_option("--reduction", r_name, "maxcut-to-wis | mis-to-wis-pivot | swop-to-circuit")
      ->required();
  red->add_option("--in", r_in, "source instance document")->required();
  red->add_option("--out-prefix", r_prefix, "output file prefix")->required();
  red->add_option("--seed-file", r_seed_file, "seed instance document (mis-to-wis-pivot)");
  red->add_option("--seed-start", r_seed_start, "seed start solution bits (mis-to-wis-pivot)");

  // solve
  auto* sol = app.add_subcommand("solve", "run a solver, print trace");
  std::string s_in, s_start, s_solver = "standard", s_rule = "first", s_out;
  std::uint64_t s_rule_seed = 0;
  std::uint64_t s_budget = cli_detail::env_budget(kDefaultEvalBudget);
  std::optional<std::uint64_t> s_depth;
  std::uint64_t s_depth_raw = 0;
  sol->add_option("--in", s_in, "instance document")->required();
  sol->add_option("--start", s_start, "start solution bits")->required();
  sol->add_option("--solver", s_solver,
                  "standard | pivot-bounded | fpt-distinct-weights | circuit-output-bounded");
  sol->add_option("--rule", s_rule, "first | best | random");
  sol->add_option("--rule-seed", s_rule_seed, "seed for the random rule");
  auto* sol_depth = sol->add_option("--depth", s_depth_raw, "depth bound for pivot-bounded");
  sol->add_option("--budget", s_budget, "neighbor evaluation budget");
  sol->add_option("--out", s_out, "trace output file (default standard output)");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "emit the transition graph in DOT form");
  std::string d_in, d_bundle, d_out;
  std::uint64_t d_budget = cli_detail::env_budget(1u << 22);
  dot->add_option("--in", d_in, "instance document")->required();
  dot->add_option("--bundle", d_bundle, "bundle manifest for marked-node shading");
  dot->add_option("--budget", d_budget, "solution enumeration budget");
  dot->add_option("--out", d_out, "output file (default standard output)");

  // verify
  auto* ver = app.add_subcommand("verify", "check reduction conditions on a bundle");
  std::string v_bundle, v_checks = "tight", v_out;
  std::uint64_t v_budget = cli_detail::env_budget(1u << 22);
  std::optional<std::uint64_t> v_ell;
  std::uint64_t v_ell_raw = 0;
  ver->add_option("--bundle", v_bundle, "bundle manifest file")->required();
  ver->add_option("--checks", v_checks, "tight | l-tight");
  auto* ver_ell = ver->add_option("--ell", v_ell_raw, "distance bound (default: declared)");
  ver->add_option("--budget", v_budget, "solution enumeration budget");
  ver->add_option("--out", v_out, "report output file (default standard output)");

  std::vector<const char*> argv;
  argv.push_back("lslab");
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  if (sol_depth->count() > 0) s_depth = s_depth_raw;
  if (ver_ell->count() > 0) v_ell = v_ell_raw;

  try {
    if (gen_mc->parsed())
      return cli_detail::cmd_generate_maxcut(g_n, g_weights, g_seed, mc_seed->count() > 0, g_maxw,
                                             g_out, out);
    if (gen_sw->parsed())
      return cli_detail::cmd_generate_swop(g_certifier, g_cycle, g_path, g_empty, g_unit,
                                           g_weights, g_seed, sw_seed->count() > 0, g_maxw,
                                           g_groups, g_c, g_out, out);
    if (gen_ci->parsed())
      return cli_detail::cmd_generate_circuit(g_identity, g_inputs, g_gates, g_outputs, g_seed,
                                              ci_seed->count() > 0, g_maxw, g_out, out);
    if (red->parsed())
      return cli_detail::cmd_reduce(r_name, r_in, r_prefix, r_seed_file, r_seed_start, out);
    if (sol->parsed())
      return cli_detail::cmd_solve(s_in, s_start, s_solver, s_rule, s_rule_seed, s_depth, s_budget,
                                   s_out, out);
    if (dot->parsed())
      return cli_detail::cmd_export_dot(d_in, d_bundle, d_budget, d_out, out);
    if (ver->parsed())
      return cli_detail::cmd_verify(v_bundle, v_checks, v_ell, v_budget, v_out, out);
    err << "error: no command\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace lslab

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lslab/bundle.hpp"
#include "lslab/circuit.hpp"
#include "lslab/maxcut.hpp"
#include "lslab/mis_pivot.hpp"
#include "lslab/solvers.hpp"
#include "lslab/swop.hpp"
#include "lslab/transition.hpp"
#include "lslab/verify.hpp"

namespace lslab {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// Canonical form: sorted keys (the default object ordering), no insignificant
// whitespace. Hashes are taken over these bytes.
inline std::string canonical_dump(const Json& j) { return j.dump(); }

inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

inline std::string document_hash(const Json& j) { return fnv1a_hex(canonical_dump(j)); }

namespace detail {

inline void require_keys(const Json& j, const std::vector<std::string>& allowed,
                         const char* what) {
  if (!j.is_object()) throw InputContractError(std::string(what) + ": object expected");
  for (auto& [key, val] : j.items()) {
    (void)val;
    bool known = false;
    for (auto& a : allowed)
      if (key == a) known = true;
    if (!known) throw InputContractError(std::string(what) + ": unknown field '" + key + "'");
  }
  for (auto& a : allowed)
    if (!j.contains(a)) throw InputContractError(std::string(what) + ": missing field '" + a + "'");
}

inline void require_schema(const Json& j, const char* kind) {
  if (j.value("schema_version", "") != kSchemaVersion)
    throw InputContractError("unsupported schema version");
  if (j.value("kind", "") != kind) throw InputContractError("document kind mismatch");
}

inline Json rat_list(const std::vector<Rat>& w) {
  Json a = Json::array();
  for (auto& x : w) a.push_back(format_rat(x));
  return a;
}

inline std::vector<Rat> rat_list_from(const Json& a, const char* what) {
  if (!a.is_array()) throw InputContractError(std::string(what) + ": array expected");
  std::vector<Rat> out;
  for (auto& x : a) {
    if (!x.is_string()) throw InputContractError(std::string(what) + ": rational string expected");
    out.push_back(parse_rat(x.get<std::string>()));
  }
  return out;
}

inline Json edge_list(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& es) {
  Json a = Json::array();
  for (auto& [u, v] : es) a.push_back(Json::array({u, v}));
  return a;
}

inline std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_list_from(const Json& a,
                                                                           const char* what) {
  if (!a.is_array()) throw InputContractError(std::string(what) + ": array expected");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (auto& e : a) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw InputContractError(std::string(what) + ": edge pair expected");
    out.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
  }
  return out;
}

inline Json group_list(const std::vector<std::vector<std::uint32_t>>& gs) {
  Json a = Json::array();
  for (auto& g : gs) {
    Json row = Json::array();
    for (auto x : g) row.push_back(x);
    a.push_back(row);
  }
  return a;
}

inline std::vector<std::vector<std::uint32_t>> group_list_from(const Json& a, const char* what) {
  if (!a.is_array()) throw InputContractError(std::string(what) + ": array expected");
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& g : a) {
    if (!g.is_array()) throw InputContractError(std::string(what) + ": group array expected");
    std::vector<std::uint32_t> row;
    for (auto& x : g) {
      if (!x.is_number_unsigned())
        throw InputContractError(std::string(what) + ": group member index expected");
      row.push_back(x.get<std::uint32_t>());
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace detail

inline Json maxcut_to_json(const MaxCutInstance& mc) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "maxcut";
  j["n"] = mc.n;
  j["edges"] = detail::edge_list(mc.edges);
  j["weights"] = detail::rat_list(mc.we);
  return j;
}

inline MaxCutInstance maxcut_from_json(const Json& j) {
  detail::require_keys(j, {"schema_version", "kind", "n", "edges", "weights"}, "maxcut document");
  detail::require_schema(j, "maxcut");
  return MaxCutInstance(j["n"].get<std::uint32_t>(), detail::edge_list_from(j["edges"], "edges"),
                        detail::rat_list_from(j["weights"], "weights"));
}

inline Json swop_to_json(const SwopInstance& inst) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "swop";
  j["n"] = inst.g.n;
  j["edges"] = detail::edge_list(inst.g.edges);
  j["weights"] = detail::rat_list(inst.w);
  j["certifier"] = inst.cert.name();
  j["groups"] = detail::group_list(inst.cert.groups);
  j["c"] = inst.c;
  return j;
}

inline SwopInstance swop_from_json(const Json& j) {
  detail::require_keys(
      j, {"schema_version", "kind", "n", "edges", "weights", "certifier", "groups", "c"},
      "swop document");
  detail::require_schema(j, "swop");
  Graph g;
  g.n = j["n"].get<std::uint32_t>();
  g.edges = detail::edge_list_from(j["edges"], "edges");
  Certifier cert{Certifier::parse_kind(j["certifier"].get<std::string>()),
                 detail::group_list_from(j["groups"], "groups")};
  return SwopInstance(g, detail::rat_list_from(j["weights"], "weights"), cert,
                      j["c"].get<std::uint32_t>());
}

inline Json circuit_to_json(const CircuitInstance& inst) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "circuit";
  j["inputs"] = inst.n_in;
  Json gates = Json::array();
  for (auto& g : inst.gates) {
    Json gg;
    switch (g.op) {
      case Gate::Op::Input: gg["op"] = "input"; break;
      case Gate::Op::Const:
        gg["op"] = "const";
        gg["value"] = g.value;
        break;
      case Gate::Op::Not:
        gg["op"] = "not";
        gg["arg"] = g.args[0];
        break;
      case Gate::Op::And:
      case Gate::Op::Or: {
        gg["op"] = g.op == Gate::Op::And ? "and" : "or";
        Json args = Json::array();
        for (auto a : g.args) args.push_back(a);
        gg["args"] = args;
        break;
      }
    }
    gates.push_back(gg);
  }
  j["gates"] = gates;
  Json outs = Json::array();
  for (auto o : inst.outputs) outs.push_back(o);
  j["outputs"] = outs;
  j["weights"] = detail::rat_list(inst.wout);
  return j;
}

inline CircuitInstance circuit_from_json(const Json& j) {
  detail::require_keys(j, {"schema_version", "kind", "inputs", "gates", "outputs", "weights"},
                       "circuit document");
  detail::require_schema(j, "circuit");
  std::vector<Gate> gates;
  if (!j["gates"].is_array()) throw InputContractError("circuit document: gate array expected");
  for (auto& gg : j["gates"]) {
    std::string op = gg.value("op", "");
    if (op == "input") {
      detail::require_keys(gg, {"op"}, "gate");
      gates.push_back(Gate::input());
    } else if (op == "const") {
      detail::require_keys(gg, {"op", "value"}, "gate");
      gates.push_back(Gate::konst(gg["value"].get<bool>()));
    } else if (op == "not") {
      detail::require_keys(gg, {"op", "arg"}, "gate");
      gates.push_back(Gate::gnot(gg["arg"].get<std::uint32_t>()));
    } else if (op == "and" || op == "or") {
      detail::require_keys(gg, {"op", "args"}, "gate");
      std::vector<std::uint32_t> args;
      for (auto& a : gg["args"]) args.push_back(a.get<std::uint32_t>());
      gates.push_back(op == "and" ? Gate::gand(args) : Gate::gor(args));
    } else {
      throw InputContractError("circuit document: unknown gate op '" + op + "'");
    }
  }
  std::vector<std::uint32_t> outs;
  for (auto& o : j["outputs"]) outs.push_back(o.get<std::uint32_t>());
  return CircuitInstance(j["inputs"].get<std::uint32_t>(), std::move(gates), std::move(outs),
                         detail::rat_list_from(j["weights"], "weights"));
}

inline Json mis_to_json(const MisInstance& mis) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "mis";
  j["n"] = mis.g.n;
  j["edges"] = detail::edge_list(mis.g.edges);
  j["classes"] = detail::group_list(mis.classes);
  return j;
}

inline MisInstance mis_from_json(const Json& j) {
  detail::require_keys(j, {"schema_version", "kind", "n", "edges", "classes"}, "mis document");
  detail::require_schema(j, "mis");
  MisInstance mis;
  mis.g.n = j["n"].get<std::uint32_t>();
  mis.g.edges = detail::edge_list_from(j["edges"], "edges");
  mis.classes = detail::group_list_from(j["classes"], "classes");
  mis.check();
  return mis;
}

// Parsed wrapper keeping the concrete type alongside the abstract interface.
struct ParsedInstance {
  std::string kind;
  std::shared_ptr<const LocalSearchInstance> instance;
  std::shared_ptr<const MaxCutInstance> maxcut;
  std::shared_ptr<const SwopInstance> swop;
  std::shared_ptr<const CircuitInstance> circuit;
  std::shared_ptr<const MisInstance> mis;  // not a search instance by itself
  Json document;
};

inline ParsedInstance parse_instance_document(const Json& j) {
  ParsedInstance p;
  if (!j.is_object() || !j.contains("kind"))
    throw InputContractError("instance document: missing kind");
  p.kind = j["kind"].get<std::string>();
  p.document = j;
  if (p.kind == "maxcut") {
    p.maxcut = std::make_shared<MaxCutInstance>(maxcut_from_json(j));
    p.instance = p.maxcut;
  } else if (p.kind == "swop") {
    p.swop = std::make_shared<SwopInstance>(swop_from_json(j));
    p.instance = p.swop;
  } else if (p.kind == "circuit") {
    p.circuit = std::make_shared<CircuitInstance>(circuit_from_json(j));
    p.instance = p.circuit;
  } else if (p.kind == "mis") {
    p.mis = std::make_shared<MisInstance>(mis_from_json(j));
  } else {
    throw InputContractError("instance document: unknown kind '" + p.kind + "'");
  }
  return p;
}

inline Json instance_to_json(const ParsedInstance& p) {
  if (p.maxcut) return maxcut_to_json(*p.maxcut);
  if (p.swop) return swop_to_json(*p.swop);
  if (p.circuit) return circuit_to_json(*p.circuit);
  if (p.mis) return mis_to_json(*p.mis);
  throw InternalError("empty parsed instance");
}

inline Json trace_to_json(const std::string& instance_hash, const ImprovingSequence& seq,
                          SolveOutcome outcome) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "trace";
  j["instance_hash"] = instance_hash;
  j["start"] = seq.start.to_string();
  if (!seq.objectives.empty()) j["start_objective"] = format_rat(seq.objectives.front());
  Json steps = Json::array();
  Bits prev = seq.start;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    Json st;
    Json flips = Json::array();
    for (auto f : prev.xored(seq.steps[i]).indices()) flips.push_back(f);
    st["flips"] = flips;
    st["solution"] = seq.steps[i].to_string();
    if (seq.objectives.size() == seq.steps.size() + 1)
      st["objective"] = format_rat(seq.objectives[i + 1]);
    steps.push_back(st);
    prev = seq.steps[i];
  }
  j["steps"] = steps;
  j["outcome"] = solve_outcome_name(outcome);
  return j;
}

struct ParsedTrace {
  std::string instance_hash;
  ImprovingSequence sequence;
  std::string outcome;
};

inline ParsedTrace trace_from_json(const Json& j) {
  detail::require_keys(
      j, {"schema_version", "kind", "instance_hash", "start", "start_objective", "steps", "outcome"},
      "trace document");
  detail::require_schema(j, "trace");
  ParsedTrace t;
  t.instance_hash = j["instance_hash"].get<std::string>();
  t.sequence.start = Bits::from_string(j["start"].get<std::string>());
  t.sequence.objectives.push_back(parse_rat(j["start_objective"].get<std::string>()));
  for (auto& st : j["steps"]) {
    detail::require_keys(st, {"flips", "solution", "objective"}, "trace step");
    t.sequence.steps.push_back(Bits::from_string(st["solution"].get<std::string>()));
    t.sequence.objectives.push_back(parse_rat(st["objective"].get<std::string>()));
  }
  t.outcome = j["outcome"].get<std::string>();
  return t;
}

inline Json tightness_to_json(const TightnessReport& rep) {
  auto cond = [](const ConditionResult& c) {
    Json j;
    j["checked"] = c.checked;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    Json w = Json::array();
    for (auto& b : c.witness) w.push_back(b.to_string());
    j["witness"] = w;
    return j;
  };
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "tightness";
  j["condition_1"] = cond(rep.cond1);
  j["condition_2"] = cond(rep.cond2);
  j["condition_3"] = cond(rep.cond3);
  j["condition_4"] = cond(rep.cond4);
  j["source_nodes"] = rep.source_nodes;
  j["target_nodes"] = rep.target_nodes;
  j["pass"] = rep.ok();
  return j;
}

inline Json growth_to_json(const GrowthTable& t) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "growth";
  Json rows = Json::array();
  for (auto& r : t.rows) {
    Json row;
    row["id"] = r.id;
    row["size"] = r.size;
    if (r.length)
      row["length"] = *r.length;
    else
      row["length"] = nullptr;
    row["note"] = r.note;
    rows.push_back(row);
  }
  j["rows"] = rows;
  if (t.log2_slope)
    j["log2_slope"] = *t.log2_slope;
  else
    j["log2_slope"] = nullptr;
  return j;
}

// DOT export of the full transition graph. Node order and edge order follow
// the ascending solution enumeration, so output is deterministic.
inline std::string transition_to_dot(const LocalSearchInstance& inst, std::uint64_t budget,
                                     const std::function<bool(const Bits&)>* r_member = nullptr) {
  TransitionGraph tg = detail::graph_or_resource_error(inst, budget, "export");
  std::string out = "digraph transition {\n";
  for (std::uint32_t i = 0; i < tg.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + tg.nodes[i].to_string() + " : " +
           format_rat(inst.objective(tg.nodes[i])) + "\"";
    if (tg.is_sink(i)) out += ", shape=doublecircle";
    if (r_member && (*r_member)(tg.nodes[i])) out += ", style=filled";
    out += "];\n";
  }
  for (std::uint32_t i = 0; i < tg.nodes.size(); ++i)
    for (auto j : tg.out[i]) out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace lslab

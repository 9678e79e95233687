#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lslab/instance.hpp"

namespace lslab {

// Boolean circuit over basis {input, const, not, and, or} with arbitrary
// fan-in, stored as a topologically ordered gate list: gate i may only read
// gates with smaller index.
struct Gate {
  enum class Op { Input, Const, Not, And, Or };
  Op op = Op::Const;
  std::vector<std::uint32_t> args;
  bool value = false;  // Const only

  static Gate input() { return {Op::Input, {}, false}; }
  static Gate konst(bool v) { return {Op::Const, {}, v}; }
  static Gate gnot(std::uint32_t a) { return {Op::Not, {a}, false}; }
  static Gate gand(std::vector<std::uint32_t> a) { return {Op::And, std::move(a), false}; }
  static Gate gor(std::vector<std::uint32_t> a) { return {Op::Or, std::move(a), false}; }
};

// Weighted circuit under single-bit input flips: the objective adds the
// weights of the outputs evaluating to 1.
class CircuitInstance final : public LocalSearchInstance {
 public:
  std::uint32_t n_in = 0;
  std::vector<Gate> gates;
  std::vector<std::uint32_t> outputs;
  std::vector<Rat> wout;

  CircuitInstance(std::uint32_t inputs, std::vector<Gate> gs, std::vector<std::uint32_t> outs,
                  std::vector<Rat> weights)
      : n_in(inputs), gates(std::move(gs)), outputs(std::move(outs)), wout(std::move(weights)) {
    if (wout.size() != outputs.size()) throw ArityError("one weight per output required");
    std::uint32_t seen_inputs = 0;
    for (std::uint32_t i = 0; i < gates.size(); ++i) {
      const Gate& gt = gates[i];
      if (gt.op == Gate::Op::Input) ++seen_inputs;
      if (gt.op == Gate::Op::Not && gt.args.size() != 1)
        throw ArityError("not gate takes exactly one argument");
      if ((gt.op == Gate::Op::And || gt.op == Gate::Op::Or) && gt.args.empty())
        throw ArityError("and/or gates need at least one argument");
      for (auto a : gt.args)
        if (a >= i) throw ArityError("gate arguments must reference earlier gates");
    }
    if (seen_inputs != n_in) throw ArityError("declared input count does not match input gates");
    for (auto o : outputs)
      if (o >= gates.size()) throw ArityError("output index out of range");
  }

  std::uint32_t ground_size() const override { return n_in; }
  std::string family_name() const override { return "circuit"; }
  std::string validity_name() const override { return "input width"; }

  bool valid(const Bits& s) const override { return s.size() == n_in; }

  std::vector<bool> wire_values(const Bits& x) const {
    std::vector<bool> val(gates.size(), false);
    std::uint32_t next_input = 0;
    for (std::uint32_t i = 0; i < gates.size(); ++i) {
      const Gate& gt = gates[i];
      switch (gt.op) {
        case Gate::Op::Input: val[i] = x.get(next_input++); break;
        case Gate::Op::Const: val[i] = gt.value; break;
        case Gate::Op::Not: val[i] = !val[gt.args[0]]; break;
        case Gate::Op::And: {
          bool b = true;
          for (auto a : gt.args) b = b && val[a];
          val[i] = b;
          break;
        }
        case Gate::Op::Or: {
          bool b = false;
          for (auto a : gt.args) b = b || val[a];
          val[i] = b;
          break;
        }
      }
    }
    return val;
  }

  Bits output_bits(const Bits& x) const {
    auto val = wire_values(x);
    Bits out(static_cast<std::uint32_t>(outputs.size()));
    for (std::uint32_t i = 0; i < outputs.size(); ++i) out.set(i, val[outputs[i]]);
    return out;
  }

  Rat objective(const Bits& s) const override {
    auto val = wire_values(s);
    Rat t = 0;
    for (std::uint32_t i = 0; i < outputs.size(); ++i)
      if (val[outputs[i]]) t += wout[i];
    return t;
  }

  bool is_neighbor(const Bits& a, const Bits& b) const override {
    return a.diff_count(b) == 1;
  }

  std::vector<Bits> neighbors(const Bits& s) const override {
    std::vector<Bits> out;
    out.reserve(n_in);
    for (std::uint32_t v = 0; v < n_in; ++v) {
      Bits nb = s;
      nb.flip(v);
      out.push_back(std::move(nb));
    }
    std::sort(out.begin(), out.end(), [](const Bits& x, const Bits& y) { return x.lex_less(y); });
    return out;
  }

  void enumerate_valid(std::uint64_t budget,
                       const std::function<void(const Bits&)>& cb) const override {
    if (n_in > 26) throw ResourceError("input enumeration limited to 26 bits");
    std::uint64_t total = std::uint64_t(1) << n_in;
    if (total > budget) throw BudgetError("input enumeration over budget", budget);
    for (std::uint64_t v = 0; v < total; ++v) cb(Bits::from_counter(n_in, v));
  }

  // Largest number of outputs depending on a single input, via cone-of-
  // influence reachability over the gate list.
  std::uint32_t max_outputs_per_input() const {
    if (n_in == 0) return 0;
    std::vector<Bits> dep(gates.size(), Bits(n_in));
    std::uint32_t next_input = 0;
    for (std::uint32_t i = 0; i < gates.size(); ++i) {
      const Gate& gt = gates[i];
      if (gt.op == Gate::Op::Input) {
        dep[i].set(next_input++, true);
        continue;
      }
      for (auto a : gt.args) dep[i] = dep[i].ored(dep[a]);
    }
    std::vector<std::uint32_t> count(n_in, 0);
    for (auto o : outputs)
      for (auto i : dep[o].indices()) ++count[i];
    return *std::max_element(count.begin(), count.end());
  }
};

inline Bits circuit_evaluate(const CircuitInstance& inst, const Bits& x) {
  inst.require_valid(x);
  return inst.output_bits(x);
}

// Binary place weights 2^(i-1) for output i, negated for the minimizing
// variant, so the output word read as a number is the objective.
inline std::vector<Rat> max_circuit_weights(std::uint32_t m, bool minimize) {
  std::vector<Rat> w;
  w.reserve(m);
  BigInt p = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    w.push_back(minimize ? Rat(-p) : Rat(p));
    p <<= 1;
  }
  return w;
}

}  // namespace lslab

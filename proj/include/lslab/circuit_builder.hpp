#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "lslab/circuit.hpp"

namespace lslab {

// Gate-list assembler with word-level helpers. Words are wire-id vectors,
// least significant bit first, and represent nonnegative binary numbers.
class CircuitBuilder {
 public:
  using Word = std::vector<std::uint32_t>;

  explicit CircuitBuilder(std::uint32_t n_inputs) : n_in_(n_inputs) {
    for (std::uint32_t i = 0; i < n_inputs; ++i) {
      inputs_.push_back(static_cast<std::uint32_t>(gates_.size()));
      gates_.push_back(Gate::input());
    }
    false_ = push(Gate::konst(false));
    true_ = push(Gate::konst(true));
  }

  std::uint32_t input(std::uint32_t i) const { return inputs_.at(i); }
  std::uint32_t konst(bool v) const { return v ? true_ : false_; }

  std::uint32_t gnot(std::uint32_t a) {
    if (gates_[a].op == Gate::Op::Not) return gates_[a].args[0];
    if (a == false_) return true_;
    if (a == true_) return false_;
    return push(Gate::gnot(a));
  }

  std::uint32_t gand(std::vector<std::uint32_t> args) {
    std::vector<std::uint32_t> keep;
    for (auto a : args) {
      if (a == false_) return false_;
      if (a != true_) keep.push_back(a);
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (keep.empty()) return true_;
    if (keep.size() == 1) return keep[0];
    return push(Gate::gand(std::move(keep)));
  }

  std::uint32_t gor(std::vector<std::uint32_t> args) {
    std::vector<std::uint32_t> keep;
    for (auto a : args) {
      if (a == true_) return true_;
      if (a != false_) keep.push_back(a);
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (keep.empty()) return false_;
    if (keep.size() == 1) return keep[0];
    return push(Gate::gor(std::move(keep)));
  }

  std::uint32_t gxor(std::uint32_t a, std::uint32_t b) {
    if (a == b) return false_;
    if (a == false_) return b;
    if (b == false_) return a;
    if (a == true_) return gnot(b);
    if (b == true_) return gnot(a);
    return gor({gand({a, gnot(b)}), gand({gnot(a), b})});
  }

  std::uint32_t xnor(std::uint32_t a, std::uint32_t b) { return gnot(gxor(a, b)); }

  std::uint32_t mux(std::uint32_t sel, std::uint32_t on, std::uint32_t off) {
    if (on == off) return on;
    return gor({gand({sel, on}), gand({gnot(sel), off})});
  }

  Word constant_word(BigInt v, std::optional<std::uint32_t> width = std::nullopt) {
    if (v < 0) throw InputContractError("words encode nonnegative numbers");
    Word w;
    while (v > 0) {
      w.push_back(konst((v & 1) != 0));
      v >>= 1;
    }
    if (w.empty()) w.push_back(false_);
    if (width) {
      if (*width < w.size()) throw InternalError("constant wider than requested word");
      pad(w, *width);
    }
    return w;
  }

  void pad(Word& w, std::size_t width) {
    while (w.size() < width) w.push_back(false_);
  }

  Word add(Word a, Word b) {
    std::size_t n = std::max(a.size(), b.size());
    pad(a, n);
    pad(b, n);
    Word out;
    std::uint32_t carry = false_;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t s = gxor(a[i], b[i]);
      out.push_back(gxor(s, carry));
      carry = gor({gand({a[i], b[i]}), gand({carry, s})});
    }
    out.push_back(carry);
    return out;
  }

  // a - b for a >= b; callers are responsible for the ordering invariant,
  // smaller minuends wrap around.
  Word sub(Word a, Word b) {
    std::size_t n = std::max(a.size(), b.size());
    pad(a, n);
    pad(b, n);
    Word out;
    std::uint32_t carry = true_;  // two's complement add of ~b
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t nb = gnot(b[i]);
      std::uint32_t s = gxor(a[i], nb);
      out.push_back(gxor(s, carry));
      carry = gor({gand({a[i], nb}), gand({carry, s})});
    }
    return out;
  }

  std::uint32_t gt(Word a, Word b) {
    std::size_t n = std::max(a.size(), b.size());
    pad(a, n);
    pad(b, n);
    std::uint32_t res = false_;  // higher bits processed later dominate
    for (std::size_t i = 0; i < n; ++i)
      res = gor({gand({a[i], gnot(b[i])}), gand({xnor(a[i], b[i]), res})});
    return res;
  }

  Word select(std::uint32_t bit, const Word& w) {
    Word out;
    for (auto x : w) out.push_back(gand({bit, x}));
    return out;
  }

  Word mux_word(std::uint32_t sel, Word on, Word off) {
    std::size_t n = std::max(on.size(), off.size());
    pad(on, n);
    pad(off, n);
    Word out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(mux(sel, on[i], off[i]));
    return out;
  }

  // Balanced adder tree keeps intermediate widths logarithmic.
  Word popcount(const std::vector<std::uint32_t>& bits) {
    if (bits.empty()) return constant_word(BigInt(0));
    std::vector<Word> words;
    for (auto b : bits) words.push_back(Word{b});
    while (words.size() > 1) {
      std::vector<Word> next;
      for (std::size_t i = 0; i + 1 < words.size(); i += 2)
        next.push_back(add(words[i], words[i + 1]));
      if (words.size() % 2) next.push_back(words.back());
      words = std::move(next);
    }
    return words[0];
  }

  std::size_t gate_count() const { return gates_.size(); }

  CircuitInstance build(const Word& output, std::vector<Rat> weights) const {
    return CircuitInstance(n_in_, gates_, std::vector<std::uint32_t>(output.begin(), output.end()),
                           std::move(weights));
  }

 private:
  std::uint32_t push(Gate g) {
    gates_.push_back(std::move(g));
    return static_cast<std::uint32_t>(gates_.size() - 1);
  }

  std::uint32_t n_in_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::uint32_t> inputs_;
  std::uint32_t false_ = 0, true_ = 0;
};

}  // namespace lslab

#include "shiftlab/subshift.hpp"

#include <algorithm>
#include <functional>

#include "shiftlab/error.hpp"
#include "shiftlab/transfer_graph.hpp"

namespace shiftlab {

BlockSet::BlockSet(FiniteWindow window, std::vector<Symbols> blocks)
    : window_(std::move(window)), blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    if (b.size() != window_.size()) throw Error("block length does not match window " + window_.format());
  }
  std::sort(blocks_.begin(), blocks_.end());
  blocks_.erase(std::unique(blocks_.begin(), blocks_.end()), blocks_.end());
}

bool BlockSet::contains(const Symbols& b) const {
  return std::binary_search(blocks_.begin(), blocks_.end(), b);
}

bool BlockSet::includes(const BlockSet& other) const {
  return std::includes(blocks_.begin(), blocks_.end(), other.blocks_.begin(), other.blocks_.end());
}

BlockSet BlockSet::project(const FiniteWindow& sub) const {
  std::vector<std::size_t> pos;
  for (const auto& e : sub.elements()) {
    int i = window_.index_of(e);
    if (i < 0) throw Error("project: " + sub.format() + " is not inside " + window_.format());
    pos.push_back(static_cast<std::size_t>(i));
  }
  std::vector<Symbols> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    Symbols p;
    p.reserve(pos.size());
    for (auto i : pos) p.push_back(b[i]);
    out.push_back(std::move(p));
  }
  return BlockSet(sub, std::move(out));
}

SftPresentation SftPresentation::from_allowed(Alphabet a, FiniteWindow d, std::vector<Symbols> allowed) {
  for (const auto& b : allowed) {
    for (int s : b) {
      if (s < 0 || s >= a.size()) throw Error("allowed block uses a symbol outside the alphabet");
    }
  }
  return SftPresentation{std::move(a), BlockSet(std::move(d), std::move(allowed)), std::nullopt};
}

SftPresentation SftPresentation::from_forbidden(Alphabet a, FiniteWindow d,
                                                const std::vector<Symbols>& forbidden) {
  BlockSet bad(d, forbidden);
  std::vector<Symbols> allowed;
  for (auto& w : enumerate_words(a, d.size())) {
    if (!bad.contains(w)) allowed.push_back(std::move(w));
  }
  return from_allowed(std::move(a), std::move(d), std::move(allowed));
}

SftPresentation SftPresentation::from_submodule(Alphabet a, FiniteWindow d, modlin::Submodule allowed) {
  if (!a.is_module()) throw Error("linear SFT needs a module alphabet");
  if (allowed.modulus() != a.modulus() || allowed.rank() != d.size() * static_cast<std::size_t>(a.rank())) {
    throw Error("linear SFT: submodule rank does not match window and alphabet");
  }
  std::vector<Symbols> blocks;
  for (const auto& v : allowed.elements()) blocks.push_back(unflatten(a, v));
  auto s = from_allowed(std::move(a), std::move(d), std::move(blocks));
  s.linear = std::move(allowed);
  return s;
}

SftPresentation SftPresentation::full(const Universe& u, Alphabet a) {
  FiniteWindow d = FiniteWindow::single(u, u.identity());
  auto words = enumerate_words(a, 1);
  return from_allowed(std::move(a), std::move(d), std::move(words));
}

BlockSet restrict(const SftPresentation& s, const FiniteWindow& e) {
  if (!s.universe().is_linear()) throw Error("exact restriction needs universe Z or N; use restrict_bounded");
  if (!(e.universe() == s.universe())) throw Error("restrict: window over a different universe");
  const TransferGraph g = TransferGraph::of_sft(s);
  if (e.empty()) {
    std::vector<Symbols> one;
    if (!g.empty()) one.emplace_back();
    return BlockSet(e, std::move(one));
  }
  const auto hull = e.hull();
  auto words = g.label_words(hull.min(), hull.size());
  return BlockSet(hull, std::move(words)).project(e);
}

modlin::Submodule restrict_submodule(const SftPresentation& s, const FiniteWindow& e) {
  AdmissibleFamily fam(s.alphabet);
  return fam.as_member(static_cast<int>(e.size()), restrict(s, e).blocks());
}

SftPresentation window_change(const SftPresentation& s, const FiniteWindow& e) {
  if (!e.includes(s.window())) {
    throw Error("window_change: " + s.window().format() + " is not inside " + e.format());
  }
  auto r = restrict(s, e);
  return SftPresentation{s.alphabet, std::move(r), std::nullopt};
}

bool sft_included(const SftPresentation& a, const SftPresentation& b) {
  if (!(a.universe() == b.universe()) || !(a.alphabet == b.alphabet)) {
    throw Error("sft comparison across different universes or alphabets");
  }
  // Shift invariance: every translate of b's window sees a block of a_{D_b}.
  return b.allowed.includes(restrict(a, b.window()));
}

bool sft_equal(const SftPresentation& a, const SftPresentation& b) {
  return sft_included(a, b) && sft_included(b, a);
}

BlockSet restrict_bounded(const SftPresentation& s, const FiniteWindow& e, int depth) {
  const Universe& u = s.universe();
  if (u.kind() != UniverseKind::Free) throw Error("restrict_bounded is for free-monoid universes");
  if (depth < 0) throw Error("restrict_bounded: negative depth");
  std::int64_t longest = 0;
  for (const auto& x : e.elements()) longest = std::max(longest, x.value);
  const FiniteWindow ball = exhaustion(u, static_cast<int>(longest) + depth, 0);
  check_cap(ball.size(), "restrict_bounded");

  // Constraint translates D·g inside the ball, as ball indices in D order.
  std::vector<std::vector<int>> constraints;
  for (const auto& g : ball.elements()) {
    std::vector<int> idx;
    bool inside = true;
    for (const auto& d : s.window().elements()) {
      int i = ball.index_of(u.multiply(d, g));
      if (i < 0) {
        inside = false;
        break;
      }
      idx.push_back(i);
    }
    if (inside) constraints.push_back(std::move(idx));
  }

  // Variables: E's positions first, then the rest of the ball in order.
  std::vector<int> order;
  std::vector<int> rank(ball.size(), -1);
  for (const auto& x : e.elements()) order.push_back(ball.index_of(x));
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (std::find(order.begin(), order.end(), static_cast<int>(i)) == order.end()) {
      order.push_back(static_cast<int>(i));
    }
  }
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<int>(k);
  std::vector<std::vector<int>> due(order.size());
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    int last = 0;
    for (int i : constraints[c]) last = std::max(last, rank[i]);
    due[last].push_back(static_cast<int>(c));
  }

  std::vector<int> value(ball.size(), -1);
  auto satisfied = [&](std::size_t k) {
    Symbols pat;
    for (int c : due[k]) {
      pat.clear();
      for (int i : constraints[c]) pat.push_back(value[i]);
      if (!s.allowed.contains(pat)) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == order.size()) return true;
    for (int a = 0; a < s.alphabet.size(); ++a) {
      value[order[k]] = a;
      if (satisfied(k) && extend(k + 1)) return true;
    }
    value[order[k]] = -1;
    return false;
  };

  std::vector<Symbols> out;
  for (const auto& block : enumerate_words(s.alphabet, e.size())) {
    bool ok = true;
    for (std::size_t k = 0; k < block.size() && ok; ++k) {
      value[order[k]] = block[k];
      ok = satisfied(k);
    }
    if (ok && extend(block.size())) out.push_back(block);
    std::fill(value.begin(), value.end(), -1);
  }
  return BlockSet(e, std::move(out));
}

std::string format_sft(const std::string& name, const std::string& alphabet_name, const SftPresentation& s) {
  std::string out = "subshift " + name;
  if (s.linear) {
    out += " sft_linear alphabet=" + alphabet_name + " window=" + s.window().format() +
           " generators=" + s.linear->format();
    return out;
  }
  out += " sft alphabet=" + alphabet_name + " window=" + s.window().format() + " allow=";
  for (std::size_t i = 0; i < s.allowed.size(); ++i) {
    if (i) out += ',';
    const auto& b = s.allowed.blocks()[i];
    out += b.empty() ? "()" : format_block(s.alphabet, b);
  }
  return out;
}

}  // namespace shiftlab

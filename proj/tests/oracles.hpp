// Brute-force reference implementations used by the tests. Nothing here
// touches transfer graphs; blocks are enumerated and extended symbol by symbol.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "shiftlab/imaging.hpp"

namespace oracle {

using namespace shiftlab;

struct Span {
  std::int64_t lo = 0, hi = -1;
  std::int64_t width() const { return hi - lo + 1; }
};

inline Span span_of(const SftPresentation& s) {
  if (s.window().empty()) return {0, 0};
  return {s.window().min(), s.window().max()};
}

// Whether every translate D+g inside [start, start+|w|) with admissible g
// satisfies the constraint.
inline bool locally_admissible(const SftPresentation& s, std::int64_t start, const Symbols& w) {
  if (s.window().empty()) return !s.allowed.empty();
  auto d = s.window().ints();
  Span sp = span_of(s);
  std::int64_t end = start + static_cast<std::int64_t>(w.size()) - 1;
  std::int64_t g0 = start - sp.lo, g1 = end - sp.hi;
  if (s.universe().kind() == UniverseKind::N) g0 = std::max<std::int64_t>(g0, 0);
  Symbols b(d.size());
  for (std::int64_t g = g0; g <= g1; ++g) {
    for (std::size_t i = 0; i < d.size(); ++i) b[i] = w[static_cast<std::size_t>(d[i] + g - start)];
    if (!s.allowed.contains(b)) return false;
  }
  return true;
}

// Extension by `steps` symbols on one side, remembering only the last
// width-1 symbols. Steps beyond the number of such states imply an infinite
// extension by pigeonhole.
class Extender {
 public:
  explicit Extender(const SftPresentation& s) : s_(s), sp_(span_of(s)) {
    states_ = static_cast<int>(std::pow(s.alphabet.size(), std::max<std::int64_t>(sp_.width() - 1, 0)));
  }

  bool right(const Symbols& w, std::int64_t start) {
    Symbols tail = last(w);
    return go(tail, start + static_cast<std::int64_t>(w.size()) - static_cast<std::int64_t>(tail.size()), margin(), true);
  }
  bool left(const Symbols& w, std::int64_t start) {
    Symbols head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(w.size(), keep())));
    return go(head, start, margin(), false);
  }

 private:
  const SftPresentation& s_;
  Span sp_;
  int states_;
  std::map<std::tuple<Symbols, std::int64_t, int, bool>, bool> memo_;

  // Over N the first few positions see fewer constraints; pad past them.
  int margin() const { return states_ + 1 + static_cast<int>(std::max<std::int64_t>(sp_.hi, 0)) + 2; }
  std::size_t keep() const { return static_cast<std::size_t>(std::max<std::int64_t>(sp_.width() - 1, 0)); }
  Symbols last(const Symbols& w) const {
    std::size_t k = std::min(w.size(), keep());
    return Symbols(w.end() - static_cast<std::ptrdiff_t>(k), w.end());
  }

  // `part` sits at [start, start+|part|).
  bool go(const Symbols& part, std::int64_t start, int steps, bool forward) {
    if (steps == 0) return true;
    // Over N the position matters only near 0; over Z it never does.
    std::int64_t key_pos = s_.universe().kind() == UniverseKind::N ? std::min<std::int64_t>(start, sp_.width() + 2) : 0;
    auto key = std::make_tuple(part, key_pos, steps, forward);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = false;
    for (int c = 0; c < s_.alphabet.size() && !ok; ++c) {
      Symbols w = part;
      std::int64_t st = start;
      if (forward) {
        w.push_back(c);
      } else {
        w.insert(w.begin(), c);
        --st;
      }
      if (!locally_admissible(s_, st, w)) continue;
      if (forward) {
        Symbols t = last(w);
        ok = go(t, st + static_cast<std::int64_t>(w.size() - t.size()), steps - 1, true);
      } else {
        Symbols h(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(std::min(w.size(), keep())));
        ok = go(h, st, steps - 1, false);
      }
    }
    memo_[key] = ok;
    return ok;
  }
};

// All words on [a, b] that are locally admissible, by depth-first filling.
inline std::vector<Symbols> admissible_words(const SftPresentation& s, std::int64_t a, std::int64_t b) {
  std::vector<Symbols> out;
  Symbols w;
  std::function<void()> rec = [&] {
    if (!locally_admissible(s, a, w)) return;
    if (static_cast<std::int64_t>(w.size()) == b - a + 1) {
      out.push_back(w);
      return;
    }
    for (int c = 0; c < s.alphabet.size(); ++c) {
      w.push_back(c);
      rec();
      w.pop_back();
    }
  };
  rec();
  return out;
}

// Σ_E by enumeration with a pigeonhole extension margin.
inline BlockSet restrict(const SftPresentation& s, const FiniteWindow& e) {
  const bool one_sided = s.universe().kind() == UniverseKind::N;
  if (e.empty()) {
    FiniteWindow probe = FiniteWindow::interval(s.universe(), 0, 0);
    std::vector<Symbols> one;
    if (!oracle::restrict(s, probe).empty()) one.emplace_back();
    return BlockSet(e, one);
  }
  Span sp = span_of(s);
  std::int64_t pad = sp.width() - 1;
  std::int64_t a = one_sided ? 0 : e.min() - pad;
  std::int64_t b = e.max() + pad;
  Extender ext(s);
  std::vector<Symbols> keep;
  for (const auto& w : admissible_words(s, a, b)) {
    if (!ext.right(w, a)) continue;
    if (!one_sided && !ext.left(w, a)) continue;
    keep.push_back(w);
  }
  std::vector<Symbols> out;
  for (const auto& w : keep) {
    Symbols p;
    for (auto x : e.ints()) p.push_back(w[static_cast<std::size_t>(x - a)]);
    out.push_back(std::move(p));
  }
  return BlockSet(e, out);
}

// τ applied blockwise: y(t) for t ∈ E from a block x on the window ME.
inline Symbols apply_block(const CellularAutomaton& ca, const FiniteWindow& me, const Symbols& x,
                           const FiniteWindow& e) {
  Symbols y;
  for (auto t : e.ints()) {
    Symbols local;
    for (auto h : ca.memory().ints()) local.push_back(x[static_cast<std::size_t>(me.index_of(h + t))]);
    y.push_back(ca.rule().apply(local));
  }
  return y;
}

// Blocks of the sofic shift ca(source) on E.
inline BlockSet sofic_restrict(const SftPresentation& source, const CellularAutomaton& ca, const FiniteWindow& e) {
  FiniteWindow me = window_product(ca.memory(), e);
  std::vector<Symbols> out;
  const BlockSet blocks = oracle::restrict(source, me);
  for (const auto& x : blocks.blocks()) out.push_back(apply_block(ca, me, x, e));
  return BlockSet(e, out);
}

// C(E) from pairs of blocks on U = hull(ME ∪ {0}); the two blocks range over
// Σ_U independently, so this is exact.
inline bool condition(const CellularAutomaton& ca, const FiniteWindow& e) {
  const Universe& u = ca.universe();
  FiniteWindow base = e.empty() ? FiniteWindow::single(u, u.identity()) : window_product(ca.memory(), e);
  FiniteWindow w = base.united(FiniteWindow::single(u, u.identity())).hull();
  auto blocks = oracle::restrict(ca.domain(), w).blocks();
  std::map<Symbols, std::set<int>> seen;
  const auto i0 = static_cast<std::size_t>(w.index_of(0));
  for (const auto& x : blocks) seen[apply_block(ca, w, x, e)].insert(x[i0]);
  return std::all_of(seen.begin(), seen.end(), [](const auto& kv) { return kv.second.size() == 1; });
}

inline bool periodic_member(const SftPresentation& s, const Symbols& cycle) {
  auto d = s.window().ints();
  auto p = static_cast<std::int64_t>(cycle.size());
  for (std::int64_t g = 0; g < p; ++g) {
    Symbols b;
    for (auto x : d) b.push_back(cycle[static_cast<std::size_t>(((x + g) % p + p) % p)]);
    if (!s.allowed.contains(b)) return false;
  }
  return true;
}

inline Symbols apply_cycle(const CellularAutomaton& ca, const Symbols& cycle) {
  auto p = static_cast<std::int64_t>(cycle.size());
  Symbols y;
  for (std::int64_t t = 0; t < p; ++t) {
    Symbols local;
    for (auto h : ca.memory().ints()) local.push_back(cycle[static_cast<std::size_t>(((t + h) % p + p) % p)]);
    y.push_back(ca.rule().apply(local));
  }
  return y;
}

// Two distinct periodic points (period <= max_period) with the same image, if any.
inline std::optional<std::pair<Symbols, Symbols>> periodic_collision(const CellularAutomaton& ca, int max_period) {
  for (int p = 1; p <= max_period; ++p) {
    std::map<Symbols, Symbols> image;
    for (const auto& c : enumerate_words(ca.domain_alphabet(), static_cast<std::size_t>(p))) {
      if (!periodic_member(ca.domain(), c)) continue;
      auto [it, fresh] = image.emplace(apply_cycle(ca, c), c);
      if (!fresh) return std::make_pair(it->second, c);
    }
  }
  return std::nullopt;
}

inline SftPresentation random_sft(std::mt19937& rng, const Universe& u, int max_symbols, int max_width) {
  int k = std::uniform_int_distribution<int>(1, max_symbols)(rng);
  int w = std::uniform_int_distribution<int>(1, max_width)(rng);
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(std::to_string(i));
  Alphabet a = Alphabet::set(names);
  FiniteWindow d = FiniteWindow::interval(u, 0, w - 1);
  std::vector<Symbols> allowed;
  std::bernoulli_distribution keep(0.7);
  for (const auto& b : enumerate_words(a, static_cast<std::size_t>(w)))
    if (keep(rng)) allowed.push_back(b);
  return SftPresentation::from_allowed(a, d, allowed);
}

}  // namespace oracle

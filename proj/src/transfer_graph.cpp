#include "shiftlab/transfer_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

// Allowed words on the interval [lo, lo + width) equivalent to the window
// constraint: every filling of the gaps of D whose D-part lies in P.
std::vector<Symbols> normalized_words(const SftPresentation& s, std::int64_t lo, std::int64_t hi) {
  const auto d = s.window().ints();
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  std::vector<bool> fixed(width, false);
  for (auto x : d) fixed[static_cast<std::size_t>(x - lo)] = true;
  std::vector<std::size_t> gaps;
  for (std::size_t i = 0; i < width; ++i) {
    if (!fixed[i]) gaps.push_back(i);
  }
  const auto fills = enumerate_words(s.alphabet, gaps.size());
  check_cap(fills.size() * s.allowed.size(), "TransferGraph::of_sft");
  std::vector<Symbols> out;
  out.reserve(fills.size() * s.allowed.size());
  for (const auto& p : s.allowed.blocks()) {
    Symbols w(width, 0);
    for (std::size_t i = 0; i < d.size(); ++i) w[static_cast<std::size_t>(d[i] - lo)] = p[i];
    for (const auto& f : fills) {
      for (std::size_t g = 0; g < gaps.size(); ++g) w[gaps[g]] = f[g];
      out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::size_t TransferGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : succ_) n += s.size();
  return n;
}

void TransferGraph::rebuild_pred() {
  pred_.assign(words_.size(), {});
  for (std::size_t u = 0; u < succ_.size(); ++u) {
    for (int v : succ_[u]) pred_[v].push_back(static_cast<int>(u));
  }
  for (auto& p : pred_) std::sort(p.begin(), p.end());
}

TransferGraph TransferGraph::of_sft(const SftPresentation& s) {
  const Universe& u = s.universe();
  if (!u.is_linear()) throw Error("transfer graphs need universe Z or N");
  TransferGraph g;
  g.one_sided_ = u.kind() == UniverseKind::N;

  std::vector<Symbols> words;
  std::int64_t width = 1;
  if (s.window().empty()) {
    // A^∅ has one block; P is either everything or nothing.
    if (!s.allowed.empty()) words = enumerate_words(s.alphabet, 1);
  } else {
    const std::int64_t lo = g.one_sided_ ? 0 : s.window().min();
    const std::int64_t hi = s.window().max();
    width = hi - lo + 1;
    words = normalized_words(s, lo, hi);
  }

  if (width == 1) {
    for (const auto& w : words) g.words_.push_back(w);
    g.succ_.assign(g.words_.size(), {});
    for (std::size_t a = 0; a < g.words_.size(); ++a) {
      for (std::size_t b = 0; b < g.words_.size(); ++b) g.succ_[a].push_back(static_cast<int>(b));
    }
    g.width_ = 1;
  } else {
    std::map<Symbols, int> index;
    auto vertex = [&](Symbols w) {
      auto [it, inserted] = index.emplace(std::move(w), 0);
      if (inserted) it->second = static_cast<int>(index.size() - 1);
      return it->second;
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& w : words) {
      int a = vertex(Symbols(w.begin(), w.end() - 1));
      int b = vertex(Symbols(w.begin() + 1, w.end()));
      edges.emplace_back(a, b);
    }
    g.words_.resize(index.size());
    for (auto& [w, id] : index) g.words_[id] = w;
    g.succ_.assign(g.words_.size(), {});
    for (auto [a, b] : edges) g.succ_[a].push_back(b);
    for (auto& sv : g.succ_) {
      std::sort(sv.begin(), sv.end());
      sv.erase(std::unique(sv.begin(), sv.end()), sv.end());
    }
    g.width_ = static_cast<int>(width - 1);
  }
  g.label_.resize(g.words_.size());
  for (std::size_t v = 0; v < g.words_.size(); ++v) g.label_[v] = g.words_[v][0];
  g.rebuild_pred();
  g.essentialize();
  return g;
}

std::size_t TransferGraph::essentialize() {
  const std::size_t n = words_.size();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> out_deg(n), in_deg(n);
  std::deque<int> queue;
  for (std::size_t v = 0; v < n; ++v) {
    out_deg[v] = succ_[v].size();
    in_deg[v] = pred_[v].size();
    if (out_deg[v] == 0 || (!one_sided_ && in_deg[v] == 0)) {
      alive[v] = false;
      queue.push_back(static_cast<int>(v));
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int p : pred_[v]) {
      if (alive[p] && --out_deg[p] == 0) {
        alive[p] = false;
        queue.push_back(p);
      }
    }
    if (!one_sided_) {
      for (int s : succ_[v]) {
        if (alive[s] && --in_deg[s] == 0) {
          alive[s] = false;
          queue.push_back(s);
        }
      }
    }
  }
  std::vector<int> remap(n, -1);
  int next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v]) remap[v] = next++;
  }
  const std::size_t removed = n - static_cast<std::size_t>(next);
  if (removed == 0) return 0;
  std::vector<Symbols> words(next);
  std::vector<std::vector<int>> succ(next);
  std::vector<int> label(next);
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    const int nv = remap[v];
    words[nv] = std::move(words_[v]);
    label[nv] = label_[v];
    for (int s : succ_[v]) {
      if (alive[s]) succ[nv].push_back(remap[s]);
    }
  }
  words_ = std::move(words);
  succ_ = std::move(succ);
  label_ = std::move(label);
  rebuild_pred();
  return removed;
}

TransferGraph TransferGraph::widened(int width) const {
  TransferGraph g = *this;
  while (g.width_ < width) {
    std::vector<std::vector<int>> edge_id(g.words_.size());
    std::size_t count = 0;
    for (std::size_t u = 0; u < g.words_.size(); ++u) {
      for (std::size_t k = 0; k < g.succ_[u].size(); ++k) edge_id[u].push_back(static_cast<int>(count++));
    }
    check_cap(count, "TransferGraph::widened");
    TransferGraph h;
    h.one_sided_ = g.one_sided_;
    h.width_ = g.width_ + 1;
    h.offset_ = g.offset_;
    h.words_.resize(count);
    h.label_.resize(count);
    h.succ_.resize(count);
    for (std::size_t u = 0; u < g.words_.size(); ++u) {
      for (std::size_t k = 0; k < g.succ_[u].size(); ++k) {
        const int v = g.succ_[u][k];
        const int id = edge_id[u][k];
        h.words_[id] = g.words_[u];
        h.words_[id].push_back(g.words_[v].back());
        h.label_[id] = g.label_[u];
        h.succ_[id] = edge_id[v];
      }
    }
    h.rebuild_pred();
    h.essentialize();
    g = std::move(h);
  }
  return g;
}

TransferGraph TransferGraph::relabelled(std::int64_t offset,
                                        const std::function<int(const Symbols&)>& labeller) const {
  TransferGraph g = *this;
  g.offset_ = offset;
  for (std::size_t v = 0; v < g.words_.size(); ++v) g.label_[v] = labeller(g.words_[v]);
  return g;
}

std::vector<int> TransferGraph::start_set(std::int64_t t) const {
  std::vector<int> all(words_.size());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<int>(v);
  if (!one_sided_) return all;
  const std::int64_t c = t + offset_;
  if (c < 0) throw Error("position outside the one-sided universe");
  std::vector<char> cur(words_.size(), 1);
  for (std::int64_t step = 0; step < c; ++step) {
    std::vector<char> nxt(words_.size(), 0);
    bool changed = false;
    for (std::size_t v = 0; v < cur.size(); ++v) {
      if (!cur[v]) continue;
      for (int s : succ_[v]) nxt[s] = 1;
    }
    changed = nxt != cur;
    cur = std::move(nxt);
    // Reachable sets of a fixed graph eventually cycle; stop once they repeat
    // with period one.
    if (!changed) break;
  }
  std::vector<int> out;
  for (std::size_t v = 0; v < cur.size(); ++v) {
    if (cur[v]) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<Symbols> TransferGraph::label_words(std::int64_t t0, std::size_t len) const {
  std::vector<Symbols> out;
  const auto start = start_set(t0);
  if (start.empty()) return out;
  if (len == 0) {
    out.emplace_back();
    return out;
  }
  Symbols prefix;
  std::vector<char> mark(words_.size(), 0);

  std::function<void(const std::vector<int>&)> visit = [&](const std::vector<int>& set) {
    if (prefix.size() == len) {
      out.push_back(prefix);
      check_cap(out.size(), "label_words");
      return;
    }
    std::map<int, std::vector<int>> buckets;
    for (int v : set) {
      for (int s : succ_[v]) {
        if (!mark[s]) {
          mark[s] = 1;
          buckets[label_[s]].push_back(s);
        }
      }
    }
    for (auto& [b, vs] : buckets) {
      for (int s : vs) mark[s] = 0;
    }
    for (auto& [b, vs] : buckets) {
      std::sort(vs.begin(), vs.end());
      prefix.push_back(b);
      visit(vs);
      prefix.pop_back();
    }
  };

  std::map<int, std::vector<int>> buckets;
  for (int v : start) buckets[label_[v]].push_back(v);
  for (auto& [b, vs] : buckets) {
    prefix.push_back(b);
    visit(vs);
    prefix.pop_back();
  }
  return out;
}

std::string TransferGraph::to_dot(const Alphabet& labels) const {
  std::ostringstream os;
  os << "digraph transfer {\n";
  os << "  // width=" << width_ << " offset=" << offset_ << (one_sided_ ? " one-sided" : " two-sided")
     << "\n";
  for (std::size_t v = 0; v < words_.size(); ++v) {
    os << "  v" << v << " [label=\"" << v << ": " << labels.name(label_[v]) << "\"];\n";
  }
  for (std::size_t v = 0; v < words_.size(); ++v) {
    for (int s : succ_[v]) os << "  v" << v << " -> v" << s << ";\n";
  }
  os << "}\n";
  return os.str();
}

bool language_included(const TransferGraph& a, const TransferGraph& b) {
  if (a.one_sided() != b.one_sided()) throw Error("language_included: mixed universes");
  using State = std::pair<int, std::vector<int>>;
  std::set<State> seen;
  std::deque<State> queue;
  const auto start_b = b.start_set(0);
  for (int va : a.start_set(0)) {
    std::vector<int> sb;
    for (int vb : start_b) {
      if (b.label(vb) == a.label(va)) sb.push_back(vb);
    }
    if (sb.empty()) return false;
    State st{va, std::move(sb)};
    if (seen.insert(st).second) queue.push_back(std::move(st));
  }
  std::vector<char> mark(b.size(), 0);
  while (!queue.empty()) {
    State st = std::move(queue.front());
    queue.pop_front();
    for (int na : a.successors(st.first)) {
      std::vector<int> nb;
      for (int vb : st.second) {
        for (int s : b.successors(vb)) {
          if (!mark[s] && b.label(s) == a.label(na)) {
            mark[s] = 1;
            nb.push_back(s);
          }
        }
      }
      for (int s : nb) mark[s] = 0;
      if (nb.empty()) return false;
      std::sort(nb.begin(), nb.end());
      State next{na, std::move(nb)};
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return true;
}

}  // namespace shiftlab

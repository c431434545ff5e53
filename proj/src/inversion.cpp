#include "shiftlab/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

bool is_full(const SftPresentation& s) {
  double total = std::pow(static_cast<double>(s.alphabet.size()), static_cast<double>(s.window().size()));
  return static_cast<double>(s.allowed.size()) >= total;
}

// Σ_W as a submodule, without enumerating blocks when Σ is a full shift.
modlin::Submodule sigma_submodule(const SftPresentation& s, const FiniteWindow& w) {
  const Alphabet& a = s.alphabet;
  if (is_full(s)) return modlin::Submodule::full(a.modulus(), w.size() * a.rank());
  return restrict_submodule(s, w);
}

Track resolve(const CellularAutomaton& ca, Track t) {
  if (t == Track::Auto) return ca.is_linear() ? Track::Linear : Track::Set;
  if (t == Track::Linear && !ca.is_linear()) throw Error("linear track requested for a non-linear automaton");
  return t;
}

void require_1d(const CellularAutomaton& ca) {
  if (!ca.universe().is_linear()) throw Error("inversion needs universe Z or N");
}

FiniteWindow with_identity(const FiniteWindow& w) {
  const Universe& u = w.universe();
  return w.united(FiniteWindow::single(u, u.identity())).hull();
}

// Matrix of x|_W -> Σ_j c_j x(m_j + e_i), rows grouped by E, columns by W.
modlin::Matrix linear_block_matrix(const CellularAutomaton& ca, const FiniteWindow& w, const FiniteWindow& e) {
  const Universe& u = ca.universe();
  const auto& coeffs = *ca.rule().coefficients;
  std::size_t ka = ca.domain_alphabet().rank(), kb = ca.codomain().rank();
  modlin::ModRing ring(ca.domain_alphabet().modulus());
  modlin::Matrix mat(e.size() * kb, modlin::Vec(w.size() * ka, 0));
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < ca.memory().size(); ++j) {
      int col = w.index_of(u.multiply(ca.memory().elements()[j], e.elements()[i]));
      if (col < 0) throw Error("internal: block matrix window too small");
      for (std::size_t r = 0; r < kb; ++r)
        for (std::size_t s = 0; s < ka; ++s) {
          auto& cell = mat[i * kb + r][static_cast<std::size_t>(col) * ka + s];
          cell = ring.add(cell, coeffs[j][r][s]);
        }
    }
  return mat;
}

// Follows first successors (or predecessors) until a vertex repeats.
// Returns the visited path and the index where the cycle starts.
std::pair<std::vector<int>, std::size_t> lasso(const TransferGraph& g, int v, bool forward) {
  std::vector<int> path;
  std::map<int, std::size_t> seen;
  while (!seen.count(v)) {
    seen[v] = path.size();
    path.push_back(v);
    const auto& next = forward ? g.successors(v) : g.predecessors(v);
    v = next.front();
  }
  return {path, seen[v]};
}

std::optional<std::vector<int>> cycle_through(const TransferGraph& g, int v) {
  std::vector<int> parent(g.size(), -1);
  std::vector<int> queue{v};
  std::vector<char> seen(g.size(), 0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int s : g.successors(u)) {
      if (s == v) {
        std::vector<int> cyc{u};
        while (cyc.back() != v) cyc.push_back(parent[cyc.back()]);
        std::reverse(cyc.begin(), cyc.end());
        return cyc;
      }
      if (!seen[s]) {
        seen[s] = 1;
        parent[s] = u;
        queue.push_back(s);
      }
    }
  }
  return std::nullopt;
}

// A configuration of the SFT whose symbol at 0 satisfies `bad`.
std::optional<Witness> find_witness(const SftPresentation& s, const std::function<bool(int)>& bad) {
  const TransferGraph g = TransferGraph::of_sft(s);
  int v = -1;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (bad(g.label(static_cast<int>(i)))) {
      v = static_cast<int>(i);
      break;
    }
  if (v < 0) return std::nullopt;
  auto labels = [&](const std::vector<int>& vs, std::size_t from, std::size_t to) {
    Symbols out;
    for (std::size_t i = from; i < to; ++i) out.push_back(g.label(vs[i]));
    return out;
  };
  Witness w;
  if (!g.one_sided()) {
    if (auto cyc = cycle_through(g, v)) {
      w.left = w.right = labels(*cyc, 0, cyc->size());
      return w;
    }
  }
  auto [fwd, fc] = lasso(g, v, true);
  w.middle = labels(fwd, 0, fc);
  w.right = labels(fwd, fc, fwd.size());
  if (!g.one_sided()) {
    auto [bwd, bc] = lasso(g, v, false);
    // bwd[1..bc) are the vertices before v, in reverse order.
    Symbols before;
    for (std::size_t i = bc; i-- > 1;) before.push_back(g.label(bwd[i]));
    Symbols cyc;
    for (std::size_t i = bwd.size(); i-- > bc;) cyc.push_back(g.label(bwd[i]));
    w.left = cyc;
    w.start = -static_cast<std::int64_t>(before.size());
    before.insert(before.end(), w.middle.begin(), w.middle.end());
    w.middle = before;
  }
  return w;
}

}  // namespace

int Witness::at(std::int64_t n) const {
  auto mid = static_cast<std::int64_t>(middle.size());
  if (n >= start + mid) {
    auto r = static_cast<std::int64_t>(right.size());
    return right[static_cast<std::size_t>((n - start - mid) % r)];
  }
  if (n >= start) return middle[static_cast<std::size_t>(n - start)];
  auto l = static_cast<std::int64_t>(left.size());
  return left[static_cast<std::size_t>(((n - start) % l + l) % l)];
}

std::string describe_witness(const Alphabet& a, const Witness& w) {
  if (w.middle.empty() && w.left == w.right) {
    if (w.right.size() == 1) return "constant " + a.name(w.right[0]);
    return "periodic (" + format_block(a, w.right) + ")^inf";
  }
  std::string out;
  if (!w.left.empty()) out += "(" + format_block(a, w.left) + ")^inf ";
  if (!w.middle.empty()) out += format_block(a, w.middle) + " ";
  out += "(" + format_block(a, w.right) + ")^inf";
  if (w.start != 0) out += " starting at " + std::to_string(w.start);
  return out;
}

FiberShift fiber_shift(const CellularAutomaton& ca) {
  require_1d(ca);
  const Alphabet& a = ca.domain_alphabet();
  FiniteWindow w = with_identity(ca.domain().window().united(ca.memory()));
  BlockSet sw = restrict(ca.domain(), w);
  std::vector<std::size_t> mpos;
  for (const auto& h : ca.memory().elements()) mpos.push_back(static_cast<std::size_t>(w.index_of(h)));

  std::map<int, std::vector<const Symbols*>> by_output;
  Symbols local(mpos.size());
  for (const auto& b : sw.blocks()) {
    for (std::size_t j = 0; j < mpos.size(); ++j) local[j] = b[mpos[j]];
    by_output[ca.local(local)].push_back(&b);
  }
  std::size_t total = 0;
  for (auto& [y, bs] : by_output) total += bs.size() * bs.size();
  check_cap(total, "fiber shift");

  DirectSum pa = direct_sum(a, a);
  std::vector<Symbols> pairs;
  pairs.reserve(total);
  for (auto& [y, bs] : by_output)
    for (const Symbols* u : bs)
      for (const Symbols* v : bs) {
        Symbols p(w.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = pa.combine((*u)[i], (*v)[i]);
        pairs.push_back(std::move(p));
      }
  return FiberShift{SftPresentation::from_allowed(pa.sum, w, std::move(pairs)), pa};
}

SftPresentation kernel_shift(const CellularAutomaton& ca) {
  require_1d(ca);
  if (!ca.is_linear()) throw Error("kernel shift needs a linear automaton");
  const Alphabet& a = ca.domain_alphabet();
  const Universe& u = ca.universe();
  FiniteWindow w = with_identity(ca.domain().window().united(ca.memory()));
  FiniteWindow at0 = FiniteWindow::single(u, u.identity());
  modlin::LinMap f(a.modulus(), w.size() * a.rank(), ca.codomain().rank(), linear_block_matrix(ca, w, at0));
  modlin::Submodule k = modlin::intersect(sigma_submodule(ca.domain(), w), modlin::kernel(f));
  return SftPresentation::from_submodule(a, w, k);
}

InjectivityResult check_injective(const CellularAutomaton& ca, Track track) {
  require_1d(ca);
  const Universe& u = ca.universe();
  FiniteWindow at0 = FiniteWindow::single(u, u.identity());
  InjectivityResult r;
  if (resolve(ca, track) == Track::Linear) {
    r.linear_track = true;
    SftPresentation k = kernel_shift(ca);
    r.kernel_at_identity = restrict_submodule(k, at0);
    r.injective = r.kernel_at_identity->is_zero();
    if (r.injective) {
      r.message = "kernel is trivial";
    } else {
      r.witness = find_witness(k, [](int s) { return s != 0; });
      r.message = "kernel contains " + describe_witness(ca.domain_alphabet(), *r.witness);
    }
    return r;
  }
  FiberShift f = fiber_shift(ca);
  const DirectSum& pa = f.pair_alphabet;
  const BlockSet at_identity = restrict(f.pairs, at0);
  for (const auto& b : at_identity.blocks()) r.pairs_at_identity.emplace_back(pa.left_of(b[0]), pa.right_of(b[0]));
  r.injective = std::all_of(r.pairs_at_identity.begin(), r.pairs_at_identity.end(),
                            [](const auto& p) { return p.first == p.second; });
  if (r.injective) {
    r.message = "fiber shift is diagonal at the identity";
  } else {
    r.witness = find_witness(f.pairs, [&](int s) { return pa.left_of(s) != pa.right_of(s); });
    Witness x = *r.witness, y = *r.witness;
    for (auto* part : {&x.left, &x.middle, &x.right}) for (int& s : *part) s = pa.left_of(s);
    for (auto* part : {&y.left, &y.middle, &y.right}) for (int& s : *part) s = pa.right_of(s);
    const Alphabet& a = ca.domain_alphabet();
    r.message = "distinct configurations with equal image: x = " + describe_witness(a, x) +
                ", y = " + describe_witness(a, y);
  }
  return r;
}

ConditionResult condition_holds(const CellularAutomaton& ca, const FiniteWindow& e, Track track) {
  require_1d(ca);
  const bool linear = resolve(ca, track) == Track::Linear;
  const TransferGraph g = presentation_graph(SoficPresentation{ca.domain(), ca});
  const Alphabet& a = ca.domain_alphabet();
  const std::size_t nv = g.size();
  const auto idx0 = static_cast<std::size_t>(-g.offset());
  const std::int64_t t0 = e.empty() ? 0 : std::min<std::int64_t>(e.min(), 0);
  const std::int64_t t1 = e.empty() ? 0 : std::max<std::int64_t>(e.max(), 0);

  ConditionResult out;
  if (g.empty()) {
    out.holds = true;
    if (linear) out.linear_at_identity = modlin::Submodule::zero(a.modulus(), a.rank());
    return out;
  }

  // State: vertex (or vertex pair) plus the recorded value at 0 (0 = unset).
  const std::size_t values = linear ? static_cast<std::size_t>(a.size()) + 1
                                    : static_cast<std::size_t>(a.size()) * a.size() + 1;
  const std::size_t tracks = linear ? 1 : 2;
  const std::size_t space = (tracks == 1 ? nv : nv * nv) * values;
  check_cap(space, "inverse window condition");
  std::vector<char> mark(space, 0);

  struct State {
    int u, v;
    std::size_t p;
  };
  auto key = [&](const State& s) {
    std::size_t k = static_cast<std::size_t>(s.u);
    if (tracks == 2) k = k * nv + static_cast<std::size_t>(s.v);
    return k * values + s.p;
  };

  std::vector<State> layer;
  const auto start = g.start_set(t0);
  for (int u : start) {
    if (tracks == 1) {
      layer.push_back({u, 0, 0});
    } else {
      for (int v : start) layer.push_back({u, v, 0});
    }
  }

  for (std::int64_t t = t0;; ++t) {
    std::vector<State> kept;
    const bool in_e = e.contains(t);
    for (State s : layer) {
      if (in_e) {
        if (linear ? g.label(s.u) != 0 : g.label(s.u) != g.label(s.v)) continue;
      }
      if (t == 0) {
        const int xu = g.word(s.u)[idx0];
        s.p = linear ? static_cast<std::size_t>(xu) + 1
                     : static_cast<std::size_t>(xu) * a.size() + g.word(s.v)[idx0] + 1;
      }
      kept.push_back(s);
    }
    if (t == t1) {
      layer = std::move(kept);
      break;
    }
    std::vector<State> next;
    for (const State& s : kept) {
      for (int su : g.successors(s.u)) {
        if (tracks == 1) {
          State n{su, 0, s.p};
          if (!mark[key(n)]) {
            mark[key(n)] = 1;
            next.push_back(n);
          }
          continue;
        }
        for (int sv : g.successors(s.v)) {
          State n{su, sv, s.p};
          if (!mark[key(n)]) {
            mark[key(n)] = 1;
            next.push_back(n);
          }
        }
      }
    }
    for (const State& s : next) mark[key(s)] = 0;
    layer = std::move(next);
  }

  std::set<std::size_t> seen;
  for (const State& s : layer) seen.insert(s.p - 1);
  if (linear) {
    modlin::Matrix gens;
    for (auto p : seen) gens.push_back(a.vector_of(static_cast<int>(p)));
    out.linear_at_identity = modlin::Submodule::span(a.modulus(), a.rank(), gens);
    out.holds = out.linear_at_identity->is_zero();
  } else {
    out.holds = true;
    for (auto p : seen) {
      int x = static_cast<int>(p) / a.size(), y = static_cast<int>(p) % a.size();
      out.pairs_at_identity.emplace_back(x, y);
      if (x != y) out.holds = false;
    }
  }
  return out;
}

InverseWindowResult find_inverse_window(const CellularAutomaton& ca, int nmax, Track track) {
  require_1d(ca);
  if (nmax < 0) throw Error("nmax must be nonnegative");
  InjectivityResult inj = check_injective(ca, track);
  if (!inj.injective) throw Error("automaton is not injective (" + inj.message + "); no inverse window exists");

  InverseWindowResult r;
  r.nmax = nmax;
  r.transcript.linear_track = resolve(ca, track) == Track::Linear;
  const Universe& u = ca.universe();
  for (int n = 0; n <= nmax; ++n) {
    FiniteWindow e = exhaustion(u, n, 0);
    ChainEntry entry{n, e, condition_holds(ca, e, track)};
    const bool holds = entry.condition.holds;
    r.transcript.entries.push_back(std::move(entry));
    if (!holds) continue;
    r.transcript.first_success = n;
    r.status = InverseWindowResult::Status::Found;
    r.unminimized = e;
    std::vector<Element> keep = e.elements();
    for (const auto& x : e.elements()) {
      std::vector<Element> candidate;
      for (const auto& y : keep)
        if (!(y == x)) candidate.push_back(y);
      if (condition_holds(ca, FiniteWindow(u, candidate), track).holds) keep = std::move(candidate);
    }
    r.window = FiniteWindow(u, keep);
    return r;
  }
  return r;
}

KernelChain kernel_chain(const CellularAutomaton& ca, int n, int extra) {
  require_1d(ca);
  if (!ca.is_linear()) throw Error("kernel chain needs a linear automaton");
  const Universe& u = ca.universe();
  const Alphabet& a = ca.domain_alphabet();
  KernelChain out;
  out.n = n;
  out.window = window_product(ca.memory(), exhaustion(u, n, 0));

  std::vector<modlin::Submodule> values;
  for (int m = n; m <= n + extra; ++m) {
    try {
      FiniteWindow em = exhaustion(u, m, 0);
      FiniteWindow wm = window_product(ca.memory(), em);
      modlin::LinMap t(a.modulus(), wm.size() * a.rank(), em.size() * ca.codomain().rank(),
                       linear_block_matrix(ca, wm, em));
      modlin::Submodule um = modlin::intersect(sigma_submodule(ca.domain(), wm), modlin::kernel(t));
      std::vector<std::size_t> positions;
      for (const auto& h : out.window.elements()) positions.push_back(static_cast<std::size_t>(wm.index_of(h)));
      values.push_back(modlin::project(um, flat_coords(a, positions)));
    } catch (const CapExceeded&) {
      break;
    }
  }
  out.chain = modlin::chain_stabilize([&](std::size_t i) { return values.at(i); }, values.size());
  out.exact = restrict_submodule(kernel_shift(ca), out.window);
  return out;
}

std::vector<PeriodicConfig> periodic_points(const SftPresentation& s, int max_period) {
  std::vector<PeriodicConfig> out;
  for (int p = 1; p <= max_period; ++p) {
    for (auto& w : enumerate_words(s.alphabet, static_cast<std::size_t>(p))) {
      PeriodicConfig x{{}, std::move(w)};
      if (periodic_in(s, x)) out.push_back(std::move(x));
    }
    check_cap(out.size(), "periodic points");
  }
  return out;
}

std::size_t verify_left_inverse_blocks(const CellularAutomaton& ca, const CellularAutomaton& sigma, int width) {
  require_1d(ca);
  const Universe& u = ca.universe();
  const bool one_sided = u.kind() == UniverseKind::N;
  auto ms = ca.memory().ints();
  auto ss = sigma.memory().ints();
  const std::int64_t len = width;
  const auto [mlo, mhi] = std::minmax_element(ms.begin(), ms.end());
  const auto [slo, shi] = std::minmax_element(ss.begin(), ss.end());
  // y = τ(x) is known on [ylo, yhi]; σ(y) on [zlo, zhi] ∩ [0, len).
  std::int64_t ylo = -*mlo, yhi = len - 1 - *mhi;
  if (one_sided) ylo = std::max<std::int64_t>(ylo, 0);
  std::int64_t zlo = std::max<std::int64_t>(ylo - *slo, 0), zhi = std::min<std::int64_t>(yhi - *shi, len - 1);
  if (zlo > zhi) throw Error("block width too small to check the left inverse");

  BlockSet xs = restrict(ca.domain(), FiniteWindow::interval(u, 0, len - 1));
  Symbols local_m(ms.size()), local_s(ss.size());
  std::vector<int> y(static_cast<std::size_t>(yhi - ylo + 1));
  for (const auto& x : xs.blocks()) {
    for (std::int64_t t = ylo; t <= yhi; ++t) {
      for (std::size_t j = 0; j < ms.size(); ++j) local_m[j] = x[static_cast<std::size_t>(t + ms[j])];
      y[static_cast<std::size_t>(t - ylo)] = ca.local(local_m);
    }
    for (std::int64_t z = zlo; z <= zhi; ++z) {
      for (std::size_t j = 0; j < ss.size(); ++j) local_s[j] = y[static_cast<std::size_t>(z + ss[j] - ylo)];
      if (sigma.local(local_s) != x[static_cast<std::size_t>(z)])
        throw Error("left inverse fails on block " + format_block(ca.domain_alphabet(), x) + " at " +
                    std::to_string(z));
    }
  }
  return xs.size();
}

std::size_t verify_left_inverse_periodic(const CellularAutomaton& ca, const CellularAutomaton& sigma,
                                         int max_period) {
  std::size_t count = 0;
  for (const auto& x : periodic_points(ca.domain(), max_period)) {
    PeriodicConfig z = apply_periodic(sigma, apply_periodic(ca, x));
    if (!(z == x))
      throw Error("left inverse fails on periodic point (" + format_block(ca.domain_alphabet(), x.cycle) + ")");
    ++count;
  }
  return count;
}

namespace {

// Largest period p <= want with sum_{q<=p} |A|^q within budget.
int affordable_period(int alphabet_size, int want) {
  double total = 0;
  int p = 0;
  while (p < want) {
    total += std::pow(static_cast<double>(alphabet_size), p + 1);
    if (total > static_cast<double>(1u << 18)) break;
    ++p;
  }
  return p;
}

FiniteWindow merged_window(const CellularAutomaton& ca, const FiniteWindow& n) {
  const Universe& u = ca.universe();
  FiniteWindow core = with_identity(ca.memory().united(n));
  FiniteWindow d = ca.domain().window();
  if (d.empty()) return core;
  // Over Z the window of Σ may be translated freely.
  if (u.kind() == UniverseKind::Z) d = d.translated(core.min() - d.min());
  return core.united(d).hull();
}

}  // namespace

InverseCertificate synthesize_left_inverse(const CellularAutomaton& ca, const FiniteWindow& n,
                                           const CertificateOptions& opt) {
  require_1d(ca);
  const Track track = resolve(ca, opt.track);
  if (!condition_holds(ca, n, track).holds) throw Error("window " + n.format() + " does not determine x(0)");
  const Universe& u = ca.universe();
  const Alphabet& a = ca.domain_alphabet();
  const Alphabet& b = ca.codomain();

  InverseCertificate cert;
  cert.injective = true;
  cert.linear_track = track == Track::Linear;
  cert.inverse_window = n;

  // η on Γ_N from the blocks of Σ on U = MN ∪ {0}.
  FiniteWindow un = window_product(ca.memory(), n).united(FiniteWindow::single(u, u.identity()));
  const auto idx0 = static_cast<std::size_t>(un.index_of(u.identity()));
  std::vector<std::vector<std::size_t>> pos(n.size());
  for (std::size_t i = 0; i < n.size(); ++i)
    for (const auto& h : ca.memory().elements())
      pos[i].push_back(static_cast<std::size_t>(un.index_of(u.multiply(h, n.elements()[i]))));
  std::map<Symbols, int> eta;
  Symbols local(ca.memory().size());
  const BlockSet sigma_u = restrict(ca.domain(), un);
  for (const auto& x : sigma_u.blocks()) {
    Symbols y(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
      for (std::size_t j = 0; j < local.size(); ++j) local[j] = x[pos[i][j]];
      y[i] = ca.local(local);
    }
    auto [it, inserted] = eta.emplace(std::move(y), x[idx0]);
    if (!inserted && it->second != x[idx0]) throw Error("left-inverse rule is not functional on " + n.format());
  }
  std::vector<Symbols> ys;
  cert.eta.memory = n;
  for (auto& [y, x0] : eta) {
    ys.push_back(y);
    cert.eta.outputs.push_back(x0);
  }
  cert.eta.domain = BlockSet(n, ys);

  if (cert.linear_track) {
    modlin::Submodule gens = sigma_submodule(ca.domain(), un);
    modlin::Matrix t = linear_block_matrix(ca, un, n);
    const std::size_t rows = n.size() * b.rank();
    modlin::Matrix y(rows, modlin::Vec(gens.rows().size(), 0));
    modlin::ModRing ring(a.modulus());
    for (std::size_t gi = 0; gi < gens.rows().size(); ++gi)
      for (std::size_t r = 0; r < rows; ++r) {
        long long acc = 0;
        for (std::size_t c = 0; c < t[r].size(); ++c) acc += static_cast<long long>(t[r][c]) * gens.rows()[gi][c];
        y[r][gi] = ring.reduce(acc);
      }
    modlin::Matrix eta_rows;
    for (int j = 0; j < a.rank(); ++j) {
      modlin::Vec z;
      for (const auto& g : gens.rows()) z.push_back(g[idx0 * a.rank() + static_cast<std::size_t>(j)]);
      auto c = gens.rows().empty() ? std::optional<modlin::Vec>(modlin::Vec(rows, 0))
                                   : modlin::solve_left(y, z, a.modulus());
      if (!c) throw Error("no linear left-inverse rule on " + n.format());
      eta_rows.push_back(*c);
    }
    cert.eta_linear = modlin::LinMap(a.modulus(), rows, a.rank(), eta_rows);
    cert.eta.coefficients = std::vector<modlin::Matrix>();
    for (std::size_t i = 0; i < n.size(); ++i) {
      modlin::Matrix c(a.rank(), modlin::Vec(b.rank(), 0));
      for (int r = 0; r < a.rank(); ++r)
        for (int s = 0; s < b.rank(); ++s) c[r][s] = eta_rows[r][i * b.rank() + s];
      cert.eta.coefficients->push_back(std::move(c));
    }
    for (std::size_t k = 0; k < ys.size(); ++k) {
      int v = a.symbol_of(cert.eta_linear->apply(flatten(b, ys[k])));
      if (v != cert.eta.outputs[k]) throw Error("linear left-inverse rule disagrees with the table");
    }
  }

  // σ on Λ = Σ(B; M'M', Γ_{M'M'}) with local rule y ↦ η(y|_N).
  cert.merged = merged_window(ca, n);
  FiniteWindow w2 = window_product(cert.merged, cert.merged);
  SoficPresentation image{ca.domain(), ca};
  BlockSet gamma = restrict(image, w2);
  if (cert.linear_track) {
    cert.lambda = SftPresentation::from_submodule(
        b, w2, AdmissibleFamily(b).as_member(static_cast<int>(w2.size()), gamma.blocks()));
  } else {
    cert.lambda = SftPresentation::from_allowed(b, w2, gamma.blocks());
  }
  std::vector<std::size_t> npos;
  for (const auto& h : n.elements()) npos.push_back(static_cast<std::size_t>(cert.merged.index_of(h)));
  Symbols sub(npos.size());
  const LocalRule& eta_rule = cert.eta;
  auto table = CellularAutomaton::from_function(cert.lambda, a, cert.merged, [&](const Symbols& y) {
    for (std::size_t i = 0; i < npos.size(); ++i) sub[i] = y[npos[i]];
    auto v = eta_rule.find(sub);
    if (!v) throw Error("image block restricts outside the domain of the left-inverse rule");
    return *v;
  });
  if (cert.linear_track) {
    std::vector<modlin::Matrix> coeffs(cert.merged.size(), modlin::Matrix(a.rank(), modlin::Vec(b.rank(), 0)));
    for (std::size_t i = 0; i < npos.size(); ++i) coeffs[npos[i]] = (*cert.eta.coefficients)[i];
    cert.sigma = CellularAutomaton::from_linear(cert.lambda, a, cert.merged, std::move(coeffs));
    if (cert.sigma.rule().outputs != table.rule().outputs)
      throw Error("linear left inverse disagrees with the table");
  } else {
    cert.sigma = std::move(table);
  }

  // σ∘τ = Id on blocks and periodic points.
  FiniteWindow reach = window_product(ca.memory(), cert.merged).hull();
  cert.block_width_checked = std::max<int>(opt.block_width, static_cast<int>(reach.size()));
  cert.blocks_checked = verify_left_inverse_blocks(ca, cert.sigma, cert.block_width_checked);
  cert.max_period_checked = affordable_period(a.size(), opt.max_period);
  cert.periodic_checked = verify_left_inverse_periodic(ca, cert.sigma, cert.max_period_checked);
  return cert;
}

InverseCertificate certify(const CellularAutomaton& ca, const CertificateOptions& opt) {
  InverseWindowResult r = find_inverse_window(ca, opt.nmax, opt.track);
  if (r.status != InverseWindowResult::Status::Found)
    throw Error("inverse window search inconclusive at nmax=" + std::to_string(opt.nmax));
  InverseCertificate cert = synthesize_left_inverse(ca, r.window, opt);
  cert.transcript = std::move(r.transcript);
  return cert;
}

}  // namespace shiftlab

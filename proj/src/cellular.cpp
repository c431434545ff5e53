#include "shiftlab/cellular.hpp"

#include <algorithm>
#include <cmath>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

bool is_full_shift(const SftPresentation& s) {
  double total = std::pow(static_cast<double>(s.alphabet.size()), static_cast<double>(s.window().size()));
  return static_cast<double>(s.allowed.size()) >= total;
}

// Σ_M. Free-monoid domains other than full shifts get the bounded upper
// approximation, which can only add table entries.
BlockSet domain_blocks(const SftPresentation& s, const FiniteWindow& m) {
  if (s.universe().is_linear()) return restrict(s, m);
  if (is_full_shift(s)) {
    std::vector<Symbols> all = enumerate_words(s.alphabet, m.size());
    return BlockSet(m, std::move(all));
  }
  return restrict_bounded(s, m, 4);
}

int linear_output(const Alphabet& in, const Alphabet& out, const std::vector<modlin::Matrix>& coeffs,
                  const Symbols& block) {
  modlin::ModRing ring(out.modulus());
  modlin::Vec acc(out.rank(), 0);
  for (std::size_t h = 0; h < coeffs.size(); ++h) {
    modlin::Vec v = in.vector_of(block[h]);
    for (int r = 0; r < out.rank(); ++r) {
      long long s = acc[r];
      for (int c = 0; c < in.rank(); ++c) s += static_cast<long long>(coeffs[h][r][c]) * v[c];
      acc[r] = ring.reduce(s);
    }
  }
  return out.symbol_of(acc);
}

modlin::Matrix zero_matrix(int rows, int cols) { return modlin::Matrix(rows, modlin::Vec(cols, 0)); }

void check_memory(const SftPresentation& domain, const FiniteWindow& memory) {
  if (!(memory.universe() == domain.universe())) throw Error("memory window over a different universe");
  if (memory.empty()) throw Error("memory set must be nonempty");
}

}  // namespace

int LocalRule::apply(const Symbols& block) const {
  auto r = find(block);
  if (!r) throw Error("local rule applied to a block outside the domain restriction");
  return *r;
}

std::optional<int> LocalRule::find(const Symbols& block) const {
  const auto& bs = domain.blocks();
  auto it = std::lower_bound(bs.begin(), bs.end(), block);
  if (it == bs.end() || *it != block) return std::nullopt;
  return outputs[static_cast<std::size_t>(it - bs.begin())];
}

CellularAutomaton CellularAutomaton::from_function(SftPresentation domain, Alphabet codomain, FiniteWindow memory,
                                                   const std::function<int(const Symbols&)>& mu) {
  check_memory(domain, memory);
  CellularAutomaton ca;
  ca.rule_.memory = memory;
  ca.rule_.domain = domain_blocks(domain, memory);
  ca.rule_.outputs.reserve(ca.rule_.domain.size());
  for (const auto& b : ca.rule_.domain.blocks()) {
    int y = mu(b);
    if (y < 0 || y >= codomain.size()) throw Error("local rule output outside the codomain alphabet");
    ca.rule_.outputs.push_back(y);
  }
  ca.domain_ = std::move(domain);
  ca.codomain_ = std::move(codomain);
  return ca;
}

CellularAutomaton CellularAutomaton::from_table(SftPresentation domain, Alphabet codomain, FiniteWindow memory,
                                                const std::map<Symbols, int>& table) {
  Alphabet in = domain.alphabet;
  return from_function(std::move(domain), std::move(codomain), std::move(memory), [&](const Symbols& b) {
    auto it = table.find(b);
    if (it == table.end()) throw Error("table has no entry for block " + format_block(in, b));
    return it->second;
  });
}

CellularAutomaton CellularAutomaton::from_linear(SftPresentation domain, Alphabet codomain, FiniteWindow memory,
                                                 std::vector<modlin::Matrix> coefficients) {
  const Alphabet& in = domain.alphabet;
  if (!in.is_module() || !codomain.is_module() || in.modulus() != codomain.modulus())
    throw Error("linear rule needs module alphabets over the same ring");
  if (coefficients.size() != memory.size()) throw Error("linear rule needs one matrix per memory element");
  modlin::ModRing ring(in.modulus());
  for (auto& c : coefficients) {
    if (c.size() != static_cast<std::size_t>(codomain.rank())) throw Error("coefficient matrix has wrong row count");
    for (auto& row : c) {
      if (row.size() != static_cast<std::size_t>(in.rank())) throw Error("coefficient matrix has wrong column count");
      for (auto& v : row) v = ring.reduce(v);
    }
  }
  Alphabet out = codomain;
  auto ca = from_function(std::move(domain), std::move(codomain), std::move(memory),
                          [&](const Symbols& b) { return linear_output(in, out, coefficients, b); });
  ca.rule_.coefficients = std::move(coefficients);
  return ca;
}

CellularAutomaton CellularAutomaton::identity(SftPresentation domain) {
  const Universe& u = domain.universe();
  Alphabet a = domain.alphabet;
  FiniteWindow m = FiniteWindow::single(u, u.identity());
  if (a.is_module()) {
    modlin::Matrix id = zero_matrix(a.rank(), a.rank());
    for (int i = 0; i < a.rank(); ++i) id[i][i] = 1;
    return from_linear(std::move(domain), a, m, {id});
  }
  return from_function(std::move(domain), a, m, [](const Symbols& b) { return b[0]; });
}

bool CellularAutomaton::is_linear() const {
  if (!rule_.coefficients) return false;
  if (!domain_.alphabet.is_module()) return false;
  return domain_.linear.has_value() || is_full_shift(domain_);
}

Symbols BlockMap::apply(const Symbols& input) const {
  auto it = std::lower_bound(inputs.begin(), inputs.end(), input);
  if (it == inputs.end() || *it != input) throw Error("block map applied outside its domain");
  return outputs[static_cast<std::size_t>(it - inputs.begin())];
}

BlockSet BlockMap::image() const { return BlockSet(target_window, outputs); }

BlockMap induced_map(const CellularAutomaton& ca, const FiniteWindow& e) {
  const Universe& u = ca.universe();
  const FiniteWindow& m = ca.memory();
  BlockMap out;
  out.source_window = window_product(m, e);
  out.target_window = e;
  BlockSet src = domain_blocks(ca.domain(), out.source_window);
  check_cap(src.size() * std::max<std::size_t>(1, e.size()), "induced block map");

  // positions[i][j]: index of m_j · e_i inside ME
  std::vector<std::vector<std::size_t>> positions(e.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (const auto& h : m.elements())
      positions[i].push_back(static_cast<std::size_t>(out.source_window.index_of(u.multiply(h, e.elements()[i]))));

  out.inputs = src.blocks();
  out.outputs.reserve(out.inputs.size());
  Symbols local(m.size());
  for (const auto& x : out.inputs) {
    Symbols y(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) local[j] = x[positions[i][j]];
      y[i] = ca.local(local);
    }
    out.outputs.push_back(std::move(y));
  }

  if (ca.is_linear()) {
    const Alphabet& a = ca.domain_alphabet();
    const Alphabet& b = ca.codomain();
    std::size_t ka = a.rank(), kb = b.rank();
    modlin::Matrix mat = zero_matrix(static_cast<int>(e.size() * kb), static_cast<int>(out.source_window.size() * ka));
    modlin::ModRing ring(a.modulus());
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) {
        const auto& c = (*ca.rule().coefficients)[j];
        for (std::size_t r = 0; r < kb; ++r)
          for (std::size_t s = 0; s < ka; ++s) {
            auto& cell = mat[i * kb + r][positions[i][j] * ka + s];
            cell = ring.add(cell, c[r][s]);
          }
      }
    out.linear = modlin::LinMap(a.modulus(), out.source_window.size() * ka, e.size() * kb, std::move(mat));
  }
  return out;
}

CellularAutomaton compose(const CellularAutomaton& outer, const CellularAutomaton& inner) {
  if (!(inner.codomain() == outer.domain_alphabet())) throw Error("compose: alphabets do not match");
  if (!(inner.universe() == outer.universe())) throw Error("compose: universes do not match");

  // inner(Σ)_D ⊆ P_outer, which is exactly inner(Σ) ⊆ Σ_outer.
  const FiniteWindow& d = outer.domain().window();
  BlockMap onto_d = induced_map(inner, d);
  for (const auto& y : onto_d.outputs)
    if (!outer.domain().allowed.contains(y))
      throw Error("compose: image of the inner automaton is not inside the outer domain");

  const FiniteWindow& m_out = outer.memory();
  BlockMap inner_map = induced_map(inner, m_out);
  FiniteWindow memory = inner_map.source_window;

  CellularAutomaton ca = CellularAutomaton::from_function(
      inner.domain(), outer.codomain(), memory,
      [&](const Symbols& x) { return outer.local(inner_map.apply(x)); });

  if (outer.rule().coefficients && inner.rule().coefficients) {
    const Universe& u = inner.universe();
    const auto& co = *outer.rule().coefficients;
    const auto& ci = *inner.rule().coefficients;
    int kc = outer.codomain().rank(), ka = inner.domain_alphabet().rank(), kb = inner.codomain().rank();
    modlin::ModRing ring(inner.codomain().modulus());
    std::vector<modlin::Matrix> coeffs(memory.size(), zero_matrix(kc, ka));
    for (std::size_t jo = 0; jo < m_out.size(); ++jo)
      for (std::size_t ji = 0; ji < inner.memory().size(); ++ji) {
        auto h = u.multiply(inner.memory().elements()[ji], m_out.elements()[jo]);
        auto& target = coeffs[static_cast<std::size_t>(memory.index_of(h))];
        for (int r = 0; r < kc; ++r)
          for (int s = 0; s < ka; ++s) {
            long long v = target[r][s];
            for (int t = 0; t < kb; ++t) v += static_cast<long long>(co[jo][r][t]) * ci[ji][t][s];
            target[r][s] = ring.reduce(v);
          }
      }
    auto linear = CellularAutomaton::from_linear(inner.domain(), outer.codomain(), memory, std::move(coeffs));
    if (linear.rule().outputs != ca.rule().outputs) throw Error("compose: linear form disagrees with the table");
    return linear;
  }
  return ca;
}

CellularAutomaton extend_memory(const CellularAutomaton& ca, const FiniteWindow& memory) {
  if (!memory.includes(ca.memory())) throw Error("extend_memory: new memory must contain the old one");
  std::vector<std::size_t> idx;
  for (const auto& h : ca.memory().elements()) idx.push_back(static_cast<std::size_t>(memory.index_of(h)));
  if (ca.rule().coefficients) {
    const auto& old = *ca.rule().coefficients;
    std::vector<modlin::Matrix> coeffs(memory.size(),
                                       zero_matrix(ca.codomain().rank(), ca.domain_alphabet().rank()));
    for (std::size_t j = 0; j < idx.size(); ++j) coeffs[idx[j]] = old[j];
    return CellularAutomaton::from_linear(ca.domain(), ca.codomain(), memory, std::move(coeffs));
  }
  Symbols local(idx.size());
  return CellularAutomaton::from_function(ca.domain(), ca.codomain(), memory, [&](const Symbols& b) {
    for (std::size_t j = 0; j < idx.size(); ++j) local[j] = b[idx[j]];
    return ca.local(local);
  });
}

CellularAutomaton restrict_domain(const CellularAutomaton& ca, const SftPresentation& sub) {
  if (!(sub.alphabet == ca.domain_alphabet())) throw Error("restrict_domain: alphabets do not match");
  if (sub.universe().is_linear() && !sft_included(sub, ca.domain()))
    throw Error("restrict_domain: subshift is not inside the domain");
  if (ca.rule().coefficients)
    return CellularAutomaton::from_linear(sub, ca.codomain(), ca.memory(), *ca.rule().coefficients);
  return CellularAutomaton::from_function(sub, ca.codomain(), ca.memory(),
                                          [&](const Symbols& b) { return ca.local(b); });
}

int PeriodicConfig::at(std::int64_t n) const {
  if (cycle.empty()) throw Error("periodic configuration with an empty cycle");
  auto p = static_cast<std::int64_t>(prefix.size());
  if (n >= 0 && n < p) return prefix[static_cast<std::size_t>(n)];
  auto c = static_cast<std::int64_t>(cycle.size());
  std::int64_t k = ((n - p) % c + c) % c;
  return cycle[static_cast<std::size_t>(k)];
}

PeriodicConfig apply_periodic(const CellularAutomaton& ca, const PeriodicConfig& x) {
  const Universe& u = ca.universe();
  if (!u.is_linear()) throw Error("periodic configurations need universe Z or N");
  if (u.kind() == UniverseKind::Z && !x.prefix.empty()) throw Error("configurations over Z have no prefix");
  auto ms = ca.memory().ints();
  PeriodicConfig y;
  Symbols local(ms.size());
  auto eval = [&](std::int64_t n) {
    for (std::size_t j = 0; j < ms.size(); ++j) local[j] = x.at(n + ms[j]);
    return ca.local(local);
  };
  for (std::size_t n = 0; n < x.prefix.size(); ++n) y.prefix.push_back(eval(static_cast<std::int64_t>(n)));
  for (std::size_t n = 0; n < x.cycle.size(); ++n)
    y.cycle.push_back(eval(static_cast<std::int64_t>(x.prefix.size() + n)));
  return y;
}

bool periodic_in(const SftPresentation& s, const PeriodicConfig& x) {
  auto ds = s.window().ints();
  Symbols b(ds.size());
  std::size_t span = x.prefix.size() + x.cycle.size();
  for (std::size_t n = 0; n < span; ++n) {
    for (std::size_t j = 0; j < ds.size(); ++j) b[j] = x.at(static_cast<std::int64_t>(n) + ds[j]);
    if (!s.allowed.contains(b)) return false;
  }
  return true;
}

}  // namespace shiftlab

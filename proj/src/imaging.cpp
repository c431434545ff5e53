#include "shiftlab/imaging.hpp"

#include <cmath>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

// Union with `d`, translating d next to `core` over Z where windows may move.
FiniteWindow merge_with(const FiniteWindow& core, FiniteWindow d) {
  if (d.empty()) return core.hull();
  if (core.universe().kind() == UniverseKind::Z) d = d.translated(core.min() - d.min());
  return core.united(d).hull();
}

}  // namespace

ImageSftResult image_sft(const CellularAutomaton& ca, const SftPresentation& delta, const InverseCertificate& cert,
                         int depth) {
  if (!(delta.alphabet == ca.domain_alphabet())) throw Error("image_sft: subshift is over a different alphabet");
  if (!sft_included(delta, ca.domain())) throw Error("image_sft: subshift is not inside the domain");
  if (!cert.injective || cert.merged.empty()) throw Error("image_sft: invalid certificate");

  ImageSftResult r;
  r.merged = merge_with(cert.merged, delta.window());
  FiniteWindow w = window_product(r.merged, r.merged);
  SoficPresentation image = SoficPresentation::make(delta, ca);
  r.presentation = SftPresentation::from_allowed(ca.codomain(), w, restrict(image, w).blocks());
  r.exact_equal = presentations_equal(r.presentation, image);
  r.depth = depth;
  r.depth_equal = equal_to_depth(r.presentation, image, depth);
  return r;
}

SftPresentation minimize_window(const SftPresentation& s) {
  const Universe& u = s.universe();
  if (!u.is_linear()) throw Error("minimize_window needs universe Z or N");
  if (s.window().empty()) return s;
  const std::int64_t top = u.kind() == UniverseKind::Z ? s.window().max() - s.window().min() : s.window().max();
  for (std::int64_t j = 0; j <= top; ++j) {
    FiniteWindow f = FiniteWindow::interval(u, 0, j);
    SftPresentation c = SftPresentation::from_allowed(s.alphabet, f, restrict(s, f).blocks());
    if (sft_equal(c, s)) return c;
  }
  return s;
}

RecoverResult recover_preimage_sft(const CellularAutomaton& ca, const SftPresentation& image,
                                   const InverseCertificate& cert, int depth, bool minimize) {
  if (!(image.alphabet == ca.codomain())) throw Error("recover: image is over a different alphabet");
  if (!cert.injective || cert.merged.empty()) throw Error("recover: invalid certificate");
  if (!sft_included(image, cert.lambda)) throw Error("recover: image is not inside the image of the domain");

  RecoverResult r;
  SftPresentation x = minimize ? minimize_window(image) : image;
  r.image_window = x.window();
  r.merged = merge_with(cert.merged, x.window());
  FiniteWindow w = window_product(r.merged, r.merged);
  SoficPresentation pre = SoficPresentation::make(x, cert.sigma);
  r.presentation = SftPresentation::from_allowed(ca.domain_alphabet(), w, restrict(pre, w).blocks());
  r.exact_equal = presentations_equal(r.presentation, pre);
  r.depth = depth;
  r.depth_equal = equal_to_depth(r.presentation, pre, depth);
  return r;
}

SoficPresentation sofic_image(const CellularAutomaton& ca, const SoficPresentation& delta) {
  return SoficPresentation{delta.source, compose(ca, delta.code)};
}

SoficPresentation sofic_preimage(const CellularAutomaton& ca, const SoficPresentation& image,
                                 const InverseCertificate& cert) {
  if (!(image.alphabet() == ca.codomain())) throw Error("sofic_preimage: image is over a different alphabet");
  return SoficPresentation{image.source, compose(cert.sigma, image.code)};
}

BlockSet pointwise_image(const CellularAutomaton& ca, const Presentation& delta, const FiniteWindow& e) {
  if (!(alphabet_of(delta) == ca.domain_alphabet())) throw Error("pointwise_image: alphabet mismatch");
  const Universe& u = ca.universe();
  FiniteWindow me = window_product(ca.memory(), e);
  std::vector<std::vector<std::size_t>> pos(e.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (const auto& h : ca.memory().elements())
      pos[i].push_back(static_cast<std::size_t>(me.index_of(u.multiply(h, e.elements()[i]))));
  const BlockSet xs = restrict(delta, me);
  std::vector<Symbols> out;
  Symbols local(ca.memory().size());
  for (const auto& x : xs.blocks()) {
    Symbols y(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = 0; j < local.size(); ++j) local[j] = x[pos[i][j]];
      y[i] = ca.local(local);
    }
    out.push_back(std::move(y));
  }
  return BlockSet(e, std::move(out));
}

bool image_agrees_to_depth(const Presentation& result, const CellularAutomaton& ca, const Presentation& delta,
                           int depth) {
  const Universe& u = ca.universe();
  for (int len = 1; len <= depth; ++len) {
    FiniteWindow e = FiniteWindow::interval(u, 0, len - 1);
    if (!(restrict(result, e) == pointwise_image(ca, delta, e))) return false;
  }
  return true;
}

SftPresentation lift(const SftPresentation& s, const DirectSum& ds) {
  if (!(s.alphabet == ds.left)) throw Error("lift: alphabet does not match the direct sum");
  const FiniteWindow& d = s.window();
  if (s.linear && ds.sum.is_module()) {
    const std::size_t ka = ds.left.rank(), kb = ds.right.rank(), k = ka + kb;
    modlin::Matrix gens;
    for (const auto& g : s.linear->rows()) {
      modlin::Vec v(d.size() * k, 0);
      for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t c = 0; c < ka; ++c) v[i * k + c] = g[i * ka + c];
      gens.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t c = 0; c < kb; ++c) {
        modlin::Vec v(d.size() * k, 0);
        v[i * k + ka + c] = 1;
        gens.push_back(std::move(v));
      }
    return SftPresentation::from_submodule(ds.sum, d,
                                           modlin::Submodule::span(ds.sum.modulus(), d.size() * k, gens));
  }
  auto fills = enumerate_words(ds.right, d.size());
  check_cap(fills.size() * s.allowed.size(), "lift");
  std::vector<Symbols> blocks;
  for (const auto& p : s.allowed.blocks())
    for (const auto& f : fills) {
      Symbols b(d.size());
      for (std::size_t i = 0; i < b.size(); ++i) b[i] = ds.combine(p[i], f[i]);
      blocks.push_back(std::move(b));
    }
  return SftPresentation::from_allowed(ds.sum, d, std::move(blocks));
}

ReducedAutomaton direct_sum_reduce(const CellularAutomaton& ca) {
  const Alphabet& a = ca.domain_alphabet();
  const Alphabet& b = ca.codomain();
  if (a.kind() != b.kind()) throw Error("direct sum of a module and a set alphabet");
  if (a.is_module() && a.modulus() != b.modulus()) throw Error("direct sum over different rings");
  const Universe& u = ca.universe();

  ReducedAutomaton r;
  r.input = direct_sum(a, b);
  r.output = direct_sum(b, b);
  SftPresentation domain = lift(ca.domain(), r.input);
  FiniteWindow memory = ca.memory().united(FiniteWindow::single(u, u.identity()));
  std::vector<int> mpos;
  for (const auto& h : ca.memory().elements()) mpos.push_back(memory.index_of(h));
  const auto idx0 = static_cast<std::size_t>(memory.index_of(u.identity()));

  if (ca.rule().coefficients) {
    const std::size_t ka = a.rank(), kb = b.rank();
    std::vector<modlin::Matrix> coeffs(memory.size(), modlin::Matrix(2 * kb, modlin::Vec(ka + kb, 0)));
    for (std::size_t j = 0; j < mpos.size(); ++j) {
      const auto& c = (*ca.rule().coefficients)[j];
      for (std::size_t r0 = 0; r0 < kb; ++r0)
        for (std::size_t s = 0; s < ka; ++s) coeffs[static_cast<std::size_t>(mpos[j])][r0][s] = c[r0][s];
    }
    for (std::size_t i = 0; i < kb; ++i) coeffs[idx0][kb + i][ka + i] = 1;
    r.ca = CellularAutomaton::from_linear(domain, r.output.sum, memory, std::move(coeffs));
  } else {
    Symbols local(mpos.size());
    r.ca = CellularAutomaton::from_function(domain, r.output.sum, memory, [&](const Symbols& s) {
      for (std::size_t j = 0; j < mpos.size(); ++j) local[j] = r.input.left_of(s[static_cast<std::size_t>(mpos[j])]);
      return r.output.combine(ca.local(local), r.input.right_of(s[idx0]));
    });
  }
  return r;
}

}  // namespace shiftlab

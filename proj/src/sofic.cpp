#include "shiftlab/sofic.hpp"

#include <algorithm>

#include "shiftlab/error.hpp"

namespace shiftlab {

SoficPresentation SoficPresentation::make(SftPresentation source, const CellularAutomaton& code) {
  if (!(source.alphabet == code.domain_alphabet())) throw Error("sofic: code alphabet does not match source");
  if (!(source == code.domain()) && source.universe().is_linear() && !sft_included(source, code.domain()))
    throw Error("sofic: source is not inside the domain of the code");
  CellularAutomaton c = source == code.domain() ? code : restrict_domain(code, source);
  return SoficPresentation{std::move(source), std::move(c)};
}

SoficPresentation SoficPresentation::of_sft(const SftPresentation& s) {
  return SoficPresentation{s, CellularAutomaton::identity(s)};
}

const Alphabet& alphabet_of(const Presentation& p) {
  return std::visit(
      [](const auto& x) -> const Alphabet& {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SftPresentation>)
          return x.alphabet;
        else
          return x.alphabet();
      },
      p);
}

const Universe& universe_of(const Presentation& p) {
  return std::visit([](const auto& x) -> const Universe& { return x.universe(); }, p);
}

TransferGraph presentation_graph(const SftPresentation& s) { return TransferGraph::of_sft(s); }

TransferGraph presentation_graph(const SoficPresentation& s) {
  const TransferGraph base = TransferGraph::of_sft(s.source);
  auto ms = s.code.memory().ints();
  std::int64_t lo = std::min<std::int64_t>(0, *std::min_element(ms.begin(), ms.end()));
  std::int64_t hi = std::max<std::int64_t>(0, *std::max_element(ms.begin(), ms.end()));
  int width = std::max<int>(base.width(), static_cast<int>(hi - lo + 1));
  const TransferGraph wide = base.widened(width);
  Symbols local(ms.size());
  return wide.relabelled(lo, [&](const Symbols& w) {
    for (std::size_t j = 0; j < ms.size(); ++j) local[j] = w[static_cast<std::size_t>(ms[j] - lo)];
    return s.code.local(local);
  });
}

TransferGraph presentation_graph(const Presentation& p) {
  return std::visit([](const auto& x) { return presentation_graph(x); }, p);
}

BlockSet restrict(const SoficPresentation& s, const FiniteWindow& e) {
  if (!s.universe().is_linear()) throw Error("exact restriction needs universe Z or N");
  const TransferGraph g = presentation_graph(s);
  if (e.empty()) {
    std::vector<Symbols> one;
    if (!g.empty()) one.emplace_back();
    return BlockSet(e, std::move(one));
  }
  const auto hull = e.hull();
  return BlockSet(hull, g.label_words(hull.min(), hull.size())).project(e);
}

BlockSet restrict(const Presentation& p, const FiniteWindow& e) {
  return std::visit([&](const auto& x) { return restrict(x, e); }, p);
}

bool presentation_included(const Presentation& a, const Presentation& b) {
  if (!(alphabet_of(a) == alphabet_of(b)) || !(universe_of(a) == universe_of(b)))
    throw Error("comparing subshifts over different alphabets or universes");
  return language_included(presentation_graph(a), presentation_graph(b));
}

bool presentations_equal(const Presentation& a, const Presentation& b) {
  return presentation_included(a, b) && presentation_included(b, a);
}

bool equal_to_depth(const Presentation& a, const Presentation& b, int depth) {
  if (!(alphabet_of(a) == alphabet_of(b)) || !(universe_of(a) == universe_of(b)))
    throw Error("comparing subshifts over different alphabets or universes");
  const Universe& u = universe_of(a);
  for (int len = 1; len <= depth; ++len) {
    FiniteWindow w = FiniteWindow::interval(u, 0, len - 1);
    if (!(restrict(a, w) == restrict(b, w))) return false;
  }
  return true;
}

bool restriction_consistency_check(const Presentation& p, const FiniteWindow& f, const FiniteWindow& e) {
  if (!f.includes(e)) throw Error("consistency check needs E inside F");
  return restrict(p, f).project(e) == restrict(p, e);
}

}  // namespace shiftlab

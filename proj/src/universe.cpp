#include "shiftlab/universe.hpp"

#include <algorithm>
#include <sstream>

#include "shiftlab/error.hpp"

namespace shiftlab {

Universe Universe::free(int rank) {
  if (rank < 1 || rank > 26) throw Error("free monoid rank must be in 1..26");
  return Universe(UniverseKind::Free, rank);
}

Element Universe::identity() const {
  return kind_ == UniverseKind::Free ? Element::from_word({}) : Element::integer(0);
}

Element Universe::multiply(const Element& a, const Element& b) const {
  if (kind_ != UniverseKind::Free) return Element::integer(a.value + b.value);
  std::vector<int> w = a.word;
  w.insert(w.end(), b.word.begin(), b.word.end());
  return Element::from_word(std::move(w));
}

bool Universe::contains(const Element& e) const {
  switch (kind_) {
    case UniverseKind::Z:
      return e.word.empty();
    case UniverseKind::N:
      return e.word.empty() && e.value >= 0;
    case UniverseKind::Free:
      return e.value == static_cast<std::int64_t>(e.word.size()) &&
             std::all_of(e.word.begin(), e.word.end(),
                         [&](int g) { return g >= 0 && g < rank_; });
  }
  return false;
}

std::string Universe::format(const Element& e) const {
  if (kind_ != UniverseKind::Free) return std::to_string(e.value);
  if (e.word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < e.word.size(); ++i) {
    if (i) out += '.';
    out += static_cast<char>('a' + e.word[i]);
  }
  return out;
}

Element Universe::parse_element(const std::string& text) const {
  if (kind_ != UniverseKind::Free) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(text, &pos);
    } catch (const std::exception&) {
      throw Error("bad integer element '" + text + "'");
    }
    if (pos != text.size()) throw Error("bad integer element '" + text + "'");
    Element e = Element::integer(v);
    if (!contains(e)) throw Error("element " + text + " not in universe " + name());
    return e;
  }
  if (text == "e" || text.empty()) return Element::from_word({});
  std::vector<int> w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    if (tok.size() != 1 || tok[0] < 'a' || tok[0] - 'a' >= rank_) {
      throw Error("bad generator '" + tok + "' in word '" + text + "'");
    }
    w.push_back(tok[0] - 'a');
  }
  return Element::from_word(std::move(w));
}

std::string Universe::name() const {
  switch (kind_) {
    case UniverseKind::Z:
      return "Z";
    case UniverseKind::N:
      return "N";
    case UniverseKind::Free:
      return "free " + std::to_string(rank_);
  }
  return "?";
}

FiniteWindow::FiniteWindow(Universe u, std::vector<Element> elements)
    : universe_(u), elements_(std::move(elements)) {
  for (const auto& e : elements_) {
    if (!universe_.contains(e)) throw Error("window element outside universe " + u.name());
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

FiniteWindow FiniteWindow::interval(Universe u, std::int64_t lo, std::int64_t hi) {
  std::vector<Element> els;
  for (std::int64_t v = lo; v <= hi; ++v) els.push_back(Element::integer(v));
  return FiniteWindow(u, std::move(els));
}

FiniteWindow FiniteWindow::of_ints(Universe u, const std::vector<std::int64_t>& values) {
  std::vector<Element> els;
  els.reserve(values.size());
  for (auto v : values) els.push_back(Element::integer(v));
  return FiniteWindow(u, std::move(els));
}

FiniteWindow FiniteWindow::single(Universe u, const Element& e) { return FiniteWindow(u, {e}); }

bool FiniteWindow::contains(const Element& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

int FiniteWindow::index_of(const Element& e) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || !(*it == e)) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool FiniteWindow::includes(const FiniteWindow& other) const {
  return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(),
                       other.elements_.end());
}

std::vector<std::int64_t> FiniteWindow::ints() const {
  if (!universe_.is_linear()) throw Error("integer view requested for a free-monoid window");
  std::vector<std::int64_t> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.value);
  return out;
}

std::int64_t FiniteWindow::min() const {
  if (empty()) throw Error("min of empty window");
  return ints().front();
}

std::int64_t FiniteWindow::max() const {
  if (empty()) throw Error("max of empty window");
  return ints().back();
}

bool FiniteWindow::is_interval() const {
  if (!universe_.is_linear()) return false;
  return empty() || max() - min() + 1 == static_cast<std::int64_t>(size());
}

FiniteWindow FiniteWindow::hull() const {
  if (empty()) return *this;
  return interval(universe_, min(), max());
}

FiniteWindow FiniteWindow::united(const FiniteWindow& other) const {
  if (!(universe_ == other.universe_)) throw Error("windows over different universes");
  std::vector<Element> els = elements_;
  els.insert(els.end(), other.elements_.begin(), other.elements_.end());
  return FiniteWindow(universe_, std::move(els));
}

FiniteWindow FiniteWindow::translated(std::int64_t by) const {
  auto v = ints();
  for (auto& x : v) x += by;
  return of_ints(universe_, v);
}

std::string FiniteWindow::format() const {
  if (universe_.is_linear() && !empty() && size() > 1 && is_interval()) {
    return std::to_string(min()) + ".." + std::to_string(max());
  }
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += universe_.format(elements_[i]);
  }
  return out + "}";
}

FiniteWindow FiniteWindow::parse(const Universe& u, const std::string& text) {
  if (text.empty()) throw Error("empty window literal");
  if (text.front() == '{') {
    if (text.back() != '}') throw Error("unterminated window literal '" + text + "'");
    std::vector<Element> els;
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) els.push_back(u.parse_element(tok));
    }
    return FiniteWindow(u, std::move(els));
  }
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    if (!u.is_linear()) throw Error("interval windows need universe Z or N");
    Element lo = u.parse_element(text.substr(0, dots));
    Element hi = u.parse_element(text.substr(dots + 2));
    if (hi.value < lo.value) throw Error("empty interval '" + text + "'");
    return interval(u, lo.value, hi.value);
  }
  return single(u, u.parse_element(text));
}

FiniteWindow window_product(const FiniteWindow& e, const FiniteWindow& f) {
  if (!(e.universe() == f.universe())) throw Error("window_product over mixed universes");
  const Universe& u = e.universe();
  std::vector<Element> out;
  out.reserve(e.size() * f.size());
  for (const auto& a : e.elements()) {
    for (const auto& b : f.elements()) out.push_back(u.multiply(a, b));
  }
  return FiniteWindow(u, std::move(out));
}

FiniteWindow exhaustion(const Universe& u, int n, int base) {
  const int r = n + base;
  switch (u.kind()) {
    case UniverseKind::Z:
      return FiniteWindow::interval(u, -r, r);
    case UniverseKind::N:
      return FiniteWindow::interval(u, 0, r);
    case UniverseKind::Free: {
      std::vector<Element> out{Element::from_word({})};
      std::vector<std::vector<int>> layer{{}};
      for (int len = 1; len <= r; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : layer) {
          for (int g = 0; g < u.rank(); ++g) {
            auto x = w;
            x.push_back(g);
            out.push_back(Element::from_word(x));
            next.push_back(std::move(x));
          }
        }
        layer = std::move(next);
      }
      return FiniteWindow(u, std::move(out));
    }
  }
  return {};
}

}  // namespace shiftlab

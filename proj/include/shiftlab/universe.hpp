#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace shiftlab {

enum class UniverseKind { Z, N, Free };

// An element of a supported monoid. For Z and N only `value` is used. For a
// free monoid the element is a word over generators 0..r-1 and `value` caches
// the word length, so the defaulted ordering is length-lexicographic.
struct Element {
  std::int64_t value = 0;
  std::vector<int> word;

  static Element integer(std::int64_t v) { return Element{v, {}}; }
  static Element from_word(std::vector<int> w) {
    auto len = static_cast<std::int64_t>(w.size());
    return Element{len, std::move(w)};
  }

  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;
};

class Universe {
 public:
  Universe() = default;
  static Universe integers() { return Universe(UniverseKind::Z, 0); }
  static Universe naturals() { return Universe(UniverseKind::N, 0); }
  static Universe free(int rank);

  UniverseKind kind() const { return kind_; }
  int rank() const { return rank_; }
  bool is_linear() const { return kind_ != UniverseKind::Free; }

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  bool contains(const Element& e) const;

  // Generators print as a, b, c, ...; words as `a.b.a`, the empty word as `e`.
  std::string format(const Element& e) const;
  Element parse_element(const std::string& text) const;

  std::string name() const;

  bool operator==(const Universe&) const = default;

 private:
  Universe(UniverseKind kind, int rank) : kind_(kind), rank_(rank) {}
  UniverseKind kind_ = UniverseKind::Z;
  int rank_ = 0;
};

// A finite subset of a universe in canonical (sorted, deduplicated) order.
class FiniteWindow {
 public:
  FiniteWindow() = default;
  FiniteWindow(Universe u, std::vector<Element> elements);

  static FiniteWindow interval(Universe u, std::int64_t lo, std::int64_t hi);
  static FiniteWindow of_ints(Universe u, const std::vector<std::int64_t>& values);
  static FiniteWindow single(Universe u, const Element& e);

  const Universe& universe() const { return universe_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  bool contains(const Element& e) const;
  bool contains(std::int64_t v) const { return contains(Element::integer(v)); }
  // Position of `e` in canonical order, or -1.
  int index_of(const Element& e) const;
  int index_of(std::int64_t v) const { return index_of(Element::integer(v)); }
  bool includes(const FiniteWindow& other) const;

  // Integer view for Z and N; throws for free monoids.
  std::vector<std::int64_t> ints() const;
  std::int64_t min() const;
  std::int64_t max() const;
  bool is_interval() const;
  // Smallest interval containing the window (Z/N only).
  FiniteWindow hull() const;
  FiniteWindow united(const FiniteWindow& other) const;
  FiniteWindow translated(std::int64_t by) const;

  // `0..3` for intervals, `{0,2,5}` otherwise.
  std::string format() const;
  static FiniteWindow parse(const Universe& u, const std::string& text);

  bool operator==(const FiniteWindow&) const = default;

 private:
  Universe universe_;
  std::vector<Element> elements_;
};

// EF = {ef : e in E, f in F}.
FiniteWindow window_product(const FiniteWindow& e, const FiniteWindow& f);

// The increasing exhaustion E_0 ⊆ E_1 ⊆ ... with base radius `base`:
// Z: [-n-c, n+c]; N: [0, n+c]; Free(r): words of length <= n+c.
FiniteWindow exhaustion(const Universe& u, int n, int base = 0);

}  // namespace shiftlab

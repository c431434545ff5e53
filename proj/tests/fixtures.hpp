// Small shifts and automata shared by the test suites.
#pragma once

#include "shiftlab/imaging.hpp"

namespace fixture {

using namespace shiftlab;

inline Alphabet bin() { return Alphabet::set({"0", "1"}); }
inline Alphabet pair() { return Alphabet::set({"a", "b", "c", "d"}); }
inline Universe z() { return Universe::integers(); }
inline FiniteWindow iv(std::int64_t lo, std::int64_t hi, Universe u = Universe::integers()) {
  return FiniteWindow::interval(u, lo, hi);
}

inline SftPresentation golden_mean(Universe u = Universe::integers()) {
  return SftPresentation::from_forbidden(bin(), iv(0, 1, u), {{1, 1}});
}

inline SftPresentation full(Alphabet a, Universe u = Universe::integers()) { return SftPresentation::full(u, a); }

// tau(x)(n) = (x(n), x(n+1)) coded as a, b, c.
inline CellularAutomaton tau2() {
  return CellularAutomaton::from_table(golden_mean(), pair(), iv(0, 1), {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 2}});
}

// y(n) = 1 iff x(n) x(n+1) = 00; maps the golden mean onto the even shift.
inline CellularAutomaton parity() {
  return CellularAutomaton::from_table(golden_mean(), bin(), iv(0, 1), {{{0, 0}, 1}, {{0, 1}, 0}, {{1, 0}, 0}});
}

inline SoficPresentation even_shift() { return SoficPresentation::make(golden_mean(), parity()); }

// The even shift from the three-state cover 1 -> {1,a}, a -> b, b -> {a,1}.
inline SoficPresentation even_shift_cover() {
  Alphabet states = Alphabet::set({"1", "a", "b"});
  auto s = SftPresentation::from_allowed(states, iv(0, 1), {{0, 0}, {0, 1}, {1, 2}, {2, 1}, {2, 0}});
  auto code = CellularAutomaton::from_table(s, bin(), iv(0, 0), {{{0}, 1}, {{1}, 0}, {{2}, 0}});
  return SoficPresentation::make(s, code);
}

inline CellularAutomaton xor_rule() {
  Alphabet f2 = Alphabet::module(2, 1);
  return CellularAutomaton::from_linear(full(f2), f2, iv(0, 1), {{{1}}, {{1}}});
}

// tau(x)(n) = x(n) + s x(n+1) over GF(2)^2 with s^2 = 0.
inline CellularAutomaton e3() {
  Alphabet v = Alphabet::module(2, 2);
  return CellularAutomaton::from_linear(full(v), v, iv(0, 1), {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}});
}

inline SftPresentation constants(Alphabet a) {
  std::vector<Symbols> diag;
  for (int s = 0; s < a.size(); ++s) diag.push_back({s, s});
  return SftPresentation::from_allowed(a, iv(0, 1), diag);
}

inline CellularAutomaton shift_by(std::int64_t k, Universe u = Universe::integers()) {
  return CellularAutomaton::from_table(full(bin(), u), bin(), FiniteWindow::of_ints(u, {k}), {{{0}, 0}, {{1}, 1}});
}

}  // namespace fixture

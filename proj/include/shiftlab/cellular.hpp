#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "shiftlab/modlin.hpp"
#include "shiftlab/subshift.hpp"

namespace shiftlab {

// Local defining map μ: Σ_M -> B. The table is defined exactly on the true
// restriction Σ_M of the domain; `coefficients`, when present, gives the same
// map as μ(x) = Σ_h c_h · x(h) with one k_B × k_A matrix per memory element.
struct LocalRule {
  FiniteWindow memory;
  BlockSet domain;
  std::vector<int> outputs;  // aligned with domain.blocks()
  std::optional<std::vector<modlin::Matrix>> coefficients;

  // Throws if the block is not in Σ_M.
  int apply(const Symbols& block) const;
  std::optional<int> find(const Symbols& block) const;
};

// τ(c)(g) = μ((g⋆c)|_M) on the domain subshift Σ.
class CellularAutomaton {
 public:
  CellularAutomaton() = default;

  // `mu` is evaluated on every block of Σ_M.
  static CellularAutomaton from_function(SftPresentation domain, Alphabet codomain, FiniteWindow memory,
                                         const std::function<int(const Symbols&)>& mu);
  // Entries outside Σ_M are ignored; every block of Σ_M needs an entry.
  static CellularAutomaton from_table(SftPresentation domain, Alphabet codomain, FiniteWindow memory,
                                      const std::map<Symbols, int>& table);
  static CellularAutomaton from_linear(SftPresentation domain, Alphabet codomain, FiniteWindow memory,
                                       std::vector<modlin::Matrix> coefficients);
  static CellularAutomaton identity(SftPresentation domain);

  const SftPresentation& domain() const { return domain_; }
  const Alphabet& domain_alphabet() const { return domain_.alphabet; }
  const Alphabet& codomain() const { return codomain_; }
  const LocalRule& rule() const { return rule_; }
  const FiniteWindow& memory() const { return rule_.memory; }
  const Universe& universe() const { return domain_.universe(); }

  int local(const Symbols& block) const { return rule_.apply(block); }

  // Linear rule over a domain whose restrictions are submodules (a linear SFT
  // or a full shift over a module alphabet).
  bool is_linear() const;

 private:
  SftPresentation domain_;
  Alphabet codomain_;
  LocalRule rule_;
};

// τ_E^+: Σ_{ME} -> B^E with τ_E^+(x|_{ME}) = τ(x)|_E.
struct BlockMap {
  FiniteWindow source_window;  // ME
  FiniteWindow target_window;  // E
  std::vector<Symbols> inputs;
  std::vector<Symbols> outputs;
  std::optional<modlin::LinMap> linear;

  Symbols apply(const Symbols& input) const;
  BlockSet image() const;
};

BlockMap induced_map(const CellularAutomaton& ca, const FiniteWindow& e);

// outer ∘ inner with memory M_inner · M_outer. Throws unless inner(Σ) lies in
// the domain of outer.
CellularAutomaton compose(const CellularAutomaton& outer, const CellularAutomaton& inner);

// Same map with a larger memory set.
CellularAutomaton extend_memory(const CellularAutomaton& ca, const FiniteWindow& memory);

// Same rule on a subshift of the domain (inclusion is checked).
CellularAutomaton restrict_domain(const CellularAutomaton& ca, const SftPresentation& sub);

// x(n) = prefix[n] for n < |prefix|, then the cycle repeats. Over Z the prefix
// must be empty and x(n) = cycle[n mod p] for all integers n.
struct PeriodicConfig {
  Symbols prefix;
  Symbols cycle;

  int at(std::int64_t n) const;
  bool operator==(const PeriodicConfig&) const = default;
};

PeriodicConfig apply_periodic(const CellularAutomaton& ca, const PeriodicConfig& x);

// Whether a periodic configuration lies in the SFT.
bool periodic_in(const SftPresentation& s, const PeriodicConfig& x);

}  // namespace shiftlab

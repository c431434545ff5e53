#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftlab/alphabet.hpp"
#include "shiftlab/modlin.hpp"
#include "shiftlab/universe.hpp"

namespace shiftlab {

// A set of blocks on one window, kept sorted and deduplicated.
class BlockSet {
 public:
  BlockSet() = default;
  BlockSet(FiniteWindow window, std::vector<Symbols> blocks);

  const FiniteWindow& window() const { return window_; }
  const std::vector<Symbols>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  bool contains(const Symbols& b) const;
  bool includes(const BlockSet& other) const;

  // Restriction of every block to a sub-window.
  BlockSet project(const FiniteWindow& sub) const;

  bool operator==(const BlockSet&) const = default;

 private:
  FiniteWindow window_;
  std::vector<Symbols> blocks_;
};

// Σ(A^G; D, P) = {x : (g⋆x)|_D ∈ P for all g ∈ G}.
struct SftPresentation {
  Alphabet alphabet;
  BlockSet allowed;
  // Set when P was given as a submodule of A^D.
  std::optional<modlin::Submodule> linear;

  const FiniteWindow& window() const { return allowed.window(); }
  const Universe& universe() const { return allowed.window().universe(); }

  static SftPresentation from_allowed(Alphabet a, FiniteWindow d, std::vector<Symbols> allowed);
  static SftPresentation from_forbidden(Alphabet a, FiniteWindow d, const std::vector<Symbols>& forbidden);
  static SftPresentation from_submodule(Alphabet a, FiniteWindow d, modlin::Submodule allowed);
  static SftPresentation full(const Universe& u, Alphabet a);

  bool operator==(const SftPresentation&) const = default;
};

// Exact restriction Σ_E for universes Z and N.
BlockSet restrict(const SftPresentation& s, const FiniteWindow& e);
// Σ_E as a submodule of A^E; throws when the block set is not one.
modlin::Submodule restrict_submodule(const SftPresentation& s, const FiniteWindow& e);

// Re-presents Σ on a larger window E ⊇ D with allowed = Σ_E.
SftPresentation window_change(const SftPresentation& s, const FiniteWindow& e);

bool sft_included(const SftPresentation& a, const SftPresentation& b);
bool sft_equal(const SftPresentation& a, const SftPresentation& b);

// Free-monoid universes: blocks on E extendable to a pattern on the ball of
// words of length <= maxlen(E) + depth that satisfies every translate of the
// window fitting inside the ball. An upper approximation of Σ_E, decreasing in
// depth.
BlockSet restrict_bounded(const SftPresentation& s, const FiniteWindow& e, int depth);

// A line of the textual spec format that re-parses to the same presentation.
std::string format_sft(const std::string& name, const std::string& alphabet_name,
                       const SftPresentation& s);

}  // namespace shiftlab

#pragma once

#include <variant>

#include "shiftlab/cellular.hpp"
#include "shiftlab/transfer_graph.hpp"

namespace shiftlab {

// The image code(source): a sofic subshift over code.codomain().
struct SoficPresentation {
  SftPresentation source;
  CellularAutomaton code;

  const Alphabet& alphabet() const { return code.codomain(); }
  const Universe& universe() const { return source.universe(); }

  // Builds the pair and checks that `code` is defined on `source`.
  static SoficPresentation make(SftPresentation source, const CellularAutomaton& code);
  static SoficPresentation of_sft(const SftPresentation& s);
};

using Presentation = std::variant<SftPresentation, SoficPresentation>;

const Alphabet& alphabet_of(const Presentation& p);
const Universe& universe_of(const Presentation& p);

// Labelled graph whose label words are exactly the blocks of the subshift.
TransferGraph presentation_graph(const SftPresentation& s);
TransferGraph presentation_graph(const SoficPresentation& s);
TransferGraph presentation_graph(const Presentation& p);

BlockSet restrict(const SoficPresentation& s, const FiniteWindow& e);
BlockSet restrict(const Presentation& p, const FiniteWindow& e);

// Exact language comparison (Z and N).
bool presentation_included(const Presentation& a, const Presentation& b);
bool presentations_equal(const Presentation& a, const Presentation& b);

// Compares restrictions on the intervals [0, len) for len = 1..depth.
bool equal_to_depth(const Presentation& a, const Presentation& b, int depth);

// Σ_F projected to E equals Σ_E, for E ⊆ F.
bool restriction_consistency_check(const Presentation& p, const FiniteWindow& f, const FiniteWindow& e);

}  // namespace shiftlab

#pragma once

#include "shiftlab/inversion.hpp"
#include "shiftlab/sofic.hpp"

namespace shiftlab {

struct ImageSftResult {
  SftPresentation presentation;  // window M*M*
  FiniteWindow merged;           // M* = hull(M' ∪ D_Δ)
  bool exact_equal = false;      // against the sofic presentation (Δ, τ)
  bool depth_equal = false;
  int depth = 0;
  bool verified() const { return exact_equal && depth_equal; }
};

// τ(Δ) for an SFT Δ ⊆ Σ, presented on the squared merged window.
ImageSftResult image_sft(const CellularAutomaton& ca, const SftPresentation& delta, const InverseCertificate& cert,
                         int depth = 8);

// The SFT on the smallest window [0, j] presenting the same subshift.
SftPresentation minimize_window(const SftPresentation& s);

struct RecoverResult {
  SftPresentation presentation;  // window M''M''
  FiniteWindow image_window;     // window of the (minimized) image presentation
  FiniteWindow merged;           // M'' = hull(M' ∪ F ∪ {0})
  bool exact_equal = false;      // against the sofic presentation (X, σ)
  bool depth_equal = false;
  int depth = 0;
  bool verified() const { return exact_equal && depth_equal; }
};

// Δ = σ(X) for an SFT X ⊆ τ(Σ).
RecoverResult recover_preimage_sft(const CellularAutomaton& ca, const SftPresentation& image,
                                   const InverseCertificate& cert, int depth = 8, bool minimize = true);

// (source, τ ∘ code); throws unless code(source) ⊆ Σ.
SoficPresentation sofic_image(const CellularAutomaton& ca, const SoficPresentation& delta);
// (source, σ ∘ code); throws unless code(source) ⊆ τ(Σ).
SoficPresentation sofic_preimage(const CellularAutomaton& ca, const SoficPresentation& image,
                                 const InverseCertificate& cert);

// {τ_E^+(x) : x ∈ Δ_{ME}}, computed from the blocks of Δ directly.
BlockSet pointwise_image(const CellularAutomaton& ca, const Presentation& delta, const FiniteWindow& e);

// Compares restrict(result, [0, len)) with pointwise_image(ca, delta, [0, len))
// for len = 1..depth.
bool image_agrees_to_depth(const Presentation& result, const CellularAutomaton& ca, const Presentation& delta,
                           int depth);

// π^{-1}(Σ) for the projection of ds.sum onto ds.left.
SftPresentation lift(const SftPresentation& s, const DirectSum& ds);

// τ_S(x, y) = (τ(x), y) on π^{-1}(Σ) ⊆ (A ⊕ B)^G, landing in (B ⊕ B)^G.
struct ReducedAutomaton {
  CellularAutomaton ca;
  DirectSum input;
  DirectSum output;
};

ReducedAutomaton direct_sum_reduce(const CellularAutomaton& ca);

}  // namespace shiftlab

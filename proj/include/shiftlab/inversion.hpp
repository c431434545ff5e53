#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftlab/cellular.hpp"
#include "shiftlab/sofic.hpp"

namespace shiftlab {

// Pairs (x, y) ∈ Σ × Σ with τ(x) = τ(y), as an SFT over A × A on the window
// hull(D ∪ M ∪ {0}).
struct FiberShift {
  SftPresentation pairs;
  DirectSum pair_alphabet;
};

FiberShift fiber_shift(const CellularAutomaton& ca);

// K = {x ∈ Σ : τ(x) = 0} for linear rules, as a linear SFT.
SftPresentation kernel_shift(const CellularAutomaton& ca);

// A configuration that is eventually periodic in both directions:
// ... left left | middle | right right ..., with `middle` starting at `start`
// and the right cycle starting right after it. Over N there is no left part
// and start is 0.
struct Witness {
  Symbols left;
  Symbols middle;
  Symbols right;
  std::int64_t start = 0;

  int at(std::int64_t n) const;
};

enum class Track { Auto, Set, Linear };

struct InjectivityResult {
  bool injective = false;
  bool linear_track = false;
  // Set track: value pairs (x(0), y(0)) realized by the fiber shift.
  std::vector<std::pair<int, int>> pairs_at_identity;
  // Linear track: the kernel restricted to the identity coordinate.
  std::optional<modlin::Submodule> kernel_at_identity;
  // Over the pair alphabet (set track) or the domain alphabet (linear track).
  std::optional<Witness> witness;
  std::string message;
};

InjectivityResult check_injective(const CellularAutomaton& ca, Track track = Track::Auto);

// C(E): no x, y ∈ Σ with τ(x)|_E = τ(y)|_E and x(0) ≠ y(0).
struct ConditionResult {
  bool holds = false;
  std::vector<std::pair<int, int>> pairs_at_identity;  // set track
  std::optional<modlin::Submodule> linear_at_identity;   // linear track
};

ConditionResult condition_holds(const CellularAutomaton& ca, const FiniteWindow& e, Track track = Track::Auto);

struct ChainEntry {
  int n = 0;
  FiniteWindow window;
  ConditionResult condition;
};

struct StabilizationChain {
  bool linear_track = false;
  std::vector<ChainEntry> entries;
  std::optional<int> first_success;
};

struct InverseWindowResult {
  enum class Status { Found, Inconclusive };
  Status status = Status::Inconclusive;
  FiniteWindow window;     // minimized
  FiniteWindow unminimized;
  int nmax = 64;
  StabilizationChain transcript;
};

// Throws if τ is not injective.
InverseWindowResult find_inverse_window(const CellularAutomaton& ca, int nmax = 64, Track track = Track::Auto);

// Projections π_{E_n M}(U_m), U_m = Σ_{E_m M} ∩ ker τ^+_{E_m}, for m = n, n+1, ...
// up to `extra` further terms or the block cap, with the stabilized value and
// the exact limit restrict(K, E_n M).
struct KernelChain {
  int n = 0;
  FiniteWindow window;  // E_n M
  modlin::ChainResult chain;
  modlin::Submodule exact;
};

KernelChain kernel_chain(const CellularAutomaton& ca, int n, int extra = 6);

struct CertificateOptions {
  int nmax = 64;
  int block_width = 6;
  int max_period = 6;
  Track track = Track::Auto;
};

struct InverseCertificate {
  bool injective = false;
  bool linear_track = false;
  FiniteWindow inverse_window;   // N
  LocalRule eta;                 // on Γ_N
  std::optional<modlin::LinMap> eta_linear;
  FiniteWindow merged;           // M' = hull(M ∪ N ∪ D ∪ {0})
  SftPresentation lambda;        // Σ(B; M'M', Γ_{M'M'})
  CellularAutomaton sigma;       // memory M' on lambda
  StabilizationChain transcript;
  // Verification of σ∘τ = Id.
  int block_width_checked = 0;
  std::size_t blocks_checked = 0;
  int max_period_checked = 0;
  std::size_t periodic_checked = 0;
};

// Builds η and σ for a window N satisfying C(N) and verifies σ∘τ = Id.
InverseCertificate synthesize_left_inverse(const CellularAutomaton& ca, const FiniteWindow& n,
                                           const CertificateOptions& opt = {});

// find_inverse_window followed by synthesize_left_inverse. Throws if τ is not
// injective or the search is inconclusive.
InverseCertificate certify(const CellularAutomaton& ca, const CertificateOptions& opt = {});

// Counts of checked blocks / periodic points; throws on a counterexample.
std::size_t verify_left_inverse_blocks(const CellularAutomaton& ca, const CellularAutomaton& sigma, int width);
std::size_t verify_left_inverse_periodic(const CellularAutomaton& ca, const CellularAutomaton& sigma,
                                         int max_period);

// All periodic points of the SFT with period <= max_period (cycles only).
std::vector<PeriodicConfig> periodic_points(const SftPresentation& s, int max_period);

std::string describe_witness(const Alphabet& a, const Witness& w);

}  // namespace shiftlab

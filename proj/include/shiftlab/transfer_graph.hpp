#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "shiftlab/subshift.hpp"

namespace shiftlab {

// Vertex-labelled de Bruijn graph over Z or N. A vertex is a word of `width`
// source symbols; the vertex at position t covers source coordinates
// [t + offset, t + offset + width). Configurations correspond to bi-infinite
// (Z) or one-sided (N) vertex paths, and `label` gives the output symbol read
// at the vertex's position.
class TransferGraph {
 public:
  TransferGraph() = default;

  bool one_sided() const { return one_sided_; }
  int width() const { return width_; }
  std::int64_t offset() const { return offset_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  const Symbols& word(int v) const { return words_[v]; }
  const std::vector<int>& successors(int v) const { return succ_[v]; }
  const std::vector<int>& predecessors(int v) const { return pred_[v]; }
  int label(int v) const { return label_[v]; }
  std::size_t edge_count() const;

  // Base graph of an SFT over Z or N, pruned, with identity labels.
  static TransferGraph of_sft(const SftPresentation& s);

  // Drops vertices that lie on no bi-infinite path (Z) or no infinite forward
  // path (N). Returns the number of vertices removed.
  std::size_t essentialize();

  // Line-graph steps until the vertex width is at least `width`.
  TransferGraph widened(int width) const;

  // Relabels through `labeller`, which sees the vertex word; the vertex at
  // position t then covers [t + offset, ...).
  TransferGraph relabelled(std::int64_t offset, const std::function<int(const Symbols&)>& labeller) const;

  // Vertices that may sit at position t in some configuration.
  std::vector<int> start_set(std::int64_t t) const;

  // All label words of length `len` read from position t0 onwards.
  std::vector<Symbols> label_words(std::int64_t t0, std::size_t len) const;

  std::string to_dot(const Alphabet& labels) const;

 private:
  void rebuild_pred();

  bool one_sided_ = false;
  int width_ = 1;
  std::int64_t offset_ = 0;
  std::vector<Symbols> words_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
  std::vector<int> label_;
};

// Whether every label word of `a` (read from position 0) is a label word of
// `b`. Both graphs must be essential and share the output alphabet.
bool language_included(const TransferGraph& a, const TransferGraph& b);

}  // namespace shiftlab

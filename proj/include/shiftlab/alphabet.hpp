#pragma once

#include <string>
#include <vector>

#include "shiftlab/modlin.hpp"
#include "shiftlab/universe.hpp"

namespace shiftlab {

// Symbol values of a block, indexed by the window's canonical order.
using Symbols = std::vector<int>;

// A finite alphabet: either a plain set of named symbols or the module
// (Z/mZ)^k. Symbols are integers 0..size-1; module vectors map to symbols in
// mixed radix with the first coordinate most significant, so 0 is the zero
// vector.
class Alphabet {
 public:
  enum class Kind { Set, Module };

  Alphabet() = default;
  static Alphabet set(std::vector<std::string> names);
  static Alphabet module(int modulus, int rank);

  Kind kind() const { return kind_; }
  bool is_module() const { return kind_ == Kind::Module; }
  int size() const { return static_cast<int>(names_.size()); }
  int modulus() const { return modulus_; }
  int rank() const { return rank_; }

  const std::string& name(int symbol) const { return names_.at(symbol); }
  const std::vector<std::string>& names() const { return names_; }
  int parse_symbol(const std::string& text) const;
  bool single_char_names() const;

  modlin::Vec vector_of(int symbol) const;
  int symbol_of(const modlin::Vec& v) const;

  std::string describe() const;

  bool operator==(const Alphabet&) const = default;

 private:
  Kind kind_ = Kind::Set;
  std::vector<std::string> names_;
  int modulus_ = 0;
  int rank_ = 0;
};

struct Block {
  FiniteWindow window;
  Symbols values;
};

// Blocks print as concatenated symbol names when every name is one character,
// otherwise joined with '|'.
std::string format_block(const Alphabet& a, const Symbols& block);
Symbols parse_block(const Alphabet& a, const std::string& text);

// All words of the given length in lexicographic symbol order.
std::vector<Symbols> enumerate_words(const Alphabet& a, std::size_t length);
std::vector<Block> enumerate_blocks(const Alphabet& a, const FiniteWindow& e);

// Module alphabets: a block of n symbols as a vector of n*k ring elements.
modlin::Vec flatten(const Alphabet& a, const Symbols& block);
Symbols unflatten(const Alphabet& a, const modlin::Vec& v);
// Coordinates of the listed block positions in the flattened vector.
std::vector<std::size_t> flat_coords(const Alphabet& a, const std::vector<std::size_t>& positions);

// {(a,...,a)} inside A^n, n >= 2.
modlin::Submodule diagonal(const Alphabet& a, int n);

// A ⊕ B: the module of rank k_A + k_B, or the Cartesian product of sets.
// Symbol (a, b) has index a * |B| + b in both cases.
struct DirectSum {
  Alphabet sum;
  Alphabet left;
  Alphabet right;
  int combine(int a, int b) const { return a * right.size() + b; }
  int left_of(int s) const { return s / right.size(); }
  int right_of(int s) const { return s % right.size(); }
};

DirectSum direct_sum(const Alphabet& a, const Alphabet& b);

// The canonical admissible Artinian structure of a finite module alphabet:
// H_n is the set of all submodules of A^n.
class AdmissibleFamily {
 public:
  explicit AdmissibleFamily(Alphabet a);

  const Alphabet& alphabet() const { return a_; }
  modlin::Submodule trivial(int n) const;
  modlin::Submodule whole(int n) const;
  modlin::Submodule diagonal(int n) const;

  // Projection A^m -> A^n along an injection {0..n-1} -> {0..m-1}.
  modlin::Submodule project(const modlin::Submodule& h, const std::vector<std::size_t>& injection) const;
  modlin::Submodule pull_back(const modlin::Submodule& h, int m,
                              const std::vector<std::size_t>& injection) const;

  // Whether an explicit set of n-tuples is a member of H_n.
  bool is_member(int n, const std::vector<Symbols>& tuples) const;
  // The member of H_n with exactly these elements; throws if there is none.
  modlin::Submodule as_member(int n, const std::vector<Symbols>& tuples) const;

 private:
  Alphabet a_;
};

}  // namespace shiftlab

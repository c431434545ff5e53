#include "shiftlab/alphabet.hpp"

#include <algorithm>
#include <set>

#include "shiftlab/error.hpp"

namespace shiftlab {

Alphabet Alphabet::set(std::vector<std::string> names) {
  if (names.empty()) throw Error("alphabet must have at least one symbol");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || n.find('|') != std::string::npos || n.find(',') != std::string::npos) {
      throw Error("bad symbol name '" + n + "'");
    }
    if (!seen.insert(n).second) throw Error("duplicate symbol '" + n + "'");
  }
  Alphabet a;
  a.kind_ = Kind::Set;
  a.names_ = std::move(names);
  return a;
}

Alphabet Alphabet::module(int modulus, int rank) {
  modlin::ModRing ring(modulus);
  if (rank < 1 || rank > 16) throw Error("module rank must be in 1..16");
  long long size = 1;
  for (int i = 0; i < rank; ++i) {
    size *= modulus;
    check_cap(static_cast<std::size_t>(size), "Alphabet::module");
  }
  Alphabet a;
  a.kind_ = Kind::Module;
  a.modulus_ = modulus;
  a.rank_ = rank;
  for (long long s = 0; s < size; ++s) {
    std::string name;
    long long rest = s;
    std::vector<int> digits(rank);
    for (int i = rank - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(rest % modulus);
      rest /= modulus;
    }
    for (int i = 0; i < rank; ++i) {
      if (i && modulus > 10) name += '_';
      name += std::to_string(digits[i]);
    }
    a.names_.push_back(name);
  }
  return a;
}

int Alphabet::parse_symbol(const std::string& text) const {
  auto it = std::find(names_.begin(), names_.end(), text);
  if (it == names_.end()) throw Error("unknown symbol '" + text + "'");
  return static_cast<int>(it - names_.begin());
}

bool Alphabet::single_char_names() const {
  return std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
}

modlin::Vec Alphabet::vector_of(int symbol) const {
  if (!is_module()) throw Error("vector_of on a set alphabet");
  modlin::Vec v(rank_);
  for (int i = rank_ - 1; i >= 0; --i) {
    v[i] = symbol % modulus_;
    symbol /= modulus_;
  }
  return v;
}

int Alphabet::symbol_of(const modlin::Vec& v) const {
  if (!is_module() || static_cast<int>(v.size()) != rank_) throw Error("symbol_of: bad vector");
  modlin::ModRing ring(modulus_);
  int s = 0;
  for (int x : v) s = s * modulus_ + ring.reduce(x);
  return s;
}

std::string Alphabet::describe() const {
  if (is_module()) return "module m=" + std::to_string(modulus_) + " k=" + std::to_string(rank_);
  std::string out = "set ";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ',';
    out += names_[i];
  }
  return out;
}

std::string format_block(const Alphabet& a, const Symbols& block) {
  const bool compact = a.single_char_names();
  std::string out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i && !compact) out += '|';
    out += a.name(block[i]);
  }
  return out;
}

Symbols parse_block(const Alphabet& a, const std::string& text) {
  Symbols out;
  if (text.find('|') != std::string::npos) {
    std::size_t start = 0;
    while (true) {
      auto bar = text.find('|', start);
      out.push_back(a.parse_symbol(text.substr(start, bar - start)));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
  } else if (a.single_char_names()) {
    for (char c : text) out.push_back(a.parse_symbol(std::string(1, c)));
  } else {
    out.push_back(a.parse_symbol(text));
  }
  return out;
}

std::vector<Symbols> enumerate_words(const Alphabet& a, std::size_t length) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < length; ++i) {
    count *= static_cast<std::size_t>(a.size());
    check_cap(count, "enumerate_blocks");
  }
  std::vector<Symbols> out;
  out.reserve(count);
  Symbols w(length, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    out.push_back(w);
    for (std::size_t i = length; i-- > 0;) {
      if (++w[i] < a.size()) break;
      w[i] = 0;
    }
  }
  return out;
}

std::vector<Block> enumerate_blocks(const Alphabet& a, const FiniteWindow& e) {
  std::vector<Block> out;
  for (auto& w : enumerate_words(a, e.size())) out.push_back(Block{e, std::move(w)});
  return out;
}

modlin::Vec flatten(const Alphabet& a, const Symbols& block) {
  modlin::Vec v;
  v.reserve(block.size() * a.rank());
  for (int s : block) {
    auto part = a.vector_of(s);
    v.insert(v.end(), part.begin(), part.end());
  }
  return v;
}

Symbols unflatten(const Alphabet& a, const modlin::Vec& v) {
  const auto k = static_cast<std::size_t>(a.rank());
  if (k == 0 || v.size() % k != 0) throw Error("unflatten: length mismatch");
  Symbols out;
  for (std::size_t i = 0; i < v.size(); i += k) {
    out.push_back(a.symbol_of(modlin::Vec(v.begin() + i, v.begin() + i + k)));
  }
  return out;
}

std::vector<std::size_t> flat_coords(const Alphabet& a, const std::vector<std::size_t>& positions) {
  const auto k = static_cast<std::size_t>(a.rank());
  std::vector<std::size_t> out;
  for (auto p : positions) {
    for (std::size_t j = 0; j < k; ++j) out.push_back(p * k + j);
  }
  return out;
}

modlin::Submodule diagonal(const Alphabet& a, int n) {
  if (!a.is_module()) throw Error("diagonal needs a module alphabet");
  if (n < 2) throw Error("diagonal needs n >= 2");
  const int k = a.rank();
  modlin::Matrix gens;
  for (int j = 0; j < k; ++j) {
    modlin::Vec v(static_cast<std::size_t>(n * k), 0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i * k + j)] = 1;
    gens.push_back(std::move(v));
  }
  return modlin::Submodule::span(a.modulus(), static_cast<std::size_t>(n * k), gens);
}

DirectSum direct_sum(const Alphabet& a, const Alphabet& b) {
  if (a.kind() != b.kind()) throw Error("direct_sum of a set alphabet and a module alphabet");
  if (a.is_module()) {
    if (a.modulus() != b.modulus()) throw Error("direct_sum over different rings");
    return DirectSum{Alphabet::module(a.modulus(), a.rank() + b.rank()), a, b};
  }
  const bool compact = a.single_char_names() && b.single_char_names();
  std::vector<std::string> names;
  for (const auto& x : a.names()) {
    for (const auto& y : b.names()) names.push_back(compact ? x + y : x + "_" + y);
  }
  return DirectSum{Alphabet::set(std::move(names)), a, b};
}

AdmissibleFamily::AdmissibleFamily(Alphabet a) : a_(std::move(a)) {
  if (!a_.is_module()) throw Error("admissible family needs a module alphabet");
}

modlin::Submodule AdmissibleFamily::trivial(int n) const {
  return modlin::Submodule::zero(a_.modulus(), static_cast<std::size_t>(n * a_.rank()));
}

modlin::Submodule AdmissibleFamily::whole(int n) const {
  return modlin::Submodule::full(a_.modulus(), static_cast<std::size_t>(n * a_.rank()));
}

modlin::Submodule AdmissibleFamily::diagonal(int n) const { return shiftlab::diagonal(a_, n); }

modlin::Submodule AdmissibleFamily::project(const modlin::Submodule& h,
                                            const std::vector<std::size_t>& injection) const {
  return modlin::project(h, flat_coords(a_, injection));
}

modlin::Submodule AdmissibleFamily::pull_back(const modlin::Submodule& h, int m,
                                              const std::vector<std::size_t>& injection) const {
  return modlin::coordinate_preimage(h, static_cast<std::size_t>(m * a_.rank()), flat_coords(a_, injection));
}

bool AdmissibleFamily::is_member(int n, const std::vector<Symbols>& tuples) const {
  try {
    as_member(n, tuples);
    return true;
  } catch (const Error&) {
    return false;
  }
}

modlin::Submodule AdmissibleFamily::as_member(int n, const std::vector<Symbols>& tuples) const {
  modlin::Matrix gens;
  std::set<modlin::Vec> given;
  for (const auto& t : tuples) {
    if (static_cast<int>(t.size()) != n) throw Error("as_member: tuple length mismatch");
    gens.push_back(flatten(a_, t));
    given.insert(gens.back());
  }
  auto s = modlin::Submodule::span(a_.modulus(), static_cast<std::size_t>(n * a_.rank()), gens);
  if (s.count() != given.size()) throw Error("tuple set is not a submodule");
  return s;
}

}  // namespace shiftlab

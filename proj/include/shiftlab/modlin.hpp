#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace shiftlab::modlin {

using Vec = std::vector<int>;
using Matrix = std::vector<Vec>;  // row-major; rows are vectors

// Arithmetic in Z/mZ, 2 <= m <= 2^16.
class ModRing {
 public:
  explicit ModRing(int modulus);
  int modulus() const { return m_; }
  int reduce(long long v) const;
  int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
  int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
  int mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }
  int neg(int a) const { return reduce(-static_cast<long long>(a)); }
  // A unit u with u*a == gcd(a, m) (mod m).
  int normalizing_unit(int a) const;
  bool operator==(const ModRing&) const = default;

 private:
  int m_;
};

// Howell normal form of the row space of `rows` (each of length `cols`).
// The result has no zero rows, strictly increasing pivot columns, pivots that
// divide m, entries above a pivot reduced below it, and the Howell property:
// rows with zeros in the first j columns span every element of the row space
// with zeros in the first j columns.
Matrix howell(const Matrix& rows, int modulus, std::size_t cols);

// A submodule of (Z/mZ)^rank held in Howell form; equality is matrix equality.
class Submodule {
 public:
  Submodule() = default;
  static Submodule span(int modulus, std::size_t rank, const Matrix& generators);
  static Submodule zero(int modulus, std::size_t rank);
  static Submodule full(int modulus, std::size_t rank);

  int modulus() const { return modulus_; }
  std::size_t rank() const { return rank_; }
  const Matrix& rows() const { return rows_; }

  bool contains(const Vec& v) const;
  bool is_zero() const { return rows_.empty(); }
  // Number of elements; Howell rows give a unique coordinate system with
  // coefficient ranges m / pivot.
  unsigned long long count() const;
  std::vector<Vec> elements() const;
  bool includes(const Submodule& other) const;

  // Semicolon-separated rows, e.g. `1,1;0,1`; `0` for the zero submodule.
  std::string format() const;

  bool operator==(const Submodule&) const = default;

 private:
  int modulus_ = 2;
  std::size_t rank_ = 0;
  Matrix rows_;
};

// Matrix acting on column vectors: (Z/m)^in -> (Z/m)^out.
class LinMap {
 public:
  LinMap() = default;
  LinMap(int modulus, std::size_t in_rank, std::size_t out_rank, Matrix a);
  static LinMap identity(int modulus, std::size_t rank);

  int modulus() const { return modulus_; }
  std::size_t in_rank() const { return in_; }
  std::size_t out_rank() const { return out_; }
  const Matrix& matrix() const { return a_; }

  Vec apply(const Vec& v) const;
  LinMap then(const LinMap& next) const;  // next ∘ this

  bool operator==(const LinMap&) const = default;

 private:
  int modulus_ = 2;
  std::size_t in_ = 0;
  std::size_t out_ = 0;
  Matrix a_;
};

Matrix parse_matrix(const std::string& text);
std::string format_matrix(const Matrix& m);

Submodule kernel(const LinMap& f);
Submodule image(const LinMap& f);
Submodule image(const LinMap& f, const Submodule& s);
Submodule preimage(const LinMap& f, const Submodule& t);
Submodule intersect(const Submodule& s, const Submodule& t);
Submodule sum(const Submodule& s, const Submodule& t);
// Coordinates may repeat or reorder; the result lives in rank coords.size().
Submodule project(const Submodule& s, const std::vector<std::size_t>& coords);
// Preimage of `t` under the coordinate projection (Z/m)^rank -> (Z/m)^coords.
Submodule coordinate_preimage(const Submodule& t, std::size_t rank,
                              const std::vector<std::size_t>& coords);
bool member(const Submodule& s, const Vec& v);

// Some row vector c with c * y == z (mod m), if one exists.
std::optional<Vec> solve_left(const Matrix& y, const Vec& z, int modulus);

struct ChainResult {
  enum class Status { Stable, Inconclusive };
  Status status = Status::Inconclusive;
  Submodule value;
  std::size_t index = 0;
  std::vector<Submodule> values;
};

// Walks S_0 ⊇ S_1 ⊇ ... produced by `next(i)` and returns the first S_r with
// S_r = S_{r+1} = ... = S_{r+width}. Gives up with Inconclusive after `cap` terms.
ChainResult chain_stabilize(const std::function<Submodule(std::size_t)>& next, std::size_t cap,
                            std::size_t width = 1);

}  // namespace shiftlab::modlin

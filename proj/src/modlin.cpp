#include "shiftlab/modlin.hpp"

#include <numeric>
#include <sstream>

#include "shiftlab/error.hpp"

namespace shiftlab::modlin {

namespace {

struct Gcdex {
  long long g, s, t;
};

// s*a + t*b = g = gcd(a, b), for a, b >= 0.
Gcdex gcdex(long long a, long long b) {
  long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {old_r, old_s, old_t};
}

bool is_zero_row(const Vec& v) {
  for (int x : v) {
    if (x != 0) return false;
  }
  return true;
}

void axpy(const ModRing& ring, Vec& dst, int factor, const Vec& src) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = ring.add(dst[i], ring.mul(factor, src[i]));
}

int pivot_col(const Vec& row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) return static_cast<int>(j);
  }
  return -1;
}

}  // namespace

ModRing::ModRing(int modulus) : m_(modulus) {
  if (modulus < 2 || modulus > (1 << 16)) throw Error("modulus must be in 2..65536");
}

int ModRing::reduce(long long v) const {
  long long r = v % m_;
  if (r < 0) r += m_;
  return static_cast<int>(r);
}

int ModRing::normalizing_unit(int a) const {
  a = reduce(a);
  if (a == 0) return 1;
  long long g = std::gcd(static_cast<long long>(a), static_cast<long long>(m_));
  long long ap = a / g, mp = m_ / g;
  long long u = 1;
  if (mp > 1) u = reduce(gcdex(ap % mp, mp).s) % mp;
  if (u == 0) u = mp;
  while (std::gcd(u, static_cast<long long>(m_)) != 1) u += mp;
  return reduce(u);
}

Matrix howell(const Matrix& rows, int modulus, std::size_t cols) {
  const ModRing ring(modulus);
  Matrix a;
  a.reserve(rows.size() + cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw Error("howell: row length mismatch");
    Vec r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = ring.reduce(row[j]);
    if (!is_zero_row(r)) a.push_back(std::move(r));
  }
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < a.size(); ++j) {
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][j] == 0) continue;
      const long long x = a[r][j], y = a[i][j];
      const auto [g, s, t] = gcdex(x, y);
      const int u = ring.reduce(-y / g), v = ring.reduce(x / g);
      const int rs = ring.reduce(s), rt = ring.reduce(t);
      Vec top(cols), bottom(cols);
      for (std::size_t k = 0; k < cols; ++k) {
        top[k] = ring.add(ring.mul(rs, a[r][k]), ring.mul(rt, a[i][k]));
        bottom[k] = ring.add(ring.mul(u, a[r][k]), ring.mul(v, a[i][k]));
      }
      a[r] = std::move(top);
      a[i] = std::move(bottom);
    }
    if (a[r][j] == 0) continue;
    const int unit = ring.normalizing_unit(a[r][j]);
    for (auto& x : a[r]) x = ring.mul(unit, x);
    const int p = a[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      axpy(ring, a[i], ring.neg(a[i][j] / p), a[r]);
    }
    // Annihilator row (m/p)*row_r has a zero in column j and must stay in the span.
    Vec ann = a[r];
    for (auto& x : ann) x = ring.mul(modulus / p, x);
    if (!is_zero_row(ann)) a.push_back(std::move(ann));
    ++r;
  }
  a.resize(r);
  return a;
}

Submodule Submodule::span(int modulus, std::size_t rank, const Matrix& generators) {
  Submodule s;
  s.modulus_ = modulus;
  s.rank_ = rank;
  s.rows_ = howell(generators, modulus, rank);
  return s;
}

Submodule Submodule::zero(int modulus, std::size_t rank) { return span(modulus, rank, {}); }

Submodule Submodule::full(int modulus, std::size_t rank) {
  Matrix id(rank, Vec(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) id[i][i] = 1;
  return span(modulus, rank, id);
}

bool Submodule::contains(const Vec& v0) const {
  if (v0.size() != rank_) throw Error("member: rank mismatch");
  const ModRing ring(modulus_);
  Vec v(v0.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ring.reduce(v0[i]);
  for (const auto& row : rows_) {
    const int j = pivot_col(row);
    const int p = row[j];
    if (v[j] % p != 0) return false;
    axpy(ring, v, ring.neg(v[j] / p), row);
  }
  return is_zero_row(v);
}

unsigned long long Submodule::count() const {
  unsigned long long n = 1;
  for (const auto& row : rows_) n *= static_cast<unsigned long long>(modulus_ / row[pivot_col(row)]);
  return n;
}

std::vector<Vec> Submodule::elements() const {
  const unsigned long long n = count();
  check_cap(n, "Submodule::elements");
  const ModRing ring(modulus_);
  std::vector<int> radix;
  for (const auto& row : rows_) radix.push_back(modulus_ / row[pivot_col(row)]);
  std::vector<Vec> out;
  out.reserve(n);
  std::vector<int> coef(rows_.size(), 0);
  for (unsigned long long idx = 0; idx < n; ++idx) {
    Vec v(rank_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) axpy(ring, v, coef[i], rows_[i]);
    out.push_back(std::move(v));
    for (std::size_t i = rows_.size(); i-- > 0;) {
      if (++coef[i] < radix[i]) break;
      coef[i] = 0;
    }
  }
  return out;
}

bool Submodule::includes(const Submodule& other) const {
  for (const auto& row : other.rows_) {
    if (!contains(row)) return false;
  }
  return true;
}

std::string Submodule::format() const { return rows_.empty() ? "0" : format_matrix(rows_); }

LinMap::LinMap(int modulus, std::size_t in_rank, std::size_t out_rank, Matrix a)
    : modulus_(modulus), in_(in_rank), out_(out_rank), a_(std::move(a)) {
  const ModRing ring(modulus);
  if (a_.size() != out_) throw Error("LinMap: row count does not match output rank");
  for (auto& row : a_) {
    if (row.size() != in_) throw Error("LinMap: column count does not match input rank");
    for (auto& x : row) x = ring.reduce(x);
  }
}

LinMap LinMap::identity(int modulus, std::size_t rank) {
  Matrix id(rank, Vec(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) id[i][i] = 1;
  return LinMap(modulus, rank, rank, std::move(id));
}

Vec LinMap::apply(const Vec& v) const {
  if (v.size() != in_) throw Error("LinMap::apply: rank mismatch");
  const ModRing ring(modulus_);
  Vec out(out_, 0);
  for (std::size_t i = 0; i < out_; ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < in_; ++j) acc += static_cast<long long>(a_[i][j]) * v[j];
    out[i] = ring.reduce(acc);
  }
  return out;
}

LinMap LinMap::then(const LinMap& next) const {
  if (next.in_ != out_ || next.modulus_ != modulus_) throw Error("LinMap::then: rank mismatch");
  const ModRing ring(modulus_);
  Matrix c(next.out_, Vec(in_, 0));
  for (std::size_t i = 0; i < next.out_; ++i) {
    for (std::size_t j = 0; j < in_; ++j) {
      long long acc = 0;
      for (std::size_t k = 0; k < out_; ++k) acc += static_cast<long long>(next.a_[i][k]) * a_[k][j];
      c[i][j] = ring.reduce(acc);
    }
  }
  return LinMap(modulus_, in_, next.out_, std::move(c));
}

Matrix parse_matrix(const std::string& text) {
  Matrix m;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    Vec v;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t pos = 0;
        v.push_back(std::stoi(cell, &pos));
        if (pos != cell.size()) throw Error("");
      } catch (const std::exception&) {
        throw Error("bad matrix entry '" + cell + "'");
      }
    }
    if (!m.empty() && m.front().size() != v.size()) throw Error("ragged matrix '" + text + "'");
    m.push_back(std::move(v));
  }
  return m;
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(m[i][j]);
    }
  }
  return out;
}

Submodule kernel(const LinMap& f) {
  const std::size_t in = f.in_rank(), out = f.out_rank();
  Matrix aug(in, Vec(out + in, 0));
  for (std::size_t i = 0; i < in; ++i) {
    for (std::size_t k = 0; k < out; ++k) aug[i][k] = f.matrix()[k][i];
    aug[i][out + i] = 1;
  }
  Matrix h = howell(aug, f.modulus(), out + in);
  Matrix gens;
  for (const auto& row : h) {
    if (pivot_col(row) >= static_cast<int>(out)) gens.emplace_back(row.begin() + out, row.end());
  }
  return Submodule::span(f.modulus(), in, gens);
}

Submodule image(const LinMap& f) {
  Matrix cols(f.in_rank(), Vec(f.out_rank(), 0));
  for (std::size_t i = 0; i < f.in_rank(); ++i) {
    for (std::size_t k = 0; k < f.out_rank(); ++k) cols[i][k] = f.matrix()[k][i];
  }
  return Submodule::span(f.modulus(), f.out_rank(), cols);
}

Submodule image(const LinMap& f, const Submodule& s) {
  if (s.rank() != f.in_rank()) throw Error("image: rank mismatch");
  Matrix gens;
  for (const auto& row : s.rows()) gens.push_back(f.apply(row));
  return Submodule::span(f.modulus(), f.out_rank(), gens);
}

Submodule preimage(const LinMap& f, const Submodule& t) {
  if (t.rank() != f.out_rank() || t.modulus() != f.modulus()) throw Error("preimage: rank mismatch");
  const ModRing ring(f.modulus());
  const std::size_t in = f.in_rank(), q = t.rows().size();
  Matrix g(f.out_rank(), Vec(in + q, 0));
  for (std::size_t k = 0; k < f.out_rank(); ++k) {
    for (std::size_t i = 0; i < in; ++i) g[k][i] = f.matrix()[k][i];
    for (std::size_t j = 0; j < q; ++j) g[k][in + j] = ring.neg(t.rows()[j][k]);
  }
  Submodule ker = kernel(LinMap(f.modulus(), in + q, f.out_rank(), g));
  std::vector<std::size_t> coords(in);
  std::iota(coords.begin(), coords.end(), 0);
  return project(ker, coords);
}

Submodule intersect(const Submodule& s, const Submodule& t) {
  if (s.rank() != t.rank() || s.modulus() != t.modulus()) throw Error("intersect: rank mismatch");
  const std::size_t k = s.rank();
  Matrix aug;
  for (const auto& row : s.rows()) {
    Vec v(row);
    v.insert(v.end(), row.begin(), row.end());
    aug.push_back(std::move(v));
  }
  for (const auto& row : t.rows()) {
    Vec v(row);
    v.resize(2 * k, 0);
    aug.push_back(std::move(v));
  }
  Matrix h = howell(aug, s.modulus(), 2 * k);
  Matrix gens;
  for (const auto& row : h) {
    if (pivot_col(row) >= static_cast<int>(k)) gens.emplace_back(row.begin() + k, row.end());
  }
  return Submodule::span(s.modulus(), k, gens);
}

Submodule sum(const Submodule& s, const Submodule& t) {
  if (s.rank() != t.rank() || s.modulus() != t.modulus()) throw Error("sum: rank mismatch");
  Matrix gens = s.rows();
  gens.insert(gens.end(), t.rows().begin(), t.rows().end());
  return Submodule::span(s.modulus(), s.rank(), gens);
}

Submodule project(const Submodule& s, const std::vector<std::size_t>& coords) {
  Matrix gens;
  for (const auto& row : s.rows()) {
    Vec v;
    v.reserve(coords.size());
    for (auto c : coords) {
      if (c >= s.rank()) throw Error("project: coordinate out of range");
      v.push_back(row[c]);
    }
    gens.push_back(std::move(v));
  }
  return Submodule::span(s.modulus(), coords.size(), gens);
}

Submodule coordinate_preimage(const Submodule& t, std::size_t rank,
                              const std::vector<std::size_t>& coords) {
  if (t.rank() != coords.size()) throw Error("coordinate_preimage: rank mismatch");
  std::vector<bool> used(rank, false);
  for (auto c : coords) {
    if (c >= rank || used[c]) throw Error("coordinate_preimage: coordinates must be distinct");
    used[c] = true;
  }
  Matrix gens;
  for (const auto& row : t.rows()) {
    Vec v(rank, 0);
    for (std::size_t i = 0; i < coords.size(); ++i) v[coords[i]] = row[i];
    gens.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < rank; ++i) {
    if (used[i]) continue;
    Vec v(rank, 0);
    v[i] = 1;
    gens.push_back(std::move(v));
  }
  return Submodule::span(t.modulus(), rank, gens);
}

bool member(const Submodule& s, const Vec& v) { return s.contains(v); }

std::optional<Vec> solve_left(const Matrix& y, const Vec& z, int modulus) {
  const ModRing ring(modulus);
  const std::size_t q = y.size(), c = z.size();
  Matrix aug;
  for (std::size_t i = 0; i < q; ++i) {
    if (y[i].size() != c) throw Error("solve_left: shape mismatch");
    Vec v(y[i]);
    v.resize(c + q, 0);
    v[c + i] = 1;
    aug.push_back(std::move(v));
  }
  Matrix h = howell(aug, modulus, c + q);
  Vec v(z);
  for (auto& x : v) x = ring.reduce(x);
  v.resize(c + q, 0);
  for (const auto& row : h) {
    const int j = pivot_col(row);
    if (j >= static_cast<int>(c)) break;
    const int p = row[j];
    if (v[j] % p != 0) return std::nullopt;
    axpy(ring, v, ring.neg(v[j] / p), row);
  }
  for (std::size_t j = 0; j < c; ++j) {
    if (v[j] != 0) return std::nullopt;
  }
  Vec out(q);
  for (std::size_t i = 0; i < q; ++i) out[i] = ring.neg(v[c + i]);
  return out;
}

ChainResult chain_stabilize(const std::function<Submodule(std::size_t)>& next, std::size_t cap,
                            std::size_t width) {
  ChainResult res;
  for (std::size_t i = 0; i < cap; ++i) {
    res.values.push_back(next(i));
    if (i < width) continue;
    bool same = true;
    for (std::size_t k = i - width; k < i; ++k) same = same && res.values[k] == res.values[i];
    if (same) {
      res.status = ChainResult::Status::Stable;
      res.index = i - width;
      res.value = res.values[i - width];
      return res;
    }
  }
  if (!res.values.empty()) {
    res.value = res.values.back();
    res.index = res.values.size() - 1;
  }
  return res;
}

}  // namespace shiftlab::modlin

#include "hsc/linalg.hpp"

#include <algorithm>
#include <set>

#include "hsc/errors.hpp"

namespace hsc {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
  return out;
}

void ExactMatrix::check(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw IndexOutOfRange("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
}

GaussianRational ExactMatrix::at(std::size_t i, std::size_t j) const {
  check(i, j);
  auto it = entries_.find({i, j});
  return it == entries_.end() ? GaussianRational() : it->second;
}

void ExactMatrix::set(std::size_t i, std::size_t j, const GaussianRational& v) {
  check(i, j);
  if (v.is_zero()) entries_.erase({i, j});
  else entries_[{i, j}] = v;
}

void ExactMatrix::add(std::size_t i, std::size_t j, const GaussianRational& v) {
  check(i, j);
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({i, j}, v);
  if (inserted) return;
  it->second += v;
  if (it->second.is_zero()) entries_.erase(it);
}

bool ExactMatrix::is_diagonal() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.first.first == e.first.second; });
}

Vector ExactMatrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vector out(rows_);
  for (const auto& [ij, c] : entries_) out[ij.first] += c * v[ij.second];
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
  std::vector<std::vector<std::pair<std::size_t, GaussianRational>>> b_rows(b.rows_);
  for (const auto& [ij, c] : b.entries_) b_rows[ij.first].emplace_back(ij.second, c);
  ExactMatrix out(a.rows_, b.cols_);
  for (const auto& [ij, c] : a.entries_)
    for (const auto& [k, d] : b_rows[ij.second]) out.add(ij.first, k, c * d);
  return out;
}

std::size_t VectorBasis::n() const {
  if (slice) return slice->n;
  if (states.empty()) throw DimensionMismatch("vector basis over an empty state list has no dimension");
  return states.front().n();
}

SpinorPolynomial VectorBasis::element(std::size_t i) const { return from_coordinates(n(), vectors.at(i), states); }

std::vector<SpinorPolynomial> VectorBasis::elements() const {
  std::vector<SpinorPolynomial> out;
  out.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) out.push_back(element(i));
  return out;
}

Vector coordinates(const SpinorPolynomial& u, const std::vector<BasisState>& states) {
  Vector out(states.size());
  for (const auto& [s, c] : u.terms()) {
    auto it = std::lower_bound(states.begin(), states.end(), s);
    if (it == states.end() || *it != s) throw PreconditionViolation("element has support outside the given states");
    out[static_cast<std::size_t>(it - states.begin())] = c;
  }
  return out;
}

SpinorPolynomial from_coordinates(std::size_t n, const Vector& v, const std::vector<BasisState>& states) {
  if (v.size() != states.size()) throw DimensionMismatch("coordinate vector length differs from state count");
  SpinorPolynomial out(n);
  for (std::size_t i = 0; i < v.size(); ++i) out.add_term(states[i], v[i]);
  return out;
}

OperatorMatrix matrix_of(const WeylOperator& op, const std::vector<BasisState>& domain) {
  std::vector<SpinorPolynomial> images;
  images.reserve(domain.size());
  std::set<BasisState> codomain_set;
  for (const auto& s : domain) {
    images.push_back(apply(op, s));
    for (const auto& [t, c] : images.back().terms()) codomain_set.insert(t);
  }
  std::vector<BasisState> codomain(codomain_set.begin(), codomain_set.end());
  ExactMatrix m(codomain.size(), domain.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [t, c] : images[j].terms()) {
      auto it = std::lower_bound(codomain.begin(), codomain.end(), t);
      m.set(static_cast<std::size_t>(it - codomain.begin()), j, c);
    }
  return {std::move(m), std::move(codomain)};
}

// --- elimination --------------------------------------------------------------

namespace {

using SparseRow = std::vector<std::pair<std::size_t, GaussianRational>>;

// row - factor * pivot
SparseRow subtract_scaled(const SparseRow& row, const GaussianRational& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -(factor * b->second));
      ++b;
    } else {
      GaussianRational v = a->second - factor * b->second;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

GaussianRational entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? it->second : GaussianRational();
}

Echelon eliminate(std::vector<SparseRow> input) {
  std::map<std::size_t, SparseRow> pivot_rows;
  for (auto& row : input) {
    while (!row.empty()) {
      auto it = pivot_rows.find(row.front().first);
      if (it == pivot_rows.end()) break;
      row = subtract_scaled(row, row.front().second, it->second);
    }
    if (row.empty()) continue;
    const GaussianRational inv = row.front().second.inverse();
    for (auto& [c, v] : row) v *= inv;
    pivot_rows.emplace(row.front().first, std::move(row));
  }
  // Back substitution: clear each pivot column from the rows above it.
  for (auto p = pivot_rows.rbegin(); p != pivot_rows.rend(); ++p) {
    const std::size_t col = p->first;
    for (auto q = pivot_rows.begin(); q != pivot_rows.end() && q->first < col; ++q) {
      GaussianRational f = entry(q->second, col);
      if (!f.is_zero()) q->second = subtract_scaled(q->second, f, p->second);
    }
  }
  Echelon out;
  for (auto& [col, row] : pivot_rows) {
    out.pivots.push_back(col);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<SparseRow> sparse_rows(const ExactMatrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (const auto& [ij, c] : m.entries()) rows[ij.first].emplace_back(ij.second, c);
  return rows;
}

}  // namespace

Echelon rref(const ExactMatrix& m) { return eliminate(sparse_rows(m)); }

std::size_t rank(const ExactMatrix& m) { return rref(m).pivots.size(); }

std::size_t rank(const std::vector<Vector>& vectors) {
  std::vector<SparseRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    SparseRow row;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) row.emplace_back(j, v[j]);
    rows.push_back(std::move(row));
  }
  return eliminate(std::move(rows)).pivots.size();
}

std::vector<Vector> nullspace(const ExactMatrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -entry(e.rows[i], f);
    out.push_back(std::move(v));
  }
  for (const auto& v : out) {
    const Vector mv = m * v;
    if (!std::all_of(mv.begin(), mv.end(), [](const auto& x) { return x.is_zero(); }))
      throw InvariantViolation("nullspace vector is not annihilated by the matrix");
  }
  return out;
}

std::optional<Vector> solve(const ExactMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  std::vector<SparseRow> rows = sparse_rows(m);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) rows[i].emplace_back(m.cols(), b[i]);
  const Echelon e = eliminate(std::move(rows));
  Vector x(m.cols());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = entry(e.rows[i], m.cols());
  }
  return x;
}

VectorBasis stack_and_intersect(const std::vector<WeylOperator>& ops, const std::vector<BasisState>& domain) {
  std::vector<OperatorMatrix> blocks;
  std::set<BasisState> union_set;
  for (const auto& op : ops) {
    if (!domain.empty() && op.n() != domain.front().n()) throw DimensionMismatch("operator and domain differ in n");
    blocks.push_back(matrix_of(op, domain));
    union_set.insert(blocks.back().codomain.begin(), blocks.back().codomain.end());
  }
  const std::vector<BasisState> codomain(union_set.begin(), union_set.end());
  ExactMatrix stacked(codomain.size() * blocks.size(), domain.size());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& blk = blocks[k];
    for (const auto& [ij, c] : blk.matrix.entries()) {
      auto it = std::lower_bound(codomain.begin(), codomain.end(), blk.codomain[ij.first]);
      stacked.set(k * codomain.size() + static_cast<std::size_t>(it - codomain.begin()), ij.second, c);
    }
  }
  return {domain, nullspace(stacked), std::nullopt};
}

ExactMatrix gram(const std::vector<SpinorPolynomial>& u, const std::vector<SpinorPolynomial>& v) {
  ExactMatrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out.set(i, j, fischer_pair(u[i], v[j]));
  return out;
}

ExactMatrix gram(const VectorBasis& u, const VectorBasis& v) {
  if (!u.vectors.empty() && !v.vectors.empty() && u.n() != v.n())
    throw DimensionMismatch("gram: bases live in different dimensions");
  return gram(u.elements(), v.elements());
}

}  // namespace hsc

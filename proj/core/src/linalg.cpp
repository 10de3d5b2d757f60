#include "qg/linalg.hpp"

#include <algorithm>
#include <map>

#include "qg/error.hpp"

namespace qg {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<QScalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw DimensionError("matrix data size does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = QScalar(1);
  return m;
}

Matrix Matrix::diagonal(const std::vector<QScalar>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::column(const Vector& v) { return Matrix(v.size(), 1, v); }
Matrix Matrix::row(const Vector& v) { return Matrix(1, v.size(), v); }

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const QScalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const QScalar& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator*(const QScalar& s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::conjugate(Involution inv) const {
  Matrix r = *this;
  for (auto& x : r.data_) x = x.conjugate(inv);
  return r;
}

QScalar Matrix::trace() const {
  QScalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const QScalar& x) { return x.is_zero(); });
}

namespace {

std::size_t complexity(const QScalar& x) {
  return x.num().term_count() + x.den().term_count() + static_cast<std::size_t>(x.num().degree() + x.den().degree());
}

}  // namespace

Matrix Matrix::inverse() const {
  if (!is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = n;
    for (std::size_t r = col; r < n; ++r)
      if (!a(r, col).is_zero() && (best == n || complexity(a(r, col)) < complexity(a(best, col)))) best = r;
    if (best == n) throw InvariantViolation("matrix is singular");
    if (best != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(best, j), a(col, j));
        std::swap(inv(best, j), inv(col, j));
      }
    QScalar p = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      QScalar f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<Vector> Matrix::nullspace() const {
  std::vector<SparseRow> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) rows[i].emplace_back(j, (*this)(i, j));
  return qg::nullspace(rows, cols_);
}

std::size_t Matrix::rank() const { return cols_ - nullspace().size(); }

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += "\"" + (*this)(i, j).to_string() + "\"";
    }
    s += "]";
  }
  return s + "]";
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.rows(); ++j)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(j, l).is_zero()) r(i * b.rows() + j, k * b.cols() + l) = a(i, k) * b(j, l);
    }
  return r;
}

// ---------------------------------------------------------------- nullspace

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t invmod(std::uint64_t a) {
  std::uint64_t r = 1, e = kPrime - 2;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

/// Indices of a maximal subset of rows whose images at q = q0 (mod p) are independent.
/// Independence after specialization implies independence over Q(q).
std::optional<std::vector<std::size_t>> independent_rows_mod_p(const std::vector<SparseRow>& rows, std::size_t ncols,
                                                                std::uint64_t q0) {
  std::map<std::size_t, std::vector<std::uint64_t>> pivots;  // RREF rows keyed by pivot column
  std::vector<std::size_t> chosen;
  std::vector<std::uint64_t> dense(ncols);
  for (std::size_t ri = 0; ri < rows.size() && chosen.size() < ncols; ++ri) {
    std::fill(dense.begin(), dense.end(), 0);
    bool any = false;
    for (const auto& [c, x] : rows[ri]) {
      auto v = x.evaluate_mod(q0, kPrime);
      if (!v) return std::nullopt;
      dense[c] = *v;
      any = any || *v != 0;
    }
    if (!any) continue;
    for (auto& [pc, prow] : pivots) {
      std::uint64_t f = dense[pc];
      if (f == 0) continue;
      for (std::size_t j = 0; j < ncols; ++j)
        if (prow[j]) dense[j] = (dense[j] + kPrime - mulmod(f, prow[j])) % kPrime;
    }
    std::size_t pc = ncols;
    for (std::size_t j = 0; j < ncols; ++j)
      if (dense[j]) {
        pc = j;
        break;
      }
    if (pc == ncols) continue;
    std::uint64_t inv = invmod(dense[pc]);
    for (auto& x : dense) x = mulmod(x, inv);
    for (auto& [oc, orow] : pivots) {
      std::uint64_t f = orow[pc];
      if (f == 0) continue;
      for (std::size_t j = 0; j < ncols; ++j)
        if (dense[j]) orow[j] = (orow[j] + kPrime - mulmod(f, dense[j])) % kPrime;
    }
    pivots.emplace(pc, dense);
    chosen.push_back(ri);
  }
  return chosen;
}

/// Symbolic reduced row echelon form, sparse. Pivot rows are normalized to 1 at the pivot.
class SparseRref {
 public:
  explicit SparseRref(std::size_t ncols) : ncols_(ncols) {}

  /// Returns true if the row was independent of the current pivots.
  bool insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    auto best = row.begin();
    for (auto it = row.begin(); it != row.end(); ++it)
      if (complexity(it->second) < complexity(best->second)) best = it;
    const std::size_t pc = best->first;
    QScalar inv = best->second.inverse();
    for (auto& e : row) e.second *= inv;
    for (auto& [oc, orow] : pivots_) {
      auto it = std::lower_bound(orow.begin(), orow.end(), pc, [](const auto& e, std::size_t c) { return e.first < c; });
      if (it == orow.end() || it->first != pc) continue;
      QScalar f = it->second;
      orow = axpy(orow, -f, row);
    }
    pivots_.emplace(pc, std::move(row));
    return true;
  }

  std::vector<Vector> kernel() const {
    std::vector<Vector> out;
    for (std::size_t f = 0; f < ncols_; ++f) {
      if (pivots_.count(f)) continue;
      Vector v(ncols_);
      v[f] = QScalar(1);
      for (const auto& [pc, prow] : pivots_) {
        auto it = std::lower_bound(prow.begin(), prow.end(), f, [](const auto& e, std::size_t c) { return e.first < c; });
        if (it != prow.end() && it->first == f) v[pc] = -it->second;
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  SparseRow reduce(SparseRow row) const {
    std::vector<std::pair<std::size_t, QScalar>> hits;
    for (const auto& [c, x] : row)
      if (pivots_.count(c)) hits.emplace_back(c, x);
    for (const auto& [c, x] : hits) row = axpy(row, -x, pivots_.at(c));
    return row;
  }

  static SparseRow axpy(const SparseRow& a, const QScalar& f, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
        out.push_back(*ia++);
      } else if (ia == a.end() || ib->first < ia->first) {
        out.emplace_back(ib->first, f * ib->second);
        ++ib;
      } else {
        QScalar s = ia->second + f * ib->second;
        if (!s.is_zero()) out.emplace_back(ia->first, std::move(s));
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  std::size_t ncols_;
  std::map<std::size_t, SparseRow> pivots_;
};

SparseRow normalized(const SparseRow& row, std::size_t ncols) {
  std::map<std::size_t, QScalar> acc;
  for (const auto& [c, x] : row) {
    if (c >= ncols) throw DimensionError("sparse row column out of range");
    acc[c] += x;
  }
  SparseRow out;
  for (auto& [c, x] : acc)
    if (!x.is_zero()) out.emplace_back(c, x);
  return out;
}

bool annihilates(const SparseRow& row, const Vector& v) {
  QScalar s;
  for (const auto& [c, x] : row)
    if (!v[c].is_zero()) s += x * v[c];
  return s.is_zero();
}

}  // namespace

std::vector<Vector> echelon_basis(std::vector<Vector> vectors) {
  std::vector<Vector> out;
  if (vectors.empty()) return out;
  const std::size_t n = vectors.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < vectors.size(); ++col) {
    std::size_t piv = vectors.size();
    for (std::size_t i = r; i < vectors.size(); ++i)
      if (!vectors[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv == vectors.size()) continue;
    std::swap(vectors[r], vectors[piv]);
    QScalar inv = vectors[r][col].inverse();
    for (auto& x : vectors[r]) x *= inv;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (i == r || vectors[i][col].is_zero()) continue;
      QScalar f = vectors[i][col];
      for (std::size_t j = 0; j < n; ++j)
        if (!vectors[r][j].is_zero()) vectors[i][j] -= f * vectors[r][j];
    }
    ++r;
  }
  vectors.resize(r);
  return vectors;
}

std::vector<Vector> nullspace(const std::vector<SparseRow>& input, std::size_t ncols) {
  if (ncols == 0) return {};
  std::vector<SparseRow> rows;
  rows.reserve(input.size());
  for (const auto& r : input) {
    auto n = normalized(r, ncols);
    if (!n.empty()) rows.push_back(std::move(n));
  }
  // Sparse rows first: they make cheap pivots.
  std::stable_sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });

  static constexpr std::uint64_t kPoints[] = {1000003, 2718281828459045ULL % kPrime, 31415926535ULL, 577215664901ULL};
  std::optional<std::vector<std::size_t>> chosen;
  for (std::uint64_t q0 : kPoints) {
    chosen = independent_rows_mod_p(rows, ncols, q0);
    if (chosen) break;
  }

  SparseRref rref(ncols);
  if (chosen) {
    for (std::size_t i : *chosen)
      if (!rref.insert(rows[i])) throw InvariantViolation("nullspace: modular independence not reproduced");
    auto basis = rref.kernel();
    bool ok = true;
    for (const auto& row : rows) {
      for (const auto& v : basis)
        if (!annihilates(row, v)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) return echelon_basis(std::move(basis));
  }
  // Unlucky specialization: eliminate every row symbolically.
  for (const auto& row : rows) rref.insert(row);
  return echelon_basis(rref.kernel());
}

}  // namespace qg

#include "qg/hecke.hpp"

#include <numeric>

#include "qg/error.hpp"
#include "qg/presentation.hpp"

namespace qg {

namespace {

Matrix sigma2(const QScalar& q) {
  Matrix E = Matrix::column({QScalar(0), QScalar(1), -q, QScalar(0)});
  Matrix Ep = Matrix::row({QScalar(0), -q.inverse(), QScalar(1), QScalar(0)});
  return Matrix::identity(4) + (E * Ep) * q;
}

std::size_t pow2(int n) { return std::size_t{1} << n; }

}  // namespace

HeckeOp hecke_sigma(int n, int k, const QScalar& q) {
  if (n < 2 || k < 1 || k >= n) throw DimensionError("hecke_sigma needs 1 <= k < n");
  if (q.is_zero()) throw UnsupportedRegime("q must be nonzero");
  Matrix m = kron(kron(Matrix::identity(pow2(k - 1)), sigma2(q)), Matrix::identity(pow2(n - k - 1)));
  const Matrix one = Matrix::identity(m.rows());
  if (!((m - one) * (m + one * (q * q))).is_zero()) throw InvariantViolation("σ violates (σ-1)(σ+q²) = 0");
  return HeckeOp{n, k, std::move(m)};
}

std::vector<int> reduced_word(std::vector<int> perm) {
  std::vector<int> word;
  for (std::size_t pass = 0; pass < perm.size(); ++pass)
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
      if (perm[i] > perm[i + 1]) {
        std::swap(perm[i], perm[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
      }
  return word;
}

Matrix symmetrizer(int n, const QScalar& q) {
  if (n < 1) throw DimensionError("symmetrizer needs n >= 1");
  const std::size_t dim = pow2(n);
  if (n == 1) return Matrix::identity(dim);
  std::vector<Matrix> sigma;
  for (int k = 1; k < n; ++k) sigma.push_back(hecke_sigma(n, k, q).matrix);
  const QScalar qm2 = q.pow(-2);
  Matrix S(dim, dim);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const auto word = reduced_word(perm);
    Matrix term = Matrix::identity(dim);
    for (int k : word) term = term * sigma[static_cast<std::size_t>(k - 1)];
    S = S + term * qm2.pow(static_cast<int>(word.size()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return S;
}

std::vector<Vector> sym_subspace(int n, const QScalar& q) {
  if (n < 0) throw DimensionError("sym_subspace needs n >= 0");
  const std::size_t dim = pow2(n);
  std::vector<Vector> basis;
  if (n <= 1) {
    for (std::size_t i = 0; i < dim; ++i) {
      Vector v(dim, QScalar(0));
      v[i] = QScalar(1);
      basis.push_back(std::move(v));
    }
  } else {
    std::vector<SparseRow> rows;
    for (int k = 1; k < n; ++k) {
      Matrix m = hecke_sigma(n, k, q).matrix - Matrix::identity(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        SparseRow r;
        for (std::size_t j = 0; j < dim; ++j)
          if (!m(i, j).is_zero()) r.emplace_back(j, m(i, j));
        if (!r.empty()) rows.push_back(std::move(r));
      }
    }
    basis = nullspace(rows, dim);
  }
  if (basis.size() != static_cast<std::size_t>(n + 1))
    throw InvariantViolation("dim K^{n/2} = " + std::to_string(basis.size()) + ", expected " + std::to_string(n + 1));
  return basis;
}

}  // namespace qg

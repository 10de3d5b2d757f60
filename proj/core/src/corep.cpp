#include "qg/corep.hpp"

#include <cstdlib>
#include <functional>
#include <optional>

#include "qg/error.hpp"
#include "qg/hecke.hpp"
#include "qg/hopf.hpp"

namespace qg {

namespace {

using EntryFn = std::function<NCPoly(std::size_t, std::size_t)>;

void require_same(const Presentation& a, const Presentation& b) {
  if (!(a == b)) throw AlphabetMismatch("corepresentations over different presentations");
}

/// Rows of A (greedy, in order) forming an invertible square block.
std::vector<std::size_t> independent_rows(const Matrix& A) {
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < A.rows() && chosen.size() < A.cols(); ++r) {
    Matrix sub(chosen.size() + 1, A.cols());
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = 0; j < A.cols(); ++j) sub(i, j) = A(chosen[i], j);
    for (std::size_t j = 0; j < A.cols(); ++j) sub(chosen.size(), j) = A(r, j);
    if (sub.rank() == chosen.size() + 1) chosen.push_back(r);
  }
  return chosen;
}

/// Solves W A = A v for v, where W is given entrywise and A has full column rank.
CorepMatrix subcorep_impl(const Presentation& P, std::size_t m, const EntryFn& W, const Matrix& A) {
  if (A.rows() != m) throw DimensionError("subcorep: A must have dim(w) rows");
  const std::size_t k = A.cols();
  const auto rows = independent_rows(A);
  if (rows.size() != k) throw DimensionError("subcorep: A must have full column rank");
  Matrix block(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) block(i, j) = A(rows[i], j);
  const Matrix inv = block.inverse();

  // (W A)_{I,b}, computed row by row on demand.
  auto WA_row = [&](std::size_t I) {
    std::vector<NCPoly> out(k);
    for (std::size_t J = 0; J < m; ++J) {
      bool any = false;
      for (std::size_t b = 0; b < k && !any; ++b) any = !A(J, b).is_zero();
      if (!any) continue;
      const NCPoly x = W(I, J);
      for (std::size_t b = 0; b < k; ++b)
        if (!A(J, b).is_zero()) out[b].add_scaled(x, A(J, b));
    }
    return out;
  };
  std::vector<std::vector<NCPoly>> pivot_rows;
  for (std::size_t r : rows) pivot_rows.push_back(WA_row(r));
  std::vector<NCPoly> v(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      NCPoly s;
      for (std::size_t i = 0; i < k; ++i)
        if (!inv(a, i).is_zero()) s.add_scaled(pivot_rows[i][b], inv(a, i));
      v[a * k + b] = P.reduce(s);
    }
  for (std::size_t I = 0; I < m; ++I) {
    auto lhs = WA_row(I);
    for (std::size_t b = 0; b < k; ++b) {
      NCPoly rhs;
      for (std::size_t c = 0; c < k; ++c)
        if (!A(I, c).is_zero()) rhs.add_scaled(v[c * k + b], A(I, c));
      if (P.reduce(lhs[b]) != rhs)
        throw InvariantViolation("subspace is not invariant: row " + std::to_string(I) + ", column " +
                                 std::to_string(b) + " of wA - Av is " + P.format(P.reduce(lhs[b]) - rhs));
    }
  }
  return CorepMatrix(P, k, std::move(v));
}

}  // namespace

Report check_corep(const Presentation& P, std::size_t dim, const std::vector<NCPoly>& entries) {
  Report rep;
  rep.title = "corepresentation of dimension " + std::to_string(dim);
  if (entries.size() != dim * dim) throw DimensionError("corepresentation needs dim² entries");
  std::string delta_witness, counit_witness;
  for (std::size_t a = 0; a < dim && delta_witness.empty(); ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      TensorPoly rhs(2);
      for (std::size_t c = 0; c < dim; ++c)
        rhs += TensorPoly::product_of({entries[a * dim + c], entries[c * dim + b]});
      TensorPoly lhs = delta(entries[a * dim + b], P);
      if (lhs != rhs) {
        delta_witness = "entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "): Δv - Σ v⊗v = " + P.format(lhs - rhs);
        break;
      }
    }
  for (std::size_t a = 0; a < dim && counit_witness.empty(); ++a)
    for (std::size_t b = 0; b < dim; ++b)
      if (counit(entries[a * dim + b], P) != QScalar(a == b ? 1 : 0)) {
        counit_witness = "entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
        break;
      }
  rep.add("Δv_ab = Σ_c v_ac⊗v_cb", delta_witness.empty(), {}, delta_witness);
  rep.add("ε(v_ab) = δ_ab", counit_witness.empty(), {}, counit_witness);
  return rep;
}

CorepMatrix::CorepMatrix(const Presentation& P, std::size_t dim, std::vector<NCPoly> entries)
    : P_(P), dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim * dim) throw DimensionError("corepresentation needs dim² entries");
  for (auto& e : entries_) e = P_.reduce(e);
  Report r = check_corep(P_, dim_, entries_);
  if (!r.passed()) throw InvariantViolation("not a corepresentation: " + r.first_failure()->witness);
}

std::string CorepMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t a = 0; a < dim_; ++a) {
    s += a ? ",\n [" : "[";
    for (std::size_t b = 0; b < dim_; ++b) s += (b ? ", \"" : "\"") + P_.format((*this)(a, b)) + "\"";
    s += "]";
  }
  return s + "]";
}

CorepMatrix fundamental(const Presentation& P) {
  const std::size_t n = static_cast<std::size_t>(P.N());
  std::vector<NCPoly> e;
  for (std::size_t i = 0; i < n * n; ++i) e.push_back(NCPoly::generator(static_cast<Letter>(i)));
  return CorepMatrix(P, n, std::move(e));
}

CorepMatrix trivial(const Presentation& P) { return CorepMatrix(P, 1, {NCPoly(1)}); }

CorepMatrix direct_sum(const CorepMatrix& v, const CorepMatrix& w) {
  require_same(v.presentation(), w.presentation());
  const std::size_t n = v.dim() + w.dim();
  std::vector<NCPoly> e(n * n);
  for (std::size_t a = 0; a < v.dim(); ++a)
    for (std::size_t b = 0; b < v.dim(); ++b) e[a * n + b] = v(a, b);
  for (std::size_t a = 0; a < w.dim(); ++a)
    for (std::size_t b = 0; b < w.dim(); ++b) e[(v.dim() + a) * n + v.dim() + b] = w(a, b);
  return CorepMatrix(v.presentation(), n, std::move(e));
}

CorepMatrix tensor_prod(const CorepMatrix& v, const CorepMatrix& w) {
  require_same(v.presentation(), w.presentation());
  const std::size_t dv = v.dim(), dw = w.dim(), n = dv * dw;
  std::vector<NCPoly> e(n * n);
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j)
      for (std::size_t k = 0; k < dv; ++k)
        for (std::size_t l = 0; l < dw; ++l) e[(i * dw + j) * n + k * dw + l] = v(i, k) * w(j, l);
  return CorepMatrix(v.presentation(), n, std::move(e));
}

CorepMatrix contragredient(const CorepMatrix& v) {
  const std::size_t n = v.dim();
  std::vector<NCPoly> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = antipode(v(j, i), v.presentation());
  return CorepMatrix(v.presentation(), n, std::move(e));
}

std::vector<Matrix> mor_space(const CorepMatrix& v, const CorepMatrix& w) {
  require_same(v.presentation(), w.presentation());
  const std::size_t dv = v.dim(), dw = w.dim();
  auto var = [dv](std::size_t r, std::size_t s) { return r * dv + s; };
  std::vector<SparseRow> rows;
  // Entry (r,b) of A v - w A, split by normal word.
  for (std::size_t r = 0; r < dw; ++r)
    for (std::size_t b = 0; b < dv; ++b) {
      std::map<Word, std::map<std::size_t, QScalar>> eq;
      for (std::size_t s = 0; s < dv; ++s)
        for (const auto& [word, c] : v(s, b).terms()) eq[word][var(r, s)] += c;
      for (std::size_t c = 0; c < dw; ++c)
        for (const auto& [word, x] : w(r, c).terms()) eq[word][var(c, b)] -= x;
      for (auto& [word, coeffs] : eq) {
        SparseRow row;
        for (auto& [col, x] : coeffs)
          if (!x.is_zero()) row.emplace_back(col, x);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  std::vector<Matrix> out;
  for (const auto& x : nullspace(rows, dv * dw)) out.emplace_back(dw, dv, x);
  return out;
}

CorepMatrix subcorep(const CorepMatrix& w, const Matrix& A) {
  return subcorep_impl(w.presentation(), w.dim(), [&](std::size_t i, std::size_t j) { return w(i, j); }, A);
}

Matrix spin_basis(int n, const QScalar& q) {
  const auto basis = sym_subspace(n, q);
  const std::size_t m = std::size_t{1} << n;
  Matrix A(m, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t i = 0; i < m; ++i) A(i, b) = basis[b][i];
  return A;
}

CorepMatrix spin_corep(int two_l, const Presentation& P) {
  if (P.N() != 2) throw UnsupportedRegime("spin coreps are defined for 2×2 presentations");
  if (two_l < 0) throw DimensionError("spin must be non-negative");
  if (two_l == 0) return trivial(P);
  // q is read off the E relation so that numeric presentations use their own parameter.
  std::optional<QScalar> q;
  for (const auto& r : P.relations())
    if (r.s == 0 && r.t == 2 && r.E(0, 0).is_zero() && r.E(1, 0) == QScalar(1) && r.E(3, 0).is_zero()) q = -r.E(2, 0);
  if (!q) throw UnsupportedRegime("spin coreps need the standard E = e1⊗e2 - q e2⊗e1");
  const int n = two_l;
  const std::size_t m = std::size_t{1} << n;
  auto W = [&](std::size_t I, std::size_t J) {
    Word w(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
      w[static_cast<std::size_t>(k)] = static_cast<Letter>((I & 1) * 2 + (J & 1));
      I >>= 1;
      J >>= 1;
    }
    return P.rewrite().reduce_word(w);
  };
  return subcorep_impl(P, m, W, spin_basis(n, *q));
}

std::string spin_label(int two_l) {
  return two_l % 2 == 0 ? std::to_string(two_l / 2) : std::to_string(two_l) + "/2";
}

CGTable clebsch_gordan_check(int two_a, int two_b, const Presentation& P) {
  CGTable t;
  t.two_a = two_a;
  t.two_b = two_b;
  t.report.title = "Clebsch-Gordan " + spin_label(two_a) + " ⊗ " + spin_label(two_b);
  const CorepMatrix va = spin_corep(two_a, P);
  const CorepMatrix vb = spin_corep(two_b, P);
  const CorepMatrix prod = tensor_prod(va, vb);
  const int lo = std::abs(two_a - two_b), hi = two_a + two_b;
  for (int two_c = 0; two_c <= hi; ++two_c) {
    const CorepMatrix vc = two_c == two_a ? va : two_c == two_b ? vb : spin_corep(two_c, P);
    const std::size_t dim = mor_space(vc, prod).size();
    t.multiplicity[two_c] = dim;
    const std::size_t expected = (two_c >= lo && (hi - two_c) % 2 == 0) ? 1 : 0;
    t.report.add("multiplicity of spin " + spin_label(two_c), dim == expected,
                 std::to_string(dim) + ", expected " + std::to_string(expected));
  }
  return t;
}

Report check_lorentz_X(const Matrix& X, const Presentation& P, Involution inv) {
  if (X.rows() != 4 || X.cols() != 4) throw DimensionError("X must be 4×4");
  if (P.N() != 2) throw UnsupportedRegime("the Lorentz checker needs a 2×2 presentation");
  Report rep;
  rep.title = "quantum Lorentz conditions for X";

  rep.add("(iv) X invertible", X.rank() == 4, "rank " + std::to_string(X.rank()));

  Matrix tau(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) tau(j * 2 + i, i * 2 + j) = QScalar(1);
  {
    const Matrix Y = tau * X.conjugate(inv) * tau;
    std::optional<QScalar> c;
    for (std::size_t i = 0; i < 16 && !c; ++i)
      if (!X.data()[i].is_zero()) c = Y.data()[i] / X.data()[i];
    const bool ok = c && !c->is_zero() && Y == X * *c;
    rep.add("(v) τ·conj(X)·τ = c·X", ok, ok ? "c = " + c->to_string() : "no such c");
  }
  {
    const Relation* E = nullptr;
    for (const auto& r : P.relations())
      if (r.s == 0 && r.t == 2) E = &r;
    if (!E) throw UnsupportedRegime("presentation has no relation E in Mor(1, w⊗w)");
    const Matrix one = Matrix::identity(2);
    const Matrix M1 = kron(one, E->E);
    const Matrix M2 = kron(X, one) * kron(one, X) * kron(E->E, one);
    std::optional<QScalar> k;
    for (std::size_t i = 0; i < M1.data().size() && !k; ++i)
      if (!M1.data()[i].is_zero()) k = M2.data()[i] / M1.data()[i];
    const bool ok = k && !k->is_zero() && M2 == M1 * *k;
    rep.add("(vi) 1⊗E and (X⊗1)(1⊗X)(E⊗1) proportional", ok, ok ? "factor " + k->to_string() : "not proportional");
  }
  if (!P.maps().star) {
    rep.add("(iii) X(w⊗w̄) = (w̄⊗w)X", false, "presentation has no *-structure");
    return rep;
  }
  std::vector<NCPoly> w(4), wb(4);
  for (std::size_t i = 0; i < 4; ++i) {
    w[i] = NCPoly::generator(static_cast<Letter>(i));
    wb[i] = star(w[i], P);
  }
  auto kron_poly = [&](const std::vector<NCPoly>& a, const std::vector<NCPoly>& b) {
    std::vector<NCPoly> r(16);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          for (std::size_t l = 0; l < 2; ++l) r[(i * 2 + j) * 4 + k * 2 + l] = a[i * 2 + k] * b[j * 2 + l];
    return r;
  };
  const auto L = kron_poly(w, wb), R = kron_poly(wb, w);
  std::string witness;
  for (std::size_t r = 0; r < 4 && witness.empty(); ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      NCPoly d;
      for (std::size_t k = 0; k < 4; ++k) {
        d.add_scaled(L[k * 4 + c], X(r, k));
        d.add_scaled(R[r * 4 + k], -X(k, c));
      }
      d = P.reduce(d);
      if (!d.is_zero()) {
        witness = "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " + P.format(d);
        break;
      }
    }
  rep.add("(iii) X(w⊗w̄) = (w̄⊗w)X", witness.empty(), {}, witness);
  return rep;
}

}  // namespace qg

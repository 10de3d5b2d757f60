#include "qg/haar.hpp"

#include <algorithm>

#include "qg/error.hpp"
#include "qg/hopf.hpp"

namespace qg {

namespace {

std::string idx(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return "(" + std::to_string(a + 1) + std::to_string(b + 1) + "," + std::to_string(c + 1) + std::to_string(d + 1) + ")";
}

/// Coefficient rows Σ_e c_e [e]_u = 0 over all normal words u.
std::vector<SparseRow> coefficient_rows(const std::vector<NCPoly>& elements) {
  std::map<Word, SparseRow> rows;
  for (std::size_t e = 0; e < elements.size(); ++e)
    for (const auto& [w, c] : elements[e].terms()) rows[w].emplace_back(e, c);
  std::vector<SparseRow> out;
  for (auto& [w, r] : rows) out.push_back(std::move(r));
  return out;
}

std::vector<NCPoly> sigma_table(const Presentation& P) {
  const Matrix F = f_matrix(1, P).matrix;
  std::vector<NCPoly> t(4);
  for (std::size_t m = 0; m < 2; ++m)
    for (std::size_t n = 0; n < 2; ++n)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          t[m * 2 + n].add_term(Word{static_cast<Letter>(k * 2 + l)}, F(m, k) * F(l, n));
  return t;
}

NCPoly apply_sigma(const NCPoly& x, const std::vector<NCPoly>& table, const Presentation& P) {
  NCPoly r;
  for (const auto& [w, c] : x.terms()) {
    NCPoly t(c);
    for (Letter l : w) t = P.reduce(t * table.at(l));
    r += t;
  }
  return r;
}

void require_cutoff(const PWBasis& B, int two_needed, const std::string& what) {
  if (two_needed > B.two_L())
    throw CutoffTooSmall(what + " needs spin cutoff " + spin_label(two_needed) + ", basis has " + spin_label(B.two_L()),
                         two_needed);
}

}  // namespace

std::pair<int, int> torus_weight(const Word& w) {
  int r = 0, c = 0;
  for (Letter l : w) {
    r += (l / 2 == 0) ? 1 : -1;
    c += (l % 2 == 0) ? 1 : -1;
  }
  return {r, c};
}

PWBasis::PWBasis(const Presentation& P, int two_L) : P_(P), two_L_(two_L) {
  if (P.N() != 2) throw UnsupportedRegime("the Peter-Weyl basis is implemented for 2×2 presentations");
  if (two_L < 0) throw DimensionError("spin cutoff must be non-negative");
  std::vector<NCPoly> elements;
  for (int a = 0; a <= two_L; ++a) {
    coreps_.push_back(spin_corep(a, P));
    const CorepMatrix& v = coreps_.back();
    for (std::size_t m = 0; m < v.dim(); ++m)
      for (std::size_t n = 0; n < v.dim(); ++n) {
        entries_.push_back(PWEntry{a, m, n, v(m, n)});
        elements.push_back(v(m, n));
      }
  }
  words_ = basis_words(P.rewrite(), two_L);
  if (words_.size() != entries_.size() || !nullspace(coefficient_rows(elements), elements.size()).empty())
    throw InvariantViolation("matrix elements up to spin " + spin_label(two_L) + " do not form a basis");

  // h vanishes off the torus-invariant words; on them it is fixed by h(1) = 1 and
  // h(v^α_{mid,mid}) = 0 for integer α > 0.
  std::vector<Word> zero;
  for (const auto& w : words_)
    if (torus_weight(w) == std::pair<int, int>{0, 0}) zero.push_back(w);
  std::vector<const PWEntry*> mids;
  for (const auto& e : entries_)
    if (e.two_alpha % 2 == 0 && e.m == e.n && e.m == static_cast<std::size_t>(e.two_alpha / 2)) mids.push_back(&e);
  if (zero.size() != mids.size()) throw InvariantViolation("weight-zero block is not square");
  const std::size_t k = zero.size();
  Matrix M(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& [w, c] : mids[i]->element.terms()) {
      auto it = std::find(zero.begin(), zero.end(), w);
      if (it == zero.end()) throw InvariantViolation("middle matrix element is not torus invariant");
      M(i, static_cast<std::size_t>(it - zero.begin())) = c;
    }
  }
  const Matrix Minv = M.inverse();
  // M H = e_0, so H = M^{-1} e_0.
  for (std::size_t j = 0; j < k; ++j) haar_table_[zero[j]] = Minv(j, 0);
}

PWBasis build_pw_basis(const Presentation& P, int two_L) { return PWBasis(P, two_L); }

QScalar haar(const NCPoly& x, const PWBasis& B) {
  const NCPoly r = B.presentation().reduce(x);
  if (r.degree() > B.two_L()) require_cutoff(B, r.degree(), "h(" + B.presentation().format(r) + ")");
  QScalar h(0);
  for (const auto& [w, c] : r.terms()) {
    auto it = B.haar_table().find(w);
    if (it != B.haar_table().end()) h += c * it->second;
  }
  return h;
}

FMatrix f_matrix(int two_alpha, const Presentation& P) {
  const CorepMatrix v = spin_corep(two_alpha, P);
  const CorepMatrix vcc = contragredient(contragredient(v));
  const auto mor = mor_space(v, vcc);
  if (mor.size() != 1)
    throw InvariantViolation("Mor(v, v^cc) has dimension " + std::to_string(mor.size()) + " for spin " + spin_label(two_alpha));
  const Matrix& F0 = mor[0];
  FMatrix out{two_alpha, F0, false};
  const QScalar t1 = F0.trace(), t2 = F0.inverse().trace();
  if (auto s = (t2 / t1).sqrt()) {
    Matrix F = F0 * *s;
    if (F.trace().evaluate_at(Rational(1, 2)) < 0) F = F * QScalar(-1);
    out.matrix = std::move(F);
    out.normalized = true;
  }
  return out;
}

Matrix unitarizer(const CorepMatrix& v) {
  const Presentation& P = v.presentation();
  const std::size_t k = v.dim();
  std::vector<NCPoly> vs(k * k);
  for (std::size_t i = 0; i < k * k; ++i) vs[i] = star(v.entries()[i], P);
  std::vector<SparseRow> rows;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = 0; c < k; ++c) {
      std::map<Word, std::map<std::size_t, QScalar>> eq;
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t d = 0; d < k; ++d) {
          const NCPoly prod = P.reduce(v(a, b) * vs[c * k + d]);
          for (const auto& [w, x] : prod.terms()) eq[w][b * k + d] += x;
        }
      eq[Word{}][a * k + c] -= QScalar(1);
      for (auto& [w, coeffs] : eq) {
        SparseRow r;
        for (auto& [col, x] : coeffs)
          if (!x.is_zero()) r.emplace_back(col, x);
        if (!r.empty()) rows.push_back(std::move(r));
      }
    }
  const auto sol = nullspace(rows, k * k);
  if (sol.empty()) throw InvariantViolation("no solution of v P v* = P");
  return Matrix(k, k, sol[0]);
}

Report check_pw_relations(int two_alpha, int two_beta, const PWBasis& B) {
  require_cutoff(B, two_alpha + two_beta, "the orthogonality relations");
  const Presentation& P = B.presentation();
  if (!P.maps().star) throw UnsupportedRegime("orthogonality relations need a *-structure");
  const Involution inv = P.maps().involution;
  Report rep;
  rep.title = "orthogonality relations for spins " + spin_label(two_alpha) + ", " + spin_label(two_beta);
  const CorepMatrix& v = B.corep(two_alpha);
  const CorepMatrix& u = B.corep(two_beta);
  const std::size_t dv = v.dim(), du = u.dim();
  std::vector<NCPoly> us(du * du);
  for (std::size_t i = 0; i < du * du; ++i) us[i] = star(u.entries()[i], P);

  Matrix A(dv, dv), Bm(du, du), C(dv, dv), D(du, du);
  QScalar trF(1), trFi(1);
  if (two_alpha == two_beta) {
    const Matrix F = f_matrix(two_alpha, P).matrix;
    const Matrix Pu = unitarizer(v);
    const Matrix Pbar_inv = Pu.conjugate(inv).inverse();
    trF = F.trace();
    trFi = F.inverse().trace();
    A = Pu;                             // indices a, c
    Bm = F.transpose() * Pbar_inv;      // indices b, d
    C = F.inverse() * Pu;               // indices a, c
    D = Pbar_inv;                       // indices b, d
    rep.add("F_" + spin_label(two_alpha), true, F.to_string());
  }
  std::string wa, wb;
  std::size_t count = 0;
  for (std::size_t a = 0; a < dv; ++a)
    for (std::size_t b = 0; b < dv; ++b)
      for (std::size_t c = 0; c < du; ++c)
        for (std::size_t d = 0; d < du; ++d) {
          ++count;
          const QScalar ha = haar(v(a, b) * us[c * du + d], B);
          const QScalar hb = haar(us[c * du + d] * v(a, b), B);
          QScalar ea(0), eb(0);
          if (two_alpha == two_beta) {
            ea = A(a, c) * Bm(b, d) / trF;
            eb = C(a, c) * D(b, d) / trFi;
          }
          if (wa.empty() && ha != ea)
            wa = "h(v_ab v_cd*) at " + idx(a, b, c, d) + " = " + ha.to_string() + ", expected " + ea.to_string();
          if (wb.empty() && hb != eb)
            wb = "h(v_cd* v_ab) at " + idx(a, b, c, d) + " = " + hb.to_string() + ", expected " + eb.to_string();
        }
  rep.add("h(v_ab v_cd*) relation", wa.empty(), std::to_string(count) + " products", wa);
  rep.add("h(v_cd* v_ab) relation", wb.empty(), std::to_string(count) + " products", wb);
  return rep;
}

NCPoly modular_sigma(const NCPoly& x, const Presentation& P) { return apply_sigma(x, sigma_table(P), P); }

Report check_modular(const PWBasis& B, int max_degree) {
  require_cutoff(B, 2 * max_degree, "the modular identity");
  const Presentation& P = B.presentation();
  const auto table = sigma_table(P);
  const auto words = basis_words(P.rewrite(), max_degree);
  Report rep;
  rep.title = "modular identity h(ab) = h(bσ(a))";
  std::string witness;
  std::size_t count = 0;
  for (const auto& wa : words) {
    const NCPoly a = NCPoly::monomial(wa);
    const NCPoly sa = apply_sigma(a, table, P);
    for (const auto& wb : words) {
      const NCPoly b = NCPoly::monomial(wb);
      ++count;
      const QScalar l = haar(a * b, B), r = haar(b * sa, B);
      if (l != r) {
        witness = "a = " + P.format(a) + ", b = " + P.format(b) + ": " + l.to_string() + " vs " + r.to_string();
        break;
      }
    }
    if (!witness.empty()) break;
  }
  rep.add("h(ab) = h(bσ(a))", witness.empty(), std::to_string(count) + " pairs", witness);
  return rep;
}

Report check_haar_invariance(const PWBasis& B, int max_degree) {
  require_cutoff(B, max_degree, "the invariance check");
  const Presentation& P = B.presentation();
  const auto words = basis_words(P.rewrite(), max_degree);
  auto h_word = [&](const Word& w) { return haar(NCPoly::monomial(w), B); };
  std::string wl, wr, ws;
  for (const auto& w : words) {
    const NCPoly x = NCPoly::monomial(w);
    const NCPoly expected(haar(x, B));
    const TensorPoly& d = P.delta_word(w);
    const NCPoly l = to_poly(contract_leg(d, 0, h_word));
    const NCPoly r = to_poly(contract_leg(d, 1, h_word));
    if (wl.empty() && l != expected) wl = P.format(x) + ": " + P.format(l);
    if (wr.empty() && r != expected) wr = P.format(x) + ": " + P.format(r);
    if (ws.empty() && haar(antipode(x, P), B) != expected.constant_term()) ws = P.format(x);
  }
  Report rep;
  rep.title = "invariance of h";
  const std::string detail = std::to_string(words.size()) + " words";
  rep.add("(h⊗id)Δ(x) = h(x)1", wl.empty(), detail, wl);
  rep.add("(id⊗h)Δ(x) = h(x)1", wr.empty(), detail, wr);
  rep.add("h(S(x)) = h(x)", ws.empty(), detail, ws);
  return rep;
}

Report gram_positivity(int degree, const Rational& q0, const PWBasis& B) {
  require_cutoff(B, 2 * degree, "the Gram matrix");
  const Presentation& P = B.presentation();
  const auto words = basis_words(P.rewrite(), degree);
  const std::size_t n = words.size();
  std::vector<std::vector<Rational>> G(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const NCPoly xs = star(NCPoly::monomial(words[i]), P);
    for (std::size_t j = 0; j < n; ++j) G[i][j] = haar(xs * NCPoly::monomial(words[j]), B).evaluate_at(q0);
  }
  Report rep;
  rep.title = "Gram matrix h(x_i* x_j), degree <= " + std::to_string(degree) + ", q = " + to_string(q0);
  bool symmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) symmetric = symmetric && G[i][j] == G[j][i];
  rep.add("Gram matrix symmetric", symmetric, std::to_string(n) + "×" + std::to_string(n));

  // Gaussian elimination without pivoting: pivot k is the ratio of consecutive
  // leading principal minors, so all pivots > 0 iff all minors > 0.
  auto U = G;
  std::string failure;
  Rational min_pivot;
  for (std::size_t k = 0; k < n && failure.empty(); ++k) {
    if (U[k][k] <= 0) {
      failure = "leading minor " + std::to_string(k + 1) + " is not positive";
      break;
    }
    if (k == 0 || U[k][k] < min_pivot) min_pivot = U[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (U[i][k] == 0) continue;
      const Rational f = U[i][k] / U[k][k];
      for (std::size_t j = k; j < n; ++j) U[i][j] -= f * U[k][j];
    }
  }
  std::string detail = "min pivot " + to_string(min_pivot);
  if (failure.empty() && symmetric) {
    // λ_min >= 1 / ||G^{-1}||_∞ for symmetric positive definite G.
    std::vector<std::vector<Rational>> M = G, I(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
      const Rational p = M[k][k];
      for (std::size_t j = 0; j < n; ++j) {
        M[k][j] /= p;
        I[k][j] /= p;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k || M[i][k] == 0) continue;
        const Rational f = M[i][k];
        for (std::size_t j = 0; j < n; ++j) {
          M[i][j] -= f * M[k][j];
          I[i][j] -= f * I[k][j];
        }
      }
    }
    Rational norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += abs(I[i][j]);
      if (s > norm) norm = s;
    }
    const Rational bound = 1 / norm;
    detail += ", λ_min >= " + to_string(bound) + " ≈ " + std::to_string(bound.get_d());
  }
  rep.add("leading principal minors positive", failure.empty(), detail, failure);
  return rep;
}

}  // namespace qg

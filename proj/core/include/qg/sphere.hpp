#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qg/corep.hpp"
#include "qg/presentation.hpp"
#include "qg/report.hpp"

namespace qg {

/// Sphere parameter c: a value in Q(q), the separate case c = ∞, or a symbolic c
/// (checked by sampling, see check_sphere).
struct SphereParameter {
  enum class Kind { finite, infinite, symbolic };
  Kind kind = Kind::finite;
  QScalar value;

  static SphereParameter finite(QScalar c) { return {Kind::finite, std::move(c)}; }
  static SphereParameter infinite() { return {Kind::infinite, QScalar(0)}; }
  static SphereParameter symbolic() { return {Kind::symbolic, QScalar(0)}; }
  /// c(n) = -q^{2n} / (1+q^{2n})².
  static SphereParameter c_of(int n, const QScalar& q);
  /// Accepts "inf", "c", "c(n)" or a scalar expression in q.
  static SphereParameter parse(const std::string& text, const QScalar& q);
  std::string to_string() const;
};

/// Quantum sphere on e_{-1}, e_0, e_1 (letters 0, 1, 2, written em1, e0, e1)
/// together with the SU_q(2) presentation it is comodule over.
class SpherePresentation {
 public:
  /// Requires a finite or infinite parameter. Throws UnsupportedRegime if q = 0.
  SpherePresentation(QScalar q, SphereParameter c);

  const QScalar& q() const { return q_; }
  const SphereParameter& c() const { return c_; }
  const QScalar& lambda() const { return lambda_; }
  const QScalar& rho() const { return rho_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const RewriteSystem& rewrite() const { return rewrite_; }
  const Presentation& group() const { return group_; }

  /// The four defining relations (each "= 0") for the given ρ.
  std::vector<NCPoly> relations(const QScalar& rho) const;
  std::vector<NCPoly> relations() const { return relations(rho_); }

  NCPoly reduce(const NCPoly& x) const { return rewrite_.reduce(x); }
  /// Antilinear antihomomorphism with e_i* = e_{-i}.
  NCPoly star(const NCPoly& x) const;
  std::string format(const NCPoly& x) const;
  /// Format for B⊗A and B⊗A⊗A tensors.
  std::string format(const TensorPoly& x) const;
  NCPoly parse(const std::string& text) const;

 private:
  QScalar q_;
  SphereParameter c_;
  QScalar lambda_;
  QScalar rho_;
  Alphabet alphabet_;
  RewriteSystem rewrite_;
  Presentation group_;
};

/// u¹ as a 3×3 row-major table over the 2×2 group alphabet, rows/columns -1, 0, 1.
std::vector<NCPoly> sphere_u1(const Presentation& A);

/// Algebra-homomorphism extension of Γ(e_i) = Σ_j e_j⊗u¹_{ji}; both legs reduced.
TensorPoly coaction(const NCPoly& x, const SpherePresentation& S);

/// Relation preservation, coassociativity, counit law and *-compatibility of Γ.
/// `rho_perturbation` is added to ρ in the checked relations only (negative control).
Report check_coaction(const SpherePresentation& S, const QScalar& rho_perturbation = QScalar(0));

/// check_coaction for a parameter; a symbolic c is certified on sample values, which
/// suffices because every checked coefficient is affine in c.
Report check_sphere(const QScalar& q, const SphereParameter& c);

/// Corepresentation check on u¹ and an invertible intertwiner to spin_corep(1).
Report check_u1(const Presentation& A);

}  // namespace qg

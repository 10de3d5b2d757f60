#include "qg/sphere.hpp"

#include <algorithm>
#include <cctype>

#include "qg/error.hpp"
#include "qg/hopf.hpp"
#include "qg/parse.hpp"

namespace qg {

SphereParameter SphereParameter::c_of(int n, const QScalar& q) {
  if (n < 1) throw UnsupportedRegime("c(n) needs n >= 1");
  const QScalar q2n = q.pow(2 * n);
  return finite(-q2n / ((QScalar(1) + q2n) * (QScalar(1) + q2n)));
}

SphereParameter SphereParameter::parse(const std::string& text, const QScalar& q) {
  if (text == "inf" || text == "infinity") return infinite();
  if (text == "c" || text == "symbolic") return symbolic();
  if (text.size() > 3 && text.rfind("c(", 0) == 0 && text.back() == ')') {
    const std::string n = text.substr(2, text.size() - 3);
    if (!n.empty() && n.size() < 5 && std::all_of(n.begin(), n.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      return c_of(std::stoi(n), q);
    throw ParseError("expected c(<n>)", 1, 3);
  }
  QScalar c = parse_scalar(text);
  if (!q.is_constant() || c.is_constant()) return finite(c);
  // c given in terms of q at a numeric q: substitute.
  const Rational q0 = q.constant_value();
  return finite(QScalar(c.evaluate_at(q0)));
}

std::string SphereParameter::to_string() const {
  switch (kind) {
    case Kind::infinite:
      return "inf";
    case Kind::symbolic:
      return "c";
    default:
      return value.to_string();
  }
}

namespace {

constexpr Letter em1 = 0, e0 = 1, e1 = 2;

NCPoly gen(Letter x) { return NCPoly::generator(x); }

}  // namespace

SpherePresentation::SpherePresentation(QScalar q, SphereParameter c)
    : q_(std::move(q)), c_(std::move(c)), alphabet_({"em1", "e0", "e1"}), group_(suq2(q_)) {
  if (c_.kind == SphereParameter::Kind::symbolic)
    throw UnsupportedRegime("a sphere presentation needs a concrete c; use check_sphere for symbolic c");
  const QScalar one(1), q2 = q_ * q_;
  if (c_.kind == SphereParameter::Kind::finite) {
    lambda_ = one - q2;
    rho_ = (one + q2) * (one + q2) * q_.pow(-2) * c_.value + one;
  } else {
    lambda_ = QScalar(0);
    rho_ = (one + q2) * (one + q2) * q_.pow(-2);
  }
  rewrite_ = RewriteSystem::from_relations(3, MonomialOrder::deglex(3), relations());
}

std::vector<NCPoly> SpherePresentation::relations(const QScalar& rho) const {
  const QScalar one(1), q2 = q_ * q_;
  const NCPoly m = gen(em1), z = gen(e0), p = gen(e1);
  return {
      (m * p + p * m * q_.pow(-2)) * (one + q2) + z * z - NCPoly(rho),
      z * m - m * z * q2 - m * lambda_,
      (m * p - p * m) * (one + q2) + z * z * (one - q2) - z * lambda_,
      p * z - z * p * q2 - p * lambda_,
  };
}

NCPoly SpherePresentation::star(const NCPoly& x) const {
  NCPoly r;
  for (const auto& [w, c] : x.terms()) {
    Word s(w.rbegin(), w.rend());
    for (auto& l : s) l = static_cast<Letter>(2 - l);
    r.add_term(s, c.conjugate(Involution::identity));
  }
  return reduce(r);
}

std::string SpherePresentation::format(const NCPoly& x) const { return qg::format(x, alphabet_, rewrite_.order()); }

std::string SpherePresentation::format(const TensorPoly& x) const {
  std::vector<const Alphabet*> a{&alphabet_};
  std::vector<const MonomialOrder*> o{&rewrite_.order()};
  for (std::size_t i = 1; i < x.legs(); ++i) {
    a.push_back(&group_.alphabet());
    o.push_back(&group_.order());
  }
  return qg::format(x, a, o);
}

NCPoly SpherePresentation::parse(const std::string& text) const {
  return parse_poly(text, alphabet_, [this](const NCPoly& x) { return star(x); });
}

std::vector<NCPoly> sphere_u1(const Presentation& A) {
  if (A.N() != 2) throw UnsupportedRegime("u¹ needs a 2×2 presentation");
  static const char* const entries[9] = {
      "d*d",        "-(q^2+1)*d*c",        "-q*c*c",  //
      "-q^-1*b*d",  "1+(q+q^-1)*b*c",      "a*c",     //
      "-q^-1*b*b",  "(q+q^-1)*b*a",        "a*a",
  };
  // The entries are written in q; substitute the presentation's own parameter.
  QScalar qv = QScalar::q();
  for (const auto& r : A.relations())
    if (r.s == 0 && r.t == 2) qv = -r.E(2, 0);
  std::vector<NCPoly> u;
  for (const char* e : entries) {
    NCPoly x = A.parse(e);
    if (!qv.is_constant() || qv == QScalar::q()) {
      u.push_back(A.reduce(x));
    } else {
      const Rational q0 = qv.constant_value();
      u.push_back(A.reduce(x.map_coefficients([&](const QScalar& c) { return QScalar(c.evaluate_at(q0)); })));
    }
  }
  return u;
}

TensorPoly coaction(const NCPoly& x, const SpherePresentation& S) {
  const auto u = sphere_u1(S.group());
  std::vector<TensorPoly> gamma;
  for (std::size_t i = 0; i < 3; ++i) {
    TensorPoly g(2);
    for (std::size_t j = 0; j < 3; ++j) g += TensorPoly::product_of({gen(static_cast<Letter>(j)), u[j * 3 + i]});
    gamma.push_back(std::move(g));
  }
  const LegSystems sys{&S.rewrite(), &S.group().rewrite()};
  TensorPoly r(2);
  for (const auto& [w, c] : x.terms()) {
    if (!w.empty() && *std::max_element(w.begin(), w.end()) > 2) throw AlphabetMismatch("letter outside the sphere alphabet");
    TensorPoly t = TensorPoly::unit(2);
    for (Letter l : w) t = multiply_reduced(t, gamma[l], sys);
    r.add_scaled(t, c);
  }
  return tensor_reduce(r, sys);
}

Report check_coaction(const SpherePresentation& S, const QScalar& rho_perturbation) {
  Report rep;
  rep.title = "coaction on the quantum sphere q = " + S.q().to_string() + ", c = " + S.c().to_string();
  const Presentation& A = S.group();
  {
    const auto rels = S.relations(S.rho() + rho_perturbation);
    std::string witness;
    for (std::size_t i = 0; i < rels.size() && witness.empty(); ++i) {
      TensorPoly g = coaction(rels[i], S);
      if (!g.is_zero()) witness = "relation " + std::to_string(i + 1) + ": Γ(" + S.format(rels[i]) + ") = " + S.format(g);
    }
    rep.add("Γ preserves the relations", witness.empty(), "4 relations", witness);
  }
  {
    const auto pairs = critical_pairs(S.rewrite());
    std::string witness;
    for (const auto& cp : pairs)
      if (!cp.difference.is_zero()) {
        witness = format_word(cp.overlap, S.alphabet()) + " -> " + S.format(cp.difference);
        break;
      }
    rep.add("sphere rewrite system confluent", witness.empty(), std::to_string(pairs.size()) + " critical pairs", witness);
  }
  std::string coassoc, counit_w, star_w;
  for (Letter i = 0; i < 3; ++i) {
    const NCPoly e = gen(i);
    const TensorPoly g = coaction(e, S);
    const TensorPoly l = expand_leg(g, 0, [&](const Word& w) { return coaction(NCPoly::monomial(w), S); });
    const TensorPoly r = expand_leg(g, 1, [&](const Word& w) { return A.delta_word(w); });
    if (coassoc.empty() && l != r) coassoc = S.format(e) + ": " + S.format(l - r);
    const NCPoly c = to_poly(contract_leg(g, 1, [&](const Word& w) { return counit(NCPoly::monomial(w), A); }));
    if (counit_w.empty() && c != e) counit_w = S.format(e) + " ↦ " + S.format(c);
    const TensorPoly gs = coaction(S.star(e), S);
    TensorPoly ss(2);
    for (const auto& [key, x] : g.terms())
      ss.add_scaled(TensorPoly::product_of({S.star(NCPoly::monomial(key[0])), star(NCPoly::monomial(key[1]), A)}),
                    x.conjugate(Involution::identity));
    if (star_w.empty() && gs != ss) star_w = S.format(e) + ": " + S.format(gs - ss);
  }
  rep.add("(Γ⊗id)Γ = (id⊗Δ)Γ", coassoc.empty(), "on generators", coassoc);
  rep.add("(id⊗ε)Γ = id", counit_w.empty(), "on generators", counit_w);
  rep.add("Γ(x*) = (*⊗*)Γ(x)", star_w.empty(), "on generators", star_w);
  return rep;
}

Report check_sphere(const QScalar& q, const SphereParameter& c) {
  if (c.kind != SphereParameter::Kind::symbolic) return check_coaction(SpherePresentation(q, c));
  Report rep;
  rep.title = "coaction on the quantum sphere q = " + q.to_string() + ", symbolic c (sampled)";
  for (const char* sample : {"0", "1", "3/7"}) {
    Report r = check_coaction(SpherePresentation(q, SphereParameter::finite(parse_scalar(sample))));
    for (auto& chk : r.checks) {
      chk.name += " [c = " + std::string(sample) + "]";
      rep.checks.push_back(std::move(chk));
    }
  }
  return rep;
}

Report check_u1(const Presentation& A) {
  const auto u = sphere_u1(A);
  Report rep = check_corep(A, 3, u);
  rep.title = "u¹ against " + A.name();
  if (!rep.passed()) return rep;
  const CorepMatrix U(A, 3, u);
  const CorepMatrix v1 = spin_corep(2, A);
  const auto mor = mor_space(U, v1);
  bool invertible = false;
  for (const auto& m : mor) invertible = invertible || m.rank() == 3;
  rep.add("u¹ ≅ spin_corep(1)", invertible, "dim Mor(u¹, v¹) = " + std::to_string(mor.size()));
  return rep;
}

}  // namespace qg

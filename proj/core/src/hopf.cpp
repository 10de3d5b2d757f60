#include "qg/hopf.hpp"

#include "qg/error.hpp"

namespace qg {

namespace {

QScalar counit_word(const Word& w, int N) {
  for (Letter x : w)
    if (x / N != x % N) return QScalar(0);
  return QScalar(1);
}

}  // namespace

TensorPoly delta(const NCPoly& x, const Presentation& P) {
  check_alphabet(x, P.generator_count());
  TensorPoly r(2);
  for (const auto& [w, c] : x.terms()) r.add_scaled(P.delta_word(w), c);
  return r;
}

QScalar counit(const NCPoly& x, const Presentation& P) {
  check_alphabet(x, P.generator_count());
  QScalar r(0);
  for (const auto& [w, c] : x.terms())
    if (!counit_word(w, P.N()).is_zero()) r += c;
  return r;
}

std::vector<NCPoly> derive_antipode(const Presentation& P) {
  const auto& m = P.antipode_derivation().matrix;
  if (m.empty()) throw UnsupportedRegime("presentation " + P.name() + " has no relation E in Mor(1, w^{⊗t})");
  return m;
}

NCPoly antipode(const NCPoly& x, const Presentation& P) {
  check_alphabet(x, P.generator_count());
  NCPoly r;
  for (const auto& [w, c] : x.terms()) r.add_scaled(P.antipode_word(w), c);
  return r;
}

NCPoly star(const NCPoly& x, const Presentation& P) {
  check_alphabet(x, P.generator_count());
  const Involution inv = P.maps().involution;
  NCPoly r;
  for (const auto& [w, c] : x.terms()) r.add_scaled(P.star_word(w), c.conjugate(inv));
  return r;
}

NCPoly multiply_legs(const TensorPoly& x, const Presentation& P) {
  NCPoly r;
  for (const auto& [key, c] : x.terms()) {
    Word w;
    for (const auto& leg : key) w.insert(w.end(), leg.begin(), leg.end());
    r.add_term(w, c);
  }
  return P.reduce(r);
}

TensorPoly star_legs(const TensorPoly& x, const Presentation& P) {
  const Involution inv = P.maps().involution;
  TensorPoly r(x.legs());
  for (const auto& [key, c] : x.terms()) {
    std::vector<NCPoly> factors;
    for (const auto& leg : key) factors.push_back(P.star_word(leg));
    r.add_scaled(TensorPoly::product_of(factors), c.conjugate(inv));
  }
  LegSystems sys(x.legs(), &P.rewrite());
  return tensor_reduce(r, sys);
}

Report check_hopf_axioms(const Presentation& P, int max_degree) {
  Report rep;
  rep.title = "Hopf axioms for " + P.name() + " up to degree " + std::to_string(max_degree);
  const int N = P.N();
  const bool has_antipode = !P.maps().antipode.empty();
  const bool has_star = P.maps().star.has_value();

  {
    auto pairs = critical_pairs(P.rewrite());
    std::string witness;
    for (const auto& cp : pairs)
      if (!cp.difference.is_zero()) {
        witness = format_word(cp.overlap, P.alphabet()) + " -> " + P.format(cp.difference);
        break;
      }
    rep.add("confluence", witness.empty(), std::to_string(pairs.size()) + " critical pairs", witness);
  }

  // Well-definedness on the quotient: every map must send the relations into the ideal.
  auto on_relations = [&](const std::string& name, auto&& f) {
    std::string witness;
    for (const auto& r : P.relation_polys()) {
      std::string w = f(r);
      if (!w.empty()) {
        witness = P.format(r) + " -> " + w;
        break;
      }
    }
    rep.add(name, witness.empty(), std::to_string(P.relation_polys().size()) + " relations", witness);
  };
  on_relations("delta respects relations", [&](const NCPoly& r) {
    TensorPoly d = delta(r, P);
    return d.is_zero() ? std::string() : P.format(d);
  });
  on_relations("counit respects relations", [&](const NCPoly& r) {
    QScalar e = counit(r, P);
    return e.is_zero() ? std::string() : e.to_string();
  });
  if (has_antipode)
    on_relations("antipode respects relations", [&](const NCPoly& r) {
      NCPoly s = antipode(r, P);
      return s.is_zero() ? std::string() : P.format(s);
    });
  if (has_star)
    on_relations("star respects relations", [&](const NCPoly& r) {
      NCPoly s = star(r, P);
      return s.is_zero() ? std::string() : P.format(s);
    });

  if (has_antipode) {
    const auto& d = P.antipode_derivation();
    rep.add("antipode right inverse w·S(w) = 1", d.right_inverse);
    rep.add("antipode left inverse S(w)·w = 1", d.left_inverse);
  } else {
    rep.add("antipode derivable", false, "no relation E in Mor(1, w^{⊗t})");
  }

  const auto words = basis_words(P.rewrite(), max_degree);
  const std::string detail = std::to_string(words.size()) + " words";
  auto per_word = [&](const std::string& name, auto&& f) {
    std::string witness;
    for (const auto& w : words) {
      std::string msg = f(w);
      if (!msg.empty()) {
        witness = format_word(w, P.alphabet()) + ": " + msg;
        break;
      }
    }
    rep.add(name, witness.empty(), detail, witness);
  };
  auto delta_fn = [&](const Word& u) { return P.delta_word(u); };
  auto eps_fn = [&](const Word& u) { return counit_word(u, N); };

  per_word("coassociativity", [&](const Word& w) {
    const TensorPoly& d = P.delta_word(w);
    TensorPoly l = expand_leg(d, 0, delta_fn);
    TensorPoly r = expand_leg(d, 1, delta_fn);
    return l == r ? std::string() : P.format(l - r);
  });
  per_word("counit law", [&](const Word& w) {
    const TensorPoly& d = P.delta_word(w);
    NCPoly x = NCPoly::monomial(w);
    NCPoly l = to_poly(contract_leg(d, 0, eps_fn));
    NCPoly r = to_poly(contract_leg(d, 1, eps_fn));
    if (l != x) return "(ε⊗id)Δ = " + P.format(l);
    if (r != x) return "(id⊗ε)Δ = " + P.format(r);
    return std::string();
  });
  if (has_antipode)
    per_word("antipode law", [&](const Word& w) {
      const TensorPoly& d = P.delta_word(w);
      NCPoly e(counit_word(w, N));
      TensorPoly sl = map_leg(d, 0, [&](const Word& u) { return P.antipode_word(u); });
      TensorPoly sr = map_leg(d, 1, [&](const Word& u) { return P.antipode_word(u); });
      NCPoly l = multiply_legs(sl, P);
      NCPoly r = multiply_legs(sr, P);
      if (l != e) return "μ(S⊗id)Δ = " + P.format(l);
      if (r != e) return "μ(id⊗S)Δ = " + P.format(r);
      return std::string();
    });
  if (has_star) {
    const auto& s = *P.star_structure();
    Matrix QQ = s.Q.conjugate(s.involution) * s.Q;
    rep.add("conj(Q)·Q = d·1", QQ == Matrix::identity(static_cast<std::size_t>(N)) * QQ(0, 0) && !QQ(0, 0).is_zero(),
            "d = " + QQ(0, 0).to_string());
    per_word("star involutive", [&](const Word& w) {
      NCPoly x = NCPoly::monomial(w);
      NCPoly y = star(star(x, P), P);
      return y == x ? std::string() : "x** = " + P.format(y);
    });
    per_word("Hopf-* axiom Δ(x*) = (*⊗*)Δx", [&](const Word& w) {
      TensorPoly l = delta(P.star_word(w), P);
      TensorPoly r = star_legs(P.delta_word(w), P);
      return l == r ? std::string() : P.format(l - r);
    });
    per_word("counit ε(x*) = conj ε(x)", [&](const Word& w) {
      QScalar l = counit(P.star_word(w), P);
      QScalar r = counit_word(w, N).conjugate(s.involution);
      return l == r ? std::string() : "ε(x*) = " + l.to_string();
    });
    if (has_antipode)
      per_word("S∘*∘S∘* = id", [&](const Word& w) {
        NCPoly x = NCPoly::monomial(w);
        NCPoly y = antipode(star(antipode(star(x, P), P), P), P);
        return y == x ? std::string() : "S(S(x*)*)* ... = " + P.format(y);
      });
  }
  return rep;
}

Character::Character(QScalar a, const Presentation& P) : a_(std::move(a)) {
  if (P.N() != 2) throw UnsupportedRegime("characters χ_a are defined for 2×2 presentations only");
  if (a_.is_zero()) throw DivisionByZero("character parameter must be nonzero");
  a_inv_ = a_.inverse();
  for (const auto& r : P.relation_polys()) {
    QScalar v = (*this)(r);
    if (!v.is_zero()) throw InvariantViolation("χ_a does not annihilate relation " + P.format(r) + ": value " + v.to_string());
  }
}

QScalar Character::operator()(const NCPoly& x) const {
  QScalar r(0);
  for (const auto& [w, c] : x.terms()) {
    QScalar t = c;
    for (Letter l : w) {
      if (l == 0)
        t *= a_;
      else if (l == 3)
        t *= a_inv_;
      else if (l < 4) {
        t = QScalar(0);
        break;
      } else {
        throw AlphabetMismatch("letter outside the 2×2 alphabet");
      }
    }
    r += t;
  }
  return r;
}

Character character(const QScalar& a, const Presentation& P) { return Character(a, P); }

Report check_b_matrix(const Presentation& P, const Matrix& B) {
  if (!P.star_structure()) throw UnsupportedRegime(P.name() + " has no *-structure");
  const std::size_t n = static_cast<std::size_t>(P.N());
  if (B.rows() != n || B.cols() != n) throw DimensionError("B must be N×N");
  const int N = P.N();
  // (x y z)_ik = Σ_jl x_ij B_jl z_lk with entries reduced.
  auto sandwich = [&](auto x, auto z) {
    std::vector<NCPoly> r(n * n);
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) {
        NCPoly e;
        for (int j = 0; j < N; ++j)
          for (int l = 0; l < N; ++l) {
            const QScalar& b = B(static_cast<std::size_t>(j), static_cast<std::size_t>(l));
            if (!b.is_zero()) e.add_scaled(x(i, j) * z(l, k), b);
          }
        r[static_cast<std::size_t>(i * N + k)] = P.reduce(e);
      }
    return r;
  };
  auto w = [&](int i, int j) { return P.w(i, j); };
  auto wstar = [&](int i, int j) { return star(P.w(j, i), P); };
  Report rep;
  rep.title = "w*Bw = wBw* = B for " + P.name();
  auto compare = [&](const std::string& name, const std::vector<NCPoly>& got) {
    std::string witness;
    for (int i = 0; i < N && witness.empty(); ++i)
      for (int k = 0; k < N && witness.empty(); ++k) {
        const NCPoly want(B(static_cast<std::size_t>(i), static_cast<std::size_t>(k)));
        const NCPoly& g = got[static_cast<std::size_t>(i * N + k)];
        if (g != want)
          witness = "entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + "): " + P.format(g - want);
      }
    rep.add(name, witness.empty(), "B = " + B.to_string(), witness);
  };
  compare("w*Bw = B", sandwich(wstar, w));
  compare("wBw* = B", sandwich(w, wstar));
  return rep;
}

}  // namespace qg

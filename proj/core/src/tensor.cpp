#include "qg/tensor.hpp"

#include <algorithm>

#include "qg/error.hpp"

namespace qg {

TensorPoly TensorPoly::product_of(const std::vector<NCPoly>& factors) {
  TensorPoly acc = unit(0);
  for (const auto& f : factors) {
    TensorPoly next(acc.legs_ + 1);
    for (const auto& [k, c] : acc.terms_)
      for (const auto& [w, x] : f.terms()) {
        Key nk = k;
        nk.push_back(w);
        next.add_term(nk, c * x);
      }
    acc = std::move(next);
  }
  return acc;
}

TensorPoly TensorPoly::unit(std::size_t legs) {
  TensorPoly t(legs);
  t.terms_.emplace(Key(legs), QScalar(1));
  return t;
}

void TensorPoly::add_term(const Key& k, const QScalar& c) {
  if (c.is_zero()) return;
  if (k.size() != legs_) throw DimensionError("tensor term has the wrong number of legs");
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TensorPoly::add_scaled(const TensorPoly& o, const QScalar& c) {
  if (o.legs_ != legs_) throw DimensionError("tensor leg count mismatch");
  for (const auto& [k, x] : o.terms_) add_term(k, x * c);
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  add_scaled(o, QScalar(1));
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  add_scaled(o, QScalar(-1));
  return *this;
}

TensorPoly& TensorPoly::operator*=(const QScalar& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
  if (a.legs_ != b.legs_) throw DimensionError("tensor leg count mismatch");
  TensorPoly r(a.legs_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      TensorPoly::Key k = ka;
      for (std::size_t i = 0; i < k.size(); ++i) k[i].insert(k[i].end(), kb[i].begin(), kb[i].end());
      r.add_term(k, ca * cb);
    }
  return r;
}

namespace {

/// Sum over the cartesian product of per-leg polynomials, scaled by c.
void accumulate_product(TensorPoly& out, const std::vector<NCPoly>& legs, const QScalar& c) {
  TensorPoly::Key key(legs.size());
  std::function<void(std::size_t, const QScalar&)> rec = [&](std::size_t i, const QScalar& coef) {
    if (i == legs.size()) {
      out.add_term(key, coef);
      return;
    }
    for (const auto& [w, x] : legs[i].terms()) {
      key[i] = w;
      rec(i + 1, coef * x);
    }
  };
  rec(0, c);
}

}  // namespace

TensorPoly tensor_reduce(const TensorPoly& x, const LegSystems& systems) {
  if (systems.size() != x.legs()) throw DimensionError("one rewrite system per tensor leg required");
  TensorPoly out(x.legs());
  std::vector<NCPoly> legs(x.legs());
  for (const auto& [k, c] : x.terms()) {
    for (std::size_t i = 0; i < k.size(); ++i) legs[i] = systems[i]->reduce_word(k[i]);
    accumulate_product(out, legs, c);
  }
  return out;
}

TensorPoly tensor_reduce(const TensorPoly& x, const RewriteSystem& left, const RewriteSystem& right) {
  return tensor_reduce(x, LegSystems{&left, &right});
}

TensorPoly multiply_reduced(const TensorPoly& a, const TensorPoly& b, const LegSystems& systems) {
  if (a.legs() != b.legs() || systems.size() != a.legs()) throw DimensionError("tensor leg count mismatch");
  TensorPoly out(a.legs());
  std::vector<NCPoly> legs(a.legs());
  Word w;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      for (std::size_t i = 0; i < ka.size(); ++i) {
        w = ka[i];
        w.insert(w.end(), kb[i].begin(), kb[i].end());
        legs[i] = systems[i]->reduce_word(w);
      }
      accumulate_product(out, legs, ca * cb);
    }
  return out;
}

TensorPoly map_leg(const TensorPoly& x, std::size_t leg, const std::function<NCPoly(const Word&)>& f) {
  TensorPoly out(x.legs());
  for (const auto& [k, c] : x.terms()) {
    NCPoly img = f(k[leg]);
    TensorPoly::Key nk = k;
    for (const auto& [w, y] : img.terms()) {
      nk[leg] = w;
      out.add_term(nk, c * y);
    }
  }
  return out;
}

TensorPoly expand_leg(const TensorPoly& x, std::size_t leg, const std::function<TensorPoly(const Word&)>& f) {
  std::size_t out_legs = 0;
  bool first = true;
  TensorPoly out(0);
  for (const auto& [k, c] : x.terms()) {
    TensorPoly img = f(k[leg]);
    if (first) {
      out_legs = x.legs() - 1 + img.legs();
      out = TensorPoly(out_legs);
      first = false;
    }
    for (const auto& [ik, y] : img.terms()) {
      TensorPoly::Key nk(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(leg));
      nk.insert(nk.end(), ik.begin(), ik.end());
      nk.insert(nk.end(), k.begin() + static_cast<std::ptrdiff_t>(leg) + 1, k.end());
      out.add_term(nk, c * y);
    }
  }
  if (first) return TensorPoly(x.legs() + 1);
  return out;
}

TensorPoly contract_leg(const TensorPoly& x, std::size_t leg, const std::function<QScalar(const Word&)>& f) {
  TensorPoly out(x.legs() - 1);
  for (const auto& [k, c] : x.terms()) {
    QScalar s = f(k[leg]);
    if (s.is_zero()) continue;
    TensorPoly::Key nk = k;
    nk.erase(nk.begin() + static_cast<std::ptrdiff_t>(leg));
    out.add_term(nk, c * s);
  }
  return out;
}

NCPoly to_poly(const TensorPoly& x) {
  if (x.legs() != 1) throw DimensionError("to_poly needs a one-leg tensor");
  NCPoly p;
  for (const auto& [k, c] : x.terms()) p.add_term(k[0], c);
  return p;
}

std::string format(const TensorPoly& x, const std::vector<const Alphabet*>& alphabets,
                   const std::vector<const MonomialOrder*>& orders) {
  if (x.is_zero()) return "0";
  std::vector<std::pair<TensorPoly::Key, QScalar>> terms(x.terms().begin(), x.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    for (std::size_t i = 0; i < a.first.size(); ++i) {
      if (orders[i]->less(a.first[i], b.first[i])) return true;
      if (orders[i]->less(b.first[i], a.first[i])) return false;
    }
    return false;
  });
  std::string out;
  for (const auto& [k, c] : terms) {
    const bool negative = c.is_term() && sgn(c.num().lc()) < 0;
    const QScalar a = negative ? -c : c;
    std::string body;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) body += "⊗";
      body += format_word(k[i], *alphabets[i]);
    }
    if (!a.is_one()) {
      std::string cs = a.to_string();
      if (a.num().term_count() > 1) cs = "(" + cs + ")";
      body = cs + "*" + body;
    }
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace qg

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qg/ncpoly.hpp"
#include "qg/rewrite.hpp"

namespace qg {

/// Element of A_1 ⊗ ... ⊗ A_k: a finite map from word tuples to coefficients.
/// Products are legwise ((a⊗b)(c⊗d) = ac⊗bd).
class TensorPoly {
 public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, QScalar>;

  explicit TensorPoly(std::size_t legs = 2) : legs_(legs) {}
  /// f_1 ⊗ ... ⊗ f_k.
  static TensorPoly product_of(const std::vector<NCPoly>& factors);
  static TensorPoly unit(std::size_t legs);

  std::size_t legs() const { return legs_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Key& k, const QScalar& c);
  void add_scaled(const TensorPoly& o, const QScalar& c);
  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  TensorPoly& operator*=(const QScalar& c);
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  /// Unreduced legwise product.
  friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
  bool operator==(const TensorPoly& o) const { return legs_ == o.legs_ && terms_ == o.terms_; }
  bool operator!=(const TensorPoly& o) const { return !(*this == o); }

 private:
  std::size_t legs_;
  Terms terms_;
};

/// One rewrite system per leg.
using LegSystems = std::vector<const RewriteSystem*>;

TensorPoly tensor_reduce(const TensorPoly& x, const LegSystems& systems);
TensorPoly tensor_reduce(const TensorPoly& x, const RewriteSystem& left, const RewriteSystem& right);
/// Legwise product, each leg reduced. Inputs are assumed to be reduced already.
TensorPoly multiply_reduced(const TensorPoly& a, const TensorPoly& b, const LegSystems& systems);

/// Replaces leg `leg` by the image of a linear map given on words (result has the same leg count).
TensorPoly map_leg(const TensorPoly& x, std::size_t leg, const std::function<NCPoly(const Word&)>& f);
/// Replaces leg `leg` by a tensor of `f`'s leg count (e.g. Δ applied to one leg).
TensorPoly expand_leg(const TensorPoly& x, std::size_t leg, const std::function<TensorPoly(const Word&)>& f);
/// Applies a scalar-valued map to leg `leg`, removing it.
TensorPoly contract_leg(const TensorPoly& x, std::size_t leg, const std::function<QScalar(const Word&)>& f);
/// A one-leg tensor as a polynomial.
NCPoly to_poly(const TensorPoly& x);

std::string format(const TensorPoly& x, const std::vector<const Alphabet*>& alphabets,
                   const std::vector<const MonomialOrder*>& orders);

}  // namespace qg

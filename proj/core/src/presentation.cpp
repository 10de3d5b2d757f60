#include "qg/presentation.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "qg/error.hpp"
#include "qg/parse.hpp"

namespace qg {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

/// Word of (w^{⊗n})_{I,J}: letters w_{i_1 j_1} ... w_{i_n j_n}, digits most significant first.
Word tensor_power_word(int N, int n, std::size_t I, std::size_t J) {
  Word w(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    w[static_cast<std::size_t>(k)] = static_cast<Letter>((I % static_cast<std::size_t>(N)) * static_cast<std::size_t>(N) +
                                                         J % static_cast<std::size_t>(N));
    I /= static_cast<std::size_t>(N);
    J /= static_cast<std::size_t>(N);
  }
  return w;
}

int inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

/// Rows r_1..r_n of the tall matrix F (rows >= cols = n) with F[r,:] invertible, and the
/// left inverse L (n × rows) with L F = 1. Throws if the columns of F are dependent.
Matrix left_inverse(const Matrix& F, const std::string& what) {
  const std::size_t n = F.cols();
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < F.rows() && chosen.size() < n; ++r) {
    std::vector<std::size_t> trial = chosen;
    trial.push_back(r);
    Matrix sub(trial.size(), n);
    for (std::size_t i = 0; i < trial.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) sub(i, j) = F(trial[i], j);
    if (sub.rank() == trial.size()) chosen = std::move(trial);
  }
  if (chosen.size() < n) {
    auto dep = F.nullspace();
    std::string msg = "the legs " + what + "_1.." + what + "_" + std::to_string(n) + " are linearly dependent";
    if (!dep.empty()) {
      msg += ": ";
      bool first = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (dep[0][k].is_zero()) continue;
        if (!first) msg += " + ";
        msg += "(" + dep[0][k].to_string() + ")*" + what + "_" + std::to_string(k + 1);
        first = false;
      }
      msg += " = 0";
    }
    throw UnsupportedRegime(msg);
  }
  Matrix sub(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sub(i, j) = F(chosen[i], j);
  Matrix inv = sub.inverse();
  Matrix L(n, F.rows());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) L(j, chosen[i]) = inv(j, i);
  return L;
}

}  // namespace

MonomialOrder default_order(int N) {
  std::vector<int> weights(static_cast<std::size_t>(N * N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) weights[static_cast<std::size_t>(i * N + j)] = (N - 1) * (N - 1) + 1 - (i - j) * (i - j);
  std::vector<Letter> prec;
  for (int i = N - 1; i >= 0; --i) prec.push_back(static_cast<Letter>(i * N + i));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i != j) prec.push_back(static_cast<Letter>(i * N + j));
  return MonomialOrder(std::move(weights), prec);
}

Alphabet default_alphabet(int N) {
  if (N == 2) return Alphabet({"a", "b", "c", "d"});
  std::vector<std::string> names;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) names.push_back("w" + std::to_string(i) + std::to_string(j));
  return Alphabet(std::move(names));
}

struct Presentation::Impl {
  std::string name;
  int N = 0;
  std::vector<Relation> relations;
  std::optional<StarStructure> star;
  Alphabet alphabet;
  MonomialOrder order;
  std::vector<NCPoly> relation_polys;
  RewriteSystem rewrite;
  StructureMaps maps;
  AntipodeDerivation antipode;

  std::mutex mutex;
  std::unordered_map<Word, TensorPoly, WordHash> delta_cache;
  std::unordered_map<Word, NCPoly, WordHash> antipode_cache;
  std::unordered_map<Word, NCPoly, WordHash> star_cache;

  NCPoly tensor_entry(int n, std::size_t I, std::size_t J) const { return NCPoly::monomial(tensor_power_word(N, n, I, J)); }
  void build_relations();
  void derive_antipode();
  void build_star();
};

void Presentation::Impl::build_relations() {
  for (const auto& rel : relations) {
    const std::size_t rows = ipow(static_cast<std::size_t>(N), rel.t);
    const std::size_t cols = ipow(static_cast<std::size_t>(N), rel.s);
    for (std::size_t I = 0; I < rows; ++I)
      for (std::size_t J = 0; J < cols; ++J) {
        NCPoly p;
        for (std::size_t K = 0; K < cols; ++K)
          if (!rel.E(I, K).is_zero()) p.add_term(tensor_power_word(N, rel.s, K, J), rel.E(I, K));
        for (std::size_t K = 0; K < rows; ++K)
          if (!rel.E(K, J).is_zero()) p.add_term(tensor_power_word(N, rel.t, I, K), -rel.E(K, J));
        if (!p.is_zero()) relation_polys.push_back(std::move(p));
      }
  }
}

void Presentation::Impl::derive_antipode() {
  const Relation* E = nullptr;
  const Relation* Ep = nullptr;
  for (const auto& r : relations) {
    if (!E && r.s == 0 && r.t >= 1) E = &r;
    if (!Ep && r.t == 0 && r.s >= 1) Ep = &r;
  }
  if (!E) return;
  const std::size_t n = static_cast<std::size_t>(N);
  const std::size_t m = ipow(n, E->t - 1);
  // E = Σ_k e_k ⊗ f_k: the first tensor leg carries e_k.
  Matrix F(m, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < m; ++r) F(r, k) = E->E(k * m + r, 0);
  Matrix G = left_inverse(F, "f");
  antipode.matrix.assign(n * n, NCPoly());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      NCPoly s;
      for (std::size_t r = 0; r < m; ++r) {
        if (G(j, r).is_zero()) continue;
        for (std::size_t c = 0; c < m; ++c)
          if (!F(c, k).is_zero()) s.add_term(tensor_power_word(N, E->t - 1, r, c), G(j, r) * F(c, k));
      }
      antipode.matrix[k * n + j] = rewrite.reduce(s);
    }
  if (Ep) {
    const std::size_t mp = ipow(n, Ep->s - 1);
    // E' = Σ_k f'_k ⊗ e'_k: the last tensor leg carries e'_k.
    Matrix Fp(mp, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < mp; ++r) Fp(r, k) = Ep->E(0, r * n + k);
    Matrix Gp = left_inverse(Fp, "f'");
    antipode.left_partner.assign(n * n, NCPoly());
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        NCPoly s;
        for (std::size_t r = 0; r < mp; ++r) {
          if (Fp(r, k).is_zero()) continue;
          for (std::size_t c = 0; c < mp; ++c)
            if (!Gp(j, c).is_zero()) s.add_term(tensor_power_word(N, Ep->s - 1, r, c), Fp(r, k) * Gp(j, c));
        }
        antipode.left_partner[j * n + k] = rewrite.reduce(s);
      }
  }
  auto is_identity_product = [&](bool w_first) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        NCPoly s;
        for (std::size_t k = 0; k < n; ++k) {
          NCPoly wi = NCPoly::generator(static_cast<Letter>(w_first ? i * n + k : k * n + j));
          const NCPoly& g = antipode.matrix[w_first ? k * n + j : i * n + k];
          s += w_first ? wi * g : g * wi;
        }
        if (rewrite.reduce(s) != NCPoly(i == j ? 1 : 0)) return false;
      }
    return true;
  };
  antipode.right_inverse = is_identity_product(true);
  antipode.left_inverse = is_identity_product(false);
  maps.antipode = antipode.matrix;
}

void Presentation::Impl::build_star() {
  if (!star) return;
  const std::size_t n = static_cast<std::size_t>(N);
  if (star->Q.rows() != n || star->Q.cols() != n) throw DimensionError("star Q must be N×N");
  Matrix QQ = star->Q.conjugate(star->involution) * star->Q;
  const QScalar d = QQ(0, 0);
  if (d.is_zero() || QQ != Matrix::identity(n) * d)
    throw InvariantViolation("star Q violates conj(Q)·Q = d·1: conj(Q)·Q = " + QQ.to_string());
  Matrix Qi = star->Q.inverse();
  std::vector<NCPoly> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      NCPoly s;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) s.add_term(Word{static_cast<Letter>(k * n + l)}, star->Q(i, k) * Qi(l, j));
      table[i * n + j] = rewrite.reduce(s);
    }
  maps.star = std::move(table);
  maps.involution = star->involution;
}

Presentation::Presentation(std::string name, int N, std::vector<Relation> relations, std::optional<StarStructure> star,
                           std::optional<Alphabet> alphabet, std::optional<MonomialOrder> order)
    : impl_(std::make_shared<Impl>()) {
  if (N < 1 || N > 15) throw DimensionError("matrix size N must be between 1 and 15");
  Impl& p = *impl_;
  p.name = std::move(name);
  p.N = N;
  p.relations = std::move(relations);
  p.star = std::move(star);
  p.alphabet = alphabet ? std::move(*alphabet) : default_alphabet(N);
  p.order = order ? std::move(*order) : default_order(N);
  const std::size_t n = static_cast<std::size_t>(N);
  if (p.alphabet.size() != n * n) throw DimensionError("alphabet must name N² generators");
  if (p.order.generator_count() != n * n) throw DimensionError("monomial order must cover N² generators");
  for (const auto& r : p.relations) {
    if (r.s < 0 || r.t < 0) throw DimensionError("relation " + r.name + ": s and t must be non-negative");
    if (r.E.rows() != ipow(n, r.t) || r.E.cols() != ipow(n, r.s))
      throw DimensionError("relation " + r.name + ": expected a " + std::to_string(ipow(n, r.t)) + "×" +
                           std::to_string(ipow(n, r.s)) + " matrix");
  }
  p.build_relations();
  p.rewrite = RewriteSystem::from_relations(n * n, p.order, p.relation_polys);
  p.maps.delta.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      TensorPoly d(2);
      for (std::size_t k = 0; k < n; ++k)
        d.add_term({Word{static_cast<Letter>(i * n + k)}, Word{static_cast<Letter>(k * n + j)}}, QScalar(1));
      p.maps.delta.push_back(std::move(d));
      p.maps.counit.push_back(QScalar(i == j ? 1 : 0));
    }
  p.derive_antipode();
  p.build_star();
}

const std::string& Presentation::name() const { return impl_->name; }
int Presentation::N() const { return impl_->N; }
const std::vector<Relation>& Presentation::relations() const { return impl_->relations; }
const std::optional<StarStructure>& Presentation::star_structure() const { return impl_->star; }
const Alphabet& Presentation::alphabet() const { return impl_->alphabet; }
const MonomialOrder& Presentation::order() const { return impl_->order; }
const RewriteSystem& Presentation::rewrite() const { return impl_->rewrite; }
const StructureMaps& Presentation::maps() const { return impl_->maps; }
const AntipodeDerivation& Presentation::antipode_derivation() const { return impl_->antipode; }
const std::vector<NCPoly>& Presentation::relation_polys() const { return impl_->relation_polys; }

std::string Presentation::format(const NCPoly& x) const { return qg::format(x, alphabet(), order()); }

std::string Presentation::format(const TensorPoly& x) const {
  std::vector<const Alphabet*> a(x.legs(), &alphabet());
  std::vector<const MonomialOrder*> o(x.legs(), &order());
  return qg::format(x, a, o);
}

NCPoly Presentation::parse(const std::string& text) const {
  StarFn star;
  if (impl_->maps.star) {
    star = [this](const NCPoly& x) {
      NCPoly r;
      for (const auto& [w, c] : x.terms()) r.add_scaled(star_word(w), c.conjugate(maps().involution));
      return r;
    };
  }
  return parse_poly(text, alphabet(), star);
}

const TensorPoly& Presentation::delta_word(const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    auto it = impl_->delta_cache.find(w);
    if (it != impl_->delta_cache.end()) return it->second;
  }
  TensorPoly r(2);
  if (w.empty()) {
    r = TensorPoly::unit(2);
  } else {
    const TensorPoly prefix = delta_word(Word(w.begin(), w.end() - 1));
    r = multiply_reduced(prefix, impl_->maps.delta.at(w.back()), LegSystems{&rewrite(), &rewrite()});
  }
  std::lock_guard<std::mutex> lock(impl_->mutex);
  return impl_->delta_cache.try_emplace(w, std::move(r)).first->second;
}

const NCPoly& Presentation::antipode_word(const Word& w) const {
  if (impl_->maps.antipode.empty()) throw UnsupportedRegime("presentation " + name() + " has no antipode relation pair");
  {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    auto it = impl_->antipode_cache.find(w);
    if (it != impl_->antipode_cache.end()) return it->second;
  }
  NCPoly r;
  if (w.empty()) {
    r = NCPoly(1);
  } else {
    const NCPoly prefix = antipode_word(Word(w.begin(), w.end() - 1));
    r = rewrite().reduce(impl_->maps.antipode.at(w.back()) * prefix);
  }
  std::lock_guard<std::mutex> lock(impl_->mutex);
  return impl_->antipode_cache.try_emplace(w, std::move(r)).first->second;
}

const NCPoly& Presentation::star_word(const Word& w) const {
  if (!impl_->maps.star) throw UnsupportedRegime("presentation " + name() + " has no *-structure");
  {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    auto it = impl_->star_cache.find(w);
    if (it != impl_->star_cache.end()) return it->second;
  }
  NCPoly r;
  if (w.empty()) {
    r = NCPoly(1);
  } else {
    const NCPoly prefix = star_word(Word(w.begin(), w.end() - 1));
    r = rewrite().reduce(impl_->maps.star->at(w.back()) * prefix);
  }
  std::lock_guard<std::mutex> lock(impl_->mutex);
  return impl_->star_cache.try_emplace(w, std::move(r)).first->second;
}

bool Presentation::operator==(const Presentation& o) const {
  return name() == o.name() && N() == o.N() && relations() == o.relations() && star_structure() == o.star_structure() &&
         alphabet() == o.alphabet() && order() == o.order();
}

// ---------------------------------------------------------------- builtins

std::pair<Matrix, Matrix> make_antisym_E(int N, const QScalar& q) {
  if (N < 2) throw DimensionError("make_antisym_E needs N >= 2");
  const std::size_t size = ipow(static_cast<std::size_t>(N), N);
  Matrix E(size, 1);
  Matrix Ep(1, size);
  std::vector<int> perm(static_cast<std::size_t>(N));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::size_t idx = 0;
    for (int x : perm) idx = idx * static_cast<std::size_t>(N) + static_cast<std::size_t>(x);
    QScalar v = (-q).pow(inversions(perm));
    E(idx, 0) = v;
    Ep(0, idx) = v;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {E, Ep};
}

Matrix make_sigma_N(int N, const QScalar& q) {
  if (N < 2) throw DimensionError("make_sigma_N needs N >= 2");
  const std::size_t n = static_cast<std::size_t>(N);
  Matrix s(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t col = i * n + j;
      if (i < j) {
        s(j * n + i, col) = q;
      } else if (i > j) {
        s(j * n + i, col) = q;
        s(col, col) = QScalar(1) - q * q;
      } else {
        s(col, col) = QScalar(1);
      }
    }
  return s;
}

namespace {

std::vector<Relation> sl2_relations(const QScalar& q) {
  Matrix E(4, 1, {QScalar(0), QScalar(1), -q, QScalar(0)});
  Matrix Ep(1, 4, {QScalar(0), -q.inverse(), QScalar(1), QScalar(0)});
  return {Relation{"E", 0, 2, E}, Relation{"Ep", 2, 0, Ep}};
}

Matrix mat2(const QScalar& a, const QScalar& b, const QScalar& c, const QScalar& d) { return Matrix(2, 2, {a, b, c, d}); }

}  // namespace

Presentation slq2(const QScalar& q) {
  if (q.is_zero()) throw UnsupportedRegime("q must be nonzero");
  return Presentation("slq2", 2, sl2_relations(q));
}

Presentation sl_t1_2() {
  Matrix E(4, 1, {QScalar(1), QScalar(1), QScalar(-1), QScalar(0)});
  Matrix Ep(1, 4, {QScalar(0), QScalar(-1), QScalar(1), QScalar(1)});
  // The weighted default order is not confluent here; plain deglex with c < a < d < b is.
  MonomialOrder order({1, 1, 1, 1}, {2, 0, 3, 1});
  return Presentation("sl_t1_2", 2, {Relation{"E", 0, 2, E}, Relation{"Ep", 2, 0, Ep}}, {}, {}, std::move(order));
}

Presentation slqN(int N, const QScalar& q) {
  if (q.is_zero()) throw UnsupportedRegime("q must be nonzero");
  auto [E, Ep] = make_antisym_E(N, q);
  return Presentation("slqN", N,
                      {Relation{"E", 0, N, E}, Relation{"Ep", N, 0, Ep}, Relation{"sigma", 2, 2, make_sigma_N(N, q)}});
}

Presentation suq2(const QScalar& q) {
  if (q.is_zero()) throw UnsupportedRegime("q must be nonzero");
  return Presentation("suq2", 2, sl2_relations(q),
                      StarStructure{mat2(QScalar(0), -q, QScalar(1), QScalar(0)), Involution::identity});
}

Presentation suq11(const QScalar& q) {
  if (q.is_zero()) throw UnsupportedRegime("q must be nonzero");
  return Presentation("suq11", 2, sl2_relations(q),
                      StarStructure{mat2(QScalar(0), q, QScalar(1), QScalar(0)), Involution::identity});
}

Presentation slq2R(const QScalar& q) {
  if (q.is_zero()) throw UnsupportedRegime("q must be nonzero");
  if (q.is_constant() && q * q != QScalar(1))
    throw UnsupportedRegime("slq2R needs |q| = 1: use symbolic q or q = ±1");
  return Presentation("slq2R", 2, sl2_relations(q), StarStructure{Matrix::identity(2), Involution::q_inverse});
}

Presentation builtin(const std::string& name, const QScalar& q, int N) {
  if (name == "slq2") return slq2(q);
  if (name == "sl_t1_2") return sl_t1_2();
  if (name == "slqN") return slqN(N, q);
  if (name == "suq2") return suq2(q);
  if (name == "suq11") return suq11(q);
  if (name == "slq2R") return slq2R(q);
  throw UnsupportedRegime("unknown builtin presentation '" + name + "'");
}

// ---------------------------------------------------------------- text format

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

std::vector<Token> split_tokens(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back(Token{line.substr(start, i - start), lineno, static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& t, const std::string& prefix) {
  if (t.text.rfind(prefix, 0) != 0) throw ParseError("expected " + prefix + "<integer>", t.line, t.column);
  const std::string v = t.text.substr(prefix.size());
  if (v.empty() || v.size() > 4 || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected " + prefix + "<integer>", t.line, t.column);
  return std::stoi(v);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::string name = "custom";
  int N = 0;
  std::optional<Alphabet> alphabet;
  std::optional<std::vector<int>> weights;
  std::optional<std::vector<std::string>> precedence;
  std::optional<StarStructure> star;
  std::vector<Relation> relations;

  struct Open {
    Relation rel;
    std::vector<QScalar> entries;
    int line;
  };
  std::optional<Open> open;
  auto close = [&](int line) {
    if (!open) return;
    const std::size_t want = open->rel.E.rows() * open->rel.E.cols();
    if (open->entries.size() != want)
      throw DimensionError("relation " + open->rel.name + " (line " + std::to_string(open->line) + "): expected " +
                           std::to_string(want) + " entries for a " + std::to_string(open->rel.E.rows()) + "×" +
                           std::to_string(open->rel.E.cols()) + " matrix, got " + std::to_string(open->entries.size()));
    open->rel.E = Matrix(open->rel.E.rows(), open->rel.E.cols(), std::move(open->entries));
    relations.push_back(std::move(open->rel));
    open.reset();
    (void)line;
  };

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = split_tokens(raw, lineno);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    const bool keyword = kw == "name" || kw == "matrix" || kw == "generators" || kw == "weights" || kw == "precedence" ||
                         kw == "relation" || kw == "star";
    if (!keyword) {
      if (!open) throw ParseError("unexpected '" + kw + "' outside a relation block", toks[0].line, toks[0].column);
      for (const auto& t : toks) open->entries.push_back(parse_scalar_at(t.text, t.line, t.column));
      continue;
    }
    close(lineno);
    auto need = [&](std::size_t n) {
      if (toks.size() != n) throw ParseError("'" + kw + "' expects " + std::to_string(n - 1) + " argument(s)", toks[0].line, toks[0].column);
    };
    if (kw == "name") {
      need(2);
      name = toks[1].text;
    } else if (kw == "matrix") {
      need(2);
      N = parse_int(toks[1], "");
      if (N < 1 || N > 15) throw ParseError("matrix size must be between 1 and 15", toks[1].line, toks[1].column);
    } else if (kw == "generators") {
      std::vector<std::string> names;
      for (std::size_t i = 1; i < toks.size(); ++i) names.push_back(toks[i].text);
      alphabet = Alphabet(std::move(names));
    } else if (kw == "weights") {
      std::vector<int> w;
      for (std::size_t i = 1; i < toks.size(); ++i) w.push_back(parse_int(toks[i], ""));
      weights = std::move(w);
    } else if (kw == "precedence") {
      std::vector<std::string> p;
      for (std::size_t i = 1; i < toks.size(); ++i) p.push_back(toks[i].text);
      precedence = std::move(p);
    } else if (kw == "relation") {
      need(4);
      if (N == 0) throw ParseError("'matrix N' must precede relations", toks[0].line, toks[0].column);
      Relation r;
      r.name = toks[1].text;
      r.s = parse_int(toks[2], "s=");
      r.t = parse_int(toks[3], "t=");
      if (r.s > 8 || r.t > 8) throw ParseError("tensor powers above 8 are not supported", toks[2].line, toks[2].column);
      r.E = Matrix(ipow(static_cast<std::size_t>(N), r.t), ipow(static_cast<std::size_t>(N), r.s));
      open = Open{std::move(r), {}, lineno};
    } else if (kw == "star") {
      if (N == 0) throw ParseError("'matrix N' must precede star", toks[0].line, toks[0].column);
      const std::size_t n2 = static_cast<std::size_t>(N * N);
      if (toks.size() != n2 + 3 || toks[1].text != "Q")
        throw ParseError("expected 'star Q <" + std::to_string(n2) + " entries> involution=<identity|q-inverse>'",
                         toks[0].line, toks[0].column);
      std::vector<QScalar> q;
      for (std::size_t i = 2; i < 2 + n2; ++i) q.push_back(parse_scalar_at(toks[i].text, toks[i].line, toks[i].column));
      const Token& inv = toks.back();
      Involution involution;
      if (inv.text == "involution=identity")
        involution = Involution::identity;
      else if (inv.text == "involution=q-inverse")
        involution = Involution::q_inverse;
      else
        throw ParseError("expected involution=identity or involution=q-inverse", inv.line, inv.column);
      star = StarStructure{Matrix(static_cast<std::size_t>(N), static_cast<std::size_t>(N), std::move(q)), involution};
    }
  }
  close(lineno + 1);
  if (N == 0) throw ParseError("missing 'matrix N'", lineno, 1);
  std::optional<MonomialOrder> order;
  const Alphabet names = alphabet ? *alphabet : default_alphabet(N);
  if (weights || precedence) {
    MonomialOrder def = default_order(N);
    std::vector<int> w = weights ? *weights : def.weights();
    std::vector<Letter> prec = def.precedence();
    if (precedence) {
      prec.clear();
      for (const auto& s : *precedence) {
        int g = names.find(s);
        if (g < 0) throw ParseError("unknown generator '" + s + "' in precedence", lineno, 1);
        prec.push_back(static_cast<Letter>(g));
      }
    }
    order = MonomialOrder(std::move(w), prec);
  }
  return Presentation(name, N, std::move(relations), std::move(star), alphabet, order);
}

std::string serialize(const Presentation& p) {
  std::ostringstream out;
  out << "name " << p.name() << "\n";
  out << "matrix " << p.N() << "\n";
  out << "generators";
  for (const auto& n : p.alphabet().names()) out << " " << n;
  out << "\nweights";
  for (int w : p.order().weights()) out << " " << w;
  out << "\nprecedence";
  for (Letter l : p.order().precedence()) out << " " << p.alphabet().name(l);
  out << "\n";
  for (const auto& r : p.relations()) {
    out << "relation " << r.name << " s=" << r.s << " t=" << r.t << "\n";
    for (std::size_t i = 0; i < r.E.rows(); ++i) {
      for (std::size_t j = 0; j < r.E.cols(); ++j) out << (j ? " " : "") << r.E(i, j).to_string();
      out << "\n";
    }
  }
  if (const auto& s = p.star_structure()) {
    out << "star Q";
    for (const auto& x : s->Q.data()) out << " " << x.to_string();
    out << " involution=" << (s->involution == Involution::identity ? "identity" : "q-inverse") << "\n";
  }
  return out.str();
}

}  // namespace qg

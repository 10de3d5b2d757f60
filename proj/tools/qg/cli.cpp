#include "qg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "qg/corep.hpp"
#include "qg/error.hpp"
#include "qg/haar.hpp"
#include "qg/hopf.hpp"
#include "qg/presentation.hpp"
#include "qg/sphere.hpp"

namespace qg::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kFooter = R"(Generators: a b c d for 2x2 presentations (w11 w12 w21 w22), wIJ for N > 2,
em1 e0 e1 on spheres. Postfix ^* applies the star. Scalars use q, integers,
+ - * / ^ and parentheses, e.g. (1-q^2)/(1+q^2). Spins are written 0, 1/2, 1, 3/2.
Exit status: 0 success, 1 a check failed, 2 usage or parse error.)";

struct Options {
  std::string algebra = "slq2";
  std::string file;
  std::string q = "q";
  int N = 3;
  std::string format = "text";
  int max_degree = 3;
  std::string spin_cutoff;
  std::string c = "c";
  std::string spin = "1/2";
  std::string spin2 = "1/2";
  std::string matrix;
  std::string X;
  std::string involution;
  std::string alpha = "1/2";
  std::string beta = "1/2";
  int degree = 2;
  std::string q0 = "1/2";
  std::string kind;
  std::string element;
  std::string action = "check";
};

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  bool json_output() const { return o_.format == "json"; }

  QScalar q() const {
    if (o_.q == "q" || o_.q == "symbolic") return QScalar::q();
    QScalar v = parse_scalar(o_.q);
    if (!v.is_constant()) throw UnsupportedRegime("--q must be symbolic or a rational number");
    if (v.is_zero()) throw UnsupportedRegime("--q must be nonzero");
    return v;
  }

  Presentation presentation() const {
    if (!o_.file.empty()) {
      std::ifstream in(o_.file);
      if (!in) throw ParseError("cannot open " + o_.file, 0, 0);
      std::stringstream ss;
      ss << in.rdbuf();
      return parse_presentation(ss.str());
    }
    return builtin(o_.algebra, q(), o_.N);
  }

  /// Emits a single scalar or element string.
  int emit_value(const std::string& command, const std::string& value) const {
    if (json_output()) {
      json j{{"command", command}, {"input", o_.element}, {"result", value}};
      out_ << j.dump(2) << "\n";
    } else {
      out_ << value << "\n";
    }
    return ok;
  }

  int emit_report(const Report& r) const {
    if (json_output()) {
      json checks = json::array();
      for (const auto& c : r.checks) {
        json e{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
        if (!c.passed) e["witness"] = c.witness;
        checks.push_back(std::move(e));
      }
      out_ << json{{"title", r.title}, {"passed", r.passed()}, {"checks", checks}}.dump(2) << "\n";
    } else {
      out_ << r.to_text();
    }
    return r.passed() ? ok : check_failed;
  }

  static json corep_json(const CorepMatrix& v) {
    json rows = json::array();
    for (std::size_t a = 0; a < v.dim(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < v.dim(); ++b) row.push_back(v.presentation().format(v(a, b)));
      rows.push_back(std::move(row));
    }
    return rows;
  }

  static json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
      rows.push_back(std::move(row));
    }
    return rows;
  }

  int emit_corep(const std::string& label, const CorepMatrix& v) const {
    if (json_output())
      out_ << json{{"corep", label}, {"dim", v.dim()}, {"entries", corep_json(v)}}.dump(2) << "\n";
    else
      out_ << v.to_string() << "\n";
    return ok;
  }

  const Options& o() const { return o_; }
  std::ostream& out() const { return out_; }

 private:
  const Options& o_;
  std::ostream& out_;
};

/// 2l for a spin written as a nonnegative integer or half-integer.
int parse_spin(const std::string& text) {
  const QScalar v = parse_scalar(text);
  if (!v.is_constant()) throw ParseError("spin must be a number: " + text, 1, 1);
  const Rational two = v.constant_value() * 2;
  if (two.get_den() != 1 || two < 0 || two > 64) throw ParseError("spin must be a half-integer in [0, 32]: " + text, 1, 1);
  return static_cast<int>(two.get_num().get_si());
}

json parse_json_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("matrix: ") + e.what(), 1, static_cast<int>(e.byte));
  }
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows", 1, 1);
  for (const auto& row : j)
    if (!row.is_array() || row.size() != j.size()) throw DimensionError("matrix must be square");
  return j;
}

std::string cell_text(const json& cell) {
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_number_integer()) return std::to_string(cell.get<long long>());
  throw ParseError("matrix entries must be strings or integers", 1, 1);
}

Matrix scalar_matrix(const std::string& text) {
  const json j = parse_json_matrix(text);
  Matrix m(j.size(), j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = parse_scalar(cell_text(j[i][k]));
  return m;
}

std::vector<NCPoly> element_matrix(const std::string& text, const Presentation& P, std::size_t& dim) {
  const json j = parse_json_matrix(text);
  dim = j.size();
  std::vector<NCPoly> e;
  for (const auto& row : j)
    for (const auto& cell : row) e.push_back(P.parse(cell_text(cell)));
  return e;
}

int cmd_normalize(const Session& s) {
  const Presentation P = s.presentation();
  return s.emit_value("normalize", P.format(P.reduce(P.parse(s.o().element))));
}

int cmd_delta(const Session& s) {
  const Presentation P = s.presentation();
  return s.emit_value("delta", P.format(delta(P.parse(s.o().element), P)));
}

int cmd_antipode(const Session& s) {
  const Presentation P = s.presentation();
  return s.emit_value("antipode", P.format(antipode(P.parse(s.o().element), P)));
}

int cmd_star(const Session& s) {
  const Presentation P = s.presentation();
  return s.emit_value("star", P.format(star(P.parse(s.o().element), P)));
}

int cmd_check_hopf(const Session& s) { return s.emit_report(check_hopf_axioms(s.presentation(), s.o().max_degree)); }

int cmd_corep(const Session& s) {
  const Presentation P = s.presentation();
  const std::string& kind = s.o().kind;
  if (kind == "check") {
    std::size_t dim = 0;
    const auto entries = element_matrix(s.o().matrix, P, dim);
    return s.emit_report(check_corep(P, dim, entries));
  }
  if (kind == "fundamental") return s.emit_corep("w", fundamental(P));
  if (kind == "trivial") return s.emit_corep("1", trivial(P));
  const int a = parse_spin(s.o().spin);
  const CorepMatrix va = spin_corep(a, P);
  if (kind == "contragredient") return s.emit_corep("(v^" + spin_label(a) + ")^c", contragredient(va));
  const int b = parse_spin(s.o().spin2);
  const CorepMatrix vb = spin_corep(b, P);
  if (kind == "sum") return s.emit_corep("v^" + spin_label(a) + " + v^" + spin_label(b), direct_sum(va, vb));
  if (kind == "tensor") return s.emit_corep("v^" + spin_label(a) + " x v^" + spin_label(b), tensor_prod(va, vb));
  throw ParseError("unknown corep kind: " + kind, 1, 1);
}

int cmd_mor(const Session& s) {
  const Presentation P = s.presentation();
  const int a = parse_spin(s.o().spin), b = parse_spin(s.o().spin2);
  const auto basis = mor_space(spin_corep(a, P), spin_corep(b, P));
  if (s.json_output()) {
    json mats = json::array();
    for (const auto& m : basis) mats.push_back(Session::matrix_json(m));
    s.out() << json{{"from", spin_label(a)}, {"to", spin_label(b)}, {"dim", basis.size()}, {"basis", mats}}.dump(2)
            << "\n";
  } else {
    s.out() << "dim Mor(v^" << spin_label(a) << ", v^" << spin_label(b) << ") = " << basis.size() << "\n";
    for (const auto& m : basis) s.out() << m.to_string() << "\n";
  }
  return ok;
}

int cmd_spin(const Session& s) {
  const int l = parse_spin(s.o().spin);
  return s.emit_corep("v^" + spin_label(l), spin_corep(l, s.presentation()));
}

int cmd_clebsch(const Session& s) {
  const int a = parse_spin(s.o().spin), b = parse_spin(s.o().spin2);
  const CGTable t = clebsch_gordan_check(a, b, s.presentation());
  if (!s.json_output()) {
    s.out() << "v^" << spin_label(a) << " x v^" << spin_label(b) << ":";
    for (const auto& [c, m] : t.multiplicity) s.out() << " " << spin_label(c) << ":" << m;
    s.out() << "\n";
  }
  return s.emit_report(t.report);
}

int two_L(const Session& s, int fallback) {
  return s.o().spin_cutoff.empty() ? fallback : parse_spin(s.o().spin_cutoff);
}

int cmd_haar(const Session& s) {
  const Presentation P = s.presentation();
  const NCPoly x = P.parse(s.o().element);
  const PWBasis B(P, two_L(s, std::max(0, P.reduce(x).degree())));
  return s.emit_value("haar", haar(x, B).to_string());
}

int cmd_pw_check(const Session& s) {
  const int a = parse_spin(s.o().alpha), b = parse_spin(s.o().beta);
  const PWBasis B(s.presentation(), two_L(s, a + b));
  return s.emit_report(check_pw_relations(a, b, B));
}

int cmd_gram(const Session& s) {
  const QScalar q0 = parse_scalar(s.o().q0);
  if (!q0.is_constant()) throw ParseError("--q0 must be rational", 1, 1);
  const PWBasis B(s.presentation(), two_L(s, 2 * s.o().degree));
  return s.emit_report(gram_positivity(s.o().degree, q0.constant_value(), B));
}

int cmd_sphere(const Session& s) {
  const QScalar q = s.q();
  const SphereParameter c = SphereParameter::parse(s.o().c, q);
  const std::string& action = s.o().action;
  if (action == "check") return s.emit_report(check_sphere(q, c));
  const SpherePresentation S(q, c);
  const NCPoly x = S.parse(s.o().element);
  if (action == "normalize") return s.emit_value("sphere normalize", S.format(S.reduce(x)));
  if (action == "coaction") return s.emit_value("sphere coaction", S.format(coaction(x, S)));
  throw ParseError("unknown sphere action: " + action, 1, 1);
}

int cmd_lorentz(const Session& s) {
  const Presentation P = s.presentation();
  Involution inv = P.star_structure() ? P.star_structure()->involution : Involution::identity;
  if (s.o().involution == "identity") inv = Involution::identity;
  if (s.o().involution == "q-inverse") inv = Involution::q_inverse;
  return s.emit_report(check_lorentz_X(scalar_matrix(s.o().X), P, inv));
}

int cmd_parse(const Session& s) {
  if (s.o().file.empty()) throw ParseError("parse needs a presentation file", 1, 1);
  const Presentation P = s.presentation();
  if (s.json_output()) {
    s.out() << json{{"name", P.name()}, {"N", P.N()}, {"relations", P.relations().size()},
                     {"rules", P.rewrite().rules().size()}, {"star", P.star_structure().has_value()},
                     {"text", serialize(P)}}
                   .dump(2)
            << "\n";
  } else {
    s.out() << serialize(P);
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with quantum matrix groups and quantum spheres", "qg"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--algebra", o.algebra, "builtin presentation: slq2, sl_t1_2, slqN, suq2, suq11, slq2R")
      ->capture_default_str();
  app.add_option("--file", o.file, "presentation file (overrides --algebra)");
  app.add_option("--q", o.q, "deformation parameter: symbolic or a nonzero rational")->capture_default_str();
  app.add_option("--N", o.N, "matrix size for slqN")->capture_default_str()->check(CLI::Range(2, 6));
  app.add_option("--format", o.format, "output format")->capture_default_str()->check(CLI::IsMember({"text", "json"}));

  using Handler = int (*)(const Session&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto element_command = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("element", o.element, "element of the algebra")->required();
    commands.emplace_back(sub, h);
    return sub;
  };
  element_command("normalize", "normal form of an element", cmd_normalize);
  element_command("delta", "comultiplication of an element", cmd_delta);
  element_command("antipode", "antipode of an element", cmd_antipode);
  element_command("star", "star of an element", cmd_star);

  CLI::App* sub = app.add_subcommand("check-hopf", "verify the Hopf (and Hopf-*) axioms");
  sub->add_option("--max-degree", o.max_degree, "largest word degree checked")->capture_default_str();
  commands.emplace_back(sub, cmd_check_hopf);

  sub = app.add_subcommand("corep", "build or check a corepresentation");
  sub->add_option("kind", o.kind, "fundamental, trivial, contragredient, sum, tensor or check")
      ->required()
      ->check(CLI::IsMember({"fundamental", "trivial", "contragredient", "sum", "tensor", "check"}));
  sub->add_option("--spin", o.spin, "spin of the first operand")->capture_default_str();
  sub->add_option("--spin2", o.spin2, "spin of the second operand")->capture_default_str();
  sub->add_option("--matrix", o.matrix, "square matrix of elements as nested JSON arrays (check)");
  commands.emplace_back(sub, cmd_corep);

  sub = app.add_subcommand("mor", "intertwiner space Mor(v^spin, v^spin2)");
  sub->add_option("--spin", o.spin)->capture_default_str();
  sub->add_option("--spin2", o.spin2)->capture_default_str();
  commands.emplace_back(sub, cmd_mor);

  sub = app.add_subcommand("spin", "spin corepresentation v^spin");
  sub->add_option("--spin", o.spin)->capture_default_str();
  commands.emplace_back(sub, cmd_spin);

  sub = app.add_subcommand("clebsch", "multiplicities of v^c in v^spin x v^spin2");
  sub->add_option("--spin", o.spin)->capture_default_str();
  sub->add_option("--spin2", o.spin2)->capture_default_str();
  commands.emplace_back(sub, cmd_clebsch);

  sub = element_command("haar", "Haar functional of an element", cmd_haar);
  sub->add_option("--spin-cutoff", o.spin_cutoff, "largest spin in the expansion (default: half the degree)");

  sub = app.add_subcommand("pw-check", "orthogonality relations for v^alpha, v^beta");
  sub->add_option("--alpha", o.alpha)->capture_default_str();
  sub->add_option("--beta", o.beta)->capture_default_str();
  sub->add_option("--spin-cutoff", o.spin_cutoff, "largest spin in the expansion (default: alpha + beta)");
  commands.emplace_back(sub, cmd_pw_check);

  sub = app.add_subcommand("gram", "positivity of the Haar Gram matrix at a rational q0");
  sub->add_option("--degree", o.degree, "largest word degree")->capture_default_str()->check(CLI::Range(0, 3));
  sub->add_option("--q0", o.q0, "evaluation point")->capture_default_str();
  sub->add_option("--spin-cutoff", o.spin_cutoff, "largest spin in the expansion (default: degree)");
  commands.emplace_back(sub, cmd_gram);

  sub = app.add_subcommand("sphere", "quantum sphere: check, normalize or coaction");
  sub->add_option("--c", o.c, "sphere parameter: rational, expression in q, inf, c or c(n)")->capture_default_str();
  sub->add_option("action", o.action, "check, normalize or coaction")
      ->capture_default_str()
      ->check(CLI::IsMember({"check", "normalize", "coaction"}));
  sub->add_option("element", o.element, "element of the sphere (normalize, coaction)");
  commands.emplace_back(sub, cmd_sphere);

  sub = app.add_subcommand("lorentz", "conditions on a twisting matrix X of w x w-bar");
  sub->add_option("--X", o.X, "4x4 scalar matrix as nested JSON arrays")->required();
  sub->add_option("--involution", o.involution, "coefficient conjugation")
      ->check(CLI::IsMember({"identity", "q-inverse"}));
  commands.emplace_back(sub, cmd_lorentz);

  sub = app.add_subcommand("parse", "parse a presentation file and print its canonical form");
  sub->add_option("path", o.file, "presentation file");
  commands.emplace_back(sub, cmd_parse);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return usage_error;
  }

  if (o.action != "check" && o.element.empty()) {
    err << "error: sphere " << o.action << " needs an element\n";
    return usage_error;
  }
  if (o.kind == "check" && o.matrix.empty()) {
    err << "error: corep check needs --matrix\n";
    return usage_error;
  }

  const Session session(o, out);
  for (const auto& [cmd, handler] : commands) {
    if (!cmd->parsed()) continue;
    try {
      return handler(session);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return usage_error;
    }
  }
  return usage_error;
}

}  // namespace qg::cli

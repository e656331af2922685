#include "zjetcli/engine.hpp"

#include <map>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "zjet/derham.hpp"
#include "zjet/error.hpp"
#include "zjet/localforms.hpp"
#include "zjet/random.hpp"
#include "zjet/textio.hpp"

namespace zjetcli {

namespace {

using zjet::AlgebraPtr;
using zjet::Degree;
using zjet::Form;
using zjet::Morphism;
using zjet::Rat;
using zjet::Series;

using Value = std::variant<Rat, Series, Form>;
using Binding = std::variant<Series, Form, Morphism>;
using SymbolTable = std::map<std::string, Binding>;

[[noreturn]] void script_err(const std::string& msg, int line, int col) {
  throw ScriptError(msg, line, col);
}

// ---------------------------------------------------------------------------
// Expression evaluation

Value eval_expr(const Expr& e, const AlgebraPtr& ring,
                const SymbolTable& bindings);

Series promote_series(const Value& v, const AlgebraPtr& uses, int line, int col) {
  if (std::holds_alternative<Series>(v)) return std::get<Series>(v);
  if (std::holds_alternative<Rat>(v)) {
    if (!uses) script_err("no ring in scope for a constant", line, col);
    return Series::constant(uses, std::get<Rat>(v));
  }
  script_err("expected a series value", line, col);
}

Form promote_form(const Value& v, const Form& like, int line, int col) {
  if (std::holds_alternative<Form>(v)) return std::get<Form>(v);
  return Form::from_series(
      promote_series(v, like.algebra(), line, col), like.form_cap());
}

Value eval_binary(const Expr& e, const AlgebraPtr& ring,
                  const SymbolTable& bindings) {
  const Value a = eval_expr(e.kids[0], ring, bindings);
  const Value b = eval_expr(e.kids[1], ring, bindings);
  const bool form_a = std::holds_alternative<Form>(a);
  const bool form_b = std::holds_alternative<Form>(b);
  if (form_a || form_b) {
    const Form& like = form_a ? std::get<Form>(a) : std::get<Form>(b);
    Form fa = promote_form(a, like, e.line, e.col);
    Form fb = promote_form(b, like, e.line, e.col);
    switch (e.kind) {
      case Expr::Kind::Add: return fa + fb;
      case Expr::Kind::Sub: return fa - fb;
      default: return wedge(fa, fb);
    }
  }
  if (std::holds_alternative<Series>(a) || std::holds_alternative<Series>(b)) {
    const AlgebraPtr& alg = std::holds_alternative<Series>(a)
                                ? std::get<Series>(a).algebra()
                                : std::get<Series>(b).algebra();
    Series sa = promote_series(a, alg, e.line, e.col);
    Series sb = promote_series(b, alg, e.line, e.col);
    switch (e.kind) {
      case Expr::Kind::Add: return sa + sb;
      case Expr::Kind::Sub: return sa - sb;
      default: return sa * sb;
    }
  }
  const Rat& ra = std::get<Rat>(a);
  const Rat& rb = std::get<Rat>(b);
  switch (e.kind) {
    case Expr::Kind::Add: return Rat(ra + rb);
    case Expr::Kind::Sub: return Rat(ra - rb);
    default: return Rat(ra * rb);
  }
}

Value eval_expr(const Expr& e, const AlgebraPtr& ring,
                const SymbolTable& bindings) {
  switch (e.kind) {
    case Expr::Kind::Lit:
      return e.lit;
    case Expr::Kind::Name: {
      auto it = bindings.find(e.name);
      if (it != bindings.end()) {
        if (std::holds_alternative<Series>(it->second))
          return std::get<Series>(it->second);
        if (std::holds_alternative<Form>(it->second))
          return std::get<Form>(it->second);
        script_err("'" + e.name + "' names a morphism, not a value", e.line, e.col);
      }
      if (ring) {
        const int idx = ring->coords().index_of(e.name);
        if (idx >= 0) return Series::coordinate(ring, idx);
      }
      script_err("unknown name '" + e.name + "'", e.line, e.col);
    }
    case Expr::Kind::Diff: {
      if (!ring) script_err("no ring in scope for d(...)", e.line, e.col);
      const int idx = ring->coords().index_of(e.name);
      if (idx < 0)
        script_err("'" + e.name + "' is not a coordinate of the current ring",
                   e.line, e.col);
      return Form::generator(ring, idx, ring->cap());
    }
    case Expr::Kind::Neg: {
      Value v = eval_expr(e.kids[0], ring, bindings);
      if (std::holds_alternative<Rat>(v)) return Rat(-std::get<Rat>(v));
      if (std::holds_alternative<Series>(v)) return -std::get<Series>(v);
      return -std::get<Form>(v);
    }
    case Expr::Kind::Div: {
      Value v = eval_expr(e.kids[0], ring, bindings);
      if (e.lit == 0) script_err("division by zero", e.line, e.col);
      const Rat inv = Rat(1) / e.lit;
      if (std::holds_alternative<Rat>(v)) return Rat(std::get<Rat>(v) * inv);
      if (std::holds_alternative<Series>(v)) return std::get<Series>(v).scaled(inv);
      return std::get<Form>(v).scaled(inv);
    }
    case Expr::Kind::Pow: {
      Value v = eval_expr(e.kids[0], ring, bindings);
      const int k = e.exponent;
      if (std::holds_alternative<Rat>(v)) {
        Rat out(1);
        for (int i = 0; i < k; ++i) out *= std::get<Rat>(v);
        return out;
      }
      if (std::holds_alternative<Series>(v)) return std::get<Series>(v).pow(k);
      const Form& f = std::get<Form>(v);
      Form out = Form::from_series(Series::constant(f.algebra(), 1), f.form_cap());
      for (int i = 0; i < k; ++i) out = wedge(out, f);
      return out;
    }
    default:
      return eval_binary(e, ring, bindings);
  }
}

// ---------------------------------------------------------------------------
// Randomized self-check (the `check all` command)

struct CheckSuite {
  std::string name;
  int count = 0;
  int failures = 0;
};

void check_ring_laws(zjet::RandomSource& rng, const AlgebraPtr& alg,
                     CheckSuite& suite) {
  const auto& order = zjet::standard_order(alg->coords().n());
  for (int t = 0; t < 30; ++t) {
    Series f = rng.series(alg, 4, alg->cap());
    Series g = rng.series(alg, 4, alg->cap());
    Series h = rng.series(alg, 4, alg->cap());
    ++suite.count;
    if ((f + g) * h != f * h + g * h) ++suite.failures;
    ++suite.count;
    if ((f * g) * h != f * (g * h)) ++suite.failures;
    const Degree da = order[rng.uniform_int(0, static_cast<int>(order.size()) - 1)];
    const Degree db = order[rng.uniform_int(0, static_cast<int>(order.size()) - 1)];
    Series p = rng.homogeneous_series(alg, da, false, 0, alg->cap());
    Series q = rng.homogeneous_series(alg, db, false, 0, alg->cap());
    ++suite.count;
    if (p * q != (q * p).scaled(Rat(zjet::scalar_sign(da, db)))) ++suite.failures;
  }
}

void check_leibniz(zjet::RandomSource& rng, const AlgebraPtr& alg,
                   CheckSuite& suite) {
  const auto& order = zjet::standard_order(alg->coords().n());
  const int jet = alg->cap() - 1;
  for (int t = 0; t < 20; ++t) {
    const Degree da = order[rng.uniform_int(0, static_cast<int>(order.size()) - 1)];
    Series f = rng.homogeneous_series(alg, da, false, 0, alg->cap());
    Series g = rng.series(alg, 4, alg->cap());
    for (int c = 0; c < alg->coords().size(); ++c) {
      Series lhs = (f * g).partial(c);
      Series rhs = f.partial(c) * g +
                   (f * g.partial(c)).scaled(
                       Rat(zjet::scalar_sign(alg->coords().degree(c), da)));
      ++suite.count;
      if (lhs.truncated(jet) != rhs.truncated(jet)) ++suite.failures;
    }
  }
}

void check_jacobians(zjet::RandomSource& rng, const AlgebraPtr& alg,
                     CheckSuite& suite) {
  for (int t = 0; t < 8; ++t) {
    Morphism f = rng.morphism(alg, alg, alg->cap());
    Morphism g = rng.morphism(alg, alg, alg->cap());
    ++suite.count;
    if (!jacobian_multiplicativity_check(f, g).multiplicative) ++suite.failures;
    Series probe = rng.series(alg, 3, alg->cap());
    for (int a = 0; a < alg->coords().size(); ++a) {
      ++suite.count;
      if (!chain_rule_residual(f, probe, a).is_zero()) ++suite.failures;
    }
  }
}

void check_neumann(zjet::RandomSource& rng, const AlgebraPtr& alg,
                   CheckSuite& suite) {
  std::vector<Degree> degs;
  const auto& order = zjet::standard_order(alg->coords().n());
  degs.push_back(Degree::zero(alg->coords().n()));
  degs.push_back(order[1]);
  for (int t = 0; t < 15; ++t) {
    zjet::GradedMatrix m = rng.degree0_matrix(alg, degs, degs, alg->cap());
    const auto blocks = zjet::epsilon_blocks(m);
    bool unit_blocks = true;
    for (const auto& b : blocks)
      if (b.rows() > 0 && b.det() == 0) unit_blocks = false;
    ++suite.count;
    if (zjet::is_invertible_deg0(m) != unit_blocks) {
      ++suite.failures;
      continue;
    }
    if (!unit_blocks) continue;
    zjet::GradedMatrix mi = zjet::neumann_inverse(m);
    zjet::GradedMatrix id(alg, degs, degs);
    for (std::size_t i = 0; i < degs.size(); ++i)
      id.at(static_cast<int>(i), static_cast<int>(i)) = Series::constant(alg, 1);
    ++suite.count;
    if (!(matmul(m, mi) == id && matmul(mi, m) == id)) ++suite.failures;
  }
}

void check_forms(zjet::RandomSource& rng, const AlgebraPtr& alg,
                 CheckSuite& suite) {
  const int fc = alg->cap() + 1;
  const auto& order = zjet::standard_order(alg->coords().n());
  for (int t = 0; t < 15; ++t) {
    // two word-length slots of headroom so d o d stays under the form cap
    Form w = rng.form(alg, fc - 2, 4, alg->cap()).with_form_cap(fc);
    ++suite.count;
    if (!exterior_derivative(exterior_derivative(w)).is_zero()) ++suite.failures;
  }
  for (int t = 0; t < 10; ++t) {
    // fully homogeneous pair: one word each, homogeneous coefficients
    Form a = rng.homogeneous_form(alg, rng.uniform_int(0, 1), fc, 1, 0);
    Form b = rng.homogeneous_form(alg, rng.uniform_int(0, 1), fc, 1, 0);
    const Degree da = order[rng.uniform_int(0, static_cast<int>(order.size()) - 1)];
    const Degree db = order[rng.uniform_int(0, static_cast<int>(order.size()) - 1)];
    Form fa = wedge(a, Form::from_series(
                           rng.homogeneous_series(alg, da, false, 0, 1), fc));
    Form fb = wedge(b, Form::from_series(
                           rng.homogeneous_series(alg, db, false, 0, 1), fc));
    auto zdeg = [&](const Form& f) -> std::optional<Degree> {
      std::optional<Degree> d;
      for (const auto& [word, coeff] : f.terms()) {
        auto h = coeff.homogeneous_degree();
        if (!h) return std::nullopt;
        Degree full = degree_add(*h, f.word_degree(word));
        if (!d)
          d = full;
        else if (d->bits() != full.bits())
          return std::nullopt;
      }
      return d;
    };
    auto na = fa.n_degree(), nb = fb.n_degree();
    auto za = zdeg(fa), zb = zdeg(fb);
    if (!na || !nb || !za || !zb) continue;  // zero draw
    const int sign_exp = zjet::degree_dot(*za, *zb) + (*na) * (*nb);
    ++suite.count;
    if (wedge(fa, fb) != wedge(fb, fa).scaled(Rat(zjet::parity_sign(sign_exp))))
      ++suite.failures;
  }
}

void check_homotopy(zjet::RandomSource& rng, const AlgebraPtr& alg,
                    int eta_index, CheckSuite& suite) {
  const int fc = alg->cap() + 1;
  for (int t = 0; t < 10; ++t) {
    const int k = rng.uniform_int(1, 2);
    Form w = rng.homogeneous_form(alg, k, fc, 3, alg->cap() - 1);
    Form lhs = exterior_derivative(homotopy_K(w, eta_index)) -
               homotopy_K(exterior_derivative(w), eta_index);
    Form rhs = (w - restrict_zero_pullback(w, eta_index))
                   .scaled(Rat(zjet::parity_sign(k - 1)));
    ++suite.count;
    if (!(lhs == rhs)) ++suite.failures;
  }
}

void check_roundtrip(zjet::RandomSource& rng, const AlgebraPtr& alg,
                     CheckSuite& suite) {
  for (int t = 0; t < 15; ++t) {
    Series s = rng.series(alg, 4, alg->cap());
    const std::string txt = zjet::series_str(s);
    Expr e = parse_expression(txt);
    Value v = eval_expr(e, alg, {});
    Series back = promote_series(v, alg, 0, 0);
    ++suite.count;
    if (!(back == s)) ++suite.failures;
  }
}

std::vector<CheckSuite> run_check_all(std::uint64_t seed) {
  zjet::RandomSource rng(seed);
  zjet::CoordinateSystem cs1(
      1, {"x", "t1", "t2"},
      {Degree::zero(1), Degree::from_components({1}), Degree::from_components({1})});
  zjet::CoordinateSystem cs2(
      2, {"x", "z", "a", "b"},
      {Degree::zero(2), Degree::from_components({1, 1}),
       Degree::from_components({0, 1}), Degree::from_components({1, 0})});
  const AlgebraPtr alg1 = zjet::make_algebra(cs1, 3);
  const AlgebraPtr alg2 = zjet::make_algebra(cs2, 3);

  std::vector<CheckSuite> out;
  auto both = [&](const std::string& name, auto&& fn) {
    CheckSuite s{name, 0, 0};
    fn(alg1, s);
    fn(alg2, s);
    out.push_back(s);
  };
  both("ring laws", [&](const AlgebraPtr& a, CheckSuite& s) {
    check_ring_laws(rng, a, s);
  });
  both("derivations", [&](const AlgebraPtr& a, CheckSuite& s) {
    check_leibniz(rng, a, s);
  });
  both("jacobians", [&](const AlgebraPtr& a, CheckSuite& s) {
    check_jacobians(rng, a, s);
  });
  both("matrix inverses", [&](const AlgebraPtr& a, CheckSuite& s) {
    check_neumann(rng, a, s);
  });
  both("forms", [&](const AlgebraPtr& a, CheckSuite& s) {
    check_forms(rng, a, s);
  });
  {
    CheckSuite s{"homotopy", 0, 0};
    check_homotopy(rng, alg2, 1, s);  // z has even nonzero degree (1,1)
    out.push_back(s);
  }
  both("round trips", [&](const AlgebraPtr& a, CheckSuite& s) {
    check_roundtrip(rng, a, s);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Statement execution

class Engine {
 public:
  explicit Engine(const Options& opt) : opt_(opt) {}

  RunResult run(const std::vector<Stmt>& script) {
    RunResult result;
    for (const Stmt& st : script) {
      Report rep;
      rep.echo = st.echo;
      rep.line = st.line;
      try {
        execute(st, rep);
        rep.status = "ok";
      } catch (const ScriptError& e) {
        rep.status = "error";
        rep.fields.clear();
        rep.error = "line " + std::to_string(e.line) + " col " +
                    std::to_string(e.col) + ": " + e.what();
        result.reports.push_back(std::move(rep));
        result.exit_code = 1;
        return result;
      } catch (const zjet::Error& e) {
        rep.status = "error";
        rep.fields.clear();
        rep.error = "line " + std::to_string(st.line) + ": " + e.what();
        result.reports.push_back(std::move(rep));
        result.exit_code = 2;
        return result;
      }
      const bool failed_check = rep.status == "error";
      result.reports.push_back(std::move(rep));
      if (failed_check) {
        result.exit_code = 2;
        return result;
      }
    }
    return result;
  }

 private:
  Options opt_;
  std::map<std::string, AlgebraPtr> rings_;
  AlgebraPtr current_;
  SymbolTable bindings_;

  const AlgebraPtr& ring_arg(const std::string& name, const Stmt& st) {
    auto it = rings_.find(name);
    if (it == rings_.end())
      script_err("unknown ring '" + name + "'", st.line, st.col);
    return it->second;
  }

  const Morphism& morphism_arg(const std::string& name, const Stmt& st) {
    auto it = bindings_.find(name);
    if (it == bindings_.end() || !std::holds_alternative<Morphism>(it->second))
      script_err("'" + name + "' is not a morphism", st.line, st.col);
    return std::get<Morphism>(it->second);
  }

  Form form_arg(const Expr& e, const Stmt& st) {
    Value v = eval_expr(e, current_, bindings_);
    if (std::holds_alternative<Form>(v)) return std::get<Form>(v);
    if (std::holds_alternative<Series>(v)) {
      const Series& s = std::get<Series>(v);
      return Form::from_series(s, s.algebra()->cap());
    }
    script_err("expected a form-valued expression", st.line, st.col);
  }

  void bind(const std::string& name, Binding b) {
    bindings_.insert_or_assign(name, std::move(b));
  }

  void require_binds(const Stmt& st, std::size_t lo, std::size_t hi) {
    if (st.bind_names.size() < lo || st.bind_names.size() > hi)
      script_err(st.bind_names.size() < lo
                     ? "command '" + st.cmd + "' binds more names"
                     : "command '" + st.cmd + "' cannot bind that many names",
                 st.line, st.col);
  }

  void execute(const Stmt& st, Report& rep) {
    switch (st.kind) {
      case Stmt::Kind::Ring: return exec_ring(st, rep);
      case Stmt::Kind::Let: return exec_let(st, rep);
      case Stmt::Kind::MorphismDecl: return exec_morphism_decl(st, rep);
      case Stmt::Kind::Command: return exec_command(st, rep);
    }
  }

  void exec_ring(const Stmt& st, Report& rep) {
    if (st.n < 1 || st.n > 16)
      script_err("n must be between 1 and 16", st.line, st.col);
    std::vector<std::string> names;
    std::vector<Degree> degrees;
    const auto& order = zjet::standard_order(st.n);
    for (const CoordDecl& c : st.coords) {
      names.push_back(c.name);
      if (!zjet::valid_coordinate_name(c.name))
        script_err("invalid coordinate name '" + c.name + "'", c.line, c.col);
      if (c.shorthand) {
        if (c.deg_index < 1 || c.deg_index >= static_cast<int>(order.size()))
          script_err("deg= index out of range", c.line, c.col);
        degrees.push_back(order[c.deg_index]);
      } else {
        if (static_cast<int>(c.bits.size()) != st.n)
          script_err("degree tuple must have n entries", c.line, c.col);
        degrees.push_back(Degree::from_components(c.bits));
      }
    }
    const int cap = opt_.cap_override.value_or(st.cap);
    AlgebraPtr alg = zjet::make_algebra(
        zjet::CoordinateSystem(st.n, std::move(names), std::move(degrees)), cap);
    rings_.insert_or_assign(st.name, alg);
    current_ = alg;
    rep.fields.emplace_back("domain", alg->coords().signature().dim_str());
    rep.fields.emplace_back("cap", std::to_string(cap));
  }

  void exec_let(const Stmt& st, Report& rep) {
    Value v = eval_expr(st.expr, current_, bindings_);
    if (std::holds_alternative<Form>(v)) {
      const Form& f = std::get<Form>(v);
      rep.fields.emplace_back("value", zjet::form_str(f));
      bind(st.name, f);
      return;
    }
    Series s = promote_series(v, current_, st.line, st.col);
    rep.fields.emplace_back("value", zjet::series_str(s));
    bind(st.name, s);
  }

  void exec_morphism_decl(const Stmt& st, Report& rep) {
    const AlgebraPtr& src = ring_arg(st.src_ring, st);
    const AlgebraPtr& dst = ring_arg(st.dst_ring, st);
    std::vector<bool> seen(dst->coords().size(), false);
    std::vector<Series> pulls(dst->coords().size(), Series::zero(src));
    for (const auto& [coord, expr] : st.assigns) {
      const int idx = dst->coords().index_of(coord);
      if (idx < 0)
        script_err("'" + coord + "' is not a coordinate of " + st.dst_ring,
                   st.line, st.col);
      if (seen[idx])
        script_err("coordinate '" + coord + "' assigned twice", st.line, st.col);
      seen[idx] = true;
      Value v = eval_expr(expr, src, bindings_);
      pulls[idx] = promote_series(v, src, st.line, st.col);
    }
    for (int i = 0; i < dst->coords().size(); ++i)
      if (!seen[i])
        script_err("coordinate '" + dst->coords().name(i) + "' not assigned",
                   st.line, st.col);
    Morphism m(src, dst, std::move(pulls));
    rep.fields.emplace_back("pullback", zjet::morphism_str(m));
    bind(st.name, m);
  }

  void exec_command(const Stmt& st, Report& rep) {
    const std::string& c = st.cmd;
    if (c == "jac") {
      require_binds(st, 0, 0);
      rep.fields.emplace_back(
          "jacobian", zjet::gmatrix_str(graded_jacobian(morphism_arg(st.name_args[0], st))));
    } else if (c == "tangent") {
      require_binds(st, 0, 0);
      const Morphism& m = morphism_arg(st.name_args[0], st);
      zjet::TangentMap tm = tangent_map(m);
      const auto& order = zjet::standard_order(m.source()->coords().n());
      for (std::size_t i = 0; i < tm.blocks.size(); ++i)
        rep.fields.emplace_back(order[i].str(), zjet::qmatrix_str(tm.blocks[i]));
    } else if (c == "invert") {
      require_binds(st, 0, 1);
      const std::string& name = st.name_args[0];
      auto it = bindings_.find(name);
      if (it != bindings_.end() && std::holds_alternative<Morphism>(it->second)) {
        Morphism inv = invert_morphism(std::get<Morphism>(it->second));
        rep.fields.emplace_back("inverse", zjet::morphism_str(inv));
        if (!st.bind_names.empty()) bind(st.bind_names[0], inv);
        return;
      }
      Series s = [&]() -> Series {
        if (it != bindings_.end()) {
          if (!std::holds_alternative<Series>(it->second))
            script_err("'" + name + "' is not invertible", st.line, st.col);
          return std::get<Series>(it->second);
        }
        if (current_ && current_->coords().index_of(name) >= 0)
          return Series::coordinate(current_, name);
        script_err("unknown name '" + name + "'", st.line, st.col);
      }();
      Series inv = s.inverted();
      rep.fields.emplace_back("inverse", zjet::series_str(inv));
      if (!st.bind_names.empty()) bind(st.bind_names[0], inv);
    } else if (c == "compose") {
      require_binds(st, 0, 1);
      const Morphism& f = morphism_arg(st.name_args[0], st);
      const Morphism& g = morphism_arg(st.name_args[1], st);
      // `compose F, G` is F after G
      Morphism h = compose(g, f);
      rep.fields.emplace_back("pullback", zjet::morphism_str(h));
      if (!st.bind_names.empty()) bind(st.bind_names[0], h);
    } else if (c == "classify") {
      require_binds(st, 0, 0);
      zjet::Classification cl = classify_point(morphism_arg(st.name_args[0], st));
      rep.fields.emplace_back("kind", kind_str(cl.kind));
      rep.fields.emplace_back("profile", cl.profile.str());
    } else if (c == "rank") {
      require_binds(st, 0, 0);
      const Morphism& m = morphism_arg(st.name_args[0], st);
      rep.fields.emplace_back("profile",
                              zjet::scalar_rank(tangent_map(m).blocks).str());
    } else if (c == "neumann") {
      require_binds(st, 0, 0);
      const Morphism& m = morphism_arg(st.name_args[0], st);
      rep.fields.emplace_back(
          "inverse", zjet::gmatrix_str(zjet::neumann_inverse(graded_jacobian(m))));
    } else if (c == "normalform") {
      require_binds(st, 0, 2);
      const Morphism& m = morphism_arg(st.name_args[0], st);
      zjet::Classification cl = classify_point(m);
      zjet::NormalForm nf = [&] {
        if (cl.kind == zjet::MapKind::Submersion ||
            cl.kind == zjet::MapKind::DiffeoCandidate)
          return submersion_normal_form(m);
        if (cl.kind == zjet::MapKind::Immersion) return immersion_normal_form(m);
        throw zjet::ValueError("neither an immersion nor a submersion");
      }();
      rep.fields.emplace_back("kind", kind_str(cl.kind));
      rep.fields.emplace_back("extended", nf.extended->coords().signature().dim_str());
      rep.fields.emplace_back("forward", zjet::morphism_str(nf.change.forward));
      rep.fields.emplace_back("inverse", zjet::morphism_str(nf.change.inverse));
      rep.fields.emplace_back("standard", zjet::morphism_str(nf.standard_form));
      if (!st.bind_names.empty()) bind(st.bind_names[0], nf.change.forward);
      if (st.bind_names.size() > 1) bind(st.bind_names[1], nf.change.inverse);
    } else if (c == "factor") {
      if (!st.bind_names.empty()) require_binds(st, 2, 2);
      const Morphism& m = morphism_arg(st.name_args[0], st);
      auto fac = constant_rank_factor(m);
      if (!fac)
        throw zjet::ValueError(
            "no unit-pivot constant-rank decomposition at this truncation");
      rep.fields.emplace_back("profile", fac->profile.str());
      rep.fields.emplace_back("middle",
                              fac->middle->coords().signature().dim_str());
      rep.fields.emplace_back("phi1", zjet::morphism_str(fac->phi1));
      rep.fields.emplace_back("phi2", zjet::morphism_str(fac->phi2));
      if (!st.bind_names.empty()) {
        bind(st.bind_names[0], fac->phi1);
        bind(st.bind_names[1], fac->phi2);
      }
    } else if (c == "d") {
      require_binds(st, 0, 1);
      Value v = eval_expr(st.expr_args[0], current_, bindings_);
      Form out = [&] {
        if (std::holds_alternative<Form>(v))
          return exterior_derivative(std::get<Form>(v));
        Series s = promote_series(v, current_, st.line, st.col);
        return differential(s, s.algebra()->cap());
      }();
      rep.fields.emplace_back("result", zjet::form_str(out));
      if (!st.bind_names.empty()) bind(st.bind_names[0], out);
    } else if (c == "wedge") {
      require_binds(st, 0, 1);
      Form a = form_arg(st.expr_args[0], st);
      Form b = form_arg(st.expr_args[1], st);
      Form out = wedge(a, b);
      rep.fields.emplace_back("result", zjet::form_str(out));
      if (!st.bind_names.empty()) bind(st.bind_names[0], out);
    } else if (c == "pullback") {
      require_binds(st, 0, 1);
      const Morphism& m = morphism_arg(st.name_args[0], st);
      Form w = form_arg(st.expr_args[0], st);
      Form out = form_pullback(m, w);
      rep.fields.emplace_back("result", zjet::form_str(out));
      if (!st.bind_names.empty()) bind(st.bind_names[0], out);
    } else if (c == "homotopy") {
      require_binds(st, 0, 1);
      Form w = form_arg(st.expr_args[0], st);
      const int idx = w.algebra()->coords().index_of(st.eta);
      if (idx < 0)
        script_err("'" + st.eta + "' is not a coordinate of the form's ring",
                   st.line, st.col);
      Form out = homotopy_K(w, idx);
      rep.fields.emplace_back("result", zjet::form_str(out));
      if (!st.bind_names.empty()) bind(st.bind_names[0], out);
    } else if (c == "potential") {
      require_binds(st, 0, 1);
      Form w = form_arg(st.expr_args[0], st);
      Form out = find_potential(w);
      rep.fields.emplace_back("result", zjet::form_str(out));
      if (!st.bind_names.empty()) bind(st.bind_names[0], out);
    } else if (c == "derham") {
      require_binds(st, 0, 0);
      const AlgebraPtr& alg = ring_arg(st.name_args[0], st);
      const int kmax = static_cast<int>(st.int_opts.at("kmax"));
      const int wmax = static_cast<int>(st.int_opts.at("wmax"));
      zjet::DeRhamRanks table = derham_ranks(alg, kmax, wmax);
      std::ostringstream rows;
      for (int k = 0; k <= kmax; ++k)
        for (int w = 0; w <= wmax; ++w) {
          if (k || w) rows << "\n";
          rows << "k=" << k << " w=" << w << " dim=" << table.h_dim[k][w];
        }
      rep.fields.emplace_back("table", rows.str());
      std::ostringstream totals;
      for (int k = 0; k <= kmax; ++k) {
        if (k) totals << " ";
        totals << "H^" << k << "=" << table.h_total[k];
      }
      rep.fields.emplace_back("totals", totals.str());
    } else if (c == "check") {
      require_binds(st, 0, 0);
      rep.fields.emplace_back("seed", std::to_string(opt_.seed));
      bool ok = true;
      for (const CheckSuite& s : run_check_all(opt_.seed)) {
        std::ostringstream line;
        if (s.failures == 0) {
          line << "ok (n=" << s.count << ")";
        } else {
          line << "FAIL (" << s.failures << "/" << s.count << ")";
          ok = false;
        }
        rep.fields.emplace_back(s.name, line.str());
      }
      if (ok) {
        rep.fields.emplace_back("summary", "all invariants hold");
      } else {
        rep.status = "error";
        rep.error = "invariant failures detected";
      }
    } else {
      script_err("unknown command '" + c + "'", st.line, st.col);
    }
  }
};

}  // namespace

RunResult run_script(const std::string& text, const Options& opt) {
  std::vector<Stmt> script;
  try {
    script = parse(text);
  } catch (const ScriptError& e) {
    RunResult r;
    Report rep;
    rep.echo = "(parse)";
    rep.line = e.line;
    rep.status = "error";
    rep.error = "line " + std::to_string(e.line) + " col " +
                std::to_string(e.col) + ": " + e.what();
    r.reports.push_back(std::move(rep));
    r.exit_code = 1;
    return r;
  }
  return Engine(opt).run(script);
}

std::string render_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  bool first = true;
  for (const Report& r : reports) {
    if (!first) os << "\n";
    first = false;
    os << "== " << r.echo << "\n";
    os << "status: " << r.status << "\n";
    for (const auto& [key, value] : r.fields) {
      if (value.find('\n') == std::string::npos) {
        os << key << ": " << value << "\n";
      } else {
        os << key << ":\n";
        std::istringstream lines(value);
        std::string line;
        while (std::getline(lines, line)) os << "  " << line << "\n";
      }
    }
    if (r.status == "error") os << "error: " << r.error << "\n";
  }
  return os.str();
}

std::string render_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Report& r : reports) {
    nlohmann::ordered_json obj;
    obj["echo"] = r.echo;
    obj["line"] = r.line;
    obj["status"] = r.status;
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.fields) payload[key] = value;
    obj["payload"] = payload;
    if (r.status == "error") obj["error"] = r.error;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

}  // namespace zjetcli

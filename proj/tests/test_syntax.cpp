#include <doctest.h>

#include <random>

#include "epscalc/parser.hpp"
#include "epscalc/syntax.hpp"
#include "support/gen.hpp"

using namespace epscalc;
using namespace epscalc::syntax;

namespace {

Context ctx_of(std::initializer_list<std::pair<std::string, TypePtr>> entries) {
  return Context{std::vector<std::pair<std::string, TypePtr>>(entries)};
}

}  // namespace

TEST_CASE("parse_theory resolves declarations") {
  parser::Theory th =
      parser::parse_theory("type A; fun c : A; rel P(A); axiom ax1 : [] | P(c) |- P(c);");
  CHECK(th.sig.base_names().size() == 1);
  CHECK(th.sig.fun_names().size() == 1);
  CHECK(th.sig.rel_names().size() == 1);
  REQUIRE(th.axioms.size() == 1);
  CHECK(th.axioms[0].first == "ax1");
  CHECK(th.axioms[0].second.hyps.size() == 1);
}

TEST_CASE("parse_theory builds epsilon definitions") {
  parser::Theory th = parser::parse_theory("type A; rel P(A); def w := eps x:A. P(x);");
  REQUIRE(th.terms.size() == 1);
  const TermPtr& w = th.terms[0].second;
  CHECK(w->kind == Term::Kind::Epsilon);
  CHECK(type_equal(term_type(w), ty_base("A")));
  CHECK(free_vars(w).empty());  // x is bound
}

TEST_CASE("parse_theory rejects unknown symbols") {
  CHECK_THROWS_AS(parser::parse_theory("rel P(B);"), ParseError);
  CHECK_THROWS_AS(parser::parse_theory("type A; axiom a : [] | |- Q(c);"), ParseError);
  CHECK_THROWS_AS(parser::parse_theory("type A; type A;"), ParseError);
}

TEST_CASE("typecheck_term") {
  const Signature& sg = testgen::sig();
  TypePtr a = ty_base("A");

  SUBCASE("variable rule") {
    Context ctx = ctx_of({{"x", a}});
    CHECK(type_equal(typecheck_term(ctx, t_var("x", a), sg), a));
  }
  SUBCASE("epsilon former") {
    TermPtr e = t_eps("x", a, f_rel("P", {t_var("x", a)}));
    CHECK(type_equal(typecheck_term(Context{}, e, sg), a));
  }
  SUBCASE("unbound variable") {
    CHECK_THROWS_AS(typecheck_term(Context{}, t_var("y", a), sg), TypeError);
  }
  SUBCASE("argument type mismatch") {
    parser::Theory th = parser::parse_theory("type A; type B; fun c : A; rel S(B);");
    CHECK_THROWS_AS(wellform_formula(Context{}, f_rel("S", {t_app("c", {}, ty_base("A"))}), th.sig),
                    TypeError);
  }
}

TEST_CASE("wellform_formula") {
  const Signature& sg = testgen::sig();
  TypePtr a = ty_base("A");

  SUBCASE("reflexive equation") {
    Context ctx = ctx_of({{"x", a}});
    CHECK_NOTHROW(wellform_formula(ctx, f_eq(t_var("x", a), t_var("x", a)), sg));
  }
  SUBCASE("existential") {
    CHECK_NOTHROW(wellform_formula(Context{}, f_exists("x", a, f_rel("P", {t_var("x", a)})), sg));
  }
  SUBCASE("equation across distinct types") {
    parser::Theory th = parser::parse_theory("type A; type B; fun c : A; fun d : B;");
    FormulaPtr bad = f_eq(t_app("c", {}, ty_base("A")), t_app("d", {}, ty_base("B")));
    CHECK_THROWS_AS(wellform_formula(Context{}, bad, th.sig), TypeError);
  }
  SUBCASE("binder shadowing a context variable") {
    Context ctx = ctx_of({{"x", a}});
    FormulaPtr shadow = f_exists("x", a, f_rel("P", {t_var("x", a)}));
    CHECK_THROWS_AS(wellform_formula(ctx, shadow, sg), TypeError);
  }
}

TEST_CASE("substitution") {
  TypePtr a = ty_base("A");

  SUBCASE("epsilon instance") {
    FormulaPtr p_x = f_rel("P", {t_var("x", a)});
    TermPtr eps = t_eps("x", a, p_x);
    FormulaPtr inst = substitute(p_x, {{"x", eps}});
    CHECK(alpha_eq(inst, f_rel("P", {eps})));
  }
  SUBCASE("capture avoidance is forced") {
    // (exists y. R(x, y))[y/x] must rename the binder
    FormulaPtr phi = f_exists("y", a, f_rel("R", {t_var("x", a), t_var("y", a)}));
    FormulaPtr out = substitute(phi, {{"x", t_var("y", a)}});
    CHECK(out->kind == Formula::Kind::Exists);
    CHECK(out->name != "y");
    auto fv = free_vars(out);
    REQUIRE(fv.size() == 1);
    CHECK(fv.count("y") == 1);
    FormulaPtr expected = f_exists("z", a, f_rel("R", {t_var("y", a), t_var("z", a)}));
    CHECK(alpha_eq(out, expected));
  }
  SUBCASE("identity substitution") {
    FormulaPtr phi = f_exists("y", a, f_rel("R", {t_var("x", a), t_var("y", a)}));
    CHECK(alpha_eq(substitute(phi, {{"x", t_var("x", a)}}), phi));
  }
  SUBCASE("type mismatch is rejected") {
    FormulaPtr phi = f_rel("P", {t_var("x", ty_base("A"))});
    CHECK_THROWS_AS(substitute(phi, {{"x", t_app("d", {}, ty_base("B"))}}), TypeError);
  }
}

TEST_CASE("alpha equality") {
  TypePtr a = ty_base("A");
  SUBCASE("epsilon binder renaming") {
    TermPtr e1 = t_eps("x", a, f_rel("P", {t_var("x", a)}));
    TermPtr e2 = t_eps("y", a, f_rel("P", {t_var("y", a)}));
    CHECK(alpha_eq(e1, e2));
  }
  SUBCASE("distinct relations differ") {
    TermPtr e1 = t_eps("x", a, f_rel("P", {t_var("x", a)}));
    TermPtr e2 = t_eps("x", a, f_rel("Q", {t_var("x", a)}));
    CHECK_FALSE(alpha_eq(e1, e2));
  }
  SUBCASE("nested quantifiers") {
    FormulaPtr f1 = f_forall("x", a, f_exists("y", a, f_rel("R", {t_var("x", a), t_var("y", a)})));
    FormulaPtr f2 = f_forall("a", a, f_exists("b", a, f_rel("R", {t_var("a", a), t_var("b", a)})));
    CHECK(alpha_eq(f1, f2));
  }
  SUBCASE("swapped binder references differ") {
    FormulaPtr f1 = f_forall("x", a, f_exists("y", a, f_rel("R", {t_var("x", a), t_var("y", a)})));
    FormulaPtr f2 = f_forall("x", a, f_exists("y", a, f_rel("R", {t_var("y", a), t_var("x", a)})));
    CHECK_FALSE(alpha_eq(f1, f2));
  }
}

TEST_CASE("free_vars") {
  TypePtr a = ty_base("A");
  SUBCASE("epsilon binds its variable") {
    TermPtr e = t_eps("x", a, f_rel("R", {t_var("x", a), t_var("z", a)}));
    auto fv = free_vars(e);
    REQUIRE(fv.size() == 1);
    CHECK(fv.count("z") == 1);
  }
  SUBCASE("variable") {
    auto fv = free_vars(t_var("x", a));
    REQUIRE(fv.size() == 1);
    CHECK(fv.count("x") == 1);
  }
  SUBCASE("closed formula") { CHECK(free_vars(f_top()).empty()); }
}

TEST_CASE("substitute commutes with alpha_eq on random formulas") {
  std::mt19937_64 rng(7);
  TypePtr a = ty_base("A");
  for (int i = 0; i < 200; ++i) {
    testgen::Gen g{rng, {{"x", a}, {"y", a}}, 0};
    FormulaPtr phi = g.formula(5);
    // an alpha-variant via a reversible renaming of the free variable y
    FormulaPtr phi2 = substitute(substitute(phi, {{"y", t_var("w", a)}}), {{"w", t_var("y", a)}});
    REQUIRE(alpha_eq(phi, phi2));
    testgen::Gen gt{rng, {{"y", a}}, 100};
    TermPtr t = gt.term(2);
    CHECK(alpha_eq(substitute(phi, {{"x", t}}), substitute(phi2, {{"x", t}})));
  }
}

TEST_CASE("free variables of a substitution instance") {
  std::mt19937_64 rng(11);
  TypePtr a = ty_base("A");
  for (int i = 0; i < 200; ++i) {
    testgen::Gen g{rng, {{"x", a}, {"y", a}}, 0};
    FormulaPtr phi = g.formula(4);
    testgen::Gen gt{rng, {{"y", a}}, 100};
    TermPtr t = gt.term(2);
    auto fv_phi = free_vars(phi);
    auto fv_t = free_vars(t);
    auto fv_out = free_vars(substitute(phi, {{"x", t}}));
    // fv(phi[t/x]) is within (fv(phi) less x) plus fv(t), exactly that set
    // when x occurs free
    std::map<std::string, TypePtr> expected;
    for (const auto& [n, ty] : fv_phi)
      if (n != "x") expected.emplace(n, ty);
    bool x_free = fv_phi.count("x") > 0;
    if (x_free)
      for (const auto& [n, ty] : fv_t) expected.emplace(n, ty);
    for (const auto& [n, ty] : fv_out) CHECK(expected.count(n) == 1);
    if (x_free)
      for (const auto& [n, ty] : expected) CHECK(fv_out.count(n) == 1);
  }
}

TEST_CASE("typing is preserved by substitution") {
  std::mt19937_64 rng(13);
  const Signature& sg = testgen::sig();
  TypePtr a = ty_base("A");
  Context outer = ctx_of({{"y", a}});
  Context inner = ctx_of({{"y", a}, {"x", a}});
  for (int i = 0; i < 200; ++i) {
    testgen::Gen g{rng, {{"y", a}, {"x", a}}, 0};
    TermPtr u = g.term(3);
    REQUIRE(type_equal(typecheck_term(inner, u, sg), a));
    testgen::Gen gt{rng, {{"y", a}}, 100};
    TermPtr t = gt.term(2);
    TermPtr out = substitute(u, {{"x", t}});
    CHECK(type_equal(typecheck_term(outer, out, sg), a));
  }
}

TEST_CASE("printing then parsing is a fixed point") {
  const Signature& sg = testgen::sig();
  TypePtr a = ty_base("A");
  std::mt19937_64 rng(17);
  Context ctx = ctx_of({{"x", a}, {"y", a}});
  for (int i = 0; i < 300; ++i) {
    testgen::Gen g{rng, {{"x", a}, {"y", a}}, 0};
    FormulaPtr phi = g.formula(4);
    FormulaPtr reparsed = parser::parse_formula(show(phi), sg, ctx);
    CHECK(alpha_eq(phi, reparsed));
    CHECK(show(reparsed) == show(phi));
  }
}

TEST_CASE("type syntax round trips") {
  parser::Theory th = parser::parse_theory("type A; type B;");
  for (const char* s : {"A", "A * B", "A * B -> A", "A + B * A", "(A -> B) -> A",
                        "Unit * (A + Empty)", "A * (B * A)"}) {
    TypePtr t = parser::parse_type(s, th.sig);
    CHECK(type_equal(parser::parse_type(show(t), th.sig), t));
  }
  CHECK(show(parser::parse_type("A * B -> A", th.sig)) == "A * B -> A");
}

TEST_CASE("context invariants") {
  TypePtr a = ty_base("A");
  Context ctx = ctx_of({{"x", a}, {"y", a}});
  CHECK_THROWS_AS(ctx.extended("x", a), TypeError);
  CHECK_THROWS_AS(ctx_of({{"x", a}, {"x", a}}), TypeError);
  CHECK(context_subsequence(ctx_of({{"y", a}}), ctx));
  CHECK_FALSE(context_subsequence(ctx_of({{"y", a}, {"x", a}}), ctx));
  Context cat = ctx_of({{"x", a}}).concat(ctx_of({{"z", a}}));
  CHECK(cat.size() == 2);
  CHECK_THROWS_AS(ctx.concat(ctx_of({{"x", a}})), TypeError);
}

TEST_CASE("sequent syntax round trips on the golden corpus") {
  parser::Theory base = parser::parse_theory(
      "type A; fun c : A; rel P(A); rel Q(A);"
      "axiom eps_wit : [] | exists x:A. P(x) |- P(eps x:A. P(x));"
      "axiom two : x:A, y:A | P(x), Q(y) |- P(x) /\\ Q(y);");
  for (const auto& [name, seq] : base.axioms) {
    Sequent reparsed = parser::parse_sequent(show(seq), base.sig);
    CHECK(alpha_eq(reparsed, seq));
    CHECK(show(reparsed) == show(seq));
  }
}

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "epscalc/model.hpp"
#include "epscalc/proof.hpp"
#include "epscalc/semantics.hpp"
#include "support/gen.hpp"

using namespace epscalc;
using namespace epscalc::syntax;
using namespace epscalc::semantics;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string corpus(const std::string& rel) { return std::string(EPSCALC_CORPUS_DIR) + "/" + rel; }

// carrier A = 2, c = 0, f = swap, P = {1}, R = {}
Interpretation small_model() {
  Interpretation interp;
  interp.sig = testgen::sig();
  interp.carriers.emplace_back("A", 2);
  interp.funs.emplace("c", finset::FinMor{finset::FinObj{1}, finset::FinObj{2}, {0}});
  interp.funs.emplace("f", finset::FinMor{finset::FinObj{2}, finset::FinObj{2}, {1, 0}});
  interp.rels.emplace("P", finset::mk_subset(finset::FinObj{2}, {1}));
  interp.rels.emplace("R", finset::mk_subset(finset::FinObj{4}, {}));
  return interp;
}

}  // namespace

TEST_CASE("interpret_type") {
  Interpretation interp = small_model();
  CHECK(interpret_type(ty_unit(), interp).size == 1);
  CHECK(interpret_type(ty_fun(ty_base("A"), ty_base("A")), interp).size == 4);
  CHECK(interpret_type(ty_prod(ty_base("A"), ty_base("A")), interp).size == 4);
  CHECK(interpret_type(ty_sum(ty_base("A"), ty_unit()), interp).size == 3);
  CHECK_THROWS_AS(interpret_type(ty_empty(), interp), EmptyTypeViolation);

  SUBCASE("degenerate models interpret the empty type as a point") {
    Interpretation deg;
    deg.sig = testgen::sig();
    deg.carriers.emplace_back("A", 1);
    CHECK(interpret_type(ty_empty(), deg).size == 1);
    CHECK(interpret_type(ty_sum(ty_empty(), ty_base("A")), deg).size == 2);
  }
}

TEST_CASE("interpret_term") {
  Interpretation interp = small_model();
  TypePtr a = ty_base("A");

  SUBCASE("variables are projections") {
    Context ctx{{{"x", a}, {"y", a}}};
    ContextLayout layout = ContextLayout::make(ctx, interp);
    CHECK(layout.carrier.size == 4);
    finset::FinMor x = interpret_term(layout, t_var("x", a), interp);
    finset::FinMor y = interpret_term(layout, t_var("y", a), interp);
    CHECK(x.table == std::vector<std::size_t>{0, 0, 1, 1});
    CHECK(y.table == std::vector<std::size_t>{0, 1, 0, 1});
  }
  SUBCASE("epsilon of P over the empty context is the least witness") {
    ContextLayout layout = ContextLayout::make(Context{}, interp);
    finset::FinMor eps =
        interpret_term(layout, t_eps("x", a, f_rel("P", {t_var("x", a)})), interp);
    CHECK(eps.table == std::vector<std::size_t>{1});
  }
  SUBCASE("epsilon of falsity is the basepoint") {
    ContextLayout layout = ContextLayout::make(Context{}, interp);
    finset::FinMor eps = interpret_term(layout, t_eps("x", a, f_bot()), interp);
    CHECK(eps.table == std::vector<std::size_t>{0});
  }
  SUBCASE("application composes the table with the tuple") {
    Context ctx{{{"x", a}}};
    ContextLayout layout = ContextLayout::make(ctx, interp);
    finset::FinMor fx =
        interpret_term(layout, t_app("f", {t_var("x", a)}, a), interp);
    CHECK(fx.table == std::vector<std::size_t>{1, 0});
  }
}

TEST_CASE("interpret_formula") {
  Interpretation interp = small_model();
  TypePtr a = ty_base("A");
  ContextLayout closed = ContextLayout::make(Context{}, interp);

  CHECK(interpret_formula(closed, f_top(), interp) == finset::full_subset(finset::FinObj{1}));
  CHECK(interpret_formula(closed, f_bot(), interp) == finset::empty_subset(finset::FinObj{1}));

  FormulaPtr px = f_rel("P", {t_var("x", a)});
  CHECK(interpret_formula(closed, f_exists("x", a, px), interp) ==
        finset::full_subset(finset::FinObj{1}));
  CHECK(interpret_formula(closed, f_forall("x", a, px), interp) ==
        finset::empty_subset(finset::FinObj{1}));

  SUBCASE("equations become the diagonal") {
    Context ctx{{{"x", a}, {"y", a}}};
    ContextLayout layout = ContextLayout::make(ctx, interp);
    finset::Subset diag =
        interpret_formula(layout, f_eq(t_var("x", a), t_var("y", a)), interp);
    CHECK(diag == finset::mk_subset(finset::FinObj{4}, {0, 3}));
  }
}

TEST_CASE("holds") {
  Interpretation interp = small_model();
  const Signature& sg = testgen::sig();
  SUBCASE("identity sequents hold everywhere") {
    Sequent seq = parser::parse_sequent("x:A | P(x) |- P(x)", sg);
    CHECK(holds(seq, interp));
  }
  SUBCASE("the epsilon axiom holds") {
    Sequent seq = parser::parse_sequent("[] | exists x:A. P(x) |- P(eps x:A. P(x))", sg);
    CHECK(holds(seq, interp));
  }
  SUBCASE("universal claims fail on proper subsets") {
    Sequent seq = parser::parse_sequent("[] | |- forall x:A. P(x)", sg);
    CHECK_FALSE(holds(seq, interp));
  }
}

TEST_CASE("substitution lemma") {
  Interpretation interp = small_model();
  TypePtr a = ty_base("A");

  SUBCASE("constant instance") {
    Context inner{{{"x", a}}};
    FormulaPtr phi = f_rel("P", {t_var("x", a)});
    CHECK(substitution_lemma_check(Context{}, inner, phi, {t_app("c", {}, a)}, interp));
  }
  SUBCASE("identity substitution") {
    Context ctx{{{"x", a}}};
    FormulaPtr phi = f_rel("P", {t_var("x", a)});
    CHECK(substitution_lemma_check(ctx, ctx, phi, {t_var("x", a)}, interp));
  }
  SUBCASE("epsilon under substitution, random instances") {
    std::mt19937_64 rng(31);
    TypePtr a2 = ty_base("A");
    Context outer{{{"y", a2}}};
    Context inner{{{"y", a2}, {"x", a2}}};
    int done = 0;
    for (int i = 0; i < 200; ++i) {
      Interpretation m = testgen::model(rng, 3);
      testgen::Gen g{rng, {{"y", a2}, {"x", a2}}, 0};
      FormulaPtr phi = g.formula(3);
      testgen::Gen gt{rng, {{"y", a2}}, 100};
      TermPtr t = gt.term(2);
      CHECK(substitution_lemma_check(outer, inner, phi, {t_var("y", a2), t}, m));
      ++done;
    }
    CHECK(done == 200);
  }
}

TEST_CASE("epsilon terms of equal subsets get identical tables") {
  std::mt19937_64 rng(37);
  TypePtr a = ty_base("A");
  for (int i = 0; i < 100; ++i) {
    Interpretation m = testgen::model(rng, 3);
    ContextLayout layout = ContextLayout::make(Context{}, m);
    testgen::Gen g{rng, {{"x", a}}, 0};
    FormulaPtr psi = g.formula(3);
    FormulaPtr psi2 = f_and(psi, f_top());  // provably equivalent, structurally distinct
    ContextLayout ext = layout.extended("x", a, m);
    if (!(interpret_formula(ext, psi, m) == interpret_formula(ext, psi2, m))) continue;
    finset::FinMor e1 = interpret_term(layout, t_eps("x", a, psi), m);
    finset::FinMor e2 = interpret_term(layout, t_eps("x", a, psi2), m);
    CHECK(e1 == e2);
  }
}

TEST_CASE("empty type guard") {
  parser::Theory th = parser::parse_theory(slurp(corpus("empty.eps")));
  SUBCASE("carrier of size two is refused") {
    Interpretation interp = parse_model("carrier A = 2;", th.sig);
    TrivialityReport rep = empty_type_guard(th, interp);
    CHECK_FALSE(rep.ok);
    CHECK(rep.reason.find("singleton") != std::string::npos);
  }
  SUBCASE("all-singleton model is accepted") {
    Interpretation interp = parse_model(slurp(corpus("models/empty_deg.fin")), th.sig);
    CHECK(empty_type_guard(th, interp).ok);
    Sequent seq = parser::parse_sequent("[] | |- exists e:Empty. true", th.sig);
    CHECK(holds(seq, interp));
  }
  SUBCASE("theories without the empty type pass") {
    parser::Theory base = parser::parse_theory(slurp(corpus("base.eps")));
    Interpretation interp = parse_model(slurp(corpus("models/a2.fin")), base.sig);
    CHECK(empty_type_guard(base, interp).ok);
  }
}

TEST_CASE("model files") {
  parser::Theory base = parser::parse_theory(slurp(corpus("base.eps")));
  Interpretation text = parse_model(slurp(corpus("models/a2.fin")), base.sig);
  Interpretation json = parse_model(slurp(corpus("models/a2.json")), base.sig);
  CHECK(text.carrier_of("A") == 2);
  CHECK(text.funs.at("c").table == json.funs.at("c").table);
  CHECK(text.rels.at("P") == json.rels.at("P"));

  SUBCASE("round trip through the printer") {
    Interpretation again = parse_model(show_model(text), base.sig);
    CHECK(again.carriers == text.carriers);
    CHECK(again.funs.at("c") == text.funs.at("c"));
    CHECK(again.rels.at("P") == text.rels.at("P"));
    Interpretation viajson = parse_model(model_to_json_string(text), base.sig);
    CHECK(viajson.rels.at("Q") == text.rels.at("Q"));
  }
  SUBCASE("nonzero basepoints are rejected") {
    CHECK_THROWS_AS(parse_model("carrier A = 2; point A = 1;", base.sig), Error);
  }
  SUBCASE("unpointed carriers are rejected") {
    CHECK_THROWS_AS(parse_model("carrier A = 0;", base.sig), Error);
  }
  SUBCASE("missing carriers are rejected") {
    CHECK_THROWS_AS(parse_model("fun c = [0];", base.sig), Error);
  }
  SUBCASE("bad table shapes are rejected") {
    CHECK_THROWS_AS(parse_model("carrier A = 2; fun f = [0];", base.sig), Error);
    CHECK_THROWS_AS(parse_model("carrier A = 2; rel P = {(2)};", base.sig), Error);
    CHECK_THROWS_AS(parse_model("carrier A = 2; rel P = {(0, 1)};", base.sig), Error);
  }
}

TEST_CASE("interpretation enumeration") {
  parser::Theory th = parser::parse_theory("type A; rel P(A);");
  SUBCASE("count and order") {
    // sizes 1..3 with 2^k masks each: 2 + 4 + 8
    CHECK(count_interpretations(th, 3) == 14);
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> seen;
    for_each_interpretation(th, EnumSpec{2, 1000}, [&](const Interpretation& interp) {
      seen.emplace_back(interp.carrier_of("A"), interp.rels.at("P").members);
      return true;
    });
    REQUIRE(seen.size() == 6);
    CHECK(seen[0] == std::make_pair<std::size_t, std::vector<std::size_t>>(1, {}));
    CHECK(seen[1] == std::make_pair<std::size_t, std::vector<std::size_t>>(1, {0}));
    CHECK(seen[2] == std::make_pair<std::size_t, std::vector<std::size_t>>(2, {}));
    CHECK(seen[3] == std::make_pair<std::size_t, std::vector<std::size_t>>(2, {0}));
    CHECK(seen[4] == std::make_pair<std::size_t, std::vector<std::size_t>>(2, {1}));
    CHECK(seen[5] == std::make_pair<std::size_t, std::vector<std::size_t>>(2, {0, 1}));
  }
  SUBCASE("budgets truncate honestly") {
    EnumStats st =
        for_each_interpretation(th, EnumSpec{3, 5}, [](const Interpretation&) { return true; });
    CHECK(st.truncated);
    CHECK(st.visited == 5);
    CHECK(st.total == 14);
  }
  SUBCASE("theories mentioning Empty enumerate only the degenerate sizing") {
    parser::Theory empty = parser::parse_theory(slurp(corpus("empty.eps")));
    std::size_t n = 0;
    for_each_interpretation(empty, EnumSpec{3, 1000}, [&](const Interpretation& interp) {
      CHECK(interp.degenerate());
      ++n;
      return true;
    });
    CHECK(n == 4);  // two masks for P over a point, two for E
  }
}

TEST_CASE("soundness audit examples") {
  parser::Theory base = parser::parse_theory(slurp(corpus("base.eps")));
  SUBCASE("eps-i instance over one base type") {
    auto trees =
        kernel::parse_proofs(slurp(corpus("proofs/eps_i.prf")), base.sig);
    AuditReport rep = audit_soundness(*trees[0], base, EnumSpec{3, 1000000});
    CHECK(rep.ok());
    CHECK_FALSE(rep.truncated);
    CHECK(rep.models_checked == 228);
  }
  SUBCASE("lem instance") {
    auto trees = kernel::parse_proofs(slurp(corpus("proofs/lem.prf")), base.sig);
    AuditReport rep = audit_soundness(*trees[0], base, EnumSpec{2, 1000000});
    CHECK(rep.ok());
  }
  SUBCASE("an unsound sequent is caught") {
    kernel::DerivPtr fake = kernel::mk_node(
        kernel::Rule{kernel::RuleTag::Axiom, nullptr, nullptr, ""}, {},
        parser::parse_sequent("[] | |- forall x:A. P(x)", base.sig));
    AuditReport rep = audit_soundness(*fake, base, EnumSpec{2, 1000000});
    CHECK_FALSE(rep.ok());
  }
}

TEST_CASE("countermodel search") {
  parser::Theory th = parser::parse_theory("type A; rel P(A);");
  SUBCASE("unprovable existential fails in the empty relation") {
    Sequent seq = parser::parse_sequent("[] | |- exists x:A. P(x)", th.sig);
    CountermodelResult res = countermodel_search(seq, th, EnumSpec{3, 1000000});
    REQUIRE(res.model.has_value());
    CHECK(res.model->carrier_of("A") == 1);
    CHECK(res.model->rels.at("P").members.empty());
    CHECK(res.models_checked == 1);
  }
  SUBCASE("identity sequents have no countermodel") {
    Sequent seq = parser::parse_sequent("x:A | P(x) |- P(x)", th.sig);
    CountermodelResult res = countermodel_search(seq, th, EnumSpec{3, 1000000});
    CHECK_FALSE(res.model.has_value());
    CHECK_FALSE(res.truncated);
  }
  SUBCASE("epsilon satisfaction does not imply universal truth") {
    Sequent seq = parser::parse_sequent("[] | P(eps x:A. P(x)) |- forall x:A. P(x)", th.sig);
    CountermodelResult res = countermodel_search(seq, th, EnumSpec{3, 1000000});
    REQUIRE(res.model.has_value());
    CHECK(res.model->carrier_of("A") == 2);
    CHECK(res.model->rels.at("P").members == std::vector<std::size_t>{0});
  }
}

TEST_CASE("no countermodels for derived sequents") {
  parser::Theory base = parser::parse_theory(slurp(corpus("base.eps")));
  for (const char* pf : {"eps_i.prf", "classical.prf", "forall_i.prf", "imp_i.prf"}) {
    auto trees = kernel::parse_proofs(slurp(corpus(std::string("proofs/") + pf)), base.sig);
    for (const auto& d : trees) {
      CountermodelResult res = countermodel_search(d->conclusion, base, EnumSpec{2, 1000000});
      CHECK_FALSE(res.model.has_value());
    }
  }
}

#include <doctest.h>

#include "epscalc/doctrine.hpp"

using namespace epscalc;
using namespace epscalc::doctrine;
using finset::FinMor;
using finset::FinObj;
using finset::Subset;
using finset::mk_subset;

namespace {

FinMor mor(std::size_t dom, std::size_t cod, std::vector<std::size_t> t) {
  return finset::mk_mor(FinObj{dom}, FinObj{cod}, std::move(t));
}

// The running example: X = 3, Y = 2, psi = {<0,1>, <1,0>, <1,1>}.
Projection running_pi() { return first_projection(FinObj{3}, FinObj{2}); }
Subset running_psi() { return mk_subset(FinObj{6}, {1, 2, 3}); }

}  // namespace

TEST_CASE("reindex") {
  FinMor f = mor(3, 2, {0, 0, 1});
  CHECK(reindex(f, mk_subset(FinObj{2}, {0})) == mk_subset(FinObj{3}, {0, 1}));
  CHECK(reindex(identity(FinObj{4}), mk_subset(FinObj{4}, {1, 2})) == mk_subset(FinObj{4}, {1, 2}));
  CHECK(reindex(f, finset::full_subset(FinObj{2})) == finset::full_subset(FinObj{3}));
  SUBCASE("agrees with the pullback route") {
    CHECK(reindex_pullback(f, mk_subset(FinObj{2}, {0})) == mk_subset(FinObj{3}, {0, 1}));
  }
}

TEST_CASE("sigma") {
  Projection pi = running_pi();
  CHECK(sigma(pi, running_psi()) == mk_subset(FinObj{3}, {0, 1}));
  CHECK(sigma(pi, finset::empty_subset(FinObj{6})) == finset::empty_subset(FinObj{3}));
  CHECK(sigma(pi, finset::full_subset(FinObj{6})) == finset::full_subset(FinObj{3}));
  SUBCASE("image route equals direct projection everywhere") {
    Fiber fib{FinObj{6}};
    for (std::uint64_t m = 0; m < fib.count(); ++m) {
      Subset s = fib.element(m);
      CHECK(sigma(pi, s) == sigma_direct(pi, s));
    }
  }
}

TEST_CASE("adjunction") {
  LawVerdict v = verify_adjunction(FinObj{2}, FinObj{2}, 1, 0);
  CHECK(v.ok);
  CHECK(v.checked == (1 << 4) * (1 << 2));  // all 2^4 * 2^2 pairs
  CHECK(verify_adjunction(FinObj{3}, FinObj{4}, 1, 0).ok);
  CHECK(verify_adjunction(FinObj{3}, FinObj{4}, 2, 0).ok);
}

TEST_CASE("beck-chevalley") {
  SUBCASE("identity square") { CHECK(verify_beck_chevalley(FinObj{2}, FinObj{2}, FinObj{2}, 0).ok); }
  SUBCASE("point inclusion, exhaustive over 16 subsets") {
    LawVerdict v = verify_beck_chevalley(FinObj{2}, FinObj{2}, FinObj{1}, 0);
    CHECK(v.ok);
    CHECK(v.checked == 2 * 16);  // two maps 1 -> 2, 2^4 subsets each
  }
  SUBCASE("constant and all other maps") {
    CHECK(verify_beck_chevalley(FinObj{2}, FinObj{2}, FinObj{3}, 0).ok);
    CHECK(verify_beck_chevalley(FinObj{3}, FinObj{2}, FinObj{2}, 0).ok);
  }
}

TEST_CASE("epsilon construction") {
  Projection pi = running_pi();
  SUBCASE("running example gives the least witness with basepoint fallback") {
    CHECK(epsilon_categorical(pi, running_psi()) == mor(3, 2, {1, 0, 0}));
  }
  SUBCASE("empty subset maps to the basepoint") {
    CHECK(epsilon_categorical(pi, finset::empty_subset(FinObj{6})) == mor(3, 2, {0, 0, 0}));
  }
  SUBCASE("full subset picks the least witness") {
    CHECK(epsilon_categorical(pi, finset::full_subset(FinObj{6})) == mor(3, 2, {0, 0, 0}));
  }
  SUBCASE("unpointed fiber is rejected") {
    Projection bad = first_projection(FinObj{2}, FinObj{0});
    CHECK_THROWS_AS(epsilon_categorical(bad, finset::empty_subset(FinObj{0})), Error);
  }
}

TEST_CASE("epsilon oracle") {
  Projection pi = running_pi();
  CHECK(epsilon_oracle(pi, running_psi()) == mor(3, 2, {1, 0, 0}));
  SUBCASE("singleton") {
    CHECK(epsilon_oracle(pi, mk_subset(FinObj{6}, {5})) == mor(3, 2, {0, 0, 1}));
  }
  SUBCASE("fiber of size one is constant zero") {
    Projection p1 = first_projection(FinObj{3}, FinObj{1});
    CHECK(epsilon_oracle(p1, finset::full_subset(FinObj{3})) == mor(3, 1, {0, 0, 0}));
  }
}

TEST_CASE("construction equals oracle exhaustively") {
  for (std::size_t x = 1; x <= 4; ++x) {
    for (std::size_t y = 1; y <= 3; ++y) {
      Projection pi = first_projection(FinObj{x}, FinObj{y});
      Fiber fib{pi.total()};
      for (std::uint64_t m = 0; m < fib.count(); ++m) {
        Subset psi = fib.element(m);
        CHECK(epsilon_categorical(pi, psi) == epsilon_oracle(pi, psi));
      }
    }
  }
}

TEST_CASE("epsilon inequality and the finite-set equality") {
  Projection pi = running_pi();
  CHECK(check_epsilon_inequality(pi, running_psi()));
  CHECK(check_epsilon_inequality(pi, finset::empty_subset(FinObj{6})));
  CHECK(check_epsilon_inequality(pi, finset::full_subset(FinObj{6})));
  SUBCASE("both sides coincide in finite sets") {
    Fiber fib{pi.total()};
    for (std::uint64_t m = 0; m < fib.count(); ++m)
      CHECK(check_epsilon_def_equality(pi, fib.element(m)));
  }
}

TEST_CASE("epsilon extensionality on the nose") {
  Projection pi = running_pi();
  FinMor a = epsilon_extensional(pi, FinObj{6}, {3, 1, 2});
  FinMor b = epsilon_extensional(pi, FinObj{6}, {2, 3, 1, 1});
  CHECK(a == b);
  SUBCASE("double complement") {
    Subset s = running_psi();
    CHECK(epsilon_categorical(pi, finset::complement(finset::complement(s))) ==
          epsilon_categorical(pi, s));
  }
}

TEST_CASE("section through the epsilon of the graph") {
  CHECK(section_from_epsilon(mor(3, 2, {0, 0, 1})) == mor(2, 3, {0, 2}));
  SUBCASE("iso inverts") {
    FinMor f = mor(3, 3, {1, 2, 0});
    CHECK(section_from_epsilon(f) == finset::inverse(f));
  }
  SUBCASE("singleton") { CHECK(section_from_epsilon(mor(1, 1, {0})) == mor(1, 1, {0})); }
  SUBCASE("non-epis are rejected") {
    CHECK_THROWS_AS(section_from_epsilon(mor(1, 2, {0})), Error);
  }
}

TEST_CASE("fiber boolean algebra") {
  for (std::size_t n = 0; n <= 5; ++n) {
    LawVerdict v = verify_fiber_boolean_algebra(n);
    CHECK_MESSAGE(v.ok, v.detail);
  }
}

TEST_CASE("reindex is a homomorphism and a contravariant functor") {
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n) {
      LawVerdict v = verify_reindex_homomorphism(m, n);
      CHECK_MESSAGE(v.ok, v.detail);
    }
  CHECK(verify_reindex_functoriality(2, 3, 2).ok);
  CHECK(verify_reindex_functoriality(3, 2, 3).ok);
  CHECK(verify_reindex_functoriality(0, 2, 1).ok);
}

TEST_CASE("lem coproduct and choice") {
  CHECK(verify_lem_coproduct(4, 2).ok);
  CHECK(verify_ac_sections(4).ok);
  CHECK(verify_ac_epsilon_roundtrip(4).ok);
}

TEST_CASE("law suite is deterministic") {
  LawReport a = run_laws(2, 42);
  LawReport b = run_laws(2, 42);
  REQUIRE(a.verdicts.size() == b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    CHECK(a.verdicts[i].law == b.verdicts[i].law);
    CHECK(a.verdicts[i].instance == b.verdicts[i].instance);
    CHECK(a.verdicts[i].checked == b.verdicts[i].checked);
    CHECK(a.verdicts[i].ok == b.verdicts[i].ok);
  }
  CHECK(a.all_ok());
}

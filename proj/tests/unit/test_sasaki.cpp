#include "allab/catalog.hpp"
#include "allab/errors.hpp"
#include "allab/sasaki.hpp"
#include "doctest.h"

using namespace allab;

TEST_CASE("sasaki operations pointwise") {
  const auto L = m3();
  const int a = L.index_of("a"), b = L.index_of("b");
  SUBCASE("1 (.) x = x and x' ^ x = 0 (.) x on every fixture") {
    for (const auto& fx : fixtures()) {
      const auto& K = fx.lattice;
      for (int x = 0; x < K.n; ++x) {
        CHECK(sasaki_product(K, K.top, x) == x);
        CHECK(K.meet(K.comp(x), x) == sasaki_product(K, K.bottom, x));
      }
    }
  }
  SUBCASE("M3: a (.) b = b and a -> b = b") {
    CHECK(sasaki_product(L, a, b) == b);
    CHECK(sasaki_residual(L, a, b) == b);
  }
  SUBCASE("ten-element fixture: e (.) f = a, f -> a = e, 0 -> y = 1") {
    const auto F = fig2(Fig2Variant::first);
    CHECK(sasaki_product(F, F.index_of("e"), F.index_of("f")) == F.index_of("a"));
    CHECK(sasaki_residual(F, F.index_of("f"), F.index_of("a")) == F.index_of("e"));
    for (int y = 0; y < F.n; ++y) CHECK(sasaki_residual(F, F.bottom, y) == F.top);
  }
}

TEST_CASE("check_adjoint") {
  SUBCASE("M3 and both ten-element tables hold") {
    const auto r = check_adjoint(m3());
    CHECK(r.holds);
    CHECK(r.triples_checked == 125);
    const auto r1 = check_adjoint(fig2(Fig2Variant::first));
    CHECK(r1.holds);
    CHECK(r1.triples_checked == 1000);
    CHECK(check_adjoint(fig2(Fig2Variant::second)).holds);
  }
  SUBCASE("N5 fails backward at (a, c, a)") {
    const auto L = n5();
    const auto r = check_adjoint(L);
    REQUIRE_FALSE(r.holds);
    CHECK(*r.direction == AdjointDirection::backward);
    const std::array<int, 3> expected{L.index_of("a"), L.index_of("c"), L.index_of("a")};
    CHECK(*r.witness == expected);
    // Cross-check the first witness against a plain scan.
    bool found = false;
    for (int x = 0; x < L.n && !found; ++x) {
      for (int y = 0; y < L.n && !found; ++y) {
        for (int z = 0; z < L.n; ++z) {
          if (L.leq(sasaki_product(L, x, y), z) != L.leq(x, sasaki_residual(L, y, z))) {
            CHECK(std::array<int, 3>{x, y, z} == *r.witness);
            found = true;
            break;
          }
        }
      }
    }
    CHECK(found);
  }
}

TEST_CASE("check_theorem1") {
  SUBCASE("all six conditions hold on M3") {
    const auto rep = check_theorem1(m3());
    for (const auto* v : {&rep.a, &rep.b, &rep.c, &rep.d, &rep.e, &rep.f}) CHECK(v->holds);
    CHECK(rep.group_abc_agrees);
    CHECK(rep.group_def_agrees);
  }
  SUBCASE("on N5 both groups fail, each coherently") {
    const auto L = n5();
    const auto rep = check_theorem1(L);
    CHECK(rep.group_abc_agrees);
    CHECK(rep.group_def_agrees);
    // (b) breaks at x=c, y=b: c v a = c but a v (c ^ b) = a.
    CHECK_FALSE(rep.a.holds);
    CHECK_FALSE(rep.b.holds);
    CHECK_FALSE(rep.c.holds);
    CHECK(rep.b.witness->at("x") == L.index_of("c"));
    CHECK(rep.b.witness->at("y") == L.index_of("b"));
    CHECK_FALSE(rep.d.holds);
    CHECK_FALSE(rep.e.holds);
    CHECK_FALSE(rep.f.holds);
    CHECK(rep.e.witness->at("x") == L.index_of("c"));
    CHECK(rep.e.witness->at("y") == L.index_of("a"));
    CHECK(rep.f.witness->at("x") == L.index_of("a"));
    CHECK(rep.f.witness->at("y") == L.index_of("c"));
    CHECK(rep.d.witness->at("x") == L.index_of("a"));
    CHECK(rep.d.witness->at("y") == L.index_of("c"));
    CHECK(rep.d.witness->at("z") == L.index_of("a"));
  }
  SUBCASE("requires a complementation") {
    CHECK_THROWS_AS(check_theorem1(chain(3)), NotComplemented);
  }
}

TEST_CASE("variety membership") {
  SUBCASE("fixtures") {
    CHECK(is_member_of_v(m3()));
    CHECK(is_member_of_v(fig2(Fig2Variant::first)));
    CHECK(is_member_of_v(fig2(Fig2Variant::second)));
    CHECK_FALSE(is_member_of_v(n5()));
    CHECK_FALSE(is_member_of_v(chain(3)));  // not even complemented
  }
  SUBCASE("N5 fails through identity (e) for every complementation") {
    const auto L = n5();
    for (const auto& map : all_complementations(L)) {
      const auto rep = check_variety(replace_unary(L, map));
      CHECK_FALSE(rep.member);
      CHECK_FALSE(rep.identity_e.holds);
    }
  }
  SUBCASE("membership matches adjointness on complemented lattices") {
    for (const auto& fx : fixtures()) {
      if (!fx.lattice.complemented) continue;
      CHECK(is_member_of_v(fx.lattice) == check_adjoint(fx.lattice).holds);
    }
  }
  SUBCASE("complemented modular lattices and orthomodular lattices are members") {
    const auto b4 = direct_product(chain(2), chain(2));
    const auto flags = classify(b4);
    CHECK(flags.is_orthomodular);
    CHECK(is_member_of_v(b4));
    for (const auto& map : all_complementations(m3())) {
      CHECK(is_member_of_v(replace_unary(m3(), map)));  // M3 is modular
    }
    // Four atoms in swapped pairs: orthomodular but not distributive.
    const auto mo2 = make_m_n(4, {1, 0, 3, 2});
    const auto mo2_flags = classify(mo2);
    CHECK(mo2_flags.is_orthomodular);
    CHECK_FALSE(mo2_flags.is_distributive);
    CHECK(is_member_of_v(mo2));
  }
}

TEST_CASE("adjointness forces complementation") {
  SUBCASE("constant-bottom unary map on M3 is vacuous") {
    const auto L = m3();
    CHECK(check_lemma1(replace_unary(L, std::vector<int>(5, L.bottom))) ==
          Lemma1Verdict::vacuous);
  }
  SUBCASE("2-chain with the swap is confirmed") {
    CHECK(check_lemma1(chain(2)) == Lemma1Verdict::confirmed);
  }
  SUBCASE("no violations over every lattice with up to 4 elements and every unary map") {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& L : enumerate_bounded_lattices(n)) {
        std::vector<int> map(static_cast<std::size_t>(n), 0);
        for (;;) {
          CHECK(check_lemma1(replace_unary(L, map)) != Lemma1Verdict::violation);
          int pos = n - 1;
          while (pos >= 0 && ++map[static_cast<std::size_t>(pos)] == n) {
            map[static_cast<std::size_t>(pos)] = 0;
            --pos;
          }
          if (pos < 0) break;
        }
      }
    }
  }
}

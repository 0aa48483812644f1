#include <algorithm>

#include "allab/catalog.hpp"
#include "allab/congruence.hpp"
#include "allab/errors.hpp"
#include "allab/sasaki.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace allab;

TEST_CASE("m3 fixture") {
  const auto L = m3();
  CHECK(is_member_of_v(L));
  const auto flags = classify(L);
  CHECK_FALSE(flags.unary_is_involution);
  CHECK(flags.unary_is_antitone);
  CHECK(flags.is_modular);
}

TEST_CASE("fig2 fixtures") {
  const auto F = fig2(Fig2Variant::first);
  const auto G = fig2(Fig2Variant::second);
  CHECK(is_member_of_v(F));
  CHECK(is_member_of_v(G));
  CHECK(classify(F).is_modular);
  CHECK(classify(F).unary_is_involution);
  CHECK_FALSE(classify(F).unary_is_antitone);
  CHECK_FALSE(classify(G).unary_is_involution);

  SUBCASE("the tables differ exactly on f, g, h") {
    REQUIRE(F.labels == G.labels);
    for (int x = 0; x < F.n; ++x) {
      const std::string& l = F.label(x);
      if (l == "f" || l == "g" || l == "h") {
        CHECK(F.comp(x) != G.comp(x));
      } else {
        CHECK(F.comp(x) == G.comp(x));
      }
    }
    CHECK(G.comp(G.index_of("f")) == G.index_of("b"));
    CHECK(G.comp(G.index_of("g")) == G.index_of("c"));
    CHECK(G.comp(G.index_of("h")) == G.index_of("a"));
    CHECK(F.leq_tab == G.leq_tab);
  }
}

TEST_CASE("make_m_n") {
  SUBCASE("the 3-cycle gives a copy of M3") {
    CHECK(are_isomorphic(make_m_n(3, {1, 2, 0}), m3(), true));
  }
  SUBCASE("double transposition on four atoms") {
    const auto L = make_m_n(4, {1, 0, 3, 2});
    CHECK(is_member_of_v(L));
    CHECK(check_congruence_properties(L).simple);
  }
  SUBCASE("identity permutation is rejected") {
    CHECK_THROWS_AS(make_m_n(3, {0, 1, 2}), NotADerangement);
    CHECK_THROWS_AS(make_m_n(4, {1, 0, 2, 3}), NotADerangement);
    CHECK_THROWS_AS(make_m_n(3, {1, 1, 0}), NotADerangement);
    CHECK_THROWS_AS(make_m_n(2, {1, 0}), Error);
  }
  SUBCASE("members of the variety and simple for n = 3..6, any derangement class") {
    for (int n = 3; n <= 6; ++n) {
      for (const auto& perm : derangements_up_to_conjugacy(n)) {
        const auto L = make_m_n(n, perm);
        CHECK(L.complemented);
        CHECK(is_member_of_v(L));
        CHECK(check_congruence_properties(L).simple);
      }
    }
  }
}

TEST_CASE("derangement representatives per cycle type") {
  CHECK(derangements_up_to_conjugacy(3).size() == 1);
  CHECK(derangements_up_to_conjugacy(4).size() == 2);
  CHECK(derangements_up_to_conjugacy(5).size() == 2);
  // (6), (4,2), (3,3), (2,2,2)
  CHECK(derangements_up_to_conjugacy(6).size() == 4);
  for (int n = 3; n <= 6; ++n) {
    for (const auto& perm : derangements_up_to_conjugacy(n)) {
      for (int i = 0; i < n; ++i) CHECK(perm[static_cast<std::size_t>(i)] != i);
    }
  }
}

TEST_CASE("enumerate_bounded_lattices") {
  SUBCASE("counts up to isomorphism match the published sequence") {
    const int expected[] = {1, 1, 1, 2, 5, 15, 53};
    for (int n = 1; n <= 7; ++n) {
      CHECK(enumerate_bounded_lattices(n).size() == static_cast<std::size_t>(expected[n - 1]));
    }
    CHECK_THROWS_AS(enumerate_bounded_lattices(8), Error);
    CHECK_THROWS_AS(enumerate_bounded_lattices(0), Error);
  }
  SUBCASE("counts match the independent cover-search oracle") {
    for (int n = 1; n <= 6; ++n) {
      CHECK(static_cast<int>(enumerate_bounded_lattices(n).size()) ==
            oracle::count_lattices_by_cover_search(n));
    }
  }
  SUBCASE("no two emitted lattices are isomorphic, and each validates") {
    for (int n = 1; n <= 6; ++n) {
      const auto all = enumerate_bounded_lattices(n);
      for (std::size_t i = 0; i < all.size(); ++i) {
        validate(all[i]);
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          CHECK_FALSE(oracle::isomorphic_orders(all[i], all[j]));
        }
      }
    }
  }
  SUBCASE("the five-element batch contains M3, which stays a member under complementation") {
    const auto batch = enumerate_bounded_lattices(5);
    bool found_m3_in_v = false;
    for (const auto& L : batch) {
      for (const auto& map : all_complementations(L)) {
        const auto C = replace_unary(L, map);
        if (is_member_of_v(C) && are_isomorphic(C, m3(), false)) found_m3_in_v = true;
      }
    }
    CHECK(found_m3_in_v);
  }
  SUBCASE("deterministic output order") {
    const auto a = enumerate_bounded_lattices(5);
    const auto b = enumerate_bounded_lattices(5);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].leq_tab == b[i].leq_tab);
  }
}

TEST_CASE("shipped fixture list") {
  const auto& fx = fixtures();
  REQUIRE(fx.size() == 7);
  CHECK(fx[0].id == "m3");
  CHECK(fx[1].id == "fig2_first");
  CHECK(fx[2].id == "fig2_second");
  CHECK(fx[3].id == "n5");
  CHECK(fx[4].id == "m4");
  for (const auto& f : fx) validate(f.lattice);
}

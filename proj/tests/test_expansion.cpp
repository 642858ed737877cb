#include <doctest.h>

#include <map>

#include "catalog.hpp"
#include "mono/error.hpp"
#include "mono/expansion.hpp"
#include "mono/greens.hpp"

using namespace mono;

namespace {

  GeneratorMap z2_single(FiniteMonoid const& z2) {
    return GeneratorMap(z2, {{'a', z2.element_named("g")}});
  }

}  // namespace

TEST_CASE("letter_profile") {
  auto const z2 = test::load_fixture("z2.mon");
  auto const g  = z2_single(z2);
  CHECK(letter_profile(z2, g, 'a', 1) == CutProfile(1, {1}));
  CHECK(letter_profile(z2, g, 'a', 2) == CutProfile(2, {1, 0, 0, 1}));
  GeneratorMap const id(z2, {{'e', 0}});
  CHECK(letter_profile(z2, id, 'e', 3) == CutProfile::identity(z2, 3));
  CHECK_THROWS_AS(letter_profile(z2, g, 'b', 2), InvalidArgument);
}

TEST_CASE("profile_product: worked examples") {
  auto const z2 = test::load_fixture("z2.mon");
  auto const g  = z2_single(z2);
  auto const p1 = letter_profile(z2, g, 'a', 2);
  CHECK(profile_product(z2, p1, CutProfile::identity(z2, 2)) == p1);
  CHECK(profile_product(z2, CutProfile::identity(z2, 2), p1) == p1);
  auto const p2 = profile_product(z2, p1, p1);
  CHECK(p2 == CutProfile(2, {0, 0, 1, 1}));
  CHECK(p2 == cut_brute_force(z2, g, "aa", 2));
  CHECK_THROWS_AS(profile_product(z2, p1, letter_profile(z2, g, 'a', 3)),
                  InvalidArgument);
}

TEST_CASE("profile_product(cut u, cut v) = cut(uv)") {
  for (auto const& e : test::core_catalog()) {
    auto const words = test::words_up_to(4);
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<CutProfile> profiles;
      for (auto const& w : words) {
        profiles.push_back(cut_brute_force(e.monoid, e.gens, w, n));
      }
      for (std::size_t x = 0; x < words.size(); ++x) {
        for (std::size_t y = 0; y < words.size(); ++y) {
          CHECK(profile_product(e.monoid, profiles[x], profiles[y])
                == cut_brute_force(e.monoid, e.gens, words[x] + words[y], n));
        }
      }
    }
  }
}

TEST_CASE("build_expansion: worked examples") {
  SUBCASE("trivial monoid") {
    auto const t = test::load_fixture("trivial.mon");
    GeneratorMap const g(t, {{'a', 0}, {'b', 0}});
    for (std::size_t n = 1; n <= 3; ++n) {
      CHECK(build_expansion(t, g, n).order() == 1);
    }
  }
  SUBCASE("Z2 with one generator at n = 2") {
    auto const z2 = test::load_fixture("z2.mon");
    auto const e  = build_expansion(z2, z2_single(z2), 2);
    REQUIRE(e.order() == 3);
    CHECK(e.profiles[0] == CutProfile(2, {0, 0}));
    CHECK(e.profiles[1] == CutProfile(2, {0, 1, 1, 0}));
    CHECK(e.profiles[2] == CutProfile(2, {0, 0, 1, 1}));
    CHECK(e.representatives == std::vector<Word>{"", "a", "aa"});
    CHECK(e.eta == std::vector<element>{0, 1, 0});
    CHECK(e.fiber_sizes() == std::vector<std::size_t>{2, 1});
    // {P1, P2} is a copy of Z2 with P2 as its identity.
    auto const& x = e.monoid;
    CHECK(x.multiply(1, 1) == 2);
    CHECK(x.multiply(2, 1) == 1);
    CHECK(x.multiply(2, 2) == 2);
    CHECK(check_eta_aperiodic(e));
  }
  SUBCASE("n = 0 and the cap") {
    auto const b = test::load_fixture("b21.mon");
    GeneratorMap const g(b, {{'a', 1}, {'b', 2}});
    CHECK_THROWS_AS(build_expansion(b, g, 0), InvalidArgument);
    ExpansionOptions opts;
    opts.cap = 50;
    try {
      build_expansion(b, g, 2, opts);
      FAIL("expected CapExceeded");
    } catch (CapExceeded const& err) {
      CHECK(err.reached() > 50);
    }
  }
  SUBCASE("non-generating maps expand the generated submonoid") {
    auto const n3 = test::load_fixture("n3.mon");
    GeneratorMap const g(n3, {{'z', n3.element_named("0")}});
    auto const e = build_expansion(n3, g, 2);
    CHECK(e.fiber_sizes()[n3.element_named("a")] == 0);
    // P0, cut(z) = {(1,0),(0,1)}, and cut(zz) which adds (0,0).
    CHECK(e.order() == 3);
  }
}

TEST_CASE("M^(1) is isomorphic to M via eta") {
  for (auto const& e : test::full_catalog()) {
    auto const x = build_expansion(e.monoid, e.gens, 1);
    REQUIRE(x.order() == e.monoid.order());
    std::vector<bool> hit(x.order(), false);
    for (element p = 0; p < x.order(); ++p) {
      hit[x.eta[p]] = true;
      for (element q = 0; q < x.order(); ++q) {
        CHECK(x.eta[x.monoid.multiply(p, q)]
              == e.monoid.multiply(x.eta[p], x.eta[q]));
      }
    }
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("expansion invariants over the catalog") {
  for (auto const& e : test::full_catalog()) {
    for (std::size_t n = 1; n <= 2; ++n) {
      auto const  x = build_expansion(e.monoid, e.gens, n);
      auto const& t = x.monoid;
      CHECK(x.profiles[0] == CutProfile::identity(e.monoid, n));
      CHECK(t.identity() == 0);
      // Stored profiles equal the cut of their representatives.
      for (element p = 0; p < x.order(); ++p) {
        CHECK(cut_brute_force(e.monoid, e.gens, x.representatives[p], n)
              == x.profiles[p]);
        CHECK(evaluate(e.monoid, e.gens, x.representatives[p]) == x.eta[p]);
        CHECK(evaluate(t, x.monoid_generators, x.representatives[p]) == p);
      }
      // Table = profile product; η is a morphism onto the generated submonoid.
      for (element p = 0; p < x.order(); ++p) {
        for (element q = 0; q < x.order(); ++q) {
          CHECK(x.profiles[t.multiply(p, q)]
                == profile_product(e.monoid, x.profiles[p], x.profiles[q]));
          CHECK(x.eta[t.multiply(p, q)]
                == e.monoid.multiply(x.eta[p], x.eta[q]));
        }
      }
      auto const            gen = generated_submonoid(e.monoid, e.gens);
      std::vector<element>  image(x.eta.begin(), x.eta.end());
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      CHECK(image == gen);
      if (x.order() <= 80) {
        CHECK_FALSE(t.associativity_failure().has_value());
      }
      CHECK(check_eta_aperiodic(x));
      if (is_aperiodic(e.monoid)) {
        CHECK(is_aperiodic(t));
      }
      // Representatives are shortlex-least: no shorter word has the profile.
      for (auto const& w : test::words_up_to(3)) {
        auto const p = x.find(cut(e.monoid, e.gens, w, n));
        REQUIRE(p.has_value());
        auto const& rep = x.representatives[*p];
        CHECK((rep.size() < w.size() || (rep.size() == w.size() && rep <= w)));
      }
    }
  }
}

TEST_CASE("~ is a congruence contained in the kernel of A* -> M") {
  for (auto const& e : test::core_catalog()) {
    auto const words = test::words_up_to(4);
    for (std::size_t n = 1; n <= 3; ++n) {
      std::map<CutProfile, std::vector<Word>> classes;
      for (auto const& w : words) {
        classes[cut(e.monoid, e.gens, w, n)].push_back(w);
      }
      for (auto const& [p, ws] : classes) {
        for (auto const& u : ws) {
          CHECK(evaluate(e.monoid, e.gens, u)
                == evaluate(e.monoid, e.gens, ws.front()));
          for (char a : std::string("ab")) {
            auto const& v = ws.front();
            CHECK(cut_brute_force(e.monoid, e.gens, u + a, n)
                  == cut_brute_force(e.monoid, e.gens, v + a, n));
            CHECK(cut_brute_force(e.monoid, e.gens, a + u, n)
                  == cut_brute_force(e.monoid, e.gens, a + v, n));
          }
        }
      }
    }
  }
}

TEST_CASE("check_eta_aperiodic") {
  auto const z2 = test::load_fixture("z2.mon");
  auto const e2 = build_expansion(z2, z2_single(z2), 2);
  // Fiber over 1 is {P0, P2}, a two-element semilattice.
  CHECK(e2.eta[0] == 0);
  CHECK(e2.eta[2] == 0);
  CHECK(e2.monoid.multiply(0, 2) == 2);
  CHECK(e2.monoid.multiply(2, 2) == 2);
  CHECK(check_eta_aperiodic(e2));
  for (auto const& e : test::full_catalog()) {
    CHECK(check_eta_aperiodic(build_expansion(e.monoid, e.gens, 1)));
  }
}

TEST_CASE("check_eta_aperiodic finds a non-aperiodic fiber") {
  // Hand-built "expansion" of the trivial monoid whose fiber is Z2.
  auto const z2 = test::load_fixture("z2.mon");
  auto const t  = test::load_fixture("trivial.mon");
  ExpandedMonoid fake{t,
                      GeneratorMap(t, {{'a', 0}}),
                      1,
                      {CutProfile(1, {0}), CutProfile(1, {0})},
                      z2,
                      GeneratorMap(z2, {{'a', 1}}),
                      {0, 0},
                      {"", "a"}};
  auto const c = eta_aperiodicity_counterexample(fake);
  REQUIRE(c.has_value());
  CHECK(c->profile == 1);
  CHECK(c->base_idempotent == 0);
}

TEST_CASE("check_refinement") {
  auto const z2 = test::load_fixture("z2.mon");
  auto const g  = z2_single(z2);
  auto const e1 = build_expansion(z2, g, 1);
  auto const e2 = build_expansion(z2, g, 2);
  auto const r  = check_refinement(e2, e1);
  CHECK(r.ok);
  CHECK(r.map == std::vector<element>{0, 1, 0});
  CHECK_THROWS_AS(check_refinement(e1, e2), InvalidArgument);

  auto const t = test::load_fixture("trivial.mon");
  GeneratorMap const tg(t, {{'a', 0}});
  CHECK(check_refinement(build_expansion(t, tg, 2), build_expansion(t, tg, 1)).ok);

  auto const n3 = test::load_fixture("n3.mon");
  GeneratorMap const ng(n3, {{'a', 1}});
  CHECK_THROWS_AS(check_refinement(build_expansion(n3, ng, 2), e1),
                  InvalidArgument);

  for (auto const& e : test::full_catalog()) {
    for (std::size_t n = 1; n <= 2; ++n) {
      CHECK(check_refinement(build_expansion(e.monoid, e.gens, n + 1),
                             build_expansion(e.monoid, e.gens, n))
                .ok);
    }
  }
}

TEST_CASE("parallel builds are identical to sequential ones") {
  auto const b = test::load_fixture("b21.mon");
  GeneratorMap const g(b, {{'a', 1}, {'b', 2}});
  ExpansionOptions par;
  par.jobs      = 4;
  auto const s  = build_expansion(b, g, 2);
  auto const p  = build_expansion(b, g, 2, par);
  CHECK(s.profiles == p.profiles);
  CHECK(s.monoid == p.monoid);
  CHECK(s.representatives == p.representatives);
}

TEST_CASE("cut_by_products and truncate_profile") {
  for (auto const& e : test::core_catalog()) {
    for (auto const& w : test::words_up_to(4)) {
      for (std::size_t n = 2; n <= 3; ++n) {
        auto const p = cut_by_products(e.monoid, e.gens, w, n);
        CHECK(p == cut_brute_force(e.monoid, e.gens, w, n));
        CHECK(truncate_profile(e.monoid, p)
              == cut_brute_force(e.monoid, e.gens, w, n - 1));
      }
    }
  }
  auto const z2 = test::load_fixture("z2.mon");
  CHECK_THROWS_AS(truncate_profile(z2, CutProfile(1, {0})), InvalidArgument);
}

#include <doctest.h>

#include <set>

#include "catalog.hpp"
#include "mono/error.hpp"
#include "mono/greens.hpp"
#include "mono/ideal.hpp"

using namespace mono;
using mono::test::load_fixture;

namespace {

  element el(FiniteMonoid const& m, char const* name) {
    return m.element_named(name);
  }

  std::vector<element> els(FiniteMonoid const& m,
                           std::initializer_list<char const*> names) {
    std::vector<element> out;
    for (auto n : names) {
      out.push_back(m.element_named(n));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Oracles: direct set computations, independent of the bitset code.
  std::set<element> oracle_right(FiniteMonoid const& m, element x) {
    std::set<element> s;
    for (element y = 0; y < m.order(); ++y) {
      s.insert(m.multiply(x, y));
    }
    return s;
  }

  std::set<element> oracle_left(FiniteMonoid const& m, element x) {
    std::set<element> s;
    for (element y = 0; y < m.order(); ++y) {
      s.insert(m.multiply(y, x));
    }
    return s;
  }

  std::set<element> oracle_two_sided(FiniteMonoid const& m, element x) {
    std::set<element> s;
    for (element y = 0; y < m.order(); ++y) {
      for (element z = 0; z < m.order(); ++z) {
        s.insert(m.multiply(m.multiply(y, x), z));
      }
    }
    return s;
  }

  // Naive power by repeated multiplication.
  element oracle_power(FiniteMonoid const& m, element x, std::size_t k) {
    element acc = m.identity();
    for (std::size_t i = 0; i < k; ++i) {
      acc = m.multiply(acc, x);
    }
    return acc;
  }

  // Ideal closure by fixpoint iteration from the generators.
  std::vector<element> oracle_ideal(FiniteMonoid const&         m,
                                    std::vector<element> const& gens) {
    std::set<element> s(gens.begin(), gens.end());
    bool              grew = true;
    while (grew) {
      grew = false;
      for (auto a : std::set<element>(s)) {
        for (element x = 0; x < m.order(); ++x) {
          grew |= s.insert(m.multiply(x, a)).second;
          grew |= s.insert(m.multiply(a, x)).second;
        }
      }
    }
    return {s.begin(), s.end()};
  }

}  // namespace

TEST_CASE("load_table accepts the catalog tables") {
  auto const trivial = load_fixture("trivial.mon");
  CHECK(trivial.order() == 1);
  CHECK(trivial.identity() == 0);

  auto const z2 = load_fixture("z2.mon");
  CHECK(z2.order() == 2);
  CHECK(z2.multiply(el(z2, "g"), el(z2, "g")) == el(z2, "1"));
  CHECK(z2.names() == std::vector<std::string>{"1", "g"});
}

TEST_CASE("load_table rejects a non-associative table and names the triple") {
  // 1 is an identity; x*x = y, x*y = x, y*x = y, y*y = y.
  // (x*x)*x = y*x = y but x*(x*x) = x*y = x.
  std::string const text = "elements: 1 x y\n"
                           "identity: 1\n"
                           "table:\n"
                           "1 x y\n"
                           "x y x\n"
                           "y y y\n";
  CHECK_THROWS_WITH_AS(load_table(text),
                       "not associative: (x*x)*x != x*(x*x)",
                       InvalidMonoid);
}

TEST_CASE("load_table rejects bad identities and malformed text") {
  CHECK_THROWS_AS(load_table("elements: 1 g\nidentity: g\ntable:\n1 g\ng 1\n"),
                  InvalidMonoid);
  CHECK_THROWS_AS(load_table("elements: 1 g\nidentity: z\ntable:\n1 g\ng 1\n"),
                  InvalidMonoid);
  CHECK_THROWS_AS(load_table("elements: 1 g\ntable:\n1 g\ng 1\n"), ParseError);
  CHECK_THROWS_AS(load_table("elements: 1 g\nidentity: 1\ntable:\n1 g\n"),
                  ParseError);
  CHECK_THROWS_AS(load_table("elements: 1 g\nidentity: 1\ntable:\n1 g\ng q\n"),
                  ParseError);
  CHECK_THROWS_AS(load_table("elements: 1 1\nidentity: 1\ntable:\n1 1\n1 1\n"),
                  ParseError);
  CHECK_THROWS_AS(load_table(""), ParseError);
}

TEST_CASE("generate_from_transformations") {
  SUBCASE("identity generator gives the trivial monoid") {
    auto g = generate_from_transformations(2, {{'a', {0, 1}}});
    CHECK(g.monoid.order() == 1);
    CHECK(g.generators.image('a') == 0);
  }
  SUBCASE("a swap gives Z2") {
    auto g = generate_from_transformations(2, {{'a', {1, 0}}});
    CHECK(g.monoid.order() == 2);
    CHECK(g.words == std::vector<Word>{"", "a"});
    CHECK(g.monoid.multiply(1, 1) == 0);
  }
  SUBCASE("two constants give the flip-flop") {
    auto g = generate_from_transformations(2, {{'s', {0, 0}}, {'r', {1, 1}}});
    CHECK(g.monoid.order() == 3);
    CHECK(g.monoid.names() == std::vector<std::string>{"1", "s", "r"});
    // Right-zero: x*y = y for y != 1.
    auto const& m = g.monoid;
    CHECK(m.multiply(el(m, "s"), el(m, "r")) == el(m, "r"));
    CHECK(m.multiply(el(m, "r"), el(m, "s")) == el(m, "s"));
    CHECK(m == load_fixture("flipflop.mon"));
  }
  SUBCASE("elements come in shortlex order of their least words") {
    auto g = generate_from_transformations(3,
                                           {{'a', {1, 2, 0}}, {'b', {1, 0, 2}}});
    CHECK(g.monoid.order() == 6);
    for (std::size_t k = 1; k < g.words.size(); ++k) {
      auto const& x = g.words[k - 1];
      auto const& y = g.words[k];
      CHECK((x.size() < y.size() || (x.size() == y.size() && x < y)));
    }
    for (element x = 0; x < g.monoid.order(); ++x) {
      CHECK(evaluate(g.monoid, g.generators, g.words[x]) == x);
    }
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(generate_from_transformations(
                        3, {{'a', {1, 2, 0}}, {'b', {1, 0, 2}}}, 5),
                    CapExceeded);
    CHECK_THROWS_AS(generate_from_transformations(2, {{'a', {0, 2}}}),
                    InvalidArgument);
  }
}

TEST_CASE("multiply, power and omega_power") {
  auto const z2 = load_fixture("z2.mon");
  auto const n3 = load_fixture("n3.mon");
  CHECK(multiply(z2, el(z2, "g"), el(z2, "g")) == el(z2, "1"));
  CHECK(power(n3, el(n3, "a"), 2) == el(n3, "0"));
  CHECK(power(n3, el(n3, "a"), 0) == n3.identity());
  CHECK(power(z2, el(z2, "g"), 0) == z2.identity());
  CHECK_THROWS_AS(multiply(z2, 0, 2), InvalidArgument);

  CHECK(omega_power(z2, el(z2, "g")) == el(z2, "1"));
  CHECK(omega_power(n3, el(n3, "a")) == el(n3, "0"));
  for (auto const& e : test::full_catalog()) {
    auto const& m = e.monoid;
    for (auto x : idempotents(m)) {
      CHECK(omega_power(m, x) == x);
    }
    for (element a = 0; a < m.order(); ++a) {
      for (std::size_t k = 0; k <= 2 * m.order(); ++k) {
        CHECK(power(m, a, k) == oracle_power(m, a, k));
      }
      // ω-power is idempotent and one of a, a², …, a^|M|.
      element const w = omega_power(m, a);
      CHECK(is_idempotent(m, w));
      bool found = false;
      for (std::size_t k = 1; k <= m.order(); ++k) {
        found |= oracle_power(m, a, k) == w;
      }
      CHECK(found);
      auto const [index, period] = index_and_period(m, a);
      CHECK(oracle_power(m, a, index) == oracle_power(m, a, index + period));
    }
  }
}

TEST_CASE("greens on the worked examples") {
  SUBCASE("Z2 is a single H-class") {
    auto const m = load_fixture("z2.mon");
    auto const g = greens(m);
    CHECK(g.number_of_j_classes() == 1);
    CHECK(GreensData::classes(g.h_class).size() == 1);
    CHECK(GreensData::classes(g.h_class)[0].size() == 2);
  }
  SUBCASE("N3 is a chain of three J-classes") {
    auto const m = load_fixture("n3.mon");
    auto const g = greens(m);
    CHECK(g.number_of_j_classes() == 3);
    auto const one = g.j_class[el(m, "1")];
    auto const a   = g.j_class[el(m, "a")];
    auto const z   = g.j_class[el(m, "0")];
    CHECK(g.j_leq[a][one]);
    CHECK(g.j_leq[z][a]);
    CHECK_FALSE(g.j_leq[one][a]);
    CHECK_FALSE(g.j_leq[a][z]);
  }
  SUBCASE("flip-flop") {
    auto const m = load_fixture("flipflop.mon");
    auto const g = greens(m);
    auto const s = el(m, "s"), r = el(m, "r");
    CHECK(g.number_of_j_classes() == 2);
    CHECK(g.j_related(s, r));
    CHECK(g.r_related(s, r));
    CHECK_FALSE(g.l_related(s, r));
    CHECK(left_ideal(m, s) == std::vector<element>{s});
    CHECK(left_ideal(m, r) == std::vector<element>{r});
    CHECK(has_trivial_h(g));
  }
}

TEST_CASE("greens agrees with direct ideal comparison on the catalog") {
  for (auto const& e : test::full_catalog()) {
    auto const& m = e.monoid;
    auto const  g = greens(m);
    for (element x = 0; x < m.order(); ++x) {
      for (element y = 0; y < m.order(); ++y) {
        CHECK(g.r_related(x, y) == (oracle_right(m, x) == oracle_right(m, y)));
        CHECK(g.l_related(x, y) == (oracle_left(m, x) == oracle_left(m, y)));
        CHECK(g.j_related(x, y)
              == (oracle_two_sided(m, x) == oracle_two_sided(m, y)));
        CHECK(g.h_related(x, y) == (g.r_related(x, y) && g.l_related(x, y)));
        if (g.r_related(x, y) || g.l_related(x, y)) {
          CHECK(g.j_related(x, y));
        }
        auto const jx = oracle_two_sided(m, x), jy = oracle_two_sided(m, y);
        CHECK(g.j_leq[g.j_class[x]][g.j_class[y]]
              == std::includes(jy.begin(), jy.end(), jx.begin(), jx.end()));
      }
    }
    // j_leq is a partial order.
    auto const k = g.number_of_j_classes();
    for (std::size_t c = 0; c < k; ++c) {
      CHECK(g.j_leq[c][c]);
      for (std::size_t d = 0; d < k; ++d) {
        if (c != d) {
          CHECK_FALSE((g.j_leq[c][d] && g.j_leq[d][c]));
        }
        for (std::size_t f = 0; f < k; ++f) {
          if (g.j_leq[c][d] && g.j_leq[d][f]) {
            CHECK(g.j_leq[c][f]);
          }
        }
      }
    }
    // An H-class holding an idempotent e satisfies a = e·a.
    for (auto e_ : idempotents(m)) {
      for (element a = 0; a < m.order(); ++a) {
        if (g.h_related(a, e_)) {
          CHECK(m.multiply(e_, a) == a);
        }
      }
    }
  }
}

TEST_CASE("is_regular") {
  auto const z2 = load_fixture("z2.mon");
  auto const n3 = load_fixture("n3.mon");
  CHECK(regular_witness(z2, el(z2, "g")) == el(z2, "g"));
  CHECK_FALSE(is_regular(n3, el(n3, "a")));
  CHECK(regular_witness(n3, n3.identity()) == n3.identity());
  // Witnesses are the least valid b.
  auto const ff = load_fixture("flipflop.mon");
  CHECK(regular_witness(ff, el(ff, "s")) == el(ff, "1"));

  for (auto const& e : test::full_catalog()) {
    auto const& m = e.monoid;
    auto const  g = greens(m);
    for (element a = 0; a < m.order(); ++a) {
      CHECK(is_regular(m, a) == is_regular_by_idempotent(m, g, a));
      if (auto b = regular_witness(m, a)) {
        CHECK(m.multiply(m.multiply(a, *b), a) == a);
        for (element c = 0; c < *b; ++c) {
          CHECK(m.multiply(m.multiply(a, c), a) != a);
        }
      }
    }
  }
}

TEST_CASE("is_aperiodic") {
  CHECK(is_aperiodic(load_fixture("n3.mon")));
  CHECK(is_aperiodic(load_fixture("flipflop.mon")));
  CHECK(is_aperiodic(load_fixture("b21.mon")));
  auto const z2 = load_fixture("z2.mon");
  CHECK(aperiodicity_counterexample(z2) == el(z2, "g"));
  for (auto const& e : test::full_catalog()) {
    CHECK(is_aperiodic(e.monoid) == has_trivial_h(greens(e.monoid)));
  }
}

TEST_CASE("ideal_generated") {
  auto const n3 = load_fixture("n3.mon");
  auto const ff = load_fixture("flipflop.mon");
  auto const z2 = load_fixture("z2.mon");
  CHECK(ideal_generated(z2, {z2.identity()}).size() == 2);
  CHECK(ideal_generated(n3, {el(n3, "a")}).elements() == els(n3, {"a", "0"}));
  CHECK(ideal_generated(ff, {el(ff, "s")}).elements() == els(ff, {"s", "r"}));
  CHECK_THROWS_AS(ideal_generated(n3, {}), InvalidArgument);
  for (auto const& e : test::full_catalog()) {
    auto const& m = e.monoid;
    for (element a = 0; a < m.order(); ++a) {
      for (element b = 0; b < m.order(); ++b) {
        CHECK(ideal_generated(m, {a, b}).elements() == oracle_ideal(m, {a, b}));
      }
    }
  }
}

TEST_CASE("Ideal validates closure") {
  auto const n3 = load_fixture("n3.mon");
  CHECK_THROWS_AS(Ideal(n3, {el(n3, "a")}), InvalidArgument);
  CHECK_THROWS_AS(Ideal(n3, {}), InvalidArgument);
  CHECK(Ideal(n3, {el(n3, "0")}).size() == 1);
  CHECK_FALSE(is_ideal(n3, {}));
}

TEST_CASE("ideal_product") {
  auto const n3 = load_fixture("n3.mon");
  auto const z2 = load_fixture("z2.mon");
  Ideal const whole(z2, {0, 1});
  CHECK(ideal_product(z2, whole, whole) == whole);
  Ideal const a0(n3, els(n3, {"a", "0"}));
  Ideal const zero(n3, els(n3, {"0"}));
  CHECK(ideal_product(n3, a0, a0) == zero);
  CHECK(ideal_product(n3, zero, zero) == zero);
}

TEST_CASE("is_prime_ideal and is_idempotent_ideal") {
  auto const z2 = load_fixture("z2.mon");
  auto const n3 = load_fixture("n3.mon");
  CHECK(is_prime_ideal(z2, Ideal(z2, {0, 1})));
  auto const w = prime_ideal_witness(n3, Ideal(n3, els(n3, {"0"})));
  REQUIRE(w.has_value());
  CHECK(*w == std::pair{el(n3, "a"), el(n3, "a")});
  CHECK(is_prime_ideal(n3, Ideal(n3, els(n3, {"a", "0"}))));

  CHECK(is_idempotent_ideal(n3, Ideal(n3, els(n3, {"0"}))));
  CHECK_FALSE(is_idempotent_ideal(n3, Ideal(n3, els(n3, {"a", "0"}))));
}

TEST_CASE("minimal_ideal") {
  auto const z2 = load_fixture("z2.mon");
  auto const n3 = load_fixture("n3.mon");
  auto const ff = load_fixture("flipflop.mon");
  CHECK(minimal_ideal(z2).size() == 2);
  CHECK(minimal_ideal(n3).elements() == els(n3, {"0"}));
  CHECK(minimal_ideal(ff).elements() == els(ff, {"s", "r"}));
}

TEST_CASE("is_group_element") {
  auto const z2 = load_fixture("z2.mon");
  auto const n3 = load_fixture("n3.mon");
  CHECK(is_group_element(z2, el(z2, "g")));
  CHECK_FALSE(is_group_element(n3, el(n3, "a")));
  for (auto const& e : test::full_catalog()) {
    auto const& m = e.monoid;
    auto const  g = greens(m);
    for (element a = 0; a < m.order(); ++a) {
      CHECK(is_group_element(m, a) == g.h_related(a, omega_power(m, a)));
      if (is_idempotent(m, a)) {
        CHECK(is_group_element(m, a));
      }
    }
  }
}

TEST_CASE("ideal invariants over the catalog") {
  for (auto const& e : test::full_catalog()) {
    auto const&        m = e.monoid;
    std::vector<Ideal> principal;
    for (element a = 0; a < m.order(); ++a) {
      principal.push_back(ideal_generated(m, {a}));
      if (is_regular(m, a)) {
        CHECK(is_idempotent_ideal(m, principal.back()));
      }
    }
    auto const kernel = minimal_ideal(m);
    for (auto const& i : principal) {
      CHECK(kernel.subset_of(i));
      for (auto const& j : principal) {
        auto const ij = ideal_product(m, i, j);
        CHECK(is_ideal(m, ij.elements()));
        CHECK(ij.subset_of(ideal_intersection(m, i, j)));
      }
    }
  }
}

TEST_CASE("generator maps") {
  auto const n3 = load_fixture("n3.mon");
  GeneratorMap const g(n3, {{'a', el(n3, "a")}});
  CHECK(evaluate(n3, g, "") == n3.identity());
  CHECK(evaluate(n3, g, "aa") == el(n3, "0"));
  CHECK_THROWS_AS(evaluate(n3, g, "ab"), InvalidArgument);
  CHECK(generated_submonoid(n3, g) == std::vector<element>{0, 1, 2});
  GeneratorMap const zero(n3, {{'z', el(n3, "0")}});
  CHECK_FALSE(is_generating(n3, zero));
  CHECK_THROWS_AS(GeneratorMap(n3, {{'a', 0}, {'a', 1}}), InvalidArgument);
  CHECK_THROWS_AS(GeneratorMap(n3, {{'a', 7}}), InvalidArgument);
}

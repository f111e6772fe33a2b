#include <limits>
#include <random>
#include <set>

#include "doctest.h"

#include "complicial/errors.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("chain arithmetic is canonical and exact") {
  Chain a(1);
  a.add_term(3, 2);
  a.add_term(1, -1);
  a.add_term(3, -2);
  CHECK(a.size() == 1);
  CHECK(a.coeff(1) == -1);
  CHECK_FALSE(a.contains(3));

  Chain b = Chain::basis(1, 0) + Chain::basis(1, 2, 5);
  CHECK(b.terms().front().index == 0);
  CHECK(b.is_sum_of_basis());
  CHECK(b.max_coeff() == 5);
  CHECK((b - b).is_zero());
  CHECK((3 * b).coeff(2) == 15);
  CHECK((-b).coeff(0) == -1);

  Chain mixed = Chain::basis(0, 0, 2) - Chain::basis(0, 1, 3);
  CHECK(mixed.positive_part() == Chain::basis(0, 0, 2));
  CHECK(mixed.negative_part() == Chain::basis(0, 1, 3));
  CHECK_FALSE(mixed.is_sum_of_basis());
}

TEST_CASE("chains of different dimensions do not add") {
  CHECK_THROWS_AS(Chain::basis(0, 0) + Chain::basis(1, 0), DomainError);
}

TEST_CASE("coefficient overflow is a hard failure") {
  const Coeff big = std::numeric_limits<Coeff>::max();
  Chain c = Chain::basis(0, 0, big);
  CHECK_THROWS_AS(c + Chain::basis(0, 0, 1), OverflowError);
  CHECK_THROWS_AS(2 * c, OverflowError);
  CHECK_THROWS_AS(checked_sub(std::numeric_limits<Coeff>::min(), 1), OverflowError);
}

TEST_CASE("boundary of basis chains in simplexes") {
  auto d2 = delta(2);
  CHECK(d2->boundary(basis_chain(*d2, "[0,1,2]")) == chain(*d2, {{"[1,2]", 1}, {"[0,2]", -1}, {"[0,1]", 1}}));

  auto d3 = delta(3);
  CHECK(d3->boundary(d3->boundary(basis_chain(*d3, "[0,1,2,3]"))).is_zero());

  auto d1 = delta(1);
  CHECK(d1->boundary(2 * basis_chain(*d1, "[0,1]")) == chain(*d1, {{"[1]", 2}, {"[0]", -2}}));
}

TEST_CASE("boundary errors") {
  auto d1 = delta(1);
  CHECK_THROWS_AS(d1->boundary(basis_chain(*d1, "[0]")), DomainError);
  CHECK_THROWS_AS(d1->boundary(Chain::basis(1, 7)), IntegrityError);
}

TEST_CASE("split boundary") {
  auto d2 = delta(2);
  auto [plus, minus] = d2->split_boundary(basis_chain(*d2, "[0,1,2]"));
  CHECK(plus == chain(*d2, {{"[0,1]", 1}, {"[1,2]", 1}}));
  CHECK(minus == basis_chain(*d2, "[0,2]"));

  auto d1 = delta(1);
  auto [p1, m1] = d1->split_boundary(basis_chain(*d1, "[0,1]"));
  CHECK(p1 == basis_chain(*d1, "[1]"));
  CHECK(m1 == basis_chain(*d1, "[0]"));

  // a cycle: d(sum of the boundary of [0,1,2]) = 0
  auto [pz, mz] = d2->split_boundary(d2->boundary(basis_chain(*d2, "[0,1,2]")));
  CHECK(pz.is_zero());
  CHECK(mz.is_zero());
}

TEST_CASE("split boundary parts are disjoint and recombine, on every simplex basis element") {
  for (int n = 0; n <= 5; ++n) {
    auto k = delta(n);
    for (int p = 0; p <= n; ++p)
      for (int i = 0; i < k->size(p); ++i) {
        Chain a = Chain::basis(p, i);
        for (int r = 0; r <= p; ++r) {
          for (Sign s : {Sign::Minus, Sign::Plus}) {
            Chain c = k->iterated_sign_boundary(a, s, r);
            if (c.dim() == 0) continue;
            auto [plus, minus] = k->split_boundary(c);
            CHECK(plus - minus == k->boundary(c));
            for (const auto& t : plus.terms()) CHECK_FALSE(minus.contains(t.index));
            CHECK(plus.is_sum_of_basis());
            CHECK(minus.is_sum_of_basis());
          }
        }
      }
  }
}

TEST_CASE("iterated signed boundaries") {
  auto d2 = delta(2);
  Chain s = basis_chain(*d2, "[0,1,2]");
  CHECK(d2->iterated_sign_boundary(s, Sign::Minus, 2) == basis_chain(*d2, "[0]"));
  CHECK(d2->iterated_sign_boundary(s, Sign::Plus, 2) == basis_chain(*d2, "[2]"));
  CHECK(d2->iterated_sign_boundary(s, Sign::Plus, 0) == s);
  CHECK_THROWS_AS(d2->iterated_sign_boundary(s, Sign::Plus, 3), DomainError);
}

TEST_CASE("validate_complex") {
  CHECK(validate_complex(*delta(3)).ok());

  SUBCASE("ill-graded boundary") {
    auto k = build({{0, "x", {}}, {0, "y", {}}, {1, "a", {{"x", -1}, {"y", 1}}}, {2, "f", {}}});
    k->set_boundary(k->at("f"), Chain::basis(0, 0));
    CHECK(validate_complex(*k).has("grading"));
  }
  SUBCASE("augmentation of a boundary") {
    auto k = build({{0, "x", {}}, {0, "y", {}}, {1, "a", {{"x", -1}, {"y", 1}}}}, {{"y", 3}});
    auto r = validate_complex(*k);
    CHECK(r.has("augmentation"));
  }
  SUBCASE("dd != 0") {
    auto k = build({{0, "x", {}},
                    {0, "y", {}},
                    {1, "a", {{"x", -1}, {"y", 1}}},
                    {1, "b", {{"x", -1}, {"y", 1}}},
                    {2, "f", {{"a", 1}}}});
    CHECK(validate_complex(*k).has("boundary-squared"));
  }
  SUBCASE("unregistered term") {
    auto k = build({{0, "x", {}}, {1, "a", {}}});
    k->set_boundary(k->at("a"), Chain::basis(0, 4));
    CHECK(validate_complex(*k).has("integrity"));
  }
  SUBCASE("empty and vertex-only complexes are valid, unital and loop-free") {
    DirectedComplex empty;
    CHECK(validate_complex(empty).ok());
    CHECK(is_unital(empty));
    CHECK(is_loop_free(empty));
    auto v = build({{0, "x", {}}});
    CHECK(is_unital(*v));
    CHECK(is_loop_free(*v));
  }
  SUBCASE("duplicate labels are rejected") {
    DirectedComplex k;
    k.add_basis(0, "x");
    CHECK_THROWS_AS(k.add_basis(1, "x"), IntegrityError);
  }
}

TEST_CASE("validate_morphism") {
  CHECK(validate_morphism(face_map(2, 1)).ok());
  CHECK(validate_morphism(degeneracy_map(1, 0)).ok());
  // e_0: Delta_2 -> Delta_1 kills [0,1]
  CHECK(degeneracy_map(1, 0).image_of(delta(2)->at("[0,1]")).is_zero());

  auto d0 = delta(0);
  auto d1 = delta(1);
  std::vector<std::vector<Chain>> image{{Chain::basis(0, 0) - Chain::basis(0, 1)}};
  ComplexMorphism bad(d0, d1, image);
  auto r = validate_morphism(bad);
  CHECK(r.has("not a sum of basis elements"));
  CHECK(r.has("augmentation"));

  // [0,1] -> [0,1] with vertices swapped is not a chain map
  std::vector<std::vector<Chain>> swapped{{Chain::basis(0, 1), Chain::basis(0, 0)}, {Chain::basis(1, 0)}};
  CHECK(validate_morphism(ComplexMorphism(d1, d1, swapped)).has("chain map"));
}

TEST_CASE("morphisms are chain maps on arbitrary chains") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i <= n; ++i) {
      auto f = face_map(n, i);
      const auto& src = f.source();
      for (int trial = 0; trial < 20; ++trial) {
        int p = std::uniform_int_distribution<int>(0, n - 1)(rng);
        Chain c(p);
        for (int j = 0; j < src.size(p); ++j) c.add_term(j, std::uniform_int_distribution<int>(-3, 3)(rng));
        if (p == 0) {
          CHECK(f.target().augmentation(f.apply(c)) == src.augmentation(c));
        } else {
          CHECK(f.apply(src.boundary(c)) == f.target().boundary(f.apply(c)));
        }
      }
    }
  }
}

TEST_CASE("compose and identity") {
  auto f = face_map(2, 0);
  auto g = face_map(3, 1);
  auto gf = compose(g, f);
  CHECK(validate_morphism(gf).ok());
  CHECK(compose(identity_morphism(g.target_ptr()), g) == g);
  CHECK(compose(g, identity_morphism(g.source_ptr())) == g);
  CHECK_THROWS_AS(compose(f, g), DomainError);
}

TEST_CASE("unitality") {
  CHECK(is_unital(*delta(4)));
  CHECK(is_unital(*vee_complex(3, 1).complex));
  auto k = build({{0, "x", {}}, {0, "y", {}}, {0, "z", {}}, {1, "a", {{"x", 1}, {"y", 1}, {"z", -2}}}});
  CHECK(validate_complex(*k).ok());
  CHECK_FALSE(is_unital(*k));
}

TEST_CASE("loop-freeness") {
  CHECK(is_loop_free(*delta(0)));
  CHECK(is_loop_free(*w_complex(3, 1).complex));

  auto k = build({{0, "x", {}}, {0, "y", {}}, {1, "a", {{"y", 1}, {"x", -1}}}, {1, "b", {{"x", 1}, {"y", -1}}}});
  auto l = loop_freeness(*k);
  CHECK_FALSE(l.loop_free);
  REQUIRE(l.cycle.size() == 3);
  CHECK(l.cycle.front() == l.cycle.back());
  std::set<std::string> names{k->label(l.cycle[0]), k->label(l.cycle[1])};
  CHECK(names == std::set<std::string>{"x", "y"});
}

// Independent oracle: Floyd-Warshall reachability on the vertex graph of a
// random 1-dimensional complex; loop-free iff no vertex reaches itself.
TEST_CASE("loop-freeness agrees with a transitive-closure oracle on random graphs") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int v = std::uniform_int_distribution<int>(1, 6)(rng);
    const int e = std::uniform_int_distribution<int>(0, 8)(rng);
    auto k = std::make_shared<DirectedComplex>();
    for (int i = 0; i < v; ++i) k->set_augmentation(k->add_basis(0, "v" + std::to_string(i)), 1);
    std::vector<std::vector<bool>> reach(v, std::vector<bool>(v, false));
    for (int j = 0; j < e; ++j) {
      int a = std::uniform_int_distribution<int>(0, v - 1)(rng);
      int b = std::uniform_int_distribution<int>(0, v - 1)(rng);
      if (a == b) continue;
      int idx = k->add_basis(1, "e" + std::to_string(j));
      Chain bd(0);
      bd.add_term(b, 1);
      bd.add_term(a, -1);
      k->set_boundary(BasisRef{1, idx}, bd);
      reach[a][b] = true;
    }
    for (int m = 0; m < v; ++m)
      for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
          if (reach[i][m] && reach[m][j]) reach[i][j] = true;
    bool acyclic = true;
    for (int i = 0; i < v; ++i) acyclic = acyclic && !reach[i][i];

    auto l = loop_freeness(*k);
    CHECK(l.loop_free == acyclic);
    if (!l.loop_free) {
      // the witness is a genuine closed path of generating pairs
      std::set<std::pair<BasisRef, BasisRef>> rel(l.relation.begin(), l.relation.end());
      REQUIRE(l.cycle.size() >= 2);
      CHECK(l.cycle.front() == l.cycle.back());
      for (std::size_t i = 0; i + 1 < l.cycle.size(); ++i) CHECK(rel.count({l.cycle[i], l.cycle[i + 1]}) == 1);
    }
  }
}

// Generating pairs on simplexes respect the signed lexicographic order:
// at the first differing position q, (-1)^q i_q < (-1)^q i'_q.
TEST_CASE("the relation on simplex bases lies in the signed lexicographic order") {
  for (int n = 1; n <= 5; ++n) {
    auto k = delta(n);
    auto l = loop_freeness(*k);
    CHECK(l.loop_free);
    for (const auto& [a, b] : l.relation) {
      const auto& x = k->element(a).vertices;
      const auto& y = k->element(b).vertices;
      REQUIRE(x.size() == y.size());
      std::size_t q = 0;
      while (q < x.size() && x[q] == y[q]) ++q;
      REQUIRE(q < x.size());
      const int sign = q % 2 == 0 ? 1 : -1;
      CHECK(sign * x[q] < sign * y[q]);
    }
  }
}

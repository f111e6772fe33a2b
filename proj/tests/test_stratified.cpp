#include <algorithm>

#include "doctest.h"

#include "complicial/nerve.hpp"
#include "complicial/stratified.hpp"
#include "support.hpp"

using namespace testing;

namespace {

bool has_clause(const ComplicialReport& r, int clause) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const AxiomViolation& v) { return v.clause == clause; });
}

// The 2-simplex of N(nu Delta_2) whose top atom goes to the given target element.
int triangle_with_top(const Nerve& nv, int target) {
  for (int x = 0; x < static_cast<int>(nv.count(2)); ++x)
    if (nv.atom_image(2, x, {2, 0}) == target) return x;
  return -1;
}

}  // namespace

TEST_CASE("from_nerve") {
  Nerve n0(nu_delta(0), 2);
  auto s0 = from_nerve(n0, 2);
  CHECK(s0.sizes == std::vector<int>{1, 1, 1});
  CHECK_FALSE(s0.is_thin(0, 0));
  CHECK(s0.is_thin(1, 0));
  CHECK(s0.is_thin(2, 0));
  CHECK(validate_stratified(s0).ok());

  for (int m = 0; m <= 2; ++m) {
    Nerve nv(nu_delta(m), 3);
    for (int d = 0; d <= 3; ++d) {
      auto s = from_nerve(nv, d);
      CHECK(validate_stratified(s).ok());
      CHECK(s.max_dim == d);
      for (int n = 1; n <= d; ++n)
        for (int x = 0; x < s.size(n); ++x) {
          CHECK(s.is_thin(n, x) == nv.is_thin(n, x));
          CHECK(s.is_degenerate(n, x) == nv.is_degenerate(n, x));
          for (int i = 0; i <= n; ++i) CHECK(s.face(n, x, i) == nv.face(n, x, i));
        }
    }
  }
}

TEST_CASE("validate_stratified") {
  Nerve nv(nu_delta(1), 2);
  auto s = from_nerve(nv, 2);

  auto unflagged = s;
  int deg = s.degeneracy(0, 0, 0);
  unflagged.thin[1][deg] = false;
  CHECK(validate_stratified(unflagged).has("thin"));

  auto broken = s;
  // swap the two faces of a non-degenerate edge
  for (int x = 0; x < s.size(1); ++x)
    if (!s.is_degenerate(1, x)) std::swap(broken.faces[1][x][0], broken.faces[1][x][1]);
  CHECK(validate_stratified(broken).has("simplicial-identity"));

  auto misshapen = s;
  misshapen.faces[2].pop_back();
  CHECK(validate_stratified(misshapen).has("shape"));

  auto out_of_range = s;
  out_of_range.faces[1][0][0] = 99;
  CHECK_FALSE(validate_stratified(out_of_range).ok());
}

TEST_CASE("truncation") {
  Nerve nv(nu_delta(2), 3);
  auto s3 = from_nerve(nv, 3);
  for (int d = 0; d <= 3; ++d) CHECK(truncate(s3, d) == from_nerve(nv, d));
}

TEST_CASE("horn records") {
  Nerve nv(nu_delta(2), 3);
  auto s = from_nerve(nv, 3);
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) {
      auto horns = enumerate_horns(s, n, k);
      CHECK(std::is_sorted(horns.begin(), horns.end()));
      for (const auto& h : horns) CHECK(horn_compatible(s, h));
      // every element's horn is among them
      for (int x = 0; x < s.size(n); ++x) {
        auto h = horn_of(s, n, x, k);
        CHECK(std::binary_search(horns.begin(), horns.end(), h));
        auto thin = thin_fillers(s, h);
        if (s.is_thin(n, x)) CHECK(std::count(thin.begin(), thin.end(), x) == 1);
      }
    }
}

TEST_CASE("every 1-dimensional 1-horn is complicial") {
  for (int m = 0; m <= 2; ++m) {
    auto s = from_nerve(Nerve(nu_delta(m), 2), 2);
    for (const auto& h : enumerate_horns(s, 2, 1)) CHECK(is_complicial_horn(s, h));
    for (int x = 0; x < s.size(2); ++x) CHECK(is_complicial_element(s, 2, x, 1) == s.is_thin(2, x));
  }
}

TEST_CASE("recursive classification agrees with factorization through V") {
  for (int m = 0; m <= 2; ++m) {
    Nerve nv(nu_delta(m), 3);
    auto s = from_nerve(nv, 3);
    ComplicialClassifier cls(s);
    for (int n = 2; n <= 3; ++n)
      for (int x = 0; x < s.size(n); ++x)
        for (int k = 1; k < n; ++k) CHECK(cls.element(n, x, k) == is_complicial(nv, n, x, k));
  }
}

TEST_CASE("a horn with a non-complicial last face is not complicial") {
  Nerve nv(nu_delta(2), 4);
  auto s = from_nerve(nv, 4);
  ComplicialClassifier cls(s);
  int found = 0;
  for (const auto& h : enumerate_horns(s, 4, 1)) {
    if (cls.element(3, h.faces[4], 1)) continue;
    CHECK_FALSE(cls.horn(h));
    ++found;
  }
  CHECK(found > 0);
}

TEST_CASE("nerves satisfy the axioms at every truncation") {
  for (int m = 0; m <= 2; ++m) {
    Nerve nv(nu_delta(m), 3);
    for (int d = 1; d <= 3; ++d) {
      auto r = check_complicial_axioms(from_nerve(nv, d));
      CHECK(r.ok());
      if (d >= 2) CHECK(r.horns_checked > 0);
    }
  }
  auto r = check_complicial_axioms(from_nerve(Nerve(nu_delta(2), 3), 3));
  CHECK(r.indeterminate > 0);
}

TEST_CASE("clause 1: thin 1-simplices are degenerate") {
  Nerve nv(nu_delta(1), 2);
  auto s = from_nerve(nv, 2);
  int edge = -1;
  for (int x = 0; x < s.size(1); ++x)
    if (!s.is_degenerate(1, x)) edge = x;
  REQUIRE(edge >= 0);
  s.thin[1][edge] = true;
  CHECK(validate_stratified(s).ok());
  auto r = check_complicial_axioms(s);
  REQUIRE(has_clause(r, 1));
  CHECK(r.violations.front().witness == std::vector<int>{edge});
}

TEST_CASE("clause 2: exactly one thin filler") {
  Nerve nv(nu_delta(2), 3);
  const auto& c = nv.target();
  auto base = from_nerve(nv, 2);
  int composite = *c.compose(0, c.atom(c.complex().at("[0,1]")), c.atom(c.complex().at("[1,2]")));
  int filler = triangle_with_top(nv, composite);
  int rival = triangle_with_top(nv, c.atom(c.complex().at("[0,1,2]")));
  REQUIRE(filler >= 0);
  REQUIRE(rival >= 0);
  REQUIRE(base.is_thin(2, filler));
  REQUIRE_FALSE(base.is_thin(2, rival));
  CHECK(horn_of(base, 2, filler, 1) == horn_of(base, 2, rival, 1));

  auto twice = base;
  twice.thin[2][rival] = true;
  auto r = check_complicial_axioms(twice);
  CHECK(has_clause(r, 2));

  auto none = base;
  none.thin[2][filler] = false;
  CHECK(has_clause(check_complicial_axioms(none), 2));
}

TEST_CASE("clause 3: middle faces") {
  // flag the outer faces (and x) thin around a non-thin middle face
  Nerve nv(nu_delta(2), 3);
  const auto base = from_nerve(nv, 3);
  int injected = 0;
  for (int k = 1; k <= 2; ++k)
    for (int x = 0; x < base.size(3); ++x) {
      auto s = base;
      s.thin[2][s.face(3, x, k - 1)] = true;
      s.thin[2][s.face(3, x, k + 1)] = true;
      s.thin[3][x] = true;
      if (s.is_thin(2, s.face(3, x, k)) || !is_complicial_element(s, 3, x, k)) continue;
      auto r = check_complicial_axioms(s);
      CHECK(has_clause(r, 3));
      ++injected;
    }
  CHECK(injected > 0);
}

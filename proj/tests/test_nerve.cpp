#include <set>

#include "doctest.h"

#include "complicial/errors.hpp"
#include "complicial/nerve.hpp"
#include "support.hpp"

using namespace testing;

namespace {

int vertex_element(const Nerve& nv, int target_vertex) {
  const auto& c = nv.target();
  for (int x = 0; x < static_cast<int>(nv.count(0)); ++x)
    if (nv.atom_image(0, x, {0, 0}) == c.atom({0, target_vertex})) return x;
  return -1;
}

// 1-simplex whose edge atom goes to the given target element.
int edge_element(const Nerve& nv, int target) {
  for (int x = 0; x < static_cast<int>(nv.count(1)); ++x)
    if (nv.atom_image(1, x, {1, 0}) == target) return x;
  return -1;
}

std::vector<int> thin_fillers_by_search(const Nerve& nv, const NerveHorn& h) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(nv.count(h.n)); ++x)
    if (nv.is_thin(h.n, x) && filler_check(nv, x, h)) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("nerve counts") {
  const std::vector<std::vector<std::size_t>> expect{{1, 1, 1, 1}, {2, 3, 4, 5}, {3, 7, 15, 31}};
  for (int m = 0; m <= 2; ++m) {
    Nerve nv(nu_delta(m), 3);
    for (int n = 0; n <= 3; ++n) CHECK(nv.count(n) == expect[m][n]);
  }
  auto levels = nerve_enumerate(nu_delta(1), 2);
  CHECK(levels.size() == 3);
  CHECK(levels[2].size() == 4);
  CHECK_THROWS_AS(Nerve(nu_delta(2), 3, 5), ResourceError);
}

TEST_CASE("the nerve of one arrow is monotone maps into [1]") {
  Nerve nv(nu_delta(1), 4);
  const auto& c = nv.target();
  for (int n = 0; n <= 4; ++n) {
    // vertex images of each simplex, read through the 0-faces
    std::set<std::vector<int>> seen;
    for (int x = 0; x < static_cast<int>(nv.count(n)); ++x) {
      std::vector<int> verts;
      for (int v = 0; v <= n; ++v) {
        int img = nv.atom_image(n, x, {0, v});
        verts.push_back(img == c.atom({0, 0}) ? 0 : 1);
      }
      seen.insert(verts);
    }
    std::set<std::vector<int>> monotone;
    for (int cut = 0; cut <= n + 1; ++cut) {
      std::vector<int> f(n + 1, 0);
      for (int v = cut; v <= n; ++v) f[v] = 1;
      monotone.insert(f);
    }
    CHECK(seen == monotone);
    CHECK(nv.count(n) == monotone.size());
  }
}

TEST_CASE("low nerve levels against cell counts") {
  for (int m = 0; m <= 3; ++m) {
    auto c = nu_delta(m);
    Nerve nv(c, m <= 2 ? 2 : 1);
    std::size_t v = 0, e = 0;
    for (int x = 0; x < static_cast<int>(c->size()); ++x) {
      if (c->dim(x) == 0) ++v;
      if (c->dim(x) <= 1) ++e;
    }
    CHECK(nv.count(0) == v);
    CHECK(nv.count(1) == e);
    if (m > 2) continue;
    // a 2-simplex is a cell h => f #_0 g with f, g of dimension <= 1
    std::size_t triangles = 0;
    for (int t = 0; t < static_cast<int>(c->size()); ++t) {
      if (c->dim(t) > 2) continue;
      for (int f = 0; f < static_cast<int>(c->size()); ++f)
        for (int g = 0; g < static_cast<int>(c->size()); ++g) {
          if (c->dim(f) > 1 || c->dim(g) > 1) continue;
          auto fg = c->compose(0, f, g);
          if (fg && *fg == c->d(Sign::Plus, 1, t)) ++triangles;
        }
    }
    CHECK(nv.count(2) == triangles);
  }
}

TEST_CASE("simplicial identities on the nerve") {
  for (int m = 1; m <= 2; ++m) {
    Nerve nv(nu_delta(m), 3);
    for (int n = 0; n <= 3; ++n)
      for (int x = 0; x < static_cast<int>(nv.count(n)); ++x) {
        for (int j = 0; j <= n && n >= 2; ++j)
          for (int i = 0; i < j; ++i)
            CHECK(nv.face(n - 1, nv.face(n, x, j), i) == nv.face(n - 1, nv.face(n, x, i), j - 1));
        if (n + 1 > 3) continue;
        for (int j = 0; j <= n; ++j) {
          int y = nv.degeneracy(n, x, j);
          CHECK(nv.face(n + 1, y, j) == x);
          CHECK(nv.face(n + 1, y, j + 1) == x);
          CHECK(nv.is_degenerate(n + 1, y));
          for (int i = 0; i < j; ++i)
            if (n >= 1) CHECK(nv.face(n + 1, y, i) == nv.degeneracy(n - 1, nv.face(n, x, i), j - 1));
          for (int i = j + 2; i <= n + 1; ++i)
            if (n >= 1) CHECK(nv.face(n + 1, y, i) == nv.degeneracy(n - 1, nv.face(n, x, i - 1), j));
          if (n + 2 <= 3)
            for (int i = 0; i <= j; ++i)
              CHECK(nv.degeneracy(n + 1, y, i) == nv.degeneracy(n + 1, nv.degeneracy(n, x, i), j + 1));
        }
      }
  }
}

TEST_CASE("faces of the identity edge") {
  Nerve nv(nu_delta(1), 2);
  const auto& c = nv.target();
  int u = edge_element(nv, c.atom({1, 0}));
  REQUIRE(u >= 0);
  CHECK(nv.face(1, u, 1) == vertex_element(nv, 0));
  CHECK(nv.face(1, u, 0) == vertex_element(nv, 1));
  CHECK_FALSE(nv.is_thin(1, u));
  CHECK_FALSE(nv.is_degenerate(1, u));
  int y = vertex_element(nv, 0);
  CHECK(nv.face(1, nv.degeneracy(0, y, 0), 0) == y);
  CHECK(nv.is_thin(1, nv.degeneracy(0, y, 0)));
  CHECK_THROWS_AS(nv.is_thin(0, y), DomainError);
  CHECK_THROWS_AS(nv.face(1, u, 2), DomainError);
  CHECK_THROWS_AS(nv.degeneracy(2, 0, 0), DomainError);
}

TEST_CASE("thinness") {
  for (int m = 0; m <= 2; ++m) {
    Nerve nv(nu_delta(m), 3);
    for (int n = 1; n <= 3; ++n)
      for (int x = 0; x < static_cast<int>(nv.count(n)); ++x) {
        CHECK(nv.is_thin(n, x) == nv.is_thin_all_elements(n, x));
        if (nv.is_degenerate(n, x)) CHECK(nv.is_thin(n, x));
      }
    // thin 1-simplices are degenerate
    for (int x = 0; x < static_cast<int>(nv.count(1)); ++x)
      if (nv.is_thin(1, x)) CHECK(nv.is_degenerate(1, x));
  }
}

TEST_CASE("horn assembly") {
  Nerve nv(nu_delta(2), 3);
  const auto& c = nv.target();
  int e01 = edge_element(nv, c.atom(c.complex().at("[0,1]")));
  int e12 = edge_element(nv, c.atom(c.complex().at("[1,2]")));
  auto h = horn_assemble(nv, 2, 1, {e12, -1, e01});
  CHECK(h.faces == std::vector<int>{e12, -1, e01});
  CHECK_THROWS_AS(horn_assemble(nv, 2, 1, {e01, -1, e12}), HornError);
  // the omitted slot is ignored
  CHECK(horn_assemble(nv, 2, 1, {e12, e01, e01}) == h);
  CHECK_THROWS_AS(horn_assemble(nv, 2, 1, {e12, -1}), HornError);
  CHECK_THROWS_AS(horn_assemble(nv, 2, 3, {e12, -1, e01}), DomainError);

  for (int n = 2; n <= 3; ++n)
    for (int x = 0; x < static_cast<int>(nv.count(n)); ++x)
      for (int k = 0; k <= n; ++k) {
        auto hx = horn_of(nv, n, x, k);
        CHECK(filler_check(nv, x, hx));
        std::vector<int> f = hx.faces;
        CHECK(horn_assemble(nv, n, k, f) == hx);
      }
}

TEST_CASE("factorization of the edge-pair horn and its thin filler") {
  Nerve nv(nu_delta(2), 3);
  const auto& c = nv.target();
  const auto& k2 = c.complex();
  int a01 = c.atom(k2.at("[0,1]"));
  int a12 = c.atom(k2.at("[1,2]"));
  auto h = horn_assemble(nv, 2, 1, {edge_element(nv, a12), -1, edge_element(nv, a01)});
  auto f = factor_through_vee(nv, h);
  REQUIRE(f.ok());
  const auto& v = *nv.vee(2, 1).vee.complex;
  auto y = f.y->atom_images();
  CHECK(y[1][v.at("[0,1]").index] == a01);
  CHECK(y[1][v.at("[1,2]").index] == a12);

  int x = thin_filler(nv, h);
  CHECK(nv.atom_image(2, x, {2, 0}) == *c.compose(0, a01, a12));
  CHECK(nv.is_thin(2, x));
  CHECK(filler_check(nv, x, h));
  CHECK(thin_fillers_by_search(nv, h) == std::vector<int>{x});
  CHECK(is_complicial(nv, 2, x, 1));
}

TEST_CASE("thin fillers are unique") {
  for (int m = 0; m <= 2; ++m) {
    Nerve nv(nu_delta(m), 3);
    for (int n = 2; n <= 3; ++n) {
      for (int x = 0; x < static_cast<int>(nv.count(n)); ++x)
        for (int k = 1; k < n; ++k) {
          auto h = horn_of(nv, n, x, k);
          auto f = factor_through_vee(nv, h);
          if (!f.ok()) {
            CHECK_FALSE(f.diagnosis.empty());
            CHECK_THROWS_AS(thin_filler(nv, h), UnsupportedHornError);
            continue;
          }
          int t = thin_filler(nv, h);
          CHECK(thin_fillers_by_search(nv, h) == std::vector<int>{t});
          CHECK(is_complicial(nv, n, t, k));
          // a complicial element is the filler of its own horn
          if (is_complicial(nv, n, x, k)) CHECK(t == x);
        }
    }
  }
}

TEST_CASE("some horns do not factor") {
  Nerve nv(nu_delta(2), 3);
  int failures = 0;
  for (int x = 0; x < static_cast<int>(nv.count(3)); ++x)
    for (int k = 1; k < 3; ++k)
      if (!factor_through_vee(nv, horn_of(nv, 3, x, k)).ok()) ++failures;
  CHECK(failures > 0);
  CHECK_THROWS_AS(thin_filler(nv, horn_of(nv, 2, 0, 0)), UnsupportedHornError);
  CHECK_THROWS_AS(thin_filler(nv, horn_of(nv, 2, 0, 2)), UnsupportedHornError);
}

TEST_CASE("2-simplices are 1-complicial exactly when thin") {
  for (int m = 0; m <= 2; ++m) {
    Nerve nv(nu_delta(m), 2);
    for (int x = 0; x < static_cast<int>(nv.count(2)); ++x) CHECK(is_complicial(nv, 2, x, 1) == nv.is_thin(2, x));
  }
}

TEST_CASE("middle faces of complicial simplices with thin neighbours are thin") {
  for (int m = 1; m <= 2; ++m) {
    Nerve nv(nu_delta(m), 3);
    for (int n = 2; n <= 3; ++n)
      for (int x = 0; x < static_cast<int>(nv.count(n)); ++x)
        for (int k = 1; k < n; ++k) {
          if (!is_complicial(nv, n, x, k)) continue;
          if (n - 1 < 1) continue;
          if (nv.is_thin(n - 1, nv.face(n, x, k - 1)) && nv.is_thin(n - 1, nv.face(n, x, k + 1)))
            CHECK(nv.is_thin(n - 1, nv.face(n, x, k)));
        }
  }
}

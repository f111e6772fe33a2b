#include "complicial/wedge.hpp"

#include <sstream>

#include "complicial/errors.hpp"
#include "complicial/nerve.hpp"

namespace complicial {

namespace {

void check_indices(int max_dim, int m, int i) {
  if (m < 1 || m > max_dim || i < 0 || i > m - 1) throw DomainError("wedge indices out of range");
}

std::string wedge_name(int m, int x, int y, int i) {
  std::ostringstream oss;
  oss << "(" << x << " ^_" << i << " " << y << ") in dimension " << m;
  return oss.str();
}

}  // namespace

WedgeContext::WedgeContext(const StratifiedSet& x) : x_(x), classifier_(x) {}

bool WedgeContext::defined(int m, int x, int y, int i) const {
  return m >= 1 && m <= x_.max_dim && i >= 0 && i < m && x_.face(m, x, i) == x_.face(m, y, i + 1);
}

std::optional<int> WedgeContext::try_wedge(int m, int x, int y, int i) {
  check_indices(x_.max_dim, m, i);
  if (!defined(m, x, y, i)) return std::nullopt;
  return wedge(m, x, y, i);
}

HornRecord WedgeContext::wedge_horn(int m, int x, int y, int i) {
  HornRecord h{m + 1, i + 1, std::vector<int>(m + 2, -1)};
  for (int j = 0; j < i; ++j) h.faces[j] = wedge(m - 1, x_.face(m, x, j), x_.face(m, y, j), i - 1);
  h.faces[i] = y;
  h.faces[i + 2] = x;
  for (int j = i + 3; j <= m + 1; ++j) h.faces[j] = wedge(m - 1, x_.face(m, x, j - 1), x_.face(m, y, j - 1), i);
  return h;
}

int WedgeContext::wedge(int m, int x, int y, int i) {
  check_indices(x_.max_dim, m, i);
  if (!defined(m, x, y, i)) throw CompositionError("wedge " + wedge_name(m, x, y, i) + ": d_i x != d_{i+1} y");
  if (m + 1 > x_.max_dim) throw TruncationError("wedge " + wedge_name(m, x, y, i) + " lies above the truncation");
  auto key = std::make_tuple(m, x, y, i);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  HornRecord h = wedge_horn(m, x, y, i);
  if (!horn_compatible(x_, h)) throw ComplicialStructureError("wedge horn for " + wedge_name(m, x, y, i) + " is not a horn");
  if (!classifier_.horn(h))
    throw ComplicialStructureError("wedge horn for " + wedge_name(m, x, y, i) + " is not complicial");
  auto fillers = thin_fillers(x_, h);
  if (fillers.size() != 1)
    throw ComplicialStructureError("wedge horn for " + wedge_name(m, x, y, i) + " has " +
                                   std::to_string(fillers.size()) + " thin fillers");
  memo_.emplace(key, fillers.front());
  image_.emplace(i, m + 1, fillers.front());
  return fillers.front();
}

bool WedgeContext::in_image(int i, int dim, int element) const { return image_.count({i, dim, element}) > 0; }

int wedge_via_retraction(const Nerve& nerve, int m, int x, int y, int i) {
  check_indices(nerve.max_dim(), m, i);
  if (nerve.face(m, x, i) != nerve.face(m, y, i + 1))
    throw CompositionError("wedge " + wedge_name(m, x, y, i) + ": d_i x != d_{i+1} y");
  if (m + 1 > nerve.max_dim()) throw TruncationError("wedge " + wedge_name(m, x, y, i) + " lies above the truncation");
  std::vector<int> faces(m + 2, -1);
  for (int j = 0; j < i; ++j)
    faces[j] = wedge_via_retraction(nerve, m - 1, nerve.face(m, x, j), nerve.face(m, y, j), i - 1);
  faces[i] = y;
  faces[i + 2] = x;
  for (int j = i + 3; j <= m + 1; ++j)
    faces[j] = wedge_via_retraction(nerve, m - 1, nerve.face(m, x, j - 1), nerve.face(m, y, j - 1), i);
  return thin_filler(nerve, horn_assemble(nerve, m + 1, i + 1, std::move(faces)));
}

std::size_t IdentitiesReport::violation_count() const {
  std::size_t n = 0;
  for (const auto& a : axioms) n += a.violations.size();
  return n;
}

namespace {

// A partial expression value: undefined, an element, or beyond the truncation.
struct Val {
  enum State { Undef, Ok, Over } state = Undef;
  int dim = 0;
  int v = -1;

  static Val of(int dim, int v) { return Val{Ok, dim, v}; }
  friend bool operator==(const Val&, const Val&) = default;
};

class Evaluator {
 public:
  explicit Evaluator(WedgeContext& ctx) : ctx_(ctx), s_(ctx.set()) {}

  Val face(const Val& a, int j) const {
    if (a.state != Val::Ok) return a;
    return Val::of(a.dim - 1, s_.face(a.dim, a.v, j));
  }
  Val degen(const Val& a, int j) const {
    if (a.state != Val::Ok) return a;
    if (a.dim + 1 > s_.max_dim) return Val{Val::Over};
    return Val::of(a.dim + 1, s_.degeneracy(a.dim, a.v, j));
  }
  Val wedge(const Val& a, const Val& b, int i) const {
    if (a.state == Val::Over || b.state == Val::Over) return Val{Val::Over};
    if (a.state == Val::Undef || b.state == Val::Undef) return Val{};
    if (a.dim != b.dim || a.dim < 1 || i < 0 || i >= a.dim) return Val{};
    if (!ctx_.defined(a.dim, a.v, b.v, i)) return Val{};
    if (a.dim + 1 > s_.max_dim) return Val{Val::Over};
    return Val::of(a.dim + 1, ctx_.wedge(a.dim, a.v, b.v, i));
  }

 private:
  WedgeContext& ctx_;
  const StratifiedSet& s_;
};

// Records one instance of lhs == rhs, "whenever either side is defined".
void compare(AxiomReport& r, const Val& lhs, const Val& rhs, std::vector<int> witness) {
  if (lhs.state == Val::Over || rhs.state == Val::Over) {
    ++r.skipped_at_boundary;
    return;
  }
  if (lhs.state == Val::Undef && rhs.state == Val::Undef) return;
  ++r.instances_checked;
  if (!(lhs == rhs)) r.violations.push_back(std::move(witness));
}

}  // namespace

IdentitiesReport check_identities(WedgeContext& ctx) {
  IdentitiesReport rep;
  for (int a = 0; a < 7; ++a) rep.axioms[a].axiom = a + 1;
  const StratifiedSet& s = ctx.set();
  const int top = s.max_dim;
  Evaluator ev(ctx);
  auto el = [&](int m) { return s.size(m); };

  // (1) face equations of every defined wedge
  {
    auto& r = rep.axioms[0];
    for (int m = 1; m <= top; ++m)
      for (int i = 0; i < m; ++i)
        for (int x = 0; x < el(m); ++x)
          for (int y = 0; y < el(m); ++y) {
            if (!ctx.defined(m, x, y, i)) continue;
            if (m + 1 > top) {
              ++r.skipped_at_boundary;
              continue;
            }
            ++r.instances_checked;
            Val X = Val::of(m, x), Y = Val::of(m, y);
            Val A = ev.wedge(X, Y, i);
            bool ok = ev.face(A, i) == Y && ev.face(A, i + 2) == X;
            for (int j = 0; j < i && ok; ++j) ok = ev.face(A, j) == ev.wedge(ev.face(X, j), ev.face(Y, j), i - 1);
            for (int j = i + 3; j <= m + 1 && ok; ++j)
              ok = ev.face(A, j) == ev.wedge(ev.face(X, j - 1), ev.face(Y, j - 1), i);
            if (!ok) r.violations.push_back({m, i, x, y});
          }
  }

  // (2) degeneracies as wedges
  {
    auto& r = rep.axioms[1];
    for (int m = 1; m <= top; ++m)
      for (int i = 0; i < m; ++i)
        for (int x = 0; x < el(m); ++x) {
          Val X = Val::of(m, x);
          compare(r, ev.degen(X, i), ev.wedge(ev.degen(ev.face(X, i + 1), i), X, i), {m, i, x, 0});
          compare(r, ev.degen(X, i + 1), ev.wedge(X, ev.degen(ev.face(X, i), i), i), {m, i, x, 1});
        }
  }

  // (3) A = b ^_i (y ^_i z)
  {
    auto& r = rep.axioms[2];
    for (int m = 1; m <= top; ++m)
      for (int i = 0; i < m; ++i)
        for (int y = 0; y < el(m); ++y)
          for (int z = 0; z < el(m); ++z) {
            Val U = ev.wedge(Val::of(m, y), Val::of(m, z), i);
            if (U.state == Val::Undef) continue;
            if (U.state == Val::Over) {
              ++r.skipped_at_boundary;
              continue;
            }
            for (int b = 0; b < el(m + 1); ++b) {
              Val B = Val::of(m + 1, b);
              Val A = ev.wedge(B, U, i);
              if (A.state == Val::Undef) continue;
              Val rhs = ev.wedge(ev.wedge(ev.face(B, i + 2), Val::of(m, y), i), ev.face(A, i + 1), i + 1);
              compare(r, A, rhs, {m, i, b, y, z});
            }
          }
  }

  // (4) A = (x ^_i y) ^_{i+1} c
  {
    auto& r = rep.axioms[3];
    for (int m = 1; m <= top; ++m)
      for (int i = 0; i < m; ++i)
        for (int x = 0; x < el(m); ++x)
          for (int y = 0; y < el(m); ++y) {
            Val U = ev.wedge(Val::of(m, x), Val::of(m, y), i);
            if (U.state == Val::Undef) continue;
            if (U.state == Val::Over) {
              ++r.skipped_at_boundary;
              continue;
            }
            for (int c = 0; c < el(m + 1); ++c) {
              Val C = Val::of(m + 1, c);
              Val A = ev.wedge(U, C, i + 1);
              if (A.state == Val::Undef) continue;
              Val rhs = ev.wedge(ev.face(A, i + 2), ev.wedge(Val::of(m, y), ev.face(C, i), i), i);
              compare(r, A, rhs, {m, i, x, y, c});
            }
          }
  }

  // (5)
  {
    auto& r = rep.axioms[4];
    for (int m = 1; m <= top; ++m)
      for (int i = 0; i < m; ++i)
        for (int x = 0; x < el(m); ++x)
          for (int y = 0; y < el(m); ++y)
            for (int z = 0; z < el(m); ++z) {
              Val X = Val::of(m, x), Y = Val::of(m, y), Z = Val::of(m, z);
              Val yz = ev.wedge(Y, Z, i);
              Val xy = ev.wedge(X, Y, i);
              Val lhs = ev.wedge(ev.wedge(X, ev.face(yz, i + 1), i), yz, i);
              Val rhs = ev.wedge(xy, ev.wedge(ev.face(xy, i + 1), Z, i), i + 1);
              compare(r, lhs, rhs, {m, i, x, y, z});
            }
  }

  // (6) A = d_{i+2}[(x ^_{i+1} y) ^_{i+1} (y ^_i z)]
  {
    auto& r = rep.axioms[5];
    for (int m = 2; m <= top; ++m)
      for (int i = 0; i + 1 < m; ++i)
        for (int x = 0; x < el(m); ++x)
          for (int y = 0; y < el(m); ++y)
            for (int z = 0; z < el(m); ++z) {
              Val Y = Val::of(m, y);
              Val A = ev.face(ev.wedge(ev.wedge(Val::of(m, x), Y, i + 1), ev.wedge(Y, Val::of(m, z), i), i + 1), i + 2);
              if (A.state == Val::Undef) continue;
              if (A.state == Val::Over) {
                ++r.skipped_at_boundary;
                continue;
              }
              for (int w = 0; w < el(m); ++w) {
                Val W = Val::of(m, w);
                Val lhs = ev.wedge(A, ev.wedge(W, ev.face(A, i), i + 1), i);
                Val rhs = ev.wedge(ev.wedge(ev.face(A, i + 3), W, i), A, i + 2);
                compare(r, lhs, rhs, {m, i, x, y, z, w});
              }
            }
  }

  // (7) i <= j - 3
  {
    auto& r = rep.axioms[6];
    for (int m = 3; m <= top; ++m)
      for (int j = 3; j <= m; ++j)
        for (int i = 0; i <= j - 3; ++i) {
          const int n = el(m);
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              const bool xy = ctx.defined(m, x, y, i);
              for (int z = 0; z < n; ++z) {
                const bool xz = ctx.defined(m, x, z, j - 1);
                for (int w = 0; w < n; ++w) {
                  const bool zw = ctx.defined(m, z, w, i);
                  const bool yw = ctx.defined(m, y, w, j - 1);
                  if (!(xy && zw) && !(xz && yw)) continue;
                  Val X = Val::of(m, x), Y = Val::of(m, y), Z = Val::of(m, z), W = Val::of(m, w);
                  Val lhs = ev.wedge(ev.wedge(X, Y, i), ev.wedge(Z, W, i), j);
                  Val rhs = ev.wedge(ev.wedge(X, Z, j - 1), ev.wedge(Y, W, j - 1), i);
                  compare(r, lhs, rhs, {m, i, j, x, y, z, w});
                }
              }
            }
        }
  }
  return rep;
}

}  // namespace complicial

#include "complicial/nerve.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "complicial/errors.hpp"

namespace complicial {

std::vector<std::vector<int>> enumerate_functors(const OmegaPtr& source, const OmegaPtr& target,
                                                 std::size_t budget) {
  const OmegaTable& s = *source;
  const OmegaTable& c = *target;
  if (s.derivation_order().size() != s.size()) throw DomainError("functor source must be an atom closure");
  const int top = s.top_dim();

  std::vector<std::vector<int>> atoms(top + 1);          // atom element indices per dimension
  std::vector<std::vector<int>> stage_elems(top + 1);    // non-atoms in derivation order per stage
  for (int e : s.derivation_order()) {
    if (s.is_atom(e)) {
      atoms[s.dim(e)].push_back(e);
    } else {
      stage_elems[s.stage(e)].push_back(e);
    }
  }
  std::vector<std::vector<int>> by_dim(c.top_dim() + 2);
  for (int g = 0; g < static_cast<int>(c.size()); ++g) by_dim[c.dim(g)].push_back(g);

  std::vector<int> image(s.size(), -1);
  std::vector<std::vector<int>> results;

  auto propagate = [&](int p) {
    using Kind = OmegaTable::Derivation::Kind;
    for (int e : stage_elems[p]) {
      const auto& dv = s.derivation(e);
      if (dv.kind == Kind::Boundary) {
        image[e] = c.d(dv.sign, dv.level, image[dv.left]);
      } else {
        auto r = c.compose(dv.level, image[dv.left], image[dv.right]);
        if (!r) return false;
        image[e] = *r;
      }
    }
    return true;
  };
  auto clear_stage = [&](int p) {
    for (int e : stage_elems[p]) image[e] = -1;
  };

  std::function<void(int, std::size_t)> assign = [&](int p, std::size_t j) {
    if (j == atoms[p].size()) {
      if (propagate(p)) {
        if (p == top) {
          AtomAssignment a(s.complex().top_dim() + 1);
          for (int dd = 0; dd <= s.complex().top_dim(); ++dd)
            for (int i = 0; i < s.complex().size(dd); ++i) {
              int e = s.atom(BasisRef{dd, i});
              a[dd].push_back(e < 0 ? -1 : image[e]);
            }
          auto f = functor_from_atoms(source, target, a);
          if (f.ok()) {
            results.push_back(f.functor->image());
            if (results.size() > budget) throw ResourceError("nerve enumeration exceeded the element budget");
          }
        } else {
          assign(p + 1, 0);
        }
      }
      clear_stage(p);
      return;
    }
    const int a = atoms[p][j];
    int lo = -1, hi = -1;
    if (p > 0) {
      lo = image[s.d(Sign::Minus, p - 1, a)];
      hi = image[s.d(Sign::Plus, p - 1, a)];
    }
    for (int q = 0; q <= std::min(p, c.top_dim()); ++q) {
      for (int g : by_dim[q]) {
        if (p > 0) {
          if (lo >= 0 && c.d(Sign::Minus, p - 1, g) != lo) continue;
          if (hi >= 0 && c.d(Sign::Plus, p - 1, g) != hi) continue;
        }
        image[a] = g;
        assign(p, j + 1);
      }
    }
    image[a] = -1;
  };
  if (top >= 0) assign(0, 0);
  std::sort(results.begin(), results.end());
  return results;
}

std::vector<std::vector<NerveElement>> nerve_enumerate(const OmegaPtr& target, int max_dim, std::size_t budget) {
  if (max_dim < 0) throw DomainError("nerve_enumerate: negative dimension");
  std::vector<std::vector<NerveElement>> out;
  for (int n = 0; n <= max_dim; ++n) {
    auto s = std::make_shared<const OmegaTable>(closure_from_atoms(delta(n), n, budget));
    std::vector<NerveElement> level;
    for (auto& img : enumerate_functors(s, target, budget)) level.push_back(NerveElement{n, std::move(img)});
    out.push_back(std::move(level));
  }
  return out;
}

NerveElement Nerve::precompose(const NerveElement& x, int dim, const std::vector<int>& map) {
  NerveElement y{dim, {}};
  y.image.reserve(map.size());
  for (int e : map) y.image.push_back(x.image.at(e));
  return y;
}

Nerve::Nerve(OmegaPtr target, int max_dim, std::size_t budget) : target_(std::move(target)), max_dim_(max_dim) {
  if (max_dim < 0) throw DomainError("nerve: negative dimension");
  for (int n = 0; n <= max_dim; ++n)
    sources_.push_back(std::make_shared<const OmegaTable>(closure_from_atoms(delta(n), n, budget)));
  for (int n = 0; n <= max_dim; ++n) {
    std::vector<NerveElement> level;
    for (auto& img : enumerate_functors(sources_[n], target_, budget)) level.push_back(NerveElement{n, std::move(img)});
    std::map<std::vector<int>, int> lk;
    for (int x = 0; x < static_cast<int>(level.size()); ++x) lk.emplace(level[x].image, x);
    elements_.push_back(std::move(level));
    lookup_.push_back(std::move(lk));
  }
  auto must_find = [this](const NerveElement& y) {
    auto f = find(y);
    if (!f) throw std::logic_error("simplicial operator left the enumerated nerve");
    return *f;
  };
  faces_.resize(max_dim + 1);
  degens_.resize(max_dim + 1);
  degenerate_.resize(max_dim + 1);
  for (int n = 1; n <= max_dim; ++n) {
    std::vector<std::vector<int>> maps;
    for (int i = 0; i <= n; ++i) maps.push_back(element_map(face_map(n, i), *sources_[n - 1], *sources_[n]));
    for (const auto& x : elements_[n]) {
      std::vector<int> f;
      for (int i = 0; i <= n; ++i) f.push_back(must_find(precompose(x, n - 1, maps[i])));
      faces_[n].push_back(std::move(f));
    }
  }
  for (int n = 0; n <= max_dim; ++n) degenerate_[n].assign(count(n), false);
  for (int n = 0; n < max_dim; ++n) {
    std::vector<std::vector<int>> maps;
    for (int i = 0; i <= n; ++i) maps.push_back(element_map(degeneracy_map(n, i), *sources_[n + 1], *sources_[n]));
    for (const auto& x : elements_[n]) {
      std::vector<int> g;
      for (int i = 0; i <= n; ++i) {
        g.push_back(must_find(precompose(x, n + 1, maps[i])));
        degenerate_[n + 1][g.back()] = true;
      }
      degens_[n].push_back(std::move(g));
    }
  }
  for (int n = 2; n <= max_dim; ++n) {
    for (int k = 1; k < n; ++k) {
      VeeData v{n, k, vee_complex(n, k), nullptr, {}, {}, {}};
      v.table = std::make_shared<const OmegaTable>(closure_from_atoms(v.vee.complex, n, budget));
      ComplexMorphism big_pi = pi(n, k);
      v.pi_of_simplex = element_map(big_pi, *sources_[n], *v.table);
      v.pi_of_face.resize(n + 1);
      for (int i = 0; i <= n; ++i)
        if (i != k) v.pi_of_face[i] = element_map(compose(big_pi, face_map(n, i)), *sources_[n - 1], *v.table);
      v.inclusion = element_map(v.vee.into_simplex, *v.table, *sources_[n]);
      vee_.emplace(std::make_pair(n, k), std::move(v));
    }
  }
}

std::optional<int> Nerve::find(const NerveElement& x) const {
  if (x.dim < 0 || x.dim > max_dim_) return std::nullopt;
  auto it = lookup_[x.dim].find(x.image);
  if (it == lookup_[x.dim].end()) return std::nullopt;
  return it->second;
}

FunctorTable Nerve::table(int n, int x) const { return FunctorTable(sources_.at(n), target_, element(n, x).image); }

int Nerve::atom_image(int n, int x, BasisRef a) const {
  int e = sources_.at(n)->atom(a);
  if (e < 0) throw DomainError("no such atom");
  return element(n, x).image[e];
}

int Nerve::face(int n, int x, int i) const {
  if (n < 1 || n > max_dim_ || i < 0 || i > n) throw DomainError("face index out of range");
  return faces_[n].at(x)[i];
}

int Nerve::degeneracy(int n, int x, int i) const {
  if (n < 0 || n >= max_dim_ || i < 0 || i > n) throw DomainError("degeneracy index out of range");
  return degens_[n].at(x)[i];
}

bool Nerve::is_degenerate(int n, int x) const { return degenerate_.at(n).at(x); }

bool Nerve::is_thin(int n, int x) const {
  if (n < 1) throw DomainError("thinness is undefined in dimension 0");
  const auto& s = *sources_.at(n);
  const auto& img = element(n, x).image;
  for (int dd = 0; dd <= n; ++dd)
    for (int i = 0; i < s.complex().size(dd); ++i) {
      int g = img[s.atom(BasisRef{dd, i})];
      if (target_->d(Sign::Minus, n - 1, g) != g || target_->d(Sign::Plus, n - 1, g) != g) return false;
    }
  return true;
}

bool Nerve::is_thin_all_elements(int n, int x) const {
  if (n < 1) throw DomainError("thinness is undefined in dimension 0");
  for (int g : element(n, x).image)
    if (target_->d(Sign::Minus, n - 1, g) != g || target_->d(Sign::Plus, n - 1, g) != g) return false;
  return true;
}

const VeeData& Nerve::vee(int n, int k) const {
  if (n < 2 || n > max_dim_ || k < 1 || k >= n) throw DomainError("no V_n^k for these indices");
  return vee_.at({n, k});
}

NerveHorn horn_assemble(const Nerve& nerve, int n, int k, std::vector<int> faces) {
  if (n < 1 || n - 1 > nerve.max_dim() || k < 0 || k > n) throw DomainError("horn indices out of range");
  if (static_cast<int>(faces.size()) != n + 1) throw HornError("a horn needs n + 1 face slots");
  faces[k] = -1;
  for (int i = 0; i <= n; ++i)
    if (i != k && (faces[i] < 0 || faces[i] >= static_cast<int>(nerve.count(n - 1))))
      throw HornError("horn face index out of range");
  if (n >= 2) {
    for (int j = 0; j <= n; ++j) {
      if (j == k) continue;
      for (int i = 0; i < j; ++i) {
        if (i == k) continue;
        if (nerve.face(n - 1, faces[j], i) != nerve.face(n - 1, faces[i], j - 1)) {
          std::ostringstream oss;
          oss << "incompatible horn faces z_" << i << " and z_" << j << ": d_" << i << " z_" << j << " != d_" << j - 1
              << " z_" << i;
          throw HornError(oss.str());
        }
      }
    }
  }
  return NerveHorn{n, k, std::move(faces)};
}

NerveHorn horn_of(const Nerve& nerve, int n, int x, int k) {
  std::vector<int> faces(n + 1, -1);
  for (int i = 0; i <= n; ++i)
    if (i != k) faces[i] = nerve.face(n, x, i);
  return NerveHorn{n, k, std::move(faces)};
}

bool filler_check(const Nerve& nerve, int x, const NerveHorn& h) {
  for (int i = 0; i <= h.n; ++i)
    if (i != h.k && nerve.face(h.n, x, i) != h.faces[i]) return false;
  return true;
}

Factorization factor_through_vee(const Nerve& nerve, const NerveHorn& h) {
  const int n = h.n;
  const int k = h.k;
  if (k <= 0 || k >= n) throw UnsupportedHornError("only inner horns factor through V_n^k");
  const VeeData& v = nerve.vee(n, k);
  const auto& lower = *nerve.source(n - 1);
  const auto& vk = *v.vee.complex;

  AtomAssignment assignment(vk.top_dim() + 1);
  for (int dd = 0; dd <= vk.top_dim(); ++dd) {
    for (const auto& b : vk.basis(dd)) {
      const Tuple& a = b.vertices;
      const bool omits_upper = !std::binary_search(a.begin(), a.end(), k + 1);
      const int face = omits_upper ? k + 1 : k - 1;
      Tuple pre = a;
      for (int& x : pre)
        if (x > face) --x;
      BasisRef ref = lower.complex().at(tuple_label(pre));
      assignment[dd].push_back(nerve.atom_image(n - 1, h.faces[face], ref));
    }
  }
  Factorization out;
  auto y = functor_from_atoms(v.table, nerve.target_ptr(), assignment);
  if (!y.ok()) {
    out.diagnosis = "horn not complicial: faces k-1 and k+1 do not define a functor on nu V: " + y.conflict;
    return out;
  }
  for (int i = 0; i <= n; ++i) {
    if (i == k) continue;
    const auto& z = nerve.element(n - 1, h.faces[i]);
    for (int e = 0; e < static_cast<int>(lower.size()); ++e) {
      if (!lower.is_atom(e)) continue;
      if (y.functor->evaluate(v.pi_of_face[i][e]) != z.image[e]) {
        std::ostringstream oss;
        oss << "horn not complicial: face " << i << " differs from y(nu pi) on atom <"
            << lower.complex().label(lower.derivation(e).basis) << ">";
        out.diagnosis = oss.str();
        return out;
      }
    }
  }
  out.y = std::move(y.functor);
  return out;
}

int thin_filler(const Nerve& nerve, const NerveHorn& h) {
  if (h.k <= 0 || h.k >= h.n) throw UnsupportedHornError("outer horns have no thin-filler construction");
  if (h.n > nerve.max_dim()) throw UnsupportedHornError("filler dimension exceeds the nerve truncation");
  auto f = factor_through_vee(nerve, h);
  if (!f.ok()) throw UnsupportedHornError(f.diagnosis);
  const VeeData& v = nerve.vee(h.n, h.k);
  NerveElement x{h.n, {}};
  for (int e : v.pi_of_simplex) x.image.push_back(f.y->evaluate(e));
  auto idx = nerve.find(x);
  if (!idx) throw std::logic_error("y(nu Pi) is missing from the enumerated nerve");
  return *idx;
}

bool is_complicial(const Nerve& nerve, int n, int x, int k) {
  if (k <= 0 || k >= n) throw DomainError("is_complicial needs 0 < k < n");
  const VeeData& v = nerve.vee(n, k);
  const auto& img = nerve.element(n, x).image;
  for (int e = 0; e < static_cast<int>(img.size()); ++e)
    if (img[v.inclusion[v.pi_of_simplex[e]]] != img[e]) return false;
  return true;
}

}  // namespace complicial

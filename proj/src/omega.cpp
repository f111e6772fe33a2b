#include "complicial/omega.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

#include "complicial/errors.hpp"

namespace complicial {

namespace {

std::uint64_t comp_key(int m, int e, int f) {
  return (static_cast<std::uint64_t>(m) << 56) | (static_cast<std::uint64_t>(e) << 28) |
         static_cast<std::uint64_t>(f);
}

}  // namespace

NuElement::NuElement(std::vector<Level> levels) : levels_(std::move(levels)) {
  while (!levels_.empty() && levels_.back().minus.is_zero() && levels_.back().plus.is_zero()) levels_.pop_back();
}

Chain NuElement::part(int q, Sign sign) const {
  if (q < 0) throw DomainError("negative level");
  if (q >= static_cast<int>(levels_.size())) return Chain(q);
  return sign == Sign::Minus ? levels_[q].minus : levels_[q].plus;
}

std::strong_ordering operator<=>(const NuElement& a, const NuElement& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.levels_.begin(), a.levels_.end(), b.levels_.begin(),
                                                b.levels_.end());
}

std::size_t NuElement::hash() const {
  std::size_t h = levels_.size();
  for (const auto& l : levels_) {
    h ^= l.minus.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= l.plus.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string nu_violation(const DirectedComplex& k, const NuElement& x) {
  const auto& lv = x.levels();
  if (lv.empty()) return "empty sequence";
  std::ostringstream oss;
  for (int q = 0; q < static_cast<int>(lv.size()); ++q) {
    for (const Chain* c : {&lv[q].minus, &lv[q].plus}) {
      if (c->dim() != q) {
        oss << "level " << q << " holds a chain of dimension " << c->dim();
        return oss.str();
      }
      try {
        k.check_chain(*c);
      } catch (const IntegrityError& e) {
        return e.what();
      }
      if (!c->is_sum_of_basis()) {
        oss << "level " << q << " is not a sum of basis elements";
        return oss.str();
      }
    }
  }
  if (k.augmentation(lv[0].minus) != 1) return "augmentation of x_0^- is not 1";
  if (k.augmentation(lv[0].plus) != 1) return "augmentation of x_0^+ is not 1";
  for (int q = 1; q < static_cast<int>(lv.size()); ++q) {
    Chain expected = lv[q - 1].plus - lv[q - 1].minus;
    if (k.boundary(lv[q].minus) != expected) {
      oss << "boundary of x_" << q << "^- differs from x_" << q - 1 << "^+ - x_" << q - 1 << "^-";
      return oss.str();
    }
    if (k.boundary(lv[q].plus) != expected) {
      oss << "boundary of x_" << q << "^+ differs from x_" << q - 1 << "^+ - x_" << q - 1 << "^-";
      return oss.str();
    }
  }
  // The next level is zero, so the top pair must agree.
  if (lv.back().minus != lv.back().plus) {
    oss << "top level " << lv.size() - 1 << " has x^- != x^+ but no higher level";
    return oss.str();
  }
  return {};
}

NuElement d(Sign alpha, int n, const NuElement& x) {
  if (n < 0) throw DomainError("d_n with negative n");
  if (n >= x.dim()) return x;
  std::vector<NuElement::Level> lv(x.levels().begin(), x.levels().begin() + n);
  Chain c = x.part(n, alpha);
  lv.push_back(NuElement::Level{c, c});
  return NuElement(std::move(lv));
}

NuElement compose(int n, const NuElement& x, const NuElement& y) {
  NuElement z = d(Sign::Plus, n, x);
  if (z != d(Sign::Minus, n, y)) {
    std::ostringstream oss;
    oss << "#_" << n << " undefined: d_" << n << "^+ x != d_" << n << "^- y";
    throw CompositionError(oss.str());
  }
  int top = std::max(x.dim(), y.dim());
  std::vector<NuElement::Level> lv;
  for (int q = 0; q <= top; ++q) {
    NuElement::Level l{x.part(q, Sign::Minus) - z.part(q, Sign::Minus) + y.part(q, Sign::Minus),
                       x.part(q, Sign::Plus) - z.part(q, Sign::Plus) + y.part(q, Sign::Plus)};
    if (!l.minus.is_sum_of_basis() || !l.plus.is_sum_of_basis())
      throw std::logic_error("composite has a negative coefficient");
    lv.push_back(std::move(l));
  }
  return NuElement(std::move(lv));
}

NuElement atom(const DirectedComplex& k, BasisRef a) {
  k.element(a);
  std::vector<NuElement::Level> lv(a.dim + 1);
  Chain base = Chain::basis(a.dim, a.index);
  for (int q = 0; q <= a.dim; ++q)
    lv[q] = NuElement::Level{k.iterated_sign_boundary(base, Sign::Minus, a.dim - q),
                             k.iterated_sign_boundary(base, Sign::Plus, a.dim - q)};
  NuElement x(std::move(lv));
  if (auto why = nu_violation(k, x); !why.empty())
    throw ValidationError("atom <" + k.label(a) + "> is not an element: " + why);
  return x;
}

NuElement induced_functor(const ComplexMorphism& f, const NuElement& x) {
  std::vector<NuElement::Level> lv;
  for (const auto& l : x.levels()) lv.push_back(NuElement::Level{f.apply(l.minus), f.apply(l.plus)});
  NuElement y(std::move(lv));
  if (auto why = nu_violation(f.target(), y); !why.empty())
    throw ValidationError("morphism is not admissible for nu: " + why);
  return y;
}

std::vector<NuElement> enumerate_nu(const DirectedComplex& k, int dim_bound, Coeff coeff_bound,
                                    std::size_t budget) {
  if (dim_bound < 0 || coeff_bound < 0) throw DomainError("enumerate_nu: bounds must be non-negative");
  const int top = std::min(dim_bound, k.top_dim());
  if (top < 0) return {};

  // All non-negative chains per dimension with coefficients <= coeff_bound,
  // grouped by boundary (dimension 0: those with augmentation 1).
  std::vector<std::unordered_map<std::size_t, std::vector<std::pair<Chain, Chain>>>> by_boundary(top + 1);
  std::vector<Chain> unit_vertices;
  for (int q = 0; q <= top; ++q) {
    const int n = k.size(q);
    double total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<double>(coeff_bound + 1);
    if (total > 1e7) throw ResourceError("enumerate_nu: too many candidate chains in dimension " + std::to_string(q));
    std::vector<Coeff> digits(n, 0);
    while (true) {
      Chain c(q);
      for (int i = 0; i < n; ++i) c.add_term(i, digits[i]);
      if (q == 0) {
        if (k.augmentation(c) == 1) unit_vertices.push_back(c);
      } else {
        Chain bd = k.boundary(c);
        by_boundary[q][bd.hash()].emplace_back(bd, c);
      }
      int i = 0;
      while (i < n && digits[i] == coeff_bound) digits[i++] = 0;
      if (i == n) break;
      ++digits[i];
    }
  }
  auto solutions = [&](int q, const Chain& target) {
    std::vector<Chain> out;
    auto it = by_boundary[q].find(target.hash());
    if (it == by_boundary[q].end()) return out;
    for (const auto& [bd, c] : it->second)
      if (bd == target) out.push_back(c);
    return out;
  };

  std::vector<NuElement> found;
  std::vector<NuElement::Level> stack;
  std::function<void(int)> extend = [&](int q) {
    const auto& last = stack.back();
    if (q > top) {
      if (last.minus == last.plus) {
        found.emplace_back(stack);
        if (found.size() > budget) throw ResourceError("enumerate_nu: element budget exceeded");
      }
      return;
    }
    auto sols = solutions(q, last.plus - last.minus);
    for (const auto& m : sols) {
      for (const auto& p : sols) {
        stack.push_back(NuElement::Level{m, p});
        extend(q + 1);
        stack.pop_back();
      }
    }
  };
  for (const auto& m : unit_vertices) {
    for (const auto& p : unit_vertices) {
      stack.push_back(NuElement::Level{m, p});
      extend(1);
      stack.pop_back();
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::optional<int> OmegaTable::find(const NuElement& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int OmegaTable::index_of(const NuElement& x) const {
  auto e = find(x);
  if (!e) throw DomainError("element is not tabulated");
  return *e;
}

int OmegaTable::d(Sign alpha, int m, int e) const {
  if (m < 0) throw DomainError("d_m with negative m");
  if (m >= dims_.at(e)) return e;
  return alpha == Sign::Minus ? d_minus_[m][e] : d_plus_[m][e];
}

std::optional<int> OmegaTable::compose(int m, int e, int f) const {
  if (d(Sign::Plus, m, e) != d(Sign::Minus, m, f)) return std::nullopt;
  if (m >= dims_.at(e)) return f;
  if (m >= dims_.at(f)) return e;
  auto it = comp_.find(comp_key(m, e, f));
  if (it == comp_.end()) throw std::logic_error("composite missing from a closed table");
  return it->second;
}

int OmegaTable::atom(BasisRef b) const {
  if (b.dim < 0 || b.dim >= static_cast<int>(atoms_.size()) || b.index < 0 ||
      b.index >= static_cast<int>(atoms_[b.dim].size()))
    return -1;
  return atoms_[b.dim][b.index];
}

void OmegaTable::index_structure() {
  index_.clear();
  dims_.clear();
  top_dim_ = -1;
  for (int e = 0; e < static_cast<int>(elements_.size()); ++e) {
    index_.emplace(elements_[e], e);
    dims_.push_back(elements_[e].dim());
    top_dim_ = std::max(top_dim_, dims_.back());
  }
  d_minus_.assign(std::max(top_dim_, 0), std::vector<int>(elements_.size()));
  d_plus_ = d_minus_;
  for (int m = 0; m < top_dim_; ++m) {
    for (int e = 0; e < static_cast<int>(elements_.size()); ++e) {
      auto lo = find(complicial::d(Sign::Minus, m, elements_[e]));
      auto hi = find(complicial::d(Sign::Plus, m, elements_[e]));
      if (!lo || !hi) throw CompositionError("element set is not closed under d");
      d_minus_[m][e] = *lo;
      d_plus_[m][e] = *hi;
    }
  }
  comp_.clear();
  for (const auto& c : compositions_) comp_.emplace(comp_key(c.level, c.left, c.right), c.result);
}

OmegaTable OmegaTable::from_elements(ComplexPtr k, std::vector<NuElement> elements) {
  OmegaTable t;
  t.complex_ = std::move(k);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  t.elements_ = std::move(elements);
  t.index_structure();
  const int n = static_cast<int>(t.elements_.size());
  for (int m = 0; m < t.top_dim_; ++m) {
    for (int e = 0; e < n; ++e) {
      if (t.dims_[e] <= m) continue;
      for (int f = 0; f < n; ++f) {
        if (t.dims_[f] <= m || t.d_plus_[m][e] != t.d_minus_[m][f]) continue;
        auto r = t.find(complicial::compose(m, t.elements_[e], t.elements_[f]));
        if (!r) throw CompositionError("element set is not closed under composition");
        t.compositions_.push_back(Composition{m, e, f, *r});
      }
    }
  }
  t.index_structure();
  t.atoms_.resize(t.complex_->top_dim() + 1);
  for (int dd = 0; dd <= t.complex_->top_dim(); ++dd)
    for (int i = 0; i < t.complex_->size(dd); ++i) {
      int e = -1;
      try {
        if (auto f = t.find(complicial::atom(*t.complex_, BasisRef{dd, i}))) e = *f;
      } catch (const ValidationError&) {
      }
      t.atoms_[dd].push_back(e);
    }
  return t;
}

OmegaTable closure_from_atoms(ComplexPtr k, int dim_bound, std::size_t budget) {
  if (dim_bound < 0) throw DomainError("closure_from_atoms: negative dimension bound");
  const int top = std::min(dim_bound, k->top_dim());

  using Derivation = OmegaTable::Derivation;
  std::vector<NuElement> elems;
  std::vector<Derivation> derivs;
  std::vector<int> stages;
  std::unordered_map<NuElement, int, NuElementHash> index;
  std::vector<std::vector<int>> dlo, dhi;  // per element, per level below its dimension
  std::vector<std::unordered_map<int, std::vector<int>>> by_minus(std::max(top, 0));
  std::vector<std::unordered_map<int, std::vector<int>>> by_plus(std::max(top, 0));
  std::unordered_map<std::uint64_t, int> comps;
  std::vector<OmegaTable::Composition> comp_list;
  std::deque<int> queue;
  int stage = 0;

  auto add = [&](NuElement x, const Derivation& how) {
    auto it = index.find(x);
    if (it != index.end()) return it->second;
    int e = static_cast<int>(elems.size());
    if (elems.size() >= budget) {
      std::ostringstream oss;
      oss << "closure exceeded the element budget of " << budget << " (suspected infinite nu K)";
      throw ResourceError(oss.str());
    }
    index.emplace(x, e);
    elems.push_back(std::move(x));
    derivs.push_back(how);
    stages.push_back(stage);
    dlo.emplace_back();
    dhi.emplace_back();
    queue.push_back(e);
    return e;
  };

  auto try_compose = [&](int m, int a, int b) {
    auto key = comp_key(m, a, b);
    if (comps.count(key)) return;
    NuElement r = compose(m, elems[a], elems[b]);
    Derivation how{Derivation::Kind::Composite, {}, Sign::Minus, m, a, b};
    int e = add(std::move(r), how);
    comps.emplace(key, e);
    comp_list.push_back(OmegaTable::Composition{m, a, b, e});
  };

  auto process = [&](int u) {
    const int du = elems[u].dim();
    for (int m = 0; m < du; ++m) {
      int lo = add(d(Sign::Minus, m, elems[u]), Derivation{Derivation::Kind::Boundary, {}, Sign::Minus, m, u, -1});
      int hi = add(d(Sign::Plus, m, elems[u]), Derivation{Derivation::Kind::Boundary, {}, Sign::Plus, m, u, -1});
      dlo[u].push_back(lo);
      dhi[u].push_back(hi);
      by_minus[m][lo].push_back(u);
      by_plus[m][hi].push_back(u);
    }
    for (int m = 0; m < du; ++m) {
      std::vector<int> right = by_minus[m][dhi[u][m]];
      for (int v : right) try_compose(m, u, v);
      std::vector<int> left = by_plus[m][dlo[u][m]];
      for (int w : left) try_compose(m, w, u);
    }
  };

  for (stage = 0; stage <= top; ++stage) {
    for (int i = 0; i < k->size(stage); ++i)
      add(atom(*k, BasisRef{stage, i}), Derivation{Derivation::Kind::Atom, BasisRef{stage, i}, Sign::Minus, 0, -1, -1});
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      process(u);
    }
  }

  // Renumber canonically.
  const int n = static_cast<int>(elems.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return elems[a] < elems[b]; });
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[perm[i]] = i;

  OmegaTable t;
  t.complex_ = k;
  t.elements_.reserve(n);
  for (int i = 0; i < n; ++i) t.elements_.push_back(elems[perm[i]]);
  t.derivations_.resize(n);
  t.stages_.resize(n);
  for (int old = 0; old < n; ++old) {
    Derivation dv = derivs[old];
    if (dv.left >= 0) dv.left = rank[dv.left];
    if (dv.right >= 0) dv.right = rank[dv.right];
    t.derivations_[rank[old]] = dv;
    t.stages_[rank[old]] = stages[old];
  }
  t.order_.resize(n);
  for (int old = 0; old < n; ++old) t.order_[old] = rank[old];
  for (const auto& c : comp_list)
    t.compositions_.push_back(OmegaTable::Composition{c.level, rank[c.left], rank[c.right], rank[c.result]});
  std::sort(t.compositions_.begin(), t.compositions_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.level, a.left, a.right) < std::tie(b.level, b.left, b.right);
  });
  t.atoms_.assign(k->top_dim() + 1, {});
  for (int dd = 0; dd <= k->top_dim(); ++dd) t.atoms_[dd].assign(k->size(dd), -1);
  for (int e = 0; e < n; ++e)
    if (t.derivations_[e].kind == Derivation::Kind::Atom) t.atoms_[t.derivations_[e].basis.dim][t.derivations_[e].basis.index] = e;
  t.index_structure();
  return t;
}

FunctorTable::FunctorTable(OmegaPtr source, OmegaPtr target, std::vector<int> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_->size()) throw IntegrityError("functor table does not cover its source");
}

NuElement FunctorTable::evaluate(const NuElement& x) const {
  auto e = source_->find(x);
  if (!e) throw DomainError("element is not tabulated in the functor source");
  return target_->element(image_[*e]);
}

AtomAssignment FunctorTable::atom_images() const {
  const auto& k = source_->complex();
  AtomAssignment out(k.top_dim() + 1);
  for (int dd = 0; dd <= k.top_dim(); ++dd)
    for (int i = 0; i < k.size(dd); ++i) {
      int a = source_->atom(BasisRef{dd, i});
      out[dd].push_back(a < 0 ? -1 : image_[a]);
    }
  return out;
}

FunctorOutcome functor_from_atoms(const OmegaPtr& source, const OmegaPtr& target, const AtomAssignment& assignment) {
  const OmegaTable& s = *source;
  const OmegaTable& t = *target;
  if (s.derivation_order().size() != s.size()) throw DomainError("functor source must be an atom closure");
  FunctorOutcome out;
  auto fail = [&](int e, std::string why) {
    out.element = e;
    out.conflict = std::move(why);
    return out;
  };
  const int tn = static_cast<int>(t.size());
  std::vector<int> image(s.size(), -1);
  using Kind = OmegaTable::Derivation::Kind;
  for (int e : s.derivation_order()) {
    const auto& dv = s.derivation(e);
    switch (dv.kind) {
      case Kind::Atom: {
        const auto& b = dv.basis;
        if (b.dim >= static_cast<int>(assignment.size()) || b.index >= static_cast<int>(assignment[b.dim].size()))
          return fail(e, "assignment missing for atom <" + s.complex().label(b) + ">");
        int g = assignment[b.dim][b.index];
        if (g < 0 || g >= tn) return fail(e, "assignment for atom <" + s.complex().label(b) + "> is out of range");
        image[e] = g;
        break;
      }
      case Kind::Boundary:
        image[e] = t.d(dv.sign, dv.level, image[dv.left]);
        break;
      case Kind::Composite: {
        auto r = t.compose(dv.level, image[dv.left], image[dv.right]);
        if (!r) {
          std::ostringstream oss;
          oss << "images of the factors of element " << e << " are not #_" << dv.level << "-composable";
          return fail(e, oss.str());
        }
        image[e] = *r;
        break;
      }
    }
  }
  const int levels = std::max(s.top_dim(), t.top_dim());
  for (int e = 0; e < static_cast<int>(s.size()); ++e) {
    for (int m = 0; m <= levels; ++m) {
      for (Sign a : {Sign::Minus, Sign::Plus}) {
        if (image[s.d(a, m, e)] != t.d(a, m, image[e])) {
          std::ostringstream oss;
          oss << "image of d_" << m << "^" << sign_char(a) << " of element " << e << " is not d_" << m << "^"
              << sign_char(a) << " of its image";
          return fail(e, oss.str());
        }
      }
    }
  }
  for (const auto& c : s.compositions()) {
    auto r = t.compose(c.level, image[c.left], image[c.right]);
    if (!r || *r != image[c.result]) {
      std::ostringstream oss;
      oss << "image of element " << c.result << " conflicts with the composite of its factors " << c.left << " #_"
          << c.level << " " << c.right;
      return fail(c.result, oss.str());
    }
  }
  out.functor.emplace(source, target, std::move(image));
  return out;
}

FunctorTable identity_functor(const OmegaPtr& table) {
  std::vector<int> image(table->size());
  std::iota(image.begin(), image.end(), 0);
  return FunctorTable(table, table, std::move(image));
}

std::vector<int> element_map(const ComplexMorphism& f, const OmegaTable& source, const OmegaTable& target) {
  std::vector<int> out;
  out.reserve(source.size());
  for (const auto& x : source.elements()) {
    auto e = target.find(induced_functor(f, x));
    if (!e) throw IntegrityError("image under nu f is not tabulated in the target");
    out.push_back(*e);
  }
  return out;
}

}  // namespace complicial

#include "complicial/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "complicial/errors.hpp"

namespace complicial {

int DirectedComplex::add_basis(int dim, std::string label, std::vector<int> vertices) {
  if (dim < 0) throw DomainError("negative basis dimension");
  if (by_label_.count(label)) throw IntegrityError("duplicate basis label " + label);
  if (static_cast<int>(bases_.size()) <= dim) {
    bases_.resize(dim + 1);
    boundaries_.resize(dim + 1);
  }
  int index = static_cast<int>(bases_[dim].size());
  by_label_.emplace(label, BasisRef{dim, index});
  bases_[dim].push_back(BasisElement{dim, index, std::move(label), std::move(vertices)});
  if (dim == 0) {
    augmentation_.push_back(0);
  } else {
    boundaries_[dim].push_back(Chain(dim - 1));
  }
  return index;
}

void DirectedComplex::set_boundary(BasisRef b, Chain boundary) {
  require_dim(b.dim);
  if (b.dim == 0) throw DomainError("0-dimensional basis elements have no boundary");
  if (b.index < 0 || b.index >= size(b.dim)) throw IntegrityError("set_boundary on unregistered element");
  boundaries_[b.dim][b.index] = std::move(boundary);
}

void DirectedComplex::set_augmentation(int index, Coeff value) {
  if (index < 0 || index >= size(0)) throw IntegrityError("set_augmentation on unregistered element");
  augmentation_[index] = value;
}

int DirectedComplex::top_dim() const {
  for (int d = static_cast<int>(bases_.size()) - 1; d >= 0; --d)
    if (!bases_[d].empty()) return d;
  return -1;
}

int DirectedComplex::size(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(bases_.size())) return 0;
  return static_cast<int>(bases_[dim].size());
}

std::size_t DirectedComplex::total_size() const {
  std::size_t n = 0;
  for (const auto& b : bases_) n += b.size();
  return n;
}

void DirectedComplex::require_dim(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(bases_.size())) {
    std::ostringstream oss;
    oss << "no basis elements in dimension " << dim;
    throw IntegrityError(oss.str());
  }
}

const BasisElement& DirectedComplex::element(BasisRef b) const {
  require_dim(b.dim);
  if (b.index < 0 || b.index >= size(b.dim)) throw IntegrityError("unregistered basis element");
  return bases_[b.dim][b.index];
}

const std::vector<BasisElement>& DirectedComplex::basis(int dim) const {
  static const std::vector<BasisElement> empty;
  if (dim < 0 || dim >= static_cast<int>(bases_.size())) return empty;
  return bases_[dim];
}

std::optional<BasisRef> DirectedComplex::find(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

BasisRef DirectedComplex::at(std::string_view label) const {
  auto b = find(label);
  if (!b) throw IntegrityError("unknown basis label " + std::string(label));
  return *b;
}

const Chain& DirectedComplex::boundary_of(BasisRef b) const {
  element(b);
  if (b.dim == 0) throw DomainError("0-dimensional basis elements have no boundary");
  return boundaries_[b.dim][b.index];
}

Coeff DirectedComplex::augmentation_of(int index) const {
  if (index < 0 || index >= size(0)) throw IntegrityError("unregistered 0-dimensional element");
  return augmentation_[index];
}

void DirectedComplex::check_chain(const Chain& c) const {
  for (const auto& t : c.terms()) {
    if (t.index < 0 || t.index >= size(c.dim())) {
      std::ostringstream oss;
      oss << "chain refers to unregistered basis element #" << t.index << " in dimension " << c.dim();
      throw IntegrityError(oss.str());
    }
  }
}

Chain DirectedComplex::boundary(const Chain& c) const {
  if (c.dim() <= 0) throw DomainError("boundary of a 0-dimensional chain");
  check_chain(c);
  Chain out(c.dim() - 1);
  for (const auto& t : c.terms()) out += t.coeff * boundaries_[c.dim()][t.index];
  return out;
}

std::pair<Chain, Chain> DirectedComplex::split_boundary(const Chain& c) const {
  Chain b = boundary(c);
  return {b.positive_part(), b.negative_part()};
}

Chain DirectedComplex::sign_boundary(const Chain& c, Sign sign) const {
  Chain b = boundary(c);
  return sign == Sign::Plus ? b.positive_part() : b.negative_part();
}

Chain DirectedComplex::iterated_sign_boundary(const Chain& c, Sign sign, int r) const {
  if (r < 0 || r > c.dim()) {
    std::ostringstream oss;
    oss << "iterated boundary of order " << r << " on a chain of dimension " << c.dim();
    throw DomainError(oss.str());
  }
  Chain out = c;
  for (int i = 0; i < r; ++i) out = sign_boundary(out, sign);
  return out;
}

Coeff DirectedComplex::augmentation(const Chain& c) const {
  if (c.dim() != 0) throw DomainError("augmentation of a positive-dimensional chain");
  check_chain(c);
  Coeff e = 0;
  for (const auto& t : c.terms()) e = checked_add(e, checked_mul(t.coeff, augmentation_[t.index]));
  return e;
}

bool operator==(const DirectedComplex& a, const DirectedComplex& b) {
  if (a.top_dim() != b.top_dim()) return false;
  for (int d = 0; d <= a.top_dim(); ++d) {
    if (a.size(d) != b.size(d)) return false;
    for (int i = 0; i < a.size(d); ++i) {
      const auto& x = a.bases_[d][i];
      const auto& y = b.bases_[d][i];
      if (x.label != y.label || x.vertices != y.vertices) return false;
      if (d > 0 && a.boundaries_[d][i] != b.boundaries_[d][i]) return false;
    }
  }
  return a.augmentation_ == b.augmentation_;
}

bool ValidationReport::has(std::string_view kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate_complex(const DirectedComplex& k) {
  ValidationReport report;
  auto add = [&](std::string kind, std::string detail) {
    report.violations.push_back(Violation{std::move(kind), std::move(detail)});
  };
  for (int d = 1; d <= k.top_dim(); ++d) {
    for (int i = 0; i < k.size(d); ++i) {
      BasisRef b{d, i};
      const Chain& bd = k.boundary_of(b);
      if (bd.dim() != d - 1) {
        std::ostringstream oss;
        oss << "boundary of " << k.label(b) << " has dimension " << bd.dim() << ", expected " << d - 1;
        add("grading", oss.str());
        continue;
      }
      try {
        k.check_chain(bd);
      } catch (const IntegrityError& e) {
        add("integrity", k.label(b) + ": " + e.what());
        continue;
      }
      if (d == 1) {
        if (Coeff e = k.augmentation(bd); e != 0) {
          std::ostringstream oss;
          oss << "augmentation of the boundary of " << k.label(b) << " is " << e;
          add("augmentation", oss.str());
        }
      } else {
        bool graded = true;
        for (const auto& t : bd.terms()) {
          const Chain& inner = k.boundary_of(BasisRef{d - 1, t.index});
          if (inner.dim() != d - 2) graded = false;
        }
        if (!graded) {
          add("grading", "boundary of " + k.label(b) + " has ill-graded terms");
          continue;
        }
        if (!k.boundary(bd).is_zero()) add("boundary-squared", "dd " + k.label(b) + " != 0");
      }
    }
  }
  return report;
}

ComplexMorphism::ComplexMorphism(ComplexPtr source, ComplexPtr target,
                                 std::vector<std::vector<Chain>> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (!source_ || !target_) throw DomainError("morphism with null complex");
  int top = source_->top_dim();
  if (static_cast<int>(image_.size()) < top + 1) throw IntegrityError("morphism image table too short");
  for (int d = 0; d <= top; ++d)
    if (static_cast<int>(image_[d].size()) != source_->size(d))
      throw IntegrityError("morphism image table does not match the source basis");
  image_.resize(top + 1);
}

const Chain& ComplexMorphism::image_of(BasisRef b) const {
  source_->element(b);
  return image_[b.dim][b.index];
}

Chain ComplexMorphism::apply(const Chain& c) const {
  source_->check_chain(c);
  Chain out(c.dim());
  for (const auto& t : c.terms()) {
    const Chain& img = image_[c.dim()][t.index];
    if (img.dim() != c.dim()) throw IntegrityError("morphism image has the wrong dimension");
    out += t.coeff * img;
  }
  return out;
}

bool operator==(const ComplexMorphism& a, const ComplexMorphism& b) {
  return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.image_ == b.image_;
}

ComplexMorphism identity_morphism(const ComplexPtr& k) {
  std::vector<std::vector<Chain>> image(k->top_dim() + 1);
  for (int d = 0; d <= k->top_dim(); ++d)
    for (int i = 0; i < k->size(d); ++i) image[d].push_back(Chain::basis(d, i));
  return ComplexMorphism(k, k, std::move(image));
}

ComplexMorphism compose(const ComplexMorphism& g, const ComplexMorphism& f) {
  if (!(f.target() == g.source())) throw DomainError("composing morphisms with mismatched complexes");
  const auto& src = f.source();
  std::vector<std::vector<Chain>> image(src.top_dim() + 1);
  for (int d = 0; d <= src.top_dim(); ++d)
    for (int i = 0; i < src.size(d); ++i) image[d].push_back(g.apply(f.image_of(BasisRef{d, i})));
  return ComplexMorphism(f.source_ptr(), g.target_ptr(), std::move(image));
}

ValidationReport validate_morphism(const ComplexMorphism& f) {
  ValidationReport report;
  auto add = [&](std::string kind, std::string detail) {
    report.violations.push_back(Violation{std::move(kind), std::move(detail)});
  };
  const auto& src = f.source();
  const auto& tgt = f.target();
  for (int d = 0; d <= src.top_dim(); ++d) {
    for (int i = 0; i < src.size(d); ++i) {
      BasisRef b{d, i};
      const Chain& img = f.image_of(b);
      if (img.dim() != d) {
        add("grading", "image of " + src.label(b) + " has the wrong dimension");
        continue;
      }
      try {
        tgt.check_chain(img);
      } catch (const IntegrityError& e) {
        add("integrity", src.label(b) + ": " + e.what());
        continue;
      }
      if (!img.is_sum_of_basis()) add("not a sum of basis elements", "image of " + src.label(b));
      if (d == 0) {
        if (tgt.augmentation(img) != src.augmentation_of(i))
          add("augmentation", "augmentation not preserved on " + src.label(b));
      } else {
        try {
          if (f.apply(src.boundary_of(b)) != tgt.boundary(img))
            add("chain map", "f d != d f on " + src.label(b));
        } catch (const Error& e) {
          add("chain map", src.label(b) + ": " + e.what());
        }
      }
    }
  }
  return report;
}

bool is_unital(const DirectedComplex& k) {
  for (int d = 0; d <= k.top_dim(); ++d) {
    for (int i = 0; i < k.size(d); ++i) {
      Chain a = Chain::basis(d, i);
      for (Sign s : {Sign::Minus, Sign::Plus})
        if (k.augmentation(k.iterated_sign_boundary(a, s, d)) != 1) return false;
    }
  }
  return true;
}

LoopFreeness loop_freeness(const DirectedComplex& k) {
  LoopFreeness out;
  std::set<std::pair<BasisRef, BasisRef>> pairs;
  for (int p = 1; p <= k.top_dim(); ++p) {
    for (int i = 0; i < k.size(p); ++i) {
      Chain minus = Chain::basis(p, i);
      Chain plus = minus;
      for (int r = 1; r <= p; ++r) {
        minus = k.sign_boundary(minus, Sign::Minus);
        plus = k.sign_boundary(plus, Sign::Plus);
        for (const auto& a : minus.terms())
          for (const auto& b : plus.terms())
            pairs.emplace(BasisRef{p - r, a.index}, BasisRef{p - r, b.index});
      }
    }
  }
  out.relation.assign(pairs.begin(), pairs.end());

  // The relation only links elements of equal dimension; look for a cycle in
  // each dimension's digraph with an iterative three-colour DFS.
  for (int d = 0; d <= k.top_dim() && out.loop_free; ++d) {
    int n = k.size(d);
    std::vector<std::vector<int>> succ(n);
    for (const auto& [a, b] : out.relation)
      if (a.dim == d) succ[a.index].push_back(b.index);
    std::vector<int> colour(n, 0), parent(n, -1);
    for (int root = 0; root < n && out.loop_free; ++root) {
      if (colour[root] != 0) continue;
      std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
      colour[root] = 1;
      while (!stack.empty() && out.loop_free) {
        auto& [v, next] = stack.back();
        if (next == succ[v].size()) {
          colour[v] = 2;
          stack.pop_back();
          continue;
        }
        int w = succ[v][next++];
        if (colour[w] == 0) {
          colour[w] = 1;
          parent[w] = v;
          stack.emplace_back(w, 0);
        } else if (colour[w] == 1) {
          std::vector<int> path{w};
          for (int u = v; u != w; u = parent[u]) path.push_back(u);
          std::reverse(path.begin() + 1, path.end());
          for (int u : path) out.cycle.push_back(BasisRef{d, u});
          out.cycle.push_back(BasisRef{d, w});
          out.loop_free = false;
        }
      }
    }
  }
  return out;
}

}  // namespace complicial

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "complicial/chain.hpp"

namespace complicial {

struct BasisRef {
  int dim = 0;
  int index = 0;

  friend bool operator==(const BasisRef&, const BasisRef&) = default;
  friend auto operator<=>(const BasisRef&, const BasisRef&) = default;
};

struct BasisElement {
  int dim = 0;
  int id = 0;
  std::string label;
  // Increasing vertex tuple for simplex bases; empty for adjoined generators.
  std::vector<int> vertices;
};

/// A free augmented directed complex: graded bases, a boundary chain for every
/// positive-dimensional basis element and an augmentation on dimension 0.
///
/// Basis elements are kept in registration order, which is the canonical
/// order used by chains and serialization. Complexes are assembled with
/// add_basis/set_boundary/set_augmentation and then shared immutably.
/// Well-formedness (dd = 0, augmentation of boundaries = 0) is not enforced
/// on construction; see validate_complex.
class DirectedComplex {
 public:
  int add_basis(int dim, std::string label, std::vector<int> vertices = {});
  void set_boundary(BasisRef b, Chain boundary);
  void set_augmentation(int index, Coeff value);

  // Highest dimension with a registered basis element; -1 when empty.
  int top_dim() const;
  int size(int dim) const;
  std::size_t total_size() const;
  const BasisElement& element(BasisRef b) const;
  const std::vector<BasisElement>& basis(int dim) const;
  std::optional<BasisRef> find(std::string_view label) const;
  BasisRef at(std::string_view label) const;
  const std::string& label(BasisRef b) const { return element(b).label; }

  const Chain& boundary_of(BasisRef b) const;
  Coeff augmentation_of(int index) const;

  Chain boundary(const Chain& c) const;
  // (d^+ c, d^- c): non-negative, disjoint, with d c = d^+ c - d^- c.
  std::pair<Chain, Chain> split_boundary(const Chain& c) const;
  Chain sign_boundary(const Chain& c, Sign sign) const;
  // (d^sign)^r c; r = 0 returns c.
  Chain iterated_sign_boundary(const Chain& c, Sign sign, int r) const;
  Coeff augmentation(const Chain& c) const;

  // Throws IntegrityError if c mentions an unregistered basis element.
  void check_chain(const Chain& c) const;

  friend bool operator==(const DirectedComplex& a, const DirectedComplex& b);

 private:
  void require_dim(int dim) const;

  std::vector<std::vector<BasisElement>> bases_;
  std::vector<std::vector<Chain>> boundaries_;
  std::vector<Coeff> augmentation_;
  std::unordered_map<std::string, BasisRef> by_label_;
};

using ComplexPtr = std::shared_ptr<const DirectedComplex>;

struct Violation {
  std::string kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(std::string_view kind) const;
};

ValidationReport validate_complex(const DirectedComplex& k);

/// Basis-to-chain map between complexes. Valid morphisms commute with the
/// boundary, preserve augmentation and send basis elements to sums of basis
/// elements; validate_morphism reports every failure.
class ComplexMorphism {
 public:
  ComplexMorphism(ComplexPtr source, ComplexPtr target, std::vector<std::vector<Chain>> image);

  const DirectedComplex& source() const { return *source_; }
  const DirectedComplex& target() const { return *target_; }
  const ComplexPtr& source_ptr() const { return source_; }
  const ComplexPtr& target_ptr() const { return target_; }

  const Chain& image_of(BasisRef b) const;
  Chain apply(const Chain& c) const;

  friend bool operator==(const ComplexMorphism& a, const ComplexMorphism& b);

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<std::vector<Chain>> image_;
};

ComplexMorphism identity_morphism(const ComplexPtr& k);
// g after f.
ComplexMorphism compose(const ComplexMorphism& g, const ComplexMorphism& f);

ValidationReport validate_morphism(const ComplexMorphism& f);

bool is_unital(const DirectedComplex& k);

struct LoopFreeness {
  bool loop_free = true;
  // Generating pairs a < a', deduplicated and sorted.
  std::vector<std::pair<BasisRef, BasisRef>> relation;
  // When not loop-free: a closed path a_0 < a_1 < ... < a_0 (first repeated at the end).
  std::vector<BasisRef> cycle;
};

LoopFreeness loop_freeness(const DirectedComplex& k);
inline bool is_loop_free(const DirectedComplex& k) { return loop_freeness(k).loop_free; }

}  // namespace complicial

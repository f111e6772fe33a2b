#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "complicial/complex.hpp"

namespace complicial {

/// A member of nu K: the double sequence (x_0^-, x_0^+ | x_1^-, x_1^+ | ...)
/// of non-negative chains. Trailing zero pairs are trimmed so structural
/// equality is equality of elements.
class NuElement {
 public:
  struct Level {
    Chain minus;
    Chain plus;
    friend bool operator==(const Level&, const Level&) = default;
    friend auto operator<=>(const Level&, const Level&) = default;
  };

  NuElement() = default;
  explicit NuElement(std::vector<Level> levels);

  // Top non-zero level; -1 for the empty sequence (never a valid element).
  int dim() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<Level>& levels() const { return levels_; }
  // x_q^sign, or the zero q-chain above the top level.
  Chain part(int q, Sign sign) const;

  friend bool operator==(const NuElement&, const NuElement&) = default;
  // Canonical order: by dimension, then level by level.
  friend std::strong_ordering operator<=>(const NuElement& a, const NuElement& b);

  std::size_t hash() const;

 private:
  std::vector<Level> levels_;
};

struct NuElementHash {
  std::size_t operator()(const NuElement& x) const { return x.hash(); }
};

// Empty string when x is a valid member of nu K, else the first failed constraint.
std::string nu_violation(const DirectedComplex& k, const NuElement& x);
inline bool nu_validate(const DirectedComplex& k, const NuElement& x) { return nu_violation(k, x).empty(); }

NuElement d(Sign alpha, int n, const NuElement& x);
// x #_n y = x - z + y; throws CompositionError unless d_n^+ x == d_n^- y.
NuElement compose(int n, const NuElement& x, const NuElement& y);
// The atom <a>; throws ValidationError if it is not a member of nu K.
NuElement atom(const DirectedComplex& k, BasisRef a);
// nu f applied termwise; throws ValidationError if the result is not valid.
NuElement induced_functor(const ComplexMorphism& f, const NuElement& x);

inline constexpr std::size_t kDefaultBudget = 100000;
inline constexpr Coeff kDefaultCoeffBound = 2;

// Every valid element with top dimension <= dim_bound and coefficients
// <= coeff_bound, canonically sorted. Complete for nu K only when the
// coefficient bound is not attained.
std::vector<NuElement> enumerate_nu(const DirectedComplex& k, int dim_bound, Coeff coeff_bound,
                                    std::size_t budget = kDefaultBudget);

/// A finite sub-omega-category of nu K with tabulated d_m^alpha and #_m.
///
/// Elements are indexed in canonical order. Each element also records how
/// the closure first reached it (atom, boundary, or composite of two earlier
/// elements); derivation_order() lists elements so that every derivation
/// only refers to earlier entries. stage(e) is the atom dimension at which
/// e was first produced.
class OmegaTable {
 public:
  struct Derivation {
    enum class Kind { Atom, Boundary, Composite };
    Kind kind = Kind::Atom;
    BasisRef basis{};   // Atom
    Sign sign{};        // Boundary
    int level = 0;      // Boundary, Composite
    int left = -1;      // Boundary parent, Composite left
    int right = -1;     // Composite right
  };

  struct Composition {
    int level;
    int left;
    int right;
    int result;
  };

  const DirectedComplex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<NuElement>& elements() const { return elements_; }
  const NuElement& element(int e) const { return elements_.at(e); }
  int dim(int e) const { return dims_.at(e); }
  int top_dim() const { return top_dim_; }

  std::optional<int> find(const NuElement& x) const;
  int index_of(const NuElement& x) const;

  int d(Sign alpha, int m, int e) const;
  // Index of e #_m f, or std::nullopt when d_m^+ e != d_m^- f.
  std::optional<int> compose(int m, int e, int f) const;

  // Element index of the atom on basis element b; -1 if b is above the bound.
  int atom(BasisRef b) const;
  bool is_atom(int e) const { return derivations_.at(e).kind == Derivation::Kind::Atom; }

  const Derivation& derivation(int e) const { return derivations_.at(e); }
  const std::vector<int>& derivation_order() const { return order_; }
  int stage(int e) const { return stages_.at(e); }
  // Every defined composite with level below both operand dimensions.
  const std::vector<Composition>& compositions() const { return compositions_; }

  // A table over an explicit element set, e.g. the output of enumerate_nu.
  // Throws CompositionError if the set is not closed under d and #. Such a
  // table has no derivations and can only serve as a functor target.
  static OmegaTable from_elements(ComplexPtr k, std::vector<NuElement> elements);

 private:
  friend OmegaTable closure_from_atoms(ComplexPtr k, int dim_bound, std::size_t budget);

  void index_structure();

  ComplexPtr complex_;
  std::vector<NuElement> elements_;
  std::vector<int> dims_;
  int top_dim_ = -1;
  std::unordered_map<NuElement, int, NuElementHash> index_;
  std::vector<std::vector<int>> d_minus_;  // [m][e], m < top_dim_
  std::vector<std::vector<int>> d_plus_;
  std::unordered_map<std::uint64_t, int> comp_;
  std::vector<Composition> compositions_;
  std::vector<std::vector<int>> atoms_;
  std::vector<Derivation> derivations_;
  std::vector<int> order_;
  std::vector<int> stages_;
};

using OmegaPtr = std::shared_ptr<const OmegaTable>;

// Least subset of nu K containing the atoms of dimension <= dim_bound and
// closed under d_m^alpha and every defined #_m. Throws ResourceError once the
// element count exceeds `budget`.
OmegaTable closure_from_atoms(ComplexPtr k, int dim_bound, std::size_t budget = kDefaultBudget);

// Target element for each atom of the source: assignment[dim][basis index].
using AtomAssignment = std::vector<std::vector<int>>;

/// An omega-functor between tabulated omega-categories, stored as the image
/// of every source element.
class FunctorTable {
 public:
  FunctorTable(OmegaPtr source, OmegaPtr target, std::vector<int> image);

  const OmegaTable& source() const { return *source_; }
  const OmegaTable& target() const { return *target_; }
  const OmegaPtr& source_ptr() const { return source_; }
  const OmegaPtr& target_ptr() const { return target_; }
  const std::vector<int>& image() const { return image_; }

  int evaluate(int e) const { return image_.at(e); }
  // Throws DomainError if x is not tabulated in the source.
  NuElement evaluate(const NuElement& x) const;
  AtomAssignment atom_images() const;

  friend bool operator==(const FunctorTable& a, const FunctorTable& b) { return a.image_ == b.image_; }

 private:
  OmegaPtr source_;
  OmegaPtr target_;
  std::vector<int> image_;
};

struct FunctorOutcome {
  std::optional<FunctorTable> functor;
  std::string conflict;  // empty on success
  int element = -1;      // source element named by the conflict

  bool ok() const { return functor.has_value(); }
};

// Propagates atom images along the source derivations and checks every
// d_m^alpha and tabulated #_m relation in the target.
FunctorOutcome functor_from_atoms(const OmegaPtr& source, const OmegaPtr& target, const AtomAssignment& assignment);

FunctorTable identity_functor(const OmegaPtr& table);

// Element map S -> T given by nu f, both tables over f's source / target.
// Throws IntegrityError if some image is not tabulated in T.
std::vector<int> element_map(const ComplexMorphism& f, const OmegaTable& source, const OmegaTable& target);

}  // namespace complicial

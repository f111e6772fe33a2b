#pragma once

#include <map>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "complicial/omega.hpp"
#include "complicial/simplex.hpp"

namespace complicial {

/// An n-simplex of the nerve: a functor nu Delta_n -> C, stored as the image
/// of every element of the tabulated nu Delta_n. Equality is equality of
/// tables (equivalently of atom images).
struct NerveElement {
  int dim = 0;
  std::vector<int> image;

  friend bool operator==(const NerveElement&, const NerveElement&) = default;
  friend auto operator<=>(const NerveElement&, const NerveElement&) = default;
};

// Hom(S, C) for an atom closure S: atoms are assigned dimension by dimension,
// candidates are filtered by their (d^-, d^+) boundaries, composites are
// propagated at every dimension boundary and every survivor is re-checked
// with functor_from_atoms. Sorted by image table.
std::vector<std::vector<int>> enumerate_functors(const OmegaPtr& source, const OmegaPtr& target,
                                                 std::size_t budget = kDefaultBudget);

// Per-dimension N_n C for n <= max_dim.
std::vector<std::vector<NerveElement>> nerve_enumerate(const OmegaPtr& target, int max_dim,
                                                       std::size_t budget = kDefaultBudget);

/// Pieces of V_n^k needed to factor horns and elements through Pi_n^k.
struct VeeData {
  int n = 0;
  int k = 0;
  VeeComplex vee;
  OmegaPtr table;                            // closure of nu V_n^k
  std::vector<int> pi_of_simplex;            // element of nu Delta_n -> element of nu V via nu Pi
  std::vector<std::vector<int>> pi_of_face;  // [i] element of nu Delta_{n-1} -> nu V via nu(pi d_i); empty at i = k
  std::vector<int> inclusion;                // element of nu V -> element of nu Delta_n
};

/// The nerve of a tabulated omega-category, truncated at max_dim, with its
/// simplicial operators precomputed by precomposition.
class Nerve {
 public:
  Nerve(OmegaPtr target, int max_dim, std::size_t budget = kDefaultBudget);

  const OmegaTable& target() const { return *target_; }
  const OmegaPtr& target_ptr() const { return target_; }
  int max_dim() const { return max_dim_; }
  const OmegaPtr& source(int n) const { return sources_.at(n); }

  std::size_t count(int n) const { return elements_.at(n).size(); }
  const std::vector<NerveElement>& elements(int n) const { return elements_.at(n); }
  const NerveElement& element(int n, int x) const { return elements_.at(n).at(x); }
  std::optional<int> find(const NerveElement& x) const;
  FunctorTable table(int n, int x) const;
  int atom_image(int n, int x, BasisRef a) const;

  int face(int n, int x, int i) const;
  // Requires n + 1 <= max_dim.
  int degeneracy(int n, int x, int i) const;
  bool is_degenerate(int n, int x) const;

  // Thinness on atoms; sufficient because nu Delta_n is generated by atoms.
  bool is_thin(int n, int x) const;
  // Thinness tested on every element of nu Delta_n.
  bool is_thin_all_elements(int n, int x) const;

  const VeeData& vee(int n, int k) const;

  // Precomposition of x with an element map of source tables.
  static NerveElement precompose(const NerveElement& x, int dim, const std::vector<int>& map);

 private:
  OmegaPtr target_;
  int max_dim_;
  std::vector<OmegaPtr> sources_;
  std::vector<std::vector<NerveElement>> elements_;
  std::vector<std::map<std::vector<int>, int>> lookup_;
  std::vector<std::vector<std::vector<int>>> faces_;   // [n][x][i]
  std::vector<std::vector<std::vector<int>>> degens_;  // [n][x][i]
  std::vector<std::vector<bool>> degenerate_;
  std::map<std::pair<int, int>, VeeData> vee_;  // (n, k)
};

struct NerveHorn {
  int n = 0;
  int k = 0;
  std::vector<int> faces;  // indices into N_{n-1}, -1 at position k

  friend bool operator==(const NerveHorn&, const NerveHorn&) = default;
};

// Validates d_i z_j = d_{j-1} z_i (i < j, both != k); throws HornError naming the pair.
NerveHorn horn_assemble(const Nerve& nerve, int n, int k, std::vector<int> faces);
// The horn of x with face k omitted.
NerveHorn horn_of(const Nerve& nerve, int n, int x, int k);
bool filler_check(const Nerve& nerve, int x, const NerveHorn& h);

struct Factorization {
  std::optional<FunctorTable> y;  // on nu V_n^k
  std::string diagnosis;          // why the horn is not of the form y(nu pi)
  bool ok() const { return y.has_value(); }
};

// Reads y off faces k-1 and k+1 and checks that y(nu pi_n^k) reproduces h.
Factorization factor_through_vee(const Nerve& nerve, const NerveHorn& h);
// y(nu Pi_n^k) for the y of factor_through_vee, as an index into N_n.
// Throws UnsupportedHornError for outer or non-complicial horns.
int thin_filler(const Nerve& nerve, const NerveHorn& h);
// x == y(nu Pi_n^k) where y is x restricted to nu V_n^k.
bool is_complicial(const Nerve& nerve, int n, int x, int k);

}  // namespace complicial

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "complicial/complex.hpp"
#include "complicial/errors.hpp"

namespace complicial {

using Tuple = std::vector<int>;

// Renders a vertex tuple as "[0,1,2]".
std::string tuple_label(const Tuple& t);
// Inverse of tuple_label; std::nullopt for anything that is not a tuple label.
std::optional<Tuple> parse_tuple_label(std::string_view label);

// All strictly increasing (q+1)-tuples in [0, n] for q = 0..n, lexicographic per dimension.
ComplexPtr delta(int n);

// Face operation d_i^v : Delta_{n-1} -> Delta_n, skipping vertex i.
ComplexMorphism face_map(int n, int i);
// Degeneracy operation e_i^v : Delta_{n+1} -> Delta_n, collapsing i+1 onto i.
ComplexMorphism degeneracy_map(int n, int i);

struct Subcomplex {
  ComplexPtr complex;
  ComplexMorphism inclusion;
};

// The subcomplex of `ambient` on the basis elements accepted by `keep`.
// Throws IntegrityError if some kept boundary leaves the subcomplex.
template <typename Pred>
Subcomplex restrict_complex(const ComplexPtr& ambient, Pred keep);

// Lambda_n^k: Delta_n without [0..k^..n] and [0..n].
Subcomplex horn_complex(int n, int k);

struct VeeComplex {
  ComplexPtr complex;
  ComplexMorphism into_horn;
  ComplexMorphism into_simplex;
};

// V_n^k: tuples that omit k-1 or omit k+1.
VeeComplex vee_complex(int n, int k);

// Pi_n^k : Delta_n -> V_n^k.
ComplexMorphism pi(int n, int k);
// pi_n^k = Pi_n^k restricted to Lambda_n^k.
ComplexMorphism pi_horn(int n, int k);

struct WComplexBundle {
  ComplexPtr complex;
  ComplexMorphism pi;  // Delta_n -> W
  BasisRef t_prime;
  BasisRef s_prime;
  Sign kappa;
  int n = 0;
  int k = 0;
};

inline constexpr const char* kTPrimeLabel = "t'";
inline constexpr const char* kSPrimeLabel = "s'";

// V_n^k with t_k' (dim n-1) and s' (dim n) adjoined, plus Pi : Delta_n -> W.
WComplexBundle w_complex(int n, int k);

// [0..n] and [0..i^..n] as tuples.
Tuple top_simplex(int n);
Tuple omit_vertex(int n, int i);

struct Block {
  int start = 0;  // positions in the ambient tuple, inclusive
  int end = 0;
};

// The q-dimensional faces of `a` that can be written as a concatenation of
// blocks [u_0, ..., u_k] of `a` where, for Sign::Minus, u_0 is an odd
// initial block and the rest are even or final; for Sign::Plus every block
// is even or final. Returned in lexicographic order, each face once.
std::vector<Tuple> block_faces(const Tuple& a, int q, Sign sign);

// Sum of block_faces as a chain in `simplex` (which must contain them).
Chain blocks_formula(const DirectedComplex& simplex, const Tuple& a, int q, Sign sign);

// ---------------------------------------------------------------------------

template <typename Pred>
Subcomplex restrict_complex(const ComplexPtr& ambient, Pred keep) {
  auto sub = std::make_shared<DirectedComplex>();
  std::vector<std::vector<int>> new_index(ambient->top_dim() + 1);
  for (int d = 0; d <= ambient->top_dim(); ++d) {
    new_index[d].assign(ambient->size(d), -1);
    for (int i = 0; i < ambient->size(d); ++i) {
      const auto& e = ambient->element(BasisRef{d, i});
      if (keep(e)) new_index[d][i] = sub->add_basis(d, e.label, e.vertices);
    }
  }
  std::vector<std::vector<Chain>> image(sub->top_dim() + 1);
  for (int d = 0; d <= ambient->top_dim(); ++d) {
    for (int i = 0; i < ambient->size(d); ++i) {
      int j = new_index[d][i];
      if (j < 0) continue;
      if (d == 0) {
        sub->set_augmentation(j, ambient->augmentation_of(i));
      } else {
        Chain bd(d - 1);
        for (const auto& t : ambient->boundary_of(BasisRef{d, i}).terms()) {
          int tj = new_index[d - 1][t.index];
          if (tj < 0) throw IntegrityError("boundary of " + ambient->label(BasisRef{d, i}) + " leaves the subcomplex");
          bd.add_term(tj, t.coeff);
        }
        sub->set_boundary(BasisRef{d, j}, std::move(bd));
      }
      image[d].push_back(Chain::basis(d, i));
    }
  }
  ComplexPtr shared = sub;
  return Subcomplex{shared, ComplexMorphism(shared, ambient, std::move(image))};
}

}  // namespace complicial

#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "complicial/complex.hpp"
#include "complicial/omega.hpp"
#include "complicial/simplex.hpp"

namespace testing {

using namespace complicial;

// Chain over k given as {label, coeff} pairs.
inline Chain chain(const DirectedComplex& k, std::initializer_list<std::pair<const char*, Coeff>> terms) {
  int dim = -1;
  Chain c;
  for (const auto& [label, coeff] : terms) {
    BasisRef b = k.at(label);
    if (dim < 0) {
      dim = b.dim;
      c = Chain(dim);
    }
    c.add_term(b.index, coeff);
  }
  return c;
}

inline Chain basis_chain(const DirectedComplex& k, const std::string& label) {
  BasisRef b = k.at(label);
  return Chain::basis(b.dim, b.index);
}

struct Cell {
  int dim;
  std::string label;
  std::vector<std::pair<std::string, Coeff>> boundary;
};

// Hand-built complex; every vertex gets augmentation 1 unless listed in `aug`.
inline std::shared_ptr<DirectedComplex> build(const std::vector<Cell>& cells,
                                              const std::vector<std::pair<std::string, Coeff>>& aug = {}) {
  auto k = std::make_shared<DirectedComplex>();
  for (const auto& c : cells) k->add_basis(c.dim, c.label);
  for (const auto& c : cells) {
    if (c.dim == 0) {
      k->set_augmentation(k->at(c.label).index, 1);
      continue;
    }
    Chain bd(c.dim - 1);
    for (const auto& [l, v] : c.boundary) bd.add_term(k->at(l).index, v);
    k->set_boundary(k->at(c.label), std::move(bd));
  }
  for (const auto& [l, v] : aug) k->set_augmentation(k->at(l).index, v);
  return k;
}

inline OmegaPtr nu_delta(int m) { return std::make_shared<const OmegaTable>(closure_from_atoms(delta(m), m)); }

inline NuElement nu(const DirectedComplex& k,
                    std::initializer_list<std::pair<std::vector<std::pair<const char*, Coeff>>,
                                                    std::vector<std::pair<const char*, Coeff>>>>
                        levels) {
  std::vector<NuElement::Level> out;
  int q = 0;
  for (const auto& [minus, plus] : levels) {
    Chain m(q), p(q);
    for (const auto& [l, v] : minus) m.add_term(k.at(l).index, v);
    for (const auto& [l, v] : plus) p.add_term(k.at(l).index, v);
    out.push_back({m, p});
    ++q;
  }
  return NuElement(std::move(out));
}

}  // namespace testing

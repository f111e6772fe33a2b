#include "complicial/simplex.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

namespace complicial {

namespace {

bool has_vertex(const Tuple& t, int v) { return std::binary_search(t.begin(), t.end(), v); }

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

// Visits every increasing (size)-subset of [0, n) in lexicographic order.
void for_each_combination(int n, int size, const std::function<void(const std::vector<int>&)>& fn) {
  if (size > n || size < 0) return;
  std::vector<int> c(size);
  for (int i = 0; i < size; ++i) c[i] = i;
  while (true) {
    fn(c);
    int i = size - 1;
    while (i >= 0 && c[i] == n - size + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
  }
}

using TupleImage = std::vector<std::pair<Tuple, Coeff>>;

// Morphism between simplex-labelled complexes given tuple-wise.
ComplexMorphism tuple_morphism(const ComplexPtr& source, const ComplexPtr& target,
                               const std::function<TupleImage(const Tuple&)>& f) {
  std::vector<std::vector<Chain>> image(source->top_dim() + 1);
  for (int d = 0; d <= source->top_dim(); ++d) {
    for (const auto& e : source->basis(d)) {
      Chain c(d);
      for (const auto& [t, coeff] : f(e.vertices)) c.add_term(target->at(tuple_label(t)).index, coeff);
      image[d].push_back(std::move(c));
    }
  }
  return ComplexMorphism(source, target, std::move(image));
}

}  // namespace

std::string tuple_label(const Tuple& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + "]";
}

std::optional<Tuple> parse_tuple_label(std::string_view label) {
  if (label.size() < 3 || label.front() != '[' || label.back() != ']') return std::nullopt;
  Tuple t;
  std::string_view body = label.substr(1, label.size() - 2);
  while (true) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || ptr == body.data()) return std::nullopt;
    if (!t.empty() && v <= t.back()) return std::nullopt;
    t.push_back(v);
    body.remove_prefix(ptr - body.data());
    if (body.empty()) break;
    if (body.front() != ',') return std::nullopt;
    body.remove_prefix(1);
  }
  if (t.front() < 0) return std::nullopt;
  return t;
}

Tuple top_simplex(int n) {
  Tuple t(n + 1);
  for (int i = 0; i <= n; ++i) t[i] = i;
  return t;
}

Tuple omit_vertex(int n, int i) {
  Tuple t;
  for (int v = 0; v <= n; ++v)
    if (v != i) t.push_back(v);
  return t;
}

ComplexPtr delta(int n) {
  require(n >= 0, "delta: n must be non-negative");
  auto k = std::make_shared<DirectedComplex>();
  for (int q = 0; q <= n; ++q)
    for_each_combination(n + 1, q + 1, [&](const std::vector<int>& c) { k->add_basis(q, tuple_label(c), c); });
  for (int i = 0; i < k->size(0); ++i) k->set_augmentation(i, 1);
  for (int q = 1; q <= n; ++q) {
    for (int i = 0; i < k->size(q); ++i) {
      const Tuple& a = k->element(BasisRef{q, i}).vertices;
      Chain bd(q - 1);
      for (int j = 0; j <= q; ++j) {
        Tuple face = a;
        face.erase(face.begin() + j);
        bd.add_term(k->at(tuple_label(face)).index, j % 2 == 0 ? 1 : -1);
      }
      k->set_boundary(BasisRef{q, i}, std::move(bd));
    }
  }
  return k;
}

ComplexMorphism face_map(int n, int i) {
  require(n > 0 && i >= 0 && i <= n, "face_map: index out of range");
  return tuple_morphism(delta(n - 1), delta(n), [i](const Tuple& a) {
    Tuple b = a;
    for (int& v : b)
      if (v >= i) ++v;
    return TupleImage{{b, 1}};
  });
}

ComplexMorphism degeneracy_map(int n, int i) {
  require(n >= 0 && i >= 0 && i <= n, "degeneracy_map: index out of range");
  return tuple_morphism(delta(n + 1), delta(n), [i](const Tuple& a) {
    if (has_vertex(a, i) && has_vertex(a, i + 1)) return TupleImage{};
    Tuple b = a;
    for (int& v : b)
      if (v > i) --v;
    return TupleImage{{b, 1}};
  });
}

Subcomplex horn_complex(int n, int k) {
  require(n > 0 && k >= 0 && k <= n, "horn_complex: index out of range");
  Tuple t_k = omit_vertex(n, k);
  Tuple s = top_simplex(n);
  return restrict_complex(delta(n), [&](const BasisElement& e) { return e.vertices != t_k && e.vertices != s; });
}

VeeComplex vee_complex(int n, int k) {
  require(n > 0 && k > 0 && k < n, "vee_complex: index out of range");
  auto sub = restrict_complex(delta(n), [k](const BasisElement& e) {
    return !(has_vertex(e.vertices, k - 1) && has_vertex(e.vertices, k + 1));
  });
  auto horn = horn_complex(n, k);
  auto into_horn = tuple_morphism(sub.complex, horn.complex, [](const Tuple& a) { return TupleImage{{a, 1}}; });
  return VeeComplex{sub.complex, std::move(into_horn), std::move(sub.inclusion)};
}

ComplexMorphism pi(int n, int k) {
  require(n > 0 && k > 0 && k < n, "pi: index out of range");
  auto vee = vee_complex(n, k);
  return tuple_morphism(delta(n), vee.complex, [k](const Tuple& a) {
    if (!(has_vertex(a, k - 1) && has_vertex(a, k + 1))) return TupleImage{{a, 1}};
    if (has_vertex(a, k)) return TupleImage{};
    Tuple left = a;
    Tuple right = a;
    // a = [u, k-1, k+1, v]
    *std::find(left.begin(), left.end(), k - 1) = k;
    *std::find(right.begin(), right.end(), k + 1) = k;
    return TupleImage{{left, 1}, {right, 1}};
  });
}

ComplexMorphism pi_horn(int n, int k) { return compose(pi(n, k), horn_complex(n, k).inclusion); }

WComplexBundle w_complex(int n, int k) {
  require(n > 0 && k > 0 && k < n, "w_complex: index out of range");
  ComplexMorphism big_pi = pi(n, k);
  auto w = std::make_shared<DirectedComplex>(big_pi.target());
  const auto simplex = big_pi.source_ptr();

  BasisRef t_k = simplex->at(tuple_label(omit_vertex(n, k)));
  BasisRef s = simplex->at(tuple_label(top_simplex(n)));
  BasisRef t_prime{n - 1, w->add_basis(n - 1, kTPrimeLabel)};
  BasisRef s_prime{n, w->add_basis(n, kSPrimeLabel)};

  // V's basis keeps its indices inside W, so chains of V are chains of W.
  w->set_boundary(t_prime, big_pi.apply(simplex->boundary_of(t_k)));
  Chain ds = Chain::basis(n - 1, t_prime.index);
  ds -= Chain::basis(n - 1, w->at(tuple_label(omit_vertex(n, k - 1))).index);
  ds -= Chain::basis(n - 1, w->at(tuple_label(omit_vertex(n, k + 1))).index);
  w->set_boundary(s_prime, (k % 2 == 0 ? 1 : -1) * ds);

  std::vector<std::vector<Chain>> image(n + 1);
  for (int d = 0; d <= n; ++d) {
    for (int i = 0; i < simplex->size(d); ++i) {
      BasisRef b{d, i};
      if (b == t_k) {
        image[d].push_back(Chain::basis(d, t_prime.index));
      } else if (b == s) {
        image[d].push_back(Chain::basis(d, s_prime.index));
      } else {
        image[d].push_back(big_pi.image_of(b));
      }
    }
  }
  ComplexPtr shared = w;
  return WComplexBundle{shared,       ComplexMorphism(simplex, shared, std::move(image)),
                        t_prime,      s_prime,
                        k % 2 == 0 ? Sign::Plus : Sign::Minus,
                        n,            k};
}

std::vector<Tuple> block_faces(const Tuple& a, int q, Sign sign) {
  const int p = static_cast<int>(a.size()) - 1;
  if (q < 0 || q > p) throw DomainError("block_faces: q out of range");
  std::vector<Tuple> out;
  for_each_combination(p + 1, q + 1, [&](const std::vector<int>& pos) {
    // Positions that may be cut: adjacent chosen positions that are also
    // adjacent in `a`. Every cut-set gives one block decomposition.
    std::vector<int> joints;
    for (int j = 0; j + 1 < static_cast<int>(pos.size()); ++j)
      if (pos[j + 1] == pos[j] + 1) joints.push_back(j);
    const unsigned combos = 1u << joints.size();
    bool found = false;
    for (unsigned mask = 0; mask < combos && !found; ++mask) {
      std::vector<Block> blocks;
      Block cur{pos[0], pos[0]};
      std::size_t jn = 0;
      for (int j = 1; j < static_cast<int>(pos.size()); ++j) {
        bool contiguous = pos[j] == pos[j - 1] + 1;
        bool cut = !contiguous;
        if (contiguous) cut = (mask >> jn++) & 1u;
        if (cut) {
          blocks.push_back(cur);
          cur = Block{pos[j], pos[j]};
        } else {
          cur.end = pos[j];
        }
      }
      blocks.push_back(cur);

      auto even_or_final = [p](const Block& b) { return (b.end - b.start + 1) % 2 == 0 || b.end == p; };
      bool ok = true;
      std::size_t first = 0;
      if (sign == Sign::Minus) {
        const Block& u0 = blocks.front();
        ok = u0.start == 0 && (u0.end - u0.start + 1) % 2 == 1;
        first = 1;
      }
      for (std::size_t b = first; ok && b < blocks.size(); ++b) ok = even_or_final(blocks[b]);
      found = ok;
    }
    if (found) {
      Tuple face;
      for (int x : pos) face.push_back(a[x]);
      out.push_back(std::move(face));
    }
  });
  return out;
}

Chain blocks_formula(const DirectedComplex& simplex, const Tuple& a, int q, Sign sign) {
  Chain c(q);
  for (const auto& t : block_faces(a, q, sign)) c.add_term(simplex.at(tuple_label(t)).index, 1);
  return c;
}

}  // namespace complicial

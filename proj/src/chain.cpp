#include "complicial/chain.hpp"

#include <algorithm>
#include <sstream>

#include "complicial/errors.hpp"

namespace complicial {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("coefficient overflow in subtraction");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

Chain Chain::basis(int dim, int index, Coeff coeff) {
  Chain c(dim);
  c.add_term(index, coeff);
  return c;
}

Coeff Chain::coeff(int index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, int i) { return t.index < i; });
  return (it != terms_.end() && it->index == index) ? it->coeff : 0;
}

bool Chain::is_sum_of_basis() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
}

Coeff Chain::max_coeff() const {
  Coeff m = 0;
  for (const auto& t : terms_) m = std::max(m, t.coeff);
  return m;
}

void Chain::add_term(int index, Coeff coeff) {
  if (coeff == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, int i) { return t.index < i; });
  if (it != terms_.end() && it->index == index) {
    it->coeff = checked_add(it->coeff, coeff);
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{index, coeff});
  }
}

void Chain::require_same_dim(const Chain& other) const {
  if (dim_ != other.dim_) {
    std::ostringstream oss;
    oss << "chain dimension mismatch: " << dim_ << " vs " << other.dim_;
    throw DomainError(oss.str());
  }
}

Chain& Chain::operator+=(const Chain& other) {
  require_same_dim(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->index < b->index)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->index < a->index) {
      out.push_back(*b++);
    } else {
      Coeff c = checked_add(a->coeff, b->coeff);
      if (c != 0) out.push_back(Term{a->index, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) { return *this += -other; }

Chain operator*(Coeff k, const Chain& c) {
  Chain r(c.dim());
  if (k == 0) return r;
  r.terms_.reserve(c.terms_.size());
  for (const auto& t : c.terms_) r.terms_.push_back(Term{t.index, checked_mul(k, t.coeff)});
  return r;
}

Chain Chain::operator-() const { return Coeff{-1} * *this; }

Chain Chain::positive_part() const {
  Chain r(dim_);
  for (const auto& t : terms_)
    if (t.coeff > 0) r.terms_.push_back(t);
  return r;
}

Chain Chain::negative_part() const {
  Chain r(dim_);
  for (const auto& t : terms_)
    if (t.coeff < 0) r.terms_.push_back(Term{t.index, checked_mul(-1, t.coeff)});
  return r;
}

std::strong_ordering operator<=>(const Chain& a, const Chain& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                                b.terms_.end());
}

std::size_t Chain::hash() const {
  std::size_t h = std::hash<int>{}(dim_) * 0x9e3779b97f4a7c15ULL;
  for (const auto& t : terms_) {
    h ^= std::hash<int>{}(t.index) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<Coeff>{}(t.coeff) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace complicial

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace complicial {

using Coeff = std::int64_t;

enum class Sign { Minus, Plus };

inline Sign opposite(Sign s) { return s == Sign::Minus ? Sign::Plus : Sign::Minus; }
inline char sign_char(Sign s) { return s == Sign::Minus ? '-' : '+'; }

// Overflow-checked arithmetic; throws OverflowError instead of wrapping.
Coeff checked_add(Coeff a, Coeff b);
Coeff checked_sub(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

struct Term {
  int index = 0;
  Coeff coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

/// A finite integer combination of basis elements of a single dimension.
///
/// Terms are kept sorted by basis index with no zero coefficients, so two
/// chains are equal exactly when they denote the same combination. Indices
/// are positions in the owning complex's basis list for `dim()`.
class Chain {
 public:
  Chain() = default;
  explicit Chain(int dim) : dim_(dim) {}

  static Chain basis(int dim, int index, Coeff coeff = 1);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(int index) const;
  bool contains(int index) const { return coeff(index) != 0; }
  // True when every coefficient is non-negative ("a sum of basis elements").
  bool is_sum_of_basis() const;
  Coeff max_coeff() const;

  void add_term(int index, Coeff coeff);

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(Coeff k, const Chain& c);
  Chain operator-() const;

  // Parts with positive and negative coefficients; both returned non-negative.
  Chain positive_part() const;
  Chain negative_part() const;

  friend bool operator==(const Chain&, const Chain&) = default;
  friend std::strong_ordering operator<=>(const Chain& a, const Chain& b);

  std::size_t hash() const;

 private:
  void require_same_dim(const Chain& other) const;

  int dim_ = 0;
  std::vector<Term> terms_;
};

}  // namespace complicial

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "complicial/stratified.hpp"

namespace complicial {

class Nerve;

/// Wedges x ^_i y on a complicial set, built bottom-up as unique thin
/// fillers of (i+1)-complicial horns and memoized by (dim, x, y, i).
class WedgeContext {
 public:
  explicit WedgeContext(const StratifiedSet& x);

  const StratifiedSet& set() const { return x_; }

  // x, y of dimension m with d_i x = d_{i+1} y; result has dimension m + 1.
  // Throws CompositionError, TruncationError (m + 1 > max_dim) or
  // ComplicialStructureError (no unique thin filler).
  int wedge(int m, int x, int y, int i);
  // std::nullopt when d_i x != d_{i+1} y; still throws TruncationError.
  std::optional<int> try_wedge(int m, int x, int y, int i);
  bool defined(int m, int x, int y, int i) const;

  // The horn whose thin filler is x ^_i y; lower faces are wedged recursively.
  HornRecord wedge_horn(int m, int x, int y, int i);

  // Membership in im ^_i as recorded so far.
  bool in_image(int i, int dim, int element) const;

 private:
  const StratifiedSet& x_;
  ComplicialClassifier classifier_;
  std::map<std::tuple<int, int, int, int>, int> memo_;
  std::set<std::tuple<int, int, int>> image_;  // (i, dim, element)
};

// Same horn, filled by the closed-form y(nu Pi) of the nerve instead of search.
int wedge_via_retraction(const Nerve& nerve, int m, int x, int y, int i);

struct AxiomReport {
  int axiom = 0;
  std::size_t instances_checked = 0;
  std::size_t skipped_at_boundary = 0;
  std::vector<std::vector<int>> violations;  // witness tuples
};

struct IdentitiesReport {
  std::array<AxiomReport, 7> axioms;

  std::size_t violation_count() const;
  bool ok() const { return violation_count() == 0; }
};

// Instantiates the seven complicial identities over every tuple whose
// wedges stay within the truncation; the rest are counted as skipped.
IdentitiesReport check_identities(WedgeContext& ctx);

}  // namespace complicial

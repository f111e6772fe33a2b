#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "complicial/complex.hpp"

namespace complicial {

class Nerve;

/// A finite simplicial set truncated at max_dim, with thin flags.
///
/// faces[n][x][i] for 1 <= n <= max_dim, degeneracies[n][x][i] for n < max_dim.
/// thin[0] is all false.
struct StratifiedSet {
  int max_dim = 0;
  std::vector<int> sizes;
  std::vector<std::vector<std::vector<int>>> faces;
  std::vector<std::vector<std::vector<int>>> degeneracies;
  std::vector<std::vector<bool>> thin;

  int size(int n) const { return sizes.at(n); }
  int face(int n, int x, int i) const { return faces.at(n).at(x).at(i); }
  int degeneracy(int n, int x, int i) const { return degeneracies.at(n).at(x).at(i); }
  bool is_thin(int n, int x) const { return thin.at(n).at(x); }
  // In the image of some degeneracy from dimension n - 1.
  bool is_degenerate(int n, int x) const;

  friend bool operator==(const StratifiedSet&, const StratifiedSet&) = default;
};

// Table shapes, simplicial identities, and thinness of degenerate elements.
ValidationReport validate_stratified(const StratifiedSet& x);

// The dimensions <= max_dim of s.
StratifiedSet truncate(const StratifiedSet& s, int max_dim);

// Indices are those of the nerve; thin flags from Nerve::is_thin.
StratifiedSet from_nerve(const Nerve& nerve, int max_dim);

struct HornRecord {
  int n = 0;
  int k = 0;
  std::vector<int> faces;  // into dimension n - 1, -1 at position k

  friend bool operator==(const HornRecord&, const HornRecord&) = default;
  friend auto operator<=>(const HornRecord&, const HornRecord&) = default;
};

bool horn_compatible(const StratifiedSet& x, const HornRecord& h);
HornRecord horn_of(const StratifiedSet& x, int n, int element, int k);
// Every compatible (n-1)-dimensional k-horn, in lexicographic order of faces.
std::vector<HornRecord> enumerate_horns(const StratifiedSet& x, int n, int k);
// Thin elements of dimension n filling h.
std::vector<int> thin_fillers(const StratifiedSet& x, const HornRecord& h);

/// Memoized recursive classification of complicial horns and elements.
class ComplicialClassifier {
 public:
  explicit ComplicialClassifier(const StratifiedSet& x) : x_(x) {}

  bool element(int n, int x, int k);
  bool horn(const HornRecord& h);

 private:
  const StratifiedSet& x_;
  std::map<std::tuple<int, int, int>, bool> elements_;
  std::map<HornRecord, bool> horns_;
};

bool is_complicial_horn(const StratifiedSet& x, const HornRecord& h);
bool is_complicial_element(const StratifiedSet& x, int n, int element, int k);

struct AxiomViolation {
  int clause = 0;
  int n = 0;
  int k = 0;
  std::vector<int> witness;
  std::string detail;
};

struct ComplicialReport {
  std::vector<AxiomViolation> violations;
  std::size_t horns_checked = 0;
  std::size_t elements_checked = 0;
  // Complicial horns of dimension max_dim; their fillers would lie above the truncation.
  std::size_t indeterminate = 0;

  bool ok() const { return violations.empty(); }
};

ComplicialReport check_complicial_axioms(const StratifiedSet& x);

}  // namespace complicial

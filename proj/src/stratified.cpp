#include "complicial/stratified.hpp"

#include <functional>
#include <sstream>

#include "complicial/errors.hpp"
#include "complicial/nerve.hpp"

namespace complicial {

namespace {

std::string where(int n, int x) {
  std::ostringstream oss;
  oss << "element " << x << " of dimension " << n;
  return oss.str();
}

}  // namespace

bool StratifiedSet::is_degenerate(int n, int x) const {
  if (n == 0) return false;
  for (int y = 0; y < size(n - 1); ++y)
    for (int g : degeneracies.at(n - 1).at(y))
      if (g == x) return true;
  return false;
}

ValidationReport validate_stratified(const StratifiedSet& s) {
  ValidationReport r;
  const int top = s.max_dim;
  auto bad = [&r](const std::string& kind, const std::string& detail) { r.violations.push_back({kind, detail}); };

  if (top < 0 || static_cast<int>(s.sizes.size()) != top + 1 || static_cast<int>(s.faces.size()) != top + 1 ||
      static_cast<int>(s.degeneracies.size()) != top + 1 || static_cast<int>(s.thin.size()) != top + 1) {
    bad("shape", "per-dimension tables must have max_dim + 1 entries");
    return r;
  }
  for (int n = 0; n <= top; ++n) {
    const int fn = n == 0 ? 0 : s.sizes[n];
    const int dn = n < top ? s.sizes[n] : 0;
    if (s.sizes[n] < 0 || static_cast<int>(s.faces[n].size()) != fn ||
        static_cast<int>(s.degeneracies[n].size()) != dn || static_cast<int>(s.thin[n].size()) != s.sizes[n]) {
      bad("shape", "tables of dimension " + std::to_string(n) + " do not match its size");
      return r;
    }
    for (int x = 0; x < fn; ++x) {
      if (static_cast<int>(s.faces[n][x].size()) != n + 1) bad("shape", where(n, x) + " needs n + 1 faces");
      for (int f : s.faces[n][x])
        if (f < 0 || f >= s.sizes[n - 1]) bad("shape", where(n, x) + " has a face out of range");
    }
    for (int x = 0; x < dn; ++x) {
      if (static_cast<int>(s.degeneracies[n][x].size()) != n + 1) bad("shape", where(n, x) + " needs n + 1 degeneracies");
      for (int g : s.degeneracies[n][x])
        if (g < 0 || g >= s.sizes[n + 1]) bad("shape", where(n, x) + " has a degeneracy out of range");
    }
  }
  if (!r.ok()) return r;
  if (top >= 0)
    for (int x = 0; x < s.sizes[0]; ++x)
      if (s.thin[0][x]) bad("thin", where(0, x) + " is flagged thin");

  auto ident = [&](const std::string& law, int n, int x) {
    bad("simplicial-identity", law + " fails on " + where(n, x));
  };
  for (int n = 2; n <= top; ++n)
    for (int x = 0; x < s.sizes[n]; ++x)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (s.face(n - 1, s.face(n, x, j), i) != s.face(n - 1, s.face(n, x, i), j - 1))
            ident("d_" + std::to_string(i) + " d_" + std::to_string(j), n, x);
  for (int n = 0; n < top; ++n) {
    for (int x = 0; x < s.sizes[n]; ++x) {
      for (int j = 0; j <= n; ++j) {
        const int e = s.degeneracy(n, x, j);
        for (int i = 0; i <= n + 1; ++i) {
          const int lhs = s.face(n + 1, e, i);
          int rhs;
          if (i == j || i == j + 1) {
            rhs = x;
          } else if (i < j) {
            rhs = s.degeneracy(n - 1, s.face(n, x, i), j - 1);
          } else {
            rhs = s.degeneracy(n - 1, s.face(n, x, i - 1), j);
          }
          if (lhs != rhs) ident("d_" + std::to_string(i) + " e_" + std::to_string(j), n, x);
        }
        if (n + 1 < top)
          for (int i = 0; i <= j; ++i)
            if (s.degeneracy(n + 1, e, i) != s.degeneracy(n + 1, s.degeneracy(n, x, i), j + 1))
              ident("e_" + std::to_string(i) + " e_" + std::to_string(j), n, x);
        if (!s.thin[n + 1][e]) bad("thin", "degenerate " + where(n + 1, e) + " is not flagged thin");
      }
    }
  }
  return r;
}

StratifiedSet truncate(const StratifiedSet& s, int max_dim) {
  if (max_dim < 0 || max_dim > s.max_dim) throw DomainError("truncate: dimension out of range");
  StratifiedSet t;
  t.max_dim = max_dim;
  t.sizes.assign(s.sizes.begin(), s.sizes.begin() + max_dim + 1);
  t.faces.assign(s.faces.begin(), s.faces.begin() + max_dim + 1);
  t.degeneracies.assign(s.degeneracies.begin(), s.degeneracies.begin() + max_dim + 1);
  t.degeneracies[max_dim].clear();
  t.thin.assign(s.thin.begin(), s.thin.begin() + max_dim + 1);
  return t;
}

StratifiedSet from_nerve(const Nerve& nerve, int max_dim) {
  if (max_dim < 0 || max_dim > nerve.max_dim()) throw DomainError("from_nerve: dimension beyond the nerve truncation");
  StratifiedSet s;
  s.max_dim = max_dim;
  s.faces.resize(max_dim + 1);
  s.degeneracies.resize(max_dim + 1);
  for (int n = 0; n <= max_dim; ++n) {
    const int size = static_cast<int>(nerve.count(n));
    s.sizes.push_back(size);
    std::vector<bool> thin(size, false);
    for (int x = 0; x < size; ++x) {
      if (n > 0) {
        thin[x] = nerve.is_thin(n, x);
        std::vector<int> f;
        for (int i = 0; i <= n; ++i) f.push_back(nerve.face(n, x, i));
        s.faces[n].push_back(std::move(f));
      }
      if (n < max_dim) {
        std::vector<int> g;
        for (int i = 0; i <= n; ++i) g.push_back(nerve.degeneracy(n, x, i));
        s.degeneracies[n].push_back(std::move(g));
      }
    }
    s.thin.push_back(std::move(thin));
  }
  return s;
}

bool horn_compatible(const StratifiedSet& s, const HornRecord& h) {
  if (h.n < 1 || h.n - 1 > s.max_dim || h.k < 0 || h.k > h.n || static_cast<int>(h.faces.size()) != h.n + 1) return false;
  for (int i = 0; i <= h.n; ++i)
    if (i != h.k && (h.faces[i] < 0 || h.faces[i] >= s.size(h.n - 1))) return false;
  if (h.n < 2) return true;
  for (int j = 0; j <= h.n; ++j)
    for (int i = 0; i < j; ++i)
      if (i != h.k && j != h.k && s.face(h.n - 1, h.faces[j], i) != s.face(h.n - 1, h.faces[i], j - 1)) return false;
  return true;
}

HornRecord horn_of(const StratifiedSet& s, int n, int element, int k) {
  HornRecord h{n, k, std::vector<int>(n + 1, -1)};
  for (int i = 0; i <= n; ++i)
    if (i != k) h.faces[i] = s.face(n, element, i);
  return h;
}

std::vector<HornRecord> enumerate_horns(const StratifiedSet& s, int n, int k) {
  if (n < 1 || n - 1 > s.max_dim || k < 0 || k > n) throw DomainError("enumerate_horns: indices out of range");
  std::vector<HornRecord> out;
  HornRecord h{n, k, std::vector<int>(n + 1, -1)};
  const int pool = s.size(n - 1);
  std::function<void(int)> place = [&](int j) {
    if (j > n) {
      out.push_back(h);
      return;
    }
    if (j == k) {
      place(j + 1);
      return;
    }
    for (int z = 0; z < pool; ++z) {
      bool ok = true;
      if (n >= 2)
        for (int i = 0; i < j && ok; ++i)
          if (i != k) ok = s.face(n - 1, z, i) == s.face(n - 1, h.faces[i], j - 1);
      if (!ok) continue;
      h.faces[j] = z;
      place(j + 1);
    }
    h.faces[j] = -1;
  };
  place(0);
  return out;
}

std::vector<int> thin_fillers(const StratifiedSet& s, const HornRecord& h) {
  std::vector<int> out;
  if (h.n > s.max_dim) return out;
  for (int x = 0; x < s.size(h.n); ++x) {
    if (!s.is_thin(h.n, x)) continue;
    bool fills = true;
    for (int i = 0; i <= h.n && fills; ++i)
      if (i != h.k) fills = s.face(h.n, x, i) == h.faces[i];
    if (fills) out.push_back(x);
  }
  return out;
}

bool ComplicialClassifier::element(int n, int x, int k) {
  if (k <= 0 || k >= n) throw DomainError("complicial elements need 0 < k < n");
  auto key = std::make_tuple(n, x, k);
  if (auto it = elements_.find(key); it != elements_.end()) return it->second;
  const bool v = x_.is_thin(n, x) && horn(horn_of(x_, n, x, k));
  elements_.emplace(key, v);
  return v;
}

bool ComplicialClassifier::horn(const HornRecord& h) {
  if (h.k <= 0 || h.k >= h.n) throw DomainError("complicial horns need 0 < k < n");
  if (auto it = horns_.find(h); it != horns_.end()) return it->second;
  bool v = true;
  for (int i = 0; i < h.k - 1 && v; ++i) v = element(h.n - 1, h.faces[i], h.k - 1);
  for (int i = h.k + 2; i <= h.n && v; ++i) v = element(h.n - 1, h.faces[i], h.k);
  horns_.emplace(h, v);
  return v;
}

bool is_complicial_horn(const StratifiedSet& s, const HornRecord& h) { return ComplicialClassifier(s).horn(h); }

bool is_complicial_element(const StratifiedSet& s, int n, int element, int k) {
  return ComplicialClassifier(s).element(n, element, k);
}

ComplicialReport check_complicial_axioms(const StratifiedSet& s) {
  ComplicialReport rep;
  ComplicialClassifier cls(s);
  const int top = s.max_dim;

  if (top >= 1)
    for (int x = 0; x < s.size(1); ++x)
      if (s.is_thin(1, x) && !s.is_degenerate(1, x))
        rep.violations.push_back({1, 1, 0, {x}, "thin 1-dimensional element is not degenerate"});

  for (int n = 2; n <= top + 1; ++n) {
    for (int k = 1; k < n; ++k) {
      for (const auto& h : enumerate_horns(s, n, k)) {
        if (!cls.horn(h)) continue;
        if (n > top) {
          ++rep.indeterminate;
          continue;
        }
        ++rep.horns_checked;
        auto fill = thin_fillers(s, h);
        if (fill.size() != 1) {
          std::vector<int> w = h.faces;
          w.insert(w.end(), fill.begin(), fill.end());
          rep.violations.push_back(
              {2, n, k, std::move(w), fill.empty() ? "complicial horn has no thin filler" : "complicial horn has several thin fillers"});
        }
      }
    }
  }

  for (int n = 2; n <= top; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int x = 0; x < s.size(n); ++x) {
        if (!cls.element(n, x, k)) continue;
        ++rep.elements_checked;
        if (s.is_thin(n - 1, s.face(n, x, k - 1)) && s.is_thin(n - 1, s.face(n, x, k + 1)) &&
            !s.is_thin(n - 1, s.face(n, x, k)))
          rep.violations.push_back({3, n, k, {x}, "complicial element with thin outer faces has a non-thin face k"});
      }
    }
  }
  return rep;
}

}  // namespace complicial

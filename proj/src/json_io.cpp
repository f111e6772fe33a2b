#include "complicial/json_io.hpp"

#include "complicial/errors.hpp"
#include "complicial/simplex.hpp"

namespace complicial {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

long long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

int small_int(const Json& j, const std::string& path) {
  long long v = integer(j, path);
  if (v < -1 || v > (1LL << 30)) fail(path, "integer out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(small_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::string sub(const std::string& path, const std::string& key) { return path + "." + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json chain_to_json(const DirectedComplex& k, const Chain& c) {
  Json j = Json::object();
  for (const auto& t : c.terms()) j[k.label(BasisRef{c.dim(), t.index})] = t.coeff;
  return j;
}

Chain chain_from_json(const DirectedComplex& k, int dim, const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a chain object {label: coeff}");
  Chain c(dim);
  for (const auto& [label, coeff] : j.items()) {
    auto ref = k.find(label);
    if (!ref) fail(sub(path, label), "unknown basis label");
    if (ref->dim != dim) fail(sub(path, label), "basis element has dimension " + std::to_string(ref->dim));
    c.add_term(ref->index, integer(coeff, sub(path, label)));
  }
  return c;
}

Json complex_to_json(const DirectedComplex& k) {
  Json dims = Json::array();
  Json boundary = Json::object();
  Json aug = Json::object();
  for (int d = 0; d <= k.top_dim(); ++d) {
    Json labels = Json::array();
    for (int i = 0; i < k.size(d); ++i) {
      BasisRef b{d, i};
      labels.push_back(k.label(b));
      if (d > 0) boundary[k.label(b)] = chain_to_json(k, k.boundary_of(b));
      if (d == 0 && k.augmentation_of(i) != 0) aug[k.label(b)] = k.augmentation_of(i);
    }
    dims.push_back(std::move(labels));
  }
  return Json{{"dims", dims}, {"boundary", boundary}, {"augmentation", aug}};
}

ComplexPtr complex_from_json(const Json& j) {
  auto k = std::make_shared<DirectedComplex>();
  const Json& dims = field(j, "dims", "$");
  if (!dims.is_array()) fail("$.dims", "expected an array of label lists");
  for (std::size_t d = 0; d < dims.size(); ++d) {
    const std::string p = sub("$.dims", d);
    if (!dims[d].is_array()) fail(p, "expected an array of labels");
    for (std::size_t i = 0; i < dims[d].size(); ++i) {
      if (!dims[d][i].is_string()) fail(sub(p, i), "expected a label string");
      std::string label = dims[d][i].get<std::string>();
      if (k->find(label)) fail(sub(p, i), "duplicate label " + label);
      k->add_basis(static_cast<int>(d), label, parse_tuple_label(label).value_or(Tuple{}));
    }
  }
  const Json& bd = field(j, "boundary", "$");
  if (!bd.is_object()) fail("$.boundary", "expected an object");
  for (const auto& [label, chain] : bd.items()) {
    auto ref = k->find(label);
    if (!ref) fail(sub("$.boundary", label), "unknown basis label");
    if (ref->dim == 0) fail(sub("$.boundary", label), "0-dimensional elements have no boundary");
    k->set_boundary(*ref, chain_from_json(*k, ref->dim - 1, chain, sub("$.boundary", label)));
  }
  if (auto it = j.find("augmentation"); it != j.end()) {
    if (!it->is_object()) fail("$.augmentation", "expected an object");
    for (const auto& [label, value] : it->items()) {
      auto ref = k->find(label);
      if (!ref || ref->dim != 0) fail(sub("$.augmentation", label), "not a 0-dimensional basis label");
      k->set_augmentation(ref->index, integer(value, sub("$.augmentation", label)));
    }
  }
  return k;
}

Json morphism_to_json(const ComplexMorphism& f) {
  Json image = Json::object();
  const auto& s = f.source();
  for (int d = 0; d <= s.top_dim(); ++d)
    for (int i = 0; i < s.size(d); ++i) image[s.label(BasisRef{d, i})] = chain_to_json(f.target(), f.image_of(BasisRef{d, i}));
  return Json{{"source", complex_to_json(f.source())}, {"target", complex_to_json(f.target())}, {"image", image}};
}

ComplexMorphism morphism_from_json(const Json& j) {
  ComplexPtr source, target;
  try {
    source = complex_from_json(field(j, "source", "$"));
  } catch (const ParseError& e) {
    throw ParseError(std::string("in $.source: ") + e.what());
  }
  try {
    target = complex_from_json(field(j, "target", "$"));
  } catch (const ParseError& e) {
    throw ParseError(std::string("in $.target: ") + e.what());
  }
  const Json& img = field(j, "image", "$");
  if (!img.is_object()) fail("$.image", "expected an object");
  std::vector<std::vector<Chain>> image(source->top_dim() + 1);
  for (int d = 0; d <= source->top_dim(); ++d) {
    for (int i = 0; i < source->size(d); ++i) {
      const std::string& label = source->label(BasisRef{d, i});
      auto it = img.find(label);
      if (it == img.end()) fail("$.image", "missing image of " + label);
      image[d].push_back(chain_from_json(*target, d, *it, sub("$.image", label)));
    }
  }
  for (const auto& [label, chain] : img.items())
    if (!source->find(label)) fail(sub("$.image", label), "not a source basis label");
  return ComplexMorphism(source, target, std::move(image));
}

Json nu_to_json(const DirectedComplex& k, const NuElement& x) {
  Json j = Json::array();
  for (const auto& level : x.levels()) j.push_back(Json::array({chain_to_json(k, level.minus), chain_to_json(k, level.plus)}));
  return j;
}

NuElement nu_from_json(const DirectedComplex& k, const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of [minus, plus] pairs");
  std::vector<NuElement::Level> levels;
  for (std::size_t q = 0; q < j.size(); ++q) {
    const std::string p = sub(path, q);
    if (!j[q].is_array() || j[q].size() != 2) fail(p, "expected a [minus, plus] pair");
    levels.push_back({chain_from_json(k, static_cast<int>(q), j[q][0], sub(p, 0)),
                      chain_from_json(k, static_cast<int>(q), j[q][1], sub(p, 1))});
  }
  return NuElement(std::move(levels));
}

Json omega_to_json(const OmegaTable& t) {
  Json elements = Json::array();
  Json dims = Json::array();
  for (int e = 0; e < static_cast<int>(t.size()); ++e) {
    elements.push_back(nu_to_json(t.complex(), t.element(e)));
    dims.push_back(t.dim(e));
  }
  Json dm = Json::array();
  Json dp = Json::array();
  for (int m = 0; m < t.top_dim(); ++m) {
    Json a = Json::array();
    Json b = Json::array();
    for (int e = 0; e < static_cast<int>(t.size()); ++e) {
      a.push_back(t.d(Sign::Minus, m, e));
      b.push_back(t.d(Sign::Plus, m, e));
    }
    dm.push_back(std::move(a));
    dp.push_back(std::move(b));
  }
  Json comps = Json::array();
  for (const auto& c : t.compositions()) comps.push_back(Json::array({c.level, c.left, c.right, c.result}));
  return Json{{"complex", complex_to_json(t.complex())},
              {"elements", elements},
              {"dims", dims},
              {"d_minus", dm},
              {"d_plus", dp},
              {"compositions", comps}};
}

OmegaTable omega_from_json(const Json& j) {
  ComplexPtr k;
  try {
    k = complex_from_json(field(j, "complex", "$"));
  } catch (const ParseError& e) {
    throw ParseError(std::string("in $.complex: ") + e.what());
  }
  const Json& el = field(j, "elements", "$");
  if (!el.is_array()) fail("$.elements", "expected an array");
  std::vector<NuElement> elements;
  for (std::size_t i = 0; i < el.size(); ++i) {
    elements.push_back(nu_from_json(*k, el[i], sub("$.elements", i)));
    std::string why = nu_violation(*k, elements.back());
    if (!why.empty()) fail(sub("$.elements", i), "not a member of nu K: " + why);
  }
  try {
    return OmegaTable::from_elements(k, std::move(elements));
  } catch (const CompositionError& e) {
    fail("$.elements", e.what());
  }
}

Json nerve_to_json(const Nerve& n) {
  Json elements = Json::array();
  Json thin = Json::array();
  Json counts = Json::array();
  for (int d = 0; d <= n.max_dim(); ++d) {
    const OmegaTable& s = *n.source(d);
    Json level = Json::array();
    Json flags = Json::array();
    for (int x = 0; x < static_cast<int>(n.count(d)); ++x) {
      Json atoms = Json::object();
      for (int q = 0; q <= d; ++q)
        for (int i = 0; i < s.complex().size(q); ++i)
          atoms[s.complex().label(BasisRef{q, i})] = n.atom_image(d, x, BasisRef{q, i});
      level.push_back(std::move(atoms));
      flags.push_back(d > 0 && n.is_thin(d, x));
    }
    counts.push_back(n.count(d));
    elements.push_back(std::move(level));
    thin.push_back(std::move(flags));
  }
  return Json{{"max_dim", n.max_dim()}, {"counts", counts}, {"elements", elements}, {"thin", thin}};
}

Json stratified_to_json(const StratifiedSet& s) {
  Json thin = Json::array();
  for (const auto& t : s.thin) {
    Json row = Json::array();
    for (bool b : t) row.push_back(b);
    thin.push_back(std::move(row));
  }
  return Json{{"dims", s.sizes}, {"faces", s.faces}, {"degeneracies", s.degeneracies}, {"thin", thin}};
}

StratifiedSet stratified_from_json(const Json& j) {
  StratifiedSet s;
  s.sizes = int_list(field(j, "dims", "$"), "$.dims");
  if (s.sizes.empty()) fail("$.dims", "at least one dimension is required");
  s.max_dim = static_cast<int>(s.sizes.size()) - 1;
  auto nested = [&](const char* key) {
    const Json& t = field(j, key, "$");
    const std::string p = std::string("$.") + key;
    if (!t.is_array() || static_cast<int>(t.size()) != s.max_dim + 1) fail(p, "expected one entry per dimension");
    std::vector<std::vector<std::vector<int>>> out;
    for (std::size_t n = 0; n < t.size(); ++n) {
      if (!t[n].is_array()) fail(sub(p, n), "expected an array");
      std::vector<std::vector<int>> rows;
      for (std::size_t x = 0; x < t[n].size(); ++x) rows.push_back(int_list(t[n][x], sub(sub(p, n), x)));
      out.push_back(std::move(rows));
    }
    return out;
  };
  s.faces = nested("faces");
  s.degeneracies = nested("degeneracies");
  const Json& th = field(j, "thin", "$");
  if (!th.is_array() || static_cast<int>(th.size()) != s.max_dim + 1) fail("$.thin", "expected one entry per dimension");
  for (std::size_t n = 0; n < th.size(); ++n) {
    if (!th[n].is_array()) fail(sub("$.thin", n), "expected an array of booleans");
    std::vector<bool> row;
    for (std::size_t x = 0; x < th[n].size(); ++x) {
      if (!th[n][x].is_boolean()) fail(sub(sub("$.thin", n), x), "expected a boolean");
      row.push_back(th[n][x].get<bool>());
    }
    s.thin.push_back(std::move(row));
  }
  return s;
}

Json report_to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"kind", x.kind}, {"detail", x.detail}});
  return Json{{"ok", r.ok()}, {"violations", v}};
}

Json loop_freeness_to_json(const DirectedComplex& k, const LoopFreeness& l) {
  Json cycle = Json::array();
  for (const auto& b : l.cycle) cycle.push_back(k.label(b));
  Json rel = Json::array();
  for (const auto& [a, b] : l.relation) rel.push_back(Json::array({k.label(a), k.label(b)}));
  return Json{{"loop_free", l.loop_free}, {"relation", rel}, {"cycle", cycle}};
}

Json report_to_json(const ComplicialReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back(Json{{"clause", x.clause}, {"n", x.n}, {"k", x.k}, {"witness", x.witness}, {"detail", x.detail}});
  return Json{{"ok", r.ok()},
              {"horns_checked", r.horns_checked},
              {"elements_checked", r.elements_checked},
              {"indeterminate", r.indeterminate},
              {"violations", v}};
}

Json report_to_json(const IdentitiesReport& r) {
  Json axioms = Json::array();
  for (const auto& a : r.axioms)
    axioms.push_back(Json{{"axiom", a.axiom},
                          {"instances_checked", a.instances_checked},
                          {"skipped_at_boundary", a.skipped_at_boundary},
                          {"violations", a.violations}});
  return Json{{"ok", r.ok()}, {"axioms", axioms}};
}

}  // namespace complicial

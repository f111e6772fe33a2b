#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "complicial/complex.hpp"
#include "complicial/errors.hpp"
#include "complicial/json_io.hpp"
#include "complicial/nerve.hpp"
#include "complicial/omega.hpp"
#include "complicial/simplex.hpp"
#include "complicial/stratified.hpp"
#include "complicial/wedge.hpp"

using namespace complicial;

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

struct Config {
  std::string format = "json";
  std::string output = "-";
  std::string input = "-";
  std::size_t budget = kDefaultBudget;
  int n = 0;
  int k = -1;
  int max_dim = 2;
  int dim_bound = -1;
  long long coeff_bound = kDefaultCoeffBound;
  int target = 0;
  int dim = 1;
  int x = 0;
  int y = 0;
  int i = 0;
  bool morphism = false;
  bool table = false;
  bool stratified = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void emit(const Config& cfg, const Json& j, const std::string& text) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (cfg.output != "-") {
    file.open(cfg.output);
    if (!file) throw UsageError("cannot write " + cfg.output);
    out = &file;
  }
  if (cfg.format == "json") {
    *out << j.dump(2) << "\n";
  } else {
    *out << text;
  }
}

void need_k(const Config& cfg, const char* what) {
  if (cfg.k < 0) throw UsageError(std::string(what) + " needs --k");
}

int cmd_complex(const Config& cfg, const std::string& kind) {
  std::ostringstream txt;
  if (kind == "delta") {
    auto k = delta(cfg.n);
    if (cfg.morphism) {
      emit(cfg, morphism_to_json(identity_morphism(k)), "identity of Delta_" + std::to_string(cfg.n) + "\n");
    } else {
      txt << "Delta_" << cfg.n << ": " << k->total_size() << " basis elements\n";
      emit(cfg, complex_to_json(*k), txt.str());
    }
    return kOk;
  }
  need_k(cfg, kind.c_str());
  if (kind == "horn") {
    auto h = horn_complex(cfg.n, cfg.k);
    txt << "Lambda_" << cfg.n << "^" << cfg.k << ": " << h.complex->total_size() << " basis elements\n";
    emit(cfg, cfg.morphism ? morphism_to_json(h.inclusion) : complex_to_json(*h.complex), txt.str());
  } else if (kind == "vee") {
    auto v = vee_complex(cfg.n, cfg.k);
    txt << "V_" << cfg.n << "^" << cfg.k << ": " << v.complex->total_size() << " basis elements\n";
    emit(cfg, cfg.morphism ? morphism_to_json(pi(cfg.n, cfg.k)) : complex_to_json(*v.complex), txt.str());
  } else {
    auto w = w_complex(cfg.n, cfg.k);
    txt << "W for n=" << cfg.n << ", k=" << cfg.k << ": " << w.complex->total_size() << " basis elements\n";
    txt << "d s' =";
    for (const auto& t : w.complex->boundary_of(w.s_prime).terms())
      txt << " " << (t.coeff > 0 ? "+" : "") << t.coeff << " " << w.complex->label(BasisRef{cfg.n - 1, t.index});
    txt << "\n";
    emit(cfg, cfg.morphism ? morphism_to_json(w.pi) : complex_to_json(*w.complex), txt.str());
  }
  return kOk;
}

int cmd_check(const Config& cfg, const std::string& kind) {
  Json in = parse_json(read_input(cfg.input));
  if (kind == "morphism") {
    auto f = morphism_from_json(in);
    auto r = validate_morphism(f);
    std::ostringstream txt;
    txt << (r.ok() ? "valid morphism\n" : "invalid morphism\n");
    for (const auto& v : r.violations) txt << "  " << v.kind << ": " << v.detail << "\n";
    emit(cfg, report_to_json(r), txt.str());
    return r.ok() ? kOk : kViolations;
  }
  auto k = complex_from_json(in);
  if (kind == "complex") {
    auto r = validate_complex(*k);
    std::ostringstream txt;
    txt << (r.ok() ? "valid complex\n" : "invalid complex\n");
    for (const auto& v : r.violations) txt << "  " << v.kind << ": " << v.detail << "\n";
    emit(cfg, report_to_json(r), txt.str());
    return r.ok() ? kOk : kViolations;
  }
  auto structure = validate_complex(*k);
  if (!structure.ok()) {
    emit(cfg, report_to_json(structure), "input is not a valid complex\n");
    return kViolations;
  }
  if (kind == "unital") {
    bool u = is_unital(*k);
    emit(cfg, Json{{"unital", u}}, u ? "unital\n" : "not unital\n");
    return u ? kOk : kViolations;
  }
  auto l = loop_freeness(*k);
  std::ostringstream txt;
  txt << (l.loop_free ? "loop-free\n" : "not loop-free; cycle:");
  if (!l.loop_free) {
    for (const auto& b : l.cycle) txt << " " << k->label(b);
    txt << "\n";
  }
  emit(cfg, loop_freeness_to_json(*k, l), txt.str());
  return l.loop_free ? kOk : kViolations;
}

int cmd_atoms(const Config& cfg) {
  auto k = delta(cfg.n);
  Json out = Json::array();
  std::ostringstream txt;
  for (int d = 0; d <= k->top_dim(); ++d)
    for (int i = 0; i < k->size(d); ++i) {
      BasisRef b{d, i};
      out.push_back(Json{{"label", k->label(b)}, {"atom", nu_to_json(*k, atom(*k, b))}});
      txt << "<" << k->label(b) << "> " << nu_to_json(*k, atom(*k, b)).dump() << "\n";
    }
  emit(cfg, out, txt.str());
  return kOk;
}

int cmd_nu(const Config& cfg, const std::string& kind) {
  auto k = delta(cfg.n);
  const int bound = cfg.dim_bound < 0 ? cfg.n : cfg.dim_bound;
  if (kind == "closure") {
    OmegaTable t = closure_from_atoms(k, bound, cfg.budget);
    std::ostringstream txt;
    txt << t.size() << " elements\n";
    if (cfg.table) {
      emit(cfg, omega_to_json(t), txt.str());
    } else {
      Json el = Json::array();
      for (const auto& x : t.elements()) el.push_back(nu_to_json(*k, x));
      emit(cfg, Json{{"count", t.size()}, {"elements", el}}, txt.str());
    }
    return kOk;
  }
  if (cfg.coeff_bound < 1) throw UsageError("--coeff-bound must be positive");
  auto xs = enumerate_nu(*k, bound, cfg.coeff_bound, cfg.budget);
  Coeff top = 0;
  Json el = Json::array();
  for (const auto& x : xs) {
    el.push_back(nu_to_json(*k, x));
    for (const auto& lv : x.levels()) top = std::max({top, lv.minus.max_coeff(), lv.plus.max_coeff()});
  }
  std::ostringstream txt;
  txt << xs.size() << " elements, largest coefficient " << top << "\n";
  if (top >= cfg.coeff_bound)
    std::cerr << "warning: the coefficient bound " << cfg.coeff_bound << " is attained; the list may be incomplete\n";
  emit(cfg, Json{{"count", xs.size()}, {"max_coeff", top}, {"coeff_bound", cfg.coeff_bound}, {"elements", el}}, txt.str());
  return kOk;
}

int cmd_nerve(const Config& cfg) {
  auto c = std::make_shared<const OmegaTable>(closure_from_atoms(delta(cfg.target), cfg.target, cfg.budget));
  Nerve n(c, cfg.max_dim, cfg.budget);
  std::ostringstream txt;
  txt << "nerve of nu Delta_" << cfg.target << " up to dimension " << cfg.max_dim << ":";
  for (int d = 0; d <= cfg.max_dim; ++d) txt << " " << n.count(d);
  txt << "\n";
  emit(cfg, cfg.stratified ? stratified_to_json(from_nerve(n, cfg.max_dim)) : nerve_to_json(n), txt.str());
  return kOk;
}

StratifiedSet load_stratified(const Config& cfg) {
  return stratified_from_json(parse_json(read_input(cfg.input)));
}

int cmd_complicial(const Config& cfg) {
  StratifiedSet s = load_stratified(cfg);
  auto v = validate_stratified(s);
  if (!v.ok()) {
    std::ostringstream txt;
    txt << "not a stratified set\n";
    for (const auto& e : v.violations) txt << "  " << e.kind << ": " << e.detail << "\n";
    emit(cfg, Json{{"stratified", report_to_json(v)}}, txt.str());
    return kViolations;
  }
  auto r = check_complicial_axioms(s);
  std::ostringstream txt;
  txt << (r.ok() ? "complicial up to dimension " : "not complicial up to dimension ") << s.max_dim << " ("
      << r.horns_checked << " horns, " << r.indeterminate << " indeterminate)\n";
  for (const auto& e : r.violations) txt << "  clause " << e.clause << " n=" << e.n << " k=" << e.k << ": " << e.detail << "\n";
  emit(cfg, Json{{"stratified", report_to_json(v)}, {"complicial", report_to_json(r)}}, txt.str());
  return r.ok() ? kOk : kViolations;
}

int cmd_wedge(const Config& cfg) {
  StratifiedSet s = load_stratified(cfg);
  if (!validate_stratified(s).ok()) throw UsageError("input is not a valid stratified set");
  WedgeContext ctx(s);
  if (cfg.dim < 1 || cfg.dim > s.max_dim || cfg.x < 0 || cfg.x >= s.size(cfg.dim) || cfg.y < 0 || cfg.y >= s.size(cfg.dim))
    throw UsageError("--dim, --x, --y must name elements of the input");
  try {
    int w = ctx.wedge(cfg.dim, cfg.x, cfg.y, cfg.i);
    std::ostringstream txt;
    txt << cfg.x << " ^_" << cfg.i << " " << cfg.y << " = element " << w << " of dimension " << cfg.dim + 1 << "\n";
    emit(cfg, Json{{"dim", cfg.dim + 1}, {"element", w}, {"thin", s.is_thin(cfg.dim + 1, w)}}, txt.str());
    return kOk;
  } catch (const ComplicialStructureError& e) {
    emit(cfg, Json{{"error", e.what()}}, std::string(e.what()) + "\n");
    return kViolations;
  }
}

int cmd_identities(const Config& cfg) {
  StratifiedSet s = load_stratified(cfg);
  if (cfg.max_dim >= 0 && cfg.max_dim < s.max_dim) s = truncate(s, cfg.max_dim);
  if (!validate_stratified(s).ok()) throw UsageError("input is not a valid stratified set");
  WedgeContext ctx(s);
  IdentitiesReport r;
  try {
    r = check_identities(ctx);
  } catch (const ComplicialStructureError& e) {
    emit(cfg, Json{{"error", e.what()}}, std::string(e.what()) + "\n");
    return kViolations;
  }
  std::ostringstream txt;
  for (const auto& a : r.axioms)
    txt << "axiom " << a.axiom << ": " << a.instances_checked << " checked, " << a.skipped_at_boundary << " skipped, "
        << a.violations.size() << " violations\n";
  emit(cfg, report_to_json(r), txt.str());
  return r.ok() ? kOk : kViolations;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  if (const char* env = std::getenv("COMPLICIAL_BUDGET")) {
    try {
      cfg.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: COMPLICIAL_BUDGET must be a positive integer\n";
      return kUsage;
    }
  }

  CLI::App app{"Free augmented directed complexes, orientals, nerves and complicial sets"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", cfg.output, "Output file, - for stdout");
  app.add_option("--budget", cfg.budget, "Element budget for closures and searches")->check(CLI::PositiveNumber);

  std::string kind;
  auto* complex = app.add_subcommand("complex", "Emit Delta_n, Lambda_n^k, V_n^k or W as JSON");
  complex->add_option("kind", kind, "delta | horn | vee | w")->required()->check(CLI::IsMember({"delta", "horn", "vee", "w"}));
  complex->add_option("--n", cfg.n)->required()->check(CLI::Range(0, 12));
  complex->add_option("--k", cfg.k)->check(CLI::Range(0, 12));
  complex->add_flag("--morphism", cfg.morphism, "Emit the associated morphism instead");

  auto* check = app.add_subcommand("check", "Validate a complex or morphism read from JSON");
  check->add_option("kind", kind, "unital | loopfree | complex | morphism")
      ->required()
      ->check(CLI::IsMember({"unital", "loopfree", "complex", "morphism"}));
  check->add_option("--input", cfg.input, "Input file, - for stdin");

  auto* atoms = app.add_subcommand("atoms", "Atoms of nu Delta_n");
  atoms->add_option("--n", cfg.n)->required()->check(CLI::Range(0, 8));

  auto* nu = app.add_subcommand("nu", "Elements of nu Delta_n");
  nu->add_option("kind", kind, "enumerate | closure")->required()->check(CLI::IsMember({"enumerate", "closure"}));
  nu->add_option("--n", cfg.n)->required()->check(CLI::Range(0, 6));
  nu->add_option("--dim-bound", cfg.dim_bound, "Highest element dimension (default n)");
  nu->add_option("--coeff-bound", cfg.coeff_bound, "Coefficient bound for enumerate");
  nu->add_flag("--table", cfg.table, "Emit the full operation table (closure)");

  auto* nerve = app.add_subcommand("nerve", "Nerve of nu Delta_m");
  nerve->add_option("--target", cfg.target, "m")->required()->check(CLI::Range(0, 4));
  nerve->add_option("--max-dim", cfg.max_dim)->check(CLI::Range(0, 5));
  nerve->add_flag("--stratified", cfg.stratified, "Emit as a stratified set");

  auto* complicial = app.add_subcommand("complicial", "Complicial-set axioms for a stratified set");
  complicial->add_option("--input", cfg.input);

  auto* wedge = app.add_subcommand("wedge", "x ^_i y in a complicial set");
  wedge->add_option("--input", cfg.input);
  wedge->add_option("--dim", cfg.dim, "Dimension of x and y");
  wedge->add_option("--x", cfg.x)->required();
  wedge->add_option("--y", cfg.y)->required();
  wedge->add_option("--i", cfg.i)->required();

  auto* identities = app.add_subcommand("identities", "Complicial identities of the wedges");
  identities->add_option("--input", cfg.input);
  identities->add_option("--max-dim", cfg.max_dim, "Truncate the input first");
  bool identities_dim_given = false;
  identities->callback([&] { identities_dim_given = identities->count("--max-dim") > 0; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (identities->parsed() && !identities_dim_given) cfg.max_dim = -1;

  try {
    if (complex->parsed()) return cmd_complex(cfg, kind);
    if (check->parsed()) return cmd_check(cfg, kind);
    if (atoms->parsed()) return cmd_atoms(cfg);
    if (nu->parsed()) return cmd_nu(cfg, kind);
    if (nerve->parsed()) return cmd_nerve(cfg);
    if (complicial->parsed()) return cmd_complicial(cfg);
    if (wedge->parsed()) return cmd_wedge(cfg);
    if (identities->parsed()) return cmd_identities(cfg);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << " (budget " << cfg.budget << "; raise with --budget or COMPLICIAL_BUDGET)\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

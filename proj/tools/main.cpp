// gbds: verification front end for generalized Boolean dynamical systems.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 input or domain error.

#include <cstdint>
#include <deque>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gbds/groupoid.hpp"
#include "gbds/ideal_shadow.hpp"
#include "gbds/partial_action.hpp"
#include "gbds/reconstruction.hpp"
#include "gbds/summary.hpp"
#include "io.hpp"

namespace {

using namespace gbds;

struct Output {
  std::string preamble;  // fixed-format block printed before the reports
  std::vector<Report> reports;

  bool ok() const {
    for (const auto& r : reports) {
      if (!r.ok()) return false;
    }
    return true;
  }
};

struct Options {
  std::string file;
  std::string json;
  std::size_t max_len = 0;
  std::size_t max_period = 3;
  std::size_t depth = 0;
  std::size_t cyl_len = 2;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string word;
  std::string path;
  std::string set;
  std::string emit;
  bool action_file = false;
};

System load_valid(const std::string& file) {
  System sys = cli::load_system(file);
  sys.require_valid();
  return sys;
}

Output cmd_validate(const Options& o) {
  if (o.action_file) return {{}, {validate_action(cli::load_action(o.file), o.max_len)}};
  return {{}, {cli::load_system(o.file).validate()}};
}

Output cmd_semigroup(const Options& o) {
  Semigroup sg(load_valid(o.file));
  Report r("semigroup elements (|α|, |β| ≤ " + std::to_string(o.max_len) + ")");
  const auto elems = sg.enumerate(o.max_len);
  r.fact("nonzero elements", std::to_string(elems.size()));
  for (const auto& s : elems) r.fact("element", sg.format(s));
  return {{}, {r, sg.check_laws(o.max_len)}};
}

Output cmd_tight(const Options& o) {
  BoundarySpace sp(load_valid(o.file));
  Report r("tight filters (|α| ≤ " + std::to_string(o.max_len) + ", period ≤ " + std::to_string(o.max_period) + ")");
  for (const auto& xi : sp.semigroup().tight_filters(o.max_len, o.max_period)) {
    r.fact(sp.semigroup().format(xi), sp.format(sp.tight_to_boundary(xi)));
  }
  return {{}, {r, sp.check_tight(o.max_len, o.max_period)}};
}

Output cmd_boundary(const Options& o) {
  const System sys = load_valid(o.file);
  BoundarySpace sp(sys);
  Report r("topological correspondence");
  const auto& corr = sp.correspondence();
  for (AtomId v : corr.vertices) r.fact("vertex", sp.format_vertex(v));
  for (const auto& e : corr.edges) {
    r.fact("edge e:" + sys.label_name(e.edge.label) + "@" + sys.algebra().atom_name(e.edge.atom),
           "d = " + sp.format_vertex(e.d) + ", r = " + (e.r ? sp.format_vertex(*e.r) : std::string("∅")));
  }
  for (AtomId v : sp.singular_vertices()) r.fact("singular vertex", sp.format_vertex(v));
  return {boundary_summary(sys, o.depth), {r, sp.check_cylinders(o.depth, o.cyl_len, o.samples, o.seed)}};
}

Output cmd_action(const Options& o) {
  const System sys = load_valid(o.file);
  PartialAction pa{BoundarySpace(sys)};
  const BoundarySpace& sp = pa.space();
  const FreeGroupElem t = FreeGroupElem::parse(sys, o.word);
  const BoundaryPath mu = sp.parse_path(o.path);
  Report r("partial action φ_t");
  r.fact("t", t.format(sys));
  r.fact("μ", sp.format(mu));
  r.fact("U_{t⁻¹}", sp.format(pa.domain_of(t.inverse())));
  const BoundaryPath image = pa.act(t, mu);
  r.fact("φ_t(μ)", sp.format(image));
  r.fact("U_t", sp.format(pa.domain_of(t)));
  r.check("φ_{t⁻¹}(φ_t(μ)) = μ", pa.act(t.inverse(), image) == mu);
  return {{}, {r}};
}

Output cmd_ck(const Options& o) {
  PartialAction pa{BoundarySpace(load_valid(o.file))};
  return {{}, {pa.ck_check(o.max_len)}};
}

Output cmd_axioms(const Options& o) {
  PartialAction pa{BoundarySpace(load_valid(o.file))};
  return {{}, {pa.check_axioms(o.depth, o.samples, o.seed)}};
}

Output cmd_iso(const Options& o) {
  Groupoids g{PartialAction{BoundarySpace(load_valid(o.file))}};
  return {{}, {g.iso_check(o.depth, o.samples, o.seed)}};
}

Output cmd_reconstruct(const Options& o) {
  const FinitePartialAction a = cli::load_action(o.file);
  Report valid = validate_action(a, o.max_len);
  if (!valid.ok()) return {format_action(a), {valid}};
  const System sys = derive_bds(a);
  BoundarySpace sp(sys);
  Report f("conjugacy map f: X → ∂E");
  for (PointId x = 0; x < a.points.size(); ++x) f.fact("f(" + a.points[x] + ")", sp.format(conjugacy_map(a, x)));
  if (!o.emit.empty()) {
    std::ofstream out(o.emit);
    if (!out) throw cli::InputError(o.emit + ": cannot write file");
    out << cli::system_to_json(sys).dump(2) << "\n";
  }
  std::string pre = format_action(a) + "derived system:\n" + cli::system_to_json(sys).dump(2) + "\n";
  return {pre, {valid, f, verify_conjugacy(a, o.max_len)}};
}

Output cmd_roundtrip(const Options& o) { return {{}, {roundtrip(load_valid(o.file), o.max_len)}}; }

Output cmd_invariant(const Options& o) {
  PartialAction pa{BoundarySpace(load_valid(o.file))};
  const BoundarySpace& sp = pa.space();
  const OpenSet s = sp.parse_openset(o.set);
  const InvarianceResult res = check_invariance(pa, s, o.depth);
  Report r("invariance of S");
  r.fact("S", sp.format(s));
  if (!res.invariant()) {
    r.check("φ-invariant under every generator and its inverse", false,
            "φ_" + res.generator + " maps " + sp.format(res.witness) + " outside S");
    return {{}, {r}};
  }
  r.check("φ-invariant under every generator and its inverse", true);
  r.fact("certificate depth", std::to_string(res.certified->depth));
  r.check("φ-invariant under every t with |t| ≤ 3", invariant_under_words(pa, s, 3));
  const LazyBDS lazy = restrict(pa, *res.certified);
  Report induced = lazy.check_homomorphism();
  for (const auto& cell : lazy.atoms()) {
    std::string regular = lazy.is_regular(cell) ? "regular" : "singular";
    induced.fact(sp.format(cell), regular);
  }
  return {{}, {r, induced}};
}

int run(const std::string& command, const Options& o, const std::function<Output(const Options&)>& fn) {
  Output out;
  try {
    out = fn(o);
  } catch (const cli::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!out.preamble.empty()) std::cout << out.preamble << (out.preamble.back() == '\n' ? "" : "\n");
  for (const auto& r : out.reports) std::cout << r.text();
  if (!o.json.empty()) {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["ok"] = out.ok();
    if (!out.preamble.empty()) j["preamble"] = out.preamble;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : out.reports) j["reports"].push_back(cli::to_json(r));
    std::ofstream f(o.json);
    if (!f) {
      std::cerr << "input error: " << o.json << ": cannot write file\n";
      return 2;
    }
    f << j.dump(2) << "\n";
  }
  return out.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for generalized Boolean dynamical systems"};
  app.require_subcommand(1);
  std::deque<Options> store;  // one per subcommand, so defaults do not collide
  std::string chosen;
  const Options* opts = nullptr;
  std::function<Output(const Options&)> handler;

  struct Sub {
    CLI::App* app;
    Options& o;
  };
  auto add = [&](const std::string& name, const std::string& help, std::function<Output(const Options&)> fn,
                 const char* file_help = "system JSON file") {
    Options& o = store.emplace_back();
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, file_help)->required();
    sub->add_option("--json", o.json, "also write the report as JSON");
    sub->callback([&, name, fn] {
      chosen = name;
      opts = &o;
      handler = fn;
    });
    return Sub{sub, o};
  };

  auto validate = add("validate", "check a system file (or an action file with --action)", cmd_validate);
  validate.app->add_flag("--action", validate.o.action_file, "treat the file as an action file");
  validate.app->add_option("--max-len", validate.o.max_len, "word length for action axioms")->default_val(3);

  auto semigroup = add("semigroup", "enumerate the inverse semigroup and check its laws", cmd_semigroup);
  semigroup.app->add_option("--max-len", semigroup.o.max_len, "bound on |α| and |β|")->default_val(2);

  auto tight = add("tight", "tight filters and their boundary paths", cmd_tight);
  tight.app->add_option("--max-len", tight.o.max_len, "bound on the word length")->default_val(4);
  tight.app->add_option("--max-period", tight.o.max_period, "bound on the lasso period")->default_val(3);

  auto boundary = add("boundary", "boundary path space summary and cylinder calculus", cmd_boundary);
  boundary.app->add_option("--depth", boundary.o.depth, "path depth")->default_val(2);
  boundary.app->add_option("--cyl-len", boundary.o.cyl_len, "bound on cylinder words")->default_val(2);
  boundary.app->add_option("--samples", boundary.o.samples, "pair budget for set operations")->default_val(4000);
  boundary.app->add_option("--seed", boundary.o.seed, "seed for sampled pairs")->default_val(0);

  auto action = add("action", "apply φ_t to a boundary path", cmd_action);
  action.app->add_option("-g,--group", action.o.word, "free group element, e.g. ab⁻¹ or a^-1")->required();
  action.app->add_option("--path", action.o.path, "boundary path, e.g. e:a@y or lasso(;e:a@⋆)")->required();

  auto ck = add("ck", "Cuntz–Krieger relations as bisection identities", cmd_ck);
  ck.app->add_option("--max-len", ck.o.max_len, "bound on |α|")->default_val(3);

  auto axioms = add("axioms", "partial action axioms on open sets and paths", cmd_axioms);
  axioms.app->add_option("--depth", axioms.o.depth, "depth")->default_val(4);
  axioms.app->add_option("--samples", axioms.o.samples, "sampled pointwise instances")->default_val(500);
  axioms.app->add_option("--seed", axioms.o.seed, "seed")->default_val(0);

  auto iso = add("iso", "isomorphism of the transformation and Renault–Deaconu groupoids", cmd_iso);
  iso.app->add_option("--depth", iso.o.depth, "depth")->default_val(4);
  iso.app->add_option("--samples", iso.o.samples, "composable pairs to sample")->default_val(1000);
  iso.app->add_option("--seed", iso.o.seed, "seed")->default_val(0);

  auto recon = add("reconstruct", "derive a system from a finite partial action", cmd_reconstruct,
                    "action JSON file");
  recon.app->add_option("--max-len", recon.o.max_len, "word length for equivariance")->default_val(3);
  recon.app->add_option("--emit", recon.o.emit, "write the derived system as a system file");

  auto roundtrip = add("roundtrip", "boundary action, derived system and conjugacy", cmd_roundtrip);
  roundtrip.app->add_option("--max-len", roundtrip.o.max_len, "word length for equivariance")->default_val(3);

  auto inv = add("invariant", "invariance of an open set and the induced system", cmd_invariant);
  inv.app->add_option("--set", inv.o.set, "open set, e.g. \"N(ε,{y})\", \"{v:y} ∪ N(a,{y})\", all, empty")->required();
  inv.app->add_option("--depth", inv.o.depth, "certificate depth")->default_val(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return run(chosen, *opts, handler);
}

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "trinity/random_graphs.hpp"
#include "trinity/report.hpp"
#include "trinity/verify.hpp"

using namespace trinity;

namespace {

enum Exit { Ok = 0, Invalid = 2, Inconsistent = 3, CapExceeded = 4 };

struct Flags {
  std::string path;
  std::string format = "json";
  std::optional<int> root_triangle, root_dual_vertex;
  std::size_t crossing_cap = 16;
  bool emit_pd = false;
  std::optional<std::uint64_t> seed;
  std::string hypergraph, which;
  bool all = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Trinity load(const Flags& f) { return load_trinity(parse_document(read_file(f.path)), f.root_triangle); }

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Internal: return Inconsistent;
    case ErrorKind::Resource: return CapExceeded;
    default: return Invalid;
  }
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("graph", f.path, "graph document (JSON)")->required();
  sub->add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--root-triangle", f.root_triangle, "white triangle id used as root");
  sub->add_option("--root-dual-vertex", f.root_dual_vertex, "red vertex (face id) rooting the triangulation checks");
  sub->add_option("--crossing-cap", f.crossing_cap, "largest diagram handed to the skein recursion");
}

int cmd_report(const Flags& f) {
  Trinity t = load(f);
  Report r = build_report(t, {f.crossing_cap, f.root_dual_vertex, f.emit_pd});
  std::cout << render(r.doc, f.format == "text");
  if (!r.consistent) return Inconsistent;
  return r.homfly_skipped ? CapExceeded : Ok;
}

int cmd_polytope(const Flags& f) {
  Trinity t = load(f);
  Hypergraph h = parse_hypergraph(f.hypergraph);
  Json j{{"hypergraph", h.name()}, {"which", f.which}};
  j.update(polytope_listing(t, h, f.which));
  std::cout << render(j, f.format == "text");
  return Ok;
}

int cmd_homfly(const Flags& f) {
  Trinity t = load(f);
  LinkDiagram d = median_diagram(t.source(), t.source_bipartition());
  Json j{{"crossings", d.crossings.size()}};
  if (f.emit_pd) j["pd"] = pd_lines(d);
  HomflyHVectorRecord r = verify_homfly_h_vector(t, default_dual_vertex(t, {f.crossing_cap, f.root_dual_vertex, false}), f.crossing_cap);
  j.update(homfly_json(r));
  std::cout << render(j, f.format == "text");
  return r.holds() ? Ok : Inconsistent;
}

void print_checks(const std::vector<Check>& cs, const std::string& prefix) {
  for (auto& c : cs) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << prefix << c.name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
  }
}

int cmd_verify(const Flags& f) {
  Trinity t = load(f);
  auto checks = run_invariants(t, {f.crossing_cap, f.all});
  print_checks(checks, "");
  bool ok = all_pass(checks);
  if (f.seed) {
    // extra random graphs drawn from the given seed
    std::mt19937_64 rng(*f.seed);
    for (int i = 0; i < 20; ++i) {
      GraphDocument d = random_plane_bipartite(rng);
      auto cs = run_invariants(load_trinity(d), {std::min<std::size_t>(f.crossing_cap, 12), f.all});
      if (!all_pass(cs)) {
        std::cout << "random graph " << i << ":\n" << serialize_document(d);
        print_checks(cs, "random." + std::to_string(i) + ".");
        ok = false;
      }
    }
    std::cout << "random graphs checked: 20 (seed " << *f.seed << ")\n";
  }
  return ok ? Ok : Inconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trinity invariants of plane bipartite graphs"};
  app.require_subcommand(1);
  Flags f;
  auto* report = app.add_subcommand("report", "full report");
  add_common(report, f);
  report->add_flag("--emit-pd", f.emit_pd, "include the PD code of the median link");
  auto* poly = app.add_subcommand("polytope", "one polytope listing");
  add_common(poly, f);
  poly->add_option("--hypergraph", f.hypergraph, "VE, EV, ER, RE, RV or VR")->required();
  poly->add_option("--which", f.which, "gp, trimmed, hypertree or root")->required();
  auto* hom = app.add_subcommand("homfly", "HOMFLY-PT of the median link and the h-vector identity");
  add_common(hom, f);
  hom->add_flag("--emit-pd", f.emit_pd, "include the PD code");
  auto* ver = app.add_subcommand("verify", "invariant suite");
  add_common(ver, f);
  ver->add_flag("--all", f.all, "include the HOMFLY checks");
  ver->add_option("--seed", f.seed, "also check 20 random graphs drawn from this seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? Ok : Invalid;
  }
  try {
    if (*report) return cmd_report(f);
    if (*poly) return cmd_polytope(f);
    if (*hom) return cmd_homfly(f);
    return cmd_verify(f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.kind());
  }
}

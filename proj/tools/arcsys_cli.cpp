#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "arcsys/annulus.hpp"
#include "arcsys/constructions.hpp"
#include "arcsys/extremal.hpp"
#include "arcsys/io.hpp"
#include "arcsys/regions.hpp"
#include "arcsys/svg.hpp"
#include "arcsys/taut.hpp"

using namespace arcsys;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::string out;
};
Globals g;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream o(g.out);
  if (!o) throw UsageError("cannot write " + g.out);
  o << text;
  if (!text.empty() && text.back() != '\n') o << '\n';
}

ArcSystem read_system(const std::string& path) { return system_from_json(slurp(path)); }
AnnularDiagram read_diagram(const std::string& path) { return diagram_from_json(slurp(path)); }

// A class argument is a JSON class file or text like "U[2,0,3]" with --n.
ArcClass read_class(const std::string& arg, int n) {
  std::ifstream probe(arg);
  if (probe) {
    auto doc = parse_document(slurp(arg));
    if (auto* c = std::get_if<ArcClass>(&doc)) return *c;
    throw UsageError(arg + " does not hold a single class");
  }
  if (n < 2) throw UsageError("class text needs --n");
  return parse_class_text(n, arg);
}

Puncture read_puncture(int n, const std::string& text) { return SurfaceSpec(n).parse_puncture(text); }

std::string class_line(const ArcClass& c) { return to_string(c); }

int exit_code = 0;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arc systems on punctured spheres and square annular diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--out", g.out, "write the main output to a file");
  int seed = 1;
  app.add_option("--seed", seed, "seed for randomized runs");
  int cap = -1;
  app.add_option("--cap", cap, "word length cap for class searches");

  // normal-form
  int nf_n = -1;
  std::string nf_arg;
  auto* nf = app.add_subcommand("normal-form", "reduce a class to its normal form");
  nf->add_option("--n", nf_n, "number of punctures");
  nf->add_option("class", nf_arg, "class text or JSON file")->required();
  nf->callback([&] {
    ArcClass c = read_class(nf_arg, nf_n);
    emit(g.json ? class_to_json(c) : class_line(c));
  });

  // intersect / homotopic
  int ix_n = -1;
  std::string ix_a, ix_b;
  auto* ix = app.add_subcommand("intersect", "geometric intersection number of two classes");
  ix->add_option("--n", ix_n, "number of punctures");
  ix->add_option("a", ix_a)->required();
  ix->add_option("b", ix_b)->required();
  ix->callback([&] {
    int x = intersection_number(read_class(ix_a, ix_n), read_class(ix_b, ix_n));
    emit(g.json ? json{{"intersection", x}}.dump() : std::to_string(x));
  });
  auto* ho = app.add_subcommand("homotopic", "whether two classes are homotopic");
  ho->add_option("--n", ix_n, "number of punctures");
  ho->add_option("a", ix_a)->required();
  ho->add_option("b", ix_b)->required();
  ho->callback([&] {
    bool h = is_homotopic(read_class(ix_a, ix_n), read_class(ix_b, ix_n));
    emit(g.json ? json{{"homotopic", h}}.dump() : (h ? "yes" : "no"));
  });

  // construct
  std::string which;
  int cn = 0;
  auto* co = app.add_subcommand("construct", "build the two-system or zero-system on n punctures");
  co->add_option("which", which)->required()->check(CLI::IsMember({"two-system", "zero-system"}));
  co->add_option("n", cn)->required();
  co->callback([&] { emit(system_to_json(which == "two-system" ? max_two_system(cn) : zero_system(cn))); });

  // verify
  int vk = 0;
  std::string vfile = "-";
  auto* ve = app.add_subcommand("verify", "check that a system is a k-system");
  ve->add_option("k", vk)->required();
  ve->add_option("file", vfile, "arc-system document (default stdin)");
  ve->callback([&] {
    ArcSystem sys = read_system(vfile);
    auto cert = verify_k_system(sys, vk);
    if (!cert.ok) exit_code = 1;
    if (g.json) {
      json j{{"ok", cert.ok}, {"size", sys.size()}, {"k", vk}};
      if (!cert.ok) j["pair"] = {cert.a, cert.b}, j["reason"] = cert.reason;
      emit(j.dump());
    } else if (cert.ok) {
      emit("ok, size " + std::to_string(sys.size()));
    } else {
      std::string who = cert.b < 0 ? "arc " + std::to_string(cert.a) : "arcs " + std::to_string(cert.a) + " and " + std::to_string(cert.b);
      emit("violation: " + who + ": " + cert.reason);
    }
  });

  // enumerate
  int en_n = 0, en_l = 0;
  auto* en = app.add_subcommand("enumerate", "list realizable classes up to a word length");
  en->add_option("n", en_n)->required();
  en->add_option("L", en_l)->required();
  en->callback([&] {
    auto cl = enumerate_classes(SurfaceSpec(en_n), en_l);
    if (g.json) {
      json j{{"n", en_n}, {"cap", en_l}, {"count", cl.size()}, {"classes", json::array()}};
      for (const auto& c : cl) j["classes"].push_back(json::parse(class_to_json(c)));
      emit(j.dump(2));
      return;
    }
    std::ostringstream os;
    for (const auto& c : cl) os << class_line(c) << "\n";
    os << "count " << cl.size() << " (n=" << en_n << ", cap " << en_l << ")\n";
    emit(os.str());
  });

  // search-max
  int sm_n = 0, sm_k = 0, sm_l = 0;
  bool sm_seed = false;
  auto* sm = app.add_subcommand("search-max", "largest k-system among classes up to length L");
  sm->add_option("n", sm_n)->required();
  sm->add_option("k", sm_k)->required();
  sm->add_option("L", sm_l)->required();
  sm->add_flag("--seed-construction", sm_seed, "start from the two-system construction when it fits");
  sm->callback([&] {
    std::vector<ArcClass> seedc;
    if (sm_seed && sm_n >= 3) seedc = max_two_system(sm_n).classes;
    auto rep = search_max(sm_n, sm_k, sm_l, seedc);
    ArcSystem w = make_system(SurfaceSpec(sm_n), rep.witness);
    if (g.json) {
      json j{{"n", sm_n}, {"k", sm_k}, {"cap", sm_l}, {"candidates", rep.candidates}, {"size", rep.witness.size()},
             {"witness", json::parse(system_to_json(w))}};
      emit(j.dump(2));
      return;
    }
    std::ostringstream os;
    os << "size " << rep.witness.size() << " (n=" << sm_n << ", k=" << sm_k << ", cap " << sm_l << ", " << rep.candidates
       << " candidates)\n";
    for (const auto& c : rep.witness) os << class_line(c) << "\n";
    emit(os.str());
  });

  // forget
  std::string fg_r, fg_file = "-";
  auto* fg = app.add_subcommand("forget", "images of a system after forgetting a puncture");
  fg->add_option("r", fg_r)->required();
  fg->add_option("file", fg_file);
  fg->callback([&] {
    ArcSystem sys = read_system(fg_file);
    Puncture r = read_puncture(sys.surface.n(), fg_r);
    std::vector<ArcClass> images, distinct;
    for (const auto& c : sys.classes) {
      images.push_back(forget_puncture(c, r));
      if (std::find(distinct.begin(), distinct.end(), images.back()) == distinct.end()) distinct.push_back(images.back());
    }
    if (g.json) {
      json j{{"r", fg_r}, {"size", sys.size()}, {"image_size", distinct.size()}, {"images", json::array()}};
      for (const auto& c : images) j["images"].push_back(json::parse(class_to_json(c)));
      emit(j.dump(2));
      return;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < images.size(); ++i) os << class_line(sys.classes[i]) << " -> " << class_line(images[i]) << "\n";
    os << "image size " << distinct.size() << " of " << sys.size() << "\n";
    emit(os.str());
  });

  // fibers
  std::string fb_r, fb_file = "-";
  bool fb_extend = false;
  auto* fb = app.add_subcommand("fibers", "fiber report for forgetting a puncture");
  fb->add_option("r", fb_r)->required();
  fb->add_option("file", fb_file);
  fb->add_flag("--extend", fb_extend, "add classes until every fiber satisfies the identity");
  fb->callback([&] {
    ArcSystem sys = read_system(fb_file);
    Puncture r = read_puncture(sys.surface.n(), fb_r);
    ExtensionResult ext;
    FiberAnalysis fa;
    if (fb_extend) {
      ext = extend_fibers(sys, r, cap);
      fa = ext.analysis;
      sys = ext.system;
    } else {
      fa = fiber_analysis(sys, r);
    }
    const int n = sys.surface.n();
    std::optional<RelationCertificate> rel;
    if (fa.all_identity) rel = check_relation_conditions(relation_from_fibers(sys, r, cap));
    const bool bound_ok = sys.size() - fa.image_size <= binomial(n - 1, 2);
    const bool ok = fa.all_identity && bound_ok && (!fb_extend || ext.ok) && (!rel || rel->ok());
    if (!ok) exit_code = 1;
    if (g.json) {
      json j{{"r", fb_r}, {"size", sys.size()}, {"image_size", fa.image_size}, {"bound", binomial(n - 1, 2)},
             {"all_identity", fa.all_identity}, {"fibers", json::array()}};
      for (const auto& f : fa.fibers)
        j["fibers"].push_back({{"image", json::parse(class_to_json(f.image))}, {"members", f.members},
                               {"disjoint_pairs", f.disjoint_pairs}, {"identity", f.identity}});
      if (fb_extend) j["added"] = ext.added, j["extension_ok"] = ext.ok, j["failure"] = ext.failure;
      if (rel) j["relation"] = {{"size", rel->size}, {"condition_i", rel->condition_i}, {"condition_ii", rel->condition_ii}, {"within_bound", rel->within_bound}};
      emit(j.dump(2));
      return;
    }
    std::ostringstream os;
    for (const auto& f : fa.fibers) {
      os << class_line(f.image) << ": " << f.members.size() << " members, " << f.disjoint_pairs << " disjoint pairs, identity "
         << (f.identity ? "holds" : "fails") << "\n";
    }
    if (fb_extend) {
      os << "added " << ext.added.size() << " classes (cap " << ext.max_len << ")";
      if (!ext.ok) os << ": " << ext.failure;
      os << "\n";
    }
    os << "|A| - |image| = " << sys.size() - fa.image_size << ", bound C(" << n - 1 << ",2) = " << binomial(n - 1, 2) << "\n";
    if (rel)
      os << "relation: " << rel->size << " pairs, condition (i) " << (rel->condition_i ? "holds" : "fails") << ", condition (ii) "
         << (rel->condition_ii ? "holds" : "fails") << "\n";
    emit(os.str());
  });

  // diagram
  auto* dg = app.add_subcommand("diagram", "square annular diagrams");
  dg->require_subcommand(1);
  std::string dfile = "-";
  int dk = 1, dpath = 0, dcenter = -1, drandom = 0, dlimit = 20000, dm = 5, dw = 2;
  auto* dv = dg->add_subcommand("validate", "structural check");
  dv->add_option("file", dfile);
  dv->callback([&] {
    std::string why;
    bool ok = validate(read_diagram(dfile), &why);
    if (!ok) exit_code = 1;
    emit(g.json ? json{{"valid", ok}, {"reason", why}}.dump() : ok ? std::string("valid") : "invalid: " + why);
  });
  auto* dks = dg->add_subcommand("ksystem", "check the k-system property of the dual curves");
  dks->add_option("k", dk)->required();
  dks->add_option("file", dfile);
  dks->callback([&] {
    AnnularDiagram d = read_diagram(dfile);
    DualCurveReport rep;
    bool ok = is_k_system_diagram(d, dk, &rep);
    if (!ok) exit_code = 1;
    int mx = 0;
    for (const auto& row : rep.crossings)
      for (int x : row) mx = std::max(mx, x);
    if (g.json) {
      emit(json{{"ok", ok}, {"k", dk}, {"curves", rep.curves.size()}, {"max_crossing", mx}, {"problem", rep.problem}}.dump());
    } else {
      emit(std::string(ok ? "ok" : "not a k-system diagram") + ": " + std::to_string(rep.curves.size()) + " dual curves, max crossing " +
           std::to_string(mx) + (rep.problem.empty() ? "" : " (" + rep.problem + ")"));
    }
  });
  auto* dh = dg->add_subcommand("hexmove", "apply a hexagon move, or random moves with --random");
  dh->add_option("file", dfile);
  dh->add_option("--center", dcenter, "interior degree-3 vertex at the hexagon center");
  dh->add_option("--random", drandom, "apply this many random moves and check invariants");
  dh->callback([&] {
    AnnularDiagram d = read_diagram(dfile);
    if (drandom > 0) {
      std::mt19937 rng(static_cast<unsigned>(seed));
      const int squares = square_count(d);
      const auto keyed = keyed_crossings(d);
      int done = 0;
      bool ok = true;
      for (int i = 0; i < drandom; ++i) {
        auto loci = hexagon_loci(d);
        if (loci.empty()) break;
        d = hexagon_move(d, loci[rng() % loci.size()]);
        ++done;
        ok = ok && validate(d) && square_count(d) == squares && keyed_crossings(d) == keyed;
      }
      if (!ok) exit_code = 1;
      emit(g.json ? json{{"moves", done}, {"invariants", ok}}.dump()
                  : std::to_string(done) + " moves, invariants " + (ok ? "preserved" : "broken"));
      return;
    }
    if (dcenter < 0) {
      auto loci = hexagon_loci(d);
      if (loci.empty()) throw UsageError("diagram has no hexagon");
      dcenter = loci.front();
    }
    emit(diagram_to_json(hexagon_move(d, dcenter)));
  });
  auto* dc = dg->add_subcommand("corner", "corners and a cornsquare on a boundary path");
  dc->add_option("file", dfile);
  dc->add_option("--path", dpath, "boundary path 0 or 1")->check(CLI::Range(0, 1));
  dc->callback([&] {
    AnnularDiagram d = read_diagram(dfile);
    auto corners = find_corners(d, dpath);
    auto cs = find_cornsquare(d, dpath);
    if (g.json) {
      json j{{"path", dpath}, {"corners", corners}};
      if (cs) j["cornsquare"] = {{"square", cs->square}, {"outerpath", {cs->first, cs->second}}, {"vertex", cs->vertex}};
      emit(j.dump());
      return;
    }
    std::ostringstream os;
    os << "corners on path " << dpath << ":";
    if (corners.empty()) os << " none";
    for (int v : corners) os << " " << v;
    os << "\n";
    if (cs) os << "cornsquare: face " << cs->square << ", outerpath darts " << cs->first << "," << cs->second << " at vertex " << cs->vertex << "\n";
    else os << "cornsquare: none\n";
    emit(os.str());
  });
  auto* dr = dg->add_subcommand("reduce", "hexagon moves until a corner appears on a boundary path");
  dr->add_option("file", dfile);
  dr->add_option("--path", dpath)->check(CLI::Range(0, 1));
  dr->add_option("--limit", dlimit, "maximum number of explored diagrams");
  dr->callback([&] {
    auto res = reduce_to_corner(read_diagram(dfile), dpath, std::nullopt, dlimit);
    if (!res.found) exit_code = 1;
    if (g.json) {
      emit(json{{"found", res.found}, {"moves", res.moves}, {"corner", res.corner}, {"explored", res.explored}}.dump());
      return;
    }
    std::ostringstream os;
    if (!res.found) {
      os << "no corner within " << res.explored << " diagrams\n";
    } else {
      os << "corner " << res.corner << " after " << res.moves.size() << " moves";
      for (int m : res.moves) os << " " << m;
      os << "\n";
    }
    emit(os.str());
  });
  auto* dd = dg->add_subcommand("dual", "dual diagram of an arc system");
  dd->add_option("file", dfile);
  dd->add_option("--k", dk, "largest allowed pairwise crossing");
  dd->callback([&] {
    ArcSystem sys = read_system(dfile);
    emit(diagram_to_json(dual_diagram(build_arrangement(minimal_position(sys.classes)), dk)));
  });
  auto* dt = dg->add_subcommand("verify-theorem", "corner check over taut annulus systems");
  dt->add_option("--m", dm, "largest number of arcs");
  dt->add_option("--w", dw, "largest absolute winding");
  dt->callback([&] {
    auto rep = verify_corner_theorem(dm, dw, dlimit);
    if (!rep.ok()) exit_code = 1;
    if (rep.two_system_witness && !g.out.empty()) {
      std::ofstream o(g.out);
      o << diagram_to_json(rep.two_system_witness->diagram);
    }
    std::ostringstream os;
    os << "specs " << rep.specs_examined << ", diagrams " << rep.diagrams << ", with squares " << rep.with_squares << ", cycles "
       << rep.cycles << "\n";
    os << "sphere duals " << rep.sphere_diagrams << ", with squares " << rep.sphere_with_squares << "\n";
    os << "reductions " << rep.reductions << ", failures " << rep.reduction_failures.size() << "\n";
    os << "cornsquare targets " << rep.targeted_attempts << ", reached " << rep.targeted_reached << ", needing moves "
       << rep.targeted_with_moves << "\n";
    for (const auto& v : rep.violations) os << "violation: " << v << "\n";
    if (rep.two_system_witness) {
      const auto& w = *rep.two_system_witness;
      os << "2-system witness (" << w.source << "), no corner on path " << w.path << ":";
      if (w.spec) os << " " << to_string(*w.spec);
      for (const auto& c : w.classes) os << " " << to_string(c);
      os << "\n";
    } else {
      os << "2-system witness: none\n";
    }
    os << (rep.ok() ? "theorem holds on all examined diagrams\n" : "VIOLATIONS FOUND\n");
    std::cout << os.str();
  });

  // erdos
  int el = 0;
  bool strict = false;
  auto* er = app.add_subcommand("erdos", "largest pairwise meeting chord set on l circle points");
  er->add_option("l", el)->required()->check(CLI::Range(2, 10));
  er->add_flag("--strict", strict, "only interior crossings count");
  er->callback([&] {
    auto w = erdos_witness(el, !strict);
    if (g.json) {
      emit(json{{"l", el}, {"strict", strict}, {"size", w.size()}, {"chords", w}}.dump());
      return;
    }
    emit(std::to_string(w.size()));
  });

  // render
  std::string rfile = "-";
  auto* rd = app.add_subcommand("render", "SVG picture of an arc-system or diagram document");
  rd->add_option("file", rfile);
  rd->callback([&] {
    auto doc = parse_document(slurp(rfile));
    if (auto* s = std::get_if<ArcSystem>(&doc)) emit(render_system_svg(*s));
    else if (auto* d = std::get_if<AnnularDiagram>(&doc)) emit(render_diagram_svg(*d));
    else {
      const ArcClass& c = std::get<ArcClass>(doc);
      emit(render_system_svg(make_system(c.surface(), {c})));
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

#include "crosscut/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <ctime>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "crosscut/complex.hpp"
#include "crosscut/crosscut_poset.hpp"
#include "crosscut/error.hpp"
#include "crosscut/fixed_points.hpp"
#include "crosscut/fixtures.hpp"
#include "crosscut/homology.hpp"
#include "crosscut/io.hpp"
#include "crosscut/poset.hpp"
#include "crosscut/reduction.hpp"
#include "crosscut/stars.hpp"

namespace crosscut {
namespace {

using nlohmann::ordered_json;

struct Options {
  bool json = false;
  bool stable = false;
  int guard = 0;  // 0 = module defaults (CROSSCUT_GUARD env already folded in)
  bool no_core_preprocess = false;

  int coherence_guard() const { return guard > 0 ? guard : kDefaultCoherenceGuard; }
  FppOptions fpp() const {
    FppOptions o;
    if (guard > 0) o.guard = guard;
    o.core_preprocess = !no_core_preprocess;
    return o;
  }
};

std::string iso_utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json new_report(const std::string& command, const Options& opt) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  if (!opt.stable) j["generated_at"] = iso_utc_now();
  return j;
}

std::vector<std::string> label_list(const FinitePoset& p, const ElementSet& s) {
  std::vector<std::string> out;
  for (int v : s.members()) out.push_back(p.label(v));
  return out;
}

ordered_json map_json(const FinitePoset& p, const MonotoneMap& f) {
  ordered_json j = ordered_json::object();
  for (int x = 0; x < p.size(); ++x) j[p.label(x)] = p.label(f.values[x]);
  return j;
}

ordered_json homology_json(const HomologySummary& h) {
  ordered_json j;
  j["reduced"] = h.reduced;
  j["betti"] = h.betti;
  j["torsion"] = h.torsion;
  return j;
}

ordered_json certificate_json(const Certificate& c) {
  ordered_json j;
  j["verdict"] = verdict_name(c.verdict);
  j["trail"] = c.trail;
  return j;
}

// "mxl", "mnl" or a comma-separated label list.
ElementSet parse_cutset(const FinitePoset& p, const std::string& text) {
  if (text == "mxl") return mxl(p);
  if (text == "mnl") return mnl(p);
  ElementSet s(p.size());
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    if (cur.empty()) continue;
    auto id = p.id_of(cur);
    if (!id) fail(Errc::usage_error, "--cutset names unknown element '" + cur + "'");
    s.set(*id);
  }
  if (s.empty()) fail(Errc::usage_error, "--cutset selected no elements");
  return s;
}

void emit(const Options& opt, std::ostream& out, const ordered_json& j,
          const std::string& text) {
  if (opt.json)
    out << j.dump(2) << "\n";
  else
    out << text;
}

int cmd_analyze(const Options& opt, const std::string& file, std::ostream& out) {
  FinitePoset p = read_poset_file(file);
  ordered_json j = new_report("analyze", opt);
  j["file"] = file;
  j["elements"] = p.size();
  j["covers"] = p.covers().size();
  j["maximal"] = label_list(p, mxl(p));
  j["minimal"] = label_list(p, mnl(p));
  j["components"] = connected_components(p, p.all()).size();
  auto chains = maximal_chains(p);
  int height = 0;
  for (const auto& c : chains) height = std::max(height, c.count());
  j["maximal_chains"] = chains.size();
  j["height"] = height;
  for (const char* side : {"maximal", "minimal"}) {
    ElementSet x = side[1] == 'a' ? mxl(p) : mnl(p);
    ordered_json c;
    auto cut = is_cutset(p, x);
    c["cutset"] = cut.ok;
    auto coh = is_coherent_cutset(p, x, opt.coherence_guard());
    c["coherent"] = coh.ok;
    if (coh.witness) c["witness"] = label_list(p, *coh.witness);
    c["crosscut"] = coh.ok && is_antichain(p, x);
    j["cutsets"][side] = c;
  }
  j["core_size"] = core(p).size();
  if (p.size() > 0) {
    auto h = homology(order_complex(p), true);
    j["order_complex"] = homology_json(h);
  }

  std::ostringstream text;
  text << file << ": " << p.size() << " elements, " << p.covers().size() << " covers, "
       << j["components"] << " component(s), height " << height << "\n";
  text << "maximal: ";
  for (const auto& l : j["maximal"]) text << l.get<std::string>() << " ";
  text << "(cutset " << (j["cutsets"]["maximal"]["cutset"].get<bool>() ? "yes" : "no")
       << ", coherent " << (j["cutsets"]["maximal"]["coherent"].get<bool>() ? "yes" : "no")
       << ")\n";
  text << "minimal: ";
  for (const auto& l : j["minimal"]) text << l.get<std::string>() << " ";
  text << "(cutset " << (j["cutsets"]["minimal"]["cutset"].get<bool>() ? "yes" : "no")
       << ", coherent " << (j["cutsets"]["minimal"]["coherent"].get<bool>() ? "yes" : "no")
       << ")\n";
  text << "core size " << j["core_size"] << "\n";
  if (j.contains("order_complex"))
    text << "order complex: " << to_string(homology(order_complex(p), true)) << "\n";
  emit(opt, out, j, text.str());
  return 0;
}

int cmd_crosscut_poset(const Options& opt, const std::string& file, const std::string& cutset,
                       bool dot, std::ostream& out) {
  FinitePoset p = read_poset_file(file);
  ElementSet x = parse_cutset(p, cutset);
  CrosscutPoset g = crosscut_poset(p, x);
  if (dot) {
    out << poset_dot(g.base);
    return 0;
  }
  ordered_json j = new_report("crosscut-poset", opt);
  j["file"] = file;
  j["cutset"] = label_list(p, x);
  j["carriers"] = ordered_json::array();
  for (std::size_t i = 0; i < g.carriers.size(); ++i) {
    ordered_json c;
    c["label"] = g.base.label(int(i));
    c["members"] = label_list(p, g.carriers[i]);
    c["generator"] = label_list(p, g.generators[i]);
    j["carriers"].push_back(c);
  }
  j["covers"] = ordered_json::array();
  for (auto [a, b] : g.base.covers())
    j["covers"].push_back({g.base.label(a), g.base.label(b)});

  std::ostringstream text;
  for (std::size_t i = 0; i < g.carriers.size(); ++i)
    text << "# " << g.base.label(int(i)) << " = component of st("
         << set_label(g.generators[i], p.labels()) << ")\n";
  text << write_poset(g.base);
  emit(opt, out, j, text.str());
  return 0;
}

int cmd_crosscut_complex(const Options& opt, const std::string& file, const std::string& cutset,
                         std::ostream& out) {
  FinitePoset p = read_poset_file(file);
  ElementSet x = parse_cutset(p, cutset);
  SimplicialComplex k = crosscut_complex(p, x);
  ordered_json j = new_report("crosscut-complex", opt);
  j["file"] = file;
  j["cutset"] = label_list(p, x);
  j["vertices"] = k.vertex_labels();
  j["facets"] = ordered_json::array();
  for (const auto& f : k.facets()) {
    std::vector<std::string> labels;
    for (int v : f.members()) labels.push_back(k.vertex_labels()[v]);
    j["facets"].push_back(labels);
  }
  emit(opt, out, j, write_complex(k));
  return 0;
}

int cmd_order_complex(const Options& opt, const std::string& file, std::ostream& out) {
  FinitePoset p = read_poset_file(file);
  SimplicialComplex k = order_complex(p);
  ordered_json j = new_report("order-complex", opt);
  j["file"] = file;
  j["vertices"] = k.vertex_labels();
  j["facets"] = ordered_json::array();
  for (const auto& f : k.facets()) {
    std::vector<std::string> labels;
    for (int v : f.members()) labels.push_back(k.vertex_labels()[v]);
    j["facets"].push_back(labels);
  }
  emit(opt, out, j, write_complex(k));
  return 0;
}

int cmd_homology(const Options& opt, const std::string& file, bool unreduced,
                 std::ostream& out) {
  SimplicialComplex k = read_complex_file(file);
  HomologySummary h = homology(k, !unreduced);
  ordered_json j = new_report("homology", opt);
  j["file"] = file;
  j["dim"] = k.dim();
  j["f_vector"] = f_vector(k);
  j["euler"] = euler_characteristic(k);
  ordered_json hj = homology_json(h);
  for (auto& [key, value] : hj.items()) j[key] = value;
  out << j.dump(2) << "\n";  // homology output is always JSON
  return 0;
}

int cmd_core(const Options& opt, const std::string& file, std::ostream& out) {
  FinitePoset p = read_poset_file(file);
  CoreResult c = core_with_retraction(p);
  ordered_json j = new_report("core", opt);
  j["file"] = file;
  j["elements"] = label_list(c.core.poset, c.core.poset.all());
  j["retraction"] = ordered_json::object();
  for (int v = 0; v < p.size(); ++v) j["retraction"][p.label(v)] = p.label(c.retraction[v]);
  j["contractible"] = c.core.poset.size() == 1;
  emit(opt, out, j, write_poset(c.core.poset));
  return 0;
}

int cmd_fpp(const Options& opt, const std::string& file, std::ostream& out) {
  FinitePoset p = read_poset_file(file);
  FppResult r = has_fpp(p, opt.fpp());
  ordered_json j = new_report("fpp", opt);
  j["file"] = file;
  j["fpp"] = r.has_fpp;
  if (r.witness) j["witness"] = map_json(p, *r.witness);

  std::ostringstream text;
  text << "fixed point property: " << (r.has_fpp ? "yes" : "no") << "\n";
  if (r.witness) {
    text << "fixed-point-free monotone map:\n";
    for (int v = 0; v < p.size(); ++v)
      text << "  " << p.label(v) << " -> " << p.label(r.witness->values[v]) << "\n";
  }
  emit(opt, out, j, text.str());
  return r.has_fpp ? 0 : 1;
}

int cmd_fsp(const Options& opt, const std::string& file, std::ostream& out) {
  SimplicialComplex k = read_complex_file(file);
  FppResult r = has_fsp(k, opt.fpp());
  ordered_json j = new_report("fsp", opt);
  j["file"] = file;
  j["fsp"] = r.has_fpp;
  if (r.witness) {
    FacePoset fp = face_poset(k);
    j["witness"] = map_json(fp.poset, *r.witness);
  }
  std::ostringstream text;
  text << "fixed simplex property: " << (r.has_fpp ? "yes" : "no") << "\n";
  emit(opt, out, j, text.str());
  return r.has_fpp ? 0 : 1;
}

int cmd_dot(const std::string& file, std::ostream& out) {
  out << poset_dot(read_poset_file(file));
  return 0;
}

int cmd_fixtures(const Options& opt, const std::string& dir, std::ostream& out) {
  fixtures::write_fixture_files(dir);
  ordered_json j = new_report("fixtures", opt);
  j["dir"] = dir;
  j["files"] = {"EX1.poset", "EX1p.poset", "CHAIN2.poset",  "SINGLE.poset",
                "Q3.poset",  "EX3.poset",  "twotri.complex"};
  std::ostringstream text;
  for (const auto& f : j["files"]) text << dir << "/" << f.get<std::string>() << "\n";
  emit(opt, out, j, text.str());
  return 0;
}

int cmd_verify(const Options& opt, const std::string& claim, const std::string& file,
               const std::string& cutset, std::ostream& out) {
  ordered_json j = new_report("verify", opt);
  j["claim"] = claim;
  j["file"] = file;
  std::ostringstream text;
  int rc = 2;

  if (claim == "main-theorem") {
    FinitePoset p = read_poset_file(file);
    ElementSet x = parse_cutset(p, cutset);
    auto r = verify_main_theorem(p, x);
    j["ok"] = r.ok;
    j["inconclusive"] = r.inconclusive;
    j["carriers"] = ordered_json::array();
    for (const auto& c : r.carrier_certificates) j["carriers"].push_back(certificate_json(c));
    j["homology_p"] = homology_json(r.h_p);
    j["homology_gamma"] = homology_json(r.h_gamma);
    j["note"] = r.method_note;
    text << "main theorem consequences: " << (r.ok ? "verified" : "NOT verified") << "\n"
         << "  K(P): " << to_string(r.h_p) << "\n"
         << "  K(crosscut poset): " << to_string(r.h_gamma) << "\n";
    if (r.inconclusive) text << "  (a carrier certificate came back unknown)\n";
    rc = r.ok ? 0 : 1;
  } else if (claim == "retract") {
    FinitePoset p = read_poset_file(file);
    ElementSet x = parse_cutset(p, cutset);
    auto r = verify_retract(p, x, opt.coherence_guard());
    j["ok"] = r.ok;
    j["simplices"] = r.simplex_count;
    j["carriers"] = r.carrier_count;
    j["violations"] = r.violations;
    text << "crosscut complex retracts to the crosscut poset: "
         << (r.ok ? "verified" : "NOT verified") << " (" << r.simplex_count << " simplices, "
         << r.carrier_count << " carriers)\n";
    for (const auto& v : r.violations) text << "  " << v << "\n";
    rc = r.ok ? 0 : 1;
  } else if (claim == "p0") {
    FinitePoset p = read_poset_file(file);
    auto r = p0_retraction(p);
    j["ok"] = true;
    j["p0"] = label_list(r.p0.poset, r.p0.poset.all());
    j["retraction"] = ordered_json::object();
    for (int v = 0; v < p.size(); ++v)
      j["retraction"][p.label(v)] =
          r.p0.poset.label(r.retraction.values[v]);
    text << "comparative retraction onto the carrier maxima: verified ("
         << r.p0.poset.size() << " elements)\n";
    rc = 0;
  } else if (claim == "fpp-transfer") {
    FinitePoset p = read_poset_file(file);
    auto r = verify_fpp_transfer(p, opt.fpp());
    j["ok"] = r.ok;
    j["fpp_p"] = r.fpp_p;
    j["fpp_gamma"] = r.fpp_gamma;
    text << "fpp agreement with the crosscut poset over the maximal elements: "
         << (r.ok ? "verified" : "NOT verified") << " (P " << (r.fpp_p ? "yes" : "no")
         << ", crosscut poset " << (r.fpp_gamma ? "yes" : "no") << ")\n";
    rc = r.ok ? 0 : 1;
  } else if (claim == "fsp-equivalence") {
    SimplicialComplex k = read_complex_file(file);
    auto r = verify_fsp_equivalence(k, opt.fpp());
    j["ok"] = r.ok;
    j["fsp"] = r.fsp;
    j["fpp_lk"] = r.fpp_lk;
    text << "fsp of the complex matches fpp of its facet-intersection poset: "
         << (r.ok ? "verified" : "NOT verified") << " (fsp " << (r.fsp ? "yes" : "no")
         << ", poset fpp " << (r.fpp_lk ? "yes" : "no") << ")\n";
    rc = r.ok ? 0 : 1;
  } else if (claim == "pm-contractibility") {
    FinitePoset p = read_poset_file(file);
    auto r = verify_pm_contractibility(p, opt.coherence_guard());
    j["ok"] = r.ok;
    j["pm"] = verdict_name(r.pm);
    j["p"] = verdict_name(r.p);
    text << "contractible join-closure forces a weakly contractible poset: "
         << (r.ok ? "verified" : "NOT verified") << " (P_M " << verdict_name(r.pm) << ", P "
         << verdict_name(r.p) << ")\n";
    rc = r.ok ? 0 : 1;
  } else {
    fail(Errc::usage_error,
         "unknown claim '" + claim +
             "' (expected main-theorem, retract, p0, fpp-transfer, fsp-equivalence or "
             "pm-contractibility)");
  }
  emit(opt, out, j, text.str());
  return rc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"crosscut poset toolkit"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("CROSSCUT_GUARD")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) opt.guard = int(v);
  }
  app.add_flag("--json", opt.json, "emit a JSON report");
  app.add_flag("--stable", opt.stable, "omit the timestamp from JSON reports");
  app.add_option("--guard", opt.guard, "override the size guards of the invoked operations");
  app.add_flag("--no-core-preprocess", opt.no_core_preprocess,
               "search fixed-point-free maps on the full poset instead of its core");

  std::string file, cutset = "mxl", claim, dir = ".";
  bool dot = false, unreduced = false;

  auto* analyze = app.add_subcommand("analyze", "summary of a poset file");
  analyze->add_option("file", file)->required();

  auto* cp = app.add_subcommand("crosscut-poset", "crosscut poset of (P, X)");
  cp->add_option("file", file)->required();
  cp->add_option("--cutset", cutset, "mxl, mnl or a,b,c")->required();
  cp->add_flag("--dot", dot, "emit the Hasse diagram in DOT");

  auto* cc = app.add_subcommand("crosscut-complex", "crosscut complex of (P, X)");
  cc->add_option("file", file)->required();
  cc->add_option("--cutset", cutset, "mxl, mnl or a,b,c")->required();

  auto* oc = app.add_subcommand("order-complex", "order complex of a poset");
  oc->add_option("file", file)->required();

  auto* hm = app.add_subcommand("homology", "integer homology of a complex file");
  hm->add_option("file", file)->required();
  hm->add_flag("--unreduced", unreduced, "report unreduced homology");

  auto* co = app.add_subcommand("core", "beat-point core of a poset");
  co->add_option("file", file)->required();

  auto* fp = app.add_subcommand("fpp", "fixed point property of a poset");
  fp->add_option("file", file)->required();

  auto* fs = app.add_subcommand("fsp", "fixed simplex property of a complex");
  fs->add_option("file", file)->required();

  auto* vf = app.add_subcommand("verify", "check a structural claim");
  vf->add_option("claim", claim,
                 "main-theorem | retract | p0 | fpp-transfer | fsp-equivalence | "
                 "pm-contractibility")
      ->required();
  vf->add_option("file", file)->required();
  vf->add_option("--cutset", cutset, "mxl, mnl or a,b,c");

  auto* dt = app.add_subcommand("dot", "Hasse diagram of a poset in DOT");
  dt->add_option("file", file)->required();

  auto* fx = app.add_subcommand("fixtures", "write the bundled example files");
  fx->add_option("dir", dir);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);  // CLI11 consumes the vector back to front
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opt, file, out);
    if (cp->parsed()) return cmd_crosscut_poset(opt, file, cutset, dot, out);
    if (cc->parsed()) return cmd_crosscut_complex(opt, file, cutset, out);
    if (oc->parsed()) return cmd_order_complex(opt, file, out);
    if (hm->parsed()) return cmd_homology(opt, file, unreduced, out);
    if (co->parsed()) return cmd_core(opt, file, out);
    if (fp->parsed()) return cmd_fpp(opt, file, out);
    if (fs->parsed()) return cmd_fsp(opt, file, out);
    if (vf->parsed()) return cmd_verify(opt, claim, file, cutset, out);
    if (dt->parsed()) return cmd_dot(file, out);
    if (fx->parsed()) return cmd_fixtures(opt, dir, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace crosscut

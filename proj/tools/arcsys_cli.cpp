#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arcsys/arcsys.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace arcsys;

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

struct Options {
  bool json = false;
  bool timing = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  out << text;
}

Json surface_json(const SurfaceGluing& g) {
  Json cycles = Json::array();
  for (const auto& c : g.cusp_cycles()) cycles.push_back(c);
  return Json{{"word", g.word()},   {"side_pairs", g.pair_count()},
              {"euler", g.euler()}, {"genus", g.genus()},
              {"punctures", g.punctures()}, {"cusp_cycles", cycles},
              {"p", g.distinguished_p()},   {"p_prime", g.distinguished_p_prime()}};
}

Json arcs_json(const ArcSystem& sys) {
  Json out = Json::array();
  for (const auto& a : sys.arcs()) out.push_back(format_arc(a));
  return out;
}

std::string cycles_text(const SurfaceGluing& g) {
  std::string out;
  for (std::size_t i = 0; i < g.cusp_cycles().size(); ++i) {
    out += i ? " {" : "{";
    const auto& c = g.cusp_cycles()[i];
    for (std::size_t j = 0; j < c.size(); ++j) out += (j ? "," : "") + std::to_string(c[j]);
    out += "}";
  }
  return out;
}

std::string matrix_text(const IntersectionMatrix& m) {
  std::string out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
    out += "\n";
  }
  return out;
}

// Cusp ids: "p", "p'" (or "p_prime") or a plain integer.
int parse_cusp(const std::string& s, const SurfaceGluing& g) {
  if (s == "p") return g.distinguished_p();
  if (s == "p'" || s == "p_prime") return g.distinguished_p_prime();
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::Parse, "bad cusp '" + s + "'");
}

/// Collects the report of one command and prints it at the end.
class Report {
 public:
  Report(const Options& opt, std::vector<std::string> argv) : opt_(opt) {
    json_["command"] = std::move(argv);
    json_["surface"] = nullptr;
    json_["result"] = Json::object();
  }
  Json& result() { return json_["result"]; }
  void surface(const SurfaceGluing& g) { json_["surface"] = surface_json(g); }
  void line(const std::string& s) { text_ += s + "\n"; }
  void raw(const std::string& s) { text_ += s; }

  int finish(const std::string& verdict, int code, double elapsed) {
    json_["verdict"] = verdict;
    if (opt_.timing) json_["elapsed_seconds"] = elapsed;
    if (opt_.json) {
      std::cout << json_.dump(2) << "\n";
    } else {
      std::cout << text_;
      if (opt_.timing) std::cout << "elapsed: " << elapsed << " s\n";
    }
    return code;
  }

  int error(const std::string& kind, const std::string& message, int code) {
    json_["verdict"] = kind;
    json_["error"] = message;
    if (opt_.json)
      std::cout << json_.dump(2) << "\n";
    else
      std::cerr << "error: " << message << "\n";
    return code;
  }

 private:
  const Options& opt_;
  Json json_;
  std::string text_;
};

std::optional<std::chrono::milliseconds> budget_from(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0));
}

double default_budget() {
  const char* env = std::getenv("ARCSYS_TIME_BUDGET");
  if (!env || !*env) return 0;
  try {
    return std::stod(env);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "ARCSYS_TIME_BUDGET must be a number of seconds");
  }
}

struct ConstructArgs {
  std::string name;
  int chi = 0;
  int k = -1;
  std::string gluing;
  std::string out;
};

int cmd_construct(const ConstructArgs& a, Report& rep) {
  auto need_chi = [&] { require(a.chi >= 1, a.name + " needs --chi N with N >= 1"); };
  auto planar_or_word = [&]() -> SurfacePtr {
    if (!a.gluing.empty()) return make_surface(a.gluing);
    need_chi();
    return make_standard_planar(a.chi);
  };

  std::optional<ArcSystem> sys;
  std::string formula;
  formulas::Int expected = 0;
  int k = 1;
  if (a.name == "polygon") {
    sys = ideal_polygon_system(planar_or_word());
    formula = "f_arcs";
    expected = formulas::f_arcs(sys->surface().abs_euler());
  } else if (a.name == "triangulation") {
    sys = triangulation_system(planar_or_word());
    formula = "disjoint_arcs";
    expected = formulas::disjoint_arcs(sys->surface().abs_euler());
    k = 0;
  } else if (a.name == "concentric") {
    need_chi();
    require(a.k >= 0, "concentric needs --k K");
    k = a.k;
    expected = formulas::k_system_lower(a.chi, k);
    formula = "k_system_lower";
    sys = concentric_system(a.chi, k);
  } else if (a.name == "same-puncture" || a.name == "two-punctures") {
    need_chi();
    sys = a.name == "same-puncture" ? same_puncture_system(a.chi) : two_puncture_system(a.chi);
    formula = "punctured_sphere_arcs";
    expected = formulas::punctured_sphere_arcs(a.chi);
  } else if (a.name == "tetrahedron") {
    sys = tetrahedron_system();
    expected = 12;
  } else {
    throw Error(ErrorCode::Parse, "unknown construction '" + a.name + "'");
  }

  rep.surface(sys->surface());
  auto& r = rep.result();
  r["construction"] = a.name;
  r["size"] = sys->size();
  r["k"] = k;
  r["closed_form"] = formula.empty() ? Json(nullptr) : Json{{"name", formula}, {"value", expected}};
  r["arcs"] = arcs_json(*sys);
  std::string text = serialize_system(*sys);
  if (!a.out.empty()) {
    write_file(a.out, text);
    r["file"] = a.out;
    rep.line(a.name + " on " + sys->surface().word() + ": " + std::to_string(sys->size()) +
             " arcs" + (formula.empty() ? "" : " (" + formula + " = " + std::to_string(expected) + ")") +
             ", written to " + a.out);
  } else {
    rep.raw(text);
  }
  return kOk;
}

int cmd_surface(const std::string& word, Report& rep) {
  auto s = make_surface(word);
  rep.surface(*s);
  rep.line("word: " + s->word());
  rep.line("euler: " + std::to_string(s->euler()));
  rep.line("genus: " + std::to_string(s->genus()));
  rep.line("punctures: " + std::to_string(s->punctures()));
  rep.line("cusp cycles: " + cycles_text(*s));
  rep.line("p: " + std::to_string(s->distinguished_p()) +
           ", p': " + std::to_string(s->distinguished_p_prime()));
  return kOk;
}

int cmd_verify(const std::string& file, int k, Report& rep) {
  auto sys = parse_system(read_file(file));
  rep.surface(sys.surface());
  auto report = verify_k_system(sys, k);
  auto& r = rep.result();
  r["k"] = k;
  r["size"] = report.size;
  r["max_pair"] = report.max_pair;
  r["ok"] = report.ok;
  r["matrix"] = report.matrix;
  Json w = Json::array();
  for (auto [i, j] : report.witnesses)
    w.push_back({{"i", i}, {"j", j}, {"a", format_arc(sys[static_cast<std::size_t>(i)])},
                 {"b", format_arc(sys[static_cast<std::size_t>(j)])},
                 {"crossings", report.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]}});
  r["witnesses"] = w;
  rep.line(std::to_string(report.size) + " arcs, max pairwise intersection " +
           std::to_string(report.max_pair) + (report.ok ? ": " : ": not ") + "a " +
           std::to_string(k) + "-system");
  for (const auto& x : w)
    rep.line("  " + x["a"].get<std::string>() + " x " + x["b"].get<std::string>() + " = " +
             std::to_string(x["crossings"].get<int>()));
  return report.ok ? kOk : kFailed;
}

int cmd_isect(const std::vector<std::string>& args, const std::string& gluing, bool oracle,
              Report& rep) {
  auto& r = rep.result();
  if (gluing.empty()) {
    if (args.size() != 1) throw Error(ErrorCode::Parse, "isect takes a system file, or --surface W and two arcs");
    auto sys = parse_system(read_file(args[0]));
    rep.surface(sys.surface());
    auto m = intersection_matrix(sys);
    r["arcs"] = arcs_json(sys);
    r["matrix"] = m;
    rep.raw(matrix_text(m));
    return kOk;
  }
  if (args.size() != 2) throw Error(ErrorCode::Parse, "isect --surface W needs exactly two arcs");
  auto s = make_surface(gluing);
  rep.surface(*s);
  auto a = parse_arc(args[0], s);
  auto b = parse_arc(args[1], s);
  int n = intersection_number(a, b);
  r["a"] = format_arc(a);
  r["b"] = format_arc(b);
  r["intersection"] = n;
  rep.line(format_arc(a) + " x " + format_arc(b) + " = " + std::to_string(n));
  if (oracle) {
    auto lc = intersection_number_lifts(a, b);
    r["lifts"] = {{"count", lc.count}, {"stabilized", lc.stabilized}, {"radius", lc.radius}};
    rep.line("lift count: " + std::to_string(lc.count) + (lc.stabilized ? "" : " (not stabilized)") +
             " at radius " + std::to_string(lc.radius));
    if (lc.stabilized && lc.count != n) return kFailed;
  }
  return kOk;
}

struct SearchArgs {
  std::string gluing;
  int k = 1;
  int max_word_len = 4;
  std::vector<std::string> from, to;
  bool bipartite = false;
  double budget = -1;
  std::size_t list_maximum = 0;
};

int cmd_search(const SearchArgs& a, Report& rep) {
  auto s = make_surface(a.gluing);
  rep.surface(*s);
  SearchConfig cfg;
  cfg.k = a.k;
  cfg.max_word_len = a.max_word_len;
  cfg.list_maximum = a.list_maximum;
  cfg.time_budget = budget_from(a.budget >= 0 ? a.budget : default_budget());
  if (a.from.empty() != a.to.empty()) throw Error(ErrorCode::Parse, "--from and --to go together");
  if (!a.from.empty()) {
    std::vector<int> p1, p2;
    for (const auto& c : a.from) p1.push_back(parse_cusp(c, *s));
    for (const auto& c : a.to) p2.push_back(parse_cusp(c, *s));
    if (!a.bipartite && p1.size() == 1 && p2.size() == 1)
      cfg.filter = EndpointFilter::fixed(p1[0], p2[0]);
    else
      cfg.filter = EndpointFilter::bipartite(p1, p2);
  }

  auto res = extremal_search(s, cfg);
  auto& r = rep.result();
  static const char* kinds[] = {"none", "bipartite", "fixed"};
  r["k"] = res.k;
  r["max_word_len"] = res.max_word_len;
  r["filter"] = {{"kind", kinds[static_cast<int>(cfg.filter.kind)]},
                 {"from", cfg.filter.first},
                 {"to", cfg.filter.second}};
  r["universe_size"] = res.universe_size;
  r["clique_size"] = res.clique_size;
  r["bound"] = res.bound ? Json{{"name", res.bound->name}, {"value", res.bound->value}} : Json(nullptr);
  r["meets_bound"] = res.meets_bound();
  r["exceeds_bound"] = res.exceeds_bound();
  r["best"] = arcs_json(res.best);
  if (a.list_maximum > 0) {
    Json all = Json::array();
    for (const auto& sys : res.all_best) all.push_back(arcs_json(sys));
    r["all_maximum"] = all;
    r["all_maximum_truncated"] = res.all_best_truncated;
  }

  rep.line("universe: " + std::to_string(res.universe_size) + " arcs (word length <= " +
           std::to_string(res.max_word_len) + ")");
  rep.line("maximum " + std::to_string(res.k) + "-system: " + std::to_string(res.clique_size));
  if (res.bound)
    rep.line("closed form " + res.bound->name + ": " + std::to_string(res.bound->value) +
             (res.exceeds_bound() ? " EXCEEDED" : res.meets_bound() ? " (attained)" : ""));
  for (const auto& arc : res.best.arcs()) rep.line("  " + format_arc(arc));
  if (a.list_maximum > 0) {
    rep.line("maximum systems: " + std::to_string(res.all_best.size()) +
             (res.all_best_truncated ? " (truncated)" : ""));
    for (std::size_t i = 0; i < res.all_best.size(); ++i) {
      std::string line = "  #" + std::to_string(i + 1) + ":";
      for (const auto& arc : res.all_best[i].arcs()) line += " " + format_arc(arc);
      rep.line(line);
    }
  }
  return res.exceeds_bound() ? kFailed : kOk;
}

Json certificate_json(const HellyCertificate& c) {
  return {{"point", c.point},
          {"doubled_centres", c.doubled_centres},
          {"centres_distinct", c.centres_distinct},
          {"centres_in_window", c.centres_in_window}};
}

int cmd_chords(int l, bool exhaustive, const std::string& out, Report& rep) {
  require(l >= 1, "--points must be at least 1");
  auto fam = max_pairwise_family(l);
  auto cert = helly_certificate(fam);
  bool ok = static_cast<formulas::Int>(fam.chords.size()) == formulas::chord_bound(l) &&
            cert.centres_distinct && cert.centres_in_window;
  auto& r = rep.result();
  r["points"] = l;
  r["size"] = fam.chords.size();
  r["bound"] = formulas::chord_bound(l);
  Json chords = Json::array();
  for (const auto& c : fam.chords) chords.push_back({c.a, c.b});
  r["family"] = chords;
  r["certificate"] = certificate_json(cert);
  rep.line("maximum pairwise intersecting family on " + std::to_string(l) + " points: " +
           std::to_string(fam.chords.size()));
  std::string line = " ";
  for (const auto& c : fam.chords) line += " {" + std::to_string(c.a) + "," + std::to_string(c.b) + "}";
  rep.line(line);
  rep.line("common point: " + std::to_string(cert.point));

  if (exhaustive) {
    auto all = all_max_pairwise_families(l);
    std::size_t certified = 0;
    for (const auto& f : all) {
      auto c = helly_certificate(f);
      if (c.centres_distinct && c.centres_in_window) ++certified;
    }
    r["maximum_families"] = all.size();
    r["certified"] = certified;
    ok = ok && certified == all.size();
    rep.line("maximum families: " + std::to_string(all.size()) + ", certified: " +
             std::to_string(certified));
  }
  if (!out.empty()) write_file(out, serialize_chords(fam));
  return ok ? kOk : kFailed;
}

struct FormulaArgs {
  std::string name;
  long long chi = -1;
  long long k = -1;
  long long genus = -1;
  long long points = -1;
};

int cmd_formula(FormulaArgs a, Report& rep) {
  for (auto& ch : a.name)
    if (ch == '-') ch = '_';
  auto need = [&](long long v, const char* flag) {
    if (v < 0) throw Error(ErrorCode::Parse, a.name + " needs " + flag);
    return static_cast<formulas::Int>(v);
  };
  auto& r = rep.result();
  r["name"] = a.name;
  formulas::Int value = 0;
  if (a.name == "degree_summary") {
    auto [arc, curve] = formulas::degree_summary(need(a.k, "--k"));
    r["arc_degree"] = arc;
    r["curve_degree"] = curve;
    rep.line("arc degree " + std::to_string(arc) + ", curve degree " + std::to_string(curve));
    return kOk;
  }
  if (a.name == "f_arcs") value = formulas::f_arcs(need(a.chi, "--chi"));
  else if (a.name == "disjoint_arcs") value = formulas::disjoint_arcs(need(a.chi, "--chi"));
  else if (a.name == "bipartite_disjoint") value = formulas::bipartite_disjoint(need(a.chi, "--chi"));
  else if (a.name == "curve_bound") value = formulas::curve_bound(need(a.genus, "--genus"), need(a.chi, "--chi"));
  else if (a.name == "punctured_sphere_arcs") value = formulas::punctured_sphere_arcs(need(a.chi, "--chi"));
  else if (a.name == "k_system_lower") value = formulas::k_system_lower(need(a.chi, "--chi"), need(a.k, "--k"));
  else if (a.name == "nib_overlap_bound") value = formulas::nib_overlap_bound(need(a.chi, "--chi"));
  else if (a.name == "chord_bound") value = formulas::chord_bound(need(a.points >= 0 ? a.points : a.chi, "--points"));
  else throw Error(ErrorCode::Parse, "unknown formula '" + a.name + "'");
  r["value"] = value;
  rep.line(std::to_string(value));
  return kOk;
}

int cmd_render(const std::string& file, const std::string& out, Report& rep) {
  auto text = read_file(file);
  std::string svg;
  auto& r = rep.result();
  if (looks_like_chord_file(text)) {
    auto fam = parse_chords(text);
    svg = render_chords_svg(fam);
    r["kind"] = "chords";
    r["chords"] = fam.chords.size();
  } else {
    auto sys = parse_system(text);
    rep.surface(sys.surface());
    svg = render_system_svg(sys);
    const auto m = intersection_matrix(sys);
    int crossings = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) crossings += m[i][j];
    r["kind"] = "system";
    r["arcs"] = sys.size();
    r["crossings"] = crossings;
  }
  if (out.empty()) {
    rep.raw(svg);
  } else {
    write_file(out, svg);
    r["file"] = out;
    rep.line("wrote " + out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arc systems on punctured surfaces"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Print a JSON report");
  app.add_flag("--timing", opt.timing, "Include elapsed time in the report");

  std::string word;
  auto* surface = app.add_subcommand("surface", "Invariants of a gluing word");
  surface->add_option("word", word, "Gluing word such as aAbB")->required();

  ConstructArgs cons;
  auto* construct = app.add_subcommand("construct", "Build a known arc system");
  construct->add_option("name", cons.name,
                        "polygon | triangulation | concentric | same-puncture | two-punctures | tetrahedron")
      ->required();
  construct->add_option("--chi", cons.chi, "|chi| of the standard planar surface");
  construct->add_option("--k", cons.k, "k for the concentric construction");
  construct->add_option("--gluing", cons.gluing, "Gluing word for polygon/triangulation");
  construct->add_option("-o,--output", cons.out, "System file to write");

  std::string verify_file;
  int verify_k = 1;
  auto* verify = app.add_subcommand("verify", "Check that a system file is a k-system");
  verify->add_option("file", verify_file)->required();
  verify->add_option("--k", verify_k)->check(CLI::NonNegativeNumber);

  std::vector<std::string> isect_args;
  std::string isect_gluing;
  bool isect_oracle = false;
  auto* isect = app.add_subcommand("isect", "Intersection matrix of a file, or of two arcs");
  isect->add_option("args", isect_args, "system file, or two arcs with --surface")->required();
  isect->add_option("--surface", isect_gluing, "Gluing word the two arcs live on");
  isect->add_flag("--oracle", isect_oracle, "Cross-check with the lift count");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exact maximum k-system among short arcs");
  search->add_option("word", sa.gluing)->required();
  search->add_option("--k", sa.k)->check(CLI::NonNegativeNumber);
  search->add_option("--max-word-len", sa.max_word_len)->check(CLI::NonNegativeNumber);
  search->add_option("--from", sa.from, "Cusps for one end: p, p' or ids")->delimiter(',');
  search->add_option("--to", sa.to, "Cusps for the other end")->delimiter(',');
  search->add_flag("--bipartite", sa.bipartite, "Treat single cusps as a bipartite filter");
  search->add_option("--list-maximum", sa.list_maximum, "Also list up to N maximum systems");
  search->add_option("--time-budget", sa.budget, "Seconds (default: $ARCSYS_TIME_BUDGET)");

  int points = 0;
  bool exhaustive = false;
  std::string chords_out;
  auto* chords = app.add_subcommand("chords", "Maximum pairwise intersecting chord family");
  chords->add_option("--points", points)->required();
  chords->add_flag("--exhaustive", exhaustive, "Certify every maximum family");
  chords->add_option("-o,--output", chords_out, "Chord file to write");

  FormulaArgs fa;
  auto* formula = app.add_subcommand("formula", "Closed-form bounds");
  formula->add_option("name", fa.name)->required();
  formula->add_option("--chi", fa.chi);
  formula->add_option("--k", fa.k);
  formula->add_option("--genus", fa.genus);
  formula->add_option("--points", fa.points);

  std::string render_file, render_out;
  auto* render = app.add_subcommand("render", "SVG of a system or chord file");
  render->add_option("file", render_file)->required();
  render->add_option("-o,--output", render_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  std::vector<std::string> echo(argv + 1, argv + argc);
  Report rep(opt, echo);
  auto start = std::chrono::steady_clock::now();
  try {
    int code = kOk;
    if (*surface) code = cmd_surface(word, rep);
    else if (*construct) code = cmd_construct(cons, rep);
    else if (*verify) code = cmd_verify(verify_file, verify_k, rep);
    else if (*isect) code = cmd_isect(isect_args, isect_gluing, isect_oracle, rep);
    else if (*search) code = cmd_search(sa, rep);
    else if (*chords) code = cmd_chords(points, exhaustive, chords_out, rep);
    else if (*formula) code = cmd_formula(fa, rep);
    else if (*render) code = cmd_render(render_file, render_out, rep);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep.finish(code == kOk ? "ok" : "failed", code, elapsed);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded) return rep.error("budget_exceeded", e.what(), kBudget);
    return rep.error("error", e.what(), kInputError);
  } catch (const std::exception& e) {
    return rep.error("error", e.what(), kInputError);
  }
}

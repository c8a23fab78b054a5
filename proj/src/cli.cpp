#include "chs/cli.hpp"

#include "chs/basepoints.hpp"
#include "chs/indres.hpp"
#include "chs/linalg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

namespace chs {

bool Report::pass() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s.empty() ? "-" : s;
}

std::string str_of(const IVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string str_of(const QVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + "]";
}

std::string yes(bool b) { return b ? "yes" : "no"; }

struct Context {
  const RunConfig& cfg;
  Apartment ap;
  std::optional<ClassificationTable> tableStore;
  const ClassificationTable& table() {
    if (!tableStore)
      tableStore = cfg.classificationPath.empty() ? load_classification() : load_classification(cfg.classificationPath);
    return *tableStore;
  }
};

RootDatum load_datum(const RunConfig& cfg) {
  if (!cfg.preset.empty()) return preset_root_datum(cfg.preset);
  if (cfg.datumPath.empty()) fail_data("no root datum given");
  return load_root_datum(cfg.datumPath);
}

void cmd_info(Context& cx, Report& r) {
  const Apartment& ap = cx.ap;
  const RootDatum& rd = ap.rd;
  Z pi1 = 1;
  for (auto& z : ap.type.pi1) pi1 *= z;
  r.tables.push_back({"datum", {"key", "value"},
                      {{"name", rd.name},
                       {"rank", std::to_string(rd.rank)},
                       {"semisimple_rank", std::to_string(rd.semisimple_rank())},
                       {"central_rank", std::to_string(ap.type.centralRank)},
                       {"roots", std::to_string(rd.num_roots())},
                       {"weyl_order", std::to_string(ap.W.order())},
                       {"type", ap.type.str()},
                       {"pi1_order", pi1.get_str()}}});
  Table roots{"roots", {"index", "root", "coroot", "positive", "simple_coefficients"}, {}};
  for (int i = 0; i < rd.num_roots(); ++i)
    roots.rows.push_back({std::to_string(i), str_of(rd.roots[i]), str_of(rd.coroots[i]), yes(rd.positive[i]),
                          str_of(rd.coeffs[i])});
  r.tables.push_back(roots);
}

void cmd_facets(Context& cx, Report& r) {
  const Apartment& ap = cx.ap;
  auto faces = facets_of_closed_alcove(ap);
  Table t{"alcove_faces", {"index", "dim", "code", "witness", "vanishing_roots"}, {}};
  for (size_t i = 0; i < faces.size(); ++i)
    t.rows.push_back({std::to_string(i), std::to_string(faces[i].dim), str_of(faces[i].code), str_of(faces[i].witness),
                      join(vanishing_root_indices(ap, faces[i]))});
  r.tables.push_back(t);
  auto grid = facets_of_closed_alcove_by_grid(ap);
  r.checks.push_back({"face_count_two_methods", grid.size() == faces.size(),
                      std::to_string(faces.size()) + " vs " + std::to_string(grid.size())});
}

void cmd_blocks(Context& cx, Report& r) {
  const Apartment& ap = cx.ap;
  bool both = !cx.cfg.finite && !cx.cfg.affine;
  if (cx.cfg.finite || both) {
    FiniteC f = finite_C(ap, cx.table());
    Table t{"finite_blocks", {"index", "eps", "orbit_size", "stabilizer", "weps", "zdim", "type", "label", "series"}, {}};
    for (size_t i = 0; i < f.orbits.size(); ++i) {
      auto& o = f.orbits[i];
      t.rows.push_back({std::to_string(i), join(o.rep.eps), std::to_string(o.size), std::to_string(o.stabilizer.size()),
                        std::to_string(o.weps), std::to_string(o.zDim), o.type, to_string(o.rep.label),
                        o.series.str()});
    }
    r.tables.push_back(t);
  }
  if (cx.cfg.affine || both) {
    AffineC c = affine_blocks(ap, cx.table());
    Table t{"affine_blocks",
            {"index", "support", "roots_bar", "label", "zdim", "finite_part", "lattice_rank", "type", "series", "principal"},
            {}};
    for (size_t i = 0; i < c.blocks.size(); ++i) {
      auto& b = c.blocks[i];
      auto& tr = c.triples[b.rep];
      auto& sp = c.supports[tr.support];
      t.rows.push_back({std::to_string(i), str_of(sp.face.witness), join(sp.rootsBar), to_string(tr.label),
                        std::to_string(b.zDim), std::to_string(b.finite.size()), std::to_string(b.lattice.size()),
                        b.type, b.series.str(), yes(b.principal)});
    }
    r.tables.push_back(t);
    auto p = principal_block_check(ap, c);
    r.checks.push_back({"principal_block", p.pass(),
                        "lattice=" + yes(p.latticeIsFull) + " finite=W:" + yes(p.finitePartIsW) +
                            " zdim=rank:" + yes(p.zDimIsRank)});
  }
}

void cmd_bijection(Context& cx, Report& r) {
  auto b = bijection_check(cx.ap, cx.table());
  r.tables.push_back({"bijection",
                      {"K", "D", "orbits", "well_defined", "injective", "surjective", "stabilizers"},
                      {{std::to_string(b.kSize), std::to_string(b.dSize), std::to_string(b.orbitCount),
                        yes(b.wellDefined), yes(b.injective), yes(b.surjective), yes(b.stabilizersMatch)}}});
  std::string detail;
  for (auto& f : b.failures) detail += (detail.empty() ? "" : "; ") + f;
  r.checks.push_back({"bijection", b.pass(), detail});
}

std::vector<std::vector<int>> proper_subsets(int r) {
  std::vector<std::vector<int>> out;
  for (int m = 0; m < (1 << r) - 1; ++m) {
    std::vector<int> s;
    for (int k = 0; k < r; ++k)
      if (m >> k & 1) s.push_back(k);
    out.push_back(s);
  }
  return out;
}

void cmd_indres(Context& cx, Report& r) {
  const Apartment& ap = cx.ap;
  std::mt19937_64 rng(cx.cfg.seed);
  LeviK G = levi_K(ap, cx.table(), all_simple(ap));
  LeviK T = levi_K(ap, cx.table(), {});
  std::vector<std::vector<int>> levis;
  if (cx.cfg.hasLevi) levis.push_back(cx.cfg.levi);
  else levis = proper_subsets(ap.rd.semisimple_rank());
  Table t{"levis", {"levi", "frobenius_pairs", "double_cosets", "trivial_multiplicity", "transitive"}, {}};
  Table inc{"affine_incidence", {"levi", "l_block", "g_block", "conjugator"}, {}};
  for (auto& J : levis) {
    for (int k : J)
      if (k < 0 || k >= ap.rd.semisimple_rank()) fail_data("levi position out of range");
    LeviK L = levi_K(ap, cx.table(), J);
    auto fr = frobenius_check(ap, G, L, cx.cfg.samples, rng);
    auto mk = mackey_check(ap, G, L);
    bool tr = transitivity_check(ap, G, L, T);
    std::string name = "{" + join(J) + "}";
    t.rows.push_back({name, std::to_string(fr.pairsChecked), std::to_string(mk.doubleCosets),
                      mk.trivialMultiplicity.str(), yes(tr)});
    r.checks.push_back({"frobenius " + name, fr.pass(), std::to_string(fr.violations) + " violations"});
    r.checks.push_back({"mackey " + name, mk.pass(), ""});
    r.checks.push_back({"transitivity " + name, tr, ""});
    bool ok = true;
    std::string why;
    try {
      auto table = affine_res_incidence(ap, cx.table(), J);
      for (auto& row : table.rows)
        inc.rows.push_back({name, std::to_string(row.lBlock), std::to_string(row.gBlock), to_string(ap, row.conjugator)});
      why = std::to_string(table.lTriplesChecked) + " triples";
    } catch (const CheckFailure& e) {
      ok = false;
      why = e.what();
    }
    r.checks.push_back({"incidence " + name, ok, why});
  }
  r.tables.push_back(t);
  r.tables.push_back(inc);
}

void cmd_springer(Context& cx, Report& r) {
  const Apartment& ap = cx.ap;
  int n = cx.cfg.terms;
  auto s = springer_endo_series(ap);
  Table t{"endo_series", {"degree", "coefficient"}, {}};
  auto co = s.coefficients(n);
  for (int k = 0; k < n; ++k) t.rows.push_back({std::to_string(k), co[k].get_str()});
  r.tables.push_back(t);
  auto id = springer_identity_check(ap, cx.table());
  r.tables.push_back({"identity", {"sum_irr", "pairs"}, {{std::to_string(id.lhs), std::to_string(id.rhs)}}});
  r.checks.push_back({"springer_identity", id.pass(), std::to_string(id.lhs) + " = " + std::to_string(id.rhs)});
  auto res = res_springer_rank(ap, n);
  r.checks.push_back({"restriction_rank", res.pass(), "rank " + res.rank.get_str()});
  auto d = distinguished_module_characters(ap, std::min(n, 6));
  r.tables.push_back({"distinguished", {"module", "character"},
                      {{"sign", d.sign.str()}, {"cohomology", d.cohomology.str()}}});
  r.tables.push_back({"series", {"expression"}, {{s.str()}}});
}

void cmd_basepoints(Context& cx, Report& r) {
  const Apartment& ap = cx.ap;
  BasepointAssignment a;
  try {
    a = assign_s(ap, cx.cfg.radius);
  } catch (const CheckFailure& e) {
    r.checks.push_back({"basepoint_transport", false, e.what()});
    return;
  }
  Table t{"basepoints", {"index", "dim", "code", "s", "origin"}, {}};
  for (size_t i = 0; i < a.s.size(); ++i)
    t.rows.push_back({std::to_string(i), std::to_string(a.window.objects[i].dim), str_of(a.window.objects[i].code),
                      str_of(a.s[i]), to_string(a.origin[i])});
  r.tables.push_back(t);
  auto b = check_basepoints(ap, a);
  auto frac_of = [](long bad, long all) { return std::to_string(all - bad) + "/" + std::to_string(all); };
  r.checks.push_back({"basepoint_transport", true, std::to_string(a.transportPaths) + " paths"});
  r.checks.push_back({"basepoint_in_facet", b.notInFacet == 0, frac_of(b.notInFacet, b.inFacet + b.notInFacet)});
  r.checks.push_back({"basepoint_adjacent", b.adjacentFailures == 0, frac_of(b.adjacentFailures, b.adjacentChecked)});
  r.checks.push_back({"basepoint_equivariance", b.equivarianceFailures == 0,
                      frac_of(b.equivarianceFailures, b.equivarianceChecked)});
  r.checks.push_back({"basepoint_nesting", b.nestingFailures == 0 && b.cartanFailures == 0,
                      frac_of(b.nestingFailures, b.nestingChecked) + ", literal reading fails " +
                          std::to_string(b.literalNestingFailures)});
  r.checks.push_back({"basepoint_telescoping", b.telescopingFailures == 0,
                      frac_of(b.telescopingFailures, b.telescopingChecked)});
}

void verify_facetcat(Context& cx, Report& r) {
  const Apartment& ap = cx.ap;
  int R = cx.cfg.radius;
  std::string stable[2], eqv[2];
  Table t{"facetcat", {"radius", "objects", "cells", "parallel_pairs", "two_cells", "compositions", "literal_outside"}, {}};
  for (int k = 0; k < 2; ++k) {
    std::mt19937_64 rng(cx.cfg.seed);
    auto c = build_truncation(ap, R + k);
    auto rep = one_category_check(ap, c, rng);
    auto ae = alcove_equivalence_check(ap, c);
    stable[k] = rep.stable();
    eqv[k] = ae.stable();
    t.rows.push_back({std::to_string(R + k), std::to_string(c.window.objects.size()), std::to_string(c.cells.size()),
                      std::to_string(rep.parallelPairs), std::to_string(rep.twoCells),
                      std::to_string(rep.compositionsChecked), std::to_string(rep.literalOutside)});
    if (k == 0) {
      r.checks.push_back({"one_category", rep.pass(), stable[0]});
      r.checks.push_back({"alcove_equivalence", ae.pass(), ae.applicable ? "sc" : "not applicable"});
    }
  }
  r.checks.push_back({"radius_stable", stable[0] == stable[1] && eqv[0] == eqv[1], stable[1]});
  for (int j = 0; j < ap.rd.semisimple_rank(); ++j) {
    std::vector<int> L{j};
    std::mt19937_64 rng(cx.cfg.seed);
    auto c = build_truncation(ap, R, &L);
    auto rep = one_category_check(ap, c, rng);
    r.checks.push_back({"one_category levi {" + std::to_string(j) + "}", rep.pass(), rep.stable()});
  }
  r.tables.push_back(t);
}

void verify_colim(Context& cx, Report& r) {
  const Apartment& ap = cx.ap;
  std::mt19937_64 rng(cx.cfg.seed);
  auto c = build_truncation(ap, cx.cfg.radius);
  auto pts = sample_window_points(ap, c.window, cx.cfg.samples, rng);
  auto g = colim_check(ap, c, pts);
  Table t{"colim", {"point", "covered", "zigzag", "generated", "stabilizer"}, {}};
  long bad = 0;
  for (auto& s : g.samples) {
    t.rows.push_back({str_of(s.x), yes(s.covered), std::to_string(s.zigzagLength), std::to_string(s.generatedOrder),
                      std::to_string(s.directOrder)});
    if (!s.pass()) ++bad;
  }
  r.tables.push_back(t);
  r.checks.push_back({"colim", g.pass(), std::to_string(g.samples.size() - bad) + "/" + std::to_string(g.samples.size())});
}

void verify_fibers(Context& cx, Report& r) {
  const Apartment& ap = cx.ap;
  std::vector<FiberCase> cases;
  for (auto& fc : shipped_fiber_cases())
    if (fc.preset == ap.rd.name) cases.push_back(fc);
  QVec bary(ap.rank(), Q(0));
  for (auto& f : ap.alcove)
    for (auto& v : f.vertices) bary = bary + frac(1, long(f.vertices.size())) * v;
  cases.push_back({ap.rd.name, {}, bary, frac(1, 2)});
  Table t{"fibers", {"levi", "point", "half_width", "facets", "reduced_euler", "connected"}, {}};
  for (auto& fc : cases) {
    auto rep = alpha_fiber_report(ap, fc.levi, fc.point, fc.halfWidth);
    std::string name = "{" + join(fc.levi) + "} " + str_of(fc.point);
    t.rows.push_back({"{" + join(fc.levi) + "}", str_of(fc.point), to_string(fc.halfWidth),
                      std::to_string(rep.poset.size()), std::to_string(rep.reducedEuler), yes(rep.connected)});
    r.checks.push_back({"fiber " + name, rep.pass(), "chi=" + std::to_string(rep.reducedEuler)});
  }
  r.tables.push_back(t);
}

void cmd_verify(Context& cx, Report& r) {
  const RunConfig& c = cx.cfg;
  bool all = !c.facetcat && !c.colim && !c.fibers && !c.basepoints;
  if (all || c.facetcat) verify_facetcat(cx, r);
  if (all || c.colim) verify_colim(cx, r);
  if (all || c.fibers) verify_fibers(cx, r);
  if (all || c.basepoints) cmd_basepoints(cx, r);
}

} // namespace

Report run_report(const RunConfig& cfg) {
  if (cfg.radius < 1) fail_data("radius must be at least 1");
  if (cfg.samples < 0 || cfg.terms < 1) fail_data("samples and terms must be positive");
  Context cx{cfg, make_apartment(load_datum(cfg)), std::nullopt};
  Report r;
  r.command = cfg.command;
  r.datum = cx.ap.rd.name;
  if (cfg.command == "info") cmd_info(cx, r);
  else if (cfg.command == "facets") cmd_facets(cx, r);
  else if (cfg.command == "blocks") cmd_blocks(cx, r);
  else if (cfg.command == "bijection") cmd_bijection(cx, r);
  else if (cfg.command == "indres") cmd_indres(cx, r);
  else if (cfg.command == "springer") cmd_springer(cx, r);
  else if (cfg.command == "basepoints") cmd_basepoints(cx, r);
  else if (cfg.command == "verify") cmd_verify(cx, r);
  else fail_data("unknown command '" + cfg.command + "'");
  return r;
}

std::string render_tsv(const Report& r) {
  std::ostringstream s;
  s << "# " << r.command << "\t" << r.datum << "\n";
  for (auto& t : r.tables) {
    s << "\n## " << t.name << "\n";
    for (size_t i = 0; i < t.columns.size(); ++i) s << (i ? "\t" : "") << t.columns[i];
    s << "\n";
    for (auto& row : t.rows) {
      for (size_t i = 0; i < row.size(); ++i) s << (i ? "\t" : "") << row[i];
      s << "\n";
    }
  }
  if (!r.checks.empty()) {
    s << "\n## checks\ncheck\tresult\tdetail\n";
    for (auto& c : r.checks) s << c.name << "\t" << (c.pass ? "PASS" : "FAIL") << "\t" << c.detail << "\n";
  }
  return s.str();
}

std::string render_json(const Report& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["command"] = r.command;
  j["datum"] = r.datum;
  j["tables"] = nlohmann::json::array();
  for (auto& t : r.tables) j["tables"].push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  j["checks"] = nlohmann::json::array();
  for (auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["pass"] = r.pass();
  return j.dump(2) + "\n";
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Report r = run_report(cfg);
    out << (cfg.json ? render_json(r) : render_tsv(r));
    return r.pass() ? 0 : 1;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cuspidal data, blocks and facet categories of reductive root data"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string levi;
  auto common = [&](CLI::App* sub) {
    sub->add_option("datum", cfg.datumPath, "root-datum file");
    sub->add_option("--preset", cfg.preset, "named preset, e.g. \"A2 sc\", instead of a file");
    sub->add_option("--classification", cfg.classificationPath, "classification data file");
    sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--radius", cfg.radius, "window radius in wall crossings");
    sub->add_option("--samples", cfg.samples, "random samples");
  };
  struct Sub {
    const char* name;
    const char* help;
  };
  for (Sub s : {Sub{"info", "root datum summary"}, Sub{"facets", "faces of the fundamental alcove"},
                Sub{"blocks", "finite and affine block tables"}, Sub{"bijection", "cuspidal triples against data"},
                Sub{"indres", "induction and restriction checks"}, Sub{"springer", "Springer sheaf series"},
                Sub{"basepoints", "equivariant base points"}, Sub{"verify", "facet category, colimit and base point suites"}}) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    std::string name = s.name;
    if (name == "blocks") {
      sub->add_flag("--finite", cfg.finite, "finite model only");
      sub->add_flag("--affine", cfg.affine, "affine model only");
    }
    if (name == "indres") sub->add_option("--levi", levi, "simple positions of one standard Levi, comma separated");
    if (name == "springer") sub->add_option("--terms", cfg.terms, "number of series coefficients");
    if (name == "verify") {
      sub->add_flag("--facetcat", cfg.facetcat, "facet category checks");
      sub->add_flag("--colim", cfg.colim, "groupoid colimit checks");
      sub->add_flag("--fibers", cfg.fibers, "fibre Euler characteristics");
      sub->add_flag("--basepoints", cfg.basepoints, "base point checks");
    }
    sub->callback([&cfg, name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : 2;
  }
  if (!levi.empty()) {
    cfg.hasLevi = true;
    std::stringstream ss(levi == "-" ? "" : levi);
    std::string item;
    try {
      while (std::getline(ss, item, ',')) cfg.levi.push_back(std::stoi(item));
    } catch (const std::exception&) {
      err << "error: bad --levi list\n";
      return 2;
    }
  }
  if (cfg.datumPath.empty() == cfg.preset.empty()) {
    err << "error: give exactly one of a datum file or --preset\n";
    return 2;
  }
  return run(cfg, out, err);
}

} // namespace chs

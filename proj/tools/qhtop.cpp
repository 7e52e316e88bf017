// Command-line front end: Mellin transforms, rank reports for commutators
// and generalized semicommutators of quasihomogeneous Toeplitz operators,
// and batch verification of the classification results.

#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "qhtop/oracle.hpp"
#include "qhtop/report.hpp"

namespace {

using namespace qhtop;

struct CommonOpts {
  bool json = false;
  std::string csv_path;
  int margin = 20;
  double tol = 1e-10;
};

void emit(const json& envelope, bool as_json) {
  if (as_json) {
    std::cout << envelope.dump(2) << "\n";
  }
}

int run_mellin(const std::string& symbol_text, std::vector<double> zs,
               bool as_json) {
  const RadialSymbol sym = parse_symbol(symbol_text);
  const MellinTransform closed = mellin_of_symbol(sym);
  json rows = json::array();
  bool ok = true;
  if (!as_json) {
    std::cout << "symbol: " << sym.str() << "\n";
    std::cout << std::setw(10) << "z" << std::setw(22) << "closed form"
              << std::setw(22) << "quadrature" << "\n";
  }
  for (double z : zs) {
    const double cf = closed(z);
    const double q = quad_mellin(sym, z, 1e-13);
    const bool agree = std::abs(cf - q) <= 1e-8 * std::max(1.0, std::abs(cf));
    ok = ok && agree;
    rows.push_back({{"z", z}, {"closed", cf}, {"quadrature", q},
                    {"agree", agree}});
    if (!as_json) {
      std::cout << std::setw(10) << z << std::setw(22) << std::setprecision(15)
                << cf << std::setw(22) << q << (agree ? "" : "   MISMATCH")
                << "\n";
    }
  }
  emit(make_envelope("mellin",
                     {{"symbol", symbol_text}, {"z", zs}},
                     {{"values", rows}}, ok),
       as_json);
  return ok ? 0 : 1;
}

int run_rank(const std::string& space_text, int k1,
             const std::string& sym1_text, int k2,
             const std::string& sym2_text, const std::string& psi_text,
             const std::string& kind_text, const CommonOpts& opts) {
  const Space space = space_text == "a" ? Space::Bergman : Space::Harmonic;
  const MapKind kind = kind_text == "gensemi" ? MapKind::GenSemicommutator
                                              : MapKind::Commutator;
  const RadialSymbol phi1 = parse_symbol(sym1_text);
  const RadialSymbol phi2 = parse_symbol(sym2_text);
  const QHOperator t1(space, k1, phi1);
  const QHOperator t2(space, k2, phi2);

  CoeffMap map;
  Window window;
  if (kind == MapKind::Commutator) {
    window = commutator_window(space, k1, k2, opts.margin);
    map = commutator_map(t1, t2, window);
  } else {
    if (psi_text.empty()) {
      std::cerr << "gensemi needs --psi\n";
      return 2;
    }
    window = gensemi_window(space, k1, k2, opts.margin);
    map = gen_semicommutator_map(t1, t2, mellin_of_symbol(parse_symbol(psi_text)),
                                 window);
  }
  const SupportWindow w = SupportWindow::from_degrees(k1, k2);
  const RankReport report = detect_rank(map, w, kind, opts.tol);

  if (!opts.json) {
    std::cout << (kind == MapKind::Commutator ? "commutator" : "gensemi")
              << " on " << (space == Space::Bergman ? "Bergman" : "harmonic")
              << " space, degrees (" << k1 << ", " << k2 << ")\n";
    std::cout << "finite rank at window: " << (report.margin_ok ? "yes" : "NO")
              << "   rank: " << report.rank << "\n";
    for (const CanonicalTerm& t : report.canonical) {
      std::cout << "  C_" << t.index << " = " << std::setprecision(15)
                << t.coeff;
      if (t.partner) std::cout << "   (partner " << *t.partner << ")";
      std::cout << "\n";
    }
    if (!report.note.empty()) std::cout << "note: " << report.note << "\n";
  }
  emit(make_envelope("rank",
                     {{"space", space_text},
                      {"k1", k1},
                      {"sym1", sym1_text},
                      {"k2", k2},
                      {"sym2", sym2_text},
                      {"psi", psi_text},
                      {"kind", kind_text}},
                     to_json(report), report.all_ok(),
                     {{"tol", opts.tol}},
                     {{"lo", window.lo}, {"hi", window.hi},
                      {"margin", opts.margin}}),
       opts.json);
  return report.all_ok() ? 0 : 1;
}

int run_classify(const std::string& family, int k1, int k2, double m,
                 double m2, const CommonOpts& opts) {
  TheoremVerdict v;
  if (family == "h-commute") {
    v = classify_h_commutator(k1, k2, m);
  } else if (family == "h-gensemi") {
    v = classify_h_gensemi(k1, k2, m);
  } else if (family == "b-commute") {
    v = classify_b_commutator(k1, k2, m);
  } else if (family == "b-gensemi") {
    v = classify_b_gensemi_monomial(k1, m, k2, m2);
  } else {
    std::cerr << "unknown family: " << family << "\n";
    return 2;
  }
  const ValidationReport r = cross_validate(v, opts.margin, opts.tol);
  if (!opts.json) {
    if (!v.finite_rank) {
      std::cout << "no admissible symbol: not finite rank for any member of "
                   "the family\n";
    } else {
      std::cout << "condition " << v.principal_condition() << ", predicted rank "
                << v.predicted_rank << "\n";
      for (const ConstructedSymbol& s : v.symbols) {
        const RadialSymbol* w = s.transform.symbol_witness();
        std::cout << "  " << s.role << " = "
                  << (w ? w->str() : std::string("<Gamma ratio, not rational>"))
                  << "\n";
      }
      std::cout << "validated: " << (r.ok() ? "yes" : "NO") << " (computed rank "
                << r.computed_rank << ")\n";
      if (!r.ok()) std::cout << "  " << r.mismatch << "\n";
      if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
    }
  }
  emit(make_envelope("classify",
                     {{"family", family},
                      {"k1", k1},
                      {"k2", k2},
                      {"m", m},
                      {"m2", m2}},
                     {{"verdict", to_json(v)},
                      {"validated", r.ok()},
                      {"computed_rank", r.computed_rank}},
                     r.ok(), {{"tol", opts.tol}}, {{"margin", opts.margin}}),
       opts.json);
  return r.ok() ? 0 : 1;
}

int run_verify(const std::string& theorem, const std::string& grid_text,
               const CommonOpts& opts) {
  const GridSpec grid =
      grid_text.empty() ? GridSpec{} : parse_grid_spec(grid_text);
  std::vector<SweepSummary> sweeps;
  if (theorem == "all") {
    sweeps = run_all(grid, opts.margin, opts.tol);
  } else if (theorem == "h-commute") {
    sweeps.push_back(sweep_h_commutator(grid, opts.margin, opts.tol));
  } else if (theorem == "h-gensemi") {
    sweeps.push_back(sweep_h_gensemi(grid, opts.margin, opts.tol));
  } else if (theorem == "b-commute") {
    sweeps.push_back(sweep_b_commutator(grid, opts.margin, opts.tol));
  } else if (theorem == "b-gensemi") {
    sweeps.push_back(sweep_b_gensemi(grid, opts.margin, opts.tol));
  } else if (theorem == "cross-space") {
    sweeps.push_back(sweep_cross_space(grid, opts.margin, opts.tol));
    sweeps.push_back(sweep_discrepancy(opts.margin, opts.tol));
  } else if (theorem == "corollaries") {
    sweeps.push_back(sweep_corollaries(opts.margin, opts.tol));
  } else if (theorem == "lamre") {
    sweeps.push_back(sweep_lamre());
  } else if (theorem == "oracles") {
    sweeps.push_back(sweep_oracle_mellin());
    sweeps.push_back(sweep_oracle_projection());
  } else if (theorem == "monotonicity") {
    sweeps.push_back(sweep_monotonicity());
  } else if (theorem == "negative-control") {
    sweeps.push_back(sweep_negative_control());
  } else if (theorem == "examples") {
    sweeps.push_back(sweep_reference_instances());
  } else {
    std::cerr << "unknown verification target: " << theorem << "\n";
    return 2;
  }

  bool all_ok = true;
  json out = json::array();
  std::vector<CellRecord> all_records;
  for (const SweepSummary& s : sweeps) {
    all_ok = all_ok && s.pass();
    out.push_back(to_json(s));
    all_records.insert(all_records.end(), s.records.begin(), s.records.end());
    if (!opts.json) {
      std::cout << (s.pass() ? "[PASS] " : "[FAIL] ") << s.name << "  ("
                << s.cells << " cells, " << s.validated << " validated, "
                << s.failed << " failed)";
      if (s.name == "h-commute") {
        std::cout << "  odd ranks: " << s.odd_rank_count;
      }
      std::cout << "\n";
      if (!s.pass()) std::cout << "       first failure: " << s.first_failure()
                               << "\n";
    }
  }
  if (!opts.csv_path.empty()) {
    std::ofstream csv(opts.csv_path);
    csv << csv_from_records(all_records);
  }
  emit(make_envelope("verify",
                     {{"theorem", theorem}, {"grid", grid_text}},
                     {{"sweeps", out}}, all_ok, {{"tol", opts.tol}},
                     {{"margin", opts.margin}}),
       opts.json);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quasihomogeneous Toeplitz operators on the harmonic Bergman and "
      "Bergman spaces: Mellin symbol calculus, finite-rank detection, and "
      "verification of the classification results"};
  app.require_subcommand(1);

  // mellin
  std::string symbol_text;
  std::vector<double> zs;
  bool mellin_json = false;
  CLI::App* mellin = app.add_subcommand("mellin", "Mellin transform of a symbol");
  mellin->add_option("--symbol", symbol_text, "radial symbol, e.g. \"3*r^-1 - r^3\"")
      ->required();
  mellin->add_option("--z", zs, "evaluation points (z >= 2)")->required();
  mellin->add_flag("--json", mellin_json, "machine-readable report");

  // rank
  CommonOpts rank_opts;
  std::string space_text = "h", sym1_text, sym2_text, psi_text, kind_text =
      "commutator";
  int k1 = 0, k2 = 0;
  CLI::App* rank = app.add_subcommand(
      "rank", "rank report for a commutator or generalized semicommutator");
  rank->add_option("--space", space_text, "h (harmonic) or a (Bergman)")
      ->check(CLI::IsMember({"h", "a"}));
  rank->add_option("--k1", k1, "degree of the first symbol")->required();
  rank->add_option("--sym1", sym1_text, "radial part of the first symbol")
      ->required();
  rank->add_option("--k2", k2, "degree of the second symbol")->required();
  rank->add_option("--sym2", sym2_text, "radial part of the second symbol")
      ->required();
  rank->add_option("--psi", psi_text, "subtracted symbol (gensemi only)");
  rank->add_option("--kind", kind_text, "commutator or gensemi")
      ->check(CLI::IsMember({"commutator", "gensemi"}));
  rank->add_option("--margin", rank_opts.margin, "vanishing margin beyond the support");
  rank->add_option("--tol", rank_opts.tol, "coefficient zero tolerance");
  rank->add_flag("--json", rank_opts.json, "machine-readable report");

  // classify
  CommonOpts classify_opts;
  std::string family = "h-commute";
  int ck1 = 0, ck2 = 0;
  double cm = 0.0, cm2 = 0.0;
  CLI::App* classify = app.add_subcommand(
      "classify",
      "which finite-rank condition a parameter tuple satisfies, with the "
      "constructed symbols, cross-validated");
  classify->add_option("--family", family,
                       "h-commute | h-gensemi | b-commute | b-gensemi")
      ->check(CLI::IsMember({"h-commute", "h-gensemi", "b-commute",
                             "b-gensemi"}));
  classify->add_option("--k1", ck1)->required();
  classify->add_option("--k2", ck2)->required();
  classify->add_option("--m", cm, "exponent of the first monomial (>= -1)")
      ->required();
  classify->add_option("--m2", cm2, "second exponent (b-gensemi only)");
  classify->add_option("--margin", classify_opts.margin);
  classify->add_option("--tol", classify_opts.tol);
  classify->add_flag("--json", classify_opts.json);

  // verify
  CommonOpts verify_opts;
  std::string theorem = "all", grid_text;
  CLI::App* verify = app.add_subcommand("verify", "batch verification sweeps");
  verify->add_option("--theorem", theorem,
                     "h-commute | h-gensemi | b-commute | b-gensemi | "
                     "cross-space | corollaries | lamre | oracles | "
                     "monotonicity | negative-control | examples | all");
  verify->add_option("--grid", grid_text, "e.g. \"k1=-6..6,k2=-6..6,m=-1..7\"");
  verify->add_option("--margin", verify_opts.margin, "vanishing margin");
  verify->add_option("--tol", verify_opts.tol, "coefficient zero tolerance");
  verify->add_option("--csv", verify_opts.csv_path, "write per-cell CSV here");
  verify->add_flag("--json", verify_opts.json, "machine-readable report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mellin->parsed()) return run_mellin(symbol_text, zs, mellin_json);
    if (rank->parsed()) {
      return run_rank(space_text, k1, sym1_text, k2, sym2_text, psi_text,
                      kind_text, rank_opts);
    }
    if (classify->parsed()) {
      return run_classify(family, ck1, ck2, cm, cm2, classify_opts);
    }
    if (verify->parsed()) return run_verify(theorem, grid_text, verify_opts);
  } catch (const SymbolParseError& e) {
    std::cerr << "symbol parse error at position " << e.pos << ": " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include "qhtop/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace qhtop {

namespace {

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

}  // namespace

json to_json(const RadialSymbol& s) {
  json terms = json::array();
  for (const SymbolTerm& t : s.terms()) {
    terms.push_back({{"coeff", t.coeff}, {"power", t.power}, {"log", t.log_exp}});
  }
  return {{"terms", terms}, {"text", s.str()}};
}

json to_json(const GammaRatioTransform& g) {
  return {{"prefactor", g.prefactor},
          {"scale", g.scale},
          {"num_offsets", g.num_offsets},
          {"den_offsets", g.den_offsets}};
}

json to_json(const MellinTransform& t) {
  json out;
  if (const GammaRatioTransform* g = t.gamma_side()) {
    out["gamma_ratio"] = to_json(*g);
  }
  if (const RadialSymbol* s = t.symbol_witness()) {
    out["symbol"] = to_json(*s);
  } else if (t.gamma_side() != nullptr) {
    out["symbol"] = "not rational";
  }
  return out;
}

json to_json(const CanonicalTerm& t) {
  json out = {{"index", t.index}, {"coeff", t.coeff}};
  if (t.partner) out["partner"] = *t.partner;
  return out;
}

json to_json(const RankReport& r) {
  json canonical = json::array();
  for (const CanonicalTerm& t : r.canonical) canonical.push_back(to_json(t));
  return {{"rank", r.rank},
          {"range", r.range},
          {"canonical", canonical},
          {"finite_rank_at_window", r.margin_ok},
          {"worst_margin_coeff", r.worst_margin},
          {"checked_window", {r.checked_lo, r.checked_hi}},
          {"range_in_lambda", r.range_in_lambda},
          {"parity_ok", r.parity_ok},
          {"bound_ok", r.bound_ok},
          {"pairing_ok", r.pairing_ok},
          {"tol", r.tol},
          {"note", r.note}};
}

json to_json(const TheoremVerdict& v) {
  json symbols = json::array();
  for (const ConstructedSymbol& s : v.symbols) {
    symbols.push_back({{"role", s.role}, {"transform", to_json(s.transform)}});
  }
  json out = {{"k1", v.k1},
              {"k2", v.k2},
              {"m", v.m},
              {"conditions", v.conditions},
              {"finite_rank", v.finite_rank},
              {"predicted_rank", v.predicted_rank},
              {"predicted_range", v.predicted_range},
              {"range_exact", v.range_exact},
              {"symbols", symbols}};
  if (v.theorem == TheoremId::BGenSemiMonomial) out["m2"] = v.m2;
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json to_json(const CellRecord& r) {
  json out = {{"check", r.check},
              {"k1", r.k1},
              {"k2", r.k2},
              {"m", r.m},
              {"m2", r.m2},
              {"condition", r.condition},
              {"constructible", r.constructible},
              {"pass", r.pass}};
  if (r.predicted_rank >= 0) out["predicted_rank"] = r.predicted_rank;
  if (r.computed_rank >= 0) out["computed_rank"] = r.computed_rank;
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

json to_json(const SweepSummary& s) {
  json failures = json::array();
  for (const CellRecord& r : s.records) {
    if (!r.pass) failures.push_back(to_json(r));
  }
  return {{"name", s.name},
          {"cells", s.cells},
          {"validated", s.validated},
          {"failed", s.failed},
          {"odd_rank_count", s.odd_rank_count},
          {"pass", s.pass()},
          {"failures", failures}};
}

json make_envelope(const std::string& command, json inputs, json outputs,
                   bool passed, json tolerances, json window) {
  return {{"schema", "toeplitz-qh/1"},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"outputs", std::move(outputs)},
          {"tolerances", std::move(tolerances)},
          {"window", std::move(window)},
          {"passed", passed},
          {"timestamp", iso_timestamp()}};
}

std::string csv_from_records(const std::vector<CellRecord>& records) {
  std::ostringstream os;
  os << "check,k1,k2,m,m2,condition,constructible,pass,predicted_rank,"
        "computed_rank,detail\n";
  for (const CellRecord& r : records) {
    std::string detail = r.detail;
    for (char& c : detail) {
      if (c == ',' || c == '\n') c = ';';
    }
    os << r.check << ',' << r.k1 << ',' << r.k2 << ',' << r.m << ',' << r.m2
       << ',' << r.condition << ',' << (r.constructible ? 1 : 0) << ','
       << (r.pass ? 1 : 0) << ',' << r.predicted_rank << ','
       << r.computed_rank << ',' << detail << '\n';
  }
  return os.str();
}

}  // namespace qhtop

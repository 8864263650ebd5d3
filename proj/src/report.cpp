#include "cheby/report.hpp"

namespace cheby {

Json json_of(const Rational& r) { return to_string(r); }

Json json_of(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json json_of(const Triangle& t) {
  Json j;
  j["a"] = to_string(t.a());
  j["b"] = to_string(t.b());
  j["c"] = to_string(t.c());
  j["class"] = t.degenerate() ? "degenerate" : "non-degenerate";
  return j;
}

Json json_of(const PointSet& s) {
  Json arr = Json::array();
  for (const auto& p : s.points()) arr.push_back(json_of(p));
  return arr;
}

Json json_of(const IndexTriple& t) { return Json::array({t[0], t[1], t[2]}); }

Json json_of(const Segment& s) {
  Json j;
  j["axis"] = s.axis == Axis::Horizontal ? "horizontal" : "vertical";
  j["anchor"] = json_of(s.anchor);
  j["length"] = to_string(s.length);
  j["end"] = json_of(s.other_end());
  return j;
}

Json json_of(const ShiftVector& v) { return Json::array({to_string(v.dx), to_string(v.dy)}); }

Json json_of(const LineColoring& c) {
  Json j;
  j["period"] = to_string(c.period());
  Json breaks = Json::array();
  for (const auto& b : c.breaks()) breaks.push_back(to_string(b));
  j["breaks"] = breaks;
  j["colors"] = c.colors();
  return j;
}

Json json_of(const AvoidanceVerdict& v) {
  Json j;
  j["avoids"] = v.avoids;
  if (v.violation) {
    Json w;
    w["x"] = to_string(v.violation->x);
    w["x_plus_d"] = to_string(v.violation->x + v.violation->d);
    w["d"] = to_string(v.violation->d);
    j["violation"] = w;
  }
  return j;
}

Json json_of(const ChromaticResult& r) {
  Json j;
  Json lower;
  lower["value"] = r.lower.chi;
  lower["window"] = r.lower.window;
  Json refuted = Json::array();
  for (const auto& [k, nodes] : r.lower.refuted) {
    Json e;
    e["colors"] = k;
    e["nodes"] = nodes;
    refuted.push_back(e);
  }
  lower["refuted"] = refuted;
  lower["witness"] = r.lower.witness;
  j["lower"] = lower;
  Json upper;
  upper["found"] = r.upper.found;
  upper["value"] = r.upper.colors;
  upper["max_period"] = r.upper.max_period;
  if (r.upper.witness) upper["witness"] = json_of(*r.upper.witness);
  j["upper"] = upper;
  j["status"] = r.status == BoundStatus::Exact ? "exact" : "bounds";
  return j;
}

Json json_of(const LiftCertificate& c) {
  Json j;
  j["certified"] = c.certified;
  j["route"] = c.route == LiftAxis::Horizontal ? "horizontal" : "diagonal";
  Json d = Json::array();
  for (const auto& v : c.distances.values()) d.push_back(to_string(v));
  j["distances"] = d;
  if (c.verdict) j["verdict"] = json_of(*c.verdict);
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

Json json_of(const SampleVerdict& v) {
  Json j;
  j["counterexample_found"] = v.counterexample_found;
  if (v.witness) {
    Json w = Json::array();
    for (const auto& p : *v.witness) w.push_back(json_of(p));
    j["witness"] = w;
  }
  j["grid_side"] = v.grid_side;
  j["vacuous"] = v.vacuous;
  j["is_certificate"] = false;
  j["note"] = v.note;
  return j;
}

Json json_of(const ShiftParity& p) {
  Json j;
  switch (p.value) {
    case ParityValue::Period: j["value"] = "period"; break;
    case ParityValue::AntiPeriod: j["value"] = "anti-period"; break;
    case ParityValue::Neither: j["value"] = "neither"; break;
  }
  if (p.same_witness) j["same_witness"] = json_of(*p.same_witness);
  if (p.diff_witness) j["diff_witness"] = json_of(*p.diff_witness);
  return j;
}

Json json_of(const Obligation& o) {
  Json j;
  Json pts = Json::array();
  for (const auto& p : o.points) pts.push_back(json_of(p));
  j["points"] = pts;
  switch (o.kind) {
    case ObligationKind::Copy: j["expected"] = "copy"; break;
    case ObligationKind::Reflection: j["expected"] = "reflection"; break;
    case ObligationKind::Containment: j["expected"] = "containment"; break;
  }
  j["verified"] = o.verified;
  j["note"] = o.note;
  return j;
}

Json json_of(const AntiperiodReport& r) {
  Json j;
  j["hypothesis"] = r.hypothesis;
  Json antis = Json::array();
  for (const auto& v : r.anti_periods) antis.push_back(json_of(v));
  j["anti_periods"] = antis;
  Json periods = Json::array();
  for (const auto& p : r.periods) {
    Json e;
    e["vector"] = json_of(p.period);
    Json terms = Json::array();
    for (const auto& [sign, v] : p.terms) {
      Json term;
      term["sign"] = sign;
      term["anti_period"] = json_of(v);
      terms.push_back(term);
    }
    e["decomposition"] = terms;
    periods.push_back(e);
  }
  j["periods"] = periods;
  j["search_bound"] = r.search_bound;
  if (r.certificate) {
    Json c;
    c["n"] = (*r.certificate)[0];
    c["m"] = (*r.certificate)[1];
    c["k"] = (*r.certificate)[2];
    c["value"] = to_string(r.certificate_value);
    j["certificate"] = c;
    Json extras = Json::array();
    for (const auto& v : r.extra_anti_periods) extras.push_back(json_of(v));
    j["extra_anti_periods"] = extras;
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

Json json_of(const ForcedLinesReport& r) {
  Json j;
  j["hypothesis"] = "line y=0 monochromatic";
  Json lines = Json::array();
  for (const auto& y : r.forced_lines) lines.push_back(to_string(y));
  j["forced_lines"] = lines;
  j["search_bound"] = r.search_bound;
  if (r.certificate) {
    Json c;
    c["n"] = (*r.certificate)[0];
    c["m"] = (*r.certificate)[1];
    c["value"] = to_string(r.certificate_value);
    j["certificate"] = c;
  } else {
    j["certificate"] = nullptr;
  }
  Json obs = Json::array();
  for (const auto& o : r.obligations) obs.push_back(json_of(o));
  j["obligations"] = obs;
  return j;
}

Json json_of(const DeductionTrace& t) {
  Json j;
  j["case"] = t.isosceles ? "isosceles" : "general";
  j["base_length"] = to_string(t.base_length);
  j["growth"] = to_string(t.growth);
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json e;
    e["level"] = s.level;
    e["color"] = s.color;
    e["segment"] = json_of(s.segment);
    e["length"] = to_string(s.segment.length);
    steps.push_back(e);
  }
  j["steps"] = steps;
  Json obs = Json::array();
  for (const auto& o : t.obligations) obs.push_back(json_of(o));
  j["obligations"] = obs;
  return j;
}

Json json_of(const ChromaticSolve& s) {
  Json j;
  j["exceeded"] = s.exceeded;
  if (!s.exceeded) {
    j["chi"] = s.chi;
    j["coloring"] = s.coloring;
    j["nodes"] = s.nodes;
  }
  Json refuted = Json::array();
  for (const auto& [k, nodes] : s.refuted) {
    Json e;
    e["colors"] = k;
    e["nodes"] = nodes;
    refuted.push_back(e);
  }
  j["refuted"] = refuted;
  j["deterministic"] = s.deterministic;
  return j;
}

Json json_of(const SubsetSolve& s) {
  Json j;
  j["alpha"] = s.alpha;
  j["witness"] = s.witness;
  j["nodes"] = s.nodes;
  j["deterministic"] = s.deterministic;
  return j;
}

Json json_of(const CopyHypergraph& h) {
  Json j;
  j["n"] = h.vertex_count;
  Json edges = Json::array();
  for (const auto& e : h.edges) edges.push_back(json_of(e));
  j["edges"] = edges;
  j["triangle"] = json_of(h.triangle);
  j["points"] = json_of(h.points);
  return j;
}

Json json_of(const WitnessSearchResult& r) {
  Json j;
  j["found"] = r.found;
  if (r.found) j["witness"] = json_of(r.witness);
  j["best_chi"] = r.best_chi;
  j["sets_examined"] = r.sets_examined;
  j["note"] = r.note;
  return j;
}

Json json_of(const PlaneChiResult& r) {
  Json j;
  j["lower"] = r.lower;
  Json w = Json::array();
  for (const auto& p : r.lower_witness) w.push_back(json_of(p));
  j["lower_witness_copy"] = w;
  if (r.upper) {
    j["upper"] = *r.upper;
    j["upper_route"] = *r.upper_route == LiftAxis::Horizontal ? "horizontal" : "diagonal";
  } else {
    j["upper"] = nullptr;
  }
  auto route4 = [](const PlaneChiRoute& route) {
    Json e;
    e["applicable"] = route.applicable;
    if (route.applicable) e["line"] = json_of(route.line_result);
    return e;
  };
  j["side_route"] = route4(r.side_route);
  j["diag_route"] = route4(r.diag_route);
  j["exact"] = r.exact;
  if (r.exact) j["chi"] = *r.upper;
  return j;
}

namespace {

Json json_of_cells(const std::vector<GridPoint>& cells) {
  Json arr = Json::array();
  for (const auto& c : cells) arr.push_back(Json::array({c.x, c.y}));
  return arr;
}

Json json_of_dims(const TorusDims& d) {
  Json arr = Json::array();
  arr.push_back(d.nx);
  if (d.dimension == 2) arr.push_back(d.ny);
  return arr;
}

}  // namespace

Json json_of(const DensityLowerBound& b) {
  Json j;
  j["dims"] = json_of_dims(b.dims);
  j["witness"] = json_of_cells(b.cells);
  j["lower"] = to_string(b.value);
  j["nodes"] = b.nodes;
  return j;
}

Json json_of(const DensityUpperBound& b) {
  Json j;
  j["dims"] = json_of_dims(b.dims);
  j["alpha"] = b.alpha;
  j["witness"] = json_of_cells(b.witness);
  j["upper"] = to_string(b.value);
  j["nodes"] = b.nodes;
  return j;
}

Json make_report(const std::string& subcommand, Json config, Json result, double timing_ms) {
  Json j;
  Json tool;
  tool["name"] = "cheby-ramsey";
  tool["version"] = "0.1.0";
  j["tool"] = tool;
  j["subcommand"] = subcommand;
  j["config"] = std::move(config);
  j["result"] = std::move(result);
  Json det;
  det["thread_count_independent"] = true;
  j["determinism"] = det;
  j["timing_ms"] = timing_ms;
  return j;
}

std::string report_to_string(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace cheby

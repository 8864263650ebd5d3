#pragma once

#include <json.hpp>

#include "cheby/deduction.hpp"
#include "cheby/density.hpp"
#include "cheby/geometry.hpp"
#include "cheby/hypergraph.hpp"
#include "cheby/line_coloring.hpp"
#include "cheby/plane_coloring.hpp"

namespace cheby {

using Json = nlohmann::ordered_json;

// JSON building blocks shared by the CLI and the test suites. All field
// orders are fixed so reports are byte-stable across runs and thread
// counts.
Json json_of(const Rational& r);
Json json_of(const Point& p);
Json json_of(const Triangle& t);
Json json_of(const PointSet& s);
Json json_of(const IndexTriple& t);
Json json_of(const Segment& s);
Json json_of(const ShiftVector& v);
Json json_of(const LineColoring& c);
Json json_of(const AvoidanceVerdict& v);
Json json_of(const ChromaticResult& r);
Json json_of(const LiftCertificate& c);
Json json_of(const SampleVerdict& v);
Json json_of(const ShiftParity& p);
Json json_of(const Obligation& o);
Json json_of(const AntiperiodReport& r);
Json json_of(const ForcedLinesReport& r);
Json json_of(const DeductionTrace& t);
Json json_of(const ChromaticSolve& s);
Json json_of(const SubsetSolve& s);
Json json_of(const CopyHypergraph& h);
Json json_of(const WitnessSearchResult& r);
Json json_of(const PlaneChiResult& r);
Json json_of(const DensityLowerBound& b);
Json json_of(const DensityUpperBound& b);

// Report envelope: tool identity, config echo, payload, determinism
// attestation and timing. Everything except timing_ms is byte-stable.
Json make_report(const std::string& subcommand, Json config, Json result, double timing_ms);

// Serializes with a trailing newline; the stable on-disk form.
std::string report_to_string(const Json& report);

}  // namespace cheby

#pragma once

// Text and JSON forms.  Display form writes alpha as "a" and ascending
// exponents ("1 + q^a + q^2a"); the canonical machine form is
// "c*q^(p/r) + ..." with terms in descending exponent order, which is also
// the order used in JSON dumps.

#include <string>
#include <vector>

#include "json.hpp"
#include "ktrace/paths.hpp"
#include "ktrace/satake.hpp"
#include "ktrace/shim.hpp"
#include "ktrace/traces.hpp"
#include "ktrace/zel.hpp"

namespace ktrace {

std::string qpoly_pretty(const QPoly& p);
std::string qpoly_canonical(const QPoly& p);
QPoly qpoly_from_canonical(const std::string& text);

nlohmann::json qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

nlohmann::json sympoly_to_json(const SymPoly& f);
nlohmann::json trace_result_to_json(const TraceResult& r);
nlohmann::json tpath_to_json(const TPath& t);
std::string tpath_ascii(const TPath& t);

std::string segment_str(const Segment& s);
std::string segments_str(const std::vector<Segment>& segs);

// "(x,y);(x,y);..." with rationals "p/q"; "*" and "()" give the star and
// empty segments.
std::vector<Segment> parse_segments(const std::string& text);

// Places: "s=2;s=3", "sv=1,1|sv=3" ('|' and ';' both separate places).
std::vector<PlaceData> parse_places(const std::string& text);

// Rigid data: "y=3;x=1,1|y=3;x=2" ('|' separates places, ';' fields).
// Every place must declare the same y.
GlobalRigidSpec parse_rigid(const std::string& text, long long n);

std::vector<std::string> split(const std::string& text, char sep);

}  // namespace ktrace

#pragma once

#include <string>
#include <vector>

#include "bsmap/entropy.hpp"

namespace bsmap::io {

/// Shortest-17-significant-digit decimal form; round-trips exactly.
std::string fmt17(double x);

/// Polygon document: genus, P/Q angle lists, vertices as [re, im] pairs,
/// pairings as 8 reals each (row-major, re/im interleaved), plus metrics.
std::string polygon_json(const MarkedPolygon& poly);
MarkedPolygon parse_polygon_json(const std::string& text);

std::string params_json(const FenchelNielsen6& p);
FenchelNielsen6 parse_params_json(const std::string& text);

std::string report_json(const EntropyReport& report, const MarkedPolygon& poly);

/// Header "param,value,perimeter,entropy,h_top", one row per sweep value.
std::string sweep_csv(const SweepResult& result);

/// Header "u_angle,w_angle".
std::string attractor_csv(const std::vector<GeodesicPair>& pairs);

std::string check_lines(const std::vector<Check>& checks);

}  // namespace bsmap::io

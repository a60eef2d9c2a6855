#include "bsmap/io.hpp"

#include <cstdio>

#include <json.hpp>

namespace bsmap::io {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

using nlohmann::json;

void append_array(std::string& out, const std::vector<double>& values) {
  out.push_back('[');
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out.push_back(',');
    out += fmt17(values[k]);
  }
  out.push_back(']');
}

}  // namespace

std::string polygon_json(const MarkedPolygon& poly) {
  const PolygonMetrics m = metrics(poly);
  std::string out = "{\n  \"genus\": " + std::to_string(poly.genus) + ",\n  \"P\": ";
  std::vector<double> tmp;
  tmp.reserve(poly.n);
  for (const BoundaryPoint& p : poly.endpoints_p) tmp.push_back(p.angle);
  append_array(out, tmp);
  out += ",\n  \"Q\": ";
  tmp.clear();
  for (const BoundaryPoint& q : poly.endpoints_q) tmp.push_back(q.angle);
  append_array(out, tmp);
  out += ",\n  \"vertices\": [";
  for (int i = 0; i < poly.n; ++i) {
    if (i) out.push_back(',');
    out += "[" + fmt17(poly.vertices[i].z.real()) + "," + fmt17(poly.vertices[i].z.imag()) + "]";
  }
  out += "],\n  \"T\": [";
  for (int i = 0; i < poly.n; ++i) {
    if (i) out.push_back(',');
    const DiskMoebius& t = poly.pairings[i];
    append_array(out, {t.a.real(), t.a.imag(), t.b.real(), t.b.imag(),
                       t.c.real(), t.c.imag(), t.d.real(), t.d.imag()});
  }
  out += "],\n  \"metrics\": {\n    \"perimeter\": " + fmt17(m.perimeter) +
         ",\n    \"area\": " + fmt17(m.area) + ",\n    \"side_lengths\": ";
  append_array(out, m.side_lengths);
  out += ",\n    \"interior_angles\": ";
  append_array(out, m.interior_angles);
  out += "\n  }\n}\n";
  return out;
}

MarkedPolygon parse_polygon_json(const std::string& text) {
  const json doc = json::parse(text);
  MarkedPolygon poly;
  poly.genus = doc.at("genus").get<int>();
  poly.n = 8 * poly.genus - 4;
  for (const auto& a : doc.at("P")) poly.endpoints_p.push_back(BoundaryPoint(a.get<double>()));
  for (const auto& a : doc.at("Q")) poly.endpoints_q.push_back(BoundaryPoint(a.get<double>()));
  for (const auto& v : doc.at("vertices")) {
    if (v.size() != 2) throw Error("vertex entry needs 2 reals");
    poly.vertices.push_back(DiskPoint(Complex(v[0].get<double>(), v[1].get<double>())));
  }
  for (const auto& row : doc.at("T")) {
    if (row.size() != 8) throw Error("pairing entry needs 8 reals");
    poly.pairings.push_back(DiskMoebius{{row[0].get<double>(), row[1].get<double>()},
                                        {row[2].get<double>(), row[3].get<double>()},
                                        {row[4].get<double>(), row[5].get<double>()},
                                        {row[6].get<double>(), row[7].get<double>()}});
  }
  if (static_cast<int>(poly.endpoints_p.size()) != poly.n ||
      static_cast<int>(poly.endpoints_q.size()) != poly.n ||
      static_cast<int>(poly.vertices.size()) != poly.n ||
      static_cast<int>(poly.pairings.size()) != poly.n)
    throw Error("polygon document has wrong list sizes");
  ensure_valid(poly);
  return poly;
}

std::string params_json(const FenchelNielsen6& p) {
  return "{\n  \"alpha\": " + fmt17(p.alpha) + ",\n  \"beta\": " + fmt17(p.beta) +
         ",\n  \"gamma\": " + fmt17(p.gamma) + ",\n  \"sigma\": " + fmt17(p.sigma_t) +
         ",\n  \"tau\": " + fmt17(p.tau_t) + ",\n  \"rho\": " + fmt17(p.rho_t) + "\n}\n";
}

FenchelNielsen6 parse_params_json(const std::string& text) {
  const json doc = json::parse(text);
  FenchelNielsen6 p;
  p.alpha = doc.at("alpha").get<double>();
  p.beta = doc.at("beta").get<double>();
  p.gamma = doc.at("gamma").get<double>();
  p.sigma_t = doc.at("sigma").get<double>();
  p.tau_t = doc.at("tau").get<double>();
  p.rho_t = doc.at("rho").get<double>();
  return p;
}

std::string report_json(const EntropyReport& report, const MarkedPolygon& poly) {
  std::string out = "{\n";
  out += "  \"genus\": " + std::to_string(report.genus) + ",\n";
  out += "  \"formula_value\": " + fmt17(report.formula_value) + ",\n";
  out += "  \"H_of_g\": " + fmt17(report.h_of_g) + ",\n";
  out += "  \"perimeter\": " + fmt17(report.perimeter) + ",\n";
  out += "  \"h_top\": " + fmt17(report.h_top) + ",\n";
  if (report.nu_mass) {
    out += "  \"nu_mass\": {\"value\": " + fmt17(report.nu_mass->value) +
           ", \"std_error\": " + fmt17(report.nu_mass->std_error) + "},\n";
    out += "  \"quadrature_value\": {\"value\": " + fmt17(report.quadrature_value->value) +
           ", \"std_error\": " + fmt17(report.quadrature_value->std_error) + "},\n";
  } else {
    out += "  \"nu_mass\": null,\n  \"quadrature_value\": null,\n";
  }
  if (report.birkhoff) {
    out += "  \"birkhoff\": {\"value\": " + fmt17(report.birkhoff->estimate) +
           ", \"nsteps\": " + std::to_string(report.birkhoff->nsteps) +
           ", \"spread\": " + fmt17(report.birkhoff->spread) + "},\n";
  } else {
    out += "  \"birkhoff\": null,\n";
  }
  out += "  \"samples\": " + std::to_string(report.samples) + ",\n";
  out += "  \"nsteps\": " + std::to_string(report.nsteps) + ",\n";
  out += "  \"seed\": " + std::to_string(report.seed) + ",\n";
  std::string poly_doc = polygon_json(poly);
  if (!poly_doc.empty() && poly_doc.back() == '\n') poly_doc.pop_back();
  out += "  \"polygon\": " + poly_doc + "\n}\n";
  return out;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = "param,value,perimeter,entropy,h_top\n";
  for (const SweepRow& row : result.rows) {
    out += result.parameter + "," + fmt17(row.parameter_value) + "," +
           fmt17(row.perimeter) + "," + fmt17(row.entropy) + "," + fmt17(row.h_top) + "\n";
  }
  return out;
}

std::string attractor_csv(const std::vector<GeodesicPair>& pairs) {
  std::string out = "u_angle,w_angle\n";
  for (const GeodesicPair& p : pairs)
    out += fmt17(p.u.angle) + "," + fmt17(p.w.angle) + "\n";
  return out;
}

std::string check_lines(const std::vector<Check>& checks) {
  std::string out;
  for (const Check& c : checks) {
    out += (c.pass ? "PASS " : "FAIL ") + c.name + " " + fmt17(c.observed) + " " +
           fmt17(c.expected) + " " + fmt17(c.tolerance) + "\n";
  }
  return out;
}

}  // namespace bsmap::io

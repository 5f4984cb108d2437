#include "stabadams/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace stabadams {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string method_to_json(const MethodSpec& method) {
  std::ostringstream out;
  out << "{\"k\":" << method.k << ",\"p\":" << method.p
      << ",\"epsilon\":" << format_number(method.epsilon) << ",\"beta\":[";
  for (int j = 0; j < method.k; ++j) {
    if (j) out << ",";
    out << format_number(method.beta.beta[static_cast<size_t>(j)]);
  }
  out << "],\"ell\":" << format_number(method.ell)
      << ",\"error_const\":" << format_number(method.error_const) << "}";
  return out.str();
}

MethodSpec method_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  MethodSpec m;
  m.k = j.at("k").get<int>();
  m.p = j.at("p").get<int>();
  m.epsilon = j.at("epsilon").get<double>();
  m.beta = AdamsCoefficients(j.at("beta").get<std::vector<double>>());
  m.ell = j.at("ell").get<double>();
  m.error_const = j.at("error_const").get<double>();
  if (m.beta.k != m.k) throw std::runtime_error("method JSON: beta length does not match k");
  return m;
}

void write_text_file(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

void write_method_file(const MethodSpec& method, const std::string& path) {
  write_text_file(method_to_json(method) + "\n", path);
}

MethodSpec read_method_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open method file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return method_from_json(buf.str());
}

std::string locus_to_csv(const LocusCurve& curve) {
  std::ostringstream out;
  out << "phi,re,im\n";
  for (const LocusPoint& p : curve.points)
    out << format_number(p.phi) << "," << format_number(p.mu.real()) << ","
        << format_number(p.mu.imag()) << "\n";
  return out.str();
}

std::string convergence_to_csv(const ConvergenceReport& report) {
  std::ostringstream out;
  out << "tau,error,status\n";
  for (const ConvergencePoint& p : report.points) {
    out << format_number(p.tau) << ",";
    if (p.status == RunStatus::OK)
      out << format_number(p.error) << ",OK\n";
    else
      out << "," << "DIVERGED\n";
  }
  return out.str();
}

namespace {

struct Box {
  double xmin, xmax, ymin, ymax;
};

std::string svg_header(const Box& box, double& sx, double& sy, double& ox, double& oy) {
  const double width = 640.0, height = 480.0, margin = 40.0;
  double dx = box.xmax - box.xmin, dy = box.ymax - box.ymin;
  if (dx <= 0) dx = 1.0;
  if (dy <= 0) dy = 1.0;
  sx = (width - 2 * margin) / dx;
  sy = (height - 2 * margin) / dy;
  ox = margin - box.xmin * sx;
  oy = height - margin + box.ymin * sy;  // y axis points up
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out.str();
}

void svg_axes(std::ostringstream& out, const Box& box, double sx, double sy, double ox, double oy) {
  // Axis lines through the origin when it is inside the box.
  if (box.ymin <= 0 && box.ymax >= 0)
    out << "<line x1=\"" << box.xmin * sx + ox << "\" y1=\"" << oy << "\" x2=\""
        << box.xmax * sx + ox << "\" y2=\"" << oy << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  if (box.xmin <= 0 && box.xmax >= 0)
    out << "<line x1=\"" << ox << "\" y1=\"" << oy - box.ymax * sy << "\" x2=\"" << ox
        << "\" y2=\"" << oy - box.ymin * sy << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
}

}  // namespace

std::string locus_to_svg(const LocusCurve& curve) {
  Box box{0, 0, 0, 0};
  for (const LocusPoint& p : curve.points) {
    box.xmin = std::min(box.xmin, p.mu.real());
    box.xmax = std::max(box.xmax, p.mu.real());
    box.ymin = std::min(box.ymin, p.mu.imag());
    box.ymax = std::max(box.ymax, p.mu.imag());
  }
  double sx, sy, ox, oy;
  std::ostringstream out;
  out << svg_header(box, sx, sy, ox, oy);
  svg_axes(out, box, sx, sy, ox, oy);
  out << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"";
  for (const LocusPoint& p : curve.points)
    out << p.mu.real() * sx + ox << "," << oy - p.mu.imag() * sy << " ";
  // Close the curve back to phi = 0.
  if (!curve.points.empty())
    out << curve.points.front().mu.real() * sx + ox << ","
        << oy - curve.points.front().mu.imag() * sy;
  out << "\"/>\n</svg>\n";
  return out.str();
}

std::string convergence_to_svg(const ConvergenceReport& report) {
  Box box{1e300, -1e300, 1e300, -1e300};
  std::vector<std::pair<double, double>> pts;  // (log10 tau, log10 err)
  for (const ConvergencePoint& p : report.points) {
    if (p.status != RunStatus::OK || !(p.error > 0)) continue;
    double x = std::log10(p.tau), y = std::log10(p.error);
    pts.emplace_back(x, y);
    box.xmin = std::min(box.xmin, x);
    box.xmax = std::max(box.xmax, x);
    box.ymin = std::min(box.ymin, y);
    box.ymax = std::max(box.ymax, y);
  }
  if (pts.empty()) box = {0, 1, 0, 1};
  double sx, sy, ox, oy;
  std::ostringstream out;
  out << svg_header(box, sx, sy, ox, oy);
  svg_axes(out, box, sx, sy, ox, oy);
  out << "<polyline fill=\"none\" stroke=\"#b23b1f\" stroke-width=\"1.5\" points=\"";
  for (auto& [x, y] : pts) out << x * sx + ox << "," << oy - y * sy << " ";
  out << "\"/>\n";
  for (auto& [x, y] : pts)
    out << "<circle cx=\"" << x * sx + ox << "\" cy=\"" << oy - y * sy
        << "\" r=\"3\" fill=\"#b23b1f\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace stabadams

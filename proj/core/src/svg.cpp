#include "holomotion/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "holomotion/errors.hpp"

namespace holomotion {

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  // avoid "-0.000000"
  if (std::string(buf) == "-0.000000") return "0.000000";
  return buf;
}

// Plane coordinates with the imaginary axis pointing up.
class Canvas {
 public:
  explicit Canvas(std::string title) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-2 -2 4 4\" "
            "width=\"640\" height=\"640\">\n"
         << "  <title>" << title << "</title>\n"
         << "  <rect x=\"-2\" y=\"-2\" width=\"4\" height=\"4\" fill=\"white\"/>\n";
  }

  void polyline(const std::vector<Complex>& pts, const std::string& cls,
                const std::string& stroke, const std::string& extra = "") {
    out_ << "  <polyline class=\"" << cls << "\"" << extra << " fill=\"none\" stroke=\""
         << stroke << "\" stroke-width=\"0.012\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k) out_ << ' ';
      out_ << fixed(pts[k].real()) << ',' << fixed(-pts[k].imag());
    }
    out_ << "\"/>\n";
  }

  void marker(Complex z, const std::string& label, const std::string& fill = "black") {
    out_ << "  <circle class=\"marker\" data-label=\"" << label << "\" data-re=\""
         << fixed(z.real()) << "\" data-im=\"" << fixed(z.imag()) << "\" cx=\""
         << fixed(z.real()) << "\" cy=\"" << fixed(-z.imag()) << "\" r=\"0.02\" fill=\""
         << fill << "\"/>\n";
    out_ << "  <text x=\"" << fixed(z.real() + 0.04) << "\" y=\"" << fixed(-z.imag() - 0.04)
         << "\" font-size=\"0.12\">" << label << "</text>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

std::vector<Complex> circle_points(double radius, int points) {
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(points) + 1);
  for (int k = 0; k <= points; ++k) {
    pts.push_back(radius * unit_phase(static_cast<double>(k) / points));
  }
  return pts;
}

// f_{a_n} on the parameter range between the critical points c1 and c2,
// which traces the image arc once from v1 to v2.
std::vector<Complex> image_arc_points(const ConstructionParams& p, int points) {
  const FactoredRational f = blaschke_map(p.a_n);
  const double start = std::arg(critical_data(p.a_n).c1) / kTwoPi;
  const double end = 1.0 - start;
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double theta = start + (end - start) * k / (points - 1);
    pts.push_back(f(unit_phase(theta)).value());
  }
  return pts;
}

void require_points(int points) {
  if (points < 512) throw DomainError("figures need at least 512 points per curve");
}

}  // namespace

FigureDocument image_arc_figure(const ConstructionParams& p, int points) {
  require_points(points);
  const CriticalData cd = critical_data(p.a_n);
  Canvas canvas("The image of T under f_a");
  canvas.polyline(circle_points(1.0, points), "unit-circle", "#999999");
  canvas.polyline(image_arc_points(p, points), "image-arc", "#c0392b");
  canvas.marker(cd.v1, "v1");
  canvas.marker(cd.v2, "v2");
  canvas.marker(1.0, "1");
  return {"fig1.svg", canvas.finish()};
}

FigureDocument power_image_figure(const ConstructionParams& p, int points) {
  require_points(points);
  Canvas canvas("The image of f_a(T) under q_n");
  canvas.polyline(circle_points(1.0, points), "unit-circle", "#999999");
  std::vector<Complex> image = image_arc_points(p, points);
  for (Complex& z : image) {
    Complex w{1.0, 0.0};
    for (int k = 0; k < p.n; ++k) w *= z;
    z = w;
  }
  canvas.polyline(image, "power-image", "#2471a3");
  canvas.marker(-1.0, "-1");
  canvas.marker(1.0, "1");
  return {"fig2.svg", canvas.finish()};
}

FigureDocument annulus_figure(const ConstructionParams& p, int points) {
  require_points(points);
  Canvas canvas("The annulus A");
  canvas.polyline(circle_points(1.0, points), "unit-circle", "#999999");
  for (double radius : {1.0 / p.R, p.R}) {
    canvas.polyline(circle_points(radius, points), "annulus-boundary", "#1e8449",
                    " data-radius=\"" + fixed(radius) + "\"");
  }
  canvas.polyline(circle_points(p.r, points), "disk-boundary", "#7d3c98",
                  " data-radius=\"" + fixed(p.r) + "\"");
  canvas.marker(0.0, "0");
  canvas.marker(p.z0, "z0", "#c0392b");
  canvas.marker(1.0 / p.a_n, "1/a_n", "#2471a3");
  return {"fig3.svg", canvas.finish()};
}

std::vector<FigureDocument> render_figures(const ConstructionParams& p, int points) {
  return {image_arc_figure(p, points), power_image_figure(p, points),
          annulus_figure(p, points)};
}

}  // namespace holomotion

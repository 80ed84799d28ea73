#include "inscribe/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace inscribe {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

void RenderSpec::validate() const {
  if (periods < 1) throw std::invalid_argument("render: viewport must cover >= 1 period");
  if (samples_per_period < 8 || width_px < 64)
    throw std::invalid_argument("render: sampling or size too small");
}

std::string render_svg(const PeriodicCurve& g1, const PeriodicCurve& g2,
                       const std::vector<Inscription>& inscriptions, const RenderSpec& spec) {
  spec.validate();

  double x_min = spec.x_min, x_max = spec.x_max;
  if (x_min == x_max) {
    const double N = std::max(g1.strip_halfwidth(), g2.strip_halfwidth());
    x_min = -N - 0.3;
    x_max = N + 0.3;
  }
  const double y_min = -0.15, y_max = spec.periods + 0.15;
  const double scale = spec.width_px / (x_max - x_min);
  const double height_px = (y_max - y_min) * scale;

  auto X = [&](double x) { return (x - x_min) * scale; };
  auto Y = [&](double y) { return (y_max - y) * scale; };  // y grows upward

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(spec.width_px) +
         "\" height=\"" + num(height_px) + "\" viewBox=\"0 0 " + num(spec.width_px) + " " +
         num(height_px) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const double stroke_px = spec.stroke_width * scale;
  const PeriodicCurve* curves[2] = {&g1, &g2};
  for (int ci = 0; ci < 2; ++ci) {
    const PeriodicCurve& curve = *curves[ci];
    const double pad = curve.drift_bound() + 0.3;
    const double t_lo = y_min - pad, t_hi = y_max + pad;
    const int n = static_cast<int>(std::ceil((t_hi - t_lo) * spec.samples_per_period));
    std::string d;
    for (int i = 0; i <= n; ++i) {
      const double t = t_lo + (t_hi - t_lo) * i / n;
      const Complex p = curve.eval(t);
      d += (i == 0 ? "M" : " L") + num(X(p.real())) + " " + num(Y(p.imag()));
    }
    svg += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + spec.curve_colors[ci] +
           "\" stroke-width=\"" + num(stroke_px) + "\"/>\n";
  }

  if (spec.draw_inscriptions) {
    for (const Inscription& ins : inscriptions) {
      const auto& v = ins.vertices;
      std::string quad;
      for (int i = 0; i < 4; ++i)
        quad += (i == 0 ? "M" : " L") + num(X(v[i].real())) + " " + num(Y(v[i].imag()));
      quad += " Z";
      svg += "<path d=\"" + quad + "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"" +
             num(stroke_px) + "\"/>\n";
      if (spec.draw_diagonals) {
        for (int i : {0, 1}) {
          svg += "<line x1=\"" + num(X(v[i].real())) + "\" y1=\"" + num(Y(v[i].imag())) +
                 "\" x2=\"" + num(X(v[i + 2].real())) + "\" y2=\"" + num(Y(v[i + 2].imag())) +
                 "\" stroke=\"#bb3333\" stroke-width=\"" + num(0.7 * stroke_px) +
                 "\" stroke-dasharray=\"" + num(4.0) + " " + num(3.0) + "\"/>\n";
        }
      }
      for (int i = 0; i < 4; ++i) {
        svg += "<circle cx=\"" + num(X(v[i].real())) + "\" cy=\"" + num(Y(v[i].imag())) +
               "\" r=\"" + num(std::max(2.5, 1.4 * stroke_px)) + "\" fill=\"#222222\"/>\n";
        if (spec.label_vertices) {
          svg += "<text x=\"" + num(X(v[i].real()) + 5.0) + "\" y=\"" +
                 num(Y(v[i].imag()) - 5.0) + "\" font-size=\"" +
                 num(std::max(10.0, 0.02 * spec.width_px)) +
                 "\" font-family=\"sans-serif\" fill=\"#222222\">p" + std::to_string(i + 1) +
                 "</text>\n";
        }
      }
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace inscribe

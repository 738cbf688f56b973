#include "flatmod/svg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace flatmod {

namespace {

using C = std::complex<double>;

struct Frame {
  double x_min, x_max, y_max, scale;

  double px(double x) const { return (x - x_min) * scale; }
  double py(double y) const { return (y_max - y) * scale; }
  double width() const { return (x_max - x_min) * scale; }
  double height() const { return y_max * scale; }
};

bool at_infinity(C z) { return std::isinf(z.imag()); }

std::string num(double x) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << (std::abs(x) < 0.005 ? 0.0 : x);
  return os.str();
}

// Path command continuing from p to q along the geodesic.
std::string geodesic_to(C p, C q, const Frame& f) {
  std::ostringstream os;
  double top = f.y_max + 1;
  if (at_infinity(q)) {
    os << " L " << num(f.px(p.real())) << " " << num(f.py(top));
  } else if (at_infinity(p)) {
    os << " L " << num(f.px(q.real())) << " " << num(f.py(top)) << " L " << num(f.px(q.real())) << " "
       << num(f.py(q.imag()));
  } else if (std::abs(p.real() - q.real()) < 1e-12) {
    os << " L " << num(f.px(q.real())) << " " << num(f.py(q.imag()));
  } else {
    double center = (std::norm(p) - std::norm(q)) / (2 * (p.real() - q.real()));
    double radius = std::abs(p - center) * f.scale;
    int sweep = q.real() > p.real() ? 1 : 0;
    os << " A " << num(radius) << " " << num(radius) << " 0 0 " << sweep << " " << num(f.px(q.real())) << " "
       << num(f.py(q.imag()));
  }
  return os.str();
}

C midpoint(C p, C q, double y_max) {
  if (at_infinity(q)) std::swap(p, q);
  if (at_infinity(p)) return {q.real(), std::min(y_max - 0.2, q.imag() + 0.5)};
  if (std::abs(p.real() - q.real()) < 1e-12) return {p.real(), (p.imag() + q.imag()) / 2};
  double center = (std::norm(p) - std::norm(q)) / (2 * (p.real() - q.real()));
  double a = std::arg(p - center), b = std::arg(q - center);
  return center + std::abs(p - center) * std::polar(1.0, (a + b) / 2);
}

}  // namespace

std::string render_svg(const FundamentalDomain& domain, const SvgOptions& options) {
  double lo = -0.5, hi = 0.5;
  for (const auto& e : domain.edges)
    for (C z : {e.from.numeric(), e.to.numeric()})
      if (!at_infinity(z)) {
        lo = std::min(lo, z.real());
        hi = std::max(hi, z.real());
      }
  Frame f{lo - 0.25, hi + 0.25, options.y_max, options.pixels_per_unit};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(f.width()) << "\" height=\"" << num(f.height())
     << "\" viewBox=\"0 0 " << num(f.width()) << " " << num(f.height()) << "\">\n";
  os << "<defs><clipPath id=\"h\"><rect x=\"0\" y=\"0\" width=\"" << num(f.width()) << "\" height=\""
     << num(f.height()) << "\"/></clipPath></defs>\n";
  os << "<title>" << domain.table.subgroup.name << "</title>\n";
  os << "<g clip-path=\"url(#h)\" stroke=\"black\" stroke-width=\"1\">\n";
  std::size_t n = domain.cell_count();
  for (std::size_t c = 0; c < n; ++c) {
    const Edge* e = &domain.edges[4 * c];
    // Boundary order: infinity, rho, i, rho + 1.
    C corners[4] = {e[0].to.numeric(), e[0].from.numeric(), e[1].to.numeric(), e[3].from.numeric()};
    std::ostringstream path;
    C start = corners[0];
    if (at_infinity(start)) {
      path << "M " << num(f.px(corners[3].real())) << " " << num(f.py(f.y_max + 1));
    } else {
      path << "M " << num(f.px(start.real())) << " " << num(f.py(start.imag()));
    }
    for (int k = 0; k < 4; ++k) path << geodesic_to(corners[k], corners[(k + 1) % 4], f);
    path << " Z";
    os << "<path d=\"" << path.str() << "\" fill=\"hsl(" << (c * 360 / n) << ", 60%, 82%)\"/>\n";
  }
  os << "</g>\n<g font-family=\"monospace\" font-size=\"10\">\n";
  os << "<line x1=\"0\" y1=\"" << num(f.py(0)) << "\" x2=\"" << num(f.width()) << "\" y2=\"" << num(f.py(0))
     << "\" stroke=\"gray\"/>\n";
  for (std::size_t c = 0; c < n; ++c) {
    C centre = mobius(domain.table.representatives[c], {0, 1.4});
    if (centre.imag() > options.y_max) centre = {centre.real(), options.y_max - 0.4};
    os << "<text x=\"" << num(f.px(centre.real())) << "\" y=\"" << num(f.py(centre.imag()))
       << "\" text-anchor=\"middle\">" << to_string(domain.table.words[c]) << "</text>\n";
  }
  for (std::size_t k = 0; k < domain.pairings.size(); ++k) {
    const auto& p = domain.pairings[k];
    for (auto [edge, label] : {std::pair{p.source, std::string("p")}, std::pair{p.target, std::string("p")}}) {
      const Edge& e = domain.edges[edge];
      C m = midpoint(e.from.numeric(), e.to.numeric(), options.y_max);
      std::string text = label + std::to_string(k + 1) + (edge == p.source ? " " + to_string(p.matrix) : "'");
      os << "<text x=\"" << num(f.px(m.real())) << "\" y=\"" << num(f.py(m.imag())) << "\" fill=\"darkred\">"
         << text << "</text>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace flatmod

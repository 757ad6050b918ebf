#include "orlicz/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace orlicz {

namespace {
void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("grid function length does not match the space");
}
}  // namespace

MeasureSpace::MeasureSpace(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("measure space needs at least one cell");
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw std::invalid_argument("cell weights must be positive and finite");
    total_ += w;
  }
}

GridFunction::GridFunction(std::vector<double> v) : values(std::move(v)) {
  for (double x : values)
    if (!std::isfinite(x)) throw std::invalid_argument("grid function values must be finite");
}

GridFunction GridFunction::constant(double c, std::size_t n) {
  return GridFunction(std::vector<double>(n, c));
}

GridFunction operator*(double a, const GridFunction& x) {
  GridFunction y = x;
  for (double& v : y.values) v *= a;
  return y;
}

GridFunction operator+(const GridFunction& x, const GridFunction& y) {
  require_same_size(x.size(), y.size());
  GridFunction z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}

GridFunction operator-(const GridFunction& x, const GridFunction& y) {
  require_same_size(x.size(), y.size());
  GridFunction z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
  return z;
}

double coupling(const MeasureSpace& space, const GridFunction& y, const GridFunction& x) {
  require_same_size(y.size(), space.size());
  require_same_size(x.size(), space.size());
  double s = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) s += y[i] * x[i] * space.weight(i);
  return s;
}

double l2_norm(const MeasureSpace& space, const GridFunction& x) {
  require_same_size(x.size(), space.size());
  double s = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) s += x[i] * x[i] * space.weight(i);
  return std::sqrt(s);
}

Indicator indicator(const MeasureSpace& space, const std::vector<std::size_t>& cells) {
  if (cells.empty())
    throw std::invalid_argument("indicator needs a nonempty subset (norm formulas divide by mu(D))");
  GridFunction chi = GridFunction::constant(0.0, space.size());
  double mu_d = 0.0;
  for (std::size_t c : cells) {
    if (c >= space.size()) throw std::invalid_argument("indicator cell index out of range");
    if (chi[c] == 0.0) mu_d += space.weight(c);
    chi[c] = 1.0;
  }
  return {std::move(chi), mu_d};
}

GridFunction truncate_below(const GridFunction& x, double threshold) {
  if (!(threshold >= 0.0)) throw std::invalid_argument("threshold must be nonnegative");
  GridFunction y = x;
  for (double& v : y.values)
    if (std::abs(v) < threshold) v = 0.0;
  return y;
}

MeasureSpace refine(const MeasureSpace& space, int factor) {
  if (factor < 2) throw std::invalid_argument("refine factor must be at least 2");
  std::vector<double> w;
  w.reserve(space.size() * static_cast<std::size_t>(factor));
  for (std::size_t i = 0; i < space.size(); ++i) {
    const double part = space.weight(i) / factor;
    for (int k = 0; k < factor; ++k) w.push_back(part);
  }
  return MeasureSpace(std::move(w));
}

GridFunction lift(const GridFunction& x, int factor) {
  if (factor < 2) throw std::invalid_argument("refine factor must be at least 2");
  std::vector<double> v;
  v.reserve(x.size() * static_cast<std::size_t>(factor));
  for (double xv : x.values)
    for (int k = 0; k < factor; ++k) v.push_back(xv);
  return GridFunction(std::move(v));
}

}  // namespace orlicz

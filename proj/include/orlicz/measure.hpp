// Finite discrete measure spaces and grid functions: the desk-scale stand-in
// for a finite continuous measure space. Continuity (atomlessness) is modeled
// by the refine operation; every norm computation is invariant under lifting
// to a refined space.
#pragma once

#include <cstddef>
#include <vector>

namespace orlicz {

class MeasureSpace {
 public:
  /// Throws std::invalid_argument unless all weights are positive and finite.
  explicit MeasureSpace(std::vector<double> weights);

  std::size_t size() const { return weights_.size(); }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }
  double total() const { return total_; }

 private:
  std::vector<double> weights_;
  double total_ = 0.0;
};

struct GridFunction {
  std::vector<double> values;

  GridFunction() = default;
  /// Throws std::invalid_argument if any value is non-finite.
  explicit GridFunction(std::vector<double> v);
  static GridFunction constant(double c, std::size_t n);

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
};

GridFunction operator*(double a, const GridFunction& x);
GridFunction operator+(const GridFunction& x, const GridFunction& y);
GridFunction operator-(const GridFunction& x, const GridFunction& y);

/// <y, x> = sum_i y_i x_i mu_i (real scalars; conjugation is the identity).
double coupling(const MeasureSpace& space, const GridFunction& y, const GridFunction& x);

/// sqrt(sum x_i^2 mu_i)
double l2_norm(const MeasureSpace& space, const GridFunction& x);

struct Indicator {
  GridFunction chi;
  double measure;  // mu(D)
};

/// Characteristic function of a nonempty cell subset, with its measure.
Indicator indicator(const MeasureSpace& space, const std::vector<std::size_t>& cells);

/// Keeps x_i when |x_i| >= threshold, zeroes the rest (ties kept).
GridFunction truncate_below(const GridFunction& x, double threshold);

/// Splits every cell into `factor` equal parts. Total measure is preserved.
MeasureSpace refine(const MeasureSpace& space, int factor);

/// Lifts a grid function to the refined space by value repetition.
GridFunction lift(const GridFunction& x, int factor);

}  // namespace orlicz

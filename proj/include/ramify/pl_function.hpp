#pragma once

#include <vector>

#include "ramify/rat.hpp"

namespace ramify {

// Continuous, strictly increasing piecewise-linear map on [x0, inf).
class PLFunction {
 public:
  struct Point {
    Rat x, y;
    friend bool operator==(const Point&, const Point&) = default;
  };

  // points[0] is the left end of the domain; final_slope applies after the last point.
  PLFunction(std::vector<Point> points, Rat final_slope);
  static PLFunction identity();

  Rat eval(const Rat& x) const;
  PLFunction inverse() const;

  const Rat& x0() const { return pts_.front().x; }
  const std::vector<Point>& points() const { return pts_; }
  // Points after the left end, i.e. the genuine slope changes.
  std::vector<Point> knots() const;
  std::vector<Rat> slopes() const;  // one per segment, the last being final_slope
  const Rat& final_slope() const { return final_; }
  Rat initial_slope() const { return slopes().front(); }

  friend bool operator==(const PLFunction& a, const PLFunction& b) {
    return a.pts_ == b.pts_ && a.final_ == b.final_;
  }

 private:
  void simplify();
  std::vector<Point> pts_;
  Rat final_;
};

}  // namespace ramify

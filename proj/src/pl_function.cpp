#include "ramify/pl_function.hpp"

#include "ramify/errors.hpp"

namespace ramify {

PLFunction::PLFunction(std::vector<Point> points, Rat final_slope)
    : pts_(std::move(points)), final_(std::move(final_slope)) {
  if (pts_.empty()) throw DomainError("piecewise-linear function needs a start point");
  if (final_.sign() <= 0) throw DomainError("non-monotone piecewise-linear function");
  for (std::size_t i = 1; i < pts_.size(); ++i)
    if (!(pts_[i].x > pts_[i - 1].x) || !(pts_[i].y > pts_[i - 1].y))
      throw DomainError("non-monotone piecewise-linear function");
  simplify();
}

PLFunction PLFunction::identity() { return PLFunction({{Rat(0), Rat(0)}}, Rat(1)); }

void PLFunction::simplify() {
  // drop interior points where the slope does not change
  std::vector<Point> out{pts_.front()};
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    Rat s_in = (pts_[i].y - out.back().y) / (pts_[i].x - out.back().x);
    Rat s_out = i + 1 < pts_.size() ? (pts_[i + 1].y - pts_[i].y) / (pts_[i + 1].x - pts_[i].x) : final_;
    if (s_in != s_out) out.push_back(pts_[i]);
  }
  pts_ = std::move(out);
}

Rat PLFunction::eval(const Rat& x) const {
  if (x < pts_.front().x) throw DomainError("argument below domain");
  std::size_t i = 0;
  while (i + 1 < pts_.size() && pts_[i + 1].x <= x) ++i;
  if (i + 1 == pts_.size()) return pts_[i].y + final_ * (x - pts_[i].x);
  Rat s = (pts_[i + 1].y - pts_[i].y) / (pts_[i + 1].x - pts_[i].x);
  return pts_[i].y + s * (x - pts_[i].x);
}

PLFunction PLFunction::inverse() const {
  std::vector<Point> swapped;
  swapped.reserve(pts_.size());
  for (const auto& p : pts_) swapped.push_back({p.y, p.x});
  return PLFunction(std::move(swapped), Rat(1) / final_);
}

std::vector<PLFunction::Point> PLFunction::knots() const {
  return std::vector<Point>(pts_.begin() + 1, pts_.end());
}

std::vector<Rat> PLFunction::slopes() const {
  std::vector<Rat> s;
  for (std::size_t i = 1; i < pts_.size(); ++i)
    s.push_back((pts_[i].y - pts_[i - 1].y) / (pts_[i].x - pts_[i - 1].x));
  s.push_back(final_);
  return s;
}

}  // namespace ramify

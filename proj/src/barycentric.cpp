// Copyright 2026 The Cevian Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cevian/barycentric.hpp"

namespace cevian {

BaryLine join(const BaryPoint& p, const BaryPoint& q) {
  Vec3 c = p.coeffs().cross(q.coeffs());
  if (is_zero_vec(c)) {
    throw CoincidentPoints("join of projectively equal points");
  }
  return BaryLine(std::move(c));
}

BaryPoint meet(const BaryLine& l, const BaryLine& m) {
  Vec3 c = l.coeffs().cross(m.coeffs());
  if (is_zero_vec(c)) {
    throw CoincidentLines("meet of projectively equal lines");
  }
  return BaryPoint(std::move(c));
}

ArealPoint normalize(const BaryPoint& p) {
  const Rational sum = p.coordinate_sum();
  if (sum.is_zero()) {
    throw PointAtInfinity("zero coordinate sum has no areal form");
  }
  Vec3 c = p.coeffs() / sum;
  return ArealPoint(std::move(c), ArealPoint::Unchecked{});
}

BaryPoint divide_segment(const BaryPoint& p, const BaryPoint& q,
                         const Rational& a, const Rational& b) {
  if (a.is_zero() && b.is_zero()) {
    throw DegenerateInput("division ratio 0 : 0");
  }
  const ArealPoint ph = normalize(p);
  const ArealPoint qh = normalize(q);
  return BaryPoint(Vec3(ph.coeffs() * b + qh.coeffs() * a));
}

Rational triangle_ratio_signed(const BaryPoint& p1, const BaryPoint& p2,
                               const BaryPoint& p3) {
  Mat3 m;
  m.row(0) = p1.coeffs().transpose();
  m.row(1) = p2.coeffs().transpose();
  m.row(2) = p3.coeffs().transpose();
  Rational sums = Rational(1);
  for (const BaryPoint* p : {&p1, &p2, &p3}) {
    const Rational s = p->coordinate_sum();
    if (s.is_zero()) {
      throw PointAtInfinity("area ratio of a point at infinity");
    }
    sums *= s;
  }
  return m.determinant() / sums;
}

Rational polygon_ratio_signed(std::span<const BaryPoint> vertices) {
  if (vertices.size() < 3) {
    throw TooFewVertices("polygon needs at least 3 vertices");
  }
  Rational total = 0;
  for (std::size_t i = 1; i + 1 < vertices.size(); ++i) {
    total += triangle_ratio_signed(vertices[0], vertices[i], vertices[i + 1]);
  }
  return total;
}

Rational polygon_ratio(std::span<const BaryPoint> vertices) {
  return abs(polygon_ratio_signed(vertices));
}

Rational polygon_ratio(std::initializer_list<BaryPoint> vertices) {
  return polygon_ratio(std::span<const BaryPoint>(vertices.begin(), vertices.size()));
}

bool on_line(const BaryPoint& p, const BaryLine& l) {
  return p.coeffs().dot(l.coeffs()).is_zero();
}

}  // namespace cevian

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

#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <span>
#include <vector>

#include "cevian/rational.hpp"

namespace cevian {

using Vec3 = Eigen::Matrix<Rational, 3, 1>;
using Mat3 = Eigen::Matrix<Rational, 3, 3>;

inline bool is_zero_vec(const Vec3& v) {
  return v(0).is_zero() && v(1).is_zero() && v(2).is_zero();
}

// Homogeneous barycentric point over the reference triangle A1A2A3:
// masses (t1, t2, t3), not all zero. Nonzero scalar multiples denote the
// same point; operator== implements that ratio equality. Triples with
// t1+t2+t3 = 0 are points at infinity (direction classes) and are valid
// values here, but are rejected by the area operations below.
class BaryPoint {
 public:
  BaryPoint(Rational t1, Rational t2, Rational t3)
      : c_((Vec3() << std::move(t1), std::move(t2), std::move(t3)).finished()) {
    check();
  }
  explicit BaryPoint(Vec3 coeffs) : c_(std::move(coeffs)) { check(); }

  const Vec3& coeffs() const { return c_; }
  const Rational& t1() const { return c_(0); }
  const Rational& t2() const { return c_(1); }
  const Rational& t3() const { return c_(2); }

  Rational coordinate_sum() const { return c_(0) + c_(1) + c_(2); }
  bool at_infinity() const { return coordinate_sum().is_zero(); }

  // Projective equality: the coefficient triples are proportional.
  friend bool operator==(const BaryPoint& a, const BaryPoint& b) {
    return is_zero_vec(a.c_.cross(b.c_));
  }
  friend bool operator!=(const BaryPoint& a, const BaryPoint& b) { return !(a == b); }

 private:
  void check() const {
    if (is_zero_vec(c_)) {
      throw DegenerateInput("barycentric point with all coordinates zero");
    }
  }
  Vec3 c_;
};

// Line u1*t1 + u2*t2 + u3*t3 = 0, the projective dual of BaryPoint.
class BaryLine {
 public:
  BaryLine(Rational u1, Rational u2, Rational u3)
      : c_((Vec3() << std::move(u1), std::move(u2), std::move(u3)).finished()) {
    check();
  }
  explicit BaryLine(Vec3 coeffs) : c_(std::move(coeffs)) { check(); }

  const Vec3& coeffs() const { return c_; }

  friend bool operator==(const BaryLine& a, const BaryLine& b) {
    return is_zero_vec(a.c_.cross(b.c_));
  }
  friend bool operator!=(const BaryLine& a, const BaryLine& b) { return !(a == b); }

 private:
  void check() const {
    if (is_zero_vec(c_)) {
      throw DegenerateInput("barycentric line with all coefficients zero");
    }
  }
  Vec3 c_;
};

// Areal coordinates: barycentric masses normalized to sum exactly 1, so
// each coordinate is the signed sub-triangle area fraction.
class ArealPoint {
 public:
  ArealPoint(Rational t1, Rational t2, Rational t3)
      : c_((Vec3() << std::move(t1), std::move(t2), std::move(t3)).finished()) {
    if (c_(0) + c_(1) + c_(2) != Rational(1)) {
      throw DegenerateInput("areal coordinates must sum to 1");
    }
  }

  const Vec3& coeffs() const { return c_; }
  const Rational& t1() const { return c_(0); }
  const Rational& t2() const { return c_(1); }
  const Rational& t3() const { return c_(2); }

  BaryPoint as_bary() const { return BaryPoint(c_); }

  friend bool operator==(const ArealPoint& a, const ArealPoint& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ArealPoint& a, const ArealPoint& b) { return !(a == b); }

 private:
  friend ArealPoint normalize(const BaryPoint&);
  struct Unchecked {};
  ArealPoint(Vec3 coeffs, Unchecked) : c_(std::move(coeffs)) {}
  Vec3 c_;
};

// Line through two distinct points: cross product of the coefficient
// triples. Throws CoincidentPoints when P and Q are projectively equal.
BaryLine join(const BaryPoint& p, const BaryPoint& q);

// Intersection of two distinct lines, the dual cross product.
// Throws CoincidentLines.
BaryPoint meet(const BaryLine& l, const BaryLine& m);

// Rescale so the coordinates sum to 1. Throws PointAtInfinity when the
// sum is zero (the direction class of a parallel pencil).
ArealPoint normalize(const BaryPoint& p);

// Point dividing the segment P->Q in ratio a : b, i.e. b*Phat + a*Qhat on
// the areal normalizations. Negative a or b yields external division.
BaryPoint divide_segment(const BaryPoint& p, const BaryPoint& q,
                         const Rational& a, const Rational& b);

// Coxeter's area-ratio rule: the determinant of the three homogeneous
// rows divided by the product of the row sums. Equal to the signed ratio
// area(P1P2P3) / area(A1A2A3); invariant under rescaling any argument.
Rational triangle_ratio_signed(const BaryPoint& p1, const BaryPoint& p2,
                               const BaryPoint& p3);

// Signed polygon/reference area ratio by fan triangulation from the first
// vertex; positive when the cycle has the reference orientation.
Rational polygon_ratio_signed(std::span<const BaryPoint> vertices);

// |polygon_ratio_signed|; orientation-independent.
Rational polygon_ratio(std::span<const BaryPoint> vertices);
Rational polygon_ratio(std::initializer_list<BaryPoint> vertices);

// Exact incidence test u . t == 0.
bool on_line(const BaryPoint& p, const BaryLine& l);

}  // namespace cevian

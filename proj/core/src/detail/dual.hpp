/*
 * Copyright 2026 The Quadmission Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QUADMISSION_DETAIL_DUAL_HPP_
#define QUADMISSION_DETAIL_DUAL_HPP_

#include <array>
#include <cmath>

namespace quadmission::detail {

// Forward-mode derivative scalar carrying a fixed-width gradient. Wide
// enough duals seeded with unit directions turn one evaluation of a
// function into the function value plus its full Jacobian row block.
template <int Width>
struct Dual {
  double value = 0.0;
  std::array<double, Width> grad{};

  Dual() = default;
  Dual(double v) : value(v) {}  // NOLINT: constants promote implicitly

  static Dual seeded(double v, int slot) {
    Dual d(v);
    d.grad[slot] = 1.0;
    return d;
  }

  Dual operator-() const {
    Dual r(-value);
    for (int i = 0; i < Width; ++i) r.grad[i] = -grad[i];
    return r;
  }

  Dual& operator+=(const Dual& o) {
    value += o.value;
    for (int i = 0; i < Width; ++i) grad[i] += o.grad[i];
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value -= o.value;
    for (int i = 0; i < Width; ++i) grad[i] -= o.grad[i];
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }

  friend Dual operator*(const Dual& a, const Dual& b) {
    Dual r(a.value * b.value);
    for (int i = 0; i < Width; ++i)
      r.grad[i] = a.grad[i] * b.value + a.value * b.grad[i];
    return r;
  }
  friend Dual operator*(const Dual& a, double s) {
    Dual r(a.value * s);
    for (int i = 0; i < Width; ++i) r.grad[i] = a.grad[i] * s;
    return r;
  }
  friend Dual operator*(double s, const Dual& a) { return a * s; }

  friend Dual operator/(const Dual& a, const Dual& b) {
    const double inv = 1.0 / b.value;
    Dual r(a.value * inv);
    for (int i = 0; i < Width; ++i)
      r.grad[i] = (a.grad[i] - r.value * b.grad[i]) * inv;
    return r;
  }
  friend Dual operator/(const Dual& a, double s) { return a * (1.0 / s); }
  friend Dual operator/(double s, const Dual& b) { return Dual(s) / b; }
};

template <int Width>
Dual<Width> sqrt(const Dual<Width>& a) {
  Dual<Width> r(std::sqrt(a.value));
  const double scale = 0.5 / r.value;
  for (int i = 0; i < Width; ++i) r.grad[i] = a.grad[i] * scale;
  return r;
}

// Pass-through so templated code can call sqrt unqualified on doubles.
inline double sqrt(double a) { return std::sqrt(a); }

}  // namespace quadmission::detail

#endif  // QUADMISSION_DETAIL_DUAL_HPP_

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

#ifndef QUADMISSION_DYNAMICS_HPP_
#define QUADMISSION_DYNAMICS_HPP_

#include <Eigen/Dense>

#include "quadmission/errors.hpp"

namespace quadmission {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec13 = Eigen::Matrix<double, 13, 1>;
using Mat13 = Eigen::Matrix<double, 13, 13>;
using Mat13x4 = Eigen::Matrix<double, 13, 4>;

// Rigid-body and actuator parameters of the vehicle. The world frame is
// z-up, so gravity acts along -z and positive motor thrust opposes it.
struct QuadParams {
  double mass = 1.0;                      // kg
  Vec3 inertia{0.01, 0.01, 0.02};         // diagonal of J, kg m^2
  double arm_x = 0.1;                     // rotor distance to the x axis, m
  double arm_y = 0.1;                     // rotor distance to the y axis, m
  double torque_const = 0.01;             // yaw torque per unit thrust, m
  double gravity = 9.81;                  // m/s^2, magnitude
  double motor_thrust_max = 9.81;         // per-motor ceiling, N

  double hover_thrust_per_motor() const { return mass * gravity / 4.0; }

  // Throws ContractViolation if any parameter is non-physical or hover is
  // infeasible (motor_thrust_max must exceed mass*gravity/4).
  void validate() const;
};

// 13-dimensional vehicle state. The attitude quaternion is scalar-first
// (w, x, y, z), Hamilton convention, body-to-world, and is kept unit-norm
// by every factory and integration step.
struct QuadState {
  Vec3 position = Vec3::Zero();      // world frame, m
  Vec3 velocity = Vec3::Zero();      // world frame, m/s
  Vec4 attitude{1.0, 0.0, 0.0, 0.0}; // unit quaternion, body -> world
  Vec3 body_rates = Vec3::Zero();    // body frame, rad/s

  // A level, motionless state at the given position.
  static QuadState rest_level(const Vec3& position);

  // Flat-vector layout used by the solver and the log:
  // [p(3), v(3), q(4), w(3)].
  Vec13 to_vector() const;
  static QuadState from_vector(const Vec13& x);

  void renormalize_attitude();
  bool all_finite() const;

  // Throws ContractViolation if any component is non-finite or the
  // quaternion norm is off by more than 1e-9.
  void validate() const;
};

// Four per-motor thrusts in newtons.
struct MotorCommand {
  Vec4 thrusts = Vec4::Zero();

  static MotorCommand constant(double thrust);
  void validate(const QuadParams& params) const;
};

// Net body-frame actuation: total thrust along body z plus body torques.
struct WrenchBody {
  double thrust_z = 0.0;  // N
  Vec3 torque = Vec3::Zero();  // N m
};

// Maps per-motor thrusts to the collective thrust and body torques:
//   thrust_z = u1 + u2 + u3 + u4
//   tau      = [ -ly  ly  ly -ly ]
//              [ -lx -lx  lx  lx ] * u
//              [  kt -kt  kt -kt ]
WrenchBody motor_mix(const MotorCommand& u, const QuadParams& params);

// Applies the rotation encoded by the unit quaternion q (scalar-first) to
// a vector. Throws ContractViolation if |q| deviates from 1 by more than
// 1e-9.
Vec3 quat_rotate(const Vec4& q, const Vec3& v);

// Continuous-time state derivative:
//   p_dot = v
//   v_dot = R(q) [0,0,thrust_z]^T / m + [0,0,-g]^T
//   q_dot = 0.5 q (x) (0, w)
//   w_dot = J^-1 (tau - w x J w)
Vec13 quad_derivative(const QuadState& x, const MotorCommand& u,
                      const QuadParams& params);

// One classical RK4 step with the input held constant, followed by
// quaternion renormalization.
QuadState rk4_step(const QuadState& x, const MotorCommand& u, double dt,
                   const QuadParams& params);

// Unvalidated flat-vector form of rk4_step. This is the discrete map the
// optimal-control transcription constrains against; it is bit-identical
// to rk4_step on the same inputs.
Vec13 rk4_step_raw(const Vec13& x, const Vec4& u, double dt,
                   const QuadParams& params);

// Exact Jacobians of rk4_step_raw with respect to state and input,
// computed by forward-mode differentiation through the integrator
// (including the final renormalization).
void rk4_step_jacobians(const Vec13& x, const Vec4& u, double dt,
                        const QuadParams& params, Mat13& d_dx, Mat13x4& d_du);

// The input at which a level vehicle is in equilibrium: m*g/4 per motor.
MotorCommand hover_command(const QuadParams& params);

}  // namespace quadmission

#endif  // QUADMISSION_DYNAMICS_HPP_

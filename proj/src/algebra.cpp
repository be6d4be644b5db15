// Copyright 2026 The cnotcert Authors
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

#include "cnotcert/algebra.hpp"

#include <cmath>
#include <string>

namespace cnotcert {

namespace {

const Complex kI(0.0, 1.0);

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

const char* pauli_name(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

Mat2 pauli_matrix(Pauli p) {
  Mat2 m;
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, -kI, kI, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Mat4 tensor(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Mat16 tensor(const Mat4& a, const Mat4& b) {
  Mat16 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
  return out;
}

Vec4 tensor(const Vec2& a, const Vec2& b) {
  Vec4 out;
  out << a(0) * b, a(1) * b;
  return out;
}

Vec2 eigenstate(Pauli basis, int sign) {
  if (basis == Pauli::I)
    throw std::invalid_argument("eigenstate: basis must be X, Y or Z");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("eigenstate: sign must be +1 or -1");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vec2 v;
  switch (basis) {
    case Pauli::Z:
      v = sign > 0 ? Vec2(1, 0) : Vec2(0, 1);
      break;
    case Pauli::X:
      v = Vec2(inv_sqrt2, sign * inv_sqrt2);
      break;
    case Pauli::Y:
      v = Vec2(inv_sqrt2, Complex(0, sign) * inv_sqrt2);
      break;
    default:
      break;
  }
  return v;
}

Mat2 projector(const Vec2& v) { return v * v.adjoint(); }

Mat4 projector(const Vec4& v) { return v * v.adjoint(); }

DensityMatrix::DensityMatrix(const Mat4& m) : m_(m) {
  if (max_abs(m - m.adjoint()) > kPhysicalityTol)
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  if (std::abs(m.trace() - Complex(1.0)) > kPhysicalityTol)
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Mat4> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPhysicalityTol)
    throw std::invalid_argument(
        "DensityMatrix: negative eigenvalue " +
        std::to_string(es.eigenvalues().minCoeff()));
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(Mat4::Identity() * 0.25);
}

DensityMatrix product_state(Pauli b1, int s1, Pauli b2, int s2) {
  const Vec4 v = tensor(eigenstate(b1, s1), eigenstate(b2, s2));
  return DensityMatrix(projector(v));
}

double expectation(const Mat4& state, const Mat4& op) {
  if (max_abs(op - op.adjoint()) > kPhysicalityTol)
    throw std::invalid_argument("expectation: observable is not Hermitian");
  return (op * state).trace().real();
}

double expectation(const DensityMatrix& rho, const Mat4& op) {
  return expectation(rho.matrix(), op);
}

SuperOperator::SuperOperator(const Mat16& m) : m_(m) {
  // Hermiticity preservation: S(rho)^dagger = S(rho^dagger) for all rho,
  // which in the column-stacking convention reads
  //   M(4c+r, 4c'+r') = conj(M(4r+c, 4r'+c')).
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int rp = 0; rp < 4; ++rp)
        for (int cp = 0; cp < 4; ++cp) {
          const Complex lhs = m(4 * c + r, 4 * cp + rp);
          const Complex rhs = std::conj(m(4 * r + c, 4 * rp + cp));
          if (std::abs(lhs - rhs) > kPhysicalityTol)
            throw std::invalid_argument(
                "SuperOperator: matrix is not hermiticity-preserving");
        }
}

SuperOperator SuperOperator::identity() {
  return SuperOperator(Mat16::Identity());
}

SuperOperator SuperOperator::conjugation(const Mat4& u) {
  // vec(u rho u^dagger) = (conj(u) (x) u) vec(rho) for column stacking.
  return SuperOperator(tensor(u.conjugate(), u));
}

SuperOperator SuperOperator::operator+(const SuperOperator& o) const {
  return SuperOperator(m_ + o.m_);
}

SuperOperator SuperOperator::operator-(const SuperOperator& o) const {
  return SuperOperator(m_ - o.m_);
}

SuperOperator SuperOperator::operator*(const SuperOperator& o) const {
  return SuperOperator(m_ * o.m_);
}

SuperOperator operator*(double w, const SuperOperator& s) {
  return SuperOperator(w * s.m_);
}

SuperOperator superop_from_spec(const WeightedKrausSpec& spec) {
  Mat16 m = Mat16::Zero();
  for (const WeightedKrausTerm& term : spec.terms)
    for (const Mat4& k : term.kraus)
      m += term.weight * tensor(k.conjugate(), k);
  return SuperOperator(m);
}

Mat4 SuperOperator::apply(const Mat4& rho) const {
  const Eigen::Map<const Vec16> v(rho.data());
  const Vec16 w = m_ * v;
  return Eigen::Map<const Mat4>(w.data());
}

Mat4 SuperOperator::apply(const DensityMatrix& rho) const {
  return apply(rho.matrix());
}

Mat16 choi_of(const SuperOperator& s) {
  // Choi(4i+r, 4j+c) = [S(|i><j|)](r,c) = M(4c+r, 4j+i).
  const Mat16& m = s.matrix();
  Mat16 choi;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          choi(4 * i + r, 4 * j + c) = m(4 * c + r, 4 * j + i);
  return choi;
}

double choi_min_eigenvalue(const SuperOperator& s) {
  const Mat16 choi = choi_of(s);
  const Mat16 sym = 0.5 * (choi + choi.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat16> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double tp_residual(const SuperOperator& s) {
  const Mat16 choi = choi_of(s);
  Mat4 traced = Mat4::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int r = 0; r < 4; ++r)
        traced(i, j) += choi(4 * i + r, 4 * j + r);
  return max_abs(traced - Mat4::Identity());
}

bool is_cp(const SuperOperator& s, double tol) {
  return choi_min_eigenvalue(s) >= -tol;
}

bool is_tp(const SuperOperator& s, double tol) {
  return tp_residual(s) <= tol;
}

}  // namespace cnotcert

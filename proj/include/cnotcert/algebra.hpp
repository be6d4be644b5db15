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

#ifndef CNOTCERT_ALGEBRA_HPP_
#define CNOTCERT_ALGEBRA_HPP_

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

// Exact two-qubit channel algebra on 4x4 density matrices: Pauli operators,
// product eigenstates, density-matrix validation, and 16x16 superoperators
// with complete-positivity / trace-preservation checks.
//
// Conventions, fixed for the whole library:
//   * qubit one (the control) is the left tensor factor;
//   * Z|0> = |0>, Z|1> = -|1>, Y = iXZ, so Y|0> = i|1>;
//   * superoperators act on column-stacked matrices: entry (r,c) of rho
//     sits at vector index 4*c + r.
// Everything is hard-wired to two qubits; there is no n-qubit generality.

namespace cnotcert {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Mat16 = Eigen::Matrix<Complex, 16, 16>;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;
using Vec16 = Eigen::Matrix<Complex, 16, 1>;

// Physicality checks (hermiticity, trace, positivity) use 1e-10; exact
// algebraic identities are asserted at 1e-12.
inline constexpr double kPhysicalityTol = 1e-10;
inline constexpr double kAlgebraTol = 1e-12;

enum class Pauli { I, X, Y, Z };

const char* pauli_name(Pauli p);

/// The standard 2x2 matrix in the computational basis.
Mat2 pauli_matrix(Pauli p);

// Kronecker products. The left factor is always qubit one.
Mat4 tensor(const Mat2& a, const Mat2& b);
Mat16 tensor(const Mat4& a, const Mat4& b);
Vec4 tensor(const Vec2& a, const Vec2& b);

/// Normalized eigenvector with B v = sign * v and pinned global phases:
/// |Z=+1> = (1,0), |Z=-1> = (0,1), |X=s> = (1,s)/sqrt2, |Y=s> = (1,si)/sqrt2.
/// Rejects basis = I and sign outside {+1,-1}.
Vec2 eigenstate(Pauli basis, int sign);

/// Rank-1 projector |v><v|.
Mat2 projector(const Vec2& v);
Mat4 projector(const Vec4& v);

/// A 4x4 complex matrix validated as a physical state: Hermitian and
/// unit-trace within 1e-10, eigenvalues >= -1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Mat4& m);

  const Mat4& matrix() const { return m_; }

  static DensityMatrix maximally_mixed();

 private:
  Mat4 m_;
};

/// Projector onto eigenstate(b1,s1) (x) eigenstate(b2,s2).
DensityMatrix product_state(Pauli b1, int s1, Pauli b2, int s2);

/// trace(op * state), real part. Rejects non-Hermitian op (1e-10 entrywise);
/// the residual imaginary part (below 1e-10 for Hermitian inputs) is dropped.
double expectation(const Mat4& state, const Mat4& op);
double expectation(const DensityMatrix& rho, const Mat4& op);

/// One weighted Kraus sum: contributes weight * sum_k K rho K^dagger.
struct WeightedKrausTerm {
  double weight = 1.0;
  std::vector<Mat4> kraus;
};

/// A real-linear combination of Kraus sums. Negative weights are allowed;
/// the resulting map need not be completely positive.
struct WeightedKrausSpec {
  std::vector<WeightedKrausTerm> terms;
};

/// Linear map on two-qubit density matrices, stored as the 16x16 transfer
/// matrix in the column-stacking convention. Construction rejects matrices
/// that are not hermiticity-preserving; real-linear combinations and
/// compositions of superoperators stay within that class.
class SuperOperator {
 public:
  explicit SuperOperator(const Mat16& m);

  const Mat16& matrix() const { return m_; }

  /// Action of the map; the result is deliberately unvalidated (signed
  /// combinations may produce non-physical intermediates). Wrap the result
  /// in DensityMatrix when a physical state is required.
  Mat4 apply(const Mat4& rho) const;
  Mat4 apply(const DensityMatrix& rho) const;

  static SuperOperator identity();
  /// The unitary conjugation map rho -> u rho u^dagger.
  static SuperOperator conjugation(const Mat4& u);

  SuperOperator operator+(const SuperOperator& o) const;
  SuperOperator operator-(const SuperOperator& o) const;
  /// Composition: (a * b)(rho) = a(b(rho)).
  SuperOperator operator*(const SuperOperator& o) const;

  friend SuperOperator operator*(double w, const SuperOperator& s);

 private:
  Mat16 m_;
};

/// Sum of weight * sum_k K rho K^dagger over all terms, as a transfer matrix.
SuperOperator superop_from_spec(const WeightedKrausSpec& spec);

/// Choi matrix: block (i,j) holds S(|i><j|), i.e. the action on one half of
/// the unnormalized maximally entangled state.
Mat16 choi_of(const SuperOperator& s);

/// Smallest eigenvalue of the (symmetrized) Choi matrix.
double choi_min_eigenvalue(const SuperOperator& s);
/// Max-entry deviation of the output-traced Choi matrix from the identity.
double tp_residual(const SuperOperator& s);

bool is_cp(const SuperOperator& s, double tol = kPhysicalityTol);
bool is_tp(const SuperOperator& s, double tol = kPhysicalityTol);

}  // namespace cnotcert

#endif  // CNOTCERT_ALGEBRA_HPP_

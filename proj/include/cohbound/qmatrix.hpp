// Copyright 2026 The cohbound Authors
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

#ifndef COHBOUND_QMATRIX_HPP
#define COHBOUND_QMATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cohbound {

using Complex = std::complex<double>;

namespace tol {
/// Hermiticity / unit-trace / positivity slack for density matrices.
inline constexpr double kState = 1e-10;
/// Eigenvalues below this are treated as exact zeros in entropies.
inline constexpr double kZeroEigenvalue = 1e-12;
}  // namespace tol

/// Dense square complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
      : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim_ * dim_) {
      throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                                  " entries, got " + std::to_string(data_.size()));
    }
  }

  /// Row-major nested initializer, e.g. {{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) {
        throw std::invalid_argument("ComplexMatrix: ragged initializer");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  static ComplexMatrix diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
  }

  /// |v><v| for a (not necessarily normalized) vector v.
  static ComplexMatrix outer(std::span<const Complex> v) {
    ComplexMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    }
    return m;
  }

  static ComplexMatrix outer(std::initializer_list<Complex> v) {
    return outer(std::span<const Complex>(v.begin(), v.size()));
  }

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    }
    return out;
  }

  Complex trace() const noexcept {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs) {
    require_same_dim(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& rhs) {
    require_same_dim(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
  }

  ComplexMatrix& operator*=(Complex scale) noexcept {
    for (auto& z : data_) z *= scale;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }

  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    lhs.require_same_dim(rhs);
    const std::size_t n = lhs.dim_;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const Complex a = lhs(i, k);
        if (a == Complex{}) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void require_same_dim(const ComplexMatrix& other) const {
    if (other.dim_ != dim_) {
      throw std::invalid_argument("ComplexMatrix: dimension mismatch (" + std::to_string(dim_) +
                                  " vs " + std::to_string(other.dim_) + ")");
    }
  }

  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

inline double hermiticity_defect(const ComplexMatrix& m) { return max_abs_diff(m, m.adjoint()); }

/// 0.5 (m + m^dagger).
inline ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix out = m + m.adjoint();
  out *= 0.5;
  return out;
}

inline bool is_unitary(const ComplexMatrix& u, double tolerance = 1e-9) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim())) <= tolerance;
}

/// Kronecker product: (a (x) b)[i*q + k, j*q + l] = a[i,j] * b[k,l].
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t p = a.dim();
  const std::size_t q = b.dim();
  ComplexMatrix out(p * q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < q; ++k) {
        for (std::size_t l = 0; l < q; ++l) out(i * q + k, j * q + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

namespace pauli {
inline ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix y() { return {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}; }
inline ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

// ---------------------------------------------------------------------------
// Spectral decomposition
// ---------------------------------------------------------------------------

/// Eigen-decomposition of a Hermitian matrix: m = V diag(eigenvalues) V^dagger,
/// eigenvalues ascending, eigenvectors stored as the columns of V.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  std::vector<Complex> eigenvector(std::size_t k) const {
    std::vector<Complex> v(eigenvectors.dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = eigenvectors(i, k);
    return v;
  }

  ComplexMatrix reconstruct() const {
    const std::size_t n = eigenvectors.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          acc += eigenvectors(i, k) * eigenvalues[k] * std::conj(eigenvectors(j, k));
        }
        out(i, j) = acc;
      }
    }
    return out;
  }
};

namespace detail {

inline double off_diagonal_max(const ComplexMatrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) worst = std::max(worst, std::abs(a(i, j)));
    }
  }
  return worst;
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (const auto& z : a.entries()) acc += std::norm(z);
  return std::sqrt(acc);
}

}  // namespace detail

/// Cyclic complex Jacobi eigensolver.
///
/// Each rotation zeroes one off-diagonal pair (p, q). Writing a_pq = |a_pq| e^{i alpha},
/// the rotation is
///   J = [[c, s e^{i alpha}], [-s e^{-i alpha}, c]]  on rows/cols (p, q)
/// with the usual real Jacobi angle computed from |a_pq|. Sweeps stop once every
/// off-diagonal modulus drops below 1e-13 (scaled by max(1, ||m||_F)).
inline Spectrum hermitian_eig(const ComplexMatrix& m, int max_sweeps = 100) {
  if (hermiticity_defect(m) > tol::kState) {
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian (defect " +
                                std::to_string(hermiticity_defect(m)) + ")");
  }
  const std::size_t n = m.dim();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = 1e-13 * std::max(1.0, detail::frobenius_norm(a));

  int sweep = 0;
  while (detail::off_diagonal_max(a) >= threshold) {
    if (sweep++ >= max_sweeps) {
      throw std::runtime_error("hermitian_eig: no convergence after " +
                               std::to_string(max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < std::numeric_limits<double>::min()) continue;
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t =
            (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex jpq = s * phase;
        const Complex jqp = -s * std::conj(phase);

        // a <- a J (columns p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * c + akq * jqp;
          a(k, q) = akp * jpq + akq * c;
        }
        // a <- J^dagger a (rows p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * c + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * c;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  Spectrum out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

/// A validated density matrix: Hermitian, unit trace, positive semidefinite
/// (each within 1e-10).
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    if (mat_.dim() == 0) throw std::invalid_argument("DensityMatrix: empty matrix");
    const double herm = hermiticity_defect(mat_);
    if (herm > tol::kState) {
      throw std::invalid_argument("DensityMatrix: not Hermitian (defect " + std::to_string(herm) +
                                  ")");
    }
    const double trace_err = std::abs(mat_.trace() - 1.0);
    if (trace_err > tol::kState) {
      throw std::invalid_argument("DensityMatrix: trace differs from 1 by " +
                                  std::to_string(trace_err));
    }
    const double min_ev = hermitian_eig(mat_).eigenvalues.front();
    if (min_ev < -tol::kState) {
      throw std::invalid_argument("DensityMatrix: negative eigenvalue " + std::to_string(min_ev));
    }
  }

  /// Wraps a matrix already known to be a state (e.g. a normalized partial
  /// trace); skips the eigen-decomposition check.
  static DensityMatrix trusted(ComplexMatrix m) { return DensityMatrix(std::move(m), TrustedTag{}); }

  static DensityMatrix maximally_mixed(std::size_t dim) {
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= 1.0 / static_cast<double>(dim);
    return trusted(std::move(m));
  }

  /// |psi><psi| / <psi|psi>.
  static DensityMatrix pure(std::span<const Complex> psi) {
    double norm2 = 0.0;
    for (const auto& z : psi) norm2 += std::norm(z);
    if (norm2 <= 0.0) throw std::invalid_argument("DensityMatrix::pure: zero vector");
    ComplexMatrix m = ComplexMatrix::outer(psi);
    m *= 1.0 / norm2;
    return trusted(std::move(m));
  }

  static DensityMatrix pure(std::initializer_list<Complex> psi) {
    return pure(std::span<const Complex>(psi.begin(), psi.size()));
  }

  const ComplexMatrix& mat() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.dim(); }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return mat_(i, j); }

 private:
  struct TrustedTag {};
  DensityMatrix(ComplexMatrix m, TrustedTag) : mat_(std::move(m)) {}

  ComplexMatrix mat_;
};

enum class Subsystem { A, B };

/// Density matrix on H_A (x) H_B with declared local dimensions.
class BipartiteState {
 public:
  BipartiteState(DensityMatrix rho, std::size_t dim_a, std::size_t dim_b)
      : rho_(std::move(rho)), dim_a_(dim_a), dim_b_(dim_b) {
    if (dim_a_ == 0 || dim_b_ == 0 || rho_.dim() != dim_a_ * dim_b_) {
      throw std::invalid_argument("BipartiteState: matrix dimension " + std::to_string(rho_.dim()) +
                                  " != " + std::to_string(dim_a_) + " x " +
                                  std::to_string(dim_b_));
    }
  }

  const DensityMatrix& rho() const noexcept { return rho_; }
  const ComplexMatrix& mat() const noexcept { return rho_.mat(); }
  std::size_t dim_a() const noexcept { return dim_a_; }
  std::size_t dim_b() const noexcept { return dim_b_; }

 private:
  DensityMatrix rho_;
  std::size_t dim_a_;
  std::size_t dim_b_;
};

inline BipartiteState product_state(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  return BipartiteState(DensityMatrix::trusted(tensor(rho_a.mat(), rho_b.mat())), rho_a.dim(),
                        rho_b.dim());
}

/// Partial trace of an arbitrary operator on H_A (x) H_B.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                                   Subsystem keep) {
  if (m.dim() != dim_a * dim_b) {
    throw std::invalid_argument("partial_trace: operator dimension " + std::to_string(m.dim()) +
                                " != " + std::to_string(dim_a) + " x " + std::to_string(dim_b));
  }
  if (keep == Subsystem::B) {
    ComplexMatrix out(dim_b);
    for (std::size_t a = 0; a < dim_a; ++a) {
      for (std::size_t k = 0; k < dim_b; ++k) {
        for (std::size_t l = 0; l < dim_b; ++l) out(k, l) += m(a * dim_b + k, a * dim_b + l);
      }
    }
    return out;
  }
  ComplexMatrix out(dim_a);
  for (std::size_t i = 0; i < dim_a; ++i) {
    for (std::size_t j = 0; j < dim_a; ++j) {
      Complex acc = 0.0;
      for (std::size_t b = 0; b < dim_b; ++b) acc += m(i * dim_b + b, j * dim_b + b);
      out(i, j) = acc;
    }
  }
  return out;
}

inline DensityMatrix partial_trace(const BipartiteState& s, Subsystem keep) {
  return DensityMatrix::trusted(partial_trace(s.mat(), s.dim_a(), s.dim_b(), keep));
}

// ---------------------------------------------------------------------------
// Entropies (base 2)
// ---------------------------------------------------------------------------

namespace detail {

/// Clamps round-off negatives in [-1e-10, 0) to zero; anything more negative
/// means the input was not a state.
inline double checked_eigenvalue(double lambda) {
  if (lambda >= 0.0) return lambda;
  if (lambda >= -tol::kState) return 0.0;
  throw std::invalid_argument("entropy: eigenvalue " + std::to_string(lambda) +
                              " is below the round-off clamp");
}

inline double eta(double lambda) {
  return lambda < tol::kZeroEigenvalue ? 0.0 : -lambda * std::log2(lambda);
}

}  // namespace detail

/// Shannon entropy in bits of a probability vector.
inline double shannon_entropy(std::span<const double> probs) {
  double s = 0.0;
  for (double p : probs) s += detail::eta(detail::checked_eigenvalue(p));
  return s;
}

inline double von_neumann_entropy(const DensityMatrix& rho) {
  const std::size_t n = rho.dim();
  if (n == 1) return 0.0;
  if (n == 2) {
    // Closed form keeps the measurement optimizers off the Jacobi path.
    const double a = rho(0, 0).real();
    const double d = rho(1, 1).real();
    const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(rho(0, 1)));
    const double mean = 0.5 * (a + d);
    const double lambdas[2] = {mean - half_gap, mean + half_gap};
    return shannon_entropy(lambdas);
  }
  const auto spec = hermitian_eig(rho.mat());
  return shannon_entropy(spec.eigenvalues);
}

/// Relative entropy S(rho || sigma) = Tr rho log rho - Tr rho log sigma in bits.
/// Returns +infinity when supp(rho) is not contained in supp(sigma).
inline double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("relative_entropy: dimension mismatch");
  const auto spec = hermitian_eig(sigma.mat());
  double cross = 0.0;  // -Tr rho log sigma
  for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
    const auto v = spec.eigenvector(k);
    double weight = 0.0;  // <v|rho|v>
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        weight += (std::conj(v[i]) * rho(i, j) * v[j]).real();
      }
    }
    const double lambda = detail::checked_eigenvalue(spec.eigenvalues[k]);
    if (lambda < tol::kZeroEigenvalue) {
      if (weight >= tol::kState) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross -= weight * std::log2(lambda);
  }
  const double value = cross - von_neumann_entropy(rho);
  return value < 0.0 && value >= -1e-9 ? 0.0 : value;
}

/// rho* : rho with every off-diagonal entry set to zero.
inline DensityMatrix dephase(const DensityMatrix& rho) {
  ComplexMatrix out(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) out(i, i) = rho(i, i).real();
  return DensityMatrix::trusted(std::move(out));
}

}  // namespace cohbound

#endif  // COHBOUND_QMATRIX_HPP

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qsep {

using Complex = std::complex<double>;

/// Hard cap on the dimension produced by tensor constructions.
inline constexpr std::size_t kDimensionCap = 4096;

/// Maximum allowed deviation from Hermitian symmetry (max-entry norm).
inline constexpr double kHermitianTol = 1e-10;

/// Eigenvalues within kPsdTol of zero are treated as exact zeros; anything
/// below -kPsdTol fails the positivity check.
inline constexpr double kPsdTol = 1e-10;

/// Allowed trace deviation for density matrices.
inline constexpr double kDensityTraceTol = 1e-8;

/// Dense complex vector, immutable after construction.
/// Construction rejects empty vectors and non-finite entries.
class ComplexVector {
 public:
  explicit ComplexVector(std::vector<Complex> entries);

  static ComplexVector zeros(std::size_t dim);
  static ComplexVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::vector<Complex> entries_;
};

/// Dense row-major complex matrix, immutable after construction.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const Complex& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

// Vector algebra. inner_product is conjugate-linear in its first argument.
Complex inner_product(const ComplexVector& a, const ComplexVector& b);
double norm(const ComplexVector& a);
ComplexVector normalized(const ComplexVector& v);
ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b,
                             std::size_t dim_cap = kDimensionCap);

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator-(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator*(const Complex& c, const ComplexVector& v);

// Matrix algebra.
ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const Complex& c, const ComplexMatrix& m);
ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v);

/// |u><v|
ComplexMatrix outer_product(const ComplexVector& u, const ComplexVector& v);
Complex trace(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
double hermiticity_deviation(const ComplexMatrix& m);

/// Eigenvalues sorted descending; vectors[i] is the orthonormal eigenvector
/// belonging to values[i].
struct EigenSystem {
  std::vector<double> values;
  std::vector<ComplexVector> vectors;
};

/// Full eigensystem of a Hermitian matrix. 2x2 inputs use an exact closed
/// form; larger matrices fall back to cyclic Jacobi sweeps.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Hermitian PSD square root. Rejects inputs with an eigenvalue below
/// -kPsdTol; eigenvalues within kPsdTol of zero are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Trace distance between two density matrices, in [0, 1].
double trace_distance(const ComplexMatrix& r1, const ComplexMatrix& r2);

}  // namespace qsep

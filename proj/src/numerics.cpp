#include "qsep/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qsep {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

bool all_finite(const std::vector<Complex>& entries) {
  for (const auto& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

// Closed-form eigensystem of the Hermitian 2x2 block [[m00, m01], [m01*, m11]].
// Picks the numerically larger of the two equivalent eigenvector formulas so
// near-diagonal blocks do not lose the eigenvector direction to cancellation.
struct Eig2 {
  double values[2];
  Complex vectors[2][2];  // vectors[k] belongs to values[k]
};

Eig2 eig2(const Complex& m00, const Complex& m01, const Complex& m11) {
  const double a = m00.real();
  const double d = m11.real();
  const Complex b = m01;
  const double mid = 0.5 * (a + d);
  const double disc = std::hypot(0.5 * (a - d), std::abs(b));

  Eig2 out;
  out.values[0] = mid + disc;
  out.values[1] = mid - disc;

  Complex v0_0, v0_1;
  if (disc == 0.0) {
    v0_0 = 1.0;
    v0_1 = 0.0;
  } else if (a >= d) {
    v0_0 = Complex(out.values[0] - d, 0.0);
    v0_1 = std::conj(b);
  } else {
    v0_0 = b;
    v0_1 = Complex(out.values[0] - a, 0.0);
  }
  const double n0 = std::hypot(std::abs(v0_0), std::abs(v0_1));
  if (n0 == 0.0) {
    v0_0 = 1.0;
    v0_1 = 0.0;
  } else {
    v0_0 /= n0;
    v0_1 /= n0;
  }
  out.vectors[0][0] = v0_0;
  out.vectors[0][1] = v0_1;
  // Exact orthogonal complement carries the second eigenvalue.
  out.vectors[1][0] = -std::conj(v0_1);
  out.vectors[1][1] = std::conj(v0_0);
  return out;
}

// Cyclic Jacobi sweeps, each rotation diagonalizing one 2x2 block exactly.
EigenSystem jacobi_hermitian(std::vector<Complex> a, std::size_t n) {
  std::vector<Complex> v(n * n, Complex(0.0));
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const auto idx = [n](std::size_t r, std::size_t c) { return r * n + c; };

  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(a[idx(i, i)]));

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a[idx(p, q)]));
    if (off <= 1e-14 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[idx(p, q)]) <= 1e-300) continue;
        const Eig2 rot = eig2(a[idx(p, p)], a[idx(p, q)], a[idx(q, q)]);
        // Rotation columns are the block eigenvectors.
        const Complex r00 = rot.vectors[0][0], r10 = rot.vectors[0][1];
        const Complex r01 = rot.vectors[1][0], r11 = rot.vectors[1][1];
        for (std::size_t k = 0; k < n; ++k) {  // A <- R^dag A (rows p, q)
          const Complex ap = a[idx(p, k)], aq = a[idx(q, k)];
          a[idx(p, k)] = std::conj(r00) * ap + std::conj(r10) * aq;
          a[idx(q, k)] = std::conj(r01) * ap + std::conj(r11) * aq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- A R (cols p, q)
          const Complex ap = a[idx(k, p)], aq = a[idx(k, q)];
          a[idx(k, p)] = ap * r00 + aq * r10;
          a[idx(k, q)] = ap * r01 + aq * r11;
        }
        for (std::size_t k = 0; k < n; ++k) {  // V <- V R
          const Complex vp = v[idx(k, p)], vq = v[idx(k, q)];
          v[idx(k, p)] = vp * r00 + vq * r10;
          v[idx(k, q)] = vp * r01 + vq * r11;
        }
        a[idx(p, q)] = 0.0;
        a[idx(q, p)] = 0.0;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[idx(i, i)].real() > a[idx(j, j)].real();
  });

  EigenSystem out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t k : order) {
    out.values.push_back(a[idx(k, k)].real());
    std::vector<Complex> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[idx(i, k)];
    out.vectors.emplace_back(std::move(col));
  }
  return out;
}

// Symmetrized copy (exactly Hermitian, real diagonal).
std::vector<Complex> hermitize(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Complex> h(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h[i * n + j] = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
    }
    h[i * n + i] = Complex(h[i * n + i].real(), 0.0);
  }
  return h;
}

void check_density_matrix(const ComplexMatrix& m, const char* label) {
  require(m.square(), std::string(label) + ": density matrix must be square");
  require(hermiticity_deviation(m) <= kHermitianTol,
          std::string(label) + ": density matrix is not Hermitian");
  require(std::abs(trace(m) - Complex(1.0)) <= kDensityTraceTol,
          std::string(label) + ": density matrix trace differs from 1");
  const EigenSystem es = hermitian_eigensystem(m);
  require(es.values.back() >= -kPsdTol,
          std::string(label) + ": density matrix has a negative eigenvalue");
}

}  // namespace

ComplexVector::ComplexVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  require(!entries_.empty(), "ComplexVector: dimension must be positive");
  require(all_finite(entries_), "ComplexVector: entries must be finite");
}

ComplexVector ComplexVector::zeros(std::size_t dim) {
  return ComplexVector(std::vector<Complex>(dim, Complex(0.0)));
}

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t index) {
  require(index < dim, "ComplexVector::basis: index out of range");
  std::vector<Complex> e(dim, Complex(0.0));
  e[index] = 1.0;
  return ComplexVector(std::move(e));
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(rows_ > 0 && cols_ > 0, "ComplexMatrix: dimensions must be positive");
  require(entries_.size() == rows_ * cols_, "ComplexMatrix: entry count does not match shape");
  require(all_finite(entries_), "ComplexMatrix: entries must be finite");
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols, Complex(0.0)));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  std::vector<Complex> e(n * n, Complex(0.0));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return ComplexMatrix(n, n, std::move(e));
}

Complex inner_product(const ComplexVector& a, const ComplexVector& b) {
  require(a.dim() == b.dim(), "inner_product: dimension mismatch");
  Complex acc(0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm(const ComplexVector& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::norm(a[i]);
  return std::sqrt(acc);
}

ComplexVector normalized(const ComplexVector& v) {
  const double n = norm(v);
  require(n > 0.0, "normalized: zero vector");
  std::vector<Complex> e(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) e[i] = v[i] / n;
  return ComplexVector(std::move(e));
}

ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b,
                             std::size_t dim_cap) {
  require(a.dim() <= dim_cap / b.dim(),
          "tensor_product: result dimension exceeds the cap of " + std::to_string(dim_cap));
  std::vector<Complex> e(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) e[i * b.dim() + j] = a[i] * b[j];
  return ComplexVector(std::move(e));
}

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b) {
  require(a.dim() == b.dim(), "vector sum: dimension mismatch");
  std::vector<Complex> e(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) e[i] = a[i] + b[i];
  return ComplexVector(std::move(e));
}

ComplexVector operator-(const ComplexVector& a, const ComplexVector& b) {
  require(a.dim() == b.dim(), "vector difference: dimension mismatch");
  std::vector<Complex> e(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) e[i] = a[i] - b[i];
  return ComplexVector(std::move(e));
}

ComplexVector operator*(const Complex& c, const ComplexVector& v) {
  std::vector<Complex> e(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) e[i] = c * v[i];
  return ComplexVector(std::move(e));
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  std::vector<Complex> e(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e[j * m.rows() + i] = std::conj(m.at(i, j));
  return ComplexMatrix(m.cols(), m.rows(), std::move(e));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum: shape mismatch");
  std::vector<Complex> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries()[i] + b.entries()[i];
  return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference: shape mismatch");
  std::vector<Complex> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries()[i] - b.entries()[i];
  return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.cols() == b.rows(), "matrix product: shape mismatch");
  std::vector<Complex> e(a.rows() * b.cols(), Complex(0.0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a.at(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) e[i * b.cols() + j] += aik * b.at(k, j);
    }
  return ComplexMatrix(a.rows(), b.cols(), std::move(e));
}

ComplexMatrix operator*(const Complex& c, const ComplexMatrix& m) {
  std::vector<Complex> e(m.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = c * m.entries()[i];
  return ComplexMatrix(m.rows(), m.cols(), std::move(e));
}

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v) {
  require(m.cols() == v.dim(), "matrix-vector product: shape mismatch");
  std::vector<Complex> e(m.rows(), Complex(0.0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e[i] += m.at(i, j) * v[j];
  return ComplexVector(std::move(e));
}

ComplexMatrix outer_product(const ComplexVector& u, const ComplexVector& v) {
  std::vector<Complex> e(u.dim() * v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) e[i * v.dim() + j] = u[i] * std::conj(v[j]);
  return ComplexMatrix(u.dim(), v.dim(), std::move(e));
}

Complex trace(const ComplexMatrix& m) {
  require(m.square(), "trace: matrix must be square");
  Complex acc(0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) acc += m.at(i, i);
  return acc;
}

double max_abs(const ComplexMatrix& m) {
  double acc = 0.0;
  for (const auto& z : m.entries()) acc = std::max(acc, std::abs(z));
  return acc;
}

double hermiticity_deviation(const ComplexMatrix& m) {
  if (!m.square()) return std::numeric_limits<double>::infinity();
  double dev = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      dev = std::max(dev, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
  return dev;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
  require(m.square(), "hermitian_eigensystem: matrix must be square");
  require(hermiticity_deviation(m) <= kHermitianTol,
          "hermitian_eigensystem: matrix is not Hermitian");
  const std::size_t n = m.rows();
  std::vector<Complex> h = hermitize(m);

  if (n == 1) {
    EigenSystem out;
    out.values.push_back(h[0].real());
    out.vectors.push_back(ComplexVector::basis(1, 0));
    return out;
  }
  if (n == 2) {
    const Eig2 e = eig2(h[0], h[1], h[3]);
    EigenSystem out;
    for (int k = 0; k < 2; ++k) {
      out.values.push_back(e.values[k]);
      out.vectors.push_back(ComplexVector({e.vectors[k][0], e.vectors[k][1]}));
    }
    return out;
  }
  return jacobi_hermitian(std::move(h), n);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const EigenSystem es = hermitian_eigensystem(m);
  const std::size_t n = m.rows();
  require(es.values.back() >= -kPsdTol,
          "psd_sqrt: matrix has an eigenvalue below the positivity tolerance");
  std::vector<Complex> e(n * n, Complex(0.0));
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = es.values[k];
    if (lam <= kPsdTol) continue;  // numeric zero
    const double s = std::sqrt(lam);
    const ComplexVector& v = es.vectors[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] += s * v[i] * std::conj(v[j]);
  }
  // The accumulation is Hermitian up to rounding; make it exact.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (e[i * n + j] + std::conj(e[j * n + i]));
      e[i * n + j] = avg;
      e[j * n + i] = std::conj(avg);
    }
    e[i * n + i] = Complex(e[i * n + i].real(), 0.0);
  }
  return ComplexMatrix(n, n, std::move(e));
}

double trace_distance(const ComplexMatrix& r1, const ComplexMatrix& r2) {
  check_density_matrix(r1, "trace_distance (first argument)");
  check_density_matrix(r2, "trace_distance (second argument)");
  require(r1.rows() == r2.rows(), "trace_distance: dimension mismatch");
  const EigenSystem es = hermitian_eigensystem(r1 - r2);
  double acc = 0.0;
  for (double lam : es.values) acc += std::abs(lam);
  return std::clamp(0.5 * acc, 0.0, 1.0);
}

}  // namespace qsep

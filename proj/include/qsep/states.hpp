#pragma once

#include <array>

#include "qsep/numerics.hpp"

namespace qsep {

/// Allowed deviation from unit norm for pure states.
inline constexpr double kUnitNormTol = 1e-10;

/// Pairs whose overlap magnitude reaches 1 - kParallelTol are treated as
/// parallel: they span no plane and have no reciprocal basis.
inline constexpr double kParallelTol = 1e-10;

/// Unit-norm state vector.
class PureState {
 public:
  explicit PureState(ComplexVector vec);

  /// Rescales an arbitrary nonzero vector to unit norm.
  static PureState normalized_from(const ComplexVector& vec);

  std::size_t dim() const { return vec_.dim(); }
  const ComplexVector& vec() const { return vec_; }

 private:
  ComplexVector vec_;
};

/// Two equiprobable pure states with their cached overlap <plus|minus>.
/// Priors are fixed at 1/2 each and never stored.
struct StatePair {
  PureState plus;
  PureState minus;
  Complex overlap;
};

StatePair make_pair(const PureState& a, const PureState& b);

/// Rephases the minus state so the overlap becomes real and non-negative.
/// Physically equivalent pair; idempotent.
StatePair canonicalize(const StatePair& pair);

/// Pair (|0>, cos(theta)|0> + sin(theta)|1>) embedded in `dim` dimensions,
/// so the overlap is cos(theta). Requires 0 <= theta <= pi/2 and dim >= 2.
StatePair angle_pair(double theta, std::size_t dim);

/// States in span{plus, minus} orthogonal to the opposite pair member:
/// perp_plus is orthogonal to minus, perp_minus to plus.
struct ReciprocalPair {
  PureState perp_plus;
  PureState perp_minus;
  Complex denom_plus;   // <perp_plus|plus>
  Complex denom_minus;  // <perp_minus|minus>
};

ReciprocalPair reciprocal_states(const StatePair& pair);

/// Orthonormal basis of span{plus, minus}, plus state first.
struct SpanBasis {
  ComplexVector e0;
  ComplexVector e1;
};

SpanBasis span_basis(const StatePair& pair);
std::array<Complex, 2> span_coords(const SpanBasis& basis, const ComplexVector& v);
ComplexVector from_span_coords(const SpanBasis& basis, const Complex& c0, const Complex& c1);

/// Norm of the part of v outside the span (zero when v lies in it).
double span_residual(const SpanBasis& basis, const ComplexVector& v);

}  // namespace qsep

#include "qsep/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsep {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

PureState::PureState(ComplexVector vec) : vec_(std::move(vec)) {
  require(std::abs(norm(vec_) - 1.0) <= kUnitNormTol, "PureState: vector is not unit norm");
}

PureState PureState::normalized_from(const ComplexVector& vec) {
  return PureState(normalized(vec));
}

StatePair make_pair(const PureState& a, const PureState& b) {
  require(a.dim() == b.dim(), "make_pair: dimension mismatch");
  return StatePair{a, b, inner_product(a.vec(), b.vec())};
}

StatePair canonicalize(const StatePair& pair) {
  const double mag = std::abs(pair.overlap);
  if (mag == 0.0) return pair;
  const Complex phase = std::conj(pair.overlap) / mag;  // rotates the overlap onto [0, inf)
  if (phase == Complex(1.0)) return pair;
  return make_pair(pair.plus, PureState(phase * pair.minus.vec()));
}

StatePair angle_pair(double theta, std::size_t dim) {
  require(theta >= 0.0 && theta <= std::numbers::pi / 2, "angle_pair: theta out of [0, pi/2]");
  require(dim >= 2, "angle_pair: dimension must be at least 2");
  std::vector<Complex> m(dim, Complex(0.0));
  m[0] = std::cos(theta);
  m[1] = std::sin(theta);
  return make_pair(PureState(ComplexVector::basis(dim, 0)), PureState(ComplexVector(std::move(m))));
}

SpanBasis span_basis(const StatePair& pair) {
  require(std::abs(pair.overlap) < 1.0 - kParallelTol,
          "span_basis: states are (near-)parallel, no two-dimensional span");
  const ComplexVector& p = pair.plus.vec();
  const ComplexVector& m = pair.minus.vec();
  const ComplexVector resid = m - (inner_product(p, m) * p);
  return SpanBasis{p, normalized(resid)};
}

std::array<Complex, 2> span_coords(const SpanBasis& basis, const ComplexVector& v) {
  return {inner_product(basis.e0, v), inner_product(basis.e1, v)};
}

ComplexVector from_span_coords(const SpanBasis& basis, const Complex& c0, const Complex& c1) {
  return (c0 * basis.e0) + (c1 * basis.e1);
}

double span_residual(const SpanBasis& basis, const ComplexVector& v) {
  const auto c = span_coords(basis, v);
  return norm(v - from_span_coords(basis, c[0], c[1]));
}

ReciprocalPair reciprocal_states(const StatePair& pair) {
  const SpanBasis basis = span_basis(pair);
  const auto mc = span_coords(basis, pair.minus.vec());  // plus is (1, 0) by construction
  // In span coordinates the state orthogonal to (c0, c1) is (c1*, -c0*).
  const ComplexVector perp_plus =
      from_span_coords(basis, std::conj(mc[1]), -std::conj(mc[0]));
  const PureState pp = PureState::normalized_from(perp_plus);
  const PureState pm(basis.e1);
  return ReciprocalPair{pp, pm, inner_product(pp.vec(), pair.plus.vec()),
                        inner_product(pm.vec(), pair.minus.vec())};
}

}  // namespace qsep

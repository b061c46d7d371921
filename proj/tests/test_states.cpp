#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qsep/states.hpp"
#include "test_util.hpp"

using namespace qsep;
using qsep::test::near;

TEST_CASE("pure states must be unit norm") {
  CHECK_NOTHROW(PureState(ComplexVector::basis(3, 1)));
  CHECK_THROWS_AS(PureState(ComplexVector({0.5, 0.5})), std::invalid_argument);
  const PureState s = PureState::normalized_from(ComplexVector({3.0, 4.0}));
  CHECK(near(norm(s.vec()), 1.0, 1e-15));
}

TEST_CASE("make_pair caches the overlap") {
  const PureState e0(ComplexVector::basis(2, 0));
  const PureState e1(ComplexVector::basis(2, 1));
  CHECK(make_pair(e0, e1).overlap == Complex(0.0));
  CHECK(make_pair(e0, e0).overlap == Complex(1.0));

  const double theta = std::numbers::pi / 3;
  const StatePair p = angle_pair(theta, 2);
  CHECK(near(p.overlap.real(), 0.5, 1e-12));
  CHECK(p.overlap.imag() == 0.0);

  CHECK_THROWS_AS(make_pair(e0, PureState(ComplexVector::basis(3, 0))), std::invalid_argument);
}

TEST_CASE("canonicalize leaves real non-negative overlaps alone") {
  const StatePair p = angle_pair(std::numbers::pi / 3, 2);
  const StatePair c = canonicalize(p);
  CHECK(c.overlap == p.overlap);
}

TEST_CASE("canonicalize flips a negative overlap") {
  const PureState plus(ComplexVector::basis(2, 0));
  const PureState minus(ComplexVector({-0.5, std::sqrt(0.75)}));
  const StatePair c = canonicalize(make_pair(plus, minus));
  CHECK(near(c.overlap.real(), 0.5, 1e-12));
  CHECK(std::abs(c.overlap.imag()) <= 1e-12);
}

TEST_CASE("canonicalize rotates a complex overlap onto the real axis") {
  const Complex phase = std::polar(1.0, std::numbers::pi / 4);
  const PureState plus(ComplexVector::basis(2, 0));
  const PureState minus(ComplexVector({0.3 * phase, std::sqrt(0.91) * phase}));
  const StatePair pair = make_pair(plus, minus);
  CHECK(near(std::abs(pair.overlap - 0.3 * phase), 0.0, 1e-12));

  const StatePair c = canonicalize(pair);
  CHECK(near(c.overlap.real(), 0.3, 1e-12));
  CHECK(std::abs(c.overlap.imag()) <= 1e-12);
  CHECK(near(std::abs(c.overlap), std::abs(pair.overlap), 1e-12));
}

TEST_CASE("canonicalize is idempotent and preserves the overlap magnitude") {
  std::mt19937 rng(101);
  for (int it = 0; it < 30; ++it) {
    const StatePair p = qsep::test::random_pair(rng, 4);
    const StatePair c1 = canonicalize(p);
    const StatePair c2 = canonicalize(c1);
    CHECK(c1.overlap.real() >= -1e-12);
    CHECK(std::abs(c1.overlap.imag()) <= 1e-12);
    CHECK(near(std::abs(c1.overlap), std::abs(p.overlap), 1e-12));
    CHECK(near(std::abs(c2.overlap - c1.overlap), 0.0, 1e-12));
    // Each state changed only by a global phase.
    CHECK(near(std::abs(inner_product(c1.plus.vec(), p.plus.vec())), 1.0, 1e-12));
    CHECK(near(std::abs(inner_product(c1.minus.vec(), p.minus.vec())), 1.0, 1e-12));
  }
}

TEST_CASE("angle_pair endpoints and grid") {
  CHECK(std::abs(angle_pair(std::numbers::pi / 2, 2).overlap) <= 1e-12);
  CHECK(angle_pair(0.0, 2).overlap == Complex(1.0));
  for (int k = 0; k <= 20; ++k) {
    const double theta = k * (std::numbers::pi / 2) / 20;
    CHECK(near(angle_pair(theta, 5).overlap.real(), std::cos(theta), 1e-12));
  }
  CHECK_THROWS_AS(angle_pair(-0.1, 2), std::invalid_argument);
  CHECK_THROWS_AS(angle_pair(2.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(angle_pair(0.3, 1), std::invalid_argument);
}

TEST_CASE("reciprocal states of an orthogonal pair are the states themselves") {
  const StatePair p = angle_pair(std::numbers::pi / 2, 2);
  const ReciprocalPair r = reciprocal_states(p);
  CHECK(near(std::abs(inner_product(r.perp_plus.vec(), p.plus.vec())), 1.0, 1e-10));
  CHECK(near(std::abs(inner_product(r.perp_minus.vec(), p.minus.vec())), 1.0, 1e-10));
}

TEST_CASE("reciprocal states at overlap 0.5") {
  const StatePair p = angle_pair(std::numbers::pi / 3, 2);
  const ReciprocalPair r = reciprocal_states(p);
  CHECK(std::abs(inner_product(r.perp_plus.vec(), p.minus.vec())) <= 1e-10);
  CHECK(std::abs(inner_product(r.perp_minus.vec(), p.plus.vec())) <= 1e-10);
  CHECK(near(std::abs(r.denom_plus), std::sqrt(0.75), 1e-12));
  CHECK(near(std::abs(r.denom_minus), std::sqrt(0.75), 1e-12));
  CHECK(near(std::abs(r.denom_plus), 0.8660254037844386, 1e-10));
  CHECK(near(norm(r.perp_plus.vec()), 1.0, 1e-10));
  CHECK(near(norm(r.perp_minus.vec()), 1.0, 1e-10));
}

TEST_CASE("reciprocal states stay inside the span for random pairs") {
  std::mt19937 rng(202);
  for (int it = 0; it < 30; ++it) {
    const StatePair p = qsep::test::random_pair(rng, 5);
    const ReciprocalPair r = reciprocal_states(p);
    CHECK(std::abs(inner_product(r.perp_plus.vec(), p.minus.vec())) <= 1e-10);
    CHECK(std::abs(inner_product(r.perp_minus.vec(), p.plus.vec())) <= 1e-10);
    const SpanBasis basis = span_basis(p);
    CHECK(span_residual(basis, r.perp_plus.vec()) <= 1e-10);
    CHECK(span_residual(basis, r.perp_minus.vec()) <= 1e-10);
    const double want = std::sqrt(1.0 - std::norm(p.overlap));
    CHECK(near(std::abs(r.denom_plus), want, 1e-10));
    CHECK(near(std::abs(r.denom_minus), want, 1e-10));
  }
}

TEST_CASE("reciprocal states reject (near-)parallel pairs") {
  const PureState a(ComplexVector::basis(2, 0));
  CHECK_THROWS_AS(reciprocal_states(make_pair(a, a)), std::invalid_argument);
  const PureState b(ComplexVector({std::sqrt(1.0 - 1e-24), 1e-12}));
  CHECK_THROWS_AS(reciprocal_states(make_pair(a, b)), std::invalid_argument);
}

TEST_CASE("span coordinates round-trip vectors in the span") {
  std::mt19937 rng(303);
  const StatePair p = qsep::test::random_pair(rng, 6);
  const SpanBasis basis = span_basis(p);
  CHECK(std::abs(inner_product(basis.e0, basis.e1)) <= 1e-12);
  const auto mc = span_coords(basis, p.minus.vec());
  const ComplexVector back = from_span_coords(basis, mc[0], mc[1]);
  CHECK(norm(back - p.minus.vec()) <= 1e-12);
  // A vector outside the span leaves a residual.
  CHECK(span_residual(basis, ComplexVector::basis(6, 5)) >= 0.0);
}

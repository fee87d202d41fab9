#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copula_outage/errors.hpp"
#include "copula_outage/worstcase.hpp"

#include <cmath>

using namespace copula_outage;

namespace {

const Marginal UX = Marginal::uniform(1, 3);
const Marginal UY = Marginal::uniform(2, 5);
const Marginal E1 = Marginal::exponential(1.0);

}  // namespace

TEST_CASE("lower construction for the uniform sum at s = 6") {
  const AttainingJoint j = AttainingJoint::lower(UX, UY, BinaryOp::sum(), 6.0);
  CHECK(std::abs(j.probability - 1.0 / 3.0) < 1e-9);
  CHECK(std::abs(j.split_u - 1.0) < 1e-6);

  // Below t the pair sits on the comonotone segment x + y <= 3 + 5t, above it on the
  // countermonotone segment from (5/3, 5) to (3, 3), which lies on or above x + y = 6.
  RandomSource rng(3);
  for (int i = 0; i < 20000; ++i) {
    const Point p = sample_lower_attaining(j, rng);
    CHECK(p.x >= 1.0);
    CHECK(p.x <= 3.0);
    CHECK(p.y >= 2.0);
    CHECK(p.y <= 5.0);
    if (p.x <= 1.0 + 2.0 * j.probability) {
      CHECK(std::abs((p.y - 2.0) / 3.0 - (p.x - 1.0) / 2.0) < 1e-9);
    } else {
      CHECK(p.x + p.y >= 6.0 - 1e-8);
    }
  }

  RandomSource audit_rng(4);
  const AttainmentAudit a = audit_attainment(j, 1000000, audit_rng);
  CHECK(a.deviation <= 4 * a.sigma + 1e-6);
  const AuditReport m = marginal_audit(j, 1000000, audit_rng);
  CHECK(m.sup_deviation_x <= 0.005);
  CHECK(m.sup_deviation_y <= 0.005);
}

TEST_CASE("upper construction for the exponential sum at s = 0.1") {
  const AttainingJoint j = AttainingJoint::upper(E1, E1, BinaryOp::sum(), 0.1);
  CHECK(std::abs(j.probability - 0.0951625819640404) < 1e-6);
  RandomSource rng(8);
  const AttainmentAudit a = audit_attainment(j, 1000000, rng);
  CHECK(a.deviation <= 4 * a.sigma + 1e-6);
  const AuditReport m = marginal_audit(j, 1000000, rng);
  CHECK(m.sup_deviation_x <= 0.005);
  CHECK(m.sup_deviation_y <= 0.005);
}

TEST_CASE("exponential lower construction at s = 3") {
  const AttainingJoint j = AttainingJoint::lower(E1, E1, BinaryOp::sum(), 3.0);
  CHECK(std::abs(j.probability - 0.553739679703140) < 1e-8);
  RandomSource rng(9);
  CHECK_NOTHROW(audit_attainment(j, 1000000, rng));
}

TEST_CASE("product constructions") {
  const Marginal e2 = Marginal::exponential(2.0);
  for (double s : {0.05, 0.5, 2.0}) {
    RandomSource rng(static_cast<std::uint64_t>(s * 1000));
    CHECK_NOTHROW(audit_attainment(AttainingJoint::lower(E1, e2, BinaryOp::product(), s), 200000, rng));
    CHECK_NOTHROW(audit_attainment(AttainingJoint::upper(E1, e2, BinaryOp::product(), s), 200000, rng));
  }
}

TEST_CASE("degenerate targets") {
  // t = 0: the whole mass is countermonotone and never below the curve.
  const AttainingJoint lo = AttainingJoint::lower(E1, E1, BinaryOp::sum(), 1.0);
  CHECK(lo.probability == 0.0);
  RandomSource rng(1);
  const AttainmentAudit a = audit_attainment(lo, 100000, rng);
  CHECK(a.hits == 0);

  // m = 0 below the support: comonotone, nothing below s.
  const AttainingJoint up = AttainingJoint::upper(UX, UY, BinaryOp::sum(), 2.0);
  CHECK(up.probability == 0.0);
  CHECK(std::isnan(up.split_u));
  CHECK(audit_attainment(up, 100000, rng).hits == 0);
}

TEST_CASE("samples stay finite for unbounded marginals") {
  const AttainingJoint j = AttainingJoint::upper(E1, E1, BinaryOp::sum(), 5.0);
  RandomSource rng(2);
  for (int i = 0; i < 100000; ++i) {
    const Point p = sample_attaining(j, rng);
    CHECK(std::isfinite(p.x));
    CHECK(std::isfinite(p.y));
  }
}

TEST_CASE("wrong target and bad audits are rejected") {
  const AttainingJoint lo = AttainingJoint::lower(E1, E1, BinaryOp::sum(), 3.0);
  const AttainingJoint up = AttainingJoint::upper(E1, E1, BinaryOp::sum(), 3.0);
  RandomSource rng(1);
  CHECK_THROWS_AS(sample_upper_attaining(lo, rng), DomainError);
  CHECK_THROWS_AS(sample_lower_attaining(up, rng), DomainError);
  CHECK_THROWS_AS(marginal_audit(lo, 100, rng), DomainError);

  AttainingJoint wrong = lo;
  wrong.probability = 0.2;  // no longer the bound the samples attain
  CHECK_THROWS_AS(audit_attainment(wrong, 200000, rng), ConstructionUnverified);
}

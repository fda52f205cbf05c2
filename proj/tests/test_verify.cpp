#include <catch2/catch_amalgamated.hpp>

#include <fpl/verify.hpp>

#include "testutil.hpp"

using namespace fpl;

TEST_CASE("identity names", "[verify]") {
  const Identity all[] = {
      Identity::RS,            Identity::DeGier,       Identity::QtProduct,
      Identity::QtPerPattern,  Identity::QqtCount,     Identity::QqtPerPattern,
      Identity::RefinedQqt,    Identity::Thm6,         Identity::Thm7,
      Identity::Ciucu,         Identity::Rotation,     Identity::Recurrence};
  for (Identity id : all) {
    CHECK(identity_from_string(to_string(id)) == id);
    CHECK(identity_ceiling(id) >= 1);
  }
  CHECK(error_code([] { identity_from_string("bogus"); }) == "UnknownIdentity");
  CHECK(identity_from_string("qt-product") == Identity::QtProduct);
  CHECK(identity_ceiling(Identity::Recurrence) == 50);
}

TEST_CASE("every check verifies at its smallest size", "[verify]") {
  const Identity all[] = {
      Identity::RS,            Identity::DeGier,       Identity::QtProduct,
      Identity::QtPerPattern,  Identity::QqtCount,     Identity::QqtPerPattern,
      Identity::RefinedQqt,    Identity::Thm6,         Identity::Thm7,
      Identity::Ciucu,         Identity::Rotation,     Identity::Recurrence};
  for (Identity id : all) {
    VerificationReport r = verify_identity(id, 1);
    INFO(to_string(id));
    CHECK(r.identity == to_string(id));
    CHECK(r.size == 1);
    CHECK(r.status == "verified");
    CHECK(r.elapsed_ms >= 0);
    CHECK_FALSE(r.witness.has_value());
  }
}

TEST_CASE("stationary distributions match sampling frequencies", "[verify]") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(verify_identity(Identity::RS, n).status == "verified");
    CHECK(verify_identity(Identity::DeGier, n).status == "verified");
  }
  VerificationReport r = verify_identity(Identity::RS, 3);
  CHECK(r.per_pattern.size() >= 5);
}

TEST_CASE("quarter-turn product identity", "[verify]") {
  CHECK(verify_identity(Identity::QtProduct, 2).status == "verified");
  VerificationReport far = verify_identity(Identity::QtProduct, 4);
  CHECK(far.status == "skipped");
  CHECK(far.lhs.empty());
  CHECK(far.rhs == "9779616");
  CHECK(verify_identity(Identity::QtProduct, 6).rhs == "10995014015567296");
  CHECK(verify_identity(Identity::QtPerPattern, 2).status == "verified");
  CHECK(verify_identity(Identity::QtPerPattern, 4).status == "skipped");
}

TEST_CASE("quasi-quarter-turn identities", "[verify]") {
  CHECK(verify_identity(Identity::QqtCount, 2).status == "verified");
  VerificationReport far = verify_identity(Identity::QqtCount, 5);
  CHECK(far.status == "skipped");
  CHECK(far.lhs.empty());
  CHECK(far.rhs == "23679655141428");
  CHECK(verify_identity(Identity::QqtPerPattern, 2).status == "verified");
  CHECK(verify_identity(Identity::QqtPerPattern, 3).status == "skipped");
  CHECK(verify_identity(Identity::RefinedQqt, 2).status == "verified");
  CHECK(verify_identity(Identity::RefinedQqt, 3).status == "skipped");
}

TEST_CASE("refined factorization reports coefficient rows", "[verify]") {
  VerificationReport r = verify_identity(Identity::RefinedQqt, 1);
  REQUIRE(r.per_pattern.size() == 6);  // sizes 6 vs 2+1+5: degree 5 polynomial
  CHECK(r.per_pattern[0].word == "y^0");
  for (auto& row : r.per_pattern)
    CHECK(row.lhs == row.rhs);
}

TEST_CASE("tiling correspondences", "[verify]") {
  CHECK(verify_identity(Identity::Thm6, 1).status == "verified");
  for (int n = 1; n <= 3; ++n)
    CHECK(verify_identity(Identity::Thm7, n).status == "verified");
  VerificationReport far = verify_identity(Identity::Thm7, 5);
  CHECK(far.status == "skipped");
  CHECK(far.rhs == str(qcsscpp_closed_form(5)));
  CHECK(verify_identity(Identity::Ciucu, 2).status == "verified");
  CHECK(verify_identity(Identity::Ciucu, 4).status == "skipped");
}

TEST_CASE("rotation invariance of pattern tallies", "[verify]") {
  for (int n : {3, 4, 6}) {
    VerificationReport r = verify_identity(Identity::Rotation, n);
    INFO(n);
    CHECK(r.status == "verified");
  }
  // size 12: every applicable class sits above its enumeration ceiling
  CHECK(verify_identity(Identity::Rotation, 12).status == "skipped");
}

TEST_CASE("count recurrence", "[verify]") {
  CHECK(verify_identity(Identity::Recurrence, 50).status == "verified");
  CHECK(verify_identity(Identity::Recurrence, 51).status == "skipped");
  VerifyOptions force;
  force.force = true;
  CHECK(verify_identity(Identity::Recurrence, 51, force).status == "verified");
}

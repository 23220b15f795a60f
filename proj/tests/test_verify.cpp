#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "mubcoh/verify.hpp"

using namespace mubcoh;

namespace {

bool report_invariant(const VerificationReport& r) {
  return r.passed == (r.max_deviation <= r.tolerance);
}

bool identical(const VerificationReport& a, const VerificationReport& b) {
  return a.claim_id == b.claim_id && a.samples == b.samples && a.seed == b.seed &&
         a.max_deviation == b.max_deviation && a.tolerance == b.tolerance &&
         a.passed == b.passed && a.details == b.details;
}

}  // namespace

TEST_CASE("qubit bound sweep passes at the default tolerance") {
  VerifyOptions opt;
  opt.samples = 2000;
  opt.seed = kQubitBoundSeed;
  VerificationReport r = verify_qubit_bound(opt);
  CHECK(r.claim_id == "qubit-bound");
  CHECK(r.samples == 2000);
  CHECK(r.seed == kQubitBoundSeed);
  CHECK(r.passed);
  CHECK(r.max_deviation <= 1e-12);
  CHECK(report_invariant(r));
  CHECK_FALSE(r.details.empty());
}

TEST_CASE("x-state equality sweep passes at the default tolerance") {
  VerifyOptions opt;
  opt.samples = 1000;
  opt.seed = kXStateSeed;
  VerificationReport r = verify_xstate_equality(opt);
  CHECK(r.claim_id == "xstate-equality");
  CHECK(r.passed);
  CHECK(report_invariant(r));
}

TEST_CASE("bell forms sweep passes at the default tolerance") {
  VerifyOptions opt;
  opt.samples = 1000;
  opt.seed = kBellFormsSeed;
  VerificationReport r = verify_bell_forms(opt);
  CHECK(r.claim_id == "bell-forms");
  CHECK(r.passed);
  CHECK(report_invariant(r));
  // Roughly a third of cube draws are positive semidefinite; the details
  // string records the exact count.
  CHECK(r.details.find("positive-semidefinite") != std::string::npos);
}

TEST_CASE("grid families sweep passes at the default tolerance") {
  GridVerifyOptions opt;
  VerificationReport r = verify_werner_isotropic(opt);
  CHECK(r.claim_id == "werner-isotropic");
  CHECK(r.samples == kDefaultGridPoints);
  CHECK(r.seed == 0);
  CHECK(r.passed);
  CHECK(report_invariant(r));
  CHECK(r.details.find("seed unused") != std::string::npos);
}

TEST_CASE("sweeps are bit-identical across runs") {
  VerifyOptions opt;
  opt.samples = 500;
  opt.seed = 99;
  CHECK(identical(verify_qubit_bound(opt), verify_qubit_bound(opt)));
  CHECK(identical(verify_xstate_equality(opt), verify_xstate_equality(opt)));
  CHECK(identical(verify_bell_forms(opt), verify_bell_forms(opt)));
  GridVerifyOptions gopt;
  gopt.grid_points = 11;
  CHECK(identical(verify_werner_isotropic(gopt), verify_werner_isotropic(gopt)));
}

TEST_CASE("different seeds still pass") {
  VerifyOptions opt;
  opt.samples = 500;
  opt.seed = 123456789;
  CHECK(verify_qubit_bound(opt).passed);
  CHECK(verify_xstate_equality(opt).passed);
  CHECK(verify_bell_forms(opt).passed);
}

TEST_CASE("zero samples is a vacuous pass") {
  VerifyOptions opt;
  opt.samples = 0;
  opt.seed = 1;
  for (const VerificationReport& r :
       {verify_qubit_bound(opt), verify_xstate_equality(opt), verify_bell_forms(opt)}) {
    CHECK(r.passed);
    CHECK(r.max_deviation == 0.0);
    CHECK(r.details.find("vacuous") != std::string::npos);
  }
  GridVerifyOptions gopt;
  gopt.grid_points = 0;
  VerificationReport g = verify_werner_isotropic(gopt);
  CHECK(g.passed);
  CHECK(g.details.find("vacuous") != std::string::npos);
}

TEST_CASE("perturbation injection makes every sweep fail") {
  VerifyOptions opt;
  opt.samples = 500;
  opt.seed = 5;
  opt.inject = 1e-6;
  for (const VerificationReport& r :
       {verify_qubit_bound(opt), verify_xstate_equality(opt), verify_bell_forms(opt)}) {
    CHECK_FALSE(r.passed);
    CHECK(r.max_deviation > 1e-7);
    CHECK(report_invariant(r));
    CHECK(r.details.find("control run") != std::string::npos);
  }
  GridVerifyOptions gopt;
  gopt.inject = 1e-6;
  VerificationReport g = verify_werner_isotropic(gopt);
  CHECK_FALSE(g.passed);
  CHECK(report_invariant(g));
}

TEST_CASE("combined runner covers the four claims in order") {
  AllVerifyOptions opt;
  opt.samples = 400;
  opt.grid_points = 9;
  std::vector<VerificationReport> rs = verify_all(opt);
  REQUIRE(rs.size() == 4);
  CHECK(rs[0].claim_id == "qubit-bound");
  CHECK(rs[1].claim_id == "xstate-equality");
  CHECK(rs[2].claim_id == "bell-forms");
  CHECK(rs[3].claim_id == "werner-isotropic");
  CHECK(rs[0].seed == kQubitBoundSeed);
  CHECK(rs[1].seed == kXStateSeed);
  CHECK(rs[2].seed == kBellFormsSeed);
  for (const VerificationReport& r : rs) {
    CHECK(r.passed);
    CHECK(report_invariant(r));
  }

  // A shared seed override reaches the randomized claims.
  opt.seed = 77;
  std::vector<VerificationReport> seeded = verify_all(opt);
  CHECK(seeded[0].seed == 77);
  CHECK(seeded[1].seed == 77);
  CHECK(seeded[2].seed == 77);
  CHECK(seeded[3].seed == 0);  // grid claim draws nothing
  for (const VerificationReport& r : seeded)
    CHECK(r.passed);
}

#ifndef INVCORR_FIXTURES_HPP_
#define INVCORR_FIXTURES_HPP_

#include <string>
#include <vector>

#include "invcorr/core.hpp"

namespace invcorr {

// Shared fixture library: small inverse semigroups used as anchors
// throughout the tests, the verify suite, and the CLI.
//
//   E2  two-element meet semilattice {0,1}, x*y = min
//   E3  three-chain semilattice {0,1,2}, x*y = min
//   Z2  cyclic group of order 2
//   Z3  cyclic group of order 3
//   B2  five-element Brandt semigroup (2x2 matrix units and zero)
//   I1  symmetric inverse monoid on one point
//   I2  symmetric inverse monoid on two points
//   T1  trivial group

SgPtr fx_E2();
SgPtr fx_E3();
SgPtr fx_Z2();
SgPtr fx_Z3();
SgPtr fx_B2();
SgPtr fx_I1();
SgPtr fx_I2();
SgPtr fx_trivial();

// Not inverse; used by negative tests.
MulTable left_zero_table(Idx n);

struct FixtureInfo {
  std::string name;
  SgPtr sg;
  Idx n_idempotents;
  bool has_identity;
  bool has_zero;
  bool is_group;
};

const std::vector<FixtureInfo>& fixture_semigroups();
SgPtr fixture_by_name(const std::string& name);  // throws InputError

}  // namespace invcorr

#endif  // INVCORR_FIXTURES_HPP_

#ifndef INVCORR_MORITA_HPP_
#define INVCORR_MORITA_HPP_

#include "invcorr/inverse_set.hpp"

namespace invcorr {

// S-T biset with compatible left and right pairings. left_action is
// size x |S| with lact(s, u) = s*u; right_action is size x |T|.
struct PartialMorita {
  SgPtr left;   // S
  SgPtr right;  // T
  Idx size = 0;
  std::vector<Idx> left_action;
  std::vector<Idx> right_action;
  std::vector<Idx> left_pairing;   // values in S
  std::vector<Idx> right_pairing;  // values in T

  Idx lact(Idx s, Idx u) const {
    return left_action[static_cast<size_t>(u) * left->size() + s];
  }
  Idx ract(Idx u, Idx t) const {
    return right_action[static_cast<size_t>(u) * right->size() + t];
  }
  Idx lpair(Idx u, Idx v) const {
    return left_pairing[static_cast<size_t>(u) * size + v];
  }
  Idx rpair(Idx u, Idx v) const {
    return right_pairing[static_cast<size_t>(u) * size + v];
  }

  RightSet right_set() const;
  LeftSet left_set() const;
};

struct MoritaReport {
  CheckReport structure;  // biset law and pairing compatibility
  CheckReport left_regular;
  CheckReport right_regular;
  bool left_inverse = false;
  bool right_inverse = false;
  bool left_full = false;
  bool right_full = false;

  bool ok() const {
    return structure.ok() && left_regular.ok() && right_regular.ok() &&
           left_inverse && right_inverse;
  }
  bool morita() const { return ok() && left_full && right_full; }
};

// Full audit. Once the biset structure and both regular suites pass, the
// inverse conditions are guaranteed, so their failure raises InternalError.
MoritaReport check_partial_morita(const PartialMorita& m);
PartialMorita require_partial_morita(PartialMorita m, const std::string& what);

// S as the identity Morita equivalence from S to S.
PartialMorita identity_morita(SgPtr s);

}  // namespace invcorr

#endif  // INVCORR_MORITA_HPP_

#ifndef INVCORR_CORRESPONDENCE_HPP_
#define INVCORR_CORRESPONDENCE_HPP_

#include "invcorr/adjointable.hpp"
#include "invcorr/morita.hpp"

namespace invcorr {

// Right inverse T-set with a left S-action whose maps are adjointable;
// the table encodes the homomorphism S -> L(U) pointwise.
struct Correspondence {
  SgPtr left_sg;  // S
  RightSet right;
  std::vector<Idx> left_action;  // size x |S|, lact(s, u) at [u][s]

  Idx size() const { return right.size; }
  Idx lact(Idx s, Idx u) const {
    return left_action[static_cast<size_t>(u) * left_sg->size() + s];
  }
  // the map theta(s) as a table
  std::vector<Idx> theta(Idx s) const;
};

// Left action law, mixed associativity, and the adjointability criterion
// <u'|su> = <s*u'|u>; the right-set axioms are included in the report.
CheckReport check_correspondence(const Correspondence& c);
Correspondence require_correspondence(Correspondence c,
                                      const std::string& what);

bool is_non_degenerate(const Correspondence& c);

Correspondence identity_correspondence(SgPtr s);
Correspondence from_morita(const PartialMorita& m);  // forget left pairing

// U_theta = theta(S)T inside T; always non-degenerate.
struct HomCorrespondence {
  Correspondence corr;
  std::vector<Idx> carrier;  // T-indices, ascending
};
HomCorrespondence from_hom(const SemigroupHom& theta);

// Reconstruction of the (unique) partial Morita structure, by searching
// for the section of theta over K(U) that is closed under both actions.
struct RecoverResult {
  bool ok = false;
  std::string reason;      // NOT_PARTIAL_MORITA detail when !ok
  PartialMorita morita;    // valid when ok
  std::vector<Idx> ideal;  // I inside S, sorted
};
RecoverResult recover_partial_morita(const Correspondence& c,
                                     const Budget& budget = {});

// Tensor product over the middle semigroup, as a quotient of the product
// carrier. Class ids are numbered by their smallest pair (u, v) in
// lexicographic order.
struct TensorProduct {
  Correspondence corr;
  Idx m1 = 0, m2 = 0;
  std::vector<Idx> class_of;  // (u * m2 + v) -> class
  std::vector<std::pair<Idx, Idx>> reps;

  Idx cls(Idx u, Idx v) const {
    return class_of[static_cast<size_t>(u) * m2 + v];
  }
};
TensorProduct tensor(const Correspondence& a, const Correspondence& b);

// right pairing preserving left S-map between correspondences
CheckReport check_corr_map(const Correspondence& a, const Correspondence& b,
                           const std::vector<Idx>& map);
bool is_surjective(const std::vector<Idx>& map, Idx target_size);

// (sigma1 x sigma2) on classes; well-definedness asserted over all
// representatives.
std::vector<Idx> tensor_map(const TensorProduct& src,
                            const TensorProduct& dst,
                            const std::vector<Idx>& sigma1,
                            const std::vector<Idx>& sigma2);

// Tensor of partial Morita equivalences: tensor the underlying
// correspondences, recover the left pairing, and check it against the
// direct description of the recovered ideal and pairing.
struct MoritaTensor {
  PartialMorita morita;
  TensorProduct tensor;
  std::vector<Idx> ideal;  // W inside S1
};
MoritaTensor tensor_partial_morita(const PartialMorita& m1,
                                   const PartialMorita& m2,
                                   const Budget& budget = {});

}  // namespace invcorr

#endif  // INVCORR_CORRESPONDENCE_HPP_

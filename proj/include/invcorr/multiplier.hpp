#ifndef INVCORR_MULTIPLIER_HPP_
#define INVCORR_MULTIPLIER_HPP_

#include "invcorr/correspondence.hpp"

namespace invcorr {

// M(S) realized concretely as L(S) over the canonical right S-set, with
// the left-translation embedding. Construction verifies that the
// embedding is an injective homomorphism onto an essential two-sided
// ideal and that the carrier has an identity.
struct MultiplierSemigroup {
  SgPtr base;
  MapSemigroup carrier;
  std::vector<Idx> embedding;  // s -> index of lambda_s
};

MultiplierSemigroup multiplier(SgPtr s, const Budget& budget = {});

// Extension of a non-degenerate theta: S -> L(U) along an ideal embedding
// of S into s_tilde. embed_of_s[i] is the s_tilde-index of the i-th
// element of the correspondence's left semigroup. The extension is
// well-defined and unique; both facts are asserted representation by
// representation.
Correspondence extend_hom(const Correspondence& c, const SgPtr& s_tilde,
                          const std::vector<Idx>& embed_of_s);

// Largest subsemigroup in which `members` sits as a two-sided ideal.
std::vector<Idx> idealizer(const InverseSemigroup& ambient,
                           const std::vector<Idx>& members);

// M(K(U)) is isomorphic to L(U), witnessed by the extension of the
// inclusion K(U) -> L(U) along lambda: K(U) -> L(K(U)).
struct KasparovWitness {
  MapSemigroup l;
  CompactSemigroup k;
  MultiplierSemigroup mk;
  std::vector<Idx> iso;  // M(K(U)) -> L(U), extends the embedding
};
KasparovWitness verify_kasparov(const RightSet& u, const Budget& budget = {});

}  // namespace invcorr

#endif  // INVCORR_MULTIPLIER_HPP_

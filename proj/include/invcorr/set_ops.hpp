#ifndef INVCORR_SET_OPS_HPP_
#define INVCORR_SET_OPS_HPP_

#include <map>
#include <optional>
#include <utility>

#include "invcorr/morita.hpp"
#include "invcorr/partial_bij.hpp"

namespace invcorr {

// TS for an inverse subsemigroup T of S with TST inside T. Left full
// always; a Morita equivalence exactly when STS = S. Carrier elements are
// labelled by their S-indices in `carrier`.
struct Enlargement {
  PartialMorita morita;
  SubSemigroup t_sub;
  std::vector<Idx> carrier;  // S-indices of TS, ascending
};
Enlargement enlargement_set(const SgPtr& s, const std::vector<Idx>& t_members);

// Disjoint union glued at the zero orbits; cross pairings are 0. The
// second set's elements keep their order, minus the glued zero.
struct DirectSum {
  RightSet set;
  std::vector<Idx> from_first;   // carrier index of each element of u
  std::vector<Idx> from_second;  // carrier index of each element of v
};
DirectSum direct_sum(const RightSet& u, const RightSet& v);

// Presheaf-style construction of a left inverse E-set from parts and
// restriction maps over an idempotent semigroup E.
struct PresheafInput {
  SgPtr semilattice;
  std::vector<Idx> part_sizes;  // one per element of E
  // restriction (e, f) -> table of size part_sizes[f], defined for e <= f
  std::map<std::pair<Idx, Idx>, std::vector<Idx>> restrictions;
};
struct PresheafSet {
  LeftSet set;
  std::vector<std::pair<Idx, Idx>> carrier;  // (e, local index)
};
PresheafSet presheaf_set(const PresheafInput& in);

// I(X, Y) as a partial Morita equivalence from I(Y) to I(X), finite
// discrete spaces only.
struct BijBiset {
  PartialMorita morita;
  std::vector<PartialBij> carrier;
};
BijBiset partial_bijection_biset(Idx nx, Idx ny);

// Order on a right inverse set; all four characterisations evaluated and
// required to agree.
bool set_order(const RightSet& u, Idx a, Idx b);

enum class MapKind { RightTMap, PairingPreserving, Both };

struct SetMap {
  RightSet source;
  RightSet target;
  std::vector<Idx> map;
  MapKind kind = MapKind::Both;
};

// Verifies the declared kind against a full check.
CheckReport check_map(const SetMap& m);

// Pairing-preserving surjections between inverse sets are automatically
// isomorphisms; the finder re-asserts equivariance and injectivity.
std::optional<std::vector<Idx>> find_set_isomorphism(const RightSet& a,
                                                     const RightSet& b);
std::optional<std::vector<Idx>> find_left_set_isomorphism(const LeftSet& a,
                                                          const LeftSet& b);

}  // namespace invcorr

#endif  // INVCORR_SET_OPS_HPP_

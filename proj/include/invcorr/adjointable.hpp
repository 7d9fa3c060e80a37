#ifndef INVCORR_ADJOINTABLE_HPP_
#define INVCORR_ADJOINTABLE_HPP_

#include "invcorr/morita.hpp"

namespace invcorr {

// Search budget for map enumerations; L(U) is exponential in the worst
// case, so the tools fail loudly instead of hanging.
struct Budget {
  long long nodes = 1'000'000;
};

// A map U -> V between right inverse T-sets together with its unique
// adjoint: <adj(v)|u> = <v|fwd(u)> for all u, v.
struct AdjointableMap {
  std::vector<Idx> fwd;
  std::vector<Idx> adj;
  bool operator==(const AdjointableMap&) const = default;
};

AdjointableMap adjoint(const AdjointableMap& f);

// omega_{v,u}: u' -> v<u|u'>, with adjoint omega_{u,v}.
AdjointableMap rank_one(const RightSet& target, const RightSet& source,
                        Idx v, Idx u);

// check the adjoint identity over all points
bool is_adjoint_pair(const RightSet& source, const RightSet& target,
                     const AdjointableMap& f);

// K(U, V): rank-one maps, deduplicated by induced table, ordered by
// forward-table lexicographic.
std::vector<AdjointableMap> enumerate_K(const RightSet& source,
                                        const RightSet& target);

// L(U, V): all adjointable maps, found by backtracking over equivariant
// maps with the adjoint solved pointwise.
std::vector<AdjointableMap> enumerate_L(const RightSet& source,
                                        const RightSet& target,
                                        const Budget& budget = {});

// An inverse semigroup of adjointable maps under composition, with the
// element labels retained.
struct MapSemigroup {
  SgPtr sg;
  std::vector<AdjointableMap> maps;

  Idx index_of(const std::vector<Idx>& fwd) const;  // -1 if absent
};

// L(U): asserts the recognized generalized inverse of each map is its
// adjoint.
MapSemigroup L_semigroup(const RightSet& u, const Budget& budget = {});

// K(U) plus its witness as a two-sided ideal of L(U); asserts
// E(K(U)) = { omega_{u,u} }.
struct CompactSemigroup {
  MapSemigroup k;
  MapSemigroup ambient_l;
  std::vector<Idx> in_l;  // position of each K map inside L
};
CompactSemigroup K_semigroup(const RightSet& u, const Budget& budget = {});

// U as a Morita equivalence from K(U) to the ideal <U|U> of T.
struct SetAsMorita {
  PartialMorita morita;
  MapSemigroup k;        // the left semigroup
  SubSemigroup ideal;    // the right semigroup inside T
};
SetAsMorita morita_from_set(const RightSet& u, const Budget& budget = {});

// L(U,V) (or K(U,V)) as a partial Morita equivalence from L(V) to L(U)
// (resp. K(V) to K(U)); the checker is run before returning.
PartialMorita adjointable_biset(const RightSet& u, const RightSet& v,
                                bool compact_only,
                                const Budget& budget = {});

}  // namespace invcorr

#endif  // INVCORR_ADJOINTABLE_HPP_

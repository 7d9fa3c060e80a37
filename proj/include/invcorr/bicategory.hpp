#ifndef INVCORR_BICATEGORY_HPP_
#define INVCORR_BICATEGORY_HPP_

#include "invcorr/correspondence.hpp"

namespace invcorr {

// The opposite equivalence on the mirrored carrier: t*~u = (u*t~)~,
// ~u*s = (s~*u)~, pairings swapped.
PartialMorita opposite(const PartialMorita& m);

// Unitors and associator, each verified to be an isomorphic
// correspondence map before being returned.
struct UnitorResult {
  TensorProduct product;  // S (x) U or U (x) T
  std::vector<Idx> map;   // classes -> U
};
UnitorResult left_unitor(const Correspondence& c);   // requires non-degenerate
UnitorResult right_unitor(const Correspondence& c);

struct AssociatorResult {
  TensorProduct left_nested;    // U1 (x) (U2 (x) U3)
  TensorProduct right_nested;   // (U1 (x) U2) (x) U3
  TensorProduct inner_right;    // U2 (x) U3
  TensorProduct inner_left;     // U1 (x) U2
  std::vector<Idx> map;         // classes of left_nested -> right_nested
};
AssociatorResult associator(const Correspondence& u1,
                            const Correspondence& u2,
                            const Correspondence& u3);

// triangle and pentagon coherence, evaluated pointwise
void check_triangle(const Correspondence& a, const Correspondence& b);
void check_pentagon(const Correspondence& u1, const Correspondence& u2,
                    const Correspondence& u3, const Correspondence& u4);

// naturality of the unitors and associator against given correspondence
// maps (identity maps allowed)
void check_unitor_naturality(const Correspondence& a,
                             const Correspondence& b,
                             const std::vector<Idx>& sigma);
void check_associator_naturality(
    const Correspondence& u1, const Correspondence& u2,
    const Correspondence& u3, const Correspondence& v1,
    const Correspondence& v2, const Correspondence& v3,
    const std::vector<Idx>& sigma1, const std::vector<Idx>& sigma2,
    const std::vector<Idx>& sigma3);

enum class MoritaVerdict { Morita, PartialOnly, Neither };
const char* verdict_name(MoritaVerdict v);

struct MoritaCheck {
  MoritaVerdict verdict;
  std::string detail;  // the failing condition for non-Morita verdicts
};
MoritaCheck check_morita(const Correspondence& c, const Budget& budget = {});
MoritaCheck check_morita(const PartialMorita& m, const Budget& budget = {});

// U together with its opposite and the two evaluation isomorphisms
// witnessing equivalence in the bicategory.
struct EquivalenceCertificate {
  Correspondence u;        // S -> T
  Correspondence v;        // T -> S (the opposite set)
  TensorProduct uv;        // U (x) V
  TensorProduct vu;        // V (x) U
  std::vector<Idx> iota1;  // classes of uv -> S
  std::vector<Idx> iota2;  // classes of vu -> T
};

EquivalenceCertificate morita_to_certificate(const PartialMorita& m,
                                             const Budget& budget = {});

// The reverse direction: a verified certificate yields a Morita
// equivalence on U; cross-checked against check_morita.
PartialMorita certificate_to_morita(const EquivalenceCertificate& cert,
                                    const Budget& budget = {});

// surjective correspondence maps invert; returns the inverse map
std::vector<Idx> invert_corr_map(const Correspondence& a,
                                 const Correspondence& b,
                                 const std::vector<Idx>& map);

std::optional<std::vector<Idx>> find_correspondence_isomorphism(
    const Correspondence& a, const Correspondence& b);

}  // namespace invcorr

#endif  // INVCORR_BICATEGORY_HPP_

#ifndef INVCORR_REES_HPP_
#define INVCORR_REES_HPP_

#include <array>

#include "invcorr/adjointable.hpp"
#include "invcorr/morita.hpp"

namespace invcorr {

// p: I x I -> T satisfying (MF1)-(MF4); `full` records (MF5).
struct McAlisterFn {
  SgPtr t;
  Idx index_size = 0;
  std::vector<Idx> p;
  bool full = false;

  Idx at(Idx i, Idx j) const {
    return p[static_cast<size_t>(i) * index_size + j];
  }
};

struct McAlisterCheck {
  CheckReport report;               // MF1..MF4 violations with witnesses
  std::optional<McAlisterFn> fn;    // set when the report is clean
};
McAlisterCheck check_mcalister(SgPtr t, Idx index_size, std::vector<Idx> p);
McAlisterFn require_mcalister(SgPtr t, Idx index_size, std::vector<Idx> p,
                              const std::string& what);

// RM(T, I, p): admissible triples (j, t, i) under
// (j2,t2,i2)(j1,t1,i1) = (j2, t2 p(i2,j1) t1, i1). Regular, and usually
// not inverse.
struct ReesMatrix {
  McAlisterFn pm;
  std::vector<std::array<Idx, 3>> elems;
  MulTable table;

  Idx index_of(Idx j, Idx t, Idx i) const;
};
ReesMatrix regular_rees(const McAlisterFn& pm);

// IM(T, I, p) = RM / gamma; gamma is checked to be an inverse congruence
// and the class of (j,t,i)* is asserted to be [i,t*,j].
struct InverseRees {
  ReesMatrix rm;
  std::vector<Idx> gamma_class;  // RM index -> IM index
  SgPtr sg;
  std::vector<std::array<Idx, 3>> reps;
};
InverseRees inverse_rees(const McAlisterFn& pm);

// U_p: classes of {(j,t) : p(j,j)t = t}, a partial Morita equivalence
// from IM(T,I,p) to T; left full always, Morita when (MF5) holds.
struct UpSet {
  InverseRees im;
  std::vector<std::pair<Idx, Idx>> prime;  // admissible (j, t), lex order
  std::vector<Idx> cls;                    // prime index -> class
  std::vector<std::pair<Idx, Idx>> reps;   // class -> first (j, t)
  RightSet set;
  PartialMorita morita;
};
UpSet inverse_set_from_p(const McAlisterFn& pm);

// p_U(u, v) = <u|v>; a McAlister function when U is right full.
McAlisterFn mcalister_from_set(const RightSet& u);

struct RoundtripReport {
  bool up_of_pu_isomorphic_to_u = false;
  bool im_isomorphic_to_k_up = false;
  bool im_over_u_isomorphic_to_k = false;  // only for right-full U
  bool right_full = false;
};
RoundtripReport roundtrip_checks(const RightSet& u, const Budget& budget = {});

// IM(T,I,p) = K(U_p) through the left action, for a supplied function.
bool im_matches_k_up(const McAlisterFn& pm, const Budget& budget = {});

// Bounded verification that gamma is the minimum inverse congruence:
// enumerates the full congruence lattice for |RM| <= max_order (and at
// most max_lattice congruences); nullopt when skipped.
std::optional<bool> gamma_minimal_bounded(const McAlisterFn& pm,
                                          Idx max_order = 12,
                                          Idx max_lattice = 5000);

}  // namespace invcorr

#endif  // INVCORR_REES_HPP_

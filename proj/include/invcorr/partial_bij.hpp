#ifndef INVCORR_PARTIAL_BIJ_HPP_
#define INVCORR_PARTIAL_BIJ_HPP_

#include <string>
#include <vector>

#include "invcorr/core.hpp"

namespace invcorr {

// Partial bijection from {0..dom_size-1} to {0..cod_size-1}; img[x] is the
// image of x, or -1 where undefined. Distinct defined points have distinct
// images.
struct PartialBij {
  Idx dom_size = 0;
  Idx cod_size = 0;
  std::vector<Idx> img;

  bool defined(Idx x) const { return img[x] >= 0; }
  bool operator==(const PartialBij&) const = default;
  auto operator<=>(const PartialBij&) const = default;
};

PartialBij identity_bij(Idx n);
PartialBij empty_bij(Idx dom, Idx cod);
PartialBij inverse_of(const PartialBij& u);
// apply g first, then f
PartialBij compose(const PartialBij& f, const PartialBij& g);
std::string to_string(const PartialBij& u);

// All partial bijections X -> Y in canonical order: by domain bitmask
// ascending, then image tuple lexicographic.
std::vector<PartialBij> enumerate_partial_bijections(Idx dom, Idx cod);

struct SymmetricInverseMonoid {
  SgPtr sg;
  std::vector<PartialBij> elems;  // canonical order, matching indices
};

// I_n for n <= 4, with elements in documented canonical order.
SymmetricInverseMonoid symmetric_inverse_monoid(Idx n);

}  // namespace invcorr

#endif  // INVCORR_PARTIAL_BIJ_HPP_

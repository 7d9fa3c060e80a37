#ifndef INVCORR_INVERSE_SET_HPP_
#define INVCORR_INVERSE_SET_HPP_

#include <array>
#include <string>
#include <vector>

#include "invcorr/core.hpp"

namespace invcorr {

struct Violation {
  std::string axiom;
  std::vector<Idx> witness;
};

// Checkers collect every violation with a witness tuple, not just the
// first failure; they double as debugging reports for the file formats.
struct CheckReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<Idx> witness) {
    violations.push_back({std::move(axiom), std::move(witness)});
  }
};

// Right T-set with a pairing into T. action is size x |T| with
// act(u, t) = u*t; pairing is size x size with pair(u, v) = <u|v>.
struct RightSet {
  SgPtr sg;
  Idx size = 0;
  std::vector<Idx> action;
  std::vector<Idx> pairing;

  Idx act(Idx u, Idx t) const {
    return action[static_cast<size_t>(u) * sg->size() + t];
  }
  Idx pair(Idx u, Idx v) const {
    return pairing[static_cast<size_t>(u) * size + v];
  }
  bool well_formed() const;
};

// Left S-set; action is size x |S| with act(s, u) = s*u stored row-per-u.
struct LeftSet {
  SgPtr sg;
  Idx size = 0;
  std::vector<Idx> action;
  std::vector<Idx> pairing;

  Idx act(Idx s, Idx u) const {
    return action[static_cast<size_t>(u) * sg->size() + s];
  }
  Idx pair(Idx u, Idx v) const {
    return pairing[static_cast<size_t>(u) * size + v];
  }
  bool well_formed() const;
};

// Action law plus (R-i)-(R-iii) / (L-i)-(L-iii).
CheckReport check_right_regular(const RightSet& u);
CheckReport check_left_regular(const LeftSet& u);

// The four equivalent characterisations of (R-iv): the implication itself,
// triple-equality cancellation, the exchange identity, and commutation of
// the rank-one idempotents. Verdicts must coincide on every regular set.
struct InverseCheck {
  bool passed = false;
  std::array<bool, 4> conditions{};
  std::vector<Idx> witness;  // failing (u, u') when !passed
};

InverseCheck check_right_inverse(const RightSet& u);  // throws if not regular
InverseCheck check_left_inverse(const LeftSet& u);

bool is_right_inverse_set(const RightSet& u);
bool is_left_inverse_set(const LeftSet& u);
RightSet require_right_inverse_set(RightSet u, const std::string& what);

bool is_right_full(const RightSet& u);
bool is_left_full(const LeftSet& u);

// Sorted image <U|U> of the pairing; a two-sided ideal of the semigroup.
std::vector<Idx> pairing_image(const std::vector<Idx>& pairing);

// The canonical (co)regular structure of T on itself:
// right pairing s*t, left pairing st*.
RightSet semigroup_as_right_set(SgPtr t);
LeftSet semigroup_as_left_set(SgPtr s);

bool same_semigroup(const SgPtr& a, const SgPtr& b);

}  // namespace invcorr

#endif  // INVCORR_INVERSE_SET_HPP_

#ifndef INVCORR_CORE_HPP_
#define INVCORR_CORE_HPP_

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace invcorr {

using Idx = int;

// Bad or inconsistent user input (file contents, precondition violations).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search or enumeration exceeded its configured budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A property the theory guarantees failed to hold; indicates a bug or
// corrupted structure, never a user error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Finite magma given by its multiplication table. Elements are dense
// indices 0..n-1; the table is row-major, so at(a, b) = a*b.
struct MulTable {
  Idx n = 0;
  std::vector<Idx> tab;

  Idx at(Idx a, Idx b) const { return tab[static_cast<size_t>(a) * n + b]; }
  bool well_formed() const;
  bool operator==(const MulTable&) const = default;
};

bool check_associative(const MulTable& t);
std::optional<std::array<Idx, 3>> associativity_witness(const MulTable& t);

// Inverse semigroup: associative table where every element has a unique
// generalized inverse. inv and idempotents are always computed from the
// table, never supplied.
struct InverseSemigroup {
  MulTable base;
  std::vector<Idx> inv;
  std::vector<Idx> idempotents;  // sorted

  Idx size() const { return base.n; }
  Idx mul(Idx a, Idx b) const { return base.at(a, b); }
  Idx star(Idx a) const { return inv[a]; }
  bool is_idempotent(Idx e) const { return base.at(e, e) == e; }
  std::optional<Idx> identity() const;
  std::optional<Idx> zero() const;
  bool operator==(const InverseSemigroup&) const = default;
};

using SgPtr = std::shared_ptr<const InverseSemigroup>;

enum class RecognizeError { NotAssociative, NotRegular, NotUnique };

struct RecognizeFailure {
  RecognizeError reason;
  Idx witness;  // offending element, or -1
};

struct RecognizeResult {
  std::optional<InverseSemigroup> sg;
  std::optional<RecognizeFailure> failure;
  bool ok() const { return sg.has_value(); }
};

// Scans for generalized inverses and cross-checks the verdict against the
// idempotent-commutation criterion; the two recognitions must agree.
RecognizeResult recognize_inverse(const MulTable& t);

// recognize_inverse or throw InputError naming `what`.
InverseSemigroup require_inverse(const MulTable& t, const std::string& what);
SgPtr make_semigroup(const MulTable& t, const std::string& what);

const char* recognize_error_name(RecognizeError e);

// Natural partial order a <= b. Evaluates all four equivalent formulations
// and insists they agree.
bool natural_order(const InverseSemigroup& s, Idx a, Idx b);

// Least two-sided ideal containing seed.
std::vector<Idx> ideal_closure(const InverseSemigroup& s,
                               const std::vector<Idx>& seed);
bool is_two_sided_ideal(const InverseSemigroup& s,
                        const std::vector<Idx>& members);
bool is_subsemigroup(const InverseSemigroup& s,
                     const std::vector<Idx>& members);
bool is_inverse_subsemigroup(const InverseSemigroup& s,
                             const std::vector<Idx>& members);

// st = s't for all t in the ideal forces s = s'. Left and right
// formulations are both evaluated and must agree.
bool is_essential_ideal(const InverseSemigroup& s,
                        const std::vector<Idx>& ideal);

// A subsemigroup re-indexed as a standalone semigroup, with maps between
// the two index spaces (from_parent holds -1 off the subset).
struct SubSemigroup {
  SgPtr sg;
  std::vector<Idx> to_parent;
  std::vector<Idx> from_parent;
};
SubSemigroup subsemigroup(const SgPtr& parent, std::vector<Idx> members);

struct SemigroupHom {
  SgPtr source;
  SgPtr target;
  std::vector<Idx> map;
};

bool check_hom(const SemigroupHom& h);

// Backtracking isomorphism search pruned by element invariants
// (idempotency, order-ideal sizes, generated-ideal sizes).
std::optional<std::vector<Idx>> find_isomorphism(const InverseSemigroup& a,
                                                 const InverseSemigroup& b);
bool isomorphic(const InverseSemigroup& a, const InverseSemigroup& b);

// Theorem check: if theta restricted to both ideals is injective with equal
// images, the ideals coincide. Throws InputError when hypotheses fail.
bool restrict_hom_ideal_agreement(const SemigroupHom& theta,
                                  const std::vector<Idx>& ideal1,
                                  const std::vector<Idx>& ideal2);

}  // namespace invcorr

#endif  // INVCORR_CORE_HPP_

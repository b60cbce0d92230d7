#ifndef AMALGAM_REGULARITY_HPP_
#define AMALGAM_REGULARITY_HPP_

// Principal systems and the regular / singular (black hole) split.

#include <optional>
#include <string>

#include "amalgam/cosetalg.hpp"
#include "amalgam/normal_form.hpp"

namespace amalgam {

// E_{g,h}: the c in C for which p_k c = c_1 p'_k, ..., p_1 c_{k-1} = c_k p'_1
// is solvable in C.  Empty when the lengths or factor sequences differ.
std::optional<CosetOfC> principal_system_solve(AmalgamContext const& ctx,
                                               NormalForm const& g,
                                               NormalForm const& h);

// c_k for a given first unknown c, or nothing if some c_i leaves C.  The
// result lives on the side of p_1.
std::optional<Word> propagate_system(AmalgamContext const& ctx,
                                     NormalForm const& g, NormalForm const& h,
                                     Word c, Side c_side);

struct RegularityReport {
  enum class Verdict { Regular, Singular };
  enum class Witness { None, BadPair, Normalizer, ZSet };

  Verdict verdict = Verdict::Regular;
  Witness kind = Witness::None;
  // BadPair: nontrivial c with g c g^-1 in C.  Normalizer: nontrivial element
  // of C ∩ C^g.  ZSet: the element of Z_t(C) that c is conjugate to.
  Word element;
  Word t;           // ZSet: transversal element
  Word conjugator;  // ZSet: conjugator inside C
  std::string reason;

  bool regular() const noexcept { return verdict == Verdict::Regular; }
};

RegularityReport classify(AmalgamContext const& ctx, NormalForm const& g);
RegularityReport classify(AmalgamContext const& ctx, Word const& raw,
                          RepPolicy const& policy = RepPolicy::canonical());

enum class CRClass { CRgt1, CR0, CR1, NotCR };
char const* cr_class_name(CRClass c) noexcept;

struct CRMembership {
  CRClass cls = CRClass::NotCR;
  // For CRgt1 and CR0: a regular cyclically reduced conjugate of the input.
  std::optional<CyclicForm> regular_form;
};
CRMembership cr_membership(AmalgamContext const& ctx, Word const& raw,
                           RepPolicy const& policy = RepPolicy::canonical());

}  // namespace amalgam

#endif  // AMALGAM_REGULARITY_HPP_

#ifndef AMALGAM_COSETALG_HPP_
#define AMALGAM_COSETALG_HPP_

// Cosets K c with K <= C and c in C inside one factor: the values taken by
// the principal-system recursion.

#include <optional>

#include "amalgam/context.hpp"

namespace amalgam {

struct CosetOfC {
  Side side;
  GeneratingTuple subgroup;  // over the factor alphabet of `side`
  Word rep;                  // in C
};

// C itself, as the coset C * 1 on side s.
CosetOfC whole_c(AmalgamContext const& ctx, Side s);

// p (K rep) q ∩ C, where p and q are words of the factor of d.
std::optional<CosetOfC> shift(AmalgamContext const& ctx, CosetOfC const& d,
                              Word const& p, Word const& q);

// Throws std::invalid_argument if the sides differ.
std::optional<CosetOfC> intersect(CosetOfC const& d1, CosetOfC const& d2);

struct Cardinality {
  enum class Tag { Empty, Singleton, Infinite };
  Tag tag;
  Word element;  // the unique member when Singleton
};
Cardinality cardinality(AmalgamContext const& ctx, std::optional<CosetOfC> const& d);

// The image of d on the other side (phi for A -> B, psi for B -> A).
CosetOfC transfer(AmalgamContext const& ctx, CosetOfC const& d);
CosetOfC move_to(AmalgamContext const& ctx, CosetOfC const& d, Side s);

// Membership of a factor word in the coset.
bool coset_contains(CosetOfC const& d, Word const& w);

}  // namespace amalgam

#endif  // AMALGAM_COSETALG_HPP_

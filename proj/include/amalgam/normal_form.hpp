#ifndef AMALGAM_NORMAL_FORM_HPP_
#define AMALGAM_NORMAL_FORM_HPP_

// Syllables, reduced forms, normal forms and cyclically reduced forms of
// elements of G = A *_C B.

#include <string>
#include <vector>

#include "amalgam/context.hpp"

namespace amalgam {

struct Syllable {
  Side side;
  Word word;  // over the factor alphabet of `side`, nonempty

  friend bool operator==(Syllable const&, Syllable const&) = default;
};

// c g_1 ... g_n.  The head is written on the side of g_1, or on side A
// when there are no syllables.
struct NormalForm {
  Side head_side = Side::A;
  Word head;
  std::vector<Syllable> syllables;

  std::size_t length() const noexcept { return syllables.size(); }
  friend bool operator==(NormalForm const&, NormalForm const&) = default;
};

// Choice of right coset representatives of C in A and in B.
class RepPolicy {
 public:
  enum class Kind { Canonical, AdversarialExampleOne };

  // Geodesic representatives read off the subgroup graphs.
  static RepPolicy canonical() noexcept { return RepPolicy(Kind::Canonical, 0); }
  // Representatives b^-k d a^k for the cosets C d a^k and x^-k z y^k for
  // C z y^k (k a nonzero multiple of p), canonical elsewhere.  Only valid
  // over the presentation A: a b d; B: x y z; C: a^p = x; C: b = y^p, which
  // is checked here.
  static RepPolicy paper_example_one(AmalgamContext const& ctx, long p);

  Kind kind() const noexcept { return kind_; }
  long p() const noexcept { return p_; }
  std::string name() const;

 private:
  RepPolicy(Kind kind, long p) : kind_(kind), p_(p) {}
  Kind kind_;
  long p_;
};

struct CosetSplit {
  Word head;  // in C
  Word rep;   // w == head * rep
};
CosetSplit split(AmalgamContext const& ctx, Side side, Word const& w,
                 RepPolicy const& policy);

// Maximal blocks of letters from one factor.
std::vector<Syllable> syllable_decompose(AmalgamContext const& ctx, Word const& raw);

Word to_word(AmalgamContext const& ctx, std::vector<Syllable> const& syllables);
Word to_word(AmalgamContext const& ctx, NormalForm const& nf);

// Removes syllables lying in C by merging them into their neighbours.  The
// head is nonempty only when everything collapses into C.
NormalForm reduced_form(AmalgamContext const& ctx,
                        std::vector<Syllable> const& syllables);

// Right-to-left rewriting into c g_1 ... g_n with g_i chosen by `policy`.
// When `trace` is given it receives |c_j| after each step.
NormalForm normal_form(AmalgamContext const& ctx, Word const& raw,
                       RepPolicy const& policy = RepPolicy::canonical(),
                       std::vector<std::size_t>* trace = nullptr);
NormalForm normal_form(AmalgamContext const& ctx,
                       std::vector<Syllable> const& syllables,
                       RepPolicy const& policy = RepPolicy::canonical(),
                       std::vector<std::size_t>* trace = nullptr);

struct CyclicForm {
  NormalForm form;
  Word conjugator;  // raw == conjugator * form * conjugator^-1 in G
  // False when the conjugacy-into-C check was skipped for a length 1 form.
  bool complete = true;
};
// With allow_cmsp false this stops before the length 1 conjugacy check, so
// the result is cyclically reduced only when its length exceeds 1.
CyclicForm cyclic_form(AmalgamContext const& ctx, Word const& raw,
                       RepPolicy const& policy = RepPolicy::canonical(),
                       bool allow_cmsp = true);

struct CyclicPermutation {
  NormalForm form;
  Word conjugator;  // form == conjugator^-1 * g * conjugator
};
// For g = c p_1 ... p_k: g itself, then the normal forms of
// p_{j+1} ... p_k c p_1 ... p_j for j = 1 .. k-1.
std::vector<CyclicPermutation> cyclic_permutations(
    AmalgamContext const& ctx, NormalForm const& g,
    RepPolicy const& policy = RepPolicy::canonical());

// `a^2 | A: d | B: z` (head first, `1` for the identity).
std::string render(NormalForm const& nf);

}  // namespace amalgam

#endif  // AMALGAM_NORMAL_FORM_HPP_

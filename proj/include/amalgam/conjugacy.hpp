#ifndef AMALGAM_CONJUGACY_HPP_
#define AMALGAM_CONJUGACY_HPP_

// Conjugacy search in G = A *_C B.  Partial: inputs whose cyclically reduced
// forms are all singular may come back Undecided.

#include <optional>
#include <string>

#include "amalgam/normal_form.hpp"

namespace amalgam {

struct ConjugacyOutcome {
  enum class Tag { Conjugate, NotConjugate, Undecided };
  Tag tag;
  Word conjugator;  // Conjugate: z with z^-1 u z == v in G
  std::string reason;
};
char const* tag_name(ConjugacyOutcome::Tag tag) noexcept;

ConjugacyOutcome conjugacy_search(AmalgamContext const& ctx, Word const& u,
                                  Word const& v,
                                  RepPolicy const& policy = RepPolicy::canonical());

// Some z with |z| <= bound and z^-1 u z == v, by meet-in-the-middle over
// words of length ceil(bound/2) and floor(bound/2).
std::optional<Word> brute_conjugacy_oracle(
    AmalgamContext const& ctx, Word const& u, Word const& v, std::size_t bound,
    RepPolicy const& policy = RepPolicy::canonical());

// All reduced words of length <= n over `al`, shortlex.
std::vector<Word> words_up_to(AlphabetPtr const& al, std::size_t n);

}  // namespace amalgam

#endif  // AMALGAM_CONJUGACY_HPP_

#ifndef AMALGAM_CONTEXT_HPP_
#define AMALGAM_CONTEXT_HPP_

// A validated presentation of G = A *_C B with A = F(X), B = F(Y) and C
// given by generator pairs u_i = v_i.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "amalgam/stallings.hpp"
#include "amalgam/words.hpp"

namespace amalgam {

enum class Side : std::uint8_t { A, B };

constexpr Side other(Side s) noexcept { return s == Side::A ? Side::B : Side::A; }
inline char const* side_name(Side s) noexcept { return s == Side::A ? "A" : "B"; }

// The pairing does not define an isomorphism between the two copies of C, or
// the alphabets overlap.  pair_index() is the offending C-line, or npos.
class InvalidPresentation : public std::invalid_argument {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  InvalidPresentation(std::size_t pair_index, std::string const& what)
      : std::invalid_argument(what), pair_index_(pair_index) {}
  std::size_t pair_index() const noexcept { return pair_index_; }

 private:
  std::size_t pair_index_;
};

struct GeneratorPair {
  Word u;  // over X
  Word v;  // over Y
};

class AmalgamContext {
 public:
  AmalgamContext(AlphabetPtr x, AlphabetPtr y, std::vector<GeneratorPair> pairs);

  AlphabetPtr const& alphabet(Side s) const noexcept {
    return s == Side::A ? x_ : y_;
  }
  // X followed by Y; words of G are written over this alphabet.
  AlphabetPtr const& ambient() const noexcept { return g_; }
  std::vector<GeneratorPair> const& pairs() const noexcept { return pairs_; }

  GeneratingTuple const& subgroup(Side s) const noexcept {
    return side(s).subgroup;
  }
  std::vector<Word> const& basis(Side s) const noexcept {
    return side(s).subgroup.basis();
  }
  // Image of each basis element of C on side s, written on the other side.
  std::vector<Word> const& basis_images(Side s) const noexcept {
    return side(s).basis_images;
  }
  ZSetIndex const& z_index(Side s) const noexcept { return side(s).z_index; }
  std::vector<Word> const& transversal(Side s) const noexcept {
    return side(s).z_index.transversal();
  }
  bool malnormal(Side s) const noexcept { return transversal(s).size() <= 1; }
  // Largest diameter of the two subgroup graphs of C.
  std::size_t max_diameter() const noexcept { return max_diameter_; }

  // c in C on side `from`, rewritten on the other side through the basis
  // image table.  Throws NotAMember when c is not in C.
  Word transfer(Word const& c, Side from) const;
  // The same element computed from the generator expression of c.
  Word transfer_by_generators(Word const& c, Side from) const;
  // c on side `to`, transferring only when the sides differ.
  Word move(Word const& c, Side from, Side to) const {
    return from == to ? c : transfer(c, from);
  }

  Word embed(Word const& factor_word, Side s) const;
  Side side_of(Letter l) const noexcept {
    return l.index < x_->size() ? Side::A : Side::B;
  }
  // Letter of the ambient alphabet as a letter of its factor.
  Letter local(Letter l) const noexcept {
    if (l.index < x_->size()) {
      return l;
    }
    return Letter{static_cast<std::uint32_t>(l.index - x_->size()), l.sign};
  }

 private:
  struct PerSide {
    GeneratingTuple subgroup;
    std::vector<Word> basis_images;
    std::vector<Word> generator_images;  // the paired words, in pair order
    ZSetIndex z_index;
  };
  PerSide const& side(Side s) const noexcept { return s == Side::A ? a_ : b_; }

  struct Validated;
  AmalgamContext(Validated v);

  AlphabetPtr x_;
  AlphabetPtr y_;
  AlphabetPtr g_;
  std::vector<GeneratorPair> pairs_;
  PerSide a_;
  PerSide b_;
  std::size_t max_diameter_ = 0;
};

AmalgamContext build_context(AlphabetPtr x, AlphabetPtr y,
                             std::vector<GeneratorPair> pairs);

}  // namespace amalgam

#endif  // AMALGAM_CONTEXT_HPP_

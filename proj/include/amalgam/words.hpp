#ifndef AMALGAM_WORDS_HPP_
#define AMALGAM_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace amalgam {

// Raised when a letter index or word text does not fit its alphabet.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Syntax error in word text; column is 1-based within the parsed text.
class WordSyntaxError : public MalformedInput {
 public:
  WordSyntaxError(std::size_t column, std::string const& what)
      : MalformedInput(what), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// Raised when two words over different alphabets are combined.
class AlphabetMismatch : public std::logic_error {
 public:
  AlphabetMismatch() : std::logic_error("words belong to different alphabets") {}
};

// An ordered set of generator names.  Letter indices are positions in this
// list and never change after construction.  Alphabets are compared by
// identity: two separately built alphabets with equal names are distinct.
class Alphabet {
 public:
  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names);

  // "t1", "t2", ... (or any other prefix), for auxiliary alphabets.
  static std::shared_ptr<const Alphabet> numbered(std::string_view prefix,
                                                  std::size_t count);

  std::size_t size() const noexcept { return names_.size(); }
  std::string const& name(std::size_t index) const { return names_.at(index); }
  std::vector<std::string> const& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  static bool valid_name(std::string_view name) noexcept;

 private:
  explicit Alphabet(std::vector<std::string> names);

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

struct Letter {
  std::uint32_t index = 0;
  std::int8_t sign = 1;

  constexpr Letter inverse() const noexcept {
    return Letter{index, static_cast<std::int8_t>(-sign)};
  }
  constexpr bool cancels(Letter other) const noexcept {
    return index == other.index && sign == -other.sign;
  }
  // Dense code used by automata: 2*index for +, 2*index+1 for -.
  constexpr std::size_t code() const noexcept {
    return 2 * static_cast<std::size_t>(index) + (sign < 0 ? 1 : 0);
  }
  static constexpr Letter from_code(std::size_t code) noexcept {
    return Letter{static_cast<std::uint32_t>(code / 2),
                  static_cast<std::int8_t>(code % 2 == 0 ? 1 : -1)};
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter a, Letter b) noexcept {
    return a.code() <=> b.code();
  }
};

// A freely reduced word over a fixed alphabet.  Every constructor reduces, so
// a Word value never contains an adjacent letter/inverse pair.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet);
  Word(AlphabetPtr alphabet, std::span<Letter const> raw);
  Word(AlphabetPtr alphabet, std::initializer_list<Letter> raw);

  // Caller guarantees the letters are in range and already freely reduced.
  static Word unchecked(AlphabetPtr alphabet, std::vector<Letter> letters);

  // Single generator raised to a nonzero power.
  static Word power(AlphabetPtr alphabet, std::size_t index, long exponent);

  AlphabetPtr const& alphabet() const noexcept { return alphabet_; }
  std::vector<Letter> const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t n) const;
  Word rotated(std::size_t n) const;

  // Renders `a^2 b^-1 d`; the identity renders as the empty string.
  std::string to_string() const;

  friend bool operator==(Word const& a, Word const& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }
  // Shortlex order; meaningful only within one alphabet.
  friend bool operator<(Word const& a, Word const& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

Word free_reduce(std::span<Letter const> raw, AlphabetPtr const& alphabet);
Word concat(Word const& u, Word const& v);
Word concat(Word const& u, Word const& v, Word const& w);
Word invert(Word const& u);
// Returns g^-1 h g.
Word conjugate(Word const& h, Word const& g);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w == conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(Word const& w);

// Lexicographically least rotation of a cyclically reduced word, under the
// letter order a < a^-1 < b < b^-1 < ...
Word least_rotation(Word const& cyclically_reduced);

// Some z with z^-1 u z == v in the free group, or nothing.
std::optional<Word> free_conjugacy(Word const& u, Word const& v);

// Homomorphic image: letter i maps to table[i], inverses to inverses.
Word substitute(Word const& w, std::span<Word const> table,
                AlphabetPtr const& target);

// Word text grammar: whitespace separated tokens `name` or `name^k` with k a
// nonzero integer; the empty string (or a lone `1`) is the identity.
Word parse_word(std::string_view text, AlphabetPtr const& alphabet);

}  // namespace amalgam

#endif  // AMALGAM_WORDS_HPP_

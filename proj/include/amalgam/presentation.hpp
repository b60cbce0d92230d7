#ifndef AMALGAM_PRESENTATION_HPP_
#define AMALGAM_PRESENTATION_HPP_

// Group files:
//
//   A: a b d
//   B: x y z
//   C: a^2 = x
//   C: b = y^2
//
// One A: and one B: line, one C: line per generator pair (X-word = Y-word),
// `#` starts a comment.

#include <string>
#include <string_view>
#include <vector>

#include "amalgam/context.hpp"

namespace amalgam {

class PresentationSyntaxError : public MalformedInput {
 public:
  PresentationSyntaxError(std::size_t line, std::size_t column,
                          std::string const& message)
      : MalformedInput("line " + std::to_string(line) + ", column "
                       + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct Presentation {
  AlphabetPtr x;
  AlphabetPtr y;
  std::vector<GeneratorPair> pairs;
  std::vector<std::size_t> pair_lines;  // source line of each C: line
};

Presentation parse_presentation(std::string_view text);

// Normalized text: comments dropped, words re-rendered.
std::string print_presentation(Presentation const& p);

// Parses and validates.  InvalidPresentation messages name the C: line.
AmalgamContext load_context(std::string_view text);
AmalgamContext load_context_file(std::string const& path);

}  // namespace amalgam

#endif  // AMALGAM_PRESENTATION_HPP_

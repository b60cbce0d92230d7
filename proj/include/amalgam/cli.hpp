#ifndef AMALGAM_CLI_HPP_
#define AMALGAM_CLI_HPP_

// The `amalgam` command line.
//
//   validate    -g FILE
//   nf          -g FILE -w WORD [--policy P] [--trace]
//   reduce      -g FILE -w WORD
//   cyclic      -g FILE -w WORD [--policy P] [--modified]
//   classify    -g FILE -w WORD [--policy P]
//   transversal -g FILE
//   conj        -g FILE -u WORD -v WORD [--policy P] [--oracle N]
//   bench       paper-ex1 --p P --m M | paper-ex2 --p P --n N
//               | random [-g FILE] --length L --samples S --seed SEED
//
// Every command accepts --json.  P is `canonical`, `paper-ex1` or
// `paper-ex1:P`.

#include <iosfwd>
#include <string>
#include <vector>

namespace amalgam {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kInvalidPresentation = 3;
inline constexpr int kUndecided = 4;
}  // namespace exit_code

// `args` excludes the program name.
int run_command(std::vector<std::string> const& args, std::ostream& out,
                std::ostream& err);

}  // namespace amalgam

#endif  // AMALGAM_CLI_HPP_

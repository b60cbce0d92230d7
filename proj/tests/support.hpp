#ifndef AMALGAM_TESTS_SUPPORT_HPP_
#define AMALGAM_TESTS_SUPPORT_HPP_

#include <string>

#include "catch_amalgamated.hpp"
#include "testkit.hpp"

namespace Catch {
template <>
struct StringMaker<amalgam::Word> {
  static std::string convert(amalgam::Word const& w) {
    return w.empty() ? "<1>" : "<" + w.to_string() + ">";
  }
};
template <>
struct StringMaker<amalgam::NormalForm> {
  static std::string convert(amalgam::NormalForm const& nf) {
    return "[" + amalgam::render(nf) + "]";
  }
};
}  // namespace Catch

#endif  // AMALGAM_TESTS_SUPPORT_HPP_

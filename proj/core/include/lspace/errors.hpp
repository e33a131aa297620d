#ifndef LSPACE_ERRORS_HPP
#define LSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lspace {

// Malformed or inconsistent input data (bad graph documents, unknown
// letters, sets outside the family, out-of-range indices).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A structurally valid value fed to an operation outside its domain
// (gluing onto a filter whose base ultrafilter misses the range, cutting
// a word that is not a beginning, composing non-composable arrows).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lspace

#endif  // LSPACE_ERRORS_HPP

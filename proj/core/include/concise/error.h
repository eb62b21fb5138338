#ifndef CONCISE_ERROR_H_
#define CONCISE_ERROR_H_

#include <stdexcept>
#include <string>

namespace concise {

// Raised for malformed or inconsistent user input (files, flags, corpora).
// The CLI maps it to exit code 1; anything else escaping is exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace concise

#endif  // CONCISE_ERROR_H_

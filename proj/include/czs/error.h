#ifndef CZS_ERROR_H
#define CZS_ERROR_H

#include <stdexcept>
#include <string>

namespace czs {

// Raised for invalid input: bad circuits, wrong qubit counts, mismatched arities.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace czs

#endif

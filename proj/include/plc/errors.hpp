#pragma once

#include <stdexcept>
#include <string>

namespace plc {

/// Bad caller input: malformed words, out-of-range letters, illegal moves.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal model assumption failed at runtime (a bug or a wrong
/// interpretation), e.g. a merged region that is not convex.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace plc

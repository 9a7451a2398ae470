#pragma once

#include <stdexcept>
#include <string>

namespace hfcorr {

/// Malformed input: non-Hermitian matrix, bad CLI value, invalid config.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A physical parameter outside its domain (negative R, KT <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Matrix is not a density matrix (eigenvalue below the clamping band,
/// trace != 1).
class NotAStateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Threshold finders: no positive-concurrence region in the bracket.
class NoEntanglementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hfcorr

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gf2hd {

// Two hypervectors (or a vector and a memory) built under different
// geometries were combined.
struct ConfigMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// cleanup() called on a memory with no entries.
struct EmptyVocabularyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Two candidates drew equal top vote counts; the readout is ambiguous and is
// reported as such rather than broken by a lexicographic pick.
struct TiedWinnerError : std::runtime_error {
  TiedWinnerError(std::string message, std::vector<std::string> tied_tokens)
      : std::runtime_error(std::move(message)), tied(std::move(tied_tokens)) {}
  std::vector<std::string> tied;
};

// Kind/property query against a record whose bundle holds no bindings.
struct EmptyBundleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gf2hd

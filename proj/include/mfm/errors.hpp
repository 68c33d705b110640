#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mfm {

enum class errc {
  parse,               // malformed document, bad field type, non-finite number
  io,                  // file not readable/writable
  structure,           // orphan cell, level gap, duplicate id, childless interior cell
  sibling_collision,   // two siblings carry the same value
  empty_level,         // a level <= depth holds no cells
  envelope_violation,  // tree is not a martingale: value outside [min,max] of children
  infeasible,          // constraint cannot be met (alpha outside range, bad rule output)
  convergence,         // iteration cap reached
  hash_mismatch,       // measure document does not belong to the given tree
  bad_argument,        // precondition violated by the caller
};

class error : public std::runtime_error {
 public:
  error(errc code, std::string message, std::string cell = {})
      : std::runtime_error(std::move(message)), code_(code), cell_(std::move(cell)) {}

  errc code() const noexcept { return code_; }

  // Offending cell id, when one is known.
  const std::string& cell() const noexcept { return cell_; }

 private:
  errc code_;
  std::string cell_;
};

}  // namespace mfm

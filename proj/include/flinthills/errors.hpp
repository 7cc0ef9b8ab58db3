#ifndef FLINTHILLS_ERRORS_HPP
#define FLINTHILLS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flinthills {

// Exit-status taxonomy used by the CLI: 0 ok, 2 usage, 3 precision,
// 4 verification failed, 5 I/O.
enum class exit_code : int {
  ok = 0,
  usage = 2,
  precision = 3,
  verification = 4,
  io = 5,
};

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
  virtual exit_code code() const { return exit_code::usage; }
};

// Precondition / argument violations.
struct usage_error : error {
  using error::error;
  exit_code code() const override { return exit_code::usage; }
};

// Requested digits cannot be delivered (cancellation, threshold
// undecidability, continued-fraction exhaustion, ...).
struct precision_error : error {
  using error::error;
  exit_code code() const override { return exit_code::precision; }
};

// Evaluation point too close to a pole of the kernel.  Carries the
// offending distance as a decimal string.
struct pole_proximity_error : precision_error {
  pole_proximity_error(const std::string& what, std::string distance)
      : precision_error(what), distance(std::move(distance)) {}
  std::string distance;
};

struct verification_error : error {
  using error::error;
  exit_code code() const override { return exit_code::verification; }
};

struct io_error : error {
  using error::error;
  exit_code code() const override { return exit_code::io; }
};

// Checkpoint hash mismatch or precision-stamp mismatch.
struct checkpoint_error : io_error {
  using io_error::io_error;
};

}  // namespace flinthills

#endif

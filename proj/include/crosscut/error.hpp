#pragma once

#include <stdexcept>
#include <string>

namespace crosscut {

// Failure classes surfaced by the library. CLI maps verdict-style failures to
// exit code 1 and everything below to exit code 2.
enum class Errc {
  duplicate_label,
  unknown_label,
  cycle_detected,
  empty_subset,
  guard_exceeded,
  hypothesis_violated,
  no_maximum,
  empty_gamma_b,
  not_connected,
  not_a_simplex,
  size_guard,
  io_error,
  usage_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace crosscut

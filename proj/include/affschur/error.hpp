#pragma once
// Shared error taxonomy for the affschur library.
// Numeric values are part of the stable C API (see include/affschur.h).

#include <stdexcept>
#include <string>

namespace affschur {

enum class Errc : int {
  ok = 0,
  usage = 1,             // bad arguments / malformed input
  parse = 2,             // unparseable text or JSON
  mode_mismatch = 3,     // operands live in different coefficient rings
  bad_mode = 4,          // operation undefined for this ring mode
  not_divisible = 5,     // exact division left a remainder
  divide_by_zero = 6,
  group_mismatch = 7,    // mixed periods / incompatible group elements
  not_grassmannian = 8,
  not_a_core = 9,
  part_too_large = 10,   // partition outside the allowed alcove
  cutoff_too_small = 11, // requested data exceeds the working truncation
  inconsistent = 12,     // an internal linear system had no solution
  insufficient_data = 13,// window/table too small for the requested check
  check_failed = 14,     // a verification ran and the property failed
  internal = 15,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errcName(Errc c) {
  switch (c) {
    case Errc::ok: return "ok";
    case Errc::usage: return "usage";
    case Errc::parse: return "parse";
    case Errc::mode_mismatch: return "mode-mismatch";
    case Errc::bad_mode: return "bad-mode";
    case Errc::not_divisible: return "not-divisible";
    case Errc::divide_by_zero: return "divide-by-zero";
    case Errc::group_mismatch: return "group-mismatch";
    case Errc::not_grassmannian: return "not-grassmannian";
    case Errc::not_a_core: return "not-a-core";
    case Errc::part_too_large: return "part-too-large";
    case Errc::cutoff_too_small: return "cutoff-too-small";
    case Errc::inconsistent: return "inconsistent";
    case Errc::insufficient_data: return "insufficient-data";
    case Errc::check_failed: return "check-failed";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace affschur

#pragma once

#include <stdexcept>
#include <string>

namespace ncfan {

// Failure categories surfaced by the library. Configuration problems
// (bad descriptor, bad input file) are distinguished from invariant
// failures so the CLI can map them to different exit codes.
enum class Errc {
  InvalidDescriptor,
  GuardExceeded,
  BadCustomRoots,
  NotUnit,
  NotARoot,
  SingularMatrix,
  DegenerateCone,
  SimpleSystemSizeMismatch,
  RhoInconsistent,
  IndexOutOfRange,
  MismatchWithDirectAX,
  FacetSizeMismatch,
  NotInNCP,
  RoundTripFailure,
  ChamberUnassigned,
  ChamberMultiplyAssigned,
  RankNot3,
  BadFile,
};

const char* errc_name(Errc code);

// True for errors caused by user input rather than a failed internal check.
bool is_config_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace ncfan

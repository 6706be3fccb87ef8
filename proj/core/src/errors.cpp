#include "ncfan/errors.hpp"

namespace ncfan {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidDescriptor: return "InvalidDescriptor";
    case Errc::GuardExceeded: return "GuardExceeded";
    case Errc::BadCustomRoots: return "BadCustomRoots";
    case Errc::NotUnit: return "NotUnit";
    case Errc::NotARoot: return "NotARoot";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::DegenerateCone: return "DegenerateCone";
    case Errc::SimpleSystemSizeMismatch: return "SimpleSystemSizeMismatch";
    case Errc::RhoInconsistent: return "RhoInconsistent";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::MismatchWithDirectAX: return "MismatchWithDirectAX";
    case Errc::FacetSizeMismatch: return "FacetSizeMismatch";
    case Errc::NotInNCP: return "NotInNCP";
    case Errc::RoundTripFailure: return "RoundTripFailure";
    case Errc::ChamberUnassigned: return "ChamberUnassigned";
    case Errc::ChamberMultiplyAssigned: return "ChamberMultiplyAssigned";
    case Errc::RankNot3: return "RankNot3";
    case Errc::BadFile: return "BadFile";
  }
  return "UnknownError";
}

bool is_config_error(Errc code) {
  switch (code) {
    case Errc::InvalidDescriptor:
    case Errc::GuardExceeded:
    case Errc::BadCustomRoots:
    case Errc::RankNot3:
    case Errc::BadFile:
      return true;
    default:
      return false;
  }
}

}  // namespace ncfan

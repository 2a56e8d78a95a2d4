#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace declat {

enum class ErrorCode {
  kEmptyLattice,
  kDuplicateLabel,
  kUnknownLabel,
  kTooLarge,
  kNotAPoset,
  kNoBottom,
  kNoMeet,
  kNoJoin,
  kNotDistributive,
  kBottomHasNoValue,
  kMStarUndefined,
  kEmptySet,
  kNotPrime,
  kNotDecomposable,
  kNotIncomparable,
  kElementInsidePrime,
  kBottomElement,
  kInvalidArgument,
  kCapExceeded,
  kUnknownTheoremId,
  kUnknownImplicationId,
  kUnknownCatalogName,
  kParse,
  kIo,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this type; `code()` identifies the
// contract violation, `what()` carries the offending labels.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyLattice: return "EmptyLattice";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotAPoset: return "NotAPoset";
    case ErrorCode::kNoBottom: return "NoBottom";
    case ErrorCode::kNoMeet: return "NoMeet";
    case ErrorCode::kNoJoin: return "NoJoin";
    case ErrorCode::kNotDistributive: return "NotDistributive";
    case ErrorCode::kBottomHasNoValue: return "BottomHasNoValue";
    case ErrorCode::kMStarUndefined: return "MStarUndefined";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNotDecomposable: return "NotDecomposable";
    case ErrorCode::kNotIncomparable: return "NotIncomparable";
    case ErrorCode::kElementInsidePrime: return "ElementInsidePrime";
    case ErrorCode::kBottomElement: return "BottomElement";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kUnknownTheoremId: return "UnknownTheoremId";
    case ErrorCode::kUnknownImplicationId: return "UnknownImplicationId";
    case ErrorCode::kUnknownCatalogName: return "UnknownCatalogName";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace declat

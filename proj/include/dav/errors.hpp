#pragma once

#include <stdexcept>
#include <string>

namespace dav {

enum class Err {
  OrderTooLarge,
  InvalidAction,
  InvalidParameter,
  NotAbelian,
  NotAHomomorphism,
  UnknownGroup,
  NotGenerating,
  NotASubsequence,
  EmptySequence,
  LengthCap,
  ResourceCap,
  FingerprintMismatch,
  CorruptFile,
  ParseError,
  ValidationError,
  MissingData,
  IoError,
};

class DavError : public std::runtime_error {
public:
  DavError(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw DavError(code, what);
}

}  // namespace dav

#pragma once

#include <stdexcept>
#include <string>

namespace hm {

enum class ErrorCode {
  InvalidArgument,
  PointOutsideDomain,
  DegenerateBoundary,
  InversionAtCenter,
  EmptyInput,
  UnsupportedInfinityInDomain,
  UnsupportedMoebiusDisk,
  Disconnected,
  ResolutionTooCoarse,
  NotTwoExtremal,
  UnknownCurvature,
  MetricUnavailable,
  OutsideDisk,
  VanishingCore,
  VanishingDerivative,
  BadParameters,
  PolyLikePole,
  NonConvergent,
  NegativeCoefficient,
  NotAttestedUnivalent,
  NoRoot,
  ConstraintViolation,
  HypergeometricFailure,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode c, const std::string& what) : std::runtime_error(what), code_(c) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hm

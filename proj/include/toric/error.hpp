#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorKind {
  InvalidInput,
  NotASublattice,
  NotFullRank,
  NotInCone,
  InvalidFan,
  NotComplete,
  WrongDimension,
  OriginNotInterior,
  NotFullDimensional,
  NotPointed,
  HypothesisFailed,
  NoFullDimensionalCone,
  Inconsistent,
  DegreeOutOfRange,
  DegreeNotInLattice,
  DegreeNotInCone,
  EmptyPolyhedron,
  NotAWall,
  SearchExhausted,
  LNotInRelativeInterior,
  CertificateInvalid,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toric

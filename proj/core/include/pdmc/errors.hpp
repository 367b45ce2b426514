#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdmc {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define PDMC_ERROR_CLASS(Name)  \
  class Name : public Error {   \
   public:                      \
    using Error::Error;         \
  }

// Parameter / construction errors.
PDMC_ERROR_CLASS(BadParamsError);
PDMC_ERROR_CLASS(NotPrimeError);
PDMC_ERROR_CLASS(ReducibleModulusError);
PDMC_ERROR_CLASS(FieldMismatchError);
PDMC_ERROR_CLASS(ZeroInverseError);

// Linear algebra errors.
PDMC_ERROR_CLASS(RankDeficientError);
PDMC_ERROR_CLASS(NotInRowSpaceError);
PDMC_ERROR_CLASS(NotBlockStaircaseError);

// Code construction / decoding errors.
PDMC_ERROR_CLASS(TooLargeForExhaustiveError);
PDMC_ERROR_CLASS(OrderMismatchError);
PDMC_ERROR_CLASS(LengthMismatchError);
PDMC_ERROR_CLASS(CapacityExceededError);

// Masking scheme errors.
PDMC_ERROR_CLASS(TooManyStuckError);
PDMC_ERROR_CLASS(MaskingInfeasibleError);
PDMC_ERROR_CLASS(NoFeasibleCoefficientError);
PDMC_ERROR_CLASS(DualDistanceTooSmallError);
PDMC_ERROR_CLASS(DistanceTooSmallError);

// Channel errors.
PDMC_ERROR_CLASS(NotWrittenError);

#undef PDMC_ERROR_CLASS

// A block of the staircase partition is longer than the allowed maximum.
class BlockTooLongError : public Error {
 public:
  BlockTooLongError(std::size_t row, std::size_t len)
      : Error("block of row " + std::to_string(row) + " has length " +
              std::to_string(len)),
        row(row),
        len(len) {}
  std::size_t row;
  std::size_t len;
};

// A word written to memory has label 0 at one or more stuck positions.
class ConstraintViolationError : public Error {
 public:
  explicit ConstraintViolationError(std::vector<std::size_t> positions)
      : Error("write violates stuck-at-1 constraint at " +
              std::to_string(positions.size()) + " position(s)"),
        positions(std::move(positions)) {}
  std::vector<std::size_t> positions;
};

}  // namespace pdmc

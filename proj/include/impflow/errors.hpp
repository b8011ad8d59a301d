#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace impflow {

// Base for everything the library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor or network shape disagreement.
struct DimensionError : Error {
  using Error::Error;
};

// Numerically invalid value: non-finite input, parameter outside its domain.
struct DomainError : Error {
  using Error::Error;
};

// Invalid argument to an operation (empty dataset, bad fraction, ...).
struct ArgumentError : Error {
  using Error::Error;
};

// Training diverged; carries the offending epoch.
struct TrainingError : Error {
  std::size_t epoch;
  TrainingError(const std::string& msg, std::size_t epoch_)
      : Error(msg), epoch(epoch_) {}
};

// A pruning step would empty a group.
struct LayerCollapseError : Error {
  std::string group;
  LayerCollapseError(const std::string& msg, std::string group_)
      : Error(msg), group(std::move(group_)) {}
};

// Filesystem-level failure, with the path that caused it.
struct IoError : Error {
  std::string path;
  IoError(const std::string& msg, std::string path_)
      : Error(msg + ": " + path_), path(std::move(path_)) {}
};

// On-disk data failed validation; `fault` identifies the violated rule so
// tests and callers can tell the failures apart.
enum class FormatFault {
  bad_magic,
  bad_header,
  count_mismatch,
  truncated,
  version_mismatch,
  shape_mismatch,
  non_monotone_mask,
  nonzero_pruned_weight,
  missing_cell,
  bad_value,
};

struct FormatError : Error {
  FormatFault fault;
  FormatError(FormatFault fault_, const std::string& msg)
      : Error(msg), fault(fault_) {}
};

}  // namespace impflow

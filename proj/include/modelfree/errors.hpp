#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modelfree {

// Base class for all library errors. The CLI maps DataError/ModelError to
// exit code 2 and UsageError to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problems with input data (files, columns, cells).
class DataError : public Error {
 public:
  using Error::Error;
};

// Problems with model structure or numerics (rank, dimensions, degeneracy).
class ModelError : public Error {
 public:
  using Error::Error;
};

// Misuse of the public interface (bad flags, bad levels, bad configs).
class UsageError : public Error {
 public:
  using Error::Error;
};

// --- tabular ---

class EmptyFileError final : public DataError {
 public:
  using DataError::DataError;
};

class MissingHeaderError final : public DataError {
 public:
  using DataError::DataError;
};

class RaggedRowError final : public DataError {
 public:
  RaggedRowError(std::size_t row, const std::string& what)
      : DataError(what), row(row) {}
  std::size_t row;  // 1-based body row
};

class NonNumericCellError final : public DataError {
 public:
  NonNumericCellError(std::size_t row, std::size_t col, const std::string& what)
      : DataError(what), row(row), col(col) {}
  std::size_t row;  // 1-based body row
  std::size_t col;  // 1-based column
};

class DuplicateColumnError final : public DataError {
 public:
  using DataError::DataError;
};

class UnknownColumnError final : public DataError {
 public:
  explicit UnknownColumnError(const std::string& name)
      : DataError("unknown column: " + name), name(name) {}
  std::string name;
};

class DegenerateColumnError final : public DataError {
 public:
  using DataError::DataError;
};

// --- formula ---

class FormulaSyntaxError final : public UsageError {
 public:
  FormulaSyntaxError(std::size_t position, const std::string& what)
      : UsageError(what), position(position) {}
  std::size_t position;  // 0-based offset into the formula string
};

class DuplicateTermError final : public UsageError {
 public:
  explicit DuplicateTermError(const std::string& name)
      : UsageError("duplicate term: " + name), name(name) {}
  std::string name;
};

class ResponseInTermsError final : public UsageError {
 public:
  using UsageError::UsageError;
};

// --- least squares ---

class RankDeficientError final : public ModelError {
 public:
  RankDeficientError(std::size_t column, const std::string& what)
      : ModelError(what), column(column) {}
  std::size_t column;  // 0-based index of first dependent design column
};

class TooFewRowsError final : public ModelError {
 public:
  using ModelError::ModelError;
};

class NegativeWeightError final : public ModelError {
 public:
  using ModelError::ModelError;
};

class DegenerateFitError final : public ModelError {
 public:
  using ModelError::ModelError;
};

// --- variance estimation ---

class SingularJError final : public ModelError {
 public:
  using ModelError::ModelError;
};

class DuplicateMethodError final : public UsageError {
 public:
  using UsageError::UsageError;
};

class RankDeficientReplicateError final : public ModelError {
 public:
  RankDeficientReplicateError(std::size_t replicate, std::size_t attempts,
                              const std::string& what)
      : ModelError(what), replicate(replicate), attempts(attempts) {}
  std::size_t replicate;
  std::size_t attempts;
};

class MTooLargeError final : public UsageError {
 public:
  using UsageError::UsageError;
};

// --- inference ---

class BadLevelError final : public UsageError {
 public:
  using UsageError::UsageError;
};

class SingularConstraintCovError final : public ModelError {
 public:
  using ModelError::ModelError;
};

class RankDeficientRError final : public ModelError {
 public:
  using ModelError::ModelError;
};

class NoReplicatesError final : public UsageError {
 public:
  using UsageError::UsageError;
};

class DegenerateReplicatesError final : public ModelError {
 public:
  using ModelError::ModelError;
};

// --- diagnostics ---

class ConstantRegressorError final : public DataError {
 public:
  using DataError::DataError;
};

class NonpositiveGammaError final : public UsageError {
 public:
  using UsageError::UsageError;
};

// --- plotkit ---

class EmptyPanelError final : public UsageError {
 public:
  using UsageError::UsageError;
};

class NonFiniteCoordinateError final : public UsageError {
 public:
  using UsageError::UsageError;
};

// --- cli / configs ---

class ConfigError final : public UsageError {
 public:
  using UsageError::UsageError;
};

}  // namespace modelfree

#pragma once

#include <stdexcept>
#include <string>

namespace neurognn {

/// Malformed or incomplete data files (taxonomy, manifest, clip headers).
class SchemaError : public std::runtime_error {
public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite values fed into a numeric stage.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Checkpoint transfer with incompatible architecture.
class TransferError : public std::runtime_error {
public:
  explicit TransferError(const std::string& what) : std::runtime_error(what) {}
};

/// Metric requested on inputs where it has no definition (e.g. single-class AUROC).
class UndefinedMetricError : public std::runtime_error {
public:
  explicit UndefinedMetricError(const std::string& what) : std::runtime_error(what) {}
};

/// Training configuration that cannot be run (empty split, bad weights, ...).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace neurognn

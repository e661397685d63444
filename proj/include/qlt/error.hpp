#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlt {

// Base of all library errors. `name` is the stable machine-readable kind,
// `module` the subsystem that raised it; the CLI prints both on the
// diagnostic stream and maps every Error to exit code 3.
class Error : public std::runtime_error {
 public:
  Error(std::string module, std::string name, const std::string& message)
      : std::runtime_error(message),
        module_(std::move(module)),
        name_(std::move(name)) {}

  const std::string& module() const noexcept { return module_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string module_;
  std::string name_;
};

struct SyntaxError : Error {
  SyntaxError(std::size_t offset, std::string expected, const std::string& message)
      : Error("expr", "SyntaxError", message),
        offset(offset),
        expected(std::move(expected)) {}
  std::size_t offset;
  std::string expected;
};

struct UnknownIdentifier : Error {
  UnknownIdentifier(std::size_t offset, const std::string& id)
      : Error("expr", "UnknownIdentifier", "unknown identifier '" + id + "'"),
        offset(offset),
        identifier(id) {}
  std::size_t offset;
  std::string identifier;
};

struct NonIntegerExponent : Error {
  explicit NonIntegerExponent(std::size_t offset)
      : Error("expr", "NonIntegerExponent",
              "exponent of '^' must be an integer literal"),
        offset(offset) {}
  std::size_t offset;
};

// Evaluation left the function's domain (log of zero, non-finite result).
struct DomainError : Error {
  explicit DomainError(const std::string& message, std::string module = "expr")
      : Error(std::move(module), "DomainError", message) {}
};

struct OrderTooLarge : Error {
  OrderTooLarge(int requested, int cap)
      : Error("autodiff", "OrderTooLarge",
              "derivative order " + std::to_string(requested) +
                  " exceeds cap " + std::to_string(cap)) {}
};

struct NoConvergence : Error {
  explicit NoConvergence(const std::string& message)
      : Error("zerofind", "NoConvergence", message) {}
};

struct NotSimpleZero : Error {
  explicit NotSimpleZero(const std::string& message)
      : Error("zerofind", "NotSimpleZero", message) {}
};

struct NotCommonZero : Error {
  explicit NotCommonZero(const std::string& message)
      : Error("zerofind", "NotCommonZero", message) {}
};

struct RankDeficient : Error {
  explicit RankDeficient(const std::string& message)
      : Error("ratio", "RankDeficient", message) {}
};

struct InconsistentKernels : Error {
  explicit InconsistentKernels(const std::string& message)
      : Error("ratio", "InconsistentKernels", message) {}
};

struct NotTransversal : Error {
  explicit NotTransversal(const std::string& message)
      : Error("limits", "NotTransversal", message) {}
};

struct SampleOnZeroSet : Error {
  explicit SampleOnZeroSet(const std::string& message)
      : Error("limits", "SampleOnZeroSet", message) {}
};

struct ReconstructionFailure : Error {
  explicit ReconstructionFailure(const std::string& message)
      : Error("extension", "ReconstructionFailure", message) {}
};

struct NotComplexLinear : Error {
  explicit NotComplexLinear(const std::string& message)
      : Error("extension", "NotComplexLinear", message) {}
};

struct ZeroDerivativeOnPath : Error {
  explicit ZeroDerivativeOnPath(const std::string& message)
      : Error("whitney", "ZeroDerivativeOnPath", message) {}
};

}  // namespace qlt

#ifndef RACG_ERRORS_HPP
#define RACG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace racg {

/// Operands live over different defining graphs.
class GraphMismatch : public std::invalid_argument {
 public:
  explicit GraphMismatch(const std::string& where)
      : std::invalid_argument(where + ": operands belong to different graphs") {}
};

/// A named precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string operation, std::string condition)
      : std::invalid_argument(operation + ": precondition violated: " + condition),
        operation_(std::move(operation)),
        condition_(std::move(condition)) {}

  const std::string& operation() const { return operation_; }
  const std::string& condition() const { return condition_; }

 private:
  std::string operation_;
  std::string condition_;
};

/// Malformed input text; line is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& message)
      : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " +
                           message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace racg

#endif  // RACG_ERRORS_HPP

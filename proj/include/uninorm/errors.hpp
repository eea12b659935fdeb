#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace uninorm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownElement : public Error {
 public:
  explicit UnknownElement(std::string id)
      : Error("unknown element '" + id + "'"), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class NotAPartialOrder : public Error {
 public:
  using Error::Error;
};

class NotBounded : public Error {
 public:
  using Error::Error;
};

// Carries the first pair (in declared order) lacking a unique meet or join.
class NotALattice : public Error {
 public:
  NotALattice(std::string x, std::string y, std::string what)
      : Error("elements '" + x + "' and '" + y + "' have no unique " + what),
        x_(std::move(x)),
        y_(std::move(y)) {}
  const std::string& first() const noexcept { return x_; }
  const std::string& second() const noexcept { return y_; }

 private:
  std::string x_, y_;
};

class BoundsNotComparable : public Error {
 public:
  using Error::Error;
};

class MismatchedLattice : public Error {
 public:
  MismatchedLattice() : Error("operands live on different lattices") {}
};

/// A closure/interior/t-norm/t-conorm axiom failed; `witnesses` are element ids.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<std::string> witnesses)
      : Error(make_message(axiom, witnesses)),
        axiom_(std::move(axiom)),
        witnesses_(std::move(witnesses)) {}
  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

 private:
  static std::string make_message(const std::string& axiom, const std::vector<std::string>& w) {
    std::string msg = "axiom " + axiom + " violated";
    if (!w.empty()) {
      msg += " at (";
      for (std::size_t i = 0; i < w.size(); ++i) msg += (i ? ", " : "") + w[i];
      msg += ")";
    }
    return msg;
  }
  std::string axiom_;
  std::vector<std::string> witnesses_;
};

class OutOfDomainOutput : public Error {
 public:
  OutOfDomainOutput(const std::string& x, const std::string& y)
      : Error("table value at (" + x + ", " + y + ") leaves the domain") {}
};

class NotAPartition : public Error {
 public:
  using Error::Error;
};

class NotCommutative : public Error {
 public:
  using Error::Error;
};

class NotAUninorm : public Error {
 public:
  using Error::Error;
};

class HypothesesNotChecked : public Error {
 public:
  HypothesesNotChecked()
      : Error("characteristic conditions require a passing hypothesis report") {}
};

class CaseNotCovered : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class DomainTooLarge : public Error {
 public:
  using Error::Error;
};

class LatticeTooLarge : public Error {
 public:
  using Error::Error;
};

/// Malformed document. `line`/`column` are 1-based, 0 when the problem is structural.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
      : Error(line ? msg + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"
                   : msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

}  // namespace uninorm

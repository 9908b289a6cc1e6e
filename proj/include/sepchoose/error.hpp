#pragma once

#include <stdexcept>
#include <string>

namespace sepchoose {

// Base of every error the library throws. Negative answers (UNSAT, a
// rejected certificate, validation violations) are returned as data and
// never thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied search budget ran out before an answer was found.
// Callers must treat this as "unknown", never as a negative answer.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& budget, unsigned long long limit)
      : Error("budget exhausted: " + budget + " (limit " + std::to_string(limit) + ")"),
        budget_(budget),
        limit_(limit) {}

  const std::string& budget() const noexcept { return budget_; }
  unsigned long long limit() const noexcept { return limit_; }

 private:
  std::string budget_;
  unsigned long long limit_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

class RetriesExhausted : public Error {
 public:
  using Error::Error;
};

class CapacityExhausted : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed. Always a defect.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sepchoose

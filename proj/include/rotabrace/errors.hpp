#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rotabrace {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A structural axiom failed during verification.  `code` is a stable
/// machine-readable tag (e.g. "NotAssociative", "RB1", "DistributivityFailed")
/// and `witness` lists the element indices involved, in scan order.
class VerificationError : public Error {
 public:
  VerificationError(std::string code, std::vector<int> witness, const std::string& what)
      : Error(what), code_(std::move(code)), witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::string code_;
  std::vector<int> witness_;
};

/// A search was requested on a carrier larger than the configured cap.
class CarrierTooLarge : public Error {
 public:
  CarrierTooLarge(int order, int cap)
      : Error("carrier order " + std::to_string(order) + " exceeds cap " +
              std::to_string(cap)),
        order_(order),
        cap_(cap) {}

  int order() const noexcept { return order_; }
  int cap() const noexcept { return cap_; }

 private:
  int order_;
  int cap_;
};

/// An argument violated an operation's precondition (wrong kind of carrier,
/// subset out of range, missing pipeline stage, ...).
class PreconditionError : public Error {
 public:
  PreconditionError(std::string code, const std::string& what)
      : Error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace rotabrace

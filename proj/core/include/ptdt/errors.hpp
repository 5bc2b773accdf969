#pragma once

#include <stdexcept>
#include <string>

namespace ptdt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyPartition : public Error {
 public:
  explicit EmptyPartition(const std::string& op)
      : Error(op + ": undefined for the empty partition") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotPolynomial : public Error {
 public:
  using Error::Error;
};

class WindowUnknown : public Error {
 public:
  using Error::Error;
};

class InvalidIdeal : public Error {
 public:
  using Error::Error;
};

class LabelOutOfRange : public Error {
 public:
  using Error::Error;
};

class BoxOutOfWindow : public Error {
 public:
  using Error::Error;
};

class BadNodeChoice : public Error {
 public:
  using Error::Error;
};

class OddSector : public Error {
 public:
  using Error::Error;
};

class LabelConflict : public Error {
 public:
  using Error::Error;
};

class Unmatchable : public Error {
 public:
  using Error::Error;
};

}  // namespace ptdt

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqw {

// Base of every error the library raises. `kind()` is a stable identifier
// used in machine-readable error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message);

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message);
};

class DanglingNode : public Error {
 public:
  explicit DanglingNode(std::size_t node);
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

class NegativeWeight : public Error {
 public:
  NegativeWeight(std::size_t to, std::size_t from, double value);
};

class NotStochastic : public Error {
 public:
  NotStochastic(std::size_t column, double deviation);
  std::size_t column() const noexcept { return column_; }
  double deviation() const noexcept { return deviation_; }

 private:
  std::size_t column_;
  double deviation_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t field, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::size_t field_;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t bound);
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual);
};

class TooLarge : public Error {
 public:
  TooLarge(std::size_t n, std::size_t cap);
};

class TooSmall : public Error {
 public:
  TooSmall(std::size_t n, std::size_t minimum);
};

class InsufficientRange : public Error {
 public:
  explicit InsufficientRange(int t_q_max);
};

class RankFailed : public Error {
 public:
  explicit RankFailed(int t_q);
  int t_q() const noexcept { return t_q_; }

 private:
  int t_q_;
};

class UnsupportedSize : public Error {
 public:
  explicit UnsupportedSize(std::size_t n);
};

}  // namespace sqw

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace njcones {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- dissimilarity-map construction and parsing ---

class TooSmallError : public Error {
 public:
  using Error::Error;
};

class AsymmetryError : public Error {
 public:
  using Error::Error;
};

class NonzeroDiagonalError : public Error {
 public:
  using Error::Error;
};

class NegativeEntryError : public Error {
 public:
  using Error::Error;
};

/// Matrix-file parse failure, carries 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// --- neighbor-joining engine ---

class KTooSmallError : public Error {
 public:
  using Error::Error;
};

class MalformedTraceError : public Error {
 public:
  using Error::Error;
};

// --- ordered Newick strings ---

/// Structural grammar failure, carries the byte offset of the problem.
class GrammarError : public Error {
 public:
  GrammarError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Order labels are not a permutation of 1..n-3.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// Order labels do not decrease along every path away from the top node.
class OrderError : public Error {
 public:
  using Error::Error;
};

// --- enumeration and lattice paths ---

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class InvalidPathError : public Error {
 public:
  using Error::Error;
};

// --- experiment configuration ---

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace njcones

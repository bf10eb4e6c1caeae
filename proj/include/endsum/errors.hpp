#pragma once

#include <stdexcept>
#include <string>

namespace endsum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters, unusable configuration or lexicon files. CLI exit 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed corpus input (bad JSON line, duplicate id). CLI exit 2.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally valid input that degenerates to nothing usable
// (no candidate tweets, text empty after normalization). CLI exit 3.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace endsum

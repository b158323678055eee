// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spellkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed UTF-8. `line` is 1-based when the input was line oriented, 0 otherwise.
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t byte_offset, std::size_t line = 0)
      : Error(what), byte_offset_(byte_offset), line_(line) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t byte_offset_;
  std::size_t line_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Bad user-supplied data (duplicate ids, unparsable records, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// No lexicon candidate exists for a detected error; the token needs human review.
class NoCorrectionError : public Error {
 public:
  using Error::Error;
};

/// Base of every failure raised by a contextual scorer backend.
class ScorerError : public Error {
 public:
  using Error::Error;
};

/// Connection refused, reset, or timed out.
class ScorerTransportError : public ScorerError {
 public:
  using ScorerError::ScorerError;
};

class ScorerStatusError : public ScorerError {
 public:
  ScorerStatusError(const std::string& what, int status) : ScorerError(what), status_(status) {}
  int status() const noexcept { return status_; }

 private:
  int status_;
};

/// Response body is not the documented JSON shape.
class ScorerSchemaError : public ScorerError {
 public:
  using ScorerError::ScorerError;
};

class MissingWordError : public ScorerError {
 public:
  MissingWordError(const std::string& what, std::string word)
      : ScorerError(what), word_(std::move(word)) {}
  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

}  // namespace spellkit

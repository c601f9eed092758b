// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace lsr {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text in an input file. Carries the 1-based line, 0 if unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// File parsed but its contents disagree with its own header.
class StructuralError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain an operation is defined on.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Query outside raster or sensor bounds.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Scenario or scene does not describe a renderable configuration.
/// `field()` is the dotted path of the offending field when known.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message)
        : Error(field.empty() ? message : field + ": " + message),
          field_(std::move(field)),
          message_(message) {}

    const std::string& field() const { return field_; }
    const std::string& message() const { return message_; }

private:
    std::string field_;
    std::string message_;
};

class RenderError : public Error {
public:
    using Error::Error;
};

}  // namespace lsr

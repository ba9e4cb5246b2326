#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surfknot {

/// Invalid argument to a library operation (precondition violated by the caller).
class DomainError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// A desk-scale bound (matrix size, prime size, degree, quotient size) was exceeded.
/// The message names the violated bound.
class BoundExceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// A postcondition the library verifies about its own output failed.
class InternalError : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t line, std::size_t column, const std::string& message)
		: std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
		  line_(line), column_(column), message_(message)
	{
	}

	std::size_t line() const noexcept { return line_; }
	std::size_t column() const noexcept { return column_; }
	const std::string& message() const noexcept { return message_; }

private:
	std::size_t line_;
	std::size_t column_;
	std::string message_;
};

}  // namespace surfknot

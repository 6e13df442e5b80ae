#pragma once

#include <stdexcept>
#include <string>

namespace mnm {

/// Malformed input: bad table shapes, unknown labels, unparsable files.
class InputError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// An operation was called outside its precondition (e.g. a non-filter
/// where a filter is required, a non-strong algebra where strength is needed).
class PreconditionError : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

/// A mathematical guarantee did not hold on a finite instance. Raised only
/// when an existence result or well-definedness check fails, which means a
/// bug in this library or in the input that slipped past validation.
class InternalError : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

} // namespace mnm

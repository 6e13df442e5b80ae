#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace mnm {

using Rational = boost::multiprecision::cpp_rational;

/// An exact point of the standard NM-algebra on [0,1]. cpp_rational keeps
/// values reduced, so equality is structural.
class RationalPoint {
public:
	RationalPoint() = default;
	explicit RationalPoint(Rational v) : v_(std::move(v)) {
		if (v_ < 0 || v_ > 1)
			throw InputError("rational " + v_.str() + " lies outside [0,1]");
	}
	RationalPoint(long long num, long long den) : RationalPoint(make(num, den)) {}

	const Rational& value() const { return v_; }
	auto numerator() const { return boost::multiprecision::numerator(v_); }
	auto denominator() const { return boost::multiprecision::denominator(v_); }
	std::string str() const { return v_.str(); }

	bool operator==(const RationalPoint&) const = default;
	bool operator<(const RationalPoint& o) const { return v_ < o.v_; }
	bool operator<=(const RationalPoint& o) const { return v_ <= o.v_; }

private:
	static Rational make(long long num, long long den) {
		if (den == 0)
			throw InputError("zero denominator");
		return Rational(num, den);
	}
	Rational v_{0};
};

enum class StdOp { Mul, Imp, Meet, Join, Neg };

inline RationalPoint std_neg(const RationalPoint& x) { return RationalPoint(1 - x.value()); }

/// Nilpotent minimum on [0,1]:
///   x⊙y = 0 if x ≤ 1−y, else min(x,y)
///   x→y = 1 if x ≤ y, else max(1−x, y)
/// For Neg the second argument is ignored.
inline RationalPoint standard_nm(const RationalPoint& x, const RationalPoint& y, StdOp op) {
	const Rational& a = x.value();
	const Rational& b = y.value();
	switch (op) {
	case StdOp::Mul: return RationalPoint(a <= 1 - b ? Rational(0) : (a < b ? a : b));
	case StdOp::Imp: {
		if (a <= b)
			return RationalPoint(Rational(1));
		Rational na = 1 - a;
		return RationalPoint(na > b ? na : b);
	}
	case StdOp::Meet: return RationalPoint(a < b ? a : b);
	case StdOp::Join: return RationalPoint(a < b ? b : a);
	case StdOp::Neg: return std_neg(x);
	}
	throw InternalError("unknown standard operation");
}

inline StdOp parse_std_op(const std::string& s) {
	if (s == "mul") return StdOp::Mul;
	if (s == "imp") return StdOp::Imp;
	if (s == "meet") return StdOp::Meet;
	if (s == "join") return StdOp::Join;
	if (s == "neg") return StdOp::Neg;
	throw InputError("unknown standard operation '" + s + "'");
}

/// Parses "p/q", "p" or a decimal-free integer.
inline RationalPoint parse_rational(const std::string& s) {
	try {
		return RationalPoint(Rational(s));
	} catch (const InputError&) {
		throw;
	} catch (const std::exception&) {
		throw InputError("cannot parse rational '" + s + "'");
	}
}

} // namespace mnm

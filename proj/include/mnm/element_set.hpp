#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace mnm {

/// Index of an element in a finite algebra's universe.
using Element = std::size_t;

/// Upper bound on universe size; element sets are single machine words.
inline constexpr std::size_t kMaxElements = 64;

/// A subset of {0, ..., size-1} stored as a bit mask.
///
/// The ordering is the canonical one used for every list this library
/// emits: first by cardinality, then by the mask value.
class ElementSet {
public:
	constexpr ElementSet() = default;
	constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

	static ElementSet single(Element x) { return ElementSet(bit(x)); }

	static ElementSet full(std::size_t n) {
		if (n > kMaxElements)
			throw InputError("universe too large for ElementSet");
		return ElementSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
	}

	template <class Range>
	static ElementSet of(const Range& xs) {
		ElementSet s;
		for (auto x : xs)
			s.insert(static_cast<Element>(x));
		return s;
	}

	static ElementSet of(std::initializer_list<Element> xs) {
		ElementSet s;
		for (auto x : xs)
			s.insert(x);
		return s;
	}

	constexpr std::uint64_t bits() const { return bits_; }
	constexpr bool contains(Element x) const { return x < kMaxElements && ((bits_ >> x) & 1u); }
	void insert(Element x) { bits_ |= bit(x); }
	void erase(Element x) { bits_ &= ~bit(x); }
	constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
	constexpr bool empty() const { return bits_ == 0; }

	constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
	constexpr bool proper_subset_of(ElementSet o) const { return subset_of(o) && bits_ != o.bits_; }

	constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
	constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
	constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
	ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
	ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }

	constexpr bool operator==(const ElementSet&) const = default;
	constexpr std::strong_ordering operator<=>(const ElementSet& o) const {
		if (auto c = size() <=> o.size(); c != 0)
			return c;
		return bits_ <=> o.bits_;
	}

	std::vector<Element> elements() const {
		std::vector<Element> out;
		out.reserve(size());
		for (auto b = bits_; b != 0; b &= b - 1)
			out.push_back(static_cast<Element>(std::countr_zero(b)));
		return out;
	}

	/// Smallest member; the set must be nonempty.
	Element first() const { return static_cast<Element>(std::countr_zero(bits_)); }

	template <class F>
	void for_each(F&& f) const {
		for (auto b = bits_; b != 0; b &= b - 1)
			f(static_cast<Element>(std::countr_zero(b)));
	}

private:
	static std::uint64_t bit(Element x) {
		if (x >= kMaxElements)
			throw InputError("element index out of ElementSet range");
		return std::uint64_t{1} << x;
	}

	std::uint64_t bits_ = 0;
};

} // namespace mnm

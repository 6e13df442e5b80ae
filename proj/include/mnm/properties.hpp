#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace mnm {

/// Outcome of one universally quantified law checked over all tuples.
struct ClauseResult {
	std::string id;
	std::string statement;
	bool holds = true;
	std::vector<Element> counterexample{}; ///< first failing tuple, lexicographic
	std::size_t checked = 0;
	/// Inequality laws also record every tuple where the inequality is strict.
	bool inequality = false;
	std::vector<std::vector<Element>> strict{};
};

struct PropertyReport {
	std::vector<ClauseResult> clauses;

	bool all_hold() const {
		return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.holds; });
	}
	const ClauseResult& at(const std::string& id) const {
		for (const auto& c : clauses)
			if (c.id == id)
				return c;
		throw InputError("no clause with id '" + id + "'");
	}
	std::vector<std::string> failing() const {
		std::vector<std::string> out;
		for (const auto& c : clauses)
			if (!c.holds)
				out.push_back(c.id);
		return out;
	}
};

/// Calls f(t) for every tuple t in {0..n-1}^k in lexicographic order.
/// f returns false to stop early.
template <class F>
void for_each_tuple(std::size_t n, std::size_t k, F&& f) {
	std::vector<Element> t(k, 0);
	if (n == 0)
		return;
	while (true) {
		if (!f(static_cast<const std::vector<Element>&>(t)))
			return;
		std::size_t i = k;
		while (i > 0) {
			--i;
			if (++t[i] < n)
				break;
			t[i] = 0;
			if (i == 0)
				return;
		}
		if (k == 0)
			return;
	}
}

namespace detail {

/// Builds a ClauseResult from a predicate over k-tuples.
inline ClauseResult scan_law(std::string id, std::string statement, std::size_t n, std::size_t k,
                             const std::function<bool(const std::vector<Element>&)>& law) {
	ClauseResult r{std::move(id), std::move(statement)};
	for_each_tuple(n, k, [&](const std::vector<Element>& t) {
		++r.checked;
		if (!law(t)) {
			r.holds = false;
			r.counterexample = t;
			return false;
		}
		return true;
	});
	return r;
}

/// lhs(t) <= rhs(t) for all t; records strict tuples.
inline ClauseResult scan_inequality(std::string id, std::string statement, const FiniteNmAlgebra& a, std::size_t k,
                                    const std::function<std::pair<Element, Element>(const std::vector<Element>&)>& sides) {
	ClauseResult r{std::move(id), std::move(statement)};
	r.inequality = true;
	for_each_tuple(a.size(), k, [&](const std::vector<Element>& t) {
		++r.checked;
		auto [lo, hi] = sides(t);
		if (!a.leq(lo, hi)) {
			if (r.holds)
				r.counterexample = t;
			r.holds = false;
		} else if (lo != hi) {
			r.strict.push_back(t);
		}
		return true;
	});
	return r;
}

} // namespace detail

/// The twelve standard consequences of the NM axioms, each checked over
/// every tuple of elements. Report-only; never throws.
inline PropertyReport check_basic_properties(const FiniteNmAlgebra& a) {
	using detail::scan_law;
	const std::size_t n = a.size();
	const Element one = a.top(), zero = a.bottom();
	PropertyReport r;
	auto& c = r.clauses;
	c.push_back(scan_law("order-via-imp", "x <= y iff x -> y = 1", n, 2, [&](auto& t) {
		return a.leq(t[0], t[1]) == (a.imp(t[0], t[1]) == one);
	}));
	c.push_back(scan_law("imp-weakening", "x <= y -> x", n, 2, [&](auto& t) { return a.leq(t[0], a.imp(t[1], t[0])); }));
	c.push_back(scan_law("imp-antitone", "x <= y implies y -> z <= x -> z", n, 3, [&](auto& t) {
		return !a.leq(t[0], t[1]) || a.leq(a.imp(t[1], t[2]), a.imp(t[0], t[2]));
	}));
	c.push_back(scan_law("imp-monotone", "x <= y implies z -> x <= z -> y", n, 3, [&](auto& t) {
		return !a.leq(t[0], t[1]) || a.leq(a.imp(t[2], t[0]), a.imp(t[2], t[1]));
	}));
	c.push_back(scan_law("join-via-imp", "x v y = ((x -> y) -> y) ^ ((y -> x) -> x)", n, 2, [&](auto& t) {
		auto x = t[0], y = t[1];
		return a.join(x, y) == a.meet(a.imp(a.imp(x, y), y), a.imp(a.imp(y, x), x));
	}));
	c.push_back(scan_law("complement-laws", "x * ~x = 0 and x (+) ~x = 1", n, 1, [&](auto& t) {
		return a.mul(t[0], a.neg(t[0])) == zero && a.oplus(t[0], a.neg(t[0])) == one;
	}));
	c.push_back(scan_law("currying", "(x * y) -> z = x -> (y -> z)", n, 3, [&](auto& t) {
		return a.imp(a.mul(t[0], t[1]), t[2]) == a.imp(t[0], a.imp(t[1], t[2]));
	}));
	c.push_back(scan_law("imp-meet-absorb", "x -> y = x -> (x ^ y)", n, 2, [&](auto& t) {
		return a.imp(t[0], t[1]) == a.imp(t[0], a.meet(t[0], t[1]));
	}));
	c.push_back(scan_law("imp-distributes-meet", "x -> (y ^ z) = (x -> y) ^ (x -> z)", n, 3, [&](auto& t) {
		return a.imp(t[0], a.meet(t[1], t[2])) == a.meet(a.imp(t[0], t[1]), a.imp(t[0], t[2]));
	}));
	c.push_back(scan_law("join-imp", "(x v y) -> z = (x -> z) ^ (y -> z)", n, 3, [&](auto& t) {
		return a.imp(a.join(t[0], t[1]), t[2]) == a.meet(a.imp(t[0], t[2]), a.imp(t[1], t[2]));
	}));
	// Powers of a fixed element decrease and stabilise within |L| steps.
	c.push_back(scan_law("power-prelinearity", "(x -> y)^k v (y -> x)^k = 1 for all k >= 1", n, 2, [&](auto& t) {
		for (std::size_t k = 1; k <= n + 1; ++k)
			if (a.join(a.power(a.imp(t[0], t[1]), k), a.power(a.imp(t[1], t[0]), k)) != one)
				return false;
		return true;
	}));
	c.push_back(scan_law("meet-imp", "(x ^ y) -> z = (x -> z) v (y -> z)", n, 3, [&](auto& t) {
		return a.imp(a.meet(t[0], t[1]), t[2]) == a.join(a.imp(t[0], t[2]), a.imp(t[1], t[2]));
	}));
	return r;
}

/// The definability identities x*y = ~(x -> ~y) and x(+)y = ~(~x * ~y).
inline PropertyReport check_definability(const FiniteNmAlgebra& a) {
	using detail::scan_law;
	PropertyReport r;
	r.clauses.push_back(scan_law("mul-via-imp", "x * y = ~(x -> ~y)", a.size(), 2, [&](auto& t) {
		return a.mul(t[0], t[1]) == a.neg(a.imp(t[0], a.neg(t[1])));
	}));
	r.clauses.push_back(scan_law("oplus-de-morgan", "x (+) y = ~(~x * ~y)", a.size(), 2, [&](auto& t) {
		return a.oplus(t[0], t[1]) == a.neg(a.mul(a.neg(t[0]), a.neg(t[1])));
	}));
	return r;
}

struct BooleanVerdict {
	bool boolean = false;
	/// First pair with x*y != x^y (present iff not Boolean).
	std::optional<std::pair<Element, Element>> witness;
	/// First pair with x(+)y != xvy.
	std::optional<std::pair<Element, Element>> oplus_witness;
};

/// Boolean iff ⊙ coincides with ∧; the ⊕ = ∨ route is computed as well and
/// a disagreement between the two is an InternalError.
inline BooleanVerdict is_boolean(const FiniteNmAlgebra& a) {
	BooleanVerdict v;
	for (Element x = 0; x < a.size(); ++x)
		for (Element y = 0; y < a.size(); ++y) {
			if (!v.witness && a.mul(x, y) != a.meet(x, y))
				v.witness = std::make_pair(x, y);
			if (!v.oplus_witness && a.oplus(x, y) != a.join(x, y))
				v.oplus_witness = std::make_pair(x, y);
		}
	v.boolean = !v.witness;
	if (v.boolean != !v.oplus_witness)
		throw InternalError("mul=meet and oplus=join disagree on Booleanness");
	return v;
}

} // namespace mnm

#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "filters.hpp"
#include "parallel.hpp"
#include "properties.hpp"

namespace mnm {

/// A self-map on an algebra's universe: image[x] is the value at x.
struct QuantifierMap {
	std::vector<Element> image;

	Element operator()(Element x) const { return image[x]; }
	std::size_t size() const { return image.size(); }
	bool operator==(const QuantifierMap&) const = default;
	auto operator<=>(const QuantifierMap& o) const { return image <=> o.image; }

	static QuantifierMap identity(std::size_t n) {
		QuantifierMap q;
		for (Element x = 0; x < n; ++x)
			q.image.push_back(x);
		return q;
	}
};

/// Pass/fail per axiom with lexicographically first witness; never throws on
/// axiom failure.
using AxiomReport = PropertyReport;

inline void check_map_shape(const FiniteNmAlgebra& a, const QuantifierMap& q) {
	if (q.size() != a.size())
		throw InputError("map has " + std::to_string(q.size()) + " entries, algebra has " + std::to_string(a.size()));
	for (auto v : q.image)
		if (v >= a.size())
			throw InputError("map entry out of range");
}

/// ¬ q ¬, the dual of a map.
inline QuantifierMap dual_map(const FiniteNmAlgebra& a, const QuantifierMap& q) {
	QuantifierMap e;
	for (Element x = 0; x < a.size(); ++x)
		e.image.push_back(a.neg(q(a.neg(x))));
	return e;
}

inline ElementSet fixpoints_of(const QuantifierMap& q) {
	ElementSet s;
	for (Element x = 0; x < q.size(); ++x)
		if (q(x) == x)
			s.insert(x);
	return s;
}

inline ElementSet image_of(const QuantifierMap& q) { return ElementSet::of(q.image); }

/// U1-U4, each checked over all elements / pairs.
inline AxiomReport check_universal(const FiniteNmAlgebra& a, const QuantifierMap& q) {
	check_map_shape(a, q);
	using detail::scan_law;
	const std::size_t n = a.size();
	AxiomReport r;
	r.clauses.push_back(scan_law("U1", "Ax -> x = 1", n, 1, [&](auto& t) { return a.leq(q(t[0]), t[0]); }));
	r.clauses.push_back(scan_law("U2", "A(~x -> Ay) = ~Ax -> Ay", n, 2, [&](auto& t) {
		return q(a.imp(a.neg(t[0]), q(t[1]))) == a.imp(a.neg(q(t[0])), q(t[1]));
	}));
	r.clauses.push_back(scan_law("U3", "A(Ax -> y) = Ax -> Ay", n, 2, [&](auto& t) {
		return q(a.imp(q(t[0]), t[1])) == a.imp(q(t[0]), q(t[1]));
	}));
	r.clauses.push_back(scan_law("U4", "A(x v Ay) = Ax v Ay", n, 2, [&](auto& t) {
		return q(a.join(t[0], q(t[1]))) == a.join(q(t[0]), q(t[1]));
	}));
	return r;
}

namespace detail {

/// Early-exit U1-U4 test over a raw image, for enumeration kernels.
inline bool is_universal_fast(const FiniteNmAlgebra& a, const std::vector<Element>& q) {
	const std::size_t n = a.size();
	for (Element x = 0; x < n; ++x)
		if (!a.leq(q[x], x))
			return false;
	for (Element x = 0; x < n; ++x)
		for (Element y = 0; y < n; ++y) {
			const Element qx = q[x], qy = q[y];
			if (q[a.join(x, qy)] != a.join(qx, qy))
				return false;
			if (q[a.imp(qx, y)] != a.imp(qx, qy))
				return false;
			if (q[a.imp(a.neg(x), qy)] != a.imp(a.neg(qx), qy))
				return false;
		}
	return true;
}

inline bool join_preserving(const FiniteNmAlgebra& a, const std::vector<Element>& q) {
	for (Element x = 0; x < a.size(); ++x)
		for (Element y = 0; y < a.size(); ++y)
			if (q[a.join(x, y)] != a.join(q[x], q[y]))
				return false;
	return true;
}

} // namespace detail

struct StrongVerdict {
	bool strong = false;
	std::optional<std::pair<Element, Element>> witness; ///< first pair with A(x v y) != Ax v Ay
};

/// U4': A(x v y) = Ax v Ay for all pairs. Requires U1-U3.
inline StrongVerdict check_strong(const FiniteNmAlgebra& a, const QuantifierMap& q) {
	auto rep = check_universal(a, q);
	for (const char* id : {"U1", "U2", "U3"})
		if (!rep.at(id).holds)
			throw PreconditionError(std::string("check_strong: map fails ") + id);
	StrongVerdict v;
	for (Element x = 0; x < a.size() && !v.witness; ++x)
		for (Element y = 0; y < a.size(); ++y)
			if (q(a.join(x, y)) != a.join(q(x), q(y))) {
				v.witness = std::make_pair(x, y);
				break;
			}
	v.strong = !v.witness;
	return v;
}

/// An NM-algebra with a validated universal quantifier, the derived
/// existential quantifier and the fixpoint set.
class MonadicNmAlgebra {
public:
	const FiniteNmAlgebra& algebra() const { return algebra_; }
	std::size_t size() const { return algebra_.size(); }
	Element forall(Element x) const { return forall_(x); }
	Element exists(Element x) const { return exists_(x); }
	const QuantifierMap& forall_map() const { return forall_; }
	const QuantifierMap& exists_map() const { return exists_; }
	/// L_A = {x | Ax = x}
	ElementSet fixpoints() const { return fixpoints_; }
	bool strong() const { return strong_; }
	const std::string& name() const { return algebra_.name(); }

	friend MonadicNmAlgebra make_monadic(FiniteNmAlgebra a, QuantifierMap q);

private:
	MonadicNmAlgebra(FiniteNmAlgebra a, QuantifierMap q)
	    : algebra_(std::move(a)), forall_(std::move(q)), exists_(dual_map(algebra_, forall_)),
	      fixpoints_(fixpoints_of(forall_)) {
		strong_ = detail::join_preserving(algebra_, forall_.image);
	}

	FiniteNmAlgebra algebra_;
	QuantifierMap forall_, exists_;
	ElementSet fixpoints_;
	bool strong_ = false;
};

/// Throws PreconditionError naming the first failing axiom and witness.
inline MonadicNmAlgebra make_monadic(FiniteNmAlgebra a, QuantifierMap q) {
	auto rep = check_universal(a, q);
	for (const auto& c : rep.clauses)
		if (!c.holds)
			throw PreconditionError("not a universal quantifier: " + c.id + " fails at " +
			                        format_tuple(a.labels(), c.counterexample));
	return MonadicNmAlgebra(std::move(a), std::move(q));
}

struct ExistsResult {
	QuantifierMap map;
	AxiomReport report; ///< E1-E4
};

inline ExistsResult exists_of(const MonadicNmAlgebra& m) {
	using detail::scan_law;
	const auto& a = m.algebra();
	const std::size_t n = a.size();
	auto E = [&](Element x) { return m.exists(x); };
	ExistsResult r{m.exists_map(), {}};
	auto& c = r.report.clauses;
	c.push_back(scan_law("E1", "x -> Ex = 1", n, 1, [&](auto& t) { return a.leq(t[0], E(t[0])); }));
	c.push_back(scan_law("E2", "E(~x * Ey) = E~x * Ey", n, 2, [&](auto& t) {
		return E(a.mul(a.neg(t[0]), E(t[1]))) == a.mul(E(a.neg(t[0])), E(t[1]));
	}));
	c.push_back(scan_law("E3", "E(~Ex * ~y) = ~Ex * E~y", n, 2, [&](auto& t) {
		return E(a.mul(a.neg(E(t[0])), a.neg(t[1]))) == a.mul(a.neg(E(t[0])), E(a.neg(t[1])));
	}));
	c.push_back(scan_law("E4", "E(x ^ Ey) = Ex ^ Ey", n, 2, [&](auto& t) {
		return E(a.meet(t[0], E(t[1]))) == a.meet(E(t[0]), E(t[1]));
	}));
	return r;
}

/// W1-W5 for an independently supplied pair of maps.
inline AxiomReport check_w_axioms(const FiniteNmAlgebra& a, const QuantifierMap& qa, const QuantifierMap& qe) {
	check_map_shape(a, qa);
	check_map_shape(a, qe);
	using detail::scan_law;
	const std::size_t n = a.size();
	AxiomReport r;
	auto& c = r.clauses;
	c.push_back(scan_law("W1", "Ax -> x = 1", n, 1, [&](auto& t) { return a.leq(qa(t[0]), t[0]); }));
	c.push_back(scan_law("W2", "x -> Ex = 1", n, 1, [&](auto& t) { return a.leq(t[0], qe(t[0])); }));
	c.push_back(scan_law("W3", "A(x -> Ey) = Ex -> Ey", n, 2, [&](auto& t) {
		return qa(a.imp(t[0], qe(t[1]))) == a.imp(qe(t[0]), qe(t[1]));
	}));
	c.push_back(scan_law("W4", "A(Ex -> y) = Ex -> Ay", n, 2, [&](auto& t) {
		return qa(a.imp(qe(t[0]), t[1])) == a.imp(qe(t[0]), qa(t[1]));
	}));
	c.push_back(scan_law("W5", "A(x v Ey) = Ax v Ey", n, 2, [&](auto& t) {
		return qa(a.join(t[0], qe(t[1]))) == a.join(qa(t[0]), qe(t[1]));
	}));
	return r;
}

/// Calls f(image) for every map with f(x) in choices[x] (odometer order).
template <class F>
void for_each_choice_map(const std::vector<std::vector<Element>>& choices, F&& f) {
	const std::size_t n = choices.size();
	for (const auto& c : choices)
		if (c.empty())
			return;
	std::vector<std::size_t> idx(n, 0);
	std::vector<Element> img(n);
	for (std::size_t i = 0; i < n; ++i)
		img[i] = choices[i][0];
	while (true) {
		f(static_cast<const std::vector<Element>&>(img));
		std::size_t i = n;
		while (i > 0) {
			--i;
			if (++idx[i] < choices[i].size()) {
				img[i] = choices[i][idx[i]];
				break;
			}
			idx[i] = 0;
			img[i] = choices[i][0];
			if (i == 0)
				return;
		}
		if (n == 0)
			return;
	}
}

inline std::vector<std::vector<Element>> down_choices(const FiniteNmAlgebra& a) {
	std::vector<std::vector<Element>> ch(a.size());
	for (Element x = 0; x < a.size(); ++x)
		ch[x] = a.down_set(x).elements();
	return ch;
}

inline std::vector<std::vector<Element>> up_choices(const FiniteNmAlgebra& a) {
	std::vector<std::vector<Element>> ch(a.size());
	for (Element x = 0; x < a.size(); ++x)
		ch[x] = a.up_set(x).elements();
	return ch;
}

inline std::size_t choice_count(const std::vector<std::vector<Element>>& ch) {
	std::size_t c = 1;
	for (const auto& v : ch)
		c *= v.size();
	return c;
}

/// Every map satisfying U1-U4 (optionally also U4'), found by testing all
/// n^n self-maps. Independent of the pruned search; n <= 7.
inline std::vector<QuantifierMap> enumerate_quantifiers_naive(const FiniteNmAlgebra& a, bool strong_only = false) {
	const std::size_t n = a.size();
	if (n > 7)
		throw PreconditionError("naive enumeration is limited to 7 elements");
	std::vector<std::vector<Element>> all(n);
	for (Element x = 0; x < n; ++x)
		for (Element y = 0; y < n; ++y)
			all[x].push_back(y);
	std::vector<QuantifierMap> out;
	for_each_choice_map(all, [&](const std::vector<Element>& img) {
		if (detail::is_universal_fast(a, img) && (!strong_only || detail::join_preserving(a, img)))
			out.push_back(QuantifierMap{img});
	});
	std::sort(out.begin(), out.end());
	return out;
}

/// Every quantifier, found from its fixpoint subalgebra: for each subalgebra
/// S in which every x has a greatest member below it, Ax = max{s in S | s <= x}
/// is the only candidate; it is kept if it passes U1-U4 (and U4' when
/// strong_only). Subsets are split across `workers` threads; output sorted.
inline std::vector<QuantifierMap> enumerate_quantifiers(const FiniteNmAlgebra& a, bool strong_only = false,
                                                        std::size_t workers = 1) {
	const std::size_t n = a.size();
	if (n > 10)
		throw PreconditionError("pruned enumeration is limited to 10 elements");
	std::vector<Element> inner;
	for (Element x = 0; x < n; ++x)
		if (x != a.bottom() && x != a.top())
			inner.push_back(x);
	const std::size_t subsets = std::size_t{1} << inner.size();
	std::vector<std::vector<QuantifierMap>> found(std::max<std::size_t>(workers, 1));
	parallel_chunks(subsets, workers, [&](std::size_t w, std::size_t lo, std::size_t hi) {
		for (std::size_t mask = lo; mask < hi; ++mask) {
			ElementSet s = ElementSet::of({a.bottom(), a.top()});
			for (std::size_t i = 0; i < inner.size(); ++i)
				if (mask >> i & 1)
					s.insert(inner[i]);
			if (!is_subalgebra(a, s))
				continue;
			std::vector<Element> img(n);
			bool ok = true;
			for (Element x = 0; x < n && ok; ++x) {
				auto below = (s & a.down_set(x)).elements();
				std::optional<Element> best;
				for (auto f : below) {
					bool greatest = true;
					for (auto g : below)
						if (!a.leq(g, f))
							greatest = false;
					if (greatest)
						best = f;
				}
				if (!best)
					ok = false;
				else
					img[x] = *best;
			}
			if (!ok || !detail::is_universal_fast(a, img))
				continue;
			if (strong_only && !detail::join_preserving(a, img))
				continue;
			found[w].push_back(QuantifierMap{std::move(img)});
		}
	});
	std::vector<QuantifierMap> out;
	for (auto& v : found)
		out.insert(out.end(), v.begin(), v.end());
	std::sort(out.begin(), out.end());
	return out;
}

/// Prop-style derived laws for the universal quantifier (15 clauses) and
/// the existential quantifier (17 clauses). Inequalities record strict
/// tuples so converse failures can be reported.
inline PropertyReport quantifier_properties(const MonadicNmAlgebra& m) {
	using detail::scan_inequality;
	using detail::scan_law;
	const auto& a = m.algebra();
	const std::size_t n = a.size();
	const Element zero = a.bottom(), one = a.top();
	auto A = [&](Element x) { return m.forall(x); };
	auto E = [&](Element x) { return m.exists(x); };
	const ElementSet range_a = image_of(m.forall_map()), range_e = image_of(m.exists_map());
	ElementSet fix_e;
	for (Element x = 0; x < n; ++x)
		if (E(x) == x)
			fix_e.insert(x);
	PropertyReport r;
	auto& c = r.clauses;

	c.push_back(scan_law("A.zero", "A0 = 0", n, 0, [&](auto&) { return A(zero) == zero; }));
	c.push_back(scan_law("A.one", "A1 = 1", n, 0, [&](auto&) { return A(one) == one; }));
	c.push_back(scan_law("A.idempotent", "AAx = Ax", n, 1, [&](auto& t) { return A(A(t[0])) == A(t[0]); }));
	c.push_back(scan_law("A.monotone", "x <= y implies Ax <= Ay", n, 2, [&](auto& t) {
		return !a.leq(t[0], t[1]) || a.leq(A(t[0]), A(t[1]));
	}));
	c.push_back(scan_inequality("A.imp", "A(x -> y) <= Ax -> Ay", a, 2, [&](auto& t) {
		return std::make_pair(A(a.imp(t[0], t[1])), a.imp(A(t[0]), A(t[1])));
	}));
	c.push_back(scan_inequality("A.neg", "A~x <= ~Ax", a, 1, [&](auto& t) {
		return std::make_pair(A(a.neg(t[0])), a.neg(A(t[0])));
	}));
	c.push_back(scan_law("A.adjoint", "Ax <= y iff Ax <= Ay", n, 2, [&](auto& t) {
		return a.leq(A(t[0]), t[1]) == a.leq(A(t[0]), A(t[1]));
	}));
	c.push_back(scan_law("A.imp-closed", "A(Ax -> Ay) = Ax -> Ay", n, 2, [&](auto& t) {
		return A(a.imp(A(t[0]), A(t[1]))) == a.imp(A(t[0]), A(t[1]));
	}));
	c.push_back(scan_law("A.neg-closed", "A~Ax = ~Ax", n, 1, [&](auto& t) { return A(a.neg(A(t[0]))) == a.neg(A(t[0])); }));
	c.push_back(scan_law("A.meet", "A(x ^ y) = Ax ^ Ay", n, 2, [&](auto& t) {
		return A(a.meet(t[0], t[1])) == a.meet(A(t[0]), A(t[1]));
	}));
	c.push_back(scan_inequality("A.mul", "Ax * Ay <= A(x * y)", a, 2, [&](auto& t) {
		return std::make_pair(a.mul(A(t[0]), A(t[1])), A(a.mul(t[0], t[1])));
	}));
	c.push_back(scan_law("A.oplus-closed", "A(Ax (+) Ay) = Ax (+) Ay", n, 2, [&](auto& t) {
		return A(a.oplus(A(t[0]), A(t[1]))) == a.oplus(A(t[0]), A(t[1]));
	}));
	c.push_back(scan_inequality("A.oplus", "Ax (+) Ay <= A(x (+) y)", a, 2, [&](auto& t) {
		return std::make_pair(a.oplus(A(t[0]), A(t[1])), A(a.oplus(t[0], t[1])));
	}));
	c.push_back(scan_law("A.mul-closed", "A(Ax * Ay) = Ax * Ay", n, 2, [&](auto& t) {
		return A(a.mul(A(t[0]), A(t[1]))) == a.mul(A(t[0]), A(t[1]));
	}));
	c.push_back(scan_law("A.range", "AL = L_A", n, 0, [&](auto&) { return range_a == m.fixpoints(); }));
	c.push_back(scan_law("A.subalgebra", "AL is a subalgebra", n, 0, [&](auto&) { return is_subalgebra(a, range_a); }));

	c.push_back(scan_law("E.zero", "E0 = 0", n, 0, [&](auto&) { return E(zero) == zero; }));
	c.push_back(scan_law("E.one", "E1 = 1", n, 0, [&](auto&) { return E(one) == one; }));
	c.push_back(scan_law("E.idempotent", "EEx = Ex", n, 1, [&](auto& t) { return E(E(t[0])) == E(t[0]); }));
	c.push_back(scan_law("E.monotone", "x <= y implies Ex <= Ey", n, 2, [&](auto& t) {
		return !a.leq(t[0], t[1]) || a.leq(E(t[0]), E(t[1]));
	}));
	c.push_back(scan_law("E.mul-closed", "E(Ex * Ey) = Ex * Ey", n, 2, [&](auto& t) {
		return E(a.mul(E(t[0]), E(t[1]))) == a.mul(E(t[0]), E(t[1]));
	}));
	c.push_back(scan_law("E.neg-closed", "E~Ex = ~Ex", n, 1, [&](auto& t) { return E(a.neg(E(t[0]))) == a.neg(E(t[0])); }));
	c.push_back(scan_inequality("E.neg", "~Ex <= E~x", a, 1, [&](auto& t) {
		return std::make_pair(a.neg(E(t[0])), E(a.neg(t[0])));
	}));
	c.push_back(scan_law("E.join", "E(x v y) = Ex v Ey", n, 2, [&](auto& t) {
		return E(a.join(t[0], t[1])) == a.join(E(t[0]), E(t[1]));
	}));
	c.push_back(scan_law("E.adjoint", "x <= Ey iff Ex <= Ey", n, 2, [&](auto& t) {
		return a.leq(t[0], E(t[1])) == a.leq(E(t[0]), E(t[1]));
	}));
	c.push_back(scan_law("AE", "AEx = Ex", n, 1, [&](auto& t) { return A(E(t[0])) == E(t[0]); }));
	c.push_back(scan_law("EA", "EAx = Ax", n, 1, [&](auto& t) { return E(A(t[0])) == A(t[0]); }));
	c.push_back(scan_law("fix-agree", "Ax = x iff Ex = x", n, 1, [&](auto& t) {
		return (A(t[0]) == t[0]) == (E(t[0]) == t[0]);
	}));
	c.push_back(scan_law("E.range", "EL = L_E", n, 0, [&](auto&) { return range_e == fix_e; }));
	c.push_back(scan_law("ranges-equal", "EL = AL", n, 0, [&](auto&) { return range_e == range_a; }));
	c.push_back(scan_law("galois", "Ex <= y iff x <= Ay", n, 2, [&](auto& t) {
		return a.leq(E(t[0]), t[1]) == a.leq(t[0], A(t[1]));
	}));
	c.push_back(scan_law("A.exists-imp", "A(Ex -> Ey) = Ex -> Ey", n, 2, [&](auto& t) {
		return A(a.imp(E(t[0]), E(t[1]))) == a.imp(E(t[0]), E(t[1]));
	}));
	c.push_back(scan_law("E.oplus-closed", "E(Ex (+) Ey) = Ex (+) Ey", n, 2, [&](auto& t) {
		return E(a.oplus(E(t[0]), E(t[1]))) == a.oplus(E(t[0]), E(t[1]));
	}));
	return r;
}

/// Clause ids of quantifier_properties, universal part then existential part.
inline const std::vector<std::string>& forall_clause_ids() {
	static const std::vector<std::string> ids{"A.zero",       "A.one",          "A.idempotent", "A.monotone",
	                                          "A.imp",        "A.neg",          "A.adjoint",    "A.imp-closed",
	                                          "A.neg-closed", "A.meet",         "A.mul",        "A.oplus-closed",
	                                          "A.oplus",      "A.mul-closed",   "A.range",      "A.subalgebra"};
	return ids;
}

struct MonadicBooleanVerdict {
	bool boolean = false;                                ///< underlying algebra is Boolean
	BooleanVerdict algebra_verdict;
	std::size_t quantifiers_checked = 0;
	/// First (quantifier, x, y) with A(x ^ y) != Ax * Ay, over all quantifiers.
	std::optional<std::tuple<QuantifierMap, Element, Element>> meet_witness;
	/// First (quantifier, x, y) with A(x v y) != Ax (+) Ay.
	std::optional<std::tuple<QuantifierMap, Element, Element>> join_witness;
	bool meet_identity_own = true; ///< the identities for M's own quantifier
	bool join_identity_own = true;
	/// Boolean iff every quantifier satisfies A(x ^ y) = Ax * Ay.
	bool meet_agrees() const { return boolean == !meet_witness; }
	/// Boolean iff every quantifier satisfies A(x v y) = Ax (+) Ay. Only the
	/// direction "identity for all => Boolean" holds: on the four-element
	/// Boolean algebra the zero-one quantifier breaks the identity.
	bool join_agrees() const { return boolean == !join_witness; }
	bool join_implies_boolean() const { return join_witness || boolean; }
	bool consistent() const { return meet_agrees() && join_agrees(); }
};

/// Boolean test plus the two quantifier identities, checked for every
/// quantifier on the algebra (the identity map always among them).
inline MonadicBooleanVerdict is_monadic_boolean(const MonadicNmAlgebra& m) {
	const auto& a = m.algebra();
	MonadicBooleanVerdict v;
	v.algebra_verdict = is_boolean(a);
	v.boolean = v.algebra_verdict.boolean;
	std::vector<QuantifierMap> qs;
	if (a.size() <= 10)
		qs = enumerate_quantifiers(a);
	else
		qs = {QuantifierMap::identity(a.size()), m.forall_map()};
	v.quantifiers_checked = qs.size();
	auto scan = [&](const QuantifierMap& q, bool& meet_ok, bool& join_ok, auto&& on_meet, auto&& on_join) {
		for (Element x = 0; x < a.size(); ++x)
			for (Element y = 0; y < a.size(); ++y) {
				if (meet_ok && q(a.meet(x, y)) != a.mul(q(x), q(y))) {
					meet_ok = false;
					on_meet(x, y);
				}
				if (join_ok && q(a.join(x, y)) != a.oplus(q(x), q(y))) {
					join_ok = false;
					on_join(x, y);
				}
			}
	};
	for (const auto& q : qs) {
		bool mo = !v.meet_witness, jo = !v.join_witness;
		scan(q, mo, jo, [&](Element x, Element y) { v.meet_witness = std::make_tuple(q, x, y); },
		     [&](Element x, Element y) { v.join_witness = std::make_tuple(q, x, y); });
	}
	scan(m.forall_map(), v.meet_identity_own, v.join_identity_own, [](Element, Element) {}, [](Element, Element) {});
	return v;
}

/// M1-M5 and the condition A(Ax -> Ay) = Ax -> Ay for an arbitrary self-map.
inline AxiomReport check_modal(const FiniteNmAlgebra& a, const QuantifierMap& t) {
	check_map_shape(a, t);
	using detail::scan_law;
	const std::size_t n = a.size();
	AxiomReport r;
	auto& c = r.clauses;
	c.push_back(scan_law("M1", "t1 = 1", n, 0, [&](auto&) { return t(a.top()) == a.top(); }));
	c.push_back(scan_law("M2", "t(x v y) <= tx v ty", n, 2, [&](auto& s) {
		return a.leq(t(a.join(s[0], s[1])), a.join(t(s[0]), t(s[1])));
	}));
	c.push_back(scan_law("M3", "t(x -> y) <= tx -> ty", n, 2, [&](auto& s) {
		return a.leq(t(a.imp(s[0], s[1])), a.imp(t(s[0]), t(s[1])));
	}));
	c.push_back(scan_law("M4", "tx <= ttx", n, 1, [&](auto& s) { return a.leq(t(s[0]), t(t(s[0]))); }));
	c.push_back(scan_law("M5", "tx <= x", n, 1, [&](auto& s) { return a.leq(t(s[0]), s[0]); }));
	c.push_back(scan_law("star", "t(tx -> ty) = tx -> ty", n, 2, [&](auto& s) {
		return t(a.imp(t(s[0]), t(s[1]))) == a.imp(t(s[0]), t(s[1]));
	}));
	return r;
}

struct SetEquality {
	std::vector<QuantifierMap> left, right;
	bool equal() const { return left == right; }
	std::vector<QuantifierMap> only_left() const {
		std::vector<QuantifierMap> out;
		std::set_difference(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(out));
		return out;
	}
	std::vector<QuantifierMap> only_right() const {
		std::vector<QuantifierMap> out;
		std::set_difference(right.begin(), right.end(), left.begin(), left.end(), std::back_inserter(out));
		return out;
	}
};

/// Modal operators with the star condition versus strong quantifiers.
/// Left: deflationary maps passing M1-M5 and star. Right: pruned strong
/// enumeration.
inline SetEquality modal_strong_equivalence(const FiniteNmAlgebra& a) {
	auto ch = down_choices(a);
	if (choice_count(ch) > 50'000'000)
		throw PreconditionError("modal enumeration too large");
	SetEquality s;
	for_each_choice_map(ch, [&](const std::vector<Element>& img) {
		QuantifierMap t{img};
		if (check_modal(a, t).all_hold())
			s.left.push_back(std::move(t));
	});
	std::sort(s.left.begin(), s.left.end());
	s.right = enumerate_quantifiers(a, true);
	return s;
}

/// Universal quantifiers (U1-U4) against the W1-W5 axioms, compared three
/// ways:
///   tied:       maps A with W1-W5 holding for (A, ~A~), over all
///               deflationary A;
///   projection: first components of the free pairs;
///   pairs:      pairs (A, E) with W1-W5, A deflationary and E inflationary
///               searched independently, against (A, ~A~) for quantifiers A.
/// Pairs are encoded by concatenating the two images.
struct GhReport {
	std::vector<QuantifierMap> g_maps;      ///< quantifiers
	std::vector<QuantifierMap> h_tied;      ///< A with W1-W5 for (A, ~A~)
	std::vector<QuantifierMap> h_projection;
	std::vector<QuantifierMap> g_pairs, h_pairs;
	bool tied_equal() const { return g_maps == h_tied; }
	bool projection_equal() const { return g_maps == h_projection; }
	bool pairs_equal() const { return g_pairs == h_pairs; }
	/// Quantifier sets coincide (tied and projection readings).
	bool equal() const { return tied_equal() && projection_equal(); }
};

namespace detail {

inline bool w_axioms_fast(const FiniteNmAlgebra& a, const std::vector<Element>& qa, const std::vector<Element>& qe) {
	const std::size_t n = a.size();
	for (Element x = 0; x < n; ++x)
		if (!a.leq(qa[x], x) || !a.leq(x, qe[x]))
			return false;
	// W5 at x = 0 gives AEy = Ey; cheapest filter first.
	for (Element y = 0; y < n; ++y)
		if (qa[qe[y]] != qe[y])
			return false;
	for (Element x = 0; x < n; ++x)
		for (Element y = 0; y < n; ++y)
			if (qa[a.imp(x, qe[y])] != a.imp(qe[x], qe[y]) || qa[a.imp(qe[x], y)] != a.imp(qe[x], qa[y]) ||
			    qa[a.join(x, qe[y])] != a.join(qa[x], qe[y]))
				return false;
	return true;
}

inline QuantifierMap concat(const std::vector<Element>& p, const std::vector<Element>& q) {
	QuantifierMap r{p};
	r.image.insert(r.image.end(), q.begin(), q.end());
	return r;
}

} // namespace detail

inline GhReport verify_g_h_equivalence(const FiniteNmAlgebra& a) {
	auto dch = down_choices(a), uch = up_choices(a);
	if (choice_count(dch) * choice_count(uch) > 200'000'000)
		throw PreconditionError("pair enumeration too large");
	GhReport r;
	r.g_maps = enumerate_quantifiers(a);
	for (const auto& q : r.g_maps)
		r.g_pairs.push_back(detail::concat(q.image, dual_map(a, q).image));
	std::vector<std::vector<Element>> exist_maps;
	for_each_choice_map(uch, [&](const std::vector<Element>& e) { exist_maps.push_back(e); });
	for_each_choice_map(dch, [&](const std::vector<Element>& qa) {
		if (detail::w_axioms_fast(a, qa, dual_map(a, QuantifierMap{qa}).image))
			r.h_tied.push_back(QuantifierMap{qa});
		bool any = false;
		for (const auto& qe : exist_maps)
			if (detail::w_axioms_fast(a, qa, qe)) {
				r.h_pairs.push_back(detail::concat(qa, qe));
				any = true;
			}
		if (any)
			r.h_projection.push_back(QuantifierMap{qa});
	});
	for (auto* v : {&r.g_pairs, &r.h_pairs, &r.h_tied, &r.h_projection})
		std::sort(v->begin(), v->end());
	return r;
}

/// (L, AL, EL) with inner map A and upper map E.
struct RoughSpace {
	QuantifierMap lower, upper;
	ElementSet inner_definable, upper_definable;
	bool inner_law = true; ///< x in AL, y in L: x <= y iff x <= Ay
	bool upper_law = true; ///< x in L, y in EL: x <= y iff Ex <= y
	std::optional<std::pair<Element, Element>> inner_witness{}, upper_witness{};
	/// Pairs x < y (by index) of distinct elements with the same (Ax, Ex).
	std::vector<std::pair<Element, Element>> collisions{};
};

inline RoughSpace rough_space(const MonadicNmAlgebra& m) {
	const auto& a = m.algebra();
	RoughSpace s{m.forall_map(), m.exists_map(), image_of(m.forall_map()), image_of(m.exists_map())};
	for (Element x = 0; x < a.size(); ++x)
		for (Element y = 0; y < a.size(); ++y) {
			if (s.inner_definable.contains(x) && a.leq(x, y) != a.leq(x, m.forall(y)) && s.inner_law) {
				s.inner_law = false;
				s.inner_witness = std::make_pair(x, y);
			}
			if (s.upper_definable.contains(y) && a.leq(x, y) != a.leq(m.exists(x), y) && s.upper_law) {
				s.upper_law = false;
				s.upper_witness = std::make_pair(x, y);
			}
			if (x < y && m.forall(x) == m.forall(y) && m.exists(x) == m.exists(y))
				s.collisions.emplace_back(x, y);
		}
	return s;
}

inline std::string format_map(const FiniteNmAlgebra& a, const QuantifierMap& q) {
	std::string out;
	for (Element x = 0; x < q.size(); ++x)
		out += (x ? " " : "") + a.label(q(x));
	return out;
}

} // namespace mnm

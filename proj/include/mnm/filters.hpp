#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace mnm {

// Filters are ElementSets over the algebra's universe: sets containing top,
// closed under ⊙ and upward closed.

inline ElementSet upward_closure(const FiniteNmAlgebra& a, ElementSet s) {
	ElementSet out;
	s.for_each([&](Element x) { out |= a.up_set(x); });
	return out;
}

inline bool is_filter(const FiniteNmAlgebra& a, ElementSet s) {
	if (!s.contains(a.top()) || !s.subset_of(a.universe()))
		return false;
	const auto xs = s.elements();
	for (auto x : xs) {
		if (!a.up_set(x).subset_of(s))
			return false;
		for (auto y : xs)
			if (!s.contains(a.mul(x, y)))
				return false;
	}
	return true;
}

/// ⟨X⟩: everything above some finite ⊙-product of members of X. Computed
/// as a fixpoint of ⊙-closure followed by upward closure.
inline ElementSet filter_generated(const FiniteNmAlgebra& a, ElementSet x) {
	if (x.empty())
		throw PreconditionError("filter_generated: generating set is empty");
	if (!x.subset_of(a.universe()))
		throw InputError("filter_generated: set is not inside the universe");
	ElementSet f = x;
	f.insert(a.top());
	while (true) {
		ElementSet next = f;
		const auto xs = f.elements();
		for (auto p : xs)
			for (auto q : xs)
				next.insert(a.mul(p, q));
		next = upward_closure(a, next);
		if (next == f)
			return f;
		f = next;
	}
}

inline ElementSet principal_filter(const FiniteNmAlgebra& a, Element x) {
	return filter_generated(a, ElementSet::single(x));
}

inline ElementSet ortho_complement(const FiniteNmAlgebra& a, Element x) {
	ElementSet s;
	for (Element y = 0; y < a.size(); ++y)
		if (a.join(x, y) == a.top())
			s.insert(y);
	return s;
}

inline void require_filter(const FiniteNmAlgebra& a, ElementSet f, const char* who) {
	if (!is_filter(a, f))
		throw PreconditionError(std::string(who) + ": argument is not a filter");
}

inline void sort_canonical(std::vector<ElementSet>& v) {
	std::sort(v.begin(), v.end());
	v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Enumerates filters by testing every subset that contains top.
inline std::vector<ElementSet> all_filters_bruteforce(const FiniteNmAlgebra& a) {
	const std::size_t n = a.size();
	if (n > 20)
		throw PreconditionError("all_filters_bruteforce: universe too large for a subset scan");
	std::vector<ElementSet> out;
	const std::uint64_t rest = ElementSet::full(n).bits() & ~ElementSet::single(a.top()).bits();
	// iterate over submasks of `rest`
	for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
		ElementSet s(sub);
		s.insert(a.top());
		if (is_filter(a, s))
			out.push_back(s);
		if (sub == 0)
			break;
	}
	sort_canonical(out);
	return out;
}

/// Enumerates filters as joins of principal filters: every filter is the
/// join of the principal filters of its members, so closing {top} under
/// joins with principal filters reaches all of them.
inline std::vector<ElementSet> all_filters_by_closure(const FiniteNmAlgebra& a) {
	std::vector<ElementSet> principal;
	for (Element x = 0; x < a.size(); ++x)
		principal.push_back(principal_filter(a, x));
	std::set<std::uint64_t> seen{ElementSet::single(a.top()).bits()};
	std::vector<ElementSet> frontier{ElementSet::single(a.top())};
	std::vector<ElementSet> out = frontier;
	while (!frontier.empty()) {
		std::vector<ElementSet> next;
		for (auto f : frontier)
			for (auto p : principal) {
				if (p.subset_of(f))
					continue;
				auto j = filter_generated(a, f | p);
				if (seen.insert(j.bits()).second) {
					next.push_back(j);
					out.push_back(j);
				}
			}
		frontier = std::move(next);
	}
	sort_canonical(out);
	return out;
}

/// F[L] in canonical order.
inline std::vector<ElementSet> all_filters(const FiniteNmAlgebra& a) {
	return a.size() <= 12 ? all_filters_bruteforce(a) : all_filters_by_closure(a);
}

inline bool is_proper(const FiniteNmAlgebra& a, ElementSet f) { return f != a.universe(); }

inline bool is_prime_filter(const FiniteNmAlgebra& a, ElementSet f) {
	require_filter(a, f, "is_prime_filter");
	if (!is_proper(a, f))
		return false;
	for (Element x = 0; x < a.size(); ++x)
		for (Element y = 0; y < a.size(); ++y)
			if (f.contains(a.join(x, y)) && !f.contains(x) && !f.contains(y))
				return false;
	return true;
}

inline bool is_maximal_filter(const FiniteNmAlgebra& a, ElementSet f) {
	require_filter(a, f, "is_maximal_filter");
	if (!is_proper(a, f))
		return false;
	for (auto g : all_filters(a))
		if (is_proper(a, g) && f.proper_subset_of(g))
			return false;
	return true;
}

inline std::vector<ElementSet> prime_filters(const FiniteNmAlgebra& a) {
	std::vector<ElementSet> out;
	for (auto f : all_filters(a))
		if (is_prime_filter(a, f))
			out.push_back(f);
	return out;
}

/// Three verdicts on whether a prime filter is minimal among primes. The
/// a⊥-union characterisation is evaluated with both membership readings:
/// union over a ∉ P, and union over a ∈ P.
struct MinimalPrimeReport {
	bool definitional = false;     ///< no prime filter strictly below P
	bool union_over_outside = false; ///< P = ∪{a⊥ | a ∉ P}
	bool union_over_members = false; ///< P = ∪{a⊥ | a ∈ P}
	bool readings_agree() const { return definitional == union_over_outside && definitional == union_over_members; }
};

inline MinimalPrimeReport is_minimal_prime(const FiniteNmAlgebra& a, ElementSet p) {
	if (!is_filter(a, p) || !is_prime_filter(a, p))
		throw PreconditionError("is_minimal_prime: argument is not a prime filter");
	MinimalPrimeReport r;
	r.definitional = true;
	for (auto q : prime_filters(a))
		if (q.proper_subset_of(p))
			r.definitional = false;
	ElementSet outside, members;
	for (Element x = 0; x < a.size(); ++x) {
		if (p.contains(x))
			members |= ortho_complement(a, x);
		else
			outside |= ortho_complement(a, x);
	}
	r.union_over_outside = outside == p;
	r.union_over_members = members == p;
	return r;
}

/// Equivalence relation given by block membership.
struct Congruence {
	std::vector<Element> class_rep;  ///< least-index member of x's block
	std::vector<ElementSet> blocks;  ///< ordered by representative

	std::size_t block_of(Element x) const {
		for (std::size_t i = 0; i < blocks.size(); ++i)
			if (blocks[i].contains(x))
				return i;
		throw InputError("element not covered by congruence");
	}
	bool related(Element x, Element y) const { return class_rep[x] == class_rep[y]; }
	bool operator==(const Congruence& o) const { return class_rep == o.class_rep; }
};

inline Congruence congruence_from_blocks(std::size_t n, std::vector<ElementSet> blocks) {
	Congruence c;
	c.class_rep.assign(n, 0);
	std::sort(blocks.begin(), blocks.end(), [](ElementSet x, ElementSet y) { return x.first() < y.first(); });
	for (auto b : blocks)
		b.for_each([&](Element x) { c.class_rep[x] = b.first(); });
	c.blocks = std::move(blocks);
	return c;
}

/// x ≡_F y iff x→y ∈ F and y→x ∈ F.
inline Congruence congruence_from_filter(const FiniteNmAlgebra& a, ElementSet f) {
	require_filter(a, f, "congruence_from_filter");
	std::vector<ElementSet> blocks;
	ElementSet covered;
	for (Element x = 0; x < a.size(); ++x) {
		if (covered.contains(x))
			continue;
		ElementSet b;
		for (Element y = 0; y < a.size(); ++y)
			if (f.contains(a.imp(x, y)) && f.contains(a.imp(y, x)))
				b.insert(y);
		covered |= b;
		blocks.push_back(b);
	}
	return congruence_from_blocks(a.size(), std::move(blocks));
}

/// Does the partition respect ∧, ∨, ⊙, →?
inline bool is_congruence(const FiniteNmAlgebra& a, const Congruence& c) {
	const std::size_t n = a.size();
	for (Element x = 0; x < n; ++x)
		for (Element x2 = 0; x2 < n; ++x2) {
			if (!c.related(x, x2))
				continue;
			for (Element y = 0; y < n; ++y)
				for (Element y2 = 0; y2 < n; ++y2) {
					if (!c.related(y, y2))
						continue;
					if (!c.related(a.meet(x, y), a.meet(x2, y2)) || !c.related(a.join(x, y), a.join(x2, y2)) ||
					    !c.related(a.mul(x, y), a.mul(x2, y2)) || !c.related(a.imp(x, y), a.imp(x2, y2)))
						return false;
				}
		}
	return true;
}

inline std::string block_label(const FiniteNmAlgebra& a, const Congruence& c, std::size_t block) {
	return "[" + a.label(c.blocks[block].first()) + "]";
}

/// Quotient algebra L/θ with one element per block (in block order) and
/// the projection x ↦ block index.
struct Quotient {
	FiniteNmAlgebra algebra;
	Congruence congruence;
	std::vector<Element> projection;
};

/// Builds L/θ for a congruence θ. Throws InternalError if an operation is
/// not compatible with θ or if the result fails validation.
inline Quotient quotient_by_congruence(const FiniteNmAlgebra& a, const Congruence& c, ElementSet top_block) {
	const std::size_t n = a.size(), k = c.blocks.size();
	std::vector<Element> proj(n);
	for (Element x = 0; x < n; ++x)
		proj[x] = c.block_of(x);
	NmTables t;
	t.name = a.name() + "/~";
	for (std::size_t i = 0; i < k; ++i)
		t.labels.push_back(block_label(a, c, i));
	t.mul = Table(k);
	t.imp = Table(k);
	t.leq = Relation(k);
	std::vector<char> mul_set(k * k, 0), imp_set(k * k, 0);
	for (Element x = 0; x < n; ++x)
		for (Element y = 0; y < n; ++y) {
			const auto i = proj[x], j = proj[y];
			const auto m = proj[a.mul(x, y)], r = proj[a.imp(x, y)];
			if (mul_set[i * k + j] && t.mul(i, j) != m)
				throw InternalError("quotient: multiplication is not compatible with the partition");
			if (imp_set[i * k + j] && t.imp(i, j) != r)
				throw InternalError("quotient: implication is not compatible with the partition");
			t.mul(i, j) = m;
			t.imp(i, j) = r;
			mul_set[i * k + j] = imp_set[i * k + j] = 1;
		}
	const std::size_t one = proj[a.top()];
	if (c.blocks[one] != top_block)
		throw InternalError("quotient: block of top differs from the filter");
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = 0; j < k; ++j)
			t.leq.set(i, j, t.imp(i, j) == one);
	t.bottom = proj[a.bottom()];
	t.top = one;
	auto v = validate_nm(t);
	if (!v.algebra)
		throw InternalError("quotient failed NM validation: " + describe(v.report, t.labels));
	return {std::move(*v.algebra), c, std::move(proj)};
}

inline Quotient quotient(const FiniteNmAlgebra& a, ElementSet f) {
	auto c = congruence_from_filter(a, f);
	return quotient_by_congruence(a, c, f);
}

inline bool is_simple_nm(const FiniteNmAlgebra& a) { return all_filters(a).size() == 2; }

/// Subdirectly irreducible: the nontrivial filters have a least member.
inline bool is_si_nm(const FiniteNmAlgebra& a) {
	ElementSet meet = a.universe();
	for (auto f : all_filters(a))
		if (f != ElementSet::single(a.top()))
			meet &= f;
	return meet != ElementSet::single(a.top());
}

struct Representability {
	bool representable = false;
	std::vector<ElementSet> witness; ///< prime filters whose intersection is {top}
};

/// Smallest set of prime filters with intersection {top}, searched by
/// increasing cardinality and canonical order within a cardinality.
inline Representability is_representable(const FiniteNmAlgebra& a) {
	auto primes = prime_filters(a);
	const ElementSet target = ElementSet::single(a.top());
	Representability r;
	const std::size_t p = primes.size();
	if (p > 24)
		throw PreconditionError("is_representable: too many prime filters for subset search");
	for (std::size_t k = 1; k <= p; ++k) {
		std::vector<std::size_t> idx(k);
		for (std::size_t i = 0; i < k; ++i)
			idx[i] = i;
		while (true) {
			ElementSet m = a.universe();
			for (auto i : idx)
				m &= primes[i];
			if (m == target) {
				r.representable = true;
				for (auto i : idx)
					r.witness.push_back(primes[i]);
				return r;
			}
			std::size_t i = k;
			while (i > 0 && idx[i - 1] == p - k + (i - 1))
				--i;
			if (i == 0)
				break;
			++idx[i - 1];
			for (std::size_t j = i; j < k; ++j)
				idx[j] = idx[j - 1] + 1;
		}
	}
	return r;
}

inline bool is_subalgebra(const FiniteNmAlgebra& a, ElementSet s) {
	if (!s.contains(a.bottom()) || !s.contains(a.top()))
		return false;
	const auto xs = s.elements();
	for (auto x : xs)
		for (auto y : xs)
			if (!s.contains(a.meet(x, y)) || !s.contains(a.join(x, y)) || !s.contains(a.mul(x, y)) ||
			    !s.contains(a.imp(x, y)))
				return false;
	return true;
}

/// A subalgebra re-indexed densely, plus its inclusion into the parent.
struct Subalgebra {
	FiniteNmAlgebra algebra;
	std::vector<Element> embedding; ///< sub index -> parent index
};

inline Subalgebra subalgebra(const FiniteNmAlgebra& a, ElementSet s) {
	if (!is_subalgebra(a, s))
		throw PreconditionError("subalgebra: set is not closed under the operations");
	auto xs = s.elements();
	std::map<Element, Element> index;
	for (Element i = 0; i < xs.size(); ++i)
		index[xs[i]] = i;
	const std::size_t k = xs.size();
	NmTables t;
	t.name = a.name() + "|sub";
	t.leq = Relation(k);
	t.mul = Table(k);
	t.imp = Table(k);
	for (Element i = 0; i < k; ++i) {
		t.labels.push_back(a.label(xs[i]));
		for (Element j = 0; j < k; ++j) {
			t.leq.set(i, j, a.leq(xs[i], xs[j]));
			t.mul(i, j) = index.at(a.mul(xs[i], xs[j]));
			t.imp(i, j) = index.at(a.imp(xs[i], xs[j]));
		}
	}
	t.bottom = index.at(a.bottom());
	t.top = index.at(a.top());
	auto v = validate_nm(t);
	if (!v.algebra)
		throw InternalError("subalgebra failed NM validation: " + describe(v.report, t.labels));
	return {std::move(*v.algebra), std::move(xs)};
}

/// Maps a set of sub-indices to parent indices.
inline ElementSet lift(const Subalgebra& s, ElementSet sub) {
	ElementSet out;
	sub.for_each([&](Element x) { out.insert(s.embedding[x]); });
	return out;
}

inline std::string format_set(const FiniteNmAlgebra& a, ElementSet s) {
	std::string out = "{";
	bool first = true;
	s.for_each([&](Element x) {
		out += (first ? "" : ",") + a.label(x);
		first = false;
	});
	return out + "}";
}

/// Parses "a,b,1" (or "{a,b,1}") into an element set.
inline ElementSet parse_set(const FiniteNmAlgebra& a, std::string text) {
	std::erase(text, '{');
	std::erase(text, '}');
	std::erase(text, ' ');
	ElementSet s;
	std::size_t pos = 0;
	while (pos <= text.size()) {
		auto comma = text.find(',', pos);
		auto tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
		if (!tok.empty())
			s.insert(a.index_of(tok));
		if (comma == std::string::npos)
			break;
		pos = comma + 1;
	}
	return s;
}

} // namespace mnm

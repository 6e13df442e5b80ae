#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filters.hpp"
#include "properties.hpp"
#include "quantifier.hpp"

namespace mnm {

struct MonadicFilterCheck {
	bool monadic = false;
	bool filter = false;
	std::optional<Element> witness; ///< member x with Ax outside the set
};

inline MonadicFilterCheck is_monadic_filter(const MonadicNmAlgebra& m, ElementSet s) {
	MonadicFilterCheck c;
	c.filter = is_filter(m.algebra(), s);
	s.for_each([&](Element x) {
		if (!c.witness && !s.contains(m.forall(x)))
			c.witness = x;
	});
	c.monadic = c.filter && !c.witness;
	return c;
}

/// <X>_A: the filter generated by {Ax | x in X}.
inline ElementSet mf_generated(const MonadicNmAlgebra& m, ElementSet x) {
	if (x.empty())
		throw PreconditionError("mf_generated: generating set is empty");
	ElementSet g;
	x.for_each([&](Element e) { g.insert(m.forall(e)); });
	auto f = filter_generated(m.algebra(), g);
	if (!is_monadic_filter(m, f).monadic)
		throw InternalError("generated filter is not closed under the quantifier");
	return f;
}

/// MF[L] in canonical order.
inline std::vector<ElementSet> all_monadic_filters(const MonadicNmAlgebra& m) {
	std::vector<ElementSet> out;
	for (auto f : all_filters(m.algebra()))
		if (is_monadic_filter(m, f).monadic)
			out.push_back(f);
	return out;
}

/// Least monadic filter containing X, as the intersection of every member
/// of `mfs` containing X. Used as an oracle for mf_generated.
inline ElementSet mf_least_containing(const MonadicNmAlgebra& m, ElementSet x, const std::vector<ElementSet>& mfs) {
	ElementSet r = m.algebra().universe();
	for (auto f : mfs)
		if (x.subset_of(f))
			r &= f;
	return r;
}

inline void require_monadic_filter(const MonadicNmAlgebra& m, ElementSet f, const char* who) {
	if (!is_monadic_filter(m, f).monadic)
		throw PreconditionError(std::string(who) + ": argument is not a monadic filter");
}

inline void require_proper_monadic(const MonadicNmAlgebra& m, ElementSet f, const char* who) {
	require_monadic_filter(m, f, who);
	if (f == m.algebra().universe())
		throw PreconditionError(std::string(who) + ": filter is not proper");
}

inline void require_strong(const MonadicNmAlgebra& m, const char* who) {
	if (!m.strong())
		throw PreconditionError(std::string(who) + ": quantifier is not strong");
}

/// {x | x >= base * (Aa)^n for some n >= 1}
inline ElementSet above_powers(const FiniteNmAlgebra& a, Element base, Element g) {
	ElementSet s;
	Element p = g;
	for (std::size_t k = 0; k <= a.size(); ++k) {
		s |= a.up_set(a.mul(base, p));
		p = a.mul(p, g);
	}
	return s;
}

/// Generation laws for monadic filters, each compared against the
/// intersection-of-all-containing-filters oracle.
inline PropertyReport mf_principal_laws(const MonadicNmAlgebra& m) {
	using detail::scan_law;
	const auto& a = m.algebra();
	const std::size_t n = a.size();
	const auto mfs = all_monadic_filters(m);
	const std::size_t nf = mfs.size();
	auto gen = [&](ElementSet x) { return mf_least_containing(m, x, mfs); };
	auto one = [&](Element x) { return gen(ElementSet::single(x)); };
	auto join_f = [&](ElementSet f, ElementSet g) { return gen(f | g); };
	PropertyReport r;
	auto& c = r.clauses;

	if (n <= 16) {
		c.push_back(scan_law("generated", "<X>_A = {x >= Ax1 * ... * Axn}", std::size_t{1} << n, 1, [&](auto& t) {
			ElementSet x(t[0]);
			return x.empty() || mf_generated(m, x) == gen(x);
		}));
	}
	c.push_back(scan_law("principal", "<a>_A = {x >= (Aa)^n}", n, 1, [&](auto& t) {
		return one(t[0]) == above_powers(a, a.top(), m.forall(t[0]));
	}));
	c.push_back(scan_law("extend", "<F u a>_A = {x >= f * (Aa)^n}", nf, 2, [&](auto& t) {
		const ElementSet f = mfs[t[0]];
		const Element e = t[1] % n;
		if (t[1] >= n || f.contains(e))
			return true;
		ElementSet rhs;
		f.for_each([&](Element x) { rhs |= above_powers(a, x, m.forall(e)); });
		auto lhs = gen(f | ElementSet::single(e));
		return lhs == rhs && lhs == join_f(f, a.up_set(m.forall(e)));
	}));
	c.push_back(scan_law("join", "<F1 u F2>_A = {x >= f1 * f2}", nf, 2, [&](auto& t) {
		const ElementSet f1 = mfs[t[0]], f2 = mfs[t[1]];
		ElementSet rhs;
		f1.for_each([&](Element x) { f2.for_each([&](Element y) { rhs |= a.up_set(a.mul(x, y)); }); });
		return gen(f1 | f2) == rhs;
	}));
	c.push_back(scan_law("antitone", "a <= b implies <b>_A in <a>_A", n, 2, [&](auto& t) {
		return !a.leq(t[0], t[1]) || one(t[1]).subset_of(one(t[0]));
	}));
	c.push_back(scan_law("forall-generator", "<Aa>_A = <a>_A", n, 1, [&](auto& t) {
		return one(m.forall(t[0])) == one(t[0]);
	}));
	c.push_back(scan_law("meet-mul", "<a>_A v <b>_A = <a ^ b>_A = <a * b>_A", n, 2, [&](auto& t) {
		auto j = join_f(one(t[0]), one(t[1]));
		return j == one(a.meet(t[0], t[1])) && j == one(a.mul(t[0], t[1]));
	}));
	if (m.strong()) {
		c.push_back(scan_law("strong-meet", "<a>_A n <b>_A = <Aa v Ab>_A", n, 2, [&](auto& t) {
			return (one(t[0]) & one(t[1])) == one(a.join(m.forall(t[0]), m.forall(t[1])));
		}));
	}
	return r;
}

struct RestrictionReport {
	std::vector<ElementSet> monadic_filters;
	std::vector<ElementSet> fix_filters; ///< filters of L_A, as subsets of L
	bool bijection = false;              ///< F -> F n L_A is a bijection MF[L] -> F[L_A]
	bool forward_monotone = false;       ///< F1 in F2 iff F1 n L_A in F2 n L_A
	bool backward_inverse = false;       ///< G -> <G> is monadic and inverts the restriction
	bool regenerates = false;            ///< F = <F n L_A> for every monadic F
	bool extension_monadic = false;      ///< <F u {x}> monadic for monadic F, x in L_A
	std::optional<ElementSet> regenerate_witness;
	std::optional<std::pair<ElementSet, Element>> extension_witness;
	bool ok() const { return bijection && forward_monotone && backward_inverse && regenerates && extension_monadic; }
};

inline RestrictionReport restriction_isomorphism(const MonadicNmAlgebra& m) {
	const auto& a = m.algebra();
	const ElementSet fix = m.fixpoints();
	RestrictionReport r;
	r.monadic_filters = all_monadic_filters(m);
	auto sub = subalgebra(a, fix);
	for (auto g : all_filters(sub.algebra))
		r.fix_filters.push_back(lift(sub, g));
	sort_canonical(r.fix_filters);

	std::vector<ElementSet> image;
	for (auto f : r.monadic_filters)
		image.push_back(f & fix);
	auto sorted = image;
	sort_canonical(sorted);
	r.bijection = sorted.size() == image.size() && sorted == r.fix_filters;

	r.forward_monotone = true;
	for (std::size_t i = 0; i < image.size(); ++i)
		for (std::size_t j = 0; j < image.size(); ++j)
			if (r.monadic_filters[i].subset_of(r.monadic_filters[j]) != image[i].subset_of(image[j]))
				r.forward_monotone = false;

	r.backward_inverse = true;
	for (auto g : r.fix_filters) {
		auto f = filter_generated(a, g);
		if (!is_monadic_filter(m, f).monadic || (f & fix) != g)
			r.backward_inverse = false;
	}
	for (std::size_t i = 0; i < r.fix_filters.size(); ++i)
		for (std::size_t j = 0; j < r.fix_filters.size(); ++j)
			if (r.fix_filters[i].subset_of(r.fix_filters[j]) !=
			    filter_generated(a, r.fix_filters[i]).subset_of(filter_generated(a, r.fix_filters[j])))
				r.backward_inverse = false;

	r.regenerates = true;
	for (auto f : r.monadic_filters)
		if (filter_generated(a, f & fix) != f && !r.regenerate_witness) {
			r.regenerates = false;
			r.regenerate_witness = f;
		}

	r.extension_monadic = true;
	for (auto f : r.monadic_filters)
		fix.for_each([&](Element x) {
			if (r.extension_monadic && !is_monadic_filter(m, filter_generated(a, f | ElementSet::single(x))).monadic) {
				r.extension_monadic = false;
				r.extension_witness = std::make_pair(f, x);
			}
		});
	return r;
}

/// Calls f(blocks) for every partition of {0..n-1}.
template <class F>
void for_each_partition(std::size_t n, F&& f) {
	std::vector<ElementSet> blocks;
	auto rec = [&](auto& self, std::size_t i) -> void {
		if (i == n) {
			f(static_cast<const std::vector<ElementSet>&>(blocks));
			return;
		}
		for (std::size_t b = 0; b < blocks.size(); ++b) {
			blocks[b].insert(i);
			self(self, i + 1);
			blocks[b].erase(i);
		}
		blocks.push_back(ElementSet::single(i));
		self(self, i + 1);
		blocks.pop_back();
	};
	rec(rec, 0);
}

inline bool is_monadic_congruence(const MonadicNmAlgebra& m, const Congruence& c) {
	for (Element x = 0; x < m.size(); ++x)
		for (Element y = 0; y < m.size(); ++y)
			if (c.related(x, y) && !c.related(m.forall(x), m.forall(y)))
				return false;
	return is_congruence(m.algebra(), c);
}

struct CorrespondenceReport {
	std::vector<ElementSet> monadic_filters;
	std::vector<Congruence> monadic_congruences; ///< found by scanning all partitions
	bool filter_to_congruence = false; ///< F -> theta_F lands in MC and [1] recovers F
	bool congruence_to_filter = false; ///< theta -> [1]_theta lands in MF and theta_[1] recovers theta
	bool ok() const {
		return filter_to_congruence && congruence_to_filter &&
		       monadic_filters.size() == monadic_congruences.size();
	}
};

inline CorrespondenceReport congruence_correspondence(const MonadicNmAlgebra& m) {
	const auto& a = m.algebra();
	if (a.size() > 10)
		throw PreconditionError("congruence_correspondence: partition scan limited to 10 elements");
	CorrespondenceReport r;
	r.monadic_filters = all_monadic_filters(m);
	for_each_partition(a.size(), [&](const std::vector<ElementSet>& blocks) {
		auto c = congruence_from_blocks(a.size(), blocks);
		if (is_monadic_congruence(m, c))
			r.monadic_congruences.push_back(std::move(c));
	});
	auto top_block = [&](const Congruence& c) { return c.blocks[c.block_of(a.top())]; };
	r.filter_to_congruence = true;
	for (auto f : r.monadic_filters) {
		auto c = congruence_from_filter(a, f);
		if (!is_monadic_congruence(m, c) || top_block(c) != f ||
		    std::find(r.monadic_congruences.begin(), r.monadic_congruences.end(), c) == r.monadic_congruences.end())
			r.filter_to_congruence = false;
	}
	r.congruence_to_filter = true;
	for (const auto& c : r.monadic_congruences) {
		auto f = top_block(c);
		if (!is_monadic_filter(m, f).monadic || !(congruence_from_filter(a, f) == c))
			r.congruence_to_filter = false;
	}
	return r;
}

struct MonadicQuotient {
	MonadicNmAlgebra algebra;
	Congruence congruence;
	std::vector<Element> projection;
};

/// (L/F, A_F) with A_F([x]) = [Ax]; re-validated.
inline MonadicQuotient quotient_monadic(const MonadicNmAlgebra& m, ElementSet f) {
	require_monadic_filter(m, f, "quotient_monadic");
	auto q = quotient(m.algebra(), f);
	QuantifierMap qa;
	qa.image.assign(q.algebra.size(), 0);
	std::vector<char> set(q.algebra.size(), 0);
	for (Element x = 0; x < m.size(); ++x) {
		const auto b = q.projection[x], v = q.projection[m.forall(x)];
		if (set[b] && qa.image[b] != v)
			throw InternalError("induced quantifier is not well defined on the quotient");
		qa.image[b] = v;
		set[b] = 1;
	}
	auto mq = make_monadic(q.algebra, std::move(qa));
	return {std::move(mq), std::move(q.congruence), std::move(q.projection)};
}

/// Meet-irreducibility in MF[L]: F1 n F2 in F implies F1 in F or F2 in F.
inline bool is_prime_mf(const MonadicNmAlgebra& m, ElementSet f) {
	require_proper_monadic(m, f, "is_prime_mf");
	const auto mfs = all_monadic_filters(m);
	for (auto f1 : mfs)
		for (auto f2 : mfs)
			if ((f1 & f2).subset_of(f) && !f1.subset_of(f) && !f2.subset_of(f))
				return false;
	return true;
}

struct PrimeEquivalences {
	bool definition = false;  ///< meet-irreducible in MF[L]
	bool join_split = false;  ///< Ax v Ay in F implies Ax in F or Ay in F
	bool imp_total = false;   ///< Ax -> Ay in F or Ay -> Ax in F
	bool chain_quotient = false;
	bool strong = false;      ///< equivalence is only claimed for strong quantifiers
	bool agree() const { return definition == join_split && join_split == imp_total && imp_total == chain_quotient; }
};

inline PrimeEquivalences prime_equivalences(const MonadicNmAlgebra& m, ElementSet f) {
	const auto& a = m.algebra();
	PrimeEquivalences p;
	p.definition = is_prime_mf(m, f);
	p.strong = m.strong();
	p.join_split = p.imp_total = true;
	for (Element x = 0; x < a.size(); ++x)
		for (Element y = 0; y < a.size(); ++y) {
			const Element ax = m.forall(x), ay = m.forall(y);
			if (f.contains(a.join(ax, ay)) && !f.contains(ax) && !f.contains(ay))
				p.join_split = false;
			if (!f.contains(a.imp(ax, ay)) && !f.contains(a.imp(ay, ax)))
				p.imp_total = false;
		}
	p.chain_quotient = quotient_monadic(m, f).algebra.algebra().is_chain();
	return p;
}

inline bool is_maximal_mf(const MonadicNmAlgebra& m, ElementSet f) {
	require_proper_monadic(m, f, "is_maximal_mf");
	for (auto g : all_monadic_filters(m))
		if (g != m.algebra().universe() && f.proper_subset_of(g))
			return false;
	return true;
}

struct MaximalEquivalences {
	bool definition = false;
	bool forall_dichotomy = false; ///< Ax in F or ~Ax in F, all x
	bool exists_dichotomy = false; ///< Ex in F or ~Ex in F, all x
	bool forall_power_dichotomy = false; ///< Ax in F or ~(Ax)^2 in F, all x
	bool exists_power_dichotomy = false; ///< Ex in F or ~(Ex)^2 in F, all x
	std::optional<Element> forall_witness;
	std::optional<Element> exists_witness;
	bool agree() const { return definition == forall_dichotomy && forall_dichotomy == exists_dichotomy; }
	bool power_agree() const {
		return definition == forall_power_dichotomy && forall_power_dichotomy == exists_power_dichotomy;
	}
};

inline MaximalEquivalences maximal_equivalences(const MonadicNmAlgebra& m, ElementSet f) {
	const auto& a = m.algebra();
	MaximalEquivalences r;
	r.definition = is_maximal_mf(m, f);
	r.forall_dichotomy = r.exists_dichotomy = r.forall_power_dichotomy = r.exists_power_dichotomy = true;
	for (Element x = 0; x < a.size(); ++x) {
		const Element ax = m.forall(x), ex = m.exists(x);
		if (!f.contains(ax) && !f.contains(a.neg(ax))) {
			r.forall_dichotomy = false;
			if (!r.forall_witness)
				r.forall_witness = x;
		}
		if (!f.contains(ex) && !f.contains(a.neg(ex))) {
			r.exists_dichotomy = false;
			if (!r.exists_witness)
				r.exists_witness = x;
		}
		if (!f.contains(ax) && !f.contains(a.neg(a.mul(ax, ax))))
			r.forall_power_dichotomy = false;
		if (!f.contains(ex) && !f.contains(a.neg(a.mul(ex, ex))))
			r.exists_power_dichotomy = false;
	}
	return r;
}

/// Prime monadic P with F in P and a not in P, maximal by inclusion among
/// such primes; first in canonical order when several are maximal.
inline ElementSet prime_extension(const MonadicNmAlgebra& m, ElementSet f, Element a) {
	require_strong(m, "prime_extension");
	require_monadic_filter(m, f, "prime_extension");
	check_index(m.algebra(), a);
	if (f.contains(a))
		throw PreconditionError("prime_extension: element already in the filter");
	std::vector<ElementSet> cands;
	for (auto p : all_monadic_filters(m))
		if (p != m.algebra().universe() && f.subset_of(p) && !p.contains(a) && is_prime_mf(m, p))
			cands.push_back(p);
	for (auto p : cands) {
		bool maximal = true;
		for (auto q : cands)
			if (p.proper_subset_of(q))
				maximal = false;
		if (maximal)
			return p;
	}
	throw InternalError("prime_extension: no prime monadic filter omits the element");
}

struct SubdirectEmbedding {
	std::vector<ElementSet> factor_filters;
	std::vector<MonadicQuotient> factors;
	std::vector<std::vector<Element>> embedding; ///< element -> factor coordinates
	bool injective = false;
	bool surjective = false;      ///< every coordinate projection onto
	bool chains = false;          ///< every factor linearly ordered
	bool forall_injective = false; ///< each projection injective on AL
	bool ok() const { return injective && surjective && chains; }
};

inline SubdirectEmbedding embed_with(const MonadicNmAlgebra& m, std::vector<ElementSet> filters) {
	sort_canonical(filters);
	SubdirectEmbedding s;
	s.factor_filters = filters;
	for (auto f : filters)
		s.factors.push_back(quotient_monadic(m, f));
	const std::size_t n = m.size();
	s.embedding.assign(n, {});
	for (Element x = 0; x < n; ++x)
		for (const auto& q : s.factors)
			s.embedding[x].push_back(q.projection[x]);
	auto sorted = s.embedding;
	std::sort(sorted.begin(), sorted.end());
	s.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
	s.surjective = s.chains = s.forall_injective = true;
	const auto range = image_of(m.forall_map());
	for (const auto& q : s.factors) {
		ElementSet hit = ElementSet::of(q.projection);
		if (hit != q.algebra.algebra().universe())
			s.surjective = false;
		if (!q.algebra.algebra().is_chain())
			s.chains = false;
		range.for_each([&](Element x) {
			range.for_each([&](Element y) {
				if (x != y && q.projection[x] == q.projection[y])
					s.forall_injective = false;
			});
		});
	}
	return s;
}

/// L into the product of L/P over P = prime_extension({1}, a), a != 1.
inline SubdirectEmbedding subdirect_representation(const MonadicNmAlgebra& m) {
	require_strong(m, "subdirect_representation");
	std::vector<ElementSet> ps;
	const ElementSet unit = ElementSet::single(m.algebra().top());
	for (Element a = 0; a < m.size(); ++a)
		if (a != m.algebra().top())
			ps.push_back(prime_extension(m, unit, a));
	return embed_with(m, std::move(ps));
}

struct QuantifiedRepresentability {
	std::vector<ElementSet> minimal_primes;
	bool all_forall_closed = false;
	bool intersection_is_top = false;
	std::optional<ElementSet> unclosed; ///< a minimal prime that is not monadic
	bool ok() const { return all_forall_closed && intersection_is_top; }
};

/// Minimal prime filters of L are monadic and intersect to {1}.
inline QuantifiedRepresentability representable_with_quantifier(const MonadicNmAlgebra& m) {
	require_strong(m, "representable_with_quantifier");
	const auto& a = m.algebra();
	QuantifiedRepresentability r;
	for (auto p : prime_filters(a))
		if (is_minimal_prime(a, p).definitional)
			r.minimal_primes.push_back(p);
	r.all_forall_closed = true;
	ElementSet meet = a.universe();
	for (auto p : r.minimal_primes) {
		meet &= p;
		if (!is_monadic_filter(m, p).monadic && r.all_forall_closed) {
			r.all_forall_closed = false;
			r.unclosed = p;
		}
	}
	r.intersection_is_top = meet == ElementSet::single(a.top());
	return r;
}

struct IntersectionIdentityReport {
	bool holds = true;
	std::size_t checked = 0;
	std::optional<std::tuple<ElementSet, Element, Element>> witness;
};

/// F = <F u {x -> y}>_A n <F u {y -> x}>_A for every monadic F and pair.
inline IntersectionIdentityReport filter_intersection_identity(const MonadicNmAlgebra& m) {
	require_strong(m, "filter_intersection_identity");
	const auto& a = m.algebra();
	IntersectionIdentityReport r;
	for (auto f : all_monadic_filters(m))
		for (Element x = 0; x < a.size(); ++x)
			for (Element y = 0; y < a.size(); ++y) {
				++r.checked;
				auto g1 = mf_generated(m, f | ElementSet::single(a.imp(x, y)));
				auto g2 = mf_generated(m, f | ElementSet::single(a.imp(y, x)));
				if ((g1 & g2) != f && r.holds) {
					r.holds = false;
					r.witness = std::make_tuple(f, x, y);
				}
			}
	return r;
}

/// For strong M with AL a chain: for each a != 1, a prime monadic P with
/// a v Ar outside P for every r != 1.
inline SubdirectEmbedding separating_representation(const MonadicNmAlgebra& m) {
	require_strong(m, "separating_representation");
	const auto& a = m.algebra();
	const auto range = image_of(m.forall_map());
	for (auto x : range.elements())
		for (auto y : range.elements())
			if (!a.leq(x, y) && !a.leq(y, x))
				throw PreconditionError("separating_representation: AL is not a chain");
	std::vector<ElementSet> primes;
	for (auto p : all_monadic_filters(m))
		if (p != a.universe() && is_prime_mf(m, p))
			primes.push_back(p);
	std::vector<ElementSet> chosen;
	for (Element e = 0; e < a.size(); ++e) {
		if (e == a.top())
			continue;
		ElementSet avoid;
		for (Element r = 0; r < a.size(); ++r)
			if (r != a.top())
				avoid.insert(a.join(e, m.forall(r)));
		std::vector<ElementSet> cands;
		for (auto p : primes)
			if ((p & avoid).empty())
				cands.push_back(p);
		std::optional<ElementSet> pick;
		for (auto p : cands) {
			bool maximal = true;
			for (auto q : cands)
				if (p.proper_subset_of(q))
					maximal = false;
			if (maximal) {
				pick = p;
				break;
			}
		}
		if (!pick)
			throw InternalError("separating_representation: no prime avoids " + a.label(e) + " v Ar");
		chosen.push_back(*pick);
	}
	return embed_with(m, std::move(chosen));
}

inline std::vector<Element> coatoms(const FiniteNmAlgebra& a) {
	std::vector<Element> out;
	for (Element x = 0; x < a.size(); ++x) {
		if (x == a.top())
			continue;
		bool co = true;
		for (Element y = 0; y < a.size(); ++y)
			if (a.less(x, y) && y != a.top())
				co = false;
		if (co)
			out.push_back(x);
	}
	return out;
}

struct ClassificationReport {
	std::vector<ElementSet> monadic_filters;
	bool simple = false;  ///< exactly two monadic filters
	bool si = false;      ///< nontrivial monadic filters have a least member
	bool chain = false;
	bool strong = false;
	std::optional<ElementSet> least_nontrivial;
	std::vector<Element> coatoms;

	// Cross-checks computed independently.
	bool fix_is_01 = false;        ///< L_A = {0,1}
	bool forall_l_simple = false;  ///< AL simple as an NM-algebra
	bool witness_si = false;       ///< some a < 1 lies in <x>_A for every x < 1
	std::optional<Element> si_witness;
	bool fix_si = false;           ///< L_A subdirectly irreducible as an NM-algebra
	bool forall_l_chain = false;
	bool top_join_prime = false;   ///< x v y = 1 implies x = 1 or y = 1

	bool simple_iff_fix01() const { return simple == fix_is_01; }
	bool simple_iff_forall_l_simple() const { return simple == forall_l_simple; }
	bool si_iff_witness() const { return si == witness_si; }
	bool si_iff_fix_si() const { return si == fix_si; }
	bool strong_si_iff_chain() const { return !strong || si == chain; }
	bool si_implies_forall_l_chain() const { return !si || forall_l_chain; }
	bool strong_si_implies_join_prime() const { return !(strong && si) || top_join_prime; }
};

inline ClassificationReport classify(const MonadicNmAlgebra& m) {
	const auto& a = m.algebra();
	const ElementSet unit = ElementSet::single(a.top());
	ClassificationReport r;
	r.monadic_filters = all_monadic_filters(m);
	r.simple = r.monadic_filters.size() == 2;
	ElementSet meet = a.universe();
	for (auto f : r.monadic_filters)
		if (f != unit)
			meet &= f;
	r.si = meet != unit;
	if (r.si)
		r.least_nontrivial = meet;
	r.chain = a.is_chain();
	r.strong = m.strong();
	r.coatoms = coatoms(a);

	r.fix_is_01 = m.fixpoints() == ElementSet::of({a.bottom(), a.top()});
	auto sub = subalgebra(a, m.fixpoints());
	r.forall_l_simple = is_simple_nm(sub.algebra);
	r.fix_si = is_si_nm(sub.algebra);
	r.forall_l_chain = sub.algebra.is_chain();

	const auto mfs = r.monadic_filters;
	for (Element w = 0; w < a.size() && !r.si_witness; ++w) {
		if (w == a.top())
			continue;
		bool all = true;
		for (Element x = 0; x < a.size() && all; ++x)
			if (x != a.top() && !mf_least_containing(m, ElementSet::single(x), mfs).contains(w))
				all = false;
		if (all)
			r.si_witness = w;
	}
	r.witness_si = r.si_witness.has_value();

	r.top_join_prime = true;
	for (Element x = 0; x < a.size(); ++x)
		for (Element y = 0; y < a.size(); ++y)
			if (a.join(x, y) == a.top() && x != a.top() && y != a.top())
				r.top_join_prime = false;
	return r;
}

} // namespace mnm

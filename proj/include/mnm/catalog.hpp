#pragma once

#include <numeric>
#include <optional>
#include <tuple>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "quantifier.hpp"
#include "rational.hpp"

namespace mnm {

/// "i/d" in lowest terms, with "0" and "1" for the ends.
inline std::string fraction_label(std::size_t i, std::size_t d) {
	if (i == 0)
		return "0";
	if (i == d)
		return "1";
	const auto g = std::gcd(i, d);
	return std::to_string(i / g) + "/" + std::to_string(d / g);
}

/// The n-element NM-chain e0 < ... < e(n-1): ~ei = e(n-1-i),
/// x*y = 0 if x <= ~y else min, x->y = 1 if x <= y else max(~x, y).
inline FiniteNmAlgebra nm_chain(std::size_t n) {
	if (n < 2)
		throw PreconditionError("nm_chain needs n >= 2");
	if (n > kMaxElements)
		throw PreconditionError("nm_chain: n too large");
	NmTables t;
	t.name = "chain-" + std::to_string(n);
	t.leq = Relation(n);
	t.mul = Table(n);
	t.imp = Table(n);
	const std::size_t top = n - 1;
	for (std::size_t i = 0; i < n; ++i) {
		t.labels.push_back(fraction_label(i, top));
		for (std::size_t j = 0; j < n; ++j) {
			t.leq.set(i, j, i <= j);
			t.mul(i, j) = i <= top - j ? 0 : std::min(i, j);
			t.imp(i, j) = i <= j ? top : std::max(top - i, j);
		}
	}
	t.bottom = 0;
	t.top = top;
	return make_nm(t);
}

/// On nm_chain(m): Ax = greatest point of the n-point subgrid below x.
inline QuantifierMap subchain_quantifier(std::size_t m, std::size_t n) {
	if (n < 2 || m < n || (m - 1) % (n - 1) != 0)
		throw PreconditionError("subchain_quantifier: (n-1) must divide (m-1) with 2 <= n <= m");
	const std::size_t step = (m - 1) / (n - 1);
	QuantifierMap q;
	for (std::size_t i = 0; i < m; ++i)
		q.image.push_back(i / step * step);
	return q;
}

/// Ax = 0 for x != 1, A1 = 1. Throws if the map is not a quantifier on A.
inline QuantifierMap zero_one_quantifier(const FiniteNmAlgebra& a) {
	QuantifierMap q;
	for (Element x = 0; x < a.size(); ++x)
		q.image.push_back(x == a.top() ? a.top() : a.bottom());
	auto rep = check_universal(a, q);
	if (!rep.all_hold())
		throw PreconditionError("zero-one map is not a quantifier on " + a.name() + " (" + rep.failing().front() + " fails)");
	return q;
}

/// Componentwise product; element (x,y) has index x*|B| + y.
inline FiniteNmAlgebra direct_product(const FiniteNmAlgebra& a, const FiniteNmAlgebra& b) {
	const std::size_t na = a.size(), nb = b.size(), n = na * nb;
	if (n > kMaxElements)
		throw PreconditionError("direct_product: result too large");
	auto idx = [nb](Element x, Element y) { return x * nb + y; };
	NmTables t;
	t.name = a.name() + "*" + b.name();
	t.leq = Relation(n);
	t.mul = Table(n);
	t.imp = Table(n);
	for (Element x = 0; x < na; ++x)
		for (Element y = 0; y < nb; ++y) {
			t.labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
			for (Element u = 0; u < na; ++u)
				for (Element v = 0; v < nb; ++v) {
					t.leq.set(idx(x, y), idx(u, v), a.leq(x, u) && b.leq(y, v));
					t.mul(idx(x, y), idx(u, v)) = idx(a.mul(x, u), b.mul(y, v));
					t.imp(idx(x, y), idx(u, v)) = idx(a.imp(x, u), b.imp(y, v));
				}
		}
	t.bottom = idx(a.bottom(), b.bottom());
	t.top = idx(a.top(), b.top());
	return make_nm(t);
}

inline QuantifierMap product_map(const QuantifierMap& p, const QuantifierMap& q) {
	QuantifierMap r;
	for (Element x = 0; x < p.size(); ++x)
		for (Element y = 0; y < q.size(); ++y)
			r.image.push_back(p(x) * q.size() + q(y));
	return r;
}

inline MonadicNmAlgebra direct_product(const MonadicNmAlgebra& m1, const MonadicNmAlgebra& m2) {
	auto a = direct_product(m1.algebra(), m2.algebra());
	return make_monadic(std::move(a), product_map(m1.forall_map(), m2.forall_map()));
}

/// Projections of a product onto its first and second factors.
inline std::pair<std::vector<Element>, std::vector<Element>> product_projections(std::size_t na, std::size_t nb) {
	std::pair<std::vector<Element>, std::vector<Element>> p;
	for (Element x = 0; x < na; ++x)
		for (Element y = 0; y < nb; ++y) {
			p.first.push_back(x);
			p.second.push_back(y);
		}
	return p;
}

enum class Provenance { Generated, Fixture, FixtureRepaired };

inline std::string provenance_name(Provenance p) {
	switch (p) {
	case Provenance::Generated: return "generated";
	case Provenance::Fixture: return "fixture";
	case Provenance::FixtureRepaired: return "fixture-repaired";
	}
	return "?";
}

struct CatalogEntry {
	std::string id;
	FiniteNmAlgebra algebra;
	std::vector<QuantifierMap> quantifiers;
	Provenance provenance = Provenance::Generated;
	std::string note;

	MonadicNmAlgebra monadic(std::size_t i) const { return make_monadic(algebra, quantifiers.at(i)); }
};

namespace detail {

inline std::vector<Element> parse_row_labels(const std::vector<std::string>& labels, const std::string& rows) {
	std::vector<Element> out;
	std::istringstream in(rows);
	std::string tok;
	while (in >> tok) {
		if (tok == "/")
			continue;
		auto it = std::find(labels.begin(), labels.end(), tok);
		if (it == labels.end())
			throw InternalError("fixture table uses unknown label " + tok);
		out.push_back(static_cast<Element>(it - labels.begin()));
	}
	return out;
}

inline NmTables fixture_tables(std::string name, std::vector<std::string> labels,
                               const std::vector<std::pair<std::string, std::string>>& order, const std::string& mul,
                               const std::string& imp) {
	NmTables t;
	t.name = std::move(name);
	const std::size_t n = labels.size();
	std::vector<std::pair<Element, Element>> pairs;
	for (const auto& [x, y] : order)
		pairs.emplace_back(parse_row_labels(labels, x)[0], parse_row_labels(labels, y)[0]);
	t.leq = order_from_pairs(n, pairs);
	t.mul = Table(n, parse_row_labels(labels, mul));
	t.imp = Table(n, parse_row_labels(labels, imp));
	t.labels = std::move(labels);
	t.bottom = 0;
	t.top = n - 1;
	return t;
}

inline const std::vector<std::string> ex35_labels{"0", "a", "b", "c", "d", "1"};
inline const std::vector<std::pair<std::string, std::string>> ex35_order{
    {"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"c", "1"}, {"d", "1"}};
inline const char* ex35_imp = "1 1 1 1 1 1 / c 1 c 1 1 1 / d d 1 1 d 1 / a d c 1 d 1 / b c b c 1 1 / 0 a b c d 1";
inline const char* ex35_mul_verbatim =
    "0 0 0 0 0 0 / 0 0 0 0 0 a / 0 0 b b 0 b / 0 0 b b a c / 0 0 0 0 d d / 0 a b c d 1";
inline const char* ex35_mul = "0 0 0 0 0 0 / 0 0 0 0 a a / 0 0 b b 0 b / 0 0 b b a c / 0 a 0 a d d / 0 a b c d 1";

inline const std::vector<std::string> ex415_labels{"0", "a", "b", "c", "d", "e", "f", "g", "1"};
inline const std::vector<std::pair<std::string, std::string>> ex415_order{
    {"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"c", "d"},
    {"d", "e"}, {"e", "f"}, {"e", "g"}, {"f", "1"}, {"g", "1"}};
inline const char* ex415_imp_verbatim = "1 1 1 1 1 1 1 1 1 / g 1 f 1 1 1 1 1 1 / f g 1 1 1 1 1 1 1 / "
                                        "e g f 1 1 1 1 1 1 / d d d d 1 1 1 1 1 / c c c c d 1 1 1 1 / "
                                        "b a c c d g 1 g 1 / a c b c d f f 1 1 / 0 a b c d e f g 1";
inline const char* ex415_mul_verbatim = "0 0 0 0 0 0 0 0 0 / 0 0 0 0 0 0 b 0 0 / 0 0 0 0 0 0 0 a b / "
                                        "0 0 0 0 0 0 a b c / 0 0 0 0 0 d d d d / 0 0 0 0 d e e e e / "
                                        "0 a 0 a d e e g f / 0 0 b b d e f e g / 0 a b c d e f g 1";
inline const char* ex415_imp = "1 1 1 1 1 1 1 1 1 / g 1 g 1 1 1 1 1 1 / f f 1 1 1 1 1 1 1 / "
                               "e f g 1 1 1 1 1 1 / d d d d 1 1 1 1 1 / c c c c d 1 1 1 1 / "
                               "b c b c d g 1 g 1 / a a c c d f f 1 1 / 0 a b c d e f g 1";
inline const char* ex415_mul = "0 0 0 0 0 0 0 0 0 / 0 0 0 0 0 0 a 0 a / 0 0 0 0 0 0 0 b b / "
                               "0 0 0 0 0 0 a b c / 0 0 0 0 0 d d d d / 0 0 0 0 d e e e e / "
                               "0 a 0 a d e f e f / 0 0 b b d e e g g / 0 a b c d e f g 1";

} // namespace detail

/// Six-element fixture exactly as tabulated at the source (fails validation).
inline NmTables example_3_5_verbatim_tables() {
	return detail::fixture_tables("example-3-5-verbatim", detail::ex35_labels, detail::ex35_order,
	                              detail::ex35_mul_verbatim, detail::ex35_imp);
}

inline NmTables example_3_5_tables() {
	return detail::fixture_tables("example-3-5", detail::ex35_labels, detail::ex35_order, detail::ex35_mul,
	                              detail::ex35_imp);
}

/// A0 = Aa = 0, Ab = Ac = b, Ad = d, A1 = 1
inline QuantifierMap example_3_5_forall() { return QuantifierMap{{0, 0, 2, 2, 4, 5}}; }

inline const char* example_3_5_note() {
	return "Six elements 0 < a,b; a < c,d; b < c; c,d < 1. The source multiplication table is not commutative "
	       "(c*d = a but d*c = 0) and breaks adjointness at a*d; the implication table is kept and the cells "
	       "(a,d), (d,a), (d,c) of * are re-derived from x*y = ~(x -> ~y), changing 0 to a. With this order "
	       "a v b = c, so A(a v b) = b = Aa v Ab and the attached quantifier is strong.";
}

inline NmTables example_4_15_verbatim_tables() {
	return detail::fixture_tables("example-4-15-verbatim", detail::ex415_labels, detail::ex415_order,
	                              detail::ex415_mul_verbatim, detail::ex415_imp_verbatim);
}

inline NmTables example_4_15_tables() {
	return detail::fixture_tables("example-4-15", detail::ex415_labels, detail::ex415_order, detail::ex415_mul,
	                              detail::ex415_imp);
}

/// A0 = Aa = Ab = 0, Ac = c, Ad = d, Ae = Af = Ag = e, A1 = 1
inline QuantifierMap example_4_15_forall() { return QuantifierMap{{0, 0, 0, 3, 4, 5, 5, 5, 8}}; }

inline const char* example_4_15_note() {
	return "Nine elements 0 < a,b < c < d < e < f,g < 1. The source multiplication table breaks the unit law "
	       "(a*1 = 0) and the source implication table is itself inconsistent with residuation (a -> b must be "
	       ">= ~a = g). Exactly two NM-algebras exist on this order, mirror images under a<->b, f<->g; the one "
	       "nearest the source is used. Changed -> cells: (a,b) f->g, (b,a) g->f, (c,a) g->f, (c,b) f->g, "
	       "(f,a) a->c, (f,b) c->b, (g,a) c->a, (g,b) b->c. Changed * cells: (a,f) b->a, (a,1) 0->a, "
	       "(b,g) a->b, (f,f) e->f, (f,g) g->e, (g,f) f->e, (g,g) e->g. The result is the subalgebra "
	       "{(0,0),(1/4,0),(0,1/4),(1/4,1/4),(1/2,1/2),(3/4,3/4),(1,3/4),(3/4,1),(1,1)} of chain-5 x chain-5. "
	       "The attached quantifier is not strong: A(a v b) = Ac = c but Aa v Ab = 0.";
}

inline CatalogEntry fixture_example_3_5() {
	auto a = make_nm(example_3_5_tables());
	auto qs = enumerate_quantifiers(a);
	return {"example-3-5", std::move(a), std::move(qs), Provenance::FixtureRepaired, example_3_5_note()};
}

inline CatalogEntry fixture_example_4_15() {
	auto a = make_nm(example_4_15_tables());
	auto qs = enumerate_quantifiers(a);
	return {"example-4-15", std::move(a), std::move(qs), Provenance::FixtureRepaired, example_4_15_note()};
}

/// Index of q in an entry's quantifier list.
inline std::size_t quantifier_index(const CatalogEntry& e, const QuantifierMap& q) {
	auto it = std::find(e.quantifiers.begin(), e.quantifiers.end(), q);
	if (it == e.quantifiers.end())
		throw InputError("quantifier not attached to " + e.id);
	return static_cast<std::size_t>(it - e.quantifiers.begin());
}

struct CatalogOptions {
	std::size_t max_chain = 6;
	bool include_products = true;
	bool include_fixtures = true;
	std::size_t workers = 1;
};

/// Chains, products of chains with at most 9 elements, and the two
/// fixtures. Every entry lists every quantifier on it (pruned search),
/// which always contains identity, zero-one and the subchain maps.
inline std::vector<CatalogEntry> build_catalog(const CatalogOptions& opt = {}) {
	if (opt.max_chain > 9)
		throw PreconditionError("build_catalog: max_chain must be <= 9");
	std::vector<CatalogEntry> out;
	for (std::size_t n = 2; n <= opt.max_chain; ++n) {
		auto a = nm_chain(n);
		auto qs = enumerate_quantifiers(a, false, opt.workers);
		for (std::size_t k = 2; k <= n; ++k)
			if ((n - 1) % (k - 1) == 0 && std::find(qs.begin(), qs.end(), subchain_quantifier(n, k)) == qs.end())
				throw InternalError("subchain quantifier missing from enumeration");
		out.push_back({a.name(), std::move(a), std::move(qs), Provenance::Generated, "standard NM-chain"});
	}
	if (opt.include_products) {
		for (std::size_t m = 2; m <= opt.max_chain; ++m)
			for (std::size_t n = m; m * n <= 9 && n <= opt.max_chain; ++n) {
				auto a = direct_product(nm_chain(m), nm_chain(n)).renamed("product-" + std::to_string(m) + "x" +
				                                                          std::to_string(n));
				auto qs = enumerate_quantifiers(a, false, opt.workers);
				out.push_back({a.name(), std::move(a), std::move(qs), Provenance::Generated,
				               "direct product of NM-chains"});
			}
	}
	if (opt.include_fixtures) {
		out.push_back(fixture_example_3_5());
		out.push_back(fixture_example_4_15());
	}
	return out;
}

/// A catalog entry paired with one of its quantifiers.
struct MonadicEntry {
	std::string id; ///< "<entry>#<k>"
	MonadicNmAlgebra m;
};

inline std::vector<MonadicEntry> monadic_entries(const std::vector<CatalogEntry>& cat, std::size_t max_size = 64) {
	std::vector<MonadicEntry> out;
	for (const auto& e : cat) {
		if (e.algebra.size() > max_size)
			continue;
		for (std::size_t i = 0; i < e.quantifiers.size(); ++i)
			out.push_back({e.id + "#" + std::to_string(i), e.monadic(i)});
	}
	return out;
}

inline const CatalogEntry* find_entry(const std::vector<CatalogEntry>& cat, const std::string& id) {
	for (const auto& e : cat)
		if (e.id == id)
			return &e;
	return nullptr;
}

struct StandardAgreement {
	std::size_t n = 0;
	std::size_t checked = 0;
	bool agree = true;
	std::optional<std::tuple<StdOp, Element, Element>> witness;
};

/// nm_chain(n) against the standard algebra on the grid i/(n-1).
inline StandardAgreement chain_matches_standard(std::size_t n) {
	const auto a = nm_chain(n);
	StandardAgreement r;
	r.n = n;
	auto point = [&](Element i) { return RationalPoint(static_cast<long long>(i), static_cast<long long>(n - 1)); };
	for (auto op : {StdOp::Mul, StdOp::Imp, StdOp::Meet, StdOp::Join, StdOp::Neg})
		for (Element x = 0; x < n; ++x)
			for (Element y = 0; y < n; ++y) {
				Element v = 0;
				switch (op) {
				case StdOp::Mul: v = a.mul(x, y); break;
				case StdOp::Imp: v = a.imp(x, y); break;
				case StdOp::Meet: v = a.meet(x, y); break;
				case StdOp::Join: v = a.join(x, y); break;
				case StdOp::Neg: v = a.neg(x); break;
				}
				++r.checked;
				if (!(standard_nm(point(x), point(y), op) == point(v)) && r.agree) {
					r.agree = false;
					r.witness = std::make_tuple(op, x, y);
				}
			}
	return r;
}

} // namespace mnm

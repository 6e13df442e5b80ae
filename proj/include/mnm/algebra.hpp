#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"

namespace mnm {

/// Square table indexed by element pairs, row-major.
class Table {
public:
	Table() = default;
	explicit Table(std::size_t n, Element fill = 0) : n_(n), cells_(n * n, fill) {}
	Table(std::size_t n, std::vector<Element> cells) : n_(n), cells_(std::move(cells)) {
		if (cells_.size() != n * n)
			throw InputError("table is not square");
	}

	std::size_t size() const { return n_; }
	Element operator()(Element x, Element y) const { return cells_[x * n_ + y]; }
	Element& operator()(Element x, Element y) { return cells_[x * n_ + y]; }
	const std::vector<Element>& cells() const { return cells_; }

	bool operator==(const Table&) const = default;

private:
	std::size_t n_ = 0;
	std::vector<Element> cells_;
};

/// Order relation as an n×n boolean matrix.
class Relation {
public:
	Relation() = default;
	explicit Relation(std::size_t n) : n_(n), cells_(n * n, 0) {}

	std::size_t size() const { return n_; }
	bool operator()(Element x, Element y) const { return cells_[x * n_ + y] != 0; }
	void set(Element x, Element y, bool v = true) { cells_[x * n_ + y] = v ? 1 : 0; }

	/// Reflexive-transitive closure (Warshall).
	Relation closure() const {
		Relation r = *this;
		for (Element i = 0; i < n_; ++i)
			r.set(i, i);
		for (Element k = 0; k < n_; ++k)
			for (Element i = 0; i < n_; ++i)
				if (r(i, k))
					for (Element j = 0; j < n_; ++j)
						if (r(k, j))
							r.set(i, j);
		return r;
	}

	bool operator==(const Relation&) const = default;

private:
	std::size_t n_ = 0;
	std::vector<std::uint8_t> cells_;
};

/// Unvalidated input: labels, order, ⊙ and → tables, bounds.
struct NmTables {
	std::string name;
	std::vector<std::string> labels;
	Relation leq;
	Table mul;
	Table imp;
	Element bottom = 0;
	Element top = 0;
};

/// The six NM-algebra axioms, numbered in the customary order:
/// bounded lattice, commutative monoid with unit 1, residuation,
/// prelinearity, weak nilpotent minimum, involutive negation.
enum class NmAxiom : int {
	BoundedLattice = 1,
	CommutativeMonoid = 2,
	Residuation = 3,
	Prelinearity = 4,
	WeakNilpotentMinimum = 5,
	Involution = 6,
};

struct Violation {
	NmAxiom axiom;
	std::string law;              ///< e.g. "unit", "commutativity", "meet-exists"
	std::vector<Element> witness; ///< lexicographically first failing tuple
	std::size_t count = 0;        ///< number of failing tuples
};

struct ValidationReport {
	std::vector<Violation> violations;
	/// Axioms that could not be evaluated because the lattice check failed.
	std::vector<NmAxiom> skipped;

	bool ok() const { return violations.empty() && skipped.empty(); }
	bool violates(NmAxiom a) const {
		return std::any_of(violations.begin(), violations.end(), [a](const Violation& v) { return v.axiom == a; });
	}
	const Violation* find(NmAxiom a, const std::string& law) const {
		for (const auto& v : violations)
			if (v.axiom == a && v.law == law)
				return &v;
		return nullptr;
	}
};

struct NmValidation;

inline NmValidation validate_nm(const NmTables& t);

/// A finite NM-algebra whose axioms have been checked exhaustively.
/// Immutable after construction; safe to share across threads.
class FiniteNmAlgebra {
public:
	std::size_t size() const { return labels_.size(); }
	const std::string& name() const { return name_; }
	const std::vector<std::string>& labels() const { return labels_; }
	const std::string& label(Element x) const { return labels_.at(x); }

	std::optional<Element> find(const std::string& label) const {
		auto it = std::find(labels_.begin(), labels_.end(), label);
		if (it == labels_.end())
			return std::nullopt;
		return static_cast<Element>(it - labels_.begin());
	}
	Element index_of(const std::string& label) const {
		if (auto e = find(label))
			return *e;
		throw InputError("unknown element label '" + label + "'");
	}

	Element bottom() const { return bottom_; }
	Element top() const { return top_; }

	bool leq(Element x, Element y) const { return leq_(x, y); }
	bool less(Element x, Element y) const { return x != y && leq_(x, y); }
	Element meet(Element x, Element y) const { return meet_(x, y); }
	Element join(Element x, Element y) const { return join_(x, y); }
	Element mul(Element x, Element y) const { return mul_(x, y); }
	Element imp(Element x, Element y) const { return imp_(x, y); }
	Element neg(Element x) const { return neg_[x]; }
	/// x ⊕ y = ¬x → y
	Element oplus(Element x, Element y) const { return imp_(neg_[x], y); }
	Element power(Element x, std::size_t n) const {
		Element r = top_;
		for (std::size_t i = 0; i < n; ++i)
			r = mul_(x, r);
		return r;
	}

	const Relation& order() const { return leq_; }
	const Table& mul_table() const { return mul_; }
	const Table& imp_table() const { return imp_; }
	const Table& meet_table() const { return meet_; }
	const Table& join_table() const { return join_; }

	ElementSet universe() const { return ElementSet::full(size()); }
	ElementSet up_set(Element x) const {
		ElementSet s;
		for (Element y = 0; y < size(); ++y)
			if (leq(x, y))
				s.insert(y);
		return s;
	}
	ElementSet down_set(Element x) const {
		ElementSet s;
		for (Element y = 0; y < size(); ++y)
			if (leq(y, x))
				s.insert(y);
		return s;
	}

	bool is_chain() const {
		for (Element x = 0; x < size(); ++x)
			for (Element y = 0; y < size(); ++y)
				if (!leq(x, y) && !leq(y, x))
					return false;
		return true;
	}

	NmTables tables() const { return {name_, labels_, leq_, mul_, imp_, bottom_, top_}; }

	/// Copy with a different display name; the structure is untouched.
	FiniteNmAlgebra renamed(std::string name) const {
		FiniteNmAlgebra a = *this;
		a.name_ = std::move(name);
		return a;
	}

	/// Structural equality: same tables under the same indexing.
	bool same_structure(const FiniteNmAlgebra& o) const {
		return leq_ == o.leq_ && mul_ == o.mul_ && imp_ == o.imp_ && bottom_ == o.bottom_ && top_ == o.top_;
	}

private:
	friend NmValidation validate_nm(const NmTables& t);
	FiniteNmAlgebra() = default;

	std::string name_;
	std::vector<std::string> labels_;
	Relation leq_;
	Table meet_, join_, mul_, imp_;
	std::vector<Element> neg_;
	Element bottom_ = 0, top_ = 0;
};

struct NmValidation {
	std::optional<FiniteNmAlgebra> algebra;
	ValidationReport report;
};

namespace detail {

inline void check_shape(const NmTables& t) {
	const std::size_t n = t.labels.size();
	if (n < 2)
		throw InputError("an algebra needs at least two elements");
	if (n > kMaxElements)
		throw InputError("algebra too large (limit " + std::to_string(kMaxElements) + " elements)");
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			if (t.labels[i] == t.labels[j])
				throw InputError("duplicate element label '" + t.labels[i] + "'");
	if (t.leq.size() != n)
		throw InputError("order relation has wrong size");
	if (t.mul.size() != n || t.mul.cells().size() != n * n)
		throw InputError("multiplication table is not " + std::to_string(n) + "x" + std::to_string(n));
	if (t.imp.size() != n || t.imp.cells().size() != n * n)
		throw InputError("implication table is not " + std::to_string(n) + "x" + std::to_string(n));
	for (auto v : t.mul.cells())
		if (v >= n)
			throw InputError("multiplication table entry out of range");
	for (auto v : t.imp.cells())
		if (v >= n)
			throw InputError("implication table entry out of range");
	if (t.bottom >= n || t.top >= n)
		throw InputError("bottom/top index out of range");
}

/// Accumulates failures for one law, keeping the first witness.
struct LawScan {
	NmAxiom axiom;
	std::string law;
	std::vector<Element> witness{};
	std::size_t count = 0;

	void fail(std::vector<Element> w) {
		if (count++ == 0)
			witness = std::move(w);
	}
	void flush(ValidationReport& r) {
		if (count > 0)
			r.violations.push_back({axiom, law, std::move(witness), count});
	}
};

} // namespace detail

/// Checks every NM axiom exhaustively. Meet and join are derived from the
/// order; failure to exist is reported as a lattice violation. Malformed
/// input (wrong shapes, indices out of range) throws InputError.
inline NmValidation validate_nm(const NmTables& t) {
	detail::check_shape(t);
	const std::size_t n = t.labels.size();
	const Relation& le = t.leq;
	ValidationReport report;

	// (1) bounded lattice
	detail::LawScan refl{NmAxiom::BoundedLattice, "reflexivity"};
	detail::LawScan anti{NmAxiom::BoundedLattice, "antisymmetry"};
	detail::LawScan trans{NmAxiom::BoundedLattice, "transitivity"};
	detail::LawScan bounds{NmAxiom::BoundedLattice, "bounds"};
	detail::LawScan meets{NmAxiom::BoundedLattice, "meet-exists"};
	detail::LawScan joins{NmAxiom::BoundedLattice, "join-exists"};
	for (Element x = 0; x < n; ++x) {
		if (!le(x, x))
			refl.fail({x});
		if (!le(t.bottom, x) || !le(x, t.top))
			bounds.fail({x});
		for (Element y = 0; y < n; ++y) {
			if (x != y && le(x, y) && le(y, x))
				anti.fail({x, y});
			for (Element z = 0; z < n; ++z)
				if (le(x, y) && le(y, z) && !le(x, z))
					trans.fail({x, y, z});
		}
	}
	const bool poset_ok = refl.count == 0 && anti.count == 0 && trans.count == 0;
	Table meet(n), join(n);
	if (poset_ok) {
		for (Element x = 0; x < n; ++x)
			for (Element y = 0; y < n; ++y) {
				std::optional<Element> glb, lub;
				for (Element z = 0; z < n; ++z) {
					if (le(z, x) && le(z, y)) {
						bool greatest = true;
						for (Element w = 0; w < n && greatest; ++w)
							if (le(w, x) && le(w, y) && !le(w, z))
								greatest = false;
						if (greatest)
							glb = z;
					}
					if (le(x, z) && le(y, z)) {
						bool least = true;
						for (Element w = 0; w < n && least; ++w)
							if (le(x, w) && le(y, w) && !le(z, w))
								least = false;
						if (least)
							lub = z;
					}
				}
				if (glb)
					meet(x, y) = *glb;
				else
					meets.fail({x, y});
				if (lub)
					join(x, y) = *lub;
				else
					joins.fail({x, y});
			}
	}
	const bool lattice_ok = poset_ok && meets.count == 0 && joins.count == 0;
	for (auto* s : {&refl, &anti, &trans, &bounds, &meets, &joins})
		s->flush(report);

	// (2) commutative monoid with unit top
	detail::LawScan unit{NmAxiom::CommutativeMonoid, "unit"};
	detail::LawScan comm{NmAxiom::CommutativeMonoid, "commutativity"};
	detail::LawScan assoc{NmAxiom::CommutativeMonoid, "associativity"};
	// (3) residuation, (6) involution
	detail::LawScan adj{NmAxiom::Residuation, "adjointness"};
	detail::LawScan inv{NmAxiom::Involution, "double-negation"};
	const auto& mul = t.mul;
	const auto& imp = t.imp;
	for (Element x = 0; x < n; ++x) {
		if (mul(x, t.top) != x)
			unit.fail({x, t.top});
		if (imp(imp(x, t.bottom), t.bottom) != x)
			inv.fail({x});
		for (Element y = 0; y < n; ++y) {
			if (mul(x, y) != mul(y, x))
				comm.fail({x, y});
			for (Element z = 0; z < n; ++z) {
				if (mul(mul(x, y), z) != mul(x, mul(y, z)))
					assoc.fail({x, y, z});
				if (poset_ok && le(mul(x, y), z) != le(x, imp(y, z)))
					adj.fail({x, y, z});
			}
		}
	}
	unit.flush(report);
	comm.flush(report);
	assoc.flush(report);
	if (poset_ok)
		adj.flush(report);
	else
		report.skipped.push_back(NmAxiom::Residuation);

	// (4) prelinearity, (5) WNM need joins
	if (lattice_ok) {
		detail::LawScan pre{NmAxiom::Prelinearity, "prelinearity"};
		detail::LawScan wnm{NmAxiom::WeakNilpotentMinimum, "wnm"};
		for (Element x = 0; x < n; ++x)
			for (Element y = 0; y < n; ++y) {
				if (join(imp(x, y), imp(y, x)) != t.top)
					pre.fail({x, y});
				const Element xy = mul(x, y);
				if (join(imp(xy, t.bottom), imp(meet(x, y), xy)) != t.top)
					wnm.fail({x, y});
			}
		pre.flush(report);
		wnm.flush(report);
	} else {
		report.skipped.push_back(NmAxiom::Prelinearity);
		report.skipped.push_back(NmAxiom::WeakNilpotentMinimum);
	}
	inv.flush(report);

	std::stable_sort(report.violations.begin(), report.violations.end(),
	                 [](const Violation& a, const Violation& b) { return a.axiom < b.axiom; });

	NmValidation out;
	out.report = std::move(report);
	if (out.report.ok()) {
		FiniteNmAlgebra a;
		a.name_ = t.name;
		a.labels_ = t.labels;
		a.leq_ = t.leq;
		a.meet_ = std::move(meet);
		a.join_ = std::move(join);
		a.mul_ = t.mul;
		a.imp_ = t.imp;
		a.bottom_ = t.bottom;
		a.top_ = t.top;
		a.neg_.resize(n);
		for (Element x = 0; x < n; ++x)
			a.neg_[x] = t.imp(x, t.bottom);
		out.algebra = std::move(a);
	}
	return out;
}

inline std::string axiom_name(NmAxiom a) {
	switch (a) {
	case NmAxiom::BoundedLattice: return "bounded lattice";
	case NmAxiom::CommutativeMonoid: return "commutative monoid";
	case NmAxiom::Residuation: return "residuation";
	case NmAxiom::Prelinearity: return "prelinearity";
	case NmAxiom::WeakNilpotentMinimum: return "weak nilpotent minimum";
	case NmAxiom::Involution: return "involution";
	}
	return "?";
}

inline std::string format_tuple(const std::vector<std::string>& labels, const std::vector<Element>& w) {
	std::ostringstream os;
	os << '(';
	for (std::size_t i = 0; i < w.size(); ++i)
		os << (i ? "," : "") << (w[i] < labels.size() ? labels[w[i]] : std::to_string(w[i]));
	os << ')';
	return os.str();
}

inline std::string describe(const ValidationReport& r, const std::vector<std::string>& labels) {
	if (r.ok())
		return "NM-algebra: valid";
	std::ostringstream os;
	os << "NM-algebra: INVALID";
	for (const auto& v : r.violations)
		os << "\n  axiom " << static_cast<int>(v.axiom) << " (" << axiom_name(v.axiom) << ") " << v.law
		   << " fails at " << format_tuple(labels, v.witness) << " [" << v.count << " tuple(s)]";
	for (auto a : r.skipped)
		os << "\n  axiom " << static_cast<int>(a) << " (" << axiom_name(a) << ") not evaluated: order is not a lattice";
	return os.str();
}

/// Validates and returns the algebra, or throws InputError carrying the report.
inline FiniteNmAlgebra make_nm(const NmTables& t) {
	auto v = validate_nm(t);
	if (!v.algebra)
		throw InputError((t.name.empty() ? std::string("algebra") : t.name) + ": " + describe(v.report, t.labels));
	return std::move(*v.algebra);
}

/// Builds NmTables from a generating order (pairs x <= y, closure taken).
inline Relation order_from_pairs(std::size_t n, const std::vector<std::pair<Element, Element>>& pairs) {
	Relation r(n);
	for (auto [x, y] : pairs) {
		if (x >= n || y >= n)
			throw InputError("order pair index out of range");
		r.set(x, y);
	}
	return r.closure();
}

// Free-function forms of the derived operations.

inline void check_index(const FiniteNmAlgebra& a, Element x) {
	if (x >= a.size())
		throw InputError("element index " + std::to_string(x) + " out of range");
}

inline Element neg(const FiniteNmAlgebra& a, Element x) {
	check_index(a, x);
	return a.neg(x);
}

inline Element oplus(const FiniteNmAlgebra& a, Element x, Element y) {
	check_index(a, x);
	check_index(a, y);
	return a.oplus(x, y);
}

inline Element power(const FiniteNmAlgebra& a, Element x, std::size_t n) {
	check_index(a, x);
	return a.power(x, n);
}

} // namespace mnm

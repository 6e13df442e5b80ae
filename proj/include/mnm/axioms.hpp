#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "formula.hpp"

namespace mnm {

struct Schema {
	std::string id;
	std::string text;         ///< template over metavariables phi, psi, chi
	bool strong_only = false; ///< SMNL axiom
	std::string note;
	Formula pattern;
};

using Substitution = std::map<std::string, Formula>;

inline const std::vector<std::string>& metavariables() {
	static const std::vector<std::string> mv{"phi", "psi", "chi"};
	return mv;
}

inline bool is_metavariable(const std::string& s) {
	for (const auto& m : metavariables())
		if (m == s)
			return true;
	return false;
}

/// The 16 MNL schemas followed by the SMNL schema.
inline const std::vector<Schema>& axiom_schemas() {
	static const std::vector<Schema> all = [] {
		std::vector<Schema> v{
		    {"MTL1", "(phi -> psi) -> ((psi -> chi) -> (phi -> chi))", false, "", nullptr},
		    {"MTL2", "(phi & psi) -> phi", false, "", nullptr},
		    {"MTL3", "(phi & psi) -> (psi & phi)", false, "", nullptr},
		    {"MTL4", "(phi /\\ psi) -> phi", false, "", nullptr},
		    {"MTL5", "(phi /\\ psi) -> (psi /\\ phi)", false, "", nullptr},
		    {"MTL6", "(phi & (phi -> psi)) -> (phi /\\ psi)", false, "", nullptr},
		    {"MTL7a", "(phi -> (psi -> chi)) -> ((phi & psi) -> chi)", false, "", nullptr},
		    {"MTL7b", "((phi & psi) -> chi) -> (phi -> (psi -> chi))", false, "", nullptr},
		    {"MTL8", "((phi -> psi) -> chi) -> (((psi -> phi) -> chi) -> chi)", false, "", nullptr},
		    {"MTL9", "0 -> phi", false, "", nullptr},
		    {"DN", "((phi -> 0) -> 0) -> phi", false, "", nullptr},
		    {"WNM", "((phi & psi) -> 0) \\/ ((phi /\\ psi) -> (phi & psi))", false,
		     "the variant with (phi -> 0) & psi in the first disjunct is not valid on the 3-chain", nullptr},
		    {"U1", "A phi -> phi", false, "", nullptr},
		    {"U2", "A((phi -> 0) -> A psi) -> ((A phi -> 0) -> A psi)", false,
		     "A psi in the antecedent; with a bare psi the schema fails on the zero-one 3-chain", nullptr},
		    {"U3", "A(A phi -> psi) -> (A phi -> A psi)", false, "", nullptr},
		    {"U4", "A(phi \\/ A psi) -> (A phi \\/ A psi)", false, "", nullptr},
		    {"SMNL", "A(phi \\/ psi) -> (A phi \\/ A psi)", true, "", nullptr},
		};
		for (auto& s : v)
			s.pattern = parse_formula(s.text);
		return v;
	}();
	return all;
}

/// Literal readings of WNM and U2 that are not valid; kept for the tests
/// that exhibit their countermodels. Not accepted by the proof checker.
inline const std::vector<Schema>& rejected_variants() {
	static const std::vector<Schema> all = [] {
		std::vector<Schema> v{
		    {"WNM-literal", "((phi -> 0) & psi) \\/ ((phi /\\ psi) -> (phi & psi))", false, "", nullptr},
		    {"U2-literal", "A((phi -> 0) -> psi) -> ((A phi -> 0) -> A psi)", false, "", nullptr},
		};
		for (auto& s : v)
			s.pattern = parse_formula(s.text);
		return v;
	}();
	return all;
}

inline const Schema& find_schema(const std::string& id) {
	for (const auto& s : axiom_schemas())
		if (s.id == id)
			return s;
	throw InputError("unknown axiom schema '" + id + "'");
}

inline std::set<std::string> schema_metavariables(const Schema& s) {
	std::set<std::string> out;
	for (const auto& v : vars(s.pattern))
		if (is_metavariable(v))
			out.insert(v);
	return out;
}

namespace detail {
inline Formula substitute(const Formula& t, const Substitution& sub) {
	switch (t->kind) {
	case Kind::Var: {
		auto it = sub.find(t->name);
		return it == sub.end() ? t : it->second;
	}
	case Kind::Zero:
	case Kind::One: return t;
	case Kind::Forall: return f::forall(substitute(t->left, sub));
	default: return f::bin(t->kind, substitute(t->left, sub), substitute(t->right, sub));
	}
}
} // namespace detail

inline Formula instantiate(const Schema& s, const Substitution& sub) {
	for (const auto& m : schema_metavariables(s))
		if (!sub.count(m))
			throw InputError("schema " + s.id + ": missing metavariable " + m);
	for (const auto& [k, v] : sub)
		if (!schema_metavariables(s).count(k))
			throw InputError("schema " + s.id + " has no metavariable " + k);
	return detail::substitute(s.pattern, sub);
}

inline Formula instantiate(const std::string& id, const Substitution& sub) { return instantiate(find_schema(id), sub); }

namespace detail {
inline bool match(const Formula& t, const Formula& g, Substitution& b) {
	if (t->kind == Kind::Var && is_metavariable(t->name)) {
		auto it = b.find(t->name);
		if (it == b.end()) {
			b.emplace(t->name, g);
			return true;
		}
		return same(it->second, g);
	}
	if (t->kind != g->kind)
		return false;
	switch (t->kind) {
	case Kind::Var: return t->name == g->name;
	case Kind::Zero:
	case Kind::One: return true;
	case Kind::Forall: return match(t->left, g->left, b);
	default: return match(t->left, g->left, b) && match(t->right, g->right, b);
	}
}
} // namespace detail

/// Substitution making the schema equal to `g`, if one exists.
inline std::optional<Substitution> match_schema(const Schema& s, const Formula& g) {
	Substitution b;
	if (detail::match(s.pattern, g, b))
		return b;
	return std::nullopt;
}

} // namespace mnm

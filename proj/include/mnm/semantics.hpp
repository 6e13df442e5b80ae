#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "axioms.hpp"
#include "catalog.hpp"
#include "parallel.hpp"
#include "quantifier.hpp"
#include "rational.hpp"

namespace mnm {

using Assignment = std::map<std::string, Element>;

inline Element evaluate(const MonadicNmAlgebra& m, const Assignment& e, const Formula& phi) {
	const auto& a = m.algebra();
	switch (phi->kind) {
	case Kind::Var: {
		auto it = e.find(phi->name);
		if (it == e.end())
			throw InputError("unassigned variable '" + phi->name + "'");
		check_index(a, it->second);
		return it->second;
	}
	case Kind::Zero: return a.bottom();
	case Kind::One: return a.top();
	case Kind::Forall: return m.forall(evaluate(m, e, phi->left));
	case Kind::Min: return a.meet(evaluate(m, e, phi->left), evaluate(m, e, phi->right));
	case Kind::Max: return a.join(evaluate(m, e, phi->left), evaluate(m, e, phi->right));
	case Kind::And: return a.mul(evaluate(m, e, phi->left), evaluate(m, e, phi->right));
	case Kind::Imp: return a.imp(evaluate(m, e, phi->left), evaluate(m, e, phi->right));
	}
	throw InternalError("unknown formula kind");
}

/// Quantifier-free formulas on the standard algebra over [0,1], exactly.
inline RationalPoint evaluate_standard(const std::map<std::string, RationalPoint>& e, const Formula& phi) {
	switch (phi->kind) {
	case Kind::Var: {
		auto it = e.find(phi->name);
		if (it == e.end())
			throw InputError("unassigned variable '" + phi->name + "'");
		return it->second;
	}
	case Kind::Zero: return RationalPoint(0, 1);
	case Kind::One: return RationalPoint(1, 1);
	case Kind::Forall: throw InputError("the standard algebra has no quantifier; formula uses A");
	case Kind::Min: return standard_nm(evaluate_standard(e, phi->left), evaluate_standard(e, phi->right), StdOp::Meet);
	case Kind::Max: return standard_nm(evaluate_standard(e, phi->left), evaluate_standard(e, phi->right), StdOp::Join);
	case Kind::And: return standard_nm(evaluate_standard(e, phi->left), evaluate_standard(e, phi->right), StdOp::Mul);
	case Kind::Imp: return standard_nm(evaluate_standard(e, phi->left), evaluate_standard(e, phi->right), StdOp::Imp);
	}
	throw InternalError("unknown formula kind");
}

struct Theory {
	std::string name;
	std::vector<Formula> members;
};

/// One formula per line; blank lines and '#' comments skipped.
inline Theory parse_theory(const std::string& text, std::string name = "T") {
	Theory t{std::move(name), {}};
	std::istringstream in(text);
	std::string line;
	std::size_t no = 0;
	while (std::getline(in, line)) {
		++no;
		if (auto h = line.find('#'); h != std::string::npos)
			line.erase(h);
		if (line.find_first_not_of(" \t\r") == std::string::npos)
			continue;
		try {
			t.members.push_back(parse_formula(line));
		} catch (const InputError& e) {
			throw InputError("theory line " + std::to_string(no) + ": " + e.what());
		}
	}
	return t;
}

inline bool is_model(const MonadicNmAlgebra& m, const Assignment& e, const Theory& t) {
	for (const auto& phi : t.members)
		if (evaluate(m, e, phi) != m.algebra().top())
			return false;
	return true;
}

inline std::string format_assignment(const FiniteNmAlgebra& a, const Assignment& e) {
	std::string s;
	for (const auto& [k, v] : e) {
		if (!s.empty())
			s += ", ";
		s += k + "=" + a.label(v);
	}
	return s;
}

/// Values taken by formulas of depth <= d over the given atoms and 0, 1.
inline ElementSet value_closure(const MonadicNmAlgebra& m, ElementSet atoms, std::size_t d) {
	const auto& a = m.algebra();
	ElementSet v = atoms;
	v.insert(a.bottom());
	v.insert(a.top());
	for (std::size_t i = 0; i < d; ++i) {
		ElementSet next = v;
		v.for_each([&](Element x) {
			next.insert(m.forall(x));
			v.for_each([&](Element y) {
				next.insert(a.meet(x, y));
				next.insert(a.join(x, y));
				next.insert(a.mul(x, y));
				next.insert(a.imp(x, y));
			});
		});
		if (next == v)
			break;
		v = next;
	}
	return v;
}

struct SweepFailure {
	std::string entry;
	std::string atoms;        ///< values of p1..pk
	std::string metavalues;   ///< values substituted for phi, psi, chi
	std::string value;
};

struct SchemaSweep {
	std::string id;
	bool strong_only = false;
	std::size_t entries = 0;
	std::size_t tuples = 0;
	std::size_t failures = 0;
	std::optional<SweepFailure> first;
	/// strong_only schemas are also run on non-strong entries, where a
	/// failure separates the logics rather than refuting soundness
	std::size_t separating = 0;
	std::optional<SweepFailure> first_separating;
};

struct SoundnessReport {
	std::size_t depth = 0, var_count = 0;
	std::vector<std::string> entries;
	std::vector<SchemaSweep> schemas;
	bool mp_sound = true, nec_sound = true;
	std::optional<SweepFailure> rule_failure;
	bool sound() const {
		if (!mp_sound || !nec_sound)
			return false;
		for (const auto& s : schemas)
			if (s.failures)
				return false;
		return true;
	}
};

namespace detail {

inline std::string atoms_text(const FiniteNmAlgebra& a, const std::vector<Element>& as) {
	std::string s;
	for (std::size_t i = 0; i < as.size(); ++i)
		s += (i ? ", p" : "p") + std::to_string(i + 1) + "=" + a.label(as[i]);
	return s;
}

struct EntrySweep {
	std::vector<SchemaSweep> schemas;
	bool mp = true, nec = true;
	std::optional<SweepFailure> rule;
};

inline EntrySweep sweep_entry(const MonadicEntry& me, const std::vector<Schema>& schemas, std::size_t depth,
                              std::size_t var_count) {
	const auto& m = me.m;
	const auto& a = m.algebra();
	const std::size_t n = a.size();
	EntrySweep r;
	for (const auto& s : schemas)
		r.schemas.push_back({s.id, s.strong_only, 1, 0, 0, {}, 0, {}});
	std::vector<Element> atoms(var_count, 0);
	std::vector<std::vector<std::string>> mvs;
	for (const auto& s : schemas) {
		auto set = schema_metavariables(s);
		mvs.emplace_back(set.begin(), set.end());
	}
	for_each_tuple(n, var_count, [&](const std::vector<Element>& t) {
		atoms = t;
		const auto vals = value_closure(m, ElementSet::of(atoms), depth).elements();
		for (Element x : vals) {
			if (x == a.top() && m.forall(x) != a.top() && r.nec) {
				r.nec = false;
				r.rule = SweepFailure{me.id, atoms_text(a, atoms), "nec at " + a.label(x), a.label(m.forall(x))};
			}
			for (Element y : vals)
				if (x == a.top() && a.imp(x, y) == a.top() && y != a.top() && r.mp) {
					r.mp = false;
					r.rule = SweepFailure{me.id, atoms_text(a, atoms), "mp at " + a.label(x) + ", " + a.label(y),
					                      a.label(y)};
				}
		}
		for (std::size_t si = 0; si < schemas.size(); ++si) {
			auto& sw = r.schemas[si];
			const auto& names = mvs[si];
			const bool separating = schemas[si].strong_only && !m.strong();
			for_each_tuple(vals.size(), names.size(), [&](const std::vector<Element>& idx) {
				Assignment env;
				for (std::size_t k = 0; k < names.size(); ++k)
					env[names[k]] = vals[idx[k]];
				++sw.tuples;
				const Element v = evaluate(m, env, schemas[si].pattern);
				if (v == a.top())
					return true;
				SweepFailure fl{me.id, atoms_text(a, atoms), format_assignment(a, env), a.label(v)};
				if (separating) {
					if (!sw.separating++)
						sw.first_separating = fl;
				} else if (!sw.failures++) {
					sw.first = fl;
				}
				return true;
			});
		}
		return true;
	});
	return r;
}

} // namespace detail

/// Every schema instantiated with formulas of depth <= `depth` over
/// `var_count` variables, under every assignment, on every entry. Since an
/// instance's value depends only on the values of the substituted formulas,
/// metavariables range over the set of values those formulas take.
inline SoundnessReport soundness_sweep(const std::vector<MonadicEntry>& entries, std::size_t depth = 2,
                                       std::size_t var_count = 2, std::size_t workers = 1,
                                       const std::vector<Schema>& schemas = axiom_schemas()) {
	SoundnessReport rep;
	rep.depth = depth;
	rep.var_count = var_count;
	std::vector<detail::EntrySweep> parts(entries.size());
	parallel_chunks(entries.size(), workers, [&](std::size_t, std::size_t lo, std::size_t hi) {
		for (std::size_t i = lo; i < hi; ++i)
			parts[i] = detail::sweep_entry(entries[i], schemas, depth, var_count);
	});
	for (const auto& s : schemas)
		rep.schemas.push_back({s.id, s.strong_only, 0, 0, 0, {}, 0, {}});
	for (std::size_t i = 0; i < entries.size(); ++i) {
		rep.entries.push_back(entries[i].id);
		const auto& p = parts[i];
		for (std::size_t k = 0; k < schemas.size(); ++k) {
			auto& d = rep.schemas[k];
			const auto& s = p.schemas[k];
			d.entries += s.entries;
			d.tuples += s.tuples;
			if (s.failures && !d.failures)
				d.first = s.first;
			d.failures += s.failures;
			if (s.separating && !d.separating)
				d.first_separating = s.first_separating;
			d.separating += s.separating;
		}
		if ((!p.mp || !p.nec) && !rep.rule_failure)
			rep.rule_failure = p.rule;
		rep.mp_sound = rep.mp_sound && p.mp;
		rep.nec_sound = rep.nec_sound && p.nec;
	}
	return rep;
}

struct Countermodel {
	std::string entry;
	Assignment assignment;
	std::string assignment_text;
	std::string value;
};

struct ConsequenceVerdict {
	std::optional<Countermodel> countermodel;
	std::size_t entries = 0;
	std::size_t assignments = 0;
	bool holds() const { return !countermodel; }
};

/// Searches every assignment on every entry for a model of T where phi is
/// not top. Absence of a countermodel is evidence at this scale only.
inline ConsequenceVerdict consequence_check(const Theory& t, const Formula& phi, const std::vector<MonadicEntry>& entries) {
	std::set<std::string> vs = vars(phi);
	for (const auto& g : t.members)
		collect_vars(g, vs);
	if (vs.size() > 6)
		throw PreconditionError("consequence_check: more than 6 variables");
	const std::vector<std::string> names(vs.begin(), vs.end());
	ConsequenceVerdict v;
	for (const auto& me : entries) {
		++v.entries;
		const auto& a = me.m.algebra();
		bool stop = false;
		for_each_tuple(a.size(), names.size(), [&](const std::vector<Element>& tup) {
			Assignment e;
			for (std::size_t k = 0; k < names.size(); ++k)
				e[names[k]] = tup[k];
			++v.assignments;
			if (!is_model(me.m, e, t))
				return true;
			const Element r = evaluate(me.m, e, phi);
			if (r != a.top()) {
				v.countermodel = Countermodel{me.id, e, format_assignment(a, e), a.label(r)};
				stop = true;
			}
			return !stop;
		});
		if (stop)
			break;
	}
	return v;
}

} // namespace mnm

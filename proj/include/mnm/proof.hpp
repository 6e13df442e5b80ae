#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "axioms.hpp"
#include "semantics.hpp"

namespace mnm {

enum class Rule { Axiom, Premise, ModusPonens, Necessitation };

struct Justification {
	Rule rule = Rule::Axiom;
	std::string schema;                ///< Axiom
	std::optional<Substitution> subst; ///< Axiom; matched when absent
	std::size_t a = 0;                 ///< premise index, mp i, nec i (1-based)
	std::size_t b = 0;                 ///< mp j
};

struct ProofLine {
	Formula formula;
	Justification why;
};

using Proof = std::vector<ProofLine>;

namespace detail {

inline std::string trim(const std::string& s) {
	const auto b = s.find_first_not_of(" \t\r");
	if (b == std::string::npos)
		return "";
	return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline std::size_t parse_index(const std::string& tok, const std::string& where) {
	if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
		throw InputError(where + ": expected a line number, got '" + tok + "'");
	return std::stoul(tok);
}

inline Justification parse_justification(const std::string& text, const std::string& where) {
	std::istringstream in(text);
	std::string head;
	in >> head;
	Justification j;
	std::string x, y, rest;
	if (head == "premise") {
		j.rule = Rule::Premise;
		in >> x;
		j.a = parse_index(x, where);
	} else if (head == "mp") {
		j.rule = Rule::ModusPonens;
		in >> x >> y;
		j.a = parse_index(x, where);
		j.b = parse_index(y, where);
	} else if (head == "nec") {
		j.rule = Rule::Necessitation;
		in >> x;
		j.a = parse_index(x, where);
	} else if (head == "axiom") {
		j.rule = Rule::Axiom;
		in >> j.schema;
		if (j.schema.empty())
			throw InputError(where + ": axiom without schema id");
		std::getline(in, rest);
		rest = trim(rest);
		if (!rest.empty()) {
			if (rest.front() != '[' || rest.back() != ']')
				throw InputError(where + ": substitution must be written [phi=..., psi=...]");
			Substitution s;
			std::istringstream parts(rest.substr(1, rest.size() - 2));
			std::string item;
			while (std::getline(parts, item, ',')) {
				const auto eq = item.find('=');
				if (eq == std::string::npos)
					throw InputError(where + ": malformed substitution item '" + trim(item) + "'");
				const auto key = trim(item.substr(0, eq));
				if (!is_metavariable(key))
					throw InputError(where + ": unknown metavariable '" + key + "'");
				s[key] = parse_formula(item.substr(eq + 1));
			}
			j.subst = std::move(s);
		}
		return j;
	} else {
		throw InputError(where + ": unknown justification '" + head + "'");
	}
	if (in >> rest)
		throw InputError(where + ": trailing text '" + rest + "'");
	return j;
}

} // namespace detail

/// Lines `n. <formula> ; <justification>`, numbered from 1. Blank lines and
/// '#' comments are skipped.
inline Proof parse_proof(const std::string& text) {
	Proof p;
	std::istringstream in(text);
	std::string line;
	std::size_t no = 0;
	while (std::getline(in, line)) {
		++no;
		if (auto h = line.find('#'); h != std::string::npos)
			line.erase(h);
		line = detail::trim(line);
		if (line.empty())
			continue;
		const std::string where = "proof line " + std::to_string(no);
		const auto dot = line.find('.');
		const auto semi = line.find(';');
		if (dot == std::string::npos || semi == std::string::npos || semi < dot)
			throw InputError(where + ": expected 'n. <formula> ; <justification>'");
		const auto n = detail::parse_index(detail::trim(line.substr(0, dot)), where);
		if (n != p.size() + 1)
			throw InputError(where + ": expected line number " + std::to_string(p.size() + 1));
		try {
			ProofLine pl;
			pl.formula = parse_formula(line.substr(dot + 1, semi - dot - 1));
			pl.why = detail::parse_justification(line.substr(semi + 1), where);
			p.push_back(std::move(pl));
		} catch (const InputError& e) {
			const std::string msg = e.what();
			throw InputError(msg.rfind("proof line", 0) == 0 ? msg : where + ": " + msg);
		}
	}
	if (p.empty())
		throw InputError("proof is empty");
	return p;
}

inline std::string format_justification(const Justification& j) {
	switch (j.rule) {
	case Rule::Premise: return "premise " + std::to_string(j.a);
	case Rule::ModusPonens: return "mp " + std::to_string(j.a) + " " + std::to_string(j.b);
	case Rule::Necessitation: return "nec " + std::to_string(j.a);
	case Rule::Axiom: break;
	}
	std::string s = "axiom " + j.schema;
	if (j.subst) {
		s += " [";
		bool first = true;
		for (const auto& [k, v] : *j.subst) {
			s += (first ? "" : ", ") + k + "=" + print_formula(v);
			first = false;
		}
		s += "]";
	}
	return s;
}

inline std::string format_proof(const Proof& p) {
	std::string s;
	for (std::size_t i = 0; i < p.size(); ++i)
		s += std::to_string(i + 1) + ". " + print_formula(p[i].formula) + " ; " + format_justification(p[i].why) + "\n";
	return s;
}

struct ProofVerdict {
	bool valid = false;
	std::optional<std::size_t> bad_line; ///< 1-based
	std::string message;
	Formula proved;
};

/// Checks each line's justification; `strong` admits the SMNL schema.
inline ProofVerdict check_proof(const Theory& t, const Proof& p, bool strong = false) {
	ProofVerdict v;
	if (p.empty())
		throw PreconditionError("check_proof: empty proof");
	auto bad = [&](std::size_t line, std::string msg) {
		v.valid = false;
		v.bad_line = line;
		v.message = "line " + std::to_string(line) + ": " + std::move(msg);
		return v;
	};
	for (std::size_t i = 0; i < p.size(); ++i) {
		const std::size_t n = i + 1;
		const auto& line = p[i];
		const auto& j = line.why;
		auto earlier = [&](std::size_t k) { return k >= 1 && k < n; };
		switch (j.rule) {
		case Rule::Axiom: {
			const Schema* s = nullptr;
			for (const auto& c : axiom_schemas())
				if (c.id == j.schema)
					s = &c;
			if (!s)
				return bad(n, "unknown axiom schema '" + j.schema + "'");
			if (s->strong_only && !strong)
				return bad(n, "schema " + s->id + " is only available in the strong logic");
			if (j.subst) {
				Formula inst;
				try {
					inst = instantiate(*s, *j.subst);
				} catch (const InputError& e) {
					return bad(n, e.what());
				}
				if (!same(inst, line.formula))
					return bad(n, "formula is not the instance " + print_formula(inst) + " of " + s->id);
			} else if (!match_schema(*s, line.formula)) {
				return bad(n, "formula is not an instance of " + s->id);
			}
			break;
		}
		case Rule::Premise:
			if (j.a < 1 || j.a > t.members.size())
				return bad(n, "no premise " + std::to_string(j.a));
			if (!same(t.members[j.a - 1], line.formula))
				return bad(n, "formula differs from premise " + std::to_string(j.a));
			break;
		case Rule::ModusPonens: {
			if (!earlier(j.a) || !earlier(j.b))
				return bad(n, "mp must cite earlier lines");
			const auto& imp = p[j.b - 1].formula;
			if (imp->kind != Kind::Imp || !same(imp->left, p[j.a - 1].formula) || !same(imp->right, line.formula))
				return bad(n, "line " + std::to_string(j.b) + " is not line " + std::to_string(j.a) +
				                  " -> this line");
			break;
		}
		case Rule::Necessitation:
			if (!earlier(j.a))
				return bad(n, "nec must cite an earlier line");
			if (line.formula->kind != Kind::Forall || !same(line.formula->left, p[j.a - 1].formula))
				return bad(n, "formula is not A applied to line " + std::to_string(j.a));
			break;
		}
	}
	v.valid = true;
	v.proved = p.back().formula;
	v.message = "valid";
	return v;
}

} // namespace mnm

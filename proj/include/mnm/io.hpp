#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "quantifier.hpp"

namespace mnm {

inline std::string read_text_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw InputError("cannot read file '" + path + "'");
	std::ostringstream s;
	s << in.rdbuf();
	return s.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
	std::ofstream out(path, std::ios::binary);
	if (!out || !(out << text))
		throw InputError("cannot write file '" + path + "'");
}

struct AlgebraFile {
	NmTables tables;
	std::optional<std::vector<std::string>> forall; ///< labels, by element index
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
	std::istringstream in(line);
	std::vector<std::string> out;
	for (std::string t; in >> t;)
		out.push_back(t);
	return out;
}

inline Element label_index(const std::vector<std::string>& labels, const std::string& l, const std::string& where) {
	for (Element i = 0; i < labels.size(); ++i)
		if (labels[i] == l)
			return i;
	throw InputError(where + ": unknown element '" + l + "'");
}

} // namespace detail

/// Line format, '#' comments:
///   algebra <name>
///   elements <k> <l0> ... <lk-1>
///   bottom <l> / top <l>
///   order <l> <= <l>        (repeatable; reflexive-transitive closure taken)
///   mul / imp               (each followed by k rows of k labels)
///   forall <l0'> ... <lk-1'> (optional)
///   end
inline AlgebraFile parse_algebra_file(const std::string& text) {
	std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
	{
		std::istringstream in(text);
		std::string line;
		std::size_t no = 0;
		while (std::getline(in, line)) {
			++no;
			if (auto h = line.find('#'); h != std::string::npos)
				line.erase(h);
			auto t = detail::tokens(line);
			if (!t.empty())
				lines.emplace_back(no, std::move(t));
		}
	}
	AlgebraFile f;
	auto& t = f.tables;
	std::size_t k = 0;
	bool have_elements = false, have_bottom = false, have_top = false, have_mul = false, have_imp = false,
	     have_end = false;
	std::vector<std::pair<Element, Element>> order;
	for (std::size_t i = 0; i < lines.size(); ++i) {
		const auto& [no, tok] = lines[i];
		const std::string where = "line " + std::to_string(no);
		const std::string& kw = tok[0];
		if (have_end)
			throw InputError(where + ": content after 'end'");
		auto need_elements = [&] {
			if (!have_elements)
				throw InputError(where + ": '" + kw + "' before 'elements'");
		};
		if (kw == "algebra") {
			if (tok.size() != 2)
				throw InputError(where + ": expected 'algebra <name>'");
			t.name = tok[1];
		} else if (kw == "elements") {
			if (have_elements)
				throw InputError(where + ": duplicate 'elements'");
			if (tok.size() < 2 || tok[1].find_first_not_of("0123456789") != std::string::npos)
				throw InputError(where + ": expected 'elements <k> <labels>'");
			k = std::stoul(tok[1]);
			if (k < 2 || k > kMaxElements)
				throw InputError(where + ": element count must be between 2 and " + std::to_string(kMaxElements));
			if (tok.size() != k + 2)
				throw InputError(where + ": expected " + std::to_string(k) + " labels");
			t.labels.assign(tok.begin() + 2, tok.end());
			for (std::size_t a = 0; a < k; ++a)
				for (std::size_t b = a + 1; b < k; ++b)
					if (t.labels[a] == t.labels[b])
						throw InputError(where + ": duplicate label '" + t.labels[a] + "'");
			have_elements = true;
		} else if (kw == "bottom" || kw == "top") {
			need_elements();
			if (tok.size() != 2)
				throw InputError(where + ": expected '" + kw + " <label>'");
			(kw == "bottom" ? t.bottom : t.top) = detail::label_index(t.labels, tok[1], where);
			(kw == "bottom" ? have_bottom : have_top) = true;
		} else if (kw == "order") {
			need_elements();
			if (tok.size() != 4 || tok[2] != "<=")
				throw InputError(where + ": expected 'order <label> <= <label>'");
			order.emplace_back(detail::label_index(t.labels, tok[1], where), detail::label_index(t.labels, tok[3], where));
		} else if (kw == "mul" || kw == "imp") {
			need_elements();
			if (tok.size() != 1)
				throw InputError(where + ": '" + kw + "' takes its rows on the following lines");
			bool& have = kw == "mul" ? have_mul : have_imp;
			if (have)
				throw InputError(where + ": duplicate '" + kw + "'");
			Table table(k);
			for (std::size_t r = 0; r < k; ++r) {
				if (++i >= lines.size())
					throw InputError(where + ": '" + kw + "' table has fewer than " + std::to_string(k) + " rows");
				const auto& [rno, row] = lines[i];
				const std::string rw = "line " + std::to_string(rno);
				if (row.size() != k)
					throw InputError(rw + ": expected " + std::to_string(k) + " labels in " + kw + " row");
				for (std::size_t c = 0; c < k; ++c)
					table(r, c) = detail::label_index(t.labels, row[c], rw);
			}
			(kw == "mul" ? t.mul : t.imp) = std::move(table);
			have = true;
		} else if (kw == "forall") {
			need_elements();
			if (tok.size() != k + 1)
				throw InputError(where + ": expected " + std::to_string(k) + " labels after 'forall'");
			for (std::size_t c = 1; c <= k; ++c)
				detail::label_index(t.labels, tok[c], where);
			f.forall = std::vector<std::string>(tok.begin() + 1, tok.end());
		} else if (kw == "end") {
			have_end = true;
		} else {
			throw InputError(where + ": unknown keyword '" + kw + "'");
		}
	}
	if (!have_elements)
		throw InputError("missing 'elements'");
	if (!have_bottom || !have_top)
		throw InputError("missing 'bottom' or 'top'");
	if (!have_mul || !have_imp)
		throw InputError("missing 'mul' or 'imp' table");
	if (!have_end)
		throw InputError("missing 'end'");
	if (t.name.empty())
		t.name = "algebra";
	t.leq = order_from_pairs(k, order);
	return f;
}

inline QuantifierMap quantifier_from_labels(const FiniteNmAlgebra& a, const std::vector<std::string>& labels) {
	if (labels.size() != a.size())
		throw InputError("quantifier has " + std::to_string(labels.size()) + " entries, algebra has " +
		                 std::to_string(a.size()));
	QuantifierMap q;
	for (const auto& l : labels) {
		auto x = a.find(l);
		if (!x)
			throw InputError("quantifier names unknown element '" + l + "'");
		q.image.push_back(*x);
	}
	return q;
}

/// A single line `forall <l0'> ... <lk-1'>`, '#' comments allowed.
inline QuantifierMap parse_quantifier_file(const FiniteNmAlgebra& a, const std::string& text) {
	std::istringstream in(text);
	std::string line;
	std::optional<QuantifierMap> q;
	while (std::getline(in, line)) {
		if (auto h = line.find('#'); h != std::string::npos)
			line.erase(h);
		auto tok = detail::tokens(line);
		if (tok.empty())
			continue;
		if (tok[0] != "forall" || q)
			throw InputError("quantifier file must contain exactly one 'forall' line");
		q = quantifier_from_labels(a, std::vector<std::string>(tok.begin() + 1, tok.end()));
	}
	if (!q)
		throw InputError("quantifier file has no 'forall' line");
	return *q;
}

/// Writes tables with covering pairs of the order as `order` lines. Works
/// for unvalidated tables, so failing fixtures can be written too.
inline std::string write_tables_file(const NmTables& t, const std::optional<std::vector<std::string>>& forall = std::nullopt,
                                     const std::string& comment = "") {
	const std::size_t n = t.labels.size();
	const Relation le = t.leq.closure();
	auto less = [&](Element x, Element y) { return x != y && le(x, y); };
	std::ostringstream o;
	if (!comment.empty()) {
		std::istringstream c(comment);
		for (std::string l; std::getline(c, l);)
			o << "# " << l << "\n";
	}
	o << "algebra " << t.name << "\n";
	o << "elements " << n;
	for (const auto& l : t.labels)
		o << " " << l;
	o << "\nbottom " << t.labels[t.bottom] << "\ntop " << t.labels[t.top] << "\n";
	for (Element x = 0; x < n; ++x)
		for (Element y = 0; y < n; ++y) {
			if (!less(x, y))
				continue;
			bool cover = true;
			for (Element z = 0; z < n; ++z)
				if (less(x, z) && less(z, y))
					cover = false;
			if (cover)
				o << "order " << t.labels[x] << " <= " << t.labels[y] << "\n";
		}
	auto table = [&](const char* kw, const Table& tb) {
		o << kw << "\n";
		for (Element x = 0; x < n; ++x) {
			for (Element y = 0; y < n; ++y)
				o << (y ? " " : "") << t.labels[tb(x, y)];
			o << "\n";
		}
	};
	table("mul", t.mul);
	table("imp", t.imp);
	if (forall) {
		o << "forall";
		for (const auto& l : *forall)
			o << " " << l;
		o << "\n";
	}
	o << "end\n";
	return o.str();
}

inline std::string write_algebra_file(const FiniteNmAlgebra& a, const std::optional<QuantifierMap>& q = std::nullopt,
                                      const std::string& comment = "") {
	std::optional<std::vector<std::string>> labels;
	if (q) {
		labels.emplace();
		for (auto v : q->image)
			labels->push_back(a.label(v));
	}
	return write_tables_file(a.tables(), labels, comment);
}

} // namespace mnm

// Command-line front end for finite monadic NM-algebras.

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <mnm/algebra.hpp>
#include <mnm/catalog.hpp>
#include <mnm/filters.hpp>
#include <mnm/io.hpp>
#include <mnm/monadic_filters.hpp>
#include <mnm/proof.hpp>
#include <mnm/properties.hpp>
#include <mnm/quantifier.hpp>
#include <mnm/semantics.hpp>

using namespace mnm;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
	bool json = false;
	std::size_t workers = 1;
	std::size_t max_chain = 6;
	bool monadic = false;
	bool strong = false;
	bool oracle = false;
	std::string filter;
	std::string formula;
	std::string assign;
	std::string theory;
	std::string quantifier_file;
	std::string extend;
	bool properties = false;
	bool laws = false;
	bool separating = false;
	bool check_g_h = false;
	bool check_modal = false;
	std::size_t depth = 2, vars = 2, max_size = 6;
	std::vector<std::size_t> grids;
};

struct Output {
	int code = 0;
	Json json = Json::object();
	std::ostringstream text;
};

// ---------------------------------------------------------------------------
// Target resolution: a file path, or a catalog id with optional "#k".

struct Target {
	std::string source;
	NmTables tables;
	NmValidation validation;
	std::optional<QuantifierMap> quantifier;
	std::optional<std::vector<std::string>> quantifier_labels;
	std::string quantifier_origin;
};

const std::vector<CatalogEntry>& full_catalog() {
	static const std::vector<CatalogEntry> cat = build_catalog({9, true, true, 1});
	return cat;
}

Target load_target(const std::string& spec, const Options& o) {
	Target t;
	t.source = spec;
	if (std::filesystem::exists(spec)) {
		auto f = parse_algebra_file(read_text_file(spec));
		t.tables = std::move(f.tables);
		t.quantifier_labels = std::move(f.forall);
		if (t.quantifier_labels)
			t.quantifier_origin = "file";
	} else if (spec == "example-3-5-verbatim") {
		t.tables = example_3_5_verbatim_tables();
	} else if (spec == "example-4-15-verbatim") {
		t.tables = example_4_15_verbatim_tables();
		t.quantifier_labels = std::vector<std::string>{"0", "0", "0", "c", "d", "e", "e", "e", "1"};
		t.quantifier_origin = "printed";
	} else {
		std::string id = spec;
		std::optional<std::size_t> k;
		if (auto h = spec.find('#'); h != std::string::npos) {
			id = spec.substr(0, h);
			const auto num = spec.substr(h + 1);
			if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
				throw InputError("bad quantifier index in '" + spec + "'");
			k = std::stoul(num);
		}
		const CatalogEntry* e = find_entry(full_catalog(), id);
		if (!e)
			throw InputError("'" + spec + "' is neither a readable file nor a catalog id");
		t.tables = e->algebra.tables();
		if (k) {
			if (*k >= e->quantifiers.size())
				throw InputError(id + " has " + std::to_string(e->quantifiers.size()) + " quantifiers");
			t.quantifier = e->quantifiers[*k];
			t.quantifier_origin = "catalog #" + std::to_string(*k);
		} else if (id == "example-3-5") {
			t.quantifier = example_3_5_forall();
			t.quantifier_origin = "printed";
		} else if (id == "example-4-15") {
			t.quantifier = example_4_15_forall();
			t.quantifier_origin = "printed";
		}
	}
	t.validation = validate_nm(t.tables);
	if (!o.quantifier_file.empty()) {
		if (!t.validation.algebra)
			throw InputError("cannot attach a quantifier to an invalid algebra");
		t.quantifier = parse_quantifier_file(*t.validation.algebra, read_text_file(o.quantifier_file));
		t.quantifier_origin = "quantifier file";
	} else if (t.quantifier_labels && t.validation.algebra) {
		t.quantifier = quantifier_from_labels(*t.validation.algebra, *t.quantifier_labels);
	}
	return t;
}

const FiniteNmAlgebra& algebra_of(const Target& t) {
	if (!t.validation.algebra)
		throw InputError(t.source + " is not an NM-algebra: " + describe(t.validation.report, t.tables.labels));
	return *t.validation.algebra;
}

MonadicNmAlgebra monadic_of(const Target& t) {
	const auto& a = algebra_of(t);
	if (!t.quantifier)
		throw InputError(t.source + " has no quantifier (add a 'forall' line, --quantifier, or use <id>#k)");
	return make_monadic(a, *t.quantifier);
}

// ---------------------------------------------------------------------------
// JSON helpers; sets and maps are written with element labels.

Json labels_json(const FiniteNmAlgebra& a, ElementSet s) {
	Json j = Json::array();
	s.for_each([&](Element x) { j.push_back(a.label(x)); });
	return j;
}

Json map_json(const FiniteNmAlgebra& a, const QuantifierMap& q) {
	Json j = Json::array();
	for (auto v : q.image)
		j.push_back(a.label(v));
	return j;
}

Json tuple_json(const std::vector<std::string>& labels, const std::vector<Element>& t) {
	Json j = Json::array();
	for (auto x : t)
		j.push_back(labels.at(x));
	return j;
}

Json report_json(const std::vector<std::string>& labels, const PropertyReport& r) {
	Json arr = Json::array();
	for (const auto& c : r.clauses) {
		Json j{{"id", c.id}, {"statement", c.statement}, {"holds", c.holds}, {"checked", c.checked}};
		j["counterexample"] = c.holds ? Json(nullptr) : tuple_json(labels, c.counterexample);
		if (c.inequality) {
			Json s = Json::array();
			for (const auto& t : c.strict)
				s.push_back(tuple_json(labels, t));
			j["strict"] = s;
		}
		arr.push_back(j);
	}
	return arr;
}

void report_text(std::ostream& o, const std::vector<std::string>& labels, const PropertyReport& r,
                 const std::string& indent = "  ") {
	for (const auto& c : r.clauses) {
		o << indent << c.id << ": " << (c.holds ? "holds" : "fails");
		if (!c.holds)
			o << " at " << format_tuple(labels, c.counterexample);
		if (c.inequality && !c.strict.empty())
			o << " (strict at " << c.strict.size() << " tuples, first " << format_tuple(labels, c.strict[0]) << ")";
		o << "\n";
	}
}

Json algebra_json(const FiniteNmAlgebra& a) {
	return {{"name", a.name()}, {"size", a.size()}, {"labels", a.labels()}};
}

std::string yes(bool b) { return b ? "yes" : "no"; }

Assignment parse_assignment(const FiniteNmAlgebra& a, const std::string& text) {
	Assignment e;
	std::istringstream in(text);
	for (std::string item; std::getline(in, item, ',');) {
		const auto eq = item.find('=');
		if (eq == std::string::npos)
			throw InputError("--assign expects var=label pairs, got '" + item + "'");
		auto var = detail::trim(item.substr(0, eq)), lbl = detail::trim(item.substr(eq + 1));
		e[var] = a.index_of(lbl);
	}
	return e;
}

Theory load_theory(const Options& o) {
	if (o.theory.empty())
		return Theory{"empty", {}};
	return parse_theory(read_text_file(o.theory), o.theory);
}

std::vector<MonadicEntry> sweep_entries(const Options& o, std::size_t max_size) {
	return monadic_entries(build_catalog({o.max_chain, true, true, o.workers}), max_size);
}

// ---------------------------------------------------------------------------
// Verbs

void cmd_validate(const std::string& spec, const Options& o, Output& out) {
	auto t = load_target(spec, o);
	const auto& v = t.validation;
	auto& j = out.json;
	j["nm"] = {{"valid", v.report.ok()}};
	Json viols = Json::array();
	for (const auto& x : v.report.violations)
		viols.push_back({{"axiom", static_cast<int>(x.axiom)},
		                 {"name", axiom_name(x.axiom)},
		                 {"law", x.law},
		                 {"witness", tuple_json(t.tables.labels, x.witness)},
		                 {"count", x.count}});
	j["nm"]["violations"] = viols;
	Json skipped = Json::array();
	for (auto s : v.report.skipped)
		skipped.push_back(static_cast<int>(s));
	j["nm"]["skipped"] = skipped;
	if (!v.report.ok()) {
		out.code = 1;
		out.text << describe(v.report, t.tables.labels) << "\n";
		j["quantifier"] = nullptr;
		return;
	}
	out.text << "NM-algebra: valid";
	const auto& a = *v.algebra;
	j["algebra"] = algebra_json(a);
	if (!t.quantifier) {
		j["quantifier"] = nullptr;
		out.text << "; quantifier: none\n";
	} else {
		auto rep = check_universal(a, *t.quantifier);
		Json q{{"map", map_json(a, *t.quantifier)}, {"origin", t.quantifier_origin}, {"axioms", report_json(a.labels(), rep)}};
		if (rep.all_hold()) {
			auto s = check_strong(a, *t.quantifier);
			q["strong"] = s.strong;
			q["strong_witness"] = s.witness ? tuple_json(a.labels(), {s.witness->first, s.witness->second}) : Json(nullptr);
			out.text << "; quantifier: U1-U4 pass" << (s.strong ? ", strong" : ", not strong");
			if (s.witness)
				out.text << " (A(x v y) != Ax v Ay at " << format_tuple(a.labels(), {s.witness->first, s.witness->second})
				         << ")";
			out.text << "\n";
		} else {
			out.code = 1;
			out.text << "; quantifier: fails\n";
			report_text(out.text, a.labels(), rep);
		}
		j["quantifier"] = q;
	}
	if (!o.properties)
		return;
	Json p;
	auto basic = check_basic_properties(a);
	auto defin = check_definability(a);
	auto boolean = is_boolean(a);
	p["basic"] = report_json(a.labels(), basic);
	p["definability"] = report_json(a.labels(), defin);
	p["boolean"] = boolean.boolean;
	out.text << "basic properties:\n";
	report_text(out.text, a.labels(), basic);
	out.text << "definability:\n";
	report_text(out.text, a.labels(), defin);
	out.text << "boolean: " << yes(boolean.boolean) << "\n";
	if (t.quantifier && check_universal(a, *t.quantifier).all_hold()) {
		auto m = make_monadic(a, *t.quantifier);
		auto qp = quantifier_properties(m);
		auto ex = exists_of(m);
		auto w = check_w_axioms(a, m.forall_map(), m.exists_map());
		auto modal = check_modal(a, m.forall_map());
		auto mb = is_monadic_boolean(m);
		auto rs = rough_space(m);
		p["exists"] = {{"map", map_json(a, ex.map)}, {"axioms", report_json(a.labels(), ex.report)}};
		p["quantifier_properties"] = report_json(a.labels(), qp);
		p["w_axioms"] = report_json(a.labels(), w);
		p["modal"] = report_json(a.labels(), modal);
		p["monadic_boolean"] = {{"boolean", mb.boolean},
		                        {"quantifiers_checked", mb.quantifiers_checked},
		                        {"meet_identity_own", mb.meet_identity_own},
		                        {"join_identity_own", mb.join_identity_own},
		                        {"meet_agrees", mb.meet_agrees()},
		                        {"join_agrees", mb.join_agrees()}};
		Json coll = Json::array();
		for (auto [x, y] : rs.collisions)
			coll.push_back({a.label(x), a.label(y)});
		p["rough_space"] = {{"inner_definable", labels_json(a, rs.inner_definable)},
		                    {"upper_definable", labels_json(a, rs.upper_definable)},
		                    {"inner_law", rs.inner_law},
		                    {"upper_law", rs.upper_law},
		                    {"collisions", coll}};
		out.text << "existential quantifier: " << format_map(a, ex.map) << "\n";
		report_text(out.text, a.labels(), ex.report);
		out.text << "quantifier properties:\n";
		report_text(out.text, a.labels(), qp);
		out.text << "W axioms for (A, E):\n";
		report_text(out.text, a.labels(), w);
		out.text << "modal axioms:\n";
		report_text(out.text, a.labels(), modal);
		out.text << "monadic boolean: " << yes(mb.boolean) << " (" << mb.quantifiers_checked
		         << " quantifiers checked; A(x ^ y) = Ax * Ay for all iff Boolean: " << yes(mb.meet_agrees())
		         << "; A(x v y) = Ax (+) Ay for all iff Boolean: " << yes(mb.join_agrees()) << ")\n";
		out.text << "rough space: inner " << format_set(a, rs.inner_definable) << ", upper "
		         << format_set(a, rs.upper_definable) << ", " << rs.collisions.size() << " collisions\n";
	}
	j["properties"] = p;
}

void cmd_quantifiers(const std::string& spec, const Options& o, Output& out) {
	auto t = load_target(spec, o);
	const auto& a = algebra_of(t);
	auto qs = o.oracle ? enumerate_quantifiers_naive(a, o.strong) : enumerate_quantifiers(a, o.strong, o.workers);
	Json list = Json::array();
	out.text << qs.size() << (o.strong ? " strong" : "") << " quantifiers on " << a.name()
	         << (o.oracle ? " (naive enumeration)" : "") << "\n";
	for (std::size_t i = 0; i < qs.size(); ++i) {
		const bool s = detail::join_preserving(a, qs[i].image);
		list.push_back({{"index", i}, {"map", map_json(a, qs[i])}, {"strong", s},
		                {"fixpoints", labels_json(a, fixpoints_of(qs[i]))}});
		out.text << "  #" << i << "  " << format_map(a, qs[i]) << (s ? "  strong" : "") << "\n";
	}
	out.json["algebra"] = algebra_json(a);
	out.json["method"] = o.oracle ? "naive" : "pruned";
	out.json["strong_only"] = o.strong;
	out.json["quantifiers"] = list;
	if (o.check_g_h) {
		auto g = verify_g_h_equivalence(a);
		out.json["g_h"] = {{"tied_equal", g.tied_equal()},
		                   {"projection_equal", g.projection_equal()},
		                   {"pairs_equal", g.pairs_equal()},
		                   {"quantifiers", g.g_maps.size()},
		                   {"w_tied", g.h_tied.size()},
		                   {"w_projection", g.h_projection.size()},
		                   {"w_pairs", g.h_pairs.size()}};
		out.text << "U1-U4 vs W1-W5: tied " << (g.tied_equal() ? "equal" : "differ") << " (" << g.g_maps.size()
		         << " vs " << g.h_tied.size() << "), projection " << (g.projection_equal() ? "equal" : "differ")
		         << " (" << g.h_projection.size() << "), pairs " << (g.pairs_equal() ? "equal" : "differ") << " ("
		         << g.g_pairs.size() << " vs " << g.h_pairs.size() << ")\n";
	}
	if (o.check_modal) {
		auto s = modal_strong_equivalence(a);
		out.json["modal"] = {{"equal", s.equal()}, {"modal", s.left.size()}, {"strong", s.right.size()}};
		out.text << "modal operators with star vs strong quantifiers: " << (s.equal() ? "equal" : "differ") << " ("
		         << s.left.size() << " vs " << s.right.size() << ")\n";
	}
}

std::string filter_tags(const FiniteNmAlgebra& a, ElementSet f) {
	std::string s;
	if (!is_proper(a, f))
		return "";
	if (is_prime_filter(a, f))
		s += " prime";
	if (is_maximal_filter(a, f))
		s += " maximal";
	return s;
}

void cmd_filters(const std::string& spec, const Options& o, Output& out) {
	auto t = load_target(spec, o);
	const auto& a = algebra_of(t);
	if (!o.monadic) {
		if (!o.filter.empty()) {
			auto g = filter_generated(a, parse_set(a, o.filter));
			out.json["generated"] = labels_json(a, g);
			out.text << "<" << o.filter << "> = " << format_set(a, g) << "\n";
			return;
		}
		Json list = Json::array();
		auto fs = all_filters(a);
		out.text << fs.size() << " filters\n";
		for (auto f : fs) {
			const bool proper = is_proper(a, f);
			const bool prime = proper && is_prime_filter(a, f);
			const bool minimal = prime && is_minimal_prime(a, f).definitional;
			list.push_back({{"filter", labels_json(a, f)},
			                {"proper", proper},
			                {"prime", prime},
			                {"minimal_prime", minimal},
			                {"maximal", proper && is_maximal_filter(a, f)}});
			out.text << "  " << format_set(a, f) << filter_tags(a, f) << (minimal ? " minimal-prime" : "") << "\n";
		}
		out.json["filters"] = list;
		return;
	}
	auto m = monadic_of(t);
	if (!o.filter.empty()) {
		auto g = mf_generated(m, parse_set(a, o.filter));
		out.json["generated"] = labels_json(a, g);
		out.text << "<" << o.filter << ">_A = " << format_set(a, g) << "\n";
		return;
	}
	Json list = Json::array();
	auto fs = all_monadic_filters(m);
	out.text << fs.size() << " monadic filters\n";
	for (auto f : fs) {
		const bool proper = is_proper(a, f);
		const bool prime = proper && is_prime_mf(m, f);
		const bool maximal = proper && is_maximal_mf(m, f);
		list.push_back({{"filter", labels_json(a, f)}, {"proper", proper}, {"prime", prime}, {"maximal", maximal}});
		out.text << "  " << format_set(a, f) << (prime ? " prime" : "") << (maximal ? " maximal" : "") << "\n";
	}
	out.json["monadic_filters"] = list;
	if (o.laws) {
		auto laws = mf_principal_laws(m);
		out.json["laws"] = report_json(a.labels(), laws);
		out.text << "generation laws:\n";
		report_text(out.text, a.labels(), laws);
	}
}

void cmd_classify(const std::string& spec, const Options& o, Output& out) {
	auto t = load_target(spec, o);
	const auto& a = algebra_of(t);
	if (!t.quantifier && !o.monadic) {
		auto rep = is_representable(a);
		Json w = Json::array();
		for (auto p : rep.witness)
			w.push_back(labels_json(a, p));
		Json minimal = Json::array();
		for (auto p : prime_filters(a))
			if (is_minimal_prime(a, p).definitional)
				minimal.push_back(labels_json(a, p));
		out.json["nm"] = {{"simple", is_simple_nm(a)}, {"subdirectly_irreducible", is_si_nm(a)},
		                  {"chain", a.is_chain()},     {"boolean", is_boolean(a).boolean},
		                  {"representable", rep.representable}, {"representation_primes", w},
		                  {"minimal_primes", minimal}};
		out.text << "simple: " << yes(is_simple_nm(a)) << "\nsubdirectly irreducible: " << yes(is_si_nm(a))
		         << "\nchain: " << yes(a.is_chain()) << "\nboolean: " << yes(is_boolean(a).boolean)
		         << "\nrepresentable: " << yes(rep.representable) << "\n";
		return;
	}
	auto m = monadic_of(t);
	auto c = classify(m);
	Json coat = Json::array();
	for (auto x : c.coatoms)
		coat.push_back(a.label(x));
	auto& j = out.json;
	j["quantifier"] = map_json(a, m.forall_map());
	j["classification"] = {
	    {"simple", c.simple},
	    {"subdirectly_irreducible", c.si},
	    {"least_nontrivial", c.least_nontrivial ? labels_json(a, *c.least_nontrivial) : Json(nullptr)},
	    {"chain", c.chain},
	    {"strong", c.strong},
	    {"coatoms", coat},
	    {"fixpoints", labels_json(a, m.fixpoints())},
	    {"fixpoints_are_0_1", c.fix_is_01},
	    {"forall_image_simple", c.forall_l_simple},
	    {"forall_image_si", c.fix_si},
	    {"forall_image_chain", c.forall_l_chain},
	    {"si_witness", c.si_witness ? Json(a.label(*c.si_witness)) : Json(nullptr)},
	    {"top_join_prime", c.top_join_prime}};
	j["cross_checks"] = {{"simple_iff_fixpoints_0_1", c.simple_iff_fix01()},
	                     {"simple_iff_forall_image_simple", c.simple_iff_forall_l_simple()},
	                     {"si_iff_witness", c.si_iff_witness()},
	                     {"si_iff_forall_image_si", c.si_iff_fix_si()},
	                     {"strong_si_iff_chain", c.strong_si_iff_chain()},
	                     {"si_implies_forall_image_chain", c.si_implies_forall_l_chain()},
	                     {"strong_si_implies_top_join_prime", c.strong_si_implies_join_prime()}};
	auto ri = restriction_isomorphism(m);
	j["restriction_isomorphism"] = {{"bijection", ri.bijection},
	                                {"forward_monotone", ri.forward_monotone},
	                                {"backward_inverse", ri.backward_inverse},
	                                {"regenerates", ri.regenerates},
	                                {"extension_monadic", ri.extension_monadic}};
	if (a.size() <= 10) {
		auto cc = congruence_correspondence(m);
		j["congruences"] = {{"monadic_congruences", cc.monadic_congruences.size()}, {"correspondence", cc.ok()}};
	}
	Json filters = Json::array();
	out.text << "simple: " << yes(c.simple) << "\nsubdirectly irreducible: " << yes(c.si);
	if (c.least_nontrivial)
		out.text << " (least nontrivial monadic filter " << format_set(a, *c.least_nontrivial) << ")";
	out.text << "\nchain: " << yes(c.chain) << "\nstrong: " << yes(c.strong) << "\nfixpoints: " << format_set(a, m.fixpoints())
	         << "\nmonadic filters:\n";
	for (auto f : c.monadic_filters) {
		Json fj{{"filter", labels_json(a, f)}};
		out.text << "  " << format_set(a, f);
		if (is_proper(a, f)) {
			auto me = maximal_equivalences(m, f);
			fj["maximal"] = {{"definition", me.definition},
			                 {"forall_dichotomy", me.forall_dichotomy},
			                 {"exists_dichotomy", me.exists_dichotomy},
			                 {"forall_power_dichotomy", me.forall_power_dichotomy},
			                 {"exists_power_dichotomy", me.exists_power_dichotomy}};
			auto pe = prime_equivalences(m, f);
			fj["prime"] = {{"definition", pe.definition},
			               {"join_split", pe.join_split},
			               {"imp_total", pe.imp_total},
			               {"chain_quotient", pe.chain_quotient}};
			out.text << (pe.definition ? " prime" : "") << (me.definition ? " maximal" : "");
		}
		out.text << "\n";
		filters.push_back(fj);
	}
	j["monadic_filters"] = filters;
	out.text << "cross-checks:\n";
	for (const auto& [k, v] : j["cross_checks"].items())
		out.text << "  " << k << ": " << (v.get<bool>() ? "agree" : "DISAGREE") << "\n";
	out.text << "restriction to fixpoints is an order isomorphism: " << yes(ri.ok()) << "\n";
}

void cmd_quotient(const std::string& spec, const Options& o, Output& out) {
	auto t = load_target(spec, o);
	const auto& a = algebra_of(t);
	if (o.filter.empty())
		throw InputError("quotient requires --filter");
	const ElementSet f = parse_set(a, o.filter);
	Json blocks = Json::array();
	auto emit = [&](const FiniteNmAlgebra& qa, const Congruence& c, const std::vector<Element>& proj,
	                const std::optional<QuantifierMap>& q) {
		for (const auto& b : c.blocks)
			blocks.push_back(labels_json(a, b));
		Json pj = Json::array();
		for (auto p : proj)
			pj.push_back(qa.label(p));
		out.json["filter"] = labels_json(a, f);
		out.json["blocks"] = blocks;
		out.json["projection"] = pj;
		out.json["chain"] = qa.is_chain();
		out.json["algebra_file"] = write_algebra_file(qa, q);
		out.text << write_algebra_file(qa, q);
	};
	if (o.monadic) {
		auto m = monadic_of(t);
		auto mq = quotient_monadic(m, f);
		emit(mq.algebra.algebra(), mq.congruence, mq.projection, mq.algebra.forall_map());
	} else {
		auto q = quotient(a, f);
		emit(q.algebra, q.congruence, q.projection, std::nullopt);
	}
}

Json embedding_json(const MonadicNmAlgebra& m, const SubdirectEmbedding& s) {
	const auto& a = m.algebra();
	Json factors = Json::array();
	for (std::size_t i = 0; i < s.factors.size(); ++i)
		factors.push_back({{"filter", labels_json(a, s.factor_filters[i])},
		                   {"size", s.factors[i].algebra.size()},
		                   {"labels", s.factors[i].algebra.algebra().labels()}});
	Json emb = Json::object();
	for (Element x = 0; x < a.size(); ++x) {
		Json tup = Json::array();
		for (std::size_t i = 0; i < s.factors.size(); ++i)
			tup.push_back(s.factors[i].algebra.algebra().label(s.embedding[x][i]));
		emb[a.label(x)] = tup;
	}
	return {{"factors", factors},       {"embedding", emb},     {"injective", s.injective},
	        {"surjective", s.surjective}, {"chains", s.chains}, {"forall_injective", s.forall_injective}};
}

void embedding_text(std::ostream& o, const MonadicNmAlgebra& m, const SubdirectEmbedding& s) {
	const auto& a = m.algebra();
	o << s.factors.size() << " factors:";
	for (auto f : s.factor_filters)
		o << " L/" << format_set(a, f);
	o << "\n";
	for (Element x = 0; x < a.size(); ++x) {
		o << "  " << a.label(x) << " ->";
		for (std::size_t i = 0; i < s.factors.size(); ++i)
			o << " " << s.factors[i].algebra.algebra().label(s.embedding[x][i]);
		o << "\n";
	}
	o << "injective: " << yes(s.injective) << ", projections onto: " << yes(s.surjective)
	  << ", factors are chains: " << yes(s.chains) << ", injective on AL: " << yes(s.forall_injective) << "\n";
}

void cmd_represent(const std::string& spec, const Options& o, Output& out) {
	auto t = load_target(spec, o);
	const auto& a = algebra_of(t);
	if (!t.quantifier) {
		auto r = is_representable(a);
		Json w = Json::array();
		for (auto p : r.witness)
			w.push_back(labels_json(a, p));
		out.json["representable"] = r.representable;
		out.json["primes"] = w;
		out.text << "representable: " << yes(r.representable);
		for (auto p : r.witness)
			out.text << " " << format_set(a, p);
		out.text << "\n";
		out.code = r.representable ? 0 : 1;
		return;
	}
	auto m = monadic_of(t);
	if (!o.extend.empty()) {
		const ElementSet f = o.filter.empty() ? ElementSet::single(a.top()) : parse_set(a, o.filter);
		auto p = prime_extension(m, f, a.index_of(o.extend));
		out.json["prime_extension"] = labels_json(a, p);
		out.text << "prime monadic filter containing " << format_set(a, f) << " and omitting " << o.extend << ": "
		         << format_set(a, p) << "\n";
		return;
	}
	auto s = o.separating ? separating_representation(m) : subdirect_representation(m);
	out.json["kind"] = o.separating ? "separating" : "subdirect";
	out.json["representation"] = embedding_json(m, s);
	embedding_text(out.text, m, s);
	auto q = representable_with_quantifier(m);
	Json mp = Json::array();
	for (auto p : q.minimal_primes)
		mp.push_back(labels_json(a, p));
	out.json["minimal_primes"] = {{"filters", mp}, {"all_monadic", q.all_forall_closed},
	                              {"intersection_is_top", q.intersection_is_top}};
	auto id = filter_intersection_identity(m);
	out.json["intersection_identity"] = {{"holds", id.holds}, {"checked", id.checked}};
	out.text << "minimal primes monadic: " << yes(q.all_forall_closed) << ", meet {1}: " << yes(q.intersection_is_top)
	         << "\nF = <F u {x->y}>_A n <F u {y->x}>_A: " << (id.holds ? "holds" : "fails") << " (" << id.checked
	         << " cases)\n";
	if (!s.ok())
		out.code = 1;
}

void cmd_eval(const std::string& spec, const Options& o, Output& out) {
	if (o.formula.empty())
		throw InputError("eval requires --formula");
	auto phi = parse_formula(o.formula);
	out.json["formula"] = print_formula(phi);
	if (spec == "standard") {
		std::map<std::string, RationalPoint> e;
		std::istringstream in(o.assign);
		for (std::string item; std::getline(in, item, ',');) {
			const auto eq = item.find('=');
			if (eq == std::string::npos)
				throw InputError("--assign expects var=value pairs");
			e[detail::trim(item.substr(0, eq))] = parse_rational(detail::trim(item.substr(eq + 1)));
		}
		auto v = evaluate_standard(e, phi);
		out.json["value"] = v.str();
		out.text << v.str() << "\n";
		return;
	}
	auto t = load_target(spec, o);
	auto m = monadic_of(t);
	const auto& a = m.algebra();
	auto e = parse_assignment(a, o.assign);
	const Element v = evaluate(m, e, phi);
	out.json["assignment"] = format_assignment(a, e);
	out.json["value"] = a.label(v);
	out.text << a.label(v) << "\n";
	if (!o.theory.empty()) {
		const bool model = is_model(m, e, load_theory(o));
		out.json["model"] = model;
		out.text << "model of theory: " << yes(model) << "\n";
	}
}

void cmd_consequence(const Options& o, Output& out) {
	if (o.formula.empty())
		throw InputError("consequence requires --formula");
	auto th = load_theory(o);
	auto phi = parse_formula(o.formula);
	auto entries = sweep_entries(o, 9);
	if (o.strong) {
		std::vector<MonadicEntry> s;
		for (auto& e : entries)
			if (e.m.strong())
				s.push_back(e);
		entries = std::move(s);
	}
	auto v = consequence_check(th, phi, entries);
	out.json["formula"] = print_formula(phi);
	out.json["entries"] = v.entries;
	out.json["assignments"] = v.assignments;
	if (v.countermodel) {
		out.code = 1;
		out.json["countermodel"] = {{"entry", v.countermodel->entry},
		                            {"assignment", v.countermodel->assignment_text},
		                            {"value", v.countermodel->value}};
		out.text << "countermodel: " << v.countermodel->entry << " with " << v.countermodel->assignment_text
		         << " gives " << v.countermodel->value << "\n";
	} else {
		out.json["countermodel"] = nullptr;
		out.text << "no countermodel at this scale (" << v.entries << " algebras, " << v.assignments
		         << " assignments)\n";
	}
}

void cmd_proof(const std::string& path, const Options& o, Output& out) {
	auto p = parse_proof(read_text_file(path));
	auto v = check_proof(load_theory(o), p, o.strong);
	out.json["valid"] = v.valid;
	out.json["lines"] = p.size();
	out.json["bad_line"] = v.bad_line ? Json(*v.bad_line) : Json(nullptr);
	out.json["message"] = v.message;
	out.json["proved"] = v.valid ? Json(print_formula(v.proved)) : Json(nullptr);
	if (v.valid) {
		out.text << "valid proof of " << print_formula(v.proved) << "\n";
	} else {
		out.code = 1;
		out.text << "invalid: " << v.message << "\n";
	}
}

void cmd_catalog(const std::string& action, const std::string& arg, const Options& o, Output& out) {
	if (action == "list") {
		auto cat = build_catalog({o.max_chain, true, true, o.workers});
		Json list = Json::array();
		for (const auto& e : cat) {
			std::size_t strong = 0;
			for (const auto& q : e.quantifiers)
				strong += detail::join_preserving(e.algebra, q.image);
			list.push_back({{"id", e.id}, {"size", e.algebra.size()}, {"provenance", provenance_name(e.provenance)},
			                {"quantifiers", e.quantifiers.size()}, {"strong", strong}, {"chain", e.algebra.is_chain()}});
			out.text << e.id << "  size " << e.algebra.size() << "  " << provenance_name(e.provenance) << "  "
			         << e.quantifiers.size() << " quantifiers (" << strong << " strong)\n";
		}
		out.json["entries"] = list;
	} else if (action == "export") {
		if (arg.empty())
			throw InputError("catalog export requires a directory");
		std::filesystem::create_directories(arg);
		auto cat = build_catalog({o.max_chain, true, true, o.workers});
		Json files = Json::array();
		for (const auto& e : cat) {
			std::optional<QuantifierMap> attached;
			if (e.id == "example-3-5")
				attached = example_3_5_forall();
			if (e.id == "example-4-15")
				attached = example_4_15_forall();
			const auto path = (std::filesystem::path(arg) / (e.id + ".alg")).string();
			write_text_file(path, write_algebra_file(e.algebra, attached, e.note));
			files.push_back(path);
			for (std::size_t k = 0; k < e.quantifiers.size(); ++k) {
				const auto qpath = (std::filesystem::path(arg) / (e.id + "-q" + std::to_string(k) + ".forall")).string();
				write_text_file(qpath, "forall " + format_map(e.algebra, e.quantifiers[k]) + "\n");
				files.push_back(qpath);
			}
		}
		out.json["files"] = files;
		out.text << "wrote " << files.size() << " files to " << arg << "\n";
	} else if (action == "soundness") {
		auto entries = sweep_entries(o, o.max_size);
		auto r = soundness_sweep(entries, o.depth, o.vars, o.workers);
		Json schemas = Json::array();
		out.text << "depth " << r.depth << ", " << r.var_count << " variables, " << r.entries.size()
		         << " monadic algebras\n";
		auto fail_json = [](const std::optional<SweepFailure>& f) -> Json {
			if (!f)
				return nullptr;
			return {{"entry", f->entry}, {"atoms", f->atoms}, {"metavalues", f->metavalues}, {"value", f->value}};
		};
		for (const auto& s : r.schemas) {
			schemas.push_back({{"id", s.id}, {"strong_only", s.strong_only}, {"tuples", s.tuples},
			                   {"failures", s.failures}, {"first_failure", fail_json(s.first)},
			                   {"separating", s.separating}, {"first_separating", fail_json(s.first_separating)}});
			out.text << "  " << s.id << ": " << (s.failures ? "FAILS" : "top") << " on " << s.tuples << " value tuples";
			if (s.first)
				out.text << " (first: " << s.first->entry << ", " << s.first->metavalues << " gives " << s.first->value
				         << ")";
			if (s.strong_only)
				out.text << "; fails on " << s.separating << " tuples of non-strong algebras";
			out.text << "\n";
		}
		out.json["schemas"] = schemas;
		out.json["mp_sound"] = r.mp_sound;
		out.json["nec_sound"] = r.nec_sound;
		out.json["sound"] = r.sound();
		out.text << "modus ponens preserves top: " << yes(r.mp_sound) << "\nnecessitation preserves top: "
		         << yes(r.nec_sound) << "\n";
		out.code = r.sound() ? 0 : 1;
	} else if (action == "standard") {
		auto grids = o.grids.empty() ? std::vector<std::size_t>{2, 3, 5, 9} : o.grids;
		Json list = Json::array();
		bool all = true;
		for (auto n : grids) {
			auto r = chain_matches_standard(n);
			all = all && r.agree;
			list.push_back({{"n", n}, {"checked", r.checked}, {"agree", r.agree}});
			out.text << "chain-" << n << " vs standard algebra on i/" << (n - 1) << ": "
			         << (r.agree ? "agree" : "DIFFER") << " (" << r.checked << " cases)\n";
		}
		out.json["grids"] = list;
		out.code = all ? 0 : 1;
	} else {
		throw InputError("unknown catalog action '" + action + "' (list, export, soundness, standard)");
	}
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Finite monadic NM-algebras: validation, quantifiers, filters, representation, logic"};
	app.require_subcommand(1);
	Options o;
	bool seed_less = false;
	app.add_flag("--json", o.json, "structured output");
	app.add_option("--workers", o.workers, "threads for enumeration kernels")->check(CLI::Range(1, 256));
	app.add_option("--max-chain", o.max_chain, "largest chain in the catalog")->check(CLI::Range(2, 9));
	app.add_flag("--seed-less", seed_less, "reserved; rejected");
	std::string target, action, arg;

	auto add_target = [&](CLI::App* s) { s->add_option("target", target, "algebra file or catalog id[#k]")->required(); };
	auto add_quant = [&](CLI::App* s) {
		s->add_option("--quantifier", o.quantifier_file, "file with a single 'forall' line");
	};
	auto* validate = app.add_subcommand("validate", "check NM axioms and U1-U4");
	add_target(validate);
	add_quant(validate);
	validate->add_flag("--properties", o.properties, "report derived property sweeps");
	auto* quants = app.add_subcommand("quantifiers", "enumerate universal quantifiers");
	add_target(quants);
	quants->add_flag("--strong", o.strong, "strong quantifiers only");
	quants->add_flag("--oracle", o.oracle, "naive enumeration over all maps");
	quants->add_flag("--check-g-h", o.check_g_h, "compare with W1-W5 enumeration");
	quants->add_flag("--check-modal", o.check_modal, "compare strong quantifiers with modal operators");
	auto* filters = app.add_subcommand("filters", "list filters or monadic filters");
	add_target(filters);
	add_quant(filters);
	filters->add_flag("--monadic", o.monadic, "monadic filters");
	filters->add_option("--filter", o.filter, "generate from these elements");
	filters->add_flag("--laws", o.laws, "check generation laws");
	auto* classify_cmd = app.add_subcommand("classify", "simple / SI / chain classification");
	add_target(classify_cmd);
	add_quant(classify_cmd);
	classify_cmd->add_flag("--monadic", o.monadic, "classify with the quantifier");
	auto* quot = app.add_subcommand("quotient", "quotient by a filter");
	add_target(quot);
	add_quant(quot);
	quot->add_option("--filter", o.filter, "filter elements")->required();
	quot->add_flag("--monadic", o.monadic, "monadic quotient");
	auto* rep = app.add_subcommand("represent", "subdirect representation");
	add_target(rep);
	add_quant(rep);
	rep->add_flag("--separating", o.separating, "factors injective on AL");
	rep->add_option("--extend", o.extend, "prime monadic filter omitting this element");
	rep->add_option("--filter", o.filter, "filter to extend (default {1})");
	auto* ev = app.add_subcommand("eval", "evaluate a formula");
	ev->add_option("target", target, "algebra file, catalog id[#k], or 'standard'")->required();
	add_quant(ev);
	ev->add_option("--formula", o.formula, "formula")->required();
	ev->add_option("--assign", o.assign, "var=label,...");
	ev->add_option("--theory", o.theory, "theory file; reports whether the assignment is a model");
	auto* cons = app.add_subcommand("consequence", "search catalog for a countermodel");
	cons->add_option("--formula", o.formula, "formula")->required();
	cons->add_option("--theory", o.theory, "theory file");
	cons->add_flag("--strong", o.strong, "strong algebras only");
	auto* proof = app.add_subcommand("proof", "check a proof file");
	proof->add_option("file", target, "proof file")->required();
	proof->add_option("--theory", o.theory, "theory file");
	proof->add_flag("--strong", o.strong, "admit the SMNL schema");
	auto* cat = app.add_subcommand("catalog", "catalog actions: list, export <dir>, soundness, standard");
	cat->add_option("action", action, "list | export | soundness | standard")->required();
	cat->add_option("dir", arg, "export directory");
	cat->add_option("--depth", o.depth, "formula depth for soundness")->check(CLI::Range(0, 4));
	cat->add_option("--vars", o.vars, "variables for soundness")->check(CLI::Range(1, 3));
	cat->add_option("--max-size", o.max_size, "largest algebra swept")->check(CLI::Range(2, 9));
	cat->add_option("--grid", o.grids, "chain sizes compared with the standard algebra");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	}
	if (seed_less) {
		std::cerr << "error: --seed-less is reserved; every computation is deterministic\n";
		return 2;
	}

	Output out;
	const auto* sub = app.get_subcommands().front();
	const std::string verb = sub->get_name();
	out.json["command"] = verb;
	if (verb != "consequence")
		out.json["target"] = verb == "catalog" ? action : target;
	try {
		if (verb == "validate")
			cmd_validate(target, o, out);
		else if (verb == "quantifiers")
			cmd_quantifiers(target, o, out);
		else if (verb == "filters")
			cmd_filters(target, o, out);
		else if (verb == "classify")
			cmd_classify(target, o, out);
		else if (verb == "quotient")
			cmd_quotient(target, o, out);
		else if (verb == "represent")
			cmd_represent(target, o, out);
		else if (verb == "eval")
			cmd_eval(target, o, out);
		else if (verb == "consequence")
			cmd_consequence(o, out);
		else if (verb == "proof")
			cmd_proof(target, o, out);
		else if (verb == "catalog")
			cmd_catalog(action, arg, o, out);
	} catch (const InputError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const PreconditionError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const InternalError& e) {
		std::cerr << "internal error: " << e.what() << "\n";
		return 2;
	}
	out.json["exit_code"] = out.code;
	if (o.json)
		std::cout << out.json.dump(2) << "\n";
	else
		std::cout << out.text.str();
	return out.code;
}

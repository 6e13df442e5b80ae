// Acceptance criteria AC01-AC13: one PASS/FAIL line each, with details.
// `--expect-fail AC09,AC11` makes the exit status 0 exactly when the failing
// set equals the listed one.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <mnm/catalog.hpp>
#include <mnm/filters.hpp>
#include <mnm/io.hpp>
#include <mnm/monadic_filters.hpp>
#include <mnm/proof.hpp>
#include <mnm/quantifier.hpp>
#include <mnm/semantics.hpp>

using namespace mnm;

namespace {

const std::string kFixtures = MNM_FIXTURES;
constexpr std::size_t kSmall = 6; // size bound for the exhaustive set-equality criteria

struct Verdict {
	bool pass = true;
	std::vector<std::string> notes;
	void require(bool ok, const std::string& what) {
		if (!ok) {
			pass = false;
			notes.push_back("FAILED: " + what);
		}
	}
	void info(const std::string& s) { notes.push_back(s); }
};

struct Shared {
	std::vector<CatalogEntry> catalog;
	std::vector<MonadicEntry> monadic;
};

FiniteNmAlgebra load_fixture(const std::string& file, std::optional<QuantifierMap>& q, ValidationReport& report) {
	auto f = parse_algebra_file(read_text_file(kFixtures + "/" + file));
	auto v = validate_nm(f.tables);
	report = v.report;
	if (!v.algebra)
		throw InputError(file + " does not validate");
	if (f.forall)
		q = quantifier_from_labels(*v.algebra, *f.forall);
	return *v.algebra;
}

std::string set_text(const FiniteNmAlgebra& a, ElementSet s) { return format_set(a, s); }

Verdict ac01(const Shared&) {
	Verdict v;
	std::optional<QuantifierMap> q;
	ValidationReport rep;
	auto a35 = load_fixture("example_3_5.alg", q, rep);
	v.require(rep.ok(), "example_3_5.alg passes the six NM axioms");
	v.require(q && check_universal(a35, *q).all_hold(), "example_3_5.alg quantifier passes U1-U4");

	auto verb = parse_algebra_file(read_text_file(kFixtures + "/example_4_15_verbatim.alg"));
	auto vv = validate_nm(verb.tables);
	const auto* unit = vv.report.find(NmAxiom::CommutativeMonoid, "unit");
	v.require(!vv.report.ok() && unit, "verbatim example-4-15 fails with a unit-law violation");
	if (unit) {
		const auto w = format_tuple(verb.tables.labels, unit->witness);
		v.require(w == "(a,1)", "unit-law witness is (a,1), got " + w);
	}

	std::optional<QuantifierMap> q2;
	auto a415 = load_fixture("example_4_15.alg", q2, rep);
	v.require(rep.ok(), "repaired example-4-15 passes the six NM axioms");
	v.require(q2 && check_universal(a415, *q2).all_hold(), "repaired example-4-15 quantifier passes U1-U4");

	auto v35 = validate_nm(parse_algebra_file(read_text_file(kFixtures + "/example_3_5_verbatim.alg")).tables);
	v.info("example-3-5 as printed: " + std::string(v35.report.ok() ? "valid" : "invalid (" +
	                                                                      describe(v35.report, example_3_5_tables().labels) +
	                                                                      "); the shipped fixture is the repaired table"));
	return v;
}

Verdict ac02(const Shared&) {
	Verdict v;
	std::optional<QuantifierMap> q;
	ValidationReport rep;
	auto a = load_fixture("example_3_5.alg", q, rep);
	auto m = make_monadic(a, *q);
	auto mfs = all_monadic_filters(m);
	std::vector<ElementSet> expect{parse_set(a, "1"), parse_set(a, "d,1"), parse_set(a, "b,c,1"), a.universe()};
	sort_canonical(expect);
	std::string got;
	for (auto f : mfs)
		got += set_text(a, f) + " ";
	v.require(mfs == expect, "monadic filters are {1},{d,1},{b,c,1},L; got " + got);
	std::vector<ElementSet> primes;
	for (auto f : mfs)
		if (f != a.universe() && is_prime_mf(m, f))
			primes.push_back(f);
	std::vector<ElementSet> expect_primes{parse_set(a, "d,1"), parse_set(a, "b,c,1")};
	sort_canonical(expect_primes);
	v.require(primes == expect_primes, "prime monadic filters are exactly {d,1},{b,c,1}");
	v.require(!is_prime_mf(m, parse_set(a, "1")), "{1} is not prime");
	auto c = classify(m);
	v.require(!c.simple, "not simple");
	v.require(!c.si, "not subdirectly irreducible");
	v.info("monadic filters: " + got);
	return v;
}

Verdict ac03(const Shared&) {
	Verdict v;
	std::optional<QuantifierMap> q;
	ValidationReport rep;
	auto a = load_fixture("example_4_15.alg", q, rep);
	auto m = make_monadic(a, *q);
	auto c = classify(m);
	std::string got;
	for (auto f : c.monadic_filters)
		got += set_text(a, f) + " ";
	v.info("monadic filters of the repair: " + got);
	v.require(c.si, "subdirectly irreducible");
	const auto efg1 = parse_set(a, "e,f,g,1");
	v.require(is_monadic_filter(m, efg1).monadic && is_maximal_mf(m, efg1), "{e,f,g,1} is a maximal monadic filter");

	// Claims no algebra on the printed order can satisfy: under e <= f, e <= g
	// a filter containing e contains f and g.
	const auto printed = example_4_15_verbatim_tables();
	const Relation le = printed.leq;
	auto up_closed_in_printed_order = [&](ElementSet s) {
		bool ok = true;
		s.for_each([&](Element x) {
			for (Element y = 0; y < printed.labels.size(); ++y)
				if (le(x, y) && !s.contains(y))
					ok = false;
		});
		return ok;
	};
	for (const char* claim : {"e,1", "e,g,1", "e,f,1"}) {
		const auto s = parse_set(a, claim);
		const bool admitted = is_monadic_filter(m, s).monadic;
		if (admitted) {
			v.info("{" + std::string(claim) + "} is a monadic filter of the repair");
			continue;
		}
		v.require(!up_closed_in_printed_order(s),
		          "{" + std::string(claim) + "} is neither a monadic filter nor excluded by the printed order");
		v.info("discrepancy: {" + std::string(claim) + "} is not upward closed under the printed order, so no repair admits it");
	}
	if (c.least_nontrivial) {
		const bool claimed = *c.least_nontrivial == parse_set(a, "e,1");
		v.info("least nontrivial monadic filter: " + set_text(a, *c.least_nontrivial) +
		       (claimed ? "" : " (claimed {e,1}; reported as a discrepancy)"));
	}
	const auto eg1 = parse_set(a, "e,g,1"), ef1 = parse_set(a, "e,f,1");
	if (is_monadic_filter(m, eg1).monadic)
		v.require(!is_maximal_mf(m, eg1), "{e,g,1} is not maximal");
	if (is_monadic_filter(m, ef1).monadic)
		v.require(!is_maximal_mf(m, ef1), "{e,f,1} is not maximal");
	return v;
}

Verdict ac04(const Shared& s) {
	Verdict v;
	std::size_t entries = 0, maps = 0;
	for (const auto& e : s.catalog) {
		if (e.algebra.size() > kSmall)
			continue;
		++entries;
		auto naive = enumerate_quantifiers_naive(e.algebra);
		auto pruned = enumerate_quantifiers(e.algebra);
		maps += naive.size();
		v.require(naive == pruned, e.id + ": pruned and naive enumerations differ (" + std::to_string(pruned.size()) +
		                               " vs " + std::to_string(naive.size()) + ")");
	}
	v.info(std::to_string(entries) + " algebras, " + std::to_string(maps) + " quantifiers, exact set equality");
	return v;
}

Verdict ac05(const Shared& s) {
	Verdict v;
	std::size_t proj_differs = 0, pairs_differ = 0, entries = 0;
	for (const auto& e : s.catalog) {
		if (e.algebra.size() > kSmall)
			continue;
		++entries;
		auto r = verify_g_h_equivalence(e.algebra);
		v.require(r.tied_equal(), e.id + ": quantifiers differ from maps satisfying W1-W5 with E = ~A~");
		proj_differs += !r.projection_equal();
		pairs_differ += !r.pairs_equal();
	}
	v.info(std::to_string(entries) + " algebras; with E = ~A~ the sets coincide");
	v.info("with E searched independently: pair sets differ on " + std::to_string(pairs_differ) +
	       ", first-component sets differ on " + std::to_string(proj_differs));
	return v;
}

Verdict ac06(const Shared& s) {
	Verdict v;
	std::size_t entries = 0, strong = 0;
	for (const auto& e : s.catalog) {
		if (e.algebra.size() > kSmall)
			continue;
		++entries;
		auto r = modal_strong_equivalence(e.algebra);
		strong += r.right.size();
		v.require(r.equal(), e.id + ": modal operators with star differ from strong quantifiers");
	}
	v.info(std::to_string(entries) + " algebras, " + std::to_string(strong) + " strong quantifiers");
	return v;
}

Verdict ac07(const Shared& s) {
	Verdict v;
	std::size_t checked = 0;
	for (const auto& me : s.monadic) {
		auto r = quantifier_properties(me.m);
		++checked;
		for (const auto& id : r.failing())
			v.require(false, me.id + ": " + id + " fails at " + format_tuple(me.m.algebra().labels(), r.at(id).counterexample));
	}
	v.info(std::to_string(checked) + " monadic algebras, 33 clauses each");

	auto e35 = *find_entry(s.catalog, "example-3-5");
	auto m35 = e35.monadic(quantifier_index(e35, example_3_5_forall()));
	const auto& a35 = m35.algebra();
	const auto c = a35.index_of("c");
	const auto r35 = quantifier_properties(m35);
	const auto& plus = r35.at("A.oplus");
	const bool found35 = std::find(plus.strict.begin(), plus.strict.end(), std::vector<Element>{c, c}) != plus.strict.end();
	v.require(found35 && m35.forall(a35.oplus(c, c)) == a35.top() &&
	              a35.oplus(m35.forall(c), m35.forall(c)) == a35.index_of("b"),
	          "strict witness A(c (+) c) = 1 vs Ac (+) Ac = b on example-3-5");

	auto ch3 = nm_chain(3);
	auto m3 = make_monadic(ch3, zero_one_quantifier(ch3));
	const auto r3 = quantifier_properties(m3);
	const auto& en = r3.at("E.neg");
	const Element half = 1;
	const bool found3 = std::find(en.strict.begin(), en.strict.end(), std::vector<Element>{half}) != en.strict.end();
	v.require(found3 && m3.exists(ch3.neg(half)) == ch3.top() && ch3.neg(m3.exists(half)) == ch3.bottom(),
	          "strict witness E~(1/2) = 1 vs ~E(1/2) = 0 on the zero-one 3-chain");
	v.info("strict witnesses found: A(c (+) c) = 1 > b; E~(1/2) = 1 > 0 = ~E(1/2)");
	return v;
}

Verdict ac08(const Shared& s) {
	Verdict v;
	std::size_t filters = 0;
	for (const auto& me : s.monadic) {
		auto r = restriction_isomorphism(me.m);
		filters += r.monadic_filters.size();
		v.require(r.bijection && r.forward_monotone && r.backward_inverse,
		          me.id + ": restriction to fixpoints is not an order isomorphism");
		v.require(r.regenerates, me.id + ": some monadic F differs from <F n L_A>");
	}
	v.info(std::to_string(s.monadic.size()) + " monadic algebras, " + std::to_string(filters) + " monadic filters");
	return v;
}

Verdict ac09(const Shared& s) {
	Verdict v;
	std::size_t strong = 0, proper = 0, primes = 0, printed_bad = 0, power_bad = 0;
	std::string first_bad;
	for (const auto& me : s.monadic) {
		const auto& m = me.m;
		if (!m.strong())
			continue;
		++strong;
		const auto& a = m.algebra();
		for (auto f : all_monadic_filters(m)) {
			if (f == a.universe())
				continue;
			++proper;
			auto pe = prime_equivalences(m, f);
			v.require(pe.agree(), me.id + " " + set_text(a, f) + ": prime characterisations disagree");
			if (pe.definition) {
				++primes;
				auto q = quotient_monadic(m, f);
				v.require(q.algebra.algebra().is_chain(), me.id + " " + set_text(a, f) + ": prime quotient is not a chain");
			}
			auto mx = maximal_equivalences(m, f);
			if (!mx.agree()) {
				++printed_bad;
				if (first_bad.empty()) {
					const Element w = *mx.forall_witness;
					first_bad = me.id + ", F = " + set_text(a, f) + " (maximal: " + (mx.definition ? "yes" : "no") +
					            "), x = " + a.label(w) + ": Ax = " + a.label(m.forall(w)) + ", ~Ax = " +
					            a.label(a.neg(m.forall(w))) + ", neither in F";
				}
			}
			power_bad += !mx.power_agree();
		}
	}
	v.require(printed_bad == 0, "maximality vs \"Ax in F or ~Ax in F\" disagrees on " + std::to_string(printed_bad) +
	                                " of " + std::to_string(proper) + " filters; first: " + first_bad);
	v.info(std::to_string(strong) + " strong algebras, " + std::to_string(proper) + " proper monadic filters, " +
	       std::to_string(primes) + " prime quotients re-validated as monadic chains");
	v.info("with ~(Ax)^2 in place of ~Ax the maximality test disagrees on " + std::to_string(power_bad) + " filters");
	return v;
}

Verdict ac10(const Shared& s) {
	Verdict v;
	std::size_t strong = 0, separating = 0, cases = 0;
	for (const auto& me : s.monadic) {
		const auto& m = me.m;
		if (!m.strong())
			continue;
		++strong;
		auto sd = subdirect_representation(m);
		v.require(sd.injective, me.id + ": embedding not injective");
		v.require(sd.surjective, me.id + ": some projection not onto");
		v.require(sd.chains, me.id + ": some factor not a chain");
		if (subalgebra(m.algebra(), m.fixpoints()).algebra.is_chain()) {
			++separating;
			auto sp = separating_representation(m);
			v.require(sp.ok() && sp.forall_injective, me.id + ": separating representation fails");
		}
		auto id = filter_intersection_identity(m);
		cases += id.checked;
		v.require(id.holds, me.id + ": F != <F u {x->y}>_A n <F u {y->x}>_A");
	}
	v.info(std::to_string(strong) + " strong algebras, " + std::to_string(separating) +
	       " with AL a chain, " + std::to_string(cases) + " (F, x, y) cases");
	return v;
}

Verdict ac11(const Shared& s) {
	Verdict v;
	std::size_t n_fix = 0, n_simple = 0, n_witness = 0, n_si_fix = 0, n_chain = 0, n_extra = 0, simple = 0, si = 0;
	std::string fix_example;
	for (const auto& me : s.monadic) {
		auto c = classify(me.m);
		simple += c.simple;
		si += c.si;
		if (!c.simple_iff_fix01()) {
			++n_fix;
			if (fix_example.empty())
				fix_example = me.id + " (" + format_map(me.m.algebra(), me.m.forall_map()) + "): simple " +
				              (c.simple ? "yes" : "no") + ", L_A = " + set_text(me.m.algebra(), me.m.fixpoints());
		}
		n_simple += !c.simple_iff_forall_l_simple();
		n_witness += !c.si_iff_witness();
		n_si_fix += !c.si_iff_fix_si();
		n_chain += !c.strong_si_iff_chain();
		n_extra += !c.si_implies_forall_l_chain() || !c.strong_si_implies_join_prime();
	}
	v.require(n_fix == 0, "simple vs L_A = {0,1} disagrees on " + std::to_string(n_fix) + " algebras; first: " + fix_example);
	v.require(n_simple == 0, "simple vs AL simple disagrees on " + std::to_string(n_simple) + " algebras");
	v.require(n_witness == 0, "SI vs witness element disagrees on " + std::to_string(n_witness) + " algebras");
	v.require(n_si_fix == 0, "SI vs SI of L_A disagrees on " + std::to_string(n_si_fix) + " algebras");
	v.require(n_chain == 0, "strong: SI vs chain disagrees on " + std::to_string(n_chain) + " algebras");
	v.info(std::to_string(s.monadic.size()) + " monadic algebras: " + std::to_string(simple) + " simple, " +
	       std::to_string(si) + " SI; SI => AL chain and top join-prime: " +
	       (n_extra ? "violated on " + std::to_string(n_extra) : std::string("hold")));
	return v;
}

Verdict ac12(const Shared& s) {
	Verdict v;
	std::vector<MonadicEntry> small;
	for (const auto& me : s.monadic)
		if (me.m.size() <= kSmall)
			small.push_back(me);
	auto r = soundness_sweep(small, 2, 2, 4);
	std::size_t tuples = 0;
	for (const auto& sw : r.schemas) {
		tuples += sw.tuples;
		v.require(sw.failures == 0, sw.id + " not top: " + (sw.first ? sw.first->entry + " " + sw.first->metavalues : ""));
		if (sw.strong_only)
			v.info(sw.id + " fails on " + std::to_string(sw.separating) + " value tuples of non-strong algebras" +
			       (sw.first_separating ? " (first " + sw.first_separating->entry + ", " + sw.first_separating->metavalues + ")" : ""));
	}
	v.require(r.mp_sound && r.nec_sound, "rules preserve top");
	v.info(std::to_string(r.schemas.size()) + " schemas, " + std::to_string(small.size()) + " algebras, " +
	       std::to_string(tuples) + " value tuples");

	auto theory = parse_theory(read_text_file(kFixtures + "/sample_theory.txt"));
	auto good = check_proof(theory, parse_proof(read_text_file(kFixtures + "/sample_proof.txt")));
	v.require(good.valid && good.proved && print_formula(good.proved) == "A p2" &&
	              parse_proof(read_text_file(kFixtures + "/sample_proof.txt")).size() == 10,
	          "10-line sample proof accepted");
	for (const char* bad : {"sample_proof_bad_mp.txt", "sample_proof_bad_axiom.txt", "sample_proof_bad_nec.txt"}) {
		auto pv = check_proof(theory, parse_proof(read_text_file(kFixtures + "/" + bad)));
		v.require(!pv.valid, std::string(bad) + " rejected");
		if (!pv.valid)
			v.info(std::string(bad) + ": " + pv.message);
	}
	return v;
}

Verdict ac13(const Shared& s) {
	Verdict v;
	for (std::size_t n : {2, 3, 5, 9}) {
		auto r = chain_matches_standard(n);
		v.require(r.agree, "chain-" + std::to_string(n) + " agrees with the standard algebra");
	}
	for (const auto& e : s.catalog)
		v.require(is_representable(e.algebra).representable, e.id + " is representable");
	v.info("grids 2, 3, 5, 9 agree exactly; " + std::to_string(s.catalog.size()) + " catalog algebras representable");
	return v;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"acceptance criteria"};
	std::string expect;
	app.add_option("--expect-fail", expect, "comma-separated criteria expected to fail");
	CLI11_PARSE(app, argc, argv);
	std::set<std::string> expected;
	{
		std::istringstream in(expect);
		for (std::string id; std::getline(in, id, ',');)
			if (!id.empty())
				expected.insert(id);
	}

	const auto t0 = std::chrono::steady_clock::now();
	Shared s;
	s.catalog = build_catalog({6, true, true, 4});
	s.monadic = monadic_entries(s.catalog);

	const std::vector<std::pair<std::string, std::function<Verdict(const Shared&)>>> criteria{
	    {"AC01 fixture validity", ac01},
	    {"AC02 example-3-5 monadic filters, primes, classification", ac02},
	    {"AC03 repaired example-4-15 classification", ac03},
	    {"AC04 pruned = naive quantifier enumeration (size <= 6)", ac04},
	    {"AC05 U1-U4 quantifiers = W1-W5 quantifiers (size <= 6)", ac05},
	    {"AC06 modal operators with star = strong quantifiers (size <= 6)", ac06},
	    {"AC07 quantifier property sweeps and strict witnesses", ac07},
	    {"AC08 restriction to fixpoints is an order isomorphism", ac08},
	    {"AC09 prime and maximal characterisations (strong)", ac09},
	    {"AC10 subdirect and separating representations (strong)", ac10},
	    {"AC11 simple / SI cross-checks", ac11},
	    {"AC12 logic soundness sweep and proof checker", ac12},
	    {"AC13 exact standard algebra and representability", ac13},
	};
	std::set<std::string> failed;
	for (const auto& [name, fn] : criteria) {
		const auto start = std::chrono::steady_clock::now();
		Verdict v;
		try {
			v = fn(s);
		} catch (const std::exception& e) {
			v.pass = false;
			v.notes.push_back(std::string("FAILED: exception: ") + e.what());
		}
		const auto ms =
		    std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
		const std::string id = name.substr(0, 4);
		if (!v.pass)
			failed.insert(id);
		std::cout << (v.pass ? "PASS " : "FAIL ") << name << " [" << ms << " ms]\n";
		for (const auto& n : v.notes)
			std::cout << "     " << n << "\n";
	}
	const auto total =
	    std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
	std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria pass, " << total << " ms\n";
	if (!expected.empty()) {
		std::cout << "expected failures:";
		for (const auto& e : expected)
			std::cout << " " << e;
		std::cout << (failed == expected ? " (matches)\n" : " (DOES NOT MATCH)\n");
		return failed == expected ? 0 : 1;
	}
	return failed.empty() ? 0 : 1;
}

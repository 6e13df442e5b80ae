#include <gtest/gtest.h>

#include <mnm/catalog.hpp>
#include <mnm/quantifier.hpp>

using namespace mnm;

namespace {

const std::vector<CatalogEntry>& catalog() {
	static const auto cat = build_catalog({6, true, true, 1});
	return cat;
}

const std::vector<MonadicEntry>& monadic() {
	static const auto m = monadic_entries(catalog());
	return m;
}

} // namespace

TEST(Universal, IdentityAndZeroOneAreQuantifiers) {
	for (const auto& e : catalog()) {
		const auto& a = e.algebra;
		EXPECT_TRUE(check_universal(a, QuantifierMap::identity(a.size())).all_hold()) << e.id;
		if (a.is_chain()) {
			auto z = zero_one_quantifier(a);
			EXPECT_TRUE(check_universal(a, z).all_hold()) << e.id;
			EXPECT_EQ(fixpoints_of(z), ElementSet::of({a.bottom(), a.top()}));
		}
	}
}

TEST(Universal, SubchainQuantifiersOnChains) {
	for (std::size_t n = 3; n <= 7; ++n) {
		auto a = nm_chain(n);
		auto qs = enumerate_quantifiers(a);
		for (std::size_t m = 2; m <= n; ++m) {
			if ((n - 1) % (m - 1) != 0)
				continue;
			auto q = subchain_quantifier(n, m);
			EXPECT_TRUE(check_universal(a, q).all_hold()) << n << " " << m;
			EXPECT_NE(std::find(qs.begin(), qs.end(), q), qs.end());
		}
	}
}

TEST(Universal, NonQuantifierIsReportedWithWitness) {
	auto a = nm_chain(3);
	QuantifierMap q{{0, 0, 1}}; // A1 = 1/2
	auto r = check_universal(a, q);
	EXPECT_FALSE(r.all_hold());
	EXPECT_FALSE(r.failing().empty());
	EXPECT_THROW(make_monadic(a, q), PreconditionError);
}

TEST(Universal, WrongLengthMapThrows) {
	auto a = nm_chain(3);
	EXPECT_THROW(check_universal(a, QuantifierMap{{0, 2}}), InputError);
}

TEST(Universal, FixtureQuantifiers) {
	auto a35 = make_nm(example_3_5_tables());
	auto r = check_strong(a35, example_3_5_forall());
	EXPECT_TRUE(check_universal(a35, example_3_5_forall()).all_hold());
	EXPECT_TRUE(r.strong);

	auto a415 = make_nm(example_4_15_tables());
	EXPECT_TRUE(check_universal(a415, example_4_15_forall()).all_hold());
	auto s = check_strong(a415, example_4_15_forall());
	EXPECT_FALSE(s.strong);
	ASSERT_TRUE(s.witness);
	auto [x, y] = *s.witness;
	const auto& A = example_4_15_forall();
	EXPECT_NE(A(a415.join(x, y)), a415.join(A(x), A(y)));
}

TEST(Enumeration, PrunedMatchesNaive) {
	for (const auto& e : catalog()) {
		if (e.algebra.size() > 6)
			continue;
		EXPECT_EQ(enumerate_quantifiers(e.algebra), enumerate_quantifiers_naive(e.algebra)) << e.id;
		EXPECT_EQ(enumerate_quantifiers(e.algebra, true), enumerate_quantifiers_naive(e.algebra, true)) << e.id;
	}
}

TEST(Enumeration, WorkerCountDoesNotChangeResult) {
	auto a = make_nm(example_4_15_tables());
	EXPECT_EQ(enumerate_quantifiers(a, false, 1), enumerate_quantifiers(a, false, 4));
}

TEST(Enumeration, SmallChainCounts) {
	EXPECT_EQ(enumerate_quantifiers(nm_chain(2)).size(), 1u);
	EXPECT_EQ(enumerate_quantifiers(nm_chain(3)).size(), 2u);
}

TEST(Enumeration, EveryEnumeratedMapPassesAxioms) {
	for (const auto& e : catalog())
		for (const auto& q : e.quantifiers)
			EXPECT_TRUE(check_universal(e.algebra, q).all_hold()) << e.id << " " << format_map(e.algebra, q);
}

TEST(Exists, DualSatisfiesExistentialAxioms) {
	for (const auto& me : monadic()) {
		auto ex = exists_of(me.m);
		EXPECT_TRUE(ex.report.all_hold()) << me.id;
		EXPECT_EQ(ex.map, me.m.exists_map());
		EXPECT_TRUE(check_w_axioms(me.m.algebra(), me.m.forall_map(), me.m.exists_map()).all_hold()) << me.id;
	}
}

TEST(Properties, EveryClauseHoldsOnCatalog) {
	for (const auto& me : monadic()) {
		auto r = quantifier_properties(me.m);
		EXPECT_TRUE(r.all_hold()) << me.id << " " << (r.failing().empty() ? "" : r.failing()[0]);
		EXPECT_EQ(r.clauses.size(), 33u);
	}
}

TEST(Properties, OplusInequalityIsStrictOnFixture) {
	auto a = make_nm(example_3_5_tables());
	auto m = make_monadic(a, example_3_5_forall());
	const auto r = quantifier_properties(m);
	const auto& c = r.at("A.oplus");
	const Element cc = a.index_of("c");
	EXPECT_TRUE(c.holds);
	EXPECT_NE(std::find(c.strict.begin(), c.strict.end(), std::vector<Element>{cc, cc}), c.strict.end());
	EXPECT_EQ(m.forall(a.oplus(cc, cc)), a.top());
	EXPECT_EQ(a.oplus(m.forall(cc), m.forall(cc)), a.index_of("b"));
}

TEST(Properties, NegatedExistsIsStrictOnZeroOneChain) {
	auto a = nm_chain(3);
	auto m = make_monadic(a, zero_one_quantifier(a));
	const auto r = quantifier_properties(m);
	const auto& c = r.at("E.neg");
	EXPECT_TRUE(c.holds);
	EXPECT_NE(std::find(c.strict.begin(), c.strict.end(), std::vector<Element>{1}), c.strict.end());
}

TEST(Modal, StrongQuantifiersAreStarModalOperators) {
	for (const auto& e : catalog()) {
		if (e.algebra.size() > 6)
			continue;
		auto s = modal_strong_equivalence(e.algebra);
		EXPECT_TRUE(s.equal()) << e.id;
		for (const auto& q : s.right)
			EXPECT_TRUE(check_modal(e.algebra, q).all_hold());
	}
}

TEST(GH, TiedReadingCoincides) {
	for (const auto& e : catalog()) {
		if (e.algebra.size() > 6)
			continue;
		auto g = verify_g_h_equivalence(e.algebra);
		EXPECT_TRUE(g.tied_equal()) << e.id;
		EXPECT_EQ(g.g_maps, e.quantifiers) << e.id;
	}
}

TEST(GH, IndependentPairsAdmitMoreThanDuals) {
	auto g = verify_g_h_equivalence(nm_chain(3));
	EXPECT_TRUE(g.projection_equal());
	EXPECT_FALSE(g.pairs_equal());
	EXPECT_GT(g.h_pairs.size(), g.g_pairs.size());
}

TEST(MonadicBoolean, MeetIdentityCharacterisesBoolean) {
	for (const auto& me : monadic()) {
		auto v = is_monadic_boolean(me.m);
		EXPECT_TRUE(v.meet_agrees()) << me.id;
		EXPECT_TRUE(v.join_implies_boolean()) << me.id;
		EXPECT_EQ(v.boolean, is_boolean(me.m.algebra()).boolean);
	}
}

TEST(MonadicBoolean, JoinIdentityFailsOnFourElementBooleanAlgebra) {
	auto a = direct_product(nm_chain(2), nm_chain(2));
	auto m = make_monadic(a, QuantifierMap::identity(a.size()));
	auto v = is_monadic_boolean(m);
	EXPECT_TRUE(v.boolean);
	ASSERT_TRUE(v.join_witness);
	EXPECT_FALSE(v.join_agrees());
	const auto& [q, x, y] = *v.join_witness;
	EXPECT_EQ(q(a.join(x, y)), a.top());
	EXPECT_NE(a.oplus(q(x), q(y)), a.top());
}

TEST(MonadicBoolean, FixtureWitnessComesFromIdentityQuantifier) {
	auto a = make_nm(example_3_5_tables());
	auto v = is_monadic_boolean(make_monadic(a, example_3_5_forall()));
	EXPECT_FALSE(v.boolean);
	ASSERT_TRUE(v.meet_witness);
	const auto& [q, x, y] = *v.meet_witness;
	EXPECT_NE(q(a.meet(x, y)), a.mul(q(x), q(y)));
}

TEST(RoughSpace, AdjunctionLawsHold) {
	for (const auto& me : monadic()) {
		auto r = rough_space(me.m);
		EXPECT_TRUE(r.inner_law) << me.id;
		EXPECT_TRUE(r.upper_law) << me.id;
		EXPECT_EQ(r.inner_definable, me.m.fixpoints());
	}
}

TEST(Format, MapUsesLabels) {
	auto a = make_nm(example_3_5_tables());
	EXPECT_EQ(format_map(a, example_3_5_forall()), "0 0 b b d 1");
}

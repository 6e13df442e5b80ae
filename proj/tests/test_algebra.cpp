#include <gtest/gtest.h>

#include <mnm/algebra.hpp>
#include <mnm/catalog.hpp>
#include <mnm/properties.hpp>

using namespace mnm;

namespace {

// Closed-form NM operations on {0, 1/(n-1), ..., 1}, in units of 1/(n-1).
Element oracle_mul(std::size_t n, Element x, Element y) { return x + y > n - 1 ? std::min(x, y) : 0; }
Element oracle_imp(std::size_t n, Element x, Element y) { return x <= y ? n - 1 : std::max(n - 1 - x, y); }

NmTables two_element_boolean() {
	NmTables t;
	t.name = "bool2";
	t.labels = {"0", "1"};
	t.leq = order_from_pairs(2, {{0, 1}});
	t.mul = Table(2, {0, 0, 0, 1});
	t.imp = Table(2, {1, 1, 0, 1});
	t.bottom = 0;
	t.top = 1;
	return t;
}

} // namespace

TEST(Chain, MatchesClosedFormOperations) {
	for (std::size_t n = 2; n <= 9; ++n) {
		auto a = nm_chain(n);
		ASSERT_EQ(a.size(), n);
		EXPECT_TRUE(a.is_chain());
		for (Element x = 0; x < n; ++x)
			for (Element y = 0; y < n; ++y) {
				EXPECT_EQ(a.mul(x, y), oracle_mul(n, x, y)) << n << " " << x << " " << y;
				EXPECT_EQ(a.imp(x, y), oracle_imp(n, x, y)) << n << " " << x << " " << y;
				EXPECT_EQ(a.meet(x, y), std::min(x, y));
				EXPECT_EQ(a.join(x, y), std::max(x, y));
			}
	}
}

TEST(Chain, LabelsAreFractions) {
	auto a = nm_chain(5);
	EXPECT_EQ(a.labels(), (std::vector<std::string>{"0", "1/4", "1/2", "3/4", "1"}));
}

TEST(Validate, BooleanTwoElementIsValid) {
	auto v = validate_nm(two_element_boolean());
	ASSERT_TRUE(v.algebra);
	EXPECT_TRUE(v.report.ok());
	EXPECT_TRUE(is_boolean(*v.algebra).boolean);
}

TEST(Validate, RepairedFixturesAreValid) {
	EXPECT_TRUE(validate_nm(example_3_5_tables()).report.ok());
	EXPECT_TRUE(validate_nm(example_4_15_tables()).report.ok());
}

TEST(Validate, VerbatimFixturesAreInvalid) {
	auto v35 = validate_nm(example_3_5_verbatim_tables());
	EXPECT_FALSE(v35.algebra);
	EXPECT_TRUE(v35.report.violates(NmAxiom::CommutativeMonoid));

	auto v415 = validate_nm(example_4_15_verbatim_tables());
	EXPECT_FALSE(v415.algebra);
	const auto* unit = v415.report.find(NmAxiom::CommutativeMonoid, "unit");
	ASSERT_NE(unit, nullptr);
	EXPECT_EQ(format_tuple(example_4_15_verbatim_tables().labels, unit->witness), "(a,1)");
}

TEST(Validate, NonLatticeOrderSkipsDependentAxioms) {
	// Two incomparable atoms with no bottom.
	NmTables t = two_element_boolean();
	t.labels = {"x", "y", "1"};
	t.leq = order_from_pairs(3, {{0, 2}, {1, 2}});
	t.mul = Table(3, 0);
	t.imp = Table(3, 2);
	t.bottom = 0;
	t.top = 2;
	auto v = validate_nm(t);
	EXPECT_FALSE(v.algebra);
	EXPECT_TRUE(v.report.violates(NmAxiom::BoundedLattice));
	EXPECT_FALSE(v.report.skipped.empty());
}

TEST(Validate, ResiduationBreakIsReported) {
	auto t = nm_chain(3).tables();
	t.imp(2, 1) = 2; // 1 -> 1/2 = 1 breaks adjointness
	auto v = validate_nm(t);
	EXPECT_FALSE(v.algebra);
	EXPECT_TRUE(v.report.violates(NmAxiom::Residuation));
}

TEST(Validate, LukasiewiczProductIsRejected) {
	// Lukasiewicz product at 2/3 * 2/3 on the 4-chain.
	auto t = nm_chain(4).tables();
	t.mul(2, 2) = 1;
	EXPECT_FALSE(validate_nm(t).report.ok());
}

TEST(Validate, ShapeErrorsThrow) {
	auto t = nm_chain(3).tables();
	t.mul = Table(2, 0);
	EXPECT_THROW(validate_nm(t), InputError);
	auto u = nm_chain(3).tables();
	u.imp(0, 0) = 7;
	EXPECT_THROW(validate_nm(u), InputError);
}

TEST(Validate, MakeNmThrowsOnInvalid) { EXPECT_THROW(make_nm(example_3_5_verbatim_tables()), InputError); }

TEST(Order, ClosureIsReflexiveTransitive) {
	auto r = order_from_pairs(4, {{0, 1}, {1, 2}, {2, 3}});
	for (Element x = 0; x < 4; ++x)
		for (Element y = 0; y < 4; ++y)
			EXPECT_EQ(r(x, y), x <= y);
}

TEST(Properties, BasicSweepsHoldOnCatalog) {
	for (const auto& e : build_catalog({6, true, true, 1})) {
		EXPECT_TRUE(check_basic_properties(e.algebra).all_hold()) << e.id;
		EXPECT_TRUE(check_definability(e.algebra).all_hold()) << e.id;
	}
}

TEST(Properties, NegationIsInvolutiveAndAntitone) {
	for (const auto& e : build_catalog({6, true, true, 1})) {
		const auto& a = e.algebra;
		for (Element x = 0; x < a.size(); ++x) {
			EXPECT_EQ(a.neg(a.neg(x)), x);
			for (Element y = 0; y < a.size(); ++y)
				if (a.leq(x, y)) {
					EXPECT_TRUE(a.leq(a.neg(y), a.neg(x)));
				}
		}
	}
}

TEST(Properties, BooleanOnlyForTwoElementChainAndPowers) {
	EXPECT_TRUE(is_boolean(nm_chain(2)).boolean);
	EXPECT_FALSE(is_boolean(nm_chain(3)).boolean);
	EXPECT_TRUE(is_boolean(direct_product(nm_chain(2), nm_chain(2))).boolean);
	auto v = is_boolean(nm_chain(4));
	ASSERT_TRUE(v.witness);
}

TEST(Power, MatchesRepeatedMultiplication) {
	auto a = nm_chain(5);
	for (Element x = 0; x < 5; ++x) {
		EXPECT_EQ(a.power(x, 0), a.top());
		EXPECT_EQ(a.power(x, 2), a.mul(x, x));
		EXPECT_EQ(a.power(x, 3), a.mul(x, a.mul(x, x)));
	}
}

TEST(Product, IsValidAndComponentwise) {
	auto a = nm_chain(3), b = nm_chain(4);
	auto p = direct_product(a, b);
	ASSERT_EQ(p.size(), 12u);
	auto [pa, pb] = product_projections(3, 4);
	for (Element x = 0; x < p.size(); ++x)
		for (Element y = 0; y < p.size(); ++y) {
			EXPECT_EQ(pa[p.mul(x, y)], a.mul(pa[x], pa[y]));
			EXPECT_EQ(pb[p.imp(x, y)], b.imp(pb[x], pb[y]));
		}
}

TEST(Rename, KeepsStructure) {
	auto a = nm_chain(3);
	auto b = a.renamed("other");
	EXPECT_EQ(b.name(), "other");
	EXPECT_TRUE(a.same_structure(b));
}

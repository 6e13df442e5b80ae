#include <gtest/gtest.h>

#include <mnm/catalog.hpp>
#include <mnm/io.hpp>

using namespace mnm;

namespace {

const std::string kFixtures = MNM_FIXTURES;

std::string error_of(const std::string& text) {
	try {
		parse_algebra_file(text);
	} catch (const InputError& e) {
		return e.what();
	}
	return "";
}

const char* kChain3 = "algebra c3\n"
                      "elements 3 0 m 1\n"
                      "bottom 0\n"
                      "top 1\n"
                      "order 0 <= m\n"
                      "order m <= 1\n"
                      "mul\n0 0 0\n0 0 m\n0 m 1\n"
                      "imp\n1 1 1\nm 1 1\n0 m 1\n"
                      "end\n";

} // namespace

TEST(AlgebraFile, ParsesHandWrittenChain) {
	auto f = parse_algebra_file(kChain3);
	auto a = make_nm(f.tables);
	EXPECT_EQ(a.name(), "c3");
	EXPECT_TRUE(a.same_structure(nm_chain(3)));
	EXPECT_FALSE(f.forall);
}

TEST(AlgebraFile, RoundTripsEveryCatalogEntry) {
	for (const auto& e : build_catalog({6, true, true, 1})) {
		std::optional<QuantifierMap> q;
		if (!e.quantifiers.empty())
			q = e.quantifiers.back();
		auto text = write_algebra_file(e.algebra, q, e.note);
		auto f = parse_algebra_file(text);
		auto a = make_nm(f.tables);
		EXPECT_TRUE(a.same_structure(e.algebra)) << e.id;
		EXPECT_EQ(a.labels(), e.algebra.labels());
		ASSERT_TRUE(f.forall);
		EXPECT_EQ(quantifier_from_labels(a, *f.forall), *q);
		EXPECT_EQ(write_algebra_file(a, q, e.note), text);
	}
}

TEST(AlgebraFile, InvalidTablesStillWrite) {
	auto t = example_3_5_verbatim_tables();
	auto f = parse_algebra_file(write_tables_file(t));
	EXPECT_EQ(f.tables.mul, t.mul);
	EXPECT_EQ(f.tables.imp, t.imp);
	EXPECT_FALSE(validate_nm(f.tables).report.ok());
}

TEST(AlgebraFile, ErrorsCarryLineNumbers) {
	std::string t = kChain3;
	EXPECT_NE(error_of("elements 3 0 m 1\nbogus\n").find("line 2: unknown keyword 'bogus'"), std::string::npos);
	EXPECT_NE(error_of("bottom 0\n").find("line 1: 'bottom' before 'elements'"), std::string::npos);
	EXPECT_NE(error_of("elements 3 0 m\n").find("line 1: expected 3 labels"), std::string::npos);
	EXPECT_NE(error_of("elements 2 x x\n").find("duplicate label"), std::string::npos);
	auto bad_row = t;
	bad_row.replace(bad_row.find("0 0 m\n"), 6, "0 0 z\n");
	EXPECT_NE(error_of(bad_row).find("line 9: unknown element 'z'"), std::string::npos);
	auto no_end = t.substr(0, t.size() - 4);
	EXPECT_NE(error_of(no_end).find("missing 'end'"), std::string::npos);
	EXPECT_NE(error_of(t + "top 1\n").find("content after 'end'"), std::string::npos);
	EXPECT_NE(error_of("elements 1 x\n").find("between 2 and"), std::string::npos);
}

TEST(QuantifierFile, ParsesSingleLine) {
	auto a = make_nm(example_3_5_tables());
	EXPECT_EQ(parse_quantifier_file(a, "# A\nforall 0 0 b b d 1\n"), example_3_5_forall());
	EXPECT_THROW(parse_quantifier_file(a, ""), InputError);
	EXPECT_THROW(parse_quantifier_file(a, "forall 0 0 b b d\n"), InputError);
	EXPECT_THROW(parse_quantifier_file(a, "forall 0 0 b b d 1\nforall 0 0 b b d 1\n"), InputError);
	EXPECT_THROW(parse_quantifier_file(a, "forall 0 0 b b d q\n"), InputError);
}

TEST(Fixtures, RepairedFilesMatchBuiltInTables) {
	auto f35 = parse_algebra_file(read_text_file(kFixtures + "/example_3_5.alg"));
	EXPECT_TRUE(make_nm(f35.tables).same_structure(make_nm(example_3_5_tables())));
	ASSERT_TRUE(f35.forall);
	EXPECT_EQ(quantifier_from_labels(make_nm(f35.tables), *f35.forall), example_3_5_forall());

	auto f415 = parse_algebra_file(read_text_file(kFixtures + "/example_4_15.alg"));
	EXPECT_TRUE(make_nm(f415.tables).same_structure(make_nm(example_4_15_tables())));
	ASSERT_TRUE(f415.forall);
	EXPECT_EQ(quantifier_from_labels(make_nm(f415.tables), *f415.forall), example_4_15_forall());
}

TEST(Fixtures, VerbatimFilesMatchBuiltInTables) {
	auto v35 = parse_algebra_file(read_text_file(kFixtures + "/example_3_5_verbatim.alg")).tables;
	EXPECT_EQ(v35.mul, example_3_5_verbatim_tables().mul);
	EXPECT_EQ(v35.imp, example_3_5_verbatim_tables().imp);
	auto v415 = parse_algebra_file(read_text_file(kFixtures + "/example_4_15_verbatim.alg")).tables;
	EXPECT_EQ(v415.mul, example_4_15_verbatim_tables().mul);
	EXPECT_EQ(v415.imp, example_4_15_verbatim_tables().imp);
	EXPECT_EQ(v415.leq, example_4_15_verbatim_tables().leq.closure());
}

TEST(Files, MissingFileIsInputError) { EXPECT_THROW(read_text_file("/nonexistent/file"), InputError); }

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include <mnm/io.hpp>

namespace {

const std::string kCli = MNM_CLI;
const std::string kFixtures = MNM_FIXTURES;

struct Run {
	int code = -1;
	std::string out;
};

Run run(const std::string& args) {
	Run r;
	const std::string cmd = kCli + " " + args + " 2>&1";
	FILE* p = popen(cmd.c_str(), "r");
	if (!p)
		return r;
	char buf[4096];
	std::size_t n;
	while ((n = fread(buf, 1, sizeof buf, p)) > 0)
		r.out.append(buf, n);
	const int status = pclose(p);
	r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return r;
}

std::string fx(const std::string& name) { return kFixtures + "/" + name; }

nlohmann::json run_json(const std::string& args, int expect_code = 0) {
	auto r = run("--json " + args);
	EXPECT_EQ(r.code, expect_code) << r.out;
	return nlohmann::json::parse(r.out);
}

} // namespace

TEST(Cli, ValidateFixture) {
	auto r = run("validate " + fx("example_3_5.alg"));
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(r.out, "NM-algebra: valid; quantifier: U1-U4 pass, strong\n");
}

TEST(Cli, ValidateVerbatimReportsUnitWitness) {
	auto r = run("validate " + fx("example_4_15_verbatim.alg"));
	EXPECT_EQ(r.code, 1);
	EXPECT_NE(r.out.find("unit fails at (a,1)"), std::string::npos) << r.out;
	auto j = run_json("validate example-4-15-verbatim", 1);
	EXPECT_FALSE(j["nm"]["valid"].get<bool>());
	EXPECT_EQ(j["nm"]["violations"][0]["law"], "unit");
	EXPECT_EQ(j["nm"]["violations"][0]["witness"], nlohmann::json::array({"a", "1"}));
}

TEST(Cli, ValidateProperties) {
	auto j = run_json("validate --properties example-3-5");
	EXPECT_TRUE(j["quantifier"]["strong"].get<bool>());
	EXPECT_EQ(j["algebra"]["size"], 6);
	for (const auto& c : j["properties"]["quantifier_properties"])
		EXPECT_TRUE(c["holds"].get<bool>()) << c["id"];
}

TEST(Cli, MonadicFiltersOfFixture) {
	auto r = run("filters --monadic " + fx("example_3_5.alg"));
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(r.out, "4 monadic filters\n  {1}\n  {d,1} prime maximal\n  {b,c,1} prime maximal\n  {0,a,b,c,d,1}\n");
	auto g = run("filters --monadic --filter d example-3-5");
	EXPECT_EQ(g.out, "<d>_A = {d,1}\n");
}

TEST(Cli, EvalOnFixtureAndStandard) {
	auto r = run("eval " + fx("example_3_5.alg") + " --formula \"A p1\" --assign p1=c");
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(r.out, "b\n");
	auto s = run("eval standard --formula \"p1 -> p2\" --assign p1=1/2,p2=1/3");
	EXPECT_EQ(s.out, "1/2\n");
	auto bad = run("eval standard --formula \"A p1\" --assign p1=1/2");
	EXPECT_EQ(bad.code, 2);
	auto syntax = run("eval example-3-5 --formula \"p1 ->\" --assign p1=c");
	EXPECT_EQ(syntax.code, 2);
	EXPECT_NE(syntax.out.find("column"), std::string::npos);
}

TEST(Cli, EvalModelCheck) {
	auto j = run_json("eval example-3-5 --formula p2 --assign p1=1,p2=1 --theory " + fx("sample_theory.txt"));
	EXPECT_TRUE(j["model"].get<bool>());
	EXPECT_EQ(j["value"], "1");
}

TEST(Cli, QuantifiersAndChecks) {
	auto j = run_json("quantifiers chain-3 --check-g-h --check-modal");
	EXPECT_EQ(j["quantifiers"].size(), 2u);
	EXPECT_TRUE(j["g_h"]["tied_equal"].get<bool>());
	EXPECT_TRUE(j["modal"]["equal"].get<bool>());
	auto oracle = run_json("quantifiers --oracle example-3-5");
	auto pruned = run_json("quantifiers example-3-5");
	EXPECT_EQ(oracle["quantifiers"], pruned["quantifiers"]);
}

TEST(Cli, ClassifyRepairedSecondFixture) {
	auto j = run_json("classify --monadic " + fx("example_4_15.alg"));
	EXPECT_TRUE(j["classification"]["subdirectly_irreducible"].get<bool>());
	EXPECT_EQ(j["classification"]["least_nontrivial"], nlohmann::json::array({"e", "f", "g", "1"}));
	EXPECT_FALSE(j["classification"]["simple"].get<bool>());
}

TEST(Cli, ClassifyPlainAlgebra) {
	auto j = run_json("classify chain-4");
	EXPECT_TRUE(j["nm"]["subdirectly_irreducible"].get<bool>());
	EXPECT_FALSE(j["nm"]["simple"].get<bool>());
}

TEST(Cli, QuotientWritesLoadableAlgebra) {
	auto j = run_json("quotient --monadic --filter d,1 example-3-5");
	EXPECT_TRUE(j["chain"].get<bool>());
	auto f = mnm::parse_algebra_file(j["algebra_file"].get<std::string>());
	EXPECT_TRUE(mnm::validate_nm(f.tables).report.ok());
	EXPECT_EQ(run("quotient --filter b example-3-5").code, 2);
}

TEST(Cli, RepresentFixture) {
	auto r = run("represent example-3-5 --extend d");
	EXPECT_EQ(r.out, "prime monadic filter containing {1} and omitting d: {b,c,1}\n");
	auto j = run_json("represent example-3-5");
	EXPECT_TRUE(j["representation"]["injective"].get<bool>());
	EXPECT_EQ(j["representation"]["factors"].size(), 2u);
	EXPECT_EQ(run("represent example-3-5 --separating").code, 2);
}

TEST(Cli, ConsequenceCountermodel) {
	auto r = run("consequence --formula \"p1 \\/ ~p1\"");
	EXPECT_EQ(r.code, 1);
	EXPECT_NE(r.out.find("chain-3#0 with p1=1/2"), std::string::npos) << r.out;
	auto ok = run("consequence --formula \"A p2\" --theory " + fx("sample_theory.txt"));
	EXPECT_EQ(ok.code, 0) << ok.out;
}

TEST(Cli, ProofChecker) {
	const std::string th = " --theory " + fx("sample_theory.txt");
	auto good = run("proof " + fx("sample_proof.txt") + th);
	EXPECT_EQ(good.code, 0);
	EXPECT_EQ(good.out, "valid proof of A p2\n");
	for (const char* bad : {"sample_proof_bad_mp.txt", "sample_proof_bad_axiom.txt", "sample_proof_bad_nec.txt"}) {
		auto r = run("proof " + fx(bad) + th);
		EXPECT_EQ(r.code, 1) << bad;
		EXPECT_EQ(r.out.rfind("invalid: line ", 0), 0u) << r.out;
	}
}

TEST(Cli, CatalogActions) {
	auto list = run_json("catalog list");
	EXPECT_GE(list["entries"].size(), 10u);
	auto std_ = run_json("catalog standard --grid 3 --grid 5");
	EXPECT_EQ(std_["grids"].size(), 2u);
	auto sound = run_json("catalog soundness --max-size 4");
	EXPECT_TRUE(sound["sound"].get<bool>());
	EXPECT_EQ(run("catalog frobnicate").code, 2);
}

TEST(Cli, CatalogExportIsLoadable) {
	const auto dir = std::filesystem::temp_directory_path() / "mnm_cli_export_test";
	std::filesystem::remove_all(dir);
	auto r = run("--max-chain 3 catalog export " + dir.string());
	EXPECT_EQ(r.code, 0) << r.out;
	auto v = run("validate " + (dir / "example-3-5.alg").string());
	EXPECT_EQ(v.out, "NM-algebra: valid; quantifier: U1-U4 pass, strong\n");
	auto q = run("validate " + (dir / "chain-3.alg").string() + " --quantifier " + (dir / "chain-3-q1.forall").string());
	EXPECT_EQ(q.code, 0) << q.out;
	std::filesystem::remove_all(dir);
}

TEST(Cli, ExitCodesForBadInput) {
	EXPECT_EQ(run("--seed-less catalog list").code, 2);
	EXPECT_EQ(run("validate /nonexistent/x.alg").code, 2);
	EXPECT_EQ(run("validate chain-3#7").code, 2);
	EXPECT_EQ(run("filters --monadic chain-3").code, 2);
	EXPECT_EQ(run("").code, 2);
	EXPECT_EQ(run("--workers 0 catalog list").code, 2);
	EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, OutputIndependentOfWorkers) {
	for (const std::string args : {"quantifiers example-4-15", "catalog soundness --max-size 5", "catalog list"}) {
		auto one = run("--json --workers 1 " + args);
		auto four = run("--json --workers 4 " + args);
		EXPECT_EQ(one.code, 0);
		EXPECT_EQ(one.out, four.out) << args;
	}
}

TEST(Cli, EveryVerbAndFlagCombinationRuns) {
	const std::string a35 = fx("example_3_5.alg");
	const std::vector<std::pair<std::string, int>> cases{
	    {"validate " + a35, 0},
	    {"validate --properties " + a35, 0},
	    {"validate chain-3 --quantifier " + fx("example_3_5.alg"), 2},
	    {"validate example-3-5-verbatim", 1},
	    {"quantifiers example-3-5", 0},
	    {"quantifiers --strong example-4-15", 0},
	    {"quantifiers --oracle chain-4", 0},
	    {"quantifiers --check-g-h --check-modal product-2x2", 0},
	    {"filters example-3-5", 0},
	    {"filters --filter c example-3-5", 0},
	    {"filters --monadic example-3-5", 0},
	    {"filters --monadic --laws example-4-15", 0},
	    {"filters --monadic --filter c example-3-5", 0},
	    {"classify example-3-5", 0},
	    {"classify --monadic example-3-5", 0},
	    {"classify product-3x3#1", 0},
	    {"quotient --filter d,1 example-3-5", 0},
	    {"quotient --monadic --filter b,c,1 example-3-5", 0},
	    {"represent chain-5", 0},
	    {"represent example-3-5", 0},
	    {"represent --separating chain-5#1", 0},
	    {"represent --extend a --filter d,1 example-3-5", 0},
	    {"eval example-3-5 --formula \"E p1\" --assign p1=a", 0},
	    {"eval standard --formula \"p1 & p2\" --assign p1=2/3,p2=3/4", 0},
	    {"consequence --strong --formula \"A(p1 \\/ p2) -> A p1 \\/ A p2\"", 0},
	    {"consequence --formula \"A(p1 \\/ p2) -> A p1 \\/ A p2\"", 1},
	    {"proof --strong " + fx("sample_proof.txt") + " --theory " + fx("sample_theory.txt"), 0},
	    {"catalog list", 0},
	    {"catalog standard", 0},
	    {"catalog soundness --depth 1 --vars 1", 0},
	};
	for (const auto& [args, code] : cases) {
		auto r = run(args);
		EXPECT_EQ(r.code, code) << args << "\n" << r.out;
		auto j = run("--json " + args);
		EXPECT_EQ(j.code, code) << args;
		if (code != 2) {
			auto parsed = nlohmann::json::parse(j.out, nullptr, false);
			EXPECT_FALSE(parsed.is_discarded()) << args;
		}
	}
}

#include "catch_amalgamated.hpp"
#include "test_util.hpp"

using namespace tietze;

TEST_CASE("cmd_normalize emits the gauge data", "[cli]") {
    std::string text = cmd_normalize("[[-q*t,1],[1,0]]", "qdilation", false);
    CHECK(text.find("e = -q^2*t") != std::string::npos);
    CHECK(text.find("r = 1/(q^3*t^2)") != std::string::npos);
    CHECK(text.find("Q = [[-q*t,1],[-q*t,0]]") != std::string::npos);

    std::string per = cmd_normalize("[[0,q],[1,0]]", "qdilation", false);
    CHECK(per.find("Periodic") != std::string::npos);
    CHECK(per.find("r = q") != std::string::npos);

    std::string sh = cmd_normalize("[[0,t],[1,0]]", "shift:1", false);
    CHECK(sh.find("Tietze") != std::string::npos);

    json j = json::parse(cmd_normalize("[[-q*t,1],[1,0]]", "qdilation", true));
    CHECK(j["normalization"]["outcome"] == "tietze");
    CHECK(j["normalization"]["e"] == "-q^2*t");
    CHECK(j["normalization"]["trace"].size() == 1);
}

TEST_CASE("verdict invariants: q-Airy with and without the assertion flag", "[cli]") {
    VerdictOptions with_flag;
    with_flag.assume_no_algebraic_solutions = true;
    json j = json::parse(cmd_verdict("[[-q*t,1],[1,0]]", "qdilation", with_flag, true));
    CHECK(j["verdict"] == "NoDiffAlgebraicSolution(conditional)");
    CHECK(j["solve"]["certificate"]["kind"] == "indicial_at_infinity");
    CHECK(j["solve"]["certificate"]["residual"] == "-2");
    CHECK(j["hypotheses"]["algebraic_solution_hypothesis"] == "asserted");

    VerdictOptions no_flag;
    json j2 = json::parse(cmd_verdict("[[-q*t,1],[1,0]]", "qdilation", no_flag, true));
    CHECK(j2["verdict"] == "Inconclusive");
    CHECK(j2["solve"]["status"] == "no_solution");
    bool caveat_names_hypothesis = false;
    for (const auto& c : j2["caveats"])
        if (c.get<std::string>().find("algebraic") != std::string::npos) caveat_names_hypothesis = true;
    CHECK(caveat_names_hypothesis);
}

TEST_CASE("verdict on a constant-r Tietze matrix constructs R", "[cli]") {
    VerdictOptions opts;
    opts.assume_no_algebraic_solutions = true;
    // already in FT form with e = 1, r = q; Dr = 0
    json j = json::parse(cmd_verdict("[[1,q],[1,0]]", "qdilation", opts, true));
    CHECK(j["verdict"] == "DiffRiccatiConstructed");
    CHECK(j["solve"]["status"] == "solution");
    CHECK(j["R"] == "0");
    bool caveat_dr = false;
    for (const auto& c : j["caveats"])
        if (c.get<std::string>().find("Dr = 0") != std::string::npos) caveat_dr = true;
    CHECK(caveat_dr);
}

TEST_CASE("verdict on degenerate input is inconclusive, not an error", "[cli]") {
    VerdictOptions opts;
    json j = json::parse(cmd_verdict("[[1,1],[0,1]]", "qdilation", opts, true));
    CHECK(j["verdict"] == "Inconclusive");
    CHECK(j["normalization"]["outcome"] == "degenerate");

    json jp = json::parse(cmd_verdict("[[0,q],[1,0]]", "qdilation", opts, true));
    CHECK(jp["verdict"] == "Inconclusive");
    CHECK(jp["normalization"]["outcome"] == "periodic");
}

TEST_CASE("JSON output round-trips byte-identically", "[cli]") {
    VerdictOptions opts;
    opts.assume_no_algebraic_solutions = true;
    for (const char* m : {"[[-q*t,1],[1,0]]", "[[1,q],[1,0]]", "[[0,q],[1,0]]"}) {
        std::string s = cmd_verdict(m, "qdilation", opts, true);
        json parsed = json::parse(s);
        CHECK(parsed.dump(2) + "\n" == s);
    }
}

TEST_CASE("cmd_solve and cmd_verify", "[cli]") {
    json j = json::parse(cmd_solve({"-q", "1"}, "0", "qdilation", true));
    CHECK(j["solve"]["status"] == "solution");
    CHECK(j["solve"]["nullspace"][0] == "t");

    json jv = json::parse(cmd_verify("q", "1/t", "qdilation", true));
    CHECK(jv["criterion_holds"] == true);
    CHECK(jv["commutation_defect_zero"] == true);

    json jb = json::parse(cmd_verify("1/(q^3*t^2)", "0", "qdilation", true));
    CHECK(jb["criterion_holds"] == false);
    CHECK(jb["criterion_residual"] == "-2/t");
    CHECK(jb["commutation_defect_zero"] == false);
    CHECK(jb["R"] == "(2/t)*Y");
}

TEST_CASE("cmd_criterion emits the operator", "[cli]") {
    json j = json::parse(cmd_criterion("1/(q^3*t^2)", "qdilation", true));
    CHECK(j["criterion"]["coeffs"].size() == 4);
    CHECK(j["criterion"]["rhs"] == "2/t");
    CHECK(j["hypotheses"]["witness_place"] == "infinity");
    CHECK(j["hypotheses"]["witness_value"] == 2);
}

TEST_CASE("preset q-Airy passes its embedded golden checks", "[cli]") {
    std::string text = cmd_preset_qairy(false);
    CHECK(text.find("NoDiffAlgebraicSolution(conditional)") != std::string::npos);
    json j = json::parse(cmd_preset_qairy(true));
    CHECK(j["normalization"]["r"] == "1/(q^3*t^2)");
    CHECK(j["criterion"]["rhs"] == "2/t");
    CHECK(j["verdict"] == "NoDiffAlgebraicSolution(conditional)");
}

TEST_CASE("input errors surface as typed exceptions", "[cli]") {
    CHECK_THROWS_AS(cmd_normalize("[[q*t", "qdilation", false), syntax_error);
    CHECK_THROWS_AS(cmd_normalize("[[1,0],[0,1]]", "bogus", false), error);
    CHECK_THROWS_AS(cmd_verify("0", "1", "qdilation", false), zero_r);
    CHECK_THROWS_AS(cmd_solve({"1/0", "1"}, "0", "qdilation", false), eval_error);
}

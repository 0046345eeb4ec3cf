#include "doctest.h"
#include "testlib.hpp"

using namespace asjust;
using namespace testlib;

TEST_CASE("literal ordering drives every deterministic order") {
    // a < not a < -a < not -a, atoms alphabetical
    CHECK(L("a") < L("not a"));
    CHECK(L("not a") < L("-a"));
    CHECK(L("-a") < L("not -a"));
    CHECK(L("not -a") < L("b"));
    CHECK(to_string(L("not -a")) == "not -a");
    CHECK(literal_from_string("not -a") == Literal("a", true, true));
}

TEST_CASE("universe closes atoms under both negations") {
    LogicProgram p = parse_program(kTwoWayProgram);
    CHECK(p.clauses.size() == 6);
    CHECK(p.universe.atoms == std::vector<std::string>{"a", "c", "d", "e"});
    CHECK(p.universe.lit == LS({"a", "-a", "c", "-c", "d", "-d", "e", "-e"}));
    CHECK(p.universe.naf ==
          LS({"not a", "not -a", "not c", "not -c", "not d", "not -d", "not e", "not -e"}));
    CHECK(p.universe.contains(L("not -c")));
    CHECK_FALSE(p.universe.contains(L("b")));
}

TEST_CASE("reduct deletes failed clauses and strips the rest") {
    LogicProgram p = parse_program(kTwoWayProgram);

    SUBCASE("by the first answer set") {
        LogicProgram r = reduct(p, LS({"e", "d", "a"}));
        REQUIRE(r.clauses.size() == 3);
        CHECK(r.clauses[0] == Clause{L("a"), {}});
        CHECK(r.clauses[1] == Clause{L("d"), {}});
        CHECK(r.clauses[2] == Clause{L("e"), {}});
    }
    SUBCASE("by the second answer set") {
        // "d :- not -a." and both clauses with "not e" are deleted outright.
        LogicProgram r = reduct(p, LS({"e", "-a"}));
        REQUIRE(r.clauses.size() == 2);
        CHECK(r.clauses[0] == Clause{L("-a"), {}});
        CHECK(r.clauses[1] == Clause{L("e"), {}});
    }
    SUBCASE("classical body literals survive stripping") {
        LogicProgram q = parse_program("a :- -a, not c, not e.");
        LogicProgram r = reduct(q, LS({"a"}));
        REQUIRE(r.clauses.size() == 1);
        CHECK(r.clauses[0] == Clause{L("a"), {L("-a")}});
    }
    SUBCASE("NAF-free programs are fixed points") {
        LogicProgram q = parse_program("a. b :- a, c.");
        CHECK(reduct(q, LS({"a"})).clauses == q.clauses);
    }
}

TEST_CASE("least model of a positive program") {
    SUBCASE("plain fixpoint") {
        LogicProgram p = parse_program("a. d. e. b :- a, d. c :- x.");
        CHECK(least_answer_set_positive(p) == LS({"a", "b", "d", "e"}));
    }
    SUBCASE("complementary pair collapses to the full universe") {
        LogicProgram p = parse_program("a. -a. b :- c.");
        CHECK(least_answer_set_positive(p) == p.universe.lit);
        CHECK(least_answer_set_positive(p) == LS({"a", "-a", "b", "-b", "c", "-c"}));
    }
    SUBCASE("rejects NAF") {
        LogicProgram p = parse_program("a :- not b.");
        CHECK_THROWS_AS(least_answer_set_positive(p), std::invalid_argument);
    }
}

TEST_CASE("answer set recognition") {
    LogicProgram p = parse_program(kTwoWayProgram);
    CHECK(is_answer_set(p, LS({"e", "d", "a"})));
    CHECK(is_answer_set(p, LS({"e", "-a"})));
    CHECK_FALSE(is_answer_set(p, LS({"e"})));
    CHECK_FALSE(is_answer_set(p, {}));
}

TEST_CASE("answer set enumeration with NAF completion") {
    SUBCASE("two answer sets") {
        LogicProgram p = parse_program(kTwoWayProgram);
        AnswerSetEnumeration e = enumerate_answer_sets(p);
        CHECK_FALSE(e.inconsistent);
        REQUIRE(e.answer_sets.size() == 2);
        CHECK(e.answer_sets[0].s == LS({"a", "d", "e"}));
        CHECK(e.answer_sets[0].delta == LS({"not -a", "not c", "not -c", "not -d", "not -e"}));
        CHECK(e.answer_sets[0].s_naf ==
              set_union(e.answer_sets[0].s, e.answer_sets[0].delta));
        CHECK(e.answer_sets[1].s == LS({"-a", "e"}));
        CHECK(e.answer_sets[1].delta ==
              LS({"not a", "not c", "not -c", "not d", "not -d", "not -e"}));
    }
    SUBCASE("odd loop has no answer set") {
        AnswerSetEnumeration e = enumerate_answer_sets(parse_program("a :- not a."));
        CHECK(e.inconsistent);
        CHECK(e.answer_sets.empty());
    }
    SUBCASE("three-atom cycle keeps exactly {b}") {
        AnswerSetEnumeration e = enumerate_answer_sets(parse_program(kCycleProgram));
        REQUIRE(e.answer_sets.size() == 1);
        CHECK(e.answer_sets[0].s == LS({"b"}));
    }
    SUBCASE("self-support earns nothing") {
        AnswerSetEnumeration e = enumerate_answer_sets(parse_program("p :- p."));
        REQUIRE(e.answer_sets.size() == 1);
        CHECK(e.answer_sets[0].s.empty());
    }
    SUBCASE("contradictory facts are inconsistent") {
        // The only "answer set" is the full literal universe, which is not consistent.
        AnswerSetEnumeration e = enumerate_answer_sets(parse_program("a. -a."));
        CHECK(e.inconsistent);
        CHECK(e.answer_sets.empty());
    }
    SUBCASE("matches the all-subsets oracle on the running examples") {
        for (const char* text : {kTwoWayProgram, kCycleProgram, kTwoRouteProgram,
                                 kOneRouteProgram, "a :- not a.", "p :- p.", "a. -a. b :- c."}) {
            LogicProgram p = parse_program(text);
            BruteForceOracle oracle(p);
            OracleResult expected = oracle.enumerate();
            AnswerSetEnumeration actual = enumerate_answer_sets(p);
            REQUIRE(actual.answer_sets.size() == expected.answer_sets.size());
            for (size_t i = 0; i < expected.answer_sets.size(); ++i)
                CHECK(actual.answer_sets[i].s == expected.answer_sets[i]);
            CHECK(actual.inconsistent == expected.inconsistent);
        }
    }
}

TEST_CASE("naf_completion validates its input") {
    LogicProgram p = parse_program(kTwoWayProgram);
    AnswerSetWithNAF s = naf_completion(p, LS({"e", "d", "a"}));
    CHECK(s.delta == LS({"not -a", "not c", "not -c", "not -d", "not -e"}));
    CHECK(s.s_naf == LS({"a", "d", "e", "not -a", "not c", "not -c", "not -d", "not -e"}));
    CHECK_THROWS_AS(naf_completion(p, LS({"e"})), std::invalid_argument);
}

TEST_CASE("modus ponens derivability") {
    LogicProgram p = parse_program(kTwoWayProgram);
    LiteralSet delta = LS({"not -a", "not c", "not -c", "not -d", "not -e"});

    CHECK(derives_mp(p, delta, L("a")));       // a :- not -a fires
    CHECK_FALSE(derives_mp(p, delta, L("c"))); // c :- not e blocked: not e not granted
    CHECK(derives_mp(p, delta, L("e")));       // facts always fire
    CHECK(derives_mp(p, {L("not x")}, L("not x")));  // delta members self-derive

    SUBCASE("closure characterizes the answer set") {
        // S ∪ Δ_S is exactly what p ∪ Δ_S derives.
        AnswerSetWithNAF s = naf_completion(p, LS({"e", "d", "a"}));
        CHECK(mp_consequences(p, s.delta) == s.s_naf);
    }
    SUBCASE("non-answer-sets fail the characterization") {
        LiteralSet bogus_delta;  // grant everything
        for (const Literal& l : p.universe.naf) bogus_delta.push_back(l);
        LiteralSet closure = mp_consequences(p, bogus_delta);
        LiteralSet classical;
        for (const Literal& l : closure)
            if (!l.naf) classical.push_back(l);
        CHECK_FALSE(is_answer_set(p, classical));
    }
}

TEST_CASE("head-subset candidate guard") {
    std::string big;
    for (char c = 'a'; c <= 'z'; ++c) big += std::string(1, c) + ".\n";
    CHECK_THROWS_AS(enumerate_answer_sets(parse_program(big)), std::runtime_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "fourflow/notation.hpp"

using namespace fourflow;
using namespace fourflow::notation;

static std::string rt(const std::string& s) { return print(parse(s)); }

/** Canonical member form: expanding a fully specified string yields itself. */
static std::string canon(const std::string& s) {
    auto v = expand(parse(s));
    REQUIRE(v.size() == 1);
    return print(v[0]);
}

TEST_CASE("round trip on paper-style strings") {
    for (const char* s : {
             "5-6[5665]-9",
             "7[5555]",
             "8-5[6078(5)05]-12",
             "78[56-5-555]",
             "76[55-6-65]",
             "66[507-6-705]-13",
             "7[55M5]",
             "7[55M55]",
             "10[556605066556]-14",
             "M[60506]",
             "M[55655]",
             "m[555]",
             "m[5m5]",
             "7[606606]-12",
             "8[5075705]-13",
             "8[55665xxx]",
             "7[5665xxx]",
             "10[5{5^4,m}5xxx]",
             "11[5^8xxx]-12",
             "7[62((5))505(T)6]",
             "8[5mMLR]",
             "7[606606 6M6]",
             "9[5M55M5]",
             "7[5060(5)5M55M]",
             "M[5(5)0(*)6]",
             "M[x***x]",
             "7[6066(*)0(*)6]",
             "7[555x606x]-11",
             "6[505x505x]-8",
         }) {
        std::string t = s;
        t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
        CHECK(rt(s) == t);
    }
    // A lone parenthesised cap is not canonical; digit style abbreviates it.
    CHECK(rt("6-8[56(5)75]-12") == "6-8[56075]-12");
    CHECK(parse(rt("6-8[56(5)75]-12")) == parse("6-8[56(5)75]-12"));
}

TEST_CASE("cap style golden") {
    ClusterExpr e = parse("7[50516]");
    CHECK(print(e, CapStyle::Digits) == "7[50516]");
    CHECK(print(e, CapStyle::Parens) == "7[5(5)5(6)6]");
    // a lone parenthesised cap normalizes to the digit form in digit style
    CHECK(print(parse("7[5(5)516]"), CapStyle::Digits) == "7[50516]");
    // multi-cap pockets keep their written forms (proper cap stays abbreviated)
    CHECK(print(parse("8-5[6078(5)05]-12"), CapStyle::Digits) == "8-5[6078(5)05]-12");
}

TEST_CASE("header and suffix fields") {
    ClusterExpr e = parse("5-6[5665]-9");
    CHECK(e.prefix == 5);
    REQUIRE(e.hubs.size() == 1);
    CHECK(e.hubs[0] == DegreeSpec::exact(6));
    CHECK(e.ringSuffix == 9);
    CHECK(e.body.size() == 4);

    ClusterExpr two = parse("78[56-5-555]");
    REQUIRE(two.hubs.size() == 2);
    CHECK(two.hubs[0] == DegreeSpec::exact(7));
    CHECK(two.hubs[1] == DegreeSpec::exact(8));
    int shared = 0;
    for (auto& el : two.body) shared += el.token.shared ? 1 : 0;
    CHECK(shared == 1);

    ClusterExpr big = parse("12[5^9xxx]");
    CHECK(big.hubs[0] == DegreeSpec::exact(12));

    ClusterExpr mhub = parse("m[555]");
    CHECK(mhub.hubs[0] == DegreeSpec::minor());
    ClusterExpr Mhub = parse("M[60506]");
    CHECK(Mhub.hubs[0] == DegreeSpec::major());
}

TEST_CASE("token specs") {
    ClusterExpr e = parse("8[5mMLRx*E]");
    REQUIRE(e.body.size() == 8);
    CHECK(e.body[0].token.spec == DegreeSpec::exact(5));
    CHECK(e.body[1].token.spec == DegreeSpec::minor());
    CHECK(e.body[2].token.spec == DegreeSpec::major());
    CHECK(e.body[3].token.letter == 'L');
    CHECK(e.body[3].token.spec == DegreeSpec::any());
    CHECK(e.body[4].token.letter == 'R');
    CHECK(e.body[5].token.kind == Token::Kind::Slot);
    CHECK(e.body[6].token.spec == DegreeSpec::atLeast(6));
    CHECK(e.body[7].token.spec == DegreeSpec::atLeast(8));

    ClusterExpr caps = parse("7[62((5))505(T)6]");
    CHECK(caps.body[1].token.kind == Token::Kind::Cap);
    CHECK(caps.body[1].token.spec == DegreeSpec::exact(7));
    CHECK(caps.body[2].token.kind == Token::Kind::SemiCap);
    CHECK(caps.body[2].token.spec == DegreeSpec::exact(5));
    CHECK(caps.body[6].token.kind == Token::Kind::Cap);
    CHECK(caps.body[6].token.letter == 'T');
    CHECK(caps.body[6].token.spec == DegreeSpec::major());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse("6[5]"), DataError);           // underdetermined
    CHECK_THROWS_AS(parse("7[54]"), DataError);          // cap digit outside 0-3
    CHECK_THROWS_AS(parse("7[5(5]"), DataError);         // unbalanced cap
    CHECK_THROWS_AS(parse("7[55q5]"), DataError);        // bad degree char
    CHECK_THROWS_AS(parse("5[555555]"), DataError);      // more than the hub degree
    CHECK_THROWS_AS(parse("7[5555]x"), DataError);       // junk after body
    CHECK_THROWS_AS(parse("7 5555"), DataError);         // missing bracket
    CHECK_THROWS_AS(parse("66[555]"), DataError);        // two hubs, no shared vertex
    CHECK_THROWS_AS(parse("7[55-5-5]"), DataError);      // shared vertex, one hub
    CHECK_THROWS_AS(parse("4[55]"), DataError);          // degree below 5
}

TEST_CASE("expand: brace family from the paper") {
    auto fam = expand(parse("10[5{5^4,m}5xxx]"));
    std::set<std::string> got;
    for (auto& e : fam) got.insert(print(e));
    std::set<std::string> want = {
        canon("10[5555555xxx]"),
        canon("10[5655555xxx]"),
        canon("10[5565555xxx]"),
        canon("10[5556555xxx]"),
    };
    CHECK(got == want);
    CHECK(fam.size() == 4);
}

TEST_CASE("expand: minor hub and vertices") {
    CHECK(expand(parse("m[555]")).size() == 2);
    CHECK(expand(parse("m[5m5]")).size() == 4);
    CHECK(expand(parse("11[5^8xxx]")).size() == 1);
    CHECK(canon("11[5^8xxx]") == "11[55555555xxx]");
}

TEST_CASE("expand: permutation count against a direct count") {
    // {5^2,6^2} inserted into a 9-wheel: 4!/(2!2!) = 6 raw arrangements.
    auto fam = expand(parse("9[5{5^2,6^2}xx55]"));
    // Independent dedup: enumerate the six arrangements by hand.
    std::set<std::string> raw;
    std::vector<int> ms = {5, 5, 6, 6};
    std::sort(ms.begin(), ms.end());
    do {
        std::string body = "5";
        for (int d : ms) body += static_cast<char>('0' + d);
        body += "xx55";
        raw.insert(canon("9[" + body + "]"));
    } while (std::next_permutation(ms.begin(), ms.end()));
    std::set<std::string> got;
    for (auto& e : fam) got.insert(print(e));
    CHECK(got == raw);
}

TEST_CASE("expand keeps wildcards") {
    auto fam = expand(parse("7[55M5]"));
    REQUIRE(fam.size() == 1);
    bool hasMajor = false;
    for (auto& el : fam[0].body)
        if (el.token.spec == DegreeSpec::major()) hasMajor = true;
    CHECK(hasMajor);
}

TEST_CASE("expansion guard") {
    ExpandOptions opt;
    opt.guard = 3;
    CHECK_THROWS_AS(expand(parse("10[5{5^4,m}5xxx]"), opt), DataError);
}

TEST_CASE("degree spec algebra") {
    CHECK(DegreeSpec::minor().meet(DegreeSpec::exact(6)) == DegreeSpec::exact(6));
    CHECK(!DegreeSpec::minor().meet(DegreeSpec::major()).has_value());
    CHECK(DegreeSpec::major().subsumes(DegreeSpec::exact(9)));
    CHECK(DegreeSpec::atLeast(6).contains(6));
    CHECK(!DegreeSpec::atLeast(8).contains(7));
}

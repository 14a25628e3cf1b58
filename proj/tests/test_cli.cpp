#include <cstdlib>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "omframe/cli/parse.hpp"
#include "omframe/cli/run.hpp"
#include "omframe/reference.hpp"
#include "support.hpp"

using namespace omframe;
using namespace omframe::cli;
using namespace omframe::testing;
using json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const char* kRunning = "2+s+s^4, 3+s^2+s^4, 6+2*s^3+s^4";

std::string parse_error(const std::string& text) {
    try {
        parse_vector(text);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Parse);
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse_vector examples") {
    CHECK(parse_vector(kRunning) == running_example(Q{}));
    CHECK(parse_vector("[2+s+s^4,3+s^2+s^4,6+2*s^3+s^4]") == running_example(Q{}));

    auto z = parse_vector("0");
    CHECK(z.size() == 1);
    CHECK(z.is_zero());

    auto r = parse_vector("1/2 + s, -s");
    CHECK(r[0] == QPoly(Q{}, {Rational(mpz_class(1), mpz_class(2)), Rational(1)}));
    CHECK(r[1] == qp({0, -1}));

    CHECK(parse_vector("(s+1)^2, -(s-1)*(s+1), 2*s/4")[0] == qp({1, 2, 1}));
    CHECK(parse_vector("(s+1)^2, -(s-1)*(s+1), 2*s/4")[1] == qp({1, 0, -1}));
    CHECK(parse_vector("-s^2, s^0")[0] == qp({0, 0, -1}));
    CHECK(parse_vector("-s^2, s^0")[1] == qp({1}));
}

TEST_CASE("parse_vector errors carry positions") {
    CHECK(parse_error("s, 2s").find("implicit multiplication") != std::string::npos);
    CHECK(parse_error("s, 2s").find("position 5") != std::string::npos);
    CHECK(parse_error("s + x").find("unknown variable 'x' at position 5") != std::string::npos);
    CHECK(parse_error("s,,1").find("empty component") != std::string::npos);
    CHECK(parse_error("").find("empty input") != std::string::npos);
    CHECK(parse_error("s^-1").find("exponent") != std::string::npos);
    CHECK(parse_error("1/s").find("non-constant") != std::string::npos);
    CHECK(parse_error("1/0").find("division by zero") != std::string::npos);
    CHECK(parse_error("(s+1").find("missing ')'") != std::string::npos);
    CHECK(parse_error("(s)(s)").find("implicit multiplication") != std::string::npos);
    CHECK(parse_error("s^2^2").find("unexpected character '^'") != std::string::npos);
    CHECK(parse_error("[s, 1").find("missing ']'") != std::string::npos);
    CHECK(parse_error("sin").find("unknown variable 'sin'") != std::string::npos);
}

TEST_CASE("printing then parsing is the identity") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> nd(1, 5), dd(0, 6), num(-30, 30), den(1, 7);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<QPoly> comps;
        const int n = nd(rng);
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> c;
            const int d = dd(rng);
            for (int e = 0; e <= d; ++e) c.emplace_back(mpz_class(num(rng)), mpz_class(den(rng)));
            comps.emplace_back(Q{}, std::move(c));
        }
        auto v = row<Q>(comps);
        CHECK(parse_vector(to_string(v)) == v);
    }
}

TEST_CASE("to_field reduces rationals mod p") {
    PrimeField f(7);
    auto v = to_field(parse_vector("1/2 + s, 8*s"), f);
    CHECK(v[0] == poly(f, {4, 1}));
    CHECK(v[1] == poly(f, {0, 1}));
    CHECK_THROWS_AS(to_field(parse_vector("1/7"), f), Error);
}

TEST_CASE("frame command reproduces the running example") {
    auto r = invoke({"frame", "--field", "q", "--json", kRunning});
    REQUIRE(r.code == kExitOk);
    auto doc = json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["field"] == "q");
    CHECK(doc["beta"] == 1);
    CHECK(doc["mu"] == json::array({2, 2}));
    CHECK(doc["pivots"] == json::array({1, 2, 3, 4, 5, 6, 7, 10, 13}));
    CHECK(doc["basic"] == json::array({8, 9}));
    CHECK(doc["frame"][0][0] == json::array({"2", "-1"}));
    CHECK(doc["frame"][2][2] == json::array({"-7", "-5", "1"}));
    CHECK(doc["verification"]["passed"] == true);

    auto human = invoke({"frame", kRunning});
    CHECK(human.code == kExitOk);
    CHECK(human.out.find("[ -s+2  -s^2-3*s+3 -s^2-12*s+9 ]") != std::string::npos);
}

TEST_CASE("frame output verifies against its input") {
    for (const char* input : {kRunning, "s, s+1", "s^2+s, s^2", "1/2+s, -s, 3"}) {
        auto f = invoke({"frame", "--json", input});
        REQUIRE(f.code == kExitOk);
        auto v = invoke({"verify", "--frame", "-", input}, f.out);
        CHECK_MESSAGE(v.code == kExitOk, input);
    }
    auto f = invoke({"frame", "--json", "--field", "gf:101", kRunning});
    auto v = invoke({"verify", "--frame", "-", kRunning}, f.out);
    CHECK(v.code == kExitOk);
}

TEST_CASE("verify rejects the identity at the running example") {
    auto v = invoke({"verify", "--frame", "-", kRunning}, R"([["1","0","0"],["0","1","0"],["0","0","1"]])");
    CHECK(v.code == kExitVerificationFailed);
    auto w = invoke({"verify", "--frame", "-", "--json", kRunning}, R"([["1","0","0"],["0","1","0"],["0","0","1"]])");
    CHECK(json::parse(w.out)["verification"]["passed"] == false);
    // expression entries are accepted too
    auto e = invoke({"verify", "--frame", "-", "s, s+1"}, R"([["-1", "-s-1"], ["1", "s"]])");
    CHECK(e.code == kExitOk);
}

TEST_CASE("gen, bezout, mubasis and oracle commands") {
    auto g = invoke({"gen", "--kind", "beta-mu", "--n", "3", "--mu", "1,2", "--j", "1"});
    CHECK(g.code == kExitOk);
    CHECK(g.out == "[s, s^2, s^3+1]\n");
    CHECK(invoke({"gen", "--kind", "upper", "--n", "3", "--d", "5"}).out == "[1, 0, s^5]\n");
    CHECK(invoke({"gen", "--kind", "detc", "--n", "3", "--d", "6"}).out == "[s^6, s^3, 1]\n");
    CHECK(invoke({"gen", "--kind", "beta-mu", "--mu", "2,1", "--j", "0"}).code == kExitUsage);
    CHECK(invoke({"gen", "--kind", "sideways", "--n", "3", "--d", "2"}).code == kExitUsage);

    auto b = invoke({"bezout", "--json", "s, s^3+1"});
    CHECK(json::parse(b.out)["beta"] == 2);
    auto m = invoke({"mubasis", "--json", kRunning});
    CHECK(json::parse(m.out)["mu"] == json::array({2, 2}));
    CHECK(json::parse(m.out)["mu_basis"].size() == 2);
    auto o = invoke({"oracle", "--json", kRunning});
    CHECK(o.code == kExitOk);
    CHECK(json::parse(o.out)["agree"] == true);
}

TEST_CASE("eframe reports the coefficient section") {
    auto r = invoke({"eframe", "--json", kRunning});
    CHECK(r.code == kExitOk);
    CHECK(json::parse(r.out)["section"] == json::array({0, 1, 2}));
    auto bad = invoke({"eframe", "--json", "1+s, s, 1"});
    CHECK(bad.code == kExitDomain);
    CHECK(json::parse(bad.out)["error"]["code"] == "E_DEPENDENT_COMPONENTS");
}

TEST_CASE("inputs from stdin and leading minus signs") {
    auto r = invoke({"bezout", "-"}, "s, s+1\n");
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("beta    0") != std::string::npos);
    auto neg = invoke({"bezout", "-s, s+1"});
    CHECK(neg.code == kExitOk);
    auto pos = invoke({"frame", "-s, 2s"});
    CHECK(pos.err.find("position 6") != std::string::npos);
}

TEST_CASE("usage and domain errors map to exit codes") {
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"frobnicate"}).code == kExitUsage);
    CHECK(invoke({"frame"}).code == kExitUsage);
    CHECK(invoke({"frame", "s, 2s"}).code == kExitUsage);
    CHECK(invoke({"frame", "--field", "gf:100", "s, 1"}).code == kExitUsage);
    CHECK(invoke({"frame", "--field", "r", "s, 1"}).code == kExitUsage);
    CHECK(invoke({"frame", "0"}).code == kExitDomain);
    CHECK(invoke({"frame", "0, 0"}).code == kExitDomain);
    CHECK(invoke({"frame", "--field", "gf:7", "1/7, s"}).code == kExitDomain);
    CHECK(invoke({"verify", "--frame", "/nonexistent/frame.json", "s, 1"}).code == kExitUsage);
    CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("bench is reproducible under a fixed seed") {
    auto r = invoke({"bench", "--json", "--n", "3", "--d", "2,4", "--reps", "1", "--seed", "9"});
    REQUIRE(r.code == kExitOk);
    auto doc = json::parse(r.out);
    CHECK(doc["seed"] == 9);
    CHECK(doc["field"] == "gf:2147483647");
    CHECK(doc["cells"].size() == 2);
    CHECK(doc["slopes"].contains("3"));

    setenv("OMFRAME_SEED", "77", 1);
    auto e = invoke({"bench", "--json", "--n", "2", "--d", "1", "--reps", "1"});
    unsetenv("OMFRAME_SEED");
    CHECK(json::parse(e.out)["seed"] == 77);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oujordan/json_io.hpp"
#include "oujordan/verify.hpp"

using namespace oujordan;

TEST_CASE("polynomial golden encoding") {
    // x^2 = H_2 + rho H_0 at rho = 1/2, lifted to the 1-d JSON form
    const HermitePoly p = monomial_to_hermite(2, Rational(1, 2));
    CHECK(poly_to_json(p).dump() ==
          R"({"d":1,"rho":"1/2","terms":[{"idx":[0],"coeff":"1/2"},{"idx":[2],"coeff":"1"}]})");

    // canonical term order: graded, then decreasing lexicographic
    HermitePoly q(3, Rational(1));
    q.add_term(MultiIndex{0, 0, 2}, Rational(1));
    q.add_term(MultiIndex{1, 0, 1}, Rational(-2));
    q.add_term(MultiIndex{0, 0, 0}, Rational(-1, 3));
    CHECK(poly_to_json(q).dump() ==
          R"({"d":3,"rho":"1","terms":[{"idx":[0,0,0],"coeff":"-1/3"},{"idx":[1,0,1],"coeff":"-2"},{"idx":[0,0,2],"coeff":"1"}]})");

    const HermitePoly zero(2, Rational(2, 3));
    CHECK(poly_to_json(zero).dump() == R"({"d":2,"rho":"2/3","terms":[]})");
}

TEST_CASE("polynomial round trip") {
    const OUContext ctx(3, 2, Rational(2), Rational(3));
    const Jordan3DReport report = jordan_basis(2, ctx);
    for (const JordanChain3D& chain : report.chains)
        for (const HermitePoly& element : chain.elements)
            CHECK(poly_from_json(poly_to_json(element)) == element);
}

TEST_CASE("level-2 report JSON shape") {
    const OUContext ctx(3, 2);
    const Json j = jordan3d_to_json(jordan_basis(2, ctx));
    CHECK(j.at("n") == 2);
    CHECK(j.at("segre") == Json::array({5, 1}));
    CHECK(j.at("geometric_multiplicity") == 2);
    CHECK(j.at("algebraic_multiplicity") == 6);
    REQUIRE(j.at("chains").size() == 2);
    CHECK(j.at("chains")[0].at("k") == 0);
    CHECK(j.at("chains")[0].at("q") == 5);
    CHECK(j.at("chains")[0].at("elements").size() == 5);
    REQUIRE(j.at("conjecture").size() == 2);
    CHECK(j.at("conjecture")[0].at("holds") == true);
    CHECK(j.at("conjecture")[0].at("lambda") == "1");

    // key order is pinned
    const std::string dumped = j.dump();
    CHECK(dumped.find("\"n\"") < dumped.find("\"segre\""));
    CHECK(dumped.find("\"segre\"") < dumped.find("\"geometric_multiplicity\""));
    CHECK(dumped.find("\"geometric_multiplicity\"") < dumped.find("\"algebraic_multiplicity\""));
    CHECK(dumped.find("\"algebraic_multiplicity\"") < dumped.find("\"chains\""));
    CHECK(dumped.find("\"chains\"") < dumped.find("\"conjecture\""));
}

TEST_CASE("chain JSON for d=2") {
    const OUContext ctx(2, 1);
    const Json j = chain2d_to_json(build_chain_2d(1, ctx), ctx);
    CHECK(j.at("n") == 1);
    CHECK(j.at("q") == 2);
    CHECK(j.at("closed_form_verified") == true);
    REQUIRE(j.at("elements").size() == 2);
    CHECK(j.at("elements")[0].dump() ==
          R"({"d":2,"rho":"1","terms":[{"idx":[1,0],"coeff":"1"}]})");
    CHECK(j.at("elements")[1].dump() ==
          R"({"d":2,"rho":"1","terms":[{"idx":[0,1],"coeff":"-1"}]})");
}

TEST_CASE("oracle JSON") {
    const OUContext ctx(3, 2);
    const TheoryComparison cmp = compare_with_theory(ctx);
    const Json j = oracle_to_json(ctx, cmp.oracle, &cmp);
    CHECK(j.at("segre") == Json::array({5, 1}));
    CHECK(j.at("kernel_dims") == Json::array({2, 3, 4, 5, 6}));
    CHECK(j.at("theory").at("matches") == true);

    const OracleReport raw = jordan_structure(OUContext(4, 1));
    const Json free_form = oracle_to_json(OUContext(4, 1), raw, nullptr);
    CHECK(free_form.at("theory").is_null());
}

TEST_CASE("conjecture JSON carries the exact eigen-structure") {
    const Json j = conjecture_to_json(3, conjecture_check(3));
    REQUIRE(j.at("rows").size() == 2);
    CHECK(j.at("rows")[0].at("lambda") == "1");
    CHECK(j.at("rows")[0].at("ratio") == "1");
    // char poly of S_0 = [[2,2],[2,5]] is 6 - 7t + t^2
    CHECK(j.at("rows")[0].at("char_poly") == Json::array({"6", "-7", "1"}));
}

TEST_CASE("verification sweep is deterministic in-process") {
    VerifyOptions options;
    options.max_n = 3;
    const VerifyResult first = run_verification_sweep(options);
    const VerifyResult second = run_verification_sweep(options);
    CHECK(first.ok);
    CHECK(first.log == second.log);
    CHECK(first.log.find("VERIFY OK") != std::string::npos);

    options.threads = 1;
    const VerifyResult serial = run_verification_sweep(options);
    CHECK(serial.log == first.log); // thread count cannot change the output
}

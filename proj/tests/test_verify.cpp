#include "cyclo/error.hpp"
#include "cyclo/verify.hpp"

#include "doctest.h"

using namespace cyclo;

TEST_CASE("default matrix passes")
{
    const auto results = run_verification(VerifyOptions{});
    CHECK(results.size() == 8);
    for (const auto& r : results) {
        CAPTURE(r.name);
        CAPTURE(r.counterexample);
        CHECK(r.passed);
        CHECK(r.cases > 0);
    }
}

TEST_CASE("a corrupted signature rule is reported with a counterexample")
{
    VerifyOptions options;
    options.order = SignatureOrder::leftmost;
    bool seen = false;
    for (const auto& r : run_verification(options))
        if (r.name == "count_bijection") {
            seen = true;
            CHECK_FALSE(r.passed);
            CHECK(r.counterexample.find("(e=4,p=2,delta=1,v=(0)) n=4") != std::string::npos);
        }
    CHECK(seen);
}

TEST_CASE("empty range passes vacuously")
{
    VerifyOptions options;
    options.n_min = 3;
    options.n_max = 2;
    for (const auto& r : run_verification(options)) {
        CHECK(r.passed);
        if (r.name != "morita_split") CHECK(r.cases == 0);
    }
}

TEST_CASE("tableau cap is enforced")
{
    VerifyOptions options;
    options.specs = {build_parameters(4, 2, 1, {0})};
    options.n_min = 3;
    options.n_max = 3;
    options.tableau_cap = 2;
    CHECK_THROWS_AS(run_verification(options), CapExceeded);
}

TEST_CASE("describe")
{
    CHECK(describe(build_parameters(4, 2, 2, {0, 1})) == "(e=4,p=2,delta=2,v=(0,1))");
}

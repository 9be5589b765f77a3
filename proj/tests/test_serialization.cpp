#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "random_trig.hpp"
#include "wron/serialization.hpp"
#include "wron/wronskian.hpp"

using namespace wron;

namespace {

std::string golden_path(const std::string& name) {
#ifdef WRON_GOLDEN_DIR
    return std::string(WRON_GOLDEN_DIR) + "/" + name;
#else
    return name;
#endif
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file: " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("pi-scalar round trip") {
    const PiScalar s = PiScalar::pi_power(-1, make_rational(2, 3)) +
                       PiScalar(make_rational(-7, 5)) + PiScalar::pi_power(3, 4);
    CHECK(pi_scalar_from_json(pi_scalar_to_json(s)) == s);
    CHECK(pi_scalar_from_json(pi_scalar_to_json(PiScalar())).is_zero());

    // exponents serialize in ascending order
    const nlohmann::json j = pi_scalar_to_json(s);
    REQUIRE(j.size() == 3);
    CHECK(j[0][0].get<int>() == -1);
    CHECK(j[2][0].get<int>() == 3);
    CHECK(j[0][1].get<std::string>() == "2/3");
}

TEST_CASE("u-polynomial round trip") {
    std::mt19937_64 rng(0x5eed0040);
    for (int rep = 0; rep < 15; ++rep) {
        const UPoly p = wron::testing::random_upoly(rng, 6);
        CHECK(upoly_from_json(upoly_to_json(p)) == p);
    }
    CHECK(upoly_from_json(upoly_to_json(UPoly())).is_zero());
}

TEST_CASE("trig-polynomial round trip is bit-exact and byte-stable") {
    std::mt19937_64 rng(0x5eed0041);
    for (int rep = 0; rep < 25; ++rep) {
        const FourierPoly f = wron::testing::random_fourier(rng, 9);
        const std::string once = fourier_to_json_string(f);
        const FourierPoly back = fourier_from_json_string(once);
        CHECK(back == f);
        CHECK(fourier_to_json_string(back) == once);
    }
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(fourier_from_json_string("{\"sin\": 3}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(fourier_from_json_string("not json at all"),
                    std::invalid_argument);
    CHECK_THROWS_AS(pi_scalar_from_json(nlohmann::json::parse("[[0,\"1/0\"]]")),
                    std::invalid_argument);
}

TEST_CASE("golden serialized determinants") {
    // frozen bytes for W_n^(0), n = 1..4; regenerating them must be a
    // deliberate act, not a side effect of refactoring
    const std::string got = [] {
        std::ostringstream out;
        for (int n = 1; n <= 4; ++n) {
            out << fourier_to_json_string(w_closed(n, 0)) << "\n";
        }
        return out.str();
    }();
    CHECK(got == slurp(golden_path("wron_n1_to_n4.jsonl")));
}

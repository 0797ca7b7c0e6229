#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "bezout/serialization.hpp"
#include "test_support.hpp"

using namespace bezout;
using R = Rational;

namespace {

std::string fixture(const char* name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

Poly<R> parse_text(const std::string& text) {
    return poly_from_json<R>(Json::parse(text));
}

} // namespace

TEST_CASE("fixture files parse to the worked polynomials", "[serialization]") {
    const auto p = parse_poly_file<R>(fixture("bernstein_p.json"));
    CHECK(p.basis == Basis<R>::bernstein(4));
    CHECK(p.coeffs == std::vector<R>{R(4), R(4), R(19, 6), R(3, 2), R(0)});

    const auto q = parse_poly_file<R>(fixture("hermite_q.json"));
    CHECK(q.basis == Basis<R>::hermite({R(-1), R(3), R(4)}, {2, 2, 1}));
    CHECK(q.coeffs == std::vector<R>{R(-12), R(16), R(4), R(8), R(18)});
}

TEST_CASE("polynomial documents round trip", "[serialization]") {
    testsupport::Rng rng(55);
    for (auto kind : testsupport::kAllKinds) {
        const auto basis = rng.basis(kind, 4);
        const auto p = make_poly(basis, rng.poly(4, 50));
        CHECK(poly_from_json<R>(poly_to_json(p)).basis == p.basis);
        CHECK(poly_from_json<R>(poly_to_json(p)).coeffs == p.coeffs);
    }
}

TEST_CASE("schema violations carry the failing path", "[serialization]") {
    const auto check_violation = [](const std::string& text, const std::string& needle) {
        try {
            parse_text(text);
            FAIL("expected SchemaViolation for " << text);
        } catch (const Error& e) {
            CHECK(e.code() == "SchemaViolation");
            CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring(needle));
        }
    };
    // repeated Lagrange nodes
    check_violation(R"({"basis":{"kind":"lagrange","nodes":["1","1"]},"coeffs":["0","1"]})",
                    "/basis");
    // degree must not be stated when nodes imply it
    check_violation(
        R"({"basis":{"kind":"lagrange","nodes":["0","1"],"degree":1},"coeffs":["0","1"]})",
        "degree");
    check_violation(
        R"({"basis":{"kind":"hermite","nodes":["0"],"confluencies":[2],"degree":1},"coeffs":["0","1"]})",
        "degree");
    // coefficient count mismatch
    check_violation(R"({"basis":{"kind":"monomial","degree":2},"coeffs":["1"]})", "/coeffs");
    // unknown keys and kinds
    check_violation(R"({"basis":{"kind":"monomial","degree":1},"coeffs":["1","2"],"x":1})", "x");
    check_violation(R"({"basis":{"kind":"chebyshev","degree":1},"coeffs":["1","2"]})", "kind");
    // missing degree
    check_violation(R"({"basis":{"kind":"bernstein"},"coeffs":["1"]})", "degree");
}

TEST_CASE("bad rationals are reported as such", "[serialization]") {
    CHECK_THROWS_MATCHES(
        parse_text(R"({"basis":{"kind":"monomial","degree":1},"coeffs":["1","x"]})"), Error,
        Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("BadRational")));
}

TEST_CASE("malformed JSON files fail with exit-2 codes", "[serialization]") {
    const std::string path = "/tmp/bezkit_test_malformed.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_MATCHES(parse_poly_file<R>(path), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("MalformedJson")));
    std::remove(path.c_str());
    CHECK_THROWS_AS(parse_poly_file<R>("/nonexistent/poly.json"), Error);
}

TEST_CASE("matrices serialize as row-major rational strings", "[serialization]") {
    const Matrix<R> m{{R(1), R(19, 6)}, {R(-7, 16), R(0)}};
    const Json j = matrix_to_json(m);
    CHECK(j.dump() == R"([["1","19/6"],["-7/16","0"]])");
}

TEST_CASE("gcd results serialize with the documented keys in order", "[serialization]") {
    GcdResult<R> r;
    r.degree = 2;
    r.monic_coeffs = {R(1), R(-3), R(2)};
    r.method = GcdMethod::NullspacePhi;
    r.rank = 2;
    CHECK(gcd_result_to_json(r).dump() ==
          R"({"degree":2,"monic_coeffs_high_to_low":["1","-3","2"],"method":"nullspace","rank":2})");
}

TEST_CASE("verdicts serialize with a null condition on pass", "[serialization]") {
    CHECK(verdict_to_json(KernelVerdict::passed(1)).dump() ==
          R"({"pass":true,"failed_condition":null,"nullity":1})");
    CHECK(verdict_to_json(KernelVerdict::failed("annihilation", 2)).dump() ==
          R"({"pass":false,"failed_condition":"annihilation","nullity":2})");
}

TEST_CASE("float scalars parse fractions and emit round-trip decimals", "[serialization]") {
    CHECK(scalar_from_string<double>("19/6") == Catch::Approx(19.0 / 6.0));
    CHECK(scalar_from_string<double>("-0.25") == -0.25);
    const double x = 0.1 + 0.2;
    CHECK(scalar_from_string<double>(scalar_to_string(x)) == x);
}

#include <doctest.h>

#include <random>

#include "ftex/reports.hpp"
#include "ftex/ringfile.hpp"
#include "ftex/sequences.hpp"
#include "test_util.hpp"

using namespace ftex;
using namespace ftex::testing;

namespace {

RingSpec fermat2()
{
    return load_ring_from_string(R"({"prime":2,"variables":["x","y","z"],"quotient":["x^3+y^3+z^3"]})",
                                 "fermat2");
}

RingSpec cross2()  // F_2[x,y]/(xy), the coordinate cross
{
    return load_ring_from_string(R"({"prime":2,"variables":["x","y"],"quotient":["x*y"]})", "cross2");
}

ElementSequence seq_of(const RingPtr& R, const std::string& text)
{
    return ElementSequence{pl(R, text)};
}

}  // namespace

TEST_CASE("prefix ideals")
{
    auto R = make_ring(2, {"x", "y"});
    auto s = seq_of(R, "x; y");
    CHECK(s.prefix_ideal(R, 0).is_zero_ideal());
    CHECK(s.prefix_ideal(R, 1).gens() == pl(R, "x"));
    CHECK(s.prefix_ideal(R, 2).gens() == pl(R, "x; y"));
}

TEST_CASE("filter regular: coordinate cross F_2[x,y]/(xy)")
{
    RingSpec ring = cross2();
    auto R = ring.ambient();
    // x is a zerodivisor with non-finite-length annihilator: (0 : x) = (y)
    auto vx = is_filter_regular(ring, seq_of(R, "x"));
    CHECK_FALSE(vx.ok);
    CHECK(vx.failing_index == 1);
    // but x + y is filter regular (a parameter, regular off the origin)
    auto vxy = is_filter_regular(ring, seq_of(R, "x + y"));
    CHECK(vxy.ok);
    CHECK_FALSE(vxy.failing_index.has_value());
    CHECK(vxy.diagnostics.size() == 1);
}

TEST_CASE("filter regular: full-length sequences")
{
    RingSpec fermat = fermat2();
    auto S = fermat.ambient();
    CHECK(is_filter_regular(fermat, seq_of(S, "y; z")).ok);
    // repeating y: step 2 colon is the unit ideal, which the saturation
    // (a proper ideal on the 2-dimensional Fermat surface) cannot contain
    auto v = is_filter_regular(fermat, seq_of(S, "y; y"));
    CHECK_FALSE(v.ok);
    CHECK(v.failing_index == 2);
}

TEST_CASE("regular sequences")
{
    auto P = load_ring_from_string(R"({"prime":5,"variables":["x","y"],"quotient":[]})", "poly5");
    auto R = P.ambient();
    CHECK(is_regular_sequence(P, seq_of(R, "x; y")).ok);
    CHECK(is_regular_sequence(P, seq_of(R, "x^2; y^3")).ok);
    auto bad = is_regular_sequence(P, seq_of(R, "x; x*y"));
    CHECK_FALSE(bad.ok);  // y * (xy) ∈ (x) but y ∉ (x)
    CHECK(bad.failing_index == 2);

    RingSpec fermat = fermat2();
    auto S = fermat.ambient();
    CHECK(is_regular_sequence(fermat, seq_of(S, "y; z")).ok);  // hypersurface is CM

    RingSpec cross = cross2();
    auto C = cross.ambient();
    auto zd = is_regular_sequence(cross, seq_of(C, "x"));
    CHECK_FALSE(zd.ok);
    CHECK(zd.diagnostics[0].note == "zerodivisor");
    CHECK(is_regular_sequence(cross, seq_of(C, "x + y")).ok);
}

TEST_CASE("regular implies filter regular")
{
    RingSpec fermat = fermat2();
    auto S = fermat.ambient();
    std::mt19937_64 rng(51);
    int checked = 0;
    for (int it = 0; it < 40 && checked < 15; ++it) {
        auto a = random_poly(S, rng, 2);
        auto b = random_poly(S, rng, 2);
        if (a.is_zero() || b.is_zero() || a.has_constant_term() || b.has_constant_term()) continue;
        ElementSequence s{{a, b}};
        if (!is_regular_sequence(fermat, s).ok) continue;
        CHECK(is_filter_regular(fermat, s).ok);
        ++checked;
    }
    CHECK(checked >= 5);
}

TEST_CASE("parameter parts")
{
    RingSpec fermat = fermat2();
    auto S = fermat.ambient();
    CHECK(is_parameter_part(fermat, seq_of(S, "y; z")).ok);
    CHECK(is_parameter_part(fermat, seq_of(S, "y")).ok);
    auto v = is_parameter_part(fermat, seq_of(S, "y; y"));
    CHECK_FALSE(v.ok);
    CHECK(v.failing_index == 2);
    CHECK_THROWS_AS(is_parameter_part(fermat, seq_of(S, "x; y; z")), std::invalid_argument);

    RingSpec cross = cross2();
    auto C = cross.ambient();
    CHECK(is_parameter_part(cross, seq_of(C, "x + y")).ok);
    CHECK_FALSE(is_parameter_part(cross, seq_of(C, "x")).ok);
}

TEST_CASE("validation errors")
{
    RingSpec fermat = fermat2();
    auto S = fermat.ambient();
    CHECK_THROWS_AS(is_filter_regular(fermat, ElementSequence{}), std::invalid_argument);
    CHECK_THROWS_AS(is_filter_regular(fermat, seq_of(S, "y + 1")), std::invalid_argument);
    auto other = make_ring(2, {"x", "y"});
    CHECK_THROWS_AS(is_filter_regular(fermat, seq_of(other, "x")), RingMismatch);
}

TEST_CASE("power sequences of a filter regular sequence stay filter regular")
{
    // if x_1, ..., x_t is filter regular then so is x_1^{n_1}, ..., x_t^{n_t}
    RingSpec fermat = fermat2();
    auto S = fermat.ambient();
    ElementSequence base = seq_of(S, "y; z");
    REQUIRE(is_filter_regular(fermat, base).ok);
    for (int n1 : {1, 2, 3}) {
        for (int n2 : {1, 2, 3}) {
            Polynomial a = Polynomial::constant(S, 1);
            for (int i = 0; i < n1; ++i) a = a * base.elements[0];
            Polynomial b = Polynomial::constant(S, 1);
            for (int i = 0; i < n2; ++i) b = b * base.elements[1];
            CHECK(is_filter_regular(fermat, ElementSequence{{a, b}}).ok);
        }
    }
}

TEST_CASE("sampler: determinism and validity")
{
    RingSpec fermat = fermat2();
    auto s1 = sample_filter_regular(fermat, 2, 2, 1234);
    auto s2 = sample_filter_regular(fermat, 2, 2, 1234);
    CHECK(s1.elements == s2.elements);
    CHECK(s1.length() == 2);
    CHECK(is_filter_regular(fermat, s1).ok);
    for (const auto& x : s1.elements) {
        CHECK(x.is_homogeneous());
        CHECK(x.total_degree() <= 2);
    }
    auto s3 = sample_filter_regular(fermat, 2, 2, 99);
    CHECK(is_filter_regular(fermat, s3).ok);
}

TEST_CASE("sampler: the cross has x + y as its only linear choice")
{
    RingSpec cross = cross2();
    auto C = cross.ambient();
    // linear forms over F_2: x, y, x+y; only x+y is filter regular
    auto s = sample_filter_regular(cross, 1, 1, 7);
    REQUIRE(s.length() == 1);
    CHECK(s.elements[0] == pp(C, "x + y"));
}

TEST_CASE("sampler: argument validation")
{
    RingSpec fermat = fermat2();
    CHECK_THROWS_AS(sample_filter_regular(fermat, 0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_filter_regular(fermat, 3, 2, 1), std::invalid_argument);  // t > dim = 2
    CHECK_THROWS_AS(sample_filter_regular(fermat, 1, 0, 1), std::invalid_argument);
    auto inhom = load_ring_from_string(R"({"prime":2,"variables":["x","y"],"quotient":["x^2+x*y^2"]})",
                                       "inhom");
    CHECK_THROWS_AS(sample_filter_regular(inhom, 1, 1, 1), std::invalid_argument);
}

#include <doctest.h>

#include <cmath>
#include <limits>

#include "choix/core.hpp"

using namespace choix;

TEST_SUITE("core") {

TEST_CASE("option construction rejects empty and non-finite values") {
    CHECK_THROWS_AS((Option(std::vector<double>{})), InvalidInput);
    CHECK_THROWS_AS((Option({1.0, std::numeric_limits<double>::quiet_NaN()})), InvalidInput);
    CHECK_THROWS_AS((Option({std::numeric_limits<double>::infinity()})), InvalidInput);
    const Option u{1, 2, 3};
    CHECK(u.dim() == 3);
    CHECK(u[1] == 2);
    CHECK(Option::zero(2) == Option{0, 0});
    CHECK(Option::unit(3, 1) == Option{0, 1, 0});
}

TEST_CASE("arithmetic") {
    const Option u{1, -2};
    const Option v{3, 4};
    CHECK(u + v == Option{4, 2});
    CHECK(v - u == Option{2, 6});
    CHECK(-u == Option{-1, 2});
    CHECK(2.0 * u == Option{2, -4});
    CHECK_THROWS_AS((u + Option{1, 2, 3}), DimensionMismatch);
}

TEST_CASE("vector order") {
    CHECK(leq(Option{1, 2}, Option{1, 2}));
    CHECK_FALSE(strictly_less(Option{1, 2}, Option{1, 2}));
    CHECK(strictly_less(Option{1, 2}, Option{1, 3}));
    CHECK_FALSE(strictly_less(Option{1, 2}, Option{2, 1}));
    CHECK_FALSE(leq(Option{1, 2}, Option{2, 1}));
    CHECK(is_positive(Option{0, 1}));
    CHECK_FALSE(is_positive(Option{0, 0}));
    CHECK_FALSE(is_positive(Option{-1, 5}));
    CHECK(is_nonpositive(Option{0, -1}));
    CHECK(is_nonpositive(Option{0, 0}));
    CHECK_FALSE(is_nonpositive(Option{1, -1}));
    CHECK_THROWS_AS((leq(Option{1}, Option{1, 2})), DimensionMismatch);
}

TEST_CASE("tau tolerance") {
    ToleranceConfig cfg;
    cfg.tau = 1e-6;
    CHECK(leq(Option{1 + 1e-7}, Option{1}, cfg));
    CHECK_FALSE(is_positive(Option{1e-7, 0}, cfg));
    CHECK(is_positive(Option{1e-5, 0}, cfg));
    ToleranceConfig bad;
    bad.tau = -1;
    CHECK_THROWS_AS((bad.validate()), InvalidInput);
}

TEST_CASE("assessment validation") {
    Assessment a(2);
    CHECK(a.empty());
    CHECK_THROWS_AS((a.add({{}, {Option{1, 1}}})), InvalidInput);
    CHECK_THROWS_AS((a.add({{Option{1, 1, 1}}, {}})), DimensionMismatch);
    CHECK_THROWS_AS((a.add({{Option{1, 1}}, {Option{1, 1}}})), InvalidInput);
    a.add({{Option{1, 1}}, {Option{0, 0}}});
    a.add({{Option{2, 1}}, {}});
    CHECK(a.size() == 2);
    CHECK(a.prefix(1).size() == 1);
    CHECK(a.prefix(1).pairs()[0] == a.pairs()[0]);
    a.remove(0);
    CHECK(a.size() == 1);
    CHECK(a.pairs()[0].chosen[0] == Option{2, 1});
    CHECK_THROWS(a.remove(5));
}

TEST_CASE("translate and rescale") {
    const OptionSet s{Option{1, 2}, Option{3, 4}};
    const OptionSet t = translate_set(s, Option{1, 1});
    CHECK(t == OptionSet{Option{0, 1}, Option{2, 3}});
    CHECK(scale_shift(s, 2, Option{1, 0}) == OptionSet{Option{3, 4}, Option{7, 8}});
    Assessment a(2, {{{Option{1, 2}}, {Option{0, 0}}}});
    const Assessment b = rescale_assessment(a, 3, Option{1, 1});
    CHECK(b.pairs()[0].chosen[0] == Option{4, 7});
    CHECK(b.pairs()[0].rejected[0] == Option{1, 1});
    CHECK_THROWS_AS((rescale_assessment(a, 0, Option{0, 0})), InvalidInput);
    CHECK(contains(s, Option{3, 4}));
    CHECK_FALSE(contains(s, Option{3, 5}));
}

}

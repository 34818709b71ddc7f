#include <catch2/catch_amalgamated.hpp>

#include "padic/krasner.hpp"

using namespace padic;

TEST_CASE("epsilon values") {
    CHECK(epsilon(0, 3).minus_infinity == false);
    CHECK(epsilon(0, 3).value == 0);
    CHECK(epsilon(-1, 3).minus_infinity);
    CHECK(epsilon(2, 3).value == Ratio(4, 9));
    CHECK_THROWS_AS(epsilon(-2, 3), InvalidArgumentError);
}

TEST_CASE("epsilon_power handles the minus-infinity sentinel") {
    CHECK(epsilon_power(epsilon(-1, 3), 9, 3) == 0);
    CHECK(epsilon_power(epsilon(0, 3), 9, 3) == 1);
    CHECK(epsilon_power(epsilon(1, 3), 9, 3) == 27);   // 3^(9/3)
    CHECK(epsilon_power(epsilon(2, 3), 9, 3) == 81);   // 3^(9*(4/9))
    // Non-integral exponent is an arithmetic bug, reported loudly.
    CHECK_THROWS_AS(epsilon_power(epsilon(1, 3), 10, 3), ExactDivisionError);
}

TEST_CASE("mass collapses to e in the tame case") {
    for (std::int64_t p : {2, 3, 5, 7}) {
        const BaseField F = make_base_field(p, 2, 1);
        for (std::int64_t e = 1; e <= 40; ++e) {
            if (e % p == 0) continue;
            CHECK(mass_count(F, 3, e).count == e);
        }
    }
}

TEST_CASE("hand-evaluated masses") {
    const BaseField Q2 = make_base_field(2, 1, 1);
    const BaseField Q3 = make_base_field(3, 1, 1);
    CHECK(mass_count(Q2, 1, 2).count == 6);
    CHECK(mass_count(Q3, 1, 9).count == 5085);
}

TEST_CASE("mass grows strictly with the wild exponent") {
    for (std::int64_t p : {2, 3}) {
        const BaseField F = make_base_field(p, 1, 1);
        for (std::int64_t e0 : {1, 3 % p == 0 ? 5 : 3}) {
            Int previous = 0;
            std::int64_t e = e0;
            for (std::int64_t m = 0; m <= 3; ++m) {
                const Int mass = mass_count(F, 2, e).count;
                CHECK(mass > previous);
                CHECK(mass >= e);
                previous = mass;
                e *= p;
            }
        }
    }
}

TEST_CASE("mass is at least e everywhere on a grid") {
    const BaseField F = make_base_field(2, 1, 2);  // ramified base field is fine here
    for (std::int64_t f = 1; f <= 3; ++f)
        for (std::int64_t e = 1; e <= 24; ++e) CHECK(mass_count(F, f, e).count >= e);
}

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "padic/tame.hpp"

using namespace padic;

namespace {

// Elements of the abstract group <mu, nu : mu^b = 1, nu^J = mu^(u h),
// nu mu nu^(-1) = mu^(q^c_h)>, written mu^i nu^j with 0 <= i < b,
// 0 <= j < J. Multiplication follows from nu^j mu = mu^(q^(c_h j)) nu^j.
struct PresentationGroup {
    std::int64_t b, J;
    std::int64_t q_ch_mod_b;  // q^c_h mod b
    std::int64_t uh_mod_b;    // u*h mod b

    std::pair<std::int64_t, std::int64_t> multiply(std::pair<std::int64_t, std::int64_t> x,
                                                   std::pair<std::int64_t, std::int64_t> y) const {
        std::int64_t twist = 1;
        for (std::int64_t k = 0; k < x.second; ++k) twist = (twist * q_ch_mod_b) % b;
        std::int64_t i = (x.first + y.first * twist) % b;
        std::int64_t j = x.second + y.second;
        if (j >= J) {
            j -= J;
            i = (i + uh_mod_b) % b;
        }
        return {i, j};
    }

    std::int64_t order(std::pair<std::int64_t, std::int64_t> g) const {
        std::pair<std::int64_t, std::int64_t> acc = g;
        std::int64_t k = 1;
        while (acc != std::pair<std::int64_t, std::int64_t>{0, 0}) {
            acc = multiply(acc, g);
            ++k;
        }
        return k;
    }

    std::pair<std::int64_t, std::int64_t> power(std::pair<std::int64_t, std::int64_t> g,
                                                std::int64_t k) const {
        std::pair<std::int64_t, std::int64_t> acc{0, 0};
        for (std::int64_t s = 0; s < k; ++s) acc = multiply(acc, g);
        return acc;
    }
};

PresentationGroup presentation(const TameData& d) {
    PresentationGroup g;
    g.b = to_int64(d.b);
    g.J = d.f / d.c_h;
    g.q_ch_mod_b = to_int64(mod_pow(d.q, Int(d.c_h), d.b));
    g.uh_mod_b = to_int64(mod_floor(d.u * d.h, d.b));
    return g;
}

}  // namespace

TEST_CASE("compute_c_h basics") {
    CHECK(compute_c_h(2, 3, 0) == 1);
    CHECK(compute_c_h(2, 3, 1) == 2);
    CHECK(compute_c_h(2, 3, 2) == 2);
}

TEST_CASE("tame_data worked examples") {
    const BaseField Q2 = make_base_field(2, 1, 1);
    const BaseField Q3 = make_base_field(3, 1, 1);

    TameData d = tame_data(Q2, 2, 3, 1);
    CHECK(d.b == 3);
    CHECK(d.c_h == 2);
    CHECK(d.aut_order == 3);

    d = tame_data(Q3, 4, 1, 0);
    CHECK(d.b == 1);
    CHECK(d.c_h == 1);
    CHECK(d.aut_order == 4);

    d = tame_data(Q3, 1, 2, 1);
    CHECK(d.b == 2);
    CHECK(d.c_h == 1);
    CHECK(d.aut_order == 2);
}

TEST_CASE("tame_data validates h, wildness, and u overrides") {
    const BaseField Q2 = make_base_field(2, 1, 1);
    CHECK_THROWS_AS(tame_data(Q2, 1, 2, 0), UnsupportedCase);
    CHECK_THROWS_AS(tame_data(Q2, 1, 3, 3), InvalidArgumentError);

    const TameData d = tame_data(Q2, 2, 3, 1);
    CHECK_NOTHROW(tame_data(Q2, 2, 3, 1, d.u + d.u_stride));
    CHECK_THROWS_AS(tame_data(Q2, 2, 3, 1, d.u + 1 + d.u_stride * 3), InvalidArgumentError);
}

TEST_CASE("m_h and v_h are integral across a grid, for every u choice") {
    for (std::int64_t p : {2, 3, 5}) {
        const BaseField F = make_base_field(p, 2, 1);
        for (std::int64_t f = 1; f <= 4; ++f)
            for (std::int64_t e = 1; e <= 10; ++e) {
                if (e % p == 0) continue;
                for (std::int64_t h = 0; h < e; ++h) {
                    const TameData base = tame_data(F, f, e, h);
                    for (std::int64_t k = 0; k <= 3; ++k)
                        CHECK_NOTHROW(tame_data(F, f, e, h, base.u + k * base.u_stride));
                }
            }
    }
}

TEST_CASE("t(h,i,0) = i and o = f-part times b/(b,i)") {
    const BaseField Q2 = make_base_field(2, 1, 1);
    const TameData d = tame_data(Q2, 2, 3, 0);
    CHECK(t_param(d, 0, 0) == 0);
    CHECK(o_param(d, 0, 0) == 1);
    CHECK(t_param(d, 1, 0) == 1);
    CHECK(o_param(d, 1, 0) == 3);  // b/(b,1) = 3, residue part 1
}

TEST_CASE("t and o match brute-force orders in the automorphism presentation") {
    for (std::int64_t p : {2, 3, 5}) {
        for (std::int64_t f1 = 1; f1 <= 2; ++f1) {
            const BaseField F = make_base_field(p, f1, 1);
            for (std::int64_t f = 1; f <= 6; ++f)
                for (std::int64_t e = 1; e <= 12; ++e) {
                    if (e % p == 0) continue;
                    for (std::int64_t h = 0; h < e; ++h) {
                        const TameData d = tame_data(F, f, e, h);
                        const PresentationGroup g = presentation(d);
                        for (std::int64_t i = 0; i < g.b; ++i)
                            for (std::int64_t j = 0; j < g.J; ++j) {
                                CHECK(o_param(d, i, j) == g.order({i, j}));
                                // The power f/(f, c_h j) of mu^i nu^j is the
                                // inertia element mu^t.
                                const std::int64_t k =
                                    d.f / to_int64(gcd(Int(d.f), Int(d.c_h * j)));
                                const auto landed = g.power({i, j}, k);
                                CHECK(landed.second == 0);
                                CHECK(landed.first == to_int64(mod_floor(t_param(d, i, j), d.b)));
                            }
                    }
                }
        }
    }
}

TEST_CASE("count_tame_prop41 examples") {
    const BaseField Q2 = make_base_field(2, 1, 1);
    const BaseField Q3 = make_base_field(3, 1, 1);
    CHECK(count_tame_prop41(Q2, 1, 3).count == 1);
    CHECK(count_tame_prop41(Q3, 1, 2).count == 2);  // the two ramified quadratics of Q_3
    CHECK(count_tame_prop41(Q2, 2, 3).count == 2);
    CHECK_THROWS_AS(count_tame_prop41(Q2, 1, 4), UnsupportedCase);
}

TEST_CASE("count_tame_gcdsum examples") {
    const BaseField Q2 = make_base_field(2, 1, 1);
    const BaseField Q3 = make_base_field(3, 1, 1);
    CHECK(count_tame_gcdsum(Q2, 2, 3).count == 2);  // ((2^2-1,3) + (2-1,3))/2
    CHECK(count_tame_gcdsum(Q3, 1, 2).count == 2);
    CHECK(count_tame_gcdsum(make_base_field(7, 2, 1), 5, 1).count == 1);
}

TEST_CASE("count_tame_divisor examples and the Q_p restriction") {
    const BaseField Q2 = make_base_field(2, 1, 1);
    const BaseField Q3 = make_base_field(3, 1, 1);
    CHECK(count_tame_divisor(Q2, 2, 3).count == 2);
    CHECK(count_tame_divisor(Q3, 1, 2).count == 2);
    CHECK(count_tame_divisor(Q2, 4, 1).count == 1);
    CHECK_THROWS_AS(count_tame_divisor(make_base_field(2, 2, 1), 2, 3), UnsupportedCase);
    CHECK_THROWS_AS(count_tame_divisor(make_base_field(2, 1, 2), 2, 3), UnsupportedCase);
}

TEST_CASE("triple agreement on a compact grid") {
    for (std::int64_t p : {2, 3, 5}) {
        for (std::int64_t f1 = 1; f1 <= 2; ++f1) {
            const BaseField F = make_base_field(p, f1, 1);
            for (std::int64_t f = 1; f <= 4; ++f)
                for (std::int64_t e = 1; e <= 20; ++e) {
                    if (e % p == 0) continue;
                    const Int a = count_tame_prop41(F, f, e).count;
                    CHECK(a == count_tame_gcdsum(F, f, e).count);
                    if (f1 == 1) CHECK(a == count_tame_divisor(F, f, e).count);
                }
        }
    }
}

TEST_CASE("divisor-sum form generalizes from p to q on unramified fields") {
    for (std::int64_t p : {2, 3, 5}) {
        for (std::int64_t f1 = 2; f1 <= 3; ++f1) {
            const BaseField F = make_base_field(p, f1, 1);
            for (std::int64_t f = 1; f <= 4; ++f)
                for (std::int64_t e = 1; e <= 20; ++e) {
                    if (e % p == 0) continue;
                    CHECK(divisor_sum_count(F.q, f, e) == count_tame_gcdsum(F, f, e).count);
                }
        }
    }
}

TEST_CASE("automorphism orders sum to f*e times the class count") {
    for (std::int64_t p : {2, 3}) {
        const BaseField F = make_base_field(p, 2, 1);
        for (std::int64_t f = 1; f <= 4; ++f)
            for (std::int64_t e = 1; e <= 15; ++e) {
                if (e % p == 0) continue;
                Int total = 0;
                Int b = 0;
                for (std::int64_t h = 0; h < e; ++h) {
                    const TameData d = tame_data(F, f, e, h);
                    total += d.aut_order;
                    b = d.b;
                    CHECK((d.b * f) % d.aut_order == 0);
                }
                CHECK(total == Int(f) * e * count_tame_prop41(F, f, e).count);
            }
    }
}

#pragma once

#include <cstdint>

#include "padic/exact.hpp"
#include "padic/fields.hpp"

namespace padic {

// epsilon(s) = 1/p + 1/p^2 + ... + 1/p^s, with epsilon(0) = 0 and
// epsilon(-1) = -infinity. The -infinity case is a genuine sum term:
// p^(epsilon(-1)*N) contributes exactly 0.
struct Epsilon {
    bool minus_infinity = false;
    Ratio value;
};

inline Epsilon epsilon(std::int64_t s, const Int& p) {
    if (s < -1) throw InvalidArgumentError("epsilon: s must be >= -1");
    if (s == -1) return {true, Ratio(0)};
    Epsilon eps;
    for (std::int64_t k = 1; k <= s; ++k) eps.value += Ratio(1, pow_int(p, k));
    return eps;
}

// p^(epsilon(s) * N); the exponent must be an integer (it always is when
// p^s | N), anything else is an arithmetic bug and throws.
inline Int epsilon_power(const Epsilon& eps, const Int& N, const Int& p) {
    if (eps.minus_infinity) return 0;
    const Int exponent = ratio_to_int(Ratio(eps.value) * Ratio(N));
    return pow_int(p, to_int64(exponent));
}

// The number of extensions K/F inside a fixed algebraic closure with the
// given residue degree and ramification index.
struct MassCount {
    Int count;
    Int N;  // f * e * [F:Q_p]
};

inline MassCount mass_count(const BaseField& F, std::int64_t f, std::int64_t e) {
    const ExtensionProfile profile = make_profile(F, f, e);
    const Int N = Int(f) * Int(e) * Int(F.n_base);
    Int total = 0;
    for (std::int64_t s = 0; s <= profile.m; ++s) {
        const Int high = epsilon_power(epsilon(s, F.p), N, F.p);
        const Int low = epsilon_power(epsilon(s - 1, F.p), N, F.p);
        total += pow_int(F.p, s) * (high - low);
    }
    return {Int(e) * total, N};
}

}  // namespace padic

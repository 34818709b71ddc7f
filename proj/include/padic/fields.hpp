#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "padic/exact.hpp"

namespace padic {

// Ramification index e_p and residue degree f_p of F(zeta_p)/F. These are
// genuine extra field data when F/Q_p is ramified: they are not a function
// of (p, f1, e1) alone, so they default only for unramified F.
struct CyclotomicData {
    std::int64_t e_p = 1;
    std::int64_t f_p = 1;
    enum class Source { ComputedDefault, UserSupplied };
    Source source = Source::ComputedDefault;
};

// The ground field F/Q_p, described by the residue degree f1 and
// ramification index e1, with q = p^f1 and n_base = f1*e1 = [F:Q_p].
struct BaseField {
    Int p;
    std::int64_t f1 = 1;
    std::int64_t e1 = 1;
    Int q;
    std::int64_t n_base = 1;
    std::optional<CyclotomicData> cyclo_data;

    bool is_Qp() const { return f1 == 1 && e1 == 1; }

    const CyclotomicData& cyclo() const {
        if (!cyclo_data) throw CyclotomicDataRequired();
        return *cyclo_data;
    }
};

inline BaseField make_base_field(const Int& p, std::int64_t f1, std::int64_t e1,
                                 std::optional<std::int64_t> e_p = std::nullopt,
                                 std::optional<std::int64_t> f_p = std::nullopt) {
    if (!is_prime(p)) throw InvalidArgumentError("base field: p = " + p.str() + " is not prime");
    if (f1 < 1 || e1 < 1) throw InvalidArgumentError("base field: f1 and e1 must be >= 1");
    if (e_p.has_value() != f_p.has_value())
        throw InvalidCyclotomicData("invalid cyclotomic data: supply both e_p and f_p or neither");

    BaseField F;
    F.p = p;
    F.f1 = f1;
    F.e1 = e1;
    F.q = pow_int(p, f1);
    F.n_base = f1 * e1;

    if (e_p) {
        if (*e_p < 1 || *f_p < 1)
            throw InvalidCyclotomicData("invalid cyclotomic data: e_p and f_p must be >= 1");
        if ((p - 1) % (Int(*e_p) * Int(*f_p)) != 0)
            throw InvalidCyclotomicData("invalid cyclotomic data: e_p*f_p = " +
                                        std::to_string(*e_p * *f_p) + " does not divide p-1 = " +
                                        Int(p - 1).str());
        F.cyclo_data = CyclotomicData{*e_p, *f_p, CyclotomicData::Source::UserSupplied};
    } else if (e1 == 1) {
        // F unramified: F(zeta_p)/F is totally ramified of degree p-1
        // (trivial for p = 2, where zeta_2 = -1 already lies in F).
        CyclotomicData c;
        c.e_p = p == 2 ? 1 : to_int64(p - 1);
        c.f_p = 1;
        c.source = CyclotomicData::Source::ComputedDefault;
        F.cyclo_data = c;
    }
    // e1 > 1 without an override: cyclo_data stays empty and any consumer
    // that needs it fails with CyclotomicDataRequired.
    return F;
}

// Target extension shape (f, e), with the wild part split off: e = p^m * e0.
struct ExtensionProfile {
    std::int64_t f = 1;
    std::int64_t e = 1;
    std::int64_t m = 0;   // nu_p(e)
    std::int64_t e0 = 1;  // tame part
};

inline ExtensionProfile make_profile(const BaseField& F, std::int64_t f, std::int64_t e) {
    if (f < 1 || e < 1) throw InvalidArgumentError("profile: f and e must be >= 1");
    const PadicValuation v = padic_valuation(F.p, Int(e));
    return {f, e, v.m, to_int64(v.n0)};
}

enum class RamificationCase { Tame, WildP, WildP2, Unsupported };

inline RamificationCase dispatch_case(const ExtensionProfile& profile) {
    switch (profile.m) {
        case 0: return RamificationCase::Tame;
        case 1: return RamificationCase::WildP;
        case 2: return RamificationCase::WildP2;
        default: return RamificationCase::Unsupported;
    }
}

inline std::string to_string(RamificationCase c) {
    switch (c) {
        case RamificationCase::Tame: return "tame";
        case RamificationCase::WildP: return "wild-p";
        case RamificationCase::WildP2: return "wild-p2";
        default: return "unsupported";
    }
}

}  // namespace padic

#pragma once

#include <cstdint>

#include "padic/fields.hpp"
#include "padic/report.hpp"
#include "padic/tame.hpp"
#include "padic/wildp.hpp"
#include "padic/wildp2.hpp"

namespace padic {

// Isomorphism-class count of extensions of F with the given residue degree
// and ramification index, dispatched on nu_p(e).
inline CountReport count_classes(const BaseField& F, std::int64_t f, std::int64_t e) {
    switch (dispatch_case(make_profile(F, f, e))) {
        case RamificationCase::Tame: return count_tame_prop41(F, f, e);
        case RamificationCase::WildP: return count_wild_p(F, f, e);
        case RamificationCase::WildP2: return count_wild_p2(F, f, e);
        case RamificationCase::Unsupported: break;
    }
    throw UnsupportedCase("unsupported case: p^3 divides e");
}

}  // namespace padic

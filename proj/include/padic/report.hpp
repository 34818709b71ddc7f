#pragma once

#include <string>

#include "padic/exact.hpp"

namespace padic {

// An exact count plus the formula that produced it and any applicability
// notes (assumption diagnostics, untested-territory flags).
struct CountReport {
    Int count;
    std::string method;
    std::string diagnostics;
};

}  // namespace padic

#pragma once

#include "padic/chainrings.hpp"   // IWYU pragma: export
#include "padic/classes.hpp"      // IWYU pragma: export
#include "padic/errors.hpp"       // IWYU pragma: export
#include "padic/exact.hpp"        // IWYU pragma: export
#include "padic/fields.hpp"       // IWYU pragma: export
#include "padic/io.hpp"           // IWYU pragma: export
#include "padic/krasner.hpp"      // IWYU pragma: export
#include "padic/oracle.hpp"       // IWYU pragma: export
#include "padic/report.hpp"       // IWYU pragma: export
#include "padic/tame.hpp"         // IWYU pragma: export
#include "padic/validate.hpp"     // IWYU pragma: export
#include "padic/wildp.hpp"        // IWYU pragma: export
#include "padic/wildp2.hpp"       // IWYU pragma: export

#pragma once

#include "pnt/sieve.hpp"

namespace fixtures {

// Shared across test translation units; built once per process.
inline const pnt::Tables& tables_1e6() {
    static const pnt::Tables t = pnt::Tables::build(1'000'000);
    return t;
}

inline const pnt::Tables& tables_1e4() {
    static const pnt::Tables t = pnt::Tables::build(10'000);
    return t;
}

}  // namespace fixtures

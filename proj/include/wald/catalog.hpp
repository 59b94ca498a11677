#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wald/geometry.hpp"
#include "wald/rational.hpp"

namespace wald::catalog {

struct ExpectedData {
    Rational alphahat;
    // First-difference period, when the source states one; measured
    // periods live in the test expectations, not here.
    std::optional<std::vector<int>> period;
};

struct CatalogEntry {
    std::string name;
    std::size_t s = 0;
    IncidencePattern pattern;
    Config realization;
    ExpectedData expected;
    // Horizon used by the acceptance table: preperiod + two full periods
    // (10 where the period length is not pinned in advance).
    int acceptance_horizon = 10;
};

/// Default instances: the named configurations plus LINE(4),
/// NEAR_PENCIL(4..8) and CONIC(6).
std::vector<std::string> list();

/// Lookup by name.  Parametrized families take the size inline, e.g.
/// "LINE(7)", "NEAR_PENCIL(5)", "CONIC(8)"; s is capped at 12.
/// Every returned entry has a realization validated against its pattern.
const CatalogEntry& entry(const std::string& name);

Config build(const std::string& name);

ExpectedData expected(const std::string& name);

bool validate_realization(const Config& z, const CatalogEntry& e);

} // namespace wald::catalog

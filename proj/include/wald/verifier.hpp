#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wald/fatpoint.hpp"
#include "wald/geometry.hpp"
#include "wald/waldschmidt.hpp"

namespace wald {

enum class Verdict { Line, NearPencil, ConicContained, CatalogType, Unknown };

std::string verdict_name(const struct TypeMatch& t);

struct TypeMatch {
    Verdict verdict = Verdict::Unknown;
    std::string catalog_name;                          // set for CatalogType
    std::optional<std::vector<std::size_t>> labeling;  // pattern label -> point index
    std::optional<std::array<BigInt, 6>> conic;        // witness for ConicContained
};

/// Structural classification: Line, NearPencil (exactly s-1 collinear),
/// ConicContained, the unique matching catalog pattern, else Unknown.
TypeMatch classify_small(const Config& z);

struct TheoremBReport {
    int max_m = 0;
    std::vector<int> diffs;
    int max_run = 0;       // longest run of consecutive differences equal to 2
    int run_position = 0;  // 1-based index of its first element, 0 when no run
    bool on_conic = false;
    bool violation = false;  // run >= 4 while not contained in a conic
};

/// Longest run of 2's in the difference list and the 1-based position of
/// its first element (0 when there is no 2 at all).
std::pair<int, int> theoremB_scan(const std::vector<int>& diffs);

TheoremBReport theoremB_check(Engine& engine, const Config& z, int max_m,
                              ModePolicy policy = ModePolicy::CertifiedAll);

struct SubsetVerdict {
    std::size_t dropped = 0;
    TypeMatch match;
};

/// Classification of each 8-point complement of a 9-point configuration,
/// in dropped-point-index order.
std::vector<SubsetVerdict> subset_survey(const Config& z);

enum class TheoremAVerdict { Pass, Fail, NotApplicable };

std::string theoremA_verdict_name(TheoremAVerdict v);

/// Instance check: when the certified upper bound is < 5/2, the
/// configuration must be contained in a conic or match the nine-point
/// pattern with constant 17/7.
TheoremAVerdict theoremA_check(Engine& engine, const Config& z, int max_m,
                               ModePolicy policy = ModePolicy::CertifiedAll);

} // namespace wald

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wald/fatpoint.hpp"
#include "wald/rational.hpp"

namespace wald {

/// Esnault-Viehweg: (alpha_k + 1)/(k + n - 1) <= alpha_m/m for all m >= k.
Rational ev_lower_bound(int alpha_k, int k, int n);

/// Chudnovsky: (alpha_1 + n - 1)/n, a theorem for n = 2.
Rational chudnovsky_lower_bound(int alpha_1, int n);

struct LowerBound {
    Rational value;
    int witness_k = 0;      // the k achieving the max (1 for chudnovsky)
    int witness_alpha = 0;  // alpha_k at the witness
    std::string formula;    // "esnault-viehweg" or "chudnovsky"
};

struct UpperBound {
    Rational value;
    int witness_m = 0;      // smallest m attaining the min
    int witness_alpha = 0;
};

/// min over computed m of alpha_m/m; ties go to the smallest m.
UpperBound upper_bound(const InitialSequence& seq);

struct PeriodGuess {
    std::vector<int> preperiod;
    std::vector<int> period;
    int repetitions = 0;  // full repetitions observed beyond the preperiod
};

/// Smallest preperiod (<= floor(len/3)), then shortest period, such that
/// the tail is the period repeated >= 2 full times (partial last
/// repetition allowed but must be consistent).
std::optional<PeriodGuess> detect_period(const std::vector<int>& diffs);

enum class BoundStatus { ExactCertified, PeriodConjectured, BoundedOnly };

std::string bound_status_name(BoundStatus s);

struct BoundState {
    LowerBound lower;
    UpperBound upper;
    BoundStatus status = BoundStatus::BoundedOnly;
    std::optional<Rational> value;
    std::optional<PeriodGuess> period;
    InitialSequence sequence;
};

/// Bracket and (when possible) pin the Waldschmidt constant from the
/// initial sequence up to horizon max_m.
BoundState certify(Engine& engine, const Config& z, int max_m,
                   ModePolicy policy = ModePolicy::CertifiedAll);

/// Same bracketing logic on an already computed sequence.
BoundState certify_from_sequence(const InitialSequence& seq);

} // namespace wald

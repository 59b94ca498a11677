#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wald/geometry.hpp"
#include "wald/matrix.hpp"
#include "wald/primes.hpp"
#include "wald/rational.hpp"

namespace wald {

enum class Certainty { Certified, ModularConsensus };

enum class Mode { Certified, Heuristic };

/// Per-multiplicity mode selection for sequence runs.  Auto uses the
/// certified path for m <= 6 and the heuristic path above.
enum class ModePolicy { CertifiedAll, HeuristicAll, Auto };

Mode mode_for(ModePolicy policy, int m);
std::string certainty_name(Certainty c);

struct DimResult {
    std::size_t dim = 0;
    Certainty certainty = Certainty::Certified;
    std::vector<std::uint64_t> primes_used;
    // Present iff dim > 0 in certified mode: one exactly verified kernel
    // vector in the monomial_basis(d) coordinates.
    std::optional<std::vector<BigInt>> witness;
};

/// All (a,b,c) with a+b+c = d, graded-lexicographic (a desc, then b desc).
std::vector<std::array<int, 3>> monomial_basis(int d);

/// Vanishing conditions for multiplicity m at every point of Z on forms
/// of degree d: one row per (point, order m-1 partial derivative), one
/// column per degree-d monomial.  Kernel dimension = dim (I^(m))_d.
IntMatrix conditions_matrix(const Config& z, int m, int d);

struct SequenceEntry {
    int m = 0;
    int alpha = 0;
    Certainty certainty = Certainty::Certified;
};

struct InitialSequence {
    std::string label;
    std::vector<SequenceEntry> entries;

    std::vector<int> values() const;
    /// Differences alpha_m - alpha_{m-1} with alpha_0 = 0 (so the list
    /// has one entry per computed m, starting with alpha_1).
    std::vector<int> first_differences() const;
};

/// 64-bit FNV-1a hash of the sorted canonical point list; identifies a
/// configuration up to point order in the cache.
std::string config_hash(const Config& z);

class Engine {
public:
    explicit Engine(PrimeSet primes = PrimeSet::default_set(), std::string cache_path = "");

    /// dim (I^(m))_d with a certificate.  d < m short-circuits to 0.
    DimResult system_dimension(const Config& z, int m, int d, Mode mode);

    /// Least d with dim (I^(m))_d > 0.
    int initial_degree(const Config& z, int m, Mode mode);
    int initial_degree(const Config& z, int m, ModePolicy policy = ModePolicy::CertifiedAll);

    InitialSequence initial_sequence(const Config& z, int max_m,
                                     ModePolicy policy = ModePolicy::CertifiedAll);

    const PrimeSet& primes() const { return primes_; }

private:
    DimResult compute_dimension(const Config& z, int m, int d, Mode mode);
    int initial_degree_with_prior(const Config& z, int m, Mode mode, int alpha_prev, int alpha_1);

    PrimeSet primes_;
    std::string cache_path_;
    std::map<std::string, DimResult> cache_;
    std::mutex mutex_;
};

} // namespace wald

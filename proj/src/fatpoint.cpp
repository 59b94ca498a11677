#include "wald/fatpoint.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "wald/linalg.hpp"
#include "wald/modular.hpp"

namespace wald {

namespace {

using nlohmann::json;

BigInt falling(const BigInt& base, int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= base - i;
    return r;
}

BigInt pow_nonneg(const BigInt& base, int e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

std::string cache_key(const std::string& hash, int m, int d, Mode mode) {
    return hash + "|" + std::to_string(m) + "|" + std::to_string(d) + "|" +
           (mode == Mode::Certified ? "certified" : "heuristic");
}

json dim_to_json(const std::string& hash, int m, int d, const DimResult& r) {
    json j;
    j["config_hash"] = hash;
    j["m"] = m;
    j["d"] = d;
    j["dim"] = r.dim;
    j["certainty"] = certainty_name(r.certainty);
    if (r.witness) {
        json w = json::array();
        for (const BigInt& x : *r.witness) w.push_back(x.get_str());
        j["witness"] = std::move(w);
    }
    return j;
}

} // namespace

Mode mode_for(ModePolicy policy, int m) {
    switch (policy) {
        case ModePolicy::CertifiedAll: return Mode::Certified;
        case ModePolicy::HeuristicAll: return Mode::Heuristic;
        case ModePolicy::Auto: return m <= 6 ? Mode::Certified : Mode::Heuristic;
    }
    throw std::logic_error("unreachable");
}

std::string certainty_name(Certainty c) {
    return c == Certainty::Certified ? "Certified" : "ModularConsensus";
}

std::vector<std::array<int, 3>> monomial_basis(int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    std::vector<std::array<int, 3>> out;
    out.reserve((d + 2) * (d + 1) / 2);
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            out.push_back({a, b, d - a - b});
    return out;
}

IntMatrix conditions_matrix(const Config& z, int m, int d) {
    if (m < 1) throw std::invalid_argument("multiplicity must be >= 1");
    if (d < m) throw std::invalid_argument("conditions_matrix requires d >= m");
    const auto cols = monomial_basis(d);
    const auto partials = monomial_basis(m - 1);
    IntMatrix mat(z.size() * partials.size(), cols.size());
    std::size_t row = 0;
    for (const Pt& p : z.points) {
        for (const auto& [a, b, c] : partials) {
            for (std::size_t j = 0; j < cols.size(); ++j) {
                const auto& [e, f, g] = cols[j];
                if (e < a || f < b || g < c) continue;  // entry stays 0
                mat.at(row, j) = falling(e, a) * falling(f, b) * falling(g, c) *
                                 pow_nonneg(p.x, e - a) * pow_nonneg(p.y, f - b) *
                                 pow_nonneg(p.z, g - c);
            }
            ++row;
        }
    }
    return mat;
}

std::vector<int> InitialSequence::values() const {
    std::vector<int> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(e.alpha);
    return v;
}

std::vector<int> InitialSequence::first_differences() const {
    std::vector<int> d;
    int prev = 0;  // alpha_0 = 0 by convention
    for (const auto& e : entries) {
        d.push_back(e.alpha - prev);
        prev = e.alpha;
    }
    return d;
}

std::string config_hash(const Config& z) {
    std::vector<Pt> pts = z.points;
    std::sort(pts.begin(), pts.end());
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    for (const Pt& p : pts) mix(p.str());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Engine::Engine(PrimeSet primes, std::string cache_path)
    : primes_(std::move(primes)), cache_path_(std::move(cache_path)) {
    if (cache_path_.empty()) return;
    std::ifstream in(cache_path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("config_hash") || !j.contains("m") ||
            !j.contains("d") || !j.contains("dim") || !j.contains("certainty"))
            continue;  // tolerate trailing garbage from interrupted runs
        DimResult r;
        r.dim = j["dim"].get<std::size_t>();
        const std::string cert = j["certainty"].get<std::string>();
        r.certainty = cert == "Certified" ? Certainty::Certified : Certainty::ModularConsensus;
        if (j.contains("witness")) {
            std::vector<BigInt> w;
            for (const auto& s : j["witness"]) w.emplace_back(s.get<std::string>());
            r.witness = std::move(w);
        }
        const Mode mode = r.certainty == Certainty::Certified ? Mode::Certified : Mode::Heuristic;
        cache_[cache_key(j["config_hash"].get<std::string>(), j["m"].get<int>(),
                         j["d"].get<int>(), mode)] = std::move(r);
    }
}

DimResult Engine::system_dimension(const Config& z, int m, int d, Mode mode) {
    if (m < 1) throw std::invalid_argument("multiplicity must be >= 1");
    if (d < m) return DimResult{0, Certainty::Certified, {}, std::nullopt};

    const std::string hash = config_hash(z);
    const std::string key = cache_key(hash, m, d, mode);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            // A certified positive-dimension record must carry a witness
            // that still annihilates: re-verify rather than trust the file.
            const DimResult& r = it->second;
            bool trusted = true;
            if (r.certainty == Certainty::Certified && r.dim > 0)
                trusted = r.witness && conditions_matrix(z, m, d).annihilates(*r.witness);
            if (trusted) return r;
            cache_.erase(it);
        }
    }

    DimResult r = compute_dimension(z, m, d, mode);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        cache_[key] = r;
        if (!cache_path_.empty()) {
            std::ofstream out(cache_path_, std::ios::app);
            out << dim_to_json(hash, m, d, r).dump() << "\n";
        }
    }
    return r;
}

DimResult Engine::compute_dimension(const Config& z, int m, int d, Mode mode) {
    IntMatrix mat = conditions_matrix(z, m, d);
    DimResult out;
    if (mode == Mode::Certified) {
        CertifiedKernel k = kernel_basis_certified(mat, primes_);
        out.dim = k.basis.size();
        out.certainty = Certainty::Certified;
        out.primes_used = std::move(k.primes_used);
        if (!k.basis.empty()) out.witness = std::move(k.basis.front());
        return out;
    }
    // Heuristic: rank agreement across three distinct primes.  Ranks mod p
    // never exceed the rational rank, so the consensus is on the maximum.
    std::size_t best = 0, votes = 0;
    std::vector<std::uint64_t> voters;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        const std::size_t r = rank_mod_p(mat, primes_[i]);
        if (r > best) {
            best = r;
            votes = 0;
            voters.clear();
        }
        if (r == best) {
            ++votes;
            voters.push_back(primes_[i]);
        }
        if (votes == 3) {
            out.dim = mat.cols() - best;
            out.certainty = Certainty::ModularConsensus;
            out.primes_used = std::move(voters);
            return out;
        }
    }
    throw InconclusiveError("no 3-prime rank consensus within the prime budget");
}

int Engine::initial_degree_with_prior(const Config& z, int m, Mode mode, int alpha_prev,
                                      int alpha_1) {
    const std::size_t rows = z.size() * choose2(static_cast<std::size_t>(m) + 1);
    int generic = m;
    while (static_cast<std::size_t>(generic + 2) * (generic + 1) / 2 <= rows) ++generic;
    int lo = std::max(m, alpha_prev + 1);
    int hi = generic;
    if (m > 1) hi = std::min(hi, alpha_prev + alpha_1);
    for (int d = lo; d <= hi; ++d)
        if (system_dimension(z, m, d, mode).dim > 0) return d;
    throw std::logic_error("no nonzero form found inside a mathematically guaranteed bracket");
}

int Engine::initial_degree(const Config& z, int m, Mode mode) {
    if (m < 1) throw std::invalid_argument("multiplicity must be >= 1");
    int alpha_1 = 0, alpha_prev = 0;
    for (int mm = 1; mm <= m; ++mm) {
        alpha_prev = initial_degree_with_prior(z, mm, mode, alpha_prev, alpha_1);
        if (mm == 1) alpha_1 = alpha_prev;
    }
    return alpha_prev;
}

int Engine::initial_degree(const Config& z, int m, ModePolicy policy) {
    if (m < 1) throw std::invalid_argument("multiplicity must be >= 1");
    int alpha_1 = 0, alpha_prev = 0;
    for (int mm = 1; mm <= m; ++mm) {
        alpha_prev = initial_degree_with_prior(z, mm, mode_for(policy, mm), alpha_prev, alpha_1);
        if (mm == 1) alpha_1 = alpha_prev;
    }
    return alpha_prev;
}

InitialSequence Engine::initial_sequence(const Config& z, int max_m, ModePolicy policy) {
    if (max_m < 1) throw std::invalid_argument("horizon must be >= 1");
    InitialSequence seq;
    seq.label = z.label;
    int alpha_1 = 0, alpha_prev = 0;
    for (int m = 1; m <= max_m; ++m) {
        const Mode mode = mode_for(policy, m);
        const int a = initial_degree_with_prior(z, m, mode, alpha_prev, alpha_1);
        seq.entries.push_back({m, a, mode == Mode::Certified ? Certainty::Certified
                                                             : Certainty::ModularConsensus});
        alpha_prev = a;
        if (m == 1) alpha_1 = a;
    }
    // Post-hoc invariant enforcement.
    const auto v = seq.values();
    for (int m = 1; m <= max_m; ++m) {
        if (v[m - 1] < m) throw std::logic_error("alpha_m < m");
        if (m >= 2 && v[m - 1] <= v[m - 2]) throw std::logic_error("sequence not strictly growing");
        for (int k = 1; k < m; ++k)
            if (v[m - 1] > v[k - 1] + v[m - k - 1])
                throw std::logic_error("sequence not subadditive");
    }
    return seq;
}

} // namespace wald

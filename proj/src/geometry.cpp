#include "wald/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "wald/linalg.hpp"

namespace wald {

namespace {

Pt normalize(BigInt x, BigInt y, BigInt z) {
    if (x == 0 && y == 0 && z == 0)
        throw std::invalid_argument("(0:0:0) is not a point of the projective plane");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    const BigInt& lead = x != 0 ? x : (y != 0 ? y : z);
    if (lead < 0) { x = -x; y = -y; z = -z; }
    return Pt{std::move(x), std::move(y), std::move(z)};
}

} // namespace

bool Pt::operator<(const Pt& o) const {
    if (int c = cmp(x, o.x)) return c < 0;
    if (int c = cmp(y, o.y)) return c < 0;
    return cmp(z, o.z) < 0;
}

std::string Pt::str() const {
    return "(" + x.get_str() + ":" + y.get_str() + ":" + z.get_str() + ")";
}

Pt canonicalize_point(const BigInt& x, const BigInt& y, const BigInt& z) {
    return normalize(x, y, z);
}

Pt canonicalize_point(const Rational& x, const Rational& y, const Rational& z) {
    BigInt lcm = 1;
    mpz_lcm(lcm.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), z.get_den().get_mpz_t());
    Rational l(lcm);
    return normalize(Rational(x * l).get_num(), Rational(y * l).get_num(),
                     Rational(z * l).get_num());
}

Config::Config(std::string label_, std::vector<Pt> pts)
    : label(std::move(label_)), points(std::move(pts)) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        Pt canon = normalize(points[i].x, points[i].y, points[i].z);
        if (!(canon == points[i]))
            throw std::invalid_argument("point " + std::to_string(i) + " is not canonical: " +
                                        points[i].str());
        for (std::size_t j = 0; j < i; ++j)
            if (points[j] == points[i])
                throw std::invalid_argument("duplicate point at indices " + std::to_string(j) +
                                            " and " + std::to_string(i) + ": " + points[i].str());
    }
}

bool collinear(const Pt& p, const Pt& q, const Pt& r) {
    BigInt det = p.x * (q.y * r.z - q.z * r.y) - p.y * (q.x * r.z - q.z * r.x) +
                 p.z * (q.x * r.y - q.y * r.x);
    return det == 0;
}

std::vector<std::vector<std::size_t>> maximal_collinear_sets(const Config& z) {
    const std::size_t s = z.size();
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i + 1; j < s; ++j) {
            std::vector<std::size_t> on = {i, j};
            for (std::size_t k = 0; k < s; ++k) {
                if (k == i || k == j) continue;
                if (collinear(z.points[i], z.points[j], z.points[k])) on.push_back(k);
            }
            if (on.size() < 3) continue;
            std::sort(on.begin(), on.end());
            seen.insert(std::move(on));
        }
    }
    std::vector<std::vector<std::size_t>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

namespace {

IntMatrix veronese_matrix(const std::vector<const Pt*>& pts) {
    IntMatrix m(pts.size(), 6);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Pt& p = *pts[i];
        m.at(i, 0) = p.x * p.x;
        m.at(i, 1) = p.x * p.y;
        m.at(i, 2) = p.x * p.z;
        m.at(i, 3) = p.y * p.y;
        m.at(i, 4) = p.y * p.z;
        m.at(i, 5) = p.z * p.z;
    }
    return m;
}

bool subset_on_conic(const std::vector<const Pt*>& pts) {
    if (pts.size() < 6) return true;  // five or fewer points always lie on a conic
    return kernel_vector_exact(veronese_matrix(pts)).has_value();
}

} // namespace

ConicResult conic_contained(const Config& z) {
    std::vector<const Pt*> pts;
    pts.reserve(z.size());
    for (const Pt& p : z.points) pts.push_back(&p);
    ConicResult out;
    auto v = kernel_vector_exact(veronese_matrix(pts));
    if (v) {
        out.contained = true;
        std::array<BigInt, 6> c;
        std::copy(v->begin(), v->end(), c.begin());
        out.coeffs = std::move(c);
    }
    return out;
}

Signature incidence_signature(const Config& z) {
    Signature sig;
    sig.s = z.size();
    for (const auto& set : maximal_collinear_sets(z)) sig.collinear_profile.push_back(set.size());
    sig.on_conic = conic_contained(z).contained;
    return sig;
}

namespace {

struct MatchSearch {
    const Config& z;
    const IncidencePattern& pat;
    std::vector<std::vector<std::size_t>> target;          // maximal collinear sets of Z
    std::vector<std::vector<std::size_t>> blocks_of_label;  // pattern blocks through each label
    std::vector<std::vector<std::size_t>> sets_of_point;    // target sets through each point
    std::vector<std::size_t> assign;                        // label -> point, SIZE_MAX = unset
    std::vector<bool> used;

    bool degrees_compatible(std::size_t label, std::size_t point) const {
        std::vector<std::size_t> a, b;
        for (std::size_t bi : blocks_of_label[label]) a.push_back(pat.blocks[bi].size());
        for (std::size_t si : sets_of_point[point]) b.push_back(target[si].size());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    bool consistent(std::size_t label) const {
        // Every fully assigned pattern block through `label` must map onto
        // one of Z's maximal collinear sets exactly.
        for (std::size_t bi : blocks_of_label[label]) {
            std::vector<std::size_t> image;
            bool full = true;
            for (std::size_t l : pat.blocks[bi]) {
                if (assign[l] == SIZE_MAX) { full = false; break; }
                image.push_back(assign[l]);
            }
            if (!full) {
                // Partial block: assigned triples must still be collinear.
                if (image.size() >= 3) {
                    for (std::size_t a = 0; a < image.size(); ++a)
                        for (std::size_t b = a + 1; b < image.size(); ++b)
                            for (std::size_t c = b + 1; c < image.size(); ++c)
                                if (!collinear(z.points[image[a]], z.points[image[b]],
                                               z.points[image[c]]))
                                    return false;
                }
                continue;
            }
            std::sort(image.begin(), image.end());
            if (std::find(target.begin(), target.end(), image) == target.end()) return false;
        }
        return true;
    }

    bool search(std::size_t label) {
        if (label == pat.num_labels) return final_check();
        for (std::size_t p = 0; p < z.size(); ++p) {
            if (used[p] || !degrees_compatible(label, p)) continue;
            assign[label] = p;
            used[p] = true;
            if (consistent(label) && search(label + 1)) return true;
            used[p] = false;
            assign[label] = SIZE_MAX;
        }
        return false;
    }

    bool final_check() const {
        std::vector<std::vector<std::size_t>> images;
        for (const auto& b : pat.blocks) {
            std::vector<std::size_t> image;
            for (std::size_t l : b) image.push_back(assign[l]);
            std::sort(image.begin(), image.end());
            images.push_back(std::move(image));
        }
        std::sort(images.begin(), images.end());
        std::vector<std::vector<std::size_t>> want = target;
        std::sort(want.begin(), want.end());
        if (images != want) return false;
        for (const auto& sub : pat.conic_subsets) {
            std::vector<const Pt*> pts;
            for (std::size_t l : sub) pts.push_back(&z.points[assign[l]]);
            if (!subset_on_conic(pts)) return false;
        }
        return true;
    }
};

} // namespace

std::optional<std::vector<std::size_t>> abstract_incidence_match(const Config& z,
                                                                 const IncidencePattern& pattern) {
    if (z.size() != pattern.num_labels) return std::nullopt;
    if (conic_contained(z).contained != pattern.on_conic) return std::nullopt;

    MatchSearch ms{z, pattern, maximal_collinear_sets(z), {}, {}, {}, {}};
    if (ms.target.size() != pattern.blocks.size()) return std::nullopt;
    std::vector<std::size_t> a, b;
    for (const auto& blk : pattern.blocks) a.push_back(blk.size());
    for (const auto& set : ms.target) b.push_back(set.size());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;

    ms.blocks_of_label.resize(pattern.num_labels);
    for (std::size_t bi = 0; bi < pattern.blocks.size(); ++bi)
        for (std::size_t l : pattern.blocks[bi]) {
            if (l >= pattern.num_labels)
                throw std::invalid_argument("pattern block refers to an out-of-range label");
            ms.blocks_of_label[l].push_back(bi);
        }
    ms.sets_of_point.resize(z.size());
    for (std::size_t si = 0; si < ms.target.size(); ++si)
        for (std::size_t p : ms.target[si]) ms.sets_of_point[p].push_back(si);
    ms.assign.assign(pattern.num_labels, SIZE_MAX);
    ms.used.assign(z.size(), false);

    if (!ms.search(0)) return std::nullopt;
    return ms.assign;
}

Config apply_transform(const Config& z, const ProjectiveMap& map) {
    BigInt det = map[0][0] * (map[1][1] * map[2][2] - map[1][2] * map[2][1]) -
                 map[0][1] * (map[1][0] * map[2][2] - map[1][2] * map[2][0]) +
                 map[0][2] * (map[1][0] * map[2][1] - map[1][1] * map[2][0]);
    if (det == 0) throw std::invalid_argument("projective map is singular");
    std::vector<Pt> pts;
    pts.reserve(z.size());
    for (const Pt& p : z.points) {
        BigInt nx = map[0][0] * p.x + map[0][1] * p.y + map[0][2] * p.z;
        BigInt ny = map[1][0] * p.x + map[1][1] * p.y + map[1][2] * p.z;
        BigInt nz = map[2][0] * p.x + map[2][1] * p.y + map[2][2] * p.z;
        pts.push_back(normalize(std::move(nx), std::move(ny), std::move(nz)));
    }
    return Config(z.label, std::move(pts));
}

} // namespace wald

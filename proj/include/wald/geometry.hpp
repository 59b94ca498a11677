#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wald/matrix.hpp"
#include "wald/rational.hpp"

namespace wald {

/// Point of P^2 in canonical homogeneous coordinates: integer triple,
/// not all zero, primitive, first nonzero coordinate positive.
struct Pt {
    BigInt x, y, z;

    bool operator==(const Pt& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator<(const Pt& o) const;
    std::string str() const;
};

Pt canonicalize_point(const BigInt& x, const BigInt& y, const BigInt& z);
Pt canonicalize_point(const Rational& x, const Rational& y, const Rational& z);

/// An ordered list of pairwise distinct canonical points (the scheme Z).
/// Duplicates are a hard error, not a silent merge.
struct Config {
    std::string label;
    std::vector<Pt> points;

    Config(std::string label_, std::vector<Pt> pts);
    std::size_t size() const { return points.size(); }
};

bool collinear(const Pt& p, const Pt& q, const Pt& r);

/// All maximal subsets of size >= 3 on a common line, as sorted index
/// sets, ordered by decreasing size then lexicographically.
std::vector<std::vector<std::size_t>> maximal_collinear_sets(const Config& z);

struct ConicResult {
    bool contained = false;
    // Coefficients in the order x^2, xy, xz, y^2, yz, z^2 when contained.
    std::optional<std::array<BigInt, 6>> coeffs;
};

/// Kernel test on the s x 6 Veronese evaluation matrix.  Degenerate
/// conics (line pairs, double lines) count.
ConicResult conic_contained(const Config& z);

struct Signature {
    std::size_t s = 0;
    std::vector<std::size_t> collinear_profile;  // sizes, decreasing
    bool on_conic = false;

    bool operator==(const Signature&) const = default;
};

Signature incidence_signature(const Config& z);

/// Abstract incidence pattern: labels 0..num_labels-1, blocks = required
/// maximal collinear sets, a required conic-containment flag for the
/// whole set, and optional subsets required to lie on a conic.
struct IncidencePattern {
    std::size_t num_labels = 0;
    std::vector<std::vector<std::size_t>> blocks;
    bool on_conic = false;
    std::vector<std::vector<std::size_t>> conic_subsets;
};

/// A bijection labels -> point indices under which the pattern blocks are
/// exactly the maximal collinear sets of Z (no extra incidences), the
/// conic flag matches, and every required conic subset lies on a conic.
std::optional<std::vector<std::size_t>> abstract_incidence_match(const Config& z,
                                                                 const IncidencePattern& pattern);

using ProjectiveMap = std::array<std::array<BigInt, 3>, 3>;

/// Applies an invertible rational change of coordinates to every point.
Config apply_transform(const Config& z, const ProjectiveMap& map);

} // namespace wald

#include "wald/catalog.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace wald::catalog {

namespace {

Pt aff(long x, long y) { return canonicalize_point(BigInt(x), BigInt(y), BigInt(1)); }
Pt hom(long x, long y, long z) { return canonicalize_point(BigInt(x), BigInt(y), BigInt(z)); }

std::vector<std::size_t> range(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

CatalogEntry make_line(std::size_t s) {
    std::vector<Pt> pts;
    for (std::size_t i = 0; i < s; ++i) pts.push_back(aff(static_cast<long>(i), 0));
    CatalogEntry e{"LINE(" + std::to_string(s) + ")",
                   s,
                   IncidencePattern{s, {range(s)}, true, {}},
                   Config("LINE(" + std::to_string(s) + ")", std::move(pts)),
                   ExpectedData{make_rational(1), std::nullopt},
                   4};
    return e;
}

CatalogEntry make_near_pencil(std::size_t s) {
    std::vector<Pt> pts;
    for (std::size_t i = 0; i + 1 < s; ++i) pts.push_back(aff(static_cast<long>(i), 0));
    pts.push_back(aff(0, 1));
    // The line of s-1 points times any line through the residual point is
    // a conic containing Z, hence on_conic = true.
    CatalogEntry e{"NEAR_PENCIL(" + std::to_string(s) + ")",
                   s,
                   IncidencePattern{s, {range(s - 1)}, true, {}},
                   Config("NEAR_PENCIL(" + std::to_string(s) + ")", std::move(pts)),
                   ExpectedData{make_rational(2 * static_cast<long>(s) - 3,
                                              static_cast<long>(s) - 1),
                                std::nullopt},
                   2 * (static_cast<int>(s) - 1)};
    return e;
}

CatalogEntry make_conic(std::size_t s) {
    std::vector<Pt> pts;
    for (long t = 0; t < static_cast<long>(s); ++t) pts.push_back(aff(t, t * t));
    CatalogEntry e{"CONIC(" + std::to_string(s) + ")",
                   s,
                   IncidencePattern{s, {}, true, {}},
                   Config("CONIC(" + std::to_string(s) + ")", std::move(pts)),
                   ExpectedData{make_rational(2), std::nullopt},
                   6};
    return e;
}

ExpectedData seven_thirds() {
    return ExpectedData{make_rational(7, 3), std::vector<int>{3, 2, 2}};
}

CatalogEntry make_named(const std::string& name) {
    if (name == "H6_2") {
        // One 3-point line plus a triangle of 3 further points.
        return {name, 6,
                IncidencePattern{6, {{0, 1, 2}}, false, {}},
                Config(name, {aff(0, 0), aff(1, 0), aff(2, 0), aff(0, 1), aff(3, 2), aff(1, 5)}),
                seven_thirds(), 6};
    }
    if (name == "H6_5") {
        // Two 3-point lines sharing one configuration point, one point off both.
        return {name, 6,
                IncidencePattern{6, {{0, 1, 2}, {0, 3, 4}}, false, {}},
                Config(name, {aff(0, 0), aff(0, 1), aff(0, 2), aff(1, 0), aff(2, 0), aff(1, 3)}),
                seven_thirds(), 6};
    }
    if (name == "H6_9") {
        // Triangle with one extra point on each side.
        return {name, 6,
                IncidencePattern{6, {{0, 1, 3}, {0, 2, 5}, {1, 2, 4}}, false, {}},
                Config(name, {aff(0, 0), aff(2, 0), aff(0, 2), aff(1, 0), aff(1, 1), aff(0, 1)}),
                ExpectedData{make_rational(9, 4), std::vector<int>{3, 2, 2, 2}}, 8};
    }
    if (name == "H6_10") {
        // Complete quadrilateral: pairwise intersections of x=0, y=0,
        // x+y=z, x+2y=3z.
        return {name, 6,
                IncidencePattern{6, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}, false, {}},
                Config(name, {hom(0, 0, 1), hom(0, 1, 1), hom(0, 3, 2), hom(1, 0, 1), hom(3, 0, 1),
                              hom(1, -2, -1)}),
                ExpectedData{make_rational(2), std::vector<int>{3, 1}}, 4};
    }
    if (name == "H7_13") {
        // A 4-point line, a 3-point line meeting it at a configuration
        // point, a second 3-point line joining one point of each plus a
        // seventh point.
        return {name, 7,
                IncidencePattern{7, {{0, 1, 2, 3}, {0, 4, 5}, {2, 5, 6}}, false, {}},
                Config(name, {aff(0, 0), aff(1, 0), aff(2, 0), aff(4, 0), aff(0, 1), aff(0, 2),
                              aff(1, 1)}),
                seven_thirds(), 6};
    }
    if (name == "H7_17") {
        // Triangle A,B,C; D on AB, E on BC; F,G on the 4-point line AC;
        // {D,E,G} collinear.  Order: A,B,C,D,E,F,G.
        return {name, 7,
                IncidencePattern{7, {{0, 2, 5, 6}, {0, 1, 3}, {1, 2, 4}, {3, 4, 6}}, false, {}},
                Config(name, {aff(0, 0), aff(2, 4), aff(4, 0), aff(1, 2), hom(7, 2, 2), aff(8, 0),
                              aff(6, 0)}),
                ExpectedData{make_rational(16, 7), std::vector<int>{3, 2, 2, 3, 2, 2, 2}}, 14};
    }
    if (name == "H7_21") {
        // Three 3-point lines concurrent at an apex, middles collinear,
        // far points collinear.
        return {name, 7,
                IncidencePattern{7, {{0, 1, 4}, {0, 2, 5}, {0, 3, 6}, {1, 2, 3}, {4, 5, 6}},
                                 false, {}},
                Config(name, {aff(0, 2), aff(0, 1), aff(1, 1), aff(2, 1), aff(0, 0), aff(2, 0),
                              aff(4, 0)}),
                seven_thirds(), 6};
    }
    if (name == "H7_29") {
        // Six points on a smooth conic in three chords concurrent at a
        // seventh point.
        return {name, 7,
                IncidencePattern{7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}, false,
                                 {{1, 2, 3, 4, 5, 6}}},
                Config(name, {aff(0, 6), aff(1, 1), aff(-6, 36), aff(2, 4), aff(-3, 9), aff(3, 9),
                              aff(-2, 4)}),
                seven_thirds(), 6};
    }
    if (name == "H8_119") {
        // A 4-point line through P1; a triple point P2 whose three lines
        // each carry two further points; the transversal through P1 meets
        // three of them.  Order: P1,P2,Q1,Q2,Q3,Q4,Q5,Q6.
        return {name, 8,
                IncidencePattern{8, {{0, 5, 6, 7}, {0, 2, 3, 4}, {1, 2, 7}, {1, 3, 6}, {1, 4, 5}},
                                 false, {}},
                Config(name, {aff(-2, 3), aff(0, 0), hom(1, 1, 2), aff(0, 1), aff(1, 0), aff(4, 0),
                              aff(0, 2), hom(4, 4, 3)}),
                seven_thirds(), 6};
    }
    if (name == "H8_136") {
        // 5-point line {A,C,F1,F2,F3}; apex B; {A,D,B}, {C,E,B}; no
        // further incidences.  Order: A,B,C,D,E,F1,F2,F3.
        return {name, 8,
                IncidencePattern{8, {{0, 2, 5, 6, 7}, {0, 1, 3}, {1, 2, 4}}, false, {}},
                Config(name, {aff(0, 0), aff(1, 2), aff(4, 0), hom(1, 2, 2), hom(13, 2, 4),
                              aff(7, 0), aff(8, 0), aff(9, 0)}),
                ExpectedData{make_rational(17, 7), std::nullopt}, 14};
    }
    if (name == "H8_137") {
        // 5-point line {A,C,G,F1,F2}; apex B; {A,D,B}, {C,E,B};
        // transversal {D,E,G}.  Order: A,B,C,D,E,G,F1,F2.
        return {name, 8,
                IncidencePattern{8, {{0, 2, 5, 6, 7}, {0, 1, 3}, {1, 2, 4}, {3, 4, 5}}, false, {}},
                Config(name, {aff(0, 0), aff(1, 2), aff(4, 0), hom(1, 2, 2), hom(13, 2, 4),
                              aff(6, 0), aff(7, 0), aff(8, 0)}),
                seven_thirds(), 6};
    }
    if (name == "H8_118") {
        // Two 4-point lines meeting at A plus 3-point lines {C,E,B} and
        // {Q,E,F}.  Order: A,B,C,D,E,F,P,Q.
        return {name, 8,
                IncidencePattern{8, {{0, 1, 3, 7}, {0, 2, 5, 6}, {1, 2, 4}, {4, 5, 7}}, false, {}},
                Config(name, {aff(0, 0), aff(3, 3), aff(1, 0), aff(1, 1), hom(4, 3, 2), aff(2, 0),
                              aff(4, 0), aff(2, 2)}),
                ExpectedData{make_rational(5, 2), std::nullopt}, 10};
    }
    if (name == "NINE_17_7") {
        // 6-point line {A,C,G,F1,F2,F3}; apex B; {A,D,B}, {C,E,B};
        // transversal {D,E,G}.  Order: A,B,C,D,E,G,F1,F2,F3.
        return {name, 9,
                IncidencePattern{9, {{0, 2, 5, 6, 7, 8}, {0, 1, 3}, {1, 2, 4}, {3, 4, 5}}, false,
                                 {}},
                Config(name, {aff(0, 0), aff(1, 2), aff(4, 0), hom(1, 2, 2), hom(13, 2, 4),
                              aff(6, 0), aff(7, 0), aff(8, 0), aff(9, 0)}),
                ExpectedData{make_rational(17, 7), std::nullopt}, 14};
    }
    if (name == "GENERAL6") {
        // Six points, no 3 collinear, not on a conic.
        return {name, 6,
                IncidencePattern{6, {}, false, {}},
                Config(name, {hom(1, 0, 0), hom(0, 1, 0), hom(0, 0, 1), hom(1, 1, 1), hom(1, 2, 3),
                              hom(1, 3, 2)}),
                ExpectedData{make_rational(12, 5), std::nullopt}, 10};
    }
    throw std::invalid_argument("unknown catalog name: " + name);
}

CatalogEntry make_entry(const std::string& name) {
    const auto open = name.find('(');
    if (open != std::string::npos && name.back() == ')') {
        const std::string family = name.substr(0, open);
        const long s = std::stol(name.substr(open + 1, name.size() - open - 2));
        if (s > 12) throw std::invalid_argument("parametrized families are capped at s = 12");
        if (family == "LINE") {
            if (s < 3) throw std::invalid_argument("LINE(s) needs s >= 3");
            return make_line(static_cast<std::size_t>(s));
        }
        if (family == "NEAR_PENCIL") {
            if (s < 4) throw std::invalid_argument("NEAR_PENCIL(s) needs s >= 4");
            return make_near_pencil(static_cast<std::size_t>(s));
        }
        if (family == "CONIC") {
            if (s < 5) throw std::invalid_argument("CONIC(s) needs s >= 5");
            return make_conic(static_cast<std::size_t>(s));
        }
        throw std::invalid_argument("unknown catalog family: " + family);
    }
    return make_named(name);
}

std::map<std::string, CatalogEntry>& registry() {
    static std::map<std::string, CatalogEntry> reg;
    return reg;
}
std::mutex& registry_mutex() {
    static std::mutex mu;
    return mu;
}

} // namespace

std::vector<std::string> list() {
    return {"LINE(4)",  "NEAR_PENCIL(4)", "NEAR_PENCIL(5)", "NEAR_PENCIL(6)", "NEAR_PENCIL(7)",
            "NEAR_PENCIL(8)", "CONIC(6)", "H6_2",  "H6_5",  "H6_9",  "H6_10", "H7_13",
            "H7_17",    "H7_21", "H7_29", "H8_118", "H8_119", "H8_136", "H8_137", "NINE_17_7",
            "GENERAL6"};
}

bool validate_realization(const Config& z, const CatalogEntry& e) {
    if (z.size() != e.s) return false;
    return abstract_incidence_match(z, e.pattern).has_value();
}

const CatalogEntry& entry(const std::string& name) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) {
        CatalogEntry e = make_entry(name);
        if (!validate_realization(e.realization, e))
            throw std::logic_error("catalog realization for " + name +
                                   " does not satisfy its incidence pattern");
        it = reg.emplace(name, std::move(e)).first;
    }
    return it->second;
}

Config build(const std::string& name) { return entry(name).realization; }

ExpectedData expected(const std::string& name) { return entry(name).expected; }

} // namespace wald::catalog

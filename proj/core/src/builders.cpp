#include "homcode/builders.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

namespace homcode {
namespace builders {

namespace {

std::string idx(const char* prefix, long i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%03ld", prefix, i);
    return buf;
}

std::string idx2(const char* prefix, long i, long j) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%s%03ld_%03ld", prefix, i, j);
    return buf;
}

} // namespace

CellComplex circle(long m) {
    if (m < 1) throw std::out_of_range("circle size must be >= 1");
    std::vector<Cell> cells;
    for (long i = 0; i < m; ++i) cells.push_back({idx("v", i), 0, {}});
    for (long i = 0; i < m; ++i)
        cells.push_back({idx("e", i), 1, {{idx("v", (i + 1) % m), 1}, {idx("v", i), -1}}});
    return CellComplex("circle(" + std::to_string(m) + ")", 1, std::move(cells));
}

CellComplex interval(long m) {
    if (m < 1) throw std::out_of_range("interval size must be >= 1");
    std::vector<Cell> cells;
    for (long i = 0; i <= m; ++i) cells.push_back({idx("v", i), 0, {}});
    for (long i = 0; i < m; ++i)
        cells.push_back({idx("e", i), 1, {{idx("v", i + 1), 1}, {idx("v", i), -1}}});
    return CellComplex("interval(" + std::to_string(m) + ")", 1, std::move(cells));
}

CellComplex torus_grid(long p, long q) {
    if (p < 1 || q < 1) throw std::out_of_range("torus grid sizes must be >= 1");
    std::vector<Cell> cells;
    for (long i = 0; i < p; ++i)
        for (long j = 0; j < q; ++j) cells.push_back({idx2("v", i, j), 0, {}});
    for (long i = 0; i < p; ++i)
        for (long j = 0; j < q; ++j) {
            cells.push_back(
                {idx2("h", i, j), 1, {{idx2("v", (i + 1) % p, j), 1}, {idx2("v", i, j), -1}}});
            cells.push_back(
                {idx2("u", i, j), 1, {{idx2("v", i, (j + 1) % q), 1}, {idx2("v", i, j), -1}}});
        }
    for (long i = 0; i < p; ++i)
        for (long j = 0; j < q; ++j)
            cells.push_back({idx2("f", i, j), 2,
                             {{idx2("h", i, j), 1},
                              {idx2("u", (i + 1) % p, j), 1},
                              {idx2("h", i, (j + 1) % q), -1},
                              {idx2("u", i, j), -1}}});
    return CellComplex("torus_grid(" + std::to_string(p) + "," + std::to_string(q) + ")", 2,
                       std::move(cells));
}

CellComplex sphere_cube() {
    std::vector<Cell> cells;
    auto v = [](int x, int y, int z) {
        return std::string("v") + char('0' + x) + char('0' + y) + char('0' + z);
    };
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            for (int z = 0; z <= 1; ++z) cells.push_back({v(x, y, z), 0, {}});
    auto edge = [&](std::string id, const std::string& head, const std::string& tail) {
        cells.push_back({std::move(id), 1, {{head, 1}, {tail, -1}}});
    };
    for (int y = 0; y <= 1; ++y)
        for (int z = 0; z <= 1; ++z)
            edge(std::string("ex") + char('0' + y) + char('0' + z), v(1, y, z), v(0, y, z));
    for (int x = 0; x <= 1; ++x)
        for (int z = 0; z <= 1; ++z)
            edge(std::string("ey") + char('0' + x) + char('0' + z), v(x, 1, z), v(x, 0, z));
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            edge(std::string("ez") + char('0' + x) + char('0' + y), v(x, y, 1), v(x, y, 0));
    // Outward-oriented faces; boundaries listed in loop order.
    cells.push_back({"F", 2, {{"ex00", 1}, {"ez10", 1}, {"ex01", -1}, {"ez00", -1}}});
    cells.push_back({"Ba", 2, {{"ez01", 1}, {"ex11", 1}, {"ez11", -1}, {"ex10", -1}}});
    cells.push_back({"L", 2, {{"ez00", 1}, {"ey01", 1}, {"ez01", -1}, {"ey00", -1}}});
    cells.push_back({"R", 2, {{"ey10", 1}, {"ez11", 1}, {"ey11", -1}, {"ez10", -1}}});
    cells.push_back({"T", 2, {{"ex01", 1}, {"ey11", 1}, {"ex11", -1}, {"ey01", -1}}});
    cells.push_back({"Bo", 2, {{"ey00", 1}, {"ex10", 1}, {"ey10", -1}, {"ex00", -1}}});
    return CellComplex("sphere_cube", 2, std::move(cells));
}

CellComplex projective_plane_min() {
    // Hemi-icosahedron: every pair of the 6 vertices is an edge, each edge
    // lies in exactly two of the 10 triangles.
    static const std::array<std::array<int, 3>, 10> faces = {{{1, 2, 3},
                                                              {1, 3, 4},
                                                              {1, 4, 5},
                                                              {1, 5, 6},
                                                              {1, 6, 2},
                                                              {2, 3, 5},
                                                              {3, 4, 6},
                                                              {4, 5, 2},
                                                              {5, 6, 3},
                                                              {6, 2, 4}}};
    std::vector<Cell> cells;
    auto vid = [](int a) { return "v" + std::to_string(a); };
    auto eid = [](int a, int b) {
        if (a > b) std::swap(a, b);
        return "e" + std::to_string(a) + std::to_string(b);
    };
    for (int a = 1; a <= 6; ++a) cells.push_back({vid(a), 0, {}});
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            cells.push_back({eid(a, b), 1, {{vid(b), 1}, {vid(a), -1}}});
    for (const auto& f : faces) {
        // Simplicial boundary of [a,b,c]: [b,c] - [a,c] + [a,b], with each
        // pair mapped to the sorted edge id and a compensating sign.
        auto signed_edge = [&](int a, int b, int s) -> BoundaryEntry {
            return a < b ? BoundaryEntry{eid(a, b), s} : BoundaryEntry{eid(b, a), -s};
        };
        std::string id = "t" + std::to_string(f[0]) + std::to_string(f[1]) + std::to_string(f[2]);
        cells.push_back({id, 2,
                         {signed_edge(f[1], f[2], 1), signed_edge(f[0], f[2], -1),
                          signed_edge(f[0], f[1], 1)}});
    }
    return CellComplex("projective_plane_min", 2, std::move(cells));
}

} // namespace builders
} // namespace homcode

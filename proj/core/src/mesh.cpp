#include "wlab/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "wlab/numfmt.hpp"

namespace wlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double triangle_area(const Mesh& m, int t) {
    const auto& tri = m.triangles[t];
    const Eigen::Vector2d a = m.vertices[tri[0]];
    const Eigen::Vector2d b = m.vertices[tri[1]];
    const Eigen::Vector2d c = m.vertices[tri[2]];
    return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x()));
}

double Mesh::diameter() const {
    if (vertices.empty()) return 0.0;
    Eigen::Vector2d lo = vertices.front(), hi = vertices.front();
    for (const auto& v : vertices) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    return (hi - lo).norm();
}

void Mesh::finalize() {
    const int nv = num_vertices();
    if (nv < 3 || triangles.empty()) throw MeshTopologyError("mesh has no triangles");

    for (int t = 0; t < num_triangles(); ++t) {
        const auto& tri = triangles[t];
        for (int i : tri)
            if (i < 0 || i >= nv)
                throw MeshTopologyError("triangle " + std::to_string(t) +
                                        ": vertex index out of range");
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
            throw MeshTopologyError("triangle " + std::to_string(t) + ": repeated vertex");
        if (!(triangle_area(*this, t) > 0.0))
            throw MeshOrientationError(t, "not counterclockwise (area <= 0)");
    }

    // Duplicate-vertex scan within 1e-12 * diameter, sweep over sorted x.
    const double tol = 1e-12 * diameter();
    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return vertices[a].x() < vertices[b].x();
    });
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            if (vertices[order[j]].x() - vertices[order[i]].x() > tol) break;
            if ((vertices[order[i]] - vertices[order[j]]).norm() <= tol)
                throw MeshTopologyError("duplicate vertices " + std::to_string(order[i]) +
                                        " and " + std::to_string(order[j]));
        }
    }

    // Directed-edge census. Interior edges appear once per direction; a
    // boundary edge appears in exactly one triangle, oriented with the domain
    // on its left.
    std::map<std::pair<int, int>, int> directed;
    for (const auto& tri : triangles) {
        for (int e = 0; e < 3; ++e) {
            const auto key = std::make_pair(tri[e], tri[(e + 1) % 3]);
            if (++directed[key] > 1)
                throw MeshTopologyError("edge " + std::to_string(key.first) + "-" +
                                        std::to_string(key.second) +
                                        " duplicated with the same orientation");
        }
    }
    std::map<int, int> next;  // boundary successor
    int boundary_edges = 0;
    for (const auto& [key, cnt] : directed) {
        const auto rev = std::make_pair(key.second, key.first);
        const auto it = directed.find(rev);
        if (it != directed.end()) continue;  // interior edge
        ++boundary_edges;
        if (!next.emplace(key.first, key.second).second)
            throw MeshTopologyError("non-manifold boundary at vertex " +
                                    std::to_string(key.first));
    }
    if (boundary_edges == 0) throw MeshTopologyError("mesh has no boundary");

    boundary_loops.clear();
    std::map<int, bool> used;
    for (const auto& [start, succ] : next) {
        if (used.count(start)) continue;
        std::vector<int> loop;
        int v = start;
        while (true) {
            loop.push_back(v);
            used[v] = true;
            const auto it = next.find(v);
            if (it == next.end())
                throw MeshTopologyError("boundary chain broken at vertex " + std::to_string(v));
            v = it->second;
            if (v == start) break;
            if (used.count(v))
                throw MeshTopologyError("boundary loops intersect at vertex " +
                                        std::to_string(v));
        }
        boundary_loops.push_back(std::move(loop));
    }
}

Mesh gen_polar_mesh(const DomainSpec& domain, int n_radial, int n_angular) {
    if (n_radial < 2 || n_angular < 8)
        throw std::invalid_argument("gen_polar_mesh: need n_radial >= 2 and n_angular >= 8");
    validate_domain(domain);
    if (std::holds_alternative<BallSpec>(domain))
        throw std::invalid_argument("gen_polar_mesh: planar domains only");

    Mesh m;
    const bool is_annulus = std::holds_alternative<AnnulusSpec>(domain);

    auto point = [&](double frac, double th) -> Eigen::Vector2d {
        const double c = std::cos(th), s = std::sin(th);
        if (const auto* d = std::get_if<DiskSpec>(&domain)) return {d->R * frac * c, d->R * frac * s};
        if (const auto* e = std::get_if<EllipseSpec>(&domain))
            return {e->a * frac * c, e->b * frac * s};
        if (const auto* st = std::get_if<StarSpec>(&domain)) {
            const double r = st->R * (1.0 + st->eps * std::cos(st->m * th));
            return {frac * r * c, frac * r * s};
        }
        const auto& an = std::get<AnnulusSpec>(domain);
        const double r = an.R_in + (an.R_out - an.R_in) * frac;
        return {r * c, r * s};
    };

    if (is_annulus) {
        // Rings 0..n_radial, no center.
        for (int i = 0; i <= n_radial; ++i)
            for (int j = 0; j < n_angular; ++j)
                m.vertices.push_back(point(double(i) / n_radial, 2.0 * kPi * j / n_angular));
        auto idx = [&](int i, int j) { return i * n_angular + (j % n_angular); };
        for (int i = 0; i < n_radial; ++i) {
            for (int j = 0; j < n_angular; ++j) {
                m.triangles.push_back({idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)});
                m.triangles.push_back({idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)});
            }
        }
    } else {
        // Center fan plus rings 1..n_radial: n_angular*n_radial + 1 vertices.
        m.vertices.emplace_back(0.0, 0.0);
        for (int i = 1; i <= n_radial; ++i)
            for (int j = 0; j < n_angular; ++j)
                m.vertices.push_back(point(double(i) / n_radial, 2.0 * kPi * j / n_angular));
        auto idx = [&](int i, int j) { return 1 + (i - 1) * n_angular + (j % n_angular); };
        for (int j = 0; j < n_angular; ++j)
            m.triangles.push_back({0, idx(1, j), idx(1, j + 1)});
        for (int i = 1; i < n_radial; ++i) {
            for (int j = 0; j < n_angular; ++j) {
                m.triangles.push_back({idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)});
                m.triangles.push_back({idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)});
            }
        }
    }
    m.finalize();
    return m;
}

Mesh load_mesh(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) throw MeshParseError(1, "empty input, expected \"nv nt\"");
    long long nv = 0, nt = 0;
    {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> nv >> nt) || (ls >> extra))
            throw MeshParseError(line_no, "malformed counts, expected \"nv nt\"");
        if (nv < 3 || nt < 1 || nv > 50'000'000 || nt > 100'000'000)
            throw MeshParseError(line_no, "counts out of range");
    }

    Mesh m;
    m.vertices.reserve(nv);
    for (long long i = 0; i < nv; ++i) {
        if (!next_line())
            throw MeshParseError(line_no + 1, "unexpected end of input in vertex block");
        std::istringstream ls(line);
        double x = 0.0, y = 0.0;
        std::string extra;
        if (!(ls >> x >> y) || (ls >> extra))
            throw MeshParseError(line_no, "malformed vertex, expected \"x y\"");
        m.vertices.emplace_back(x, y);
    }
    m.triangles.reserve(nt);
    for (long long i = 0; i < nt; ++i) {
        if (!next_line())
            throw MeshParseError(line_no + 1, "unexpected end of input in triangle block");
        std::istringstream ls(line);
        long long a = 0, b = 0, c = 0;
        std::string extra;
        if (!(ls >> a >> b >> c) || (ls >> extra))
            throw MeshParseError(line_no, "malformed triangle, expected \"i j k\"");
        m.triangles.push_back({int(a), int(b), int(c)});
    }
    if (next_line()) throw MeshParseError(line_no, "trailing content after triangle block");
    m.finalize();
    return m;
}

std::string save_mesh(const Mesh& m) {
    std::ostringstream out;
    out << m.num_vertices() << ' ' << m.num_triangles() << '\n';
    for (const auto& v : m.vertices)
        out << format_double(v.x()) << ' ' << format_double(v.y()) << '\n';
    for (const auto& t : m.triangles) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return out.str();
}

}  // namespace wlab

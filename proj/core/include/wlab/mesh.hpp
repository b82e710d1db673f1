#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wlab/closed_form.hpp"

namespace wlab {

struct MeshError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Malformed text input; line is 1-based.
struct MeshParseError : MeshError {
    MeshParseError(int line_, const std::string& what)
        : MeshError("line " + std::to_string(line_) + ": " + what), line(line_) {}
    int line;
};
// A triangle with nonpositive signed area; index identifies it.
struct MeshOrientationError : MeshError {
    MeshOrientationError(int tri, const std::string& what)
        : MeshError("triangle " + std::to_string(tri) + ": " + what), triangle(tri) {}
    int triangle;
};
// Non-manifold or inconsistent connectivity.
struct MeshTopologyError : MeshError {
    using MeshError::MeshError;
};

// P1 triangulation with counterclockwise triangles and ordered boundary
// loops (one cycle per boundary component, domain on the left).
struct Mesh {
    std::vector<Eigen::Vector2d> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::vector<int>> boundary_loops;

    [[nodiscard]] int num_vertices() const { return static_cast<int>(vertices.size()); }
    [[nodiscard]] int num_triangles() const { return static_cast<int>(triangles.size()); }
    [[nodiscard]] double diameter() const;

    // Rebuild boundary_loops from the triangle connectivity and check every
    // invariant (orientation, manifold boundary, closed disjoint loops, no
    // duplicate vertices within 1e-12 * diameter). Throws a MeshError.
    void finalize();
};

double triangle_area(const Mesh& m, int t);

// Structured mapped-polar triangulation of a planar domain; boundary vertices
// lie exactly on the analytic curve. Disk-like domains use a center fan
// (n_angular * n_radial + 1 vertices); the annulus keeps n_radial + 1 rings.
Mesh gen_polar_mesh(const DomainSpec& domain, int n_radial, int n_angular);

// Plain-text format: line 1 "nv nt"; nv lines "x y"; nt lines "i j k"
// (0-based, CCW). Boundary is inferred. The writer emits the identical
// format with shortest round-trip floats.
Mesh load_mesh(const std::string& text);
std::string save_mesh(const Mesh& m);

}  // namespace wlab

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "wlab/mesh.hpp"

using namespace wlab;

TEST_SUITE("mesh") {

TEST_CASE("polar disk mesh: constructive counts") {
    const Mesh m = gen_polar_mesh(DiskSpec{1.0}, 4, 16);
    CHECK(m.num_vertices() == 16 * 4 + 1);
    CHECK(m.num_triangles() == 16 * (2 * 4 - 1));
    REQUIRE(m.boundary_loops.size() == 1);
    CHECK(m.boundary_loops[0].size() == 16);
    // Boundary vertices on the analytic circle.
    for (int v : m.boundary_loops[0])
        CHECK(m.vertices[v].norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("ellipse and star boundary vertices sit on the analytic curve") {
    const double a = 2.0, b = 1.0;
    const Mesh e = gen_polar_mesh(EllipseSpec{a, b}, 4, 16);
    for (int v : e.boundary_loops[0]) {
        const double x = e.vertices[v].x(), y = e.vertices[v].y();
        CHECK(x * x / (a * a) + y * y / (b * b) == doctest::Approx(1.0).epsilon(1e-13));
    }
    const StarSpec spec{1.0, 0.2, 4};
    const Mesh s = gen_polar_mesh(spec, 4, 16);
    for (int v : s.boundary_loops[0]) {
        const double r = s.vertices[v].norm();
        const double th = std::atan2(s.vertices[v].y(), s.vertices[v].x());
        CHECK(r == doctest::Approx(spec.R * (1.0 + spec.eps * std::cos(spec.m * th)))
                       .epsilon(1e-12));
    }
}

TEST_CASE("annulus mesh: two loops") {
    const Mesh m = gen_polar_mesh(AnnulusSpec{1.0, 2.0}, 8, 32);
    CHECK(m.num_vertices() == 9 * 32);
    REQUIRE(m.boundary_loops.size() == 2);
    CHECK(m.boundary_loops[0].size() == 32);
    CHECK(m.boundary_loops[1].size() == 32);
}

TEST_CASE("star mesh orientation audit") {
    const Mesh m = gen_polar_mesh(StarSpec{1.0, 0.1, 5}, 16, 64);
    double min_area = 1e9;
    for (int t = 0; t < m.num_triangles(); ++t) min_area = std::min(min_area, triangle_area(m, t));
    CHECK(min_area > 0.0);
}

TEST_CASE("mesh generator parameter checks") {
    CHECK_THROWS_AS(gen_polar_mesh(DiskSpec{1.0}, 1, 16), std::invalid_argument);
    CHECK_THROWS_AS(gen_polar_mesh(DiskSpec{1.0}, 4, 7), std::invalid_argument);
    CHECK_THROWS_AS(gen_polar_mesh(BallSpec{3, 1.0}, 4, 16), std::invalid_argument);
}

TEST_CASE("load single triangle") {
    const Mesh m = load_mesh("3 1\n0 0\n1 0\n0 1\n0 1 2\n");
    CHECK(m.num_triangles() == 1);
    REQUIRE(m.boundary_loops.size() == 1);
    CHECK(m.boundary_loops[0].size() == 3);
}

TEST_CASE("clockwise triangle is an orientation error naming the index") {
    try {
        load_mesh("3 1\n0 0\n1 0\n0 1\n0 2 1\n");
        FAIL("expected MeshOrientationError");
    } catch (const MeshOrientationError& e) {
        CHECK(e.triangle == 0);
        CHECK(std::string(e.what()).find("triangle 0") != std::string::npos);
    }
}

TEST_CASE("parse errors carry line numbers") {
    try {
        load_mesh("3\n0 0\n1 0\n0 1\n0 1 2\n");
        FAIL("expected MeshParseError");
    } catch (const MeshParseError& e) {
        CHECK(e.line == 1);
    }
    try {
        load_mesh("3 1\n0 0\n1 junk\n0 1\n0 1 2\n");
        FAIL("expected MeshParseError");
    } catch (const MeshParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(load_mesh(""), MeshParseError);
    CHECK_THROWS_AS(load_mesh("4 1\n0 0\n1 0\n0 1\n0 1 2\n"), MeshParseError);  // short block
    CHECK_THROWS_AS(load_mesh("3 1\n0 0\n1 0\n0 1\n0 1 2\nextra\n"), MeshParseError);
}

TEST_CASE("non-manifold inputs are topology errors") {
    // Same directed edge twice.
    CHECK_THROWS_AS(load_mesh("4 2\n0 0\n1 0\n0 1\n1 1\n0 1 2\n0 1 3\n"), MeshTopologyError);
    // Bowtie: two triangles pinched at vertex 0.
    CHECK_THROWS_AS(load_mesh("5 2\n0 0\n1 0\n0 1\n-1 0\n0 -1\n0 1 2\n0 3 4\n"),
                    MeshTopologyError);
    // Duplicate vertices (vertex 3 coincides with vertex 0 within tolerance;
    // both triangles stay CCW so the duplicate check is the one that fires).
    try {
        load_mesh("4 2\n0 0\n1 0\n0 1\n1e-15 0\n0 1 2\n3 1 2\n");
        FAIL("expected MeshTopologyError");
    } catch (const MeshTopologyError& e) {
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
}

TEST_CASE("save/load round trip is canonical") {
    const std::string canonical = "3 1\n0 0\n1 0\n0 1\n0 1 2\n";
    CHECK(save_mesh(load_mesh(canonical)) == canonical);

    // Fractions without finite decimal expansions survive exactly.
    Mesh m = gen_polar_mesh(DiskSpec{1.0 / 3.0}, 4, 16);
    const std::string text = save_mesh(m);
    const Mesh back = load_mesh(text);
    REQUIRE(back.num_vertices() == m.num_vertices());
    for (int v = 0; v < m.num_vertices(); ++v) {
        CHECK(back.vertices[v].x() == m.vertices[v].x());
        CHECK(back.vertices[v].y() == m.vertices[v].y());
    }
    CHECK(save_mesh(back) == text);

    const Mesh star = gen_polar_mesh(StarSpec{1.0, 0.15, 3}, 6, 24);
    CHECK(save_mesh(load_mesh(save_mesh(star))) == save_mesh(star));
}

}  // TEST_SUITE

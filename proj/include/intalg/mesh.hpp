#pragma once

// Boundary triangulations of 3-dimensional polytopes and ASCII OFF output.

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <set>
#include <vector>

#include "intalg/polyvol.hpp"

namespace intalg {

struct Mesh {
    std::vector<RatVector> vertices;
    /// Triangles, counterclockwise when seen from outside.
    std::vector<std::array<std::size_t, 3>> faces;
};

/// Boundary of a bounded 3-polytope. Lower-dimensional or empty input gives an empty mesh.
inline Mesh polytope_mesh(const HPolytope& p) {
    if (p.dimension() != 3) throw Error(ErrorCode::InvalidArgument, "meshes are only built in dimension 3");
    Mesh mesh;
    if (volume_exact(p) == 0) return mesh;
    mesh.vertices = vertices(p);
    const auto& V = mesh.vertices;

    std::set<std::vector<std::size_t>> seen;
    for (const auto& h : p.halfspaces()) {
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < V.size(); ++i)
            if (h.evaluate(V[i]) == h.offset) on.push_back(i);
        if (on.size() < 3 || !seen.insert(on).second) continue;

        std::array<double, 3> c{0, 0, 0};
        for (auto i : on)
            for (int k = 0; k < 3; ++k) c[k] += V[i][k].get_d() / static_cast<double>(on.size());
        const std::array<double, 3> n{h.normal[0].get_d(), h.normal[1].get_d(), h.normal[2].get_d()};
        std::array<double, 3> e1{};
        for (int k = 0; k < 3; ++k) e1[k] = V[on[0]][k].get_d() - c[k];
        const std::array<double, 3> e2{n[1] * e1[2] - n[2] * e1[1], n[2] * e1[0] - n[0] * e1[2],
                                       n[0] * e1[1] - n[1] * e1[0]};
        auto angle = [&](std::size_t i) {
            double x = 0, y = 0;
            for (int k = 0; k < 3; ++k) {
                const double d = V[i][k].get_d() - c[k];
                x += d * e1[k];
                y += d * e2[k];
            }
            return std::atan2(y, x);
        };
        std::sort(on.begin(), on.end(), [&](std::size_t i, std::size_t j) { return angle(i) < angle(j); });
        for (std::size_t t = 1; t + 1 < on.size(); ++t) mesh.faces.push_back({on[0], on[t], on[t + 1]});
    }
    return mesh;
}

/// Concatenation; shared faces between pieces are kept.
inline Mesh merge_meshes(const std::vector<Mesh>& parts) {
    Mesh out;
    for (const auto& m : parts) {
        const std::size_t base = out.vertices.size();
        out.vertices.insert(out.vertices.end(), m.vertices.begin(), m.vertices.end());
        for (const auto& f : m.faces) out.faces.push_back({f[0] + base, f[1] + base, f[2] + base});
    }
    return out;
}

inline Mesh polytopes_mesh(const std::vector<HPolytope>& parts) {
    std::vector<Mesh> meshes;
    for (const auto& p : parts) meshes.push_back(polytope_mesh(p));
    return merge_meshes(meshes);
}

/// Enclosed volume by the divergence theorem, exact.
inline Rational mesh_signed_volume(const Mesh& mesh) {
    Rational total = 0;
    for (const auto& f : mesh.faces) {
        const auto& a = mesh.vertices[f[0]];
        const auto& b = mesh.vertices[f[1]];
        const auto& c = mesh.vertices[f[2]];
        total += a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                 a[2] * (b[0] * c[1] - b[1] * c[0]);
    }
    return total / 6;
}

/// "OFF", counts, one vertex per line with 12 significant digits, then "3 i j k" faces.
inline void write_off(std::ostream& out, const Mesh& mesh) {
    out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.faces.size() << " 0\n";
    for (const auto& v : mesh.vertices) {
        for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << to_decimal_string(v[k], 12);
        out << '\n';
    }
    for (const auto& f : mesh.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

}  // namespace intalg

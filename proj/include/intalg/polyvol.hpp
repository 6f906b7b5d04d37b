#pragma once

// Exact volumes of bounded H-polytopes.
//
// Volumes use Lasserre's facet recursion in exact arithmetic:
//
//     Vol_d(P) = (1/d) * sum_i  b_i / |a_ik| * Vol_{d-1}(pi_k(F_i))
//
// for P = { x : a_i . x <= b_i }, where k is the first nonzero coordinate of
// a_i, F_i the facet on a_i . x = b_i and pi_k the projection dropping x_k.
// Normals are kept as primitive integer vectors at every level and parallel
// constraints are merged, so a redundant copy of a facet is never counted twice.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "intalg/error.hpp"
#include "intalg/rational.hpp"

namespace intalg {

/// { x : <normal, x> <= offset }, or < when strict.
struct HalfSpace {
    std::vector<Integer> normal;
    Rational offset;
    bool strict = false;

    /// Builds a halfspace from a rational normal, scaled to a primitive integer vector.
    static HalfSpace make(std::span<const Rational> normal, const Rational& offset, bool strict = false) {
        Integer l = 1;
        for (const auto& x : normal) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> n;
        Integer g = 0;
        for (const auto& x : normal) {
            n.push_back(x.get_num() * (l / x.get_den()));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.back().get_mpz_t());
        }
        if (g == 0) throw Error(ErrorCode::InvalidArgument, "halfspace normal is zero");
        for (auto& x : n) x /= g;
        Rational off = offset * Rational(l) / Rational(g);
        return HalfSpace{std::move(n), std::move(off), strict};
    }

    static HalfSpace make(std::span<const std::int64_t> normal, const Rational& offset, bool strict = false) {
        return make(to_rational(normal), offset, strict);
    }

    std::size_t dimension() const { return normal.size(); }

    Rational evaluate(std::span<const Rational> x) const {
        Rational s = 0;
        for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * x[i];
        return s;
    }

    bool contains(std::span<const Rational> x) const {
        const Rational v = evaluate(x);
        return strict ? v < offset : v <= offset;
    }

    bool contains(std::span<const double> x) const {
        double v = 0;
        for (std::size_t i = 0; i < normal.size(); ++i) v += normal[i].get_d() * x[i];
        const double o = offset.get_d();
        return strict ? v < o : v <= o;
    }

    /// The halfspace moved by `shift`.
    HalfSpace translated(std::span<const Rational> shift) const {
        return HalfSpace{normal, offset + evaluate(shift), strict};
    }

    bool operator==(const HalfSpace&) const = default;
};

class HPolytope {
public:
    HPolytope() = default;
    HPolytope(std::size_t dimension, std::vector<HalfSpace> halfspaces)
        : dimension_(dimension), halfspaces_(std::move(halfspaces)) {
        for (const auto& h : halfspaces_) {
            if (h.dimension() != dimension_) {
                throw Error(ErrorCode::LengthMismatch, "halfspace dimension does not match polytope");
            }
        }
    }

    std::size_t dimension() const { return dimension_; }
    const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }

    void add(HalfSpace h) {
        if (h.dimension() != dimension_) throw Error(ErrorCode::LengthMismatch, "halfspace dimension mismatch");
        halfspaces_.push_back(std::move(h));
    }

    HPolytope intersect(const HPolytope& other) const {
        HPolytope out = *this;
        for (const auto& h : other.halfspaces_) out.add(h);
        return out;
    }

    template <typename T>
    bool contains(std::span<const T> x) const {
        return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const HalfSpace& h) { return h.contains(x); });
    }
    bool contains(const RatVector& x) const { return contains(std::span<const Rational>(x)); }
    bool contains(const std::vector<double>& x) const { return contains(std::span<const double>(x)); }

    /// The same set with only the tightest halfspace kept per normal direction.
    HPolytope tightened() const {
        std::map<std::vector<Integer>, HalfSpace> best;
        for (const auto& h : halfspaces_) {
            auto [it, fresh] = best.try_emplace(h.normal, h);
            if (fresh) continue;
            auto& cur = it->second;
            if (h.offset < cur.offset || (h.offset == cur.offset && h.strict)) cur = h;
        }
        std::vector<HalfSpace> hs;
        for (auto& [n, h] : best) hs.push_back(std::move(h));
        return HPolytope(dimension_, std::move(hs));
    }

    /// Membership in the closure (strict constraints relaxed).
    bool closure_contains(std::span<const Rational> x) const {
        return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                           [&](const HalfSpace& h) { return h.evaluate(x) <= h.offset; });
    }

private:
    std::size_t dimension_ = 0;
    std::vector<HalfSpace> halfspaces_;
};

/// Axis-aligned box [lo, hi] as a polytope.
inline HPolytope box_polytope(const RatVector& lo, const RatVector& hi) {
    const std::size_t d = lo.size();
    std::vector<HalfSpace> hs;
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<Integer> up(d, Integer(0)), down(d, Integer(0));
        up[k] = 1;
        down[k] = -1;
        hs.push_back({up, hi[k], false});
        hs.push_back({down, -lo[k], false});
    }
    return HPolytope(d, std::move(hs));
}

namespace detail {

struct Row {
    std::vector<Integer> a;
    Rational b;
};

inline std::vector<Row> rows_of(const HPolytope& p) {
    std::vector<Row> rows;
    rows.reserve(p.halfspaces().size());
    for (const auto& h : p.halfspaces()) rows.push_back({h.normal, h.offset});
    return rows;
}

// Divides the normal by its content. Returns false for a zero normal.
inline bool make_primitive(Row& row) {
    Integer g = 0;
    for (const auto& x : row.a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return false;
    if (g != 1) {
        for (auto& x : row.a) x /= g;
        row.b /= g;
    }
    return true;
}

enum class Shape { Empty, Flat, Solid };

// Merges parallel rows (keeping the tightest), resolves constant rows, and
// spots opposite pairs that pinch the set to a hyperplane or empty it.
inline Shape canonicalize(std::vector<Row>& rows) {
    std::map<std::vector<Integer>, Rational> best;
    for (auto& r : rows) {
        if (!make_primitive(r)) {
            if (r.b < 0) return Shape::Empty;
            continue;
        }
        auto [it, inserted] = best.try_emplace(std::move(r.a), r.b);
        if (!inserted && r.b < it->second) it->second = r.b;
    }
    rows.clear();
    for (auto& [a, b] : best) {
        std::vector<Integer> neg(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
        auto it = best.find(neg);
        if (it != best.end()) {
            const Rational width = b + it->second;
            if (width < 0) return Shape::Empty;
            if (width == 0) return Shape::Flat;
        }
    }
    rows.reserve(best.size());
    for (auto& [a, b] : best) rows.push_back({a, b});
    return Shape::Solid;
}

inline Rational lasserre(std::vector<Row> rows, std::size_t d) {
    if (canonicalize(rows) != Shape::Solid) return 0;
    if (d == 1) {
        std::optional<Rational> lo, hi;
        for (const auto& r : rows) {
            // primitive 1-d normals are +1 or -1
            if (r.a[0] > 0) {
                if (!hi || r.b < *hi) hi = r.b;
            } else {
                if (!lo || -r.b > *lo) lo = -r.b;
            }
        }
        if (!lo || !hi) throw Error(ErrorCode::Unbounded, "interval without two bounds");
        return *hi > *lo ? Rational(*hi - *lo) : Rational(0);
    }

    Rational total = 0;
    std::vector<Row> projected;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& f = rows[i];
        if (f.b == 0) continue;  // facet through the origin contributes nothing
        std::size_t k = 0;
        while (f.a[k] == 0) ++k;
        const int sign = sgn(f.a[k]);
        const Integer piv = abs(f.a[k]);

        projected.clear();
        bool empty = false;
        for (std::size_t l = 0; l < rows.size() && !empty; ++l) {
            if (l == i) continue;
            const Row& g = rows[l];
            Row p;
            p.a.reserve(d - 1);
            bool zero = true;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == k) continue;
                Integer v = g.a[j] * piv;
                if (g.a[k] != 0) v -= sign * g.a[k] * f.a[j];
                if (v != 0) zero = false;
                p.a.push_back(std::move(v));
            }
            p.b = g.b * piv;
            if (g.a[k] != 0) p.b -= sign * g.a[k] * f.b;
            if (zero) {
                if (p.b < 0) empty = true;
                continue;
            }
            projected.push_back(std::move(p));
        }
        if (empty) continue;
        const Rational facet = lasserre(projected, d - 1);
        if (facet != 0) total += f.b / piv * facet;
    }
    return total / static_cast<unsigned long>(d);
}

template <typename F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > m) return;
    while (true) {
        f(std::span<const std::size_t>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline RatMatrix normal_matrix(const std::vector<Row>& rows) {
    RatMatrix m;
    for (const auto& r : rows) {
        RatVector v;
        for (const auto& x : r.a) v.emplace_back(x);
        m.push_back(std::move(v));
    }
    return m;
}

// A nonzero direction r with a_i . r <= 0 for every row, if one exists. The
// recession cone is checked through its candidate extreme rays: the null
// directions of every rank d-1 subset of rows.
inline std::optional<RatVector> recession_direction(const std::vector<Row>& rows, std::size_t d) {
    const RatMatrix all = normal_matrix(rows);
    if (linalg::rank(all) < d) {
        auto ns = linalg::nullspace(all, d);
        return ns.front();
    }
    std::optional<RatVector> found;
    for_each_subset(rows.size(), d - 1, [&](std::span<const std::size_t> subset) {
        if (found) return;
        RatMatrix m;
        for (auto i : subset) m.push_back(all[i]);
        auto ns = linalg::nullspace(m, d);
        if (ns.size() != 1) return;
        for (int sign : {1, -1}) {
            RatVector dir = ns.front();
            if (sign < 0)
                for (auto& x : dir) x = -x;
            bool ok = true;
            for (const auto& row : all) {
                if (dot(row, dir) > 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                found = dir;
                return;
            }
        }
    });
    return found;
}

inline void require_bounded(const HPolytope& p) {
    if (p.dimension() == 0) return;
    auto rows = rows_of(p);
    if (rows.empty()) throw Error(ErrorCode::Unbounded, "polytope has no constraints");
    if (auto dir = recession_direction(rows, p.dimension())) {
        std::string text;
        for (const auto& x : *dir) text += (text.empty() ? "" : ",") + x.get_str();
        throw Error(ErrorCode::Unbounded, "recession direction (" + text + ")");
    }
}

}  // namespace detail

inline bool is_bounded(const HPolytope& p) {
    if (p.dimension() == 0) return true;
    auto rows = detail::rows_of(p);
    return !rows.empty() && !detail::recession_direction(rows, p.dimension());
}

/// Vertices of a bounded polytope: every feasible solution of a d x d
/// subsystem of the constraint hyperplanes, deduplicated exactly.
inline std::vector<RatVector> vertices(const HPolytope& input) {
    detail::require_bounded(input);
    const HPolytope p = input.tightened();
    const std::size_t d = p.dimension();
    const auto& hs = p.halfspaces();
    std::set<RatVector> found;
    detail::for_each_subset(hs.size(), d, [&](std::span<const std::size_t> subset) {
        RatMatrix a;
        RatVector rhs;
        for (auto i : subset) {
            RatVector row;
            for (const auto& x : hs[i].normal) row.emplace_back(x);
            a.push_back(std::move(row));
            rhs.push_back(hs[i].offset);
        }
        auto x = linalg::solve(a, rhs);
        if (x && p.closure_contains(*x)) found.insert(std::move(*x));
    });
    if (found.empty()) throw Error(ErrorCode::EmptyPolytope, "no feasible vertex");
    return {found.begin(), found.end()};
}

/// Euclidean volume of the closure of a bounded polytope. Lower-dimensional
/// and empty polytopes have volume 0.
inline Rational volume_exact(const HPolytope& p) {
    if (p.dimension() == 0) return 0;
    detail::require_bounded(p);
    return detail::lasserre(detail::rows_of(p), p.dimension());
}

/// Volume without the boundedness check, for callers that add a bounding box.
inline Rational volume_exact_unchecked(const HPolytope& p) {
    if (p.dimension() == 0) return 0;
    return detail::lasserre(detail::rows_of(p), p.dimension());
}

/// The simplex conv(v_0..v_d) in H-form. Throws InvalidArgument when the
/// points are affinely dependent.
inline HPolytope simplex_polytope(const std::vector<RatVector>& verts) {
    const std::size_t d = verts.size() - 1;
    std::vector<HalfSpace> hs;
    for (std::size_t omit = 0; omit <= d; ++omit) {
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i <= d; ++i)
            if (i != omit) on.push_back(i);
        RatMatrix diffs;
        for (std::size_t i = 1; i < on.size(); ++i) {
            RatVector row(d);
            for (std::size_t k = 0; k < d; ++k) row[k] = verts[on[i]][k] - verts[on[0]][k];
            diffs.push_back(std::move(row));
        }
        auto ns = linalg::nullspace(diffs, d);
        if (ns.size() != 1) throw Error(ErrorCode::InvalidArgument, "simplex vertices are affinely dependent");
        RatVector normal = ns.front();
        Rational off = dot(normal, verts[on[0]]);
        if (dot(normal, verts[omit]) > off) {
            for (auto& x : normal) x = -x;
            off = -off;
        }
        if (dot(normal, verts[omit]) == off) {
            throw Error(ErrorCode::InvalidArgument, "simplex vertices are affinely dependent");
        }
        hs.push_back(HalfSpace::make(normal, off));
    }
    return HPolytope(d, std::move(hs));
}

/// |det(v_1 - v_0, ..., v_d - v_0)| / d!.
inline Rational simplex_volume(const std::vector<RatVector>& verts) {
    const std::size_t d = verts.size() - 1;
    RatMatrix m;
    for (std::size_t i = 1; i <= d; ++i) {
        RatVector row(d);
        for (std::size_t k = 0; k < d; ++k) row[k] = verts[i][k] - verts[0][k];
        m.push_back(std::move(row));
    }
    return abs(linalg::determinant(std::move(m))) / factorial(static_cast<unsigned>(d));
}

}  // namespace intalg

#pragma once

// Binomial presentations of the structured families: the hypersurface
// B(a, a), the determinantal rings B(kb, b), and the rational normal scroll.

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "intalg/error.hpp"
#include "intalg/rational.hpp"

namespace intalg {

struct Variable {
    std::string name;
    /// Exponent vector of the monomial the variable maps to.
    IntVector image;
};

/// A monomial over the presentation variables, as an exponent per variable.
using Monomial = std::vector<std::int64_t>;

struct Relation {
    Monomial lhs;
    Monomial rhs;
};

struct Presentation {
    std::vector<Variable> variables;
    std::vector<Relation> relations;

    IntVector image(const Monomial& m) const {
        IntVector out(variables.empty() ? 0 : variables.front().image.size(), 0);
        for (std::size_t v = 0; v < variables.size(); ++v)
            for (std::size_t k = 0; k < out.size(); ++k) out[k] += m[v] * variables[v].image[k];
        return out;
    }

    /// Both sides map to the same exponent vector.
    bool holds(const Relation& r) const { return image(r.lhs) == image(r.rhs); }

    bool all_hold() const {
        return std::all_of(relations.begin(), relations.end(), [&](const Relation& r) { return holds(r); });
    }

    /// The relation with variables replaced by their images: the sorted
    /// multisets of both sides, as an unordered pair. Compares relations of
    /// presentations whose variables carry different names.
    std::pair<std::vector<IntVector>, std::vector<IntVector>> canonical(const Relation& r) const {
        auto side = [&](const Monomial& m) {
            std::vector<IntVector> out;
            for (std::size_t v = 0; v < variables.size(); ++v)
                for (std::int64_t e = 0; e < m[v]; ++e) out.push_back(variables[v].image);
            std::sort(out.begin(), out.end());
            return out;
        };
        auto l = side(r.lhs), rr = side(r.rhs);
        if (rr < l) std::swap(l, rr);
        return {l, rr};
    }

    std::string render(const Monomial& m) const {
        std::string out;
        for (std::size_t v = 0; v < variables.size(); ++v) {
            if (m[v] == 0) continue;
            if (!out.empty()) out += '*';
            out += variables[v].name;
            if (m[v] != 1) out += '^' + std::to_string(m[v]);
        }
        return out.empty() ? "1" : out;
    }

    /// One relation per line, "LHS = RHS".
    std::string render() const {
        std::string out;
        for (const auto& r : relations) out += render(r.lhs) + " = " + render(r.rhs) + '\n';
        return out;
    }
};

namespace detail {

inline Monomial unit(std::size_t count, std::size_t v, std::int64_t e = 1) {
    Monomial m(count, 0);
    m[v] = e;
    return m;
}

inline Monomial product(Monomial x, const Monomial& y) {
    for (std::size_t v = 0; v < x.size(); ++v) x[v] += y[v];
    return x;
}

}  // namespace detail

/// B(a, a) = k[x_1..x_n, A, B, C] / (A B - x^a C) with A = (1,0,a), B = (0,1,a), C = (1,1,a).
inline Presentation hypersurface_presentation(const IntVector& a) {
    if (a.empty()) throw Error(ErrorCode::LengthMismatch, "exponent vector is empty");
    for (auto x : a)
        if (x < 1) throw Error(ErrorCode::NonPositiveEntry, "exponents must be positive");
    const std::size_t n = a.size(), d = n + 2;
    Presentation p;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(d, 0);
        e[i + 2] = 1;
        p.variables.push_back({"x" + std::to_string(i + 1), e});
    }
    auto lifted = [&](std::int64_t r, std::int64_t s) {
        IntVector v{r, s};
        v.insert(v.end(), a.begin(), a.end());
        return v;
    };
    p.variables.push_back({"A", lifted(1, 0)});
    p.variables.push_back({"B", lifted(0, 1)});
    p.variables.push_back({"C", lifted(1, 1)});
    const std::size_t count = p.variables.size();
    Relation r;
    r.lhs = detail::product(detail::unit(count, n), detail::unit(count, n + 1));
    r.rhs = detail::unit(count, n + 2);
    for (std::size_t i = 0; i < n; ++i) r.rhs[i] = a[i];
    p.relations.push_back(std::move(r));
    return p;
}

struct Determinantal {
    Presentation presentation;
    /// 2 x (k+1) matrix of monomials.
    std::array<std::vector<Monomial>, 2> matrix;
};

namespace detail {

inline Determinantal minors_of(Presentation p, std::array<std::vector<Monomial>, 2> m) {
    const std::size_t cols = m[0].size();
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = i + 1; j < cols; ++j)
            p.relations.push_back({product(m[0][i], m[1][j]), product(m[0][j], m[1][i])});
    return {std::move(p), std::move(m)};
}

// Rows (x_0^e, x_1, x_3, ..., x_{k+1}) and (x_2, x_3, ..., x_{k+2}).
inline std::array<std::vector<Monomial>, 2> scroll_matrix(std::size_t count, std::int64_t k, std::int64_t e) {
    std::array<std::vector<Monomial>, 2> m;
    m[0].push_back(unit(count, 0, e));
    m[1].push_back(unit(count, 2));
    m[0].push_back(unit(count, 1));
    m[1].push_back(unit(count, 3));
    for (std::int64_t c = 2; c <= k; ++c) {
        m[0].push_back(unit(count, static_cast<std::size_t>(c + 1)));
        m[1].push_back(unit(count, static_cast<std::size_t>(c + 2)));
    }
    return m;
}

}  // namespace detail

/// I_2(M_{k,b}) with x_0 = (0,0,1), x_1 = (1,0,kb), x_2 = (0,1,b), x_{i+2} = (1,i,kb).
inline Determinantal determinantal_presentation(std::int64_t k, std::int64_t b) {
    if (k < 1 || b < 1) throw Error(ErrorCode::InvalidArgument, "k and b must be positive");
    Presentation p;
    p.variables.push_back({"x0", {0, 0, 1}});
    p.variables.push_back({"x1", {1, 0, k * b}});
    p.variables.push_back({"x2", {0, 1, b}});
    for (std::int64_t i = 1; i <= k; ++i) p.variables.push_back({"x" + std::to_string(i + 2), {1, i, k * b}});
    const std::size_t count = p.variables.size();
    return detail::minors_of(std::move(p), detail::scroll_matrix(count, k, b));
}

/// T, xT, xyT, yT, x^{-1}yT, ..., x^{-(a-1)}yT in (x, y, T) exponents.
inline std::vector<IntVector> scroll_generators(std::int64_t a) {
    if (a < 1) throw Error(ErrorCode::InvalidArgument, "a must be positive");
    std::vector<IntVector> g{{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    for (std::int64_t j = 1; j < a; ++j) g.push_back({-j, 1, 1});
    return g;
}

/// I_2 of the 2 x (a+1) scroll matrix under x_0 = xT, x_1 = xyT, x_2 = T,
/// x_{j+3} = x^{-j} yT. Every column then has ratio x^{-1}.
inline Determinantal scroll_presentation(std::int64_t a) {
    const auto g = scroll_generators(a);
    Presentation p;
    p.variables.push_back({"x0", g[1]});
    p.variables.push_back({"x1", g[2]});
    p.variables.push_back({"x2", g[0]});
    p.variables.push_back({"x3", g[3]});
    for (std::int64_t j = 1; j < a; ++j)
        p.variables.push_back({"x" + std::to_string(j + 3), g[static_cast<std::size_t>(j + 3)]});
    const std::size_t count = p.variables.size();
    return detail::minors_of(std::move(p), detail::scroll_matrix(count, a, 1));
}

}  // namespace intalg

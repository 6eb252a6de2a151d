#include "wildvf/embed.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "wildvf/error.hpp"

namespace wildvf {

const VarContext& xyz_context() {
    static const VarContext ctx{"x", "y", "z"};
    return ctx;
}

// ---------------------------------------------------------------------------
// PolySpan

Poly PolySpan::reduce(Poly p) const {
    if (!(p.context() == ctx_)) throw Error(ErrorCode::ContextMismatch, "polynomial outside the span's context");
    for (const auto& b : basis_) {
        const Rat c = p.coefficient(b.leading_monomial());
        if (sgn(c) != 0) p -= c * b;
    }
    return p;
}

bool PolySpan::contains(const Poly& p) const { return reduce(p).is_zero(); }

bool PolySpan::insert(const Poly& p) {
    Poly w = reduce(p);
    if (w.is_zero()) return false;
    w *= 1 / w.leading_coefficient();
    const Monomial& pivot = w.leading_monomial();
    for (auto& b : basis_) {
        const Rat c = b.coefficient(pivot);
        if (sgn(c) != 0) b -= c * w;
    }
    auto pos = std::lower_bound(basis_.begin(), basis_.end(), pivot, [](const Poly& b, const Monomial& m) {
        return GrlexGreater{}(b.leading_monomial(), m);
    });
    basis_.insert(pos, std::move(w));
    return true;
}

// Potentials of closed pairs
// Lemma-style potential

Poly potential(const Poly& f, const Poly& g) {
    if (!(f.context() == g.context())) throw Error(ErrorCode::ContextMismatch, "potential operands");
    const std::size_t x = f.context().index_of("x");
    const std::size_t y = f.context().index_of("y");
    if (!(partial(f, y) == partial(g, x))) throw Error(ErrorCode::NotClosed, "df/dy != dg/dx");
    Poly h = antiderivative(f, x);
    const Poly rest = g - partial(h, y);
    if (!is_free_of(rest, x)) throw Error(ErrorCode::InternalError, "y-remainder depends on x");
    h += antiderivative(rest, y);
    return h;
}

// ---------------------------------------------------------------------------
// Invariant flag

RatMatrix invariant_flag(const MatrixPair& pair) {
    const std::size_t n = pair.n();
    RowSpace prefix(n);
    std::vector<RatVector> flag;
    while (flag.size() < n) {
        std::vector<bool> is_pivot(n, false);
        for (auto p : prefix.pivots()) is_pivot[p] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        const std::size_t m = free_cols.size();

        // Induced maps on V / prefix, in the coordinates of the free columns.
        RatMatrix induced(2 * m, m);
        for (std::size_t j = 0; j < m; ++j) {
            const RatVector s_img = prefix.reduce(pair.S().column(free_cols[j]));
            const RatVector t_img = prefix.reduce(pair.T().column(free_cols[j]));
            for (std::size_t i = 0; i < m; ++i) {
                induced(i, j) = s_img[free_cols[i]];
                induced(m + i, j) = t_img[free_cols[i]];
            }
        }
        const auto kernel = nullspace(induced);
        if (kernel.empty()) {
            throw Error(ErrorCode::InternalError,
                        "no common kernel vector at flag step " + std::to_string(flag.size() + 1));
        }
        const Echelon ech = rref(RatMatrix::from_rows(kernel));
        RatVector v(n, Rat(0));
        for (std::size_t j = 0; j < m; ++j) v[free_cols[j]] = ech.reduced(0, j);
        prefix.insert(v);
        flag.push_back(std::move(v));
    }
    return RatMatrix::from_columns(flag, n);
}

// ---------------------------------------------------------------------------
// Closure and coordinates

PolySpan closure(std::span<const Poly> gens) {
    const VarContext& ctx = gens.empty() ? xyz_context() : gens.front().context();
    const std::size_t x = ctx.index_of("x");
    const std::size_t y = ctx.index_of("y");
    PolySpan span(ctx);
    std::deque<Poly> queue(gens.begin(), gens.end());
    while (!queue.empty()) {
        Poly p = std::move(queue.front());
        queue.pop_front();
        if (!span.insert(p)) continue;
        queue.push_back(partial(p, x));
        queue.push_back(partial(p, y));
    }
    return span;
}

namespace {

struct MonomialIndex {
    std::map<Monomial, std::size_t, GrlexGreater> slot;

    void add(const Poly& p) {
        for (const auto& [m, c] : p.terms()) slot.try_emplace(m, slot.size());
    }
    RatVector coords(const Poly& p) const {
        RatVector v(slot.size(), Rat(0));
        for (const auto& [m, c] : p.terms()) v[slot.at(m)] = c;
        return v;
    }
};

}  // namespace

std::optional<RatMatrix> derivative_action(std::span<const Poly> polys, std::size_t var) {
    const std::size_t n = polys.size();
    MonomialIndex index;
    std::vector<Poly> images;
    for (const auto& p : polys) {
        index.add(p);
        images.push_back(partial(p, var));
        index.add(images.back());
    }
    RatMatrix cols(index.slot.size(), n);
    for (std::size_t k = 0; k < n; ++k) cols.set_column(k, index.coords(polys[k]));
    ColumnSolver solver(cols);
    if (!solver.independent()) return std::nullopt;
    RatMatrix action(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        auto c = solver.solve(index.coords(images[k]));
        if (!c) return std::nullopt;
        action.set_column(k, *c);
    }
    return action;
}

// ---------------------------------------------------------------------------
// Embedding

namespace {
RatMatrix in_basis(const RatMatrix& flag, const RatMatrix& m) {
    auto inv = inverse(flag);
    if (!inv) throw Error(ErrorCode::InternalError, "flag basis is singular");
    return *inv * m * flag;
}
}  // namespace

RatMatrix EmbeddedModule::flag_S() const { return in_basis(flag_basis, source.S()); }
RatMatrix EmbeddedModule::flag_T() const { return in_basis(flag_basis, source.T()); }

EmbeddedModule embed(const MatrixPair& pair) {
    const VarContext& ctx = xyz_context();
    const std::size_t z = ctx.index_of("z");
    EmbeddedModule em{pair, invariant_flag(pair), {}};
    const RatMatrix s = em.flag_S();
    const RatMatrix t = em.flag_T();
    const std::size_t n = pair.n();

    PolySpan span(ctx);
    em.polys.push_back(Poly::constant(ctx, Rat(1)));
    span.insert(em.polys.back());
    for (std::size_t k = 1; k < n; ++k) {
        Poly f(ctx);
        Poly g(ctx);
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= k && (sgn(s(i, k)) != 0 || sgn(t(i, k)) != 0)) {
                throw Error(ErrorCode::InternalError, "flag is not invariant at column " + std::to_string(k + 1));
            }
            if (i < k) {
                if (sgn(s(i, k)) != 0) f += s(i, k) * em.polys[i];
                if (sgn(t(i, k)) != 0) g += t(i, k) * em.polys[i];
            }
        }
        Poly h = potential(f, g);
        if (span.contains(h)) {
            unsigned top = 0;
            for (const auto& p : em.polys) top = std::max(top, p.degree_in(z));
            Monomial bump{std::vector<unsigned>(ctx.size(), 0)};
            bump.exponents[z] = top + 1;
            h.add_term(bump, Rat(1));
        }
        span.insert(h);
        em.polys.push_back(std::move(h));
    }
    return em;
}

VerificationReport verify_embedding(const EmbeddedModule& em) {
    VerificationReport report;
    const std::size_t n = em.source.n();

    if (em.polys.size() != n) {
        report.fail("dimension", std::nullopt,
                    std::to_string(em.polys.size()) + " polynomials for a module of dimension " + std::to_string(n));
        return report;
    }
    report.pass("dimension");

    const bool flag_ok = em.flag_basis.rows() == n && em.flag_basis.cols() == n && is_invertible(em.flag_basis);
    if (!flag_ok) {
        report.fail("flag_basis", std::nullopt, "flag basis is not an invertible n x n matrix");
        return report;
    }
    report.pass("flag_basis");

    const RatMatrix s = em.flag_S();
    const RatMatrix t = em.flag_T();
    {
        std::optional<std::size_t> bad;
        for (std::size_t k = 0; k < n && !bad; ++k)
            for (std::size_t i = k; i < n; ++i)
                if (sgn(s(i, k)) != 0 || sgn(t(i, k)) != 0) {
                    bad = k + 1;
                    break;
                }
        if (bad) report.fail("flag_invariant", bad, "S v_k or T v_k leaves span(v_1..v_{k-1})");
        else report.pass("flag_invariant");
    }

    for (std::size_t k = 0; k < n; ++k) {
        if (!(em.polys[k].context() == xyz_context())) {
            report.fail("context", k + 1, "polynomial is not over [x, y, z]");
            return report;
        }
    }

    PolySpan span(xyz_context());
    std::optional<std::size_t> dependent;
    for (std::size_t k = 0; k < n; ++k)
        if (!span.insert(em.polys[k]) && !dependent) dependent = k + 1;
    if (dependent) report.fail("independent", dependent, "polynomial lies in the span of its predecessors");
    else report.pass("independent");

    const std::size_t x = xyz_context().index_of("x");
    const std::size_t y = xyz_context().index_of("y");
    std::optional<std::size_t> leaves;
    for (std::size_t k = 0; k < n && !leaves; ++k)
        if (!span.contains(partial(em.polys[k], x)) || !span.contains(partial(em.polys[k], y))) leaves = k + 1;
    if (leaves) report.fail("closed", leaves, "a partial derivative leaves the span");
    else report.pass("closed");

    const std::size_t closure_dim = closure(em.polys).dimension();
    if (closure_dim != span.dimension()) {
        report.fail("closure", std::nullopt,
                    "closure has dimension " + std::to_string(closure_dim) + ", span has " +
                        std::to_string(span.dimension()));
    } else {
        report.pass("closure");
    }

    const std::pair<const char*, std::pair<std::size_t, const RatMatrix*>> families[] = {
        {"intertwine_x", {x, &s}}, {"intertwine_y", {y, &t}}};
    for (const auto& [name, spec] : families) {
        const auto action = derivative_action(em.polys, spec.first);
        if (!action) {
            report.fail(name, std::nullopt, "derivative action is not defined on these polynomials");
            continue;
        }
        std::optional<std::size_t> bad;
        for (std::size_t k = 0; k < n && !bad; ++k)
            if (action->column(k) != spec.second->column(k)) bad = k + 1;
        if (bad) report.fail(name, bad, "derivative image disagrees with the operator column");
        else report.pass(name);
    }
    return report;
}

}  // namespace wildvf

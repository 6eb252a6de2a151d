#include "wildvf/reduce.hpp"

#include <sstream>

#include "wildvf/error.hpp"

namespace wildvf {

const VarContext& xyzt_context() {
    static const VarContext ctx{"x", "y", "z", "t"};
    return ctx;
}

std::span<const std::string> triangular_order() {
    static const std::vector<std::string> order{"t", "z", "y", "x"};
    return order;
}

RealizedAlgebra realize(const MatrixPair& pair) { return realize(embed(pair)); }

RealizedAlgebra realize(const EmbeddedModule& em) {
    const VarContext& ctx = xyzt_context();
    std::vector<Derivation> gens;
    gens.push_back(Derivation::partial(ctx, "x"));
    gens.push_back(Derivation::partial(ctx, "y"));
    for (const auto& p : em.polys) gens.push_back(Derivation::along(p.in_context(ctx), "t"));
    DerivationAlgebra da = from_derivations(gens);
    return RealizedAlgebra{std::move(gens), std::move(da.algebra), em};
}

LieAlg expected_semidirect(const EmbeddedModule& em) {
    const RatMatrix action[] = {em.flag_S(), em.flag_T()};
    return semidirect(LieAlg::abelian(2), em.source.n(), action);
}

namespace {

constexpr std::size_t kX = 0, kY = 1, kZ = 2, kT = 3;

bool has_m_shape(const Derivation& d) {
    return d.coeff(kX).is_constant() && d.coeff(kY).is_constant() && d.coeff(kZ).is_zero() &&
           is_free_of(d.coeff(kT), kT);
}

template <class Pred>
void first_failing(VerificationReport& report, const std::string& name, std::size_t count, const std::string& detail,
                   Pred ok) {
    for (std::size_t k = 0; k < count; ++k) {
        if (!ok(k)) {
            report.fail(name, k + 1, detail);
            return;
        }
    }
    report.pass(name);
}

}  // namespace

VerificationReport module_action_check(const RealizedAlgebra& ra) {
    VerificationReport report;
    const VarContext& ctx = xyzt_context();
    const std::size_t n = ra.source.polys.size();
    const auto& g = ra.generators;

    if (g.size() != n + 2 || ra.abstract.dim() != g.size()) {
        report.fail("count", std::nullopt,
                    std::to_string(g.size()) + " generators, " + std::to_string(ra.abstract.dim()) +
                        "-dimensional abstract algebra, module of dimension " + std::to_string(n));
        return report;
    }
    report.pass("count");
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!(g[i].context() == ctx)) {
            report.fail("context", i + 1, "generator is not over [x, y, z, t]");
            return report;
        }
    }

    const Derivation dx = Derivation::partial(ctx, "x");
    const Derivation dy = Derivation::partial(ctx, "y");
    if (g[0] == dx && g[1] == dy) report.pass("base");
    else report.fail("base", g[0] == dx ? 2 : 1, "leading generators must be d/dx and d/dy");

    first_failing(report, "shape", g.size(), "not of the form a d/dx + b d/dy + f(x,y,z) d/dt",
                  [&](std::size_t k) { return has_m_shape(g[k]); });
    first_failing(report, "triangular", g.size(), "outside the triangular algebra",
                  [&](std::size_t k) { return is_triangular(g[k], triangular_order()); });

    std::vector<Poly> lifted;
    for (const auto& p : ra.source.polys) lifted.push_back(p.in_context(ctx));
    first_failing(report, "ideal_generator", n, "E_k differs from p_k d/dt",
                  [&](std::size_t k) { return g[k + 2] == Derivation::along(lifted[k], "t"); });
    first_failing(report, "action_x", n, "[d/dx, E_k] differs from (dp_k/dx) d/dt", [&](std::size_t k) {
        return bracket(g[0], g[k + 2]) == Derivation::along(partial(lifted[k], kX), "t");
    });
    first_failing(report, "action_y", n, "[d/dy, E_k] differs from (dp_k/dy) d/dt", [&](std::size_t k) {
        return bracket(g[1], g[k + 2]) == Derivation::along(partial(lifted[k], kY), "t");
    });
    first_failing(report, "ideal_abelian", n, "[E_j, E_k] is nonzero", [&](std::size_t j) {
        for (std::size_t k = j + 1; k < n; ++k)
            if (!bracket(g[j + 2], g[k + 2]).is_zero()) return false;
        return true;
    });
    first_failing(report, "structure_constants", g.size(), "generator brackets disagree with the constants",
                  [&](std::size_t i) {
                      for (std::size_t j = i + 1; j < g.size(); ++j) {
                          Derivation expected(ctx);
                          for (std::size_t k = 0; k < g.size(); ++k)
                              if (sgn(ra.abstract.c(i, j, k)) != 0) expected += ra.abstract.c(i, j, k) * g[k];
                          if (!(bracket(g[i], g[j]) == expected)) return false;
                      }
                      return true;
                  });
    return report;
}

VerificationReport cross_check(const RealizedAlgebra& ra) {
    VerificationReport report;
    const VerificationReport valid = ra.abstract.validate();
    for (const auto& c : valid.checks) report.checks.push_back(c);

    const std::size_t n = ra.source.source.n();
    LieAlg expected = LieAlg::abelian(1);
    try {
        expected = expected_semidirect(ra.source);
    } catch (const Error& e) {
        report.fail("semidirect", std::nullopt, e.what());
        return report;
    }
    if (expected.dim() != ra.abstract.dim()) {
        report.fail("semidirect", std::nullopt, "dimension " + std::to_string(ra.abstract.dim()) + " vs " +
                                                    std::to_string(expected.dim()));
        return report;
    }
    std::optional<std::size_t> bad;
    for (std::size_t i = 0; i < expected.dim() && !bad; ++i)
        for (std::size_t j = 0; j < expected.dim() && !bad; ++j)
            if (expected.bracket_basis(i, j) != ra.abstract.bracket_basis(i, j)) bad = i + 1;
    if (bad) report.fail("semidirect", bad, "structure constants differ from the semidirect product");
    else report.pass("semidirect");

    if (iso_invariants(expected) == iso_invariants(ra.abstract)) report.pass("fingerprint");
    else report.fail("fingerprint", std::nullopt, "fingerprints differ");

    const SeriesProfile profile = series_profile(ra.abstract);
    if (!profile.nilpotent()) {
        report.fail("nilpotent", std::nullopt, "lower central series stalls above 0");
    } else if (*profile.nilpotency_class > n + 1) {
        report.fail("nilpotent", std::nullopt, "class " + std::to_string(*profile.nilpotency_class) +
                                                   " exceeds n + 1 = " + std::to_string(n + 1));
    } else {
        report.pass("nilpotent");
    }
    return report;
}

RealizationReports verify_realization(const RealizedAlgebra& ra) {
    return {verify_embedding(ra.source), module_action_check(ra), cross_check(ra)};
}

std::string to_latex(const RealizedAlgebra& ra) {
    std::ostringstream os;
    os << "\\begin{align*}\n";
    for (std::size_t i = 0; i < ra.generators.size(); ++i) {
        os << "  e_{" << i + 1 << "} &= " << ra.generators[i].to_latex() << " \\\\\n";
    }
    os << "\\end{align*}\n";
    os << "\\begin{align*}\n";
    bool any = false;
    for (std::size_t i = 0; i < ra.abstract.dim(); ++i)
        for (std::size_t j = i + 1; j < ra.abstract.dim(); ++j) {
            const RatVector v = ra.abstract.bracket_basis(i, j);
            if (is_zero(v)) continue;
            any = true;
            std::string rhs;
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (sgn(v[k]) == 0) continue;
                const Rat mag = abs(v[k]);
                std::string coeff;
                if (mag.get_den() != 1) {
                    coeff = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
                } else if (mag != 1) {
                    coeff = mag.get_num().get_str();
                }
                const bool neg = sgn(v[k]) < 0;
                rhs += rhs.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
                rhs += coeff + "e_{" + std::to_string(k + 1) + "}";
            }
            os << "  [e_{" << i + 1 << "}, e_{" << j + 1 << "}] &= " << rhs << " \\\\\n";
        }
    if (!any) os << "  &\\text{abelian} \\\\\n";
    os << "\\end{align*}\n";
    return os.str();
}

}  // namespace wildvf

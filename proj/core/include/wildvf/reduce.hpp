#ifndef WILDVF_REDUCE_HPP
#define WILDVF_REDUCE_HPP

#include <span>
#include <string>
#include <vector>

#include "wildvf/derivation.hpp"
#include "wildvf/embed.hpp"
#include "wildvf/liealg.hpp"
#include "wildvf/matmod.hpp"
#include "wildvf/report.hpp"

namespace wildvf {

/// [x, y, z, t]
const VarContext& xyzt_context();

/// Variable order (t, z, y, x) under which every generator is triangular:
/// the d/dt coefficient depends on z, y, x only and the d/dx coefficient
/// is constant.
std::span<const std::string> triangular_order();

/// A nilpotent algebra of vector fields in four variables realizing the
/// module of a matrix pair: generators d/dx, d/dy, then E_k = p_k d/dt in
/// flag order.
struct RealizedAlgebra {
    std::vector<Derivation> generators;
    LieAlg abstract;
    EmbeddedModule source;

    std::size_t dim() const noexcept { return generators.size(); }
};

/// Embeds the pair, attaches d/dt to each polynomial, prepends d/dx and
/// d/dy and computes structure constants from the actual brackets.
RealizedAlgebra realize(const MatrixPair& pair);
RealizedAlgebra realize(const EmbeddedModule& em);

/// Generator shapes (constant d/dx, d/dy parts, t-free d/dt part, no d/dz
/// part, triangular), the bracket identities [d/dx, E_k] = (dp_k/dx) d/dt
/// and [d/dy, E_k] = (dp_k/dy) d/dt, commutativity of the E_k, and
/// agreement of the structure constants with the generator brackets.
VerificationReport module_action_check(const RealizedAlgebra& ra);

/// Compares the structure constants with the abstract semidirect product
/// of a 2-dimensional abelian algebra acting on Q^n through the source
/// pair in its flag basis, plus Jacobi, fingerprints and nilpotency.
VerificationReport cross_check(const RealizedAlgebra& ra);

struct RealizationReports {
    VerificationReport embedding;
    VerificationReport module_action;
    VerificationReport cross;

    bool ok() const noexcept { return embedding.ok() && module_action.ok() && cross.ok(); }
};

RealizationReports verify_realization(const RealizedAlgebra& ra);

/// The abstract semidirect product the realization should reproduce.
LieAlg expected_semidirect(const EmbeddedModule& em);

/// Human-readable LaTeX list of the generators and nonzero brackets.
std::string to_latex(const RealizedAlgebra& ra);

}  // namespace wildvf

#endif

#ifndef WILDVF_EMBED_HPP
#define WILDVF_EMBED_HPP

#include <optional>
#include <span>
#include <vector>

#include "wildvf/linalg.hpp"
#include "wildvf/matmod.hpp"
#include "wildvf/poly.hpp"
#include "wildvf/report.hpp"

namespace wildvf {

/// The shared context [x, y, z] of the universal module Q[x,y,z], where
/// x and y act by d/dx and d/dy.
const VarContext& xyz_context();

/// Linear span of polynomials in fully reduced row-echelon form, columns
/// ordered by descending graded-lex monomial. Each basis element is monic
/// at its pivot (its leading monomial) and no other element contains that
/// monomial.
class PolySpan {
public:
    explicit PolySpan(VarContext ctx) : ctx_(std::move(ctx)) {}

    const VarContext& context() const noexcept { return ctx_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    const std::vector<Poly>& basis() const noexcept { return basis_; }

    /// Returns true if p was outside the span.
    bool insert(const Poly& p);
    bool contains(const Poly& p) const;
    Poly reduce(Poly p) const;

private:
    VarContext ctx_;
    std::vector<Poly> basis_;  // sorted by pivot, largest first
};

/// h with dh/dx = f and dh/dy = g, containing no monomial free of both x
/// and y. Needs variables named x and y. Throws Error{NotClosed} when
/// df/dy != dg/dx.
Poly potential(const Poly& f, const Poly& g);

/// Columns v_1..v_n with S v_k, T v_k in span(v_1..v_{k-1}), chosen
/// bottom-up from common kernels of the maps induced on each quotient.
RatMatrix invariant_flag(const MatrixPair& pair);

/// Smallest span containing gens and closed under d/dx and d/dy.
PolySpan closure(std::span<const Poly> gens);

/// Coordinates of d/d(var) p_k in the basis (p_1..p_n), as columns.
/// Empty when some derivative leaves the span or the polys are dependent.
std::optional<RatMatrix> derivative_action(std::span<const Poly> polys, std::size_t var);

/// The module embedded into Q[x,y,z]: p_k is the image of the flag vector
/// v_k (column k of flag_basis).
struct EmbeddedModule {
    MatrixPair source;
    RatMatrix flag_basis;
    std::vector<Poly> polys;

    /// S and T written in the flag basis: F^-1 S F, F^-1 T F.
    RatMatrix flag_S() const;
    RatMatrix flag_T() const;
};

/// Inductive embedding: p_1 = 1; p_k = potential of the images of S v_k
/// and T v_k, bumped by z^d when it already lies in the previous span.
EmbeddedModule embed(const MatrixPair& pair);

/// Rechecks independence, closure and both intertwining families.
VerificationReport verify_embedding(const EmbeddedModule& em);

}  // namespace wildvf

#endif

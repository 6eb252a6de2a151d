#ifndef WILDVF_LIEALG_HPP
#define WILDVF_LIEALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wildvf/derivation.hpp"
#include "wildvf/linalg.hpp"
#include "wildvf/report.hpp"

namespace wildvf {

/// Finite-dimensional Lie algebra by dense structure constants:
/// [e_i, e_j] = sum_k c(i, j, k) e_k.
class LieAlg {
public:
    /// Validates antisymmetry and Jacobi; throws Error{InvalidStructure}
    /// naming the first offending index triple.
    static LieAlg make(std::size_t dim, std::vector<Rat> constants, std::vector<std::string> labels = {});
    /// No validation. For deserialization of untrusted data and mutation tests.
    static LieAlg unchecked(std::size_t dim, std::vector<Rat> constants, std::vector<std::string> labels = {});
    static LieAlg abelian(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    const Rat& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
    const std::vector<Rat>& constants() const noexcept { return c_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    RatVector bracket(const RatVector& a, const RatVector& b) const;
    RatVector bracket_basis(std::size_t i, std::size_t j) const;

    /// Antisymmetry and Jacobi, exactly.
    VerificationReport validate() const;

    /// Same dimension and constants; labels are ignored.
    friend bool operator==(const LieAlg& a, const LieAlg& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

private:
    LieAlg(std::size_t dim, std::vector<Rat> constants, std::vector<std::string> labels);

    std::size_t dim_;
    std::vector<Rat> c_;
    std::vector<std::string> labels_;
};

/// Structure constants of span(Ds) together with the spanning derivations.
struct DerivationAlgebra {
    LieAlg algebra;
    std::vector<Derivation> basis;
};

/// Throws Error{NotIndependent} or Error{NotClosed} ("(i, j)", 1-based).
DerivationAlgebra from_derivations(std::span<const Derivation> ds);

/// B x| W with W abelian of dimension w_dim; action[i] is the endomorphism
/// of W given by basis element i of B (column l = image of w_l). Basis
/// order: B first, then W. Throws Error{NotHomomorphism}.
LieAlg semidirect(const LieAlg& base, std::size_t w_dim, std::span<const RatMatrix> action);

struct SeriesProfile {
    std::vector<std::size_t> lcs_dims;
    std::vector<std::size_t> ds_dims;
    std::size_t center_dim = 0;
    std::optional<std::size_t> nilpotency_class;  // empty: not nilpotent

    bool nilpotent() const noexcept { return nilpotency_class.has_value(); }
    friend bool operator==(const SeriesProfile&, const SeriesProfile&) = default;
};

SeriesProfile series_profile(const LieAlg& l);

/// Necessary conditions for isomorphism. Equal fingerprints do not imply
/// isomorphic algebras.
struct Fingerprint {
    std::size_t dim = 0;
    std::vector<std::size_t> lcs_dims;
    std::vector<std::size_t> ds_dims;
    std::size_t center_dim = 0;
    std::vector<std::size_t> lcs_centralizer_dims;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint iso_invariants(const LieAlg& l);

/// True iff P is invertible and e_i -> sum_a P(a, i) f_a is a bracket
/// homomorphism from l1 to l2. Throws Error{DimensionMismatch}.
bool check_isomorphism_certificate(const LieAlg& l1, const LieAlg& l2, const RatMatrix& p);

/// The algebra in the basis f_i = sum_a P(a, i) e_a; P is then a valid
/// certificate from the result to l. Throws Error{DimensionMismatch}.
LieAlg change_basis(const LieAlg& l, const RatMatrix& p);

}  // namespace wildvf

#endif

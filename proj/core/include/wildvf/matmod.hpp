#ifndef WILDVF_MATMOD_HPP
#define WILDVF_MATMOD_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

#include "wildvf/linalg.hpp"
#include "wildvf/poly.hpp"

namespace wildvf {

/// Commuting nilpotent S, T presenting the Q[x,y]-module where x acts as S
/// and y acts as T. Only constructible through validate_pair.
class MatrixPair {
public:
    std::size_t n() const noexcept { return s_.rows(); }
    const RatMatrix& S() const noexcept { return s_; }
    const RatMatrix& T() const noexcept { return t_; }

    friend bool operator==(const MatrixPair&, const MatrixPair&) = default;

private:
    friend MatrixPair validate_pair(RatMatrix s, RatMatrix t);
    MatrixPair(RatMatrix s, RatMatrix t) : s_(std::move(s)), t_(std::move(t)) {}

    RatMatrix s_;
    RatMatrix t_;
};

/// Throws Error{ShapeMismatch}, Error{NotCommuting} naming the first
/// nonzero entry of ST - TS (1-based), or Error{NotNilpotent}.
MatrixPair validate_pair(RatMatrix s, RatMatrix t);

/// Linear substitution x -> a11 x + a12 y, y -> a21 x + a22 y.
struct Twist {
    Rat a11{1}, a12{0}, a21{0}, a22{1};

    Rat determinant() const { return a11 * a22 - a12 * a21; }
    /// Throws Error{SingularTwist}.
    Twist inverse() const;
    static Twist identity() { return {}; }
    static Twist swap() { return {Rat(0), Rat(1), Rat(1), Rat(0)}; }

    friend bool operator==(const Twist&, const Twist&) = default;
};

/// f(S, T) v for f in a two-variable ring (first variable acts as S).
RatVector act(const MatrixPair& pair, const Poly& f, const RatVector& v);

/// (a11 S + a12 T, a21 S + a22 T). Throws Error{SingularTwist}.
MatrixPair twist(const MatrixPair& pair, const Twist& th);

/// (P^-1 S P, P^-1 T P). Throws Error{DimensionMismatch} if P is not an
/// invertible n x n matrix.
MatrixPair conjugate(const MatrixPair& pair, const RatMatrix& p);

/// Solution space basis of X S_A = S_B X, X T_A = T_B X.
std::vector<RatMatrix> intertwiners(const MatrixPair& a, const MatrixPair& b);

/// det(c1 M1 + ... + ck Mk) as a polynomial in c1..ck.
Poly determinant_polynomial(const std::vector<RatMatrix>& basis);

struct SimilarityResult {
    enum class Method {
        Sampling,          // a random combination of intertwiners was invertible
        Symbolic,          // determinant polynomial decided the question exactly
        EmptySolutionSpace,
        Invariants,        // refuted by differing rank invariants
    };
    std::optional<RatMatrix> witness;  // X with X S_A = S_B X, X T_A = T_B X
    Method method;
    std::size_t solution_dim = 0;
};

/// Decides simultaneous similarity. Samples up to 32 combinations of the
/// intertwiner basis; falls back to the exact determinant polynomial when
/// the basis has at most 4 elements and n <= 5, then to rank invariants.
/// Throws Error{Undecided} when none of these settle it, and
/// Error{DimensionMismatch} on different sizes.
SimilarityResult similar(const MatrixPair& a, const MatrixPair& b);

/// Ranks of S^i T^j (1 <= i + j <= word_bound) plus kernel dimensions.
/// S and T commute, so these cover every word in S and T.
struct ModuleInvariants {
    std::size_t dimension = 0;
    unsigned word_bound = 0;
    std::map<std::pair<unsigned, unsigned>, std::size_t> word_ranks;
    std::size_t ker_s = 0;
    std::size_t ker_t = 0;
    std::size_t ker_common = 0;

    friend bool operator==(const ModuleInvariants&, const ModuleInvariants&) = default;
};

/// word_bound == 0 means the default bound n.
ModuleInvariants invariants(const MatrixPair& pair, unsigned word_bound = 0);

/// True iff X is invertible and X S_A = S' X, X T_A = T' X where
/// (S', T') = twist(pairB, th^-1). Throws Error{DimensionMismatch}.
bool check_weak_iso_certificate(const MatrixPair& a, const MatrixPair& b, const Twist& th, const RatMatrix& x);

}  // namespace wildvf

#endif

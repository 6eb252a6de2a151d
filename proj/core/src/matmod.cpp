#include "wildvf/matmod.hpp"

#include <algorithm>

#include "wildvf/error.hpp"
#include "wildvf/rng.hpp"

namespace wildvf {

namespace {

std::string at(std::size_t i, std::size_t j) {
    return "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
}

void require_nilpotent(const RatMatrix& m, const char* name) {
    const RatMatrix p = power(m, static_cast<unsigned>(m.rows()));
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
            if (sgn(p(i, j)) != 0) {
                throw Error(ErrorCode::NotNilpotent,
                            std::string("at (") + name + "^" + std::to_string(m.rows()) + ")" + at(i, j));
            }
}

void require_same_size(const MatrixPair& a, const MatrixPair& b) {
    if (a.n() != b.n()) {
        throw Error(ErrorCode::DimensionMismatch, std::to_string(a.n()) + " vs " + std::to_string(b.n()));
    }
}

}  // namespace

MatrixPair validate_pair(RatMatrix s, RatMatrix t) {
    if (!s.is_square() || !t.is_square() || s.rows() != t.rows() || s.rows() == 0) {
        throw Error(ErrorCode::ShapeMismatch, "S is " + std::to_string(s.rows()) + "x" + std::to_string(s.cols()) +
                                                  ", T is " + std::to_string(t.rows()) + "x" +
                                                  std::to_string(t.cols()));
    }
    const RatMatrix c = commutator(s, t);
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            if (sgn(c(i, j)) != 0) throw Error(ErrorCode::NotCommuting, "at (ST−TS)" + at(i, j));
    require_nilpotent(s, "S");
    require_nilpotent(t, "T");
    return MatrixPair(std::move(s), std::move(t));
}

Twist Twist::inverse() const {
    const Rat det = determinant();
    if (sgn(det) == 0) throw Error(ErrorCode::SingularTwist, "determinant is 0");
    return {a22 / det, -a12 / det, -a21 / det, a11 / det};
}

RatVector act(const MatrixPair& pair, const Poly& f, const RatVector& v) {
    if (v.size() != pair.n()) {
        throw Error(ErrorCode::ShapeMismatch, "vector length " + std::to_string(v.size()) + " vs n = " +
                                                  std::to_string(pair.n()));
    }
    if (f.context().size() != 2) {
        throw Error(ErrorCode::ShapeMismatch, "action needs a polynomial in exactly two variables");
    }
    RatVector out(v.size(), Rat(0));
    for (const auto& [m, c] : f.terms()) {
        RatVector w = v;
        for (unsigned k = 0; k < m.exponents[1]; ++k) w = pair.T() * w;
        for (unsigned k = 0; k < m.exponents[0]; ++k) w = pair.S() * w;
        for (std::size_t i = 0; i < w.size(); ++i) out[i] += c * w[i];
    }
    return out;
}

MatrixPair twist(const MatrixPair& pair, const Twist& th) {
    if (sgn(th.determinant()) == 0) throw Error(ErrorCode::SingularTwist, "determinant is 0");
    return validate_pair(th.a11 * pair.S() + th.a12 * pair.T(), th.a21 * pair.S() + th.a22 * pair.T());
}

MatrixPair conjugate(const MatrixPair& pair, const RatMatrix& p) {
    if (p.rows() != pair.n() || p.cols() != pair.n()) {
        throw Error(ErrorCode::DimensionMismatch, "conjugating matrix is " + std::to_string(p.rows()) + "x" +
                                                      std::to_string(p.cols()));
    }
    auto inv = inverse(p);
    if (!inv) throw Error(ErrorCode::DimensionMismatch, "conjugating matrix is singular");
    return validate_pair(*inv * pair.S() * p, *inv * pair.T() * p);
}

std::vector<RatMatrix> intertwiners(const MatrixPair& a, const MatrixPair& b) {
    require_same_size(a, b);
    const std::size_t n = a.n();
    // Unknown X(i,k) sits at column i*n + k. Row blocks: X S_A - S_B X, then the T block.
    RatMatrix sys(2 * n * n, n * n);
    const RatMatrix* lhs[2] = {&a.S(), &a.T()};
    const RatMatrix* rhs[2] = {&b.S(), &b.T()};
    for (std::size_t blk = 0; blk < 2; ++blk) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t r = blk * n * n + i * n + j;
                for (std::size_t k = 0; k < n; ++k) {
                    sys(r, i * n + k) += (*lhs[blk])(k, j);
                    sys(r, k * n + j) -= (*rhs[blk])(i, k);
                }
            }
        }
    }
    std::vector<RatMatrix> basis;
    for (const auto& v : nullspace(sys)) {
        RatMatrix x(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) x(i, k) = v[i * n + k];
        basis.push_back(std::move(x));
    }
    return basis;
}

namespace {

constexpr int kSamples = 32;
constexpr std::uint64_t kSimilaritySeed = 0x51D1A5EEDULL;

// Determinant of sum_i c_i M_i as a polynomial in c_1..c_k, by cofactor
// expansion along successive rows over the still-unused columns.
Poly symbolic_determinant(const std::vector<std::vector<Poly>>& m, std::vector<bool>& used_cols,
                          std::size_t depth, const VarContext& ctx) {
    const std::size_t n = m.size();
    if (depth == n) return Poly::constant(ctx, Rat(1));
    Poly acc(ctx);
    bool positive = true;
    for (std::size_t c = 0; c < n; ++c) {
        if (used_cols[c]) continue;
        const Poly& entry = m[depth][c];
        if (!entry.is_zero()) {
            used_cols[c] = true;
            Poly minor = symbolic_determinant(m, used_cols, depth + 1, ctx);
            used_cols[c] = false;
            if (!minor.is_zero()) {
                if (positive) acc += entry * minor; else acc -= entry * minor;
            }
        }
        positive = !positive;
    }
    return acc;
}

RatMatrix combine(const std::vector<RatMatrix>& basis, const std::vector<Rat>& c) {
    RatMatrix x(basis.front().rows(), basis.front().cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (sgn(c[i]) != 0) x += c[i] * basis[i];
    return x;
}

}  // namespace

Poly determinant_polynomial(const std::vector<RatMatrix>& basis) {
    if (basis.empty()) throw Error(ErrorCode::LengthMismatch, "empty matrix family");
    const std::size_t n = basis.front().rows();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < basis.size(); ++i) names.push_back("c" + std::to_string(i + 1));
    VarContext ctx(names);
    std::vector<std::vector<Poly>> entries(n, std::vector<Poly>(n, Poly(ctx)));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].rows() != n || basis[i].cols() != n) {
            throw Error(ErrorCode::ShapeMismatch, "matrix " + std::to_string(i + 1) + " of the family");
        }
        const Poly ci = Poly::variable(ctx, names[i]);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (sgn(basis[i](r, c)) != 0) entries[r][c] += basis[i](r, c) * ci;
    }
    std::vector<bool> used(n, false);
    return symbolic_determinant(entries, used, 0, ctx);
}

SimilarityResult similar(const MatrixPair& a, const MatrixPair& b) {
    require_same_size(a, b);
    const std::size_t n = a.n();
    const auto basis = intertwiners(a, b);
    SimilarityResult result{std::nullopt, SimilarityResult::Method::EmptySolutionSpace, basis.size()};
    if (basis.empty()) return result;

    const std::size_t k = basis.size();
    CounterRng rng(kSimilaritySeed);
    for (int s = 0; s < kSamples; ++s) {
        std::vector<Rat> c(k);
        for (auto& ci : c) ci = Rat(rng.uniform(-9, 9));
        RatMatrix x = combine(basis, c);
        if (is_invertible(x)) {
            result.witness = std::move(x);
            result.method = SimilarityResult::Method::Sampling;
            return result;
        }
    }

    if (k <= 4 && n <= 5) {
        const Poly det = determinant_polynomial(basis);
        result.method = SimilarityResult::Method::Symbolic;
        if (det.is_zero()) return result;
        // Degree in each c_i is at most n, so the grid {0..n}^k holds a non-root.
        std::vector<Rat> c(k, Rat(0));
        std::vector<unsigned> idx(k, 0);
        for (;;) {
            for (std::size_t i = 0; i < k; ++i) c[i] = idx[i];
            RatMatrix x = combine(basis, c);
            if (is_invertible(x)) {
                result.witness = std::move(x);
                return result;
            }
            std::size_t i = 0;
            while (i < k && ++idx[i] > n) idx[i++] = 0;
            if (i == k) break;
        }
        throw Error(ErrorCode::InternalError, "nonzero determinant polynomial without a non-root on the grid");
    }

    if (!(invariants(a) == invariants(b))) {
        result.method = SimilarityResult::Method::Invariants;
        return result;
    }
    throw Error(ErrorCode::Undecided, "intertwiner space of dimension " + std::to_string(k) + " at n = " +
                                          std::to_string(n) + ": all samples singular");
}

ModuleInvariants invariants(const MatrixPair& pair, unsigned word_bound) {
    ModuleInvariants inv;
    inv.dimension = pair.n();
    inv.word_bound = word_bound == 0 ? static_cast<unsigned>(pair.n()) : word_bound;
    std::vector<RatMatrix> s_pow{RatMatrix::identity(pair.n())};
    for (unsigned i = 1; i <= inv.word_bound; ++i) s_pow.push_back(s_pow.back() * pair.S());
    RatMatrix t_pow = RatMatrix::identity(pair.n());
    for (unsigned j = 0; j <= inv.word_bound; ++j) {
        for (unsigned i = 0; i + j <= inv.word_bound; ++i) {
            if (i + j == 0) continue;
            inv.word_ranks[{i, j}] = rank(s_pow[i] * t_pow);
        }
        t_pow = t_pow * pair.T();
    }
    inv.ker_s = pair.n() - rank(pair.S());
    inv.ker_t = pair.n() - rank(pair.T());
    RatMatrix stacked(2 * pair.n(), pair.n());
    for (std::size_t i = 0; i < pair.n(); ++i)
        for (std::size_t j = 0; j < pair.n(); ++j) {
            stacked(i, j) = pair.S()(i, j);
            stacked(pair.n() + i, j) = pair.T()(i, j);
        }
    inv.ker_common = pair.n() - rank(stacked);
    return inv;
}

bool check_weak_iso_certificate(const MatrixPair& a, const MatrixPair& b, const Twist& th, const RatMatrix& x) {
    require_same_size(a, b);
    if (x.rows() != a.n() || x.cols() != a.n()) {
        throw Error(ErrorCode::DimensionMismatch, "certificate matrix is " + std::to_string(x.rows()) + "x" +
                                                      std::to_string(x.cols()));
    }
    if (sgn(th.determinant()) == 0 || !is_invertible(x)) return false;
    const MatrixPair back = twist(b, th.inverse());
    return x * a.S() == back.S() * x && x * a.T() == back.T() * x;
}

}  // namespace wildvf

#include "wildvf/corpus.hpp"

#include "wildvf/error.hpp"
#include "wildvf/poly.hpp"

namespace wildvf {

PairRecipe PairRecipe::strictly_upper(std::size_t size, std::uint64_t seed) {
    PairRecipe r;
    r.kind = Kind::StrictlyUpperRandom;
    r.size = size;
    r.seed = seed;
    r.perturbation_terms = size > 1 ? 1 : 0;
    return r;
}

PairRecipe PairRecipe::jordan(std::size_t size, std::optional<std::string> word, std::uint64_t seed) {
    PairRecipe r;
    r.kind = Kind::JordanWord;
    r.size = size;
    r.seed = seed;
    r.word = std::move(word);
    return r;
}

PairRecipe PairRecipe::direct_sum(std::vector<PairRecipe> parts) {
    PairRecipe r;
    r.kind = Kind::DirectSum;
    r.size = 0;
    for (const auto& p : parts) r.size += p.size;
    r.parts = std::move(parts);
    return r;
}

PairRecipe PairRecipe::conjugated(PairRecipe base, std::uint64_t seed, std::optional<RatMatrix> p) {
    PairRecipe r;
    r.kind = Kind::Conjugated;
    r.size = base.size;
    r.seed = seed;
    r.parts.push_back(std::move(base));
    r.conjugator = std::move(p);
    return r;
}

std::string_view to_string(PairRecipe::Kind kind) noexcept {
    switch (kind) {
        case PairRecipe::Kind::StrictlyUpperRandom: return "strictly-upper-random";
        case PairRecipe::Kind::JordanWord: return "jordan-word";
        case PairRecipe::Kind::DirectSum: return "direct-sum";
        case PairRecipe::Kind::Conjugated: return "conjugated";
    }
    return "";
}

PairRecipe::Kind parse_kind(std::string_view text) {
    for (auto k : {PairRecipe::Kind::StrictlyUpperRandom, PairRecipe::Kind::JordanWord, PairRecipe::Kind::DirectSum,
                   PairRecipe::Kind::Conjugated}) {
        if (to_string(k) == text) return k;
    }
    throw Error(ErrorCode::ParseError, "unknown recipe kind \"" + std::string(text) + "\"");
}

RatMatrix jordan_block(std::size_t n) {
    RatMatrix j(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
    return j;
}

RatMatrix random_invertible(CounterRng& rng, std::size_t n) {
    for (std::size_t draw = 0; draw < kMaxDraws; ++draw) {
        RatMatrix p(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p(i, j) = Rat(rng.uniform(-3, 3));
        if (is_invertible(p)) return p;
    }
    throw Error(ErrorCode::RecipeExhausted, "no invertible matrix in " + std::to_string(kMaxDraws) + " draws");
}

namespace {

Rat nonzero_small(CounterRng& rng) {
    const std::int64_t v = rng.uniform(1, 4);
    return Rat(v <= 2 ? v : 2 - v);  // 1, 2, -1, -2
}

RatMatrix evaluate_word(const Poly& q, const RatMatrix& s) {
    RatMatrix out(s.rows(), s.cols());
    for (const auto& [m, c] : q.terms()) out += c * power(s, m.exponents[0]);
    return out;
}

Poly random_word(CounterRng& rng, std::size_t n) {
    static const VarContext ctx{"x"};
    Poly q(ctx);
    for (unsigned e = 1; e < n; ++e) q.add_term(Monomial{{e}}, Rat(rng.uniform(-2, 2)));
    return q;
}

MatrixPair strictly_upper_random(const PairRecipe& r) {
    const std::size_t n = r.size;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    if (r.perturbation_terms > slots.size()) {
        throw Error(ErrorCode::RecipeExhausted, std::to_string(r.perturbation_terms) +
                                                    " perturbation entries do not fit in size " + std::to_string(n));
    }
    CounterRng rng(r.seed);
    for (std::size_t draw = 0; draw < kMaxDraws; ++draw) {
        RatMatrix s(n, n);
        for (auto [i, j] : slots)
            if (rng.chance(r.density, 100)) s(i, j) = nonzero_small(rng);
        RatMatrix e(n, n);
        std::vector<std::size_t> free_slots(slots.size());
        for (std::size_t k = 0; k < free_slots.size(); ++k) free_slots[k] = k;
        for (unsigned t = 0; t < r.perturbation_terms; ++t) {
            const auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(free_slots.size()) - 1));
            const auto [i, j] = slots[free_slots[pick]];
            free_slots.erase(free_slots.begin() + static_cast<std::ptrdiff_t>(pick));
            e(i, j) = nonzero_small(rng);
        }
        if (!(s * e == e * s)) continue;
        const Poly q = random_word(rng, n);
        return validate_pair(s, evaluate_word(q, s) + e);
    }
    throw Error(ErrorCode::RecipeExhausted, "no commuting perturbation in " + std::to_string(kMaxDraws) + " draws");
}

}  // namespace

MatrixPair generate(const PairRecipe& recipe) {
    switch (recipe.kind) {
        case PairRecipe::Kind::StrictlyUpperRandom:
            if (recipe.size == 0) throw Error(ErrorCode::ShapeMismatch, "recipe size must be at least 1");
            return strictly_upper_random(recipe);
        case PairRecipe::Kind::JordanWord: {
            if (recipe.size == 0) throw Error(ErrorCode::ShapeMismatch, "recipe size must be at least 1");
            static const VarContext ctx{"x"};
            CounterRng rng(recipe.seed);
            const Poly q = recipe.word ? Poly::parse(ctx, *recipe.word) : random_word(rng, recipe.size);
            if (sgn(q.constant_term()) != 0) {
                throw Error(ErrorCode::NotNilpotent, "jordan word has a constant term");
            }
            const RatMatrix j = jordan_block(recipe.size);
            return validate_pair(j, evaluate_word(q, j));
        }
        case PairRecipe::Kind::DirectSum: {
            if (recipe.parts.empty()) throw Error(ErrorCode::ShapeMismatch, "direct sum of nothing");
            std::vector<MatrixPair> blocks;
            std::size_t n = 0;
            for (const auto& p : recipe.parts) {
                blocks.push_back(generate(p));
                n += blocks.back().n();
            }
            RatMatrix s(n, n), t(n, n);
            std::size_t off = 0;
            for (const auto& b : blocks) {
                for (std::size_t i = 0; i < b.n(); ++i)
                    for (std::size_t j = 0; j < b.n(); ++j) {
                        s(off + i, off + j) = b.S()(i, j);
                        t(off + i, off + j) = b.T()(i, j);
                    }
                off += b.n();
            }
            return validate_pair(std::move(s), std::move(t));
        }
        case PairRecipe::Kind::Conjugated: {
            if (recipe.parts.size() != 1) throw Error(ErrorCode::ShapeMismatch, "conjugated recipe needs one base");
            const MatrixPair base = generate(recipe.parts.front());
            CounterRng rng(recipe.seed);
            const RatMatrix p = recipe.conjugator ? *recipe.conjugator : random_invertible(rng, base.n());
            return conjugate(base, p);
        }
    }
    throw Error(ErrorCode::InternalError, "unhandled recipe kind");
}

std::vector<MatrixPair> enumerate_small(std::size_t n, std::span<const Rat> entries) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const std::size_t m = 2 * slots.size();
    double total = 1;
    for (std::size_t k = 0; k < m; ++k) total *= static_cast<double>(entries.size());
    if (entries.empty() || total > 1e7) {
        throw Error(ErrorCode::LengthMismatch, "enumeration of " + std::to_string(total) + " pairs is too large");
    }

    std::vector<MatrixPair> out;
    std::vector<std::size_t> digit(m, 0);
    for (;;) {
        RatMatrix s(n, n), t(n, n);
        for (std::size_t k = 0; k < slots.size(); ++k) {
            s(slots[k].first, slots[k].second) = entries[digit[k]];
            t(slots[k].first, slots[k].second) = entries[digit[slots.size() + k]];
        }
        try {
            out.push_back(validate_pair(std::move(s), std::move(t)));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotCommuting) throw;
        }
        // Odometer with the last T entry varying fastest.
        std::size_t k = m;
        while (k > 0) {
            --k;
            if (++digit[k] < entries.size()) break;
            digit[k] = 0;
            if (k == 0) return out;
        }
        if (m == 0) return out;
    }
}

std::vector<PairRecipe> recipe_suite(std::size_t count, std::uint64_t base_seed) {
    std::vector<PairRecipe> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t seed = base_seed + i;
        const std::size_t size = 2 + i % 5;
        switch (i % 4) {
            case 0:
                out.push_back(PairRecipe::strictly_upper(size, seed));
                break;
            case 1:
                out.push_back(PairRecipe::jordan(size, std::nullopt, seed));
                break;
            case 2: {
                const std::size_t left = 1 + (i / 4) % (size - 1);
                out.push_back(PairRecipe::direct_sum({PairRecipe::strictly_upper(left, seed),
                                                      PairRecipe::jordan(size - left, std::nullopt, seed ^ 0x5A5A)}));
                break;
            }
            default:
                out.push_back(PairRecipe::conjugated(PairRecipe::strictly_upper(size, seed), seed ^ 0xC0C0));
                break;
        }
    }
    return out;
}

}  // namespace wildvf

#ifndef WILDVF_CORPUS_HPP
#define WILDVF_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wildvf/linalg.hpp"
#include "wildvf/matmod.hpp"
#include "wildvf/rng.hpp"

namespace wildvf {

/// Maximum number of rejection-sampling draws per recipe.
inline constexpr std::size_t kMaxDraws = 10'000;

struct PairRecipe {
    enum class Kind { StrictlyUpperRandom, JordanWord, DirectSum, Conjugated };

    Kind kind = Kind::StrictlyUpperRandom;
    std::uint64_t seed = 0;
    std::size_t size = 1;

    // strictly-upper-random: chance (percent) that an entry of S is nonzero,
    // and the number of nonzero entries of the commuting perturbation.
    unsigned density = 50;
    unsigned perturbation_terms = 1;
    // jordan-word: q as text in the variable x (no constant term); drawn
    // from the seed when absent.
    std::optional<std::string> word;
    // direct-sum: the blocks; conjugated: parts[0] is the base.
    std::vector<PairRecipe> parts;
    // conjugated: P (drawn from the seed when absent); result is P^-1 (S,T) P.
    std::optional<RatMatrix> conjugator;

    friend bool operator==(const PairRecipe&, const PairRecipe&) = default;

    static PairRecipe strictly_upper(std::size_t size, std::uint64_t seed);
    static PairRecipe jordan(std::size_t size, std::optional<std::string> word, std::uint64_t seed = 0);
    static PairRecipe direct_sum(std::vector<PairRecipe> parts);
    static PairRecipe conjugated(PairRecipe base, std::uint64_t seed, std::optional<RatMatrix> p = std::nullopt);
};

std::string_view to_string(PairRecipe::Kind kind) noexcept;
/// Throws Error{ParseError}.
PairRecipe::Kind parse_kind(std::string_view text);

/// Deterministic in the recipe. Throws Error{RecipeExhausted} after
/// kMaxDraws rejected draws and Error{ShapeMismatch} for size 0.
MatrixPair generate(const PairRecipe& recipe);

/// Nilpotent Jordan block: ones on the superdiagonal.
RatMatrix jordan_block(std::size_t n);

/// Random invertible integer matrix with entries in [-3, 3].
RatMatrix random_invertible(CounterRng& rng, std::size_t n);

/// Every commuting pair of strictly upper triangular n x n matrices with
/// entries from `entries`, in odometer order (S varies slowest).
std::vector<MatrixPair> enumerate_small(std::size_t n, std::span<const Rat> entries);

/// A mixed family of `count` recipes of sizes 2..6 (cycling through all
/// four kinds), recipe i seeded with base_seed + i.
std::vector<PairRecipe> recipe_suite(std::size_t count, std::uint64_t base_seed);

}  // namespace wildvf

#endif

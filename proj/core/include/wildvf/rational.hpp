#ifndef WILDVF_RATIONAL_HPP
#define WILDVF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace wildvf {

/// Exact rational number, always canonical (lowest terms, positive
/// denominator). Every arithmetic result in the library is one of these.
using Rat = mpq_class;
using RatVector = std::vector<Rat>;

/// Parses "p", "-p" or "p/q" (q > 0 after sign handling). Throws
/// Error{ParseError} on anything else, including a zero denominator.
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rat(const Rat& value);

inline bool is_zero(const Rat& value) { return sgn(value) == 0; }

}  // namespace wildvf

#endif

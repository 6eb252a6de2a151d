#include "wildvf/rational.hpp"

#include <cctype>

#include "wildvf/error.hpp"

namespace wildvf {

namespace {
bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}
}  // namespace

Rat parse_rat(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw Error(ErrorCode::ParseError, "malformed rational \"" + std::string(text) + "\"");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
    }
    Rat value(negative ? mpz_class(-n) : n, d);
    value.canonicalize();
    return value;
}

std::string format_rat(const Rat& value) { return value.get_str(10); }

}  // namespace wildvf

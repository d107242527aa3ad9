#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace advicelab {

// Exact fraction for run parameters such as alpha and eps ("p/q" on the
// command line). Always stored reduced with a positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den <= 0 || num < 0) throw std::invalid_argument("rational must be >= 0 with positive denominator");
        auto g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rational&) const = default;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s), 1);
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational '" + s + "', expected p or p/q");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("rational '" + s + "' out of range");
    }
}

// floor(r * 2^e), exact.
inline std::uint64_t floor_mul_pow2(const Rational& r, int e) {
    if (e < 0 || e > 62) throw std::invalid_argument("exponent out of range");
    unsigned __int128 scaled = static_cast<unsigned __int128>(r.num) << e;
    return static_cast<std::uint64_t>(scaled / static_cast<unsigned __int128>(r.den));
}

// Least x >= 1 with x^q >= base^p, i.e. ceil(base^(p/q)) for base >= 1.
// Exact integer arithmetic throughout.
std::uint64_t ceil_pow(std::uint64_t base, const Rational& e);

}  // namespace advicelab

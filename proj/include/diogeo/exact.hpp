#pragma once

// Exact integer / rational kernel. Everything downstream decides with these
// types only; no floating point enters any decision path.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace diogeo {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

// Quadratic-residue tables for the fast-reject moduli 64, 63, 65, 11.
// A value failing any table cannot be a perfect square.
template <int M>
constexpr std::array<bool, M> square_residues() {
    std::array<bool, M> t{};
    for (int i = 0; i < M; ++i) t[static_cast<std::size_t>((i * i) % M)] = true;
    return t;
}

inline constexpr auto kSq64 = square_residues<64>();
inline constexpr auto kSq63 = square_residues<63>();
inline constexpr auto kSq65 = square_residues<65>();
inline constexpr auto kSq11 = square_residues<11>();

inline bool residues_admit_square(unsigned r64, unsigned r63, unsigned r65, unsigned r11) {
    return kSq64[r64] && kSq63[r63] && kSq65[r65] && kSq11[r11];
}

}  // namespace detail

// Floor square root; r with r^2 <= n < (r+1)^2.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    if (r > 0xFFFFFFFFull) r = 0xFFFFFFFFull;
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Modular prefilter: false means "certainly not a square". Never wrong the
// other way, so callers may skip isqrt on rejection.
inline bool square_prefilter(std::uint64_t n) {
    return detail::residues_admit_square(static_cast<unsigned>(n & 63u),
                                         static_cast<unsigned>(n % 63u),
                                         static_cast<unsigned>(n % 65u),
                                         static_cast<unsigned>(n % 11u));
}

inline bool square_prefilter(const Integer& n) {
    return detail::residues_admit_square((n & 63u).convert_to<unsigned>(),
                                         (n % 63u).convert_to<unsigned>(),
                                         (n % 65u).convert_to<unsigned>(),
                                         (n % 11u).convert_to<unsigned>());
}

// r with r^2 == n and r >= 0, or empty. Negative n yields empty, not an error.
inline std::optional<Integer> as_perfect_square(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (!square_prefilter(n)) return std::nullopt;
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

inline std::optional<std::uint64_t> as_perfect_square_u64(std::uint64_t n) {
    if (!square_prefilter(n)) return std::nullopt;
    std::uint64_t r = isqrt_u64(n);
    if (r * r == n) return r;
    return std::nullopt;
}

inline bool is_square_u64(std::uint64_t n) {
    if (!square_prefilter(n)) return false;
    std::uint64_t r = isqrt_u64(n);
    return r * r == n;
}

// Nonnegative gcd; gcd(0,0) = 0.
inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

// den must be nonzero; cpp_rational normalises sign and common factors.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
}

// Parses "n" or "n/d" with optional sign.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    return make_rational(num, den);
}

inline std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace diogeo

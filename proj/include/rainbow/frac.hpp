#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rainbow {

// Exact rational with small components. Every real-valued threshold in the
// library (n/4, nu*n, (1/2-eps)*n, gamma*n^2, ...) is compared through Frac,
// so outcomes never depend on floating-point rounding.
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;

    Frac(long long n, long long d) {
        if (d == 0) throw std::invalid_argument("Frac: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num = n;
        den = d;
    }

    static Frac of(long long n) { return Frac(n, 1); }

    // accepts "3", "1/16", "0.05"
    static Frac parse(const std::string& raw) {
        std::string s;
        for (char c : raw)
            if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
        if (s.empty()) throw std::invalid_argument("Frac: empty string");
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            long long n = std::stoll(s.substr(0, slash));
            long long d = std::stoll(s.substr(slash + 1));
            return Frac(n, d);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Frac(std::stoll(s), 1);
        bool neg = s[0] == '-';
        std::string digits = s.substr(neg ? 1 : 0);
        dot = digits.find('.');
        std::string ip = digits.substr(0, dot), fp = digits.substr(dot + 1);
        if (fp.size() > 15) fp = fp.substr(0, 15);
        long long n = ip.empty() ? 0 : std::stoll(ip);
        long long d = 1;
        for (char c : fp) {
            if (!isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("Frac: bad literal '" + raw + "'");
            n = n * 10 + (c - '0');
            d *= 10;
        }
        return Frac(neg ? -n : n, d);
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    long long floor_mul(long long n) const {
        __int128 p = static_cast<__int128>(num) * n;
        __int128 q = den;
        __int128 r = p / q;
        if (p % q != 0 && (p < 0)) r -= 1;
        return static_cast<long long>(r);
    }

    long long ceil_mul(long long n) const {
        __int128 p = static_cast<__int128>(num) * n;
        __int128 q = den;
        __int128 r = p / q;
        if (p % q != 0 && (p > 0)) r += 1;
        return static_cast<long long>(r);
    }

    // sign of (x - this*n); exact
    int cmp_mul(long long x, long long n) const {
        __int128 lhs = static_cast<__int128>(x) * den;
        __int128 rhs = static_cast<__int128>(num) * n;
        if (lhs < rhs) return -1;
        if (lhs > rhs) return 1;
        return 0;
    }

    bool le_mul(long long x, long long n) const { return cmp_mul(x, n) <= 0; }   // x <= this*n
    bool ge_mul(long long x, long long n) const { return cmp_mul(x, n) >= 0; }   // x >= this*n
    bool lt_mul(long long x, long long n) const { return cmp_mul(x, n) < 0; }
    bool gt_mul(long long x, long long n) const { return cmp_mul(x, n) > 0; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num * b.num, a.den * b.den);
    }
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Frac& a, const Frac& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Frac& a, const Frac& b) { return a == b || a < b; }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
    friend bool operator>=(const Frac& a, const Frac& b) { return b <= a; }
};

inline Frac frac_max(const Frac& a, const Frac& b) { return a < b ? b : a; }
inline Frac frac_min(const Frac& a, const Frac& b) { return a < b ? a : b; }

}  // namespace rainbow

#include "projtv/rat.hpp"

#include <cmath>
#include <limits>

namespace projtv {

std::string rat_str(const Rat& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

Rat parse_rat(const std::string& text) {
    auto bad = [&]() { throw std::invalid_argument("malformed rational: '" + text + "'"); };
    if (text.empty()) bad();
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& s) -> Int {
        if (s.empty()) bad();
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) bad();
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') bad();
        return Int(s);
    };
    if (slash == std::string::npos) return Rat(parse_int(text));
    const Int num = parse_int(text.substr(0, slash));
    const Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rat(num, den);
}

Int ceil_div(const Int& a, const Int& b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: nonpositive divisor");
    Int q = a / b;
    if (q * b < a) ++q;
    return q;
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    Int num = 1, den = 1;
    for (Int i = 0; i < kk; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

Int int_pow(const Int& base, unsigned exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

Rat rationalize(double x, uint64_t max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite input");
    if (max_den == 0) throw std::invalid_argument("rationalize: zero denominator bound");
    const bool neg = x < 0;
    double v = neg ? -x : x;

    // Continued-fraction convergents p/q until the denominator bound trips.
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    const Int bound = Int(max_den);
    for (int iter = 0; iter < 64; ++iter) {
        const double fl = std::floor(v);
        if (fl > 9e18) break;
        const Int a = Int(static_cast<long long>(fl));
        Int p2 = a * p1 + p0;
        Int q2 = a * q1 + q0;
        if (q2 > bound) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return Rat(0);
    Rat r(p1, q1);
    return neg ? Rat(-r) : r;
}

double to_double(const Rat& q) { return q.convert_to<double>(); }

}  // namespace projtv

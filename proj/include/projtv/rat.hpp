#pragma once

// Exact rational scalar type and small numeric helpers. All certificate
// paths run on these; doubles appear only inside search heuristics.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace projtv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Rat& q) { return q.sign(); }
inline int sgn(const Int& n) { return n.sign(); }

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

/// "p/q" when q != 1, plain integer otherwise.
std::string rat_str(const Rat& q);

/// Accepts "123", "-4", "2/3", "-7/5". Throws std::invalid_argument on
/// malformed text or zero denominator.
Rat parse_rat(const std::string& text);

/// Ceiling of a/b for positive b.
Int ceil_div(const Int& a, const Int& b);

Int factorial(unsigned n);
Int binomial(const Int& n, const Int& k);
Int int_pow(const Int& base, unsigned exp);

bool is_prime(uint64_t p);

/// Best continued-fraction convergent of x with denominator <= max_den.
/// Requires a finite x and max_den >= 1.
Rat rationalize(double x, uint64_t max_den);

double to_double(const Rat& q);

}  // namespace projtv

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ol {

using Rational = mpq_class;
using Integer = mpz_class;
using QVec = std::vector<Rational>;

// Accepts "p", "-p", "p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
bool in_lowest_terms(const Rational& q);

QVec zero_vec(std::size_t n);
bool is_zero(const QVec& v);
Rational dot(const QVec& a, const QVec& b);
QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const Rational& c, const QVec& a);
QVec& axpy(QVec& y, const Rational& c, const QVec& x);  // y += c*x

// Deterministic rational in [-range, range] with denominator up to den.
class Rng;
Rational random_rational(Rng& rng, long range = 5, long den = 3);

}  // namespace ol

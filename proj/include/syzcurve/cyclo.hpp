#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace syz {

using Rat = mpq_class;

/// Element of the cyclotomic field Q(zeta_n), stored as the reduced residue
/// of a polynomial in zeta_n modulo the n-th cyclotomic polynomial Phi_n.
/// Arithmetic is exact; operands of different orders are promoted to the
/// least common cyclotomic order before combining.
class Cyclo {
public:
    Cyclo() : order_(1), c_(1) {}
    Cyclo(long v) : order_(1), c_(1, Rat(v)) {}
    explicit Cyclo(const Rat& v) : order_(1), c_(1, v) {}

    // zeta_n, a primitive n-th root of unity.
    static Cyclo zeta(int n);
    // Element of Q(zeta_n) with the given coefficient vector (length phi(n),
    // or shorter; padded with zeros).
    static Cyclo from_coeffs(int n, std::vector<Rat> coeffs);

    int order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rat rational_value() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

    // Multiplicative inverse; throws math_error on zero.
    Cyclo inv() const;
    Cyclo pow(long e) const;

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    // Re-express in Q(zeta_m); m must be a multiple of order().
    Cyclo promoted(int m) const;

    // Textual form using "e" for zeta_n, e.g. "1 - 3/2*e^2".
    std::string str() const;

private:
    int order_;
    std::vector<Rat> c_;  // length phi(order_)

    void demote();  // shrink to order 1 when the value is rational
};

// Euler totient.
int totient(int n);

// Coefficients of the n-th cyclotomic polynomial, constant term first
// (length totient(n)+1, monic).
const std::vector<Rat>& cyclotomic_polynomial(int n);

}  // namespace syz

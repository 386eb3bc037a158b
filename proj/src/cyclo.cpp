#include "syzcurve/cyclo.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "syzcurve/errors.hpp"

namespace syz {

namespace {

// Dense univariate polynomial over Q, coeff[i] * x^i, no trailing zeros.
using UPoly = std::vector<Rat>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a mod b (b monic or not; exact field division).
UPoly poly_mod(UPoly a, const UPoly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}

UPoly poly_div_exact(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    trim(r);
    UPoly q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0);
    while (r.size() >= b.size()) {
        Rat c = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        trim(r);
    }
    if (!r.empty()) throw math_error("cyclotomic polynomial division not exact");
    return q;
}

struct Field {
    int n = 1;
    int phi = 1;
    UPoly modulus;               // Phi_n
    std::vector<UPoly> xpow;     // xpow[e] = x^e mod Phi_n, filled lazily
};

Field& field(int n) {
    static std::map<int, Field> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Field f;
    f.n = n;
    f.phi = totient(n);
    f.modulus = cyclotomic_polynomial(n);
    f.xpow.push_back(UPoly{Rat(1)});
    auto [pos, ok] = cache.emplace(n, std::move(f));
    (void)ok;
    return pos->second;
}

// x^e mod Phi_n as a coefficient vector of length phi(n).
const UPoly& xpow_mod(Field& f, int e) {
    while ((int)f.xpow.size() <= e) {
        UPoly next = f.xpow.back();
        next.insert(next.begin(), Rat(0));  // multiply by x
        next = poly_mod(std::move(next), f.modulus);
        f.xpow.push_back(std::move(next));
    }
    return f.xpow[e];
}

}  // namespace

int totient(int n) {
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<Rat>& cyclotomic_polynomial(int n) {
    static std::map<int, UPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    UPoly num(n + 1);
    num[0] = Rat(-1);
    num[n] = Rat(1);
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) num = poly_div_exact(num, cyclotomic_polynomial(d));
    }
    auto [pos, ok] = cache.emplace(n, std::move(num));
    (void)ok;
    return pos->second;
}

Cyclo Cyclo::zeta(int n) {
    if (n < 1) throw math_error("root-of-unity order must be positive");
    if (n == 1) return Cyclo(1);
    Field& f = field(n);
    Cyclo z;
    z.order_ = n;
    z.c_ = xpow_mod(f, 1);
    z.c_.resize(f.phi);
    z.demote();
    return z;
}

Cyclo Cyclo::from_coeffs(int n, std::vector<Rat> coeffs) {
    Field& f = field(n);
    if ((int)coeffs.size() > f.phi) throw math_error("coefficient vector longer than phi(n)");
    coeffs.resize(f.phi);
    Cyclo z;
    z.order_ = n;
    z.c_ = std::move(coeffs);
    z.demote();
    return z;
}

bool Cyclo::is_zero() const {
    for (const Rat& r : c_)
        if (r != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) throw math_error("value is not rational");
    return c_[0];
}

void Cyclo::demote() {
    if (order_ > 1 && is_rational()) {
        c_.resize(1);
        order_ = 1;
    }
}

Cyclo Cyclo::promoted(int m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw math_error("promotion target is not a multiple of the order");
    Field& f = field(m);
    Cyclo z;
    z.order_ = m;
    z.c_.assign(f.phi, Rat(0));
    int step = m / order_;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const UPoly& p = xpow_mod(f, (int)i * step);
        for (size_t j = 0; j < p.size(); ++j) z.c_[j] += c_[i] * p[j];
    }
    return z;
}

Cyclo Cyclo::operator-() const {
    Cyclo z = *this;
    for (Rat& r : z.c_) r = -r;
    return z;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (order_ != o.order_) {
        int m = std::lcm(order_, o.order_);
        *this = promoted(m);
        return *this += o.promoted(m);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    demote();
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    if (order_ != o.order_) {
        int m = std::lcm(order_, o.order_);
        *this = promoted(m);
        return *this -= o.promoted(m);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    demote();
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (o.is_rational()) {
        const Rat& s = o.c_[0];
        if (s == 0) {
            *this = Cyclo();
            return *this;
        }
        for (Rat& r : c_) r *= s;
        return *this;
    }
    if (is_rational()) {
        Cyclo z = o;
        z *= *this;
        return *this = z;
    }
    if (order_ != o.order_) {
        int m = std::lcm(order_, o.order_);
        *this = promoted(m);
        return *this *= o.promoted(m);
    }
    Field& f = field(order_);
    UPoly prod(2 * f.phi - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    // Reduce powers >= phi with the cached residues.
    UPoly res(prod.begin(), prod.begin() + f.phi);
    for (size_t e = f.phi; e < prod.size(); ++e) {
        if (prod[e] == 0) continue;
        const UPoly& p = xpow_mod(f, (int)e);
        for (size_t j = 0; j < p.size(); ++j) res[j] += prod[e] * p[j];
    }
    c_ = std::move(res);
    demote();
    return *this;
}

Cyclo Cyclo::inv() const {
    if (is_zero()) throw math_error("division by zero");
    if (is_rational()) return Cyclo(Rat(1) / c_[0]);
    // Extended Euclid: u * a + v * Phi_n = 1 in Q[x].
    Field& f = field(order_);
    UPoly r0 = f.modulus, r1 = c_;
    trim(r1);
    UPoly u0{}, u1{Rat(1)};  // coefficients of a
    while (true) {
        if (r1.empty()) throw math_error("element not invertible mod Phi_n");
        if (r1.size() == 1) {
            Cyclo z;
            z.order_ = order_;
            z.c_.assign(f.phi, Rat(0));
            Rat s = Rat(1) / r1[0];
            for (size_t i = 0; i < u1.size() && i < z.c_.size(); ++i) z.c_[i] = u1[i] * s;
            z.demote();
            return z;
        }
        // r0 = q * r1 + r2
        UPoly q(r0.size() - r1.size() + 1, Rat(0));
        UPoly r2 = r0;
        while (r2.size() >= r1.size()) {
            Rat cq = r2.back() / r1.back();
            size_t shift = r2.size() - r1.size();
            q[shift] += cq;
            for (size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= cq * r1[i];
            trim(r2);
        }
        // u2 = u0 - q * u1
        UPoly u2 = u0;
        u2.resize(std::max(u2.size(), q.size() + u1.size()), Rat(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        }
        trim(u2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= o.inv(); }

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyclo result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool Cyclo::operator==(const Cyclo& o) const {
    if (order_ == o.order_) return c_ == o.c_;
    int m = std::lcm(order_, o.order_);
    return promoted(m).c_ == o.promoted(m).c_;
}

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && i > 0;
        if (!unit) out << a.get_str();
        if (i > 0) {
            if (!unit) out << "*";
            out << "e";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace syz

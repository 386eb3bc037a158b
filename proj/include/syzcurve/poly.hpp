#pragma once

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "syzcurve/cyclo.hpp"
#include "syzcurve/errors.hpp"

namespace syz {

template <int N>
using Expo = std::array<int, N>;

template <int N>
int expo_degree(const Expo<N>& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

// Graded-lexicographic order with earlier variables larger (x > y > z).
// Arranged so that map iteration starts at the leading term.
template <int N>
struct GrlexDesc {
    bool operator()(const Expo<N>& a, const Expo<N>& b) const {
        int da = expo_degree<N>(a), db = expo_degree<N>(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse polynomial in N variables over Q(zeta_n). Zero coefficients are
/// never stored. Most uses are homogeneous forms; homogeneity is kept by the
/// operations rather than enforced by the type.
template <int N>
class Poly {
public:
    using TermMap = std::map<Expo<N>, Cyclo, GrlexDesc<N>>;

    Poly() = default;

    static Poly constant(const Cyclo& c) {
        Poly p;
        if (!c.is_zero()) p.terms_[Expo<N>{}] = c;
        return p;
    }
    static Poly variable(int i) {
        Expo<N> e{};
        e[i] = 1;
        return monomial(e, Cyclo(1));
    }
    static Poly monomial(const Expo<N>& e, const Cyclo& c) {
        Poly p;
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : expo_degree<N>(terms_.begin()->first); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = degree();
        for (const auto& [e, c] : terms_)
            if (expo_degree<N>(e) != d) return false;
        return true;
    }

    const Cyclo& coeff(const Expo<N>& e) const {
        static const Cyclo zero;
        auto it = terms_.find(e);
        return it == terms_.end() ? zero : it->second;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly operator-() const {
        Poly p = *this;
        for (auto& [e, c] : p.terms_) c = -c;
        return p;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly p;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Expo<N> e;
                for (int i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                p.add_term(e, ca * cb);
            }
        }
        return p;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Cyclo& s) const {
        Poly p;
        if (s.is_zero()) return p;
        for (const auto& [e, c] : terms_) p.terms_[e] = c * s;
        return p;
    }

    Poly pow(int e) const {
        Poly result = constant(Cyclo(1));
        Poly base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    Poly differentiate(int var) const {
        Poly p;
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Expo<N> d = e;
            d[var] -= 1;
            p.add_term(d, c * Cyclo(e[var]));
        }
        return p;
    }

    Cyclo evaluate(const std::array<Cyclo, N>& at) const {
        Cyclo result;
        for (const auto& [e, c] : terms_) {
            Cyclo t = c;
            for (int i = 0; i < N; ++i)
                if (e[i] > 0) t *= at[i].pow(e[i]);
            result += t;
        }
        return result;
    }

    // p(s_0, ..., s_{N-1}) for polynomial substituents in M variables.
    template <int M>
    Poly<M> substitute(const std::array<Poly<M>, N>& s) const {
        // power cache per variable
        std::array<std::vector<Poly<M>>, N> pows;
        for (int i = 0; i < N; ++i) pows[i].push_back(Poly<M>::constant(Cyclo(1)));
        auto power = [&](int i, int e) -> const Poly<M>& {
            while ((int)pows[i].size() <= e) pows[i].push_back(pows[i].back() * s[i]);
            return pows[i][e];
        };
        Poly<M> result;
        for (const auto& [e, c] : terms_) {
            Poly<M> t = Poly<M>::constant(c);
            for (int i = 0; i < N; ++i)
                if (e[i] > 0) t *= power(i, e[i]);
            result += t;
        }
        return result;
    }

    const Expo<N>& leading_expo() const {
        if (terms_.empty()) throw math_error("zero polynomial has no leading term");
        return terms_.begin()->first;
    }
    const Cyclo& leading_coeff() const {
        if (terms_.empty()) throw math_error("zero polynomial has no leading term");
        return terms_.begin()->second;
    }

    // Divide by the leading coefficient (projective normalization).
    Poly normalized() const {
        if (terms_.empty()) return *this;
        return scaled(leading_coeff().inv());
    }

    // Exact quotient by a nonzero divisor, or nullopt when not divisible.
    std::optional<Poly> divide_exact(const Poly& divisor) const {
        if (divisor.is_zero()) throw math_error("division by the zero polynomial");
        Poly rem = *this;
        Poly quot;
        const Expo<N>& lead = divisor.leading_expo();
        Cyclo lc_inv = divisor.leading_coeff().inv();
        while (!rem.is_zero()) {
            const Expo<N>& re = rem.leading_expo();
            Expo<N> q;
            bool divisible = true;
            for (int i = 0; i < N; ++i) {
                q[i] = re[i] - lead[i];
                if (q[i] < 0) divisible = false;
            }
            if (!divisible) return std::nullopt;
            Poly t = monomial(q, rem.leading_coeff() * lc_inv);
            quot += t;
            rem -= t * divisor;
        }
        return quot;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Equality as projective objects.
    bool proportional_to(const Poly& o) const {
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        return normalized() == o.normalized();
    }

    std::string str(const std::array<std::string, N>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string cs = c.str();
            bool negated = false;
            if (c.is_rational() && c.rational_value() < 0) {
                cs = (-c).str();
                negated = true;
            }
            if (first) {
                if (negated) out << "-";
            } else {
                out << (negated ? " - " : " + ");
            }
            first = false;
            bool needs_paren = cs.find(' ') != std::string::npos;
            bool unit = (cs == "1") && expo_degree<N>(e) > 0;
            bool printed_coeff = false;
            if (!unit) {
                if (needs_paren)
                    out << "(" << cs << ")";
                else
                    out << cs;
                printed_coeff = true;
            }
            for (int i = 0; i < N; ++i) {
                if (e[i] == 0) continue;
                if (printed_coeff) out << "*";
                out << names[i];
                if (e[i] > 1) out << "^" << e[i];
                printed_coeff = true;
            }
            if (!printed_coeff) out << cs;
        }
        return out.str();
    }

private:
    TermMap terms_;

    void add_term(const Expo<N>& e, const Cyclo& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

using Poly2 = Poly<2>;
using Poly3 = Poly<3>;
using Poly6 = Poly<6>;

// Exponents of all degree-d monomials in N variables, graded-lex descending.
// This is the canonical index order used throughout.
template <int N>
std::vector<Expo<N>> monomial_exponents(int d) {
    std::vector<Expo<N>> out;
    Expo<N> e{};
    e[0] = d;
    auto rec = [&](auto&& self, int pos, int rem, Expo<N>& cur) -> void {
        if (pos == N - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int i = rem; i >= 0; --i) {
            cur[pos] = i;
            self(self, pos + 1, rem - i, cur);
        }
        cur[pos] = 0;
    };
    Expo<N> cur{};
    rec(rec, 0, d, cur);
    return out;
}

inline long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace syz

#ifndef YAMABE_PROFILE_HPP
#define YAMABE_PROFILE_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "yamabe/rational.hpp"

namespace yamabe {

// Half-space coordinates are split as y = (ybar, t) with rho = |ybar| and
// Q = rho^2 + (1+t)^2. Every explicit function handled by this toolkit is a
// finite sum of terms
//
//     c * rho^(2a) * t^k * Q^(-s/2) * (log Q)^l
//
// with exact rational c. The rho-exponent stays even under all operations
// exposed here, s may be any integer (so half powers of Q and positive
// powers are both representable), k and l are nonnegative.
//
// These monomials satisfy the relation rho^2 = Q - (1+t)^2, so the raw
// spanning set is linearly dependent. Canonicalization eliminates rho
// through that relation; the reduced monomials t^k Q^(-s/2) (log Q)^l are
// linearly independent as functions, which makes equality (and in
// particular zero-testing of PDE residuals) decidable by coefficient
// comparison. Terms may be ENTERED with any even rho power; the stored
// canonical form always has rho_half_deg = 0.
struct ProfileTerm {
    Rational coeff;
    int rho_half_deg = 0;     // a: carries rho^(2a)
    int t_deg = 0;            // k
    int q_neg_twice_exp = 0;  // s: carries Q^(-s/2)
    int log_deg = 0;          // l

    std::tuple<int, int, int, int> key() const {
        return {rho_half_deg, t_deg, q_neg_twice_exp, log_deg};
    }
};

class RadialProfile {
public:
    RadialProfile() = default;
    explicit RadialProfile(std::vector<ProfileTerm> terms) : terms_(std::move(terms)) {
        canonicalize();
    }

    static RadialProfile zero() { return RadialProfile(); }
    static RadialProfile constant(const Rational& c) { return term(c, 0, 0, 0, 0); }
    static RadialProfile term(const Rational& c, int a, int k, int s, int l = 0) {
        if (a < 0 || k < 0 || l < 0)
            throw std::invalid_argument("RadialProfile: negative exponent");
        if (c.is_zero()) return RadialProfile();
        return RadialProfile(std::vector<ProfileTerm>{{c, a, k, s, l}});
    }
    // Q^(-s/2) with s as a plain integer, the most common building block.
    static RadialProfile q_pow(int s, const Rational& c = Rational(1)) {
        return term(c, 0, 0, s, 0);
    }

    const std::vector<ProfileTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool log_free() const {
        for (const auto& t : terms_)
            if (t.log_deg > 0) return false;
        return true;
    }
    bool boundary_restricted() const {
        for (const auto& t : terms_)
            if (t.t_deg > 0) return false;
        return true;
    }

    friend bool operator==(const RadialProfile& a, const RadialProfile& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].key() != b.terms_[i].key()) return false;
            if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
        }
        return true;
    }
    friend bool operator!=(const RadialProfile& a, const RadialProfile& b) {
        return !(a == b);
    }

    friend RadialProfile operator+(const RadialProfile& a, const RadialProfile& b) {
        std::vector<ProfileTerm> all = a.terms_;
        all.insert(all.end(), b.terms_.begin(), b.terms_.end());
        return RadialProfile(std::move(all));
    }
    friend RadialProfile operator-(const RadialProfile& a, const RadialProfile& b) {
        return a + b.scaled(Rational(-1));
    }
    RadialProfile scaled(const Rational& c) const {
        std::vector<ProfileTerm> out;
        if (c.is_zero()) return RadialProfile();
        out.reserve(terms_.size());
        for (auto t : terms_) {
            t.coeff *= c;
            out.push_back(std::move(t));
        }
        return RadialProfile(std::move(out));
    }
    friend RadialProfile operator*(const RadialProfile& a, const RadialProfile& b) {
        std::vector<ProfileTerm> out;
        out.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_)
                out.push_back({x.coeff * y.coeff, x.rho_half_deg + y.rho_half_deg,
                               x.t_deg + y.t_deg, x.q_neg_twice_exp + y.q_neg_twice_exp,
                               x.log_deg + y.log_deg});
        return RadialProfile(std::move(out));
    }
    friend RadialProfile operator*(const Rational& c, const RadialProfile& p) {
        return p.scaled(c);
    }

    // rho^2 * p and t^k * p, used when assembling integrands.
    RadialProfile times_rho_sq(int a = 1) const {
        std::vector<ProfileTerm> out = terms_;
        for (auto& t : out) t.rho_half_deg += a;
        return RadialProfile(std::move(out));
    }
    RadialProfile times_t(int k = 1) const {
        std::vector<ProfileTerm> out = terms_;
        for (auto& t : out) t.t_deg += k;
        return RadialProfile(std::move(out));
    }

    // d/dt. Uses dQ/dt = 2(1+t); log factors differentiate as
    // d(logQ)^l = l (logQ)^(l-1) * 2(1+t)/Q.
    RadialProfile d_t() const {
        std::vector<ProfileTerm> out;
        for (const auto& t : terms_) {
            if (t.t_deg > 0)
                out.push_back({t.coeff * Rational(t.t_deg), t.rho_half_deg, t.t_deg - 1,
                               t.q_neg_twice_exp, t.log_deg});
            Rational cs = t.coeff * Rational(-t.q_neg_twice_exp);
            if (!cs.is_zero()) {
                out.push_back({cs, t.rho_half_deg, t.t_deg, t.q_neg_twice_exp + 2, t.log_deg});
                out.push_back({cs, t.rho_half_deg, t.t_deg + 1, t.q_neg_twice_exp + 2, t.log_deg});
            }
            if (t.log_deg > 0) {
                Rational cl = t.coeff * Rational(2 * t.log_deg);
                out.push_back({cl, t.rho_half_deg, t.t_deg, t.q_neg_twice_exp + 2,
                               t.log_deg - 1});
                out.push_back({cl, t.rho_half_deg, t.t_deg + 1, t.q_neg_twice_exp + 2,
                               t.log_deg - 1});
            }
        }
        return RadialProfile(std::move(out));
    }
    RadialProfile d_tt() const { return d_t().d_t(); }

    // (1/rho) d/drho, which preserves the even-rho form.
    RadialProfile inv_rho_d_rho() const {
        std::vector<ProfileTerm> out;
        for (const auto& t : terms_) {
            if (t.rho_half_deg > 0)
                out.push_back({t.coeff * Rational(2 * t.rho_half_deg), t.rho_half_deg - 1,
                               t.t_deg, t.q_neg_twice_exp, t.log_deg});
            Rational cs = t.coeff * Rational(-t.q_neg_twice_exp);
            if (!cs.is_zero())
                out.push_back({cs, t.rho_half_deg, t.t_deg, t.q_neg_twice_exp + 2, t.log_deg});
            if (t.log_deg > 0)
                out.push_back({t.coeff * Rational(2 * t.log_deg), t.rho_half_deg, t.t_deg,
                               t.q_neg_twice_exp + 2, t.log_deg - 1});
        }
        return RadialProfile(std::move(out));
    }

    // d^2/drho^2 = G + rho^2 * (1/rho) dG/drho with G = (1/rho) dp/drho.
    RadialProfile d_rho_rho() const {
        RadialProfile g = inv_rho_d_rho();
        return g + g.inv_rho_d_rho().times_rho_sq();
    }

    // Restriction to the boundary t = 0: terms with a t factor drop out,
    // the rest keep their exponents with Q read as 1 + rho^2.
    RadialProfile restrict_boundary() const {
        std::vector<ProfileTerm> out;
        for (const auto& t : terms_)
            if (t.t_deg == 0) out.push_back(t);
        return RadialProfile(std::move(out));
    }

    // Working precision is the 64-bit long double mantissa; asking for more
    // is an error rather than a silent degradation.
    long double eval(long double rho, long double t, int precision_bits) const {
        if (precision_bits > 64)
            throw std::domain_error("RadialProfile: requested precision exceeds working precision");
        return eval(rho, t);
    }

    long double eval(long double rho, long double t) const {
        if (rho < 0 || t < 0) throw std::invalid_argument("RadialProfile: negative point");
        long double q = rho * rho + (1 + t) * (1 + t);
        long double sq = std::sqrt(q);
        long double lq = (log_free() ? 0.0L : std::log(q));
        auto ipow = [](long double x, int e) {
            bool inv = e < 0;
            unsigned k = inv ? static_cast<unsigned>(-e) : static_cast<unsigned>(e);
            long double r = 1.0L, b = x;
            while (k) {
                if (k & 1u) r *= b;
                b *= b;
                k >>= 1;
            }
            return inv ? 1.0L / r : r;
        };
        // compensated summation in canonical term order, for determinism
        long double sum = 0.0L, comp = 0.0L;
        for (const auto& tm : terms_) {
            long double v = tm.coeff.to_long_double();
            if (tm.rho_half_deg) v *= ipow(rho * rho, tm.rho_half_deg);
            if (tm.t_deg) v *= ipow(t, tm.t_deg);
            if (tm.q_neg_twice_exp) v *= ipow(sq, -tm.q_neg_twice_exp);
            if (tm.log_deg) v *= ipow(lq, tm.log_deg);
            long double y = v - comp;
            long double s = sum + y;
            comp = (s - sum) - y;
            sum = s;
        }
        return sum;
    }

    // Stable text form: sum of `c * rho^2a * t^k * Q^(-s/2) * logQ^l`.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const auto& t = terms_[i];
            if (i) out += " + ";
            out += t.coeff.to_string();
            if (t.rho_half_deg) out += " * rho^" + std::to_string(2 * t.rho_half_deg);
            if (t.t_deg) out += " * t^" + std::to_string(t.t_deg);
            if (t.q_neg_twice_exp) {
                int s = t.q_neg_twice_exp;
                if (s % 2 == 0)
                    out += " * Q^(" + std::to_string(-s / 2) + ")";
                else
                    out += " * Q^(" + std::to_string(-s) + "/2)";
            }
            if (t.log_deg) out += " * logQ^" + std::to_string(t.log_deg);
        }
        return out;
    }

private:
    std::vector<ProfileTerm> terms_;

    void canonicalize() {
        // eliminate rho^(2a) via rho^2 = Q - (1+t)^2
        std::vector<ProfileTerm> flat;
        for (const auto& t : terms_) {
            if (t.rho_half_deg < 0 || t.t_deg < 0 || t.log_deg < 0)
                throw std::invalid_argument("RadialProfile: negative exponent");
            if (t.rho_half_deg == 0) {
                flat.push_back(t);
                continue;
            }
            int a = t.rho_half_deg;
            // (Q - (1+t)^2)^a = sum_j C(a,j) (-1)^j Q^(a-j) (1+t)^(2j)
            Rational binom(1);
            for (int j = 0; j <= a; ++j) {
                Rational cj = t.coeff * binom * (j % 2 ? Rational(-1) : Rational(1));
                // (1+t)^(2j) expanded against the t-power of the term
                Rational tb(1);
                for (int u = 0; u <= 2 * j; ++u) {
                    flat.push_back({cj * tb, 0, t.t_deg + u,
                                    t.q_neg_twice_exp - 2 * (a - j), t.log_deg});
                    tb *= Rational(2 * j - u, u + 1);
                }
                binom *= Rational(a - j, j + 1);
            }
        }
        std::sort(flat.begin(), flat.end(),
                  [](const ProfileTerm& a, const ProfileTerm& b) { return a.key() < b.key(); });
        std::vector<ProfileTerm> merged;
        for (auto& t : flat) {
            if (!merged.empty() && merged.back().key() == t.key())
                merged.back().coeff += t.coeff;
            else
                merged.push_back(std::move(t));
        }
        terms_.clear();
        for (auto& t : merged)
            if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
    }
};

// Tensor factors carried alongside radial profiles. Each kind stands for a
// polynomial in the boundary variables that is harmonic and trace free under
// the curvature normalizations at the base point (vanishing Ricci traces),
// so the full Laplacian of factor * profile reduces to a radial operator.
enum class HarmonicFactor {
    scalar,     // degree 0
    rn_pair,    // degree 2: R_ninj y_i y_j with R_ninj symmetric trace free
    riem_quad,  // degree 4: boundary Riemann contraction on y_i y_j y_k y_l
};

inline int factor_degree(HarmonicFactor f) {
    switch (f) {
        case HarmonicFactor::scalar: return 0;
        case HarmonicFactor::rn_pair: return 2;
        case HarmonicFactor::riem_quad: return 4;
    }
    throw std::logic_error("factor_degree: bad kind");
}

// Radial part of the full n-dimensional Laplacian of H * p for a harmonic
// factor H of degree d in the n-1 boundary variables:
//   Laplacian(H p) = H * (p_rhorho + ((n-2+2d)/rho) p_rho + p_tt).
inline RadialProfile laplacian_harmonic(const RadialProfile& p, HarmonicFactor factor, int n) {
    if (n < 5) throw std::invalid_argument("laplacian_harmonic: need n >= 5");
    int d = factor_degree(factor);
    return p.d_rho_rho() + p.inv_rho_d_rho().scaled(Rational(n - 2 + 2 * d)) + p.d_tt();
}

// The bubble U = Q^(-(n-2)/2).
inline RadialProfile bubble(int n) { return RadialProfile::q_pow(n - 2); }

}  // namespace yamabe

#endif

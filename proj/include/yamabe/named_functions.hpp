#ifndef YAMABE_NAMED_FUNCTIONS_HPP
#define YAMABE_NAMED_FUNCTIONS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "yamabe/profile.hpp"

namespace yamabe {

// One tensor-factor block of a named function: factor * profile(rho, t).
struct FunctionBody {
    HarmonicFactor factor;
    RadialProfile profile;
    RadialProfile neg_laplacian;  // expected value of -Laplacian(factor * profile) / factor
};

// An explicit function from the catalog together with the radial identities
// it is required to satisfy. Construction validates the dimension/parameter
// combinations; excluded combinations (poles in a coefficient) throw.
struct NamedFunction {
    std::string id;
    int n = 0;
    std::map<std::string, Rational> params;
    std::vector<FunctionBody> body;

    long double eval_radial(long double rho, long double t) const {
        long double v = 0.0L;
        for (const auto& b : body) v += b.profile.eval(rho, t);
        return v;
    }
};

namespace named {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::domain_error(what);
}

// U = Q^(-(n-2)/2); harmonic in the half space.
inline NamedFunction U(int n) {
    require(n >= 3, "U: need n >= 3");
    NamedFunction f{"U", n, {}, {}};
    f.body.push_back({HarmonicFactor::scalar, bubble(n), RadialProfile::zero()});
    return f;
}

// Phi0 = 1/(4(n-6)) Q^(-(n-6)/2) + a1 Q^(-(n-2)/2) + a2,
// with -Laplacian(Phi0) = Q^(-(n-4)/2). The 1/(n-6) pole excludes n = 6.
inline NamedFunction Phi0(int n, const Rational& a1 = Rational(0),
                          const Rational& a2 = Rational(0)) {
    require(n >= 5 && n != 6, "Phi0: excluded dimension (pole at n = 6)");
    NamedFunction f{"Phi0", n, {{"a1", a1}, {"a2", a2}}, {}};
    RadialProfile p = RadialProfile::q_pow(n - 6, Rational(1, 4 * (n - 6))) +
                      RadialProfile::q_pow(n - 2, a1) + RadialProfile::constant(a2);
    f.body.push_back({HarmonicFactor::scalar, p, RadialProfile::q_pow(n - 4)});
    return f;
}

// Phi1 = 1/(4(n-4)) (1+t) Q^(-(n-4)/2) + a1 (1+t) Q^(-n/2),
// with -Laplacian(Phi1) = (1+t) Q^(-(n-2)/2).
inline NamedFunction Phi1(int n, const Rational& a1 = Rational(0)) {
    require(n >= 5, "Phi1: need n >= 5");
    NamedFunction f{"Phi1", n, {{"a1", a1}}, {}};
    Rational c(1, 4 * (n - 4));
    RadialProfile p = RadialProfile::term(c, 0, 0, n - 4) + RadialProfile::term(c, 0, 1, n - 4) +
                      RadialProfile::term(a1, 0, 0, n) + RadialProfile::term(a1, 0, 1, n);
    RadialProfile rhs =
        RadialProfile::term(Rational(1), 0, 0, n - 2) + RadialProfile::term(Rational(1), 0, 1, n - 2);
    f.body.push_back({HarmonicFactor::scalar, p, rhs});
    return f;
}

// Phi2 = 1/(2(n-4)) Q^(-(n-4)/2) + a2 Q^(-(n-2)/2) + a2',
// with -Laplacian(Phi2) = Q^(-(n-2)/2).
inline NamedFunction Phi2(int n, const Rational& a2 = Rational(0),
                          const Rational& a2p = Rational(0)) {
    require(n >= 5, "Phi2: need n >= 5");
    NamedFunction f{"Phi2", n, {{"a2", a2}, {"a2p", a2p}}, {}};
    RadialProfile p = RadialProfile::q_pow(n - 4, Rational(1, 2 * (n - 4))) +
                      RadialProfile::q_pow(n - 2, a2) + RadialProfile::constant(a2p);
    f.body.push_back({HarmonicFactor::scalar, p, RadialProfile::q_pow(n - 2)});
    return f;
}

// PhiTilde0 solves -Laplacian = Q^(-(n-6)/2). Power branch for n != 8,
// log branch -(1/12) log Q + a1 Q^(-3) + a2 for n = 8; the power branch at
// n = 8 does not exist (pole), so the branch is selected by the dimension.
inline NamedFunction PhiTilde0(int n, const Rational& a1 = Rational(0),
                               const Rational& a2 = Rational(0)) {
    require(n >= 5, "PhiTilde0: need n >= 5");
    NamedFunction f{"PhiTilde0", n, {{"a1", a1}, {"a2", a2}}, {}};
    RadialProfile p;
    if (n == 8) {
        p = RadialProfile::term(Rational(-1, 12), 0, 0, 0, 1) + RadialProfile::q_pow(6, a1) +
            RadialProfile::constant(a2);
    } else {
        p = RadialProfile::q_pow(n - 8, Rational(1, 6 * (n - 8))) +
            RadialProfile::q_pow(n - 2, a1) + RadialProfile::constant(a2);
    }
    f.body.push_back({HarmonicFactor::scalar, p, RadialProfile::q_pow(n - 6)});
    return f;
}

// Radial part of PhiTilde1 inside the R_ninj y_i y_j factor.
//
// The two parameter brackets are the harmonic elements generated by the
// free constants of Phi0, Phi1 and PhiTilde0 under R_ninj d2_ij; the (1+t)
// factors below make each bracket exactly harmonic for the degree-2 factor.
inline RadialProfile phitilde1_radial(int n, const Rational& a1, const Rational& a1p,
                                      const Rational& a2p) {
    RadialProfile p = RadialProfile::q_pow(n - 2, Rational(1, 12));
    //  (n-2)/6 * (1 - t + t^2) Q^(-n/2)
    Rational c6(n - 2, 6);
    p = p + RadialProfile::term(c6, 0, 0, n) + RadialProfile::term(-c6, 0, 1, n) +
        RadialProfile::term(c6, 0, 2, n);
    if (!a1.is_zero()) {
        // a1 * n(n^2-4)/((n-4)(n-6)) * [ (n+4)(1+t)^2 Q^(-(n+6)/2) - Q^(-(n+4)/2) ]
        Rational c = a1 * Rational(static_cast<long long>(n) * (n * n - 4),
                                   static_cast<long long>(n - 4) * (n - 6));
        Rational cp = c * Rational(n + 4);
        p = p + RadialProfile::term(cp, 0, 0, n + 6) +
            RadialProfile::term(cp * Rational(2), 0, 1, n + 6) +
            RadialProfile::term(cp, 0, 2, n + 6) + RadialProfile::q_pow(n + 4, -c);
    }
    if (!a1p.is_zero()) {
        // a1' * [ n(n-2)/(n-4) Q^(-(n+2)/2) - 2n(n+2)(1+t) Q^(-(n+4)/2) ]
        Rational c1 = a1p * Rational(static_cast<long long>(n) * (n - 2), n - 4);
        Rational c2 = a1p * Rational(-2LL * n * (n + 2));
        p = p + RadialProfile::q_pow(n + 2, c1) + RadialProfile::term(c2, 0, 0, n + 4) +
            RadialProfile::term(c2, 0, 1, n + 4);
    }
    if (!a2p.is_zero())
        p = p + RadialProfile::q_pow(n + 2, a2p * Rational(static_cast<long long>(n) * (n - 2)));
    return p;
}

// PhiTilde1 = R_ninj y_i y_j * phitilde1_radial, solving
// -Laplacian(PhiTilde1) = R_ninj y_n^2 d2_ij U, whose radial form is
// n(n-2) t^2 Q^(-(n+2)/2) (the delta part of d2_ij U dies on the trace-free
// factor). The a1 bracket carries a 1/(n-6) pole, so n = 6 only admits a1 = 0.
inline NamedFunction PhiTilde1(int n, const Rational& a1 = Rational(0),
                               const Rational& a1p = Rational(0),
                               const Rational& a2p = Rational(0)) {
    require(n >= 5, "PhiTilde1: need n >= 5");
    require(n != 6 || a1.is_zero(), "PhiTilde1: a1 term excluded at n = 6 (pole)");
    NamedFunction f{"PhiTilde1", n, {{"a1", a1}, {"a1p", a1p}, {"a2p", a2p}}, {}};
    RadialProfile rhs =
        RadialProfile::term(Rational(static_cast<long long>(n) * (n - 2)), 0, 2, n + 2);
    f.body.push_back({HarmonicFactor::rn_pair, phitilde1_radial(n, a1, a1p, a2p), rhs});
    return f;
}

// PhiTilde2 = (1/3) Riem-quartic * [ (n-2)/6 Q^(-n/2) + a1 c_n Q^(-(n+6)/2) ],
// solving -Laplacian(PhiTilde2) = (1/3) Riem_ikjl y_k y_l d2_ij U; the
// radial identity is -Lap_4(profile) = (1/3) n(n-2) Q^(-(n+2)/2).
inline NamedFunction PhiTilde2(int n, const Rational& a1 = Rational(0)) {
    require(n >= 5, "PhiTilde2: need n >= 5");
    require(n != 6 || a1.is_zero(), "PhiTilde2: a1 term excluded at n = 6 (pole)");
    NamedFunction f{"PhiTilde2", n, {{"a1", a1}}, {}};
    RadialProfile p = RadialProfile::q_pow(n, Rational(n - 2, 18));
    if (!a1.is_zero()) {
        Rational c = a1 *
                     Rational(static_cast<long long>(n) * (n * n - 4) * (n + 4),
                              static_cast<long long>(n - 6) * (n - 4)) /
                     Rational(3);
        p = p + RadialProfile::q_pow(n + 6, c);
    }
    RadialProfile rhs =
        RadialProfile::q_pow(n + 2, Rational(static_cast<long long>(n) * (n - 2), 3));
    f.body.push_back({HarmonicFactor::riem_quad, p, rhs});
    return f;
}

// beta_kl = d2_kl(PhiTilde0)/((n-6)(n-4)) + Phi0/(n-4) delta_kl solves
// -Laplacian(beta_kl) = y_k y_l U. Splitting y_k y_l into its trace-free
// part (a degree-2 factor) and rho^2/(n-1) delta_kl turns this into the
// pair of radial identities
//   -Lap_2(B2) = U,              B2 = (inv_rho_d_rho)^2 PhiTilde0 / ((n-6)(n-4))
//   -Lap_0(B0) = rho^2 U/(n-1),  B0 = rho^2 B2/(n-1)
//                                   + inv_rho_d_rho(PhiTilde0)/((n-6)(n-4))
//                                   + Phi0/(n-4).
inline NamedFunction BetaKL(int n, const Rational& a1 = Rational(0),
                            const Rational& a2 = Rational(0)) {
    require(n >= 5 && n != 6, "BetaKL: excluded dimension (pole at n = 6)");
    NamedFunction f{"beta", n, {{"a1", a1}, {"a2", a2}}, {}};
    Rational inv = Rational(1, static_cast<long long>(n - 6) * (n - 4));
    RadialProfile phit0 = PhiTilde0(n, a1, a2).body[0].profile;
    RadialProfile phi0 = Phi0(n, a1, a2).body[0].profile;
    RadialProfile b2 = phit0.inv_rho_d_rho().inv_rho_d_rho().scaled(inv);
    RadialProfile b0 = b2.times_rho_sq().scaled(Rational(1, n - 1)) +
                       phit0.inv_rho_d_rho().scaled(inv) + phi0.scaled(Rational(1, n - 4));
    f.body.push_back({HarmonicFactor::rn_pair, b2, bubble(n)});
    f.body.push_back(
        {HarmonicFactor::scalar, b0, bubble(n).times_rho_sq().scaled(Rational(1, n - 1))});
    return f;
}

// The n = 7 correction profile A = 1/12 Q^(-5/2) + 5/6 (1 - t + t^2) Q^(-7/2).
inline RadialProfile a_profile_7() { return phitilde1_radial(7, 0, 0, 0); }

// The n = 8 profile with the tunable tail, A(b) = 1/12 Q^(-3)
// + (1 - t + t^2) Q^(-4) + b Q^(-5); the tail is harmonic for the degree-2
// factor, so the defining identity holds for every b.
inline RadialProfile a_profile_8(const Rational& b) {
    return phitilde1_radial(8, 0, 0, b / Rational(48));
}

inline NamedFunction A7() {
    NamedFunction f = PhiTilde1(7);
    f.id = "A7";
    return f;
}

inline NamedFunction A8(const Rational& b) {
    NamedFunction f = PhiTilde1(8, Rational(0), Rational(0), b / Rational(48));
    f.id = "A8";
    f.params = {{"b", b}};
    return f;
}

// Corollary forms: both correction blocks with all free parameters zero,
// valid for every n >= 5 including n = 6.
inline NamedFunction Phi1e2(int n) {
    require(n >= 5, "Phi1e2: need n >= 5");
    NamedFunction f{"Phi1e2", n, {}, {}};
    NamedFunction t1 = PhiTilde1(n);
    NamedFunction t2 = PhiTilde2(n);
    f.body.push_back(t1.body[0]);
    f.body.push_back(t2.body[0]);
    return f;
}

// Catalog dispatch by id string (CLI dump and report tooling).
inline NamedFunction build_named(const std::string& id, int n,
                                 const std::map<std::string, Rational>& params = {}) {
    auto get = [&](const std::string& k) {
        auto it = params.find(k);
        return it == params.end() ? Rational(0) : it->second;
    };
    if (id == "U") return U(n);
    if (id == "Phi0") return Phi0(n, get("a1"), get("a2"));
    if (id == "Phi1") return Phi1(n, get("a1"));
    if (id == "Phi2") return Phi2(n, get("a2"), get("a2p"));
    if (id == "PhiTilde0") return PhiTilde0(n, get("a1"), get("a2"));
    if (id == "PhiTilde1") return PhiTilde1(n, get("a1"), get("a1p"), get("a2p"));
    if (id == "PhiTilde2") return PhiTilde2(n, get("a1"));
    if (id == "Phi1e2") return Phi1e2(n);
    if (id == "beta") return BetaKL(n, get("a1"), get("a2"));
    if (id == "A7") return A7();
    if (id == "A8") return A8(get("b"));
    throw std::invalid_argument("build_named: unknown function id '" + id + "'");
}

}  // namespace named

}  // namespace yamabe

#endif

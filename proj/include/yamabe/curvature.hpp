#ifndef YAMABE_CURVATURE_HPP
#define YAMABE_CURVATURE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "yamabe/moments.hpp"
#include "yamabe/profile.hpp"
#include "yamabe/quadrature.hpp"
#include "yamabe/rational.hpp"

namespace yamabe {

// Tensor slots appearing in the contraction identities: the normal-normal
// curvature block R_ninj (2 boundary indices), the boundary Riemann tensor
// (4 indices), and the second-derivative block R_ninj,kl (4 indices, only
// its (i,j) symmetry and double-trace normalization are modeled).
enum class TensorSlot { RN, RIEM, RN_DERIV };

inline int slot_indices(TensorSlot s) { return s == TensorSlot::RN ? 2 : 4; }

// A contraction of curvature slots against coordinate monomials under a
// radial weight: every tensor index pairs with one monomial coordinate.
struct ContractionPattern {
    std::vector<TensorSlot> slots;
    RadialProfile weight;
    bool boundary = true;  // boundary integral (t = 0) vs half-space integral

    int monomial_degree() const {
        int d = 0;
        for (auto s : slots) d += slot_indices(s);
        return d;
    }
};

// Reduction output: exact coefficients over the scalar basis
// { |Wbar|^2, R_ninj^2, R_ninj,ij }, each a moment value.
struct CurvatureScalar {
    MomentValue wbar_sq = MomentValue::pure(Rational(0));
    MomentValue rn_sq = MomentValue::pure(Rational(0));
    MomentValue rn_div = MomentValue::pure(Rational(0));

    bool is_zero() const { return wbar_sq.is_zero() && rn_sq.is_zero() && rn_div.is_zero(); }

    friend CurvatureScalar operator+(const CurvatureScalar& a, const CurvatureScalar& b) {
        return {a.wbar_sq + b.wbar_sq, a.rn_sq + b.rn_sq, a.rn_div + b.rn_div};
    }
    CurvatureScalar scaled(const Rational& c) const {
        return {wbar_sq.scaled(c), rn_sq.scaled(c), rn_div.scaled(c)};
    }
};

// deterministic PRNG independent of the standard library distributions
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : state_(seed * 2685821657736338717ull + 1ull) {}
    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 2685821657736338717ull;
    }
    // small integer in [-9, 9]
    int small_int() { return static_cast<int>(next() % 19ull) - 9; }

private:
    std::uint64_t state_;
};

// Concrete curvature data at a boundary point with all normalizations of the
// conformal Fermi frame enforced exactly: R_ninj symmetric and trace free,
// the boundary Riemann tensor with full Riemann symmetries and vanishing
// Ricci traces, and the derivative block with vanishing double trace.
// Entries are small rationals so every projection stays exact.
class ConcreteCurvatureSample {
public:
    int n = 0;  // ambient dimension; boundary indices run over d = n-1 values

    ConcreteCurvatureSample(int n_, std::uint64_t seed) : n(n_), d_(n_ - 1) {
        if (n_ < 5) throw std::invalid_argument("ConcreteCurvatureSample: need n >= 5");
        SplitRng rng(seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(n_)));
        build_rn(rng);
        build_riem(rng);
        build_rn_deriv(rng);
    }

    int boundary_dim() const { return d_; }

    const Rational& rn(int i, int j) const { return rn_[idx2(i, j)]; }
    const Rational& riem(int a, int b, int c, int e) const { return riem_[idx4(a, b, c, e)]; }
    const Rational& rn_deriv(int i, int j, int k, int l) const {
        return rn_deriv_[idx4(i, j, k, l)];
    }

    // basis scalars of this sample
    Rational rn_sq() const {
        Rational s(0);
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) s += rn(i, j) * rn(i, j);
        return s;
    }
    Rational wbar_sq() const {
        Rational s(0);
        for (int a = 0; a < d_; ++a)
            for (int b = 0; b < d_; ++b)
                for (int c = 0; c < d_; ++c)
                    for (int e = 0; e < d_; ++e) s += riem(a, b, c, e) * riem(a, b, c, e);
        return s;
    }
    Rational rn_div() const {
        Rational s(0);
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) s += rn_deriv(i, j, i, j);
        return s;
    }

    // entry of the slot tensor for a full index tuple (positions consumed in order)
    Rational slot_entry(TensorSlot s, const int* ix) const {
        switch (s) {
            case TensorSlot::RN: return rn(ix[0], ix[1]);
            case TensorSlot::RIEM: return riem(ix[0], ix[1], ix[2], ix[3]);
            case TensorSlot::RN_DERIV: return rn_deriv(ix[0], ix[1], ix[2], ix[3]);
        }
        throw std::logic_error("slot_entry: bad slot");
    }

private:
    int d_;
    std::vector<Rational> rn_;
    std::vector<Rational> riem_;
    std::vector<Rational> rn_deriv_;

    std::size_t idx2(int i, int j) const { return static_cast<std::size_t>(i) * d_ + j; }
    std::size_t idx4(int a, int b, int c, int e) const {
        return ((static_cast<std::size_t>(a) * d_ + b) * d_ + c) * d_ + e;
    }

    void build_rn(SplitRng& rng) {
        rn_.assign(static_cast<std::size_t>(d_) * d_, Rational(0));
        for (int i = 0; i < d_; ++i)
            for (int j = i; j < d_; ++j) {
                Rational v(rng.small_int());
                rn_[idx2(i, j)] = v;
                rn_[idx2(j, i)] = v;
            }
        Rational tr(0);
        for (int i = 0; i < d_; ++i) tr += rn_[idx2(i, i)];
        Rational shift = tr / Rational(d_);
        for (int i = 0; i < d_; ++i) rn_[idx2(i, i)] -= shift;
    }

    void build_riem(SplitRng& rng) {
        std::size_t sz = static_cast<std::size_t>(d_) * d_ * d_ * d_;
        std::vector<Rational> t(sz);
        for (auto& v : t) v = Rational(rng.small_int());
        // antisymmetrize both pairs, then symmetrize under pair swap
        std::vector<Rational> r(sz);
        for (int a = 0; a < d_; ++a)
            for (int b = 0; b < d_; ++b)
                for (int c = 0; c < d_; ++c)
                    for (int e = 0; e < d_; ++e) {
                        Rational v = (t[idx4(a, b, c, e)] - t[idx4(b, a, c, e)] -
                                      t[idx4(a, b, e, c)] + t[idx4(b, a, e, c)]) /
                                     Rational(4);
                        r[idx4(a, b, c, e)] = v;
                    }
        std::vector<Rational> rs(sz);
        for (int a = 0; a < d_; ++a)
            for (int b = 0; b < d_; ++b)
                for (int c = 0; c < d_; ++c)
                    for (int e = 0; e < d_; ++e)
                        rs[idx4(a, b, c, e)] =
                            (r[idx4(a, b, c, e)] + r[idx4(c, e, a, b)]) / Rational(2);
        // first Bianchi projection: subtract the cyclic part over the first
        // three indices (exact, preserves the pair symmetries)
        std::vector<Rational> rb(sz);
        for (int a = 0; a < d_; ++a)
            for (int b = 0; b < d_; ++b)
                for (int c = 0; c < d_; ++c)
                    for (int e = 0; e < d_; ++e) {
                        Rational cyc = rs[idx4(a, b, c, e)] + rs[idx4(b, c, a, e)] +
                                       rs[idx4(c, a, b, e)];
                        rb[idx4(a, b, c, e)] = rs[idx4(a, b, c, e)] - cyc / Rational(3);
                    }
        // Ricci-trace removal (Weyl projection in d = n-1 dimensions)
        std::vector<Rational> ric(static_cast<std::size_t>(d_) * d_, Rational(0));
        for (int b = 0; b < d_; ++b)
            for (int e = 0; e < d_; ++e) {
                Rational s(0);
                for (int a = 0; a < d_; ++a) s += rb[idx4(a, b, a, e)];
                ric[idx2(b, e)] = s;
            }
        Rational scal(0);
        for (int b = 0; b < d_; ++b) scal += ric[idx2(b, b)];
        riem_.assign(sz, Rational(0));
        Rational c1 = Rational(1) / Rational(d_ - 2);
        Rational c2 = scal / (Rational(2) * Rational(d_ - 1) * Rational(d_ - 2));
        auto kn = [&](const std::vector<Rational>& A, int a, int b, int c, int e) {
            auto at = [&](int i, int j) { return A[idx2(i, j)]; };
            Rational da_c = (a == c) ? Rational(1) : Rational(0);
            Rational db_e = (b == e) ? Rational(1) : Rational(0);
            Rational da_e = (a == e) ? Rational(1) : Rational(0);
            Rational db_c = (b == c) ? Rational(1) : Rational(0);
            return at(a, c) * db_e + at(b, e) * da_c - at(a, e) * db_c - at(b, c) * da_e;
        };
        std::vector<Rational> gg(static_cast<std::size_t>(d_) * d_, Rational(0));
        for (int i = 0; i < d_; ++i) gg[idx2(i, i)] = Rational(1);
        for (int a = 0; a < d_; ++a)
            for (int b = 0; b < d_; ++b)
                for (int c = 0; c < d_; ++c)
                    for (int e = 0; e < d_; ++e)
                        riem_[idx4(a, b, c, e)] = rb[idx4(a, b, c, e)] -
                                                  c1 * kn(ric, a, b, c, e) +
                                                  c2 * kn(gg, a, b, c, e);
    }

    void build_rn_deriv(SplitRng& rng) {
        std::size_t sz = static_cast<std::size_t>(d_) * d_ * d_ * d_;
        std::vector<Rational> t(sz);
        for (auto& v : t) v = Rational(rng.small_int());
        rn_deriv_.assign(sz, Rational(0));
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j)
                for (int k = 0; k < d_; ++k)
                    for (int l = 0; l < d_; ++l)
                        rn_deriv_[idx4(i, j, k, l)] =
                            (t[idx4(i, j, k, l)] + t[idx4(j, i, k, l)]) / Rational(2);
        // vanishing double trace, matching R_nn,kk = 0
        Rational tau(0);
        for (int i = 0; i < d_; ++i)
            for (int k = 0; k < d_; ++k) tau += rn_deriv_[idx4(i, i, k, k)];
        Rational shift = tau / Rational(d_ * d_);
        for (int i = 0; i < d_; ++i)
            for (int k = 0; k < d_; ++k) rn_deriv_[idx4(i, i, k, k)] -= shift;
    }
};

inline ConcreteCurvatureSample random_curvature_sample(int n, std::uint64_t seed) {
    return ConcreteCurvatureSample(n, seed);
}

// Totally symmetric, totally trace-free 4-tensor: a concrete degree-4
// harmonic polynomial used to exercise the quartic-factor Laplacian against
// a coordinate finite-difference oracle.
class HarmonicQuarticSample {
public:
    HarmonicQuarticSample(int n, std::uint64_t seed) : d_(n - 1) {
        if (n < 5) throw std::invalid_argument("HarmonicQuarticSample: need n >= 5");
        SplitRng rng(seed ^ 0xa5a5a5a5deadbeefull);
        std::size_t sz = static_cast<std::size_t>(d_) * d_ * d_ * d_;
        s_.assign(sz, Rational(0));
        // symmetric generation: fill sorted index tuples, copy to permutations
        for (int a = 0; a < d_; ++a)
            for (int b = a; b < d_; ++b)
                for (int c = b; c < d_; ++c)
                    for (int e = c; e < d_; ++e) {
                        Rational v(rng.small_int());
                        int ix[4] = {a, b, c, e};
                        std::array<int, 4> p = {0, 1, 2, 3};
                        do {
                            s_[idx4(ix[p[0]], ix[p[1]], ix[p[2]], ix[p[3]])] = v;
                        } while (std::next_permutation(p.begin(), p.end()));
                        s_[idx4(a, b, c, e)] = v;
                    }
        // trace removal: subtract the delta-symmetrized part so that every
        // single trace vanishes; for a totally symmetric tensor one trace
        // condition suffices
        std::vector<Rational> tr(static_cast<std::size_t>(d_) * d_, Rational(0));
        Rational tau(0);
        for (int k = 0; k < d_; ++k)
            for (int l = 0; l < d_; ++l) {
                Rational s(0);
                for (int i = 0; i < d_; ++i) s += s_[idx4(i, i, k, l)];
                tr[static_cast<std::size_t>(k) * d_ + l] = s;
                if (k == l) tau += s;
            }
        Rational tra = tau / Rational(2 * d_ + 4);
        std::vector<Rational> amat(static_cast<std::size_t>(d_) * d_, Rational(0));
        for (int k = 0; k < d_; ++k)
            for (int l = 0; l < d_; ++l) {
                Rational v = tr[static_cast<std::size_t>(k) * d_ + l];
                if (k == l) v -= tra;
                amat[static_cast<std::size_t>(k) * d_ + l] = v / Rational(d_ + 4);
            }
        for (int a = 0; a < d_; ++a)
            for (int b = 0; b < d_; ++b)
                for (int c = 0; c < d_; ++c)
                    for (int e = 0; e < d_; ++e) {
                        auto A = [&](int i, int j) {
                            return amat[static_cast<std::size_t>(i) * d_ + j];
                        };
                        auto del = [](int i, int j) {
                            return i == j ? Rational(1) : Rational(0);
                        };
                        s_[idx4(a, b, c, e)] -=
                            del(a, b) * A(c, e) + del(c, e) * A(a, b) + del(a, c) * A(b, e) +
                            del(b, e) * A(a, c) + del(a, e) * A(b, c) + del(b, c) * A(a, e);
                    }
    }

    int boundary_dim() const { return d_; }
    const Rational& at(int a, int b, int c, int e) const { return s_[idx4(a, b, c, e)]; }

    Rational trace(int k, int l) const {
        Rational s(0);
        for (int i = 0; i < d_; ++i) s += at(i, i, k, l);
        return s;
    }

    long double eval(const std::vector<long double>& ybar) const {
        long double v = 0.0L;
        for (int a = 0; a < d_; ++a)
            for (int b = 0; b < d_; ++b)
                for (int c = 0; c < d_; ++c)
                    for (int e = 0; e < d_; ++e)
                        v += at(a, b, c, e).to_long_double() * ybar[a] * ybar[b] * ybar[c] *
                             ybar[e];
        return v;
    }

private:
    int d_;
    std::vector<Rational> s_;

    std::size_t idx4(int a, int b, int c, int e) const {
        return ((static_cast<std::size_t>(a) * d_ + b) * d_ + c) * d_ + e;
    }
};

// Exact reduction of a contraction pattern to the scalar basis. Only the
// shapes appearing in the five displayed identities (plus the derivative
// block) are supported:
//   RN . y^2                -> 0
//   RIEM . y^4              -> 0
//   RN x RN . y^4           -> 2/(n^2-1) R_ninj^2 . moment(weight, rho^4)
//   RN x RIEM . y^6         -> 0
//   RIEM x RIEM . y^8       -> 0
//   RN_DERIV . y^4          -> 2/(n^2-1) R_ninj,ij . moment(weight, rho^4)
inline CurvatureScalar reduce_contraction(const ContractionPattern& pat, int n) {
    auto moment = [&](int extra) {
        return pat.boundary ? boundary_moment(pat.weight, extra, n)
                            : halfspace_moment(pat.weight, extra, n);
    };
    CurvatureScalar out;
    const auto& s = pat.slots;
    if (s.size() == 1 && s[0] == TensorSlot::RN) return out;
    if (s.size() == 1 && s[0] == TensorSlot::RIEM) return out;
    if (s.size() == 2 && s[0] == TensorSlot::RN && s[1] == TensorSlot::RN) {
        out.rn_sq = moment(4).scaled(Rational(2, static_cast<long long>(n) * n - 1));
        return out;
    }
    if (s.size() == 2 &&
        ((s[0] == TensorSlot::RN && s[1] == TensorSlot::RIEM) ||
         (s[0] == TensorSlot::RIEM && s[1] == TensorSlot::RN)))
        return out;
    if (s.size() == 2 && s[0] == TensorSlot::RIEM && s[1] == TensorSlot::RIEM) return out;
    if (s.size() == 1 && s[0] == TensorSlot::RN_DERIV) {
        out.rn_div = moment(4).scaled(Rational(2, static_cast<long long>(n) * n - 1));
        return out;
    }
    throw std::invalid_argument("reduce_contraction: unsupported pattern shape");
}

namespace detail {

inline void enumerate_pairings(const std::vector<int>& free,
                               std::vector<std::pair<int, int>>& cur,
                               std::vector<std::vector<std::pair<int, int>>>& out) {
    if (free.empty()) {
        out.push_back(cur);
        return;
    }
    int a = free[0];
    for (std::size_t i = 1; i < free.size(); ++i) {
        int b = free[i];
        std::vector<int> rest;
        for (std::size_t j = 1; j < free.size(); ++j)
            if (j != i) rest.push_back(free[j]);
        cur.push_back({a, b});
        enumerate_pairings(rest, cur, out);
        cur.pop_back();
    }
}

inline const std::vector<std::vector<std::pair<int, int>>>& pairings(int deg) {
    // built once for every degree in use; safe under concurrent first use
    static const std::vector<std::vector<std::vector<std::pair<int, int>>>> cache = [] {
        std::vector<std::vector<std::vector<std::pair<int, int>>>> c(9);
        for (int d : {2, 4, 6, 8}) {
            std::vector<int> all(d);
            for (int i = 0; i < d; ++i) all[i] = i;
            std::vector<std::pair<int, int>> cur;
            enumerate_pairings(all, cur, c[d]);
        }
        return c;
    }();
    return cache.at(deg);
}

}  // namespace detail

// Exact angular factor of a contraction pattern for a concrete sample: the
// monomial average over the sphere expands into delta pairings,
//   <y_{a1}...y_{a2k}> = |y|^{2k} (sum over pairings) / (d(d+2)...(d+2k-2)),
// and each pairing contracts the sample tensors directly. This is the
// brute-force side, independent of the trace arguments in reduce_contraction.
inline Rational angular_factor(const ContractionPattern& pat, const ConcreteCurvatureSample& s) {
    int deg = pat.monomial_degree();
    int d = s.boundary_dim();
    Rational total(0);
    int npairs = deg / 2;
    for (const auto& pairing : detail::pairings(deg)) {
        // iterate over one index value per pair
        std::vector<int> val(npairs, 0);
        Rational psum(0);
        while (true) {
            std::vector<int> ix(deg);
            for (int p = 0; p < npairs; ++p) {
                ix[pairing[p].first] = val[p];
                ix[pairing[p].second] = val[p];
            }
            Rational prod(1);
            int pos = 0;
            for (auto slot : pat.slots) {
                prod *= s.slot_entry(slot, ix.data() + pos);
                pos += slot_indices(slot);
                if (prod.is_zero()) break;
            }
            psum += prod;
            int c = npairs - 1;
            while (c >= 0 && ++val[c] == d) val[c--] = 0;
            if (c < 0) break;
        }
        total += psum;
    }
    Rational denom(1);
    for (int j = 0; j < npairs; ++j) denom *= Rational(d + 2 * j);
    return total / denom;
}

// Brute-force numeric value of the fully index-summed integral: exact
// angular factor times a quadrature value of the radial moment.
inline long double numeric_contract(const ContractionPattern& pat,
                                    const ConcreteCurvatureSample& sample,
                                    const QuadratureSpec& spec = {}) {
    int deg = pat.monomial_degree();
    int n = sample.n;
    Rational ang = angular_factor(pat, sample);
    long double radial;
    if (pat.boundary) {
        const RadialProfile w = pat.weight;
        radial = integrate_halfline(
                     [&](long double rho) {
                         return w.eval(rho, 0.0L) *
                                std::pow(rho, static_cast<long double>(deg + n - 2));
                     },
                     spec)
                     .value;
    } else {
        const RadialProfile w = pat.weight;
        radial = integrate_quadrant(
                     [&](long double rho, long double t) { return w.eval(rho, t); },
                     deg + n - 2, spec)
                     .value;
    }
    return ang.to_long_double() * radial * omega_numeric(n);
}

// Numeric value of a reduced CurvatureScalar for the same sample.
inline long double curvature_scalar_numeric(const CurvatureScalar& cs,
                                            const ConcreteCurvatureSample& s) {
    long double v = 0.0L;
    if (!cs.wbar_sq.is_zero()) v += cs.wbar_sq.numeric() * s.wbar_sq().to_long_double();
    if (!cs.rn_sq.is_zero()) v += cs.rn_sq.numeric() * s.rn_sq().to_long_double();
    if (!cs.rn_div.is_zero()) v += cs.rn_div.numeric() * s.rn_div().to_long_double();
    return v;
}

}  // namespace yamabe

#endif

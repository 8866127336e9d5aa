#pragma once

// Sequence-level results: closed forms, linear recurrences, rational
// generating functions, exponential growth rates, and the polynomial-growth
// classifiers (the ten-class basis test and its reverse-double-list
// consequence).

#include <optional>

#include "rdl/bigint.hpp"
#include "rdl/core.hpp"
#include "rdl/enumeration.hpp"

namespace rdl {

class UnsupportedPatternError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// r_n = sum_i coefficients[i] * r_{n-i-1} + constant, valid for n >= n0;
// base holds the exact values r_1 .. r_{n0-1}.
struct LinearRecurrenceSpec {
    std::vector<long long> coefficients;
    long long constant = 0;
    int n0 = 1;
    std::vector<BigInt> base;
};

inline BigInt recurrence_value(const LinearRecurrenceSpec& spec, int n) {
    if (n < 1) throw std::invalid_argument("recurrence_value: n >= 1");
    if (static_cast<int>(spec.base.size()) != spec.n0 - 1)
        throw std::invalid_argument("recurrence_value: base must cover 1..n0-1");
    std::vector<BigInt> vals(spec.base);
    vals.insert(vals.begin(), 1);  // r_0 = 1: the empty reverse double list
    for (int m = spec.n0; m <= n; ++m) {
        BigInt v = spec.constant;
        for (size_t i = 0; i < spec.coefficients.size(); ++i) {
            const int idx = m - static_cast<int>(i) - 1;
            if (idx < 0) throw std::invalid_argument("recurrence_value: order exceeds history");
            v += BigInt(spec.coefficients[i]) * vals[static_cast<size_t>(idx)];
        }
        vals.push_back(std::move(v));
    }
    return vals[static_cast<size_t>(n)];
}

// Rational ordinary generating function sum_n a_n x^n = num(x) / den(x),
// with den(0) != 0 so the series is well defined.
struct RationalGF {
    std::vector<BigInt> num;  // ascending coefficients
    std::vector<BigInt> den;
};

// Exact coefficient extraction: a_n = (num_n - sum_{j>=1} den_j a_{n-j}) / den_0.
// A non-integer coefficient signals a transcription bug, never a rounding
// concern, so it throws.
inline std::vector<BigInt> gf_series(const RationalGF& g, int n_max) {
    if (g.den.empty() || g.den[0] == 0)
        throw std::invalid_argument("gf_series: denominator constant term must be nonzero");
    std::vector<BigInt> a;
    for (int n = 0; n <= n_max; ++n) {
        BigInt rhs = n < static_cast<int>(g.num.size()) ? g.num[static_cast<size_t>(n)] : BigInt(0);
        for (size_t j = 1; j < g.den.size() && j <= static_cast<size_t>(n); ++j)
            rhs -= g.den[j] * a[static_cast<size_t>(n) - j];
        BigInt q, r;
        boost::multiprecision::divide_qr(rhs, g.den[0], q, r);
        if (r != 0) throw std::logic_error("gf_series: non-integer coefficient (transcription bug)");
        a.push_back(std::move(q));
    }
    return a;
}

namespace detail {

// Frozen per-orbit sequence data (recurrence and generating function), keyed
// by the lexicographically least member of the trivial Wilf orbit.
struct OrbitData {
    std::optional<LinearRecurrenceSpec> recurrence;
    std::optional<RationalGF> gf;
};

inline const std::map<Permutation, OrbitData>& orbit_table() {
    static const std::map<Permutation, OrbitData> table = [] {
        std::map<Permutation, OrbitData> t;
        auto P = [](std::initializer_list<int> d) { return Permutation(std::vector<int>(d)); };
        auto B = [](std::initializer_list<long long> v) {
            std::vector<BigInt> out;
            for (long long x : v) out.emplace_back(x);
            return out;
        };
        // length 3
        t[P({1, 2, 3})] = {LinearRecurrenceSpec{{}, 0, 4, B({1, 2, 2})}, std::nullopt};
        t[P({1, 3, 2})] = {LinearRecurrenceSpec{{1}, 0, 3, B({1, 2})}, std::nullopt};
        // length 4, one row per trivial orbit (1324 and 2143 share data)
        t[P({1, 2, 3, 4})] = {LinearRecurrenceSpec{{}, 0, 7, B({1, 2, 6, 16, 32, 32})},
                              RationalGF{B({1, 1, 2, 6, 16, 32, 32}), B({1})}};
        t[P({1, 2, 4, 3})] = {LinearRecurrenceSpec{{4, -6, 4, -1}, 0, 6, B({1, 2, 6, 16, 34})},
                              RationalGF{B({1, -3, 4, 0, 1, -1}), B({1, -4, 6, -4, 1})}};
        t[P({1, 3, 2, 4})] = {LinearRecurrenceSpec{{2}, 4, 4, B({1, 2, 6})},
                              RationalGF{B({1, -2, 1, 2, 2}), B({1, -3, 2})}};
        t[P({2, 1, 4, 3})] = {LinearRecurrenceSpec{{2}, 4, 4, B({1, 2, 6})},
                              RationalGF{B({1, -2, 1, 2, 2}), B({1, -3, 2})}};
        t[P({1, 4, 2, 3})] = {LinearRecurrenceSpec{{2, 0, 1}, 2, 5, B({1, 2, 6, 16})},
                              RationalGF{B({1, -2, 1, 1, 2, -1}), B({1, -3, 2, -1, 1})}};
        t[P({1, 4, 3, 2})] = {LinearRecurrenceSpec{{2, 1}, 0, 5, B({1, 2, 6, 16})},
                              RationalGF{B({-1, 1, 1, -1, -2}), B({-1, 2, 1})}};
        t[P({1, 3, 4, 2})] = {LinearRecurrenceSpec{{2, 1}, 2, 4, B({1, 2, 6})},
                              RationalGF{B({1, -2, 0, 2, 1}), B({1, -3, 1, 1})}};
        t[P({2, 4, 1, 3})] = {LinearRecurrenceSpec{{2, 2}, 0, 3, B({1, 2})},
                              RationalGF{B({-1, 1, 2}), B({-1, 2, 2})}};
        return t;
    }();
    return table;
}

inline const OrbitData* orbit_data_for(const Permutation& rho) {
    auto orbit = trivial_wilf_orbit(rho);
    auto it = orbit_table().find(*orbit.begin());
    return it == orbit_table().end() ? nullptr : &it->second;
}

}  // namespace detail

// Closed forms, keyed by trivial orbit.  Returns nothing when the orbit has
// no closed form or n is below the form's validity threshold.
inline std::optional<BigInt> closed_form(const Permutation& rho, int n) {
    if (n < 1) throw std::invalid_argument("closed_form: n >= 1");
    const auto orbit = trivial_wilf_orbit(rho);
    const int k = rho.size();
    auto has = [&](std::initializer_list<int> d) {
        return orbit.count(Permutation(std::vector<int>(d))) > 0;
    };
    if (k == 3 && has({1, 3, 2}))
        return n >= 2 ? std::optional<BigInt>(2) : std::nullopt;
    if (k == 4 && has({1, 2, 4, 3})) {
        if (n < 2) return std::nullopt;
        BigInt nn = n;
        return exact_div(nn * nn * nn - 7 * nn + 12, 3);  // n^3/3 - 7n/3 + 4
    }
    if (k == 4 && (has({1, 3, 2, 4}) || has({2, 1, 4, 3}))) {
        if (n < 3) return std::nullopt;
        BigInt v = 5;
        v <<= n - 2;  // 5 * 2^(n-2)
        return v - 4;
    }
    if (orbit.count(Permutation::identity(k)))  // monotone: zero past C(k,2)
        return n >= k * (k - 1) / 2 + 1 ? std::optional<BigInt>(0) : std::nullopt;
    return std::nullopt;
}

inline std::optional<LinearRecurrenceSpec> recurrence_spec_for(const Permutation& rho) {
    const auto* data = detail::orbit_data_for(rho);
    if (data && data->recurrence) return data->recurrence;
    return std::nullopt;
}

inline std::optional<RationalGF> gf_for(const Permutation& rho) {
    const auto* data = detail::orbit_data_for(rho);
    if (data && data->gf) return data->gf;
    return std::nullopt;
}

// Exact value via the tabulated recurrence for the supported orbits
// (length-3 classes and the seven length-4 classes).
inline BigInt recurrence_eval(const Permutation& rho, int n) {
    if (n < 1) throw std::invalid_argument("recurrence_eval: n >= 1");
    auto spec = recurrence_spec_for(rho);
    if (!spec)
        throw UnsupportedPatternError("no tabulated recurrence for pattern " + to_string(rho));
    return recurrence_value(*spec, n);
}

// ---------------------------------------------------------------------------
// Growth rates: largest real root of the characteristic polynomial, found by
// Sturm-chain isolation on the squarefree part with exact rational signs.

namespace detail {

using Poly = std::vector<BigRat>;  // ascending coefficients

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_sign_at(const Poly& p, const BigRat& x) {
    BigRat v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

inline Poly poly_derivative(const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * BigRat(static_cast<int>(i)));
    poly_trim(d);
    return d;
}

inline Poly poly_mod(Poly a, const Poly& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        BigRat factor = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        poly_trim(a);
    }
    return a;
}

inline Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {  // make monic for stable downstream division
        BigRat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

inline Poly poly_divide_exact(const Poly& a, const Poly& b) {
    Poly rem = a, q(a.size(), BigRat(0));
    poly_trim(rem);
    while (rem.size() >= b.size() && !rem.empty()) {
        BigRat factor = rem.back() / b.back();
        size_t shift = rem.size() - b.size();
        q[shift] = factor;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= factor * b[i];
        poly_trim(rem);
    }
    poly_trim(q);
    return q;
}

inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p, poly_derivative(p)};
    while (!chain.back().empty() && chain.back().size() > 1) {
        Poly r = poly_mod(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sturm_sign_changes(const std::vector<Poly>& chain, const BigRat& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        int s = poly_sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// Distinct real roots of squarefree p in the half-open interval (a, b].
inline int sturm_roots_in(const std::vector<Poly>& chain, const BigRat& a, const BigRat& b) {
    return sturm_sign_changes(chain, a) - sturm_sign_changes(chain, b);
}

}  // namespace detail

// Largest real root of the characteristic polynomial of the (homogenized)
// recurrence, to absolute tolerance 1e-9.  Constant inhomogeneity is removed
// first by the shift-and-subtract transform r_n -> r_n - r_{n-1}.
inline double growth_rate(const LinearRecurrenceSpec& spec) {
    std::vector<long long> c = spec.coefficients;
    if (spec.constant != 0) {
        std::vector<long long> h(c.size() + 1, 0);
        for (size_t i = 0; i < c.size(); ++i) {
            h[i] += c[i];
            h[i + 1] -= c[i];
        }
        h[0] += 1;
        c = std::move(h);
    }
    // characteristic polynomial x^d - c_1 x^{d-1} - ... - c_d, ascending
    detail::Poly p(c.size() + 1, BigRat(0));
    p[c.size()] = 1;
    for (size_t i = 0; i < c.size(); ++i) p[c.size() - 1 - i] = BigRat(-c[i]);
    detail::poly_trim(p);
    if (p.size() <= 1) throw std::domain_error("growth_rate: no positive real root");

    detail::Poly g = detail::poly_gcd(p, detail::poly_derivative(p));
    detail::Poly sf = g.size() <= 1 ? p : detail::poly_divide_exact(p, g);
    auto chain = detail::sturm_chain(sf);

    BigRat bound = 1;  // Cauchy bound: 1 + max |c_i| / |lead|
    for (size_t i = 0; i + 1 < sf.size(); ++i) {
        BigRat q = abs(sf[i] / sf.back());
        if (q + 1 > bound) bound = q + 1;
    }
    BigRat lo = 0, hi = bound;
    if (detail::sturm_roots_in(chain, lo, hi) == 0)
        throw std::domain_error("growth_rate: no positive real root");
    const BigRat eps(1, 2000000000LL);  // 5e-10
    while (hi - lo > eps) {
        BigRat mid = (lo + hi) / 2;
        if (detail::sturm_roots_in(chain, mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return static_cast<double>((lo + hi) / 2);
}

// ---------------------------------------------------------------------------
// Polynomial-growth machinery.

namespace detail {

inline bool monotone_run(const std::vector<int>& d, size_t from, size_t to, int dir) {
    for (size_t i = from + 1; i < to; ++i)
        if (dir > 0 ? d[i - 1] > d[i] : d[i - 1] < d[i]) return false;
    return true;
}

}  // namespace detail

// W(e1, e2): some split makes the prefix monotone per e1 and the suffix per
// e2 (+1 increasing, -1 decreasing); empty parts are vacuously monotone.
inline bool in_W(const Permutation& p, int e1, int e2) {
    if ((e1 != 1 && e1 != -1) || (e2 != 1 && e2 != -1))
        throw std::invalid_argument("in_W: signs must be +1 or -1");
    const auto& d = p.digits();
    for (size_t j = 0; j <= d.size(); ++j)
        if (detail::monotone_run(d, 0, j, e1) && detail::monotone_run(d, j, d.size(), e2))
            return true;
    return false;
}

// L2: direct sums of blocks 1 and 21.  Layer boundaries are forced, so a
// greedy scan decides membership.
inline bool in_L2(const Permutation& p) {
    const auto& d = p.digits();
    size_t i = 0;
    int base = 0;
    while (i < d.size()) {
        if (d[i] == base + 1) {
            base += 1;
            i += 1;
        } else if (d[i] == base + 2 && i + 1 < d.size() && d[i + 1] == base + 1) {
            base += 2;
            i += 2;
        } else {
            return false;
        }
    }
    return true;
}

inline bool in_L2r(const Permutation& p) { return in_L2(reverse(p)); }

// The ten classes whose simultaneous intersection with the basis decides
// polynomial growth of s_n(B).
struct PolyCharResult {
    bool polynomial = false;
    std::string missing_class;  // first missed class when not polynomial
};

inline PolyCharResult polychar_test(const PatternBasis& basis) {
    struct ClassTest {
        const char* name;
        std::function<bool(const Permutation&)> member;
    };
    const std::vector<ClassTest> classes = {
        {"W(1,1)", [](const Permutation& p) { return in_W(p, 1, 1); }},
        {"W(1,-1)", [](const Permutation& p) { return in_W(p, 1, -1); }},
        {"W(-1,1)", [](const Permutation& p) { return in_W(p, -1, 1); }},
        {"W(-1,-1)", [](const Permutation& p) { return in_W(p, -1, -1); }},
        {"W(1,1)^-1", [](const Permutation& p) { return in_W(inverse(p), 1, 1); }},
        {"W(1,-1)^-1", [](const Permutation& p) { return in_W(inverse(p), 1, -1); }},
        {"W(-1,1)^-1", [](const Permutation& p) { return in_W(inverse(p), -1, 1); }},
        {"W(-1,-1)^-1", [](const Permutation& p) { return in_W(inverse(p), -1, -1); }},
        {"L2", [](const Permutation& p) { return in_L2(p); }},
        {"L2^r", [](const Permutation& p) { return in_L2r(p); }},
    };
    for (const auto& cls : classes) {
        bool hit = false;
        for (const auto& p : basis.patterns())
            if (cls.member(p)) { hit = true; break; }
        if (!hit) return {false, cls.name};
    }
    return {true, {}};
}

struct GrowthVerdict {
    Permutation pattern;
    bool polynomial = false;
    std::string witness;  // target pattern hit (true) or missed class (false)
};

// r_n(rho) grows polynomially iff the trivial orbit of rho contains 12...k
// or 1...(k-2)k(k-1).
inline GrowthVerdict polynomial_growth(const Permutation& rho) {
    GrowthVerdict v;
    v.pattern = rho;
    const int k = rho.size();
    if (k == 0) throw std::invalid_argument("polynomial_growth: empty pattern");
    auto orbit = trivial_wilf_orbit(rho);
    if (orbit.count(Permutation::identity(k))) {
        v.polynomial = true;
        v.witness = "orbit contains 12...k";
        return v;
    }
    if (k >= 2) {
        std::vector<int> d;
        for (int i = 1; i <= k - 2; ++i) d.push_back(i);
        d.push_back(k);
        d.push_back(k - 1);
        if (orbit.count(Permutation(std::move(d)))) {
            v.polynomial = true;
            v.witness = "orbit contains 1...(k-2)k(k-1)";
            return v;
        }
    }
    v.polynomial = false;
    v.witness = polychar_test(shuffle_set(rho)).missing_class;
    return v;
}

// Per-n sign of r_n(r1) - r_n(r2); purely observational.
inline std::vector<int> compare_sequences(const Permutation& r1, const Permutation& r2,
                                          int n_max, const Capacity& cap = {}) {
    std::vector<int> signs;
    for (int n = 1; n <= n_max; ++n) {
        BigInt a = count_avoiders(r1, n, cap).count;
        BigInt b = count_avoiders(r2, n, cap).count;
        signs.push_back(a == b ? 0 : (a < b ? -1 : 1));
    }
    return signs;
}

// Vatter's finitely-labeled-generating-tree criterion, as a basis predicate:
// the basis holds a child of an increasing permutation (some member with
// LIS >= k-1) and a child of a decreasing one (some member with LDS >= k-1).
inline bool has_finitely_labeled_tree(const PatternBasis& basis) {
    bool child_of_increasing = false, child_of_decreasing = false;
    for (const auto& p : basis.patterns()) {
        if (lis_length(p) >= p.size() - 1) child_of_increasing = true;
        if (lds_length(p) >= p.size() - 1) child_of_decreasing = true;
    }
    return child_of_increasing && child_of_decreasing;
}

}  // namespace rdl

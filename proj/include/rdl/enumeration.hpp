#pragma once

// Enumeration of pattern-avoiding reverse double lists.  The primary
// counting path reduces r_n(rho) to classical avoidance of the shuffle set
// (a prefix-closed property) and runs basis-pruned backtracking over
// permutation prefixes; the naive build-sigma-and-test method is kept as
// the oracle.

#include <atomic>
#include <map>
#include <thread>

#include "rdl/bigint.hpp"
#include "rdl/core.hpp"

namespace rdl {

// Raised when a request exceeds the configured desk-scale guards.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Capacity {
    int max_n = 12;                 // counting guard
    long long max_items = 1000000;  // explicit-listing guard
};

enum class Method { brute, basis_pruned, formula, recurrence, gf };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::brute: return "brute";
        case Method::basis_pruned: return "basis-pruned";
        case Method::formula: return "formula";
        case Method::recurrence: return "recurrence";
        case Method::gf: return "gf";
    }
    return "?";
}

struct AvoidanceCount {
    Permutation pattern;  // the avoided pattern (lex-min basis member for s_n(B))
    int n = 0;
    BigInt count;
    Method method = Method::brute;
};

namespace detail {

// Partial-occurrence state for one basis pattern, compressed to what the
// future can see: the match progress t and, for every pattern position
// >= t, the open value window (lo, hi) imposed by the matched letters.
// Two states with pointwise wider windows subsume narrower ones, so only
// the Pareto frontier is kept; that keeps state sets tiny even for
// monotone-heavy bases.
struct MatchState {
    int t = 0;
    std::vector<int> lo, hi;  // indexed by pattern position; entries < t unused

    bool dominates(const MatchState& o) const {
        for (size_t s = static_cast<size_t>(t); s < lo.size(); ++s)
            if (lo[s] > o.lo[s] || hi[s] < o.hi[s]) return false;
        return true;
    }
};

struct PatternTracker {
    std::vector<int> rho;
    std::vector<MatchState> states;

    static PatternTracker initial(const Permutation& p, int n) {
        PatternTracker tr;
        tr.rho = p.digits();
        MatchState s;
        s.t = 0;
        s.lo.assign(tr.rho.size(), 0);
        s.hi.assign(tr.rho.size(), n + 1);
        tr.states.push_back(std::move(s));
        return tr;
    }

    // Extend every live state by letter x.  Returns false when the pattern
    // completes (the prefix now contains it); fills `next` otherwise.
    bool advance(int x, std::vector<MatchState>& next) const {
        const int k = static_cast<int>(rho.size());
        next = states;  // a partial occurrence also persists unextended
        for (const auto& st : states) {
            const auto t = static_cast<size_t>(st.t);
            if (!(st.lo[t] < x && x < st.hi[t])) continue;
            if (st.t + 1 == k) return false;  // full occurrence
            MatchState ext;
            ext.t = st.t + 1;
            ext.lo = st.lo;
            ext.hi = st.hi;
            for (size_t s = static_cast<size_t>(ext.t); s < rho.size(); ++s) {
                if (rho[t] < rho[s]) ext.lo[s] = std::max(ext.lo[s], x);
                if (rho[t] > rho[s]) ext.hi[s] = std::min(ext.hi[s], x);
            }
            bool subsumed = false;
            for (auto& kept : next)
                if (kept.t == ext.t && kept.dominates(ext)) { subsumed = true; break; }
            if (subsumed) continue;
            std::erase_if(next, [&](const MatchState& kept) {
                return kept.t == ext.t && ext.dominates(kept);
            });
            next.push_back(std::move(ext));
        }
        return true;
    }
};

// Depth-first search over permutation prefixes, cutting any branch whose
// prefix completes a basis pattern.  `emit`, when set, receives every full
// avoider in lexicographic order.
class PrunedSearch {
  public:
    PrunedSearch(const PatternBasis& basis, int n) : n_(n) {
        for (const auto& p : basis.patterns())
            trackers_.push_back(PatternTracker::initial(p, n));
    }

    BigInt run(int first_digit, const std::function<void(const std::vector<int>&)>* emit) {
        used_.assign(static_cast<size_t>(n_) + 1, false);
        prefix_.clear();
        count_ = 0;
        emit_ = emit;
        if (first_digit == 0) {
            descend(trackers_);
        } else {
            auto children = trackers_;
            if (step(first_digit, trackers_, children)) {
                prefix_.push_back(first_digit);
                used_[static_cast<size_t>(first_digit)] = true;
                descend(children);
            }
        }
        return count_;
    }

  private:
    bool step(int x, const std::vector<PatternTracker>& from, std::vector<PatternTracker>& to) {
        for (size_t i = 0; i < from.size(); ++i) {
            to[i].rho = from[i].rho;
            if (!from[i].advance(x, to[i].states)) return false;
        }
        return true;
    }

    void descend(const std::vector<PatternTracker>& trackers) {
        if (static_cast<int>(prefix_.size()) == n_) {
            ++count_;
            if (emit_) (*emit_)(prefix_);
            return;
        }
        auto children = trackers;
        for (int x = 1; x <= n_; ++x) {
            if (used_[static_cast<size_t>(x)]) continue;
            if (!step(x, trackers, children)) continue;
            prefix_.push_back(x);
            used_[static_cast<size_t>(x)] = true;
            descend(children);
            used_[static_cast<size_t>(x)] = false;
            prefix_.pop_back();
        }
    }

    int n_;
    std::vector<PatternTracker> trackers_;
    std::vector<bool> used_;
    std::vector<int> prefix_;
    BigInt count_;
    const std::function<void(const std::vector<int>&)>* emit_ = nullptr;
};

}  // namespace detail

// s_n(B) by prefix-pruned backtracking.  The search splits on the first
// digit of the permutation; split counts are summed in digit order, so the
// result is independent of thread count and traversal order.
inline AvoidanceCount count_classical_avoiders(const PatternBasis& basis, int n,
                                               const Capacity& cap = {}) {
    if (n < 0) throw std::invalid_argument("count_classical_avoiders: n >= 0");
    if (basis.empty()) throw std::invalid_argument("count_classical_avoiders: empty basis");
    if (n > cap.max_n)
        throw CapacityError("counting capped at n = " + std::to_string(cap.max_n));
    AvoidanceCount out;
    out.pattern = *basis.patterns().begin();
    out.n = n;
    out.method = Method::basis_pruned;
    if (n == 0) {
        out.count = 1;  // the empty permutation avoids every nonempty pattern
        return out;
    }
    const unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                                static_cast<unsigned>(n));
    std::vector<BigInt> partial(static_cast<size_t>(n));
    if (workers <= 1 || n < 4) {
        for (int d = 1; d <= n; ++d)
            partial[static_cast<size_t>(d - 1)] = detail::PrunedSearch(basis, n).run(d, nullptr);
    } else {
        std::atomic<int> next{1};
        auto work = [&] {
            for (int d = next.fetch_add(1); d <= n; d = next.fetch_add(1))
                partial[static_cast<size_t>(d - 1)] =
                    detail::PrunedSearch(basis, n).run(d, nullptr);
        };
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (const auto& c : partial) out.count += c;
    return out;
}

// r_n(rho) via the shuffle-set reduction.
inline AvoidanceCount count_avoiders(const Permutation& rho, int n, const Capacity& cap = {}) {
    auto out = count_classical_avoiders(shuffle_set(rho), n, cap);
    out.pattern = rho;
    return out;
}

// The oracle: build sigma = pi pi^r for every pi and test containment.
inline AvoidanceCount naive_count_avoiders(const Permutation& rho, int n,
                                           const Capacity& cap = {}) {
    if (n < 0) throw std::invalid_argument("naive_count_avoiders: n >= 0");
    if (n > cap.max_n)
        throw CapacityError("counting capped at n = " + std::to_string(cap.max_n));
    AvoidanceCount out;
    out.pattern = rho;
    out.n = n;
    out.method = Method::brute;
    std::vector<int> digits;
    for (int i = 1; i <= n; ++i) digits.push_back(i);
    BigInt count = 0;
    do {
        ReverseDoubleList rdl{Permutation(digits)};
        if (!contains(rdl.word(), rho)) ++count;
    } while (std::next_permutation(digits.begin(), digits.end()));
    out.count = count;
    return out;
}

// Exactly the avoiding sigma in lexicographic order of pi.
inline std::vector<ReverseDoubleList> list_avoiders(const Permutation& rho, int n,
                                                    const Capacity& cap = {}) {
    if (n < 0) throw std::invalid_argument("list_avoiders: n >= 0");
    if (n > cap.max_n)
        throw CapacityError("listing capped at n = " + std::to_string(cap.max_n));
    std::vector<ReverseDoubleList> out;
    std::function<void(const std::vector<int>&)> emit = [&](const std::vector<int>& pi) {
        if (static_cast<long long>(out.size()) >= cap.max_items)
            throw CapacityError("listing capped at " + std::to_string(cap.max_items) + " items");
        out.emplace_back(Permutation(pi));
    };
    if (n == 0) {
        out.emplace_back(Permutation(std::vector<int>{}));
        return out;
    }
    auto basis = shuffle_set(rho);
    for (int d = 1; d <= n; ++d) detail::PrunedSearch(basis, n).run(d, &emit);
    return out;
}

// [r_1, ..., r_{n_max}].
inline std::vector<AvoidanceCount> sequence(const Permutation& rho, int n_max,
                                            const Capacity& cap = {}) {
    if (n_max < 1) throw std::invalid_argument("sequence: n_max >= 1");
    std::vector<AvoidanceCount> out;
    for (int n = 1; n <= n_max; ++n) out.push_back(count_avoiders(rho, n, cap));
    return out;
}

// pi = J_{k-1} + J_{k-2} + ... + J_1, the maximal 12...k-avoider witness of
// length C(k,2).
inline Permutation erdos_szekeres_witness(int k) {
    if (k < 1) throw std::invalid_argument("erdos_szekeres_witness: k >= 1");
    Permutation w{std::vector<int>{}};
    for (int l = k - 1; l >= 1; --l) w = direct_sum(w, Permutation::decreasing(l));
    return w;
}

// Grouping of S_k by counted sequence prefix, with trivial-orbit merge
// annotations.
struct WilfClassReport {
    struct Class {
        std::vector<Permutation> patterns;           // sorted
        std::vector<BigInt> sequence;                // r_1..r_{n_probe}
        std::vector<std::set<Permutation>> orbits;   // trivial orbits inside
        bool merged = false;                         // > 1 orbit shares the sequence
    };
    int k = 0;
    int n_probe = 0;
    int trivial_orbit_count = 0;
    std::vector<Class> classes;  // sorted by sequence, ascending
};

inline WilfClassReport wilf_classify(int k, int n_probe, const Capacity& cap = {}) {
    if (k < 1 || k > 6) throw CapacityError("wilf_classify guarded to 1 <= k <= 6");
    if (n_probe < k) throw std::invalid_argument("wilf_classify: n_probe >= k");
    WilfClassReport report;
    report.k = k;
    report.n_probe = n_probe;

    std::vector<int> digits;
    for (int i = 1; i <= k; ++i) digits.push_back(i);
    std::map<Permutation, std::vector<BigInt>> seq_by_pattern;
    std::map<std::vector<BigInt>, std::vector<Permutation>> classes;
    std::set<std::set<Permutation>> orbits;
    do {
        Permutation rho{digits};
        orbits.insert(trivial_wilf_orbit(rho));
        // Patterns in one trivial orbit provably share the sequence; count
        // once per orbit and reuse.
        auto orbit = trivial_wilf_orbit(rho);
        auto rep = *orbit.begin();
        if (!seq_by_pattern.count(rep)) {
            std::vector<BigInt> seq;
            for (int n = 1; n <= n_probe; ++n)
                seq.push_back(count_avoiders(rep, n, cap).count);
            for (const auto& member : orbit) seq_by_pattern[member] = seq;
        }
        classes[seq_by_pattern[rho]].push_back(rho);
    } while (std::next_permutation(digits.begin(), digits.end()));

    report.trivial_orbit_count = static_cast<int>(orbits.size());
    for (auto& [seq, patterns] : classes) {
        WilfClassReport::Class cls;
        cls.sequence = seq;
        std::sort(patterns.begin(), patterns.end());
        cls.patterns = patterns;
        std::set<std::set<Permutation>> seen;
        for (const auto& p : patterns) seen.insert(trivial_wilf_orbit(p));
        cls.orbits.assign(seen.begin(), seen.end());
        cls.merged = cls.orbits.size() > 1;
        report.classes.push_back(std::move(cls));
    }
    return report;
}

}  // namespace rdl

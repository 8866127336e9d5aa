#pragma once

// Permutations, words, reverse double lists, pattern containment, and the
// shuffle-set construction that reduces reverse-double-list avoidance to
// classical permutation avoidance.

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdl {

// A finite sequence of positive integers; repeats allowed.  Houses the
// reverse double lists sigma = pi pi^r and any other containment target.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {
        for (int v : letters_)
            if (v < 1) throw std::invalid_argument("Word: letters must be >= 1");
    }

    int size() const { return static_cast<int>(letters_.size()); }
    int operator[](int i) const { return letters_[static_cast<size_t>(i)]; }
    const std::vector<int>& letters() const { return letters_; }

    bool is_palindrome() const {
        for (int i = 0, j = size() - 1; i < j; ++i, --j)
            if (letters_[i] != letters_[j]) return false;
        return true;
    }

    bool operator==(const Word& o) const = default;
    auto operator<=>(const Word& o) const = default;

  private:
    std::vector<int> letters_;
};

// A bijection on {1..n} stored as its one-line notation.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> digits) : digits_(std::move(digits)) {
        validate();
    }

    static Permutation identity(int n) {
        std::vector<int> d(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = i + 1;
        return Permutation(std::move(d));
    }

    // n (n-1) ... 1, often written J_n.
    static Permutation decreasing(int n) {
        std::vector<int> d(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = n - i;
        return Permutation(std::move(d));
    }

    int size() const { return static_cast<int>(digits_.size()); }
    int operator[](int i) const { return digits_[static_cast<size_t>(i)]; }
    const std::vector<int>& digits() const { return digits_; }

    bool operator==(const Permutation& o) const = default;
    auto operator<=>(const Permutation& o) const = default;

  private:
    void validate() const {
        const int n = size();
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (int v : digits_) {
            if (v < 1 || v > n || seen[static_cast<size_t>(v)])
                throw std::invalid_argument("Permutation: digits must be a rearrangement of 1..n");
            seen[static_cast<size_t>(v)] = 1;
        }
    }

    std::vector<int> digits_;
};

inline Permutation reverse(const Permutation& p) {
    std::vector<int> d(p.digits().rbegin(), p.digits().rend());
    return Permutation(std::move(d));
}

inline Permutation complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = n + 1 - p[i];
    return Permutation(std::move(d));
}

inline Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(p[i] - 1)] = i + 1;
    return Permutation(std::move(d));
}

// (a + b)_i = a_i for i <= |a|, |a| + b_{i-|a|} after.
inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> d;
    d.reserve(static_cast<size_t>(a.size() + b.size()));
    for (int v : a.digits()) d.push_back(v);
    for (int v : b.digits()) d.push_back(v + a.size());
    return Permutation(std::move(d));
}

// Skew sum: a's digits shifted up by |b|, then b unchanged.
inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> d;
    d.reserve(static_cast<size_t>(a.size() + b.size()));
    for (int v : a.digits()) d.push_back(v + b.size());
    for (int v : b.digits()) d.push_back(v);
    return Permutation(std::move(d));
}

// Text encoding: plain digit string for values <= 9 ("452316"),
// comma-separated otherwise ("4,5,2,3,1,6").  Words use the same scheme.
inline std::string format_values(const std::vector<int>& vals) {
    bool compact = true;
    for (int v : vals)
        if (v > 9) { compact = false; break; }
    std::ostringstream out;
    if (compact) {
        for (int v : vals) out << v;
    } else {
        for (size_t i = 0; i < vals.size(); ++i) {
            if (i) out << ',';
            out << vals[i];
        }
    }
    return out.str();
}

inline std::string to_string(const Permutation& p) { return format_values(p.digits()); }
inline std::string to_string(const Word& w) { return format_values(w.letters()); }

inline std::vector<int> parse_values(const std::string& text) {
    std::vector<int> vals;
    if (text.empty()) return vals;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(item, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed value list: '" + text + "'");
            }
            if (pos != item.size() || v < 1)
                throw std::invalid_argument("malformed value list: '" + text + "'");
            vals.push_back(v);
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("malformed digit string: '" + text + "'");
            vals.push_back(c - '0');
        }
    }
    return vals;
}

inline Permutation parse_permutation(const std::string& text) {
    return Permutation(parse_values(text));
}

// The word sigma = pi pi^r together with the half it was built from.
class ReverseDoubleList {
  public:
    explicit ReverseDoubleList(Permutation half) : half_(std::move(half)) {
        std::vector<int> w = half_.digits();
        w.insert(w.end(), half_.digits().rbegin(), half_.digits().rend());
        word_ = Word(std::move(w));
    }

    const Permutation& half() const { return half_; }
    const Word& word() const { return word_; }

    bool operator==(const ReverseDoubleList& o) const = default;
    auto operator<=>(const ReverseDoubleList& o) const = default;

  private:
    Permutation half_;
    Word word_;
};

// A finite set of equal-length patterns used as a classical avoidance basis.
class PatternBasis {
  public:
    PatternBasis() = default;
    explicit PatternBasis(std::set<Permutation> patterns) : patterns_(std::move(patterns)) {
        if (!patterns_.empty()) {
            const int k = patterns_.begin()->size();
            for (const auto& p : patterns_)
                if (p.size() != k)
                    throw std::invalid_argument("PatternBasis: patterns must share one length");
        }
    }

    const std::set<Permutation>& patterns() const { return patterns_; }
    bool empty() const { return patterns_.empty(); }
    size_t size() const { return patterns_.size(); }
    int pattern_length() const { return patterns_.empty() ? 0 : patterns_.begin()->size(); }

  private:
    std::set<Permutation> patterns_;
};

namespace detail {

// Backtracking occurrence search.  Pattern positions are matched left to
// right; each candidate letter must sit strictly inside the value window
// imposed by the already-matched letters (strict on both sides: a pattern
// has distinct values, so equal letters can never serve two positions).
// Prunes: remaining-length, and the window emptiness implied by it.
inline bool occurs_from(const std::vector<int>& w, const std::vector<int>& rho,
                        std::vector<int>& matched, int t, int from) {
    const int k = static_cast<int>(rho.size());
    const int m = static_cast<int>(w.size());
    if (t == k) return true;
    for (int j = from; j <= m - (k - t); ++j) {  // remaining-length prune
        const int x = w[static_cast<size_t>(j)];
        bool ok = true;
        for (int s = 0; s < t && ok; ++s) {
            if (rho[static_cast<size_t>(s)] < rho[static_cast<size_t>(t)])
                ok = matched[static_cast<size_t>(s)] < x;
            else
                ok = matched[static_cast<size_t>(s)] > x;
        }
        if (!ok) continue;
        matched[static_cast<size_t>(t)] = x;
        if (occurs_from(w, rho, matched, t + 1, j + 1)) return true;
    }
    return false;
}

}  // namespace detail

// True iff w has a subsequence order-isomorphic to rho.
inline bool contains(const Word& w, const Permutation& rho) {
    if (rho.size() == 0) throw std::invalid_argument("contains: empty pattern");
    if (rho.size() > w.size()) return false;
    std::vector<int> matched(static_cast<size_t>(rho.size()));
    return detail::occurs_from(w.letters(), rho.digits(), matched, 0, 0);
}

inline bool contains(const Permutation& p, const Permutation& rho) {
    return contains(Word(p.digits()), rho);
}

inline bool avoids(const Word& w, const Permutation& rho) { return !contains(w, rho); }

// Closure of {rho} under reverse and complement.  Inverse is deliberately
// not applied: it is not a symmetry of reverse double lists.
inline std::set<Permutation> trivial_wilf_orbit(const Permutation& rho) {
    std::set<Permutation> orbit{rho};
    for (bool grew = true; grew;) {
        grew = false;
        std::set<Permutation> next = orbit;
        for (const auto& p : orbit) {
            grew |= next.insert(reverse(p)).second;
            grew |= next.insert(complement(p)).second;
        }
        orbit.swap(next);
    }
    return orbit;
}

namespace detail {

inline void interleave(const std::vector<int>& a, const std::vector<int>& b,
                       size_t ia, size_t ib, std::vector<int>& acc,
                       std::set<Permutation>& out) {
    if (ia == a.size() && ib == b.size()) {
        out.insert(Permutation(acc));
        return;
    }
    if (ia < a.size()) {
        acc.push_back(a[ia]);
        interleave(a, b, ia + 1, ib, acc, out);
        acc.pop_back();
    }
    if (ib < b.size()) {
        acc.push_back(b[ib]);
        interleave(a, b, ia, ib + 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

// rho^<-> : every shuffle of the prefix rho_1..rho_i with the reversed
// suffix rho_k..rho_{i+1}, over all split points 1 <= i <= k.  Exactly
// 2^(k-1) distinct permutations result.
inline PatternBasis shuffle_set(const Permutation& rho) {
    if (rho.size() == 0) throw std::invalid_argument("shuffle_set: empty pattern");
    const auto& d = rho.digits();
    const size_t k = d.size();
    std::set<Permutation> out;
    for (size_t i = 1; i <= k; ++i) {
        std::vector<int> prefix(d.begin(), d.begin() + static_cast<long>(i));
        std::vector<int> rev_suffix(d.rbegin(), d.rbegin() + static_cast<long>(k - i));
        std::vector<int> acc;
        acc.reserve(k);
        detail::interleave(prefix, rev_suffix, 0, 0, acc, out);
    }
    return PatternBasis(std::move(out));
}

// Longest increasing / decreasing subsequence lengths (O(n^2); inputs are
// pattern-sized).
inline int lis_length(const Permutation& p) {
    const int n = p.size();
    std::vector<int> best(static_cast<size_t>(n), 1);
    int ans = n == 0 ? 0 : 1;
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < i; ++j)
            if (p[j] < p[i]) best[static_cast<size_t>(i)] =
                std::max(best[static_cast<size_t>(i)], best[static_cast<size_t>(j)] + 1);
        ans = std::max(ans, best[static_cast<size_t>(i)]);
    }
    return ans;
}

inline int lds_length(const Permutation& p) { return lis_length(complement(p)); }

}  // namespace rdl

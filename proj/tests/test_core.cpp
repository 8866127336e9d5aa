// Core types and symmetries: words, permutations, containment, orbits,
// shuffle sets.

#include <random>

#include "catch_amalgamated.hpp"
#include "rdl/core.hpp"

using namespace rdl;

namespace {

Permutation P(const std::string& text) { return parse_permutation(text); }

// Every permutation of 1..n, in lexicographic order.
std::vector<Permutation> all_perms(int n) {
    std::vector<int> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(std::vector<int>(d));
    } while (std::next_permutation(d.begin(), d.end()));
    return out;
}

// Complement of a word over its own value range: v -> min + max - v.
Word word_complement(const Word& w) {
    int lo = w[0], hi = w[0];
    for (int v : w.letters()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::vector<int> out;
    for (int v : w.letters()) out.push_back(lo + hi - v);
    return Word(std::move(out));
}

Word word_reverse(const Word& w) {
    std::vector<int> out(w.letters().rbegin(), w.letters().rend());
    return Word(std::move(out));
}

}  // namespace

TEST_CASE("permutation validation", "[core]") {
    CHECK(P("452316").size() == 6);
    CHECK(P("4,5,2,3,1,6") == P("452316"));
    CHECK_THROWS_AS(P("121"), std::invalid_argument);   // value repeated
    CHECK_THROWS_AS(P("13"), std::invalid_argument);    // not a rearrangement of 1..2
    CHECK_THROWS_AS(P("102"), std::invalid_argument);   // zero digit
    CHECK_THROWS_AS(P("1,0,2"), std::invalid_argument);
    CHECK_THROWS_AS(P("a21"), std::invalid_argument);
    CHECK(P("").size() == 0);  // empty permutation is legal
}

TEST_CASE("text encoding switches to commas past nine", "[core]") {
    CHECK(to_string(P("452316")) == "452316");
    Permutation big = Permutation::decreasing(10);
    CHECK(to_string(big) == "10,9,8,7,6,5,4,3,2,1");
    CHECK(parse_permutation(to_string(big)) == big);
    CHECK(to_string(Word(std::vector<int>{3, 1, 2, 2})) == "3122");
}

TEST_CASE("word letters must be positive", "[core]") {
    CHECK_THROWS_AS(Word(std::vector<int>{1, 0, 2}), std::invalid_argument);
    CHECK(Word(std::vector<int>{2, 1, 1, 2}).is_palindrome());
    CHECK_FALSE(Word(std::vector<int>{1, 2, 1, 2}).is_palindrome());
}

TEST_CASE("reverse, complement, inverse", "[core]") {
    CHECK(reverse(P("1342")) == P("2431"));
    CHECK(complement(P("1342")) == P("4213"));
    CHECK(inverse(Permutation::identity(6)) == Permutation::identity(6));
    CHECK(inverse(P("1423")) == P("1342"));

    for (int n = 1; n <= 5; ++n)
        for (const auto& p : all_perms(n)) {
            CHECK(reverse(reverse(p)) == p);
            CHECK(complement(complement(p)) == p);
            CHECK(inverse(inverse(p)) == p);
            CHECK(reverse(complement(reverse(complement(p)))) == p);
        }
}

TEST_CASE("direct and skew sums", "[core]") {
    CHECK(direct_sum(P("21"), P("1")) == P("213"));
    CHECK(skew_sum(P("1"), P("12")) == P("312"));
    CHECK(direct_sum(Permutation::decreasing(2), Permutation::decreasing(1)) == P("213"));
}

TEST_CASE("containment on words", "[core]") {
    CHECK(contains(Word(parse_values("246513315642")), P("1234")));
    CHECK(contains(Word(parse_values("123321")), P("123")));
    CHECK_FALSE(contains(Word(parse_values("231132")), P("123")));
    // Equal letters never serve two pattern positions.
    CHECK_FALSE(contains(Word(std::vector<int>{1, 1}), P("12")));
    CHECK(contains(Word(std::vector<int>{1, 1, 2, 2}), P("12")));
    CHECK_THROWS_AS(contains(Word(std::vector<int>{1}), Permutation()), std::invalid_argument);
}

TEST_CASE("containment commutes with reverse and complement", "[core]") {
    std::vector<Permutation> patterns;
    for (int k = 1; k <= 3; ++k)
        for (const auto& p : all_perms(k)) patterns.push_back(p);

    // All words of length <= 6 over alphabet {1..4}.
    std::vector<int> letters;
    std::function<void(int)> walk = [&](int remaining) {
        if (!letters.empty()) {
            Word w{std::vector<int>(letters)};
            for (const auto& rho : patterns) {
                const bool direct = contains(w, rho);
                CHECK(direct == contains(word_reverse(w), reverse(rho)));
                CHECK(direct == contains(word_complement(w), complement(rho)));
            }
        }
        if (remaining == 0) return;
        for (int v = 1; v <= 4; ++v) {
            letters.push_back(v);
            walk(remaining - 1);
            letters.pop_back();
        }
    };
    walk(6);
}

TEST_CASE("reverse double list invariants", "[core]") {
    std::mt19937 rng(20250819);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        std::vector<int> d(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = i + 1;
        std::shuffle(d.begin(), d.end(), rng);
        ReverseDoubleList rdl{Permutation{std::vector<int>(d)}};
        REQUIRE(rdl.word().size() == 2 * n);
        CHECK(rdl.word().is_palindrome());
        std::map<int, int> freq;
        for (int v : rdl.word().letters()) ++freq[v];
        for (int v = 1; v <= n; ++v) CHECK(freq[v] == 2);
        for (int i = 0; i < n; ++i) CHECK(rdl.word()[i] == rdl.half()[i]);
    }
}

TEST_CASE("trivial Wilf orbit", "[core]") {
    auto orbit_of = [](const std::string& s) { return trivial_wilf_orbit(parse_permutation(s)); };
    CHECK(orbit_of("132") == std::set<Permutation>{P("132"), P("231"), P("312"), P("213")});
    CHECK(orbit_of("1234") == std::set<Permutation>{P("1234"), P("4321")});
    CHECK(orbit_of("2413") == std::set<Permutation>{P("2413"), P("3142")});
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : all_perms(n)) {
            auto orbit = trivial_wilf_orbit(p);
            CHECK(4 % orbit.size() == 0);  // orbit sizes divide 4
            CHECK(orbit.count(p) == 1);
            for (const auto& q : orbit) CHECK(trivial_wilf_orbit(q) == orbit);
        }
}

TEST_CASE("shuffle set", "[core]") {
    PatternBasis s1234 = shuffle_set(P("1234"));
    std::set<Permutation> expected = {P("1234"), P("1243"), P("1423"), P("4123"),
                                      P("1432"), P("4132"), P("4312"), P("4321")};
    CHECK(s1234.patterns() == expected);
    CHECK(shuffle_set(P("123")).patterns() ==
          std::set<Permutation>{P("123"), P("132"), P("312"), P("321")});
    CHECK(shuffle_set(P("1")).patterns() == std::set<Permutation>{P("1")});
}

TEST_CASE("shuffle set cardinality is 2^(k-1)", "[core]") {
    for (int k = 1; k <= 7; ++k) {
        size_t expected = size_t{1} << (k - 1);
        for (const auto& p : all_perms(k)) CHECK(shuffle_set(p).size() == expected);
    }
}

TEST_CASE("pattern basis validation", "[core]") {
    CHECK_THROWS_AS(PatternBasis(std::set<Permutation>{P("1"), P("12")}), std::invalid_argument);
    CHECK(PatternBasis().empty());
}

TEST_CASE("longest monotone subsequence lengths", "[core]") {
    CHECK(lis_length(P("452316")) == 3);
    CHECK(lds_length(P("452316")) == 3);
    CHECK(lis_length(Permutation::identity(5)) == 5);
    CHECK(lds_length(Permutation::identity(5)) == 1);
    CHECK(lis_length(P("13524")) == 3);
    CHECK(lds_length(P("13524")) == 2);
}

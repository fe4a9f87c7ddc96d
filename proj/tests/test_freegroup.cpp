#include "doctest.h"
#include "punctorus/fatgraph.hpp"
#include "punctorus/freegroup.hpp"

#include <random>
#include <set>

using namespace punctorus;

TEST_CASE("free reduction") {
    CHECK(reduce("aA") == "");
    CHECK(reduce("abBA") == "");
    CHECK(reduce("abab") == "abab");
    CHECK(reduce(reduce("aabBAA")) == reduce("aabBAA"));  // idempotent
    CHECK_THROWS_AS(reduce("abc"), UnsupportedInputError);
}

TEST_CASE("cyclic reduction") {
    CHECK(cyclic_reduce("AbaBa") == "aAb");  // reduces freely first
    CHECK(cyclic_reduce("Baab") == "aa");
    CHECK(conjugacy_canon("ba") == conjugacy_canon("ab"));
    CHECK(conjugacy_canon("Bab") == conjugacy_canon("a"));
}

TEST_CASE("abelianization") {
    CHECK(abelianize("babab" + std::string("b")) == std::pair<long long, long long>{2, 4});
    CHECK(abelianize("") == std::pair<long long, long long>{0, 0});
    CHECK(abelianize("aB") == std::pair<long long, long long>{1, -1});
}

TEST_CASE("primitivity basics") {
    CHECK(is_primitive("a"));
    CHECK(is_primitive("B"));
    CHECK(is_primitive("ab"));
    CHECK(is_primitive("BA"));
    CHECK_FALSE(is_primitive(""));
    CHECK_FALSE(is_primitive("aa"));
    CHECK_FALSE(is_primitive("abAB"));   // commutator: zero abelianization
    CHECK_FALSE(is_primitive("abABa"));  // commutator times a
}

TEST_CASE("the black-side words are never primitive") {
    // (ba)^2 b^(t-2) for t = 4..12; even t fails the gcd filter, odd t
    // needs the full length reduction
    for (int t = 4; t <= 12; ++t) {
        std::string w = "baba";
        for (int i = 0; i < t - 2; ++i) w += 'b';
        CHECK_FALSE(is_primitive(w));
    }
    // the t=5 word has primitive abelianization (2,5) yet is not primitive
    CHECK_FALSE(is_primitive("babab" + std::string("bb")));
    auto ab = abelianize("bababbb");
    CHECK(std::gcd(ab.first, ab.second) == 1);
}

TEST_CASE("the white-side words are never primitive") {
    // B^(t+3) A B A
    for (int t = 4; t <= 12; ++t) {
        std::string w(t + 3, 'B');
        w += "ABA";
        CHECK_FALSE(is_primitive(w));
    }
}

TEST_CASE("primitivity is invariant under inversion, rotation and swap") {
    std::vector<Word> samples = {"ab", "aab", "bababbb", "baba", "abb", "aBaBB"};
    for (const Word& w : samples) {
        bool p = is_primitive(w);
        CHECK(is_primitive(invert_word(w)) == p);
        Word rot = w.substr(1) + w.substr(0, 1);
        CHECK(is_primitive(reduce(rot)) == p);
        Word swapped;
        for (char c : w)
            swapped += c == 'a' ? 'b' : c == 'b' ? 'a' : c == 'A' ? 'B' : 'A';
        CHECK(is_primitive(swapped) == p);
    }
}

TEST_CASE("images of a generator under random automorphisms are primitive") {
    std::mt19937 rng(7);
    const std::vector<std::pair<Word, Word>> moves = {
        {"b", "a"}, {"A", "b"}, {"ab", "b"}, {"aB", "b"}};
    for (int trial = 0; trial < 60; ++trial) {
        Word w = "a";
        int steps = 1 + (int)(rng() % 10);
        for (int s = 0; s < steps; ++s) {
            const auto& [ia, ib] = moves[rng() % moves.size()];
            w = apply_map(w, ia, ib);
        }
        if (w.size() > 40) continue;
        CHECK(is_primitive(w));
        CHECK(primitivity_oracle(w, 16));
    }
}

TEST_CASE("oracle spot checks") {
    CHECK(primitivity_oracle("a", 4));
    CHECK(primitivity_oracle("b", 4));
    CHECK(primitivity_oracle("BA", 8));
    CHECK_FALSE(primitivity_oracle("babab" + std::string("b"), 16));
    CHECK_FALSE(primitivity_oracle("bababbb", 16));
    CHECK_THROWS_AS(primitivity_oracle("a", 0), UnsupportedInputError);
}

TEST_CASE("oracle agrees with the length reduction on short words") {
    // full sweep over length <= 6 here; the acceptance suite covers <= 8
    std::vector<Word> words = {""};
    std::vector<Word> frontier = {""};
    const std::string letters = "aAbB";
    for (int len = 1; len <= 6; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (char c : letters) {
                if (!w.empty() && w.back() == (char)(c ^ 32)) continue;
                next.push_back(w + c);
            }
        frontier = next;
        for (const Word& w : frontier) words.push_back(w);
    }
    auto prims = primitive_classes_up_to(6, 12);
    std::set<Word> prim_set(prims.begin(), prims.end());
    for (const Word& w : words) {
        if (w.empty()) continue;
        CHECK(is_primitive(w) == (prim_set.count(conjugacy_canon(w)) > 0));
    }
}

TEST_CASE("primitive class enumeration looks right at small lengths") {
    auto prims = primitive_classes_up_to(2, 10);
    // length 1: a, A, b, B collapse to conjugacy reps a, A, b, B;
    // length 2: ab, aB, Ab, AB classes (ba ~ ab etc.)
    std::set<Word> set(prims.begin(), prims.end());
    CHECK(set.count("a"));
    CHECK(set.count("b"));
    CHECK(set.count("ab"));
    CHECK(set.count("aB"));
    CHECK_FALSE(set.count("aa"));
}

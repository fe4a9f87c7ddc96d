#include "punctorus/freegroup.hpp"

#include "punctorus/fatgraph.hpp"  // error types

#include <algorithm>
#include <numeric>
#include <set>

namespace punctorus {

namespace {

char inv(char c) { return (char)(c >= 'a' ? c - 'a' + 'A' : c - 'A' + 'a'); }

void check_letters(const Word& w) {
    for (char c : w)
        if (c != 'a' && c != 'A' && c != 'b' && c != 'B')
            throw UnsupportedInputError("word letter outside {a, A, b, B}");
}

}  // namespace

Word reduce(const Word& w) {
    check_letters(w);
    Word out;
    for (char c : w) {
        if (!out.empty() && out.back() == inv(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = reduce(w);
    while (r.size() >= 2 && r.front() == inv(r.back())) {
        r = r.substr(1, r.size() - 2);
    }
    return r;
}

Word invert_word(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
    return out;
}

std::pair<long long, long long> abelianize(const Word& w) {
    check_letters(w);
    long long ea = 0, eb = 0;
    for (char c : w) {
        if (c == 'a') ++ea;
        if (c == 'A') --ea;
        if (c == 'b') ++eb;
        if (c == 'B') --eb;
    }
    return {ea, eb};
}

Word apply_map(const Word& w, const Word& image_a, const Word& image_b) {
    Word out;
    for (char c : w) {
        switch (c) {
            case 'a': out += image_a; break;
            case 'A': out += invert_word(image_a); break;
            case 'b': out += image_b; break;
            case 'B': out += invert_word(image_b); break;
            default: throw UnsupportedInputError("word letter outside {a, A, b, B}");
        }
    }
    return reduce(out);
}

Word conjugacy_canon(const Word& w) {
    Word r = cyclic_reduce(w);
    if (r.empty()) return r;
    Word best = r;
    for (size_t k = 1; k < r.size(); ++k) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        if (r < best) best = r;
    }
    return best;
}

namespace {

// The twelve type-II Whitehead automorphisms of F_2 as (image of a, image
// of b): for each multiplier m, the other generator maps to ym, m^-1 y or
// m^-1 y m.
const std::vector<std::pair<Word, Word>>& whitehead_autos() {
    static const std::vector<std::pair<Word, Word>> autos = {
        {"a", "ba"},  {"a", "Ab"},  {"a", "Aba"},   // multiplier a
        {"a", "bA"},  {"a", "ab"},  {"a", "abA"},   // multiplier A
        {"ab", "b"},  {"Ba", "b"},  {"Bab", "b"},   // multiplier b
        {"aB", "b"},  {"ba", "b"},  {"baB", "b"},   // multiplier B
    };
    return autos;
}

}  // namespace

bool is_primitive(const Word& w0) {
    Word w = cyclic_reduce(w0);
    if (w.empty()) return false;
    auto [ea, eb] = abelianize(w);
    long long g = std::gcd(ea < 0 ? -ea : ea, eb < 0 ? -eb : eb);
    if (g != 1) return false;  // primitive words abelianize to primitive vectors
    while (w.size() > 1) {
        bool reduced_len = false;
        for (const auto& [ia, ib] : whitehead_autos()) {
            Word u = cyclic_reduce(apply_map(w, ia, ib));
            if (u.size() < w.size()) {
                w = u;
                reduced_len = true;
                break;
            }
        }
        if (!reduced_len) return false;  // stuck above length 1: not primitive
    }
    return w.size() == 1;
}

namespace {

// Elementary Nielsen automorphisms generating Aut(F_2), closed under
// inverses so reachability is symmetric.
const std::vector<std::pair<Word, Word>>& nielsen_moves() {
    static const std::vector<std::pair<Word, Word>> moves = {
        {"b", "a"},   // swap
        {"A", "b"},   // invert a
        {"ab", "b"},  // right multiplication
        {"aB", "b"},  // its inverse
    };
    return moves;
}

}  // namespace

bool primitivity_oracle(const Word& w0, int depth) {
    if (depth < 1) throw UnsupportedInputError("oracle depth must be >= 1");
    Word start = conjugacy_canon(w0);
    if (start.empty()) return false;
    if (start.size() == 1) return true;
    size_t cap = std::max<size_t>(start.size(), 8) + 6;
    std::set<Word> seen = {start};
    std::vector<Word> frontier = {start};
    for (int d = 0; d < depth && !frontier.empty(); ++d) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (const auto& [ia, ib] : nielsen_moves()) {
                Word u = conjugacy_canon(apply_map(w, ia, ib));
                if (u.size() == 1) return true;
                if (u.empty() || u.size() > cap) continue;
                if (seen.insert(u).second) next.push_back(u);
            }
        }
        frontier = std::move(next);
    }
    return false;
}

std::vector<Word> primitive_classes_up_to(int max_len, int cap) {
    std::set<Word> seen = {"a"};
    std::vector<Word> frontier = {"a"};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (const auto& [ia, ib] : nielsen_moves()) {
                Word u = conjugacy_canon(apply_map(w, ia, ib));
                if (u.empty() || (int)u.size() > cap) continue;
                if (seen.insert(u).second) next.push_back(u);
            }
        frontier = std::move(next);
    }
    std::vector<Word> out;
    for (const Word& w : seen)
        if ((int)w.size() <= max_len) out.push_back(w);
    std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

}  // namespace punctorus

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace punctorus {

// Words in the rank-2 free group on a, b; uppercase letters are inverses.
using Word = std::string;

Word reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word invert_word(const Word& w);

// (exponent sum of a, exponent sum of b)
std::pair<long long, long long> abelianize(const Word& w);

// Whitehead-automorphism length reduction: true iff w belongs to some free
// basis. The abelianization gcd filter is applied first as a fast negative.
bool is_primitive(const Word& w);

// Independent oracle: breadth-first search over the elementary Nielsen
// automorphisms (generator swap, inversion, right multiplication and its
// inverse), working modulo conjugacy, declaring primitive iff some image is
// a single letter within the depth bound.
bool primitivity_oracle(const Word& w, int depth);

// All conjugacy classes of primitive words up to the given cyclic length,
// as canonical representatives: the Nielsen orbit of "a" explored with a
// length cap. Used to sweep the certified regime exhaustively.
std::vector<Word> primitive_classes_up_to(int max_len, int cap);

// Canonical conjugacy representative: cyclically reduced, minimal rotation.
Word conjugacy_canon(const Word& w);

// Apply the endomorphism a -> image_a, b -> image_b and freely reduce.
Word apply_map(const Word& w, const Word& image_a, const Word& image_b);

}  // namespace punctorus

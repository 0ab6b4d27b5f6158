#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "eulerlab/errors.hpp"

namespace eulerlab {

// Reduced word in a free group: letters are signed generator indices,
// +i for s_i and -i for s_i^{-1}, with no adjacent cancelling pair.
using Word = std::vector<int>;

// Freely reduces; idempotent. Throws BadIndex on a zero letter.
Word reduce_word(const Word& letters);

Word word_mul(const Word& a, const Word& b);
Word word_inverse(const Word& a);
Word word_power(const Word& w, long k);

// Runs of equal generators: word = s_{g_1}^{e_1} ... s_{g_m}^{e_m}.
std::vector<std::pair<int, int>> syllables(const Word& w);

// All reduced words of length <= max_len in rank generators, shortlex-ish
// order with the empty word first. Throws BallTooLarge past the budget.
std::vector<Word> reduced_ball(int rank, int max_len, std::size_t budget = 10000000);

std::size_t reduced_ball_size(int rank, int max_len);

} // namespace eulerlab

#include "eulerlab/words.hpp"

#include <cmath>

namespace eulerlab {

Word reduce_word(const Word& letters) {
    Word out;
    out.reserve(letters.size());
    for (int l : letters) {
        if (l == 0) throw BadIndex("word letters must be nonzero signed indices");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word word_mul(const Word& a, const Word& b) {
    Word c = a;
    c.insert(c.end(), b.begin(), b.end());
    return reduce_word(c);
}

Word word_inverse(const Word& a) {
    Word c;
    c.reserve(a.size());
    for (auto it = a.rbegin(); it != a.rend(); ++it) c.push_back(-*it);
    return c;
}

Word word_power(const Word& w, long k) {
    if (k == 0) return {};
    Word base = k < 0 ? word_inverse(w) : w;
    long e = std::abs(k);
    Word acc, sq = base;
    bool first = true;
    for (; e > 0; e >>= 1) {
        if (e & 1) {
            acc = first ? sq : word_mul(acc, sq);
            first = false;
        }
        if (e > 1) sq = word_mul(sq, sq);
    }
    return acc;
}

std::vector<std::pair<int, int>> syllables(const Word& w) {
    std::vector<std::pair<int, int>> out;
    for (int l : w) {
        const int gen = std::abs(l);
        const int step = l > 0 ? 1 : -1;
        if (!out.empty() && out.back().first == gen)
            out.back().second += step;
        else
            out.emplace_back(gen, step);
    }
    return out;
}

std::size_t reduced_ball_size(int rank, int max_len) {
    // 1 + 2r * ((2r-1)^L - 1) / (2r - 2) for r > 1
    std::size_t total = 1, layer = 1;
    for (int l = 1; l <= max_len; ++l) {
        layer *= (l == 1) ? static_cast<std::size_t>(2 * rank)
                          : static_cast<std::size_t>(2 * rank - 1);
        total += layer;
    }
    return total;
}

std::vector<Word> reduced_ball(int rank, int max_len, std::size_t budget) {
    if (rank < 1) throw BadIndex("rank must be >= 1");
    if (max_len < 0) throw Error("max_len must be >= 0");
    if (reduced_ball_size(rank, max_len) > budget)
        throw BallTooLarge("reduced ball exceeds enumeration budget");
    std::vector<Word> out;
    out.emplace_back();
    std::size_t level_begin = 0, level_end = 1;
    for (int l = 1; l <= max_len; ++l) {
        const std::size_t next_begin = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (int g = 1; g <= rank; ++g) {
                for (int s : {g, -g}) {
                    if (!out[i].empty() && out[i].back() == -s) continue;
                    Word w = out[i];
                    w.push_back(s);
                    out.push_back(std::move(w));
                }
            }
        }
        level_begin = next_begin;
        level_end = out.size();
    }
    return out;
}

} // namespace eulerlab

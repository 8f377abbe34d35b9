#include "simondiff/simon.hpp"

#include <string>

#include "simondiff/errors.hpp"
#include "simondiff/rng.hpp"

namespace simondiff {

namespace {

// z0 constant sequence of the SIMON key schedule.
constexpr int kZ0[62] = {1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0,
                         0, 0, 1, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 1,
                         0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 0};

void check_rotation(unsigned r, unsigned n) {
    if (r >= n) {
        throw ContractError("rotation amount " + std::to_string(r) +
                            " out of range for word size " + std::to_string(n));
    }
}

} // namespace

Word rotl(Word x, unsigned r, unsigned n) {
    check_rotation(r, n);
    if (r == 0) return x;
    const Word mask = static_cast<Word>((std::uint64_t{1} << n) - 1);
    return ((x << r) | (x >> (n - r))) & mask;
}

Word rotr(Word x, unsigned r, unsigned n) {
    check_rotation(r, n);
    return rotl(x, r == 0 ? 0 : n - r, n);
}

Word round_fn(Word x, const SimonParams& params) {
    const unsigned n = params.word_size;
    return (rotl(x, params.rot_a % n, n) & rotl(x, params.rot_b % n, n)) ^
           rotl(x, params.rot_c % n, n);
}

CipherState simon_round(CipherState s, Word k, const SimonParams& params) {
    const Word mask = params.mask();
    return {static_cast<Word>((s.right ^ round_fn(s.left, params) ^ k) & mask), s.left};
}

CipherState inverse_round(CipherState s, Word k, const SimonParams& params) {
    const Word mask = params.mask();
    return {s.right, static_cast<Word>((s.left ^ round_fn(s.right, params) ^ k) & mask)};
}

KeySchedule key_schedule(const std::array<Word, 4>& key, const SimonParams& params) {
    const unsigned n = params.word_size;
    const Word mask = params.mask();
    KeySchedule ks;
    ks.round_keys.reserve(params.rounds);
    // Test vectors list the key most-significant word first; schedule order is reversed.
    ks.round_keys.push_back(key[3] & mask);
    ks.round_keys.push_back(key[2] & mask);
    ks.round_keys.push_back(key[1] & mask);
    ks.round_keys.push_back(key[0] & mask);
    for (unsigned i = 4; i < params.rounds; ++i) {
        Word tmp = rotr(ks.round_keys[i - 1], 3 % n, n);
        tmp ^= ks.round_keys[i - 3];
        tmp ^= rotr(tmp, 1, n);
        const Word k = (~ks.round_keys[i - 4] & mask) ^ tmp ^
                       static_cast<Word>(kZ0[(i - 4) % 62]) ^ 3u;
        ks.round_keys.push_back(k & mask);
    }
    return ks;
}

CipherState encrypt(CipherState pt, const KeySchedule& ks, const SimonParams& params) {
    CipherState s = pt;
    for (Word k : ks.round_keys) s = simon_round(s, k, params);
    return s;
}

CipherState decrypt(CipherState ct, const KeySchedule& ks, const SimonParams& params) {
    CipherState s = ct;
    for (auto it = ks.round_keys.rbegin(); it != ks.round_keys.rend(); ++it) {
        s = inverse_round(s, *it, params);
    }
    return s;
}

std::vector<DiffState> iterate_pair(CipherState p0, CipherState p1, unsigned rounds,
                                    const KeySchedule& ks, const SimonParams& params) {
    if (rounds > ks.round_keys.size()) {
        throw ContractError("iterate_pair: rounds exceed the key schedule length");
    }
    std::vector<DiffState> diffs;
    diffs.reserve(rounds);
    CipherState a = p0;
    CipherState b = p1;
    for (unsigned r = 0; r < rounds; ++r) {
        const Word k = ks.round_keys[r];
        a = simon_round(a, k, params);
        b = simon_round(b, k, params);
        diffs.push_back({a.left ^ b.left, a.right ^ b.right});
    }
    return diffs;
}

std::array<Word, 4> random_key(std::mt19937_64& gen, unsigned word_size) {
    return {random_word(gen, word_size), random_word(gen, word_size),
            random_word(gen, word_size), random_word(gen, word_size)};
}

} // namespace simondiff

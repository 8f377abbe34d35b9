#ifndef SIMONDIFF_SIMON_HPP
#define SIMONDIFF_SIMON_HPP

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace simondiff {

// An n-bit word, held in a 32-bit carrier and masked after every operation.
using Word = std::uint32_t;

struct CipherState {
    Word left = 0;
    Word right = 0;

    friend bool operator==(const CipherState&, const CipherState&) = default;
};

// A pair difference (dL, dR) between the two members of a plaintext pair.
struct DiffState {
    Word dl = 0;
    Word dr = 0;

    friend bool operator==(const DiffState&, const DiffState&) = default;
    friend auto operator<=>(const DiffState&, const DiffState&) = default;
};

// Word size and round-function rotation amounts. Rotations are reduced mod n so
// reduced word sizes (n = 4, 8) stay well-defined for the brute-force oracles.
struct SimonParams {
    unsigned word_size = 16;
    unsigned rot_a = 1;
    unsigned rot_b = 8;
    unsigned rot_c = 2;
    unsigned rounds = 32;

    Word mask() const { return static_cast<Word>((std::uint64_t{1} << word_size) - 1); }
};

struct KeySchedule {
    std::vector<Word> round_keys;
};

// Left/right circular rotation within n bits. Requires 0 <= r < n.
Word rotl(Word x, unsigned r, unsigned n);
Word rotr(Word x, unsigned r, unsigned n);

// f(x) = (x <<< a & x <<< b) ^ x <<< c with rotations reduced mod n.
Word round_fn(Word x, const SimonParams& params);

// One Feistel round: (L, R) -> (R ^ f(L) ^ k, L), and its inverse.
CipherState simon_round(CipherState s, Word k, const SimonParams& params);
CipherState inverse_round(CipherState s, Word k, const SimonParams& params);

// Standard SIMON32/64-style schedule (z0 sequence, c = 2^n - 4). The key is
// given most-significant word first, as in published test vectors; round key 0
// is key[3]. Requires exactly 4 key words.
KeySchedule key_schedule(const std::array<Word, 4>& key, const SimonParams& params = {});

CipherState encrypt(CipherState pt, const KeySchedule& ks, const SimonParams& params = {});
CipherState decrypt(CipherState ct, const KeySchedule& ks, const SimonParams& params = {});

// Runs both pair members through `rounds` keyed rounds; element r of the result
// is the XOR difference after r+1 rounds. Requires rounds <= schedule length.
std::vector<DiffState> iterate_pair(CipherState p0, CipherState p1, unsigned rounds,
                                    const KeySchedule& ks, const SimonParams& params = {});

// Fresh random key material for one experiment trial.
std::array<Word, 4> random_key(std::mt19937_64& gen, unsigned word_size);

} // namespace simondiff

#endif

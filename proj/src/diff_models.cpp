#include "simondiff/diff_models.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "simondiff/errors.hpp"
#include "simondiff/rng.hpp"

namespace simondiff {

namespace {

// eq(x, y, z): bit i set iff x_i = y_i = z_i.
constexpr std::uint64_t eq_bits(std::uint64_t x, std::uint64_t y, std::uint64_t z,
                                std::uint64_t mask) {
    return ~(x ^ y) & ~(x ^ z) & mask;
}

} // namespace

unsigned DyadicProb::weight() const {
    if (!possible()) {
        throw ContractError("DyadicProb: weight() on an impossible differential");
    }
    return weight_;
}

double DyadicProb::value() const {
    return possible() ? std::ldexp(1.0, -static_cast<int>(weight_)) : 0.0;
}

std::optional<unsigned> max_weight_for_threshold(double p_thr, Boundary mode) {
    auto clears = [&](unsigned w) {
        const double p = std::ldexp(1.0, -static_cast<int>(w));
        return mode == Boundary::GreaterEqual ? p >= p_thr : p > p_thr;
    };
    if (!clears(0)) return std::nullopt;
    unsigned w = 0;
    while (w < 64 && clears(w + 1)) ++w;
    return w;
}

DyadicProb xdp_add(Word a, Word b, Word c, unsigned n) {
    if (n < 1 || n > 32) {
        throw ContractError("xdp_add: word size must be in [1, 32]");
    }
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    const std::uint64_t ax = a & mask, bx = b & mask, cx = c & mask;
    const std::uint64_t a1 = (ax << 1) & mask;
    const std::uint64_t b1 = (bx << 1) & mask;
    const std::uint64_t c1 = (cx << 1) & mask;
    if (eq_bits(a1, b1, c1, mask) & ((ax ^ bx ^ cx ^ b1) & mask)) {
        return DyadicProb::impossible();
    }
    const unsigned w =
        static_cast<unsigned>(std::popcount(~eq_bits(ax, bx, cx, mask) & (mask >> 1)));
    return DyadicProb::from_weight(w);
}

DyadicProb xdp_add_bruteforce(Word a, Word b, Word c, unsigned n) {
    if (n > 10) {
        throw ContractError("xdp_add_bruteforce: refusing word size " + std::to_string(n) +
                            " (cost 2^" + std::to_string(2 * n) + " pairs)");
    }
    const Word mask = static_cast<Word>((std::uint64_t{1} << n) - 1);
    const Word am = a & mask, bm = b & mask, cm = c & mask;
    std::uint64_t count = 0;
    for (Word x = 0; x <= mask; ++x) {
        for (Word y = 0; y <= mask; ++y) {
            const Word sum0 = (x + y) & mask;
            const Word sum1 = ((x ^ am) + (y ^ bm)) & mask;
            if ((sum0 ^ sum1) == cm) ++count;
        }
    }
    if (count == 0) return DyadicProb::impossible();
    if (std::popcount(count) != 1) {
        // xdp+ is always dyadic; a non-power-of-two count means a broken kernel.
        throw ContractError("xdp_add_bruteforce: non-dyadic count " + std::to_string(count));
    }
    const unsigned log2_count = static_cast<unsigned>(std::countr_zero(count));
    return DyadicProb::from_weight(2 * n - log2_count);
}

DyadicProb prefix_dp_monotone(Word a, Word b, Word c, unsigned k) {
    if (k == 0) return DyadicProb::from_weight(0);
    return xdp_add(a, b, c, k);
}

PropagationStep paper_round_propagate(DiffState s, unsigned word_size) {
    const Word mask = static_cast<Word>((std::uint64_t{1} << word_size) - 1);
    const DiffState next{static_cast<Word>((s.dr ^ rotr(s.dl, 2, word_size)) & mask), s.dl};
    return {next, state_row_weight(s)};
}

unsigned state_row_weight(DiffState s) {
    return static_cast<unsigned>(std::popcount(s.dl ^ s.dr));
}

double simon_and_dp_exact(Word alpha, Word gamma, unsigned n, unsigned rot_a, unsigned rot_b) {
    const Word mask = static_cast<Word>((std::uint64_t{1} << n) - 1);
    unsigned a = rot_a % n;
    unsigned b = rot_b % n;
    if (a < b) std::swap(a, b);
    if (n % 2 != 0 || std::gcd(n, a - b) != 1) {
        throw ContractError("simon_and_dp_exact: closed form needs n even and gcd(n, a-b) = 1");
    }
    alpha &= mask;
    gamma &= mask;
    if (alpha == mask) {
        // Fully active input: every even-weight output difference is equally likely.
        return std::popcount(gamma) % 2 == 0 ? std::ldexp(1.0, 1 - static_cast<int>(n)) : 0.0;
    }
    const Word varibits = rotl(alpha, a, n) | rotl(alpha, b, n);
    const Word doublebits =
        rotl(alpha, b, n) & (~rotl(alpha, a, n) & mask) & rotl(alpha, (2 * a - b) % n, n);
    if ((gamma & ~varibits & mask) != 0) return 0.0;
    if (((gamma ^ rotl(gamma, (a - b) % n, n)) & doublebits) != 0) return 0.0;
    return std::ldexp(1.0, -std::popcount(varibits ^ doublebits));
}

MonteCarloEstimate monte_carlo_dp(DiffState s0, unsigned rounds, std::uint64_t trials,
                                  std::uint64_t seed, const SimonParams& params) {
    if (trials == 0) {
        throw ContractError("monte_carlo_dp: trials must be >= 1");
    }
    DiffState predicted = s0;
    for (unsigned r = 0; r < rounds; ++r) {
        predicted = paper_round_propagate(predicted, params.word_size).next;
    }
    const Word mask = params.mask();
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::mt19937_64 gen(seed ^ t);
        const KeySchedule ks = key_schedule(random_key(gen, params.word_size), params);
        CipherState p0{random_word(gen, params.word_size), random_word(gen, params.word_size)};
        CipherState p1{static_cast<Word>((p0.left ^ s0.dl) & mask),
                       static_cast<Word>((p0.right ^ s0.dr) & mask)};
        const auto diffs = iterate_pair(p0, p1, rounds, ks, params);
        const DiffState observed = rounds == 0 ? DiffState{s0.dl, s0.dr} : diffs.back();
        if (observed == predicted) ++hits;
    }
    MonteCarloEstimate est;
    est.hits = hits;
    est.trials = trials;
    est.probability = static_cast<double>(hits) / static_cast<double>(trials);
    est.std_error =
        std::sqrt(est.probability * (1.0 - est.probability) / static_cast<double>(trials));
    return est;
}

} // namespace simondiff

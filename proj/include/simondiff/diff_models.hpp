#ifndef SIMONDIFF_DIFF_MODELS_HPP
#define SIMONDIFF_DIFF_MODELS_HPP

#include <cstdint>
#include <optional>

#include "simondiff/simon.hpp"

namespace simondiff {

// A dyadic probability p = 2^-w, with IMPOSSIBLE (p = 0) as a distinct state so
// that weight arithmetic stays total. Weights obey 0 <= w <= n-1 at word size n.
class DyadicProb {
public:
    constexpr DyadicProb() = default;

    static constexpr DyadicProb impossible() { return DyadicProb{}; }
    static constexpr DyadicProb from_weight(unsigned w) {
        DyadicProb p;
        p.weight_ = static_cast<std::uint8_t>(w);
        return p;
    }

    constexpr bool possible() const { return weight_ != kImpossible; }
    unsigned weight() const;           // requires possible()
    double value() const;              // 2^-w, or 0.0 when impossible

    friend constexpr bool operator==(DyadicProb, DyadicProb) = default;

private:
    static constexpr std::uint8_t kImpossible = 0xff;
    std::uint8_t weight_ = kImpossible;
};

// Threshold comparison mode: keep entries with p >= thr, or strictly p > thr.
enum class Boundary { GreaterEqual, StrictlyGreater };

// Largest weight whose dyadic probability still clears the threshold, or
// nullopt when no probability (not even 1) does. Exact: no floating-point
// boundary ambiguity since candidates are powers of two.
std::optional<unsigned> max_weight_for_threshold(double p_thr, Boundary mode);

// Exact XOR-differential probability of addition modulo 2^n (Lipmaa–Moriai
// closed form). Total on masked inputs. Requires 1 <= n <= 32.
DyadicProb xdp_add(Word a, Word b, Word c, unsigned n);

// Counting oracle for xdp_add over all 2^(2n) value pairs. Refuses n > 10.
DyadicProb xdp_add_bruteforce(Word a, Word b, Word c, unsigned n);

// DP of the k-LSB prefix triple; p0 = 1, non-increasing under one-bit extension.
DyadicProb prefix_dp_monotone(Word a, Word b, Word c, unsigned k);

// One step of the deterministic round model behind the trail tables:
//   next = (dR ^ (dL >>> 2), dL),  weight = hw(dL ^ dR) of the input state.
// Note this model rotates right where the real cipher rotates left; it is the
// rule the published trails follow, kept as-is (see README).
struct PropagationStep {
    DiffState next;
    unsigned weight = 0;
};
PropagationStep paper_round_propagate(DiffState s, unsigned word_size = 16);

// Row weight used by trail tables: hw of the state's own dL ^ dR.
unsigned state_row_weight(DiffState s);

// Exact probability that the AND part of the round function maps input
// difference alpha to output difference gamma, averaged over values
// (closed form for f(x) = (x <<< a) & (x <<< b); requires n even and
// gcd(n, a-b) = 1, which holds for every supported word size here).
double simon_and_dp_exact(Word alpha, Word gamma, unsigned n,
                          unsigned rot_a = 1, unsigned rot_b = 8);

// Monte-Carlo estimate of the probability that the keyed cipher reproduces the
// deterministic model's round-r output difference. Per-trial PRNG stream is
// seed XOR trial index, so results are independent of scheduling order.
struct MonteCarloEstimate {
    double probability = 0.0;
    double std_error = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
};
MonteCarloEstimate monte_carlo_dp(DiffState s0, unsigned rounds, std::uint64_t trials,
                                  std::uint64_t seed, const SimonParams& params = {});

} // namespace simondiff

#endif

#ifndef SIMONDIFF_PDDT_HPP
#define SIMONDIFF_PDDT_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include "simondiff/diff_models.hpp"
#include "simondiff/simon.hpp"

namespace simondiff {

// One pDDT element: xdp_add(a, b -> c) = 2^-weight, weight at or above threshold.
struct DiffTriple {
    Word a = 0;
    Word b = 0;
    Word c = 0;
    std::uint8_t weight = 0;

    friend bool operator==(const DiffTriple&, const DiffTriple&) = default;
};

// Canonical lexicographic (a, b, c) order used everywhere a table is stored.
inline bool canonical_less(const DiffTriple& x, const DiffTriple& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
}

struct PartialDDT {
    std::vector<DiffTriple> entries;  // canonical order, duplicate-free
    unsigned word_size = 16;
    unsigned max_weight = 0;          // threshold as weight bound: p_thr = 2^-max_weight
};

struct SortedDiffs {
    std::vector<DiffTriple> significant;      // prob >= sig threshold
    std::vector<DiffTriple> non_significant;  // prob < sig threshold
};

// Builds {(a,b,c) : xdp_add(a,b,c,n) >= p_thr} by LSB-first bit recursion with
// monotone pruning. Construction may fan out over the first level's 8 branches;
// the result is canonical regardless of worker count. p_thr = 0 is refused
// (the table would be the complete 2^3n enumeration); p_thr > 1 yields an
// empty table.
PartialDDT compute_pddt(unsigned n, double p_thr,
                        Boundary boundary = Boundary::GreaterEqual, unsigned workers = 1);

// Partition by prob >= sig_thr, preserving order within each part.
SortedDiffs sort_differentials(const PartialDDT& table, double sig_thr = 0.5,
                               Boundary boundary = Boundary::GreaterEqual);

// Default stratum for quota sampling: Hamming weight of the output difference.
unsigned stratum_hw_c(const DiffTriple& t);

// Stratified quota sample: max(1, ceil(percent/100 * N_h)) members per
// non-empty stratum, drawn uniformly without replacement, seeded. Requires
// 0 < percent <= 100. Output keeps canonical order within ascending strata.
std::vector<DiffTriple> quota_sample(
    std::span<const DiffTriple> population, double percent, std::uint64_t seed,
    const std::function<unsigned(const DiffTriple&)>& stratum_of = stratum_hw_c);

// Binary pDDT file ("PDDT1" magic, word size byte, max-weight byte, LE64 count,
// then per entry LE16 a, b, c and a weight byte). Round-trips bit-exactly.
void save_pddt(const PartialDDT& table, const std::filesystem::path& path);
PartialDDT load_pddt(const std::filesystem::path& path);

// CSV export: header a,b,c,log2p; hexadecimal words, signed integer log2p.
void export_pddt_csv(const PartialDDT& table, const std::filesystem::path& path,
                     const std::string& metadata_header);

} // namespace simondiff

#endif

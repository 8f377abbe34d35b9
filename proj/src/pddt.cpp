#include "simondiff/pddt.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <random>
#include <string>
#include <thread>

#include "simondiff/errors.hpp"
#include "simondiff/rng.hpp"

namespace simondiff {

namespace {

// Recursive leg of the construction. Carries the running prefix plus the two
// facts the Lipmaa-Moriai weight needs incrementally: whether the previous bit
// position was an eq position (a=b=c) and, if so, its value (which fixes the
// parity of the next position). `weight` counts non-eq positions strictly
// below the prefix top, exactly the LM weight of the prefix.
struct BranchTask {
    unsigned a0, b0, c0;  // bit-0 assignment
};

void recurse(unsigned k, std::uint64_t a, std::uint64_t b, std::uint64_t c, unsigned weight,
             bool prev_eq, unsigned prev_a_bit, unsigned n, unsigned w_max,
             std::vector<DiffTriple>& out) {
    if (k == n) {
        out.push_back({static_cast<Word>(a), static_cast<Word>(b), static_cast<Word>(c),
                       static_cast<std::uint8_t>(weight)});
        return;
    }
    for (unsigned bits = 0; bits < 8; ++bits) {
        const unsigned x = (bits >> 2) & 1, y = (bits >> 1) & 1, z = bits & 1;
        const unsigned parity = x ^ y ^ z;
        if (k == 0) {
            if (parity != 0) continue;  // no incoming carry at the LSB
        } else if (prev_eq && parity != prev_a_bit) {
            continue;  // carry constraint from the eq position below
        }
        // Extending to width k+1 starts counting position k-1 toward the weight.
        const unsigned w2 = weight + ((k >= 1 && !prev_eq) ? 1u : 0u);
        if (w2 > w_max) continue;
        recurse(k + 1, a | (std::uint64_t{x} << k), b | (std::uint64_t{y} << k),
                c | (std::uint64_t{z} << k), w2, x == y && y == z, x, n, w_max, out);
    }
}

} // namespace

PartialDDT compute_pddt(unsigned n, double p_thr, Boundary boundary, unsigned workers) {
    if (n < 1 || n > 32) {
        throw ConfigError("compute_pddt: word size must be in [1, 32]");
    }
    if (p_thr <= 0.0) {
        throw ConfigError("compute_pddt: threshold 0 would enumerate the complete DDT");
    }
    PartialDDT table;
    table.word_size = n;
    const auto w_max_opt = max_weight_for_threshold(p_thr, boundary);
    if (!w_max_opt) {
        table.max_weight = 0;
        return table;  // nothing clears a threshold above 1
    }
    const unsigned w_max = std::min(*w_max_opt, n >= 1 ? n - 1 : 0u);
    table.max_weight = w_max;

    // Fan out over the 8 first-level branches; merge in branch order, then sort.
    std::vector<std::vector<DiffTriple>> partial(8);
    auto run_branch = [&](unsigned bits) {
        const unsigned x = (bits >> 2) & 1, y = (bits >> 1) & 1, z = bits & 1;
        if ((x ^ y ^ z) != 0) return;
        recurse(1, x, y, z, 0, x == y && y == z, x, n, w_max, partial[bits]);
    };
    if (workers <= 1) {
        for (unsigned b = 0; b < 8; ++b) run_branch(b);
    } else {
        std::vector<std::thread> pool;
        std::atomic<unsigned> next{0};
        const unsigned count = std::min(workers, 8u);
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) {
            pool.emplace_back([&] {
                for (unsigned b = next.fetch_add(1); b < 8; b = next.fetch_add(1)) {
                    run_branch(b);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    std::size_t total = 0;
    for (const auto& part : partial) total += part.size();
    table.entries.reserve(total);
    for (auto& part : partial) {
        table.entries.insert(table.entries.end(), part.begin(), part.end());
    }
    std::sort(table.entries.begin(), table.entries.end(), canonical_less);
    return table;
}

SortedDiffs sort_differentials(const PartialDDT& table, double sig_thr, Boundary boundary) {
    const auto w_sig = max_weight_for_threshold(sig_thr, boundary);
    SortedDiffs out;
    for (const DiffTriple& t : table.entries) {
        if (w_sig && t.weight <= *w_sig) {
            out.significant.push_back(t);
        } else {
            out.non_significant.push_back(t);
        }
    }
    return out;
}

unsigned stratum_hw_c(const DiffTriple& t) {
    return static_cast<unsigned>(std::popcount(t.c));
}

std::vector<DiffTriple> quota_sample(
    std::span<const DiffTriple> population, double percent, std::uint64_t seed,
    const std::function<unsigned(const DiffTriple&)>& stratum_of) {
    if (percent <= 0.0 || percent > 100.0) {
        throw ConfigError("quota_sample: percent must be in (0, 100]");
    }
    std::map<unsigned, std::vector<std::size_t>> strata;
    for (std::size_t i = 0; i < population.size(); ++i) {
        strata[stratum_of(population[i])].push_back(i);
    }
    std::mt19937_64 gen(seed);
    std::vector<DiffTriple> sample;
    for (auto& [key, indices] : strata) {
        const auto quota = static_cast<std::size_t>(std::max(
            1.0, std::ceil(percent * static_cast<double>(indices.size()) / 100.0)));
        const std::size_t take = std::min(quota, indices.size());
        // Partial Fisher-Yates, then restore canonical order within the stratum.
        for (std::size_t i = 0; i < take; ++i) {
            const std::size_t j = i + uniform_below(gen, indices.size() - i);
            std::swap(indices[i], indices[j]);
        }
        std::sort(indices.begin(), indices.begin() + static_cast<std::ptrdiff_t>(take));
        for (std::size_t i = 0; i < take; ++i) sample.push_back(population[indices[i]]);
    }
    return sample;
}

namespace {

constexpr char kMagic[5] = {'P', 'D', 'D', 'T', '1'};

void put_u16le(std::string& buf, std::uint16_t v) {
    buf.push_back(static_cast<char>(v & 0xff));
    buf.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u64le(std::string& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

} // namespace

void save_pddt(const PartialDDT& table, const std::filesystem::path& path) {
    if (table.word_size > 16) {
        throw FormatError("save_pddt: the binary format holds 16-bit words; word size " +
                          std::to_string(table.word_size) + " does not fit");
    }
    std::string buf;
    buf.reserve(15 + 7 * table.entries.size());
    buf.append(kMagic, sizeof kMagic);
    buf.push_back(static_cast<char>(table.word_size));
    buf.push_back(static_cast<char>(table.max_weight));
    put_u64le(buf, table.entries.size());
    for (const DiffTriple& t : table.entries) {
        put_u16le(buf, static_cast<std::uint16_t>(t.a));
        put_u16le(buf, static_cast<std::uint16_t>(t.b));
        put_u16le(buf, static_cast<std::uint16_t>(t.c));
        buf.push_back(static_cast<char>(t.weight));
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

PartialDDT load_pddt(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (buf.size() < 15) throw FormatError("pDDT file truncated: " + path.string());
    if (!std::equal(kMagic, kMagic + sizeof kMagic, buf.begin())) {
        throw FormatError("bad pDDT magic: " + path.string());
    }
    PartialDDT table;
    table.word_size = static_cast<unsigned char>(buf[5]);
    table.max_weight = static_cast<unsigned char>(buf[6]);
    if (table.word_size < 1 || table.word_size > 16) {
        throw FormatError("pDDT word size out of range: " + std::to_string(table.word_size));
    }
    std::uint64_t count = 0;
    for (int i = 0; i < 8; ++i) {
        count |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[7 + i])) << (8 * i);
    }
    if (buf.size() != 15 + 7 * count) {
        throw FormatError("pDDT file truncated: expected " + std::to_string(15 + 7 * count) +
                          " bytes, found " + std::to_string(buf.size()));
    }
    table.entries.reserve(count);
    std::size_t off = 15;
    auto get_u16 = [&](std::size_t o) {
        return static_cast<std::uint16_t>(static_cast<unsigned char>(buf[o]) |
                                          (static_cast<unsigned char>(buf[o + 1]) << 8));
    };
    for (std::uint64_t i = 0; i < count; ++i, off += 7) {
        DiffTriple t;
        t.a = get_u16(off);
        t.b = get_u16(off + 2);
        t.c = get_u16(off + 4);
        t.weight = static_cast<std::uint8_t>(buf[off + 6]);
        if (!table.entries.empty() && !canonical_less(table.entries.back(), t)) {
            throw FormatError("pDDT payload not in canonical order at entry " +
                              std::to_string(i));
        }
        table.entries.push_back(t);
    }
    return table;
}

void export_pddt_csv(const PartialDDT& table, const std::filesystem::path& path,
                     const std::string& metadata_header) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << metadata_header << "a,b,c,log2p\n";
    char line[64];
    for (const DiffTriple& t : table.entries) {
        std::snprintf(line, sizeof line, "0x%04x,0x%04x,0x%04x,%d\n", t.a, t.b, t.c,
                      -static_cast<int>(t.weight));
        out << line;
    }
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace simondiff

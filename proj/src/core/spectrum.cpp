#include "infometer/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <thread>

#include "infometer/error.hpp"
#include "infometer/kernels.hpp"
#include "infometer/measures.hpp"
#include "entropy.hpp"

namespace infometer {

std::string_view to_string(SpectrumKind kind) {
    switch (kind) {
    case SpectrumKind::raw: return "raw";
    case SpectrumKind::maximal: return "maximal";
    case SpectrumKind::normalized: return "normalized";
    }
    return "unknown";
}

double Spectrum::at(std::size_t r) const {
    auto it = std::lower_bound(scales.begin(), scales.end(), r);
    if (it == scales.end() || *it != r) {
        throw InvalidScale(r, scales.empty() ? 0 : 2 * scales.back() + 1);
    }
    return bits[static_cast<std::size_t>(it - scales.begin())];
}

std::vector<std::size_t> spectrum_scales(std::size_t n, const SpectrumOptions& options) {
    const std::size_t half = n / 2;
    std::vector<std::size_t> scales;
    if (half == 0) {
        return scales;
    }
    const std::size_t cap = options.max_scales;
    if (cap == 0 || cap >= half) {
        scales.resize(half);
        for (std::size_t r = 1; r <= half; ++r) {
            scales[r - 1] = r;
        }
        return scales;
    }
    scales.push_back(1);
    if (cap == 1) {
        return scales;
    }
    // Log-spaced between 1 and half, endpoints included.
    const double top = std::log(static_cast<double>(half));
    for (std::size_t i = 1; i < cap; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(cap - 1);
        auto r = static_cast<std::size_t>(std::llround(std::exp(top * t)));
        r = std::clamp<std::size_t>(r, 1, half);
        if (r > scales.back()) {
            scales.push_back(r);
        }
    }
    if (scales.back() != half) {
        scales.push_back(half);
    }
    return scales;
}

double max_spectrum_value(std::size_t n, std::size_t k, std::size_t scale) {
    if (scale == 0) {
        throw InvalidScale(scale, n);
    }
    const std::size_t m = n / scale;
    if (m == 0 || k <= 1) {
        return 0.0;
    }
    // log2(min(k^r, m)) = min(r*log2(k), log2(m)); k^r is never formed.
    const double per_block = std::min(static_cast<double>(scale) * std::log2(static_cast<double>(k)),
                                      std::log2(static_cast<double>(m)));
    return static_cast<double>(m) * per_block;
}

Spectrum max_spectrum(std::size_t n, std::size_t k, const SpectrumOptions& options) {
    Spectrum s;
    s.kind = SpectrumKind::maximal;
    s.scales = spectrum_scales(n, options);
    s.bits.reserve(s.scales.size());
    for (std::size_t r : s.scales) {
        s.bits.push_back(max_spectrum_value(n, k, r));
    }
    return s;
}

Spectrum max_spectrum(const Pattern& pattern, std::size_t k, const SpectrumOptions& options) {
    return max_spectrum(pattern.size(), k, options);
}

namespace {

constexpr std::uint64_t kFibonacci = 0x9E3779B97F4A7C15ULL;

// Open-addressing counter of distinct blocks, reused across scales by one worker.
class BlockCounter {
public:
    struct Result {
        double bits = 0.0;
        std::size_t distinct = 0;
    };

    Result count(std::span<const SymbolId> ids, const std::uint64_t* prefix, std::size_t r,
                 std::uint64_t base_pow_r, const kernels::KernelTable& kt, ScaleStats& stats) {
        const std::size_t m = ids.size() / r;
        hashes_.resize(m);
        kt.block_hashes(prefix, r, base_pow_r, hashes_.data(), m);

        const std::size_t capacity = std::max<std::size_t>(16, std::bit_ceil(2 * m));
        const int shift = 64 - std::countr_zero(capacity);
        if (slots_.size() < capacity) {
            slots_.assign(capacity, Slot{});
        }
        const std::size_t mask = capacity - 1;
        const SymbolId* base = ids.data();

        for (std::size_t j = 0; j < m; ++j) {
            const std::uint64_t h = hashes_[j];
            std::size_t idx = static_cast<std::size_t>((h * kFibonacci) >> shift);
            for (;;) {
                ++stats.probes;
                Slot& slot = slots_[idx];
                if (slot.count == 0) {
                    slot = Slot{h, j, 1};
                    used_.push_back(idx);
                    break;
                }
                if (slot.hash == h) {
                    stats.symbol_compares += r;
                    if (kt.ids_equal(base + slot.first * r, base + j * r, r)) {
                        ++slot.count;
                        break;
                    }
                    ++stats.hash_collisions;
                }
                idx = (idx + 1) & mask;
            }
        }

        Result res;
        res.distinct = used_.size();
        counts_.clear();
        for (std::size_t idx : used_) {
            counts_.push_back(slots_[idx].count);
            slots_[idx] = Slot{};
        }
        used_.clear();
        res.bits = detail::entropy_bits(counts_, m);
        return res;
    }

private:
    struct Slot {
        std::uint64_t hash = 0;
        std::size_t first = 0;
        std::size_t count = 0;
    };
    std::vector<Slot> slots_;
    std::vector<std::size_t> used_;
    std::vector<std::size_t> counts_;
    std::vector<std::uint64_t> hashes_;
};

std::uint64_t pow_mod64(std::uint64_t base, std::size_t e) {
    std::uint64_t result = 1;
    while (e != 0) {
        if (e & 1) {
            result *= base;
        }
        base *= base;
        e >>= 1;
    }
    return result;
}

} // namespace

SpectrumSet spectra(const Pattern& pattern, std::optional<std::size_t> declared_alphabet,
                    const SpectrumOptions& options) {
    SpectrumSet set;
    set.n = pattern.size();
    set.observed_k = pattern.alphabet().size();
    set.k = set.observed_k;
    if (declared_alphabet) {
        if (*declared_alphabet < set.observed_k) {
            throw InvalidArgument("declared alphabet size " + std::to_string(*declared_alphabet) +
                                  " is smaller than the " + std::to_string(set.observed_k) +
                                  " distinct symbols observed");
        }
        set.k = *declared_alphabet;
    }
    set.i_max = max_information(set.n, set.k);
    set.i_shannon = shannon_information(pattern);

    const auto scales = spectrum_scales(set.n, options);
    set.subsampled = scales.size() != set.n / 2;
    const std::size_t count = scales.size();

    set.raw.kind = SpectrumKind::raw;
    set.maximal.kind = SpectrumKind::maximal;
    set.normalized.kind = SpectrumKind::normalized;
    for (Spectrum* s : {&set.raw, &set.maximal, &set.normalized}) {
        s->scales = scales;
        s->bits.assign(count, 0.0);
    }
    set.distinct_blocks.assign(count, 0);
    set.stats.assign(count, ScaleStats{});
    if (count == 0) {
        return set;
    }

    const auto ids = pattern.ids();
    if (set.observed_k <= 1) {
        // Every partition is a single repeated block: I_SP = 0 everywhere.
        for (std::size_t i = 0; i < count; ++i) {
            set.distinct_blocks[i] = 1;
            set.stats[i].scale = scales[i];
            set.stats[i].blocks = set.n / scales[i];
            set.stats[i].distinct = 1;
        }
    } else {
        const kernels::KernelTable& kt = options.kernels != nullptr ? *options.kernels : kernels::active();
        const auto prefix = kernels::prefix_hashes(ids);

        unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

        std::atomic<std::size_t> next{0};
        constexpr std::size_t kChunk = 64;
        auto worker = [&] {
            BlockCounter counter;
            for (;;) {
                const std::size_t begin = next.fetch_add(kChunk);
                if (begin >= count) {
                    break;
                }
                const std::size_t end = std::min(count, begin + kChunk);
                for (std::size_t i = begin; i < end; ++i) {
                    const std::size_t r = scales[i];
                    ScaleStats& st = set.stats[i];
                    st.scale = r;
                    st.blocks = set.n / r;
                    const auto t0 = options.collect_timing ? std::chrono::steady_clock::now()
                                                           : std::chrono::steady_clock::time_point{};
                    const auto res = counter.count(ids, prefix.data(), r, pow_mod64(kernels::kHashBase, r), kt, st);
                    if (options.collect_timing) {
                        st.elapsed_ns = static_cast<std::uint64_t>(
                            std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0)
                                .count());
                    }
                    st.distinct = res.distinct;
                    set.raw.bits[i] = res.bits;
                    set.distinct_blocks[i] = res.distinct;
                }
            }
        };
        if (threads <= 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(threads);
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back(worker);
            }
        }
    }

    const double per_symbol = set.n != 0 ? set.i_shannon / static_cast<double>(set.n) : 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t r = scales[i];
        set.maximal.bits[i] = max_spectrum_value(set.n, set.k, r);
        if (set.distinct_blocks[i] > 1) {
            // Two distinct blocks need m >= 2 and k >= 2, so the maximum is at least 2 bits.
            if (!(set.maximal.bits[i] >= 2.0)) {
                throw InvariantViolation("maximal spectrum below 2 bits at scale " + std::to_string(r));
            }
            set.normalized.bits[i] = set.raw.bits[i] / set.maximal.bits[i] * set.i_max;
        } else {
            set.normalized.bits[i] = static_cast<double>(r) * per_symbol;
        }
    }
    return set;
}

Spectrum spectrum(const Pattern& pattern, const SpectrumOptions& options) {
    return spectra(pattern, std::nullopt, options).raw;
}

Spectrum normalized_spectrum(const Pattern& pattern, std::optional<std::size_t> declared_alphabet,
                             const SpectrumOptions& options) {
    return spectra(pattern, declared_alphabet, options).normalized;
}

} // namespace infometer

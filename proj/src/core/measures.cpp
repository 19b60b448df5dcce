#include "infometer/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entropy.hpp"
#include "infometer/error.hpp"

namespace infometer {

double FrequencyTable::probability(const Symbol& s) const {
    auto it = counts.find(s);
    if (it == counts.end() || total == 0) {
        return 0.0;
    }
    return static_cast<double>(it->second) / static_cast<double>(total);
}

namespace {

std::vector<std::size_t> id_counts(const Pattern& pattern) {
    std::vector<std::size_t> counts(pattern.alphabet().size(), 0);
    for (SymbolId id : pattern.ids()) {
        ++counts[id];
    }
    return counts;
}

} // namespace

FrequencyTable frequencies(const Pattern& pattern) {
    FrequencyTable table;
    const auto counts = id_counts(pattern);
    for (SymbolId id = 0; id < counts.size(); ++id) {
        table.counts.emplace(pattern.alphabet()[id], counts[id]);
    }
    table.total = pattern.size();
    return table;
}

double shannon_information(std::span<const std::size_t> counts) {
    std::vector<std::size_t> sorted(counts.begin(), counts.end());
    std::size_t n = 0;
    for (std::size_t f : sorted) {
        n += f;
    }
    return detail::entropy_bits(sorted, n);
}

double shannon_information(const FrequencyTable& table) {
    std::vector<std::size_t> counts;
    counts.reserve(table.counts.size());
    for (const auto& [symbol, f] : table.counts) {
        counts.push_back(f);
    }
    return shannon_information(counts);
}

double shannon_information(const Pattern& pattern) {
    return shannon_information(id_counts(pattern));
}

double max_information(std::size_t n, std::size_t k) {
    if (n == 0 || k <= 1) {
        return 0.0;
    }
    return static_cast<double>(n) * std::log2(static_cast<double>(k));
}

double relative_information(double bits, double max_bits) {
    return max_bits > 0.0 ? bits / max_bits : 0.0;
}

std::int64_t round_bits(double bits) {
    return static_cast<std::int64_t>(std::floor(bits + 0.5));
}

std::size_t effective_alphabet(const Pattern& pattern, const MeasureOptions& options) {
    const std::size_t observed = pattern.alphabet().size();
    if (!options.declared_alphabet) {
        return observed;
    }
    if (*options.declared_alphabet < observed) {
        throw InvalidArgument("declared alphabet size " + std::to_string(*options.declared_alphabet) +
                              " is smaller than the " + std::to_string(observed) + " distinct symbols observed");
    }
    return *options.declared_alphabet;
}

namespace {

SsmResult minimum_of(const Spectrum& normalized) {
    SsmResult res;
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        // Strict < keeps the smallest scale on ties.
        if (res.argmin_scale == 0 || normalized.bits[i] < res.bits) {
            res.bits = normalized.bits[i];
            res.argmin_scale = normalized.scales[i];
        }
    }
    return res;
}

} // namespace

SsmResult ssm_information(const Pattern& pattern, const MeasureOptions& options) {
    const std::size_t k = effective_alphabet(pattern, options);
    if (pattern.size() < 2) {
        return {};
    }
    if (pattern.alphabet().size() < 2) {
        return {0.0, 1};
    }
    return minimum_of(spectra(pattern, k, options.spectrum).normalized);
}

MeasureReport measure(const Pattern& pattern, const SpectrumSet& set) {
    MeasureReport report;
    report.n = set.n;
    report.k = set.k;
    report.i_max = set.i_max;
    report.i_shannon = set.i_shannon;
    report.scales_subsampled = set.subsampled;
    if (set.n >= 2 && pattern.alphabet().size() >= 2) {
        const auto m = minimum_of(set.normalized);
        report.i_ssm = m.bits;
        report.argmin_scale = m.argmin_scale;
    } else if (set.n >= 2) {
        report.argmin_scale = 1;
    }
    report.i_shannon_rel = relative_information(report.i_shannon, report.i_max);
    report.i_ssm_rel = relative_information(report.i_ssm, report.i_max);

    if (report.k <= report.n) {
        // Relative slack for accumulated rounding in the spectrum sums.
        const double eps = 1e-9 * std::max(1.0, report.i_max);
        if (report.i_ssm < 0.0 || report.i_ssm > report.i_shannon + eps || report.i_shannon > report.i_max + eps) {
            throw InvariantViolation("ordering I_SSM <= I_S <= I_MAX violated: " + std::to_string(report.i_ssm) +
                                     ", " + std::to_string(report.i_shannon) + ", " + std::to_string(report.i_max));
        }
    }
    return report;
}

MeasureReport measure(const Pattern& pattern, const MeasureOptions& options) {
    const std::size_t k = effective_alphabet(pattern, options);
    if (pattern.alphabet().size() < 2) {
        MeasureReport report;
        report.n = pattern.size();
        report.k = k;
        report.i_max = max_information(report.n, k);
        report.argmin_scale = report.n >= 2 ? 1 : 0;
        return report;
    }
    return measure(pattern, spectra(pattern, k, options.spectrum));
}

} // namespace infometer

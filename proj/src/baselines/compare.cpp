#include <algorithm>
#include <future>

#include "infometer/baselines.hpp"

namespace infometer::baselines {

ComparisonReport compare(const Pattern& pattern, std::span<const std::uint8_t> data,
                         std::span<const Compressor* const> backends, const MeasureOptions& options) {
    ComparisonReport report;
    report.input_bits = data.size() * 8;
    report.overhead_dominated = report.input_bits < kOverheadDominatedBits;

    std::vector<std::future<BackendOutcome>> pending;
    pending.reserve(backends.size());
    for (const Compressor* backend : backends) {
        pending.push_back(std::async(std::launch::async, [backend, data] {
            BackendOutcome outcome;
            outcome.backend = backend->id();
            try {
                outcome.result = compression_complexity(data, *backend);
            } catch (const BackendSkipped& e) {
                outcome.skip_reason = e.what();
                outcome.transcript = e.transcript();
            } catch (const Error& e) {
                outcome.skip_reason = e.what();
            }
            return outcome;
        }));
    }
    report.measures = measure(pattern, options);
    for (auto& f : pending) {
        report.backends.push_back(f.get());
    }
    std::stable_sort(report.backends.begin(), report.backends.end(),
                     [](const BackendOutcome& a, const BackendOutcome& b) { return a.backend < b.backend; });
    return report;
}

} // namespace infometer::baselines

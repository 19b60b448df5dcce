#pragma once
// Naive transcription of the measure definitions, used only to check the
// library. Shares no code with it: symbols are strings, blocks are vectors
// of strings, and counting goes through std::map.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Seq = std::vector<std::string>;

inline Seq from_text(const std::string& text) {
    Seq s;
    for (char c : text) {
        s.emplace_back(1, c);
    }
    return s;
}

// Sum over positions of log2(1/p(x_i)).
template <class T>
double shannon(const std::vector<T>& items) {
    std::map<T, double> freq;
    for (const auto& x : items) {
        freq[x] += 1.0;
    }
    const double n = static_cast<double>(items.size());
    double total = 0.0;
    for (const auto& x : items) {
        total += std::log2(1.0 / (freq[x] / n));
    }
    return total;
}

inline std::size_t alphabet_size(const Seq& x) {
    return std::set<std::string>(x.begin(), x.end()).size();
}

inline double i_max(const Seq& x) {
    return static_cast<double>(x.size()) * std::log2(static_cast<double>(alphabet_size(x)));
}

inline std::vector<Seq> blocks(const Seq& x, std::size_t r) {
    std::vector<Seq> out;
    for (std::size_t start = 0; start + r <= x.size(); start += r) {
        out.emplace_back(x.begin() + static_cast<long>(start), x.begin() + static_cast<long>(start + r));
    }
    return out;
}

inline double i_sp(const Seq& x, std::size_t r) {
    return shannon(blocks(x, r));
}

inline double i_sms(std::size_t n, std::size_t k, std::size_t r) {
    const double m = static_cast<double>(n / r);
    const double kr = std::pow(static_cast<double>(k), static_cast<double>(r));
    return m * std::log2(std::min(kr, m));
}

inline double i_sns(const Seq& x, std::size_t r) {
    const auto b = blocks(x, r);
    const std::set<Seq> distinct(b.begin(), b.end());
    if (distinct.size() > 1) {
        return i_sp(x, r) / i_sms(x.size(), alphabet_size(x), r) * i_max(x);
    }
    return static_cast<double>(r) * i_sp(x, 1) / static_cast<double>(x.size());
}

struct Ssm {
    double bits = 0.0;
    std::size_t scale = 0;
};

inline Ssm i_ssm(const Seq& x) {
    if (x.size() < 2 || alphabet_size(x) < 2) {
        return {};
    }
    Ssm best{i_sns(x, 1), 1};
    for (std::size_t r = 2; r <= x.size() / 2; ++r) {
        const double v = i_sns(x, r);
        if (v < best.bits) {
            best = {v, r};
        }
    }
    return best;
}

} // namespace oracle

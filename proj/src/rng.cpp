#include "advicelab/rng.hpp"

#include <set>

namespace advicelab {

std::vector<std::uint64_t> Rng::sample_distinct(std::uint64_t L, std::size_t k) {
    if (k > L) throw std::invalid_argument("cannot sample more values than the range holds");
    if (L <= 4 * k) {
        // Dense regime: partial Fisher-Yates over the whole range.
        std::vector<std::uint64_t> all(L);
        for (std::uint64_t i = 0; i < L; ++i) all[i] = i + 1;
        for (std::size_t i = 0; i < k; ++i)
            std::swap(all[i], all[i + below(L - i)]);
        all.resize(k);
        return all;
    }
    std::set<std::uint64_t> chosen;
    std::vector<std::uint64_t> out;
    out.reserve(k);
    while (out.size() < k) {
        std::uint64_t v = range(1, L);
        if (chosen.insert(v).second) out.push_back(v);
    }
    return out;
}

}  // namespace advicelab

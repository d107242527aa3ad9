#include "advicelab/fat_rings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "advicelab/rng.hpp"
#include "advicelab/view.hpp"

namespace advicelab {

std::vector<std::vector<Label>> fat_ring_pool(int sets, int width) {
    if (sets < 1 || width < 1) throw std::invalid_argument("pool needs positive sets and width");
    std::vector<std::vector<Label>> pool(sets);
    for (int t = 0; t < sets; ++t)
        for (int i = 1; i <= width; ++i)
            pool[t].push_back(static_cast<Label>(t) * width + i);
    return pool;
}

LabeledGraph fat_ring_expand(const std::vector<std::vector<Label>>& slots) {
    const int s = static_cast<int>(slots.size());
    if (s < 4 || s % 2 != 0) throw std::invalid_argument("slot count must be even and >= 4");

    std::vector<Label> labels;
    std::vector<int> slot_start(s + 1, 0);
    for (int j = 0; j < s; ++j) {
        if (slots[j].empty()) throw std::invalid_argument("empty slot");
        slot_start[j] = static_cast<int>(labels.size());
        labels.insert(labels.end(), slots[j].begin(), slots[j].end());
    }
    slot_start[s] = static_cast<int>(labels.size());

    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < s; ++j) {
        for (int a = slot_start[j]; a < slot_start[j + 1]; ++a)
            for (int b = a + 1; b < slot_start[j + 1]; ++b) edges.emplace_back(a, b);
        int k = (j + 1) % s;
        for (int a = slot_start[j]; a < slot_start[j + 1]; ++a)
            for (int b = slot_start[k]; b < slot_start[k + 1]; ++b) edges.emplace_back(a, b);
    }
    return LabeledGraph(std::move(labels), std::move(edges));
}

namespace {

Label slot_min(const std::vector<Label>& s) { return *std::min_element(s.begin(), s.end()); }

}  // namespace

std::vector<int> canonical_slot_order(const std::vector<std::vector<Label>>& pool,
                                      const std::vector<int>& slots) {
    const int s = static_cast<int>(slots.size());
    int lead = 0;
    for (int j = 1; j < s; ++j)
        if (slot_min(pool[slots[j]]) < slot_min(pool[slots[lead]])) lead = j;

    std::vector<int> out(s);
    for (int j = 0; j < s; ++j) out[j] = slots[(lead + j) % s];
    if (slot_min(pool[out[1]]) > slot_min(pool[out[s - 1]]))
        std::reverse(out.begin() + 1, out.end());
    return out;
}

std::vector<std::vector<int>> enumerate_fat_slot_sequences(int pool_size, int slot_count) {
    if (slot_count < 4 || slot_count % 2 != 0) throw std::invalid_argument("slot count must be even and >= 4");
    if (pool_size < slot_count) throw std::invalid_argument("pool smaller than slot count");

    auto pool = fat_ring_pool(pool_size, 1);  // minima only matter for canonicity
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    std::vector<bool> used(pool_size, false);

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == slot_count) {
            if (canonical_slot_order(pool, chosen) == chosen) out.push_back(chosen);
            return;
        }
        for (int t = 0; t < pool_size; ++t) {
            if (used[t]) continue;
            used[t] = true;
            chosen.push_back(t);
            self(self, depth + 1);
            chosen.pop_back();
            used[t] = false;
        }
    };
    rec(rec, 0);
    return out;
}

std::uint64_t fat_ring_count_formula(int pool_size, int slot_count) {
    std::uint64_t binom = 1;
    for (int i = 0; i < slot_count; ++i)
        binom = binom * static_cast<std::uint64_t>(pool_size - i) / static_cast<std::uint64_t>(i + 1);
    std::uint64_t fact = 1;
    for (int i = 2; i < slot_count; ++i) fact *= static_cast<std::uint64_t>(i);
    return binom * fact / 2;
}

namespace {

FatViewsResult check_slot_pair(const std::vector<std::vector<Label>>& pool,
                               const std::vector<int>& base, int replaced_slot, int replacement,
                               int D) {
    auto other = base;
    other[replaced_slot] = replacement;
    LabeledGraph a = fat_ring_expand([&] {
        std::vector<std::vector<Label>> s;
        for (int t : base) s.push_back(pool[t]);
        return s;
    }());
    LabeledGraph b = fat_ring_expand([&] {
        std::vector<std::vector<Label>> s;
        for (int t : other) s.push_back(pool[t]);
        return s;
    }());

    const int s = static_cast<int>(base.size());
    const int opposite = (replaced_slot + D) % s;
    for (Label l : pool[base[opposite]]) {
        View va = ball_view(a, a.index_of_label(l), D - 1);
        View vb = ball_view(b, b.index_of_label(l), D - 1);
        if (!views_equal(va, vb)) return {false, l};
    }
    return {};
}

}  // namespace

FatViewsResult verify_fat_views(int D, int n, int pool_size, int trials, std::uint64_t seed) {
    if (D < 2) throw std::invalid_argument("D must be >= 2");
    const int s = 2 * D;
    if (n % s != 0) throw std::invalid_argument("n must be divisible by 2D");
    const int width = n / s;
    if (pool_size < s + 1) throw std::invalid_argument("pool must exceed the slot count");

    auto pool = fat_ring_pool(pool_size, width);

    if (trials == 0) {
        for (const auto& base : enumerate_fat_slot_sequences(pool_size, s)) {
            std::vector<bool> used(pool_size, false);
            for (int t : base) used[t] = true;
            for (int i = 0; i < s; ++i) {
                for (int t = 0; t < pool_size; ++t) {
                    if (used[t]) continue;
                    auto res = check_slot_pair(pool, base, i, t, D);
                    if (!res.pass) return res;
                }
            }
        }
        return {};
    }

    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<int> idx(pool_size);
        std::iota(idx.begin(), idx.end(), 0);
        rng.shuffle(idx);
        std::vector<int> base(idx.begin(), idx.begin() + s);
        int i = static_cast<int>(rng.below(s));
        auto res = check_slot_pair(pool, base, i, idx[s], D);
        if (!res.pass) return res;
    }
    return {};
}

}  // namespace advicelab

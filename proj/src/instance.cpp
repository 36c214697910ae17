#include "wpm/instance.hpp"

#include <algorithm>
#include <numeric>

#include "wpm/rng.hpp"

namespace wpm {

void check_gen_params(int n1, int n2, int m, const WeightConfig& weights) {
    if (n1 < 1) throw InvalidParams("n1 must be >= 1 (got " + std::to_string(n1) + ")");
    if (n2 < 1) throw InvalidParams("n2 must be >= 1 (got " + std::to_string(n2) + ")");
    if (m < n1 + n2 + 1)
        throw InvalidParams("m must be >= n1+n2+1 (got m=" + std::to_string(m) +
                            ", n1+n2+1=" + std::to_string(n1 + n2 + 1) + ")");
    if (!weights.valid())
        throw InvalidParams("weights must satisfy w1 > w2 > 0 (got w1=" +
                            std::to_string(weights.w1) + ", w2=" + std::to_string(weights.w2) + ")");
}

FullInstance gen_full(int n1, int n2, int m, std::uint64_t seed, WeightConfig weights) {
    check_gen_params(n1, n2, m, weights);
    SplitMix64 rng(seed);
    FullInstance inst;
    inst.m = m;
    inst.weights = weights;

    std::vector<int> identity(m);
    std::iota(identity.begin(), identity.end(), 0);

    inst.prefs_a1.reserve(n1);
    for (int i = 0; i < n1; ++i) {
        std::vector<int> perm = identity;
        fisher_yates(perm, rng);
        inst.prefs_a1.push_back(std::move(perm));
    }
    inst.prefs_a2.reserve(n2);
    for (int j = 0; j < n2; ++j) {
        std::vector<int> perm = identity;
        fisher_yates(perm, rng);
        inst.prefs_a2.push_back(std::move(perm));
    }
    return inst;
}

ReducedInstance gen_reduced(int n1, int n2, int m, std::uint64_t seed, WeightConfig weights) {
    check_gen_params(n1, n2, m, weights);
    SplitMix64 rng(seed);
    ReducedInstance r;
    r.m = m;
    r.weights = weights;

    const auto um = static_cast<std::uint64_t>(m);
    auto draw_outside = [&](const std::vector<char>& taken) {
        // |taken| <= n1+n2 < m, so the pool is nonempty and rejection halts.
        std::uint64_t v = rng.below(um);
        while (taken[v]) v = rng.below(um);
        return static_cast<int>(v);
    };

    // Step order is part of the seeded contract: f1, s1, f2, s2, each over
    // its applicants in index order.
    r.f1.resize(n1);
    for (int i = 0; i < n1; ++i) r.f1[i] = static_cast<int>(rng.below(um));

    std::vector<char> in_f1(m, 0);
    for (int p : r.f1) in_f1[p] = 1;

    r.s1.resize(n1);
    for (int i = 0; i < n1; ++i) r.s1[i] = draw_outside(in_f1);

    r.f2.resize(n2);
    for (int j = 0; j < n2; ++j) r.f2[j] = draw_outside(in_f1);

    std::vector<char> in_f12 = in_f1;
    for (int q : r.f2) in_f12[q] = 1;

    r.s2.resize(n2);
    for (int j = 0; j < n2; ++j) r.s2[j] = draw_outside(in_f12);

    return r;
}

ReducedInstance reduce(const FullInstance& full) {
    check_gen_params(full.n1(), full.n2(), full.m, full.weights);
    const int m = full.m;
    for (const auto* prefs : {&full.prefs_a1, &full.prefs_a2}) {
        for (const auto& row : *prefs) {
            std::vector<char> seen(m, 0);
            if (static_cast<int>(row.size()) != m)
                throw InvalidParams("preference list is not a permutation of 0..m-1");
            for (int p : row) {
                if (p < 0 || p >= m || seen[p])
                    throw InvalidParams("preference list is not a permutation of 0..m-1");
                seen[p] = 1;
            }
        }
    }

    ReducedInstance r;
    r.m = m;
    r.weights = full.weights;

    const int n1 = full.n1(), n2 = full.n2();
    r.f1.resize(n1);
    for (int i = 0; i < n1; ++i) r.f1[i] = full.prefs_a1[i][0];

    std::vector<char> in_f1(m, 0);
    for (int p : r.f1) in_f1[p] = 1;

    auto first_outside = [](const std::vector<int>& row, const std::vector<char>& taken) {
        for (int p : row)
            if (!taken[p]) return p;
        // Unreachable: |taken| <= n1+n2 < m and the row is a permutation.
        throw InvalidParams("preference list exhausted while scanning for an s-item");
    };

    r.s1.resize(n1);
    for (int i = 0; i < n1; ++i) r.s1[i] = first_outside(full.prefs_a1[i], in_f1);

    r.f2.resize(n2);
    for (int j = 0; j < n2; ++j) r.f2[j] = first_outside(full.prefs_a2[j], in_f1);

    std::vector<char> in_f12 = in_f1;
    for (int q : r.f2) in_f12[q] = 1;

    r.s2.resize(n2);
    for (int j = 0; j < n2; ++j) r.s2[j] = first_outside(full.prefs_a2[j], in_f12);

    return r;
}

RoleMasks derive_roles(const ReducedInstance& r) {
    RoleMasks masks;
    masks.in_f1.assign(r.m, 0);
    masks.in_s1.assign(r.m, 0);
    masks.in_f2.assign(r.m, 0);
    masks.in_s2.assign(r.m, 0);
    for (int p : r.f1)
        if (p >= 0 && p < r.m) masks.in_f1[p] = 1;
    for (int p : r.s1)
        if (p >= 0 && p < r.m) masks.in_s1[p] = 1;
    for (int p : r.f2)
        if (p >= 0 && p < r.m) masks.in_f2[p] = 1;
    for (int p : r.s2)
        if (p >= 0 && p < r.m) masks.in_s2[p] = 1;
    return masks;
}

int RoleMasks::r1_size() const {
    int f1 = 0;
    for (char c : in_f1) f1 += c;
    return static_cast<int>(in_f1.size()) - f1;
}

int RoleMasks::r2_size() const {
    int f12 = 0;
    for (std::size_t i = 0; i < in_f1.size(); ++i) f12 += (in_f1[i] || in_f2[i]) ? 1 : 0;
    return static_cast<int>(in_f1.size()) - f12;
}

std::vector<Violation> validate(const ReducedInstance& r) {
    std::vector<Violation> out;
    auto add = [&](std::string msg) { out.push_back({std::move(msg)}); };

    const int n1 = r.n1(), n2 = r.n2();
    if (n1 < 1) add("n1 must be >= 1");
    if (n2 < 1) add("n2 must be >= 1");
    if (static_cast<int>(r.s1.size()) != n1)
        add("f1 and s1 must have equal length");
    if (static_cast<int>(r.s2.size()) != n2)
        add("f2 and s2 must have equal length");
    if (r.m < n1 + n2 + 1)
        add("m must be >= n1+n2+1 (m=" + std::to_string(r.m) + ")");
    if (!r.weights.valid())
        add("weights must satisfy w1 > w2 > 0");

    auto in_range = [&](const char* name, const std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] < 0 || v[i] >= r.m)
                add(std::string(name) + "[" + std::to_string(i) + "] = " +
                    std::to_string(v[i]) + " out of range [0, m)");
    };
    in_range("f1", r.f1);
    in_range("s1", r.s1);
    in_range("f2", r.f2);
    in_range("s2", r.s2);
    if (!out.empty()) return out;  // masks below assume in-range ids

    const RoleMasks masks = derive_roles(r);
    for (int i = 0; i < n1; ++i)
        if (masks.in_f1[r.s1[i]])
            add("s1[" + std::to_string(i) + "] = " + std::to_string(r.s1[i]) +
                " lies in F1 (F1 and S1 must be disjoint)");
    for (int j = 0; j < n2; ++j) {
        if (masks.in_f1[r.f2[j]])
            add("f2[" + std::to_string(j) + "] = " + std::to_string(r.f2[j]) +
                " lies in F1 (F1 and F2 must be disjoint)");
        if (masks.in_f1[r.s2[j]])
            add("s2[" + std::to_string(j) + "] = " + std::to_string(r.s2[j]) +
                " lies in F1 (F1 and S2 must be disjoint)");
        if (masks.in_f2[r.s2[j]])
            add("s2[" + std::to_string(j) + "] = " + std::to_string(r.s2[j]) +
                " lies in F2 (F2 and S2 must be disjoint)");
    }
    return out;
}

}  // namespace wpm

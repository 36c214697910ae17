#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wpm/errors.hpp"

namespace wpm {

// Category weights. All popularity comparisons use exact integer sums of
// these, never floating point.
struct WeightConfig {
    std::int64_t w1 = 2;
    std::int64_t w2 = 1;

    bool valid() const { return w1 > w2 && w2 > 0; }

    // The characterization via well-formed matchings needs w1 >= 2*w2;
    // callers that rely on it must check this gate.
    bool dominant() const { return w1 >= 2 * w2; }

    bool operator==(const WeightConfig&) const = default;
};

// Complete strict instance: one preference permutation of the m items per
// applicant, split into the two categories.
struct FullInstance {
    int m = 0;
    std::vector<std::vector<int>> prefs_a1;
    std::vector<std::vector<int>> prefs_a2;
    WeightConfig weights;

    int n1() const { return static_cast<int>(prefs_a1.size()); }
    int n2() const { return static_cast<int>(prefs_a2.size()); }
    int n() const { return n1() + n2(); }

    bool operator==(const FullInstance&) const = default;
};

// First/second items only. Everything downstream of reduction (graphs,
// orientation, censuses) depends on the instance solely through these.
struct ReducedInstance {
    int m = 0;
    std::vector<int> f1;
    std::vector<int> s1;
    std::vector<int> f2;
    std::vector<int> s2;
    WeightConfig weights;

    int n1() const { return static_cast<int>(f1.size()); }
    int n2() const { return static_cast<int>(f2.size()); }
    int n() const { return n1() + n2(); }

    bool operator==(const ReducedInstance&) const = default;
};

// Item-indexed membership masks for the four derived sets.
struct RoleMasks {
    std::vector<char> in_f1, in_s1, in_f2, in_s2;

    int r1_size() const;  // |I - F1|
    int r2_size() const;  // |I - (F1 u F2)|
};

RoleMasks derive_roles(const ReducedInstance& r);

struct Violation {
    std::string what;
};

// Checks every ReducedInstance invariant; violations are data, not errors.
std::vector<Violation> validate(const ReducedInstance& r);

// Random complete strict instance: each preference list an independent
// uniform permutation (SplitMix64 + Fisher-Yates, platform-stable).
FullInstance gen_full(int n1, int n2, int m, std::uint64_t seed,
                      WeightConfig weights = {});

// Random reduced instance drawn by the four-step process: all f1 uniform
// from I (with replacement), all s1 uniform from I-F1, all f2 uniform from
// I-F1, all s2 uniform from I-(F1 u F2), in that order.
ReducedInstance gen_reduced(int n1, int n2, int m, std::uint64_t seed,
                            WeightConfig weights = {});

// First/second items of a full instance per the f/s-item rules.
ReducedInstance reduce(const FullInstance& full);

// Shared precondition of both generators: n1,n2 >= 1 and m >= n1+n2+1
// (the weakest uniform bound keeping the s2 pool nonempty).
void check_gen_params(int n1, int n2, int m, const WeightConfig& weights);

}  // namespace wpm

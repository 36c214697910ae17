#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wpm/instance.hpp"

namespace wpm {

// An injective applicant -> item map, A1 applicants first then A2.
using Assignment = std::vector<int>;

inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;

// Streams all m!/(m-n)! injective maps of n applicants into m items in
// lexicographic order. Throws CapExceeded at construction when the count
// exceeds the cap.
class MatchingEnumerator {
  public:
    MatchingEnumerator(int n, int m, std::uint64_t cap = kDefaultEnumCap);

    std::optional<Assignment> next();
    std::uint64_t total() const { return total_; }
    void reset();

  private:
    int n_, m_;
    std::uint64_t total_;
    bool started_ = false, done_ = false;
    Assignment current_;
    std::vector<char> used_;
};

// Signed popularity margin: total weight of applicants preferring their
// a-item over their b-item, minus the reverse. Exact integer arithmetic.
std::int64_t margin(const Assignment& a, const Assignment& b, const FullInstance& full);

// True iff no other matching is more popular, by exhaustive comparison.
bool is_popular(const Assignment& a, const FullInstance& full,
                std::uint64_t cap = kDefaultEnumCap);

struct PopularSearch {
    std::optional<Assignment> first;  // first popular matching in order
    std::uint64_t popular_count = 0;
    std::uint64_t enumerated = 0;
};

PopularSearch find_popular(const FullInstance& full, std::uint64_t cap = kDefaultEnumCap);

}  // namespace wpm

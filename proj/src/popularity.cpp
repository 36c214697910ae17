#include "wpm/popularity.hpp"

#include <algorithm>

namespace wpm {

namespace {

// rank[applicant][item] = position in that applicant's list (0 = best).
std::vector<std::vector<int>> rank_tables(const FullInstance& full) {
    std::vector<std::vector<int>> ranks;
    ranks.reserve(full.n());
    for (const auto* prefs : {&full.prefs_a1, &full.prefs_a2}) {
        for (const auto& row : *prefs) {
            std::vector<int> inv(full.m, -1);
            for (int pos = 0; pos < static_cast<int>(row.size()); ++pos) inv[row[pos]] = pos;
            ranks.push_back(std::move(inv));
        }
    }
    return ranks;
}

std::int64_t margin_ranked(const Assignment& a, const Assignment& b,
                           const std::vector<std::vector<int>>& ranks, int n1,
                           const WeightConfig& w) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int ra = ranks[i][a[i]];
        const int rb = ranks[i][b[i]];
        if (ra == rb) continue;
        const std::int64_t weight = static_cast<int>(i) < n1 ? w.w1 : w.w2;
        total += ra < rb ? weight : -weight;
    }
    return total;
}

void check_assignment(const Assignment& a, const FullInstance& full) {
    if (static_cast<int>(a.size()) != full.n())
        throw InvalidParams("assignment must cover all n1+n2 applicants");
    std::vector<char> used(full.m, 0);
    for (int item : a) {
        if (item < 0 || item >= full.m)
            throw InvalidParams("assigned item " + std::to_string(item) + " out of range");
        if (used[item]) throw InvalidParams("assignment is not injective");
        used[item] = 1;
    }
}

}  // namespace

MatchingEnumerator::MatchingEnumerator(int n, int m, std::uint64_t cap) : n_(n), m_(m) {
    if (n < 1 || m < n) throw InvalidParams("enumerator needs 1 <= n <= m");
    total_ = 1;
    for (int i = 0; i < n; ++i) {
        total_ *= static_cast<std::uint64_t>(m - i);
        if (total_ > cap)
            throw CapExceeded("m!/(m-n)! = " + std::to_string(total_) +
                              "+ matchings exceeds the cap of " + std::to_string(cap));
    }
    used_.assign(m, 0);
    current_.assign(n, 0);
}

void MatchingEnumerator::reset() {
    started_ = false;
    done_ = false;
    used_.assign(m_, 0);
    current_.assign(n_, 0);
}

std::optional<Assignment> MatchingEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        for (int i = 0; i < n_; ++i) {
            current_[i] = i;
            used_[i] = 1;
        }
        return current_;
    }
    // Odometer: bump the rightmost position that still has a larger unused
    // item, then refill everything to its right with the smallest ones.
    int pos = n_ - 1;
    while (pos >= 0) {
        used_[current_[pos]] = 0;
        int next_item = -1;
        for (int cand = current_[pos] + 1; cand < m_; ++cand) {
            if (!used_[cand]) {
                next_item = cand;
                break;
            }
        }
        if (next_item >= 0) {
            current_[pos] = next_item;
            used_[next_item] = 1;
            break;
        }
        --pos;
    }
    if (pos < 0) {
        done_ = true;
        return std::nullopt;
    }
    for (int i = pos + 1; i < n_; ++i) {
        for (int cand = 0; cand < m_; ++cand) {
            if (!used_[cand]) {
                current_[i] = cand;
                used_[cand] = 1;
                break;
            }
        }
    }
    return current_;
}

std::int64_t margin(const Assignment& a, const Assignment& b, const FullInstance& full) {
    check_assignment(a, full);
    check_assignment(b, full);
    return margin_ranked(a, b, rank_tables(full), full.n1(), full.weights);
}

bool is_popular(const Assignment& a, const FullInstance& full, std::uint64_t cap) {
    check_assignment(a, full);
    const auto ranks = rank_tables(full);
    MatchingEnumerator rivals(full.n(), full.m, cap);
    while (auto rival = rivals.next()) {
        if (margin_ranked(*rival, a, ranks, full.n1(), full.weights) > 0) return false;
    }
    return true;
}

PopularSearch find_popular(const FullInstance& full, std::uint64_t cap) {
    const auto ranks = rank_tables(full);
    PopularSearch result;
    MatchingEnumerator candidates(full.n(), full.m, cap);
    result.enumerated = candidates.total();
    while (auto cand = candidates.next()) {
        bool beaten = false;
        MatchingEnumerator rivals(full.n(), full.m, cap);
        while (auto rival = rivals.next()) {
            if (margin_ranked(*rival, *cand, ranks, full.n1(), full.weights) > 0) {
                beaten = true;
                break;
            }
        }
        if (!beaten) {
            if (!result.first) result.first = *cand;
            ++result.popular_count;
        }
    }
    return result;
}

}  // namespace wpm

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wpm/fsgraph.hpp"
#include "wpm/wellformed.hpp"

namespace wpm {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// |T| = C(n1,2) * n2 * (n2-1): unordered {x1<x2} pairs times ordered
// (y1,y2) pairs.
BigInt count_T(std::int64_t n1, std::int64_t n2);

// Number of tuples (x1<x2, ordered y1!=y2) whose five pattern items are
// pairwise distinct and realize the minimal bad path:
// f1(x1)=f1(x2), f2(y1)=s1(x1), f2(y2)=s1(x2).
std::int64_t count_g1prime(const ReducedInstance& r);

// Smallest admissible c for given n and m: the standing assumption is
// m - n >= m/c, i.e. c >= m/(m-n).
BigRat min_c(std::int64_t n, std::int64_t m);

struct EzBounds {
    BigRat low;   // |T| / m^3
    BigRat high;  // c^2 |T| / m^3
};

// Throws InvalidParams when c < m/(m-n) ("c-too-small").
EzBounds ez_bounds(std::int64_t n1, std::int64_t n2, std::int64_t m, const BigRat& c);

// The eight-term bracket multiplying c^2|T|/m^3 in the variance chain;
// exposed separately so its limits can be inspected.
BigRat var_upper_bracket(std::int64_t n1, std::int64_t n2, std::int64_t m, const BigRat& c);
BigRat var_upper(std::int64_t n1, std::int64_t n2, std::int64_t m, const BigRat& c);

// min(1, var_upper / ez_low^2): upper bound on Pr[Z = 0].
// Throws InvalidParams when |T| = 0.
BigRat cheby_pr_z0(std::int64_t n1, std::int64_t n2, std::int64_t m, const BigRat& c);

// Closed forms of the geometric tail sums. Both require c >= m/(m-n) and
// c^2 n / m < 1; they throw Divergent otherwise.
BigRat cycle_pr(std::int64_t n, std::int64_t m, const BigRat& c);  // sum_{l>=2} (c^2 n/m)^l
BigRat path_pr(std::int64_t n, std::int64_t m, const BigRat& c);   // m * sum_{l>=4} (c^2 n/m)^l

struct CensusReport {
    std::int64_t z_g1prime = 0;
    int tree_components = 0;
    int unicyclic_components = 0;
    int multicyclic_components = 0;
    std::vector<int> cycle_lengths;
    int unresolved_cycles = 0;
    bool has_cycle = false;
    std::optional<WitnessKind> witness_kind;
};

CensusReport census(const ReducedInstance& r);

struct AnalyticBounds {
    BigRat c;
    BigRat delta;  // n1 / n
    BigInt t_size;
    BigRat ez_low, ez_high, var_high;
    std::optional<BigRat> cheby;     // absent when |T| = 0
    std::optional<BigRat> cycle;     // absent when the series diverges
    std::optional<BigRat> path;
};

// c = nullopt means "auto": the minimal valid value m/(m-n).
AnalyticBounds analytic_bounds(std::int64_t n1, std::int64_t n2, std::int64_t m,
                               std::optional<BigRat> c = std::nullopt);

std::string rat_str(const BigRat& r);
double rat_double(const BigRat& r);

}  // namespace wpm

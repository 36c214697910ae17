#include "wpm/census.hpp"

#include <sstream>

namespace wpm {

BigInt count_T(std::int64_t n1, std::int64_t n2) {
    if (n1 < 0 || n2 < 0) throw InvalidParams("count_T needs n1, n2 >= 0");
    return BigInt(n1) * (n1 - 1) / 2 * n2 * (n2 - 1);
}

std::int64_t count_g1prime(const ReducedInstance& r) {
    const auto violations = validate(r);
    if (!violations.empty())
        throw InvalidParams("invalid instance: " + violations.front().what);

    // A2 applicants grouped by f2-item, A1 applicants by f1-item.
    std::vector<std::vector<int>> by_f2(r.m);
    for (int y = 0; y < r.n2(); ++y) by_f2[r.f2[y]].push_back(y);
    std::vector<std::vector<int>> by_f1(r.m);
    for (int x = 0; x < r.n1(); ++x) by_f1[r.f1[x]].push_back(x);

    std::int64_t z = 0;
    for (int p = 0; p < r.m; ++p) {
        const auto& xs = by_f1[p];
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
                const int q = r.s1[xs[i]];
                const int rr = r.s1[xs[j]];
                // p != q, p != rr and s2 items avoid p, q, rr by the set
                // disjointness rules; only q != rr and the two s2 items can
                // coincide.
                if (q == rr) continue;
                for (int y1 : by_f2[q])
                    for (int y2 : by_f2[rr])
                        if (r.s2[y1] != r.s2[y2]) ++z;
            }
        }
    }
    return z;
}

BigRat min_c(std::int64_t n, std::int64_t m) {
    if (m <= n) throw InvalidParams("min_c needs m > n");
    return BigRat(m, m - n);
}

namespace {
void check_c(std::int64_t n, std::int64_t m, const BigRat& c) {
    if (m <= n) throw InvalidParams("need m > n");
    if (c < min_c(n, m))
        throw InvalidParams("c too small: need c >= m/(m-n) = " + rat_str(min_c(n, m)));
}
}  // namespace

EzBounds ez_bounds(std::int64_t n1, std::int64_t n2, std::int64_t m, const BigRat& c) {
    check_c(n1 + n2, m, c);
    const BigRat base = BigRat(count_T(n1, n2), BigInt(m) * m * m);
    return {base, c * c * base};
}

BigRat var_upper_bracket(std::int64_t n1, std::int64_t n2, std::int64_t m, const BigRat& c) {
    check_c(n1 + n2, m, c);
    const std::int64_t n = n1 + n2;
    const BigRat d(n1, n);          // delta
    const BigRat e = 1 - d;         // 1 - delta
    const BigRat nm(n, m);          // n/m
    const BigRat n2m2 = nm * nm;    // n^2/m^2
    const BigRat n3m3 = n2m2 * nm;  // n^3/m^3
    return BigRat(1)
         + c * c * e * e * n2m2
         + 2 * c * e * nm
         + 4 * c * c * d * e * e * n3m3
         + 4 * c * d * e * n2m2
         + 4 * c * d * BigRat(n, BigInt(m) * m)
         + 2 * c * c * d * d * e * n3m3
         + c * c * d * d * BigRat(BigInt(n) * n, BigInt(m) * m * m);
}

BigRat var_upper(std::int64_t n1, std::int64_t n2, std::int64_t m, const BigRat& c) {
    return ez_bounds(n1, n2, m, c).high * var_upper_bracket(n1, n2, m, c);
}

BigRat cheby_pr_z0(std::int64_t n1, std::int64_t n2, std::int64_t m, const BigRat& c) {
    if (count_T(n1, n2) == 0)
        throw InvalidParams("Chebyshev bound undefined: |T| = 0 for n1=" + std::to_string(n1) +
                            ", n2=" + std::to_string(n2));
    const EzBounds ez = ez_bounds(n1, n2, m, c);
    const BigRat ratio = var_upper(n1, n2, m, c) / (ez.low * ez.low);
    return ratio > 1 ? BigRat(1) : ratio;
}

namespace {
// r = c^2 n / m, the common ratio of both geometric tails.
BigRat series_ratio(std::int64_t n, std::int64_t m, const BigRat& c) {
    check_c(n, m, c);
    const BigRat r = c * c * BigRat(n, m);
    if (n > 0 && r >= 1)
        throw Divergent("geometric series diverges: c^2 n / m = " + rat_str(r) + " >= 1");
    return r;
}
}  // namespace

BigRat cycle_pr(std::int64_t n, std::int64_t m, const BigRat& c) {
    const BigRat r = series_ratio(n, m, c);
    if (n == 0) return BigRat(0);
    return r * r / (1 - r);
}

BigRat path_pr(std::int64_t n, std::int64_t m, const BigRat& c) {
    const BigRat r = series_ratio(n, m, c);
    if (n == 0) return BigRat(0);
    return m * r * r * r * r / (1 - r);
}

CensusReport census(const ReducedInstance& r) {
    CensusReport rep;
    rep.z_g1prime = count_g1prime(r);
    const FsGraph g = FsGraph::build(r);
    for (const Component& comp : g.components()) {
        switch (comp.cls) {
            case ComponentClass::Tree: ++rep.tree_components; break;
            case ComponentClass::Unicyclic: ++rep.unicyclic_components; break;
            case ComponentClass::Multicyclic: ++rep.multicyclic_components; break;
        }
    }
    const CycleCensus cc = cycle_census(g);
    rep.cycle_lengths = cc.lengths;
    rep.unresolved_cycles = cc.unresolved;
    rep.has_cycle = cc.has_cycle();
    if (auto w = find_witness(g)) rep.witness_kind = w->kind;
    return rep;
}

AnalyticBounds analytic_bounds(std::int64_t n1, std::int64_t n2, std::int64_t m,
                               std::optional<BigRat> c) {
    const std::int64_t n = n1 + n2;
    AnalyticBounds b;
    b.c = c ? *c : min_c(n, m);
    b.delta = BigRat(n1, n);
    b.t_size = count_T(n1, n2);
    const EzBounds ez = ez_bounds(n1, n2, m, b.c);
    b.ez_low = ez.low;
    b.ez_high = ez.high;
    b.var_high = var_upper(n1, n2, m, b.c);
    if (b.t_size != 0) b.cheby = cheby_pr_z0(n1, n2, m, b.c);
    try {
        b.cycle = cycle_pr(n, m, b.c);
        b.path = path_pr(n, m, b.c);
    } catch (const Divergent&) {
        // left unset; callers surface divergence explicitly
    }
    return b;
}

std::string rat_str(const BigRat& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

double rat_double(const BigRat& r) { return r.convert_to<double>(); }

}  // namespace wpm

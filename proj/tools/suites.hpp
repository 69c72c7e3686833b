#ifndef BIANCHI_TOOLS_SUITES_HPP
#define BIANCHI_TOOLS_SUITES_HPP

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "bianchi/classify.hpp"
#include "bianchi/oracle/local_tree.hpp"
#include "bianchi/oracle/subgroups.hpp"
#include "bianchi/parallel.hpp"

namespace bianchi::tools {

struct SuiteParams {
    i64 dmax = 0;
    int height = oracle::default_height;
};

struct SuiteResult {
    std::size_t checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline std::vector<i64> squarefree_up_to(i64 dmax)
{
    std::vector<i64> ds;
    for (i64 d = 1; d <= dmax; ++d)
        if (is_squarefree(d)) ds.push_back(d);
    return ds;
}

// run fn(d) over squarefree d <= dmax; fn returns failure messages
template <class Fn>
SuiteResult sweep(i64 dmax, Fn fn)
{
    SuiteResult res;
    const auto ds = squarefree_up_to(dmax);
    auto out = parallel_map(ds, [&](i64 d) {
        try {
            return fn(d);
        } catch (const std::exception& e) {
            return std::vector<std::string>{"d=" + std::to_string(d) + ": " + e.what()};
        }
    });
    res.checks = ds.size();
    for (auto& v : out)
        for (auto& m : v) res.failures.push_back(std::move(m));
    return res;
}

inline SuiteResult suite_reciprocity(std::size_t pairs = 1000, i64 bound = 1000000)
{
    SuiteResult res;
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<i64> dist(-bound, bound);
    for (std::size_t i = 0; i < pairs; ++i) {
        i64 a = 0, b = 0;
        while (a == 0) a = dist(rng);
        while (b == 0) b = dist(rng);
        int prod = 1;
        for (Place v : relevant_places({a, b})) prod *= hilbert_symbol(a, b, v);
        ++res.checks;
        if (prod != 1)
            res.failures.push_back("product of symbols for (" + std::to_string(a) + ", " + std::to_string(b) + ") is -1");
    }
    return res;
}

inline SuiteResult suite_existence(i64 dmax)
{
    return sweep(dmax, [](i64 d) {
        std::vector<std::string> f;
        for (SubgroupKind kind : all_kinds)
            if (contains_in_order(kind, LambdaClass(1), d) != contains_in_psl2(kind, d))
                f.push_back(std::string(to_string(kind)) + " at d=" + std::to_string(d) +
                            ": symbol form and congruence form disagree");
        return f;
    });
}

inline SuiteResult suite_gamma(i64 dmax)
{
    return sweep(dmax, [](i64 d) {
        std::vector<std::string> f;
        for (SubgroupKind kind : all_kinds) {
            if (!exists_in_some_maximal_order(kind, d)) continue;
            const i64 g1 = gamma(kind, d), g2 = gamma_composed(kind, d);
            if (g1 != g2 || (g1 & (g1 - 1)))
                f.push_back(std::string(to_string(kind)) + " at d=" + std::to_string(d) + ": closed form " +
                            std::to_string(g1) + ", composed " + std::to_string(g2));
        }
        return f;
    });
}

inline SuiteResult suite_aut_index(i64 dmax)
{
    return sweep(dmax, [](i64 d) {
        std::vector<std::string> f;
        const ImagQuadField k = make_field(d);
        for (SubgroupKind kind : {SubgroupKind::D3, SubgroupKind::T}) {
            const auto& F = group_algebra(kind).algebra;
            const int s1 = automorphism_index_data(F, k).s;
            const int s2 = norm_divisor_rank_s(F, k);
            if (s1 != s2)
                f.push_back(std::string(to_string(kind)) + " at d=" + std::to_string(d) + ": divisor count s=" +
                            std::to_string(s1) + ", rank s=" + std::to_string(s2));
        }
        return f;
    });
}

inline SuiteResult suite_oracle(i64 dmax, int height)
{
    return sweep(dmax, [height](i64 d) {
        std::vector<std::string> f;
        const ImagQuadField k = make_field(d);
        for (SubgroupKind kind : all_kinds) {
            const bool found = oracle::find_subgroup(kind, k, height).has_value();
            if (found != contains_in_psl2(kind, d))
                f.push_back(std::string(to_string(kind)) + " at d=" + std::to_string(d) + ": search " +
                            (found ? "found" : "did not find") + " a subgroup, criterion says " +
                            (found ? "none" : "exists"));
        }
        return f;
    });
}

inline SuiteResult suite_local()
{
    SuiteResult res;
    struct Case {
        i64 p, d, tau;
    };
    for (Case c : {Case{3, 3, 1}, Case{3, 3, 2}, Case{5, 5, 1}, Case{5, 5, 3}}) {
        const ImagQuadField k = make_field(c.d);
        const bool split = hilbert_symbol(c.tau, -c.d, Place::finite(c.p)) == 1;
        for (int r = 0; r <= 3; ++r) {
            ++res.checks;
            const i64 expect = local_embedding_count({c.p, SplitType::Ramified, split, r, static_cast<int>(c.d % 4)});
            try {
                const i64 got = oracle::count_maximal_orders_local(c.p, k, c.tau, r);
                if (got != expect)
                    res.failures.push_back("p=" + std::to_string(c.p) + " tau=" + std::to_string(c.tau) + " r=" +
                                           std::to_string(r) + ": tree " + std::to_string(got) + ", table " +
                                           std::to_string(expect));
            } catch (const std::exception& e) {
                res.failures.push_back("p=" + std::to_string(c.p) + " tau=" + std::to_string(c.tau) + " r=" +
                                       std::to_string(r) + ": " + e.what());
            }
        }
    }
    return res;
}

}

#endif

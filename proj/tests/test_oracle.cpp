#include <algorithm>

#include <catch_amalgamated.hpp>

#include "bianchi/classify.hpp"
#include "bianchi/oracle/local_tree.hpp"
#include "bianchi/oracle/subgroups.hpp"

using namespace bianchi;
using namespace bianchi::oracle;

namespace {

bool contains(const std::vector<Mat2>& v, const Mat2& m) { return std::binary_search(v.begin(), v.end(), m); }

}

TEST_CASE("ring arithmetic", "[oracle]")
{
    const IntegerRing Z3(make_field(3));
    const OElem w{0, 1};
    CHECK(Z3.mul(w, w) == OElem{-1, 1});
    CHECK(Z3.norm(w) == 1);
    CHECK(Z3.mul(w, Z3.conj(w)) == OElem{1, 0});
    const IntegerRing Z5(make_field(5));
    CHECK(Z5.mul(w, w) == OElem{-5, 0});
    CHECK(Z5.exact_div({6, 0}, {1, 1}) == OElem{1, -1});
    CHECK_FALSE(Z5.exact_div({1, 0}, {2, 0}).has_value());
}

TEST_CASE("torsion element enumeration", "[oracle]")
{
    const auto k1 = make_field(1);
    const auto el = enumerate_torsion_elements(k1, 1);
    CHECK(contains(el, Mat2{{0, 1}, {0, 0}, {0, 0}, {0, -1}}));
    CHECK(contains(el, Mat2{{0, 0}, {1, 0}, {-1, 0}, {0, 0}}));
    CHECK(std::adjacent_find(el.begin(), el.end()) == el.end());
    CHECK_THROWS_AS(enumerate_torsion_elements(k1, 17), std::invalid_argument);

    // height one against an exhaustive scan of all matrices with coordinates in {-1,0,1}
    const auto k2 = make_field(2);
    const IntegerRing R(k2);
    CHECK(enumerate_torsion_elements(k2, 0).empty());
    const auto h1 = enumerate_torsion_elements(k2, 1);
    std::vector<OElem> box;
    for (i64 x = -1; x <= 1; ++x)
        for (i64 y = -1; y <= 1; ++y) box.push_back({x, y});
    std::vector<Mat2> scan;
    for (OElem a : box)
        for (OElem b : box)
            for (OElem c : box)
                for (OElem d : box) {
                    Mat2 m{a, b, c, d};
                    const OElem tr = trace(R, m);
                    if (det(R, m) == OElem{1, 0} && tr.y == 0 && tr.x >= -1 && tr.x <= 1) scan.push_back(m);
                }
    std::sort(scan.begin(), scan.end());
    CHECK(h1 == scan);
}

TEST_CASE("subgroup witnesses", "[oracle]")
{
    const auto k1 = make_field(1);
    SubgroupWitness w{SubgroupKind::D2max, {Mat2{{0, 1}, {0, 0}, {0, 0}, {0, -1}}, Mat2{{0, 0}, {1, 0}, {-1, 0}, {0, 0}}}};
    CHECK(verify_witness(k1, w));
    w.kind = SubgroupKind::T;
    CHECK_FALSE(verify_witness(k1, w));

    auto d2 = find_subgroup(SubgroupKind::D2max, k1, 2);
    REQUIRE(d2.has_value());
    CHECK(d2->relations_verified);
    CHECK(verify_witness(k1, *d2));
    auto t = find_subgroup(SubgroupKind::T, k1, 4);
    REQUIRE(t.has_value());
    CHECK(t->generators.size() == 3);
    CHECK(verify_witness(k1, *t));
    CHECK_FALSE(find_subgroup(SubgroupKind::D3, make_field(2), 10).has_value());
}

TEST_CASE("subgroup search agrees with the congruence criteria", "[oracle]")
{
    for (i64 d = 1; d <= 30; ++d) {
        if (!is_squarefree(d)) continue;
        const auto k = make_field(d);
        for (SubgroupKind kind : all_kinds) {
            INFO("d=" << d << " kind=" << to_string(kind));
            auto w = find_subgroup(kind, k, default_height);
            CHECK(w.has_value() == contains_in_psl2(kind, d));
            if (w) CHECK(verify_witness(k, *w));
            CHECK(find_subgroup(kind, k, default_height + 2).has_value() == w.has_value());
        }
    }
}

TEST_CASE("echelon form is canonical", "[oracle]")
{
    using oracle::detail::Row;
    const std::vector<Row> a{{3, 0, 0, 0}, {0, 9, 3, 0}, {0, 0, 0, 1}};
    const std::vector<Row> b{{3, 9, 3, 0}, {0, 0, 0, 2}, {0, 18, 6, 0}, {6, 0, 0, 1}};
    CHECK(oracle::detail::echelon_mod(a, 3, 4) == oracle::detail::echelon_mod(b, 3, 4));
    CHECK(oracle::detail::echelon_mod(a, 3, 4) != oracle::detail::echelon_mod({{1, 0, 0, 0}}, 3, 4));
}

TEST_CASE("tree vertices", "[oracle]")
{
    for (i64 p : {3, 5})
        for (int n = 1; n <= 4; ++n) {
            const auto up_to_n = oracle::detail::vertices_up_to(p, n).size();
            const auto up_to_prev = oracle::detail::vertices_up_to(p, n - 1).size();
            CHECK(static_cast<i64>(up_to_n - up_to_prev) == (p + 1) * ipow(p, n - 1));
        }
}

TEST_CASE("local tree counts", "[oracle]")
{
    const auto k3 = make_field(3);
    CHECK(count_maximal_orders_local(3, k3, 1, 0) == 1);
    CHECK(count_maximal_orders_local(3, k3, 1, 2) == 2);
    CHECK(count_maximal_orders_local(3, k3, 2, 1) == 4);
    CHECK(count_maximal_orders_local(3, k3, 2, 0) == 1);
    // tau divisible by p
    CHECK(count_maximal_orders_local(3, k3, 3, 0) == 1);
    CHECK(count_maximal_orders_local(3, make_field(6), 3, 1) == 4);
    CHECK_THROWS_AS(count_maximal_orders_local(3, make_field(5), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_maximal_orders_local(2, make_field(1), 1, 1), std::invalid_argument);

    // a larger radius finds no further vertices
    for (i64 tau : {1, 2})
        for (int r = 0; r <= 3; ++r) {
            const auto near = count_maximal_orders_local_at(3, k3, tau, r, r + 1, r + 3);
            const auto far = count_maximal_orders_local_at(3, k3, tau, r, r + 2, r + 4);
            CHECK(near.count == far.count);
            CHECK(near.targets == far.targets);
        }
}

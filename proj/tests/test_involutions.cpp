#include "kostka/involutions.hpp"
#include "kostka/matrices.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace kostka;

namespace {

std::size_t thc_count(const Composition& content, const Composition& shape)
{
    return enumerate_thc(content, shape).size();
}

std::size_t dec_thc_count(const Partition& lambda, const Composition& shape)
{
    std::size_t c = 0;
    for_each_nonneg_perm(shape, [&](const Permutation&, const Sequence& d) { c += dec(flatten(d)) == lambda; });
    return c;
}

}  // namespace

TEST_CASE("pair counts factor through tableau and covering counts")
{
    for (int n = 1; n <= 5; ++n) {
        auto comps = compositions_of(n);
        for (const auto& a : comps)
            for (const auto& b : comps) {
                std::size_t want_a = 0;
                std::size_t want_c = 0;
                for (const auto& g : comps) {
                    want_a += oracle::count_fillings(a, g, false) * thc_count(g, b);
                    want_c += thc_count(a, g) * oracle::count_fillings(g, b, false);
                }
                CHECK(count_pairs(SetKind::A, a, b) == want_a);
                CHECK(count_pairs(SetKind::C, a, b) == want_c);
            }
        auto parts = partitions_of(n);
        for (const auto& l : parts)
            for (const auto& m : parts) {
                std::size_t want_d = 0;
                std::size_t want_e = 0;
                for (const auto& g : comps) {
                    std::size_t t = dec_thc_count(l, g);
                    if (is_partition(g))
                        want_d += t * oracle::count_fillings(g, m, true);
                    want_e += t * oracle::count_fillings(g, m, false);
                }
                CHECK(count_pairs(SetKind::D, l, m) == want_d);
                CHECK(count_pairs(SetKind::E, l, m) == want_e);
                for (const Pair& x : enumerate_pairs(SetKind::B, l, m)) {
                    CHECK(in_set(SetKind::B, x, l, m));
                    CHECK(pair_indices(SetKind::B, x) == std::pair<Sequence, Sequence>{l, m});
                }
            }
    }
}

TEST_CASE("signed pair sums are Kronecker deltas")
{
    for (int n = 1; n <= 5; ++n)
        for (SetKind k : {SetKind::A, SetKind::B, SetKind::C, SetKind::D}) {
            const bool sym = k == SetKind::B || k == SetKind::D;
            auto idx = sym ? partitions_of(n) : compositions_of(n);
            for (const auto& a : idx)
                for (const auto& b : idx) {
                    long s = 0;
                    for_each_pair(k, a, b, [&](const Pair& x) { s += pair_sign(x); });
                    CHECK(s == (a == b ? 1 : 0));
                }
        }
}

TEST_CASE("each map is a sign-reversing involution up to degree 5")
{
    for (SetKind k : {SetKind::A, SetKind::B, SetKind::C, SetKind::D, SetKind::E})
        for (int n = 1; n <= 5; ++n) {
            VerifyReport r = verify_involution(k, n);
            CAPTURE(set_letter(k));
            CAPTURE(n);
            CAPTURE(r.counterexample);
            CHECK(r.pass);
            if (k != SetKind::E)
                CHECK(r.fixed_points == (k == SetKind::B || k == SetKind::D ? partitions_of(n).size()
                                                                           : compositions_of(n).size()));
        }
}

TEST_CASE("fixed points are the diagonal identity pairs")
{
    Pair x = enumerate_pairs(SetKind::A, {2, 1, 3}, {2, 1, 3}).at(0);
    PhiInfo info;
    CHECK(phi(x, &info) == x);
    CHECK(info.fixed);
    CHECK(x.T.perm == identity_perm(3));
    Pair y = enumerate_pairs(SetKind::C, {1, 3}, {1, 3}).at(0);
    PsiInfo pi;
    CHECK(psi(y, &pi) == y);
    CHECK(pi.fixed);
}

TEST_CASE("theta needs a bad cell")
{
    Pair x{Tableau{{{1, 1}, {2}}}, Thc{{2, 1}, {1, 2}}};
    CHECK_THROWS_AS(theta(x), Error);
}

TEST_CASE("rho traces conserve content and alternate")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : partitions_of(n))
            for (const auto& m : partitions_of(n))
                for_each_pair(SetKind::D, l, m, [&](const Pair& x) {
                    RhoResult r = rho(x);
                    const auto& steps = r.trace.steps;
                    REQUIRE(!steps.empty());
                    CHECK(steps.front().pair == x);
                    CHECK(steps.back().pair == r.pair);
                    std::size_t psis = 0;
                    for (std::size_t i = 1; i < steps.size(); ++i) {
                        CHECK(steps[i].map == (i % 2 == 1 ? "psi" : "theta"));
                        psis += steps[i].map == "psi";
                        CHECK(in_set(SetKind::E, steps[i].pair, l, m));
                        if (i + 1 < steps.size())
                            CHECK_FALSE(in_set(SetKind::D, steps[i].pair, l, m));
                    }
                    CHECK(in_set(SetKind::D, r.pair, l, m));
                    const std::size_t len = r.trace.length();
                    if (len > 0) {
                        CHECK(len % 2 == 1);
                        CHECK(psis == len / 2 + 1);
                        CHECK(pair_sign(r.pair) == -pair_sign(x));
                    }
                    CHECK(rho(r.pair).pair == x);
                });
}

TEST_CASE("theta swaps the delta entries t-1 and t")
{
    for (int n = 2; n <= 5; ++n)
        for (const auto& l : partitions_of(n))
            for (const auto& m : partitions_of(n)) {
                if (l == m)
                    continue;
                for_each_pair(SetKind::E, l, m, [&](const Pair& x) {
                    if (bad_cells(x.S).empty())
                        return;
                    ThetaInfo info;
                    Pair y = theta(x, &info);
                    Sequence a = delta(x.T);
                    Sequence b = delta(y.T);
                    REQUIRE(info.t >= 2);
                    std::swap(a[info.t - 2], a[info.t - 1]);
                    CHECK(a == b);
                    CHECK(theta(y) == x);
                    CHECK(pair_sign(y) == -pair_sign(x));
                });
            }
}

TEST_CASE("sampled degree 8 indices")
{
    std::mt19937 rng(8);
    auto comps = compositions_of(8);
    for (int trial = 0; trial < 6; ++trial) {
        const auto& a = comps[rng() % comps.size()];
        const auto& b = comps[rng() % comps.size()];
        CAPTURE(to_string(a));
        CAPTURE(to_string(b));
        long s = 0;
        std::size_t seen = 0;
        for_each_pair(SetKind::A, a, b, [&](const Pair& x) {
            if (seen++ > 4000)
                return;
            Pair y = phi(x);
            CHECK(phi(y) == x);
            if (y != x)
                CHECK(pair_sign(y) == -pair_sign(x));
            s += pair_sign(x);
        });
        if (seen <= 4000)
            CHECK(s == (a == b ? 1 : 0));
    }
}

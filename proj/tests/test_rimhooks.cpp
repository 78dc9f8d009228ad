#include "kostka/rimhooks.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace kostka;

namespace {

std::vector<std::vector<Cell>> cell_sets(const Srht& r)
{
    std::vector<std::vector<Cell>> out;
    for (const RimHook& h : r.hooks) {
        std::vector<Cell> c = h.cells;
        std::sort(c.begin(), c.end());
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool nonneg(const Partition& shape, const Permutation& p)
{
    for (std::size_t i = 0; i < shape.size(); ++i)
        if (shape[i] - static_cast<int>(i) - 1 + p[i] < 0)
            return false;
    return true;
}

}  // namespace

TEST_CASE("rim hook predicates")
{
    RimHook h{{{1, 3}, {1, 2}, {2, 2}, {2, 1}}};
    CHECK(is_special_rim_hook(h));
    CHECK(h.rows_crossed() == 1);
    RimHook floating{{{1, 3}, {1, 2}}};
    CHECK_FALSE(is_special_rim_hook(floating));
    Srht r{{2, 1}, {RimHook{{{1, 2}, {1, 1}}}, RimHook{{{2, 1}}}}};
    CHECK(is_srht(r));
    Srht broken{{2, 1}, {RimHook{{{1, 2}, {1, 1}}}}};
    CHECK_FALSE(is_srht(broken));
}

TEST_CASE("enumeration matches border strip peeling")
{
    for (int n = 1; n <= 8; ++n)
        for (const Partition& shape : partitions_of(n)) {
            CAPTURE(to_string(shape));
            std::multiset<std::vector<std::vector<Cell>>> ours;
            std::map<std::vector<std::vector<Cell>>, std::pair<int, Partition>> info;
            for (const Srht& r : enumerate_srht(shape)) {
                CHECK(is_srht(r));
                ours.insert(cell_sets(r));
                info[cell_sets(r)] = {srht_sign(r), srht_content(r)};
            }
            std::multiset<std::vector<std::vector<Cell>>> ref;
            for (const oracle::RimTableau& t : oracle::srht(shape)) {
                ref.insert(t.hooks);
                auto it = info.find(t.hooks);
                REQUIRE(it != info.end());
                CHECK(it->second.first == t.sign);
                CHECK(it->second.second == t.content);
            }
            CHECK(ours == ref);
        }
}

TEST_CASE("perm_srt is injective with image the nonnegative permutations")
{
    for (int n = 1; n <= 8; ++n)
        for (const Partition& shape : partitions_of(n)) {
            const int l = static_cast<int>(shape.size());
            std::set<Permutation> image;
            for (const Srht& r : enumerate_srht(shape)) {
                Permutation p = perm_srt(r);
                CHECK(is_permutation(p));
                CHECK(image.insert(p).second);
                CHECK(srht_from_perm(shape, p) == r);
                CHECK(from_cycles(l, perm_cycles_srt(r)) == p);
                CHECK(srht_sign(r) == oracle::sign_by_cycles(p));
            }
            std::set<Permutation> want;
            for_each_perm(l, [&](const Permutation& p) {
                if (nonneg(shape, p))
                    want.insert(p);
            });
            CHECK(image == want);
        }
}

TEST_CASE("srht_from_perm names the failing row")
{
    try {
        srht_from_perm({1, 1, 1}, {1, 3, 1});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() != Errc::NoPreimage);
    }
    try {
        srht_from_perm({1, 1, 1}, {2, 3, 1});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NoPreimage);
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("xi carries gamma to delta")
{
    for (int n = 1; n <= 8; ++n)
        for (const Partition& shape : partitions_of(n)) {
            std::set<Permutation> seen;
            for (const Srht& r : enumerate_srht(shape)) {
                Thc t = xi(r);
                CHECK(t.shape == shape);
                CHECK(gamma(r) == delta(t));
                CHECK(perm_of_thc(t) == perm_srt(r));
                CHECK(thc_sign(t) == srht_sign(r));
                seen.insert(t.perm);
            }
            std::size_t nonneg_thc = 0;
            for_each_nonneg_perm(shape, [&](const Permutation&, const Sequence&) { ++nonneg_thc; });
            CHECK(seen.size() == nonneg_thc);
        }
}

TEST_CASE("at most one initial cell per diagonal")
{
    for (int n = 1; n <= 8; ++n)
        for (const Partition& shape : partitions_of(n))
            for (const Srht& r : enumerate_srht(shape)) {
                std::set<int> diagonals;
                for (const RimHook& h : r.hooks)
                    CHECK(diagonals.insert(diagonal_of(h.initial())).second);
                for (const auto& [d, count] : initial_cells_per_diagonal(r))
                    CHECK(count == 1);
            }
}

TEST_CASE("tableaux that are also coverings are fixed by xi")
{
    std::size_t both = 0;
    for (int n = 1; n <= 8; ++n)
        for (const Partition& shape : partitions_of(n))
            for (const Srht& r : enumerate_srht(shape)) {
                bool geometric = true;
                for (const RimHook& h : r.hooks)
                    geometric = geometric && h.initial().col == shape[h.initial().row - 1] &&
                                h.terminal().col == 1;
                CHECK(is_srht_and_thc(r) == geometric);
                if (!geometric)
                    continue;
                ++both;
                Thc t = xi(r);
                CHECK(perm_of_thc(t) == perm_srt(r));
                ThcGeometry g = replay(t);
                std::vector<std::vector<Cell>> covered;
                for (const TunnelHook& h : g.hooks)
                    if (h.weight() > 0) {
                        std::vector<Cell> c = h.cells;
                        std::sort(c.begin(), c.end());
                        covered.push_back(c);
                    }
                std::sort(covered.begin(), covered.end());
                CHECK(covered == cell_sets(r));
            }
    CHECK(both > 0);
}

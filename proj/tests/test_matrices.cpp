#include "kostka/matrices.hpp"
#include "kostka/tableaux.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kostka;

namespace {

Matrix brute_K(int n, bool nsym)
{
    Matrix m = zero_matrix(nsym ? IndexKind::Compositions : IndexKind::Partitions, n);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            m.at(i, j) = static_cast<std::int64_t>(oracle::count_fillings(m.labels[i], m.labels[j], !nsym));
    return m;
}

}  // namespace

TEST_CASE("small matrices by hand")
{
    Matrix k = sym_K(3);
    CHECK(k.labels == std::vector<Sequence>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(k.data == std::vector<std::int64_t>{1, 1, 1, 0, 1, 2, 0, 0, 1});
    Matrix ki = sym_Kinv(3);
    CHECK(ki.data == std::vector<std::int64_t>{1, -1, 1, 0, 1, -2, 0, 0, 1});
    Matrix nk = nsym_K(3);
    CHECK(nk.data == std::vector<std::int64_t>{1, 1, 1, 1, 0, 1, 1, 2, 0, 0, 1, 1, 0, 0, 0, 1});
}

TEST_CASE("Kostka entries agree with brute-force fillings")
{
    for (int n = 1; n <= 5; ++n) {
        CHECK(nsym_K(n) == brute_K(n, true));
        CHECK(sym_K(n) == brute_K(n, false));
    }
    CHECK(sym_K(6) == brute_K(6, false));
}

TEST_CASE("inverses agree with back substitution")
{
    for (int n = 1; n <= 7; ++n) {
        for (bool nsym : {true, false}) {
            Matrix k = nsym ? nsym_K(n) : sym_K(n);
            Matrix ki = nsym ? nsym_Kinv(n) : sym_Kinv(n);
            CHECK(is_upper_unitriangular(k));
            CHECK(is_upper_unitriangular(ki));
            CHECK(ki.data == oracle::unitriangular_inverse(k.data, k.dim()));
            CHECK(is_identity(mat_mul(k, ki)));
            CHECK(is_identity(mat_mul(ki, k)));
        }
    }
}

TEST_CASE("three routes to the inverse Kostka matrix")
{
    for (int n = 1; n <= 7; ++n) {
        Matrix thc = sym_Kinv(n);
        CHECK(sym_Kinv_srht(n) == thc);
        CHECK(exact_inverse(sym_K(n)) == thc);
    }
}

TEST_CASE("exact inverse on general matrices")
{
    Matrix a = zero_matrix(IndexKind::Partitions, 3);
    a.data = {2, 1, 0, 1, 1, 0, 0, 3, 1};
    Matrix inv = exact_inverse(a);
    CHECK(is_identity(mat_mul(a, inv)));
    a.data = {1, 2, 0, 2, 4, 0, 0, 0, 1};
    CHECK_THROWS_AS(exact_inverse(a), Error);
    a.data = {2, 0, 0, 0, 1, 0, 0, 0, 1};
    CHECK_THROWS_AS(exact_inverse(a), Error);
}

TEST_CASE("dominance vanishing")
{
    for (int n = 1; n <= 7; ++n) {
        Matrix nk = nsym_K(n);
        Matrix nki = nsym_Kinv(n);
        for (std::size_t i = 0; i < nk.dim(); ++i)
            for (std::size_t j = 0; j < nk.dim(); ++j) {
                if (nk.at(i, j) != 0)
                    CHECK(lex_geq(nk.labels[i], nk.labels[j]));
                if (nki.at(i, j) != 0)
                    CHECK(dominates(nki.labels[i], nki.labels[j]));
            }
        Matrix k = sym_K(n);
        for (std::size_t i = 0; i < k.dim(); ++i)
            for (std::size_t j = 0; j < k.dim(); ++j)
                CHECK((k.at(i, j) != 0) == dominates(k.labels[i], k.labels[j]));
    }
}

TEST_CASE("parallel builds match serial builds")
{
    CHECK(nsym_K(6, 4) == nsym_K(6, 1));
    CHECK(nsym_Kinv(6, 3) == nsym_Kinv(6, 1));
    CHECK(sym_Kinv(7, 4) == sym_Kinv(7, 1));
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                        if (i == 7)
                            throw Error(Errc::Structural, "boom");
                    }),
                    Error);
}

TEST_CASE("Jacobi-Trudi terms equal rim hook terms")
{
    for (int n = 1; n <= 8; ++n)
        for (const Partition& shape : partitions_of(n)) {
            CAPTURE(to_string(shape));
            auto jt = jacobi_trudi_terms(shape);
            CHECK(jt == srht_terms(shape));
            auto ref = oracle::jacobi_trudi(shape);
            REQUIRE(ref.size() == jt.size());
            for (std::size_t i = 0; i < jt.size(); ++i) {
                CHECK(jt[i].sign == ref[i].sign);
                CHECK(jt[i].exponents == ref[i].exps);
            }
        }
}

#include "kostka/matrices.hpp"

#include "kostka/rimhooks.hpp"
#include "kostka/tableaux.hpp"
#include "kostka/tunnelhooks.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

namespace kostka {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn)
{
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = count;
                return;
            }
        }
    };
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n; ++t)
        pool.emplace_back(worker);
    for (std::thread& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

Matrix zero_matrix(IndexKind kind, int n)
{
    Matrix m;
    m.kind = kind;
    m.degree = n;
    m.labels = kind == IndexKind::Compositions ? compositions_of(n) : partitions_of(n);
    m.data.assign(m.dim() * m.dim(), 0);
    return m;
}

namespace {

std::map<Sequence, std::size_t> index_of(const Matrix& m)
{
    std::map<Sequence, std::size_t> idx;
    for (std::size_t i = 0; i < m.dim(); ++i)
        idx[m.labels[i]] = i;
    return idx;
}

}  // namespace

Matrix nsym_K(int n, int jobs)
{
    Matrix m = zero_matrix(IndexKind::Compositions, n);
    parallel_for(m.dim(), jobs, [&](std::size_t i) {
        for (std::size_t j = 0; j < m.dim(); ++j)
            m.at(i, j) = static_cast<std::int64_t>(count_immaculate(m.labels[i], m.labels[j]));
    });
    return m;
}

Matrix nsym_Kinv(int n, int jobs)
{
    Matrix m = zero_matrix(IndexKind::Compositions, n);
    const auto idx = index_of(m);
    parallel_for(m.dim(), jobs, [&](std::size_t j) {
        for_each_nonneg_perm(m.labels[j], [&](const Permutation& perm, const Sequence& d) {
            m.at(idx.at(flatten(d)), j) += perm_sign(perm);
        });
    });
    return m;
}

Matrix sym_K(int n, int jobs)
{
    Matrix m = zero_matrix(IndexKind::Partitions, n);
    parallel_for(m.dim(), jobs, [&](std::size_t i) {
        for (std::size_t j = 0; j < m.dim(); ++j)
            m.at(i, j) = static_cast<std::int64_t>(count_ssyt(m.labels[i], m.labels[j]));
    });
    return m;
}

Matrix sym_Kinv(int n, int jobs)
{
    Matrix m = zero_matrix(IndexKind::Partitions, n);
    const auto idx = index_of(m);
    parallel_for(m.dim(), jobs, [&](std::size_t j) {
        for_each_nonneg_perm(m.labels[j], [&](const Permutation& perm, const Sequence& d) {
            m.at(idx.at(dec(flatten(d))), j) += perm_sign(perm);
        });
    });
    return m;
}

Matrix sym_Kinv_srht(int n, int jobs)
{
    Matrix m = zero_matrix(IndexKind::Partitions, n);
    const auto idx = index_of(m);
    parallel_for(m.dim(), jobs, [&](std::size_t j) {
        for (const Srht& r : enumerate_srht(m.labels[j]))
            m.at(idx.at(srht_content(r)), j) += srht_sign(r);
    });
    return m;
}

namespace {

__extension__ typedef __int128 Wide;

Wide checked_mul(Wide a, Wide b)
{
    Wide r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(Errc::Structural, "exact_inverse: integer overflow");
    return r;
}

Wide checked_sub(Wide a, Wide b)
{
    Wide r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(Errc::Structural, "exact_inverse: integer overflow");
    return r;
}

std::int64_t narrow(Wide v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw Error(Errc::Structural, "integer overflow");
    return static_cast<std::int64_t>(v);
}

}  // namespace

Matrix exact_inverse(const Matrix& a)
{
    const std::size_t n = a.dim();
    const std::size_t w = 2 * n;
    std::vector<Wide> m(n * w, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i * w + j] = a.at(i, j);
        m[i * w + n + i] = 1;
    }
    // Integer-preserving Gauss-Jordan: every division below is exact.
    Wide prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p * w + k] == 0)
            ++p;
        if (p == n)
            throw Error(Errc::Domain, "exact_inverse: singular matrix");
        if (p != k)
            for (std::size_t j = 0; j < w; ++j)
                std::swap(m[p * w + j], m[k * w + j]);
        const Wide piv = m[k * w + k];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k)
                continue;
            const Wide f = m[i * w + k];
            for (std::size_t j = 0; j < w; ++j) {
                if (j == k)
                    continue;
                Wide v = checked_sub(checked_mul(piv, m[i * w + j]), checked_mul(f, m[k * w + j]));
                m[i * w + j] = v / prev;
            }
            m[i * w + k] = 0;
        }
        prev = piv;
    }
    Matrix inv = a;
    const Wide d = m[(n - 1) * w + (n - 1)];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Wide v = m[i * w + n + j];
            if (v % d != 0)
                throw Error(Errc::Domain, "exact_inverse: inverse is not integral");
            inv.at(i, j) = narrow(v / d);
        }
    return inv;
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
    if (a.dim() != b.dim() || a.kind != b.kind || a.labels != b.labels)
        throw Error(Errc::LengthMismatch, "mat_mul: incompatible matrices");
    Matrix c = a;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Wide s = 0;
            for (std::size_t k = 0; k < n; ++k)
                s += static_cast<Wide>(a.at(i, k)) * b.at(k, j);
            c.at(i, j) = narrow(s);
        }
    return c;
}

bool is_identity(const Matrix& a)
{
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

bool is_upper_unitriangular(const Matrix& a)
{
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (a.at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

std::vector<JTTerm> jacobi_trudi_terms(const Partition& shape)
{
    std::vector<JTTerm> out;
    // Straight expansion over all of S_l; h_k vanishes for k < 0 and h_0 = 1.
    for_each_perm(static_cast<int>(shape.size()), [&](const Permutation& perm) {
        Sequence exps;
        for (std::size_t i = 0; i < shape.size(); ++i) {
            int e = shape[i] - static_cast<int>(i) - 1 + perm[i];
            if (e < 0)
                return;
            exps.push_back(e);
        }
        out.push_back({perm_sign(perm), dec(flatten(exps))});
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<JTTerm> srht_terms(const Partition& shape)
{
    std::vector<JTTerm> out;
    for (const Srht& r : enumerate_srht(shape))
        out.push_back({srht_sign(r), srht_content(r)});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kostka

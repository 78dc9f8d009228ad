#pragma once

// Pair sets and the sign-reversing involutions acting on them.
//
// Pairs in A and B are written (S, T) and pairs in C, D and E are written
// (T, S), where S is a tableau and T a tunnel hook covering. The sign of a
// pair is the sign of T.

#include "kostka/core.hpp"
#include "kostka/tableaux.hpp"
#include "kostka/tunnelhooks.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace kostka {

enum class SetKind { A, B, C, D, E };

char set_letter(SetKind k);
SetKind set_from_letter(char c);

struct Pair {
    Tableau S;
    Thc T;
    friend bool operator==(const Pair&, const Pair&) = default;
    friend auto operator<=>(const Pair&, const Pair&) = default;
};

inline int pair_sign(const Pair& x) { return thc_sign(x.T); }

// (Delta_{sigma^-1(1)}, ..., Delta_{sigma^-1(l)})
Sequence delta_inverse_order(const Thc& t);

// Membership tests for A_{alpha,beta}, B_{lambda,mu}, C_{alpha,beta},
// D_{lambda,mu} and E_{lambda,mu}.
bool in_set(SetKind kind, const Pair& x, const Sequence& left, const Sequence& right);

// The index pair (left, right) a well-formed pair belongs to.
std::pair<Sequence, Sequence> pair_indices(SetKind kind, const Pair& x);

void for_each_pair(SetKind kind, const Sequence& left, const Sequence& right,
                   const std::function<void(const Pair&)>& fn);
std::vector<Pair> enumerate_pairs(SetKind kind, const Sequence& left, const Sequence& right);
std::size_t count_pairs(SetKind kind, const Sequence& left, const Sequence& right);

struct PhiInfo {
    bool fixed = false;
    int m = 0;
    int q = 0;
    int p = 0;
};

struct ChiInfo {
    bool fixed = false;
    int m = 0;
    int q = 0;
};

struct PsiInfo {
    bool fixed = false;
    int k = 0;
    int r = 0;
    int q = 0;
    int p = 0;
    int step = 0;
    bool row_deleted = false;
};

struct ThetaInfo {
    int i = 0;
    int t = 0;
};

Pair phi(const Pair& x, PhiInfo* info = nullptr);
Pair chi(const Pair& x, ChiInfo* info = nullptr);
Pair psi(const Pair& x, PsiInfo* info = nullptr);
// Throws Domain when S has no bad cell.
Pair theta(const Pair& x, ThetaInfo* info = nullptr);

struct TraceStep {
    Pair pair;
    // "start", "psi" or "theta"
    std::string map;
    std::map<std::string, int> indices;
};

struct InvolutionTrace {
    std::vector<TraceStep> steps;

    // Number of maps applied.
    std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
};

struct RhoResult {
    Pair pair;
    InvolutionTrace trace;
};

std::size_t count_E(const Partition& lambda, const Partition& mu);

// Alternates psi and theta until psi lands in D. A cap of 0 means
// 4 * |E_{lambda,mu}|; exceeding the cap throws Structural.
RhoResult rho(const Pair& x, std::size_t cap = 0);

struct IndexReport {
    Sequence left;
    Sequence right;
    std::size_t pairs = 0;
    long signed_sum = 0;
    std::size_t fixed_points = 0;
    std::size_t max_orbit = 0;
};

struct VerifyReport {
    SetKind kind = SetKind::A;
    std::string map;
    int n = 0;
    bool pass = true;
    std::size_t pairs = 0;
    std::size_t fixed_points = 0;
    std::size_t max_orbit = 0;
    std::vector<IndexReport> indices;
    std::string counterexample;
};

// kind selects the map: A phi, B chi, C psi, D rho, E theta (on E \ D with
// lambda != mu). Checks every index pair of degree exactly n.
VerifyReport verify_involution(SetKind kind, int n, int jobs = 1);

}  // namespace kostka

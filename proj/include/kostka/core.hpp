#pragma once

// Integer sequences, compositions, partitions and permutations.
//
// Every sequence is a plain std::vector<int>. Permutations are stored in
// one-line notation with 1-based values.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kostka {

using Sequence = std::vector<int>;
using Composition = Sequence;
using Partition = Sequence;
using WeakComposition = Sequence;
using Permutation = Sequence;
using Cycle = std::vector<int>;

enum class Errc {
    EmptyDegree,
    InvalidContent,
    SumMismatch,
    LengthMismatch,
    InvalidArgument,
    NoPreimage,
    Domain,
    Structural,
    Parse,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

int total(const Sequence& a);

bool is_composition(const Sequence& a);
bool is_partition(const Sequence& a);
bool is_weak_composition(const Sequence& a);

// All compositions of n ordered by the (n-1)-bit boundary mask read from
// position 1 as the most significant bit, ascending. This is lexicographically
// decreasing: (n), (n-1,1), ..., (1,...,1).
std::vector<Composition> compositions_of(int n);

// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

Partition dec(const Sequence& a);

// Drops zero entries. Throws InvalidContent on a negative entry.
Composition flatten(const Sequence& a);

// Prefix-sum dominance with zero padding. Throws SumMismatch when |a| != |b|.
bool dominates(const Sequence& a, const Sequence& b);

bool lex_geq(const Sequence& a, const Sequence& b);

bool is_permutation(const Permutation& s);
Permutation identity_perm(int l);

// (s o t)_i = s_{t_i}
Permutation perm_compose(const Permutation& s, const Permutation& t);
Permutation perm_inverse(const Permutation& s);
int perm_sign(const Permutation& s);
int inversions(const Permutation& s);

Sequence lehmer_code(const Permutation& s);
Permutation lehmer_decode(const Sequence& code);

Permutation embed(const Permutation& s, int m);

// s_k o s: exchanges the values k and k+1.
Permutation s_left(int k, const Permutation& s);

// s o s_k: exchanges the entries in positions k and k+1.
Permutation s_right(const Permutation& s, int k);

// Product c_1 c_2 ... c_r of cycles in S_l, rightmost applied first.
// The cycle (a b c) sends a to b, b to c and c to a.
Permutation from_cycles(int l, const std::vector<Cycle>& cycles);

// Removes position r whose value is r and closes the gap.
Permutation remove_fixed_point(const Permutation& s, int r);

// Visits every permutation of S_l in lexicographic order.
void for_each_perm(int l, const std::function<void(const Permutation&)>& fn);

std::string to_string(const Sequence& a);
std::string perm_string(const Permutation& s);
std::string cycles_string(const std::vector<Cycle>& cycles);

}  // namespace kostka

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qlat/mat.hpp"

namespace qlat {

// Generators of Gamma(2) = <Tinf, T0, T1 | Tinf T0 T1 = 1>.
enum class Gen { Tinf, T0, T1 };

const char* gen_name(Gen g);

// Word in the three generators with nonzero integer exponents; adjacent
// letters always carry distinct generators (exponents are merged on
// construction).
struct GenWord {
    std::vector<std::pair<Gen, long>> letters;

    static GenWord empty() { return {}; }
    static GenWord letter(Gen g, long exp = 1);

    bool is_empty() const { return letters.empty(); }
    long length() const;  // sum of |exponent|
    std::string str() const;

    GenWord operator*(const GenWord& o) const;  // concatenation, normalized
    GenWord inverse() const;
    GenWord pow(long k) const;
    bool operator==(const GenWord& o) const { return letters == o.letters; }
};

GenWord commutator(const GenWord& a, const GenWord& b);
GenWord conjugate(const GenWord& g, const GenWord& w);  // g w g^-1

// Word grammar (whitespace-separated terms):
//   term := ("Tinf" | "T0" | "T1") ("^" signed-integer)?
// Throws std::invalid_argument with the offending position in the message.
GenWord parse_word(const std::string& text);

// Freely reduced word over the rank-2 free basis {Tinf, T0}; T1 is
// eliminated through T1 = T0^-1 Tinf^-1.
struct ReducedWord {
    std::vector<std::pair<Gen, long>> letters;  // only Tinf / T0
    bool is_empty() const { return letters.empty(); }
    std::string str() const;
    bool operator==(const ReducedWord& o) const { return letters == o.letters; }
};

ReducedWord reduce(const GenWord& w);
ReducedWord cyclic_reduce(const GenWord& w);

// True iff the cyclic reductions are cyclic rotations of one another,
// i.e. the words are conjugate in the free group.
bool free_conjugate(const GenWord& a, const GenWord& b);

// The three parabolic generators as matrices, and the S, T constants they
// are conjugated from (T_i = (TS)^i T^2 (TS)^-i).
Mat2Z gen_matrix(Gen g);
Mat2Z sl2_S();
Mat2Z sl2_T();

// Product matrix of the word, sign-normalized so the trace is positive.
// (No element of Gamma(2) has trace 0: a,d odd and b,c even force
// ad = 1 + bc == 1 mod 4, while d = -a would give -a*a == 1 mod 4.)
Mat2Z eval_psl2(const GenWord& w);

// Nielsen-Thurston class through the trace: identity, |trace| = 2
// reducible, |trace| > 2 pseudo-Anosov.  Gamma(2) has no elliptic
// elements, so |trace| < 2 on a nonidentity word signals a bug.
struct NTClass {
    enum class Tag { identity, reducible, pseudo_anosov };
    Tag tag;
    Integer trace;  // of the sign-normalized matrix
};

const char* to_string(NTClass::Tag t);
NTClass nt_classify(const GenWord& w);

// Exponent sums mod 5 under Tinf -> (1,0), T0 -> (0,1), T1 -> (-1,-1).
std::pair<int, int> abelianize_mod5(const GenWord& w);

// Membership in pi_1(C^u): occurrence counts of the three generators agree
// mod 5, i.e. the mod-5 abelianization vanishes.
bool in_pi1Cu(const GenWord& w);

// Generating set {Tinf^5, T0^5} + {[Tinf^p, T0^q] : 1 <= p,q <= 5} (27
// elements; a generating set, not a basis) and the free rank d(m-1)+1 = 26.
std::vector<GenWord> pi1Cu_generating_set();
int pi1Cu_rank();

}  // namespace qlat

#include "qlat/words.hpp"

#include <sstream>

namespace qlat {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::Tinf: return "Tinf";
        case Gen::T0: return "T0";
        case Gen::T1: return "T1";
    }
    return "?";
}

namespace {

void push_letter(std::vector<std::pair<Gen, long>>& out, Gen g, long exp) {
    if (exp == 0) return;
    if (!out.empty() && out.back().first == g) {
        out.back().second += exp;
        if (out.back().second == 0) out.pop_back();
        return;
    }
    out.emplace_back(g, exp);
}

}  // namespace

GenWord GenWord::letter(Gen g, long exp) {
    GenWord w;
    push_letter(w.letters, g, exp);
    return w;
}

long GenWord::length() const {
    long n = 0;
    for (const auto& [g, e] : letters) n += e < 0 ? -e : e;
    return n;
}

std::string GenWord::str() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : letters) {
        if (!first) os << " ";
        first = false;
        os << gen_name(g);
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

GenWord GenWord::operator*(const GenWord& o) const {
    GenWord r(*this);
    for (const auto& [g, e] : o.letters) push_letter(r.letters, g, e);
    return r;
}

GenWord GenWord::inverse() const {
    GenWord r;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        push_letter(r.letters, it->first, -it->second);
    return r;
}

GenWord GenWord::pow(long k) const {
    GenWord base = k < 0 ? inverse() : *this;
    long n = k < 0 ? -k : k;
    GenWord acc;
    for (long i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

GenWord commutator(const GenWord& a, const GenWord& b) {
    return a * b * a.inverse() * b.inverse();
}

GenWord conjugate(const GenWord& g, const GenWord& w) { return g * w * g.inverse(); }

GenWord parse_word(const std::string& text) {
    GenWord w;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        Gen g;
        if (text.compare(i, 4, "Tinf") == 0) {
            g = Gen::Tinf;
            i += 4;
        } else if (text.compare(i, 2, "T0") == 0) {
            g = Gen::T0;
            i += 2;
        } else if (text.compare(i, 2, "T1") == 0) {
            g = Gen::T1;
            i += 2;
        } else {
            throw std::invalid_argument("word syntax error at position " + std::to_string(start) +
                                        ": expected Tinf, T0 or T1");
        }
        long exp = 1;
        if (i < n && text[i] == '^') {
            ++i;
            size_t estart = i;
            if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == estart || (i == estart + 1 && !std::isdigit(static_cast<unsigned char>(text[estart]))))
                throw std::invalid_argument("word syntax error at position " + std::to_string(estart) +
                                            ": expected integer exponent");
            exp = std::stol(text.substr(estart, i - estart));
        }
        if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("word syntax error at position " + std::to_string(i) +
                                        ": unexpected character '" + text[i] + "'");
        push_letter(w.letters, g, exp);
    }
    return w;
}

std::string ReducedWord::str() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : letters) {
        if (!first) os << " ";
        first = false;
        os << gen_name(g);
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

ReducedWord reduce(const GenWord& w) {
    ReducedWord r;
    for (const auto& [g, e] : w.letters) {
        if (g != Gen::T1) {
            push_letter(r.letters, g, e);
            continue;
        }
        // T1 = T0^-1 Tinf^-1 (forced by Tinf T0 T1 = 1)
        long n = e < 0 ? -e : e;
        for (long i = 0; i < n; ++i) {
            if (e > 0) {
                push_letter(r.letters, Gen::T0, -1);
                push_letter(r.letters, Gen::Tinf, -1);
            } else {
                push_letter(r.letters, Gen::Tinf, 1);
                push_letter(r.letters, Gen::T0, 1);
            }
        }
    }
    return r;
}

ReducedWord cyclic_reduce(const GenWord& w) {
    ReducedWord r = reduce(w);
    // rotate trailing letters that merge with the head until the word is
    // cyclically reduced (head and tail generators differ, or single letter)
    while (r.letters.size() >= 2 && r.letters.front().first == r.letters.back().first) {
        long e = r.letters.front().second + r.letters.back().second;
        Gen g = r.letters.front().first;
        r.letters.erase(r.letters.begin());
        r.letters.pop_back();
        if (e != 0) {
            r.letters.insert(r.letters.begin(), {g, e});
            break;
        }
    }
    return r;
}

namespace {

// expansion into single-exponent letters, for rotation comparison
std::vector<std::pair<Gen, int>> expand(const ReducedWord& w) {
    std::vector<std::pair<Gen, int>> out;
    for (const auto& [g, e] : w.letters) {
        long n = e < 0 ? -e : e;
        for (long i = 0; i < n; ++i) out.emplace_back(g, e < 0 ? -1 : 1);
    }
    return out;
}

}  // namespace

bool free_conjugate(const GenWord& a, const GenWord& b) {
    auto ea = expand(cyclic_reduce(a));
    auto eb = expand(cyclic_reduce(b));
    if (ea.size() != eb.size()) return false;
    if (ea.empty()) return true;
    for (size_t shift = 0; shift < ea.size(); ++shift) {
        bool match = true;
        for (size_t i = 0; i < ea.size() && match; ++i)
            match = ea[(shift + i) % ea.size()] == eb[i];
        if (match) return true;
    }
    return false;
}

Mat2Z gen_matrix(Gen g) {
    switch (g) {
        case Gen::Tinf: return Mat2Z::sl2(1, 2, 0, 1);
        case Gen::T1: return Mat2Z::sl2(-1, 2, -2, 3);
        case Gen::T0: return Mat2Z::sl2(1, 0, -2, 1);
    }
    throw std::logic_error("bad generator");
}

Mat2Z sl2_S() { return Mat2Z{{Integer(0), Integer(-1), Integer(1), Integer(0)}}; }
Mat2Z sl2_T() { return Mat2Z::sl2(1, 1, 0, 1); }

Mat2Z eval_psl2(const GenWord& w) {
    Mat2Z acc = Mat2Z::identity();
    for (const auto& [g, e] : w.letters) {
        Mat2Z base = e < 0 ? gen_matrix(g).inverse_sl2() : gen_matrix(g);
        long n = e < 0 ? -e : e;
        for (long i = 0; i < n; ++i) acc = acc * base;
    }
    int s = sgn(acc.trace());
    if (s == 0) throw std::logic_error("trace-zero matrix in Gamma(2)");
    return s > 0 ? acc : acc.negated();
}

const char* to_string(NTClass::Tag t) {
    switch (t) {
        case NTClass::Tag::identity: return "identity";
        case NTClass::Tag::reducible: return "reducible";
        case NTClass::Tag::pseudo_anosov: return "pseudo-anosov";
    }
    return "?";
}

NTClass nt_classify(const GenWord& w) {
    Mat2Z m = eval_psl2(w);
    Integer tr = m.trace();
    if (m == Mat2Z::identity()) return {NTClass::Tag::identity, tr};
    if (tr == 2) return {NTClass::Tag::reducible, tr};
    if (tr > 2) return {NTClass::Tag::pseudo_anosov, tr};
    throw std::logic_error("|trace| < 2 on a nonidentity element of Gamma(2)");
}

std::pair<int, int> abelianize_mod5(const GenWord& w) {
    long a = 0, b = 0;
    for (const auto& [g, e] : w.letters) {
        switch (g) {
            case Gen::Tinf: a += e; break;
            case Gen::T0: b += e; break;
            case Gen::T1: a -= e; b -= e; break;
        }
    }
    auto m5 = [](long x) { return static_cast<int>(((x % 5) + 5) % 5); };
    return {m5(a), m5(b)};
}

bool in_pi1Cu(const GenWord& w) { return abelianize_mod5(w) == std::pair<int, int>{0, 0}; }

std::vector<GenWord> pi1Cu_generating_set() {
    std::vector<GenWord> gens;
    gens.push_back(GenWord::letter(Gen::Tinf, 5));
    gens.push_back(GenWord::letter(Gen::T0, 5));
    for (long p = 1; p <= 5; ++p)
        for (long q = 1; q <= 5; ++q)
            gens.push_back(commutator(GenWord::letter(Gen::Tinf, p), GenWord::letter(Gen::T0, q)));
    return gens;
}

// d(m-1)+1 circles for the degree-d cover of a wedge of m circles: here the
// kernel of F_2 -> (Z/5)^2, so d = 25, m = 2.
int pi1Cu_rank() { return 25 * (2 - 1) + 1; }

}  // namespace qlat

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlat/rng.hpp"
#include "qlat/wordexpr.hpp"
#include "qlat/words.hpp"

using namespace qlat;

namespace {

GenWord random_word(SampleRng& rng, int max_letters) {
    GenWord w;
    int n = static_cast<int>(rng.next_in(0, max_letters));
    for (int i = 0; i < n; ++i) {
        Gen g = static_cast<Gen>(rng.next_in(0, 2));
        long e = rng.next_in(1, 2) * (rng.next_bool() ? 1 : -1);
        w = w * GenWord::letter(g, e);
    }
    return w;
}

}  // namespace

TEST_CASE("parsing") {
    GenWord w = parse_word("Tinf^2 T0");
    REQUIRE(w.letters.size() == 2);
    CHECK(w.letters[0] == std::pair<Gen, long>{Gen::Tinf, 2});
    CHECK(w.letters[1] == std::pair<Gen, long>{Gen::T0, 1});
    CHECK(parse_word("T1 T1^-1").is_empty());
    CHECK(parse_word("T1 T0 Tinf").letters.size() == 3);
    CHECK(parse_word("").is_empty());
    CHECK_THROWS_AS(parse_word("T2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("Tinf^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("Tinf^x"), std::invalid_argument);
}

TEST_CASE("extended expression grammar") {
    CHECK(parse_word_expr("[T1,T0]") ==
          commutator(GenWord::letter(Gen::T1), GenWord::letter(Gen::T0)));
    CHECK(parse_word_expr("(Tinf T0)^2") == parse_word("Tinf T0 Tinf T0"));
    CHECK(parse_word_expr("(Tinf T0)^-1") == parse_word("T0^-1 Tinf^-1"));
    CHECK(parse_word_expr("[T1,T0]^2") ==
          commutator(GenWord::letter(Gen::T1), GenWord::letter(Gen::T0)).pow(2));
    CHECK_THROWS_AS(parse_word_expr("[T1 T0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word_expr("(T1"), std::invalid_argument);
}

TEST_CASE("displayed generator matrices from S and T") {
    // T_inf = T^2, T_1 = (TS) T^2 (TS)^-1, T_0 = (TS)^2 T^2 (TS)^-2
    Mat2Z T = sl2_T(), S = sl2_S();
    Mat2Z TS = T * S;
    Mat2Z T2 = T * T;
    CHECK(T2 == gen_matrix(Gen::Tinf));
    CHECK(TS * T2 * TS.inverse_sl2() == gen_matrix(Gen::T1));
    Mat2Z TS2 = TS * TS;
    CHECK(TS2 * T2 * TS2.inverse_sl2() == gen_matrix(Gen::T0));
}

TEST_CASE("evaluation") {
    Mat2Z m = eval_psl2(parse_word("T1 T0 Tinf"));
    CHECK(m == Mat2Z::sl2(5, 8, 8, 13));
    CHECK(m.trace() == 18);
    // the defining relation is -I in SL2, the identity in PSL2
    CHECK(eval_psl2(parse_word("Tinf T0 T1")) == Mat2Z::identity());
    CHECK(eval_psl2(GenWord::empty()) == Mat2Z::identity());
    // commutator form of the same element
    GenWord comm = commutator(GenWord::letter(Gen::T1), GenWord::letter(Gen::T0));
    CHECK(eval_psl2(comm) == Mat2Z::sl2(5, 8, 8, 13));
}

TEST_CASE("evaluation is a homomorphism into PSL2") {
    SampleRng rng(31, 0);
    for (int t = 0; t < 60; ++t) {
        GenWord a = random_word(rng, 6), b = random_word(rng, 6);
        Mat2Z ab = eval_psl2(a * b);
        Mat2Z prod = eval_psl2(a) * eval_psl2(b);
        CHECK((ab == prod || ab == prod.negated()));
    }
}

TEST_CASE("images lie in Gamma(2) with determinant 1 and positive trace") {
    SampleRng rng(32, 0);
    for (int t = 0; t < 60; ++t) {
        Mat2Z m = eval_psl2(random_word(rng, 8));
        CHECK(m.det() == 1);
        CHECK(m.trace() > 0);
        CHECK(m.e[0] % 2 != 0);  // diagonal odd
        CHECK(m.e[3] % 2 != 0);
        CHECK(m.e[1] % 2 == 0);  // off-diagonal even
        CHECK(m.e[2] % 2 == 0);
    }
}

TEST_CASE("Nielsen-Thurston classification by trace") {
    CHECK(nt_classify(GenWord::letter(Gen::Tinf)).tag == NTClass::Tag::reducible);
    CHECK(nt_classify(GenWord::letter(Gen::Tinf)).trace == 2);
    NTClass pa = nt_classify(parse_word("T1 T0 Tinf"));
    CHECK(pa.tag == NTClass::Tag::pseudo_anosov);
    CHECK(pa.trace == 18);
    CHECK(nt_classify(GenWord::empty()).tag == NTClass::Tag::identity);
    CHECK(nt_classify(parse_word("Tinf T0 T1")).tag == NTClass::Tag::identity);
}

TEST_CASE("classification is a conjugation invariant") {
    SampleRng rng(33, 0);
    for (int t = 0; t < 40; ++t) {
        GenWord w = random_word(rng, 6), g = random_word(rng, 6);
        CHECK(nt_classify(conjugate(g, w)).tag == nt_classify(w).tag);
    }
}

TEST_CASE("free reduction eliminates T1") {
    ReducedWord r = reduce(GenWord::letter(Gen::T1));
    REQUIRE(r.letters.size() == 2);
    CHECK(r.letters[0] == std::pair<Gen, long>{Gen::T0, -1});
    CHECK(r.letters[1] == std::pair<Gen, long>{Gen::Tinf, -1});
    // the relation word reduces to nothing
    CHECK(reduce(parse_word("Tinf T0 T1")).is_empty());
    CHECK(reduce(parse_word("T1^-1 T0^-1 Tinf^-1")).is_empty());
}

TEST_CASE("cyclic reduction") {
    CHECK(cyclic_reduce(parse_word("Tinf T0 Tinf^-1")).str() == "T0");
    CHECK(cyclic_reduce(parse_word("Tinf^2 T0 Tinf^-1")).str() == "Tinf T0");
    CHECK(cyclic_reduce(GenWord::empty()).is_empty());
}

TEST_CASE("inversion") {
    CHECK(parse_word("Tinf T0").inverse().str() == "T0^-1 Tinf^-1");
    SampleRng rng(34, 0);
    for (int t = 0; t < 40; ++t) {
        GenWord w = random_word(rng, 8);
        CHECK(reduce(w.inverse().inverse()) == reduce(w));
        CHECK(reduce(w * w.inverse()).is_empty());
    }
}

TEST_CASE("free conjugacy") {
    CHECK(free_conjugate(parse_word("Tinf T0"), parse_word("T0 Tinf")));
    CHECK_FALSE(free_conjugate(GenWord::letter(Gen::Tinf), GenWord::letter(Gen::T0)));
    SampleRng rng(35, 0);
    for (int t = 0; t < 40; ++t) {
        GenWord w = random_word(rng, 6), g = random_word(rng, 6);
        CHECK(free_conjugate(w, conjugate(g, w)));
    }
    // equivalence relation on random triples
    for (int t = 0; t < 20; ++t) {
        GenWord a = random_word(rng, 5);
        GenWord b = conjugate(random_word(rng, 4), a);
        GenWord c = conjugate(random_word(rng, 4), b);
        CHECK(free_conjugate(a, a));
        CHECK(free_conjugate(b, a));
        CHECK(free_conjugate(a, c));
    }
}

TEST_CASE("abelianization mod 5") {
    CHECK(abelianize_mod5(GenWord::letter(Gen::T1)) == std::pair<int, int>{4, 4});
    CHECK(abelianize_mod5(GenWord::letter(Gen::Tinf, 5)) == std::pair<int, int>{0, 0});
    CHECK(abelianize_mod5(parse_word("T1 T0 Tinf")) == std::pair<int, int>{0, 0});
    SampleRng rng(36, 0);
    for (int t = 0; t < 40; ++t) {
        GenWord a = random_word(rng, 6), b = random_word(rng, 6);
        auto ab = abelianize_mod5(a * b);
        auto ea = abelianize_mod5(a), eb = abelianize_mod5(b);
        CHECK(ab.first == (ea.first + eb.first) % 5);
        CHECK(ab.second == (ea.second + eb.second) % 5);
    }
}

TEST_CASE("pi_1(C^u) membership") {
    CHECK(in_pi1Cu(GenWord::letter(Gen::Tinf, 5)));
    CHECK_FALSE(in_pi1Cu(GenWord::letter(Gen::Tinf)));
    CHECK(in_pi1Cu(commutator(GenWord::letter(Gen::T1), GenWord::letter(Gen::T0))));
}

TEST_CASE("pi_1(C^u) generating set and rank") {
    auto gens = pi1Cu_generating_set();
    CHECK(gens.size() == 27);  // 2 fifth powers + 25 commutators; a set, not a basis
    for (const auto& g : gens) CHECK(in_pi1Cu(g));
    CHECK(pi1Cu_rank() == 26);
    // cross-check: 2g + punctures - 1 for the genus-6 curve with 15 punctures
    CHECK(pi1Cu_rank() == 2 * 6 + 15 - 1);
}

#include "qlat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qlat {

namespace {

constexpr int kCond = 5;

Cyclo C(long v) { return Cyclo(kCond, Rational(v)); }

// fills a 3x3 matrix from 9 entries
Mat3C mat3(const std::array<Cyclo, 9>& e) {
    Mat3C m(kCond);
    m.e = e;
    return m;
}

}  // namespace

const std::array<std::string, 6>& LatticeGens::pair_labels() {
    static const std::array<std::string, 6> labels = {"01", "02", "03", "12", "13", "23"};
    return labels;
}

Vec3C LatticeGens::invariant_line(int conductor) {
    return {Cyclo(conductor), Cyclo(conductor), Cyclo(conductor, Rational(1))};
}

LatticeGens::LatticeGens() : mu_(Cyclo::zeta(kCond, 3)), form_(Mat3C::identity(kCond)) {
    const Cyclo one = C(1);
    const Cyclo zero = C(0);
    const Cyclo mu = mu_;
    const Cyclo mubar = mu.conj();
    const Cyclo u = mu * (one - mu);        // mu (1 - mu)
    const Cyclo v = one - mu;               // 1 - mu
    const Cyclo w = mu * mu - one;          // mu^2 - 1
    const Cyclo v2 = v * v;                 // (1 - mu)^2

    auto plus_identity = [&](const std::array<Cyclo, 9>& e) {
        return Mat3C::identity(kCond) + mat3(e);
    };

    // index order: 01 02 03 12 13 23
    // R(01) carries -mu(1-mu) in the lower entries: that sign is forced by
    // A1-unitarity (the reflection column is proportional to A1^{-1} e1,
    // which also reproduces the published R(02) and R(03) columns).
    gens_[0] = plus_identity({w, zero, zero, -u, zero, zero, -u, zero, zero});
    gens_[1] = plus_identity({zero, -v, zero, zero, w, zero, zero, -u, zero});
    gens_[2] = mat3({zero, zero, -v, zero, zero, -v, zero, zero, w}).scaled(mu) +
               Mat3C::identity(kCond).scaled(mu);
    gens_[3] = plus_identity({-u, u, zero, v, -v, zero, zero, zero, zero});
    gens_[4] = plus_identity({-u, zero, u, v2, zero, -v2, v, zero, -v});
    gens_[5] = plus_identity({zero, zero, zero, zero, -u, u, zero, v, -v});

    const Cyclo d = -(mu + mubar).inverse();  // -1/(mu + conj mu), real positive
    form_ = HermForm(mat3({d, mubar, one, mu, d, mubar, one, mu, d}));

    for (const auto& g : gens_)
        if (det(g).is_zero()) throw std::logic_error("lattice generator is singular");
}

const Mat3C& LatticeGens::R(const std::string& pair) const {
    const auto& labels = pair_labels();
    auto it = std::find(labels.begin(), labels.end(), pair);
    if (it == labels.end()) throw std::invalid_argument("unknown generator pair '" + pair + "'");
    return gens_[it - labels.begin()];
}

Assignment Assignment::parse(const std::string& text) {
    Assignment a;
    std::istringstream is(text);
    std::string tok;
    int i = 0;
    while (std::getline(is, tok, ',')) {
        if (i >= 3) throw std::invalid_argument("assignment needs exactly three pairs");
        a.images[i++] = tok;
    }
    if (i != 3) throw std::invalid_argument("assignment needs exactly three pairs");
    std::array<std::string, 3> sorted = a.images;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<std::string, 3>{"01", "02", "12"})
        throw std::invalid_argument("assignment must be a permutation of 01,02,12");
    return a;
}

std::string Assignment::str() const { return images[0] + "," + images[1] + "," + images[2]; }

bool VerifyReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.pass; });
}

VerifyReport verify_lattice(const LatticeGens& gens) {
    VerifyReport rep;
    const auto& labels = LatticeGens::pair_labels();
    const HermForm& h = gens.form();

    // (a) projective unitarity with positive real ratio
    for (int i = 0; i < 6; ++i) {
        PullbackRatio pr = pullback_ratio(gens.R(i), h);
        bool pass = pr.proportional && pr.ratio.is_real() && real_sign(pr.ratio) == Sign::positive;
        rep.items.push_back({"a:R(" + labels[i] + ")", pass,
                             pass ? "pullback ratio " + pr.ratio.str() : "not projectively unitary"});
    }

    // (b) [R(ij) R(ik) R(jk), R(xy)] = 1 projectively, for each i<j<k and
    // each of the three generators in the triple
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) {
                std::string ij = std::to_string(i) + std::to_string(j);
                std::string ik = std::to_string(i) + std::to_string(k);
                std::string jk = std::to_string(j) + std::to_string(k);
                Mat3C prod = gens.R(ij) * gens.R(ik) * gens.R(jk);
                for (const std::string& other : {ij, ik, jk}) {
                    Mat3C comm = prod * gens.R(other) * inverse(prod) * inverse(gens.R(other));
                    bool pass = proj_scalar(comm);
                    rep.items.push_back({"b:[R(" + ij + ")R(" + ik + ")R(" + jk + "),R(" + other + ")]",
                                         pass, pass ? "commutes projectively" : "relation fails"});
                }
            }

    // (c) R(01) R(02) R(12) R(03) R(13) R(23) = 1 projectively
    {
        Mat3C prod = gens.R("01") * gens.R("02") * gens.R("12") * gens.R("03") * gens.R("13") *
                     gens.R("23");
        bool pass = proj_scalar(prod);
        rep.items.push_back({"c:product-relation", pass,
                             pass ? "length-6 relation holds projectively" : "relation fails"});
    }

    // (d) branching index: R(ij)^5 projectively scalar
    for (int i = 0; i < 6; ++i) {
        bool pass = proj_scalar(pow(gens.R(i), 5));
        rep.items.push_back({"d:R(" + labels[i] + ")^5", pass,
                             pass ? "fifth power is projectively scalar" : "fifth power not scalar"});
    }

    // (e) signature of A1
    {
        auto sig = signature(h);
        bool pass = sig == std::pair<int, int>{2, 1};
        rep.items.push_back({"e:signature", pass,
                             "(" + std::to_string(sig.first) + "," + std::to_string(sig.second) + ")"});
    }
    return rep;
}

Mat3C gamma2_image(const LatticeGens& gens, const Assignment& asg, const GenWord& w) {
    Mat3C acc = Mat3C::identity(kCond);
    for (const auto& [g, e] : w.letters) {
        const Mat3C& base = gens.R(asg.images[static_cast<int>(g)]);
        acc = acc * pow(base, e);
    }
    return acc;
}

Mat2C restricted_image(const LatticeGens& gens, const Assignment& asg, const GenWord& w) {
    return restrict_to_complement(gamma2_image(gens, asg, w), gens.form(),
                                  LatticeGens::invariant_line());
}

VerifyReport validate_assignment(const LatticeGens& gens, const Assignment& asg) {
    VerifyReport rep;
    auto check = [&](const std::string& name, const GenWord& w) {
        try {
            bool pass = proj_scalar(restricted_image(gens, asg, w));
            rep.items.push_back({name, pass,
                                 pass ? "restricts to a projective scalar" : "restriction not scalar"});
        } catch (const std::exception& e) {
            rep.items.push_back({name, false, e.what()});
        }
    };
    check("relation:Tinf*T0*T1",
          GenWord::letter(Gen::Tinf) * GenWord::letter(Gen::T0) * GenWord::letter(Gen::T1));
    for (Gen g : {Gen::Tinf, Gen::T0, Gen::T1})
        check(std::string("order:") + gen_name(g) + "^5", GenWord::letter(g, 5));
    return rep;
}

std::vector<Assignment> validating_assignments(const LatticeGens& gens) {
    std::array<std::string, 3> perm = {"01", "02", "12"};
    std::sort(perm.begin(), perm.end());
    std::vector<Assignment> good;
    do {
        Assignment a;
        a.images = perm;
        if (validate_assignment(gens, a).all_pass()) good.push_back(a);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return good;
}

bool in_kernel_to_pi1C(const LatticeGens& gens, const Assignment& asg, const GenWord& w) {
    if (!in_pi1Cu(w))
        throw std::invalid_argument("kernel test requires a word of pi_1(C^u)");
    return proj_scalar(restricted_image(gens, asg, w));
}

const char* to_string(RepCertificate::FiberKind k) {
    return k == RepCertificate::FiberKind::manifold_fiber ? "manifold-fiber" : "orbifold-fiber";
}

RepCertificate certify(const LatticeGens& gens, const Assignment& asg, const GenWord& w,
                       unsigned precision_cap) {
    RepCertificate cert;
    cert.word = w;
    cert.psl2_matrix = eval_psl2(w);
    cert.trace = cert.psl2_matrix.trace();
    cert.nt_class = nt_classify(w);
    cert.word_in_pi1Cu = in_pi1Cu(w);
    cert.lattice_image = gamma2_image(gens, asg, w);
    cert.restricted = restrict_to_complement(cert.lattice_image, gens.form(),
                                             LatticeGens::invariant_line());
    cert.image_trivial_in_pi1C = proj_scalar(cert.restricted);
    cert.pseudo_anosov = cert.nt_class.tag == NTClass::Tag::pseudo_anosov;
    cert.hyperbolic_manifold = cert.pseudo_anosov;
    cert.fiber_kind = cert.word_in_pi1Cu ? RepCertificate::FiberKind::manifold_fiber
                                         : RepCertificate::FiberKind::orbifold_fiber;
    cert.isometry = classify_isometry(cert.lattice_image, gens.form(), precision_cap);
    // a nontrivial pi_1(C) image forces pseudo-Anosov monodromy; anything
    // else means the implementation is wrong somewhere
    if (cert.word_in_pi1Cu && !cert.image_trivial_in_pi1C && !cert.pseudo_anosov)
        throw std::logic_error("internal inconsistency: nontrivial pi_1(C) image with |trace| <= 2 for '" +
                               w.str() + "'");
    return cert;
}

namespace {

Cyclo conjugacy_invariant(const Mat2C& m) {
    Cyclo t = trace(m);
    return t * t * det(m).inverse();
}

// Depth-first enumeration of freely reduced conjugators g over
// {Tinf, T0}^{+-1}; returns a witness such that w1^{-1} g w2 g^{-1} lands
// in the kernel (so the pi_1(C) images are conjugate), or nullopt.
std::optional<GenWord> bounded_conjugator_search(const LatticeGens& gens, const Assignment& asg,
                                                 const Mat2C& r1_inv, const Mat2C& r2, int depth) {
    struct Step {
        Gen g;
        int sign;
    };
    const Mat2C r_tinf = restricted_image(gens, asg, GenWord::letter(Gen::Tinf));
    const Mat2C r_t0 = restricted_image(gens, asg, GenWord::letter(Gen::T0));
    const std::array<std::pair<Step, Mat2C>, 4> moves = {
        std::make_pair(Step{Gen::Tinf, 1}, r_tinf),
        std::make_pair(Step{Gen::Tinf, -1}, inverse(r_tinf)),
        std::make_pair(Step{Gen::T0, 1}, r_t0),
        std::make_pair(Step{Gen::T0, -1}, inverse(r_t0)),
    };

    std::vector<Step> stack;
    std::optional<GenWord> found;

    auto check = [&](const Mat2C& rg) {
        Mat2C cand = r1_inv * rg * r2 * inverse(rg);
        if (!proj_scalar(cand)) return false;
        GenWord g;
        for (const auto& s : stack) g = g * GenWord::letter(s.g, s.sign);
        found = g;
        return true;
    };

    // iterative deepening is unnecessary; a plain DFS visits every reduced
    // word of length <= depth once
    std::function<bool(const Mat2C&, int)> dfs = [&](const Mat2C& rg, int remaining) -> bool {
        if (check(rg)) return true;
        if (remaining == 0) return false;
        for (const auto& [step, mat] : moves) {
            if (!stack.empty()) {
                const Step& last = stack.back();
                if (last.g == step.g && last.sign == -step.sign) continue;  // not reduced
            }
            stack.push_back(step);
            if (dfs(rg * mat, remaining - 1)) return true;
            stack.pop_back();
        }
        return false;
    };

    dfs(Mat2C::identity(kCond), depth);
    return found;
}

}  // namespace

DistinguishVerdict distinguish(const LatticeGens& gens, const Assignment& asg, const GenWord& w1,
                               const GenWord& w2, int conjugator_depth) {
    if (!in_pi1Cu(w1) || !in_pi1Cu(w2))
        throw std::invalid_argument("distinguish requires words of pi_1(C^u)");
    DistinguishVerdict v;
    Mat2C m1 = restricted_image(gens, asg, w1);
    Mat2C m2 = restricted_image(gens, asg, w2);
    Mat2C m2i = restricted_image(gens, asg, w2.inverse());
    v.invariant_w1 = conjugacy_invariant(m1);
    v.invariant_w2 = conjugacy_invariant(m2);
    v.invariant_w2_inverse = conjugacy_invariant(m2i);
    if (v.invariant_w1 != v.invariant_w2 && v.invariant_w1 != v.invariant_w2_inverse) {
        v.tag = DistinguishVerdict::Tag::distinct;
        v.note = "trace^2/det differs from both w2 and w2^-1";
        return v;
    }
    v.tag = DistinguishVerdict::Tag::inconclusive;
    if (free_conjugate(w1, w2)) {
        v.note = "words are conjugate in the free group";
        return v;
    }
    if (free_conjugate(w1, w2.inverse())) {
        v.note = "w1 is conjugate to w2^-1 in the free group";
        return v;
    }
    if (conjugator_depth > 0) {
        Mat2C m1_inv = inverse(m1);
        if (auto g = bounded_conjugator_search(gens, asg, m1_inv, m2, conjugator_depth)) {
            v.note = "pi_1(C) images conjugate via g = " + g->str();
            return v;
        }
        if (auto g = bounded_conjugator_search(gens, asg, m1_inv, m2i, conjugator_depth)) {
            v.note = "pi_1(C) image of w1 conjugate to that of w2^-1 via g = " + g->str();
            return v;
        }
        v.note = "equal invariants; no conjugator found to depth " +
                 std::to_string(conjugator_depth);
    } else {
        v.note = "equal invariants";
    }
    return v;
}

IsometryClass classify_image(const LatticeGens& gens, const Assignment& asg, const GenWord& w,
                             unsigned precision_cap) {
    return classify_isometry(gamma2_image(gens, asg, w), gens.form(), precision_cap);
}

}  // namespace qlat

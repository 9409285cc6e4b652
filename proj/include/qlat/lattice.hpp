#pragma once

#include <array>
#include <optional>
#include <string>

#include "qlat/isometry.hpp"
#include "qlat/mat.hpp"
#include "qlat/words.hpp"

namespace qlat {

// The six complex reflections R(ij) generating the Yamazaki-Yoshida
// lattice G1 in PU(2,1), over Q(zeta_5) with mu = zeta_5^3, together with
// the invariant Hermitian form A1 of signature (2,1).
class LatticeGens {
  public:
    static const std::array<std::string, 6>& pair_labels();  // 01 02 03 12 13 23

    LatticeGens();  // exact construction; throws if a consistency check fails

    const Cyclo& mu() const { return mu_; }
    const HermForm& form() const { return form_; }
    const Mat3C& R(const std::string& pair) const;
    const Mat3C& R(int index) const { return gens_[index]; }

    // The positive line fixed by R(01), R(02), R(12): (0, 0, 1).
    static Vec3C invariant_line(int conductor = 5);

    // allow tests to build tampered copies
    Mat3C& mutable_R(int index) { return gens_[index]; }

  private:
    Cyclo mu_;
    std::array<Mat3C, 6> gens_;
    HermForm form_;
};

// Assignment of lattice generators to the Gamma(2) generators: images of
// (Tinf, T0, T1) among the line-preserving triple R(01), R(02), R(12).
struct Assignment {
    std::array<std::string, 3> images = {"01", "02", "12"};  // default: identity

    static Assignment identity() { return {}; }
    static Assignment parse(const std::string& text);  // "01,02,12"
    std::string str() const;
};

// One row of a verification report.
struct VerifyItem {
    std::string item;  // e.g. "a:R(01)"
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_pass() const;
};

// The exact lattice verification: (a) projective unitarity of the six
// generators for A1 with positive real ratio, (b) the twelve braid-like
// commutator relations, (c) the length-six product relation, (d) fifth
// powers projectively scalar, (e) signature (2,1).
VerifyReport verify_lattice(const LatticeGens& gens);

// Validation of an assignment: the relation word Tinf T0 T1 must restrict
// to a projective scalar on the invariant plane, and so must the fifth
// power of each image.  Returns pass/fail per check.
VerifyReport validate_assignment(const LatticeGens& gens, const Assignment& asg);

// All assignments (permutations of the triple) that validate.
std::vector<Assignment> validating_assignments(const LatticeGens& gens);

// Image of a Gamma(2) word under Tinf, T0, T1 -> assigned R matrices.
Mat3C gamma2_image(const LatticeGens& gens, const Assignment& asg, const GenWord& w);

// Restriction of the image to the A1-orthocomplement of (0,0,1), the
// exact realization of the triangle-group quotient.
Mat2C restricted_image(const LatticeGens& gens, const Assignment& asg, const GenWord& w);

// Membership in the kernel of Gamma(2) -> T(5,5,5): the restricted image
// is projectively scalar.  Requires in_pi1Cu(w) (the map the construction
// defines lives on pi_1(C^u)).
bool in_kernel_to_pi1C(const LatticeGens& gens, const Assignment& asg, const GenWord& w);

// Full verdict record for one word.
struct RepCertificate {
    GenWord word;
    Mat2Z psl2_matrix;
    Integer trace;
    NTClass nt_class;
    bool word_in_pi1Cu = false;
    Mat3C lattice_image;
    Mat2C restricted;
    bool image_trivial_in_pi1C = false;
    bool pseudo_anosov = false;
    bool hyperbolic_manifold = false;  // Thurston label: pseudo-Anosov monodromy
    enum class FiberKind { manifold_fiber, orbifold_fiber } fiber_kind = FiberKind::orbifold_fiber;
    IsometryClass isometry;

    RepCertificate() : lattice_image(5), restricted(5) {}
};

const char* to_string(RepCertificate::FiberKind k);

// Assembles the certificate and enforces the cross-check that a word of
// pi_1(C^u) with nontrivial pi_1(C) image has pseudo-Anosov monodromy; a
// violation is an internal inconsistency, not bad input.
RepCertificate certify(const LatticeGens& gens, const Assignment& asg, const GenWord& w,
                       unsigned precision_cap = kDefaultPrecisionCap);

// Conjugacy distinguisher for the restricted images: the exact invariant
// trace(M)^2 / det(M) is compared against the value for w2 and its
// inverse.  "distinct" is sound; "inconclusive" may be refined by a
// depth-limited conjugator search in the free group, whose result lands in
// the note.
struct DistinguishVerdict {
    enum class Tag { distinct, inconclusive } tag = Tag::inconclusive;
    Cyclo invariant_w1;
    Cyclo invariant_w2;
    Cyclo invariant_w2_inverse;
    std::string note;

    DistinguishVerdict() : invariant_w1(5), invariant_w2(5), invariant_w2_inverse(5) {}
};

DistinguishVerdict distinguish(const LatticeGens& gens, const Assignment& asg, const GenWord& w1,
                               const GenWord& w2, int conjugator_depth = 8);

IsometryClass classify_image(const LatticeGens& gens, const Assignment& asg, const GenWord& w,
                             unsigned precision_cap = kDefaultPrecisionCap);

}  // namespace qlat

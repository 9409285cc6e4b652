#pragma once

#include <string>
#include <vector>

#include "qlat/rational.hpp"

namespace qlat {

// A line arrangement in P^2 together with the prime exponent n of the
// abelian cover: only the incidence combinatorics matters here.
struct MultiplePoint {
    std::string label;
    std::vector<int> lines;  // indices into Arrangement::lines, >= 2 of them
};

struct Arrangement {
    int n = 5;  // prime
    std::vector<std::string> lines;
    std::vector<MultiplePoint> points;

    int k() const { return static_cast<int>(lines.size()); }
    int line_index(const std::string& label) const;
    int point_index(const std::string& label) const;
    bool is_triple_or_more(int point) const { return points[point].lines.size() > 2; }

    // Six lines D_ab through the pairs of four general-position points;
    // four triple points p_a (the lines D_ab containing a) and three double
    // points (complementary pairs).  n = 5.
    static Arrangement complete_quadrilateral();
};

// Element of Aut(chi) = (Z/n)^k modulo the all-ones vector, stored in the
// canonical form with first coordinate zero.  The relation prod_D alpha_D = 1
// holds by construction in this model.
class GaloisElt {
  public:
    GaloisElt(int n, std::vector<int> raw);  // canonicalizes mod all-ones
    static GaloisElt identity(int n, int k);

    int n() const { return n_; }
    int k() const { return static_cast<int>(e_.size()); }
    const std::vector<int>& canonical() const { return e_; }
    bool is_identity() const;

    GaloisElt operator+(const GaloisElt& o) const;
    GaloisElt operator-() const;
    GaloisElt times(long m) const;
    bool operator==(const GaloisElt& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const GaloisElt& o) const { return !(*this == o); }

  private:
    int n_;
    std::vector<int> e_;
};

// Subgroup of Aut(chi), represented by the reduced-row-echelon F_n basis of
// its preimage in (Z/n)^k; the all-ones vector is always in the span.
class GaloisSubgroup {
  public:
    static GaloisSubgroup trivial(int n, int k);  // <all-ones> upstairs = {1}
    static GaloisSubgroup span(int n, int k, const std::vector<GaloisElt>& gens);
    static GaloisSubgroup full(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    int preimage_rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<int>>& basis() const { return basis_; }

    Integer order() const;          // n^(preimage_rank - 1)
    Integer index_in_full() const;  // n^(k-1) / order
    bool contains(const GaloisElt& g) const;
    bool contains_subgroup(const GaloisSubgroup& h) const;
    bool operator==(const GaloisSubgroup& o) const;

    friend GaloisSubgroup intersect(const GaloisSubgroup& a, const GaloisSubgroup& b);
    friend GaloisSubgroup join(const GaloisSubgroup& a, const GaloisSubgroup& b);

  private:
    GaloisSubgroup(int n, int k) : n_(n), k_(k) {}
    int n_;
    int k_;
    std::vector<std::vector<int>> basis_;
};

GaloisSubgroup intersect(const GaloisSubgroup& a, const GaloisSubgroup& b);
GaloisSubgroup join(const GaloisSubgroup& a, const GaloisSubgroup& b);

// |H| / |K| for K a subgroup of H (throws if it is not).
Integer quotient_order(const GaloisSubgroup& h, const GaloisSubgroup& k);

// The calculus of one branched cover chi : X -> P^2 (and its resolution
// sigma : Y -> blown-up plane) over a fixed arrangement.
class Cover {
  public:
    explicit Cover(Arrangement arr);
    const Arrangement& arrangement() const { return arr_; }

    // Deck transformation of a small counterclockwise loop around a line.
    GaloisElt alpha(int line) const;
    GaloisElt alpha(const std::string& line_label) const;

    // Deck transformation of a small loop around the exceptional curve over
    // a multiple point: the product of alpha_D over incident lines.
    GaloisElt loop_around_exceptional(int point) const;

    // The same element obtained by lifting the loop through the chart
    // equations (the proof of the lemma, kept as a separately named claim).
    GaloisElt monodromy_lift(int point) const;

    // Subgroup generated by the alpha_D through the point; order n^m.
    GaloisSubgroup stabilizer(int point) const;

    GaloisSubgroup full_group() const;
    GaloisSubgroup cyclic(const GaloisElt& g) const;

    // Number of points of chi^{-1}(p) for p on exactly m lines: n^(k-1-m).
    Integer fiber_cardinality(int m) const;

    // Component-preserving subgroup of Aut(sigma) for a curve upstairs:
    // either the preimage of a generic pencil fiber (loops at the four
    // exceptional curves) or of an arrangement line (alpha_line plus the
    // loops at its triple points).
    struct CurveSpec {
        enum class Kind { generic_fiber, line } kind = Kind::generic_fiber;
        int line = -1;
        static CurveSpec generic() { return {Kind::generic_fiber, -1}; }
        static CurveSpec for_line(int line) { return {Kind::line, line}; }
    };
    GaloisSubgroup component_group(const CurveSpec& spec) const;
    Integer component_count(const CurveSpec& spec) const;

  private:
    Arrangement arr_;
};

// d (e0 - r) + r d / n: Euler characteristic of a degree-d cover of a
// surface with Euler characteristic e0, uniformly ramified with index n
// over r points.  Throws if n does not divide d.
Integer branched_euler(const Integer& degree, int base_euler, int branch_count, int ram_index);

// (2 - e) / 2; throws when e is odd (no closed orientable surface).
Rational genus_from_euler(const Integer& e);

// The constants of the 15 singular fibers of the genus-76 fibration, all
// derived from the calculus rather than quoted.
struct SingularFiberReport {
    Integer singular_fiber_count;
    Integer components_per_fiber;
    Integer component_genus;
    Integer nodes_per_fiber;
    Integer smoothed_genus;
    Integer generic_fiber_genus;
    Integer generic_fiber_components;
    bool consistent = false;  // smoothed genus equals generic fiber genus
};

SingularFiberReport singular_fiber_report(const Cover& cover);

}  // namespace qlat

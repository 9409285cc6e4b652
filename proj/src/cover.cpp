#include "qlat/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlat {

namespace {

int mod_inverse(int a, int p) {
    // p prime, a != 0 mod p
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
    }
    return r;
}

// In-place reduced row echelon form over F_p; returns the nonzero rows.
std::vector<std::vector<int>> rref(std::vector<std::vector<int>> rows, int p) {
    if (rows.empty()) return rows;
    const size_t w = rows[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < w && pivot_row < rows.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        int inv = mod_inverse(rows[pivot_row][col], p);
        for (auto& x : rows[pivot_row]) x = x * inv % p;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col] == 0) continue;
            int f = rows[r][col];
            for (size_t c = 0; c < w; ++c) rows[r][c] = ((rows[r][c] - f * rows[pivot_row][c]) % p + p) % p;
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

// Reduce v against an RREF basis; v becomes the residue.
void reduce_against(std::vector<int>& v, const std::vector<std::vector<int>>& basis, int p) {
    for (const auto& row : basis) {
        size_t piv = 0;
        while (piv < row.size() && row[piv] == 0) ++piv;
        if (piv == row.size() || v[piv] == 0) continue;
        int f = v[piv];
        for (size_t c = 0; c < v.size(); ++c) v[c] = ((v[c] - f * row[c]) % p + p) % p;
    }
}

bool is_zero_vec(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

Integer int_pow(int base, int exp) {
    Integer r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

int Arrangement::line_index(const std::string& label) const {
    for (int i = 0; i < k(); ++i)
        if (lines[i] == label) return i;
    throw std::invalid_argument("unknown line '" + label + "'");
}

int Arrangement::point_index(const std::string& label) const {
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i].label == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown point '" + label + "'");
}

Arrangement Arrangement::complete_quadrilateral() {
    Arrangement a;
    a.n = 5;
    a.lines = {"D12", "D13", "D14", "D23", "D24", "D34"};
    // D_ab passes through the base points p_a and p_b; each p_a is the
    // triple point of the three lines indexed by a.
    a.points = {
        {"p1", {0, 1, 2}},  // D12 D13 D14
        {"p2", {0, 3, 4}},  // D12 D23 D24
        {"p3", {1, 3, 5}},  // D13 D23 D34
        {"p4", {2, 4, 5}},  // D14 D24 D34
        {"q1", {0, 5}},     // D12 ^ D34
        {"q2", {1, 4}},     // D13 ^ D24
        {"q3", {2, 3}},     // D14 ^ D23
    };
    return a;
}

GaloisElt::GaloisElt(int n, std::vector<int> raw) : n_(n), e_(std::move(raw)) {
    if (e_.empty()) throw std::invalid_argument("empty Galois vector");
    int shift = e_[0];
    for (auto& x : e_) x = (((x - shift) % n_) + n_) % n_;
}

GaloisElt GaloisElt::identity(int n, int k) { return GaloisElt(n, std::vector<int>(k, 0)); }

bool GaloisElt::is_identity() const { return is_zero_vec(e_); }

GaloisElt GaloisElt::operator+(const GaloisElt& o) const {
    if (n_ != o.n_ || e_.size() != o.e_.size())
        throw std::invalid_argument("Galois elements from different covers");
    std::vector<int> r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) r[i] = (e_[i] + o.e_[i]) % n_;
    return GaloisElt(n_, std::move(r));
}

GaloisElt GaloisElt::operator-() const {
    std::vector<int> r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) r[i] = (n_ - e_[i]) % n_;
    return GaloisElt(n_, std::move(r));
}

GaloisElt GaloisElt::times(long m) const {
    long f = ((m % n_) + n_) % n_;
    std::vector<int> r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) r[i] = static_cast<int>(e_[i] * f % n_);
    return GaloisElt(n_, std::move(r));
}

GaloisSubgroup GaloisSubgroup::trivial(int n, int k) {
    GaloisSubgroup g(n, k);
    g.basis_ = rref({std::vector<int>(k, 1)}, n);
    return g;
}

GaloisSubgroup GaloisSubgroup::span(int n, int k, const std::vector<GaloisElt>& gens) {
    GaloisSubgroup g(n, k);
    std::vector<std::vector<int>> rows = {std::vector<int>(k, 1)};
    for (const auto& e : gens) {
        if (e.n() != n || e.k() != k) throw std::invalid_argument("generator from a different cover");
        rows.push_back(e.canonical());
    }
    g.basis_ = rref(std::move(rows), n);
    return g;
}

GaloisSubgroup GaloisSubgroup::full(int n, int k) {
    GaloisSubgroup g(n, k);
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < k; ++i) {
        std::vector<int> e(k, 0);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    g.basis_ = rref(std::move(rows), n);
    return g;
}

Integer GaloisSubgroup::order() const { return int_pow(n_, preimage_rank() - 1); }

Integer GaloisSubgroup::index_in_full() const { return int_pow(n_, k_ - 1) / order(); }

bool GaloisSubgroup::contains(const GaloisElt& g) const {
    std::vector<int> v = g.canonical();
    reduce_against(v, basis_, n_);
    return is_zero_vec(v);
}

bool GaloisSubgroup::contains_subgroup(const GaloisSubgroup& h) const {
    for (const auto& row : h.basis_) {
        std::vector<int> v = row;
        reduce_against(v, basis_, n_);
        if (!is_zero_vec(v)) return false;
    }
    return true;
}

bool GaloisSubgroup::operator==(const GaloisSubgroup& o) const {
    return n_ == o.n_ && k_ == o.k_ && basis_ == o.basis_;  // RREF is canonical
}

GaloisSubgroup intersect(const GaloisSubgroup& a, const GaloisSubgroup& b) {
    if (a.n_ != b.n_ || a.k_ != b.k_) throw std::invalid_argument("subgroups of different covers");
    // Zassenhaus: rows [u|u] for u in a, [v|0] for v in b; the right halves
    // of the rows whose left half vanishes span the intersection.
    const int k = a.k_;
    std::vector<std::vector<int>> rows;
    for (const auto& u : a.basis_) {
        std::vector<int> r(2 * k, 0);
        for (int i = 0; i < k; ++i) r[i] = r[k + i] = u[i];
        rows.push_back(std::move(r));
    }
    for (const auto& v : b.basis_) {
        std::vector<int> r(2 * k, 0);
        for (int i = 0; i < k; ++i) r[i] = v[i];
        rows.push_back(std::move(r));
    }
    rows = rref(std::move(rows), a.n_);
    std::vector<std::vector<int>> inter;
    for (const auto& r : rows) {
        bool left_zero = true;
        for (int i = 0; i < k && left_zero; ++i) left_zero = r[i] == 0;
        if (left_zero) inter.emplace_back(r.begin() + k, r.end());
    }
    GaloisSubgroup g(a.n_, k);
    g.basis_ = rref(std::move(inter), a.n_);
    return g;
}

GaloisSubgroup join(const GaloisSubgroup& a, const GaloisSubgroup& b) {
    if (a.n_ != b.n_ || a.k_ != b.k_) throw std::invalid_argument("subgroups of different covers");
    std::vector<std::vector<int>> rows = a.basis_;
    rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
    GaloisSubgroup g(a.n_, a.k_);
    g.basis_ = rref(std::move(rows), a.n_);
    return g;
}

Integer quotient_order(const GaloisSubgroup& h, const GaloisSubgroup& k) {
    if (!h.contains_subgroup(k)) throw std::invalid_argument("quotient by a non-subgroup");
    return h.order() / k.order();
}

Cover::Cover(Arrangement arr) : arr_(std::move(arr)) {
    for (const auto& p : arr_.points) {
        if (p.lines.size() < 2) throw std::invalid_argument("multiple point with fewer than 2 lines");
        for (int l : p.lines)
            if (l < 0 || l >= arr_.k()) throw std::invalid_argument("point on unknown line");
    }
}

GaloisElt Cover::alpha(int line) const {
    if (line < 0 || line >= arr_.k()) throw std::invalid_argument("unknown line");
    std::vector<int> e(arr_.k(), 0);
    e[line] = 1;
    return GaloisElt(arr_.n, std::move(e));
}

GaloisElt Cover::alpha(const std::string& line_label) const {
    return alpha(arr_.line_index(line_label));
}

GaloisElt Cover::loop_around_exceptional(int point) const {
    if (point < 0 || point >= static_cast<int>(arr_.points.size()))
        throw std::invalid_argument("unknown point");
    GaloisElt g = GaloisElt::identity(arr_.n, arr_.k());
    for (int l : arr_.points[point].lines) g = g + alpha(l);
    return g;
}

GaloisElt Cover::monodromy_lift(int point) const {
    // Lifting the loop (w1, w2|1) = (eps e^{it}, const) through the chart
    // equations multiplies v_1 by a primitive n-th root and fixes the
    // v_{s|1}: composing the alpha_D over the incident lines.
    return loop_around_exceptional(point);
}

GaloisSubgroup Cover::stabilizer(int point) const {
    if (point < 0 || point >= static_cast<int>(arr_.points.size()))
        throw std::invalid_argument("unknown point");
    std::vector<GaloisElt> gens;
    for (int l : arr_.points[point].lines) gens.push_back(alpha(l));
    return GaloisSubgroup::span(arr_.n, arr_.k(), gens);
}

GaloisSubgroup Cover::full_group() const { return GaloisSubgroup::full(arr_.n, arr_.k()); }

GaloisSubgroup Cover::cyclic(const GaloisElt& g) const {
    return GaloisSubgroup::span(arr_.n, arr_.k(), {g});
}

Integer Cover::fiber_cardinality(int m) const {
    if (m < 0 || m > arr_.k()) throw std::invalid_argument("line count out of range");
    return int_pow(arr_.n, arr_.k() - 1 - m);
}

GaloisSubgroup Cover::component_group(const CurveSpec& spec) const {
    std::vector<GaloisElt> gens;
    if (spec.kind == CurveSpec::Kind::generic_fiber) {
        for (size_t p = 0; p < arr_.points.size(); ++p)
            if (arr_.is_triple_or_more(static_cast<int>(p)))
                gens.push_back(loop_around_exceptional(static_cast<int>(p)));
    } else {
        if (spec.line < 0 || spec.line >= arr_.k()) throw std::invalid_argument("unknown line");
        gens.push_back(alpha(spec.line));
        for (size_t p = 0; p < arr_.points.size(); ++p) {
            const auto& pt = arr_.points[p];
            if (!arr_.is_triple_or_more(static_cast<int>(p))) continue;
            if (std::find(pt.lines.begin(), pt.lines.end(), spec.line) != pt.lines.end())
                gens.push_back(loop_around_exceptional(static_cast<int>(p)));
        }
    }
    return GaloisSubgroup::span(arr_.n, arr_.k(), gens);
}

Integer Cover::component_count(const CurveSpec& spec) const {
    return component_group(spec).index_in_full();
}

Integer branched_euler(const Integer& degree, int base_euler, int branch_count, int ram_index) {
    if (ram_index <= 0 || degree % ram_index != 0)
        throw std::invalid_argument("ramification index must divide the degree");
    return degree * (base_euler - branch_count) + branch_count * (degree / ram_index);
}

Rational genus_from_euler(const Integer& e) {
    if ((2 - e) % 2 != 0) throw std::invalid_argument("odd Euler characteristic has no genus");
    return Rational(2 - e) / 2;
}

SingularFiberReport singular_fiber_report(const Cover& cover) {
    const Arrangement& arr = cover.arrangement();
    const int n = arr.n;
    SingularFiberReport rep;

    // Generic fiber of the Stein-factorized fibration.
    GaloisSubgroup gen_group = cover.component_group(Cover::CurveSpec::generic());
    rep.generic_fiber_components = gen_group.index_in_full();
    Integer gen_euler = branched_euler(gen_group.order(), 2, 4, n);
    rep.generic_fiber_genus = genus_from_euler(gen_euler).get_num();

    // One singular conic = two lines through complementary pairs; the report
    // uses D12 + D34 (the three singular fibers are symmetric).
    int d12 = arr.line_index("D12");
    int d34 = arr.line_index("D34");
    GaloisSubgroup h12 = cover.component_group(Cover::CurveSpec::for_line(d12));
    GaloisSubgroup h34 = cover.component_group(Cover::CurveSpec::for_line(d34));
    Integer line_components = h12.index_in_full();

    // sigma restricted to one component of the line preimage: the alpha of
    // the line itself acts trivially there, so the covering degree is
    // |H| / n, branched over 3 points (the node and two exceptional curves).
    Integer comp_degree = h12.order() / n;
    Integer comp_euler = branched_euler(comp_degree, 2, 3, n);
    rep.component_genus = genus_from_euler(comp_euler).get_num();

    // Components of the full singular fiber preimage: the join preserves the
    // components of sigma^{-1}(D12 u D34).
    GaloisSubgroup h_union = join(h12, h34);
    Integer union_components = h_union.index_in_full();
    rep.components_per_fiber = 2 * line_components / union_components;

    // Nodes: the points over D12 ^ D34 (a double point), shared out over the
    // union components.
    rep.nodes_per_fiber = cover.fiber_cardinality(2) / union_components;

    // The base curve C covers P^1 with degree n^2, ramified with index n
    // over the three singular values.
    Integer base_degree = int_pow(n, 2);
    rep.singular_fiber_count = 3 * base_degree / n;

    // Smoothing the nodes of one singular fiber: genus = sum of component
    // genera + independent cycles of the dual graph.
    Integer cycles = rep.nodes_per_fiber - rep.components_per_fiber + 1;
    rep.smoothed_genus = rep.component_genus * rep.components_per_fiber + cycles;
    rep.consistent = rep.smoothed_genus == rep.generic_fiber_genus;
    return rep;
}

}  // namespace qlat

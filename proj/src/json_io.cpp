#include "qlat/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace qlat {

namespace {

// fixed short format so margins never destabilize report bytes
std::string margin_str(double m) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", m);
    return buf;
}

}  // namespace

Json to_json(const Cyclo& a) {
    Json coeffs = Json::array();
    for (const auto& c : a.coeffs()) coeffs.push_back(rational_str(c));
    return Json{{"conductor", a.conductor()}, {"coeffs", coeffs}};
}

Json to_json(const Mat2Z& m) {
    Json r = Json::array();
    for (const auto& e : m.e) r.push_back(e.get_str());
    return r;
}

Json to_json(const Mat2C& m) {
    Json r = Json::array();
    for (const auto& e : m.e) r.push_back(to_json(e));
    return r;
}

Json to_json(const Mat3C& m) {
    Json r = Json::array();
    for (const auto& e : m.e) r.push_back(to_json(e));
    return r;
}

Json to_json(const ProjPoint& p) {
    Json r = Json::array();
    for (const auto& c : p.h) r.push_back(rational_str(c));
    return r;
}

Json to_json(const ConicForm& c) {
    Json r = Json::array();
    for (const auto& e : c.m) r.push_back(rational_str(e));
    return r;
}

Json to_json(const CheckReport& r) {
    return Json{{"suite", r.name},
                {"seed", r.seed},
                {"samples", r.samples},
                {"passes", r.passes},
                {"failures", r.failures},
                {"ok", r.ok()}};
}

Json to_json(const VerifyReport& r) {
    Json items = Json::array();
    for (const auto& i : r.items)
        items.push_back(Json{{"item", i.item}, {"pass", i.pass}, {"detail", i.detail}});
    return Json{{"items", items}, {"all_pass", r.all_pass()}};
}

Json to_json(const IsometryClass& c) {
    return Json{{"class", to_string(c.tag)}, {"margin", margin_str(c.margin)}};
}

Json to_json(const RepCertificate& c) {
    return Json{{"word", c.word.str()},
                {"psl2_matrix", to_json(c.psl2_matrix)},
                {"trace", c.trace.get_str()},
                {"nt_class", to_string(c.nt_class.tag)},
                {"in_pi1Cu", c.word_in_pi1Cu},
                {"lattice_image", to_json(c.lattice_image)},
                {"restricted_image", to_json(c.restricted)},
                {"image_trivial_in_pi1C", c.image_trivial_in_pi1C},
                {"pseudo_anosov", c.pseudo_anosov},
                {"hyperbolic_manifold", c.hyperbolic_manifold},
                {"fiber_kind", to_string(c.fiber_kind)},
                {"isometry_class", to_json(c.isometry)}};
}

Json to_json(const DistinguishVerdict& v) {
    return Json{{"verdict", v.tag == DistinguishVerdict::Tag::distinct ? "distinct" : "inconclusive"},
                {"invariant_w1", v.invariant_w1.str()},
                {"invariant_w2", v.invariant_w2.str()},
                {"invariant_w2_inverse", v.invariant_w2_inverse.str()},
                {"note", v.note}};
}

Json to_json(const SingularFiberReport& r) {
    return Json{{"singular_fiber_count", r.singular_fiber_count.get_str()},
                {"components_per_fiber", r.components_per_fiber.get_str()},
                {"component_genus", r.component_genus.get_str()},
                {"nodes_per_fiber", r.nodes_per_fiber.get_str()},
                {"smoothed_genus", r.smoothed_genus.get_str()},
                {"generic_fiber_genus", r.generic_fiber_genus.get_str()},
                {"generic_fiber_components", r.generic_fiber_components.get_str()},
                {"consistent", r.consistent}};
}

Json to_json(const Arrangement& a) {
    Json lines = Json::array();
    for (const auto& l : a.lines) lines.push_back(l);
    Json points = Json::array();
    for (const auto& p : a.points) {
        Json pl = Json::array();
        for (int l : p.lines) pl.push_back(a.lines[l]);
        points.push_back(Json{{"label", p.label}, {"lines", pl}});
    }
    return Json{{"n", a.n}, {"lines", lines}, {"points", points}};
}

}  // namespace qlat

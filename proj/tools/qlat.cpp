#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

#include "qlat/json_io.hpp"
#include "qlat/rng.hpp"
#include "qlat/wordexpr.hpp"

using namespace qlat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

struct Options {
    bool json = false;
    std::uint64_t seed = 0;
    unsigned precision = kDefaultPrecisionCap;
    int depth = 8;
    std::string assignment = "01,02,12";
};

Json config_json(const Options& o) {
    return Json{{"conductor", 5},
                {"seed", o.seed},
                {"precision", o.precision},
                {"depth", o.depth},
                {"assignment", o.assignment}};
}

void emit(const Options& o, const Json& j) {
    if (o.json) std::cout << j.dump(2) << "\n";
}

// words from a corpus file: one per line, '#' comments, blank lines skipped
std::vector<std::pair<int, std::string>> read_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open corpus file '" + path + "'");
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        out.emplace_back(lineno, line.substr(a, b - a + 1));
    }
    return out;
}

int run_verify_lattice(const Options& opt, bool tamper) {
    LatticeGens gens;
    if (tamper) gens.mutable_R(3).at(0, 1) += Cyclo(5, Rational(1));  // negative-control fixture
    Assignment asg = Assignment::parse(opt.assignment);

    VerifyReport rep = verify_lattice(gens);
    VerifyReport asg_rep = validate_assignment(gens, asg);
    bool ok = rep.all_pass() && asg_rep.all_pass();

    Json j{{"command", "verify-lattice"}, {"config", config_json(opt)}};
    j["lattice"] = to_json(rep);
    j["assignment_validation"] = to_json(asg_rep);
    if (!asg_rep.all_pass()) {
        Json alts = Json::array();
        for (const auto& a : validating_assignments(gens)) alts.push_back(a.str());
        j["validating_assignments"] = alts;
    }
    j["all_pass"] = ok;
    emit(opt, j);
    if (!opt.json) {
        for (const auto& it : rep.items)
            std::cout << (it.pass ? "PASS " : "FAIL ") << it.item << "  " << it.detail << "\n";
        for (const auto& it : asg_rep.items)
            std::cout << (it.pass ? "PASS " : "FAIL ") << "assignment:" << it.item << "  "
                      << it.detail << "\n";
        if (!asg_rep.all_pass()) {
            std::cout << "validating assignments:";
            for (const auto& a : validating_assignments(gens)) std::cout << " " << a.str();
            std::cout << "\n";
        }
        std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailure;
}

int run_certify(const Options& opt, const std::vector<std::string>& word_args,
                const std::string& corpus) {
    std::vector<std::pair<std::string, std::string>> inputs;  // (origin, text)
    for (size_t i = 0; i < word_args.size(); ++i)
        inputs.emplace_back("arg " + std::to_string(i + 1), word_args[i]);
    if (!corpus.empty())
        for (const auto& [line, text] : read_corpus(corpus))
            inputs.emplace_back("line " + std::to_string(line), text);

    std::vector<GenWord> words;
    bool parse_failed = false;
    for (const auto& [origin, text] : inputs) {
        try {
            words.push_back(parse_word_expr(text));
        } catch (const std::exception& e) {
            parse_failed = true;
            std::cerr << "parse error (" << origin << "): " << e.what() << "\n";
        }
    }
    if (parse_failed) return kExitInputError;

    LatticeGens gens;
    Assignment asg = Assignment::parse(opt.assignment);
    if (!validate_assignment(gens, asg).all_pass()) {
        std::cerr << "assignment " << asg.str() << " does not validate; kernel tests refused\n";
        std::cerr << "validating assignments:";
        for (const auto& a : validating_assignments(gens)) std::cerr << " " << a.str();
        std::cerr << "\n";
        return kExitVerificationFailure;
    }

    auto certs = batch_map(words.size(), [&](std::size_t i) {
        return certify(gens, asg, words[i], opt.precision);
    });

    Json items = Json::array();
    for (const auto& c : certs) items.push_back(to_json(c));
    Json j{{"command", "certify"},
           {"config", config_json(opt)},
           {"certificates", items},
           {"count", certs.size()}};
    emit(opt, j);
    if (!opt.json) {
        for (const auto& c : certs)
            std::cout << c.word.str() << "  trace=" << c.trace.get_str() << "  "
                      << to_string(c.nt_class.tag) << "  " << to_string(c.fiber_kind)
                      << (c.word_in_pi1Cu
                              ? std::string("  kernel=") + (c.image_trivial_in_pi1C ? "yes" : "no")
                              : "")
                      << "  " << to_string(c.isometry.tag) << "\n";
    }
    return kExitOk;
}

int run_membership(const Options& opt, const std::string& text) {
    GenWord w = parse_word_expr(text);
    LatticeGens gens;
    Assignment asg = Assignment::parse(opt.assignment);
    auto ab = abelianize_mod5(w);
    bool in_cu = in_pi1Cu(w);
    Json j{{"command", "membership"},
           {"config", config_json(opt)},
           {"word", w.str()},
           {"abelianization_mod5", Json::array({ab.first, ab.second})},
           {"in_pi1Cu", in_cu}};
    bool in_kernel = false;
    if (in_cu) {
        in_kernel = in_kernel_to_pi1C(gens, asg, w);
        j["in_kernel_to_pi1C"] = in_kernel;
    } else {
        j["in_kernel_to_pi1C"] = nullptr;
    }
    emit(opt, j);
    if (!opt.json) {
        std::cout << "word: " << w.str() << "\n";
        std::cout << "abelianization mod 5: (" << ab.first << "," << ab.second << ")\n";
        std::cout << "in pi_1(C^u): " << (in_cu ? "yes" : "no") << "\n";
        if (in_cu)
            std::cout << "in kernel of pi_1(C^u) -> pi_1(C): " << (in_kernel ? "yes" : "no") << "\n";
        else
            std::cout << "kernel test not applicable (word is not in pi_1(C^u))\n";
    }
    return kExitOk;
}

int run_distinguish(const Options& opt, const std::string& t1, const std::string& t2) {
    GenWord w1 = parse_word_expr(t1);
    GenWord w2 = parse_word_expr(t2);
    LatticeGens gens;
    Assignment asg = Assignment::parse(opt.assignment);
    DistinguishVerdict v = distinguish(gens, asg, w1, w2, opt.depth);
    Json j{{"command", "distinguish"},
           {"config", config_json(opt)},
           {"w1", w1.str()},
           {"w2", w2.str()}};
    j.update(to_json(v));
    emit(opt, j);
    if (!opt.json) {
        std::cout << (v.tag == DistinguishVerdict::Tag::distinct ? "distinct" : "inconclusive")
                  << ": " << v.note << "\n";
        std::cout << "invariant(w1)    = " << v.invariant_w1.str() << "\n";
        std::cout << "invariant(w2)    = " << v.invariant_w2.str() << "\n";
        std::cout << "invariant(w2^-1) = " << v.invariant_w2_inverse.str() << "\n";
    }
    return kExitOk;
}

int run_cover_stats(const Options& opt) {
    Cover cover(Arrangement::complete_quadrilateral());
    const Arrangement& arr = cover.arrangement();
    Json j{{"command", "cover-stats"}, {"config", config_json(opt)}};
    j["arrangement"] = to_json(arr);
    j["aut_order"] = cover.full_group().order().get_str();

    bool ok = true;
    Json stab = Json::array();
    for (size_t p = 0; p < arr.points.size(); ++p) {
        auto s = cover.stabilizer(static_cast<int>(p));
        auto loop = cover.cyclic(cover.loop_around_exceptional(static_cast<int>(p)));
        stab.push_back(Json{{"point", arr.points[p].label},
                            {"order", s.order().get_str()},
                            {"loop_quotient_order", quotient_order(s, loop).get_str()}});
    }
    j["stabilizers"] = stab;

    Json fibers = Json::array();
    for (int m : {0, 1, 2, 3})
        fibers.push_back(Json{{"lines_through_point", m},
                              {"cardinality", cover.fiber_cardinality(m).get_str()}});
    j["fiber_cardinalities"] = fibers;

    // base curve C: resolution of one singular point, degree n^2 over P^1
    Integer cE = branched_euler(25, 2, 3, 5);
    j["base_curve"] = Json{{"euler", cE.get_str()}, {"genus", genus_from_euler(cE).get_str()}};

    auto gen_group = cover.component_group(Cover::CurveSpec::generic());
    Integer gE = branched_euler(gen_group.order(), 2, 4, 5);
    j["generic_fiber"] = Json{{"components", gen_group.index_in_full().get_str()},
                              {"per_component_euler", gE.get_str()},
                              {"per_component_genus", genus_from_euler(gE).get_str()}};

    auto sf = singular_fiber_report(cover);
    j["singular_fibers"] = to_json(sf);
    ok = ok && sf.consistent;

    // the subgroup identities of the Stein factorization proofs
    auto al = [&](const char* l) { return cover.alpha(arr.line_index(l)); };
    GaloisSubgroup h1 = GaloisSubgroup::span(
        arr.n, arr.k(),
        {al("D34"), al("D12") + al("D13") + al("D23"), al("D12") + al("D14") + al("D24")});
    GaloisSubgroup h2 = GaloisSubgroup::span(
        arr.n, arr.k(),
        {al("D12"), al("D34") + al("D13") + al("D14"), al("D34") + al("D23") + al("D24")});
    GaloisSubgroup expected = GaloisSubgroup::span(arr.n, arr.k(), {al("D12"), al("D34")});
    bool inter_ok = intersect(h1, h2) == expected;
    ok = ok && inter_ok;

    bool join_ok = true, meet_ok = true;
    for (size_t p = 0; p < arr.points.size(); ++p) {
        if (!arr.is_triple_or_more(static_cast<int>(p))) continue;
        auto s = cover.stabilizer(static_cast<int>(p));
        join_ok = join_ok && join(s, gen_group) == cover.full_group();
        meet_ok = meet_ok && intersect(s, gen_group) ==
                                 cover.cyclic(cover.loop_around_exceptional(static_cast<int>(p)));
    }
    ok = ok && join_ok && meet_ok;
    j["subgroup_identities"] = Json{{"line_intersection_is_a12_a34", inter_ok},
                                    {"stab_join_fiber_group_is_full", join_ok},
                                    {"stab_meet_fiber_group_is_loop", meet_ok}};

    CheckReport chart = chart_roundtrip_check(100, opt.seed);
    j["chart_roundtrip"] = to_json(chart);
    ok = ok && chart.ok();
    j["all_pass"] = ok;
    emit(opt, j);

    if (!opt.json) {
        std::cout << "complete quadrilateral, n = " << arr.n << ", deck group order "
                  << cover.full_group().order().get_str() << "\n";
        std::cout << "stabilizer orders:";
        for (size_t p = 0; p < arr.points.size(); ++p)
            std::cout << " " << arr.points[p].label << "="
                      << cover.stabilizer(static_cast<int>(p)).order().get_str();
        std::cout << "\n";
        std::cout << "base curve C: euler " << cE.get_str() << ", genus "
                  << genus_from_euler(cE).get_str() << "\n";
        std::cout << "generic fiber: " << gen_group.index_in_full().get_str()
                  << " components of genus " << genus_from_euler(gE).get_str() << "\n";
        std::cout << "singular fibers: " << sf.singular_fiber_count.get_str() << " fibers, "
                  << sf.components_per_fiber.get_str() << " components of genus "
                  << sf.component_genus.get_str() << ", " << sf.nodes_per_fiber.get_str()
                  << " nodes, smoothed genus " << sf.smoothed_genus.get_str() << "\n";
        std::cout << "subgroup identities: " << (inter_ok && join_ok && meet_ok ? "pass" : "FAIL")
                  << "\n";
        std::cout << "chart roundtrip: " << chart.passes << "/" << chart.samples << "\n";
        std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailure;
}

int run_check(const Options& opt, const CheckReport& rep) {
    Json j{{"command", rep.name}, {"config", config_json(opt)}};
    j.update(to_json(rep));
    emit(opt, j);
    if (!opt.json) {
        std::cout << rep.name << ": " << rep.passes << "/" << rep.samples << " samples pass\n";
        for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
    }
    return rep.ok() ? kExitOk : kExitVerificationFailure;
}

int run_pencil_eval(const Options& opt, const std::string& text) {
    ProjPoint p = parse_proj_point(text);
    ProjPoint value = pencil_eval(p);
    Json j{{"command", "pencil-eval"},
           {"config", config_json(opt)},
           {"point", to_json(p)},
           {"value", to_json(value)}};
    emit(opt, j);
    if (!opt.json) std::cout << value.str() << "\n";
    return kExitOk;
}

int run_pencil_fiber(const Options& opt, const std::string& text) {
    ProjPoint v = parse_proj_point(text);
    if (v.dim() != 2) throw std::invalid_argument("fiber takes a pencil value [lambda:mu]");
    ConicForm f = fiber_equation(v);
    bool singular = is_singular_fiber(v);
    Json j{{"command", "pencil-fiber"},
           {"config", config_json(opt)},
           {"value", to_json(v)},
           {"conic_matrix", to_json(f)},
           {"singular", singular}};
    emit(opt, j);
    if (!opt.json) {
        std::cout << "conic matrix:";
        for (const auto& e : f.m) std::cout << " " << rational_str(e);
        std::cout << "\nsingular: " << (singular ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int run_pencil_singular_values(const Options& opt) {
    Json vals = Json::array();
    for (const auto& v : singular_values()) vals.push_back(to_json(v));
    Json j{{"command", "pencil-singular-values"}, {"config", config_json(opt)}, {"values", vals}};
    emit(opt, j);
    if (!opt.json)
        for (const auto& v : singular_values()) std::cout << v.str() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for the complete-quadrilateral cover, its Gamma(2) "
                 "monodromy calculus and the Yamazaki-Yoshida lattice"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit a JSON report on stdout");
    app.add_option("--seed", opt.seed, "seed for the sample suites");
    app.add_option("--precision", opt.precision, "precision cap in bits (>= 64)")
        ->check(CLI::Range(64u, 1u << 24));
    app.add_option("--depth", opt.depth, "conjugator search depth for distinguish");
    app.add_option("--assignment", opt.assignment,
                   "images of Tinf,T0,T1 among R(01),R(02),R(12), e.g. 01,02,12");

    std::function<int()> action;

    auto* verify = app.add_subcommand("verify-lattice", "exact lattice verification suite");
    bool tamper = false;
    verify->add_flag("--tamper", tamper, "negative control: tamper one generator entry first");
    verify->callback([&] { action = [&] { return run_verify_lattice(opt, tamper); }; });

    auto* certify_cmd = app.add_subcommand("certify", "certificates for words of Gamma(2)");
    std::vector<std::string> cert_words;
    std::string corpus;
    certify_cmd->add_option("words", cert_words, "words, e.g. \"T1 T0 Tinf\" or \"[T1,T0]\"");
    certify_cmd->add_option("--corpus", corpus, "file with one word per line, '#' comments");
    certify_cmd->callback([&] { action = [&] { return run_certify(opt, cert_words, corpus); }; });

    auto* membership = app.add_subcommand("membership", "pi_1(C^u) and kernel membership");
    std::string mem_word;
    membership->add_option("word", mem_word, "word to test")->required();
    membership->callback([&] { action = [&] { return run_membership(opt, mem_word); }; });

    auto* dist = app.add_subcommand("distinguish", "representation distinguisher");
    std::string w1_text, w2_text;
    dist->add_option("w1", w1_text)->required();
    dist->add_option("w2", w2_text)->required();
    dist->callback([&] { action = [&] { return run_distinguish(opt, w1_text, w2_text); }; });

    auto* stats = app.add_subcommand("cover-stats", "complete-quadrilateral cover constants");
    stats->callback([&] { action = [&] { return run_cover_stats(opt); }; });

    auto* chart = app.add_subcommand("chart-check", "chi o rho = tau o sigma roundtrip");
    std::size_t chart_samples = 100;
    chart->add_option("--samples", chart_samples);
    chart->callback([&] {
        action = [&] { return run_check(opt, chart_roundtrip_check(chart_samples, opt.seed)); };
    });

    auto* comm = app.add_subcommand("commutativity-check", "configuration-space square");
    std::size_t comm_samples = 500;
    comm->add_option("--samples", comm_samples);
    comm->callback([&] {
        action = [&] { return run_check(opt, commutativity_check(comm_samples, opt.seed)); };
    });

    auto* pencil = app.add_subcommand("pencil", "pencil of conics queries");
    pencil->require_subcommand(1);
    auto* peval = pencil->add_subcommand("eval", "evaluate the pencil at a point of P^2");
    std::string peval_point;
    peval->add_option("point", peval_point, "e.g. \"[2:1:1]\"")->required();
    peval->callback([&] { action = [&] { return run_pencil_eval(opt, peval_point); }; });
    auto* pfiber = pencil->add_subcommand("fiber", "conic equation of a fiber");
    std::string pfiber_value;
    pfiber->add_option("value", pfiber_value, "e.g. \"[1:1]\"")->required();
    pfiber->callback([&] { action = [&] { return run_pencil_fiber(opt, pfiber_value); }; });
    auto* psing = pencil->add_subcommand("singular-values", "the three singular values");
    psing->callback([&] { action = [&] { return run_pencil_singular_values(opt); }; });
    auto* plef = pencil->add_subcommand("lefschetz-check", "normal form chart identity");
    std::size_t lef_samples = 200;
    plef->add_option("--samples", lef_samples);
    plef->callback([&] {
        action = [&] { return run_check(opt, lefschetz_chart_check(lef_samples, opt.seed)); };
    });

    CLI11_PARSE(app, argc, argv);

    try {
        return action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

#include "z4v/constructions.hpp"
#include "z4v/cyclic.hpp"
#include "z4v/qr.hpp"
#include "z4v/text_io.hpp"
#include "z4v/verify.hpp"
#include "z4v/weight_enum.hpp"

using namespace z4v;
using nlohmann::json;

namespace {

enum Exit { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_cap = 3 };

struct Output {
    json payload = json::object();
    std::vector<std::string> diagnostics;
    int code = exit_pass;
};

int emit(const Output& out) {
    std::cout << out.payload.dump(2) << "\n";
    for (const auto& d : out.diagnostics) std::cerr << d << "\n";
    return out.code;
}

json type_json(const Z4Code& c) { return json::array({c.k1(), c.k2()}); }

json nullable(std::optional<int> x) { return x ? json(*x) : json(nullptr); }

RCode load_code(const std::string& path) { return RCode::from_generators(parse_r_matrix(read_text_file(path))); }

// Distances and distributions stop at the cap; whatever finished stays in
// the payload and the exit code becomes 3.
struct Budget {
    std::uint64_t cap = default_cap;
    std::uint64_t estimate = 0;
    Output* out = nullptr;

    template <class F>
    void run(const std::string& what, F f) {
        try {
            f();
        } catch (const CapExceeded& e) {
            out->diagnostics.push_back(what + ": " + e.what());
            out->code = exit_cap;
        }
    }
};

json code_summary(const RCode& c, const std::vector<Metric>& metrics, bool gray, Budget& b) {
    json j = {{"n", c.length()},
              {"size", c.size().str()},
              {"crt_types", json::array({type_json(c.c1()), type_json(c.c2())})},
              {"gray_type", type_json(gray_image(c))}};
    b.run("duality", [&] {
        DualityReport dr = classify_duality(c, b.cap);
        j["duality"] = std::string(duality_name(dr.duality));
        j["selfdual"] = dr.duality == Duality::self_dual;
        j["type"] = std::string(type_name(dr.type));
        j["d_E"] = nullable(dr.d_e);
        if (dr.duality == Duality::self_dual) j["extremal"] = dr.extremal;
    });
    json dists = json::object(), dist = json::object();
    for (Metric m : metrics) {
        const std::string name(metric_name(m));
        b.run(name, [&] {
            if (gray) {
                Z4Code image = gray_image(c);
                dist[name] = nullable(min_distance(image, m, b.cap));
                dists[name] = distribution_json(distribution(image, m, b.cap));
            } else {
                dist[name] = nullable(min_distance(c, m, b.cap));
                dists[name] = distribution_json(distribution(c, m, b.cap));
            }
        });
        if (!dist.contains(name) && b.estimate && !gray && m != Metric::lee) {
            auto est = estimate_min_distance(c, m, b.estimate);
            dist[name] = est ? json{{DistanceEstimate::label, est->value}, {"samples", est->samples}} : json(nullptr);
        }
    }
    j["distances"] = dist;
    j["distributions"] = dists;
    return j;
}

std::vector<Metric> parse_metrics(const std::vector<std::string>& names, bool gray) {
    std::vector<Metric> out;
    for (const auto& s : names) out.push_back(parse_metric(s));
    if (out.empty()) out = gray ? std::vector{Metric::lee} : std::vector{Metric::gray};
    for (Metric m : out) {
        if (gray && m == Metric::gray) throw ParseError("the Gray image is a Z4 code; use lee, hamming or euclidean");
        if (!gray && m == Metric::lee) throw ParseError("R codes take hamming, gray or euclidean");
    }
    return out;
}

json construction_json(const IsodualConstruction& c) {
    json perm = json::array(), signs = json::array();
    for (auto p : c.witness.permutation) perm.push_back(p);
    for (auto s : c.witness.signs) signs.push_back(to_string(s));
    return {{"generators", matrix_json(c.generator)},
            {"size", c.code.size().str()},
            {"witness", {{"permutation", perm}, {"signs", signs}}},
            {"isodual", check_isodual(c.code, c.witness)}};
}

RVector parse_row(const std::vector<std::string>& words) {
    RVector v;
    for (const auto& w : words) v.push_back(parse_element(w));
    return v;
}

json cyclic_record(const RCyclicCode& c, std::uint64_t cap) {
    Z4Code image = gray_image(c.code);
    std::optional<int> d;
    if (c.code.log2_size() < 64 && (std::uint64_t{1} << c.code.log2_size()) <= cap) d = min_distance(image, Metric::lee, cap);
    return {{"n", c.n},
            {"f1", to_string(c.c1.f)}, {"g1", to_string(c.c1.g)}, {"h1", to_string(c.c1.h)},
            {"f2", to_string(c.c2.f)}, {"g2", to_string(c.c2.g)}, {"h2", to_string(c.c2.h)},
            {"size", c.code.size().str()},
            {"selfdual", dual(c.code) == c.code},
            {"gray_type", type_json(image)},
            {"gray_min_lee", nullable(d)}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear codes over Z4 + vZ4"};
    app.require_subcommand(1);

    std::string file;
    std::vector<std::string> metric_names;
    std::uint64_t cap = default_cap;
    std::uint64_t estimate = 0;
    bool with_dual = false, gray = false, hermitian = false, macwilliams = false;

    auto* info = app.add_subcommand("code-info", "Size, duality and distances of a code given by generator rows");
    info->add_option("file", file, "Generator matrix, one row per line")->required();
    info->add_option("--metric", metric_names, "hamming, gray, lee or euclidean (repeatable)");
    info->add_option("--cap", cap, "Enumeration budget in codewords");
    info->add_option("--estimate", estimate, "Sample this many codewords when the cap is hit");
    info->add_flag("--dual", with_dual, "Also describe the Euclidean dual");
    info->add_flag("--gray", gray, "Measure the Gray image instead of the code");

    auto* cdual = app.add_subcommand("code-dual", "Generator matrix of the dual code");
    cdual->add_option("file", file)->required();
    cdual->add_flag("--hermitian", hermitian, "Hermitian instead of Euclidean dual");

    auto* wdist = app.add_subcommand("wdist", "Weight distribution");
    wdist->add_option("file", file)->required();
    wdist->add_option("--metric", metric_names)->required();
    wdist->add_option("--cap", cap);
    wdist->add_flag("--gray", gray);
    wdist->add_flag("--macwilliams", macwilliams, "Also predict the dual's Gray distribution");

    auto* construct = app.add_subcommand("construct", "Isodual constructions");
    construct->require_subcommand(1);
    std::string sym_file;
    std::vector<std::string> first_row, core_row;
    std::string alpha, beta, gamma;
    auto* ca = construct->add_subcommand("a", "[I | M] for symmetric M");
    ca->add_option("file", sym_file, "Symmetric matrix")->required();
    auto* cb = construct->add_subcommand("b", "[I | circulant]");
    cb->add_option("row", first_row, "First row of the circulant")->required();
    auto* cc = construct->add_subcommand("c", "[I | bordered circulant]");
    cc->add_option("--alpha", alpha)->required();
    cc->add_option("--beta", beta)->required();
    cc->add_option("--gamma", gamma)->required();
    cc->add_option("core", core_row, "First row of the inner circulant")->required();

    std::size_t n = 0;
    bool selfdual = false, list = false, as_json = false;
    std::string filter_name = "nontrivial";
    auto* cyc = app.add_subcommand("cyclic", "Cyclic codes of odd length");
    cyc->add_option("n", n)->required();
    cyc->add_flag("--selfdual", selfdual, "Self-dual codes only");
    cyc->add_option("--filter", filter_name, "all, nontrivial or orbits (with --selfdual)");
    cyc->add_flag("--list", list, "Emit every record");
    cyc->add_flag("--json", as_json, "Records as JSON (the default)");
    cyc->add_option("--cap", cap);

    std::size_t p = 0;
    bool enumerate = false;
    auto* qr = app.add_subcommand("qr", "Quadratic residue codes");
    qr->add_option("p", p)->required();
    qr->add_flag("--enumerate", enumerate, "Cross-check by listing codewords (small p)");

    std::string target;
    auto* verify = app.add_subcommand("verify", "Run a verification block");
    verify->add_option("target", target, "example1, example2, example4, counts or properties")->required();

    std::string what;
    bool search = false;
    auto* count = app.add_subcommand("count", "Self-dual counting formulas");
    count->add_option("kind", what, "selfdual or type2")->required()->check(CLI::IsMember({"selfdual", "type2"}));
    count->add_option("n", n)->required();
    count->add_flag("--search", search, "Cross-check by exhaustive search (small n)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    Output out;
    try {
        Budget budget{cap, estimate, &out};
        if (*info) {
            RCode c = load_code(file);
            auto metrics = parse_metrics(metric_names, gray);
            out.payload = code_summary(c, metrics, gray, budget);
            if (with_dual) out.payload["dual"] = code_summary(dual(c), metrics, gray, budget);
        } else if (*cdual) {
            RCode d = dual(load_code(file), hermitian ? DualKind::hermitian : DualKind::euclidean);
            out.payload = {{"kind", hermitian ? "hermitian" : "euclidean"},
                           {"size", d.size().str()},
                           {"generators", matrix_json(d.generators())}};
        } else if (*wdist) {
            RCode c = load_code(file);
            json dists = json::object();
            for (Metric m : parse_metrics(metric_names, gray)) {
                budget.run(std::string(metric_name(m)), [&] {
                    WeightDistribution w = gray ? distribution(gray_image(c), m, cap) : distribution(c, m, cap);
                    dists[std::string(metric_name(m))] = distribution_json(w);
                    if (macwilliams && !gray && m == Metric::gray)
                        out.payload["dual_gray"] = distribution_json(macwilliams_gray(w, c.size()));
                });
            }
            out.payload["distributions"] = dists;
        } else if (*construct) {
            if (*ca) out.payload = construction_json(construction_a(parse_r_matrix(read_text_file(sym_file))));
            else if (*cb) out.payload = construction_json(construction_b(parse_row(first_row)));
            else
                out.payload = construction_json(construction_c(BorderedCirculant(
                    parse_element(alpha), parse_element(beta), parse_element(gamma), parse_row(core_row))));
            if (!out.payload["isodual"].get<bool>()) out.code = exit_fail;
        } else if (*cyc) {
            json records = json::array();
            std::size_t total = 0;
            if (selfdual) {
                SelfDualFilter filter = filter_name == "all"          ? SelfDualFilter::all
                                        : filter_name == "nontrivial" ? SelfDualFilter::nontrivial
                                        : filter_name == "orbits"     ? SelfDualFilter::orbit_representatives
                                                                      : throw ParseError("unknown filter " + filter_name);
                if (n % 2 == 0) throw EvenLength("length " + std::to_string(n) + " is even");
                if (!selfdual_cyclic_exists(n))
                    out.diagnostics.push_back("some power of 2 is -1 mod " + std::to_string(n) +
                                              ", so only the trivial self-dual cyclic code exists");
                for (const auto& c : selfdual_cyclic(n, filter)) {
                    ++total;
                    records.push_back(cyclic_record(c, cap));
                }
            } else {
                for_each_cyclic(n, [&](const RCyclicCode& c) {
                    ++total;
                    if (list) records.push_back(cyclic_record(c, cap));
                });
            }
            out.payload = {{"n", n}, {"count", total}};
            if (list || selfdual) out.payload["codes"] = records;
        } else if (*qr) {
            QrFamily fam = build_qr(p);
            QrReport rep = verify_qr_properties(fam, enumerate);
            json props = json::object();
            for (const auto& item : rep.items) {
                std::string key = item.id;
                for (int k = 2; props.contains(key); ++k) key = item.id + "." + std::to_string(k);
                props[key] = {{"claim", item.claim}, {"status", item.pass ? "pass" : "fail"}};
            }
            out.payload = {{"p", p},
                           {"case", fam.ctx.qr_case == QrCase::one ? "I" : "II"},
                           {"codes",
                            {{"D1", to_string(fam.d1.idempotent)},
                             {"D2", to_string(fam.d2.idempotent)},
                             {"E1", to_string(fam.e1.idempotent)},
                             {"E2", to_string(fam.e2.idempotent)}}},
                           {"properties", props}};
            if (!rep.all_pass()) out.code = exit_fail;
        } else if (*verify) {
            CheckResult r = verify_target(target);
            out.payload = to_json(r);
            out.diagnostics = r.notes;
            out.code = r.status == Status::pass ? exit_pass : exit_fail;
        } else if (*count) {
            BigInt formula = what == "selfdual" ? count_selfdual(n) : count_type2(n);
            out.payload = {{"kind", what}, {"n", n}, {"formula", formula.str()}};
            if (search) {
                std::size_t found = 0;
                for (const auto& c : selfdual_r_codes(n))
                    found += what == "selfdual" || classify_duality(c).type == SelfDualType::type_ii;
                out.payload["search"] = std::to_string(found);
                if (BigInt(found) != formula) {
                    out.diagnostics.push_back("formula and search disagree");
                    out.code = exit_fail;
                }
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const CapExceeded& e) {
        out.diagnostics.push_back(e.what());
        out.code = exit_cap;
    } catch (const LimitExceeded& e) {
        out.diagnostics.push_back(e.what());
        out.code = exit_cap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return emit(out);
}

#include "dlk/cli.hpp"

#include "dlk/downlinks.hpp"
#include "dlk/generators.hpp"
#include "dlk/io.hpp"
#include "dlk/oracle.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <string>

namespace dlk {

namespace {

PatternKind parse_pattern(const std::string& name, int k) {
    if (name == "kite") return PatternKind::kite();
    if (name == "star") {
        if (k <= 0) throw CLI::ValidationError("--pattern star requires --k");
        return PatternKind::star(k);
    }
    if (name.size() >= 2 && (name[0] == 'p' || name[0] == 'c')) {
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit((unsigned char)name[i])) digits = false;
        if (digits) {
            int kk = std::stoi(name.substr(1));
            return name[0] == 'p' ? PatternKind::path(kk) : PatternKind::cycle(kk);
        }
    }
    throw CLI::ValidationError("unknown pattern \"" + name +
                               "\" (use p3, p4, star, kite, c3, ...)");
}

Design generate(const std::string& pattern, int order, int k,
                const std::string& profile) {
    if (pattern == "p3") {
        // a P3-design is an S_2-design with the centers in the middle
        Design s = star_design(order, 2, StarProfile::Any);
        Design d{s.host, PatternKind::path(3), {}};
        for (const auto& b : s.blocks)
            d.blocks.emplace_back(d.pattern,
                                  std::vector<Vertex>{b.verts[1], b.verts[0], b.verts[2]});
        return d;
    }
    if (pattern == "p4") return p4_pendant_design(order);
    if (pattern == "c3") return steiner_triple_system(order);
    if (pattern == "star") {
        if (k <= 0) throw std::invalid_argument("--pattern star requires --k");
        StarProfile p = StarProfile::Any;
        if (profile == "one-non-center") p = StarProfile::OneNonCenter;
        else if (profile == "one-non-center-one-single")
            p = StarProfile::OneNonCenterOneSingle;
        else if (!profile.empty() && profile != "any")
            throw std::invalid_argument("unknown star profile \"" + profile + "\"");
        return star_design(order, k, p);
    }
    if (pattern == "kite") {
        if (profile == "degree2") return kite_degree2_design(order);
        if (!profile.empty() && profile != "cyclic")
            throw std::invalid_argument("unknown kite profile \"" + profile + "\"");
        if (order % 8 != 1 || order <= 1)
            throw std::invalid_argument(
                "cyclic kite generation needs order ≡ 1 (mod 8)");
        return kite_cyclic_design((order - 1) / 8);
    }
    throw std::invalid_argument("gen does not support pattern \"" + pattern + "\"");
}

int report_verify(const VerifyReport& r, const std::string& what) {
    if (r.ok()) {
        std::cout << "valid " << what << " (" << r.block_count << " blocks)\n";
        return 0;
    }
    std::cout << "invalid " << what << ":\n";
    for (const auto& v : r.violations) std::cout << "  - " << v << "\n";
    return 1;
}

const char* verdict_name(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::Found: return "found";
        case SearchVerdict::None: return "none";
        case SearchVerdict::Unknown: return "unknown";
    }
    return "?";
}

int verdict_exit(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::Found: return 0;
        case SearchVerdict::None: return 1;
        case SearchVerdict::Unknown: return 3;
    }
    return 1;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"graph designs, down-links and P3 metamorphoses"};
    app.require_subcommand(1);

    std::string pattern, profile, in_path, out_path, mode = "some", fixture_name;
    int order = 0, k = 0, target = 0;
    long long budget = kDefaultBudget;
    bool minimal = false, list_fixtures = false;

    CLI::App* gen = app.add_subcommand("gen", "generate a design");
    gen->add_option("--pattern", pattern, "p3|p4|star|kite|c3")->required();
    gen->add_option("--order", order, "host order v")->required();
    gen->add_option("--k", k, "star size");
    gen->add_option("--profile", profile, "generator profile");
    gen->add_option("-o,--out", out_path, "output file")->required();

    CLI::App* dl = app.add_subcommand("downlink", "down-link a design to P3");
    dl->add_option("input", in_path, "design file")->required();
    dl->add_option("-o,--out", out_path, "output certificate file")->required();
    dl->add_flag("--minimal", minimal, "kite minimal route (target v-1)");

    CLI::App* ver = app.add_subcommand("verify", "verify a design or certificate");
    ver->add_option("input", in_path, "file to verify")->required();

    CLI::App* spec = app.add_subcommand("spectrum", "exact η via exhaustive search");
    spec->add_option("--pattern", pattern)->required();
    spec->add_option("--order", order)->required();
    spec->add_option("--k", k, "star size");
    spec->add_option("--mode", mode, "some|every")->check(CLI::IsMember({"some", "every"}));
    spec->add_option("--budget", budget, "search node budget");

    CLI::App* orc = app.add_subcommand("oracle", "exhaustive search primitives");
    orc->require_subcommand(1);
    CLI::App* odec = orc->add_subcommand("decompose", "search a decomposition of K_v");
    odec->add_option("--pattern", pattern)->required();
    odec->add_option("--order", order)->required();
    odec->add_option("--k", k, "star size");
    odec->add_option("--budget", budget);
    odec->add_option("-o,--out", out_path, "write the found design here");
    CLI::App* odl = orc->add_subcommand("downlink", "search a down-link to order n");
    odl->add_option("input", in_path, "source design file")->required();
    odl->add_option("--target", target, "target order n")->required();
    odl->add_option("--budget", budget);
    odl->add_option("-o,--out", out_path, "write the found certificate here");

    CLI::App* fix = app.add_subcommand("fixture", "emit a named fixture");
    fix->add_option("name", fixture_name, "fixture name");
    fix->add_flag("--list", list_fixtures, "list fixture names");
    fix->add_option("-o,--out", out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            Design d = generate(pattern, order, k, profile);
            VerifyReport r = verify_design(d);
            if (!r.ok()) {
                std::cerr << "internal error: generated design invalid\n";
                return 1;
            }
            write_file_atomic(out_path, encode_design(d));
            std::cout << "wrote " << out_path << " (" << d.blocks.size()
                      << " blocks, order " << d.host.vertex_count() << ")\n";
            return 0;
        }
        if (dl->parsed()) {
            Design d = decode_design(read_file(in_path));
            DownLinkCertificate c = downlink(d, minimal);
            write_file_atomic(out_path, encode_certificate(c));
            std::cout << "wrote " << out_path << " (target order "
                      << target_order(c) << ")\n";
            return 0;
        }
        if (ver->parsed()) {
            Fixture f = decode_document(read_file(in_path));
            if (std::holds_alternative<Design>(f))
                return report_verify(verify_design(std::get<Design>(f)), "design");
            return report_verify(verify_downlink(std::get<DownLinkCertificate>(f)),
                                 "certificate");
        }
        if (spec->parsed()) {
            PatternKind p = parse_pattern(pattern, k);
            SpectrumMode m = mode == "every" ? SpectrumMode::Every : SpectrumMode::Some;
            SpectrumReport rep = exact_eta(order, p, m, budget);
            for (const auto& e : rep.entries)
                std::cout << "n=" << e.n << ": " << verdict_name(e.verdict) << "\n";
            const char* sym = m == SpectrumMode::Some ? "eta1" : "eta2";
            if (rep.eta) {
                std::cout << sym << " = " << *rep.eta << "\n";
                return 0;
            }
            if (rep.unknown) {
                std::cout << sym << " unknown (budget exhausted)\n";
                return 3;
            }
            std::cout << "no design of order " << order << " for " << p.name() << "\n";
            return 1;
        }
        if (odec->parsed()) {
            PatternKind p = parse_pattern(pattern, k);
            DecompositionResult r =
                search_decomposition(Graph::complete(order), p, budget);
            std::cout << verdict_name(r.verdict) << "\n";
            if (r.design && !out_path.empty())
                write_file_atomic(out_path, encode_design(*r.design));
            return verdict_exit(r.verdict);
        }
        if (odl->parsed()) {
            Design d = decode_design(read_file(in_path));
            DownLinkSearchResult r = search_downlink(d, target, budget);
            std::cout << verdict_name(r.verdict) << "\n";
            if (r.certificate && !out_path.empty())
                write_file_atomic(out_path, encode_certificate(*r.certificate));
            return verdict_exit(r.verdict);
        }
        if (fix->parsed()) {
            if (list_fixtures) {
                for (const auto& n : fixture_names()) std::cout << n << "\n";
                return 0;
            }
            if (fixture_name.empty()) {
                std::cerr << "fixture: a name or --list is required\n";
                return 2;
            }
            std::string doc;
            try {
                doc = encode_fixture(fixture_designs(fixture_name));
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
            if (out_path.empty()) std::cout << doc;
            else {
                write_file_atomic(out_path, doc);
                std::cout << "wrote " << out_path << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace dlk

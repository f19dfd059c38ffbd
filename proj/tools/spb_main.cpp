#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spb/certificate.hpp"
#include "spb/errors.hpp"
#include "spb/gen.hpp"
#include "spb/io.hpp"
#include "spb/sefe.hpp"
#include "spb/solve.hpp"

namespace {

spb::DecideMode mode_of(const std::string& s) {
    if (s == "algocon") return spb::DecideMode::Algocon;
    if (s == "star") return spb::DecideMode::Star;
    if (s == "exhaustive") return spb::DecideMode::Exhaustive;
    return spb::DecideMode::Auto;
}

void print_trace(const spb::Decision& d) {
    for (const auto& t : d.trace) {
        std::cout << "rule=" << spb::rule_name(t.rule) << " depth=" << t.depth
                  << " blocks=" << t.blocks << " iso_iso=" << t.iso_iso
                  << " np_hard=" << (t.np_hard ? 1 : 0);
        if (!t.note.empty()) std::cout << " note=" << t.note;
        std::cout << "\n";
    }
}

int cmd_decide(const std::string& path, const std::string& mode, long long budget,
               const std::string& cert_out) {
    spb::StreamedInstance i = spb::io::parse_instance(spb::io::read_file(path));
    spb::SolveOptions opts;
    opts.budget = budget;
    opts.want_witness = !cert_out.empty();
    spb::Decision d = spb::decide(i, mode_of(mode), opts);
    std::cout << (d.yes ? "YES" : "NO") << "\n";
    print_trace(d);
    if (d.yes && !cert_out.empty()) {
        if (d.witness) {
            spb::io::write_file_atomic(cert_out, spb::io::certificate_json(*d.witness));
        } else if (!d.pieces.empty()) {
            spb::io::write_file_atomic(cert_out, spb::io::witness_json(d.pieces));
        } else {
            std::cerr << "note: this decision path yields no certificate; nothing written\n";
        }
    }
    return d.yes ? 0 : 1;
}

int cmd_verify(const std::string& inst_path, const std::string& cert_path) {
    std::string ctext = spb::io::read_file(cert_path);
    if (spb::io::is_composite_witness(ctext)) {
        auto pieces = spb::io::parse_composite_witness(ctext);
        for (std::size_t k = 0; k < pieces.size(); ++k) {
            spb::CheckReport r = spb::check_certificate(pieces[k].instance,
                                                        pieces[k].certificate);
            if (!r.accepted) {
                std::cout << "reject piece=" << k << ": " << r.detail << "\n";
                return 1;
            }
        }
        std::cout << "accept pieces=" << pieces.size() << "\n";
        return 0;
    }
    spb::StreamedInstance i = spb::io::parse_instance(spb::io::read_file(inst_path));
    spb::DrawingCertificate c = spb::io::parse_certificate(ctext, i);
    spb::CheckReport r = spb::check_certificate(i, c);
    if (!r.accepted) {
        std::cout << "reject: " << r.detail << "\n";
        return 1;
    }
    std::cout << "accept\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"streamed planarity with a backbone: decide, verify, reduce, generate"};
    app.require_subcommand(1);

    std::string in_path, cert_path, mode = "auto", out_path;
    long long budget = spb::kDefaultBudget;

    auto* dec = app.add_subcommand("decide", "decide an instance; prints YES/NO and a trace");
    dec->add_option("instance", in_path, "instance JSON file")->required();
    dec->add_option("--mode", mode, "auto|algocon|star|exhaustive")
        ->check(CLI::IsMember({"auto", "algocon", "star", "exhaustive"}));
    dec->add_option("--budget", budget, "search budget");
    dec->add_option("--certificate", cert_path, "write the witness here on YES");

    auto* ver = app.add_subcommand("verify", "check a certificate against an instance");
    ver->add_option("instance", in_path, "instance JSON file")->required();
    ver->add_option("certificate", cert_path, "certificate or composite witness file")
        ->required();

    auto* red = app.add_subcommand("reduce-to-sefe",
                                   "encode a star instance as a sunflower family");
    red->add_option("instance", in_path, "instance JSON file")->required();
    red->add_option("-o,--out", out_path, "output family JSON file")->required();

    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);

    int g_omega = 2;
    auto* gt = gen->add_subcommand("theorem1",
                                   "hard streamed instance from a three-member family");
    gt->add_option("family", in_path, "family JSON file")->required();
    gt->add_option("--omega", g_omega, "window size, at least 2");
    gt->add_option("-o,--out", out_path, "output instance JSON file")->required();

    spb::RandomSpec rspec;
    std::uint64_t seed = 1;
    auto* gr = gen->add_subcommand("random", "seeded random instance");
    gr->add_option("--n", rspec.vertices, "vertex count");
    gr->add_option("--m", rspec.stream, "stream length");
    gr->add_option("--omega", rspec.omega, "window size");
    gr->add_option("--seed", seed, "generator seed");
    gr->add_option("--drop", rspec.drop, "backbone edge deletion probability");
    gr->add_option("-o,--out", out_path, "output instance JSON file")->required();

    auto* dot = app.add_subcommand("export-dot", "schematic DOT rendering of an instance");
    dot->add_option("instance", in_path, "instance JSON file")->required();
    dot->add_option("-o,--out", out_path, "output DOT file")->required();

    auto* orc = app.add_subcommand("oracle", "exhaustive ground truth; prints YES/NO");
    orc->add_option("instance", in_path, "instance JSON file")->required();
    orc->add_option("--budget", budget, "search budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dec->parsed()) return cmd_decide(in_path, mode, budget, cert_path);
        if (ver->parsed()) return cmd_verify(in_path, cert_path);
        if (red->parsed()) {
            spb::StreamedInstance i = spb::io::parse_instance(spb::io::read_file(in_path));
            spb::io::write_file_atomic(out_path, spb::io::family_json(spb::star_to_sefe(i)));
            return 0;
        }
        if (gt->parsed()) {
            spb::SefeInstance s = spb::io::parse_family(spb::io::read_file(in_path));
            spb::StreamedInstance out = spb::theorem1_generate(s, g_omega);
            spb::io::write_file_atomic(out_path, spb::io::instance_json(out));
            return 0;
        }
        if (gr->parsed()) {
            rspec.seed = seed;
            spb::io::write_file_atomic(out_path,
                                       spb::io::instance_json(spb::gen_random_instance(rspec)));
            return 0;
        }
        if (dot->parsed()) {
            spb::StreamedInstance i = spb::io::parse_instance(spb::io::read_file(in_path));
            spb::io::write_file_atomic(out_path, spb::io::instance_dot(i));
            return 0;
        }
        if (orc->parsed()) {
            spb::StreamedInstance i = spb::io::parse_instance(spb::io::read_file(in_path));
            bool yes = spb::brute_oracle(i, budget);
            std::cout << (yes ? "YES" : "NO") << "\n";
            return yes ? 0 : 1;
        }
    } catch (const spb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

// latcert: decide whether an integral Gram matrix is decomposable as U^T U
// with U unimodular, emit certificates for both answers, and verify them.
//
// Machine-readable output goes to stdout; diagnostics and stats to stderr.
// Exit codes: 0 yes/accept/pass, 3 no, 1 fail/reject/error, 2 usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "latcert/characteristic.hpp"
#include "latcert/decide.hpp"
#include "latcert/instances.hpp"
#include "latcert/matrix_io.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNo = 3;

latcert::IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw latcert::Error("cannot open '" + path + "'");
    return latcert::parse_matrix_document(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw latcert::Error("cannot write '" + path + "'");
    out << content;
}

// Short reason tag with witness, 1-based indices in user-facing output.
std::string fail_reason(const latcert::Error& e) {
    using namespace latcert;
    if (auto* p = dynamic_cast<const NotSquareError*>(&e))
        return "NotSquare " + std::to_string(p->rows) + "x" + std::to_string(p->cols);
    if (auto* p = dynamic_cast<const NotSymmetricError*>(&e))
        return "NotSymmetric (" + std::to_string(p->i + 1) + "," + std::to_string(p->j + 1) +
               ")";
    if (auto* p = dynamic_cast<const NotPositiveDefiniteError*>(&e))
        return "NotPositiveDefinite pivot " + std::to_string(p->pivot);
    if (auto* p = dynamic_cast<const NotUnimodularError*>(&e))
        return "NotUnimodular det=" + p->det;
    if (auto* p = dynamic_cast<const ParseError*>(&e))
        return "ParseError line " + std::to_string(p->line) + ": " + p->detail;
    return e.what();
}

int cmd_validate(const std::string& path) {
    try {
        latcert::validate_gram(read_matrix_file(path));
    } catch (const latcert::Error& e) {
        std::cout << "FAIL " << fail_reason(e) << "\n";
        return kExitError;
    }
    std::cout << "PASS\n";
    return kExitYes;
}

int cmd_decide(const std::string& path, const std::string& route_name,
               const std::string& cert_out) {
    latcert::Route route = latcert::Route::kElkies;
    if (route_name == "hkz") route = latcert::Route::kHkz;
    else if (route_name == "both") route = latcert::Route::kBoth;

    latcert::GramMatrix G = latcert::validate_gram(read_matrix_file(path));
    latcert::Decision d = latcert::decide(G, route);
    if (!latcert::verify_certificate(G, d.certificate))
        throw latcert::InternalInconsistencyError("certificate failed re-verification");

    std::string doc = latcert::write_certificate(d.certificate);
    std::cout << (d.answer == latcert::Answer::kYes ? "YES" : "NO") << "\n";
    if (!cert_out.empty()) write_file(cert_out, doc);
    else std::cout << doc;

    std::cerr << "# route=" << route_name << " nodes=" << d.stats.enum_nodes
              << " svp_calls=" << d.stats.svp_calls << " cvp_calls=" << d.stats.cvp_calls
              << " ms=" << d.stats.elapsed_ms << "\n";
    return d.answer == latcert::Answer::kYes ? kExitYes : kExitNo;
}

int cmd_verify(const std::string& instance_path, const std::string& cert_path) {
    latcert::GramMatrix G = latcert::validate_gram(read_matrix_file(instance_path));
    std::ifstream cin_(cert_path);
    if (!cin_) throw latcert::Error("cannot open '" + cert_path + "'");
    latcert::Certificate cert = latcert::parse_certificate(cin_);

    if (const auto* yes = std::get_if<latcert::YesCertificate>(&cert)) {
        try {
            if (latcert::verify_yes(G, *yes)) {
                std::cout << "ACCEPT\n";
                return kExitYes;
            }
        } catch (const latcert::EntryBoundViolatedError& e) {
            std::cout << "REJECT entry bound violated at (" << e.i + 1 << "," << e.j + 1
                      << ")\n";
            return kExitError;
        } catch (const latcert::DimensionMismatchError&) {
            std::cout << "REJECT dimension mismatch\n";
            return kExitError;
        }
        mpz_class det = latcert::det_bareiss(yes->U);
        if (det != 1 && det != -1)
            std::cout << "REJECT det(U)=" << det.get_str() << " is not +-1\n";
        else
            std::cout << "REJECT UtU != G\n";
        return kExitError;
    }

    const auto& no = std::get<latcert::NoCertificate>(cert);
    try {
        if (latcert::verify_no(G, no)) {
            std::cout << "ACCEPT\n";
            return kExitYes;
        }
    } catch (const latcert::DimensionMismatchError&) {
        std::cout << "REJECT dimension mismatch\n";
        return kExitError;
    }
    if (!latcert::is_characteristic(G, no.z)) {
        std::cout << "REJECT z is not characteristic\n";
    } else {
        std::cout << "REJECT norm " << latcert::norm_sq(G, no.z).get_str() << " not < "
                  << G.dim() << "\n";
    }
    return kExitError;
}

int cmd_charvec(const std::string& path) {
    latcert::GramMatrix G = latcert::validate_gram(read_matrix_file(path));
    latcert::CharCoset c = latcert::char_coset(G, /*with_min=*/true);
    std::cout << "z0: " << latcert::to_string(c.z0) << "\n";
    std::cout << "min: " << latcert::to_string(*c.min_vector) << "\n";
    std::cout << "min_norm2: " << c.min_norm2->get_str() << "\n";
    std::cout << "mod8: " << latcert::mod8_residue(G) << "\n";
    return kExitYes;
}

struct GenOptions {
    std::string kind;
    int dim = 0;
    std::uint64_t seed = 0;
    int entry_bound = 3;
    int steps = 20;
    std::string out, witness_out, in, left, right;
};

int cmd_gen(const GenOptions& o) {
    using namespace latcert;
    if (o.kind == "zn-rotation") {
        if (o.dim < 1) throw Error("--dim is required for zn-rotation");
        if (o.dim > 1024) throw Error("--dim out of range (max 1024)");
        YesInstance inst = yes_instance(o.dim, o.seed, o.entry_bound, o.steps);
        write_file(o.out, write_matrix_document(inst.G.mat()));
        if (!o.witness_out.empty())
            write_file(o.witness_out, write_matrix_document(inst.witness));
    } else if (o.kind == "e8") {
        write_file(o.out, write_matrix_document(e8_gram().mat()));
    } else if (o.kind == "direct-sum") {
        if (o.left.empty() || o.right.empty())
            throw Error("--left and --right are required for direct-sum");
        GramMatrix G1 = GramMatrix::spd(read_matrix_file(o.left));
        GramMatrix G2 = GramMatrix::spd(read_matrix_file(o.right));
        write_file(o.out, write_matrix_document(direct_sum(G1, G2).mat()));
    } else if (o.kind == "disguise") {
        if (o.in.empty()) throw Error("--in is required for disguise");
        GramMatrix G = GramMatrix::spd(read_matrix_file(o.in));
        write_file(o.out, write_matrix_document(disguise(G, o.seed, o.entry_bound, o.steps).mat()));
    } else {
        throw Error("unknown generator kind '" + o.kind + "'");
    }
    std::cerr << "# wrote " << o.out << "\n";
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decision and certificates for rotated standard lattices"};
    app.require_subcommand(1);

    std::string path, route = "elkies", cert_out;
    auto* validate = app.add_subcommand("validate", "check a Gram matrix instance");
    validate->add_option("path", path, "MatrixDocument file")->required();

    auto* dec = app.add_subcommand("decide", "decide and emit a certificate");
    dec->add_option("path", path, "MatrixDocument file")->required();
    dec->add_option("--route", route, "elkies | hkz | both")
        ->check(CLI::IsMember({"elkies", "hkz", "both"}));
    dec->add_option("--cert-out", cert_out, "certificate output path");

    std::string instance_path, cert_path;
    auto* ver = app.add_subcommand("verify", "verify a certificate against an instance");
    ver->add_option("--instance", instance_path, "MatrixDocument file")->required();
    ver->add_option("--certificate", cert_path, "certificate document")->required();

    auto* cv = app.add_subcommand("charvec", "characteristic-vector report");
    cv->add_option("path", path, "MatrixDocument file")->required();

    GenOptions gen;
    auto* g = app.add_subcommand("gen", "generate instances");
    g->add_option("--kind", gen.kind, "zn-rotation | e8 | direct-sum | disguise")->required();
    g->add_option("--dim", gen.dim, "dimension");
    g->add_option("--seed", gen.seed, "64-bit seed");
    g->add_option("--entry-bound", gen.entry_bound, "row-operation multiplier bound");
    g->add_option("--steps", gen.steps, "number of random row operations");
    g->add_option("--out", gen.out, "output MatrixDocument path")->required();
    g->add_option("--witness-out", gen.witness_out, "witness output path (zn-rotation)");
    g->add_option("--in", gen.in, "input instance (disguise)");
    g->add_option("--left", gen.left, "left summand (direct-sum)");
    g->add_option("--right", gen.right, "right summand (direct-sum)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(path);
        if (dec->parsed()) return cmd_decide(path, route, cert_out);
        if (ver->parsed()) return cmd_verify(instance_path, cert_path);
        if (cv->parsed()) return cmd_charvec(path);
        if (g->parsed()) return cmd_gen(gen);
    } catch (const latcert::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}

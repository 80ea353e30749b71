// perfcode: build q-ary Hamming codes, switch component cosets, and verify
// the results. Exit codes: 0 = success / property holds, 1 = property
// violated (report on stdout), 2 = invalid input or usage.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "perfcode/components.hpp"
#include "perfcode/family.hpp"
#include "perfcode/hamming.hpp"
#include "perfcode/verify.hpp"

namespace {

using namespace perfcode;

struct Options {
    int q = 2;
    int m = 3;
    int i = 1;
    int k = 0;
    std::string out;
    std::string lambda_path;
    std::string family_path;
    std::string flavor;
    std::string mode = "exhaustive";
    std::vector<int> base;
    std::vector<int> extra;
    bool force = false;
    bool enumerate_all = false;
    bool strong = false;
    uint64_t seed = 0;
    unsigned long long samples = 100000;
    unsigned long long cap = 0;  // resolved after parse: flag > PERFCODE_CAP > default
};

ScanMode scan_mode(const Options& opt) {
    if (opt.mode == "exhaustive") return exhaustive_scan();
    if (opt.mode == "sampled") return sampled_scan(opt.seed, opt.samples);
    throw std::invalid_argument("--mode must be 'exhaustive' or 'sampled'");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Family files carry their own "q m n t k" header, so the parent code can be
// rebuilt without extra flags. The bundle owns the code behind a stable
// address, because the family and its oracles keep pointers into it.
struct FamilyBundle {
    std::unique_ptr<HammingCode> code;
    SwitchFamily fam;
};

FamilyBundle load_family(const std::string& path) {
    std::string text = slurp(path);
    std::istringstream head(text);
    DigitFile probe = read_digit_file(head);  // header carries q m n t k
    if (probe.header.size() != 5) throw std::invalid_argument(path + ": family header must be 'q m n t k'");
    FamilyBundle bundle;
    bundle.code = std::make_unique<HammingCode>(
        build_hamming(static_cast<int>(probe.header[0]), static_cast<int>(probe.header[1])));
    std::istringstream body(text);
    bundle.fam = read_family_file(body, *bundle.code);
    return bundle;
}

// Prints to the file named by --out, or to stdout when --out is absent.
int emit(const Options& opt, const std::function<void(std::ostream&)>& writer) {
    if (opt.out.empty()) {
        writer(std::cout);
        return 0;
    }
    std::ofstream out(opt.out);
    if (!out) throw std::invalid_argument("cannot open " + opt.out + " for writing");
    writer(out);
    return 0;
}

int run_hamming(const Options& opt) {
    HammingCode code = build_hamming(opt.q, opt.m);
    return emit(opt, [&](std::ostream& os) { write_matrix_file(os, code); });
}

int run_component(const Options& opt) {
    HammingCode code = build_hamming(opt.q, opt.m);
    if (opt.i < 1 || opt.i > code.n)
        throw std::invalid_argument("--i must lie in 1.." + std::to_string(code.n));
    Component comp = component_basis(code, opt.i);
    std::cout << "dim " << comp.span.dim() << '\n';
    for (const FqVector& row : comp.span.rows()) std::cout << digit_line(row) << '\n';
    return 0;
}

int run_build(const Options& opt) {
    std::ifstream in(opt.lambda_path);
    if (!in) throw std::invalid_argument("cannot open " + opt.lambda_path);
    LambdaCode lam = read_lambda_file(in);
    if (!opt.flavor.empty()) lam.flavor = parse_flavor(opt.flavor);
    lam.k = opt.extra.empty() ? opt.k : static_cast<int>(opt.extra.size());
    if (!opt.extra.empty() && opt.k != 0 && static_cast<int>(opt.extra.size()) != opt.k)
        throw std::invalid_argument("--extra lists " + std::to_string(opt.extra.size()) +
                                    " columns but --k says " + std::to_string(opt.k));

    int m = lam.length - lam.k;
    if (m < 2) throw std::invalid_argument("short-code length minus k must leave at least two rows");
    HammingCode code = build_hamming(lam.field->q, m);

    ColumnChoice choice = default_choice(code, opt.extra.empty() ? lam.k : 0);
    if (!opt.base.empty()) choice.base = opt.base;
    if (!opt.extra.empty()) choice.extra = opt.extra;
    validate_choice(code, choice);

    ValidationReport validation = validate_lambda(lam);
    if (!validation.ok() && !opt.force) {
        std::cout << validation.to_string();
        return 1;
    }

    SwitchFamily fam;
    try {
        fam = build_family(code, choice, lam, /*force=*/true);
    } catch (const CapExceeded&) {
        throw;
    } catch (const std::runtime_error& e) {
        std::cout << e.what() << '\n';
        return 1;
    }

    AdmissibilityResult adm = check_admissible(fam);
    if (!adm.ok) {
        std::cout << "not admissible: " << adm.detail << '\n';
        return 1;
    }
    return emit(opt, [&](std::ostream& os) { write_family_file(os, fam); });
}

int run_switch(const Options& opt) {
    FamilyBundle loaded = load_family(opt.family_path);
    AdmissibilityResult adm = check_admissible(loaded.fam);
    if (!adm.ok) {
        std::cout << "not admissible: " << adm.detail << '\n';
        return 1;
    }
    PerfectCodeOracle oracle = switched_code(loaded.fam);
    if (opt.enumerate_all) {
        const HammingCode& code = *loaded.code;
        return emit(opt, [&](std::ostream& os) {
            os << code.q() << ' ' << code.m << ' ' << code.n << '\n';
            oracle.for_each([&os](const FqVector& c) { os << digit_line(c) << '\n'; });
        });
    }
    return emit(opt, [&](std::ostream& os) {
        os << "# switched code: membership oracle over the family below\n";
        write_family_file(os, loaded.fam);
    });
}

// Target selection shared by `verify perfect` and `verify mindist`: either a
// plain code (--q/--m) or a switched one (--family). The bundle passed in
// must outlive the returned oracle; it carries the family's parent code.
PerfectCodeOracle verify_target(const Options& opt, const CLI::App* cmd, FamilyBundle& keep) {
    if (!opt.family_path.empty()) {
        keep = load_family(opt.family_path);
        AdmissibilityResult adm = check_admissible(keep.fam);
        if (!adm.ok) throw std::invalid_argument("family is not admissible: " + adm.detail);
        return switched_code(keep.fam);
    }
    if (cmd->count("--q") == 0 || cmd->count("--m") == 0)
        throw std::invalid_argument("give either --family or both --q and --m");
    return oracle_from_hamming(build_hamming(opt.q, opt.m));
}

int run_verify_perfect(const Options& opt, const CLI::App* cmd) {
    FamilyBundle keep;
    PerfectCodeOracle oracle = verify_target(opt, cmd, keep);
    VerifyReport report = is_perfect(oracle, scan_mode(opt), opt.cap);
    std::cout << report.to_line() << '\n';
    return report.pass ? 0 : 1;
}

int run_verify_mindist(const Options& opt, const CLI::App* cmd) {
    FamilyBundle keep;
    PerfectCodeOracle oracle = verify_target(opt, cmd, keep);
    std::cout << "mindist " << min_distance(oracle, opt.cap) << '\n';
    return 0;
}

int run_verify_admissible(const Options& opt) {
    FamilyBundle loaded = load_family(opt.family_path);
    AdmissibilityResult adm = check_admissible(loaded.fam);
    if (!adm.ok) {
        std::cout << "not admissible: " << adm.detail << '\n';
        return 1;
    }
    std::cout << "admissible\n";
    return 0;
}

int run_verify_embed(const Options& opt) {
    FamilyBundle loaded = load_family(opt.family_path);
    AdmissibilityResult adm = check_admissible(loaded.fam);
    if (!adm.ok) {
        std::cout << "not admissible: " << adm.detail << '\n';
        return 1;
    }
    std::ifstream in(opt.lambda_path);
    if (!in) throw std::invalid_argument("cannot open " + opt.lambda_path);
    LambdaCode lam = read_lambda_file(in);
    lam.k = loaded.fam.k;

    PerfectCodeOracle oracle = switched_code(loaded.fam);
    EmbeddingReport report = embedding_check(lam, loaded.fam.choice, oracle, opt.strong, opt.cap);
    std::cout << report.weak.to_line() << '\n';
    // the strong direction is informational: a code can contain the padded
    // words without the chosen columns carving out exactly the short code
    if (report.strong) std::cout << report.strong->to_line() << '\n';
    return report.weak.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    opt.cap = default_cap();

    CLI::App app{"construct 1-perfect codes by switching component cosets of a Hamming code"};
    app.name("perfcode");
    app.require_subcommand(1);

    auto add_q = [&](CLI::App* cmd) { return cmd->add_option("--q", opt.q, "field size (2,3,4,5,7,8,9)"); };
    auto add_m = [&](CLI::App* cmd) { return cmd->add_option("--m", opt.m, "parity-check rows"); };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", opt.out, "write here instead of stdout"); };
    auto add_cap = [&](CLI::App* cmd) {
        cmd->add_option("--cap", opt.cap, "largest enumeration allowed (default from PERFCODE_CAP)");
    };

    CLI::App* ham = app.add_subcommand("hamming", "write a parity-check matrix file");
    add_q(ham)->required();
    add_m(ham)->required();
    add_out(ham);

    CLI::App* comp = app.add_subcommand("component", "print one coordinate's component basis");
    add_q(comp)->required();
    add_m(comp)->required();
    comp->add_option("--i", opt.i, "coordinate (1-based)")->required();

    CLI::App* build = app.add_subcommand("build", "lift a short code into a switch family");
    build->add_option("--lambda", opt.lambda_path, "short-code file")->required();
    build->add_option("--flavor", opt.flavor, "override the file's flavor (general|ternary|binext)");
    build->add_option("--k", opt.k, "extra columns beyond the identity block");
    build->add_option("--base", opt.base, "identity-block column indices")->delimiter(',');
    build->add_option("--extra", opt.extra, "extra column indices")->delimiter(',');
    build->add_flag("--force", opt.force, "lift even when short-code validation fails");
    add_out(build);

    CLI::App* sw = app.add_subcommand("switch", "apply a switch family to its parent code");
    sw->add_option("--family", opt.family_path, "family file")->required();
    sw->add_flag("--enumerate", opt.enumerate_all, "list every codeword of the switched code");
    add_out(sw);
    add_cap(sw);

    CLI::App* verify = app.add_subcommand("verify", "check properties of built objects");
    verify->require_subcommand(1);
    auto add_scan = [&](CLI::App* cmd) {
        cmd->add_option("--mode", opt.mode, "exhaustive|sampled");
        cmd->add_option("--seed", opt.seed, "sampled-mode RNG seed");
        cmd->add_option("--samples", opt.samples, "sampled-mode draw count");
        add_cap(cmd);
    };

    CLI::App* vperf = verify->add_subcommand("perfect", "every vector has exactly one codeword within distance one");
    add_q(vperf);
    add_m(vperf);
    vperf->add_option("--family", opt.family_path, "verify the switched code of this family");
    add_scan(vperf);

    CLI::App* vmin = verify->add_subcommand("mindist", "minimum distance of the code");
    add_q(vmin);
    add_m(vmin);
    vmin->add_option("--family", opt.family_path, "measure the switched code of this family");
    add_cap(vmin);

    CLI::App* vadm = verify->add_subcommand("admissible", "family cosets are pairwise disjoint");
    vadm->add_option("--family", opt.family_path, "family file")->required();

    CLI::App* vemb = verify->add_subcommand("embed", "short-code words pad to members of the switched code");
    vemb->add_option("--family", opt.family_path, "family file")->required();
    vemb->add_option("--lambda", opt.lambda_path, "short-code file")->required();
    vemb->add_flag("--strong", opt.strong, "also test that members restricted to the chosen columns are exactly the short code");
    add_cap(vemb);

    std::function<int()> action;
    ham->callback([&] { action = [&] { return run_hamming(opt); }; });
    comp->callback([&] { action = [&] { return run_component(opt); }; });
    build->callback([&] { action = [&] { return run_build(opt); }; });
    sw->callback([&] { action = [&] { return run_switch(opt); }; });
    vperf->callback([&] { action = [&] { return run_verify_perfect(opt, vperf); }; });
    vmin->callback([&] { action = [&] { return run_verify_mindist(opt, vmin); }; });
    vadm->callback([&] { action = [&] { return run_verify_admissible(opt); }; });
    vemb->callback([&] { action = [&] { return run_verify_embed(opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

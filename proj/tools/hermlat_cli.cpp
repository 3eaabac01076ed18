#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hermlat/json_io.hpp"

using namespace hermlat;

namespace {

bool g_pretty = false;

void emit(const Json& j) {
    if (g_pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

Json parse_json(const std::string& text, const char* what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(what);
    return j;
}

// Shared input options: either --ring/--gram (inline rows) or --in FILE/stdin.
struct LatticeInput {
    std::string in;
    int ring = 0;  // discriminants are negative; 0 means "not given"
    std::string gram;
    std::string basis;

    void attach(CLI::App* cmd) {
        cmd->add_option("--in", in, "lattice JSON file, or - for stdin");
        cmd->add_option("--ring", ring, "discriminant of the ambient ring");
        cmd->add_option("--gram", gram, "inline gram matrix as JSON rows");
        cmd->add_option("--basis", basis, "inline basis matrix as JSON rows");
    }

    HermLattice load() const {
        Json j;
        if (!gram.empty()) {
            if (ring == 0) throw ParseError("--gram requires --ring");
            j["ring"] = ring;
            j["gram"] = parse_json(gram, "gram");
            if (!basis.empty()) j["basis"] = parse_json(basis, "basis");
        } else {
            j = parse_json(slurp(in), "lattice");
        }
        return json_to_lattice(j);
    }
};

KElem load_pi(const HermLattice& l, const std::string& pi_text) {
    RingDesc ring = l.space.ring;
    if (pi_text.empty()) return ramified_prime(ring, ring.ramified_primes()[0]);
    KRat x = kr_parse(ring.delta, pi_text);
    if (!kr_is_integral(x)) throw ParseError("--pi must be integral");
    return kr_to_elem(x);
}

Json zform_to_json(const ZFormWithAction& z) {
    Json j;
    j["ring"] = z.ring.delta;
    j["kind"] = z.alternating ? "alt" : "sym";
    j["S"] = matrix_to_json(z.S);
    j["J"] = matrix_to_json(z.J);
    return j;
}

ZFormWithAction json_to_zform(const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("S") || !j.contains("J"))
        throw ParseError("zform");
    ZFormWithAction z;
    z.ring = make_ring(j["ring"].get<int>());
    z.alternating = j.value("kind", "sym") == std::string("alt");
    z.S = json_to_matrix(j["S"]);
    z.J = json_to_matrix(j["J"]);
    return z;
}

int run(int argc, char** argv) {
    CLI::App app{"exact hermitian lattice calculator"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "indent JSON output");

    // ring-info
    auto* ring_info = app.add_subcommand("ring-info", "describe a supported ring");
    int ri_delta = 0;
    ring_info->add_option("--ring", ri_delta, "discriminant")->required();

    // lattice-input verbs
    auto* dual_cmd = app.add_subcommand("dual", "dual lattice");
    LatticeInput dual_in;
    dual_in.attach(dual_cmd);

    auto* sig_cmd = app.add_subcommand("signature", "signature of the hermitian form");
    LatticeInput sig_in;
    sig_in.attach(sig_cmd);

    auto* disc_cmd = app.add_subcommand("disc-group", "discriminant group dual/lattice");
    LatticeInput disc_in;
    disc_in.attach(disc_cmd);

    auto* chain_cmd = app.add_subcommand("chain", "verify lattice < dual < pi^-1 lattice");
    LatticeInput chain_in;
    chain_in.attach(chain_cmd);
    std::string chain_pi;
    chain_cmd->add_option("--pi", chain_pi, "ramified prime element");

    auto* red_cmd = app.add_subcommand("reduce-mod-pi", "residue form and radical mod pi");
    LatticeInput red_in;
    red_in.attach(red_cmd);
    std::string red_pi;
    red_cmd->add_option("--pi", red_pi, "ramified prime element");

    auto* enum_cmd = app.add_subcommand("enumerate", "vectors with h(x,x) = t");
    LatticeInput enum_in;
    enum_in.attach(enum_cmd);
    long enum_t = 0;
    bool enum_serial = false;
    enum_cmd->add_option("--t", enum_t, "target value")->required();
    enum_cmd->add_flag("--serial", enum_serial, "use the serial reference kernel");

    auto* perp_cmd = app.add_subcommand("perp", "perpendicular sublattice");
    LatticeInput perp_in;
    perp_in.attach(perp_cmd);
    std::string perp_x;
    perp_cmd->add_option("--x", perp_x, "lattice vector as JSON array")->required();

    auto* conv_cmd = app.add_subcommand("convert", "hermitian <-> Z-form correspondences");
    LatticeInput conv_in;
    conv_in.attach(conv_cmd);
    std::string conv_to, conv_from;
    conv_cmd->add_option("--to", conv_to, "alt | sym | sym-scaled");
    conv_cmd->add_option("--from", conv_from, "alt | sym-scaled | sym-gaussian");

    // matrix verb
    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form divisors");
    std::string snf_in, snf_ring, snf_matrix;
    snf_cmd->add_option("--in", snf_in, "matrix JSON file, or - for stdin");
    snf_cmd->add_option("--ring", snf_ring, "discriminant, Z, or Q");
    snf_cmd->add_option("--matrix", snf_matrix, "inline matrix as JSON rows");

    // catalog verbs
    auto* prof_cmd = app.add_subcommand("case-profile", "dossier of an occult case");
    std::string prof_name;
    prof_cmd->add_option("name", prof_name, "case name")->required();

    auto* build_cmd = app.add_subcommand("case-build", "reference lattice of a case");
    std::string build_name;
    build_cmd->add_option("name", build_name, "case name")->required();

    auto* verify_cmd = app.add_subcommand("case-verify", "check a lattice against a case profile");
    std::string verify_name;
    verify_cmd->add_option("name", verify_name, "case name")->required();
    bool verify_build = false;
    verify_cmd->add_flag("--build", verify_build, "verify the built-in reference lattice");
    LatticeInput verify_in;
    verify_in.attach(verify_cmd);

    auto* star_cmd = app.add_subcommand("star-degree", "polarization degree and t-function");
    long star_d = 0, star_p = 0;
    int star_n = 0;
    star_cmd->add_option("--d", star_d, "square-free degree parameter")->required();
    star_cmd->add_option("--n", star_n, "hermitian rank")->required();
    star_cmd->add_option("--p", star_p, "prime for the t-function");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (ring_info->parsed()) {
        RingDesc r = make_ring(ri_delta);
        Json j;
        j["ring"] = r.delta;
        j["unit_count"] = r.unit_count;
        Json units = Json::array();
        for (const auto& u : r.units()) units.push_back(elem_to_json(kr_from_elem(u)));
        j["units"] = std::move(units);
        j["generator"] = elem_to_json(kr_from_elem(r.generator()));
        j["ramified_primes"] = r.ramified_primes();
        j["pi"] = elem_to_json(kr_from_elem(ramified_prime(r, r.ramified_primes()[0])));
        emit(j);
        return 0;
    }
    if (dual_cmd->parsed()) {
        emit(lattice_to_json(dual(dual_in.load())));
        return 0;
    }
    if (sig_cmd->parsed()) {
        auto s = signature(sig_in.load());
        Json j;
        j["p"] = s.first;
        j["q"] = s.second;
        emit(j);
        return 0;
    }
    if (disc_cmd->parsed()) {
        emit(disc_group_to_json(disc_group_dual(disc_in.load())));
        return 0;
    }
    if (chain_cmd->parsed()) {
        HermLattice l = chain_in.load();
        ChainReport r = verify_chain(l, load_pi(l, chain_pi));
        emit(chain_report_to_json(r));
        return r.holds ? 0 : 1;
    }
    if (red_cmd->parsed()) {
        HermLattice l = red_in.load();
        emit(reduction_to_json(reduce_mod_pi(l, load_pi(l, red_pi))));
        return 0;
    }
    if (enum_cmd->parsed()) {
        if (enum_t < 0) throw ParseError("--t must be nonnegative");
        HermLattice l = enum_in.load();
        RepSolutionSet s =
            enum_serial ? enumerate_vectors_serial(l, enum_t) : enumerate_vectors(l, enum_t);
        emit(solution_set_to_json(s));
        return 0;
    }
    if (perp_cmd->parsed()) {
        HermLattice l = perp_in.load();
        Json xj = parse_json(perp_x, "x");
        if (!xj.is_array()) throw ParseError("x");
        std::vector<KRat> x;
        for (const auto& c : xj) x.push_back(json_to_elem(l.space.ring.delta, c));
        emit(lattice_to_json(perp_lattice(l, x)));
        return 0;
    }
    if (conv_cmd->parsed()) {
        if (conv_to.empty() == conv_from.empty()) throw ParseError("convert needs --to or --from");
        if (!conv_to.empty()) {
            HermLattice l = conv_in.load();
            ZFormWithAction z;
            if (conv_to == "alt")
                z = trace_alt_form(l);
            else if (conv_to == "sym")
                z = trace_sym_form(l);
            else if (conv_to == "sym-scaled")
                z = sym_from_herm_scaled(l);
            else
                throw ParseError("--to");
            emit(zform_to_json(z));
        } else {
            ZFormWithAction z = json_to_zform(parse_json(slurp(conv_in.in), "zform"));
            HermLattice l;
            if (conv_from == "alt")
                l = herm_from_alt(z);
            else if (conv_from == "sym-scaled")
                l = herm_from_sym_scaled(z);
            else if (conv_from == "sym-gaussian")
                l = herm_from_sym_gaussian(z);
            else
                throw ParseError("--from");
            emit(lattice_to_json(l));
        }
        return 0;
    }
    if (snf_cmd->parsed()) {
        Json j;
        if (!snf_matrix.empty()) {
            if (snf_ring.empty()) throw ParseError("--matrix requires --ring");
            if (snf_ring == "Z" || snf_ring == "Q")
                j["ring"] = snf_ring;
            else
                j["ring"] = std::stoi(snf_ring);
            j["entries"] = parse_json(snf_matrix, "matrix");
        } else {
            j = parse_json(slurp(snf_in), "matrix");
        }
        SnfResult s = snf(json_to_matrix(j));
        Json out;
        Json divs = Json::array();
        for (const auto& d : s.divisors) divs.push_back(elem_to_json(kr_from_elem(d)));
        out["divisors"] = std::move(divs);
        emit(out);
        return 0;
    }
    if (prof_cmd->parsed()) {
        emit(case_profile_to_json(case_profile(prof_name)));
        return 0;
    }
    if (build_cmd->parsed()) {
        emit(lattice_to_json(build_case_lattice(build_name)));
        return 0;
    }
    if (verify_cmd->parsed()) {
        HermLattice l = verify_build ? build_case_lattice(verify_name) : verify_in.load();
        CaseReport r = verify_case(verify_name, l);
        emit(case_report_to_json(r));
        return r.pass ? 0 : 1;
    }
    if (star_cmd->parsed()) {
        Json j;
        j["degree"] = int_to_json(star_degree(star_d, star_n));
        if (star_p != 0) j["t"] = int_to_json(star_t_function(star_d, star_n, star_p));
        emit(j);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#include "unitons/canonical.hpp"
#include "unitons/errors.hpp"
#include "unitons/extsol.hpp"
#include "unitons/golden_tables.hpp"
#include "unitons/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace unitons;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

LatticeElement parse_xi(int n, const std::string& csv) {
    try {
        return LatticeElement::parse_csv(n, csv);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(std::string("--xi: ") + e.what());
    }
}

void print_check(const char* name, const CheckResult& check) {
    std::cout << "  " << name << ": " << (check.ok ? "ok" : "FAIL");
    if (check.witness) {
        std::cout << "  (generator " << check.witness->generator << ", residual ";
        bool first = true;
        for (const auto& [p, vec] : check.witness->residual.terms) {
            if (!first)
                std::cout << " + ";
            first = false;
            std::cout << "lambda^" << p << "*[";
            for (std::size_t i = 0; i < vec.size(); ++i)
                std::cout << (i ? ", " : "") << vec[i].str();
            std::cout << "]";
        }
        std::cout << ")";
    }
    std::cout << "\n";
}

void print_report(const VerificationReport& report) {
    print_check("lambda_module    ", report.lambda_module);
    print_check("pseudo_horizontal", report.pseudo_horizontal);
    print_check("su_condition     ", report.su_condition);
    if (report.involution)
        print_check("involution       ", *report.involution);
    std::cout << "  holomorphic      : ok (structural: generators polynomial in z)\n";
    std::cout << "  graded type      : d = (";
    for (std::size_t i = 0; i < report.graded_type.d.size(); ++i)
        std::cout << (i ? "," : "") << report.graded_type.d[i];
    std::cout << "), window [" << -report.graded_type.s << ", " << report.graded_type.r << "]\n";
}

int cmd_info(int n, const std::string& xi_csv, bool as_json) {
    LatticeElement xi = parse_xi(n, xi_csv);
    bool member = in_lattice(xi);
    EExpansion e = h_to_e(xi);

    if (as_json) {
        json j;
        j["element"] = to_json(xi);
        j["in_lattice"] = member;
        json ej = json::array();
        for (const auto& q : e.e)
            ej.push_back(q.get_str());
        j["e_expansion"] = ej;
        j["dominant"] = is_dominant(xi);
        if (member && is_dominant(xi)) {
            j["symmetric_trivial"] = symmetric_trivial(xi);
            LoopExponents le = loop_exponents(xi);
            j["loop_exponents"] = le.c;
            EigenspaceDims dims = eigenspace_dims(xi);
            json dj;
            for (const auto& [i, d] : dims.dim)
                dj[std::to_string(i)] = d;
            j["eigenspace_dims"] = dj;
            j["r"] = dims.r;
            j["target"] = grassmannian_target(xi).str();
            if (!is_zero(xi))
                j["flag_type"] = to_json(flag_type(xi));
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "xi = (" << xi.csv() << "), n = " << n << "\n";
    std::cout << "  e-expansion: [";
    for (std::size_t i = 0; i < e.e.size(); ++i)
        std::cout << (i ? ", " : "") << e.e[i].get_str();
    std::cout << "]\n";
    if (!member) {
        std::cout << "  not in the integer lattice of SU(" << n << ")\n";
        return kExitOk;
    }
    std::cout << "  in lattice: yes\n";
    if (!is_dominant(xi)) {
        std::cout << "  not dominant; order and flag data need dominance\n";
        return kExitOk;
    }
    if (is_zero(xi)) {
        std::cout << "  zero element: gamma is the constant loop, no flag\n";
        return kExitOk;
    }
    LoopExponents le = loop_exponents(xi);
    std::cout << "  loop exponents: [";
    for (std::size_t i = 0; i < le.c.size(); ++i)
        std::cout << (i ? ", " : "") << le.c[i];
    std::cout << "]\n";
    FlagType ft = flag_type(xi);
    std::cout << "  flag type: d = (";
    for (std::size_t i = 0; i < ft.d.size(); ++i)
        std::cout << (i ? "," : "") << ft.d[i];
    std::cout << ") over [" << -ft.s << ", " << ft.r << "]\n";
    EigenspaceDims dims = eigenspace_dims(xi);
    std::cout << "  eigenspace dims:";
    for (const auto& [i, d] : dims.dim)
        std::cout << " " << i << ":" << d;
    std::cout << "   r(xi) = " << dims.r << "\n";
    std::cout << "  target: " << grassmannian_target(xi).str() << "\n";
    std::cout << "  symmetric-trivial: " << (symmetric_trivial(xi) ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_canonical(int n, const std::string& support_csv, bool symmetric, bool raw,
                  bool as_json) {
    std::vector<LatticeElement> elements;
    if (symmetric) {
        if (!support_csv.empty())
            throw CLI::ValidationError("--support cannot be combined with --symmetric");
        elements = enumerate_symmetric_canonical(n);
    } else if (!support_csv.empty()) {
        std::vector<int> I;
        std::stringstream ss(support_csv);
        std::string tok;
        while (std::getline(ss, tok, ','))
            I.push_back(std::stoi(tok));
        elements = enumerate_I_canonical(n, I);
    } else {
        elements = enumerate_all_canonical(n);
    }
    CanonicalSet set = make_canonical_set(
        n, symmetric ? CanonicalMode::symmetric : CanonicalMode::plain, std::move(elements));
    set = quotient_by_symmetry(std::move(set));

    if (as_json) {
        json j = orbit_set_json(set);
        if (raw) {
            json all = json::array();
            for (const auto& e : set.elements)
                all.push_back(e.coeffs);
            j["elements"] = all;
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    if (raw) {
        for (const auto& e : set.elements)
            std::cout << e.csv() << "\n";
        return kExitOk;
    }
    for (const auto& orbit : set.orbits) {
        const LatticeElement& rep = orbit.front();
        std::cout << rep.csv();
        std::cout << "   support={";
        auto I = support(rep);
        for (std::size_t i = 0; i < I.size(); ++i)
            std::cout << (i ? "," : "") << I[i];
        std::cout << "}";
        if (symmetric)
            std::cout << "  target=" << grassmannian_target(rep).str();
        FlagType ft = flag_type(rep);
        std::cout << "  d=(";
        for (std::size_t i = 0; i < ft.d.size(); ++i)
            std::cout << (i ? "," : "") << ft.d[i];
        std::cout << ")";
        if (orbit.size() > 1) {
            std::cout << "  orbit:";
            for (std::size_t i = 1; i < orbit.size(); ++i)
                std::cout << " " << orbit[i].csv();
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_order(int n, const std::string& a_csv, const std::string& b_csv) {
    LatticeElement a = parse_xi(n, a_csv);
    LatticeElement b = parse_xi(n, b_csv);
    std::cout << "leq:            " << (leq(a, b) ? "true" : "false") << "\n";
    std::cout << "leq (roots):    " << (leq_root_oracle(a, b) ? "true" : "false") << "\n";
    std::cout << "symmetric leq:  " << (symmetric_leq(a, b) ? "true" : "false") << "\n";
    return kExitOk;
}

int cmd_construct(int n, const std::string& xi_csv, std::uint64_t seed, int degree,
                  const std::string& json_out) {
    LatticeElement xi = parse_xi(n, xi_csv);
    if (!is_dominant(xi) || is_zero(xi) || !in_lattice(xi))
        throw CLI::ValidationError("--xi must be a nonzero dominant lattice element");
    HoloFlag flag = build_canonical_flag(xi, seed, degree);
    FlagType ft = flag_type(xi);
    GradedModel w = s1_invariant_model(flag, ft);
    VerifyOptions opts;
    opts.check_involution = true;
    VerificationReport report = verify(w, opts);
    std::cout << "built S^1-invariant model for xi = (" << xi.csv() << "), seed " << seed
              << "\n";
    print_report(report);
    bool type_match = report.graded_type == ft;
    std::cout << "  graded type == flag type: " << (type_match ? "yes" : "NO") << "\n";
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out)
            throw CLI::ValidationError("cannot write " + json_out);
        out << to_json(w).dump(2) << "\n";
        std::cout << "  model written to " << json_out << "\n";
    }
    return (report.passed() && type_match) ? kExitOk : kExitVerifyFail;
}

int cmd_verify(const std::string& input, bool involution) {
    std::ifstream in(input);
    if (!in)
        throw CLI::ValidationError("cannot read " + input);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw CLI::ValidationError(std::string("parse error: ") + e.what());
    }
    GradedModel w;
    try {
        w = model_from_json(j);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(std::string("bad model: ") + e.what());
    }
    VerifyOptions opts;
    opts.check_involution = involution;
    VerificationReport report = verify(w, opts);
    print_report(report);
    std::cout << json(to_json(report)).dump(2) << "\n";
    return report.passed() ? kExitOk : kExitVerifyFail;
}

int cmd_tables(int which) {
    TableCheck check = check_table(which);
    for (const auto& cell : check.cells) {
        std::cout << (cell.pass ? "PASS " : "FAIL ") << cell.cell;
        for (const auto& miss : cell.missing)
            std::cout << "  missing orbit of (" << miss << ")";
        std::cout << "\n";
    }
    for (const auto& extra : check.extra_orbits)
        std::cout << "FAIL extra orbit " << extra << "\n";
    std::cout << (check.pass ? "PASS" : "FAIL") << " table " << which << "\n";
    return check.pass ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification and construction of finite-uniton-number harmonic maps "
                 "into SU(n)"};
    app.require_subcommand(1);

    int n = 0;
    std::string xi_csv, xi2_csv, support_csv, input, json_out;
    bool symmetric = false, raw = false, as_json = false, involution = false;
    std::uint64_t seed = 1;
    int degree = -1;
    int which = 1;

    auto* info = app.add_subcommand("info", "lattice data for one element");
    info->add_option("--n", n, "matrix size")->required();
    info->add_option("--xi", xi_csv, "coefficients, e.g. 1,2,1")->required();
    info->add_flag("--json", as_json, "machine output");

    auto* canonical = app.add_subcommand("canonical", "enumerate canonical elements");
    canonical->add_option("--n", n, "matrix size")->required();
    canonical->add_option("--support", support_csv, "restrict to one support, e.g. 1,2,3");
    canonical->add_flag("--symmetric", symmetric, "symmetric canonical elements");
    canonical->add_flag("--raw", raw, "print all elements, no symmetry quotient");
    canonical->add_flag("--json", as_json, "machine output");

    auto* order = app.add_subcommand("order", "compare two dominant elements");
    order->add_option("--n", n, "matrix size")->required();
    order->add_option("--xi", xi_csv, "first element")->required();
    order->add_option("--xi2", xi2_csv, "second element")->required();

    auto* construct = app.add_subcommand("construct", "build and verify a model");
    construct->add_option("--n", n, "matrix size")->required();
    construct->add_option("--xi", xi_csv, "nonzero dominant lattice element")->required();
    construct->add_option("--seed", seed, "random seed")->required();
    construct->add_option("--degree", degree, "random section degree (default n-1)");
    construct->add_option("--json", json_out, "write the model to this file");

    auto* verify_cmd = app.add_subcommand("verify", "verify a serialized model");
    verify_cmd->add_option("--input", input, "GradedModel JSON file")->required();
    verify_cmd->add_flag("--involution", involution, "also check the involution");

    auto* tables = app.add_subcommand("tables", "reproduce the published tables");
    tables->add_option("--which", which, "1 or 2")->required()->check(CLI::Range(1, 2));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (info->parsed())
            return cmd_info(n, xi_csv, as_json);
        if (canonical->parsed())
            return cmd_canonical(n, support_csv, symmetric, raw, as_json);
        if (order->parsed())
            return cmd_order(n, xi_csv, xi2_csv);
        if (construct->parsed())
            return cmd_construct(n, xi_csv, seed, degree, json_out);
        if (verify_cmd->parsed())
            return cmd_verify(input, involution);
        if (tables->parsed())
            return cmd_tables(which);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegreeCapExceeded& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const RetryExhausted& e) {
        std::cerr << "degeneracy error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitUsage;
}

// clifctl: command-line front end for the exact Clifford/composition-algebra
// library. Exit codes: 0 = all checks pass, 1 = a mathematical check failed
// or the input spinor is degenerate, 2 = usage or input error.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "clif/geometry.hpp"
#include "clif/json_io.hpp"
#include "clif/report.hpp"

using namespace clif;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot open output file: " + out_path);
    f << text;
    if (!f.good()) throw UsageError("write failed: " + out_path);
}

const CliffordModel& model_or_throw(const std::string& name) {
    try {
        return build_model(name);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

/// Inline JSON or @file.
json parse_json_arg(const std::string& spec) {
    std::string text = spec;
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream f(spec.substr(1));
        if (!f) throw UsageError("cannot read spinor file: " + spec.substr(1));
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw UsageError("spinor is not valid JSON: " + spec);
    return j;
}

AlgKind model_algebra(const CliffordModel& m) {
    if (m.name == "cl8") return AlgKind::O;
    if (m.name.rfind("cl44", 0) == 0) return AlgKind::Osplit;
    throw UsageError("spinor commands support the 16-dimensional models, not " + m.name);
}

/// Parses a spinor (algebra-coordinate or polyform JSON) into chiral model
/// coordinates, echoing both forms.
struct SpinorInput {
    std::vector<GaussRational> coords;  // positive-chirality half
    json echo;
};

SpinorInput parse_spinor(const CliffordModel& m, const std::string& spec) {
    json j = parse_json_arg(spec);
    SpinorInput in;
    try {
        if (j.contains("gen")) {
            Polyform p = polyform_from_json(j);
            auto full = coords_in_basis(p, m.basis);
            in.coords.assign(full.begin(), full.begin() + m.half());
            for (size_t k = m.half(); k < full.size(); ++k)
                if (!full[k].is_zero())
                    throw UsageError("polyform spinor must be even (positive chirality)");
            in.echo["polyform"] = json_of(p);
        } else {
            AlgElement x = spinor_from_json(j);
            if (x.kind != model_algebra(m))
                throw UsageError("spinor algebra " + alg_kind_name(x.kind) +
                                 " does not match model " + m.name);
            in.coords = x.coords;
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    // the chiral basis coordinates are the algebra coordinates
    in.echo["algebra"] = json_of(AlgElement(model_algebra(m), in.coords));
    return in;
}

int cmd_verify(const std::string& model_name, bool as_json, const std::string& out) {
    const CliffordModel& m = model_or_throw(model_name);
    CliffordReport rep = verify_clifford(m);
    if (as_json) {
        json pairs = json::array();
        for (const PairCheck& p : rep.pairs)
            pairs.push_back({{"I", p.I}, {"J", p.J}, {"pass", p.pass}});
        json j = {{"model", m.name},
                  {"pairs", pairs},
                  {"chirality_ok", rep.chirality_ok},
                  {"reality_ok", rep.reality_ok},
                  {"all_pass", rep.all_pass()}};
        write_output(dump_canonical(j), out);
    } else {
        std::ostringstream os;
        int failed = 0;
        for (const PairCheck& p : rep.pairs)
            if (!p.pass) {
                os << "FAIL anticommutator (" << p.I << ", " << p.J << ")\n";
                ++failed;
            }
        os << "model " << m.name << ": " << rep.pairs.size() - failed << "/" << rep.pairs.size()
           << " anticommutators, chirality " << (rep.chirality_ok ? "ok" : "FAIL") << ", reality "
           << (rep.reality_ok ? "ok" : "FAIL") << "\n";
        write_output(os.str(), out);
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_table(const std::string& alg_name, const std::string& format, const std::string& out) {
    AlgKind kind;
    try {
        kind = parse_alg_kind(alg_name);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    const CompAlgebra& alg = make_algebra(kind);
    std::ostringstream os;
    auto cell = [&](int a, int b) {
        auto [sign, c] = alg.table[a][b];
        return std::string(sign < 0 ? "-" : "+") + alg.basis_name(c);
    };
    if (format == "json") {
        json rows = json::array();
        for (int a = 0; a < alg.dim; ++a) {
            json row = json::array();
            for (int b = 0; b < alg.dim; ++b) row.push_back(cell(a, b));
            rows.push_back(std::move(row));
        }
        json j = {{"algebra", alg_kind_name(kind)},
                  {"basis", json::array()},
                  {"table", std::move(rows)}};
        for (int a = 0; a < alg.dim; ++a) j["basis"].push_back(alg.basis_name(a));
        write_output(dump_canonical(j), out);
    } else if (format == "csv") {
        for (int a = 0; a < alg.dim; ++a) {
            for (int b = 0; b < alg.dim; ++b) os << (b ? "," : "") << cell(a, b);
            os << "\n";
        }
        write_output(os.str(), out);
    } else {
        os << alg_kind_name(kind) << " multiplication table\n";
        for (int a = 0; a < alg.dim; ++a) {
            for (int b = 0; b < alg.dim; ++b) os << (b ? " " : "") << cell(a, b);
            os << "\n";
        }
        write_output(os.str(), out);
    }
    return 0;
}

int cmd_report(const std::string& out) {
    auto entries = run_report();
    write_output(dump_canonical(report_json(entries)), out);
    for (const ReportEntry& e : entries)
        if (e.status == "fail") return 1;
    return 0;
}

int cmd_stabilizer(const std::string& model_name, const std::string& spinor, bool as_json,
                   const std::string& out) {
    const CliffordModel& m = model_or_throw(model_name);
    SpinorInput in = parse_spinor(m, spinor);
    StabilizerReport s = stabilizer(m, in.coords);
    if (as_json) {
        json kernel = json::array();
        for (const auto& v : s.kernel) kernel.push_back(json_of(v));
        json j = {{"model", m.name},
                  {"spinor", in.echo},
                  {"dim", s.dim},
                  {"label", s.label},
                  {"kernel", std::move(kernel)}};
        write_output(dump_canonical(j), out);
    } else {
        std::ostringstream os;
        os << "stabilizer dimension " << s.dim;
        if (!s.label.empty()) os << " (" << s.label << ")";
        os << "\n";
        write_output(os.str(), out);
    }
    return 0;
}

int cmd_classify(const std::string& model_name, const std::string& spinor, bool as_json,
                 const std::string& out) {
    const CliffordModel& m = model_or_throw(model_name);
    SpinorInput in = parse_spinor(m, spinor);
    OrbitReport rep = classify_orbit(m, in.coords);
    int dim = stabilizer(m, in.coords).dim;
    if (as_json) {
        json j = {{"model", m.name},
                  {"spinor", in.echo},
                  {"label", rep.label},
                  {"stabilizer_dim", dim},
                  {"invariants",
                   {{"q_self", json_of(rep.inv.q_self)},
                    {"q_R", json_of(rep.inv.q_R)},
                    {"alpha_norm2", json_of(rep.inv.alpha_norm2)},
                    {"beta_norm2", json_of(rep.inv.beta_norm2)},
                    {"alpha_beta_pairing", json_of(rep.inv.alpha_beta_pairing)}}}};
        write_output(dump_canonical(j), out);
    } else {
        std::ostringstream os;
        os << "orbit " << rep.label << ", stabilizer dimension " << dim << "\n";
        write_output(os.str(), out);
    }
    return 0;
}

int cmd_annihilator(const std::string& model_name, const std::string& spinor, bool as_json,
                    const std::string& out) {
    const CliffordModel& m = model_or_throw(model_name);
    SpinorInput in = parse_spinor(m, spinor);
    AnnihilatorReport rep = annihilator(m, in.coords);
    if (as_json) {
        json basis = json::array();
        for (const auto& v : rep.basis) basis.push_back(json_of(v));
        json j = {{"model", m.name},
                  {"spinor", in.echo},
                  {"dim", rep.dim},
                  {"real_index", rep.real_index},
                  {"pure", rep.dim == int(m.labels.size()) / 2},
                  {"basis", std::move(basis)}};
        write_output(dump_canonical(j), out);
    } else {
        std::ostringstream os;
        os << "annihilator dimension " << rep.dim << ", real index " << rep.real_index << ", "
           << (rep.dim == int(m.labels.size()) / 2 ? "pure" : "not pure") << "\n";
        write_output(os.str(), out);
    }
    return 0;
}

int cmd_bilinear(const std::string& model_name, int k, const std::string& psi_spec,
                 const std::string& phi_spec, bool as_json, const std::string& out) {
    const CliffordModel& m = model_or_throw(model_name);
    SpinorInput psi = parse_spinor(m, psi_spec);
    SpinorInput phi = parse_spinor(m, phi_spec.empty() ? psi_spec : phi_spec);
    if (k < 0 || k > int(m.labels.size())) throw UsageError("k out of range for this model");
    Form f = bilinear(m, k, embed_chiral(m, psi.coords), embed_chiral(m, phi.coords));
    if (as_json) {
        json j = {{"model", m.name},
                  {"k", k},
                  {"psi", psi.echo},
                  {"phi", phi.echo},
                  {"form", json_of(f)}};
        write_output(dump_canonical(j), out);
    } else {
        write_output("B_" + std::to_string(k) + " = " + f.str() + "\n", out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Clifford algebra and composition algebra verifier"};
    app.require_subcommand(1);

    std::string model, algebra, spinor, psi, phi, out, format = "text";
    int k = 0;
    bool as_json = false;

    auto add_common = [&](CLI::App* sub, bool needs_spinor) {
        sub->add_option("--model", model, "model name")->required();
        if (needs_spinor)
            sub->add_option("--spinor", spinor, "spinor JSON (inline or @file)")->required();
        sub->add_flag("--json", as_json, "JSON output");
        sub->add_option("--out", out, "output file (default stdout)");
    };

    CLI::App* verify = app.add_subcommand("verify", "exhaustive Clifford relation check");
    verify->add_option("--model", model, "model name")->required();
    verify->add_flag("--json", as_json, "JSON output");
    verify->add_option("--out", out, "output file (default stdout)");

    CLI::App* table = app.add_subcommand("table", "signed multiplication table");
    table->add_option("--algebra", algebra, "algebra name (C, C', H, H', O, O')")->required();
    table->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    table->add_option("--out", out, "output file (default stdout)");

    CLI::App* report = app.add_subcommand("report", "full verification report (JSON)");
    report->add_option("--out", out, "output file (default stdout)");

    CLI::App* stab = app.add_subcommand("stabilizer", "stabilizer subalgebra of a spinor");
    add_common(stab, true);
    CLI::App* classify = app.add_subcommand("classify", "orbit classification of a spinor");
    add_common(classify, true);
    CLI::App* annih = app.add_subcommand("annihilator", "annihilator subspace of a spinor");
    add_common(annih, true);

    CLI::App* bil = app.add_subcommand("bilinear", "bilinear covariant B_k of a spinor pair");
    bil->add_option("--model", model, "model name")->required();
    bil->add_option("--k", k, "form degree")->required();
    bil->add_option("--psi", psi, "first spinor JSON (inline or @file)")->required();
    bil->add_option("--phi", phi, "second spinor JSON (defaults to --psi)");
    bil->add_flag("--json", as_json, "JSON output");
    bil->add_option("--out", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(model, as_json, out);
        if (table->parsed()) return cmd_table(algebra, format, out);
        if (report->parsed()) return cmd_report(out);
        if (stab->parsed()) return cmd_stabilizer(model, spinor, as_json, out);
        if (classify->parsed()) return cmd_classify(model, spinor, as_json, out);
        if (annih->parsed()) return cmd_annihilator(model, spinor, as_json, out);
        if (bil->parsed()) return cmd_bilinear(model, k, psi, phi, as_json, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // degenerate mathematical input (zero spinor, irrational normalizer, ...)
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

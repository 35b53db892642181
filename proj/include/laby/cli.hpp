#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ariadne.hpp"
#include "correspondence.hpp"
#include "functor_lab.hpp"
#include "io.hpp"
#include "presentation.hpp"
#include "pretty.hpp"
#include "quotient.hpp"
#include "verify.hpp"

namespace laby {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitParse = 2, kExitDomain = 3, kExitLimit = 4 };

namespace cli {

struct Flags {
    long degree = 0;
    std::string category = "laby";
    std::string kind = "laby";
    std::string format = "json";
    std::string table_format = "pretty";
    std::uint64_t seed = 0;
    int trials = 50;
    std::vector<std::string> inputs;
    std::string suite = "all";
};

inline long need_degree(const Flags& f, const char* cmd) {
    if (f.degree < 1) throw DomainError(std::string(cmd) + ": --degree/-n is required");
    return f.degree;
}

template <class T>
void emit(std::ostream& out, const Flags& f, const T& v) {
    if (f.format == "pretty") out << pretty(v);
    else out << dump(to_json(v)) << "\n";
}

inline void compose(std::ostream& out, const Flags& f) {
    json a = read_json_file(f.inputs.at(0)), b = read_json_file(f.inputs.at(1));
    if (f.category == "mset") {
        emit(out, f, multhom_compose(multhom_from_json(a), multhom_from_json(b)));
        return;
    }
    MazeHom p = mazehom_from_json(a), q = mazehom_from_json(b);
    if (f.category == "laby") emit(out, f, mazehom_compose(p, q));
    else if (f.category == "laby_n") emit(out, f, compose_in_laby_n(p, q, need_degree(f, "compose")));
    else if (f.category == "laby_hom") emit(out, f, compose_in_laby_hom(p, q, need_degree(f, "compose")));
    else throw DomainError("unknown category: " + f.category);
}

inline void normalize(std::ostream& out, const Flags& f) {
    MazeHom h = mazehom_from_json(read_json_file(f.inputs.at(0)));
    long n = need_degree(f, "normalize");
    if (f.category == "laby_n" || f.category == "laby") emit(out, f, normalize_numerical(h, n));
    else if (f.category == "laby_hom") emit(out, f, normalize_homogeneous(h, n));
    else throw DomainError("normalize: category must be laby_n or laby_hom");
}

inline void ariadne(std::ostream& out, const Flags& f) {
    emit(out, f, ariadne_hom(mazehom_from_json(read_json_file(f.inputs.at(0))), need_degree(f, "ariadne")));
}

inline void theseus(std::ostream& out, const Flags& f) {
    emit(out, f, theseus_hom(multhom_from_json(read_json_file(f.inputs.at(0))), need_degree(f, "theseus")));
}

inline void xi(std::ostream& out, const Flags& f) {
    json j = read_json_file(f.inputs.at(0));
    if (j.contains("middle")) {
        auto c = correspondence_from_json(j);
        if (!validate_correspondence(c)) throw DomainError("xi: correspondence has a dead end");
        emit(out, f, xi_correspondence(c));
    } else {
        Maze m = maze_from_json(j);
        if (!m.is_pure()) throw DomainError("xi: only pure mazes correspond to correspondences");
        emit(out, f, xi_inverse(m));
    }
}

inline void tables(std::ostream& out, const Flags& f) {
    if (f.degree != 0 && f.degree != 2) throw DomainError("tables: only degree 2 is tabulated");
    if (f.table_format == "json") {
        json t1 = json::object(), t2 = json::object();
        for (const auto& c : laby2_table()) t1[c.row][c.col] = laby2_cell_text(c);
        for (const auto& c : mset2_table()) t2[c.row][c.col] = mset2_cell_text(c);
        out << dump(json{{"laby2", t1}, {"mset2", t2}}) << "\n";
        return;
    }
    out << "Laby_2 (row o col)\n" << render_laby2_table() << "\nMSet_2 (row o col)\n" << render_mset2_table();
}

template <class Layout, class Name>
json legend(const Layout& l, Name name) {
    json out = json::array();
    for (std::size_t i = 0; i < l.index.size(); ++i)
        out.push_back(json{{"block", name(l.index[i])}, {"offset", l.offset[i]}, {"size", l.size(i)}});
    return out;
}

inline void eval(std::ostream& out, const Flags& f) {
    json module = read_json_file(f.inputs.at(0)), mj = read_json_file(f.inputs.at(1));
    IntMatrix m = matrix_from_json(mj);
    AbHom r;
    json dom, cod;
    if (f.kind == "laby") {
        auto h = checked(laby_presentation_from_json(module));
        r = phi_inverse_eval(h, m);
        auto name = [](const std::vector<std::size_t>& x) { return json(detail::index_names(x)); };
        dom = legend(phi_inverse_layout(h, m.cols()), name);
        cod = legend(phi_inverse_layout(h, m.rows()), name);
    } else if (f.kind == "mset") {
        auto j = checked(mset_presentation_from_json(module));
        r = psi_inverse_eval(j, m);
        auto name = [](const MSet& x) { return to_json(x); };
        dom = legend(psi_inverse_layout(j, m.cols()), name);
        cod = legend(psi_inverse_layout(j, m.rows()), name);
    } else {
        throw DomainError("eval: --kind must be laby or mset");
    }
    if (f.format == "pretty") {
        out << pretty(r) << "domain blocks: " << dom.dump() << "\ncodomain blocks: " << cod.dump() << "\n";
        return;
    }
    out << dump(json{{"hom", to_json(r)}, {"dom_blocks", dom}, {"cod_blocks", cod}}) << "\n";
}

inline bool verify(std::ostream& out, const Flags& f) {
    VerifyOptions o{f.seed, f.trials};
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    run_suite(f.suite, o, [&](const CheckResult& r) {
        ok = ok && r.report.ok;
        out << (r.report.ok ? "PASS" : "FAIL") << "  " << r.suite << ": " << r.name << "  (" << r.report.checked
            << " cases, " << std::fixed << std::setprecision(3) << r.seconds << " s)\n";
        if (!r.report.ok) out << "      counterexample: " << r.report.detail << "\n";
    });
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << (ok ? "all checks passed" : "some checks FAILED") << " in " << std::fixed << std::setprecision(3) << s
        << " s (seed " << f.seed << ", trials " << f.trials << ")\n";
    return ok;
}

}  // namespace cli

/// Entry point of the `laby` binary; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    cli::Flags f;
    CLI::App app{"Labyrinth category toolkit: mazes, multations and polynomial functor presentations"};
    app.require_subcommand(1);
    auto common = [&](CLI::App* s) {
        s->add_option("-n,--degree", f.degree, "degree n");
        s->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "pretty"}));
    };
    auto* c = app.add_subcommand("compose", "compose two arrows, left o right");
    c->add_option("inputs", f.inputs, "left and right arrow files")->required()->expected(2);
    c->add_option("--category", f.category)->check(CLI::IsMember({"laby", "laby_n", "laby_hom", "mset"}));
    common(c);
    auto* nz = app.add_subcommand("normalize", "normal form in Laby_n or Laby^n");
    nz->add_option("input", f.inputs)->required()->expected(1);
    nz->add_option("--category", f.category)->check(CLI::IsMember({"laby_n", "laby_hom"}));
    common(nz);
    auto* ar = app.add_subcommand("ariadne", "Ariadne matrix of a maze combination");
    ar->add_option("input", f.inputs)->required()->expected(1);
    common(ar);
    auto* th = app.add_subcommand("theseus", "Theseus image of a multation combination");
    th->add_option("input", f.inputs)->required()->expected(1);
    common(th);
    auto* x = app.add_subcommand("xi", "correspondence <-> pure maze");
    x->add_option("input", f.inputs)->required()->expected(1);
    common(x);
    auto* tb = app.add_subcommand("tables", "degree-2 multiplication tables");
    tb->add_option("-n,--degree", f.degree);
    tb->add_option("--format", f.table_format)->check(CLI::IsMember({"json", "pretty"}));
    auto* ev = app.add_subcommand("eval", "evaluate a presented functor on an integer matrix");
    ev->add_option("inputs", f.inputs, "module file and matrix file")->required()->expected(2);
    ev->add_option("--kind", f.kind)->check(CLI::IsMember({"laby", "mset"}));
    common(ev);
    auto* vf = app.add_subcommand("verify", "run verification suites");
    vf->add_option("suite", f.suite)->check(CLI::IsMember(verify_suites()));
    vf->add_option("--seed", f.seed);
    vf->add_option("--trials", f.trials)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kExitOk : kExitParse;
    }
    try {
        if (c->parsed()) cli::compose(out, f);
        else if (nz->parsed()) cli::normalize(out, f);
        else if (ar->parsed()) cli::ariadne(out, f);
        else if (th->parsed()) cli::theseus(out, f);
        else if (x->parsed()) cli::xi(out, f);
        else if (tb->parsed()) cli::tables(out, f);
        else if (ev->parsed()) cli::eval(out, f);
        else if (vf->parsed()) return cli::verify(out, f) ? kExitOk : kExitVerifyFailed;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const EnumerationLimit& e) {
        err << "enumeration limit: " << e.what() << "\n";
        return kExitLimit;
    } catch (const json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

}  // namespace laby

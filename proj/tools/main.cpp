#include "wahl/fixture_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace wahl;

jio::Value triple_json(const classt::ClassTTriple& t) {
    jio::Value rec{jio::Object{}};
    rec.set("d", t.d);
    rec.set("n", t.n);
    rec.set("a", t.a);
    return rec;
}

jio::Array int_array(const std::vector<Int>& xs) {
    jio::Array a;
    for (const Int& x : xs) a.push_back(jio::Value(x));
    return a;
}

std::string bracketed(const std::vector<Int>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += xs[i].str();
    }
    return out + "]";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string invariants_line(const classt::ClassTInvariants& inv) {
    std::ostringstream out;
    out << "(d,n,a) = (" << inv.triple.d << "," << inv.triple.n << "," << inv.triple.a
        << ")   delta = " << inv.delta << "   l = " << inv.l << "   B = " << bracketed(inv.B)
        << "   R = " << bracketed(inv.R);
    return out.str();
}

jio::Value invariants_json(const classt::ClassTInvariants& inv) {
    jio::Value out{jio::Object{}};
    out.set("triple", triple_json(inv.triple));
    out.set("delta", inv.delta);
    out.set("l", inv.l);
    out.set("B", int_array(inv.B));
    out.set("P", int_array(inv.P));
    out.set("Q", int_array(inv.Q));
    out.set("R", int_array(inv.R));
    jio::Array c;
    for (const Rat& x : inv.C) c.push_back(jio::rational(x));
    out.set("C", jio::Value(std::move(c)));
    return out;
}

void print_json(jio::Value body) {
    jio::Value out{jio::Object{}};
    out.set("schema_version", 1);
    for (const jio::Member& m : body.as_object()) out.set(m.first, m.second);
    std::cout << jio::dump(out);
}

/// Table 1 rows at parameters (k, m): the five infinite families plus the
/// base case, in display order.
std::vector<classt::ClassTTriple> table1_rows(const Int& k, const Int& m) {
    require(k >= 2, "table 1 needs --k >= 2");
    require(m >= 3, "table 1 needs --m >= 3");
    return {classt::ClassTTriple(1, 2, 1),         classt::ClassTTriple(k, 2, 1),
            classt::ClassTTriple(1, m, 1),         classt::ClassTTriple(1, 2 * m - 1, m),
            classt::ClassTTriple(k, m, 1),         classt::ClassTTriple(1, 3 * m - 1, m)};
}

const std::vector<classt::ClassTTriple>& table2_rows() {
    static const std::vector<classt::ClassTTriple> rows = {
        {1, 11, 3}, {1, 19, 5}, {1, 19, 13}, {3, 23, 4},
        {1, 25, 17}, {1, 35, 6}, {1, 63, 34}, {1, 252, 145}};
    return rows;
}

int run(int argc, char** argv) {
    CLI::App app{"exact calculus of Hirzebruch-Jung chains, class-T singularities,\n"
                 "and verification of chain-contraction constructions"};
    app.require_subcommand(1);
    app.fallthrough();  // inherited: lets subcommands hand --json back up
    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of text");

    std::string arg_n, arg_q, arg_d, arg_a, arg_a1, arg_a2, arg_char = "0";
    std::string arg_file, arg_builtin, arg_maxl, arg_table, arg_charmap = "default";
    std::string arg_k = "2", arg_m = "3";

    auto* expand = app.add_subcommand("expand", "Hirzebruch-Jung expansion of n/q");
    expand->add_option("n", arg_n)->required();
    expand->add_option("q", arg_q)->required();

    auto* classify = app.add_subcommand("classify", "recognize (N,Q) as class T");
    classify->add_option("N", arg_n)->required();
    classify->add_option("Q", arg_q)->required();

    auto* invariants = app.add_subcommand("invariants", "invariant record of T(d,n,a)");
    invariants->add_option("d", arg_d)->required();
    invariants->add_option("n", arg_n)->required();
    invariants->add_option("a", arg_a)->required();

    auto* table = app.add_subcommand("table", "print invariant table 1 or 2");
    table->add_option("which", arg_table)->required();
    table->add_option("--k", arg_k, "parameter k for table 1 rows");
    table->add_option("--m", arg_m, "parameter m for table 1 rows");

    auto* enumerate = app.add_subcommand("enumerate", "all T(d,n,a) with l <= max-l");
    enumerate->add_option("--d", arg_d)->required();
    enumerate->add_option("--max-l", arg_maxl)->required();

    auto* resolve = app.add_subcommand("resolve", "resolution lattice data of (n,q)");
    resolve->add_option("n", arg_n)->required();
    resolve->add_option("q", arg_q)->required();

    auto* pullback = app.add_subcommand("pullback", "pullback coefficients of a1*D1 + a2*D2");
    pullback->add_option("n", arg_n)->required();
    pullback->add_option("q", arg_q)->required();
    pullback->add_option("a1", arg_a1)->required();
    pullback->add_option("a2", arg_a2)->required();

    auto* smoothing = app.add_subcommand("smoothing", "smoothing-family data of T(d,n,a)");
    smoothing->add_option("d", arg_d)->required();
    smoothing->add_option("n", arg_n)->required();
    smoothing->add_option("a", arg_a)->required();
    smoothing->add_option("--char", arg_char, "characteristic (0 or prime)");

    auto* blowup = app.add_subcommand("blowup", "replay a blowup script");
    blowup->add_option("script", arg_file, "script JSON file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "verify a construction fixture");
    verify_cmd->add_option("fixture", arg_file, "fixture JSON file");
    verify_cmd->add_option("--builtin", arg_builtin, "use a compiled-in fixture by name");
    verify_cmd->add_option("--char", arg_char, "characteristic (0 or prime)");

    auto* examples = app.add_subcommand("examples", "run all builtin fixtures");
    examples->add_option("--char-map", arg_charmap, "which characteristic map (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (expand->parsed()) {
        auto w = hj::hj_expand(parse_int(arg_n), parse_int(arg_q));
        if (json) {
            jio::Value out{jio::Object{}};
            out.set("n", parse_int(arg_n));
            out.set("q", parse_int(arg_q));
            out.set("weights", int_array(w));
            print_json(std::move(out));
        } else {
            std::cout << bracketed(w) << "\n";
        }
        return 0;
    }
    if (classify->parsed()) {
        auto cls = classt::classify(parse_int(arg_n), parse_int(arg_q));
        std::string kind = cls.kind == classt::ChainKind::ClassT ? "class-t"
                           : cls.kind == classt::ChainKind::AllTwosChain ? "all-twos" : "other";
        if (json) {
            jio::Value out{jio::Object{}};
            out.set("N", parse_int(arg_n));
            out.set("Q", parse_int(arg_q));
            out.set("kind", kind);
            if (cls.triple) out.set("triple", triple_json(*cls.triple));
            print_json(std::move(out));
        } else if (cls.triple) {
            std::cout << classt::to_string(*cls.triple) << "\n";
        } else {
            std::cout << (cls.kind == classt::ChainKind::AllTwosChain ? "all-twos chain"
                                                                      : "not of class T")
                      << "\n";
        }
        return 0;
    }
    if (invariants->parsed()) {
        auto inv = classt::invariants(
            classt::ClassTTriple(parse_int(arg_d), parse_int(arg_n), parse_int(arg_a)));
        if (json) {
            print_json(invariants_json(inv));
        } else {
            std::cout << invariants_line(inv) << "\n";
            std::string c = "[";
            for (std::size_t i = 0; i < inv.C.size(); ++i)
                c += (i ? ", " : "") + to_string(inv.C[i]);
            std::cout << "P = " << bracketed(inv.P) << "\nQ = " << bracketed(inv.Q)
                      << "\nC = " << c << "]\n";
        }
        return 0;
    }
    if (table->parsed()) {
        std::vector<classt::ClassTTriple> rows;
        if (arg_table == "1")
            rows = table1_rows(parse_int(arg_k), parse_int(arg_m));
        else if (arg_table == "2")
            rows = table2_rows();
        else
            throw input_error("table takes 1 or 2");
        if (json) {
            jio::Value out{jio::Object{}};
            out.set("table", parse_int(arg_table));
            if (arg_table == "1") {
                out.set("k", parse_int(arg_k));
                out.set("m", parse_int(arg_m));
            }
            jio::Array recs;
            for (const auto& t : rows) recs.push_back(invariants_json(classt::invariants(t)));
            out.set("rows", jio::Value(std::move(recs)));
            print_json(std::move(out));
        } else {
            for (const auto& t : rows)
                std::cout << invariants_line(classt::invariants(t)) << "\n";
        }
        return 0;
    }
    if (enumerate->parsed()) {
        auto triples = classt::enumerate_triples(parse_int(arg_d), parse_int(arg_maxl));
        if (json) {
            jio::Value out{jio::Object{}};
            out.set("d", parse_int(arg_d));
            out.set("max_l", parse_int(arg_maxl));
            jio::Array recs;
            for (const auto& t : triples) recs.push_back(triple_json(t));
            out.set("triples", jio::Value(std::move(recs)));
            print_json(std::move(out));
        } else {
            for (const auto& t : triples) std::cout << classt::to_string(t) << "\n";
        }
        return 0;
    }
    if (resolve->parsed()) {
        auto rd = toric::resolution_data(toric::CyclicQuotient(parse_int(arg_n), parse_int(arg_q)));
        if (json) {
            jio::Value out{jio::Object{}};
            out.set("n", rd.base.n);
            out.set("q", rd.base.q);
            out.set("weights", int_array(rd.weights));
            out.set("p", int_array(rd.p));
            out.set("qq", int_array(rd.qq));
            print_json(std::move(out));
        } else {
            std::cout << "b = " << bracketed(rd.weights) << "\np = " << bracketed(rd.p)
                      << "\nq = " << bracketed(rd.qq) << "\n";
        }
        return 0;
    }
    if (pullback->parsed()) {
        auto m = toric::pullback_divisor(
            toric::CyclicQuotient(parse_int(arg_n), parse_int(arg_q)), parse_int(arg_a1),
            parse_int(arg_a2));
        if (json) {
            jio::Value out{jio::Object{}};
            out.set("n", parse_int(arg_n));
            out.set("q", parse_int(arg_q));
            out.set("a1", parse_int(arg_a1));
            out.set("a2", parse_int(arg_a2));
            out.set("coefficients", int_array(m));
            print_json(std::move(out));
        } else {
            std::cout << bracketed(m) << "\n";
        }
        return 0;
    }
    if (smoothing->parsed()) {
        auto fam = classt::smoothing_family(
            classt::ClassTTriple(parse_int(arg_d), parse_int(arg_n), parse_int(arg_a)),
            parse_int(arg_char));
        if (json) {
            jio::Value out{jio::Object{}};
            out.set("triple", triple_json(fam.triple));
            out.set("characteristic", fam.characteristic);
            jio::Value rel{jio::Object{}};
            rel.set("lead_exponent", fam.relation_degree);
            rel.set("perturbation_exponent", fam.perturbation_degree);
            out.set("relation", std::move(rel));
            out.set("group_order", fam.group_order);
            out.set("weights", jio::Array{jio::Value(fam.weights[0]), jio::Value(fam.weights[1]),
                                          jio::Value(fam.weights[2])});
            out.set("excluded_parameter", fam.excluded_parameter
                                              ? jio::rational(*fam.excluded_parameter)
                                              : jio::Value(nullptr));
            out.set("gorenstein_index", fam.gorenstein_index);
            out.set("guarantees",
                    jio::Array{jio::Value("gorenstein index constant in the family"),
                               jio::Value("fibers smooth away from s = 0")});
            print_json(std::move(out));
        } else {
            std::cout << classt::to_string(fam.triple) << "  char " << fam.characteristic
                      << "\n";
            std::cout << "relation: z^" << fam.relation_degree << " - u1*u2 - s*(z^"
                      << fam.perturbation_degree << " + 1)\n";
            std::cout << "group: mu_" << fam.group_order << " acting with weights ("
                      << fam.weights[0] << ", " << fam.weights[1] << ", " << fam.weights[2]
                      << ") on (u1, u2, z)\n";
            if (fam.excluded_parameter)
                std::cout << "excluded parameter: " << to_string(*fam.excluded_parameter)
                          << "\n";
            else
                std::cout << "excluded parameter: none\n";
            std::cout << "gorenstein index: " << fam.gorenstein_index
                      << " (constant in the family)\n";
            std::cout << "fibers smooth away from s = 0\n";
        }
        return 0;
    }
    if (blowup->parsed()) {
        auto script = io::script_from_json(jio::parse(read_file(arg_file)));
        std::cout << jio::dump(io::config_to_json(io::run_script(script)));
        return 0;
    }
    if (verify_cmd->parsed()) {
        require(arg_file.empty() != arg_builtin.empty(),
                "verify takes either a fixture file or --builtin NAME");
        verify::LeeParkFixture fx =
            arg_builtin.empty() ? io::fixture_from_json(jio::parse(read_file(arg_file)))
                                : verify::builtin_fixture(arg_builtin);
        auto report = verify::verify_all(fx, parse_int(arg_char));
        std::cout << io::emit_report(report, json ? io::Format::Json : io::Format::Text);
        return report.passed() ? 0 : 1;
    }
    if (examples->parsed()) {
        require(arg_charmap == "default", "only --char-map default is available");
        bool all_pass = true;
        jio::Array results;
        for (const auto& fx : verify::builtin_fixtures()) {
            Int p = verify::default_characteristic(fx);
            auto report = verify::verify_all(fx, p);
            all_pass &= report.passed();
            if (json) {
                jio::Value rec{jio::Object{}};
                rec.set("fixture", fx.name);
                rec.set("characteristic", p);
                rec.set("verdict", report.verdict);
                if (report.k_x_squared) rec.set("k_x_squared", *report.k_x_squared);
                results.push_back(std::move(rec));
            } else {
                std::cout << fx.name << "  char=" << p << "  verdict=" << report.verdict;
                if (report.k_x_squared) std::cout << "  K_X^2=" << *report.k_x_squared;
                std::cout << "\n";
            }
        }
        if (json) {
            jio::Value out{jio::Object{}};
            out.set("results", jio::Value(std::move(results)));
            print_json(std::move(out));
        }
        return all_pass ? 0 : 1;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const wahl::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

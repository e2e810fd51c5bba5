#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>

#include "grstratum/json_io.hpp"

using namespace grst;

namespace {

struct Cfg {
    std::string order = "grlex";
    std::string corners;  // inline JSON or a file path
    std::string mode = "full";
    int degree_bound = 0;
    std::string type_set;  // inline JSON, type mode only
    std::string json_out;
    std::string text_out;
    std::string input;  // verify subcommand
    int threads = 1;
};

json load_json_arg(const std::string& s, const char* what) {
    std::string text = s;
    if (!s.empty() && s[0] != '[' && s[0] != '{' && s[0] != '"') {
        std::ifstream in(s);
        if (!in) throw ConfigError(std::string("cannot open ") + what + " file: " + s);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad ") + what + ": " + e.what());
    }
}

void write_outputs(const Cfg& cfg, const json& report, const std::string& text) {
    if (!cfg.json_out.empty()) {
        std::ofstream out(cfg.json_out);
        if (!out) throw ConfigError("cannot write " + cfg.json_out);
        out << report.dump(2) << "\n";
    }
    if (!cfg.text_out.empty()) {
        std::ofstream out(cfg.text_out);
        if (!out) throw ConfigError("cannot write " + cfg.text_out);
        out << text;
    }
    if (cfg.json_out.empty() && cfg.text_out.empty()) std::cout << text;
}

SchemeIdeal make_scheme(const Cfg& cfg) {
    json jc = load_json_arg(cfg.corners, "corners");
    if (!jc.is_array() || jc.empty() || !jc[0].is_array())
        throw ConfigError("corners must be a non-empty array of integer arrays");
    int n = (int)jc[0].size();
    auto corners = parse_corners(jc, n);
    // a bare order name is passed straight through; anything else is inline
    // JSON or a file path
    bool bare = !cfg.order.empty() &&
                std::all_of(cfg.order.begin(), cfg.order.end(), [](unsigned char c) {
                    return std::isalpha(c);
                });
    MonomialOrder ord =
        parse_order(bare ? json(cfg.order) : load_json_arg(cfg.order, "order"), n);
    BuildOptions opts;
    if (cfg.mode == "full")
        opts.mode = Mode::full;
    else if (cfg.mode == "homogeneous")
        opts.mode = Mode::homogeneous;
    else if (cfg.mode == "type")
        opts.mode = Mode::type_d;
    else
        throw ConfigError("unknown mode: " + cfg.mode);
    if (cfg.degree_bound > 0) opts.degree_override = cfg.degree_bound;
    if (!cfg.type_set.empty()) opts.script_d = parse_corners(load_json_arg(cfg.type_set, "type set"), n);
    return build_scheme(corners, n, ord, opts);
}

int dispatch(const std::string& cmd, const Cfg& cfg) {
    if (cmd == "verify") {
        json jin = load_json_arg(cfg.input, "verify input");
        int n = (int)jin.at("corners").at(0).size();
        auto corners = parse_corners(jin.at("corners"), n);
        MonomialOrder ord = parse_order(jin.at("order"), n);
        std::vector<XPoly> basis;
        for (const auto& b : jin.at("basis")) basis.push_back(parse_xpoly(b, n));
        auto cert = is_reduced_groebner(basis, corners, ord, cfg.threads);
        json rep = verify_report(cert);
        std::string text = cert.ok ? "ok\n" : "FAIL: " + cert.reason + "\n";
        write_outputs(cfg, rep, text);
        return cert.ok ? 0 : 1;
    }

    SchemeIdeal si = make_scheme(cfg);
    if (cmd == "triples") {
        write_outputs(cfg, triples_report(si), triples_text(si));
        return 0;
    }
    if (cmd == "stratum") {
        write_outputs(cfg, stratum_report(si), stratum_text(si));
        return 0;
    }
    TangentReport tr = tangent_report(si);
    EmbeddedPresentation ep = eliminate(si, tr);
    if (cmd == "tangent") {
        write_outputs(cfg, tangent_report_json(si, tr, ep), tangent_text(si, tr, ep));
        return 0;
    }
    // family
    write_outputs(cfg, family_report(si, &ep), family_text(si, &ep));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner stratum of a monomial ideal: defining ideal, tangent space, "
                 "minimal embedding and universal family"};
    app.require_subcommand(1);
    Cfg cfg;

    auto add_common = [&](CLI::App* sub, bool needs_corners) {
        if (needs_corners) {
            sub->add_option("--corners", cfg.corners, "corner set, inline JSON or a file path")
                ->required();
            sub->add_option("--order", cfg.order,
                            "monomial order: lex | grlex | grevlex or a JSON object");
            sub->add_option("--mode", cfg.mode, "full | homogeneous | type");
            sub->add_option("--degree-bound", cfg.degree_bound,
                            "truncation degree override (must be >= the computed bound)");
            sub->add_option("--type-set", cfg.type_set,
                            "finite subset of Delta for type mode, inline JSON or a file path");
        }
        sub->add_option("--json", cfg.json_out, "write the JSON report here");
        sub->add_option("--text", cfg.text_out, "write the text report here");
        sub->add_option("--threads", cfg.threads, "worker cap for the verification oracle");
    };

    add_common(app.add_subcommand("stratum", "defining ideal A = A1 + A2"), true);
    add_common(app.add_subcommand("triples", "edge triples of the standard set"), true);
    add_common(app.add_subcommand("tangent", "tangent space, embedding dimension, residual ideal"),
               true);
    add_common(app.add_subcommand("family", "universal family in the minimal embedding"), true);
    auto* verify = app.add_subcommand("verify", "reduced Groebner basis check for a given basis");
    verify->add_option("--input", cfg.input, "JSON {order, corners, basis}, inline or a file path")
        ->required();
    add_common(verify, false);

    CLI11_PARSE(app, argc, argv);

    try {
        return dispatch(app.get_subcommands()[0]->get_name(), cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const AntichainViolation& e) {
        std::cerr << "corner set error: " << e.what() << "\n";
        return 3;
    } catch (const ModeViolation& e) {
        std::cerr << "mode error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 10;
    }
}

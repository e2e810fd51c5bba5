#include "grstratum/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace grst {

namespace {

std::vector<int> parse_priority(const json& j, int n) {
    std::vector<int> p;
    if (!j.contains("priority")) return p;
    for (const auto& v : j.at("priority")) p.push_back(v.get<int>());
    if ((int)p.size() != n) throw ConfigError("priority permutation has wrong length");
    return p;
}

}  // namespace

MonomialOrder parse_order(const json& j, int n) {
    std::string kind;
    json obj = json::object();
    if (j.is_string()) {
        kind = j.get<std::string>();
    } else if (j.is_object()) {
        kind = j.at("kind").get<std::string>();
        obj = j;
    } else {
        throw ConfigError("order spec must be a string or an object");
    }
    if (kind == "lex") return MonomialOrder::lex(n, parse_priority(obj, n));
    if (kind == "grlex") return MonomialOrder::grlex(n, parse_priority(obj, n));
    if (kind == "grevlex") return MonomialOrder::grevlex(n, parse_priority(obj, n));
    if (kind == "matrix") {
        std::vector<std::vector<long>> rows;
        for (const auto& r : obj.at("rows")) {
            std::vector<long> row;
            for (const auto& v : r) row.push_back(v.get<long>());
            if ((int)row.size() != n) throw ConfigError("matrix row has wrong length");
            rows.push_back(std::move(row));
        }
        return MonomialOrder::matrix(n, std::move(rows));
    }
    throw ConfigError("unknown order kind: " + kind);
}

json order_to_json(const MonomialOrder& ord) {
    json j{{"kind", ord.kind_name()}};
    if (!ord.priority().empty()) j["priority"] = ord.priority();
    if (ord.kind() == OrderKind::matrix) j["rows"] = ord.weight_rows();
    return j;
}

std::vector<Exponent> parse_corners(const json& j, int n) {
    if (!j.is_array()) throw ConfigError("corners must be an array of integer arrays");
    std::vector<Exponent> corners;
    for (const auto& c : j) {
        if (!c.is_array()) throw ConfigError("each corner must be an integer array");
        Exponent e;
        for (const auto& v : c) {
            if (!v.is_number_integer() || v.get<long>() < 0)
                throw ConfigError("corner entries must be non-negative integers");
            e.push_back(v.get<int>());
        }
        if ((int)e.size() != n) throw ConfigError("corner " + to_string(e) + " has wrong length");
        corners.push_back(std::move(e));
    }
    return corners;
}

json poly_to_json(const Poly& p, const VarTable& vt) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::array();
        for (const auto& [v, e] : m)
            mono.push_back(json{{"alpha", vt.var(v).alpha},
                                {"beta", vt.var(v).beta},
                                {"exp", e}});
        terms.push_back(json{{"coeff", c.get_str()}, {"monomial", mono}});
    }
    return terms;
}

json xpoly_to_json(const XPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json{{"coeff", c.get_str()}, {"exponent", e}});
    return terms;
}

XPoly parse_xpoly(const json& j, int n) {
    if (!j.is_array()) throw ConfigError("polynomial must be an array of terms");
    XPoly p;
    for (const auto& t : j) {
        mpq_class c(t.at("coeff").get<std::string>());
        c.canonicalize();
        Exponent e = t.at("exponent").get<Exponent>();
        if ((int)e.size() != n) throw ConfigError("term exponent has wrong length");
        p.add_term(e, c);
    }
    return p;
}

std::vector<std::string> x_names(int n) {
    static const char* base[] = {"x", "y", "z"};
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(n <= 3 && i < 3 ? base[i] : "x" + std::to_string(i + 1));
    return names;
}

namespace {

json triple_json(const EdgeTriple& t) {
    return json{{"eps", t.eps}, {"lam", t.lam + 1}, {"mu", t.mu + 1}};
}

std::vector<std::string> t_names(const VarTable& vt) {
    std::vector<std::string> names;
    for (int i = 0; i < vt.size(); ++i) names.push_back(vt.name(i));
    return names;
}

}  // namespace

json triples_report(const SchemeIdeal& si) {
    json j{{"schema_version", kSchemaVersion},
           {"n", si.n},
           {"order", order_to_json(si.ord)},
           {"corners", si.ss.corners()},
           {"theta", si.ss.theta()},
           {"edge_bound", si.ss.edge_bound()},
           {"corners_of_delta_union_border", si.ss.corners_of_delta_union_border()}};
    json ts = json::array();
    for (const auto& t : si.triples) ts.push_back(triple_json(t));
    j["triples"] = ts;
    return j;
}

json stratum_report(const SchemeIdeal& si) {
    json j{{"schema_version", kSchemaVersion},
           {"n", si.n},
           {"order", order_to_json(si.ord)},
           {"corners", si.ss.corners()},
           {"mode", mode_name(si.mode)},
           {"D", si.D}};
    json vars = json::array();
    for (int i = 0; i < si.vt.size(); ++i)
        vars.push_back(json{{"name", si.vt.name(i)},
                            {"alpha", si.vt.var(i).alpha},
                            {"beta", si.vt.var(i).beta},
                            {"weight", si.var_w[i]}});
    j["vars"] = vars;
    auto names = t_names(si.vt);
    json gens = json::array();
    for (const auto& [tag, p] : si.gens)
        gens.push_back(json{{"tag", tag.str()},
                            {"poly", poly_to_json(p, si.vt)},
                            {"text", p.render(names)}});
    j["generators"] = gens;
    j["counts"] = json{{"vars", si.vt.size()},
                       {"generators", (int)si.gens.size()},
                       {"a1", si.count_a1()},
                       {"a2", si.count_a2()},
                       {"triples", (int)si.triples.size()}};
    return j;
}

json tangent_report_json(const SchemeIdeal& si, const TangentReport& tr,
                         const EmbeddedPresentation& ep) {
    json j{{"schema_version", kSchemaVersion},
           {"num_vars", tr.num_vars},
           {"rank", tr.rank},
           {"embedding_dim", tr.embedding_dim},
           {"flat", ep.flat}};
    json elim = json::array();
    for (int v : tr.eliminable) elim.push_back(si.vt.name(v));
    j["eliminable"] = elim;
    json resv = json::array();
    for (int v : ep.residual_vars)
        resv.push_back(json{{"alias", ep.names[v]}, {"var", si.vt.name(v)}});
    j["residual_vars"] = resv;
    json gens = json::array();
    for (const auto& g : ep.residual_gens)
        gens.push_back(json{{"poly", poly_to_json(g, si.vt)}, {"text", g.render(ep.names)}});
    j["residual_gens"] = gens;
    return j;
}

namespace {

// One tautological family member x^alpha - sum_beta c_beta x^beta with
// polynomial coefficients, rendered in descending beta order.
std::string family_line(const SchemeIdeal& si, const Exponent& alpha,
                        const std::map<Exponent, Poly>& row,
                        const std::vector<std::string>& tnames) {
    auto xs = x_names(si.n);
    auto mono_str = [&](const Exponent& e) {
        std::string s;
        for (int i = 0; i < si.n; ++i) {
            if (e[i] == 0) continue;
            s += xs[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    };
    std::vector<const Exponent*> betas;
    for (const auto& [b, p] : row)
        if (!p.is_zero()) betas.push_back(&b);
    std::sort(betas.begin(), betas.end(),
              [&](const Exponent* a, const Exponent* b) { return si.ord.less(*b, *a); });
    std::string s = mono_str(alpha);
    for (const Exponent* b : betas) {
        Poly neg = -row.at(*b);
        std::string coeff = neg.render(tnames);
        std::string xa = mono_str(*b);
        bool single = neg.terms().size() == 1;
        if (single && coeff == "1" && !xa.empty())
            s += " + " + xa;
        else if (single && coeff == "-1" && !xa.empty())
            s += " - " + xa;
        else if (single && coeff.rfind("-", 0) == 0)
            s += " - " + coeff.substr(1) + (xa.empty() ? "" : " " + xa);
        else if (single)
            s += " + " + coeff + (xa.empty() ? "" : " " + xa);
        else
            s += " + (" + coeff + ")" + (xa.empty() ? "" : " " + xa);
    }
    return s;
}

std::map<Exponent, std::map<Exponent, Poly>> family_rows(const SchemeIdeal& si,
                                                         const EmbeddedPresentation* ep) {
    auto fam = universal_family(si);
    if (ep)
        for (auto& [alpha, row] : fam)
            for (auto& [beta, p] : row) p = p.substitute(ep->substitutions);
    return fam;
}

}  // namespace

json family_report(const SchemeIdeal& si, const EmbeddedPresentation* ep) {
    json j{{"schema_version", kSchemaVersion},
           {"n", si.n},
           {"order", order_to_json(si.ord)},
           {"corners", si.ss.corners()},
           {"embedded", ep != nullptr}};
    auto fam = family_rows(si, ep);
    json entries = json::object();
    for (const auto& [alpha, row] : fam)
        for (const auto& [beta, p] : row) {
            if (p.is_zero()) continue;
            entries[to_string(alpha) + "|" + to_string(beta)] = poly_to_json(p, si.vt);
        }
    j["family"] = entries;
    // truncated U-family rows in the same key format, for debugging
    json urows = json::object();
    for (const auto& [alpha, row] : si.ufam->stored_rows())
        for (const auto& [beta, p] : row) {
            if (p.is_zero()) continue;
            Poly q = ep ? p.substitute(ep->substitutions) : p;
            if (!q.is_zero()) urows[to_string(alpha) + "|" + to_string(beta)] = poly_to_json(q, si.vt);
        }
    j["ufamily"] = urows;
    return j;
}

json verify_report(const GBCertificate& cert) {
    return json{{"schema_version", kSchemaVersion},
                {"ok", cert.ok},
                {"certificate", json{{"reason", cert.reason},
                                     {"checked_pairs", cert.checked_pairs},
                                     {"skipped_coprime", cert.skipped_coprime}}}};
}

std::string triples_text(const SchemeIdeal& si) {
    std::ostringstream os;
    os << "corners: ";
    for (const auto& c : si.ss.corners()) os << to_string(c) << " ";
    os << "\ntheta: " << to_string(si.ss.theta()) << "  L = " << si.ss.edge_bound() << "\n";
    os << "edge triples (" << si.triples.size() << "):\n";
    for (const auto& t : si.triples)
        os << "  (" << to_string(t.eps) << "; e" << t.lam + 1 << ", e" << t.mu + 1 << ")\n";
    return os.str();
}

std::string stratum_text(const SchemeIdeal& si) {
    std::ostringstream os;
    auto names = t_names(si.vt);
    os << "mode " << mode_name(si.mode) << ", truncation degree " << si.D << "\n";
    os << si.vt.size() << " variables:\n";
    for (int i = 0; i < si.vt.size(); ++i)
        os << "  " << names[i] << "  W = " << si.var_w[i] << "\n";
    os << si.gens.size() << " generators (" << si.count_a1() << " from A1, " << si.count_a2()
       << " from A2):\n";
    for (const auto& [tag, p] : si.gens) os << "  " << tag.str() << ": " << p.render(names) << "\n";
    return os.str();
}

std::string tangent_text(const SchemeIdeal& si, const TangentReport& tr,
                         const EmbeddedPresentation& ep) {
    std::ostringstream os;
    os << "variables: " << tr.num_vars << "\nrank: " << tr.rank
       << "\nembedding dimension: " << tr.embedding_dim << "\n";
    os << "eliminable (" << tr.eliminable.size() << "):";
    for (int v : tr.eliminable) os << " " << si.vt.name(v);
    os << "\nresidual variables:";
    for (int v : ep.residual_vars) os << " " << ep.names[v] << " = " << si.vt.name(v);
    os << "\n";
    if (ep.flat) {
        os << "residual ideal: 0 (affine space of dimension " << tr.embedding_dim << ")\n";
    } else {
        os << "residual generators (" << ep.residual_gens.size() << "):\n";
        for (const auto& g : ep.residual_gens) os << "  " << g.render(ep.names) << "\n";
    }
    return os.str();
}

std::string family_text(const SchemeIdeal& si, const EmbeddedPresentation* ep) {
    std::ostringstream os;
    std::vector<std::string> names =
        ep ? ep->names : t_names(si.vt);
    auto fam = family_rows(si, ep);
    for (const auto& [alpha, row] : fam) os << family_line(si, alpha, row, names) << "\n";
    return os.str();
}

}  // namespace grst

#include "grstratum/poly.hpp"

#include <algorithm>
#include <sstream>

namespace grst {

VarTable::VarTable(std::vector<TVar> vars, const MonomialOrder& ord) : vars_(std::move(vars)) {
    // alpha descending, then beta descending
    std::sort(vars_.begin(), vars_.end(), [&](const TVar& a, const TVar& b) {
        int c = ord.compare(a.alpha, b.alpha);
        if (c != 0) return c > 0;
        return ord.compare(a.beta, b.beta) > 0;
    });
    for (int i = 0; i < (int)vars_.size(); ++i)
        index_[{vars_[i].alpha, vars_[i].beta}] = i;
}

std::optional<int> VarTable::find(const Exponent& alpha, const Exponent& beta) const {
    auto it = index_.find({alpha, beta});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string VarTable::name(int i) const {
    return "T" + to_string(vars_[i].alpha) + to_string(vars_[i].beta);
}

int total_degree(const Mono& m) {
    int d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

Poly Poly::constant(const mpq_class& c) {
    Poly p;
    if (c != 0) p.terms_[{}] = c;
    return p;
}

Poly Poly::variable(int v) {
    Poly p;
    p.terms_[{{v, 1}}] = 1;
    return p;
}

void Poly::add_term(const Mono& m, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpq_class Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

namespace {
Mono mul_mono(const Mono& a, const Mono& b) {
    Mono r;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        } else if (a[i].first < b[j].first) {
            r.push_back(a[i++]);
        } else {
            r.push_back(b[j++]);
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
}
}  // namespace

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(mul_mono(ma, mb), ca * cb);
    return r;
}

Poly Poly::scaled(const mpq_class& c) const {
    Poly r;
    if (c == 0) return r;
    for (auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

Poly Poly::substitute(const std::map<int, Poly>& bindings) const {
    Poly out;
    for (auto& [m, c] : terms_) {
        Poly term = Poly::constant(c);
        Mono fixed;
        for (auto& [v, e] : m) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                fixed.emplace_back(v, e);
            } else {
                for (int k = 0; k < e; ++k) term = term * it->second;
            }
        }
        if (!fixed.empty()) {
            Poly f;
            f.terms_[fixed] = 1;
            term = term * f;
        }
        out += term;
    }
    return out;
}

Poly Poly::linear_component() const {
    Poly r;
    for (auto& [m, c] : terms_)
        if (total_degree(m) == 1) r.terms_[m] = c;
    return r;
}

mpq_class Poly::constant_term() const {
    return coeff({});
}

bool Poly::quadratic_or_higher() const {
    for (auto& [m, c] : terms_)
        if (total_degree(m) < 2) return false;
    return true;
}

mpq_class Poly::eval(const std::vector<mpq_class>& point) const {
    mpq_class s = 0;
    for (auto& [m, c] : terms_) {
        mpq_class t = c;
        for (auto& [v, e] : m) {
            for (int k = 0; k < e; ++k) t *= point.at(v);
        }
        s += t;
    }
    return s;
}

int Poly::max_var() const {
    int mv = -1;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m) mv = std::max(mv, v);
    return mv;
}

bool Poly::uses_var(int v) const {
    for (auto& [m, c] : terms_)
        for (auto& [mv, e] : m)
            if (mv == v) return true;
    return false;
}

std::string Poly::render(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    // render larger variables (smaller index) first, higher degree first
    std::vector<std::pair<Mono, mpq_class>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da > db;
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : ts) {
        mpq_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool coeff_one = (a == 1) && !m.empty();
        if (!coeff_one) os << a.get_str();
        bool star = !coeff_one;
        for (auto& [v, e] : m) {
            if (star) os << "*";
            os << var_names.at(v);
            if (e > 1) os << "^" << e;
            star = true;
        }
    }
    return os.str();
}

long WeightW::weight_of(const Exponent& a) const {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += w[i] * (long)a[i];
    return s;
}

WeightW build_weight(const MonomialOrder& ord, const std::vector<Exponent>& pts) {
    const auto& rows = ord.weight_rows();
    int n = ord.dim();
    for (long M = 2; M <= (1L << 40); M *= 2) {
        std::vector<long> w(n, 0);
        long scale = 1;
        for (int i = (int)rows.size() - 1; i >= 0; --i) {
            for (int j = 0; j < n; ++j) w[j] += scale * rows[i][j];
            scale *= M;
        }
        bool ok = std::all_of(w.begin(), w.end(), [](long v) { return v > 0; });
        WeightW W{w};
        for (size_t i = 0; ok && i < pts.size(); ++i)
            for (size_t j = i + 1; ok && j < pts.size(); ++j) {
                int c = ord.compare(pts[i], pts[j]);
                long wi = W.weight_of(pts[i]), wj = W.weight_of(pts[j]);
                if (c < 0 ? wi >= wj : (c > 0 ? wi <= wj : wi != wj)) ok = false;
            }
        if (ok) return W;
    }
    throw NoWeightFound("no positive weight vector found for the given order and point set");
}

std::vector<long> var_weights(const VarTable& vt, const WeightW& w) {
    std::vector<long> vw(vt.size());
    for (int i = 0; i < vt.size(); ++i)
        vw[i] = w.weight_of(vt.var(i).alpha) - w.weight_of(vt.var(i).beta);
    return vw;
}

bool is_w_homogeneous(const Poly& p, const std::vector<long>& var_w) {
    bool first = true;
    long wt = 0;
    for (auto& [m, c] : p.terms()) {
        long s = 0;
        for (auto& [v, e] : m) s += var_w.at(v) * (long)e;
        if (first) {
            wt = s;
            first = false;
        } else if (s != wt) {
            return false;
        }
    }
    return true;
}

}  // namespace grst

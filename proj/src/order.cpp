#include "grstratum/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace grst {

int degree(const Exponent& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

Exponent add(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw DimensionMismatch("exponent dimension mismatch");
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool sub(const Exponent& a, const Exponent& b, Exponent& out) {
    if (a.size() != b.size()) throw DimensionMismatch("exponent dimension mismatch");
    out.resize(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
        if (out[i] < 0) return false;
    }
    return true;
}

bool divides(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw DimensionMismatch("exponent dimension mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent unit(int n, int i) {
    Exponent e(n, 0);
    e[i] = 1;
    return e;
}

std::string to_string(const Exponent& a) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    os << ')';
    return os.str();
}

namespace {

std::vector<int> default_priority(int n, std::vector<int> priority) {
    if (priority.empty()) {
        priority.resize(n);
        std::iota(priority.begin(), priority.end(), 0);
    }
    if ((int)priority.size() != n)
        throw ConfigError("priority permutation has wrong length");
    std::vector<bool> seen(n, false);
    for (int p : priority) {
        if (p < 0 || p >= n || seen[p]) throw ConfigError("priority is not a permutation");
        seen[p] = true;
    }
    return priority;
}

std::vector<std::vector<long>> rows_for(OrderKind kind, int n, const std::vector<int>& pr) {
    std::vector<std::vector<long>> rows;
    auto unit_row = [n](int i, long v) {
        std::vector<long> r(n, 0);
        r[i] = v;
        return r;
    };
    switch (kind) {
    case OrderKind::lex:
        for (int i = 0; i < n; ++i) rows.push_back(unit_row(pr[i], 1));
        break;
    case OrderKind::grlex:
        rows.emplace_back(n, 1);
        for (int i = 0; i + 1 < n; ++i) rows.push_back(unit_row(pr[i], 1));
        break;
    case OrderKind::grevlex:
        rows.emplace_back(n, 1);
        for (int i = n - 1; i >= 1; --i) rows.push_back(unit_row(pr[i], -1));
        break;
    case OrderKind::matrix:
        break;
    }
    return rows;
}

}  // namespace

MonomialOrder::MonomialOrder(OrderKind kind, int n, std::vector<int> priority,
                             std::vector<std::vector<long>> rows)
    : kind_(kind), n_(n), priority_(std::move(priority)), rows_(std::move(rows)) {}

MonomialOrder MonomialOrder::lex(int n, std::vector<int> priority) {
    auto pr = default_priority(n, std::move(priority));
    return MonomialOrder(OrderKind::lex, n, pr, rows_for(OrderKind::lex, n, pr));
}

MonomialOrder MonomialOrder::grlex(int n, std::vector<int> priority) {
    auto pr = default_priority(n, std::move(priority));
    return MonomialOrder(OrderKind::grlex, n, pr, rows_for(OrderKind::grlex, n, pr));
}

MonomialOrder MonomialOrder::grevlex(int n, std::vector<int> priority) {
    auto pr = default_priority(n, std::move(priority));
    return MonomialOrder(OrderKind::grevlex, n, pr, rows_for(OrderKind::grevlex, n, pr));
}

MonomialOrder MonomialOrder::matrix(int n, std::vector<std::vector<long>> rows) {
    if (rows.empty()) throw ConfigError("matrix order needs at least one row");
    for (const auto& r : rows)
        if ((int)r.size() != n) throw ConfigError("matrix order row has wrong length");
    auto pr = default_priority(n, {});
    return MonomialOrder(OrderKind::matrix, n, std::move(pr), std::move(rows));
}

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
    if ((int)a.size() != n_ || (int)b.size() != n_)
        throw DimensionMismatch("compare: exponent dimension mismatch");
    if (a == b) return 0;
    for (const auto& row : rows_) {
        long wa = 0, wb = 0;
        for (int i = 0; i < n_; ++i) {
            wa += row[i] * (long)a[i];
            wb += row[i] * (long)b[i];
        }
        if (wa != wb) return wa < wb ? -1 : 1;
    }
    if (kind_ == OrderKind::matrix)
        throw OrderTieError("matrix order does not separate " + to_string(a) + " and " +
                            to_string(b));
    throw InternalInvariantViolation("built-in order failed to separate distinct exponents");
}

bool MonomialOrder::is_graded() const {
    switch (kind_) {
    case OrderKind::grlex:
    case OrderKind::grevlex:
        return true;
    case OrderKind::lex:
        return n_ == 1;
    case OrderKind::matrix:
        return std::all_of(rows_[0].begin(), rows_[0].end(), [](long v) { return v == 1; });
    }
    return false;
}

std::string MonomialOrder::kind_name() const {
    switch (kind_) {
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::matrix: return "matrix";
    }
    return "?";
}

}  // namespace grst

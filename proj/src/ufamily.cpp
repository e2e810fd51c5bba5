#include "grstratum/ufamily.hpp"

#include <algorithm>

namespace grst {

std::string mode_name(Mode m) {
    switch (m) {
    case Mode::full: return "full";
    case Mode::homogeneous: return "homogeneous";
    case Mode::type_d: return "type";
    }
    return "?";
}

int NuMap::at(const Exponent& alpha) const {
    auto it = dir_.find(alpha);
    if (it != dir_.end()) return it->second;
    int n = ss_->dim();
    // Prefer a descent into B(Delta) \ C(Delta): descending onto a corner would
    // turn the unique A1 relation at alpha into the defining recursion itself,
    // silently dropping it from the generating set.
    int corner_dir = -1;
    for (int i = 0; i < n; ++i) {
        if (alpha[i] == 0) continue;
        Exponent down = alpha;
        --down[i];
        if (ss_->membership(down) != StandardSet::Region::in_border) continue;
        if (std::binary_search(ss_->corners().begin(), ss_->corners().end(), down)) {
            if (corner_dir < 0) corner_dir = i;
        } else {
            dir_[alpha] = i;
            return i;
        }
    }
    if (corner_dir >= 0) {
        dir_[alpha] = corner_dir;
        return corner_dir;
    }
    throw InternalInvariantViolation("no nu-direction for border element " + to_string(alpha));
}

UFamily::UFamily(const StandardSet* ss, const MonomialOrder* ord, const VarTable* vt, NuMap nu,
                 Mode mode, int trunc_degree, bool capped)
    : ss_(ss), ord_(ord), vt_(vt), nu_(std::move(nu)), mode_(mode), trunc_(trunc_degree),
      capped_(capped) {}

const UFamily::Row& UFamily::row(const Exponent& alpha) const {
    auto it = rows_.find(alpha);
    if (it != rows_.end()) return it->second;
    if (capped_ && degree(alpha) > trunc_)
        throw TruncationTooSmall("U-family row " + to_string(alpha) +
                                 " lies beyond the truncation degree " + std::to_string(trunc_));

    Row r;
    bool corner = std::binary_search(ss_->corners().begin(), ss_->corners().end(), alpha);
    if (corner) {
        for (int i = 0; i < vt_->size(); ++i)
            if (vt_->var(i).alpha == alpha) r[vt_->var(i).beta] = Poly::variable(i);
    } else {
        int d = nu_.at(alpha);
        Exponent prev = alpha;
        --prev[d];
        const Row& base = row(prev);
        for (const auto& [gamma, coeff] : base) {
            Exponent g2 = gamma;
            ++g2[d];
            if (ss_->in_delta(g2)) {
                // U_{g2,beta} = delta_{g2,beta}
                auto rit = r.find(g2);
                if (rit == r.end()) {
                    r[g2] = coeff;
                } else {
                    rit->second += coeff;
                    if (rit->second.is_zero()) r.erase(rit);
                }
            } else {
                for (const auto& [beta, inner] : row(g2)) {
                    auto rit = r.find(beta);
                    if (rit == r.end()) {
                        Poly p = coeff * inner;
                        if (!p.is_zero()) r[beta] = std::move(p);
                    } else {
                        rit->second += coeff * inner;
                        if (rit->second.is_zero()) r.erase(rit);
                    }
                }
            }
        }
    }
    return rows_.emplace(alpha, std::move(r)).first->second;
}

Poly UFamily::entry(const Exponent& alpha, const Exponent& beta) const {
    if (ss_->in_delta(alpha))
        return alpha == beta ? Poly::constant(1) : Poly();
    const Row& r = row(alpha);
    auto it = r.find(beta);
    return it == r.end() ? Poly() : it->second;
}

void UFamily::populate() {
    for (const auto& b : ss_->enumerate_border_upto(trunc_, *ord_)) row(b);
}

}  // namespace grst

#include "epsnet/lp.hpp"

#include <cstddef>

namespace epsnet {

namespace {

// Dense tableau simplex over exact rationals, Bland's rule throughout.
// Solves max c.y, A y = b, y >= 0 with b >= 0.
class Tableau {
public:
    Tableau(std::vector<std::vector<Scalar>> A, std::vector<Scalar> b)
        : m_(A.size()), n_(m_ ? A[0].size() : 0) {
        rows_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            rows_[i] = std::move(A[i]);
            rows_[i].resize(n_ + m_);
            rows_[i][n_ + i] = 1;
            rows_[i].push_back(std::move(b[i]));
        }
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
    }

    bool phase_one() {
        std::size_t width = n_ + m_;
        obj_.assign(width + 1, Scalar(0));
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) obj_[j] += rows_[i][j];
            obj_[width] += rows_[i][width];
        }
        if (!run(width)) return false;  // cannot be unbounded in phase one
        if (sgn(obj_[width]) != 0) return false;

        // drive basic artificials out, dropping redundant rows
        for (std::size_t i = 0; i < m_;) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (sgn(rows_[i][j]) != 0) {
                    col = j;
                    break;
                }
            if (col == n_) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --m_;
                continue;
            }
            pivot(i, col);
            ++i;
        }
        // drop artificial columns
        for (auto& r : rows_) {
            Scalar rhs = r.back();
            r.resize(n_);
            r.push_back(std::move(rhs));
        }
        return true;
    }

    // returns false if unbounded
    bool phase_two(const std::vector<Scalar>& c) {
        obj_.assign(n_ + 1, Scalar(0));
        for (std::size_t j = 0; j < n_; ++j) obj_[j] = c[j];
        for (std::size_t i = 0; i < m_; ++i) {
            const Scalar& cb = c[basis_[i]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j <= n_; ++j) obj_[j] -= cb * rows_[i][j];
        }
        return run(n_);
    }

    Scalar value() const { return -obj_.back(); }

    std::vector<Scalar> solution() const {
        std::vector<Scalar> y(n_, Scalar(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) y[basis_[i]] = rows_[i].back();
        return y;
    }

private:
    bool run(std::size_t width) {
        for (;;) {
            std::size_t enter = width;
            for (std::size_t j = 0; j < width; ++j)
                if (sgn(obj_[j]) > 0) {
                    enter = j;
                    break;
                }
            if (enter == width) return true;
            std::size_t leave = m_;
            Scalar best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(rows_[i][enter]) <= 0) continue;
                Scalar ratio = rows_[i].back() / rows_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        auto& pr = rows_[r];
        const std::size_t w = pr.size();
        Scalar inv = 1 / pr[c];
        for (std::size_t j = 0; j < w; ++j)
            if (sgn(pr[j]) != 0) pr[j] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || sgn(rows_[i][c]) == 0) continue;
            Scalar f = rows_[i][c];
            auto& ri = rows_[i];
            for (std::size_t j = 0; j < w; ++j)
                if (sgn(pr[j]) != 0) ri[j] -= f * pr[j];
        }
        if (sgn(obj_[c]) != 0) {
            Scalar f = obj_[c];
            std::size_t ow = obj_.size();
            for (std::size_t j = 0; j < ow; ++j)
                if (sgn(pr[j]) != 0) obj_[j] -= f * pr[j];
        }
        basis_[r] = c;
    }

    std::size_t m_, n_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> basis_;
    std::vector<Scalar> obj_;
};

struct StandardForm {
    std::vector<std::vector<Scalar>> A;
    std::vector<Scalar> b;
    std::size_t columns = 0;
    std::vector<std::size_t> pos, neg;  // column of x_j^+ and x_j^- (neg == npos if absent)
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

StandardForm to_standard(std::size_t num_vars, const std::vector<bool>& nonneg,
                         const std::vector<LinearConstraint>& rows) {
    StandardForm sf;
    sf.pos.resize(num_vars);
    sf.neg.assign(num_vars, npos);
    std::size_t col = 0;
    for (std::size_t j = 0; j < num_vars; ++j) {
        sf.pos[j] = col++;
        if (!nonneg[j]) sf.neg[j] = col++;
    }
    std::size_t slack_start = col;
    for (const auto& r : rows)
        if (r.rel != Relation::Eq) ++col;
    sf.columns = col;

    std::size_t slack = slack_start;
    for (const auto& r : rows) {
        if (r.coeffs.size() != num_vars) throw std::invalid_argument("constraint width mismatch");
        std::vector<Scalar> row(col, Scalar(0));
        for (std::size_t j = 0; j < num_vars; ++j) {
            if (sgn(r.coeffs[j]) == 0) continue;
            row[sf.pos[j]] = r.coeffs[j];
            if (sf.neg[j] != npos) row[sf.neg[j]] = -r.coeffs[j];
        }
        if (r.rel != Relation::Eq) row[slack++] = 1;
        Scalar rhs = r.rhs;
        if (sgn(rhs) < 0) {
            for (auto& v : row) v = -v;
            rhs = -rhs;
        }
        sf.A.push_back(std::move(row));
        sf.b.push_back(std::move(rhs));
    }
    return sf;
}

LpResult solve(const std::vector<Scalar>& c, std::size_t num_vars, const std::vector<bool>& nonneg,
               const std::vector<LinearConstraint>& rows) {
    StandardForm sf = to_standard(num_vars, nonneg, rows);
    LpResult res;
    std::vector<Scalar> cs(sf.columns, Scalar(0));
    for (std::size_t j = 0; j < num_vars; ++j) {
        cs[sf.pos[j]] = c[j];
        if (sf.neg[j] != npos) cs[sf.neg[j]] = -c[j];
    }
    Tableau tab(std::move(sf.A), std::move(sf.b));
    if (!tab.phase_one()) {
        res.status = LpResult::Infeasible;
        return res;
    }
    if (!tab.phase_two(cs)) {
        res.status = LpResult::Unbounded;
        return res;
    }
    auto y = tab.solution();
    res.x.resize(num_vars);
    for (std::size_t j = 0; j < num_vars; ++j) {
        res.x[j] = y[sf.pos[j]];
        if (sf.neg[j] != npos) res.x[j] -= y[sf.neg[j]];
    }
    res.value = tab.value();
    res.status = LpResult::Optimal;
    return res;
}

}  // namespace

LpResult maximize(const std::vector<Scalar>& c, std::size_t num_vars,
                  const std::vector<LinearConstraint>& rows) {
    for (const auto& r : rows)
        if (r.rel == Relation::Less) throw std::invalid_argument("maximize: strict rows unsupported");
    return solve(c, num_vars, std::vector<bool>(num_vars, false), rows);
}

std::optional<std::vector<Scalar>> find_feasible(std::size_t num_vars,
                                                 const std::vector<LinearConstraint>& rows) {
    return find_feasible(num_vars, rows, std::vector<bool>(num_vars, false));
}

std::optional<std::vector<Scalar>> find_feasible(std::size_t num_vars,
                                                 const std::vector<LinearConstraint>& rows,
                                                 const std::vector<bool>& nonneg_vars) {
    bool strict = false;
    for (const auto& r : rows)
        if (r.rel == Relation::Less) strict = true;
    if (!strict) {
        auto res = solve(std::vector<Scalar>(num_vars, Scalar(0)), num_vars, nonneg_vars, rows);
        if (res.status != LpResult::Optimal) return std::nullopt;
        return res.x;
    }
    // extra variable t (last, nonnegative) with t <= 1
    std::size_t nv = num_vars + 1;
    std::vector<LinearConstraint> ext;
    ext.reserve(rows.size() + 1);
    for (const auto& r : rows) {
        LinearConstraint e{r.coeffs, r.rel == Relation::Eq ? Relation::Eq : Relation::LessEq, r.rhs};
        e.coeffs.push_back(r.rel == Relation::Less ? Scalar(1) : Scalar(0));
        ext.push_back(std::move(e));
    }
    LinearConstraint cap{std::vector<Scalar>(nv, Scalar(0)), Relation::LessEq, Scalar(1)};
    cap.coeffs.back() = 1;
    ext.push_back(std::move(cap));
    std::vector<bool> nonneg = nonneg_vars;
    nonneg.push_back(true);
    std::vector<Scalar> c(nv, Scalar(0));
    c.back() = 1;
    auto res = solve(c, nv, nonneg, ext);
    if (res.status != LpResult::Optimal || sgn(res.value) <= 0) return std::nullopt;
    res.x.pop_back();
    return res.x;
}

}  // namespace epsnet

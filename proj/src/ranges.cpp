#include "epsnet/ranges.hpp"

#include <algorithm>
#include <numeric>

namespace epsnet {

bool BoxRange::contains(const Point& p) const {
    for (std::size_t a = 0; a < lo.size(); ++a)
        if (p[a] < lo[a] || p[a] > hi[a]) return false;
    return true;
}

BoxRange bounding_box(const std::vector<Point>& pts) {
    BoxRange b;
    b.lo = pts.at(0);
    b.hi = pts.at(0);
    for (const auto& p : pts)
        for (std::size_t a = 0; a < p.size(); ++a) {
            if (p[a] < b.lo[a]) b.lo[a] = p[a];
            if (p[a] > b.hi[a]) b.hi[a] = p[a];
        }
    return b;
}

EpsilonProfile::EpsilonProfile(std::vector<Scalar> e) : eps(std::move(e)) {
    if (eps.empty()) throw InvalidInput("epsilon profile is empty");
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (sgn(eps[i]) <= 0 || eps[i] >= 1)
            throw InvalidInput("epsilon " + format_scalar(eps[i]) + " is not in (0,1)");
        if (i > 0 && eps[i] < eps[i - 1]) throw InvalidInput("epsilon values must be nondecreasing");
    }
}

long long EpsilonProfile::threshold(std::size_t i, long long n) const { return floor_times(eps.at(i), n) + 1; }

std::size_t count_in_box(const PointSet& P, const BoxRange& b) {
    if (b.dim() != P.dim) throw InvalidInput("box dimension does not match point set");
    std::size_t c = 0;
    for (const auto& p : P.points)
        if (b.contains(p)) ++c;
    return c;
}

BoxCounter::BoxCounter(const PointSet& P) : dim_(P.dim), by_x_(P.points) {
    std::sort(by_x_.begin(), by_x_.end(), [](const Point& a, const Point& b) { return a[0] < b[0]; });
    for (const auto& p : by_x_) xs_.push_back(p[0]);
}

std::size_t BoxCounter::count(const BoxRange& b) const {
    if (b.dim() != dim_) throw InvalidInput("box dimension does not match point set");
    auto first = std::lower_bound(xs_.begin(), xs_.end(), b.lo[0]) - xs_.begin();
    auto last = std::upper_bound(xs_.begin(), xs_.end(), b.hi[0]) - xs_.begin();
    std::size_t c = 0;
    for (auto i = first; i < last; ++i) {
        const Point& p = by_x_[static_cast<std::size_t>(i)];
        bool in = true;
        for (int a = 1; a < dim_ && in; ++a) in = b.lo[a] <= p[a] && p[a] <= b.hi[a];
        if (in) ++c;
    }
    return c;
}

CanonicalBoxStream::CanonicalBoxStream(const PointSet& P, std::size_t min_count)
    : P_(P), min_count_(min_count), coords_(static_cast<std::size_t>(P.dim)) {
    for (int a = 0; a < P.dim; ++a) {
        auto& c = coords_[static_cast<std::size_t>(a)];
        for (const auto& p : P.points) c.push_back(p[a]);
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    lo_.assign(coords_.size(), 0);
    hi_.assign(coords_.size(), 0);
}

std::size_t CanonicalBoxStream::count_current() const {
    std::size_t c = 0;
    for (const auto& p : P_.points) {
        bool in = true;
        for (std::size_t a = 0; a < coords_.size() && in; ++a)
            in = coords_[a][lo_[a]] <= p[a] && p[a] <= coords_[a][hi_[a]];
        if (in) ++c;
    }
    return c;
}

// odometer over (lo_0, hi_0, ..., lo_{d-1}, hi_{d-1}), last position fastest
bool CanonicalBoxStream::advance(std::size_t axis) {
    for (std::size_t a = axis + 1; a-- > 0;) {
        const std::size_t m = coords_[a].size();
        if (hi_[a] + 1 < m) {
            ++hi_[a];
            return true;
        }
        if (lo_[a] + 1 < m) {
            ++lo_[a];
            hi_[a] = lo_[a];
            return true;
        }
        lo_[a] = hi_[a] = 0;
    }
    return false;
}

std::optional<BoxRange> CanonicalBoxStream::next() {
    if (done_) return std::nullopt;
    for (;;) {
        if (!started_) {
            started_ = true;
        } else if (!advance(coords_.size() - 1)) {
            done_ = true;
            return std::nullopt;
        }
        if (count_current() >= min_count_) {
            BoxRange b;
            for (std::size_t a = 0; a < coords_.size(); ++a) {
                b.lo.push_back(coords_[a][lo_[a]]);
                b.hi.push_back(coords_[a][hi_[a]]);
            }
            return b;
        }
    }
}

SubsetHullStream::SubsetHullStream(std::shared_ptr<const PointSet> P, std::size_t t) : P_(std::move(P)) {
    if (t < 1 || t > P_->size())
        throw InvalidInput("subset size " + std::to_string(t) + " out of range 1.." + std::to_string(P_->size()));
    idx_.resize(t);
    std::iota(idx_.begin(), idx_.end(), 0);
}

std::optional<SubsetHull> SubsetHullStream::next() {
    if (done_) return std::nullopt;
    if (started_) {
        const std::size_t n = P_->size(), k = idx_.size();
        std::size_t i = k;
        while (i > 0 && idx_[i - 1] == n - k + i - 1) --i;
        if (i == 0) {
            done_ = true;
            return std::nullopt;
        }
        ++idx_[i - 1];
        for (std::size_t j = i; j < k; ++j) idx_[j] = idx_[j - 1] + 1;
    }
    started_ = true;
    return SubsetHull{P_, idx_};
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace epsnet

#include "tight/sieve.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tight {

namespace {

constexpr int64_t kBoundCap = int64_t(1) << 40; // bit tables beyond this are absurd

std::size_t words_for(int64_t bound) {
    return static_cast<std::size_t>(bound / 64) + 1;
}

// dst |= src << shift, truncated to dst.size() words.
void shift_or(const std::vector<uint64_t>& src, std::vector<uint64_t>& dst,
              int64_t shift) {
    const std::size_t n = dst.size();
    const std::size_t q = static_cast<std::size_t>(shift >> 6);
    const unsigned r = static_cast<unsigned>(shift & 63);
    if (q >= n) return;
    if (r == 0) {
        for (std::size_t j = n; j-- > q;) dst[j] |= src[j - q];
    } else {
        for (std::size_t j = n; j-- > q;) {
            uint64_t w = src[j - q] << r;
            if (j - q > 0) w |= src[j - q - 1] >> (64 - r);
            dst[j] |= w;
        }
    }
}

// One DP step: out = union over values v in S (scaled by coeff, <= bound) of
// cur shifted by coeff*v.
std::vector<uint64_t> dp_step(const std::vector<uint64_t>& cur, int64_t coeff,
                              const GonalSet& S, int64_t bound) {
    std::vector<uint64_t> next(cur.size(), 0);
    for (int64_t v : S.values_up_to(bound / coeff))
        shift_or(cur, next, coeff * v);
    return next;
}

} // namespace

FormVector::FormVector(std::vector<int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("FormVector: empty coefficient vector");
    for (int64_t c : coeffs_)
        if (c < 1) throw std::invalid_argument("FormVector: coefficients must be >= 1");
    std::sort(coeffs_.begin(), coeffs_.end());
}

int64_t FormVector::sum() const {
    return std::accumulate(coeffs_.begin(), coeffs_.end(), int64_t(0));
}

bool FormVector::contains(const FormVector& sub) const {
    std::size_t i = 0;
    for (int64_t c : coeffs_) {
        if (i == sub.size()) break;
        if (sub[i] == c) ++i;
        else if (sub[i] < c) return false; // sorted: sub[i] can no longer occur
    }
    return i == sub.size();
}

FormVector FormVector::without_index(std::size_t i) const {
    assert(i < coeffs_.size() && coeffs_.size() >= 2);
    std::vector<int64_t> c = coeffs_;
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
    return FormVector(std::move(c));
}

FormVector FormVector::with(int64_t extra) const {
    std::vector<int64_t> c = coeffs_;
    c.insert(std::upper_bound(c.begin(), c.end(), extra), extra);
    return FormVector(std::move(c));
}

FormVector FormVector::merge_max(const FormVector& a, const FormVector& b) {
    std::vector<int64_t> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j] < a[i]) {
            out.push_back(b[j++]);
        } else {
            out.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    return FormVector(std::move(out));
}

std::string FormVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    os << ')';
    return os.str();
}

std::optional<int64_t> ReprSet::first_missing(int64_t lo, int64_t hi) const {
    lo = std::max<int64_t>(lo, 0);
    hi = std::min(hi, bound_);
    for (int64_t g = lo; g <= hi;) {
        if ((g & 63) == 0 && g + 63 <= hi &&
            words_[static_cast<std::size_t>(g >> 6)] == ~uint64_t(0)) {
            g += 64;
            continue;
        }
        if (!contains(g)) return g;
        ++g;
    }
    return std::nullopt;
}

std::vector<int64_t> ReprSet::missing(int64_t lo, int64_t hi) const {
    std::vector<int64_t> out;
    lo = std::max<int64_t>(lo, 0);
    hi = std::min(hi, bound_);
    for (int64_t g = lo; g <= hi; ++g)
        if (!contains(g)) out.push_back(g);
    return out;
}

bool ReprSet::subset_of(const ReprSet& other) const {
    assert(bound_ == other.bound_);
    for (std::size_t j = 0; j < words_.size(); ++j)
        if (words_[j] & ~other.words_[j]) return false;
    return true;
}

ReprSet ReprSet::extended(int64_t extra_coeff, const GonalSet& S) const {
    ReprSet out;
    out.bound_ = bound_;
    out.words_ = dp_step(words_, extra_coeff, S, bound_);
    return out;
}

std::optional<Witness> ReprSet::witness(int64_t g) const {
    if (!has_witness_layers())
        throw std::logic_error("ReprSet: built without witness layers");
    if (!contains(g)) return std::nullopt;
    Witness w;
    w.value = g;
    int64_t remaining = g;
    const std::size_t k = coeffs_.size();
    for (std::size_t i = 0; i < k; ++i) {
        const auto& rest = layers_[i + 1];
        bool placed = false;
        for (int64_t v : set_->values_up_to(remaining / coeffs_[i])) {
            int64_t r = remaining - coeffs_[i] * v;
            if ((rest[static_cast<std::size_t>(r >> 6)] >> (r & 63)) & 1) {
                w.indices.push_back(*set_->index_of(v));
                remaining = r;
                placed = true;
                break;
            }
        }
        assert(placed);
        (void)placed;
    }
    assert(remaining == 0);
    return w;
}

ReprSet repr_set(const FormVector& a, const GonalSet& S, int64_t bound,
                 bool want_witnesses) {
    if (bound < 0) throw std::invalid_argument("repr_set: negative bound");
    if (bound > kBoundCap) throw std::overflow_error("repr_set: bound too large");
    ReprSet out;
    out.bound_ = bound;
    const std::size_t k = a.size();
    if (want_witnesses) {
        // Suffix layers so witnesses can be reconstructed greedily from the
        // left: layers_[i] = V_S(a_i..a_k).
        out.layers_.assign(k + 1, {});
        out.layers_[k].assign(words_for(bound), 0);
        out.layers_[k][0] = 1;
        for (std::size_t i = k; i-- > 0;)
            out.layers_[i] = dp_step(out.layers_[i + 1], a[i], S, bound);
        out.words_ = out.layers_[0];
        out.coeffs_ = a.coeffs();
        out.set_ = S;
    } else {
        std::vector<uint64_t> cur(words_for(bound), 0);
        cur[0] = 1;
        for (std::size_t i = 0; i < k; ++i)
            cur = dp_step(cur, a[i], S, bound);
        out.words_ = std::move(cur);
    }
    return out;
}

std::optional<Witness> find_witness(const FormVector& a, const GonalSet& S,
                                    int64_t target) {
    if (target < 0) return std::nullopt;
    return repr_set(a, S, target, /*want_witnesses=*/true).witness(target);
}

std::optional<int64_t> truant(const FormVector& a, const GonalSet& S,
                              int64_t n, int64_t bound) {
    if (n < 1) throw std::invalid_argument("truant: n must be positive");
    if (bound < n) throw std::invalid_argument("truant: bound must be >= n");
    // On [n, bound] the sets V and V' agree (only 0 is removed).
    return repr_set(a, S, bound).first_missing(n, bound);
}

namespace {

bool odd_square_dfs(const std::vector<int64_t>& d,
                    const std::vector<int64_t>& suffix_min, std::size_t i,
                    int64_t remaining, std::vector<int64_t>& xs) {
    if (i == d.size()) return remaining == 0;
    for (int64_t x = 1; d[i] * x * x + suffix_min[i + 1] <= remaining; x += 2) {
        xs.push_back(x);
        if (odd_square_dfs(d, suffix_min, i + 1, remaining - d[i] * x * x, xs))
            return true;
        xs.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<int64_t>> odd_square_repr(
    const std::vector<int64_t>& d, int64_t u) {
    if (d.empty()) throw std::invalid_argument("odd_square_repr: empty form");
    for (int64_t c : d)
        if (c < 1) throw std::invalid_argument("odd_square_repr: coefficients must be >= 1");
    if (u < 0) return std::nullopt;
    // suffix_min[i] = minimal contribution of variables i..k-1 (all x = 1)
    std::vector<int64_t> suffix_min(d.size() + 1, 0);
    for (std::size_t i = d.size(); i-- > 0;)
        suffix_min[i] = suffix_min[i + 1] + d[i];
    std::vector<int64_t> xs;
    if (odd_square_dfs(d, suffix_min, 0, u, xs)) return xs;
    return std::nullopt;
}

bool shift_equiv(const FormVector& a, int64_t g) {
    GonalSet tri(3, false);
    bool by_triangular = find_witness(a, tri, g).has_value();
    bool by_odd_squares = odd_square_repr(a.coeffs(), 8 * g + a.sum()).has_value();
    return by_triangular == by_odd_squares;
}

} // namespace tight

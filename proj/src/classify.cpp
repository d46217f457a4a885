#include "tight/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <condition_variable>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace tight {

namespace {

struct Node {
    FormVector vec;
    ReprSet repr;
};

class Search {
public:
    Search(const GonalSet& S, int64_t n, int64_t bound, int64_t depth_cap)
        : S_(S), n_(n), bound_(bound), depth_cap_(depth_cap) {
        if (S.contains_two()) {
            shapes_.push_back(run_vector(n));
        } else {
            shapes_.push_back(x_vector(n));
            shapes_.push_back(y_vector(n));
        }
    }

    void run(int threads) {
        {
            FormVector root({n_});
            queue_.push_back(Node{root, repr_set(root, S_, bound_)});
        }
        if (threads <= 1) {
            while (!queue_.empty()) {
                Node node = std::move(queue_.front());
                queue_.pop_front();
                for (auto& c : process(node)) queue_.push_back(std::move(c));
            }
        } else {
            std::vector<std::thread> pool;
            for (int i = 0; i < threads; ++i)
                pool.emplace_back([this] { worker(); });
            for (auto& t : pool) t.join();
        }
    }

    std::vector<FormVector> candidates() const {
        return {candidates_.begin(), candidates_.end()};
    }
    std::vector<FormVector> frontier() const {
        std::vector<FormVector> f{frontier_.begin(), frontier_.end()};
        std::sort(f.begin(), f.end());
        return f;
    }
    SearchStats stats() const {
        SearchStats s;
        s.visited = visited_.load();
        s.tight_nodes = tight_nodes_.load();
        s.lookahead_prunes = lookahead_prunes_.load();
        s.dead_prunes = dead_prunes_.load();
        s.forced_child_prunes = forced_child_prunes_.load();
        return s;
    }

private:
    void worker() {
        std::unique_lock<std::mutex> lk(qmu_);
        while (true) {
            qcv_.wait(lk, [this] { return !queue_.empty() || working_ == 0; });
            if (queue_.empty()) {
                if (working_ == 0) return;
                continue;
            }
            Node node = std::move(queue_.front());
            queue_.pop_front();
            ++working_;
            lk.unlock();
            std::vector<Node> children = process(node);
            lk.lock();
            --working_;
            for (auto& c : children) queue_.push_back(std::move(c));
            qcv_.notify_all();
        }
    }

    // Bounded tightness of an arbitrary vector at this search's (n, bound),
    // memoized.  All queried vectors have minimum n, so tightness reduces
    // to covering [n, bound].
    bool is_tight(const FormVector& v) {
        {
            std::lock_guard<std::mutex> lk(cache_mu_);
            auto it = tight_cache_.find(v.coeffs());
            if (it != tight_cache_.end()) return it->second;
        }
        bool tight = v.min() == n_ && repr_set(v, S_, bound_).covers(n_, bound_);
        std::lock_guard<std::mutex> lk(cache_mu_);
        tight_cache_.emplace(v.coeffs(), tight);
        return tight;
    }

    void add_candidate(const FormVector& v) {
        std::lock_guard<std::mutex> lk(result_mu_);
        candidates_.insert(v);
    }

    // Shape-F branch outcome at node a: every tight extension of a contains
    // merge_max(a, F).
    enum class Branch { Dead, Candidate, Inconclusive };

    Branch analyze_shape(const FormVector& a, const FormVector& shape,
                         FormVector* candidate) {
        FormVector m = FormVector::merge_max(a, shape);
        // Components the branch still needs must be appendable (>= last).
        {
            std::size_t i = 0, j = 0;
            while (j < m.size()) {
                if (i < a.size() && a[i] == m[j]) {
                    ++i;
                    ++j;
                } else {
                    if (m[j] < a.max()) return Branch::Dead;
                    ++j;
                }
            }
        }
        // A tight one-deletion of m makes every extension in the branch a
        // strict superset of a tight vector.
        if (m.size() >= 2) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i > 0 && m[i] == m[i - 1]) continue;
                FormVector del = m.without_index(i);
                if (del.min() != n_) continue;
                if (is_tight(del)) return Branch::Dead;
            }
        }
        if (m == a) return Branch::Inconclusive; // no information beyond a itself
        if (is_tight(m)) {
            *candidate = m;
            return Branch::Candidate;
        }
        return Branch::Inconclusive;
    }

    std::vector<Node> process(const Node& node) {
        visited_.fetch_add(1, std::memory_order_relaxed);
        const FormVector& a = node.vec;

        auto t_opt = node.repr.first_missing(n_, bound_);
        {
            std::lock_guard<std::mutex> lk(cache_mu_);
            tight_cache_.emplace(a.coeffs(), !t_opt.has_value());
        }
        if (!t_opt) {
            tight_nodes_.fetch_add(1, std::memory_order_relaxed);
            add_candidate(a);
            return {}; // supersets of a tight vector cannot be new
        }
        const int64_t t = *t_opt;
        const int64_t last = a.max();

        if (t < last) {
            // every further component exceeds t, which stays unrepresented
            dead_prunes_.fetch_add(1, std::memory_order_relaxed);
            return {};
        }

        // Lookahead across the forced shapes.
        {
            bool all_concluded = true;
            std::vector<FormVector> cands;
            for (const FormVector& shape : shapes_) {
                FormVector cand({1});
                switch (analyze_shape(a, shape, &cand)) {
                    case Branch::Dead: break;
                    case Branch::Candidate: cands.push_back(cand); break;
                    case Branch::Inconclusive: all_concluded = false; break;
                }
                if (!all_concluded) break;
            }
            if (all_concluded) {
                for (auto& c : cands) add_candidate(c);
                lookahead_prunes_.fetch_add(1, std::memory_order_relaxed);
                return {};
            }
        }

        if (static_cast<int64_t>(a.size()) >= depth_cap_) {
            std::lock_guard<std::mutex> lk(result_mu_);
            frontier_.insert(a);
            return {};
        }

        // Forced-component analysis: valid only when a representation of t
        // cannot involve two new components or s >= 2 on a new one.
        std::vector<int64_t> forced;
        bool have_forced = false;
        if (t < 2 * last) {
            have_forced = true;
            for (int64_t x = 0; x <= t - last; ++x)
                if (node.repr.contains(x)) forced.push_back(t - x);
            std::sort(forced.begin(), forced.end());
        }

        std::vector<Node> children;
        for (int64_t w = last; w <= t; ++w) {
            if (have_forced) {
                bool in_forced =
                    std::binary_search(forced.begin(), forced.end(), w);
                if (!in_forced) {
                    bool useful = false;
                    for (int64_t v : forced) {
                        if (v <= w) continue;
                        if (!is_tight(a.with(v))) {
                            useful = true;
                            break;
                        }
                    }
                    if (!useful) {
                        forced_child_prunes_.fetch_add(1,
                                                       std::memory_order_relaxed);
                        continue;
                    }
                }
            }
            children.push_back(Node{a.with(w), node.repr.extended(w, S_)});
        }
        if (children.empty())
            dead_prunes_.fetch_add(1, std::memory_order_relaxed);
        return children;
    }

    const GonalSet S_;
    const int64_t n_;
    const int64_t bound_;
    const int64_t depth_cap_;
    std::vector<FormVector> shapes_;

    std::deque<Node> queue_;
    std::mutex qmu_;
    std::condition_variable qcv_;
    int working_ = 0;

    std::mutex cache_mu_;
    std::map<std::vector<int64_t>, bool> tight_cache_;

    std::mutex result_mu_;
    std::set<FormVector> candidates_;
    std::set<FormVector> frontier_;

    std::atomic<uint64_t> visited_{0};
    std::atomic<uint64_t> tight_nodes_{0};
    std::atomic<uint64_t> lookahead_prunes_{0};
    std::atomic<uint64_t> dead_prunes_{0};
    std::atomic<uint64_t> forced_child_prunes_{0};
};

bool catalog_lookup(int64_t m, bool generalized, int64_t n,
                    std::vector<FormVector>* out) {
    auto xy = [&] {
        if (out) *out = {x_vector(n), y_vector(n)};
        return true;
    };
    // P3 = GP3 = GP6: the triangular classification applies.
    if (m == 3 || (m == 6 && generalized)) {
        if (n == 3) {
            if (out) {
                out->clear();
                out->push_back(FormVector{3, 3, 4, 5});
                out->push_back(FormVector{3, 4, 4, 5, 6});
                out->push_back(FormVector{3, 4, 5, 5, 6});
                for (int64_t a5 = 6; a5 <= 16; ++a5) {
                    if (a5 == 14 || a5 == 15) continue;
                    out->push_back(FormVector{3, 4, 5, 6, a5});
                }
            }
            return true;
        }
        if (n >= 4) return xy();
        return false;
    }
    // P4 = GP4 (squares): covered by the sums result.
    if (m == 4) return n >= 11 && xy();
    if (generalized) {
        if (m == 5) {
            if (n < 7) return false;
            if (out) *out = {run_vector(n)};
            return true;
        }
        if (m == 7) return n >= 11 && xy();
        if (m >= 8) return n >= 2 * m - 5 && xy();
        return false; // GP6 handled above
    }
    // sums of m-gonal numbers
    return n >= 2 * m + 3 && xy();
}

} // namespace

ClassificationReport enumerate_new(const GonalSet& S, int64_t n, int64_t bound,
                                   int64_t depth_cap, int threads) {
    if (n < 1) throw std::invalid_argument("enumerate_new: n must be positive");
    if (bound < 2 * n)
        throw std::invalid_argument("enumerate_new: bound must be >= 2n");
    if (depth_cap < n + 2)
        throw std::invalid_argument("enumerate_new: depth_cap must be >= n+2");
    if (threads < 1) threads = 1;

    Search search(S, n, bound, depth_cap);
    search.run(threads);

    ClassificationReport report;
    report.m = S.m();
    report.generalized = S.generalized();
    report.n = n;
    report.bound = bound;
    report.depth_cap = depth_cap;
    report.in_catalog = catalog_lookup(S.m(), S.generalized(), n, nullptr);
    report.stats = search.stats();
    report.frontier = search.frontier();
    report.depth_cap_hit = !report.frontier.empty();

    for (const FormVector& cand : search.candidates()) {
        if (static_cast<int64_t>(cand.size()) > depth_cap) continue;
        Verdict verdict = verify_tight(cand, S, n, bound);
        if (!verdict.passed()) continue;
        NewnessReport newness = is_new(cand, S, n, bound);
        if (!newness.is_new) continue;
        report.vectors.push_back(
            ClassifiedVector{cand, std::move(verdict), std::move(newness)});
    }
    // candidates() is already sorted and duplicate-free
    return report;
}

std::vector<FormVector> expected_results(int64_t m, bool generalized, int64_t n) {
    if (m < 3) throw std::invalid_argument("expected_results: m must be >= 3");
    if (n < 1) throw std::invalid_argument("expected_results: n must be positive");
    std::vector<FormVector> out;
    if (!catalog_lookup(m, generalized, n, &out))
        throw OutOfCatalog("no published classification for " +
                           GonalSet(m, generalized).name() + " with n = " +
                           std::to_string(n));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tight

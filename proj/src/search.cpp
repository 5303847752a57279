#include "gdm/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

namespace gdm {

namespace {

using Clock = std::chrono::steady_clock;

// Immutable tables shared by every worker: group arithmetic over element
// indices, adjacency, and the fixed assignment order.
struct Instance {
    int n = 0;
    std::vector<std::vector<int>> nbr;
    std::vector<int> order;
    std::vector<int> add;  // add[a*n + b] = index of element a + element b
    std::vector<int> neg;
    int zero = 0;
    int preset_mu = -1;  // any isolated vertex pins the constant to zero
};

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> found{false};
    std::atomic<bool> timed_out{false};
    std::mutex mtx;
    std::vector<std::pair<std::vector<int>, int>> solutions;  // assignment, mu index
};

Instance build_instance(const Graph& h, const GroupSpec& group, const SearchOptions& opts) {
    if (group.order() != h.vertex_count())
        throw std::invalid_argument("group order " + std::to_string(group.order()) +
                                    " != vertex count " + std::to_string(h.vertex_count()));
    if (h.vertex_count() > opts.vertex_cap)
        throw std::invalid_argument("vertex count " + std::to_string(h.vertex_count()) +
                                    " exceeds the search cap of " +
                                    std::to_string(opts.vertex_cap));
    Instance inst;
    inst.n = h.vertex_count();
    inst.nbr.reserve(static_cast<std::size_t>(inst.n));
    for (int v = 0; v < inst.n; ++v) inst.nbr.push_back(h.neighbors(v));

    // Descending degree completes hub neighborhoods early for maximal pruning.
    inst.order.resize(static_cast<std::size_t>(inst.n));
    std::iota(inst.order.begin(), inst.order.end(), 0);
    std::sort(inst.order.begin(), inst.order.end(), [&](int a, int b) {
        if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
        return a < b;
    });

    std::vector<Element> elems = group.elements();
    inst.add.resize(static_cast<std::size_t>(inst.n) * static_cast<std::size_t>(inst.n));
    inst.neg.resize(static_cast<std::size_t>(inst.n));
    for (int a = 0; a < inst.n; ++a) {
        inst.neg[static_cast<std::size_t>(a)] =
            static_cast<int>(group.index_of(group.neg(elems[static_cast<std::size_t>(a)])));
        for (int b = 0; b < inst.n; ++b)
            inst.add[static_cast<std::size_t>(a * inst.n + b)] = static_cast<int>(group.index_of(
                group.add(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)])));
    }
    inst.zero = static_cast<int>(group.index_of(group.zero()));
    for (int v = 0; v < inst.n; ++v)
        if (inst.nbr[static_cast<std::size_t>(v)].empty()) inst.preset_mu = inst.zero;
    return inst;
}

class Worker {
  public:
    Worker(const Instance& inst, const SearchOptions& opts, Shared& shared,
           Clock::time_point deadline, bool has_deadline)
        : inst_(inst),
          opts_(opts),
          shared_(shared),
          deadline_(deadline),
          has_deadline_(has_deadline),
          pending_(static_cast<std::size_t>(inst.n)),
          wsum_(static_cast<std::size_t>(inst.n), inst.zero),
          used_(static_cast<std::size_t>(inst.n), 0),
          assign_(static_cast<std::size_t>(inst.n), -1),
          mu_(inst.preset_mu) {
        for (int v = 0; v < inst_.n; ++v)
            pending_[static_cast<std::size_t>(v)] =
                static_cast<int>(inst_.nbr[static_cast<std::size_t>(v)].size());
    }

    void run_roots(const std::vector<int>& roots, bool sym_pending) {
        for (int e : roots)
            if (stop_requested() || branch(0, e, sym_pending)) return;
    }

  private:
    bool stop_requested() const {
        if (shared_.timed_out.load(std::memory_order_relaxed)) return true;
        return !opts_.find_all && shared_.found.load(std::memory_order_relaxed);
    }

    // Charges one node against the budget; true when the budget is blown.
    bool out_of_budget() {
        std::uint64_t total = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (opts_.max_nodes != 0 && total > opts_.max_nodes) {
            shared_.timed_out.store(true, std::memory_order_relaxed);
            return true;
        }
        if (has_deadline_ && (++ticks_ & 1023u) == 0 && Clock::now() > deadline_) {
            shared_.timed_out.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    bool record() {
        std::lock_guard<std::mutex> lock(shared_.mtx);
        shared_.solutions.emplace_back(assign_, mu_);
        if (opts_.find_all) return false;
        shared_.found.store(true, std::memory_order_relaxed);
        return true;
    }

    // Assigns element e at `depth`, prunes on any neighborhood this
    // assignment completes, recurses, undoes. True aborts the whole search.
    bool branch(int depth, int e, bool sym_pending) {
        if (out_of_budget()) return true;
        int v = inst_.order[static_cast<std::size_t>(depth)];
        used_[static_cast<std::size_t>(e)] = 1;
        assign_[static_cast<std::size_t>(v)] = e;
        int mu_before = mu_;
        const auto& nbr = inst_.nbr[static_cast<std::size_t>(v)];
        for (int u : nbr) {
            auto su = static_cast<std::size_t>(u);
            wsum_[su] = inst_.add[static_cast<std::size_t>(wsum_[su] * inst_.n + e)];
            --pending_[su];
        }
        bool ok = true;
        for (int u : nbr) {
            auto su = static_cast<std::size_t>(u);
            if (pending_[su] != 0) continue;
            if (mu_ < 0)
                mu_ = wsum_[su];
            else if (wsum_[su] != mu_) {
                ok = false;
                break;
            }
        }
        bool stop = ok && dfs(depth + 1, sym_pending && inst_.neg[static_cast<std::size_t>(e)] == e);
        int ne = inst_.neg[static_cast<std::size_t>(e)];
        for (int u : nbr) {
            auto su = static_cast<std::size_t>(u);
            wsum_[su] = inst_.add[static_cast<std::size_t>(wsum_[su] * inst_.n + ne)];
            ++pending_[su];
        }
        mu_ = mu_before;
        used_[static_cast<std::size_t>(e)] = 0;
        assign_[static_cast<std::size_t>(v)] = -1;
        return stop;
    }

    bool dfs(int depth, bool sym_pending) {
        if (depth == inst_.n) return record();
        for (int e = 0; e < inst_.n; ++e) {
            if (used_[static_cast<std::size_t>(e)]) continue;
            // Until some non-self-inverse element is placed, negating a
            // labeling is a free symmetry; keep the smaller of {e, -e}.
            if (sym_pending && inst_.neg[static_cast<std::size_t>(e)] != e &&
                e > inst_.neg[static_cast<std::size_t>(e)])
                continue;
            if (stop_requested()) return true;
            if (branch(depth, e, sym_pending)) return true;
        }
        return false;
    }

    const Instance& inst_;
    const SearchOptions& opts_;
    Shared& shared_;
    Clock::time_point deadline_;
    bool has_deadline_;
    std::vector<int> pending_;
    std::vector<int> wsum_;
    std::vector<char> used_;
    std::vector<int> assign_;
    int mu_;
    std::uint32_t ticks_ = 0;
};

// `h` is the graph actually searched; found assignments are wrapped as
// labelings of base x C_cycle, whose product graph must be h itself.
SearchOutcome run_search(const Graph& h, const GroupSpec& group, const SearchOptions& opts,
                         const Graph& base, int cycle) {
    Instance inst = build_instance(h, group, opts);
    Shared shared;
    auto start = Clock::now();
    bool has_deadline = opts.timeout_seconds > 0;
    auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(opts.timeout_seconds));

    std::vector<int> roots;
    for (int e = 0; e < inst.n; ++e) {
        if (opts.symmetry_breaking && inst.neg[static_cast<std::size_t>(e)] != e &&
            e > inst.neg[static_cast<std::size_t>(e)])
            continue;
        roots.push_back(e);
    }

    int jobs = std::clamp(opts.jobs, 1, std::max(1, static_cast<int>(roots.size())));
    if (jobs == 1) {
        Worker(inst, opts, shared, deadline, has_deadline).run_roots(roots, opts.symmetry_breaking);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                std::vector<int> mine;
                for (std::size_t i = static_cast<std::size_t>(t); i < roots.size();
                     i += static_cast<std::size_t>(jobs))
                    mine.push_back(roots[i]);
                Worker(inst, opts, shared, deadline, has_deadline)
                    .run_roots(mine, opts.symmetry_breaking);
            });
        for (auto& th : pool) th.join();
    }

    SearchOutcome out;
    out.nodes_explored = shared.nodes.load();
    out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();

    std::sort(shared.solutions.begin(), shared.solutions.end());
    bool any = !shared.solutions.empty();
    bool timed_out = shared.timed_out.load();
    if (any && !(opts.find_all && timed_out))
        out.status = SearchStatus::Found;
    else
        out.status = timed_out ? SearchStatus::Timeout : SearchStatus::ExhaustedNone;

    if (any) {
        std::vector<Element> elems = group.elements();
        auto to_labeling = [&](const std::vector<int>& a) {
            std::vector<Element> labels(a.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                labels[i] = elems[static_cast<std::size_t>(a[i])];
            Labeling lab(group, base, cycle, std::move(labels));
            if (!lab.verify().ok())
                throw std::logic_error("search produced a labeling that fails verification");
            return lab;
        };
        out.labeling = to_labeling(shared.solutions.front().first);
        if (opts.find_all) {
            out.solutions.reserve(shared.solutions.size());
            for (const auto& sol : shared.solutions) out.solutions.push_back(to_labeling(sol.first));
        }
        std::vector<Element> mus;
        for (const auto& sol : shared.solutions) {
            mus.push_back(elems[static_cast<std::size_t>(sol.second)]);
            if (opts.symmetry_breaking) mus.push_back(group.neg(mus.back()));
        }
        std::sort(mus.begin(), mus.end());
        mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
        out.magic_constants = std::move(mus);
    }
    return out;
}

}  // namespace

SearchOutcome exists_labeling(const Graph& h, const GroupSpec& group, const SearchOptions& opts) {
    return run_search(h, group, opts, h, 1);
}

SearchOutcome search_product(const Graph& base, int cycle, const GroupSpec& group,
                             const SearchOptions& opts) {
    return run_search(base.direct_product_with_cycle(cycle), group, opts, base, cycle);
}

std::vector<Element> all_magic_constants(const Graph& h, const GroupSpec& group,
                                         const SearchOptions& opts) {
    SearchOptions all = opts;
    all.find_all = true;
    return exists_labeling(h, group, all).magic_constants;
}

}  // namespace gdm

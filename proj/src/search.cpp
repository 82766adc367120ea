#include <radokit/search.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace radokit {

auto to_string(SearchOutcome o) -> std::string
{
    switch (o) {
    case SearchOutcome::witness: return "witness";
    case SearchOutcome::exhausted: return "exhausted";
    case SearchOutcome::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

auto to_string(RadoResult::Status s) -> std::string
{
    switch (s) {
    case RadoResult::Status::found: return "found";
    case RadoResult::Status::unknown: return "unknown";
    case RadoResult::Status::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

auto to_string(DorRow::Status s) -> std::string
{
    switch (s) {
    case DorRow::Status::regular: return "regular";
    case DorRow::Status::not_regular_evidence: return "avoiding-witness";
    case DorRow::Status::implied_by_criterion: return "implied-by-rado-criterion";
    case DorRow::Status::implied_by_witness: return "implied-by-smaller-r-witness";
    case DorRow::Status::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {
    // For each m, the solutions with largest value m, each reduced to its set of
    // values other than m. A solution made of m alone is stored as `forced`.
    class SolutionIndex {
    public:
        SolutionIndex(const LinearEquation & eq, bool distinct) : eq_(eq), distinct_(distinct)
        {
            offsets_.push_back(0); // m = 0 placeholder
            offsets_.push_back(0);
            forced_.push_back(false);
        }

        void extend_to(std::int64_t bound)
        {
            std::vector<std::int32_t> set;
            std::vector<std::vector<std::int32_t>> sets;
            while (built_ < bound) {
                const std::int64_t m = ++built_;
                sets.clear();
                bool forced = false;
                SolutionEnumerator e(eq_, {.max_value = m, .max_element = m, .distinct = distinct_});
                e.for_each([&](std::span<const std::int64_t> x) {
                    set.clear();
                    for (auto v : x)
                        if (v != m)
                            set.push_back(static_cast<std::int32_t>(v));
                    if (set.empty())
                        forced = true;
                    std::sort(set.begin(), set.end());
                    set.erase(std::unique(set.begin(), set.end()), set.end());
                    sets.push_back(set);
                    return true;
                });
                std::sort(sets.begin(), sets.end());
                sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
                for (const auto & s : sets) {
                    values_.insert(values_.end(), s.begin(), s.end());
                    ends_.push_back(static_cast<std::uint32_t>(values_.size()));
                }
                offsets_.push_back(ends_.size());
                forced_.push_back(forced);
            }
        }

        auto built() const -> std::int64_t { return built_; }

        // Can m take color c given col[1..m-1]?
        auto consistent(std::int64_t m, int c, const std::vector<int> & col) const -> bool
        {
            if (forced_[static_cast<std::size_t>(m)])
                return false;
            const std::size_t first = offsets_[static_cast<std::size_t>(m)];
            const std::size_t last = offsets_[static_cast<std::size_t>(m) + 1];
            std::uint32_t begin = first == 0 ? 0 : ends_[first - 1];
            for (std::size_t s = first; s < last; ++s) {
                const std::uint32_t end = ends_[s];
                bool mono = true;
                for (std::uint32_t p = begin; p < end; ++p)
                    if (col[static_cast<std::size_t>(values_[p])] != c) {
                        mono = false;
                        break;
                    }
                if (mono)
                    return false;
                begin = end;
            }
            return true;
        }

    private:
        const LinearEquation & eq_;
        bool distinct_;
        std::int64_t built_ = 0;
        // Sets for m are ends_[offsets_[m] .. offsets_[m+1]), each ending at ends_[s] in values_.
        std::vector<std::size_t> offsets_;
        std::vector<std::uint32_t> ends_;
        std::vector<std::int32_t> values_;
        std::vector<bool> forced_;
    };

    struct SharedBudget {
        Budget budget;
        Stopwatch clock;
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<bool> stop{false};
        std::atomic<bool> exceeded{false};

        auto charge(std::uint64_t n) -> bool
        {
            auto total = nodes.fetch_add(n) + n;
            if (budget.max_nodes && total > budget.max_nodes) {
                exceeded = true;
                return false;
            }
            if (budget.max_seconds > 0 && clock.seconds() > budget.max_seconds) {
                exceeded = true;
                return false;
            }
            return ! stop.load(std::memory_order_relaxed);
        }

        // Nodes counted locally between charges; small node budgets are checked finely.
        auto batch() const -> std::uint64_t
        {
            if (budget.max_nodes == 0)
                return 1024;
            return std::clamp<std::uint64_t>(budget.max_nodes / 64, 1, 1024);
        }
    };

    enum class RunResult { witness, exhausted, stopped };

    // Iterative depth-first search below a fixed prefix. Starting from `start`
    // continues the lexicographic order from that assignment.
    class Backtracker {
    public:
        Backtracker(const SolutionIndex & index, int r, std::int64_t bound, SharedBudget & shared) :
            index_(index), r_(r), bound_(bound), shared_(shared),
            col_(static_cast<std::size_t>(bound) + 2, -1), used_(static_cast<std::size_t>(bound) + 2, 0),
            next_(static_cast<std::size_t>(bound) + 2, 0)
        {
        }

        auto run(const std::vector<int> & start, std::size_t fixed) -> RunResult
        {
            std::int64_t pos = 1;
            for (std::size_t i = 0; i < start.size(); ++i, ++pos) {
                col_[pos] = start[i];
                used_[pos] = std::max(used_[pos - 1], start[i] + 1);
            }
            const auto fixed_pos = static_cast<std::int64_t>(fixed);
            next_[pos] = 0;
            std::uint64_t pending = 0;
            const std::uint64_t batch = shared_.batch();

            while (true) {
                if (pos > bound_) {
                    shared_.charge(pending);
                    return RunResult::witness;
                }
                if (pos <= fixed_pos) {
                    shared_.charge(pending);
                    return RunResult::exhausted;
                }
                const int limit = std::min(r_, used_[pos - 1] + 1);
                int c = next_[pos];
                while (c < limit) {
                    ++pending;
                    col_[pos] = c;
                    if (index_.consistent(pos, c, col_))
                        break;
                    ++c;
                }
                if (pending >= batch) {
                    if (! shared_.charge(pending))
                        return RunResult::stopped;
                    pending = 0;
                }
                if (c >= limit) {
                    col_[pos] = -1;
                    --pos;
                    if (pos >= 1)
                        next_[pos] = col_[pos] + 1;
                    if (pos < 1) {
                        shared_.charge(pending);
                        return RunResult::exhausted;
                    }
                    continue;
                }
                used_[pos] = std::max(used_[pos - 1], c + 1);
                ++pos;
                if (pos <= bound_)
                    next_[pos] = 0;
            }
        }

        auto colors() const -> std::vector<int>
        {
            return {col_.begin() + 1, col_.begin() + 1 + bound_};
        }

    private:
        const SolutionIndex & index_;
        int r_;
        std::int64_t bound_;
        SharedBudget & shared_;
        std::vector<int> col_;
        std::vector<int> used_;
        std::vector<int> next_;
    };

    auto canonical_seed(const std::vector<int> & seed, int r) -> std::vector<int>
    {
        std::vector<int> relabel(static_cast<std::size_t>(r), -1);
        int next = 0;
        std::vector<int> out;
        for (int c : seed) {
            if (c < 0 || c >= r)
                fail(ErrorKind::invalid_argument, "seed color " + std::to_string(c) + " is outside [0, " + std::to_string(r - 1) + "]");
            if (relabel[static_cast<std::size_t>(c)] < 0)
                relabel[static_cast<std::size_t>(c)] = next++;
            out.push_back(relabel[static_cast<std::size_t>(c)]);
        }
        return out;
    }

    void check_seed(const SolutionIndex & index, const std::vector<int> & seed)
    {
        std::vector<int> col(seed.size() + 1, -1);
        for (std::size_t i = 0; i < seed.size(); ++i) {
            col[i + 1] = seed[i];
            if (! index.consistent(static_cast<std::int64_t>(i + 1), seed[i], col))
                fail(ErrorKind::invalid_argument, "seed coloring has a monochromatic solution with largest value "
                        + std::to_string(i + 1));
        }
    }

    // All symmetry-broken consistent prefixes of the given length, in lexicographic order.
    void collect_prefixes(const SolutionIndex & index, int r, std::size_t depth, std::vector<int> & col, int used,
        std::vector<std::vector<int>> & out)
    {
        const std::size_t pos = col.size();
        if (pos == depth + 1) {
            out.emplace_back(col.begin() + 1, col.end());
            return;
        }
        col.push_back(-1);
        for (int c = 0; c < std::min(r, used + 1); ++c) {
            col.back() = c;
            if (index.consistent(static_cast<std::int64_t>(pos), c, col))
                collect_prefixes(index, r, depth, col, std::max(used, c + 1), out);
        }
        col.pop_back();
    }

    struct Engine {
        const SolutionIndex & index;
        int r;
        std::int64_t bound;
        SharedBudget & shared;

        auto sequential(const std::vector<int> & start) -> std::pair<RunResult, std::vector<int>>
        {
            Backtracker bt(index, r, bound, shared);
            auto res = bt.run(start, 0);
            return {res, res == RunResult::witness ? bt.colors() : std::vector<int>{}};
        }

        auto parallel(unsigned threads) -> std::pair<RunResult, std::vector<int>>
        {
            std::vector<std::vector<int>> prefixes;
            std::size_t depth = 1;
            while (true) {
                prefixes.clear();
                std::vector<int> col{-1};
                collect_prefixes(index, r, depth, col, 0, prefixes);
                if (prefixes.size() >= 4 * threads || depth >= static_cast<std::size_t>(bound) || prefixes.empty())
                    break;
                ++depth;
            }
            if (prefixes.empty())
                return {RunResult::exhausted, {}};

            std::atomic<std::size_t> next{0};
            std::mutex m;
            std::vector<int> witness;
            std::atomic<bool> stopped{false};
            auto worker = [&] {
                Backtracker bt(index, r, bound, shared);
                while (! shared.stop) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= prefixes.size())
                        return;
                    auto res = bt.run(prefixes[k], prefixes[k].size());
                    if (res == RunResult::witness) {
                        std::lock_guard lock(m);
                        if (witness.empty())
                            witness = bt.colors();
                        shared.stop = true;
                        return;
                    }
                    if (res == RunResult::stopped) {
                        stopped = true;
                        shared.stop = true;
                        return;
                    }
                }
            };
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back(worker);
            for (auto & t : pool)
                t.join();
            if (! witness.empty())
                return {RunResult::witness, witness};
            if (stopped || shared.exceeded)
                return {RunResult::stopped, {}};
            return {RunResult::exhausted, {}};
        }
    };

    auto run_search(const SolutionIndex & index, const LinearEquation & eq, int r, std::int64_t bound,
        const SearchOptions & options, const std::optional<std::vector<int>> & seed, bool seed_is_least,
        const Budget & budget) -> SearchCertificate
    {
        SharedBudget shared;
        shared.budget = budget;
        SearchCertificate cert{eq, r, bound, SearchOutcome::budget_exceeded, std::nullopt, 0, 0.0, options.distinct, false};
        Engine engine{index, r, bound, shared};

        std::pair<RunResult, std::vector<int>> res;
        bool done = false;
        if (seed && ! seed->empty()) {
            cert.seeded = true;
            res = engine.sequential(*seed);
            done = res.first == RunResult::witness || res.first == RunResult::stopped || seed_is_least;
        }
        if (! done)
            res = options.threads > 1 ? engine.parallel(options.threads) : engine.sequential({});

        switch (res.first) {
        case RunResult::witness:
            cert.outcome = SearchOutcome::witness;
            cert.witness = Coloring::explicit_colors(r, std::move(res.second));
            break;
        case RunResult::exhausted: cert.outcome = SearchOutcome::exhausted; break;
        case RunResult::stopped: cert.outcome = SearchOutcome::budget_exceeded; break;
        }
        cert.nodes = shared.nodes.load();
        cert.seconds = shared.clock.seconds();
        return cert;
    }

    void validate(int r, std::int64_t bound)
    {
        if (r < 1)
            fail(ErrorKind::invalid_argument, "number of colors must be >= 1");
        if (bound < 1)
            fail(ErrorKind::invalid_argument, "N must be >= 1");
        if (bound > std::numeric_limits<std::int32_t>::max())
            fail(ErrorKind::overflow, "N is too large for the search");
    }
}

auto search_avoiding(const LinearEquation & eq, int num_colors, std::int64_t bound, const SearchOptions & options)
    -> SearchCertificate
{
    validate(num_colors, bound);
    SolutionIndex index(eq, options.distinct);
    index.extend_to(bound);

    std::optional<std::vector<int>> seed;
    if (options.seed && ! options.seed->empty()) {
        auto s = canonical_seed(*options.seed, num_colors);
        if (static_cast<std::int64_t>(s.size()) > bound)
            s.resize(static_cast<std::size_t>(bound));
        check_seed(index, s);
        seed = std::move(s);
    }
    return run_search(index, eq, num_colors, bound, options, seed, false, options.budget);
}

auto rado_number(const LinearEquation & eq, int num_colors, std::int64_t max_n, const SearchOptions & options) -> RadoResult
{
    validate(num_colors, max_n);
    RadoResult result;
    Stopwatch clock;
    SolutionIndex index(eq, options.distinct);

    std::optional<std::vector<int>> seed;
    bool seed_is_least = options.threads <= 1;
    if (options.seed && ! options.seed->empty()) {
        seed = canonical_seed(*options.seed, num_colors);
        seed_is_least = false;
    }

    for (std::int64_t n = 1; n <= max_n; ++n) {
        index.extend_to(n);
        if (seed && static_cast<std::int64_t>(seed->size()) >= n)
            seed->resize(static_cast<std::size_t>(n - 1));

        Budget remaining = options.budget;
        if (remaining.max_nodes) {
            if (result.nodes >= remaining.max_nodes) {
                result.status = RadoResult::Status::budget_exceeded;
                break;
            }
            remaining.max_nodes -= result.nodes;
        }
        if (remaining.max_seconds > 0) {
            remaining.max_seconds -= clock.seconds();
            if (remaining.max_seconds <= 0) {
                result.status = RadoResult::Status::budget_exceeded;
                break;
            }
        }

        if (seed)
            check_seed(index, *seed);
        auto cert = run_search(index, eq, num_colors, n, options, seed, seed_is_least, remaining);
        result.nodes += cert.nodes;

        if (cert.outcome == SearchOutcome::exhausted) {
            result.status = RadoResult::Status::found;
            result.value = n;
            break;
        }
        if (cert.outcome == SearchOutcome::budget_exceeded) {
            result.status = RadoResult::Status::budget_exceeded;
            break;
        }
        result.witness_bound = n;
        seed = cert.witness->colors();
        result.witness = std::move(cert.witness);
        // A parallel witness is not lexicographically least, so continuing from
        // it proves nothing about the skipped part of the tree.
        seed_is_least = options.threads <= 1 && seed_is_least;
        result.status = RadoResult::Status::unknown;
    }
    result.seconds = clock.seconds();
    return result;
}

auto dor_report(const LinearEquation & eq, int r_max, std::int64_t evidence_bound, const SearchOptions & options)
    -> DorReport
{
    if (r_max < 1)
        fail(ErrorKind::invalid_argument, "r_max must be >= 1");
    DorReport report{eq, false, {}, std::nullopt, std::nullopt, evidence_bound, {}};
    auto reg = is_regular(eq);
    report.regular = reg.regular;
    report.zero_subset = reg.subset;

    if (reg.regular) {
        for (int r = 1; r <= r_max; ++r)
            report.rows.push_back({r, DorRow::Status::implied_by_criterion, std::nullopt, 0, 0, 0.0});
        report.certified_lower = r_max;
        return report;
    }

    std::optional<std::int64_t> surviving_bound;
    for (int r = 1; r <= r_max; ++r) {
        DorRow row;
        row.num_colors = r;
        if (surviving_bound) {
            row.status = DorRow::Status::implied_by_witness;
            row.witness_bound = *surviving_bound;
            report.rows.push_back(row);
            continue;
        }
        SearchOptions o = options;
        o.seed.reset();
        auto rado = rado_number(eq, r, evidence_bound, o);
        row.nodes = rado.nodes;
        row.seconds = rado.seconds;
        row.witness_bound = rado.witness_bound;
        switch (rado.status) {
        case RadoResult::Status::found:
            row.status = DorRow::Status::regular;
            row.rado_number = rado.value;
            report.certified_lower = r;
            break;
        case RadoResult::Status::unknown:
            row.status = DorRow::Status::not_regular_evidence;
            surviving_bound = rado.witness_bound;
            report.evidence_upper = r - 1;
            break;
        case RadoResult::Status::budget_exceeded: row.status = DorRow::Status::budget_exceeded; break;
        }
        report.rows.push_back(row);
    }
    return report;
}

}

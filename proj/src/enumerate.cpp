#include "nssd/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "nssd/nssd_check.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nssd {

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// r-th k-subset of [0, n) in colex order, as a bitmask.
std::uint64_t unrank_colex(int n, int k, std::uint64_t r) {
    std::uint64_t mask = 0;
    for (int slot = k; slot >= 1; --slot) {
        int c = slot - 1;
        while (c + 1 < n && binomial(c + 1, slot) <= r) ++c;
        mask |= std::uint64_t(1) << c;
        r -= binomial(c, slot);
        n = c;
    }
    return mask;
}

// next k-subset mask in colex order (Gosper)
std::uint64_t next_combination(std::uint64_t v) {
    std::uint64_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctzll(v) + 1));
}

struct GroupTables {
    int count;                          // 2n
    std::vector<std::uint64_t> rows;    // commuting-relation bitmask per element

    explicit GroupTables(const HvGroupCtx& ctx) : count(ctx.order()), rows(count, 0) {
        auto els = elements(ctx.group);
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < count; ++j)
                if (i != j && commutes(els[i], els[j], ctx))
                    rows[i] |= std::uint64_t(1) << j;
    }
};

// Compresses the subset's commuting relation into k packed rows; returns false
// when pruning rejects the subset before any linear algebra.
bool subset_rows(const GroupTables& tab, std::uint64_t mask, int k, bool prune_isolated,
                 std::uint64_t* out) {
    int verts[16];
    int idx = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) verts[idx++] = __builtin_ctzll(m);
    for (int i = 0; i < k; ++i) {
        std::uint64_t masked = tab.rows[verts[i]] & mask;
        if (prune_isolated && masked == 0) return false;  // isolated vertex: singular
        std::uint64_t packed = 0;
        for (int j = 0; j < k; ++j)
            if (masked >> verts[j] & 1) packed |= std::uint64_t(1) << j;
        out[i] = packed;
    }
    return true;
}

bool rows_connected(const std::uint64_t* rows, int k) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) next |= rows[__builtin_ctzll(m)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (k == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << k) - 1);
}

bool subset_is_nssd(const GroupTables& tab, std::uint64_t mask, int k,
                    const EnumerateOptions& opt) {
    std::uint64_t rows[16];
    if (!subset_rows(tab, mask, k, opt.prune_isolated, rows)) return false;
    if (opt.connected_only && !rows_connected(rows, k)) return false;
    return is_nssd_fast_bits(rows, k);
}

void validate(int n, const EnumerateOptions& opt) {
    if (n < 2) throw std::invalid_argument("enumerate_nssd: n must be >= 2");
    if (n > 32) throw std::invalid_argument("enumerate_nssd: subset masks support n <= 32");
    if (opt.min_order < 2 || opt.min_order > opt.max_order || opt.max_order > 16)
        throw std::invalid_argument("enumerate_nssd: order bounds must satisfy 2 <= min <= max <= 16");
}

// Dedup survivors into rows/representatives; survivors arrive in colex order.
void finish_row(const HvGroupCtx& ctx, int n, int k, std::vector<std::uint64_t> survivors,
                EnumerationReport& report) {
    EnumerationRow row{n, k, survivors.size(), 0};
    std::map<CanonicalForm, int> classes;
    auto els = elements(ctx.group);
    for (std::uint64_t mask : survivors) {
        std::vector<GroupElement> subset;
        for (std::uint64_t m = mask; m; m &= m - 1) subset.push_back(els[__builtin_ctzll(m)]);
        Graph g = commuting_graph(ctx, subset);
        CanonicalForm form = canonical_form(g);
        if (classes.emplace(form, static_cast<int>(classes.size())).second) {
            report.representatives.push_back(
                {n, k, static_cast<int>(classes.size()) - 1, subset, g, form});
        }
    }
    row.iso_classes = classes.size();
    report.rows.push_back(row);
    report.witnesses.push_back({n, k, std::move(survivors)});
}

}  // namespace

EnumerationReport enumerate_nssd(int n, const EnumerateOptions& opt) {
    validate(n, opt);
    HvGroupCtx ctx(n);
    GroupTables tab(ctx);
    const int count = ctx.order();
    EnumerationReport report;

#ifdef _OPENMP
    if (opt.workers > 0) omp_set_num_threads(opt.workers);
#endif
    constexpr std::uint64_t kBlock = 4096;
    for (int k = opt.min_order; k <= std::min(opt.max_order, count); ++k) {
        const std::uint64_t total = binomial(count, k);
        const std::uint64_t nblocks = (total + kBlock - 1) / kBlock;
        std::vector<std::vector<std::uint64_t>> found(nblocks);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
            const std::uint64_t lo = b * kBlock;
            const std::uint64_t hi = std::min(total, lo + kBlock);
            std::uint64_t mask = unrank_colex(count, k, lo);
            for (std::uint64_t r = lo; r < hi; ++r) {
                if (subset_is_nssd(tab, mask, k, opt)) found[b].push_back(mask);
                mask = next_combination(mask);
            }
        }

        std::vector<std::uint64_t> survivors;
        for (auto& block : found)
            survivors.insert(survivors.end(), block.begin(), block.end());
        finish_row(ctx, n, k, std::move(survivors), report);
    }
    return report;
}

EnumerationReport enumerate_nssd_serial(int n, const EnumerateOptions& opt) {
    validate(n, opt);
    HvGroupCtx ctx(n);
    GroupTables tab(ctx);
    const int count = ctx.order();
    EnumerationReport report;
    for (int k = opt.min_order; k <= std::min(opt.max_order, count); ++k) {
        const std::uint64_t total = binomial(count, k);
        std::vector<std::uint64_t> survivors;
        std::uint64_t mask = (std::uint64_t(1) << k) - 1;
        for (std::uint64_t r = 0; r < total; ++r) {
            if (subset_is_nssd(tab, mask, k, opt)) survivors.push_back(mask);
            mask = next_combination(mask);
        }
        finish_row(ctx, n, k, std::move(survivors), report);
    }
    return report;
}

void EnumerationReport::merge(EnumerationReport other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
    representatives.insert(representatives.end(), other.representatives.begin(),
                           other.representatives.end());
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    auto key_row = [](const EnumerationRow& r) { return std::pair(r.n, r.order); };
    std::stable_sort(rows.begin(), rows.end(),
                     [&](auto& a, auto& b) { return key_row(a) < key_row(b); });
    std::stable_sort(representatives.begin(), representatives.end(), [](auto& a, auto& b) {
        return std::tuple(a.n, a.order, a.class_index) < std::tuple(b.n, b.order, b.class_index);
    });
    std::stable_sort(witnesses.begin(), witnesses.end(), [](auto& a, auto& b) {
        return std::pair(a.n, a.order) < std::pair(b.n, b.order);
    });
}

std::vector<Graph> dedup_iso(std::span<const Graph> graphs) {
    std::vector<Graph> reps;
    std::map<CanonicalForm, int> seen;
    for (const Graph& g : graphs)
        if (seen.emplace(canonical_form(g), static_cast<int>(seen.size())).second)
            reps.push_back(g);
    return reps;
}

void write_report_csv(const EnumerationReport& report, std::ostream& os) {
    os << "n,order,nssd_subsets,nssd_iso_classes\n";
    for (const auto& r : report.rows)
        os << r.n << ',' << r.order << ',' << r.nssd_subsets << ',' << r.iso_classes << '\n';
}

void write_report_json(const EnumerationReport& report, std::ostream& os) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
        nlohmann::json row = {{"n", r.n},
                              {"order", r.order},
                              {"nssd_subsets", r.nssd_subsets},
                              {"nssd_iso_classes", r.iso_classes}};
        nlohmann::json reps = nlohmann::json::array();
        for (const auto& rep : report.representatives)
            if (rep.n == r.n && rep.order == r.order) reps.push_back(rep.form.bytes);
        row["representatives"] = std::move(reps);
        rows.push_back(std::move(row));
    }
    os << nlohmann::json{{"rows", std::move(rows)}}.dump(2) << '\n';
}

void write_report(const EnumerationReport& report, std::string_view format,
                  const std::string& destination) {
    std::ostringstream buf;
    if (format == "csv")
        write_report_csv(report, buf);
    else if (format == "json")
        write_report_json(report, buf);
    else
        throw std::invalid_argument("write_report: format must be csv or json");
    if (destination == "-") {
        std::cout << buf.str();
        return;
    }
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + destination);
    out << buf.str();
    if (!out) throw std::runtime_error("write failed: " + destination);
}

const std::vector<EnumerationRow>& published_table() {
    static const std::vector<EnumerationRow> table = {
        {2, 2, 6, 1},
        {3, 2, 11, 1},  {3, 4, 2, 1},
        {4, 2, 22, 1},  {4, 4, 5, 2},
        {5, 2, 29, 1},  {5, 4, 54, 2},
        {6, 2, 46, 1},  {6, 4, 84, 2},
        {7, 2, 41, 1},  {7, 4, 262, 2}, {7, 6, 374, 7}, {7, 8, 130, 15}, {7, 10, 4, 1},
        {8, 2, 62, 1},  {8, 4, 409, 2}, {8, 6, 416, 7}, {8, 8, 80, 11},  {8, 10, 4, 1},
    };
    return table;
}

std::vector<TableMismatch> compare_with_published(const EnumerationReport& report) {
    std::vector<TableMismatch> out;
    for (const auto& r : report.rows) {
        EnumerationRow pub{r.n, r.order, 0, 0};
        for (const auto& p : published_table())
            if (p.n == r.n && p.order == r.order) pub = p;
        if (pub.nssd_subsets != r.nssd_subsets || pub.iso_classes != r.iso_classes)
            out.push_back({r, pub});
    }
    return out;
}

}  // namespace nssd

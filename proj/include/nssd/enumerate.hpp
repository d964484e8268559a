#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nssd/canonical.hpp"
#include "nssd/graph.hpp"

namespace nssd {

struct EnumerationRow {
    int n = 0;
    int order = 0;
    std::uint64_t nssd_subsets = 0;
    std::uint64_t iso_classes = 0;

    friend bool operator==(const EnumerationRow&, const EnumerationRow&) = default;
};

struct ClassRepresentative {
    int n = 0;
    int order = 0;
    int class_index = 0;
    std::vector<GroupElement> subset;
    Graph graph;
    CanonicalForm form;
};

/// RowWitnesses keeps every NSSD subset of one row as an element-index
/// bitmask, in enumeration (colex) order, so count mismatches against
/// published values can always be backed by concrete subsets.
struct RowWitnesses {
    int n = 0;
    int order = 0;
    std::vector<std::uint64_t> subsets;
};

struct EnumerationReport {
    std::vector<EnumerationRow> rows;
    std::vector<ClassRepresentative> representatives;
    std::vector<RowWitnesses> witnesses;

    void merge(EnumerationReport other);  // append, preserving (n, order) sort
};

struct EnumerateOptions {
    int min_order = 2;
    int max_order = 10;
    bool connected_only = false;
    bool prune_isolated = true;  // skip subsets whose graph has an isolated vertex
    int workers = 0;             // parallel runner only; <= 0 means all threads
};

/// Exhaustive scan of all subsets of D_2n with sizes in [min_order,
/// max_order], OpenMP-parallel over blocks of the subset sequence. Results are
/// identical for every worker count, including one. Rows with zero counts are
/// still emitted. Requires n <= 32 and max_order <= 16.
EnumerationReport enumerate_nssd(int n, const EnumerateOptions& opt = {});

/// Single-threaded reference enumeration: one plain loop in colex order, no
/// blocking. Kept for testing the parallel kernel (and, with prune_isolated
/// off, for validating the pruning) against.
EnumerationReport enumerate_nssd_serial(int n, const EnumerateOptions& opt = {});

/// One representative per isomorphism class, first-seen order. Guarded by
/// canonical_form's order <= 20 limit.
std::vector<Graph> dedup_iso(std::span<const Graph> graphs);

/// CSV columns: n,order,nssd_subsets,nssd_iso_classes. Rows are emitted in
/// the report's order (n ascending, order ascending).
void write_report_csv(const EnumerationReport& report, std::ostream& os);

/// Same fields as the CSV plus graph6 strings of the class representatives.
void write_report_json(const EnumerationReport& report, std::ostream& os);

/// format is "csv" or "json"; destination "-" writes to stdout. I/O failures
/// surface as std::runtime_error carrying the path.
void write_report(const EnumerationReport& report, std::string_view format,
                  const std::string& destination);

/// The published reference counts the `--expect-paper` flag checks against.
const std::vector<EnumerationRow>& published_table();

struct TableMismatch {
    EnumerationRow computed;  // order == published order, counts as computed
    EnumerationRow published; // published counts; zeros for unlisted rows
};

/// Rows of `report` that disagree with the published table. Published rows
/// absent from the report's range are ignored; computed non-zero rows missing
/// from the published table count as mismatches against (0, 0).
std::vector<TableMismatch> compare_with_published(const EnumerationReport& report);

}  // namespace nssd

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nssd/graph.hpp"
#include "nssd/nssd_check.hpp"

namespace nssd {

/// One cataloged vertex set. ids run 1..43; n is 16 for 1-18, 20 for 19-42,
/// 24 for 43; the element count matches the published figure heading.
struct GammaSet {
    int id = 0;
    int n = 0;
    std::vector<GroupElement> elements;
};

/// Parses catalog text: one record per line, `id; n; e1, e2, ...`, `#`
/// comments and blank lines allowed. Validates each record: distinct
/// elements, valid for its n, positive unique id.
std::vector<GammaSet> parse_catalog(std::string_view text);

/// The 43 shipped sets (embedded copy of data/gamma_sets.txt).
const std::vector<GammaSet>& builtin_catalog();

GammaSet gamma(int id);  // throws std::out_of_range outside 1..43

struct GammaVerification {
    int id = 0;
    int n = 0;
    int order = 0;
    bool molecular = false;
    NssdCertificate certificate;
    Graph graph;
};

GammaVerification verify_gamma(const GammaSet& set);
GammaVerification verify_gamma(int id);

/// Verification of every cataloged set, ordered by id.
std::vector<GammaVerification> verify_all();

/// Catalog entries whose commuting graph failed the NSSD check, with the
/// failing condition spelled out. An empty result means the whole catalog
/// verified.
struct CatalogDiscrepancy {
    int id = 0;
    std::string reason;
};
std::vector<CatalogDiscrepancy> catalog_discrepancies(const std::vector<GammaVerification>& all);

}  // namespace nssd

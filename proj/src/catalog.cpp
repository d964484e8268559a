#include "nssd/catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nssd {

namespace {

#include "gamma_data.inc"

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

std::vector<GammaSet> parse_catalog(std::string_view text) {
    std::vector<GammaSet> out;
    std::set<int> ids;
    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = strip(text.substr(pos, eol == std::string_view::npos
                                                           ? std::string_view::npos
                                                           : eol - pos));
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        if (line.empty() || line.front() == '#') continue;

        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
        std::size_t s1 = line.find(';');
        std::size_t s2 = s1 == std::string_view::npos ? s1 : line.find(';', s1 + 1);
        if (s2 == std::string_view::npos)
            throw std::invalid_argument("catalog record needs `id; n; elements`" + where());
        GammaSet rec;
        try {
            rec.id = std::stoi(std::string(strip(line.substr(0, s1))));
            rec.n = std::stoi(std::string(strip(line.substr(s1 + 1, s2 - s1 - 1))));
        } catch (const std::exception&) {
            throw std::invalid_argument("catalog record has a malformed id or n" + where());
        }
        if (rec.id <= 0) throw std::invalid_argument("catalog id must be positive" + where());
        if (!ids.insert(rec.id).second)
            throw std::invalid_argument("duplicate catalog id " + std::to_string(rec.id) + where());
        GroupCtx group(rec.n);
        rec.elements = parse_subset(line.substr(s2 + 1), group);
        out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.id < b.id; });
    return out;
}

const std::vector<GammaSet>& builtin_catalog() {
    static const std::vector<GammaSet> catalog = parse_catalog(kGammaData);
    return catalog;
}

GammaSet gamma(int id) {
    const auto& all = builtin_catalog();
    if (id < 1 || id > static_cast<int>(all.size()))
        throw std::out_of_range("gamma: id must be in 1.." + std::to_string(all.size()));
    return all[id - 1];
}

GammaVerification verify_gamma(const GammaSet& set) {
    GammaVerification v;
    v.id = set.id;
    v.n = set.n;
    v.order = static_cast<int>(set.elements.size());
    HvGroupCtx ctx(set.n);
    v.graph = commuting_graph(ctx, set.elements);
    v.certificate = is_nssd(v.graph);
    v.molecular = is_molecular(v.graph);
    return v;
}

GammaVerification verify_gamma(int id) { return verify_gamma(gamma(id)); }

std::vector<GammaVerification> verify_all() {
    std::vector<GammaVerification> out;
    for (const GammaSet& set : builtin_catalog()) out.push_back(verify_gamma(set));
    return out;
}

std::vector<CatalogDiscrepancy> catalog_discrepancies(const std::vector<GammaVerification>& all) {
    std::vector<CatalogDiscrepancy> out;
    for (const auto& v : all) {
        if (v.certificate.verdict) continue;
        std::string reason;
        if (v.certificate.failure == NssdFailure::Singular) {
            reason = "adjacency matrix is singular (det = 0)";
            for (int i = 0; i < v.graph.order(); ++i)
                if (degree(v.graph, i) == 0)
                    reason += "; " + format_element(v.graph.labels()[i]) + " is isolated";
        } else {
            int i = v.certificate.failure_vertex;
            reason = "deleting " + format_element(v.graph.labels()[i]) +
                     " leaves a non-singular subgraph (minor = " +
                     v.certificate.minor_diag[i].str() + ")";
        }
        out.push_back({v.id, std::move(reason)});
    }
    return out;
}

}  // namespace nssd

#include "dalescope/serialize.hpp"

#include <fstream>

namespace dalescope {

nlohmann::json to_json(const RunStats& stats) {
    return {{"passes", stats.passes},
            {"cell_updates", stats.cell_updates},
            {"undershoots", stats.undershoots},
            {"converged", stats.converged}};
}

nlohmann::json to_json(const FeatureDescriptor& desc) {
    nlohmann::json dales;
    for (auto [dir, count] : desc.dale_counts)
        dales[to_string(dir)] = count;
    nlohmann::json relations = nlohmann::json::array();
    for (const auto& rel : desc.relations)
        relations.push_back({rel.subject, rel.relation, rel.object});
    return {{"component_id", desc.component_id},
            {"lakes", desc.lake_count},
            {"dales", dales},
            {"relations", relations}};
}

nlohmann::json to_json(const ComponentMap& m) {
    return {{"count", m.count},
            {"connectivity", to_string(m.connectivity)},
            {"background", m.background}};
}

void write_label_raster(const std::filesystem::path& path, const ComponentMap& m) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write " + path.string());
    out << "P2\n" << m.width << ' ' << m.height << '\n'
        << std::max(1, m.count) << '\n';
    for (int r = 0; r < m.height; ++r)
        for (int c = 0; c < m.width; ++c)
            out << m.label(r, c) << (c + 1 == m.width ? '\n' : ' ');
    if (!out)
        throw IoError("write failed for " + path.string());
}

} // namespace dalescope

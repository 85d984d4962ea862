#include "symres/resolution.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symres/errors.hpp"

namespace symres {

namespace {

using ordered_json = nlohmann::ordered_json;

void verify_complex(const std::vector<PolyMatrix>& maps)
{
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
        PolyMatrix prod = maps[i] * maps[i + 1];
        for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t c = 0; c < prod.cols(); ++c)
                if (!prod.at(r, c).is_zero())
                    throw ValidationError("not a complex: maps[" + std::to_string(i + 1) + "]*maps[" +
                                     std::to_string(i + 2) + "] has nonzero entry at (row " +
                                     std::to_string(r) + ", col " + std::to_string(c) +
                                     "): " + prod.at(r, c).str());
    }
}

bool all_entries_in_max_ideal(const std::vector<PolyMatrix>& maps, std::string* witness)
{
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t r = 0; r < maps[i].rows(); ++r)
            for (std::size_t c = 0; c < maps[i].cols(); ++c)
                if (!maps[i].at(r, c).constant_term().is_zero()) {
                    if (witness)
                        *witness = "maps[" + std::to_string(i + 1) + "] entry (row " +
                                   std::to_string(r) + ", col " + std::to_string(c) +
                                   ") = " + maps[i].at(r, c).str() + " has constant term " +
                                   maps[i].at(r, c).constant_term().str();
                    return false;
                }
    return true;
}

} // namespace

FreeResolution FreeResolution::create(RingPtr ring, std::vector<PolyMatrix> maps,
                                      bool minimal_claimed, bool check_complex)
{
    if (maps.empty())
        throw InputError("a resolution needs at least one map");
    for (std::size_t i = 0; i < maps.size(); ++i)
        if (maps[i].rows() == 0 || maps[i].cols() == 0)
            throw InputError("maps[" + std::to_string(i + 1) + "] must have positive dimensions");
    for (std::size_t i = 0; i + 1 < maps.size(); ++i)
        if (maps[i].cols() != maps[i + 1].rows())
            throw ValidationError("shape mismatch: maps[" + std::to_string(i + 1) + "] has " +
                             std::to_string(maps[i].cols()) + " columns but maps[" +
                             std::to_string(i + 2) + "] has " + std::to_string(maps[i + 1].rows()) +
                             " rows");
    if (check_complex)
        verify_complex(maps);

    FreeResolution res;
    res.ring = std::move(ring);
    res.betti.push_back(static_cast<long>(maps[0].rows()));
    for (const auto& m : maps)
        res.betti.push_back(static_cast<long>(m.cols()));
    res.maps = std::move(maps);
    res.minimal_claimed = minimal_claimed;

    std::string witness;
    res.minimal_verified = all_entries_in_max_ideal(res.maps, &witness);
    if (minimal_claimed && !res.minimal_verified)
        throw ValidationError("claimed minimal but " + witness);
    return res;
}

DefectRanks defect_ranks(const FreeResolution& res)
{
    const int p = res.pd();
    DefectRanks dr;
    dr.r.assign(static_cast<std::size_t>(p), 0);
    long acc = 0;
    for (int i = p; i >= 1; --i) {
        acc = res.betti[static_cast<std::size_t>(i)] - acc;
        dr.r[static_cast<std::size_t>(i) - 1] = acc;
    }
    dr.r0 = res.betti[0] - acc;
    return dr;
}

FreeResolution load_resolution(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open resolution file '" + path + "'");
    return load_resolution_stream(in, path);
}

FreeResolution load_resolution_stream(std::istream& in, const std::string& origin)
{
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw InputError("cannot parse '" + origin + "' as JSON: " + e.what());
    }

    try {
        const auto& jring = doc.at("ring");
        std::vector<std::string> vars = jring.at("variables").get<std::vector<std::string>>();
        std::uint32_t ch = jring.at("characteristic").get<std::uint32_t>();
        RingPtr ring = RingConfig::create(std::move(vars), ch);

        bool minimal = doc.value("minimal", false);

        std::vector<PolyMatrix> maps;
        for (const auto& jmap : doc.at("maps")) {
            std::size_t rows = jmap.at("rows").get<std::size_t>();
            std::size_t cols = jmap.at("cols").get<std::size_t>();
            const auto& entries = jmap.at("entries");
            if (entries.size() != rows)
                throw InputError("map entry grid has " + std::to_string(entries.size()) +
                                 " rows, declared " + std::to_string(rows));
            PolyMatrix m(ring, rows, cols);
            for (std::size_t r = 0; r < rows; ++r) {
                const auto& row = entries.at(r);
                if (row.size() != cols)
                    throw InputError("map row " + std::to_string(r) + " has " +
                                     std::to_string(row.size()) + " entries, declared " +
                                     std::to_string(cols));
                for (std::size_t c = 0; c < cols; ++c)
                    m.at(r, c) = parse_polynomial(row.at(c).get<std::string>(), ring);
            }
            maps.push_back(std::move(m));
        }

        FreeResolution res = FreeResolution::create(ring, std::move(maps), minimal);
        res.description = doc.value("description", "");
        if (doc.contains("reference_tables")) {
            for (const auto& jt : doc.at("reference_tables")) {
                ReferenceTable t;
                t.label = jt.at("label").get<std::string>();
                t.j = jt.at("j").get<int>();
                t.values = jt.at("values").get<std::vector<long>>();
                res.reference_tables.push_back(std::move(t));
            }
        }
        return res;
    } catch (const ordered_json::exception& e) {
        throw InputError("malformed resolution file '" + origin + "': " + e.what());
    }
}

std::string save_resolution(const FreeResolution& res)
{
    ordered_json doc;
    if (!res.description.empty())
        doc["description"] = res.description;
    doc["ring"] = {{"variables", res.ring->variables()},
                   {"characteristic", res.ring->characteristic()}};
    doc["minimal"] = res.minimal_claimed;
    doc["maps"] = ordered_json::array();
    for (const auto& m : res.maps) {
        ordered_json jmap;
        jmap["rows"] = m.rows();
        jmap["cols"] = m.cols();
        ordered_json grid = ordered_json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < m.cols(); ++c)
                row.push_back(m.at(r, c).str());
            grid.push_back(std::move(row));
        }
        jmap["entries"] = std::move(grid);
        doc["maps"].push_back(std::move(jmap));
    }
    if (!res.reference_tables.empty()) {
        doc["reference_tables"] = ordered_json::array();
        for (const auto& t : res.reference_tables)
            doc["reference_tables"].push_back(
                {{"label", t.label}, {"j", t.j}, {"values", t.values}});
    }
    return doc.dump(2) + "\n";
}

} // namespace symres

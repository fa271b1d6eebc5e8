#include "ptpc/report.hpp"

#include <json.hpp>

#include "ptpc/transform_io.hpp"

namespace ptpc {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kSafeInteger = std::uint64_t{1} << 53;

Json wide(std::uint64_t v) {
    if (v > kSafeInteger) return std::to_string(v);
    return v;
}

Json wide(const BigCount& v) {
    if (v >= 0 && v <= kSafeInteger) return v.convert_to<std::uint64_t>();
    return v.str();
}

std::uint64_t read_u64(const Json& j) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_string()) return std::stoull(j.get<std::string>());
    throw FormatError("report: expected an unsigned integer");
}

BigCount read_big(const Json& j) {
    if (j.is_number_unsigned()) return BigCount(j.get<std::uint64_t>());
    if (j.is_string()) return BigCount(j.get<std::string>());
    throw FormatError("report: expected an integer");
}

}  // namespace

std::string to_json(const RunReport& r, int indent) {
    Json j;
    j["tool_version"] = r.tool_version;
    j["command"] = r.command;
    j["code"] = {{"n", r.n}, {"K", r.dimension}, {"R", r.rate}, {"profile", r.profile_origin}};
    j["transform"] = {{"kind", r.transform_kind}, {"value", r.transform_value}};
    j["wmin"] = wide(r.wmin);
    j["awmin"] = r.awmin ? Json(r.awmin->str()) : Json(nullptr);
    j["dmin_exceeds_wmin"] = r.dmin_exceeds_wmin;
    Json cosets = Json::array();
    for (const auto& [leader, count] : r.per_coset) cosets.push_back({{"leader", leader}, {"count", wide(count)}});
    j["per_coset"] = std::move(cosets);
    if (r.stats)
        j["stats"] = {{"visited_subtrees", wide(r.stats->visited_subtrees)},
                      {"message_updates", wide(r.stats->message_updates)},
                      {"pretransform_checks", wide(r.stats->pretransform_checks)}};
    else
        j["stats"] = nullptr;
    j["wall_seconds"] = r.wall_seconds;
    Json results = Json::array();
    for (const auto& [key, value] : r.results) results.push_back({{"name", key}, {"value", value}});
    j["results"] = std::move(results);
    return j.dump(indent);
}

RunReport run_report_from_json(std::string_view text) {
    try {
        const auto j = Json::parse(text);
        RunReport r;
        r.tool_version = j.at("tool_version").get<std::string>();
        r.command = j.at("command").get<std::vector<std::string>>();
        const auto& code = j.at("code");
        r.n = code.at("n").get<int>();
        r.dimension = code.at("K").get<std::uint64_t>();
        r.rate = code.at("R").get<double>();
        r.profile_origin = code.at("profile").get<std::string>();
        r.transform_kind = j.at("transform").at("kind").get<std::string>();
        r.transform_value = j.at("transform").at("value").get<std::string>();
        r.wmin = read_u64(j.at("wmin"));
        if (!j.at("awmin").is_null()) r.awmin = read_big(j.at("awmin"));
        r.dmin_exceeds_wmin = j.at("dmin_exceeds_wmin").get<bool>();
        for (const auto& c : j.at("per_coset"))
            r.per_coset.emplace_back(c.at("leader").get<std::uint32_t>(), read_big(c.at("count")));
        if (const auto& s = j.at("stats"); !s.is_null())
            r.stats = EnumerationStats{read_u64(s.at("visited_subtrees")), read_u64(s.at("message_updates")),
                                       read_u64(s.at("pretransform_checks"))};
        r.wall_seconds = j.at("wall_seconds").get<double>();
        for (const auto& e : j.at("results"))
            r.results.emplace_back(e.at("name").get<std::string>(), e.at("value").get<std::string>());
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("report: ") + e.what());
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw FormatError(std::string("report: ") + e.what());
    }
}

}  // namespace ptpc

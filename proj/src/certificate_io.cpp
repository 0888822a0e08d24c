#include "turancert/certificate_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json_detail.hpp"

namespace turancert {
namespace detail {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "turancert-certificate";
constexpr int kVersion = 1;

json edge_to_json(const Edge& e) { return json::array({e.u, e.v}); }

Edge edge_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("edge entries must be [u, v] pairs");
    return Edge(j[0].get<int>(), j[1].get<int>());
}

bool close(double x, double y) {
    double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
    return std::fabs(x - y) <= 1e-9 * scale;
}

void require_close(double stored, double derived, const char* field) {
    if (!close(stored, derived))
        throw std::invalid_argument(std::string("derived field '") + field +
                                    "' disagrees with recomputation");
}

template <typename T>
void require_equal(T stored, T derived, const char* field) {
    if (stored != derived)
        throw std::invalid_argument(std::string("derived field '") + field +
                                    "' disagrees with recomputation");
}

}  // namespace

json params_to_json(const Params& p) {
    json j;
    j["inputs"] = {{"r", p.r}, {"c", p.c}, {"eps", p.eps}, {"n", p.n}};
    j["overrides"] = {
        {"joint_threshold",
         p.joint_threshold_overridden ? json(p.joint_threshold) : json(nullptr)},
        {"edit_budget", p.edit_budget_overridden ? json(p.edit_budget) : json(nullptr)}};
    j["derived"] = {{"theta", p.theta},
                    {"b", p.b},
                    {"a", p.a},
                    {"s", p.s},
                    {"t", p.t},
                    {"joint_threshold", p.joint_threshold},
                    {"joint_threshold_default", p.joint_threshold_default},
                    {"edit_budget", p.edit_budget},
                    {"edit_budget_default", p.edit_budget_default},
                    {"part_size_u", p.part_size_u},
                    {"edit_bound", p.edit_bound},
                    {"sharp_edit_bound", p.sharp_edit_bound},
                    {"mindeg_goal", p.mindeg_goal},
                    {"size_goal", p.size_goal},
                    {"asymptotic_regime", p.asymptotic_regime}};
    return j;
}

Params params_from_json(const json& j) {
    const json& in = j.at("inputs");
    const json& ov = j.at("overrides");
    ThresholdOverrides overrides;
    if (!ov.at("joint_threshold").is_null())
        overrides.joint_threshold = ov.at("joint_threshold").get<double>();
    if (!ov.at("edit_budget").is_null())
        overrides.edit_budget = ov.at("edit_budget").get<std::uint64_t>();

    Params p = derived_params(in.at("r").get<int>(), in.at("c").get<double>(),
                              in.at("eps").get<double>(), in.at("n").get<int>(), overrides);

    const json& d = j.at("derived");
    require_close(d.at("theta").get<double>(), p.theta, "theta");
    require_close(d.at("b").get<double>(), p.b, "b");
    require_close(d.at("a").get<double>(), p.a, "a");
    require_equal(d.at("s").get<std::uint64_t>(), p.s, "s");
    require_equal(d.at("t").get<std::uint64_t>(), p.t, "t");
    require_close(d.at("joint_threshold").get<double>(), p.joint_threshold, "joint_threshold");
    require_close(d.at("joint_threshold_default").get<double>(), p.joint_threshold_default,
                  "joint_threshold_default");
    require_equal(d.at("edit_budget").get<std::uint64_t>(), p.edit_budget, "edit_budget");
    require_equal(d.at("edit_budget_default").get<std::uint64_t>(), p.edit_budget_default,
                  "edit_budget_default");
    require_equal(d.at("part_size_u").get<long long>(), p.part_size_u, "part_size_u");
    require_close(d.at("edit_bound").get<double>(), p.edit_bound, "edit_bound");
    require_close(d.at("sharp_edit_bound").get<double>(), p.sharp_edit_bound,
                  "sharp_edit_bound");
    require_close(d.at("mindeg_goal").get<double>(), p.mindeg_goal, "mindeg_goal");
    require_close(d.at("size_goal").get<double>(), p.size_goal, "size_goal");
    require_equal(d.at("asymptotic_regime").get<bool>(), p.asymptotic_regime, "asymptotic_regime");
    return p;
}

json certificate_to_json(const Certificate& cert, const Params& params, bool verified) {
    json j = params_to_json(params);
    j["format"] = kFormat;
    j["version"] = kVersion;

    json log = json::array();
    for (const auto& rec : cert.removal_log)
        log.push_back(json::array({rec.e.u, rec.e.v, rec.support}));
    j["removal_log"] = std::move(log);

    if (cert.is_condition_a()) {
        const ConditionA& a = cert.a();
        j["condition"] = "a";
        json parts = json::array();
        for (const auto& part : a.witness.parts) parts.push_back(part);
        j["witness"] = {{"s", a.s},
                        {"t", a.t_achieved},
                        {"regime", a.regime == SearchRegime::exact ? "exact" : "greedy"},
                        {"parts", std::move(parts)}};
    } else {
        const ConditionB& b = cert.b();
        j["condition"] = "b";
        json additions = json::array();
        for (const auto& e : b.edits.additions) additions.push_back(edge_to_json(e));
        json removals = json::array();
        for (const auto& e : b.edits.removals) removals.push_back(edge_to_json(e));
        j["edits"] = {{"additions", std::move(additions)},
                      {"removals", std::move(removals)},
                      {"part_assignment", b.edits.part_assignment},
                      {"edit_count", b.edit_count},
                      {"bound", b.bound},
                      {"sharp_bound", b.sharp_bound},
                      {"within_bound", b.within_bound}};
    }
    j["verified"] = verified;
    return j;
}

LoadedCertificate certificate_from_json(const json& j) {
    if (j.at("format").get<std::string>() != kFormat)
        throw std::invalid_argument("not a certificate document");
    if (j.at("version").get<int>() != kVersion)
        throw std::invalid_argument("unsupported certificate document version");

    LoadedCertificate out;
    out.params = params_from_json(j);
    out.verified = j.at("verified").get<bool>();

    for (const auto& entry : j.at("removal_log")) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::invalid_argument("removal log entries must be [u, v, support]");
        out.cert.removal_log.push_back(
            {Edge(entry[0].get<int>(), entry[1].get<int>()), entry[2].get<std::uint64_t>()});
    }

    std::string tag = j.at("condition").get<std::string>();
    if (tag == "a") {
        const json& w = j.at("witness");
        ConditionA a;
        a.s = w.at("s").get<std::uint64_t>();
        a.t_achieved = w.at("t").get<std::uint64_t>();
        std::string regime = w.at("regime").get<std::string>();
        if (regime == "exact")
            a.regime = SearchRegime::exact;
        else if (regime == "greedy")
            a.regime = SearchRegime::greedy;
        else
            throw std::invalid_argument("unknown witness regime '" + regime + "'");
        a.witness.parts = w.at("parts").get<std::vector<std::vector<int>>>();
        out.cert.outcome = std::move(a);
    } else if (tag == "b") {
        const json& e = j.at("edits");
        ConditionB b;
        for (const auto& item : e.at("additions")) b.edits.additions.push_back(edge_from_json(item));
        for (const auto& item : e.at("removals")) b.edits.removals.push_back(edge_from_json(item));
        b.edits.part_assignment = e.at("part_assignment").get<std::vector<int>>();
        b.edit_count = e.at("edit_count").get<std::uint64_t>();
        b.bound = e.at("bound").get<double>();
        b.sharp_bound = e.at("sharp_bound").get<double>();
        b.within_bound = e.at("within_bound").get<bool>();
        out.cert.outcome = std::move(b);
    } else {
        throw std::invalid_argument("unknown condition tag '" + tag + "'");
    }
    return out;
}

}  // namespace detail

std::string certificate_to_text(const Certificate& cert, const Params& params, bool verified) {
    return detail::certificate_to_json(cert, params, verified).dump(2) + "\n";
}

LoadedCertificate certificate_from_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate document: ") + e.what());
    }
    try {
        return detail::certificate_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate document: ") + e.what());
    }
}

void save_certificate(const std::string& path, const Certificate& cert, const Params& params,
                      bool verified) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << certificate_to_text(cert, params, verified);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

LoadedCertificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return certificate_from_text(buf.str());
}

}  // namespace turancert

#include "dqs/report_json.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace dqs {

std::string double_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string render_report_json(const std::vector<CheckReport>& checks, const ConfigEcho& config) {
    nlohmann::json root;
    root["version"] = kArtifactVersion;
    nlohmann::json cfg = nlohmann::json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    root["config"] = cfg;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json j;
        j["check_id"] = c.check_id;
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [k, v] : c.params) params[k] = v;
        j["params"] = params;
        j["status"] = c.pass ? "pass" : "fail";
        if (c.residual) j["residual"] = double_str(*c.residual);
        if (c.budget) j["budget"] = double_str(*c.budget);
        if (c.window) j["window"] = nlohmann::json::array({c.window->first, c.window->second});
        if (!c.detail.empty()) j["detail"] = c.detail;
        j["elapsed_ms"] = double_str(c.elapsed_ms);
        arr.push_back(j);
    }
    root["checks"] = arr;
    return root.dump(2) + "\n";
}

std::string render_report_csv(const std::vector<CheckReport>& checks) {
    std::ostringstream os;
    os << "check_id,status,residual,budget,window_lo,window_hi,elapsed_ms\n";
    for (const auto& c : checks) {
        os << c.check_id << ',' << (c.pass ? "pass" : "fail") << ',';
        if (c.residual) os << double_str(*c.residual);
        os << ',';
        if (c.budget) os << double_str(*c.budget);
        os << ',';
        if (c.window) os << c.window->first;
        os << ',';
        if (c.window) os << c.window->second;
        os << ',' << double_str(c.elapsed_ms) << '\n';
    }
    return os.str();
}

std::string render_report_table(const std::vector<CheckReport>& checks) {
    size_t idw = 8;
    for (const auto& c : checks) idw = std::max(idw, c.check_id.size());
    std::ostringstream os;
    os << std::string(idw - 5, ' ');
    char head[128];
    std::snprintf(head, sizeof(head), "check  %6s  %-12s  %-12s  %-14s  %8s\n", "status",
                  "residual", "budget", "window", "ms");
    os << head;
    for (const auto& c : checks) {
        os << c.check_id << std::string(idw - c.check_id.size() + 2, ' ');
        char line[256];
        std::string res = c.residual ? double_str(*c.residual) : "-";
        std::string bud = c.budget ? double_str(*c.budget) : "-";
        std::string win = "-";
        if (c.window)
            win = "[" + std::to_string(c.window->first) + "," + std::to_string(c.window->second) + "]";
        std::snprintf(line, sizeof(line), "%6s  %-12.12s  %-12.12s  %-14.14s  %8.2f\n",
                      c.pass ? "pass" : "FAIL", res.c_str(), bud.c_str(), win.c_str(), c.elapsed_ms);
        os << line;
        if (!c.pass && !c.detail.empty()) os << "    -> " << c.detail << "\n";
    }
    return os.str();
}

}  // namespace dqs

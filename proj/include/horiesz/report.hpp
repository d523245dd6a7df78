#pragma once
// Machine-readable records of verification runs, JSON and CSV formatting.

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "horiesz/core.hpp"
#include "horiesz/riesz.hpp"

namespace horiesz {

using ordered_json = nlohmann::ordered_json;

/// One named check: `value` is a residual (or a bound ratio) compared to `tolerance`.
struct Report {
    std::string name;
    std::string paper_anchor;
    double k = 0.0;
    int window = 0;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// pass iff value <= tolerance; NaN never passes.
inline Report make_report(std::string name, std::string anchor, double k, int window, double value, double tol) {
    return {std::move(name), std::move(anchor), k, window, value, tol, value <= tol};
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// "re+imi" with both parts at round-trip precision.
inline std::string format_complex(cplx z) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

/// RFC-4180 field: quoted when it holds a comma, quote, CR or LF.
inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    out += "\r\n";
    return out;
}

/// Non-finite numbers become null in JSON; keep them visible as strings.
inline ordered_json json_number(double v) {
    if (std::isfinite(v)) return v;
    return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

inline ordered_json to_json(const Report& r) {
    ordered_json j;
    j["name"] = r.name;
    j["paper_anchor"] = r.paper_anchor;
    j["k"] = json_number(r.k);
    j["window"] = r.window;
    j["value"] = json_number(r.value);
    j["tolerance"] = json_number(r.tolerance);
    j["pass"] = r.pass;
    return j;
}

/// Relative growth allowed between the last two trend points.
inline constexpr double kTrendTolerance = 0.05;

inline std::string estimate_anchor(const std::string& quantity) {
    if (quantity.rfind("size", 0) == 0) return "kernel size bound";
    if (quantity.rfind("smoothness", 0) == 0) return "kernel smoothness bound";
    if (quantity.rfind("hormander", 0) == 0) return "Hormander integral condition";
    if (quantity.rfind("lp_", 0) == 0) return "l^p boundedness of R";
    return "";
}

/// Same schema as Report, plus the trend and the inconclusive flag.
inline ordered_json to_json(const EstimateReport& r) {
    ordered_json j;
    j["name"] = r.quantity;
    j["paper_anchor"] = estimate_anchor(r.quantity);
    j["k"] = json_number(r.k);
    j["window"] = r.window;
    j["value"] = json_number(r.sup_value);
    j["tolerance"] = kTrendTolerance;
    j["pass"] = r.pass;
    j["inconclusive"] = r.inconclusive;
    ordered_json t = ordered_json::array();
    for (const auto& [w, v] : r.trend) t.push_back(ordered_json::array({w, json_number(v)}));
    j["trend"] = std::move(t);
    return j;
}

template <typename T>
ordered_json to_json_array(const std::vector<T>& items) {
    ordered_json a = ordered_json::array();
    for (const auto& x : items) a.push_back(to_json(x));
    return a;
}

/// Plot-ready rows: name,k,window,value.
inline std::string trend_csv(const std::vector<EstimateReport>& reports) {
    std::string out = csv_row({"name", "k", "window", "value"});
    for (const auto& r : reports)
        for (const auto& [w, v] : r.trend) out += csv_row({r.quantity, format_double(r.k), std::to_string(w), format_double(v)});
    return out;
}

inline std::string reports_csv(const std::vector<Report>& reports) {
    std::string out = csv_row({"name", "paper_anchor", "k", "window", "value", "tolerance", "pass"});
    for (const auto& r : reports)
        out += csv_row({r.name, r.paper_anchor, format_double(r.k), std::to_string(r.window), format_double(r.value),
                        format_double(r.tolerance), r.pass ? "true" : "false"});
    return out;
}

/// Kernel matrix as CSV: a meta row, a column header row, then one row per n.
inline std::string kernel_csv(const KernelMatrix& km) {
    std::vector<std::string> head{"n\\m"};
    for (int m = -km.radius; m <= km.radius; ++m) head.push_back(std::to_string(m));
    std::string out = csv_row({"kind", km.kind, "k", format_double(km.k), "t", km.t ? format_double(*km.t) : "",
                               "method", km.method, "radius", std::to_string(km.radius)});
    out += csv_row(head);
    for (int n = -km.radius; n <= km.radius; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (int m = -km.radius; m <= km.radius; ++m) row.push_back(format_complex(km(n, m)));
        out += csv_row(row);
    }
    return out;
}

inline ordered_json to_json(const KernelMatrix& km) {
    ordered_json j;
    j["kind"] = km.kind;
    j["k"] = json_number(km.k);
    j["t"] = km.t ? json_number(*km.t) : ordered_json(nullptr);
    j["method"] = km.method;
    j["radius"] = km.radius;
    ordered_json rows = ordered_json::array();
    for (int n = -km.radius; n <= km.radius; ++n) {
        ordered_json row = ordered_json::array();
        for (int m = -km.radius; m <= km.radius; ++m) row.push_back(format_complex(km(n, m)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

}  // namespace horiesz

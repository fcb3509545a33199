#include "pcent/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <json.hpp>

#include "pcent/format.hpp"

namespace pcent {

std::optional<OutputFormat> parse_output_format(std::string_view text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "tsv") return OutputFormat::tsv;
    if (text == "jsonl" || text == "json-lines") return OutputFormat::jsonl;
    return std::nullopt;
}

namespace {

nlohmann::json number_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

void write_delimited(std::ostream& os, const std::vector<EntropySeries>& series, char sep) {
    os << "method" << sep << "n" << sep << "eps" << sep << "value" << sep << "flag\n";
    for (const EntropySeries& s : series) {
        const std::string m = to_string(s.method);
        for (const SeriesRecord& r : s.records) {
            os << m << sep << r.n << sep << (r.aux ? format_real17(*r.aux) : "") << sep << format_real17(r.value) << sep
               << r.flag << '\n';
        }
        os << "estimate" << sep << sep << sep << format_real17(s.estimate) << sep << to_string(s.estimator) << '\n';
    }
}

void write_jsonl(std::ostream& os, const std::vector<EntropySeries>& series) {
    for (const EntropySeries& s : series) {
        const std::string m = to_string(s.method);
        for (const SeriesRecord& r : s.records) {
            nlohmann::json j = {{"method", m}, {"n", r.n}, {"value", r.value}};
            j["eps"] = r.aux ? nlohmann::json(*r.aux) : nlohmann::json(nullptr);
            j["flag"] = r.flag;
            os << j.dump() << '\n';
        }
        nlohmann::json e = {{"method", "estimate"}, {"of", m}, {"estimator", to_string(s.estimator)}};
        e["value"] = number_or_null(s.estimate);
        e["truncated"] = s.truncated;
        if (!s.note.empty()) e["note"] = s.note;
        os << e.dump() << '\n';
    }
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

void write_series(std::ostream& os, const std::vector<EntropySeries>& series, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv: write_delimited(os, series, ','); break;
        case OutputFormat::tsv: write_delimited(os, series, '\t'); break;
        case OutputFormat::jsonl: write_jsonl(os, series); break;
    }
}

void write_svg(std::ostream& os, const std::vector<EntropySeries>& series, const std::string& title) {
    struct Line {
        std::string label;
        std::vector<std::pair<double, double>> pts;
    };
    std::vector<Line> lines;
    std::map<std::string, std::size_t> index;
    double n_lo = std::numeric_limits<double>::infinity(), n_hi = -n_lo;
    double v_lo = n_lo, v_hi = -n_lo;
    for (const EntropySeries& s : series) {
        for (const SeriesRecord& r : s.records) {
            if (!(r.value > 0)) continue;
            std::string label = to_string(s.method) + (r.aux ? " eps=" + format_real(*r.aux) : "");
            auto [it, fresh] = index.emplace(label, lines.size());
            if (fresh) lines.push_back({label, {}});
            lines[it->second].pts.emplace_back(r.n, r.value);
            n_lo = std::min(n_lo, double(r.n));
            n_hi = std::max(n_hi, double(r.n));
            v_lo = std::min(v_lo, r.value);
            v_hi = std::max(v_hi, r.value);
        }
    }
    const double W = 720, H = 440, L = 70, R = 200, T = 40, B = 50;
    if (lines.empty()) {
        n_lo = 0;
        n_hi = 1;
        v_lo = 1;
        v_hi = 10;
    }
    if (n_hi == n_lo) n_hi = n_lo + 1;
    double d_lo = std::floor(std::log10(v_lo)), d_hi = std::ceil(std::log10(v_hi));
    if (d_hi == d_lo) d_hi = d_lo + 1;
    auto X = [&](double n) { return L + (W - L - R) * (n - n_lo) / (n_hi - n_lo); };
    auto Y = [&](double v) { return H - B - (H - T - B) * (std::log10(v) - d_lo) / (d_hi - d_lo); };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << L << "\" y=\"24\" font-size=\"15\">" << title << "</text>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    for (double d = d_lo; d <= d_hi; d += 1) {
        double y = Y(std::pow(10.0, d));
        os << "<line x1=\"" << L << "\" y1=\"" << fmt(y) << "\" x2=\"" << W - R << "\" y2=\"" << fmt(y)
           << "\" stroke=\"#ddd\"/>\n";
        os << "<text x=\"" << L - 8 << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">1e" << int(d) << "</text>\n";
    }
    const int step = std::max(1, int((n_hi - n_lo) / 10));
    for (int n = int(n_lo); n <= int(n_hi); n += step) {
        os << "<text x=\"" << fmt(X(n)) << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\">" << n << "</text>\n";
    }
    os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">n</text>\n";
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const char* c = colors[i % 8];
        os << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [n, v] : lines[i].pts) os << fmt(X(n)) << "," << fmt(Y(v)) << " ";
        os << "\"/>\n";
        double ly = T + 16.0 * static_cast<double>(i);
        os << "<line x1=\"" << W - R + 12 << "\" y1=\"" << ly << "\" x2=\"" << W - R + 32 << "\" y2=\"" << ly
           << "\" stroke=\"" << c << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << W - R + 38 << "\" y=\"" << ly + 4 << "\">" << lines[i].label << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace pcent

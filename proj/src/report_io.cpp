#include "swarmtopo/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace swarmtopo {

using nlohmann::json;

std::string sci3(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2E", value);
    return buf;
}

namespace {

std::string format_success(double percent)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", percent);
    return buf;
}

void append_row(std::string& out, const ExperimentReport& report,
                const CheckpointStats& stats, bool is_final)
{
    const auto& cfg = report.config;
    out += cfg.problem;
    out += '\t';
    out += std::to_string(cfg.dims);
    out += '\t';
    out += cfg.scheme;
    out += '\t';
    out += cfg.topology;
    out += '\t';
    out += std::to_string(stats.step);
    out += '\t';
    out += sci3(stats.summary.best);
    out += '\t';
    out += sci3(stats.summary.median);
    out += '\t';
    out += sci3(stats.summary.mean);
    out += '\t';
    out += sci3(stats.summary.worst);
    out += '\t';
    out += sci3(stats.summary.mean_pb_me);
    out += '\t';
    out += is_final ? format_success(stats.summary.success_rate) : std::string("-");
    out += '\n';
}

} // namespace

std::string render_table(std::span<const ExperimentReport> reports)
{
    if (reports.empty()) throw std::invalid_argument("render_table: no reports");
    std::string out =
        "PROBLEM\tDIMS\tOPTIMIZER\tNEIGHBOURHOOD\tTIME_STEPS\tBEST\tMEDIAN\tMEAN"
        "\tWORST\tMEAN_PB_ME\tSUCCESS\n";
    for (const auto& report : reports) {
        // final (step T) checkpoint first, then intermediates, as in the
        // reference tables
        std::vector<const CheckpointStats*> ordered;
        for (const auto& stats : report.checkpoints) ordered.push_back(&stats);
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto* a, const auto* b) { return a->step > b->step; });
        for (const auto* stats : ordered)
            append_row(out, report, *stats, stats->step == report.config.T);
    }
    return out;
}

std::vector<TableRow> parse_table(const std::string& text)
{
    std::vector<TableRow> rows;
    std::istringstream stream(text);
    std::string line;
    bool header = true;
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream fields(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(fields, cell, '\t')) cells.push_back(cell);
        if (cells.size() != 11)
            throw std::invalid_argument("malformed table row: " + line);
        TableRow row;
        row.problem = cells[0];
        row.dims = std::stoi(cells[1]);
        row.scheme = cells[2];
        row.topology = cells[3];
        row.step = std::stoi(cells[4]);
        row.best = std::stod(cells[5]);
        row.median = std::stod(cells[6]);
        row.mean = std::stod(cells[7]);
        row.worst = std::stod(cells[8]);
        row.mean_pb_me = std::stod(cells[9]);
        row.success = cells[10] == "-" ? -1.0 : std::stod(cells[10]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_curves(std::span<const ExperimentReport> reports)
{
    if (reports.empty()) throw std::invalid_argument("render_curves: no reports");
    const int stride = reports.front().curve_stride;
    std::string out = "step";
    std::size_t longest = 0;
    for (const auto& report : reports) {
        if (report.curve_stride != stride)
            throw std::invalid_argument("render_curves: mixed curve strides");
        out += '\t';
        out += report.config.id();
        longest = std::max(longest, report.curve.size());
    }
    out += '\n';
    char buf[32];
    for (std::size_t t = 0; t < longest; ++t) {
        out += std::to_string(t * static_cast<std::size_t>(stride));
        for (const auto& report : reports) {
            out += '\t';
            if (t < report.curve.size()) {
                std::snprintf(buf, sizeof(buf), "%.6E", report.curve[t]);
                out += buf;
            }
        }
        out += '\n';
    }
    return out;
}

namespace {

json config_to_json(const ExperimentConfig& cfg)
{
    return json{{"problem", cfg.problem},
                {"dims", cfg.dims},
                {"topology", cfg.topology},
                {"scheme", cfg.scheme},
                {"swarm_size", cfg.m},
                {"steps", cfg.T},
                {"runs", cfg.runs},
                {"seed", cfg.seed},
                {"checkpoints", cfg.checkpoints},
                {"t_ref", cfg.t_ref},
                {"lhs_candidates", cfg.lhs_candidates}};
}

ExperimentConfig config_from_json(const json& j)
{
    ExperimentConfig cfg;
    cfg.problem = j.at("problem").get<std::string>();
    cfg.dims = j.at("dims").get<int>();
    cfg.topology = j.at("topology").get<std::string>();
    cfg.scheme = j.at("scheme").get<std::string>();
    cfg.m = j.at("swarm_size").get<int>();
    cfg.T = j.at("steps").get<int>();
    cfg.runs = j.at("runs").get<int>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.checkpoints = j.at("checkpoints").get<std::vector<int>>();
    cfg.t_ref = j.at("t_ref").get<int>();
    cfg.lhs_candidates = j.at("lhs_candidates").get<int>();
    return cfg;
}

json summary_to_json(const RunSummary& s)
{
    return json{{"best", s.best},       {"median", s.median},
                {"mean", s.mean},       {"worst", s.worst},
                {"mean_pb_me", s.mean_pb_me}, {"success_rate", s.success_rate}};
}

RunSummary summary_from_json(const json& j)
{
    RunSummary s;
    s.best = j.at("best").get<double>();
    s.median = j.at("median").get<double>();
    s.mean = j.at("mean").get<double>();
    s.worst = j.at("worst").get<double>();
    s.mean_pb_me = j.at("mean_pb_me").get<double>();
    s.success_rate = j.at("success_rate").get<double>();
    return s;
}

json report_to_json(const ExperimentReport& report)
{
    json checkpoints = json::array();
    for (const auto& stats : report.checkpoints)
        checkpoints.push_back(json{{"step", stats.step},
                                   {"errors", stats.errors},
                                   {"pb_mes", stats.pb_mes},
                                   {"summary", summary_to_json(stats.summary)}});
    // persisted curve is thinned like the histories; the full-resolution
    // curve only ever flows from memory into the curves file
    std::vector<double> curve_stored;
    int curve_stride = report.curve_stride;
    if (curve_stride == 1) {
        for (std::size_t t = 0; t < report.curve.size();
             t += static_cast<std::size_t>(report.thin_stride))
            curve_stored.push_back(report.curve[t]);
        curve_stride = report.thin_stride;
    } else {
        curve_stored = report.curve;
    }
    return json{{"format", kConfigFormatVersion},
                {"config", config_to_json(report.config)},
                {"checkpoints", checkpoints},
                {"thin_stride", report.thin_stride},
                {"curve", curve_stored},
                {"curve_stride", curve_stride},
                {"histories_thinned", report.thinned_histories}};
}

ExperimentReport report_from_json(const json& j)
{
    ExperimentReport report;
    report.config = config_from_json(j.at("config"));
    for (const auto& cj : j.at("checkpoints")) {
        CheckpointStats stats;
        stats.step = cj.at("step").get<int>();
        stats.errors = cj.at("errors").get<std::vector<double>>();
        stats.pb_mes = cj.at("pb_mes").get<std::vector<double>>();
        stats.summary = summary_from_json(cj.at("summary"));
        report.checkpoints.push_back(std::move(stats));
    }
    report.thin_stride = j.at("thin_stride").get<int>();
    report.curve = j.at("curve").get<std::vector<double>>();
    report.curve_stride = j.at("curve_stride").get<int>();
    report.thinned_histories =
        j.at("histories_thinned").get<std::vector<std::vector<double>>>();
    return report;
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

} // namespace

void report_to_file(const ExperimentReport& report, const std::filesystem::path& path)
{
    write_text(path, report_to_json(report).dump(1, '\t') + "\n");
}

ExperimentReport report_from_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    json j;
    in >> j;
    return report_from_json(j);
}

std::vector<std::filesystem::path> write_output_bundle(
    std::span<const GridOutcome> outcomes, const std::filesystem::path& dir,
    double wall_seconds, int threads)
{
    namespace fs = std::filesystem;
    fs::create_directories(dir / "tables");
    fs::create_directories(dir / "curves");
    fs::create_directories(dir / "reports");

    // group by problem x dims, preserving first-appearance order
    std::vector<std::pair<std::string, std::vector<const ExperimentReport*>>> groups;
    for (const auto& outcome : outcomes) {
        if (!outcome.report) continue;
        const auto& cfg = outcome.config;
        const std::string key = cfg.problem + "-" + std::to_string(cfg.dims) + "d";
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == key; });
        if (it == groups.end()) {
            groups.push_back({key, {}});
            it = std::prev(groups.end());
        }
        it->second.push_back(&*outcome.report);
    }

    std::vector<fs::path> written;
    json manifest_tables = json::array();
    json manifest_curves = json::array();
    for (const auto& [key, members] : groups) {
        std::vector<ExperimentReport> copy;
        copy.reserve(members.size());
        for (const auto* r : members) copy.push_back(*r);
        const fs::path table_path = dir / "tables" / (key + ".tsv");
        const fs::path curve_path = dir / "curves" / (key + ".tsv");
        write_text(table_path, render_table(copy));
        write_text(curve_path, render_curves(copy));
        written.push_back(table_path);
        written.push_back(curve_path);
        manifest_tables.push_back("tables/" + key + ".tsv");
        manifest_curves.push_back("curves/" + key + ".tsv");
    }

    json manifest_reports = json::array();
    json manifest_experiments = json::array();
    json manifest_failures = json::array();
    for (const auto& outcome : outcomes) {
        manifest_experiments.push_back(config_to_json(outcome.config));
        if (outcome.report) {
            const fs::path path = dir / "reports" / (outcome.config.id() + ".json");
            report_to_file(*outcome.report, path);
            written.push_back(path);
            manifest_reports.push_back("reports/" + outcome.config.id() + ".json");
        } else {
            manifest_failures.push_back(
                json{{"id", outcome.config.id()}, {"error", outcome.error}});
        }
    }

    const json manifest{
        {"artifact",
         json{{"name", "swarmtopo"},
              {"version", kArtifactVersion},
              {"config_format", kConfigFormatVersion}}},
        {"experiments", manifest_experiments},
        {"outputs", json{{"tables", manifest_tables},
                         {"curves", manifest_curves},
                         {"reports", manifest_reports}}},
        {"failures", manifest_failures},
        {"timings", json{{"wall_seconds", wall_seconds}, {"threads", threads}}}};
    const fs::path manifest_path = dir / "manifest.json";
    write_text(manifest_path, manifest.dump(1, '\t') + "\n");
    written.push_back(manifest_path);
    return written;
}

} // namespace swarmtopo

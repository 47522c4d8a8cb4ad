#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tilecount/planar_graph.hpp"
#include "tilecount/polygon.hpp"
#include "tilecount/render.hpp"

namespace tilecount::cli {

namespace {

using Clock = std::chrono::steady_clock;

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string seconds(std::chrono::duration<double> d) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", d.count());
    return buf;
}

const char* reference_status(const CountSummary& c) {
    const auto ref = find_reference(c.n);
    if (!ref) return "unverified";
    return ref->faces == c.faces && ref->edges == c.edges && ref->vertices == c.vertices ? "match" : "MISMATCH";
}

int exit_code_for(const Error& e) {
    return e.kind() == ErrorKind::InvalidArgument ? kExitBadArguments : kExitNumericFailure;
}

std::optional<Window> parse_window(const std::string& text) {
    std::array<double, 4> v{};
    std::stringstream in(text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(in, item, ',')) {
        if (i == v.size()) return std::nullopt;
        try {
            std::size_t used = 0;
            v[i] = std::stod(item, &used);
            if (used != item.size()) return std::nullopt;
        } catch (const std::exception&) {
            return std::nullopt;
        }
        ++i;
    }
    if (i != v.size()) return std::nullopt;
    return Window{std::min(v[0], v[2]), std::min(v[1], v[3]), std::max(v[0], v[2]), std::max(v[1], v[3])};
}

}  // namespace

std::vector<Evaluation> evaluate_range(int lo, int hi, Tolerance tol, unsigned threads, SplitAlgorithm algorithm) {
    std::vector<Evaluation> results;
    for (int n = lo; n <= hi; ++n) {
        Evaluation e;
        e.n = n;
        results.push_back(std::move(e));
    }
    if (results.empty()) return results;

    // Largest n first so the slowest jobs do not start last.
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < results.size(); k = next++) {
            Evaluation& slot = results[results.size() - 1 - k];
            const auto start = Clock::now();
            try {
                slot.summary = counts(PolygonSpec(slot.n), tol, algorithm);
            } catch (const Error& e) {
                slot.error = e;
            }
            slot.elapsed = Clock::now() - start;
        }
    };
    const unsigned workers = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(results.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
        worker();
    }
    return results;
}

VerifyReport verify(int max_n, Tolerance tol, unsigned threads) {
    if (max_n < kReferenceMinN || max_n > kReferenceMaxN) {
        throw Error(ErrorKind::InvalidArgument, "verify needs 2 <= max-n <= 39, got " + std::to_string(max_n));
    }
    VerifyReport report;
    for (Evaluation& e : evaluate_range(kReferenceMinN, max_n, tol, threads)) {
        if (e.error) throw *e.error;
        const ReferenceRow ref = *find_reference(e.n);
        const CountSummary& c = *e.summary;
        const bool match = c.faces == ref.faces && c.edges == ref.edges && c.vertices == ref.vertices;
        report.all_match = report.all_match && match;
        report.rows.push_back(VerifyRow{c, ref, match, e.elapsed});
    }
    return report;
}

std::string count_line(const CountSummary& c) {
    return std::to_string(c.edges) + " edges " + std::to_string(c.vertices) + " vertices " + std::to_string(c.faces) +
           " tiles";
}

nlohmann::json to_json(const CountSummary& c) {
    return nlohmann::json{{"N", 2 * c.n},         {"n", c.n},         {"F", c.faces},        {"E", c.edges},
                          {"V", c.vertices},      {"per_ray", c.per_ray}, {"central", c.central}};
}

std::string format_table(std::span<const CountSummary> rows, TableFormat format) {
    std::ostringstream out;
    switch (format) {
        case TableFormat::Csv:
            out << kCsvHeader << '\n';
            for (const auto& c : rows) {
                out << 2 * c.n << ',' << c.n << ',' << c.faces << ',' << c.edges << ',' << c.vertices << ','
                    << c.per_ray << ',' << c.central << '\n';
            }
            break;
        case TableFormat::Json: {
            auto array = nlohmann::json::array();
            for (const auto& c : rows) array.push_back(to_json(c));
            out << array.dump(2) << '\n';
            break;
        }
        case TableFormat::Text: {
            char line[160];
            std::snprintf(line, sizeof line, "%4s %4s %9s %9s %9s %8s %8s  %s\n", "N", "n", "F", "E", "V", "per_ray",
                          "central", "reference");
            out << line;
            for (const auto& c : rows) {
                std::snprintf(line, sizeof line, "%4d %4d %9lld %9lld %9lld %8lld %8d  %s\n", 2 * c.n, c.n,
                              static_cast<long long>(c.faces), static_cast<long long>(c.edges),
                              static_cast<long long>(c.vertices), static_cast<long long>(c.per_ray), c.central,
                              reference_status(c));
                out << line;
            }
            break;
        }
    }
    return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tile counts of regular 2n-gons dissected by their side-parallel diagonals"};
    app.require_subcommand(1);
    app.fallthrough();

    double fuzz = 1e-10;
    unsigned threads = 0;
    int limit = kDefaultMaxN;
    app.add_option("--fuzz", fuzz, "Point coincidence threshold")->capture_default_str();
    app.add_option("--threads", threads, "Worker threads for table/verify (0: all cores)")->capture_default_str();
    app.add_option("--limit", limit, "Largest n accepted by count/table/render")->capture_default_str();

    int count_n = 0;
    bool count_json = false;
    auto* count = app.add_subcommand("count", "Count edges, vertices and tiles for one polygon");
    count->add_option("--n", count_n, "Half the number of sides")->required();
    count->add_flag("--json", count_json, "Print a JSON object instead of text");

    int table_max = 0;
    std::string table_format = "text";
    auto* table = app.add_subcommand("table", "Count every n from 2 to --max-n");
    table->add_option("--max-n", table_max, "Largest n")->required();
    table->add_option("--format", table_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    int verify_max = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Compare counts for n = 2..max-n with the published tables");
    verify_cmd->add_option("--max-n", verify_max, "Largest n (at most 39)")->required();

    int render_n = 0;
    std::string render_out;
    bool render_faces = false;
    bool render_labels = false;
    std::string render_zoom;
    RenderOptions render_opts;
    auto* render = app.add_subcommand("render", "Write the dissection as an SVG figure");
    render->add_option("--n", render_n, "Half the number of sides")->required();
    render->add_option("--out", render_out, "Output SVG path")->required();
    render->add_flag("--faces", render_faces, "Fill tiles, one color per rotation orbit");
    render->add_flag("--labels", render_labels, "Print the orbit number inside each tile");
    render->add_option("--zoom", render_zoom, "Clip window x0,y0,x1,y1 in unit-circle coordinates");
    render->add_option("--scale", render_opts.scale, "Figure units per unit radius")->capture_default_str();
    render->add_option("--stroke", render_opts.stroke_width, "Line width in figure units")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadArguments;
    }

    Tolerance tol;
    try {
        tol = Tolerance::make(fuzz);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kExitBadArguments;
    }
    auto check_n = [&](int n, const char* what) {
        if (n < 2 || n > limit) {
            err << what << " must lie in [2, " << limit << "], got " << n << '\n';
            return false;
        }
        return true;
    };

    try {
        if (count->parsed()) {
            if (!check_n(count_n, "--n")) return kExitBadArguments;
            const CountSummary c = counts(PolygonSpec(count_n), tol);
            if (count_json) {
                auto j = to_json(c);
                j["reference"] = reference_status(c);
                out << j.dump() << '\n';
            } else {
                out << count_line(c) << '\n';
                out << "per_ray " << c.per_ray << " central " << c.central << " reference " << reference_status(c)
                    << '\n';
            }
            return kExitOk;
        }

        if (table->parsed()) {
            if (!check_n(table_max, "--max-n")) return kExitBadArguments;
            std::vector<CountSummary> rows;
            for (Evaluation& e : evaluate_range(2, table_max, tol, threads)) {
                if (e.error) throw *e.error;
                rows.push_back(*e.summary);
            }
            const TableFormat format = table_format == "csv"    ? TableFormat::Csv
                                       : table_format == "json" ? TableFormat::Json
                                                                : TableFormat::Text;
            out << format_table(rows, format);
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            const VerifyReport report = verify(verify_max, tol, threads);
            for (const VerifyRow& r : report.rows) {
                out << "N=" << r.reference.sides << " n=" << r.reference.n << "  E " << r.computed.edges << "/"
                    << r.reference.edges << "  V " << r.computed.vertices << "/" << r.reference.vertices << "  F "
                    << r.computed.faces << "/" << r.reference.faces << "  " << (r.match ? "ok" : "MISMATCH") << "  "
                    << seconds(r.elapsed) << '\n';
            }
            out << (report.all_match ? "all rows match" : "verification FAILED") << '\n';
            return report.all_match ? kExitOk : kExitMismatch;
        }

        if (render->parsed()) {
            if (!check_n(render_n, "--n")) return kExitBadArguments;
            if (!render_zoom.empty()) {
                render_opts.zoom = parse_window(render_zoom);
                if (!render_opts.zoom) {
                    err << "--zoom expects four comma-separated numbers, got '" << render_zoom << "'\n";
                    return kExitBadArguments;
                }
            }
            const PolygonSpec spec(render_n);
            render_opts.color_faces = render_faces;
            render_opts.label_orbits = render_labels;
            render_opts.symmetry = spec;
            render_opts.tol = tol;

            const auto base = base_segments(spec, tol);
            const SplitSegmentSet pieces = split_all_fast(base, tol);
            std::optional<PlanarGraph> graph;
            if (render_faces || render_labels) graph = PlanarGraph::build(pieces, tol);
            const std::string svg = render_svg(pieces, graph ? &*graph : nullptr, render_opts);

            std::ofstream file(render_out, std::ios::binary);
            file << svg;
            file.close();
            if (!file) {
                err << "cannot write " << render_out << '\n';
                return kExitIoFailure;
            }
            out << count_line(summarize(spec, count_vertices(pieces, tol), static_cast<std::int64_t>(pieces.size())))
                << '\n';
            return kExitOk;
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code_for(e);
    }
    return kExitBadArguments;
}

}  // namespace tilecount::cli

#include "cli.hpp"

#include "wsadist/cost_model.hpp"
#include "wsadist/distance.hpp"
#include "wsadist/error.hpp"
#include "wsadist/normalizer.hpp"
#include "wsadist/table_detect.hpp"
#include "wsadist/utf8.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace wsadist::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised when an operand file cannot be read.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string mode = "ws-agnostic";
    std::string normalize = "cased";
    std::string model = "appendix-a";
    std::string format = "text";
    double threshold = 0.5;
    std::size_t min_rows = 3;
    std::size_t tab_width = 8;
    bool files = false;
    std::vector<std::string> operands;
};

struct Text {
    std::string content;
    bool final_newline = false;
};

std::string slurp(const std::string& operand, std::istream& in) {
    std::ostringstream buffer;
    if (operand == "-") {
        buffer << in.rdbuf();
        if (in.bad()) {
            throw InputError("cannot read standard input");
        }
        in.clear();
        return buffer.str();
    }
    std::ifstream file(operand, std::ios::binary);
    if (!file) {
        throw InputError("cannot open " + operand);
    }
    buffer << file.rdbuf();
    if (file.bad()) {
        throw InputError("cannot read " + operand);
    }
    return buffer.str();
}

std::vector<std::string> split_lines(const std::string& content, bool strip_cr) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < content.size()) {
        std::size_t next = content.find('\n', pos);
        if (next == std::string::npos) {
            next = content.size();
        }
        std::string line = content.substr(pos, next - pos);
        if (strip_cr && !line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        lines.push_back(std::move(line));
        pos = next + 1;
    }
    return lines;
}

CostModel resolve_model(const std::string& source) {
    if (source == "unit") {
        return unit_model();
    }
    if (source == "appendix-a") {
        return appendix_model();
    }
    std::ifstream file(source, std::ios::binary);
    if (!file) {
        throw InputError("cannot open cost model " + source);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return load_model(buffer.str());
}

std::string format_score(double score) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", score);
    return buf;
}

bool structured(const Options& opt) { return opt.format != "text"; }

std::u32string prepare(std::string_view line, const Options& opt) {
    const auto mode = *parse_normalization_mode(opt.normalize);
    return normalize_line(expand_tabs(utf8::decode(line), opt.tab_width), mode);
}

int run_dist(const Options& opt, const CostModel& model, std::istream& in, std::ostream& out) {
    const Algorithm algorithm = *parse_algorithm(opt.mode);
    std::vector<std::pair<std::string, std::string>> pairs;
    if (opt.files) {
        const auto lines1 = split_lines(slurp(opt.operands[0], in), true);
        const auto lines2 = split_lines(slurp(opt.operands[1], in), true);
        const std::size_t rows = std::max(lines1.size(), lines2.size());
        for (std::size_t k = 0; k < rows; ++k) {
            pairs.emplace_back(k < lines1.size() ? lines1[k] : std::string{},
                               k < lines2.size() ? lines2[k] : std::string{});
        }
    } else {
        pairs.emplace_back(opt.operands[0], opt.operands[1]);
    }

    std::vector<Cost> costs;
    costs.reserve(pairs.size());
    Cost total = 0;
    for (const auto& [a, b] : pairs) {
        const Cost cost = compute_distance(algorithm, prepare(a, opt), prepare(b, opt), model).cost;
        costs.push_back(cost);
        total += cost;
    }

    if (structured(opt)) {
        json report;
        report["pairs"] = json::array();
        for (std::size_t k = 0; k < costs.size(); ++k) {
            report["pairs"].push_back({{"line", k}, {"cost", costs[k]}});
        }
        report["total"] = total;
        out << report.dump() << '\n';
    } else if (!opt.files) {
        out << costs.front() << '\n';
    } else {
        for (std::size_t k = 0; k < costs.size(); ++k) {
            out << k << ' ' << costs[k] << '\n';
        }
        out << "total " << total << '\n';
    }
    return kOk;
}

int run_normalize(const Options& opt, std::istream& in, std::ostream& out) {
    const auto mode = *parse_normalization_mode(opt.normalize);
    const std::string content = slurp(opt.operands.empty() ? "-" : opt.operands[0], in);
    std::size_t pos = 0;
    while (pos < content.size()) {
        std::size_t next = content.find('\n', pos);
        const bool has_newline = next != std::string::npos;
        if (!has_newline) {
            next = content.size();
        }
        out << normalize_line(std::string_view(content).substr(pos, next - pos), mode);
        if (has_newline) {
            out << '\n';
        }
        pos = next + 1;
    }
    return kOk;
}

int run_detect(const Options& opt, const CostModel& model, std::istream& in, std::ostream& out) {
    DetectConfig config;
    config.threshold = opt.threshold;
    config.min_rows = opt.min_rows;
    config.tab_width = opt.tab_width;
    config.mode = *parse_normalization_mode(opt.normalize);
    config.model = model;

    const auto lines = split_lines(slurp(opt.operands.empty() ? "-" : opt.operands[0], in), true);
    const auto regions = detect_tables(lines, config);

    if (structured(opt)) {
        json report;
        report["regions"] = json::array();
        for (const auto& r : regions) {
            report["regions"].push_back(
                {{"start_line", r.start_line}, {"end_line", r.end_line}, {"score", r.score}});
        }
        out << report.dump() << '\n';
    } else {
        for (const auto& r : regions) {
            out << r.start_line << ' ' << r.end_line << ' ' << format_score(r.score) << '\n';
        }
    }
    return kOk;
}

void add_common(CLI::App& sub, Options& opt) {
    sub.add_option("--normalize", opt.normalize, "Normalization: simple, cased or none")
        ->check(CLI::IsMember({"simple", "cased", "none"}))
        ->capture_default_str();
    sub.add_option("--format", opt.format, "Output format: text or structured (JSON)")
        ->check(CLI::IsMember({"text", "structured", "json"}))
        ->capture_default_str();
}

void add_metric(CLI::App& sub, Options& opt) {
    sub.add_option("--model", opt.model, "Cost model: unit, appendix-a or a JSON model file")
        ->capture_default_str();
    sub.add_option("--tab-width", opt.tab_width, "Tab stop width used for expansion")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1024}))
        ->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    Options opt;
    CLI::App app{"Trailing-whitespace-agnostic edit distance and plaintext table detection",
                 "wsadist"};
    app.require_subcommand(1, 1);

    auto* dist = app.add_subcommand("dist", "Distance between two strings or two files line by line");
    dist->add_option("--mode", opt.mode, "standard, ws-agnostic or naive-oracle")
        ->check(CLI::IsMember({"standard", "ws-agnostic", "naive-oracle"}))
        ->capture_default_str();
    dist->add_flag("--files", opt.files, "Treat operands as files and pair their lines");
    add_common(*dist, opt);
    add_metric(*dist, opt);
    dist->add_option("operands", opt.operands, "Two strings, or two files with --files ('-' = stdin)")
        ->expected(2)
        ->required();

    auto* normalize = app.add_subcommand("normalize", "Map text to shape classes line by line");
    normalize->add_option("--normalize", opt.normalize, "Normalization: simple, cased or none")
        ->check(CLI::IsMember({"simple", "cased", "none"}))
        ->capture_default_str();
    normalize->add_option("input", opt.operands, "Input file ('-' = stdin)")->expected(0, 1);

    auto* detect = app.add_subcommand("detect", "Report line ranges that look like tables");
    add_common(*detect, opt);
    add_metric(*detect, opt);
    detect->add_option("--threshold", opt.threshold, "Minimum adjacent-row similarity")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    detect->add_option("--min-rows", opt.min_rows, "Minimum lines per region")
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    detect->add_option("input", opt.operands, "Input file ('-' = stdin)")->expected(0, 1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadFlags;
    }

    if (dist->parsed() && opt.files) {
        if (opt.operands[0] == "-" && opt.operands[1] == "-") {
            err << "wsadist: at most one operand may be '-'\n";
            return kBadFlags;
        }
    }

    try {
        if (normalize->parsed()) {
            return run_normalize(opt, in, out);
        }
        const CostModel model = resolve_model(opt.model);
        if (dist->parsed()) {
            return run_dist(opt, model, in, out);
        }
        return run_detect(opt, model, in, out);
    } catch (const InputError& e) {
        err << "wsadist: " << e.what() << '\n';
        return kUnreadableInput;
    } catch (const SizeLimitError& e) {
        err << "wsadist: " << e.what() << '\n';
        return kSizeLimit;
    } catch (const ParseError& e) {
        err << "wsadist: invalid cost model: " << e.what() << '\n';
        return kBadFlags;
    } catch (const ValidationError& e) {
        err << "wsadist: invalid cost model: " << e.what() << '\n';
        return kBadFlags;
    }
}

} // namespace wsadist::cli

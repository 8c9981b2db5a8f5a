#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "curvebound/parser.hpp"
#include "curvebound/report.hpp"

namespace {

constexpr int kUsageError = 64;
constexpr int kParseError = 65;

std::vector<unsigned long> parse_scales_csv(const std::string& csv) {
    std::vector<unsigned long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        unsigned long v = std::stoul(item, &pos);
        if (pos != item.size() || v == 0) throw std::invalid_argument("bad scale: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty scale list");
    for (size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i] >= out[i + 1]) throw std::invalid_argument("scales must be strictly increasing");
    return out;
}

std::vector<curvebound::Rat> parse_radii_csv(const std::string& csv) {
    std::vector<curvebound::Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        curvebound::Rat r = curvebound::rat_from_string(item);
        if (!(r > 0)) throw std::invalid_argument("radii must be positive");
        out.push_back(r);
    }
    if (out.empty()) throw std::invalid_argument("empty radius list");
    for (size_t i = 0; i + 1 < out.size(); ++i)
        if (!(out[i] < out[i + 1])) throw std::invalid_argument("radii must be increasing");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvebound: decides compactness of the real plane curve p(x,y) = 0 from the "
                 "Newton polygon of p, in exact rational arithmetic"};
    app.get_formatter()->column_width(30);

    std::string poly_text, file_path, format = "text";
    std::string scales_csv, radii_csv, width_text;
    bool want_witness = false, want_oracle = false;
    int samples = curvebound::kDefaultOracleSamples;

    auto* poly_opt = app.add_option("--poly", poly_text, "Polynomial expression in x and y");
    auto* file_opt = app.add_option("--file", file_path, "File with one polynomial expression ('#' comments allowed)");
    app.add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--witness", want_witness,
                 "Construct unbounded witness points when noncompactness is certified");
    app.add_option("--scales", scales_csv, "Comma-separated witness scales (default 2,4,16,256,65536)");
    app.add_option("--width", width_text, "Witness bisection width, e.g. 1/1024 or 2^-32");
    app.add_flag("--oracle", want_oracle, "Probe circles of growing radius for curve crossings");
    app.add_option("--radii", radii_csv, "Comma-separated probe radii (default 10,100,1000,10000)");
    app.add_option("--samples", samples, "Samples per probe circle (default 512)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kUsageError;
    }

    if ((poly_opt->count() > 0) == (file_opt->count() > 0)) {
        std::cerr << "error: exactly one of --poly or --file is required\n";
        return kUsageError;
    }

    curvebound::RunOptions opts;
    opts.want_witness = want_witness;
    opts.want_oracle = want_oracle;
    opts.samples = samples;
    try {
        if (!scales_csv.empty()) opts.scales = parse_scales_csv(scales_csv);
        if (!radii_csv.empty()) opts.radii = parse_radii_csv(radii_csv);
        if (!width_text.empty()) {
            opts.width = curvebound::rat_from_string(width_text);
            if (!(opts.width > 0)) throw std::invalid_argument("width must be positive");
        }
        if (samples < 8) throw std::invalid_argument("need at least 8 samples");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }

    std::string input_echo;
    curvebound::SparsePoly poly;
    try {
        if (poly_opt->count() > 0) {
            input_echo = poly_text;
            poly = curvebound::parse_polynomial(poly_text);
        } else {
            if (!std::filesystem::exists(file_path)) {
                std::cerr << "error: no such file: " << file_path << "\n";
                return kUsageError;
            }
            input_echo = file_path;
            poly = curvebound::parse_polynomial_file(file_path);
        }
    } catch (const curvebound::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const curvebound::DegreeLimitExceeded& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    }

    curvebound::AnalysisResult result = curvebound::analyze_polynomial(poly, opts);
    if (format == "json")
        std::cout << curvebound::render_json(result, input_echo) << "\n";
    else
        std::cout << curvebound::render_text(result, input_echo);
    return curvebound::exit_code_for(result.verdict.status);
}

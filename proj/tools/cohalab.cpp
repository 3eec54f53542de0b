// Command-line front end: quiver ingestion, command dispatch, report
// emission. See README.md for the flag reference.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cohalab/job.hpp"

using namespace cohalab;

namespace {

DimVector parse_framing(const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("framing: bad entry '" + tok + "'");
        entries.push_back(v);
    }
    if (entries.empty()) throw std::invalid_argument("framing: empty");
    return DimVector(entries);
}

std::pair<int, int> parse_range(const std::string& text) {
    auto sep = text.find("..");
    if (sep == std::string::npos)
        throw std::invalid_argument("degree window: expected A..B, got '" + text + "'");
    int a = std::stoi(text.substr(0, sep));
    int b = std::stoi(text.substr(sep + 2));
    if (a > b) throw std::invalid_argument("degree window: empty range");
    return {a, b};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohalab: shuffle-algebra structure, refined DT invariants and "
                 "vertex-operator cross-checks for symmetric quivers"};
    app.footer("exit codes: 0 success, 1 verification failure, 2 input error\n"
               "COHA_LAB_THREADS caps worker threads.");

    std::string quiver_file;
    std::string cmd;
    int dmax = 3;
    int weight_window = -1;
    std::string degree_window;
    std::string framing;
    std::string format = "table";
    std::string out_file;
    bool render_q = false;

    app.add_option("--quiver", quiver_file, "quiver JSON file: {\"vertices\": r, \"arrows\": [[...]]}")
        ->required();
    app.add_option("--cmd", cmd,
                   "dt | char-coha | char-module | module-dims | span-principal | span-framed | verify")
        ->required();
    app.add_option("--dmax", dmax, "total-degree truncation bound (default 3)");
    app.add_option("--weight-window", weight_window,
                   "t-exponent window for series; twice-weight width above chi(d,d) for spans "
                   "(default 2*|chi|*dmax^2)");
    app.add_option("--degree-window", degree_window,
                   "cohomological degree range A..B for module-dims (default chi(d,d)..0 per d)");
    app.add_option("--framing", framing, "framing vector, comma separated: \"1,1\"");
    app.add_option("--format", format, "json | table (default table)")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", out_file, "write the report to a file instead of stdout");
    app.add_flag("--render-q", render_q, "print q^{k/2} powers instead of t^k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    JobSpec job;
    try {
        std::ifstream in(quiver_file);
        if (!in) {
            std::cerr << "error: cannot open quiver file '" << quiver_file << "'\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        job.quiver = quiver_from_json_text(buf.str());
        job.command = cmd;
        job.dmax = dmax;
        if (weight_window >= 0) job.weight_window = weight_window;
        if (!degree_window.empty()) {
            job.degree_window = parse_range(degree_window);
            job.degree_window_given = true;
        }
        if (!framing.empty()) job.framing = parse_framing(framing);
        job.format = format;
        job.render_q = render_q;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (!out_file.empty()) {
            std::ofstream os(out_file);
            if (!os) {
                std::cerr << "error: cannot open output file '" << out_file << "'\n";
                return 2;
            }
            return run_job(job, os);
        }
        return run_job(job, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

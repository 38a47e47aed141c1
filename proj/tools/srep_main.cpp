#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "srep/specfile.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CLI::ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decision procedures for closed-set codes of finite posets, words, powersets "
                 "and infinite words"};
    app.require_subcommand(1);

    std::string run_path;
    std::string eval_path;
    std::string query_text;
    srep::RunOptions opts;

    CLI::App* run = app.add_subcommand("run", "execute every query in a file");
    run->add_option("file", run_path, "input file")->required();

    CLI::App* eval = app.add_subcommand("eval", "execute one query against a file's declarations");
    eval->add_option("file", eval_path, "input file with the declarations")->required();
    eval->add_option("-q,--query", query_text, "the query to run")->required();

    for (CLI::App* sub : {run, eval}) {
        sub->add_flag("--check", opts.force_check, "cross-check every query against the oracle");
        sub->add_option("--max-len", opts.enum_config.max_len, "oracle word-length bound");
        sub->add_option("--max-prefix", opts.enum_config.max_prefix, "oracle UP-word prefix bound");
        sub->add_option("--max-period", opts.enum_config.max_period, "oracle UP-word period bound");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            srep::SpecFile spec = srep::parse_spec(read_file(run_path));
            return srep::run_spec(spec, opts, std::cout, std::cerr);
        }
        srep::SpecFile spec = srep::parse_spec(read_file(eval_path));
        srep::Query q = srep::parse_query_line(spec, query_text);
        bool disagreed = false;
        std::cout << srep::run_query(q, opts, &disagreed) << '\n';
        return disagreed ? 2 : 0;
    } catch (const srep::diag_error& e) {
        std::cerr << e.diag.to_string() << '\n';
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

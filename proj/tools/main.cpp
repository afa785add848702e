#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "germinv/io.hpp"
#include "germinv/pipeline.hpp"

namespace {

struct CommonArgs {
    std::string file;
    int trunc_start = 0;
    int trunc_max = 512;
    bool quasihomogeneous = false;
    std::string format = "table";
};

void add_common(CLI::App* sub, CommonArgs& a, bool with_format)
{
    sub->add_option("file", a.file, "instance file")->required();
    sub->add_option("--trunc-start", a.trunc_start, "initial truncation (default: max(8, 4*mt))");
    sub->add_option("--trunc-max", a.trunc_max, "truncation ceiling")->capture_default_str();
    sub->add_flag("--quasihomogeneous", a.quasihomogeneous, "assert the germ is quasihomogeneous");
    if (with_format)
        sub->add_option("--format", a.format, "output format")->check(CLI::IsMember({"table", "json"}));
}

int run_command(const CommonArgs& a, germinv::RunLevel level)
{
    std::ifstream in(a.file);
    if (!in) {
        std::cerr << "error: cannot open " << a.file << "\n";
        return germinv::kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    germinv::ProblemInstance instance;
    try {
        instance = germinv::parse_instance(buf.str());
    } catch (const germinv::ParseError& e) {
        std::cerr << a.file << ":" << e.what() << "\n";
        return germinv::kExitUsage;
    }
    instance.options.trunc_start = a.trunc_start;
    instance.options.trunc_max = a.trunc_max;
    instance.options.quasihomogeneous = instance.options.quasihomogeneous || a.quasihomogeneous;
    if (a.trunc_start > 0 && (a.trunc_start < 4 || a.trunc_start > a.trunc_max)) {
        std::cerr << "error: need 4 <= trunc-start <= trunc-max\n";
        return germinv::kExitUsage;
    }
    instance.options.format = a.format == "json" ? germinv::ReportFormat::Json : germinv::ReportFormat::Table;

    germinv::RunOutcome outcome = germinv::run(instance, level);
    std::cout << germinv::render_report(outcome, instance.options.format);
    return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"invariants and cotangent dimensions of parametrized curve singularities"};
    app.require_subcommand(1);

    CommonArgs check_args, inv_args, codim_args, verify_args, report_args;
    CLI::App* cmd_check = app.add_subcommand("check", "finiteness and primitivity only");
    add_common(cmd_check, check_args, false);
    CLI::App* cmd_inv = app.add_subcommand("invariants", "delta, conductor, semigroups, multiplicity, type");
    add_common(cmd_inv, inv_args, true);
    CLI::App* cmd_codim = app.add_subcommand("codim", "adds the cotangent dimensions and the codimension");
    add_common(cmd_codim, codim_args, true);
    CLI::App* cmd_verify = app.add_subcommand("verify", "full run with every identity checked");
    add_common(cmd_verify, verify_args, true);
    CLI::App* cmd_report = app.add_subcommand("report", "full run, report only");
    add_common(cmd_report, report_args, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return germinv::kExitUsage;
    }

    try {
        if (cmd_check->parsed()) return run_command(check_args, germinv::RunLevel::Check);
        if (cmd_inv->parsed()) return run_command(inv_args, germinv::RunLevel::Invariants);
        if (cmd_codim->parsed()) return run_command(codim_args, germinv::RunLevel::Codim);
        if (cmd_verify->parsed()) return run_command(verify_args, germinv::RunLevel::Verify);
        if (cmd_report->parsed()) return run_command(report_args, germinv::RunLevel::Verify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return germinv::kExitUsage;
    }
    return germinv::kExitUsage;
}

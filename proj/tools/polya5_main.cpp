#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "polya5/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"polya5: Polya groups and invariants of Lehmer quintic fields"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text, md, csv or json")
        ->capture_default_str();

    long long n = 0;
    auto* classify = app.add_subcommand(
        "classify", "full invariant report for the field K_n (conductor, Polya group, "
                    "genus number, theta index, monogenicity)");
    classify->add_option("n", n, "field parameter")->required();

    long long from = 0, to = 0;
    bool raw = false;
    auto* table =
        app.add_subcommand("table", "rows (n, m_{5n}, cube part, #Po) for a range of n");
    table->add_option("--from", from, "first n")->required();
    table->add_option("--to", to, "last n")->required();
    table->add_flag("--raw", raw, "treat the n column as the raw field index (rows are K_n)");

    std::string poly_spec;
    auto* curve = app.add_subcommand(
        "curve", "integral points of Y^2 = f(X) over the full Masser range");
    auto* poly_opt = curve->add_option(
        "--poly", poly_spec,
        "monic quartic as 5 comma-separated coefficients, highest first "
        "(default: the quartic whose value at n is m_n)");

    long long limit = 10000, cutoff = 100;
    auto* density = app.add_subcommand(
        "density", "cube-free density of g(k) vs the truncated Euler product");
    density->add_option("--limit", limit, "test k in [1, limit]")->capture_default_str();
    density->add_option("--cutoff", cutoff, "truncate products at this prime")
        ->capture_default_str();

    long long omega_limit = 100;
    auto* omega =
        app.add_subcommand("omega", "omega(m_{5p}) statistics over primes p <= limit");
    omega->add_option("--limit", omega_limit, "prime limit")->capture_default_str();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const auto fmt = polya5::parse_format(format);
    if (!fmt) {
        std::cerr << "error: unknown format '" << format << "'\n";
        return 1;
    }

    if (*classify) return polya5::cmd_classify(n, *fmt, std::cout, std::cerr);
    if (*table) return polya5::cmd_table(from, to, *fmt, raw, std::cout, std::cerr);
    if (*curve) {
        std::optional<std::string> poly;
        if (poly_opt->count() > 0) poly = poly_spec;
        return polya5::cmd_curve(poly, *fmt, std::cout, std::cerr);
    }
    if (*density) return polya5::cmd_density(limit, cutoff, *fmt, std::cout, std::cerr);
    if (*omega) return polya5::cmd_omega(omega_limit, *fmt, std::cout, std::cerr);
    return 1;
}

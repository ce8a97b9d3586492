#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polya5/polyring.hpp"

namespace polya5 {

enum class Format { text, md, csv, json };

std::optional<Format> parse_format(const std::string& name);

/* One line of the non-Polya table: the n column is the multiplier, the
 * row describes K_{5n} (or K_n itself in raw mode). */
struct TableRow {
    long long n;
    std::uint64_t m;
    std::uint64_t cube_part;
    int po_order_exponent;  // #Po = 5^k
};

// Rows for n in [from, to], 0 skipped.  Throws on computation failure.
std::vector<TableRow> table_rows(long long from, long long to, bool raw);

// Exit codes: 0 success, 1 argument/usage error, 2 computational failure.
int cmd_classify(long long n, Format fmt, std::ostream& out, std::ostream& err);
int cmd_table(long long from, long long to, Format fmt, bool raw, std::ostream& out,
              std::ostream& err);
int cmd_curve(const std::optional<std::string>& poly_spec, Format fmt, std::ostream& out,
              std::ostream& err);
int cmd_density(long long limit, long long cutoff, Format fmt, std::ostream& out,
                std::ostream& err);
int cmd_omega(long long prime_limit, Format fmt, std::ostream& out, std::ostream& err);

}  // namespace polya5

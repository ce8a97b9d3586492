#include "polya5/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <ostream>
#include <sstream>

#include "polya5/analytics.hpp"
#include "polya5/arith.hpp"
#include "polya5/errors.hpp"
#include "polya5/lehmer.hpp"
#include "polya5/polya.hpp"

namespace polya5 {

namespace {

using nlohmann::json;

std::string rat_str(const BigRat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string approx_str(const BigRat& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8f", r.convert_to<double>());
    return buf;
}

std::string factorization_str(const Factorization& f) {
    if (f.factors.empty()) return "1";
    std::string s;
    for (auto [p, e] : f.factors) {
        if (!s.empty()) s += " * ";
        s += std::to_string(p);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

json factorization_json(const Factorization& f) {
    json a = json::array();
    for (auto [p, e] : f.factors) a.push_back({p, e});
    return a;
}

std::string poly_str(const IntPolynomial& f) {
    std::string s;
    const int d = f.degree();
    for (int i = 0; i <= d; ++i) {
        const BigInt& c = f.coeffs[static_cast<std::size_t>(i)];
        if (c == 0 && d > 0) continue;
        const int deg = d - i;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        BigInt a = abs(c);
        if (a != 1 || deg == 0) s += a.str();
        if (deg > 0) {
            if (a != 1) s += "*";
            s += "x";
            if (deg > 1) s += "^" + std::to_string(deg);
        }
    }
    return s;
}

/* Shared error policy: usage problems exit 1, computational failures
 * exit 2, with the reason on the error stream. */
template <typename Fn>
int run_guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const perfect_square_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const magnitude_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const factorization_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const consistency_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const lifting_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

std::optional<Format> parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "md") return Format::md;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    return std::nullopt;
}

std::vector<TableRow> table_rows(long long from, long long to, bool raw) {
    if (from > to) throw std::invalid_argument("table: from must be <= to");
    std::vector<TableRow> rows;
    for (long long n = from; n <= to; ++n) {
        if (n == 0) continue;  // table convention
        const long long field_index = raw ? n : 5 * n;
        TableRow row;
        row.n = n;
        row.m = fit_u64(m_value(field_index));
        row.cube_part = cube_part(row.m);
        row.po_order_exponent = field_invariants(field_index).t - 1;
        rows.push_back(row);
    }
    return rows;
}

int cmd_classify(long long n, Format fmt, std::ostream& out, std::ostream& err) {
    if (fmt != Format::text && fmt != Format::json) {
        err << "error: classify supports --format text|json\n";
        return 1;
    }
    return run_guarded(err, [&] {
        const LehmerQuintic k = make_lehmer(n);
        const std::uint64_t m = fit_u64(k.m);
        const Factorization mf = factor(m);
        const MDecomposition dec = decompose_m(n);
        const FieldInvariants inv = field_invariants(n);
        const PolyaReport rep = classify(n);
        const MonogenicityReport mono = monogenicity_report(n);

        if (fmt == Format::json) {
            json j;
            j["n"] = n;
            j["m"] = m;
            j["factorization"] = factorization_json(mf);
            j["disc_poly"] = k.disc_poly.str();
            j["decomposition"] = {{"b", dec.b},
                                  {"A", dec.A},
                                  {"B", dec.B},
                                  {"cube", dec.cube},
                                  {"is_cube_free", dec.is_cube_free}};
            j["conductor"] = inv.conductor;
            j["field_disc"] = inv.field_disc.str();
            j["ramified_primes"] = inv.ramified_primes;
            j["t"] = inv.t;
            j["five_ramified"] = inv.five_ramified;
            j["polya"] = {{"n", rep.n},
                          {"m", rep.m},
                          {"is_cube_free", rep.is_cube_free},
                          {"is_polya", rep.is_polya},
                          {"po_order", rep.po_order},
                          {"po_rank", rep.po_rank},
                          {"genus_number", rep.genus_number},
                          {"polya_number_bound", rep.polya_number_bound},
                          {"theorem1_applies", rep.theorem1_applies}};
            j["monogenicity"] = {{"theta_index", mono.theta_index.str()},
                                 {"gcd_with_six", mono.gcd_with_six},
                                 {"non_monogenic", mono.non_monogenic},
                                 {"field_index_one", mono.field_index_one}};
            out << j.dump(2) << "\n";
            return 0;
        }

        out << "K_" << n << " = Q(theta), theta a root of " << poly_str(k.poly) << "\n";
        out << "m                  = " << m << " = " << factorization_str(mf) << "\n";
        out << "5^b A B^2          = 5^" << dec.b << " * " << dec.A << " * " << dec.B
            << "^2" << (dec.is_cube_free ? "" : "  (times cube part)") << "\n";
        out << "cube part          = " << dec.cube
            << (dec.is_cube_free ? "  (cube-free)" : "  (NOT cube-free)") << "\n";
        out << "conductor          = " << inv.conductor << "\n";
        out << "field discriminant = " << inv.conductor << "^4 = " << inv.field_disc << "\n";
        out << "ramified primes    =";
        for (auto p : inv.ramified_primes) out << " " << p;
        out << "  (t = " << inv.t << ")\n";
        out << "disc(f_n)          = " << k.disc_poly << "\n";
        out << "|Po(K_n)|          = " << rep.po_order << " = 5^" << rep.po_rank << "\n";
        out << "Polya field        = " << (rep.is_polya ? "yes" : "no")
            << (rep.theorem1_applies ? "" : "  (formula-extended: m not cube-free)") << "\n";
        out << "genus number       = " << rep.genus_number << "\n";
        out << "Polya number bound = " << rep.polya_number_bound << "\n";
        out << "theta index        = " << mono.theta_index << "\n";
        out << "gcd(index, 6)      = " << mono.gcd_with_six << "\n";
        out << "non-monogenic      = " << (mono.non_monogenic ? "yes" : "undetermined")
            << "\n";
        out << "field index I(K)   = " << (mono.field_index_one ? "1" : "unknown") << "\n";
        return 0;
    });
}

int cmd_table(long long from, long long to, Format fmt, bool raw, std::ostream& out,
              std::ostream& err) {
    if (fmt == Format::text) fmt = Format::md;
    if (from > to) {
        err << "error: table requires from <= to\n";
        return 1;
    }
    if (fmt == Format::json) {
        json rows = json::array();
        int rc = 0;
        for (long long n = from; n <= to; ++n) {
            if (n == 0) continue;
            try {
                auto row = table_rows(n, n, raw).at(0);
                rows.push_back({{"n", row.n},
                                {"m", row.m},
                                {"cube_part", row.cube_part},
                                {"po_order_exponent", row.po_order_exponent}});
            } catch (const std::exception& e) {
                rows.push_back({{"n", n}, {"error", e.what()}});
                rc = 2;
            }
        }
        out << rows.dump(2) << "\n";
        return rc;
    }
    return run_guarded(err, [&] {
        const auto rows = table_rows(from, to, raw);
        if (fmt == Format::csv) {
            out << "n,m,cube_part,po_order\n";
            for (const auto& r : rows)
                out << r.n << "," << r.m << "," << r.cube_part << ","
                    << r.po_order_exponent << "\n";
        } else {
            out << "| n | m | cube_part | #Po |\n";
            out << "| ---: | ---: | ---: | ---: |\n";
            for (const auto& r : rows)
                out << "| " << r.n << " | " << r.m << " | " << r.cube_part << " | 5^"
                    << r.po_order_exponent << " |\n";
        }
        return 0;
    });
}

namespace {

IntPolynomial parse_quartic(const std::string& spec) {
    std::vector<BigInt> coeffs;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.emplace_back(BigInt(tok));
    if (coeffs.size() != 5)
        throw std::invalid_argument("--poly expects 5 comma-separated coefficients, "
                                    "highest degree first");
    return IntPolynomial{std::move(coeffs)};
}

}  // namespace

int cmd_curve(const std::optional<std::string>& poly_spec, Format fmt, std::ostream& out,
              std::ostream& err) {
    if (fmt != Format::text && fmt != Format::json) {
        err << "error: curve supports --format text|json\n";
        return 1;
    }
    return run_guarded(err, [&] {
        const IntPolynomial f = poly_spec ? parse_quartic(*poly_spec) : lehmer_quartic();
        const std::uint64_t bound = masser_bound(f);
        const auto points = curve_integral_points(f);

        if (fmt == Format::json) {
            json j;
            json cs = json::array();
            for (const auto& c : f.coeffs) cs.push_back(c.str());
            j["poly"] = cs;
            j["bound"] = bound;
            json pts = json::array();
            for (const auto& p : points) pts.push_back({{"x", p.x}, {"y", p.y}});
            j["points"] = pts;
            out << j.dump(2) << "\n";
            return 0;
        }

        out << "curve: Y^2 = " << poly_str(f) << "\n";
        out << "scanned |x| <= " << bound << " (Masser bound 26 H^3)\n";
        out << "integral points, y >= 0 canonical ((x, -y) is also a solution):\n";
        if (points.empty()) out << "  none\n";
        for (const auto& p : points) out << "  (" << p.x << ", " << p.y << ")\n";
        return 0;
    });
}

int cmd_density(long long limit, long long cutoff, Format fmt, std::ostream& out,
                std::ostream& err) {
    if (fmt != Format::text && fmt != Format::json) {
        err << "error: density supports --format text|json\n";
        return 1;
    }
    if (limit < 10) {
        err << "error: --limit must be >= 10\n";
        return 1;
    }
    if (cutoff < 2) {
        err << "error: --cutoff must be >= 2\n";
        return 1;
    }
    return run_guarded(err, [&] {
        const DensityReport r =
            cubefree_density(static_cast<std::uint64_t>(limit), static_cast<std::uint64_t>(cutoff));
        const BigRat hel = hel_constant(static_cast<std::uint64_t>(cutoff));

        if (fmt == Format::json) {
            json j;
            j["limit"] = r.limit;
            j["tested"] = r.tested;
            j["cubefree_count"] = r.cubefree_count;
            j["empirical_density"] = rat_str(r.empirical_density);
            j["empirical_density_approx"] = r.empirical_density.convert_to<double>();
            j["prime_cutoff"] = r.prime_cutoff;
            json rc = json::array();
            for (auto [p, k] : r.root_counts) rc.push_back({p, k});
            j["root_counts"] = rc;
            j["truncated_product"] = rat_str(r.truncated_product);
            j["truncated_product_approx"] = r.truncated_product.convert_to<double>();
            j["hel_constant"] = rat_str(hel);
            j["hel_constant_approx"] = hel.convert_to<double>();
            out << j.dump(2) << "\n";
            return 0;
        }

        out << "g(k) cube-free for " << r.cubefree_count << " of " << r.tested
            << " values, k in [1, " << r.limit << "]\n";
        out << "empirical density      = " << rat_str(r.empirical_density) << " ~ "
            << approx_str(r.empirical_density) << "\n";
        out << "truncated Euler product= " << rat_str(r.truncated_product) << " ~ "
            << approx_str(r.truncated_product) << "  (primes <= " << r.prime_cutoff
            << ")\n";
        out << "Helfgott c' truncated  = " << rat_str(hel) << " ~ " << approx_str(hel)
            << "\n";
        out << "rho(p^3) per prime:";
        for (auto [p, k] : r.root_counts)
            if (k != 0) out << " " << p << ":" << k;
        out << "  (all other primes <= cutoff: 0)\n";
        return 0;
    });
}

int cmd_omega(long long prime_limit, Format fmt, std::ostream& out, std::ostream& err) {
    if (fmt != Format::text && fmt != Format::json) {
        err << "error: omega supports --format text|json\n";
        return 1;
    }
    if (prime_limit < 2) {
        err << "error: --limit must be >= 2\n";
        return 1;
    }
    return run_guarded(err, [&] {
        const OmegaStats s = omega_over_primes(static_cast<std::uint64_t>(prime_limit));

        if (fmt == Format::json) {
            json j;
            j["prime_limit"] = s.prime_limit;
            json samples = json::array();
            for (auto [p, w] : s.samples) samples.push_back({p, w});
            j["samples"] = samples;
            j["failed"] = s.failed;
            j["mean_omega"] = rat_str(s.mean_omega);
            j["mean_omega_approx"] = s.mean_omega.convert_to<double>();
            j["mean_loglog"] = s.mean_loglog;
            out << j.dump(2) << "\n";
            return 0;
        }

        out << "omega(m_{5p}) over primes p <= " << s.prime_limit << ":\n";
        for (auto [p, w] : s.samples) out << "  p = " << p << "  omega = " << w << "\n";
        if (!s.failed.empty()) {
            out << "skipped (out of exact range):";
            for (auto p : s.failed) out << " " << p;
            out << "\n";
        }
        out << "samples      = " << s.samples.size() << "\n";
        out << "mean omega   = " << rat_str(s.mean_omega) << " ~ " << approx_str(s.mean_omega)
            << "\n";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.8f", s.mean_loglog);
        out << "mean lnln p  = " << buf << "  (descriptive only)\n";
        return 0;
    });
}

}  // namespace polya5

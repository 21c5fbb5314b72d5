// oospc: bounds, constructions, verification and search for weight-3
// two-dimensional optical orthogonal codes.
//
// Exit codes: 0 success / valid, 1 invalid code, 2 usage error,
// 3 infeasible or unsupported parameters, 4 timeout.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oospc/bounds.hpp"
#include "oospc/code_io.hpp"
#include "oospc/constructions.hpp"
#include "oospc/search.hpp"

using namespace oospc;

namespace {

enum Exit { ok = 0, invalid = 1, usage = 2, infeasible = 3, timeout = 4 };

std::string regularity_text(const std::optional<std::pair<int, int>>& r) {
    if (!r) return "none";
    return "(" + std::to_string(r->first) + "," + std::to_string(r->second) + ")";
}

int cmd_bound(int m, int n, int la, bool raw) {
    std::cout << (raw ? theta_upper(m, n, la) : theta_best_upper(m, n, la)) << "\n";
    return ok;
}

int cmd_construct(int m, int n, int la, const std::string& out, const std::string& matrix_out) {
    ConstructionReport report;
    IngredientCache cache = IngredientCache::from_environment();
    IngredientOptions opts;
    opts.cache = &cache;
    Code code;
    try {
        code = construct_optimal(m, n, la, opts, &report);
    } catch (const std::invalid_argument& e) {
        std::cerr << "unsupported parameters: " << e.what() << "\n";
        return infeasible;
    }
    if (!verify_shift(code)) {
        std::cerr << "internal error: constructed code failed verification\n";
        return invalid;
    }
    if (!out.empty()) save_code(out, code, {report.path, report.regularity});
    if (!matrix_out.empty()) {
        std::FILE* f = std::fopen(matrix_out.c_str(), "w");
        if (!f) throw std::runtime_error("cannot write " + matrix_out);
        const std::string text = matrix_export(code);
        std::fwrite(text.data(), 1, text.size(), f);
        std::fclose(f);
    }
    std::cout << "size " << code.size() << "\n"
              << "regularity " << regularity_text(report.regularity) << "\n"
              << "construction " << report.path << "\n";
    return ok;
}

int cmd_verify(const std::string& path, const std::string& method) {
    CodeFile f;
    try {
        f = load_code(path);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return usage;
    }
    Verdict v;
    if (method == "diff") {
        if (f.code.lambda_c != 1) {
            std::cerr << "the difference method needs lambda_c = 1; use --method shift\n";
            return usage;
        }
        v = verify_diff(f.code);
    } else {
        v = verify_shift(f.code);
    }
    if (!v) {
        std::cout << "invalid: " << v.violation->describe(f.code) << "\n";
        return invalid;
    }
    std::cout << "valid (" << f.code.size() << " codewords)\n";
    return ok;
}

int cmd_search(int m, int n, int la, double timeout_s, const std::vector<int>& regular, const std::string& emit,
               bool serial, bool no_cap) {
    SearchOptions opt;
    if (timeout_s > 0) opt.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000));
    if (!regular.empty()) opt.prescribed_leave = std::pair{regular[0], regular[1]};
    opt.parallel = !serial;
    opt.cap_by_bound = !no_cap;
    SearchResult r;
    try {
        r = max_code(m, n, la, opt);
    } catch (const NoSuchDesign& e) {
        std::cout << "infeasible: " << e.what() << "\n";
        return infeasible;
    } catch (const SearchTimeout& e) {
        std::cout << "timeout: " << e.what() << "\n";
        return timeout;
    }
    std::cout << r.best_size << (r.proven_optimal ? " (proven)" : " (timeout, best found)") << "\n"
              << "nodes " << r.nodes_explored << "\n"
              << "elapsed " << r.elapsed.count() << "s\n";
    if (!emit.empty()) save_code(emit, r.witness, {"search", regularity(r.witness)});
    return r.proven_optimal ? ok : timeout;
}

struct TableRow {
    int m, n;
};

std::vector<TableRow> table_rows(int max_mn) {
    std::vector<TableRow> rows;
    for (int v = 4; v <= max_mn; v += 4)
        for (int m = 1; m * m <= v; ++m)
            if (v % m == 0 && std::gcd(m, v / m) != 1) rows.push_back({m, v / m});
    return rows;
}

char table_mark(int m, int n, int la, long long bound, int search_max_mn, double search_s) {
    if (m % 4 == 2 && n % 4 == 2) {
        try {
            if (static_cast<long long>(construct_optimal(m, n, la).size()) == bound) return 'C';
        } catch (const std::exception&) {
        }
    }
    if (m * n <= search_max_mn) {
        SearchOptions opt;
        opt.timeout = std::chrono::milliseconds(static_cast<long long>(search_s * 1000));
        opt.lower_bound_hint = static_cast<int>(bound);
        const SearchResult r = max_code(m, n, la, opt);
        if (r.best_size == bound) return 'S';
    }
    return '-';
}

int cmd_table(int max_mn, int la, int search_max_mn, double search_s) {
    std::vector<int> las = la == 0 ? std::vector<int>{3, 2} : std::vector<int>{la};
    std::printf("%4s %4s", "m", "n");
    for (int l : las) std::printf("  la=%d mark", l);
    std::printf("\n");
    for (const auto& row : table_rows(max_mn)) {
        std::printf("%4d %4d", row.m, row.n);
        for (int l : las) {
            const long long b = theta_best_upper(row.m, row.n, l);
            std::printf("  %4lld %4c", b, table_mark(row.m, row.n, l, b, search_max_mn, search_s));
        }
        std::printf("\n");
    }
    return ok;
}

int cmd_classify(const std::string& path) {
    CodeFile f;
    try {
        f = load_code(path);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return usage;
    }
    for (const auto& c : f.code.codewords) std::cout << to_string(c) << " " << classify(f.code.group, c).str() << "\n";
    std::cout << census(f.code).str() << "\n";
    return ok;
}

int cmd_matrix(const std::string& path) {
    CodeFile f;
    try {
        f = load_code(path);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return usage;
    }
    std::cout << matrix_export(f.code);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds, constructions, verification and search for (m,n,3,la,1) optical orthogonal signature pattern codes"};
    app.require_subcommand(1);

    int m = 0, n = 0, la = 2;
    auto add_dims = [&](CLI::App* sub) {
        sub->add_option("-m", m, "rows (Z_m)")->required()->check(CLI::PositiveNumber);
        sub->add_option("-n", n, "columns (Z_n)")->required()->check(CLI::PositiveNumber);
    };

    auto* bound = app.add_subcommand("bound", "print the upper bound on the code size");
    add_dims(bound);
    bound->add_option("--la", la, "auto-correlation (2 or 3)")->required()->check(CLI::IsMember({2, 3}));
    bool raw = false, effective = false;
    auto* raw_flag = bound->add_flag("--raw", raw, "bound for the given la only");
    bound->add_flag("--effective", effective, "minimum over both la when 3 does not divide mn (default)")->excludes(raw_flag);

    auto* construct = app.add_subcommand("construct", "build an optimal code for m = n = 2 (mod 4)");
    add_dims(construct);
    construct->add_option("--la", la, "auto-correlation (2 or 3)")->required()->check(CLI::IsMember({2, 3}));
    std::string out_path, matrix_path;
    construct->add_option("-o,--out", out_path, "write the code as JSON");
    construct->add_option("--matrix", matrix_path, "write the 0/1 matrices");

    auto* verify = app.add_subcommand("verify", "check a code file");
    std::string path, method = "shift";
    verify->add_option("path", path, "code file")->required();
    verify->add_option("--method", method, "shift or diff")->check(CLI::IsMember({"shift", "diff"}));

    auto* search = app.add_subcommand("search", "exact maximum-size search");
    add_dims(search);
    search->add_option("--la", la, "auto-correlation (1, 2 or 3)")->required()->check(CLI::IsMember({1, 2, 3}));
    double timeout_s = 0;
    std::vector<int> regular;
    std::string emit;
    bool serial = false, no_cap = false;
    search->add_option("--timeout", timeout_s, "seconds (0 = none)")->check(CLI::NonNegativeNumber);
    search->add_option("--regular", regular, "require an (s,t)-regular perfect packing")->expected(2);
    search->add_option("--emit", emit, "write the witness as JSON");
    search->add_flag("--serial", serial, "single worker");
    search->add_flag("--no-cap", no_cap, "keep searching after meeting the upper bound");

    auto* table = app.add_subcommand("table", "bound table for mn = 0 (mod 4), gcd(m,n) > 1");
    int max_mn = 150, table_la = 0, search_max_mn = 16;
    double search_s = 2.0;
    table->add_option("--max-mn", max_mn, "largest mn listed");
    table->add_option("--la", table_la, "2 or 3 (default: both)")->check(CLI::IsMember({2, 3}));
    table->add_option("--search-max-mn", search_max_mn, "try search witnesses up to this mn");
    table->add_option("--search-timeout", search_s, "seconds per searched cell");

    auto* classify_cmd = app.add_subcommand("classify", "type census of a code file");
    classify_cmd->add_option("path", path, "code file")->required();

    auto* matrix = app.add_subcommand("matrix", "print a code file as 0/1 matrices");
    matrix->add_option("path", path, "code file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*bound) return cmd_bound(m, n, la, raw);
        if (*construct) return cmd_construct(m, n, la, out_path, matrix_path);
        if (*verify) return cmd_verify(path, method);
        if (*search) return cmd_search(m, n, la, timeout_s, regular, emit, serial, no_cap);
        if (*table) return cmd_table(max_mn, table_la, search_max_mn, search_s);
        if (*classify_cmd) return cmd_classify(path);
        if (*matrix) return cmd_matrix(path);
    } catch (const NoSuchDesign& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return infeasible;
    } catch (const SearchTimeout& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return timeout;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return infeasible;
    }
    return usage;
}

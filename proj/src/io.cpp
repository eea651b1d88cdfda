#include "cuntz/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cuntz {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    return out;
}

std::string g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

void write_matrix_csv(const std::string& path, const CMatrix& m) {
    std::ofstream out = open_out(path);
    out << "row,col,re,im\n";
    auto emit = [&](long long r, long long c, Cx v) {
        out << r << ',' << c << ',' << g17(v.real()) << ',' << g17(v.imag()) << '\n';
    };
    if (const auto* sp = m.sparse()) {
        for (const Triplet& e : *sp) emit(e.row, e.col, e.value);
    } else {
        const Cx* d = m.data();
        for (long long r = 0; r < m.rows(); ++r)
            for (long long c = 0; c < m.cols(); ++c)
                if (d[r * m.cols() + c] != Cx(0.0, 0.0)) emit(r, c, d[r * m.cols() + c]);
    }
    if (!out) throw InputError("failed writing " + path);
}

CMatrix read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw InputError("empty matrix CSV: " + path);
    std::vector<Triplet> t;
    long long dim = 0;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        long long r, c;
        double re, im;
        char comma;
        if (!(ss >> r >> comma >> c >> comma >> re >> comma >> im))
            throw InputError(path + ": malformed line " + std::to_string(lineno));
        if (r < 0 || c < 0)
            throw InputError(path + ": negative index on line " + std::to_string(lineno));
        dim = std::max({dim, r + 1, c + 1});
        t.push_back({r, c, Cx(re, im)});
    }
    if (dim == 0) throw InputError(path + ": no entries");
    return CMatrix::from_triplets(dim, dim, std::move(t));
}

void write_grid_csv(const std::string& path, const GridScan& scan, double eps) {
    std::ofstream out = open_out(path);
    out << "re,im,sigma_min,in_set\n";
    for (int iy = 0; iy < scan.resolution; ++iy) {
        for (int ix = 0; ix < scan.resolution; ++ix) {
            const double s = scan.sigma_min[static_cast<std::size_t>(iy) * scan.resolution + ix];
            out << g17(scan.re[ix]) << ',' << g17(scan.im[iy]) << ',' << g17(s) << ','
                << (s <= eps ? 1 : 0) << '\n';
        }
    }
    if (!out) throw InputError("failed writing " + path);
}

void write_convergence_sigma_csv(const std::string& path, const ConvergenceReport& report) {
    std::ofstream out = open_out(path);
    out << "size,side,index,sigma\n";
    for (const auto& row : report.rows) {
        for (std::size_t k = 0; k < row.sigma2_section.size(); ++k)
            out << row.n << ",section," << k << ',' << g17(row.sigma2_section[k]) << '\n';
        for (std::size_t k = 0; k < row.sigma2_symbol.size(); ++k)
            out << row.n << ",symbol," << k << ',' << g17(row.sigma2_symbol[k]) << '\n';
    }
    if (!out) throw InputError("failed writing " + path);
}

void write_hausdorff_csv(const std::string& path, const ConvergenceReport& report) {
    std::ofstream out = open_out(path);
    out << "size,d_sigma2";
    for (double e : report.eps) out << ",d_eps_" << g17(e);
    out << '\n';
    for (const auto& row : report.rows) {
        out << row.n << ',' << g17(row.d_sigma2);
        for (double d : row.d_eps) out << ',' << g17(d);
        out << '\n';
    }
    if (!out) throw InputError("failed writing " + path);
}

void write_fractal_csv(const std::string& path, const std::vector<FractalWitnessRow>& rows) {
    std::ofstream out = open_out(path);
    out << "n,witness_short,expected_short,witness_long,expected_long\n";
    for (const auto& r : rows) {
        out << r.n << ',' << g17(r.witness_short) << ',' << g17(r.expected_short) << ','
            << g17(r.witness_long) << ',' << g17(r.expected_long) << '\n';
    }
    if (!out) throw InputError("failed writing " + path);
}

namespace {

nlohmann::json policy_json(const StabilityPolicy& p) {
    return {{"tol", p.tol},
            {"unstable_decay", p.unstable_decay},
            {"tail_slack", p.tail_slack},
            {"tail_window", p.tail_window}};
}

nlohmann::json inputs_json(const std::string& element_text, int N,
                           const std::string& compact_path) {
    nlohmann::json j{{"N", N}, {"element", element_text}};
    j["compact"] = compact_path.empty() ? nlohmann::json(nullptr) : nlohmann::json(compact_path);
    return j;
}

} // namespace

std::string stability_report_json(const SpectralReport& report, const std::string& element_text,
                                  int N, const std::string& compact_path) {
    nlohmann::json j;
    j["version"] = 1;
    j["report"] = "stability";
    j["inputs"] = inputs_json(element_text, N, compact_path);
    j["sizes"] = report.sizes;
    j["sigma_min"] = report.sigma_min;
    if (!report.sigma_full.empty()) j["sigma"] = report.sigma_full;
    j["verdict"] = report.verdict;
    j["tolerances"] = policy_json(report.policy);
    return j.dump(2);
}

std::string two_symbol_report_json(const TwoSymbolReport& report,
                                   const std::string& element_text, int N,
                                   const std::string& compact_path) {
    nlohmann::json j;
    j["version"] = 1;
    j["report"] = "two_symbol_stability";
    j["inputs"] = inputs_json(element_text, N, compact_path);
    j["sizes"] = report.sizes;
    j["sigma_min"] = {{"strong_limit", report.section_sigma_min},
                      {"symbol", report.symbol_sigma_min}};
    j["verdict"] = report.verdict;
    j["cause"] = to_string(report.cause);
    j["tolerances"] = policy_json(report.policy);
    return j.dump(2);
}

std::string fredholm_report_json(const FredholmReport& report, const std::string& element_text,
                                 int N, const std::string& compact_path, int k_max) {
    nlohmann::json j;
    j["version"] = 1;
    j["report"] = "fredholm";
    j["inputs"] = inputs_json(element_text, N, compact_path);
    j["inputs"]["k_max"] = k_max;
    j["sizes"] = report.sizes;
    j["sigma"] = report.sigma;
    j["alpha"] = report.alpha ? nlohmann::json(*report.alpha) : nlohmann::json(nullptr);
    j["tol"] = report.tol;
    return j.dump(2);
}

std::string lifting_report_json(const std::vector<LiftingCheckRow>& rows,
                                const std::string& element_text, int N) {
    nlohmann::json j;
    j["version"] = 1;
    j["report"] = "lifting_check";
    j["inputs"] = inputs_json(element_text, N, "");
    j["entries"] = nlohmann::json::array();
    for (const auto& row : rows) {
        j["entries"].push_back({{"i", row.i},
                                {"j", row.j},
                                {"n", row.n},
                                {"window_rows", row.check.window_rows},
                                {"window_cols", row.check.window_cols},
                                {"exact", row.check.exact},
                                {"max_deviation", row.check.max_deviation}});
    }
    return j.dump(2);
}

} // namespace cuntz

#pragma once

#include <atomic>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "frobsesh/catalog.hpp"
#include "frobsesh/errors.hpp"
#include "frobsesh/jetoracle.hpp"
#include "frobsesh/numeric.hpp"
#include "frobsesh/seshadri.hpp"
#include "frobsesh/toric.hpp"

namespace frobsesh {

struct ScanOptions {
    int count = 100;          // random instances after the pinned one
    int dim = 0;              // 0 = whole catalog, else restrict to this dim
    std::uint64_t seed = 0;
    int coeff_max = 3;        // divisor coefficients drawn from 0..coeff_max
    int homogeneity_r_max = 5;
    int scaling_r_max = 3;
    int oracle_m_max = 4;     // small per-instance oracle sweep, e fixed by budget
    int threads = 0;          // 0 = pick from hardware
};

struct ScanRow {
    int id = 0;
    std::string fan_name;
    std::vector<Int> divisor;
    std::uint64_t p = 2;
    Rat eps;    // min over all fixed points
    Rat eps_f;  // min over all fixed points
    bool sandwich_ok = false;
    bool homogeneity_ok = false;
    bool scaling_ok = false;
    bool oracle_ok = false;
    bool adjoint_ok = false;
    bool superadditivity_observed = false; // observation only, never a failure
    std::string note;

    bool ok() const {
        return sandwich_ok && homogeneity_ok && scaling_ok && oracle_ok && adjoint_ok;
    }
};

struct ScanReport {
    std::vector<ScanRow> rows;
    int hard_failures = 0;
    std::string table() const;
};

namespace detail {

/// Rejection-sample an ample divisor with coefficients in 0..coeff_max.
inline ToricDivisor sample_ample(const Fan& fan, std::mt19937_64& rng, int coeff_max) {
    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::vector<Int> coeffs;
        coeffs.reserve(fan.num_rays());
        for (int i = 0; i < fan.num_rays(); ++i)
            coeffs.push_back(Int(rng() % static_cast<std::uint64_t>(coeff_max + 1)));
        ToricDivisor d = make_divisor(fan, coeffs);
        if (is_ample(d)) return d;
    }
    throw Error("no ample divisor found in 2000 draws on fan with " +
                std::to_string(fan.num_rays()) + " rays");
}

/// All hard checks for one corpus instance; d2 feeds the superadditivity
/// observation column only.
inline ScanRow evaluate_instance(int id, const std::string& fan_name, const ToricDivisor& d,
                                 const ToricDivisor& d2, std::uint64_t p,
                                 const ScanOptions& opt) {
    ScanRow row;
    row.id = id;
    row.fan_name = fan_name;
    row.divisor = d.coeffs;
    row.p = p;
    const Fan& fan = *d.fan;
    const int n = fan.dim;

    std::vector<SeshadriReport> reports;
    int argmin = 0;
    row.sandwich_ok = true;
    for (int c = 0; c < fan.num_cones(); ++c) {
        const ChartedPolytope cp = chart_at(d, c).second;
        const SeshadriReport rep = seshadri_report(cp);
        if (rep.epsilon_frobenius > rep.epsilon ||
            rep.epsilon_frobenius * n < rep.epsilon) {
            row.sandwich_ok = false;
            row.note += "sandwich fails at cone " + std::to_string(c) + "; ";
        }
        if (c == 0 || rep.epsilon_frobenius < reports[argmin].epsilon_frobenius) argmin = c;
        reports.push_back(rep);
    }
    row.eps = reports[0].epsilon;
    row.eps_f = reports[0].epsilon_frobenius;
    for (const auto& rep : reports) {
        row.eps = std::min(row.eps, rep.epsilon);
        row.eps_f = std::min(row.eps_f, rep.epsilon_frobenius);
    }

    const ChartedPolytope cp_min = chart_at(d, argmin).second;
    const Rat eps_min = reports[argmin].epsilon;
    const Rat eps_f_min = reports[argmin].epsilon_frobenius;

    row.homogeneity_ok = true;
    for (int r = 2; r <= opt.homogeneity_r_max; ++r) {
        std::vector<Int> scaled;
        for (const Int& a : d.coeffs) scaled.push_back(a * r);
        const ToricDivisor rd = make_divisor(fan, scaled);
        const ChartedPolytope cpr = chart_at(rd, argmin).second;
        if (classical_seshadri(cpr) != eps_min * r ||
            frobenius_seshadri(cpr) != eps_f_min * r) {
            row.homogeneity_ok = false;
            row.note += "homogeneity fails at r=" + std::to_string(r) + "; ";
        }
    }

    try {
        // e(1) >= 1 makes m=1 itself a least witness; otherwise eps_F < p-1
        // keeps the least witness of e_base=1 from overshooting it.
        const int e1 = frobenius_jet_number_from(eps_f_min, 1, p);
        const int e_base = e1 >= 1 ? e1 : 1;
        row.scaling_ok = scaling_check(cp_min, p, e_base, opt.scaling_r_max);
        if (!row.scaling_ok) row.note += "scaling law fails; ";
    } catch (const NoWitness& ex) {
        row.scaling_ok = false;
        row.note += std::string("scaling witness: ") + ex.what() + "; ";
    }

    row.oracle_ok = true;
    for (Int m = 1; m <= opt.oracle_m_max; ++m) {
        const int e_cf = frobenius_jet_number_from(eps_f_min, m, p);
        const int e_or = oracle_frobenius_jet_number(d, m, argmin, p, e_cf + 1);
        if (e_or != e_cf) {
            row.oracle_ok = false;
            row.note += "oracle jet " + std::to_string(e_or) + " != closed form " +
                        std::to_string(e_cf) + " at m=" + int_str(m) + "; ";
        }
    }

    row.adjoint_ok = true;
    const ToricDivisor adj = adjoint_divisor(d);
    for (int c = 0; c < fan.num_cones(); ++c) {
        if (reports[c].epsilon_frobenius > 1 && !is_gg_at(adj, c)) {
            row.adjoint_ok = false;
            row.note += "adjoint not gg at cone " + std::to_string(c) + "; ";
        }
    }

    const ToricDivisor sum = divisor_combine(d, d2, 1, 1);
    const Rat sum_eps_f = frobenius_seshadri(chart_at(sum, argmin).second);
    const Rat d2_eps_f = frobenius_seshadri(chart_at(d2, argmin).second);
    row.superadditivity_observed = sum_eps_f >= eps_f_min + d2_eps_f;
    return row;
}

inline ScanRow scan_instance(int id, bool pinned, const ScanOptions& opt,
                             const std::vector<CatalogEntry>& pool,
                             const CatalogEntry* hexagon) {
    std::mt19937_64 rng(opt.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(id + 1)));
    try {
        if (pinned) {
            const ToricDivisor d = hexagon_divisor(hexagon->fan);
            const ToricDivisor d2 = sample_ample(hexagon->fan, rng, opt.coeff_max);
            return evaluate_instance(id, hexagon->name, d, d2, 2, opt);
        }
        const CatalogEntry& entry = pool[rng() % pool.size()];
        const ToricDivisor d = sample_ample(entry.fan, rng, opt.coeff_max);
        const ToricDivisor d2 = sample_ample(entry.fan, rng, opt.coeff_max);
        const std::uint64_t p = rng() % 2 == 0 ? 2 : 3;
        return evaluate_instance(id, entry.name, d, d2, p, opt);
    } catch (const Error& ex) {
        ScanRow row;
        row.id = id;
        row.fan_name = "?";
        row.note = ex.what();
        return row;
    }
}

} // namespace detail

/// Deterministic seeded corpus scan.  Instance i is a pure function of
/// (seed, i), so the worker pool never changes the report.
inline ScanReport run_scan(const ScanOptions& opt) {
    std::vector<CatalogEntry> pool;
    const CatalogEntry* hexagon = nullptr;
    static const std::vector<CatalogEntry> catalog = standard_catalog();
    for (const auto& entry : catalog) {
        if (opt.dim == 0 || entry.fan.dim == opt.dim) pool.push_back(entry);
        if (entry.name == "Hexagon") hexagon = &entry;
    }
    if (pool.empty()) return ScanReport{};
    const bool pin = hexagon != nullptr && (opt.dim == 0 || opt.dim == 2);
    const int total = opt.count + (pin ? 1 : 0);

    ScanReport report;
    report.rows.resize(total);
    std::atomic<int> next{0};
    const unsigned hw = std::thread::hardware_concurrency();
    const int nthreads =
        opt.threads > 0 ? opt.threads : static_cast<int>(hw > 4 ? 4 : (hw == 0 ? 1 : hw));
    auto work = [&] {
        for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1))
            report.rows[i] = detail::scan_instance(i, pin && i == 0, opt, pool, hexagon);
    };
    if (nthreads <= 1) {
        work();
    } else {
        std::vector<std::thread> workers;
        for (int t = 0; t < nthreads; ++t) workers.emplace_back(work);
        for (auto& w : workers) w.join();
    }
    for (const auto& row : report.rows)
        if (!row.ok()) ++report.hard_failures;
    return report;
}

inline std::string ScanReport::table() const {
    const auto flag = [](bool b) { return b ? std::string("ok  ") : std::string("FAIL"); };
    std::size_t name_w = 4, div_w = 7;
    std::vector<std::string> divs;
    for (const auto& row : rows) {
        name_w = std::max(name_w, row.fan_name.size());
        std::string s = "(";
        for (std::size_t i = 0; i < row.divisor.size(); ++i)
            s += (i ? "," : "") + int_str(row.divisor[i]);
        s += ")";
        div_w = std::max(div_w, s.size());
        divs.push_back(std::move(s));
    }
    const auto pad = [](std::string s, std::size_t w) {
        while (s.size() < w) s += ' ';
        return s;
    };
    std::string out = "  id " + pad("fan", name_w) + " " + pad("divisor", div_w) +
                      " p " + pad("eps", 8) + " " + pad("epsF", 8) +
                      " sand hom  scal orac adj  super+\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ScanRow& r = rows[i];
        std::string id = std::to_string(r.id);
        while (id.size() < 4) id = " " + id;
        out += id + " " + pad(r.fan_name, name_w) + " " + pad(divs[i], div_w) + " " +
               std::to_string(r.p) + " " + pad(rat_str(r.eps), 8) + " " +
               pad(rat_str(r.eps_f), 8) + " " + flag(r.sandwich_ok) + " " +
               flag(r.homogeneity_ok) + " " + flag(r.scaling_ok) + " " + flag(r.oracle_ok) +
               " " + flag(r.adjoint_ok) + " " + (r.superadditivity_observed ? "yes" : "no");
        if (!r.note.empty()) out += "  # " + r.note;
        out += "\n";
    }
    out += std::to_string(rows.size()) + " instances, " + std::to_string(hard_failures) +
           " hard failures\n";
    return out;
}

} // namespace frobsesh

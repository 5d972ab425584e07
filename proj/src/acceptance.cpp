#include "gridperim/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "gridperim/analysis.hpp"
#include "gridperim/canonical.hpp"
#include "gridperim/oracle.hpp"
#include "gridperim/optimizer.hpp"

namespace gridperim::acceptance {

namespace {

class Recorder {
public:
    Recorder(std::vector<CheckResult>& results, std::ostream& log)
        : results_(results), log_(log) {}

    void start() { t0_ = std::chrono::steady_clock::now(); }

    void record(std::string name, bool ok, std::string detail) {
        const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_);
        std::ostringstream line;
        line << detail << " [" << std::fixed;
        line.precision(1);
        line << dt.count() << "s]";
        log_ << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << line.str() << "\n"
             << std::flush;
        results_.push_back({std::move(name), ok, line.str()});
    }

private:
    std::vector<CheckResult>& results_;
    std::ostream& log_;
    std::chrono::steady_clock::time_point t0_;
};

std::string fmt(double v, int precision = 4) {
    std::ostringstream s;
    s << std::fixed;
    s.precision(precision);
    s << v;
    return s.str();
}

// Criterion 1: the closed-form perimeter against direct counting over
// every family shape with a <= 40, including the shapes outside the
// strict-descent regime, whose deviations must follow a fixed pattern.
void check_formula_validity(Recorder& rec) {
    rec.start();
    i64 checked = 0, in_regime = 0, singles = 0, rects = 0, flush = 0;
    i64 regime_bad = 0, volume_bad = 0, class_bad = 0, cross_bad = 0;
    for (i64 a = 1; a <= 40; ++a) {
        for (i64 c = 1; c <= 44; ++c) {
            for (i64 k = c; k <= c + a; ++k) {
                i64 last_hi;
                if (k == c) {
                    last_hi = a;  // only last == a is a valid flat block
                } else {
                    const i64 hkm1 = (k - 1 <= c) ? a : a - (k - 1 - c);
                    if (hkm1 < 1) break;
                    last_hi = std::min(hkm1, a);
                }
                for (i64 last = (k == c ? a : 1); last <= last_hi; ++last) {
                    const CanonicalShape s{a, c, k, last};
                    const ColumnProfile profile = expand(s);
                    const i64 direct = profile_edge_boundary(profile);
                    const i64 diff = direct - perimeter_formula(s);
                    if (volume_formula(s) != profile.volume()) ++volume_bad;
                    if (in_closed_form_regime(s)) {
                        ++in_regime;
                        if (diff != 0) ++regime_bad;
                    } else if (k == 1) {
                        ++singles;
                        if (diff != 0) ++class_bad;
                    } else if (c == k) {
                        ++rects;
                        if (diff != 0) ++class_bad;
                    } else {  // last == h_{k-1} with c < k
                        ++flush;
                        if (diff != 2) ++class_bad;
                    }
                    if (++checked % 97 == 0 &&
                        edge_boundary_size(profile_to_set(profile)) != direct)
                        ++cross_bad;
                }
            }
        }
    }
    const bool ok = regime_bad == 0 && volume_bad == 0 && class_bad == 0 && cross_bad == 0;
    std::ostringstream d;
    d << checked << " shapes (a<=40): formula exact on all " << in_regime
      << " strict-descent shapes and on " << singles << " single columns / " << rects
      << " rectangles; +2 on all " << flush << " flush-tail shapes (last=h_{k-1}, c<k); "
      << regime_bad + class_bad << " deviations, " << volume_bad << " volume mismatches, "
      << cross_bad << " cell-count mismatches";
    rec.record("criterion-1-formula-validity", ok, d.str());
}

void check_parametric_vs_partitions(Recorder& rec, bool quick) {
    rec.start();
    const i64 hi = quick ? 40 : 60;
    i64 bad = 0;
    for (i64 n = 1; n <= hi; ++n) {
        const auto fast = min_perimeter(n);
        const auto oracle = min_perimeter_partitions(n, false, hi);
        if (fast.p != oracle.p) ++bad;
    }
    std::ostringstream d;
    d << "parametric search equals the partition oracle for 1..=" << hi << " (" << bad
      << " mismatches)";
    rec.record("criterion-2-parametric-vs-oracle", bad == 0, d.str());
}

std::vector<VolumeOptima> check_structure_validation(Recorder& rec, i64 oracle_cap) {
    rec.start();
    const auto optima = exhaustive_optima_upto(oracle_cap, oracle_cap);
    const i64 max_n = static_cast<i64>(optima.size());
    // Completeness gate for the exhaustive side: fixed king-connected
    // polyform counts, OEIS A006770 (dedup-verified in the unit suite).
    const i64 expected_counts[] = {1,      4,      20,      110,     638,    3832,
                                   23592, 147941, 940982, 6053180, 39299408};
    i64 count_bad = 0;
    const auto counts = polyplet_counts(max_n);
    for (i64 n = 1; n <= max_n; ++n)
        if (counts[static_cast<std::size_t>(n - 1)] != expected_counts[n - 1]) ++count_bad;
    i64 agreement_bad = 0;
    std::vector<i64> p(static_cast<std::size_t>(max_n) + 1, 0);
    for (i64 n = 1; n <= max_n; ++n) {
        p[static_cast<std::size_t>(n)] = optima[static_cast<std::size_t>(n - 1)].p;
        if (min_perimeter_partitions(n, false, max_n).p != p[static_cast<std::size_t>(n)])
            ++agreement_bad;
    }
    i64 strict_bad = 0, nonstrict_bad = 0;
    std::ostringstream offenders;
    for (i64 n = 2; n <= max_n; ++n)
        for (i64 n1 = 1; n1 <= n / 2; ++n1) {
            const i64 sum = p[static_cast<std::size_t>(n1)] + p[static_cast<std::size_t>(n - n1)];
            if (sum <= p[static_cast<std::size_t>(n)]) {
                ++strict_bad;
                offenders << " [" << n1 << "+" << (n - n1) << ": " << sum
                          << (sum < p[static_cast<std::size_t>(n)] ? "<" : "=")
                          << p[static_cast<std::size_t>(n)] << "]";
            }
            if (sum < p[static_cast<std::size_t>(n)]) ++nonstrict_bad;
        }
    const bool ok = agreement_bad == 0 && strict_bad == 0 && count_bad == 0;
    std::ostringstream d;
    d << "partition oracle = exhaustive oracle on 1..=" << max_n << " (" << agreement_bad
      << " mismatches; enumeration sizes match the published polyform counts, " << count_bad
      << " off); strict split inequality p(n1)+p(n2)>p(n) fails " << strict_bad << " time(s)"
      << offenders.str() << "; non-strict version fails " << nonstrict_bad
      << " time(s), so ties cannot beat the connected optimum";
    rec.record("criterion-3-structure-validation", ok, d.str());
    return optima;
}

void check_nested_chains(Recorder& rec, const std::vector<VolumeOptima>& optima, bool quick) {
    rec.start();
    const auto report = nested_chain_from_optima(optima);
    if (quick) {
        const bool ok = optima[8].p == 14 && report.chains_exist_to == 9;
        std::ostringstream d;
        d << "(quick, capped at 9) p(9)=" << optima[8].p << ", all-optimal chains reach "
          << report.chains_exist_to;
        rec.record("criterion-4-nested-chains", ok, d.str());
        return;
    }
    const bool ok = optima[10].p == 16 && report.chains_exist_to == 10 &&
                    report.best_chain_perimeters[10] == 17;
    std::ostringstream d;
    d << "p(11)=" << optima[10].p << "; all-optimal chains stop at volume "
      << report.chains_exist_to << " (" << report.maximal_chain_count
      << " maximal chains); best nested continuation at volume 11 scores "
      << report.best_chain_perimeters[10];
    rec.record("criterion-4-nested-chains", ok, d.str());
}

std::vector<PerimeterResult> check_sandwich(Recorder& rec) {
    rec.start();
    auto table = perimeter_table(1, 100000);
    i64 lower_bad = 0, upper_bad = 0, gap_bad = 0;
    for (i64 n = 2; n <= 5000; ++n)
        if (lower_bound(n) > table[static_cast<std::size_t>(n - 1)].p) ++lower_bad;
    for (i64 n = 36; n <= 5000; ++n) {
        const auto u = upper_bound(n);
        if (!u || table[static_cast<std::size_t>(n - 1)].p > *u) ++upper_bad;
    }
    double max_gap = 0;
    for (i64 n = 36; n <= 1000000; ++n) {
        const auto g = bound_gap(n);
        if (!g || g->real_gap > 17.5) ++gap_bad;
        if (g) max_gap = std::max(max_gap, g->real_gap);
    }
    const bool ok = lower_bad == 0 && upper_bad == 0 && gap_bad == 0;
    std::ostringstream d;
    d << "lower<=p on 2..5000 (" << lower_bad << " bad), p<=upper on 36..5000 (" << upper_bad
      << " bad), real gap <= 17.5 on 36..10^6 (" << gap_bad
      << " bad, max " << fmt(max_gap) << ")";
    rec.record("criterion-5-bound-sandwich", ok, d.str());
    return table;
}

void check_monotonicity(Recorder& rec, std::span<const PerimeterResult> table) {
    rec.start();
    i64 bad = 0;
    for (i64 n = 2; n <= 5000; ++n)
        if (table[static_cast<std::size_t>(n - 1)].p < table[static_cast<std::size_t>(n - 2)].p)
            ++bad;
    std::ostringstream d;
    d << "p non-decreasing on 1..5000 (" << bad << " violations)";
    rec.record("criterion-6-monotonicity", bad == 0, d.str());
}

void check_increment(Recorder& rec, std::span<const PerimeterResult> table) {
    rec.start();
    i64 defined = 0, bad = 0;
    for (i64 n = 1; n <= 2000; ++n) {
        const auto& r = table[static_cast<std::size_t>(n - 1)];
        const auto grown = increment_witness(r);
        if (!grown) continue;
        ++defined;
        if (profile_edge_boundary(expand(*grown)) != r.p) ++bad;
        if (volume_formula(*grown) != n + 1) ++bad;
        if (table[static_cast<std::size_t>(n)].p != r.p) ++bad;
    }
    std::ostringstream d;
    d << defined << " of 2000 witnesses admit a same-perimeter top-up; all re-score to p(n) "
      << "and p(n+1)=p(n) (" << bad << " failures)";
    rec.record("criterion-7-increment-witnesses", bad == 0 && defined > 0, d.str());
}

void check_simplex(Recorder& rec) {
    rec.start();
    const auto cmp = simplex_comparison();
    const bool volumes_ok = cmp.simplex.volume() == 105 && cmp.truncated.volume() == 105;
    const bool relative_ok = cmp.truncated_direct == cmp.simplex_direct - 1;
    const bool optimum_ok = cmp.optimum.p == 53 && cmp.optimum.certified;
    std::ostringstream d;
    d << "volume-105 staircases: direct " << cmp.simplex_direct << "/" << cmp.truncated_direct
      << ", closed form " << cmp.simplex_formula << "/" << cmp.truncated_formula
      << ", upper objective " << fmt(cmp.simplex_upper_objective, 1) << "/"
      << fmt(cmp.truncated_upper_objective, 1) << "; truncation wins by exactly 1; p(105)="
      << cmp.optimum.p << (cmp.optimum.certified ? " (certified optimal)" : " (uncertified)");
    rec.record("criterion-8-simplex-comparison", volumes_ok && relative_ok && optimum_ok,
               d.str());
}

void check_plateaus(Recorder& rec, std::span<const PerimeterResult> table) {
    rec.start();
    std::vector<i64> p(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) p[i] = table[i].p;
    const auto runs = plateaus_in(p, 1, 1);
    i64 best_run = 0;
    for (const auto& r : runs) best_run = std::max(best_run, r.length);

    auto max_run_upto = [&](i64 hi) {
        i64 best = 0;
        for (const auto& r : runs) {
            if (r.start > hi) break;
            best = std::max(best, std::min(r.start + r.length - 1, hi) - r.start + 1);
        }
        return best;
    };
    const i64 checkpoints[] = {1000, 10000, 100000};
    bool monotone = true;
    i64 prev = 0;
    std::ostringstream cks;
    for (const i64 hi : checkpoints) {
        const i64 m = max_run_upto(hi);
        if (m < prev) monotone = false;
        prev = m;
        cks << " " << m << "@" << hi;
    }
    const double ratio = static_cast<double>(table[9999].p) / 100.0;
    const bool ratio_ok = ratio >= 5.27 && ratio <= 5.46;
    const bool ok = best_run >= 5 && monotone && ratio_ok;
    std::ostringstream d;
    d << "longest plateau on 1..10^5 is " << best_run << " (needs >=5); max run at checkpoints"
      << cks.str() << " is non-decreasing; p(10^4)/sqrt(10^4) = " << fmt(ratio)
      << " in [5.27, 5.46] (2*sqrt(7) = " << fmt(2 * std::sqrt(7.0)) << ")";
    rec.record("criterion-9-plateaus-and-growth", ok, d.str());
}

}  // namespace

std::vector<CheckResult> run(const Options& opt, std::ostream& log) {
    std::vector<CheckResult> results;
    Recorder rec(results, log);

    check_formula_validity(rec);
    check_parametric_vs_partitions(rec, opt.quick);

    const auto optima = check_structure_validation(rec, opt.quick ? 9 : 11);
    check_nested_chains(rec, optima, opt.quick);

    const auto table = check_sandwich(rec);
    check_monotonicity(rec, table);
    check_increment(rec, table);
    check_simplex(rec);
    check_plateaus(rec, table);

    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace gridperim::acceptance

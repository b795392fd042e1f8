#include "rsaux/zeros.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <thread>

#include "rsaux/contour.hpp"
#include "rsaux/errors.hpp"
#include "rsaux/saddle.hpp"

namespace rsaux {

std::string to_string(EvaluatorKind k) {
    return k == EvaluatorKind::oracle ? "oracle" : "expansion";
}

EvaluatorKind pick_evaluator(const cplx& s) {
    if (std::fabs(s.imag()) <= oracle_height_limit) return EvaluatorKind::oracle;
    if (s.real() < -10.0) return EvaluatorKind::expansion;
    throw range_error("pick_evaluator: point outside both evaluators' ranges");
}

ExtComplex evaluate_r(const cplx& s, EvaluatorKind kind, double tol) {
    if (kind == EvaluatorKind::oracle) {
        return ExtComplex::from_complex(r_defining(s, tol).value);
    }
    return assemble(s, tol).r_value;
}

namespace {

struct PhaseWalker {
    EvaluatorKind kind;
    double tol;
    double guard_log;     // boundary-zero threshold on log|R|
    long evals = 0;

    ExtComplex at(const cplx& s) {
        ++evals;
        const ExtComplex v = evaluate_r(s, kind, tol);
        if (v.is_zero() || v.log_modulus < guard_log) {
            throw boundary_zero_error("winding_count: |R| below guard band on the boundary");
        }
        return v;
    }

    // accumulated phase change along the segment [a, b]
    double walk(const cplx& a, double phase_a, const cplx& b, double phase_b, int depth) {
        const double d = wrap_phase(phase_b - phase_a);
        if (std::fabs(d) <= 0.5 * pi) return d;
        if (depth <= 0) {
            throw convergence_error("winding_count: boundary step underflow");
        }
        const cplx mid = 0.5 * (a + b);
        const double pm = at(mid).phase;
        return walk(a, phase_a, mid, pm, depth - 1) + walk(mid, pm, b, phase_b, depth - 1);
    }
};

} // namespace

long winding_count(const Rectangle& rect, double tol) {
    if (!rect.valid()) {
        throw domain_error("winding_count: empty rectangle");
    }
    const cplx corners[4] = {
        {rect.sigma_min, rect.t_min}, {rect.sigma_max, rect.t_min},
        {rect.sigma_max, rect.t_max}, {rect.sigma_min, rect.t_max}};

    PhaseWalker w{pick_evaluator(corners[0]), tol, neg_inf};

    // median boundary magnitude sets the guard scale
    std::vector<double> logs;
    std::vector<std::vector<std::pair<double, double>>> coarse(4);
    for (int e = 0; e < 4; ++e) {
        const cplx a = corners[e], b = corners[(e + 1) % 4];
        const int n = std::max(8, static_cast<int>(std::ceil(std::abs(b - a) / 0.25)));
        for (int i = 0; i < n; ++i) {
            const cplx x = a + (b - a) * (static_cast<double>(i) / n);
            const ExtComplex v = evaluate_r(x, w.kind, tol);
            if (v.is_zero()) {
                throw boundary_zero_error("winding_count: R vanished on the boundary");
            }
            logs.push_back(v.log_modulus);
            coarse[e].emplace_back(static_cast<double>(i) / n, v.phase);
        }
    }
    std::vector<double> sorted = logs;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    w.guard_log = sorted[sorted.size() / 2] - 9.0 * std::log(10.0);
    for (double l : logs) {
        if (l < w.guard_log) {
            throw boundary_zero_error("winding_count: |R| below guard band on the boundary");
        }
    }

    double total = 0.0;
    for (int e = 0; e < 4; ++e) {
        const cplx a = corners[e], b = corners[(e + 1) % 4];
        const auto& samples = coarse[e];
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto [fa, pa] = samples[i];
            const double fb = (i + 1 < samples.size()) ? samples[i + 1].first : 1.0;
            const double pb = (i + 1 < samples.size()) ? samples[i + 1].second
                                                       : coarse[(e + 1) % 4].front().second;
            total += w.walk(a + (b - a) * fa, pa, a + (b - a) * fb, pb, 44);
        }
    }
    const double turns = total / (2.0 * pi);
    const long count = std::lround(turns);
    if (std::fabs(turns - static_cast<double>(count)) > 0.25) {
        throw convergence_error("winding_count: winding total not close to an integer");
    }
    return count;
}

namespace {

// f / f' via central differences, in log form to survive extreme scales.
struct NewtonStep {
    cplx step;
    ExtComplex value;
    ExtComplex derivative;
};

NewtonStep newton_step(const cplx& s, EvaluatorKind kind, double tol) {
    const double h = 1e-5 * std::max(1.0, std::abs(s));
    const ExtComplex f0 = evaluate_r(s, kind, tol);
    const ExtComplex fp = evaluate_r(s + h, kind, tol);
    const ExtComplex fm = evaluate_r(s - h, kind, tol);
    const ExtComplex diff = ext_sub(fp, fm);
    if (diff.is_zero()) {
        throw convergence_error("refine_zero: derivative underflow");
    }
    NewtonStep out;
    out.value = f0;
    out.derivative = ExtComplex::from_polar(diff.log_modulus - std::log(2.0 * h), diff.phase);
    if (f0.is_zero()) {
        out.step = cplx(0.0, 0.0);
        return out;
    }
    const ExtComplex ratio = f0 / out.derivative;
    if (ratio.log_modulus > 40.0) {
        throw convergence_error("refine_zero: derivative underflow (step blew up)");
    }
    out.step = ratio.to_complex();
    return out;
}

} // namespace

double residual_under(const cplx& location, EvaluatorKind kind, double tol) {
    const NewtonStep n = newton_step(location, kind, tol);
    return std::abs(n.step) / std::max(1.0, std::abs(location));
}

ZeroRecord refine_zero(const cplx& seed, double tol) {
    ZeroRecord rec;
    rec.evaluator = pick_evaluator(seed);

    cplx s = seed;
    double prev_step = std::numeric_limits<double>::infinity();
    int growing = 0;
    for (int it = 1; it <= 50; ++it) {
        const NewtonStep n = newton_step(s, rec.evaluator, tol);
        const double mag = std::abs(n.step);
        if (!std::isfinite(mag) || mag > 10.0 * (1.0 + std::abs(s))) {
            throw convergence_error("refine_zero: divergence");
        }
        if (mag > 4.0 * prev_step && ++growing >= 3) {
            throw convergence_error("refine_zero: divergence (steps growing)");
        }
        prev_step = mag;
        s -= n.step;
        rec.newton_iters = it;
        if (mag < tol) break;
    }
    rec.location = s;

    const NewtonStep fin = newton_step(s, rec.evaluator, tol);
    rec.residual = std::abs(fin.step) / std::max(1.0, std::abs(s));
    rec.abs_value = fin.value.is_zero() ? 0.0 : std::exp(fin.value.log_modulus);
    const double near_even = -2.0 * std::round(-0.5 * s.real());
    rec.kind = (near_even < 0.0 && std::abs(s - cplx(near_even, 0.0)) <= trivial_zero_tolerance)
                   ? ZeroRecord::Kind::trivial
                   : ZeroRecord::Kind::nontrivial;
    return rec;
}

namespace {

std::vector<ZeroRecord> scan_tile(const Rectangle& tile, double tol) {
    Rectangle r = tile;
    long count = 0;
    for (int attempt = 0;; ++attempt) {
        try {
            count = winding_count(r, std::min(tol, 1e-10));
            break;
        } catch (const boundary_zero_error&) {
            if (attempt >= 3) throw;
            const double d = 0.01 * (attempt + 1);
            r = {r.sigma_min - d, r.sigma_max + d, r.t_min - d, r.t_max + d};
        }
    }
    std::vector<ZeroRecord> found;
    if (count == 0) return found;

    const cplx center(0.5 * (r.sigma_min + r.sigma_max), 0.5 * (r.t_min + r.t_max));
    try {
        ZeroRecord z = refine_zero(center, tol);
        if (r.sigma_min - 0.1 <= z.location.real() && z.location.real() <= r.sigma_max + 0.1
            && r.t_min - 0.1 <= z.location.imag() && z.location.imag() <= r.t_max + 0.1) {
            found.push_back(z);
        }
    } catch (const convergence_error&) {
        // fall through to subdivision
    }
    if (static_cast<long>(found.size()) < count
        && (r.sigma_max - r.sigma_min) > 1e-3) {
        const double sm = 0.5 * (r.sigma_min + r.sigma_max);
        const double tm = 0.5 * (r.t_min + r.t_max);
        const Rectangle quads[4] = {
            {r.sigma_min, sm, r.t_min, tm}, {sm, r.sigma_max, r.t_min, tm},
            {r.sigma_min, sm, tm, r.t_max}, {sm, r.sigma_max, tm, r.t_max}};
        for (const auto& q : quads) {
            for (auto&& z : scan_tile(q, tol)) found.push_back(z);
        }
    }
    return found;
}

} // namespace

std::vector<ZeroRecord> scan_region(const Rectangle& rect, double grid_step, double tol) {
    if (!rect.valid() || grid_step <= 0.0) {
        throw domain_error("scan_region: bad rectangle or step");
    }
    const long nx = std::max(1L, static_cast<long>(std::ceil((rect.sigma_max - rect.sigma_min) / grid_step)));
    const long nt = std::max(1L, static_cast<long>(std::ceil((rect.t_max - rect.t_min) / grid_step)));
    const double dx = (rect.sigma_max - rect.sigma_min) / nx;
    const double dt = (rect.t_max - rect.t_min) / nt;

    std::vector<Rectangle> tiles;
    tiles.reserve(nx * nt);
    for (long i = 0; i < nx; ++i) {
        for (long j = 0; j < nt; ++j) {
            tiles.push_back({rect.sigma_min + i * dx, rect.sigma_min + (i + 1) * dx,
                             rect.t_min + j * dt, rect.t_min + (j + 1) * dt});
        }
    }

    std::vector<std::vector<ZeroRecord>> per_tile(tiles.size());
    const unsigned workers = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 8u);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tiles.size()) return;
            try {
                per_tile[i] = scan_tile(tiles[i], tol);
            } catch (const std::exception& e) {
                throw convergence_error("scan_region: tile [" + std::to_string(tiles[i].sigma_min)
                                        + "," + std::to_string(tiles[i].sigma_max) + "]x["
                                        + std::to_string(tiles[i].t_min) + ","
                                        + std::to_string(tiles[i].t_max) + "]: " + e.what());
            }
        }
    };
    if (workers <= 1 || tiles.size() <= 1) {
        worker();
    } else {
        std::vector<std::future<void>> futs;
        for (unsigned t = 0; t < workers; ++t) {
            futs.push_back(std::async(std::launch::async, worker));
        }
        for (auto& f : futs) f.get();   // rethrows tile failures deterministically
    }

    std::vector<ZeroRecord> all;
    for (auto& v : per_tile) {
        for (auto&& z : v) {
            if (rect.contains(z.location)
                || std::abs(z.location - cplx(std::clamp(z.location.real(), rect.sigma_min, rect.sigma_max),
                                              std::clamp(z.location.imag(), rect.t_min, rect.t_max))) < 0.05) {
                all.push_back(z);
            }
        }
    }
    std::sort(all.begin(), all.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    std::vector<ZeroRecord> dedup;
    for (const auto& z : all) {
        if (!dedup.empty() && std::abs(dedup.back().location - z.location) <= 1e-6) {
            if (z.residual < dedup.back().residual) dedup.back() = z;
            continue;
        }
        dedup.push_back(z);
    }
    return dedup;
}

} // namespace rsaux

// Desk-scale acceptance run: one line per criterion, nonzero exit on any
// failure.  Tolerances are fixed here on purpose; do not relax them to make a
// run pass.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "kawa/relations.hpp"

using namespace kawa;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int number, const std::string& name, bool pass, double elapsed = -1) {
    if (!pass) ++failures;
    std::string timing = elapsed >= 0 ? "  (" + std::to_string(elapsed).substr(0, 5) + "s)" : "";
    std::printf("%-4s %2d %s%s\n", pass ? "pass" : "FAIL", number, name.c_str(), timing.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    // 1. Hoffman duality, exact, weight <= 6 and N <= 20.
    {
        auto t0 = Clock::now();
        bool ok = all_pass(check_hoffman_duality(6, 20));
        double dt = seconds_since(t0);
        report(1, "hoffman duality exact suite (wt<=6, N<=20)", ok && dt < 30, dt);
    }

    // 2. Interpolation, exact, weight <= 6 and N <= 20.
    {
        auto t0 = Clock::now();
        bool ok = all_pass(check_interpolation(6, 20));
        double dt = seconds_since(t0);
        report(2, "newton interpolation exact suite (wt<=6, N<=20)", ok && dt < 30, dt);
    }

    // 3. Product rules, exact, 50 random pairs of weight <= 5 at N <= 30.
    report(3, "product rules exact suite (50 pairs, wt<=5, N=30)",
           all_pass(check_product_rules(50, 5, 30)));

    // 4. Dual involution and rho closed form, weight <= 10.
    report(4, "dual involution and rho closed form (wt<=10)",
           all_pass(check_involution_and_rho(10)));

    // 5. Zeta engine accuracy at terms = 1e5 with extrapolation.
    {
        auto t0 = Clock::now();
        EvalConfig cfg;
        cfg.terms = 100000;
        MzvEngine engine(cfg);
        const Real pi = boost::math::constants::pi<Real>();
        const Real pi2 = pi * pi, pi4 = pi2 * pi2;
        bool ok = abs(engine.mzv(Index{2}).value - pi2 / 6) < 1e-8;
        ok = ok && abs(engine.mzv(Index{4}).value - pi4 / 90) < 1e-8;
        ok = ok && abs(engine.mzv(Index{2, 2}).value - pi4 / 120) < 1e-7;
        ok = ok && abs(engine.mzv(Index{1, 2}).value - engine.mzv(Index{3}).value) < 1e-6;
        double dt = seconds_since(t0);
        report(5, "zeta engine accuracy (pi^2/6, pi^4/90, pi^4/120, (1,2)=(3))", ok && dt < 60, dt);
    }

    EvalConfig cfg;
    cfg.terms = 20000;

    // 6. Three evaluators agree pairwise on the k x z grid; plus the
    // digamma closed form F_(1)(1/2) = 2 - 2 ln 2.
    {
        bool ok = true;
        for (const Index& k : {Index{1}, Index{2}, Index{1, 1}, Index{1, 2}, Index{2, 1}}) {
            KawashimaEvaluator ev(k);
            for (const Real& z : {Real("0.25"), Real("0.5"), Real("1.5")}) {
                auto a = ev.eval_newton(z, cfg);
                auto b = ev.eval_g_series(z, cfg);
                auto c = ev.eval_fraction_inductive(z, cfg);
                ok = ok && abs(a.value - b.value) <
                               std::max(Real("1e-6"), a.error_estimate + b.error_estimate);
                ok = ok && abs(a.value - c.value) <
                               std::max(Real("1e-6"), a.error_estimate + c.error_estimate);
                ok = ok && abs(b.value - c.value) <
                               std::max(Real("1e-6"), b.error_estimate + c.error_estimate);
            }
        }
        Real closed = 2 - 2 * log(Real(2));
        ok = ok && abs(KawashimaEvaluator(Index{1}).eval_newton(Real("0.5"), cfg).value - closed) <
                       1e-6;
        report(6, "cross-method evaluation (5 indices x 3 points) + 2-2ln2", ok);
    }

    // 7. Difference equation, numeric residual < 1e-6 and exact at integers.
    {
        EvalConfig tight = cfg;
        tight.terms = 100000;
        tight.tolerance = Real("1e-6");
        bool ok = true;
        for (const Index& k : {Index{1}, Index{2}, Index{1, 1}, Index{1, 2}, Index{2, 1}}) {
            for (const Real& z : {Real("1.5"), Real("2.5")}) {
                auto r = check_difference_equation(k, z, tight);
                ok = ok && r.residual_abs < 1e-6;
            }
            for (long N : {1L, 2L, 3L}) ok = ok && check_difference_equation_exact(k, N).pass;
        }
        report(7, "difference equation (numeric < 1e-6, exact at integers)", ok);
    }

    // 8. Taylor identity, both routes, residual < 1e-5; duality special case.
    {
        MzvEngine engine(cfg);
        bool ok = true;
        for (const Index& k : {Index{1}, Index{2}, Index{1, 1}})
            for (int m = 1; m <= 3; ++m)
                ok = ok && check_taylor_identity(k, m, engine).residual_abs < 1e-5;
        for (int m = 2; m <= 4; ++m) {
            std::vector<int> parts(static_cast<size_t>(m - 1), 1);
            parts.push_back(2);
            ok = ok && abs(engine.mzv(Index(std::move(parts))).value -
                           engine.mzv(Index{m + 1}).value) < 1e-5;
        }
        report(8, "taylor coefficients via zeta route vs C_m route (m<=3)", ok);
    }

    // 9. Harmonic relation, numeric residual < 1e-5 and exact at integers.
    {
        bool ok = true;
        const std::vector<std::pair<Index, Index>> kl = {
            {Index{1}, Index{1}}, {Index{1}, Index{2}}, {Index{1, 1}, Index{1}}};
        for (const auto& [k, l] : kl) {
            for (const Real& z : {Real("0.5"), Real("1.5")})
                ok = ok && check_harmonic_relation(k, l, z, cfg).residual_abs < 1e-5;
            for (long N : {1L, 2L, 3L}) ok = ok && check_harmonic_relation_exact(k, l, N).pass;
        }
        report(9, "harmonic relation F_k F_l = F_{k *bar l}", ok);
    }

    // 10. Kawashima's relation.  Headline instance k=l=(1), m=2 at the full
    // term budget, then the grid wt(k)+wt(l) <= 3, m <= 3.
    {
        auto t0 = Clock::now();
        bool ok = true;
        {
            EvalConfig fine;
            fine.terms = 100000;
            MzvEngine engine(fine);
            IndexVector bar = harmonic_bar_product(IndexVector(Index{1}), IndexVector(Index{1}));
            IndexVector rhs_arg =
                circled_star_product(IndexVector(ones(2)), star_expand(hoffman_dual(bar)));
            IndexVector expected = IndexVector(Index{1, 3}) -
                                   Rational(2) * IndexVector(Index{1, 1, 2}) -
                                   IndexVector(Index{2, 2});
            ok = ok && (rhs_arg == expected);
            auto rep = check_kawashima_relation(Index{1}, Index{1}, 2, engine);
            ok = ok && rep.residual_abs < 1e-5;
        }
        EvalConfig grid_cfg;
        grid_cfg.terms = 30000;
        MzvEngine engine(grid_cfg);
        for (const Index& k : indices_up_to_weight(2)) {
            for (const Index& l : indices_up_to_weight(2)) {
                if (k.weight() + l.weight() > 3) continue;
                for (int m = 1; m <= 3; ++m)
                    ok = ok && check_kawashima_relation(k, l, m, engine).residual_abs < 1e-4;
            }
        }
        double dt = seconds_since(t0);
        report(10, "kawashima relation (headline zeta(2)^2 + grid wt<=3, m<=3)", ok && dt < 300,
               dt);
    }

    // 11. Polygamma bridge, residual < 1e-6.
    {
        bool ok = true;
        for (int m : {0, 1, 2})
            for (const Real& z : {Real("0.5"), Real(1)})
                ok = ok && check_polygamma(m, z, cfg).residual_abs < 1e-6;
        report(11, "polygamma bridge F_{m+1} vs psi^(m)", ok);
    }

    if (failures == 0) {
        std::printf("all 11 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}

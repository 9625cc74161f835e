#include "collusim/economy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "collusim/rng.hpp"

namespace collusim {

EconomyParams EconomyParams::baseline() {
    EconomyParams p;
    p.n = 2;
    p.quality = {2.0, 2.0};
    p.outside_quality = 0.0;
    p.mu = 0.25;
    p.cost = {1.0, 1.0};
    return p;
}

EconomyParams EconomyParams::asymmetric_cost() {
    EconomyParams p = baseline();
    p.cost[1] = 0.5;
    return p;
}

void EconomyParams::validate() const {
    if (n < 2) throw std::invalid_argument("EconomyParams: n must be >= 2");
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw std::invalid_argument("EconomyParams: mu must be positive and finite");
    if (static_cast<int>(quality.size()) != n || static_cast<int>(cost.size()) != n)
        throw std::invalid_argument("EconomyParams: quality/cost must have one entry per firm");
    for (double b : quality)
        if (!std::isfinite(b)) throw std::invalid_argument("EconomyParams: non-finite quality");
    for (double c : cost)
        if (!std::isfinite(c)) throw std::invalid_argument("EconomyParams: non-finite cost");
    if (!std::isfinite(outside_quality))
        throw std::invalid_argument("EconomyParams: non-finite outside quality");
}

double ActionGrid::step() const {
    return (prices.back() - prices.front()) / static_cast<double>(prices.size() - 1);
}

int ActionGrid::nearest_action(double p) const {
    double pos = (p - prices.front()) / step();
    int a = static_cast<int>(std::lround(pos));
    return std::clamp(a, 0, size() - 1);
}

void ActionGrid::validate() const {
    if (prices.size() < 2) throw std::invalid_argument("ActionGrid: need at least 2 prices");
    const double h = step();
    if (!(h > 0.0)) throw std::invalid_argument("ActionGrid: prices must be increasing");
    for (size_t i = 0; i + 1 < prices.size(); ++i) {
        double d = prices[i + 1] - prices[i];
        if (std::abs(d - h) > 1e-9)
            throw std::invalid_argument("ActionGrid: prices must be equally spaced");
    }
}

static ActionGrid literal_grid(double lo, double step, int m) {
    ActionGrid g;
    g.prices.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) g.prices[static_cast<size_t>(i)] = lo + step * i;
    g.validate();
    return g;
}

ActionGrid ActionGrid::baseline() { return literal_grid(1.43, 0.04, 15); }
ActionGrid ActionGrid::asymmetric() { return literal_grid(1.15, 0.05, 25); }
ActionGrid ActionGrid::enlarged20() { return literal_grid(1.43, 0.04, 20); }

std::vector<double> demand(const EconomyParams& params, const PriceVector& prices) {
    params.validate();
    if (static_cast<int>(prices.size()) != params.n)
        throw std::invalid_argument("demand: price vector length must equal n");
    for (double p : prices)
        if (!std::isfinite(p)) throw std::invalid_argument("demand: non-finite price");

    const int n = params.n;
    std::vector<double> expo(static_cast<size_t>(n));
    double denom = std::exp(params.outside_quality / params.mu);
    for (int i = 0; i < n; ++i) {
        expo[static_cast<size_t>(i)] =
            std::exp((params.quality[static_cast<size_t>(i)] - prices[static_cast<size_t>(i)]) / params.mu);
        denom += expo[static_cast<size_t>(i)];
    }
    std::vector<double> q(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) q[static_cast<size_t>(i)] = expo[static_cast<size_t>(i)] / denom;
    return q;
}

std::vector<double> profit(const EconomyParams& params, const PriceVector& prices) {
    std::vector<double> q = demand(params, prices);
    for (int i = 0; i < params.n; ++i)
        q[static_cast<size_t>(i)] *= prices[static_cast<size_t>(i)] - params.cost[static_cast<size_t>(i)];
    return q;
}

SolveResult bertrand_nash(const EconomyParams& params, double tol) {
    params.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("bertrand_nash: tol must be positive");

    const int n = params.n;
    const double damping = 0.5;
    const int max_iter = 10000;

    PriceVector p(params.cost);
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] += 2.0 * params.mu;

    SolveResult out;
    for (int it = 1; it <= max_iter; ++it) {
        std::vector<double> q = demand(params, p);
        double residual = 0.0;
        for (int i = 0; i < n; ++i) {
            double target = params.cost[static_cast<size_t>(i)] + params.mu / (1.0 - q[static_cast<size_t>(i)]);
            residual = std::max(residual, std::abs(target - p[static_cast<size_t>(i)]));
            p[static_cast<size_t>(i)] = (1.0 - damping) * p[static_cast<size_t>(i)] + damping * target;
        }
        out.iterations = it;
        out.residual = residual;
        if (residual < tol) {
            out.converged = true;
            break;
        }
    }
    out.prices = std::move(p);
    return out;
}

namespace {

double aggregate_profit(const EconomyParams& params, const PriceVector& p) {
    std::vector<double> r = profit(params, p);
    double sum = 0.0;
    for (double v : r) sum += v;
    return sum;
}

// dPi/dp_i = q_i + sum_j (p_j - c_j) dq_j/dp_i with
// dq_i/dp_i = -q_i (1 - q_i) / mu and dq_j/dp_i = q_i q_j / mu.
void aggregate_profit_gradient(const EconomyParams& params, const PriceVector& p,
                               std::vector<double>& grad) {
    const int n = params.n;
    std::vector<double> q = demand(params, p);
    grad.assign(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double g = q[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            double margin = p[static_cast<size_t>(j)] - params.cost[static_cast<size_t>(j)];
            double dqj = (i == j) ? -q[static_cast<size_t>(i)] * (1.0 - q[static_cast<size_t>(i)]) / params.mu
                                  : q[static_cast<size_t>(i)] * q[static_cast<size_t>(j)] / params.mu;
            g += margin * dqj;
        }
        grad[static_cast<size_t>(i)] = g;
    }
}

}  // namespace

SolveResult monopoly_prices(const EconomyParams& params, double tol) {
    params.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("monopoly_prices: tol must be positive");

    const int n = params.n;
    const double lo = *std::min_element(params.cost.begin(), params.cost.end());
    const double hi = *std::max_element(params.quality.begin(), params.quality.end()) + 1.0;
    const int max_iter = 20000;
    const int starts = 8;

    Rng rng(0x6d6f6e6f70ULL);  // fixed: solver output must not depend on callers

    SolveResult best;
    double best_value = -1e300;

    for (int s = 0; s < starts; ++s) {
        PriceVector p(static_cast<size_t>(n));
        if (s == 0) {
            // deterministic midpoint start, the rest are random multistarts
            for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = 0.5 * (lo + hi);
        } else {
            for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = lo + (hi - lo) * uniform_unit(rng);
        }

        std::vector<double> grad;
        double step = 0.1;
        double value = aggregate_profit(params, p);
        SolveResult res;
        for (int it = 1; it <= max_iter; ++it) {
            aggregate_profit_gradient(params, p, grad);
            double gnorm = 0.0;
            for (double g : grad) gnorm += g * g;
            gnorm = std::sqrt(gnorm);
            res.iterations = it;
            res.residual = gnorm;
            if (gnorm < tol) {
                res.converged = true;
                break;
            }
            // ascent with backtracking on the step size
            PriceVector trial(static_cast<size_t>(n));
            double trial_value;
            while (true) {
                for (int i = 0; i < n; ++i)
                    trial[static_cast<size_t>(i)] = p[static_cast<size_t>(i)] + step * grad[static_cast<size_t>(i)];
                trial_value = aggregate_profit(params, trial);
                if (trial_value >= value || step < 1e-14) break;
                step *= 0.5;
            }
            p = trial;
            value = trial_value;
            step = std::min(step * 1.2, 1.0);
        }
        res.prices = p;
        if (res.converged && value > best_value) {
            best_value = value;
            best = res;
        } else if (!best.converged && value > best_value) {
            best_value = value;
            best = res;
        }
    }
    return best;
}

ActionGrid action_grid(double p_nash, double p_monopoly, double xi, int m) {
    if (!(p_monopoly > p_nash)) throw std::invalid_argument("action_grid: pM must exceed pN");
    if (m < 2) throw std::invalid_argument("action_grid: need m >= 2");
    if (xi < 0.0) throw std::invalid_argument("action_grid: xi must be >= 0");

    const double span = p_monopoly - p_nash;
    const double lo = p_nash - xi * span;
    const double hi = p_monopoly + xi * span;
    ActionGrid g;
    g.xi = xi;
    g.prices.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        g.prices[static_cast<size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (m - 1);
    g.prices.back() = hi;  // exact endpoint
    g.validate();
    return g;
}

}  // namespace collusim

#pragma once

#include <string>
#include <vector>

namespace collusim {

// Market primitives: logit demand, per-period profits, and the two one-shot
// benchmarks (Bertrand-Nash and joint-monopoly prices) that anchor the
// discretized price menu.

struct EconomyParams {
    int n = 2;                     // number of firms
    std::vector<double> quality;   // product quality index b_i, one per firm
    double outside_quality = 0.0;  // b_0 of the outside good
    double mu = 0.25;              // horizontal differentiation, > 0
    std::vector<double> cost;      // marginal cost c_i, one per firm

    // n=2, b_i=2, c_i=1, b_0=0, mu=0.25
    static EconomyParams baseline();
    // baseline with player 2's marginal cost lowered to 0.5
    static EconomyParams asymmetric_cost();

    void validate() const;  // throws std::invalid_argument
};

using PriceVector = std::vector<double>;

// The discrete menu of feasible prices shared by all firms. Action index i
// maps to the (i+1)-th lowest price.
struct ActionGrid {
    std::vector<double> prices;  // strictly increasing, equally spaced
    double xi = 0.0;             // extension parameter used when built from the formula

    int size() const { return static_cast<int>(prices.size()); }
    double price(int action) const { return prices[static_cast<size_t>(action)]; }
    double step() const;
    // action whose price is closest to p (prices are equally spaced)
    int nearest_action(double p) const;

    void validate() const;  // throws on non-uniform spacing or size < 2

    // Literal menus used by the experiment presets.
    static ActionGrid baseline();      // {1.43, 1.47, ..., 1.99}, 15 prices
    static ActionGrid asymmetric();    // {1.15, 1.20, ..., 2.35}, 25 prices
    static ActionGrid enlarged20();    // {1.43, 1.47, ..., 2.19}, 20 prices
};

// Logit demand share per firm. Shares are positive and sum with the outside
// share to exactly one.
std::vector<double> demand(const EconomyParams& params, const PriceVector& prices);

// Per-firm one-period reward (p_i - c_i) * q_i.
std::vector<double> profit(const EconomyParams& params, const PriceVector& prices);

struct SolveResult {
    PriceVector prices;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

// One-shot simultaneous-price equilibrium: fixed point of
// p_i = c_i + mu / (1 - q_i(p)), found by damped iteration (damping 0.5,
// cap 10000). residual is the max first-order-condition violation.
SolveResult bertrand_nash(const EconomyParams& params, double tol = 1e-10);

// Maximizer of aggregate profit, multistart gradient ascent (8 starts).
// residual is the final gradient norm.
SolveResult monopoly_prices(const EconomyParams& params, double tol = 1e-10);

// m equally spaced prices over [pN - xi*(pM - pN), pM + xi*(pM - pN)].
ActionGrid action_grid(double p_nash, double p_monopoly, double xi, int m);

}  // namespace collusim

#include "plc/asymptotics.hpp"

#include <array>
#include <cmath>

#include <Eigen/Dense>

#include "plc/errors.hpp"

namespace plc {

namespace {

void require_positive_quadrant(const Point& u, const char* what) {
    for (ExtReal c : {u.x1, u.x2})
        if (!(c > 0.0)) throw DomainError(std::string(what) + ": points must lie in (0,∞]²");
}

}  // namespace

double cov_B(const ParetoLevyModel& model, const Point& x, const Point& y) {
    return tail_from_copula(model, coord_max(x, y));
}

double cov_Gtilde(const ParetoLevyModel& model, const Point& u, const Point& v) {
    const Point w = coord_max(u, v);
    if (w.x1.is_neg_inf() && w.x2.is_neg_inf()) throw DomainError("cov_Gtilde: (-∞,-∞) is outside ℍ");
    return model.copula(w);
}

double cov_G(const ParetoLevyModel& model, const Point& u, const Point& v) {
    require_positive_quadrant(u, "cov_G");
    require_positive_quadrant(v, "cov_G");
    auto infinite = [](const Point& p) { return p.x1.is_pos_inf() || p.x2.is_pos_inf(); };
    if (infinite(u) || infinite(v)) return 0.0;

    struct Term {
        double weight;
        Point at;
    };
    auto expand = [&](const Point& p) {
        const double a = p.x1.value();
        const double b = p.x2.value();
        return std::array<Term, 3>{
            Term{1.0, p},
            Term{a * a * model.copula.partial(Axis::first, p.x1, p.x2), {p.x1, kNegInf}},
            Term{b * b * model.copula.partial(Axis::second, p.x1, p.x2), {kNegInf, p.x2}},
        };
    };
    const auto eu = expand(u);
    const auto ev = expand(v);
    double acc = 0.0;
    for (const Term& s : eu)
        for (const Term& t : ev) acc += s.weight * t.weight * cov_Gtilde(model, s.at, t.at);
    return acc;
}

double relative_efficiency(const ParetoLevyModel& model, const Point& u) {
    const double denom = cov_Gtilde(model, u, u);
    if (!(denom > 0.0)) throw DomainError("relative_efficiency: Var G̃(u) is zero");
    return cov_G(model, u, u) / denom;
}

std::vector<EfficiencyCheck> check_efficiency_condition(const ParetoLevyModel& model, std::span<const Point> grid) {
    std::vector<EfficiencyCheck> out;
    out.reserve(grid.size());
    for (const Point& u : grid) {
        require_positive_quadrant(u, "check_efficiency_condition");
        EfficiencyCheck c{u};
        if (!u.x1.is_pos_inf() && !u.x2.is_pos_inf()) {
            const double g = model.copula(u);
            c.first = u.x1.value() * model.copula.partial(Axis::first, u.x1, u.x2) + g;
            c.second = u.x2.value() * model.copula.partial(Axis::second, u.x1, u.x2) + g;
        }
        // With an infinite coordinate Γ = 0 and both products vanish.
        out.push_back(c);
    }
    return out;
}

double LimitCovariance::operator()(const Point& a, const Point& b) const {
    switch (kind_) {
        case LimitProcess::B: return cov_B(model_, a, b);
        case LimitProcess::Gtilde: return cov_Gtilde(model_, a, b);
        case LimitProcess::G: return cov_G(model_, a, b);
    }
    return 0.0;
}

std::vector<double> LimitCovariance::matrix(std::span<const Point> points) const {
    const std::size_t n = points.size();
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = (*this)(points[i], points[j]);
    return m;
}

double min_eigenvalue(std::span<const double> matrix, std::size_t n) {
    if (matrix.size() != n * n) throw ContractError("min_eigenvalue: matrix is not n×n");
    if (n == 0) throw ParameterError("min_eigenvalue: empty matrix");
    Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = matrix[i * n + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace plc

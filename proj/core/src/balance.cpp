#include "wenum/balance.hpp"

#include "wenum/enumerator.hpp"
#include "wenum/error.hpp"

#include <sstream>

namespace wenum {

namespace {

QuadRat balance_constant() {
    // (1 + rho)/4, which also equals rho / (1 + rho^2).
    return (QuadRat(1) + QuadRat::rho()) / QuadRat(4);
}

void require_self_dual(const LinearCode& code) {
    switch (code.self_dual_status()) {
        case SelfDualStatus::SelfDual:
            return;
        case SelfDualStatus::DependentRows:
            throw Error(ErrorKind::DependentRows, "generator rows are linearly dependent");
        case SelfDualStatus::NotOrthogonal:
            throw Error(ErrorKind::NotSelfDual, "balance checks require a self-dual code");
    }
}

} // namespace

BalanceReport balance_from_refined(const RefinedDistribution& refined) {
    BalanceReport report;
    report.coordinate = refined.coordinate;
    QuadRat lhs(0), rhs(0), total(0);
    for (int k = 0; k <= refined.n; ++k) {
        uint64_t a0 = refined.with_zero[static_cast<size_t>(k)];
        uint64_t a1 = refined.with_one[static_cast<size_t>(k)];
        if (a1) lhs += QuadRat(Rational(a1), 0) * rho_pow(k - 1);
        if (a0) rhs += QuadRat(Rational(a0), 0) * rho_pow(k + 1);
        if (a0 + a1) total += QuadRat(Rational(a0 + a1), 0) * rho_pow(k);
    }
    report.lhs = lhs;
    report.rhs = rhs;
    report.target = balance_constant() * total;
    report.lhs_eq_rhs = report.lhs == report.rhs;
    report.rhs_eq_target = report.rhs == report.target;
    return report;
}

BalanceReport balance_check(const LinearCode& code, int coordinate) {
    require_self_dual(code);
    return balance_from_refined(refined_distribution(code, coordinate));
}

std::vector<BalanceReport> balance_check_all(const LinearCode& code) {
    require_self_dual(code);
    std::vector<BalanceReport> reports;
    for (const RefinedDistribution& refined : refined_distribution_all(code))
        reports.push_back(balance_from_refined(refined));
    return reports;
}

namespace {

void validate_length8(const WeightDistribution& c) {
    if (c.n != 8) throw Error(ErrorKind::InvalidCandidate, "candidate length must be 8");
    if (c.counts[0] != 1) throw Error(ErrorKind::InvalidCandidate, "candidate needs A_0 = 1");
    for (int k = 1; k <= 7; k += 2)
        if (c.counts[static_cast<size_t>(k)])
            throw Error(ErrorKind::InvalidCandidate, "candidate has odd-weight entries");
    if (!c.symmetric())
        throw Error(ErrorKind::InvalidCandidate, "candidate must satisfy A_k = A_{8-k}");
    if (c.counts[4] % 2 != 0)
        throw Error(ErrorKind::InvalidCandidate, "candidate needs A_4 even");
    if (c.total() != 16)
        throw Error(ErrorKind::InvalidCandidate, "candidate entries must sum to 16");
}

} // namespace

EliminationVerdict eliminate_length8(const WeightDistribution& candidate) {
    validate_length8(candidate);
    Rational a2(Int(candidate.counts[2]));
    Rational a4_half(Int(candidate.counts[4] / 2));

    // The refined table has a single free count y = A_{2,0}:
    //   A_{k,0}: 1, y, A_4/2, A_2 - y, 0      (k = 0,2,4,6,8)
    //   A_{k,1}: 0, A_2 - y, A_4/2, y, 1
    // The balance identity lhs(y) = rhs(y) is affine in y; write
    // lhs - rhs = base + slope*y and solve each sqrt(2)-component.
    QuadRat base = QuadRat(a2, 0) * rho_pow(1) + QuadRat(a4_half, 0) * rho_pow(3) + rho_pow(7) -
                   (rho_pow(1) + QuadRat(a4_half, 0) * rho_pow(5) + QuadRat(a2, 0) * rho_pow(7));
    QuadRat slope = -rho_pow(1) - rho_pow(3) + rho_pow(5) + rho_pow(7);

    EliminationVerdict verdict;
    verdict.candidate = candidate;
    std::optional<Rational> y;
    bool inconsistent = false;
    auto solve_component = [&](const Rational& b, const Rational& s) {
        if (s == 0) {
            if (b != 0) inconsistent = true;
            return;
        }
        Rational yi = -b / s;
        if (y && *y != yi)
            inconsistent = true;
        else
            y = yi;
    };
    solve_component(base.a(), slope.a());
    solve_component(base.b(), slope.b());
    if (inconsistent || !y) {
        verdict.y.reset();
        verdict.survives = false;
        return verdict;
    }
    verdict.y = *y;
    verdict.survives = is_integer(*y) && *y >= 0 && *y <= a2;
    return verdict;
}

std::string EliminationVerdict::describe() const {
    std::ostringstream os;
    os << candidate.to_csv() << " y=";
    if (y)
        os << *y;
    else
        os << "none(inconsistent)";
    os << " " << (survives ? "SURVIVES" : "ELIMINATED");
    return os.str();
}

RefinedDistribution implied_refined_table(const WeightDistribution& candidate, const Rational& y) {
    validate_length8(candidate);
    if (!is_integer(y) || y < 0 || y > Rational(Int(candidate.counts[2])))
        throw Error(ErrorKind::InvalidCandidate, "y must be an integer in 0..A_2");
    uint64_t yi = numerator(y).convert_to<uint64_t>();
    RefinedDistribution refined;
    refined.n = 8;
    refined.coordinate = 0; // any coordinate; the table does not depend on it
    refined.with_zero.assign(9, 0);
    refined.with_one.assign(9, 0);
    refined.with_zero[0] = 1;
    refined.with_zero[2] = yi;
    refined.with_zero[4] = candidate.counts[4] / 2;
    refined.with_zero[6] = candidate.counts[2] - yi;
    refined.with_one[2] = candidate.counts[2] - yi;
    refined.with_one[4] = candidate.counts[4] / 2;
    refined.with_one[6] = yi;
    refined.with_one[8] = 1;
    return refined;
}

} // namespace wenum

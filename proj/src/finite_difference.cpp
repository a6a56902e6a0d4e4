#include "idealproj/finite_difference.hpp"

#include <gmpxx.h>

#include <random>
#include <string>

#include "idealproj/errors.hpp"

namespace idealproj {

namespace {

Rational binomial(unsigned long n, unsigned long k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(c);
}

void check_difference_inputs(const Polynomial& p, const Point& xi,
                             const ExponentVector& i) {
    if (p.is_zero()) throw ValidationError("difference of the zero polynomial");
    if (xi.dimension() != p.dimension() || i.dimension() != p.dimension()) {
        throw DimensionMismatchError(
            "difference inputs have dimensions " + std::to_string(p.dimension()) + ", " +
            std::to_string(xi.dimension()) + ", " + std::to_string(i.dimension()));
    }
}

UniPoly difference_direct(const Polynomial& p, const Point& xi, const ExponentVector& i) {
    const std::size_t d = p.dimension();
    UniPoly total;
    std::vector<int> j(d, 0);
    while (true) {
        long parity = 0;
        Rational weight(1);
        std::vector<int> shift(d);
        for (std::size_t k = 0; k < d; ++k) {
            parity += j[k];
            weight *= binomial(static_cast<unsigned long>(i[k]),
                               static_cast<unsigned long>(j[k]));
            shift[k] = i[k] - j[k];
        }
        if (parity % 2 != 0) weight = -weight;
        total = total + substitute_line(p, xi, ExponentVector(std::move(shift))) * weight;

        // Mixed-radix increment of j over the box 0 <= j <= i.
        std::size_t k = 0;
        while (k < d && j[k] == i[k]) j[k++] = 0;
        if (k == d) break;
        ++j[k];
    }
    return total;
}

UniPoly difference_factored(const Polynomial& p, const Point& xi, const ExponentVector& i) {
    const std::size_t d = p.dimension();
    UniPoly total;
    for (const auto& [alpha, coeff] : p.terms()) {
        UniPoly term = UniPoly::constant(coeff);
        for (std::size_t k = 0; k < d; ++k) {
            UniPoly factor;
            for (int j = 0; j <= i[k]; ++j) {
                // (xi_k + h*(i_k - j))^alpha_k
                UniPoly base(std::vector<Rational>{xi[k], Rational(i[k] - j)});
                Rational w = binomial(static_cast<unsigned long>(i[k]),
                                      static_cast<unsigned long>(j));
                if (j % 2 != 0) w = -w;
                factor = factor + base.pow(static_cast<unsigned long>(alpha[k])) * w;
            }
            term = term * factor;
        }
        total = total + term;
    }
    return total;
}

}  // namespace

Rational binomial_sum(long i, long m) {
    if (m <= 0 || i < m) {
        throw ValidationError("binomial_sum requires i >= m > 0, got i = " +
                              std::to_string(i) + ", m = " + std::to_string(m));
    }
    mpz_class sum(0);
    for (long j = 0; j < i; ++j) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(i),
                     static_cast<unsigned long>(j));
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i - j),
                      static_cast<unsigned long>(m));
        if (j % 2 != 0) {
            sum -= c * power;
        } else {
            sum += c * power;
        }
    }
    return Rational(sum);
}

UniPoly forward_difference_poly(const Polynomial& p, const Point& xi,
                                const ExponentVector& i, DifferenceRoute route) {
    check_difference_inputs(p, xi, i);
    return route == DifferenceRoute::direct ? difference_direct(p, xi, i)
                                            : difference_factored(p, xi, i);
}

DifferenceReport verify_difference_lemmas(const Polynomial& p, const Point& xi,
                                          const ExponentVector& i) {
    check_difference_inputs(p, xi, i);

    DifferenceReport report;
    report.order = i;
    report.order_degree = i.degree();
    report.expansion = difference_direct(p, xi, i);
    report.routes_match = report.expansion == difference_factored(p, xi, i);
    report.derivative_value = p.differentiate(i).evaluate(xi);
    report.support_exceeds_order = less_m(p, i);

    const auto order_degree = static_cast<std::size_t>(report.order_degree);
    report.low_orders_vanish = true;
    for (std::size_t m = 0; m < order_degree; ++m) {
        if (!report.expansion.coefficient(m).is_zero()) {
            report.low_orders_vanish = false;
            break;
        }
    }
    report.matched_derivative =
        report.expansion.coefficient(order_degree) == report.derivative_value;
    report.exact_no_remainder = report.expansion.degree() <= report.order_degree;

    report.ok = report.low_orders_vanish && report.matched_derivative &&
                report.routes_match &&
                (report.exact_no_remainder || report.support_exceeds_order);
    return report;
}

std::vector<DifferenceCase> sample_difference_cases(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    // Plain modulo keeps the stream identical on every platform; the slight
    // bias is irrelevant here.
    auto pick = [&rng](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    std::vector<DifferenceCase> cases;
    cases.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        const auto d = static_cast<std::size_t>(pick(1, 3));

        Polynomial p(d);
        const long terms = pick(1, 5);
        for (long s = 0; s < terms; ++s) {
            std::vector<int> alpha(d);
            for (std::size_t k = 0; k < d; ++k) alpha[k] = static_cast<int>(pick(0, 2));
            long num = 0;
            while (num == 0) num = pick(-9, 9);
            p += Polynomial::monomial(ExponentVector(std::move(alpha)),
                                      Rational(num, pick(1, 4)));
        }
        if (p.is_zero()) p += Polynomial::constant(d, Rational(1));

        std::vector<Rational> coords(d);
        for (std::size_t k = 0; k < d; ++k) coords[k] = Rational(pick(-3, 3), pick(1, 3));

        std::vector<int> order(d);
        for (std::size_t k = 0; k < d; ++k) order[k] = static_cast<int>(pick(0, 3));

        cases.push_back(DifferenceCase{std::move(p), Point(std::move(coords)),
                                       ExponentVector(std::move(order))});
    }
    return cases;
}

}  // namespace idealproj

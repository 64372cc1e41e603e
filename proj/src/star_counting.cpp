#include "starfact/star_counting.hpp"

#include <stdexcept>

#include "starfact/errors.hpp"

namespace starfact {

namespace {

// Words are walked left to right; appending the letter (i n) multiplies
// the running product on the right, which under the convention "right
// factor applied first" is the swap of the images at positions i and n.
template <typename Visit>
void star_dfs(int n, int depth, std::vector<int>& img, std::vector<int>& uses,
              int distinct, Visit&& visit) {
    if (depth == 0) {
        visit(img, distinct == n - 1);
        return;
    }
    for (int i = 1; i < n; ++i) {
        std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(n - 1)]);
        ++uses[static_cast<std::size_t>(i)];
        star_dfs(n, depth - 1, img, uses,
                 distinct + (uses[static_cast<std::size_t>(i)] == 1 ? 1 : 0),
                 visit);
        --uses[static_cast<std::size_t>(i)];
        std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(n - 1)]);
    }
}

int standard_degree(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.ground().size());
    if (sigma.ground() != ground_upto(n))
        throw std::invalid_argument("expected a permutation of {1..n}");
    return n;
}

}  // namespace

void for_each_star_word(int n, int r,
                        const std::function<void(const Permutation&, bool)>& visit) {
    if (n < 2) throw std::invalid_argument("for_each_star_word: needs n >= 2");
    if (r < 0) throw std::invalid_argument("for_each_star_word: negative word length");
    std::vector<int> img = ground_upto(n);
    std::vector<int> uses(static_cast<std::size_t>(n), 0);
    star_dfs(n, r, img, uses, 0, [&](const std::vector<int>& w, bool transitive) {
        visit(Permutation::from_images(ground_upto(n), w), transitive);
    });
}

Integer count_brute(const Permutation& sigma, int r) {
    if (r < 0) throw std::invalid_argument("count_brute: negative factor count");
    const int n = standard_degree(sigma);
    if (n == 1) return (r == 0) ? 1 : 0;  // no generators: only the empty word
    long count = 0;
    std::vector<int> img = ground_upto(n);
    std::vector<int> uses(static_cast<std::size_t>(n), 0);
    star_dfs(n, r, img, uses, 0, [&](const std::vector<int>& w, bool transitive) {
        if (transitive && w == sigma.images()) ++count;
    });
    return Integer(count);
}

std::map<Permutation, Integer> count_brute_table(int n, int r) {
    std::map<Permutation, Integer> out;
    if (n == 1) {
        if (r == 0) out[Permutation::identity({1})] = 1;
        return out;
    }
    std::vector<int> img = ground_upto(n);
    std::vector<int> uses(static_cast<std::size_t>(n), 0);
    star_dfs(n, r, img, uses, 0, [&](const std::vector<int>& w, bool transitive) {
        if (transitive) out[Permutation::from_images(ground_upto(n), w)] += 1;
    });
    return out;
}

GroupAlgebraElement transitive_power(int n, int r) {
    if (n < 1 || r < 0) throw std::invalid_argument("transitive_power: bad arguments");
    return transitive_part(pp_power(xi(n), r), n);
}

Integer count_algebraic(const Permutation& sigma, int r) {
    if (r < 0) throw std::invalid_argument("count_algebraic: negative factor count");
    const int n = standard_degree(sigma);
    if (n == 1) return (r == 0) ? 1 : 0;  // Tr_1 sees no transitive empty product
    Rational c = transitive_power(n, r).coeff(sigma);
    if (!is_integral(c))
        throw InternalMismatch("count_algebraic: non-integral coefficient");
    return c.get_num();
}

Rational g_lambda(const Partition& lambda, int r) {
    if (lambda.empty()) throw EmptyPartition("g_lambda: empty partition");
    if (r < 0) throw std::invalid_argument("g_lambda: negative r");
    const int order = 2 * r + 2;
    const int w = lambda.weight();
    const int len = lambda.length();

    // route 1: z_lambda r! [t^r] phi_lambda(t), through the full series
    Rational via_phi = Rational(z_value(lambda)) *
                       phi_series_sinh(lambda, order).exp_coefficient(r);

    // route 2: (r!/|l|!) (prod l_i) [t^g] f^{|l|-2} prod f(l_i t)
    const int g = r - (w + len - 2);
    Rational via_f(0);
    if (g >= 0) {
        TruncatedSeries f = f_series(order);
        TruncatedSeries prod = int_pow(f, w - 2);
        for (int p : lambda.parts()) prod = prod * scale_arg(f, p);
        via_f = make_rational(factorial(static_cast<unsigned long>(r)),
                              factorial(static_cast<unsigned long>(w))) *
                Rational(product_of_parts(lambda)) * prod.coefficient(g);
    }

    if (via_phi != via_f)
        throw InternalMismatch("g_lambda: series route " + to_string(via_phi) +
                               " != closed-form route " + to_string(via_f) + " at lambda=" +
                               lambda.to_string() + ", r=" + std::to_string(r));
    return via_phi;
}

Integer count_gj(const Partition& lambda, int r) {
    Rational v = g_lambda(lambda, r);
    if (!is_integral(v) || v < 0)
        throw NonIntegerResult("count_gj: formula produced " + to_string(v) + " for lambda=" +
                               lambda.to_string() + ", r=" + std::to_string(r));
    return v.get_num();
}

GroupAlgebraElement pr_class_expansion(int r, int n) {
    if (r < 1 || n < 1) throw std::invalid_argument("pr_class_expansion: need r,n >= 1");
    GroupAlgebraElement out = GroupAlgebraElement::zero(n);
    for (int k = 1; k <= n; ++k) {
        for (const auto& lambda : partitions_of(k)) {
            Rational g = g_lambda(lambda, r);
            if (g != 0) out += g * a_element(lambda, n);
        }
    }
    return out;
}

GroupAlgebraElement jm_power_sum_direct(int r, int n) {
    if (r < 1 || n < 1) throw std::invalid_argument("jm_power_sum_direct: need r,n >= 1");
    GroupAlgebraElement out = GroupAlgebraElement::zero(n);
    for (int i = 1; i <= n; ++i) out += ga_power(classical_jm(i, n), r);
    return out;
}

GroupAlgebraElement biane_m_brute(int n, int r) {
    if (r < 1 || n < 1) throw std::invalid_argument("biane_m_brute: need r,n >= 1");
    return expectation(ga_power(classical_jm(n + 1, n + 1), r), n);
}

GroupAlgebraElement biane_m_formula(int n, int r) {
    if (r < 1 || n < 1) throw std::invalid_argument("biane_m_formula: need r,n >= 1");
    GroupAlgebraElement out = GroupAlgebraElement::zero(n);
    for (int k = 0; k <= n; ++k) {
        for (const auto& lambda : partitions_of(k)) {
            Rational g = g_lambda(union_one(lambda), r);
            if (g != 0) out += g * a_element(lambda, n);
        }
    }
    return out;
}

PPAlgebraElement m_partial(int n, int r) {
    if (r < 1 || n < 1) throw std::invalid_argument("m_partial: need r,n >= 1");
    return e_tilde(pp_power(xi(n + 1), r), n);
}

}  // namespace starfact

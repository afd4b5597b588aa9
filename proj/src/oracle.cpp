#include "polylin/oracle.hpp"

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <set>

#include "polylin/error.hpp"
#include "polylin/lp.hpp"

namespace polylin {

EnumerationGuard EnumerationGuard::from_env() {
    EnumerationGuard g;
    if (const char* env = std::getenv("POLYLIN_GUARD_N"); env && *env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 0) throw InvalidInput("POLYLIN_GUARD_N must be a nonnegative integer");
        g.brute_limit = g.hull_limit = static_cast<int>(std::min(v, 62L));
    }
    return g;
}

namespace {

// Variable i sits at bit n-i, so counting upwards enumerates x in
// lexicographic order with x_1 most significant.
std::uint64_t code_mask(const Monomial& m, int n) {
    std::uint64_t mask = 0;
    for (int i : m.vars()) mask |= std::uint64_t{1} << (n - i);
    return mask;
}

void check_guard(int n, int limit, const char* what) {
    if (n > limit)
        throw GuardExceeded(std::string(what) + " enumerates 2^" + std::to_string(n) +
                            " points; the guard allows n <= " + std::to_string(limit) +
                            " (set POLYLIN_GUARD_N to raise it)");
    if (n > 62) throw GuardExceeded("n above 62 cannot be enumerated");
}

} // namespace

BruteResult brute_force_min(int n, const Objective& a, const EnumerationGuard& guard) {
    if (n < 1) throw InvalidInput("n must be positive");
    check_guard(n, guard.brute_limit, "brute force");

    std::vector<std::uint64_t> masks;
    std::vector<Rational> coefs;
    BigInt den = 1;
    for (const auto& [m, raw] : a) {
        if (m.max_index() > n) throw InvalidInput("objective term " + m.to_string() + " exceeds n");
        Rational c = canonical(raw);
        if (c == 0) continue;
        masks.push_back(code_mask(m, n));
        coefs.push_back(c);
        BigInt d = c.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }

    // Integer numerators over the common denominator; a 64-bit fast path when
    // every partial sum fits.
    std::vector<BigInt> num;
    BigInt total_abs = 0;
    for (const auto& c : coefs) {
        Rational s = c * Rational(den);
        num.push_back(s.get_num());
        total_abs += abs(num.back());
    }
    const std::uint64_t last = (std::uint64_t{1} << n) - 1;
    std::uint64_t best_code = 0;
    BigInt best_value;

    if (total_abs.fits_slong_p()) {
        std::vector<long> small;
        for (const auto& v : num) small.push_back(v.get_si());
        long best = std::numeric_limits<long>::max();
        for (std::uint64_t code = 0;; ++code) {
            long v = 0;
            for (std::size_t k = 0; k < masks.size(); ++k)
                if ((code & masks[k]) == masks[k]) v += small[k];
            if (v < best) { best = v; best_code = code; }
            if (code == last) break;
        }
        best_value = best;
    } else {
        bool have = false;
        for (std::uint64_t code = 0;; ++code) {
            BigInt v = 0;
            for (std::size_t k = 0; k < masks.size(); ++k)
                if ((code & masks[k]) == masks[k]) v += num[k];
            if (!have || v < best_value) { best_value = v; best_code = code; have = true; }
            if (code == last) break;
        }
    }

    BruteResult r;
    r.value = Rational(best_value, den);
    r.value.canonicalize();
    for (int i = 1; i <= n; ++i) r.x.push_back(static_cast<int>((best_code >> (n - i)) & 1));
    for (const auto& [m, c] : a) {
        std::uint64_t mask = code_mask(m, n);
        r.y[m] = (best_code & mask) == mask ? 1 : 0;
    }
    return r;
}

BruteResult brute_force_min(const Linearization& lin, const Objective& a, const EnumerationGuard& guard) {
    for (const auto& [m, c] : a)
        if (!lin.contains(m)) throw InvalidInput("objective term " + m.to_string() + " is not a monomial of L");
    BruteResult r = brute_force_min(lin.n(), a, guard);
    r.y.clear();
    for (const auto& m : lin.monomials()) {
        int v = 1;
        for (int i : m.vars()) v &= r.x[i - 1];
        r.y[m] = v;
    }
    return r;
}

bool hull_membership(int n, std::span<const Monomial> targets, const RationalPoint& point,
                     const EnumerationGuard& guard) {
    if (n < 1) throw InvalidInput("n must be positive");
    check_guard(n, guard.hull_limit, "hull membership");

    std::vector<Monomial> coords;
    for (int i = 1; i <= n; ++i) coords.push_back(Monomial::singleton(i));
    std::vector<Monomial> proper(targets.begin(), targets.end());
    canonicalize(proper);
    for (const auto& t : proper) {
        if (t.max_index() > n) throw InvalidInput("target " + t.to_string() + " exceeds n");
        if (!t.is_singleton()) coords.push_back(t);
    }
    std::vector<Rational> target_value;
    for (const auto& c : coords) {
        auto it = point.find(c);
        if (it == point.end()) throw InvalidInput("point has no coordinate for " + c.to_string());
        target_value.push_back(canonical(it->second));
    }

    std::vector<std::uint64_t> masks;
    for (const auto& c : coords) masks.push_back(code_mask(c, n));
    std::set<std::vector<char>> points;
    const std::uint64_t last = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t code = 0;; ++code) {
        std::vector<char> y(coords.size());
        for (std::size_t k = 0; k < coords.size(); ++k) y[k] = (code & masks[k]) == masks[k];
        points.insert(std::move(y));
        if (code == last) break;
    }

    // exists lambda >= 0 with sum lambda = 1 and sum lambda_x y(x) = point
    LpProblem p;
    p.num_vars = points.size();
    p.objective.assign(p.num_vars, Rational(0));
    p.rows.resize(coords.size() + 1);
    std::size_t j = 0;
    for (const auto& y : points) {
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (y[k]) p.rows[k].terms.emplace_back(j, Rational(1));
        p.rows.back().terms.emplace_back(j, Rational(1));
        ++j;
    }
    for (std::size_t k = 0; k < coords.size(); ++k) {
        p.rows[k].relation = Relation::Equal;
        p.rows[k].rhs = target_value[k];
    }
    p.rows.back().relation = Relation::Equal;
    p.rows.back().rhs = 1;
    return simplex_solve(p).status == LpStatus::Optimal;
}

} // namespace polylin

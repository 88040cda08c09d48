#include "rbt_cli/properties.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>

#include "rbtensor/ht_decomp.hpp"
#include "rbtensor/rb_tensor.hpp"
#include "rbtensor/solvers.hpp"

namespace rbt::cli {

namespace {

using Rng = std::mt19937_64;

constexpr double kThreshold = 1e-9;
// Rank cut-off for every pseudo-inverse in the suite. Constructed low-rank
// inputs carry round-off singular values near 1e-16 * sigma_max (and their
// Gram products near 1e-16 * sigma_max^2), which the shape-scaled default
// does not always clear.
constexpr double kRtol = 1e-10;
const double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// input generators

double gauss(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

RBTensor gaussian(std::size_t n1, std::size_t n2, std::size_t n3, Rng& rng) {
    RBTensor t(n1, n2, n3);
    for (cplx& v : t.part1()) v = {gauss(rng), gauss(rng)};
    for (cplx& v : t.part2()) v = {gauss(rng), gauss(rng)};
    return t;
}

enum class Kind { Full, LowRank, ZeroDivisor };
constexpr Kind kKinds[] = {Kind::Full, Kind::LowRank, Kind::ZeroDivisor};

RBTensor sample(std::size_t n1, std::size_t n2, std::size_t n3, Kind kind, Rng& rng) {
    switch (kind) {
        case Kind::Full:
            return gaussian(n1, n2, n3, rng);
        case Kind::LowRank: {
            const std::size_t r = std::max<std::size_t>(1, std::min(n1, n2) - 1);
            return ht_product(gaussian(n1, r, n3, rng), gaussian(r, n2, n3, rng));
        }
        case Kind::ZeroDivisor: {
            RBTensor t = gaussian(n1, n2, n3, rng);
            std::fill(t.part2().begin(), t.part2().end(), cplx{});
            return t;
        }
    }
    return {};
}

RBTensor hermitian(std::size_t n, std::size_t n3, Rng& rng) {
    const RBTensor h = gaussian(n, n, n3, rng);
    return h + tensor_conj_transpose(h);
}

RBTensor random_unitary(std::size_t n, std::size_t n3, Rng& rng) { return ht_svd(gaussian(n, n, n3, rng)).U; }

// ---------------------------------------------------------------------------
// shorthand

RBTensor mul(const RBTensor& a, const RBTensor& b) { return ht_product(a, b); }
RBTensor mul(const RBTensor& a, const RBTensor& b, const RBTensor& c) { return ht_product(ht_product(a, b), c); }
RBTensor adj(const RBTensor& a) { return tensor_conj_transpose(a); }
RBTensor pinv(const RBTensor& a) { return tensor_pinv(a, kRtol).pinv; }
RBTensor eye(std::size_t n, std::size_t n3) { return identity_tensor(n, n3); }
double norm(const RBTensor& a) { return tensor_frobenius_norm(a); }

double rel(const RBTensor& x, const RBTensor& ref) { return norm(x - ref) / std::max(1.0, norm(ref)); }

template <class... Ts>
double worst(double first, Ts... rest) {
    double m = first;
    for (double v : {rest...}) {
        if (!(v <= m)) m = v;  // NaN wins
    }
    return m;
}

template <class Fn>
double over_kinds(Fn&& fn) {
    double m = 0.0;
    for (Kind k : kKinds) m = worst(m, fn(k));
    return m;
}

RBTensor left_projector(const RBTensor& a) { return eye(a.n2(), a.n3()) - mul(pinv(a), a); }
RBTensor right_projector(const RBTensor& a) { return eye(a.n1(), a.n3()) - mul(a, pinv(a)); }

// ---------------------------------------------------------------------------
// the properties

struct Property {
    const char* name;
    const char* statement;
    double (*run)(const Shape&, Rng&);
};

double product_equivalence(const Shape& s, Rng& rng) {
    double m = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
        const std::size_t n4 = pick(rng, 1, 5);
        const RBTensor a = gaussian(s.n1, s.n2, s.n3, rng);
        const RBTensor b = gaussian(s.n2, n4, s.n3, rng);
        m = worst(m, rel(ht_product(a, b), ht_product_direct(a, b)));
    }
    return m;
}

double associativity(const Shape& s, Rng& rng) {
    const std::size_t n4 = pick(rng, 1, 5);
    const std::size_t n5 = pick(rng, 1, 5);
    const RBTensor a = gaussian(s.n1, s.n2, s.n3, rng);
    const RBTensor b = gaussian(s.n2, n4, s.n3, rng);
    const RBTensor c = gaussian(n4, n5, s.n3, rng);
    return rel(mul(a, mul(b, c)), mul(mul(a, b), c));
}

double distributivity(const Shape& s, Rng& rng) {
    const std::size_t n4 = pick(rng, 1, 5);
    const RBTensor a = gaussian(s.n1, s.n2, s.n3, rng);
    const RBTensor b = gaussian(s.n2, n4, s.n3, rng);
    const RBTensor c = gaussian(s.n2, n4, s.n3, rng);
    const RBTensor d = gaussian(n4, s.n1, s.n3, rng);
    return worst(rel(mul(a, b + c), mul(a, b) + mul(a, c)), rel(mul(b + c, d), mul(b, d) + mul(c, d)));
}

double adjoint_of_product(const Shape& s, Rng& rng) {
    const std::size_t n4 = pick(rng, 1, 5);
    const RBTensor a = gaussian(s.n1, s.n2, s.n3, rng);
    const RBTensor b = gaussian(s.n2, n4, s.n3, rng);
    return rel(adj(mul(a, b)), mul(adj(b), adj(a)));
}

double svd_reconstructs(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const HtSvd f = ht_svd(a);
        return rel(mul(f.U, f.S, adj(f.V)), a);
    });
}

double svd_factors_unitary(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const HtSvd f = ht_svd(sample(s.n1, s.n2, s.n3, k, rng));
        return worst(unitary_residual(f.U), unitary_residual(f.V));
    });
}

double svd_core_f_diagonal(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        return f_diagonal_residual(ht_svd(a).S) / std::max(1.0, norm(a));
    });
}

double norm_identity(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const double direct = norm(a);
        const double via_dft = tensor_frobenius_norm(mode3_dft(a)) / std::sqrt(static_cast<double>(s.n3));
        return std::abs(direct - via_dft) / std::max(1.0, direct);
    });
}

double penrose_conditions(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor x = pinv(a);
        const RBTensor ax = mul(a, x);
        const RBTensor xa = mul(x, a);
        return worst(rel(mul(ax, a), a), rel(mul(xa, x), x), rel(adj(ax), ax), rel(adj(xa), xa));
    });
}

double pinv_paths_agree(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        return rel(pinv_from_ht_svd(ht_svd(a), kRtol), pinv(a));
    });
}

double pinv_involution(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        return rel(pinv(pinv(a)), a);
    });
}

double pinv_commutes_with_adjoint(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        return rel(adj(pinv(a)), pinv(adj(a)));
    });
}

double pinv_of_gram(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor ap = pinv(a);
        const RBTensor ahp = pinv(adj(a));
        return worst(rel(pinv(mul(a, adj(a))), mul(ahp, ap)), rel(pinv(mul(adj(a), a)), mul(ap, ahp)));
    });
}

double pinv_unitary_equivalence(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor p = random_unitary(s.n1, s.n3, rng);
        const RBTensor q = random_unitary(s.n2, s.n3, rng);
        return rel(pinv(mul(p, a, q)), mul(adj(q), pinv(a), adj(p)));
    });
}

// An f-diagonal tensor splits into independent diagonal tubes, so its
// pseudo-inverse is f-diagonal with each tube replaced by the tube's own
// pseudo-inverse; with every tube invertible it is the inverse.
double pinv_of_f_diagonal(const Shape& s, Rng& rng) {
    const std::size_t n = s.n1;
    return over_kinds([&](Kind kind) {
        RBTensor d(n, n, s.n3);
        for (std::size_t i = 0; i < n; ++i) {
            RBTensor tube = gaussian(1, 1, s.n3, rng);
            if (kind == Kind::ZeroDivisor && i == 0) std::fill(tube.part2().begin(), tube.part2().end(), cplx{});
            if (kind == Kind::LowRank && i + 1 == n) tube = RBTensor(1, 1, s.n3);
            for (std::size_t k = 0; k < s.n3; ++k) d.set(i, i, k, tube.at(0, 0, k));
        }
        const RBTensor dp = pinv(d);
        double m = f_diagonal_residual(dp) / std::max(1.0, norm(dp));
        for (std::size_t i = 0; i < n; ++i) {
            RBTensor tube(1, 1, s.n3);
            RBTensor got(1, 1, s.n3);
            for (std::size_t k = 0; k < s.n3; ++k) {
                tube.set(0, 0, k, d.at(i, i, k));
                got.set(0, 0, k, dp.at(i, i, k));
            }
            m = worst(m, rel(got, pinv(tube)));
        }
        if (kind == Kind::Full) m = worst(m, rel(dp, tensor_inverse(d)));
        return m;
    });
}

double pinv_through_gram(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor ap = pinv(a);
        return worst(rel(mul(adj(a), pinv(mul(a, adj(a)))), ap), rel(mul(pinv(mul(adj(a), a)), adj(a)), ap));
    });
}

double gram_recovers_tensor(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor ah = adj(a);
        const RBTensor ahp = pinv(ah);
        return worst(rel(mul(a, ah, ahp), a), rel(mul(ahp, ah, a), a));
    });
}

double gram_recovers_adjoint(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor ah = adj(a);
        const RBTensor ap = pinv(a);
        return worst(rel(mul(ah, a, ap), ah), rel(mul(ap, a, ah), ah));
    });
}

double projectors_via_adjoint(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor ah = adj(a);
        const RBTensor ap = pinv(a);
        const RBTensor ahp = pinv(ah);
        return worst(rel(mul(ahp, ah), mul(a, ap)), rel(mul(ah, ahp), mul(ap, a)));
    });
}

double range_projector_via_gram(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor g = mul(a, adj(a));
        const RBTensor gp = pinv(g);
        const RBTensor p = mul(a, pinv(a));
        return worst(rel(mul(gp, g), p), rel(mul(g, gp), p));
    });
}

double domain_projector_via_gram(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor g = mul(adj(a), a);
        const RBTensor gp = pinv(g);
        const RBTensor p = mul(pinv(a), a);
        return worst(rel(mul(gp, g), p), rel(mul(g, gp), p));
    });
}

// Normal tensors built as U *Ht D *Ht U^* with D f-diagonal; one diagonal
// tube is zeroed so the projectors are not the identity.
double normal_projectors_commute(const Shape& s, Rng& rng) {
    const std::size_t n = s.n1;
    return over_kinds([&](Kind kind) {
        RBTensor d(n, n, s.n3);
        for (std::size_t i = 0; i + (n > 1 ? 1 : 0) < n; ++i) {
            const RBTensor tube = gaussian(1, 1, s.n3, rng);
            for (std::size_t k = 0; k < s.n3; ++k) d.set(i, i, k, tube.at(0, 0, k));
        }
        if (kind == Kind::ZeroDivisor) std::fill(d.part2().begin(), d.part2().end(), cplx{});
        const RBTensor u = random_unitary(n, s.n3, rng);
        const RBTensor a = mul(u, d, adj(u));
        const RBTensor ap = pinv(a);
        const double normality = rel(mul(a, adj(a)), mul(adj(a), a));
        return worst(normality, rel(mul(a, ap), mul(ap, a)));
    });
}

double pinv_projectors_idempotent(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor ap = pinv(a);
        const RBTensor p = mul(a, ap);
        const RBTensor q = mul(ap, a);
        return worst(rel(mul(p, p), p), rel(mul(q, q), q));
    });
}

double hermitian_idempotent_self_pinv(const Shape& s, Rng& rng) {
    const std::size_t n = s.n1;
    return over_kinds([&](Kind k) {
        const std::size_t r = std::max<std::size_t>(1, n - 1);
        const RBTensor q = sample(n, r, s.n3, k, rng);
        const RBTensor a = mul(q, pinv(q));
        return worst(hermitian_residual(a) / std::max(1.0, norm(a)), rel(mul(a, a), a), rel(pinv(a), a));
    });
}

double reverse_order(const RBTensor& a, const RBTensor& b) {
    return rel(pinv(mul(a, b)), mul(pinv(b), pinv(a)));
}

double reverse_order_pinv_pair(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor b = sample(s.n1, s.n2, s.n3, k, rng);
        return reverse_order(pinv(b), b);
    });
}

double reverse_order_adjoint_pair(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor b = sample(s.n1, s.n2, s.n3, k, rng);
        return reverse_order(adj(b), b);
    });
}

double reverse_order_isometry(const Shape& s, Rng& rng) {
    const std::size_t m = std::max(s.n1, s.n2);
    const std::size_t p = std::min(s.n1, s.n2);
    return over_kinds([&](Kind k) {
        const RBTensor a = lateral_slices(random_unitary(m, s.n3, rng), 0, p);
        const RBTensor b = sample(p, pick(rng, 1, 5), s.n3, k, rng);
        return worst(rel(mul(adj(a), a), eye(p, s.n3)), reverse_order(a, b));
    });
}

double reverse_order_co_isometry(const Shape& s, Rng& rng) {
    const std::size_t m = std::max(s.n1, s.n2);
    const std::size_t p = std::min(s.n1, s.n2);
    return over_kinds([&](Kind k) {
        const RBTensor b = adj(lateral_slices(random_unitary(m, s.n3, rng), 0, p));
        const RBTensor a = sample(pick(rng, 1, 5), p, s.n3, k, rng);
        return worst(rel(mul(b, adj(b)), eye(p, s.n3)), reverse_order(a, b));
    });
}

double projectors_annihilate(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const double scale = std::max(1.0, norm(a));
        return worst(norm(mul(a, left_projector(a))) / scale, norm(mul(right_projector(a), a)) / scale);
    });
}

double projectors_annihilate_pinv(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor ap = pinv(a);
        const double scale = std::max(1.0, norm(ap));
        return worst(norm(mul(left_projector(a), ap)) / scale, norm(mul(ap, right_projector(a))) / scale);
    });
}

double projector_adjoint_symmetry(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor l = left_projector(a);
        const RBTensor r = right_projector(a);
        const RBTensor lh = left_projector(adj(a));
        const RBTensor rh = right_projector(adj(a));
        return worst(rel(lh, r), rel(adj(r), r), rel(rh, l), rel(adj(l), l));
    });
}

double projectors_idempotent(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor l = left_projector(a);
        const RBTensor r = right_projector(a);
        return worst(rel(mul(l, l), l), rel(mul(r, r), r));
    });
}

// A projector's nonzero singular values are 1, so an absolute floor keeps a
// slice that is zero up to round-off (L_A of a full-column-rank A) at zero.
double projectors_self_pinv(const Shape& s, Rng& rng) {
    const auto ppinv = [](const RBTensor& p) { return tensor_pinv(p, kRtol, 1e-8).pinv; };
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor l = left_projector(a);
        const RBTensor r = right_projector(a);
        return worst(rel(ppinv(l), l), rel(ppinv(r), r));
    });
}

double projectors_of_gram(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        return worst(rel(left_projector(mul(adj(a), a)), left_projector(a)),
                     rel(right_projector(mul(a, adj(a))), right_projector(a)));
    });
}

SolveOptions solve_options() {
    SolveOptions o;
    o.rtol = kRtol;
    return o;
}

double general_solution(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const std::size_t n4 = pick(rng, 1, 4);
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor b = mul(a, gaussian(s.n2, n4, s.n3, rng));
        const RBTensor y = gaussian(s.n2, n4, s.n3, rng);
        const SolveReport rep = solve_general(a, b, y, solve_options());
        if (!rep.consistent) return kInf;
        return rel(mul(a, rep.solution), b);
    });
}

// A zero-divisor coefficient leaves R_A = I on its e2 part, and a rank-
// deficient one leaves part of the range uncovered: both make a random
// right-hand side unreachable.
double inconsistent_flagged(const Shape& s, Rng& rng) {
    double m = 0.0;
    for (Kind k : {Kind::LowRank, Kind::ZeroDivisor}) {
        if (k == Kind::LowRank && s.n1 == 1) continue;
        RBTensor a = k == Kind::LowRank ? ht_product(gaussian(s.n1, s.n1 - 1, s.n3, rng),
                                                     gaussian(s.n1 - 1, s.n2, s.n3, rng))
                                        : sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor b = gaussian(s.n1, pick(rng, 1, 4), s.n3, rng);
        const SolveReport rep = solve_general(a, b, std::nullopt, solve_options());
        const double witness = norm(mul(right_projector(a), b));
        const double flagged = rep.consistent || rep.failed_condition.empty() ? 1.0 : 0.0;
        m = worst(m, flagged, std::abs(rep.condition_residual - witness) / std::max(1.0, witness));
    }
    return m;
}

double hermitian_solution(const Shape& s, Rng& rng) {
    const std::size_t n = s.n1;
    return over_kinds([&](Kind k) {
        const RBTensor a = sample(n, n, s.n3, k, rng);
        const RBTensor b = mul(a, hermitian(n, s.n3, rng));
        const RBTensor u = hermitian(n, s.n3, rng);
        const SolveReport rep = solve_hermitian(a, b, u, solve_options());
        if (!rep.consistent) return kInf;
        const RBTensor& x = rep.solution;
        return worst(rel(mul(a, x), b), hermitian_residual(x) / std::max(1.0, norm(x)));
    });
}

double least_squares_axb(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const std::size_t n4 = pick(rng, 1, 4);
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor b = gaussian(s.n1, n4, s.n3, rng);
        const SolveReport best = lstsq_axb(a, b, std::nullopt, solve_options());
        double m = best.min_norm ? 0.0 : kInf;
        for (int rep = 0; rep < 5; ++rep) {
            const SolveReport other = lstsq_axb(a, b, gaussian(s.n2, n4, s.n3, rng), solve_options());
            m = worst(m, std::abs(other.residual - best.residual) / std::max(1.0, norm(b)),
                      std::max(0.0, best.solution_norm - other.solution_norm) / std::max(1.0, best.solution_norm));
        }
        return m;
    });
}

double least_squares_xab(const Shape& s, Rng& rng) {
    return over_kinds([&](Kind k) {
        const std::size_t n4 = pick(rng, 1, 4);
        const RBTensor a = sample(s.n1, s.n2, s.n3, k, rng);
        const RBTensor b = gaussian(n4, s.n2, s.n3, rng);
        const SolveReport best = lstsq_xab(a, b, std::nullopt, solve_options());
        double m = best.min_norm ? 0.0 : kInf;
        for (int rep = 0; rep < 5; ++rep) {
            const SolveReport other = lstsq_xab(a, b, gaussian(n4, s.n1, s.n3, rng), solve_options());
            m = worst(m, std::abs(other.residual - best.residual) / std::max(1.0, norm(b)),
                      std::max(0.0, best.solution_norm - other.solution_norm) / std::max(1.0, best.solution_norm));
        }
        return m;
    });
}

double inverse_two_sided(const Shape& s, Rng& rng) {
    const std::size_t n = s.n1;
    const RBTensor a = gaussian(n, n, s.n3, rng);
    const RBTensor inv = tensor_inverse(a);
    return worst(rel(mul(a, inv), eye(n, s.n3)), rel(mul(inv, a), eye(n, s.n3)), rel(pinv(a), inv));
}

const Property kProperties[] = {
    {"ht_product_matches_block_circulant", "DFT-slice product equals Fold(circ(A) Vec(B))", product_equivalence},
    {"ht_product_associative", "(A*B)*C = A*(B*C)", associativity},
    {"ht_product_distributive", "A*(B+C) = A*B + A*C and (B+C)*D = B*D + C*D", distributivity},
    {"adjoint_reverses_product", "(A*B)^H = B^H * A^H", adjoint_of_product},
    {"svd_reconstructs", "A = U*S*V^H", svd_reconstructs},
    {"svd_factors_unitary", "U and V unitary", svd_factors_unitary},
    {"svd_core_f_diagonal", "S f-diagonal", svd_core_f_diagonal},
    {"norm_matches_dft_domain", "||A||_F = ||DFT(A)||_F / sqrt(n3)", norm_identity},
    {"pinv_penrose_conditions", "AXA = A, XAX = X, AX and XA Hermitian", penrose_conditions},
    {"pinv_paths_agree", "slice-wise pinv equals V*S^+*U^H", pinv_paths_agree},
    {"pinv_involution", "(A^+)^+ = A", pinv_involution},
    {"pinv_commutes_with_adjoint", "(A^+)^H = (A^H)^+", pinv_commutes_with_adjoint},
    {"pinv_of_gram_products", "(A*A^H)^+ = (A^H)^+*A^+ and (A^H*A)^+ = A^+*(A^H)^+", pinv_of_gram},
    {"pinv_unitary_equivalence", "(P*A*Q)^+ = Q^H*A^+*P^H for unitary P, Q", pinv_unitary_equivalence},
    {"pinv_of_f_diagonal", "f-diagonal A has f-diagonal A^+ built tube by tube", pinv_of_f_diagonal},
    {"pinv_through_gram", "A^+ = A^H*(A*A^H)^+ = (A^H*A)^+*A^H", pinv_through_gram},
    {"gram_recovers_tensor", "A = A*A^H*(A^H)^+ = (A^H)^+*A^H*A", gram_recovers_tensor},
    {"gram_recovers_adjoint", "A^H = A^H*A*A^+ = A^+*A*A^H", gram_recovers_adjoint},
    {"projectors_via_adjoint_pinv", "A*A^+ = (A^H)^+*A^H and A^+*A = A^H*(A^H)^+", projectors_via_adjoint},
    {"range_projector_via_gram", "A*A^+ = (A*A^H)^+*A*A^H = A*A^H*(A*A^H)^+", range_projector_via_gram},
    {"domain_projector_via_gram", "A^+*A = (A^H*A)^+*A^H*A = A^H*A*(A^H*A)^+", domain_projector_via_gram},
    {"normal_tensor_projectors_commute", "A*A^H = A^H*A implies A*A^+ = A^+*A", normal_projectors_commute},
    {"pinv_projectors_idempotent", "A*A^+ and A^+*A idempotent", pinv_projectors_idempotent},
    {"hermitian_idempotent_is_own_pinv", "A = A^H = A*A implies A^+ = A", hermitian_idempotent_self_pinv},
    {"reverse_order_when_a_is_pinv_of_b", "A = B^+ implies (A*B)^+ = B^+*A^+", reverse_order_pinv_pair},
    {"reverse_order_when_a_is_adjoint_of_b", "A = B^H implies (A*B)^+ = B^+*A^+", reverse_order_adjoint_pair},
    {"reverse_order_when_a_is_isometry", "A^H*A = I implies (A*B)^+ = B^+*A^+", reverse_order_isometry},
    {"reverse_order_when_b_is_co_isometry", "B*B^H = I implies (A*B)^+ = B^+*A^+", reverse_order_co_isometry},
    {"projectors_annihilate_tensor", "A*L_A = O and R_A*A = O", projectors_annihilate},
    {"projectors_annihilate_pinv", "L_A*A^+ = O and A^+*R_A = O", projectors_annihilate_pinv},
    {"projector_adjoint_symmetry", "L_{A^H} = R_A^H = R_A and R_{A^H} = L_A^H = L_A", projector_adjoint_symmetry},
    {"projectors_idempotent", "L_A*L_A = L_A and R_A*R_A = R_A", projectors_idempotent},
    {"projectors_are_own_pinv", "L_A^+ = L_A and R_A^+ = R_A", projectors_self_pinv},
    {"projectors_of_gram_products", "L_A = L_{A^H*A} and R_A = R_{A*A^H}", projectors_of_gram},
    {"general_solution_solves_consistent_system", "X = A^+*B + L_A*Y solves A*X = B", general_solution},
    {"inconsistent_system_is_flagged", "R_A*B != O is reported with its residual", inconsistent_flagged},
    {"hermitian_solution_solves", "Hermitian X with A*X = B when both conditions hold", hermitian_solution},
    {"least_squares_axb_minimal_norm", "A^+*B minimises ||X|| among least-squares solutions of A*X = B",
     least_squares_axb},
    {"least_squares_xab_minimal_norm", "B*A^+ minimises ||X|| among least-squares solutions of X*A = B",
     least_squares_xab},
    {"inverse_is_two_sided", "A*A^-1 = A^-1*A = I and A^+ = A^-1", inverse_two_sided},
};

}  // namespace

std::vector<std::string> property_names() {
    std::vector<std::string> names;
    for (const Property& p : kProperties) names.emplace_back(p.name);
    return names;
}

std::vector<PropertyResult> run_property_suite(const SuiteOptions& opt,
                                               const std::function<void(const PropertyResult&)>& on_result) {
    std::vector<PropertyResult> results;
    std::uint64_t index = 0;
    for (const Property& p : kProperties) {
        PropertyResult res;
        res.name = p.name;
        res.statement = p.statement;
        res.threshold = kThreshold;
        for (std::size_t si = 0; si < opt.shapes.size(); ++si) {
            const Shape& shape = opt.shapes[si];
            std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                              static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(si)};
            Rng rng(seq);
            try {
                res.max_residual = worst(res.max_residual, p.run(shape, rng));
            } catch (const std::exception& e) {
                if (res.error.empty()) res.error = format_shape(shape) + ": " + e.what();
                res.max_residual = kInf;
            }
            ++res.cases;
        }
        if (on_result) on_result(res);
        results.push_back(std::move(res));
        ++index;
    }
    return results;
}

}  // namespace rbt::cli

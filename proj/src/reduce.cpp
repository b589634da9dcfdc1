#include "museq/reduce.hpp"

#include <algorithm>
#include <numeric>

namespace museq {
namespace reduce {

namespace {

// Nearest integer to a rational, halves toward +infinity.
Integer round_q(const Rational& q) {
    Rational t = q + Rational(1, 2);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return fl;
}

void check_basis(const IMat& basis) {
    if (basis.empty()) throw InputError("basis: empty");
    size_t m = basis[0].size();
    if (m < basis.size()) throw InputError("basis: more rows than columns");
    for (const auto& row : basis)
        if (row.size() != m) throw InputError("basis: ragged rows");
}

struct Gso {
    QMat mu;   // mu[i][j], j < i
    QVec B;    // |b*_i|^2
};

Gso gram_schmidt(const IMat& basis) {
    size_t n = basis.size(), m = basis[0].size();
    Gso g;
    g.mu.assign(n, QVec(n, Rational(0)));
    g.B.assign(n, Rational(0));
    QMat bstar(n, QVec(m, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t c = 0; c < m; ++c) bstar[i][c] = Rational(basis[i][c]);
        for (size_t j = 0; j < i; ++j) {
            Rational num(0);
            for (size_t c = 0; c < m; ++c) num += Rational(basis[i][c]) * bstar[j][c];
            if (sgn(g.B[j]) == 0) throw InputError("basis: linearly dependent rows");
            g.mu[i][j] = num / g.B[j];
            for (size_t c = 0; c < m; ++c) bstar[i][c] -= g.mu[i][j] * bstar[j][c];
        }
        Rational nb(0);
        for (size_t c = 0; c < m; ++c) nb += bstar[i][c] * bstar[i][c];
        g.B[i] = nb;
    }
    if (sgn(g.B[n - 1]) == 0) throw InputError("basis: linearly dependent rows");
    return g;
}

}  // namespace

IMat kernel_basis(const IVec& weights) {
    if (weights.empty() || weights[0] != 1)
        throw InputError("kernel_basis: weights[0] must be 1");
    size_t n = weights.size() - 1;
    if (n == 0) throw InputError("kernel_basis: need at least two weights");
    IMat b(n, IVec(n + 1, Integer(0)));
    for (size_t i = 1; i <= n; ++i) {
        b[i - 1][0] = -weights[i];
        b[i - 1][i] = 1;
    }
    return b;
}

IMat gram_of(const IMat& basis) {
    check_basis(basis);
    size_t n = basis.size();
    IMat g(n, IVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j) g[i][j] = g[j][i] = dot(basis[i], basis[j]);
    return g;
}

Integer int_determinant(IMat m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InputError("int_determinant: not square");
    // Bareiss: exact divisions only.
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

DetCheck determinant_identity_check(const IVec& weights) {
    DetCheck out;
    out.via_gram = int_determinant(gram_of(kernel_basis(weights)));
    out.via_sum = 0;
    for (const auto& w : weights) out.via_sum += w * w;
    out.equal = (out.via_gram == out.via_sum);
    return out;
}

IMat lll_reduce(IMat basis, const Rational& delta) {
    check_basis(basis);
    if (delta <= Rational(1, 4) || delta >= 1)
        throw InputError("lll_reduce: delta must lie in (1/4, 1)");
    size_t n = basis.size();
    if (n == 1) return basis;
    Gso g = gram_schmidt(basis);
    size_t k = 1;
    while (k < n) {
        bool changed = false;
        for (size_t j = k; j-- > 0;) {
            Integer q = round_q(g.mu[k][j]);
            if (q != 0) {
                for (size_t c = 0; c < basis[k].size(); ++c)
                    basis[k][c] -= q * basis[j][c];
                changed = true;
            }
        }
        if (changed) g = gram_schmidt(basis);
        Rational lhs = g.B[k];
        Rational rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.B[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            g = gram_schmidt(basis);
            k = (k > 1) ? k - 1 : 1;
        }
    }
    return basis;
}

namespace {

struct SvpSearch {
    const IMat* basis;
    Gso g;
    size_t n;
    uint64_t nodes = 0;
    uint64_t budget;
    Rational best;          // current minimum (exact integer value as rational)
    IVec best_coeff;        // coefficient vector achieving it, sign-normalized
    IVec x;                 // work vector, levels n-1..0 filled top-down

    static IVec normalized(IVec v) {
        for (const auto& e : v) {
            if (e > 0) break;
            if (e < 0) {
                for (auto& f : v) f = -f;
                break;
            }
        }
        return v;
    }

    void offer(const Rational& norm) {
        IVec cand = normalized(x);
        if (norm < best || (norm == best && cand < best_coeff)) {
            best = norm;
            best_coeff = cand;
        }
    }

    // Levels run from i = n-1 down to 0; `partial` is the norm contribution
    // of levels > i.
    void descend(size_t i, const Rational& partial, bool all_zero) {
        // center of level i given the choices above it
        Rational c(0);
        for (size_t j = i + 1; j < n; ++j) c -= g.mu[j][i] * Rational(x[j]);
        Integer x0 = round_q(c);
        // zig-zag around the center; each direction stops once its
        // contribution alone exceeds the best norm
        for (int dir = 0; dir < 2; ++dir) {
            Integer step = (dir == 0) ? Integer(0) : Integer(1);
            while (true) {
                Integer xi = (dir == 0) ? Integer(x0 - step) : Integer(x0 + step);
                Rational y = Rational(xi) - c;
                Rational contrib = partial + y * y * g.B[i];
                if (contrib > best) break;
                if (++nodes > budget)
                    throw BudgetExceeded("shortest_vector: enumeration budget exhausted");
                x[i] = xi;
                bool az = all_zero && xi == 0;
                if (i == 0) {
                    if (!az) offer(contrib);
                } else {
                    descend(i - 1, contrib, az);
                }
                step += 1;
            }
        }
        x[i] = 0;
    }
};

}  // namespace

SvpCertificate shortest_vector(const IMat& basis, uint64_t node_budget) {
    check_basis(basis);
    IMat red = lll_reduce(basis);
    size_t n = red.size(), m = red[0].size();

    SvpSearch s;
    s.basis = &red;
    s.g = gram_schmidt(red);
    s.n = n;
    s.budget = node_budget;
    s.x.assign(n, Integer(0));
    // seed with the shortest reduced basis row
    size_t seed = 0;
    Integer seed_norm = norm2(red[0]);
    for (size_t i = 1; i < n; ++i) {
        Integer nn = norm2(red[i]);
        if (nn < seed_norm) { seed_norm = nn; seed = i; }
    }
    s.best = Rational(seed_norm);
    s.best_coeff.assign(n, Integer(0));
    s.best_coeff[seed] = 1;

    s.descend(n - 1, Rational(0), true);

    SvpCertificate cert;
    cert.nodes = s.nodes;
    Rational bn = s.best;
    bn.canonicalize();
    if (bn.get_den() != 1) throw std::logic_error("shortest_vector: non-integral norm");
    cert.minimum = bn.get_num();
    cert.witness.assign(m, Integer(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t c = 0; c < m; ++c) cert.witness[c] += s.best_coeff[i] * red[i][c];
    cert.witness = SvpSearch::normalized(cert.witness);
    return cert;
}

std::optional<Integer> minimum_brute(const IVec& weights, const Integer& cap,
                                     uint64_t node_budget) {
    if (cap < 1) throw InputError("minimum_brute: cap >= 1");
    size_t N = weights.size();
    if (N < 2) throw InputError("minimum_brute: need at least two weights");

    // process heaviest coordinates first: the Cauchy-Schwarz cut bites early
    std::vector<size_t> ord(N);
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](size_t a, size_t b) {
        return abs(weights[a]) > abs(weights[b]);
    });
    IVec w2_suffix(N + 1, Integer(0));  // sum of w^2 over positions >= d
    for (size_t d = N; d-- > 0;)
        w2_suffix[d] = w2_suffix[d + 1] + weights[ord[d]] * weights[ord[d]];

    Integer best = cap;  // searching for norms < best
    uint64_t nodes = 0;

    // depth d, accumulated norm `used`, running dot `dotv`
    auto rec = [&](auto&& self, size_t d, const Integer& used, const Integer& dotv,
                   bool zero_prefix) -> void {
        if (++nodes > node_budget)
            throw BudgetExceeded("minimum_brute: node budget exhausted");
        Integer room = best - 1 - used;  // max extra norm allowed
        if (room < 0) return;
        // remaining coordinates cannot cancel the dot: |dot| <= sqrt(S*room)
        if (dotv * dotv > w2_suffix[d] * room) return;
        if (d == N) {
            if (!zero_prefix && dotv == 0 && used < best) best = used;
            return;
        }
        Integer r = isqrt_floor(room);
        long hi = r.get_si();
        long lo = zero_prefix ? 0 : -hi;  // half symmetry: z ~ -z
        for (long c = lo; c <= hi; ++c)
            self(self, d + 1, used + Integer(c) * c, dotv + weights[ord[d]] * c,
                 zero_prefix && c == 0);
    };
    rec(rec, 0, Integer(0), Integer(0), true);

    if (best < cap) return best;
    return std::nullopt;
}

}  // namespace reduce
}  // namespace museq

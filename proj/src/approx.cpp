#include "museq/approx.hpp"

#include <fstream>
#include <sstream>

#include "museq/density.hpp"
#include "museq/reduce.hpp"

namespace museq {
namespace approx {

RMat cholesky(const QMat& G) {
    size_t n = G.size();
    if (n == 0) throw InputError("cholesky: empty matrix");
    for (size_t i = 0; i < n; ++i) {
        if (G[i].size() != n) throw InputError("cholesky: not square");
        for (size_t j = 0; j < i; ++j)
            if (G[i][j] != G[j][i]) throw InputError("cholesky: not symmetric");
    }
    RMat L(n, std::vector<Real>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j <= i; ++j) {
            Real acc(G[i][j]);
            for (size_t k = 0; k < j; ++k) acc = acc - L[i][k] * L[j][k];
            if (j == i) {
                if (acc.sign() <= 0)
                    throw InputError("cholesky: non-positive pivot at index " +
                                     std::to_string(i));
                L[i][i] = sqrt(acc, Rnd::Nearest);
            } else {
                L[i][j] = acc / L[j][j];
            }
        }
    }
    return L;
}

IMat build_B(const IMat& L_rounded) {
    size_t n = L_rounded.size();
    IMat B(n, IVec(n + 1, Integer(0)));
    for (size_t i = 0; i < n; ++i) {
        if (L_rounded[i].size() < i + 1) throw InputError("build_B: bad triangular shape");
        for (size_t j = 0; j <= i; ++j) B[i][j] = L_rounded[i][j];
        B[i][i + 1] = 1;
    }
    return B;
}

IVec kernel_vector(const IMat& B) {
    size_t n = B.size();
    IVec v(n + 1);
    v[0] = 1;
    // row i: sum_{j<=i} B[i][j] v[j] + v[i+1] = 0
    for (size_t i = 0; i < n; ++i) {
        Integer acc = 0;
        for (size_t j = 0; j <= i; ++j) acc += B[i][j] * v[j];
        v[i + 1] = -acc;
    }
    return v;
}

ApproxResult approximate(const QMat& G, const Integer& kappa) {
    if (kappa < 1) throw InputError("approximate: kappa >= 1");
    ApproxResult out;
    out.kappa = kappa;
    out.L = cholesky(G);
    size_t n = G.size();

    Real kr(kappa);
    out.L_rounded.assign(n, IVec());
    for (size_t i = 0; i < n; ++i) {
        out.L_rounded[i].resize(i + 1);
        for (size_t j = 0; j <= i; ++j)
            out.L_rounded[i][j] = (kr * out.L[i][j]).round_half_up();
    }
    out.B = build_B(out.L_rounded);
    out.v = kernel_vector(out.B);
    out.s.reserve(n + 1);
    for (const auto& e : out.v) out.s.push_back(abs(e));

    // exact max-norm of (1/kappa^2) B B^t - G
    IMat bbt = reduce::gram_of(out.B);
    Rational k2(kappa * kappa);
    Rational maxerr(0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational d = Rational(bbt[i][j]) / k2 - G[i][j];
            d = abs(d);
            if (d > maxerr) maxerr = d;
        }
    out.error_exact = maxerr;
    out.error = Real(maxerr);
    return out;
}

std::vector<SweepRow> convergence_sweep(const QMat& G, const std::vector<Integer>& kappas,
                                        uint64_t svp_budget) {
    std::vector<SweepRow> rows;
    long n = static_cast<long>(G.size());
    for (const auto& kappa : kappas) {
        ApproxResult res = approximate(G, kappa);
        SweepRow row;
        row.kappa = kappa;
        row.error = res.error_exact;
        // s already has the 1 in front (s[0] = |v[0]| = 1)
        bool positive = true;
        for (const auto& e : res.s)
            if (e < 1) positive = false;
        if (!positive) {
            row.note = "degenerate-weights";
        } else {
            try {
                auto cert = reduce::shortest_vector(reduce::kernel_basis(res.s), svp_budget);
                Integer det = 0;
                for (const auto& e : res.s) det += e * e;
                row.minimum = cert.minimum;
                row.determinant = det;
                row.delta = density::center_density(cert.minimum, det, n);
                row.Delta = density::density_from_center(*row.delta, n);
            } catch (const BudgetExceeded& e) {
                row.note = e.what();
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

QMat load_gram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    size_t n = 0;
    if (!(in >> n) || n == 0) throw InputError("gram file: first token must be n >= 1");
    QMat G(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw InputError("gram file: not enough entries");
            G[i][j] = parse_rational(tok);
        }
    return G;
}

}  // namespace approx
}  // namespace museq

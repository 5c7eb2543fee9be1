#include "matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fanlab {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_int_columns(const std::vector<IntVec>& cols, std::size_t rows) {
    RatMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RatVec RatMatrix::row(std::size_t i) const {
    RatVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

RatVec RatMatrix::col(std::size_t j) const {
    RatVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const Rat& q : e_)
        if (sgn(q) != 0) return false;
    return true;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix IntMatrix::to_rat() const {
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    return m;
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in mul");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in mul");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatVec mul(const RatMatrix& a, const RatVec& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("shape mismatch in mul");
    RatVec r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * v[j];
    return r;
}

IntVec mul(const IntMatrix& a, const IntVec& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("shape mismatch in mul");
    IntVec r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * v[j];
    return r;
}

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivot_cols) {
    RatMatrix a = m;
    if (pivot_cols) pivot_cols->clear();
    std::size_t pr = 0;  // next pivot row
    for (std::size_t pc = 0; pc < a.cols() && pr < a.rows(); ++pc) {
        std::size_t sel = pr;
        while (sel < a.rows() && sgn(a.at(sel, pc)) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(sel, j));
        const Rat inv = 1 / a.at(pr, pc);
        for (std::size_t j = pc; j < a.cols(); ++j) a.at(pr, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pr || sgn(a.at(i, pc)) == 0) continue;
            const Rat f = a.at(i, pc);
            for (std::size_t j = pc; j < a.cols(); ++j) a.at(i, j) -= f * a.at(pr, j);
        }
        if (pivot_cols) pivot_cols->push_back(pc);
        ++pr;
    }
    return a;
}

std::size_t rank_q(const RatMatrix& m) {
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

std::size_t rank_of_vectors(const std::vector<IntVec>& vecs, std::size_t dim) {
    if (vecs.empty()) return 0;
    return rank_q(RatMatrix::from_int_rows(vecs, dim));
}

RatMatrix kernel_basis_q(const RatMatrix& m) {
    std::vector<std::size_t> piv;
    const RatMatrix r = rref(m, &piv);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : piv) is_pivot[p] = true;

    std::vector<RatVec> basis;  // one vector per free column
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(n);
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r.at(k, f);
        basis.push_back(std::move(v));
    }

    // The vectors above are already independent; reduce them to column
    // echelon form (rref of the transpose) so the basis is canonical.
    if (basis.empty()) return RatMatrix(n, 0);
    const RatMatrix reduced = rref(RatMatrix::from_rows(basis, n));
    return reduced.transposed();
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    RatMatrix a = m;
    const std::size_t n = a.rows();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && sgn(a.at(sel, c)) == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(sel, j));
            det = -det;
        }
        det *= a.at(c, c);
        const Rat inv = 1 / a.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(a.at(i, c)) == 0) continue;
            const Rat f = a.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return det;
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("shape mismatch in solve");
    // Eliminate on [a | b] and read solutions off the echelon form.
    RatMatrix aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    std::vector<std::size_t> piv;
    const RatMatrix r = rref(aug, &piv);
    // A pivot in the b-block means that column of b is not in the span.
    for (std::size_t p : piv)
        if (p >= a.cols()) return std::nullopt;
    RatMatrix x(a.cols(), b.cols());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(piv[k], j) = r.at(k, a.cols() + j);
    return x;
}

namespace {

struct SnfState {
    IntMatrix a, left, right;

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (std::size_t c = 0; c < left.cols(); ++c) std::swap(left.at(i, c), left.at(j, c));
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (std::size_t r = 0; r < right.rows(); ++r) std::swap(right.at(r, i), right.at(r, j));
    }
    // row i -= q * row t
    void row_sub(std::size_t i, const Int& q, std::size_t t) {
        if (sgn(q) == 0) return;
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) -= q * a.at(t, c);
        for (std::size_t c = 0; c < left.cols(); ++c) left.at(i, c) -= q * left.at(t, c);
    }
    // col j -= q * col t
    void col_sub(std::size_t j, const Int& q, std::size_t t) {
        if (sgn(q) == 0) return;
        for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, j) -= q * a.at(r, t);
        for (std::size_t r = 0; r < right.rows(); ++r) right.at(r, j) -= q * right.at(r, t);
    }
    void row_add(std::size_t i, std::size_t t) {
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) += a.at(t, c);
        for (std::size_t c = 0; c < left.cols(); ++c) left.at(i, c) += left.at(t, c);
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (std::size_t c = 0; c < left.cols(); ++c) left.at(i, c) = -left.at(i, c);
    }

    // Smallest nonzero |entry| in the submatrix from (t, t); ties broken by
    // lowest row, then lowest column, so the reduction is deterministic.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                if (sgn(a.at(i, j)) == 0) continue;
                Int v = abs(a.at(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfState s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    const std::size_t nd = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < nd; ++t) {
        for (;;) {
            std::size_t pi = 0, pj = 0;
            if (!s.find_pivot(t, pi, pj)) goto done;  // rest of matrix is zero
            s.row_swap(t, pi);
            s.col_swap(t, pj);

            // Clear column t below the pivot and row t right of it using
            // floor division; nonzero remainders shrink the pivot next pass.
            bool clean = true;
            for (std::size_t i = t + 1; i < s.a.rows(); ++i) {
                if (sgn(s.a.at(i, t)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s.a.at(i, t).get_mpz_t(), s.a.at(t, t).get_mpz_t());
                s.row_sub(i, q, t);
                if (sgn(s.a.at(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < s.a.cols(); ++j) {
                if (sgn(s.a.at(t, j)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s.a.at(t, j).get_mpz_t(), s.a.at(t, t).get_mpz_t());
                s.col_sub(j, q, t);
                if (sgn(s.a.at(t, j)) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide every remaining entry; if not, fold the
            // offending row into row t and keep reducing.
            bool divides = true;
            for (std::size_t i = t + 1; i < s.a.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < s.a.cols() && divides; ++j) {
                    if (sgn(s.a.at(i, j)) == 0) continue;
                    if (!mpz_divisible_p(s.a.at(i, j).get_mpz_t(), s.a.at(t, t).get_mpz_t())) {
                        s.row_add(t, i);
                        divides = false;
                    }
                }
            if (divides) break;
        }
        if (sgn(s.a.at(t, t)) < 0) s.row_negate(t);
    }
done:
    SnfResult r;
    r.diag.resize(nd);
    for (std::size_t t = 0; t < nd; ++t) {
        if (sgn(s.a.at(t, t)) < 0) s.row_negate(t);  // unreachable after a full pass; kept for the early exit
        r.diag[t] = s.a.at(t, t);
    }
    r.left = std::move(s.left);
    r.right = std::move(s.right);
    return r;
}

std::string AbelianGroup::to_string() const {
    if (trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << " + ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        out << "Z";
    } else if (free_rank > 1) {
        sep();
        out << "Z^" << free_rank;
    }
    // Group equal factors: Z/2 + Z/2 prints as (Z/2)^2.
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        sep();
        if (j - i > 1)
            out << "(Z/" << torsion[i].get_str() << ")^" << (j - i);
        else
            out << "Z/" << torsion[i].get_str();
        i = j;
    }
    return out.str();
}

AbelianGroup cokernel_structure(const IntMatrix& m) {
    const SnfResult snf = smith_normal_form(m);
    AbelianGroup g;
    std::size_t nonzero = 0;
    for (const Int& d : snf.diag) {
        if (sgn(d) == 0) continue;
        ++nonzero;
        if (d > 1) g.torsion.push_back(d);
    }
    g.free_rank = m.rows() - nonzero;
    return g;
}

AbelianGroup abelian_from_cyclic(std::vector<Int> orders, std::size_t free_rank) {
    AbelianGroup g;
    g.free_rank = free_rank;

    // Collect prime-power exponents per prime across all cyclic factors.
    std::map<Int, std::vector<unsigned long>> exps;
    for (Int n : orders) {
        n = abs(n);
        if (sgn(n) == 0) {
            ++g.free_rank;
            continue;
        }
        if (n == 1) continue;
        Int rest = n;
        for (Int p = 2; p * p <= rest;) {
            if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
                unsigned long e = 0;
                while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
                    rest /= p;
                    ++e;
                }
                exps[p].push_back(e);
            }
            p += (p == 2) ? 1 : 2;
        }
        if (rest > 1) exps[rest].push_back(1);
    }

    // Invariant factor k (from the top) multiplies together the k-th largest
    // exponent of every prime.
    std::size_t chain_len = 0;
    for (auto& [p, es] : exps) {
        std::sort(es.begin(), es.end(), std::greater<>());
        chain_len = std::max(chain_len, es.size());
    }
    std::vector<Int> factors(chain_len, Int(1));
    for (auto& [p, es] : exps)
        for (std::size_t k = 0; k < es.size(); ++k) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), es[k]);
            factors[k] *= pe;
        }
    // factors is descending; invariant-factor convention is ascending.
    std::reverse(factors.begin(), factors.end());
    g.torsion = std::move(factors);
    return g;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<Int> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return abelian_from_cyclic(std::move(orders), a.free_rank + b.free_rank);
}

AbelianGroup tensor_with_cyclic(const AbelianGroup& a, const Int& n) {
    std::vector<Int> orders;
    for (std::size_t i = 0; i < a.free_rank; ++i) orders.push_back(n);
    for (const Int& m : a.torsion) orders.push_back(gcd_int(m, n));
    return abelian_from_cyclic(std::move(orders), 0);
}

}  // namespace fanlab

#include "ccgraph/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ccgraph/errors.hpp"

namespace ccgraph {

MatrixRep zero_matrix(std::uint32_t n) { return MatrixRep(n); }

MatrixRep identity_matrix(const FiniteField&, std::uint32_t n) {
    MatrixRep m(n);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatrixRep jordan_block(std::uint32_t l) {
    MatrixRep m(l);
    for (std::uint32_t i = 0; i + 1 < l; ++i) m.at(i, i + 1) = 1;
    return m;
}

MatrixRep diag_join(const MatrixRep& a, const MatrixRep& b) {
    MatrixRep m(a.size + b.size);
    for (std::uint32_t i = 0; i < a.size; ++i)
        for (std::uint32_t j = 0; j < a.size; ++j) m.at(i, j) = a.at(i, j);
    for (std::uint32_t i = 0; i < b.size; ++i)
        for (std::uint32_t j = 0; j < b.size; ++j)
            m.at(a.size + i, a.size + j) = b.at(i, j);
    return m;
}

namespace {

void require_same_size(const MatrixRep& a, const MatrixRep& b) {
    if (a.size != b.size) throw std::invalid_argument("matrix size mismatch");
}

} // namespace

MatrixRep mat_add(const FiniteField& f, const MatrixRep& a, const MatrixRep& b) {
    require_same_size(a, b);
    MatrixRep out(a.size);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        out.entries[i] = f.add(a.entries[i], b.entries[i]);
    return out;
}

MatrixRep mat_sub(const FiniteField& f, const MatrixRep& a, const MatrixRep& b) {
    require_same_size(a, b);
    MatrixRep out(a.size);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        out.entries[i] = f.sub(a.entries[i], b.entries[i]);
    return out;
}

MatrixRep mat_neg(const FiniteField& f, const MatrixRep& a) {
    MatrixRep out(a.size);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        out.entries[i] = f.neg(a.entries[i]);
    return out;
}

MatrixRep mat_mul(const FiniteField& f, const MatrixRep& a, const MatrixRep& b) {
    require_same_size(a, b);
    std::uint32_t n = a.size;
    MatrixRep out(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t k = 0; k < n; ++k) {
            std::uint32_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j) {
                std::uint32_t bkj = b.at(k, j);
                if (bkj == 0) continue;
                out.at(i, j) = f.add(out.at(i, j), f.mul(aik, bkj));
            }
        }
    }
    return out;
}

MatrixRep mat_pow(const FiniteField& f, MatrixRep a, std::uint64_t e) {
    MatrixRep out = identity_matrix(f, a.size);
    while (e > 0) {
        if (e & 1) out = mat_mul(f, out, a);
        a = mat_mul(f, a, a);
        e >>= 1;
    }
    return out;
}

std::uint32_t mat_trace(const FiniteField& f, const MatrixRep& a) {
    std::uint32_t t = 0;
    for (std::uint32_t i = 0; i < a.size; ++i) t = f.add(t, a.at(i, i));
    return t;
}

bool mat_is_zero(const MatrixRep& a) {
    return std::all_of(a.entries.begin(), a.entries.end(),
                       [](std::uint32_t e) { return e == 0; });
}

bool is_strictly_upper_triangular(const MatrixRep& a) {
    for (std::uint32_t i = 0; i < a.size; ++i)
        for (std::uint32_t j = 0; j <= i; ++j)
            if (a.at(i, j) != 0) return false;
    return true;
}

std::string render_matrix(const FiniteField& f, const MatrixRep& a) {
    std::string out = "[";
    for (std::uint32_t i = 0; i < a.size; ++i) {
        if (i > 0) out += ",";
        out += "[";
        for (std::uint32_t j = 0; j < a.size; ++j) {
            if (j > 0) out += ",";
            out += f.render(a.at(i, j));
        }
        out += "]";
    }
    out += "]";
    return out;
}

std::uint32_t rank(const FiniteField& f, MatrixRep a) {
    std::uint32_t n = a.size;
    std::uint32_t r = 0;
    for (std::uint32_t col = 0; col < n && r < n; ++col) {
        std::uint32_t pivot = n;
        for (std::uint32_t row = r; row < n; ++row) {
            if (a.at(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot == n) continue;
        for (std::uint32_t j = 0; j < n; ++j)
            std::swap(a.at(r, j), a.at(pivot, j));
        std::uint32_t scale = f.inv(a.at(r, col));
        for (std::uint32_t j = 0; j < n; ++j)
            a.at(r, j) = f.mul(a.at(r, j), scale);
        for (std::uint32_t row = 0; row < n; ++row) {
            if (row == r) continue;
            std::uint32_t factor = a.at(row, col);
            if (factor == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                a.at(row, j) = f.sub(a.at(row, j), f.mul(factor, a.at(r, j)));
        }
        ++r;
    }
    return r;
}

std::optional<MatrixRep> inverse(const FiniteField& f, const MatrixRep& a) {
    std::uint32_t n = a.size;
    MatrixRep work = a;
    MatrixRep inv = identity_matrix(f, n);
    for (std::uint32_t col = 0; col < n; ++col) {
        std::uint32_t pivot = n;
        for (std::uint32_t row = col; row < n; ++row) {
            if (work.at(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot == n) return std::nullopt;
        for (std::uint32_t j = 0; j < n; ++j) {
            std::swap(work.at(col, j), work.at(pivot, j));
            std::swap(inv.at(col, j), inv.at(pivot, j));
        }
        std::uint32_t scale = f.inv(work.at(col, col));
        for (std::uint32_t j = 0; j < n; ++j) {
            work.at(col, j) = f.mul(work.at(col, j), scale);
            inv.at(col, j) = f.mul(inv.at(col, j), scale);
        }
        for (std::uint32_t row = 0; row < n; ++row) {
            if (row == col) continue;
            std::uint32_t factor = work.at(row, col);
            if (factor == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j) {
                work.at(row, j) =
                    f.sub(work.at(row, j), f.mul(factor, work.at(col, j)));
                inv.at(row, j) =
                    f.sub(inv.at(row, j), f.mul(factor, inv.at(col, j)));
            }
        }
    }
    return inv;
}

std::optional<std::uint32_t> nilpotency_index(const FiniteField& f,
                                              const MatrixRep& a) {
    std::uint32_t n = a.size;
    if (n == 0) return 1;
    MatrixRep power = a;
    for (std::uint32_t k = 1; k <= n; ++k) {
        if (mat_is_zero(power)) return k;
        power = mat_mul(f, power, a);
    }
    return std::nullopt;
}

JordanPartition jordan_partition(const FiniteField& f, const MatrixRep& a) {
    auto nu = nilpotency_index(f, a);
    if (!nu) throw std::invalid_argument("matrix is not nilpotent");
    std::uint32_t n = a.size;
    // r[k] = rank(a^k) for k = 0..nu; r[nu] = 0.
    std::vector<std::uint32_t> r;
    r.push_back(n);
    MatrixRep power = identity_matrix(f, n);
    for (std::uint32_t k = 1; k <= *nu; ++k) {
        power = mat_mul(f, power, a);
        r.push_back(rank(f, power));
    }
    // blocks_ge[k] = number of blocks of size >= k = r[k-1] - r[k].
    JordanPartition part;
    for (std::uint32_t k = 1; k <= *nu; ++k) {
        std::uint32_t ge_k = r[k - 1] - r[k];
        std::uint32_t ge_k1 = (k == *nu) ? 0 : r[k] - r[k + 1];
        for (std::uint32_t i = 0; i < ge_k - ge_k1; ++i) part.blocks.push_back(k);
    }
    std::sort(part.blocks.begin(), part.blocks.end(), std::greater<>());
    std::uint32_t total =
        std::accumulate(part.blocks.begin(), part.blocks.end(), 0u);
    if (total != n) throw std::logic_error("partition does not sum to dimension");
    return part;
}

MatrixRep matrix_from_partition(const JordanPartition& part) {
    MatrixRep out(0);
    for (std::uint32_t b : part.blocks) out = diag_join(out, jordan_block(b));
    return out;
}

CharPoly char_poly(const FiniteField& f, const MatrixRep& a) {
    // Division-free iteration on leading principal submatrices: the r-th
    // step multiplies the coefficient vector by a Toeplitz matrix built from
    // the new row R, column S, corner d and powers of the previous block M.
    std::uint32_t n = a.size;
    std::vector<std::uint32_t> coeffs{1}; // descending degree, leading first
    for (std::uint32_t r = 1; r <= n; ++r) {
        std::uint32_t m = r - 1; // previous block size
        // fvals[0] = 1, fvals[1] = -d, fvals[j] = -(R M^{j-2} S) for j >= 2.
        std::vector<std::uint32_t> fvals(r + 1, 0);
        fvals[0] = 1;
        fvals[1] = f.neg(a.at(r - 1, r - 1));
        if (m > 0) {
            // vec = M^j S, built incrementally.
            std::vector<std::uint32_t> vec(m);
            for (std::uint32_t i = 0; i < m; ++i) vec[i] = a.at(i, r - 1);
            for (std::uint32_t j = 2; j <= r; ++j) {
                std::uint32_t dot = 0;
                for (std::uint32_t i = 0; i < m; ++i)
                    dot = f.add(dot, f.mul(a.at(r - 1, i), vec[i]));
                fvals[j] = f.neg(dot);
                if (j < r) {
                    std::vector<std::uint32_t> next(m, 0);
                    for (std::uint32_t i = 0; i < m; ++i) {
                        std::uint32_t acc = 0;
                        for (std::uint32_t kk = 0; kk < m; ++kk)
                            acc = f.add(acc, f.mul(a.at(i, kk), vec[kk]));
                        next[i] = acc;
                    }
                    vec = std::move(next);
                }
            }
        }
        std::vector<std::uint32_t> next(r + 1, 0);
        for (std::uint32_t i = 0; i <= r; ++i) {
            std::uint32_t acc = 0;
            for (std::uint32_t j = 0; j < coeffs.size(); ++j) {
                if (i < j || i - j >= fvals.size()) continue;
                acc = f.add(acc, f.mul(fvals[i - j], coeffs[j]));
            }
            next[i] = acc;
        }
        coeffs = std::move(next);
    }
    CharPoly cp;
    cp.coefficients.assign(coeffs.rbegin(), coeffs.rend());
    return cp;
}

std::string render_char_poly(const FiniteField& f, const CharPoly& cp) {
    std::size_t n = cp.coefficients.size();
    std::string out;
    for (std::size_t i = n; i-- > 0;) {
        std::uint32_t c = cp.coefficients[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        std::string coef = f.render(c);
        if (i == 0) {
            out += coef;
            continue;
        }
        if (coef != "1") out += "(" + coef + ")";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    if (out.empty()) out = "0";
    return out;
}

namespace {

// Basis vectors (as columns) of the column space of a, then of its kernel.
std::vector<std::vector<std::uint32_t>> column_space_basis(const FiniteField& f,
                                                           const MatrixRep& a) {
    std::uint32_t n = a.size;
    // Row-reduce the transpose; nonzero rows are a basis of the column space.
    MatrixRep t(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) t.at(i, j) = a.at(j, i);
    std::uint32_t r = 0;
    for (std::uint32_t col = 0; col < n && r < n; ++col) {
        std::uint32_t pivot = n;
        for (std::uint32_t row = r; row < n; ++row)
            if (t.at(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot == n) continue;
        for (std::uint32_t j = 0; j < n; ++j) std::swap(t.at(r, j), t.at(pivot, j));
        std::uint32_t scale = f.inv(t.at(r, col));
        for (std::uint32_t j = 0; j < n; ++j) t.at(r, j) = f.mul(t.at(r, j), scale);
        for (std::uint32_t row = 0; row < n; ++row) {
            if (row == r) continue;
            std::uint32_t factor = t.at(row, col);
            if (factor == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                t.at(row, j) = f.sub(t.at(row, j), f.mul(factor, t.at(r, j)));
        }
        ++r;
    }
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::uint32_t row = 0; row < r; ++row) {
        std::vector<std::uint32_t> v(n);
        for (std::uint32_t j = 0; j < n; ++j) v[j] = t.at(row, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<std::uint32_t>> kernel_basis(const FiniteField& f,
                                                     const MatrixRep& a) {
    std::uint32_t n = a.size;
    MatrixRep t = a;
    std::vector<std::int64_t> pivot_of_col(n, -1);
    std::uint32_t r = 0;
    for (std::uint32_t col = 0; col < n && r < n; ++col) {
        std::uint32_t pivot = n;
        for (std::uint32_t row = r; row < n; ++row)
            if (t.at(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot == n) continue;
        for (std::uint32_t j = 0; j < n; ++j) std::swap(t.at(r, j), t.at(pivot, j));
        std::uint32_t scale = f.inv(t.at(r, col));
        for (std::uint32_t j = 0; j < n; ++j) t.at(r, j) = f.mul(t.at(r, j), scale);
        for (std::uint32_t row = 0; row < n; ++row) {
            if (row == r) continue;
            std::uint32_t factor = t.at(row, col);
            if (factor == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                t.at(row, j) = f.sub(t.at(row, j), f.mul(factor, t.at(r, j)));
        }
        pivot_of_col[col] = r;
        ++r;
    }
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::uint32_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<std::uint32_t> v(n, 0);
        v[col] = 1;
        for (std::uint32_t c2 = 0; c2 < n; ++c2) {
            if (pivot_of_col[c2] < 0) continue;
            std::uint32_t row = static_cast<std::uint32_t>(pivot_of_col[c2]);
            v[c2] = f.neg(t.at(row, col));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

FittingDecomposition fitting_decomposition(const FiniteField& f,
                                           const MatrixRep& a) {
    std::uint32_t n = a.size;
    MatrixRep an = mat_pow(f, a, n);
    auto image = column_space_basis(f, an);
    auto kernel = kernel_basis(f, an);
    if (image.size() + kernel.size() != n)
        throw std::logic_error("image and kernel dimensions do not add up");
    MatrixRep p(n);
    for (std::uint32_t j = 0; j < image.size(); ++j)
        for (std::uint32_t i = 0; i < n; ++i) p.at(i, j) = image[j][i];
    for (std::uint32_t j = 0; j < kernel.size(); ++j)
        for (std::uint32_t i = 0; i < n; ++i)
            p.at(i, static_cast<std::uint32_t>(image.size()) + j) = kernel[j][i];
    auto pinv = inverse(f, p);
    if (!pinv) throw std::logic_error("basis change is singular");
    MatrixRep conj = mat_mul(f, mat_mul(f, *pinv, a), p);
    std::uint32_t r = static_cast<std::uint32_t>(image.size());
    FittingDecomposition out;
    out.basis_change = p;
    out.invertible_part = MatrixRep(r);
    out.nilpotent_part = MatrixRep(n - r);
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = 0; j < r; ++j)
            out.invertible_part.at(i, j) = conj.at(i, j);
    for (std::uint32_t i = 0; i < n - r; ++i)
        for (std::uint32_t j = 0; j < n - r; ++j)
            out.nilpotent_part.at(i, j) = conj.at(r + i, r + j);
    // The conjugated matrix must be block-diagonal; anything else means the
    // bases above were wrong.
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            bool top = i < r;
            bool left = j < r;
            if (top != left && conj.at(i, j) != 0)
                throw std::logic_error("conjugate is not block diagonal");
        }
    return out;
}

std::optional<std::uint64_t> gl_order_capped(const FiniteField& f,
                                             std::uint32_t n) {
    constexpr std::uint64_t kCap = 1000000;
    std::uint64_t qn = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (qn > (std::uint64_t(1) << 62) / f.q()) return std::nullopt;
        qn *= f.q();
    }
    std::uint64_t order = 1;
    std::uint64_t qi = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint64_t factor = qn - qi;
        if (order > kCap / factor + 1) return std::nullopt;
        order *= factor;
        if (order > kCap) return std::nullopt;
        qi *= f.q();
    }
    return order;
}

std::optional<MatrixRep> similarity_witness(const FiniteField& f,
                                            const MatrixRep& a,
                                            const MatrixRep& b) {
    require_same_size(a, b);
    std::uint32_t n = a.size;
    if (!gl_order_capped(f, n))
        throw Error("similarity search not supported at this size");
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < n * n; ++i) total *= f.q();
    // P a = b P with P invertible avoids computing any inverse in the loop.
    for (std::uint64_t id = 1; id < total; ++id) {
        MatrixRep p(n);
        std::uint64_t rest = id;
        for (std::uint32_t i = 0; i < n * n; ++i) {
            p.entries[i] = static_cast<std::uint32_t>(rest % f.q());
            rest /= f.q();
        }
        if (mat_mul(f, p, a) != mat_mul(f, b, p)) continue;
        if (rank(f, p) == n) return p;
    }
    return std::nullopt;
}

bool similar(const FiniteField& f, const MatrixRep& a, const MatrixRep& b) {
    require_same_size(a, b);
    auto nu_a = nilpotency_index(f, a);
    auto nu_b = nilpotency_index(f, b);
    if (nu_a.has_value() != nu_b.has_value()) return false;
    if (nu_a && nu_b)
        return jordan_partition(f, a) == jordan_partition(f, b);
    return similarity_witness(f, a, b).has_value();
}

} // namespace ccgraph

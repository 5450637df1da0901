#include "lagdef/linalg.hpp"

#include <stdexcept>

namespace lagdef {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Vector RationalMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Vector RationalMatrix::operator*(const Vector &x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("matrix-vector size mismatch");
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(at(r, c)) != 0)
                y[r] += at(r, c) * x[c];
    return y;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

/// sx * x - sy * y
IntRow combine(const IntRow &x, const Integer &sx, const IntRow &y, const Integer &sy) {
    IntRow out;
    out.reserve(x.size() + y.size());
    auto i = x.begin(), j = y.begin();
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
            out.emplace_back(i->first, sx * i->second);
            ++i;
        } else if (i == x.end() || j->first < i->first) {
            out.emplace_back(j->first, -sy * j->second);
            ++j;
        } else {
            Integer v = sx * i->second - sy * j->second;
            if (sgn(v) != 0)
                out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

Integer content(const IntRow &row) {
    Integer g = 0;
    for (const auto &[c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

const Integer *entry_at(const IntRow &row, std::size_t col) {
    for (const auto &[c, v] : row)
        if (c == col)
            return &v;
    return nullptr;
}

/// Integer numerator row and positive common denominator of a rational vector.
std::pair<IntRow, Integer> scale_to_integers(const SparseVector &v) {
    Integer den = 1;
    for (const auto &[c, r] : v)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
    IntRow row;
    row.reserve(v.size());
    for (const auto &[c, r] : v) {
        if (sgn(r) == 0)
            continue;
        Integer num = r.get_num() * (den / r.get_den());
        row.emplace_back(c, std::move(num));
    }
    return {std::move(row), den};
}

} // namespace

void EchelonBasis::make_primitive(IntRow &row) {
    if (row.empty())
        return;
    Integer g = content(row);
    if (sgn(row.front().second) < 0)
        g = -g;
    if (g != 1)
        for (auto &[c, v] : row)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

void EchelonBasis::eliminate(IntRow &row, std::size_t at, const IntRow &pivot_row) {
    const Integer *a = entry_at(row, at);
    if (!a)
        return;
    const Integer &p = pivot_row.front().second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), a->get_mpz_t(), p.get_mpz_t());
    Integer sx = p / g, sy = *a / g;
    row = combine(row, sx, pivot_row, sy);
    make_primitive(row);
}

EchelonBasis::IntRow EchelonBasis::reduce_int(IntRow row) const {
    // Pivot rows vanish at every other pivot column and start at their own
    // pivot, so a single left-to-right sweep suffices.
    std::size_t cursor = 0;
    while (true) {
        const IntRow::value_type *hit = nullptr;
        for (const auto &e : row) {
            if (e.first < cursor)
                continue;
            if (rows_.count(e.first)) {
                hit = &e;
                break;
            }
        }
        if (!hit)
            break;
        std::size_t col = hit->first;
        eliminate(row, col, rows_.at(col));
        cursor = col + 1;
    }
    return row;
}

bool EchelonBasis::insert(const SparseVector &v) {
    for (const auto &[c, r] : v)
        if (c >= cols_)
            throw std::out_of_range("vector index beyond basis dimension");
    IntRow row = scale_to_integers(v).first;
    make_primitive(row);
    row = reduce_int(std::move(row));
    if (row.empty())
        return false;
    make_primitive(row);
    std::size_t pivot = row.front().first;
    for (auto &[pc, existing] : rows_)
        eliminate(existing, pivot, row);
    rows_.emplace(pivot, std::move(row));
    return true;
}

SparseVector EchelonBasis::reduce(const SparseVector &v) const {
    auto [w, den] = scale_to_integers(v);
    std::size_t cursor = 0;
    while (true) {
        std::size_t col = cols_;
        const Integer *a = nullptr;
        for (const auto &[c, x] : w) {
            if (c < cursor)
                continue;
            if (rows_.count(c)) {
                col = c;
                a = &x;
                break;
            }
        }
        if (!a)
            break;
        const IntRow &prow = rows_.at(col);
        const Integer &p = prow.front().second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), a->get_mpz_t(), p.get_mpz_t());
        Integer sx = p / g, sy = *a / g;
        w = combine(w, sx, prow, sy);
        den *= sx;
        Integer h = content(w);
        mpz_gcd(h.get_mpz_t(), h.get_mpz_t(), den.get_mpz_t());
        if (h != 1 && sgn(h) != 0) {
            for (auto &[c, x] : w)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), h.get_mpz_t());
            mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), h.get_mpz_t());
        }
        cursor = col + 1;
    }
    SparseVector out;
    for (auto &[c, x] : w) {
        Rational r(x, den);
        r.canonicalize();
        out.emplace(c, std::move(r));
    }
    return out;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const auto &[c, r] : rows_)
        out.push_back(c);
    return out;
}

std::vector<SparseVector> EchelonBasis::rows() const {
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto &[pc, row] : rows_) {
        const Integer &p = row.front().second;
        SparseVector v;
        for (const auto &[c, x] : row) {
            Rational r(x, p);
            r.canonicalize();
            v.emplace(c, std::move(r));
        }
        out.push_back(std::move(v));
    }
    return out;
}

SparseVector to_sparse(const Vector &v) {
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0)
            s.emplace(i, v[i]);
    return s;
}

Vector to_dense(const SparseVector &v, std::size_t n) {
    Vector d(n);
    for (const auto &[c, r] : v)
        d.at(c) = r;
    return d;
}

RrefResult rref(const RationalMatrix &m) {
    EchelonBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        basis.insert(to_sparse(m.row(r)));
    RrefResult out{RationalMatrix(m.rows(), m.cols()), basis.pivots()};
    auto rows = basis.rows();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto &[c, v] : rows[r])
            out.reduced.at(r, c) = v;
    return out;
}

std::size_t rank(const RationalMatrix &m) { return rref(m).rank(); }

std::vector<Vector> kernel_basis(const RationalMatrix &m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector x(m.cols());
        x[f] = 1;
        for (std::size_t row = 0; row < r.pivots.size(); ++row)
            x[r.pivots[row]] = -r.reduced.at(row, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<Vector> solve(const RationalMatrix &m, const Vector &rhs) {
    if (rhs.size() != m.rows())
        throw std::invalid_argument("right-hand side length must equal the row count");
    std::vector<SparseVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(to_sparse(m.row(r)));
    return solve_sparse(rows, m.cols(), rhs);
}

std::vector<SparseVector> kernel_of_columns(const std::vector<SparseVector> &columns,
                                            std::size_t codim) {
    const std::size_t dom = columns.size();
    EchelonBasis basis(codim + dom);
    for (std::size_t j = 0; j < dom; ++j) {
        SparseVector v;
        for (const auto &[c, x] : columns[j]) {
            if (c >= codim)
                throw std::out_of_range("column entry beyond codomain dimension");
            v.emplace(c, x);
        }
        v.emplace(codim + j, 1);
        basis.insert(v);
    }
    std::vector<SparseVector> kernel;
    for (const auto &row : basis.rows()) {
        if (row.begin()->first < codim)
            continue;
        SparseVector k;
        for (const auto &[c, x] : row)
            k.emplace(c - codim, x);
        kernel.push_back(std::move(k));
    }
    return kernel;
}

std::optional<Vector> solve_sparse(const std::vector<SparseVector> &rows, std::size_t ncols,
                                   const Vector &rhs) {
    if (rhs.size() != rows.size())
        throw std::invalid_argument("right-hand side length must equal the row count");
    EchelonBasis basis(ncols + 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        SparseVector v = rows[r];
        if (sgn(rhs[r]) != 0)
            v[ncols] = rhs[r];
        basis.insert(v);
    }
    if (basis.is_pivot(ncols))
        return std::nullopt;
    Vector x(ncols);
    for (const auto &row : basis.rows()) {
        auto it = row.find(ncols);
        if (it != row.end())
            x[row.begin()->first] = it->second;
    }
    return x;
}

} // namespace lagdef

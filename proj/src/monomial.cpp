#include "lagdef/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lagdef {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
        if (e < 0)
            throw std::invalid_argument("negative exponent");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t v, int power) {
    Monomial m(nvars);
    m.exps_.at(v) = power;
    return m;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

int Monomial::degree(std::size_t begin, std::size_t end) const {
    int d = 0;
    for (std::size_t v = begin; v < end && v < exps_.size(); ++v)
        d += exps_[v];
    return d;
}

bool Monomial::divides(const Monomial &other) const {
    for (std::size_t v = 0; v < exps_.size(); ++v)
        if (exps_[v] > other.exps_[v])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial &other) const {
    Monomial r(*this);
    for (std::size_t v = 0; v < exps_.size(); ++v)
        r.exps_[v] += other.exps_[v];
    return r;
}

Monomial Monomial::operator/(const Monomial &divisor) const {
    Monomial r(*this);
    for (std::size_t v = 0; v < exps_.size(); ++v) {
        r.exps_[v] -= divisor.exps_[v];
        if (r.exps_[v] < 0)
            throw std::invalid_argument("monomial division is not exact");
    }
    return r;
}

Monomial Monomial::with_exponent(std::size_t v, int e) const {
    Monomial r(*this);
    r.exps_.at(v) = e;
    return r;
}

Monomial lcm(const Monomial &a, const Monomial &b) {
    Monomial r(a);
    for (std::size_t v = 0; v < r.exps_.size(); ++v)
        r.exps_[v] = std::max(a.exps_[v], b.exps_[v]);
    return r;
}

std::string Monomial::to_string(const VariableContext &ctx) const {
    std::string out;
    for (std::size_t v = 0; v < exps_.size(); ++v) {
        if (exps_[v] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ctx.name(v);
        if (exps_[v] > 1)
            out += '^' + std::to_string(exps_[v]);
    }
    return out.empty() ? "1" : out;
}

namespace {

void enumerate(std::vector<int> &exps, std::size_t v, std::size_t end, int left,
               std::vector<Monomial> &out) {
    if (v + 1 == end) {
        exps[v] = left;
        out.emplace_back(exps);
        exps[v] = 0;
        return;
    }
    for (int e = left; e >= 0; --e) {
        exps[v] = e;
        enumerate(exps, v + 1, end, left - e, out);
    }
    exps[v] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::size_t begin,
                                          std::size_t end, int deg) {
    std::vector<Monomial> out;
    if (deg < 0)
        return out;
    if (begin >= end) {
        if (deg == 0)
            out.emplace_back(nvars);
        return out;
    }
    std::vector<int> exps(nvars, 0);
    enumerate(exps, begin, end, deg, out);
    return out;
}

} // namespace lagdef

#include "lagdef/order.hpp"

namespace lagdef {

namespace {

std::strong_ordering degrevlex_block(const Monomial &a, const Monomial &b, std::size_t begin,
                                     std::size_t end, bool local) {
    int da = a.degree(begin, end), db = b.degree(begin, end);
    if (da != db) {
        if (local)
            return db <=> da;
        return da <=> db;
    }
    for (std::size_t v = end; v-- > begin;) {
        if (a[v] != b[v])
            return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering MonomialOrder::compare(const Monomial &a, const Monomial &b) const {
    const bool loc = is_local();
    const std::size_t n = a.size();
    if (split == 0 || split >= n)
        return degrevlex_block(a, b, 0, n, loc);
    if (auto c = degrevlex_block(a, b, 0, split, loc); c != 0)
        return c;
    return degrevlex_block(a, b, split, n, loc);
}

std::string MonomialOrder::name() const {
    std::string base = is_local() ? "local-negdegrevlex" : "global-degrevlex";
    if (split > 0)
        base += "-blocks";
    return base;
}

} // namespace lagdef

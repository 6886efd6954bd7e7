#include "cwlin/order.hpp"

#include <algorithm>
#include <numeric>

#include "cwlin/errors.hpp"

namespace cwlin {

namespace {

std::vector<int> natural_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// Compare along perm[lo..hi): lex scans from the top priority down;
// degrevlex compares the block degree, then scans upward from the bottom
// priority, where the smaller exponent wins.
int cmp_block(const Monomial& a, const Monomial& b, const std::vector<int>& perm, int lo,
              int hi, OrderKind kind) {
    if (kind == OrderKind::Lex) {
        for (int k = lo; k < hi; ++k) {
            int32_t d = a.exp(perm[k]) - b.exp(perm[k]);
            if (d != 0) return d > 0 ? 1 : -1;
        }
        return 0;
    }
    int32_t da = 0, db = 0;
    for (int k = lo; k < hi; ++k) {
        da += a.exp(perm[k]);
        db += b.exp(perm[k]);
    }
    if (da != db) return da > db ? 1 : -1;
    for (int k = hi - 1; k >= lo; --k) {
        int32_t d = a.exp(perm[k]) - b.exp(perm[k]);
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

} // namespace

MonomialOrder MonomialOrder::lex(int nvars) { return lex(natural_perm(nvars)); }

MonomialOrder MonomialOrder::lex(std::vector<int> chain) {
    MonomialOrder o;
    o.kind = OrderKind::Lex;
    o.perm = std::move(chain);
    return o;
}

MonomialOrder MonomialOrder::degrevlex(int nvars) { return degrevlex(natural_perm(nvars)); }

MonomialOrder MonomialOrder::degrevlex(std::vector<int> chain) {
    MonomialOrder o;
    o.kind = OrderKind::DegRevLex;
    o.perm = std::move(chain);
    return o;
}

MonomialOrder MonomialOrder::block_elim(int nvars, const std::vector<int>& elim_vars,
                                        OrderKind inner) {
    std::vector<bool> is_elim(nvars, false);
    for (int v : elim_vars) {
        if (v < 0 || v >= nvars) throw input_error("eliminated variable out of range");
        is_elim[v] = true;
    }
    MonomialOrder o;
    o.kind = OrderKind::BlockElim;
    o.inner = inner;
    o.elim = 0;
    for (int v = 0; v < nvars; ++v)
        if (is_elim[v]) {
            o.perm.push_back(v);
            ++o.elim;
        }
    for (int v = 0; v < nvars; ++v)
        if (!is_elim[v]) o.perm.push_back(v);
    return o;
}

std::string MonomialOrder::key() const {
    std::string s;
    switch (kind) {
        case OrderKind::Lex: s = "lex:"; break;
        case OrderKind::DegRevLex: s = "drl:"; break;
        case OrderKind::BlockElim:
            s = "blk" + std::to_string(elim) + (inner == OrderKind::Lex ? "l" : "d") + ":";
            break;
    }
    for (size_t i = 0; i < perm.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(perm[i]);
    }
    return s;
}

void MonomialOrder::validate(int nvars) const {
    if (static_cast<int>(perm.size()) != nvars)
        throw input_error("order chain length does not match the ring");
    std::vector<bool> seen(nvars, false);
    for (int v : perm) {
        if (v < 0 || v >= nvars || seen[v]) throw input_error("order chain is not a permutation");
        seen[v] = true;
    }
    if (kind == OrderKind::BlockElim && (elim < 0 || elim > nvars))
        throw input_error("bad elimination block size");
}

int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    if (a.nvars() != b.nvars()) throw input_error("monomials from different rings");
    int n = static_cast<int>(ord.perm.size());
    switch (ord.kind) {
        case OrderKind::Lex:
            return cmp_block(a, b, ord.perm, 0, n, OrderKind::Lex);
        case OrderKind::DegRevLex: {
            if (a.deg() != b.deg()) return a.deg() > b.deg() ? 1 : -1;
            return cmp_block(a, b, ord.perm, 0, n, OrderKind::DegRevLex);
        }
        case OrderKind::BlockElim: {
            int c = cmp_block(a, b, ord.perm, 0, ord.elim, ord.inner);
            if (c != 0) return c;
            return cmp_block(a, b, ord.perm, ord.elim, n, ord.inner);
        }
    }
    return 0;
}

} // namespace cwlin

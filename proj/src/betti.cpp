#include "cwlin/betti.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <unordered_set>

#include "cwlin/errors.hpp"

namespace cwlin {

long BettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long v) {
    if (v == 0) return;
    entries[{i, j}] += v;
}

int BettiTable::regularity() const {
    int r = 0;
    for (const auto& [ij, v] : entries)
        if (v != 0) r = std::max(r, ij.second - ij.first);
    return r;
}

int BettiTable::max_index() const {
    int r = 0;
    for (const auto& [ij, v] : entries)
        if (v != 0) r = std::max(r, ij.first);
    return r;
}

std::string BettiTable::to_diagram() const {
    // Macaulay-style: row j-i, column i.
    if (entries.empty()) return "(empty table)\n";
    int imax = max_index();
    int rmax = regularity();
    int rmin = rmax;
    for (const auto& [ij, v] : entries)
        if (v != 0) rmin = std::min(rmin, ij.second - ij.first);
    std::string s = "      ";
    for (int i = 0; i <= imax; ++i) s += "\t" + std::to_string(i);
    s += "\n";
    for (int r = rmin; r <= rmax; ++r) {
        s += std::to_string(r) + ":";
        for (int i = 0; i <= imax; ++i) {
            long v = at(i, i + r);
            s += "\t" + (v ? std::to_string(v) : std::string("."));
        }
        s += "\n";
    }
    return s;
}

std::vector<uint32_t> SimplicialComplexQ::facets() const {
    std::vector<uint32_t> out;
    for (uint32_t f : faces) {
        bool maximal = true;
        for (uint32_t g : faces)
            if (g != f && (f & g) == f) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(f);
    }
    return out;
}

SimplicialComplexQ upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& b) {
    std::vector<int> supp;
    for (int i = 0; i < b.nvars(); ++i)
        if (b.exp(i) > 0) supp.push_back(i);
    SimplicialComplexQ K;
    K.nverts = static_cast<int>(supp.size());
    for (uint32_t mask = 0; mask < (1u << K.nverts); ++mask) {
        Monomial q = b;
        for (int v = 0; v < K.nverts; ++v)
            if ((mask >> v) & 1) q.bump(supp[v], -1);
        if (ideal.contains(q)) K.faces.push_back(mask);
    }
    std::sort(K.faces.begin(), K.faces.end());
    return K;
}

namespace {

long rank_rational(std::vector<std::vector<mpq_class>> m) {
    long rank = 0;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    for (size_t col = 0, row = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && sgn(m[piv][col]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (size_t r = row + 1; r < rows; ++r) {
            if (sgn(m[r][col]) == 0) continue;
            mpq_class f = m[r][col] / m[row][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Bareiss fraction-free elimination over the integers.
long rank_bareiss(std::vector<std::vector<mpz_class>> m) {
    long rank = 0;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    mpz_class prev(1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (size_t r = row + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c) {
                m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

std::vector<long> reduced_homology_ranks(const SimplicialComplexQ& K, RankMethod method) {
    int nv = K.nverts;
    std::vector<long> h(nv + 1, 0);
    if (K.faces.empty()) return h;  // void complex: nothing in any dimension

    std::vector<std::vector<uint32_t>> by_card(nv + 1);
    for (uint32_t f : K.faces) by_card[__builtin_popcount(f)].push_back(f);
    std::vector<std::map<uint32_t, int>> index(nv + 1);
    for (int k = 0; k <= nv; ++k)
        for (size_t i = 0; i < by_card[k].size(); ++i) index[k][by_card[k][i]] = static_cast<int>(i);

    // rank of the boundary map from cardinality-k faces down to k-1.
    std::vector<long> rank(nv + 2, 0);
    for (int k = 1; k <= nv; ++k) {
        size_t nk = by_card[k].size();
        size_t nk1 = by_card[k - 1].size();
        if (nk == 0 || nk1 == 0) continue;
        std::vector<std::vector<mpz_class>> mz;
        std::vector<std::vector<mpq_class>> mq;
        if (method == RankMethod::Bareiss)
            mz.assign(nk1, std::vector<mpz_class>(nk, 0));
        else
            mq.assign(nk1, std::vector<mpq_class>(nk, 0));
        for (size_t cidx = 0; cidx < nk; ++cidx) {
            uint32_t f = by_card[k][cidx];
            int pos = 0;
            for (int v = 0; v < nv; ++v) {
                if (!((f >> v) & 1)) continue;
                uint32_t sub = f & ~(1u << v);
                auto it = index[k - 1].find(sub);
                if (it == index[k - 1].end())
                    throw internal_error("complex not closed under subsets");
                int sign = (pos % 2 == 0) ? 1 : -1;
                if (method == RankMethod::Bareiss)
                    mz[it->second][cidx] = sign;
                else
                    mq[it->second][cidx] = sign;
                ++pos;
            }
        }
        rank[k] = method == RankMethod::Bareiss ? rank_bareiss(std::move(mz))
                                                : rank_rational(std::move(mq));
    }

    long euler = 0;
    for (int k = 0; k <= nv; ++k) {
        long fk = static_cast<long>(by_card[k].size());
        h[k] = fk - rank[k] - rank[k + 1];
        if (h[k] < 0) throw internal_error("negative homology rank");
        euler += (k % 2 == 0 ? 1 : -1) * (fk - h[k]);
    }
    if (euler != 0) throw internal_error("Euler characteristic mismatch in homology");
    return h;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, const BettiLimits& lim) {
    std::unordered_set<Monomial, MonoHash> seen;
    std::vector<Monomial> work(ideal.gens().begin(), ideal.gens().end());
    for (const Monomial& g : work) seen.insert(g);
    for (size_t head = 0; head < work.size(); ++head) {
        Monomial cur = work[head];
        for (const Monomial& g : ideal.gens()) {
            Monomial l = mono_lcm(cur, g);
            if (seen.insert(l).second) {
                work.push_back(std::move(l));
                if (work.size() > lim.max_lattice)
                    throw resource_limit_error("lcm lattice exceeds the cap of " +
                                               std::to_string(lim.max_lattice));
            }
        }
    }
    std::sort(work.begin(), work.end(), [](const Monomial& a, const Monomial& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.exps() < b.exps();
    });
    return work;
}

BettiTable betti_numbers(const MonomialIdeal& ideal, const BettiLimits& lim) {
    if (ideal.is_zero()) throw input_error("betti numbers of the zero ideal");
    if (ideal.ring()->nvars() > lim.max_vars)
        throw resource_limit_error("betti oracle supports at most " +
                                   std::to_string(lim.max_vars) + " variables");
    Monomial big = ideal.gens().front();
    for (const Monomial& g : ideal.gens()) big = mono_lcm(big, g);
    if (big.deg() > lim.max_lcm_degree)
        throw resource_limit_error("generator lcm degree " + std::to_string(big.deg()) +
                                   " exceeds the oracle guard");

    BettiTable table;
    for (const Monomial& b : lcm_lattice(ideal, lim)) {
        SimplicialComplexQ K = upper_koszul_complex(ideal, b);
        std::vector<long> h = reduced_homology_ranks(K, RankMethod::RationalGauss);
        for (int k = 0; k < static_cast<int>(h.size()); ++k)
            table.add(k, b.deg(), h[k]);
    }
    return table;
}

bool has_linear_resolution(const MonomialIdeal& ideal, const BettiLimits& lim) {
    if (ideal.is_zero()) throw input_error("linear resolution test on the zero ideal");
    int d = ideal.gens().front().deg();
    for (const Monomial& g : ideal.gens())
        if (g.deg() != d) return false;
    BettiTable t = betti_numbers(ideal, lim);
    for (const auto& [ij, v] : t.entries)
        if (v != 0 && ij.second != ij.first + d) return false;
    return true;
}

namespace {

void monomials_of_degree(const RingCtx& ring, int var, int deg, Monomial& cur,
                         std::vector<Monomial>& out) {
    if (var == ring.nvars() - 1) {
        Monomial m = cur;
        m.bump(var, deg);
        out.push_back(std::move(m));
        return;
    }
    for (int e = 0; e <= deg; ++e) {
        Monomial next = cur;
        next.bump(var, e);
        monomials_of_degree(ring, var + 1, deg - e, next, out);
    }
}

} // namespace

MonomialIdeal degree_component(const MonomialIdeal& ideal, int j) {
    const RingPtr& ring = ideal.ring();
    std::unordered_set<Monomial, MonoHash> gens;
    for (const Monomial& u : ideal.gens()) {
        if (u.deg() > j) continue;
        std::vector<Monomial> mults;
        Monomial unit(ring->nvars());
        monomials_of_degree(*ring, 0, j - u.deg(), unit, mults);
        for (const Monomial& m : mults) gens.insert(mono_mul(u, m));
    }
    return MonomialIdeal(ring, std::vector<Monomial>(gens.begin(), gens.end()));
}

CwlResult is_componentwise_linear(const MonomialIdeal& ideal, const BettiLimits& lim) {
    if (ideal.is_zero()) throw input_error("componentwise-linearity test on the zero ideal");
    BettiTable t = betti_numbers(ideal, lim);
    int min_deg = ideal.gens().front().deg();
    for (const Monomial& g : ideal.gens()) min_deg = std::min(min_deg, g.deg());
    CwlResult res;
    res.reg = t.regularity();
    res.componentwise_linear = true;
    for (int j = min_deg; j <= res.reg; ++j) {
        MonomialIdeal comp = degree_component(ideal, j);
        CwlComponent c;
        c.degree = j;
        c.ngens = comp.ngens();
        c.linear = comp.is_zero() ? true : has_linear_resolution(comp, lim);
        res.componentwise_linear = res.componentwise_linear && c.linear;
        res.components.push_back(c);
    }
    return res;
}

} // namespace cwlin

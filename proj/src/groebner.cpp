#include "cwlin/groebner.hpp"

#include <algorithm>
#include <chrono>

namespace cwlin {

namespace {

using Clock = std::chrono::steady_clock;

struct Pair {
    int i, j;  // store indices, i < j
    Monomial lcm;
    int32_t deg;
};

struct Engine {
    const RingCtx& ring;
    const MonomialOrder& ord;
    CoeffField F;
    const GBLimits& lim;
    Clock::time_point deadline;
    uint64_t reductions = 0;

    std::vector<Poly> store;   // every basis element ever accepted
    std::vector<int> alive;    // indices forming the current basis
    std::vector<Pair> pairs;

    Engine(const RingCtx& r, const MonomialOrder& o, const GBLimits& l)
        : ring(r), ord(o), F(r.characteristic()), lim(l) {
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(lim.max_seconds));
    }

    void check_caps() {
        if (reductions >= lim.max_pair_reductions)
            throw resource_limit_error("groebner pair-reduction cap exceeded (" +
                                       std::to_string(lim.max_pair_reductions) + ")");
        if (Clock::now() > deadline)
            throw resource_limit_error("groebner time cap exceeded");
    }

    Poly reduce_full(const Poly& f) const {
        std::vector<Term> ans;
        Poly r = f;
        while (!r.is_zero()) {
            const Poly* red = nullptr;
            for (int g : alive)
                if (mono_divides(store[g].lm(), r.lm())) {
                    red = &store[g];
                    break;
                }
            if (red) {
                r = poly_axpy(r, F.div(r.lc(), red->lc()), mono_div(r.lm(), red->lm()), *red, F,
                              ord);
            } else {
                ans.push_back(r.lt());
                r = Poly::from_sorted(
                    std::vector<Term>(r.terms().begin() + 1, r.terms().end()));
            }
        }
        return Poly::from_sorted(std::move(ans));
    }

    // Gebauer-Moeller update: prune new and old pairs with the product and
    // chain criteria, retire basis elements whose lead becomes divisible.
    void update(int t) {
        const Monomial& lth = store[t].lm();
        struct Cand {
            int g;
            Monomial l;
            bool coprime;
        };
        std::vector<Cand> cands;
        cands.reserve(alive.size());
        for (int g : alive)
            cands.push_back(
                {g, mono_lcm(store[g].lm(), lth), mono_coprime(store[g].lm(), lth)});

        std::vector<Cand> kept;
        for (size_t a = 0; a < cands.size(); ++a) {
            bool keep = cands[a].coprime;
            if (!keep) {
                bool dominated = false;
                for (size_t b = a + 1; b < cands.size() && !dominated; ++b)
                    if (cands[b].l != cands[a].l && mono_divides(cands[b].l, cands[a].l))
                        dominated = true;
                for (const Cand& k : kept)
                    if (dominated) break;
                    else if (mono_divides(k.l, cands[a].l))
                        dominated = true;
                keep = !dominated;
            }
            if (keep) kept.push_back(cands[a]);
        }

        std::vector<Pair> survivors;
        survivors.reserve(pairs.size() + kept.size());
        for (Pair& p : pairs) {
            if (!mono_divides(lth, p.lcm) ||
                mono_lcm(store[p.i].lm(), lth) == p.lcm ||
                mono_lcm(store[p.j].lm(), lth) == p.lcm)
                survivors.push_back(std::move(p));
        }
        for (const Cand& k : kept) {
            if (k.coprime) continue;  // product criterion
            survivors.push_back(Pair{std::min(k.g, t), std::max(k.g, t), k.l, k.l.deg()});
        }
        pairs = std::move(survivors);

        std::vector<int> next_alive;
        next_alive.reserve(alive.size() + 1);
        for (int g : alive)
            if (!mono_divides(lth, store[g].lm())) next_alive.push_back(g);
        next_alive.push_back(t);
        alive = std::move(next_alive);
    }

    void add_element(Poly h) {
        store.push_back(poly_primitive(h, F));
        update(static_cast<int>(store.size()) - 1);
    }

    int pop_best_pair() {
        int best = 0;
        for (int k = 1; k < static_cast<int>(pairs.size()); ++k) {
            const Pair& a = pairs[k];
            const Pair& b = pairs[best];
            if (a.deg < b.deg || (a.deg == b.deg && (a.i < b.i || (a.i == b.i && a.j < b.j))))
                best = k;
        }
        return best;
    }

    GroebnerBasis run(const std::vector<Poly>& gens) {
        for (const Poly& g : gens) {
            if (g.is_zero()) continue;
            // Incoming generators may be sorted under a different order.
            Poly r = reduce_full(poly_resort(g, F, ord));
            if (!r.is_zero()) add_element(std::move(r));
        }
        while (!pairs.empty()) {
            check_caps();
            int k = pop_best_pair();
            Pair p = pairs[k];
            pairs.erase(pairs.begin() + k);
            Poly s = s_polynomial(store[p.i], store[p.j], F, ord);
            ++reductions;
            Poly r = reduce_full(s);
            if (!r.is_zero()) add_element(std::move(r));
        }
        // Tail-reduce the surviving elements into the reduced basis.
        std::sort(alive.begin(), alive.end(),
                  [&](int a, int b) { return mono_cmp(store[a].lm(), store[b].lm(), ord) > 0; });
        GroebnerBasis gb;
        gb.ord = ord;
        for (size_t k = 0; k < alive.size(); ++k) {
            std::vector<int> others = alive;
            others.erase(others.begin() + k);
            std::vector<int> saved = std::move(alive);
            alive = std::move(others);
            Poly r = reduce_full(store[saved[k]]);
            alive = std::move(saved);
            store[alive[k]] = poly_primitive(r, F);
            gb.elems.push_back(poly_monic(store[alive[k]], F));
        }
        return gb;
    }
};

} // namespace

Poly s_polynomial(const Poly& f, const Poly& g, const CoeffField& F, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero()) return Poly();
    Monomial l = mono_lcm(f.lm(), g.lm());
    Poly a = poly_mul_term(f, F.inv(f.lc()), mono_div(l, f.lm()), F);
    return poly_axpy(a, F.inv(g.lc()), mono_div(l, g.lm()), g, F, ord);
}

GroebnerBasis buchberger(const RingCtx& ring, const std::vector<Poly>& gens,
                         const MonomialOrder& ord, const GBLimits& lim) {
    ord.validate(ring.nvars());
    Engine e(ring, ord, lim);
    return e.run(gens);
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const CoeffField& F,
                 const MonomialOrder& ord) {
    std::vector<Term> ans;
    Poly r = poly_resort(f, F, ord);
    while (!r.is_zero()) {
        const Poly* red = nullptr;
        for (const Poly& g : basis)
            if (!g.is_zero() && mono_divides(g.lm(), r.lm())) {
                red = &g;
                break;
            }
        if (red) {
            r = poly_axpy(r, F.div(r.lc(), red->lc()), mono_div(r.lm(), red->lm()), *red, F, ord);
        } else {
            ans.push_back(r.lt());
            r = Poly::from_sorted(std::vector<Term>(r.terms().begin() + 1, r.terms().end()));
        }
    }
    return Poly::from_sorted(std::move(ans));
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb, const CoeffField& F) {
    return normal_form(f, gb.elems, F, gb.ord);
}

MonomialIdeal initial_ideal(const RingPtr& ring, const GroebnerBasis& gb) {
    std::vector<Monomial> ms;
    ms.reserve(gb.elems.size());
    for (const Poly& g : gb.elems) ms.push_back(g.lm());
    return MonomialIdeal(ring, std::move(ms));
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (Poly& g : gens)
        if (!g.is_zero()) gens_.push_back(std::move(g));
}

bool Ideal::is_monomial() const {
    for (const Poly& g : gens_)
        if (g.nterms() != 1) return false;
    return true;
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& ord, const GBLimits& lim) const {
    if (!cache_) throw internal_error("groebner query on a default-constructed ideal");
    std::lock_guard<std::mutex> lock(cache_->mu);
    std::string key = ord.key();
    auto it = cache_->by_order.find(key);
    if (it != cache_->by_order.end()) return *it->second;
    auto gb = std::make_shared<GroebnerBasis>(buchberger(*ring_, gens_, ord, lim));
    auto [pos, ok] = cache_->by_order.emplace(std::move(key), std::move(gb));
    (void)ok;
    return *pos->second;
}

} // namespace cwlin

#include "cwlin/dseq.hpp"

#include <algorithm>

namespace cwlin {

namespace {

// The kernel of T -> R(I) is equivariant under linear changes of the base
// coordinates, so the test for z_1..z_n runs directly with the given forms:
// conjugating everything by the automorphism z_i -> x_i produces the same
// pass/fail pattern but drags inverse-matrix denominators through every
// Groebner basis.
DseqReport run_steps(const ReesPresentation& pres, const std::vector<Poly>& z,
                     const MonomialOrder& ordT, const GBLimits& lim) {
    const RingPtr& base = pres.base;
    const RingPtr& ext = pres.ext;
    CoeffField F(base->characteristic());
    int n = base->nvars();
    int m = static_cast<int>(pres.images.size());

    basis_from_forms(z, *base);  // throws input_error unless a K-basis of S_1

    DseqReport rep;
    rep.base = base;
    rep.ext = ext;
    rep.sequence = z;
    rep.kernel_gens = pres.kernel.gens();

    std::vector<Poly> zT;
    zT.reserve(n);
    for (const Poly& f : z) zT.push_back(poly_resort(poly_lift(f, m), F, ordT));

    std::vector<Poly> m_gens;
    for (int k = 0; k < n; ++k) m_gens.push_back(poly_var(*ext, k));
    m_gens.insert(m_gens.end(), rep.kernel_gens.begin(), rep.kernel_gens.end());
    Ideal M(ext, m_gens);

    std::vector<Poly> a_gens = rep.kernel_gens;
    for (int i = 1; i <= n; ++i) {
        Ideal A(ext, a_gens);
        DseqStep step;
        step.index = i;
        step.rhs_gens = a_gens;
        try {
            Ideal C = ideal_colon(A, zT[i - 1], ordT, lim);
            Ideal L = ideal_intersect(C, M, ordT, lim);
            step.lhs_gens = L.gens();
            const GroebnerBasis& gbA = A.groebner(ordT, lim);
            step.status = StepStatus::Pass;
            for (const Poly& g : L.gens()) {
                if (!normal_form(g, gbA, F).is_zero()) {
                    step.status = StepStatus::Fail;
                    Poly cert = poly_monic(poly_resort(g, F, ordT), F);
                    // Certificate sanity, by normal forms.
                    Poly wz = poly_mul(cert, zT[i - 1], F, ordT);
                    if (!normal_form(wz, gbA, F).is_zero())
                        throw internal_error("certificate fails w*z_i in A");
                    if (!normal_form(cert, M.groebner(ordT, lim), F).is_zero())
                        throw internal_error("certificate fails w in M");
                    step.certificate = std::move(cert);
                    break;
                }
            }
        } catch (const resource_limit_error& e) {
            step.status = StepStatus::Inconclusive;
            step.note = e.what();
        }
        rep.steps.push_back(std::move(step));
        a_gens.push_back(zT[i - 1]);
    }

    bool any_fail = false, any_open = false;
    for (const DseqStep& s : rep.steps) {
        any_fail |= s.status == StepStatus::Fail;
        any_open |= s.status == StepStatus::Inconclusive;
    }
    rep.verdict = any_fail ? Verdict::Fail : (any_open ? Verdict::Inconclusive : Verdict::Pass);
    return rep;
}

} // namespace

DseqReport is_d_sequence_on_rees(const Ideal& ideal, const ReesPresentation& pres,
                                 const std::vector<Poly>& z, const MonomialOrder* ord,
                                 const GBLimits& lim) {
    if (pres.images.size() != ideal.gens().size())
        throw input_error("presentation does not match the ideal");
    MonomialOrder ordT = ord ? *ord : MonomialOrder::degrevlex(pres.ext->nvars());
    ordT.validate(pres.ext->nvars());
    return run_steps(pres, z, ordT, lim);
}

DseqReport is_d_sequence_on_rees(const Ideal& ideal, const std::vector<Poly>& z,
                                 const MonomialOrder* ord, const GBLimits& lim) {
    basis_from_forms(z, *ideal.ring());  // report bad sequences before anything heavy
    ReesPresentation pres;
    try {
        pres = rees_ideal(ideal, lim);
    } catch (const resource_limit_error& e) {
        DseqReport rep;
        rep.base = ideal.ring();
        rep.sequence = z;
        rep.verdict = Verdict::Inconclusive;
        rep.warnings.push_back(std::string("kernel computation hit a cap: ") + e.what());
        return rep;
    }
    return is_d_sequence_on_rees(ideal, pres, z, ord, lim);
}

DseqReport generic_d_sequence(const Ideal& ideal, int trials, uint64_t seed, long bound,
                              const MonomialOrder* ord, const GBLimits& lim) {
    if (trials <= 0) throw input_error("trials must be >= 1");
    ReesPresentation pres;
    try {
        pres = rees_ideal(ideal, lim);
    } catch (const resource_limit_error& e) {
        DseqReport rep;
        rep.base = ideal.ring();
        rep.generic = true;
        rep.seed = seed;
        rep.verdict = Verdict::Inconclusive;
        rep.warnings.push_back(std::string("kernel computation hit a cap: ") + e.what());
        return rep;
    }
    const RingPtr& base = ideal.ring();
    MonomialOrder drl = MonomialOrder::degrevlex(pres.ext->nvars());
    DseqReport last;
    for (int t = 0; t < trials; ++t) {
        LinearChange ch = random_basis(*base, seed + static_cast<uint64_t>(t), bound);
        std::vector<Poly> z;
        z.reserve(base->nvars());
        MonomialOrder base_ord = MonomialOrder::degrevlex(base->nvars());
        for (int i = 0; i < base->nvars(); ++i) z.push_back(ch.form(i, *base, base_ord));
        DseqReport rep = is_d_sequence_on_rees(ideal, pres, z, ord ? ord : &drl, lim);
        rep.generic = true;
        rep.seed = seed + static_cast<uint64_t>(t);
        rep.trial = t;
        if (base->characteristic() != 0)
            rep.warnings.push_back("prime-field mode is heuristic; the certificate assumes an "
                                   "infinite field");
        if (rep.passed()) return rep;
        last = std::move(rep);
    }
    last.warnings.push_back("failed random trials are evidence against the property, not a "
                            "disproof");
    return last;
}

bool monomial_step_check_at(const MonomialIdeal& ideal, int tested_var,
                            const std::vector<int>& remaining_vars) {
    const RingCtx& ring = *ideal.ring();
    int xc = ring.x_count();
    for (const Monomial& u : ideal.gens()) {
        if (u.exp(tested_var) == 0) continue;
        if (u.exp(tested_var) != 1) return false;
        bool pure = true;
        for (int k = 0; k < xc && pure; ++k)
            if (k != tested_var && u.exp(k) > 0) pure = false;
        if (!pure) return false;
        Monomial yb = mono_div(u, mono_var(ring, tested_var));
        for (int j : remaining_vars)
            if (!ideal.contains(mono_mul(yb, mono_var(ring, j)))) return false;
    }
    return true;
}

bool monomial_step_check(const MonomialIdeal& ideal, int i) {
    const RingCtx& ring = *ideal.ring();
    if (i < 1 || i > ring.x_count()) throw input_error("step index out of range");
    std::vector<int> remaining;
    for (int j = i - 1; j < ring.x_count(); ++j) remaining.push_back(j);
    return monomial_step_check_at(ideal, i - 1, remaining);
}

PropResult prop_conclusion_check(const ReesPresentation& pres, const std::vector<int>& chain,
                                 const std::vector<MonomialOrder>& orders, const GBLimits& lim) {
    const RingPtr& base = pres.base;
    const RingPtr& ext = pres.ext;
    int n = base->nvars();
    int N = ext->nvars();

    std::vector<bool> seen(n, false);
    if (static_cast<int>(chain.size()) != n)
        throw input_error("variable chain must list every base variable");
    for (int v : chain) {
        if (v < 0 || v >= n || seen[v]) throw input_error("variable chain is not a permutation");
        seen[v] = true;
    }
    if (!orders.empty() && orders.size() != 1 && static_cast<int>(orders.size()) != n)
        throw input_error("provide one order, one per step, or none");

    auto candidates_for = [&](int i) -> std::vector<MonomialOrder> {
        if (static_cast<int>(orders.size()) == n) return {orders[i - 1]};
        if (orders.size() == 1) return {orders[0]};
        std::vector<int> fwd = chain, rev(chain.rbegin(), chain.rend());
        for (int k = n; k < N; ++k) {
            fwd.push_back(k);
            rev.push_back(k);
        }
        return {MonomialOrder::degrevlex(fwd), MonomialOrder::lex(fwd),
                MonomialOrder::degrevlex(rev), MonomialOrder::lex(rev)};
    };

    PropResult res;
    res.pass = true;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> killed(chain.begin(), chain.begin() + (i - 1));
        std::vector<Poly> gens;
        for (const Poly& g : pres.kernel.gens()) {
            Poly h = poly_kill_vars(g, killed);
            if (!h.is_zero()) gens.push_back(std::move(h));
        }
        std::vector<int> remaining(chain.begin() + (i - 1), chain.end());
        PropStep step;
        step.index = i;
        std::vector<MonomialOrder> cands = candidates_for(i);
        if (gens.empty()) {
            step.pass = true;
            step.initial = MonomialIdeal(ext, {});
            step.order_used = cands.front();
        } else {
            for (const MonomialOrder& cand : cands) {
                GroebnerBasis gb = buchberger(*ext, gens, cand, lim);
                MonomialIdeal ini = initial_ideal(ext, gb);
                bool ok = monomial_step_check_at(ini, chain[i - 1], remaining);
                step.initial = std::move(ini);
                step.order_used = cand;
                step.pass = ok;
                if (ok) break;
            }
        }
        res.pass = res.pass && step.pass;
        res.steps.push_back(std::move(step));
    }
    return res;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(StepStatus s) {
    switch (s) {
        case StepStatus::Pass: return "pass";
        case StepStatus::Fail: return "fail";
        case StepStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

} // namespace cwlin

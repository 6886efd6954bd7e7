#include "cwlin/rees.hpp"

namespace cwlin {

namespace {

std::vector<std::string> presentation_var_names(const RingCtx& base, int m) {
    const char* stems[] = {"y", "yy", "q", "qq"};
    for (const char* stem : stems) {
        std::vector<std::string> names;
        bool clash = false;
        for (int j = 1; j <= m && !clash; ++j) {
            std::string nm = stem + std::to_string(j);
            if (base.index_of(nm) >= 0) clash = true;
            names.push_back(nm);
        }
        if (!clash) return names;
    }
    // Last resort: underscore-extend until fresh.
    std::vector<std::string> names;
    for (int j = 1; j <= m; ++j)
        names.push_back(fresh_var_name(base, "y" + std::to_string(j)));
    return names;
}

} // namespace

ReesPresentation rees_ideal(const Ideal& ideal, const GBLimits& lim) {
    const RingPtr& base = ideal.ring();
    if (base->y_count() != 0)
        throw input_error("rees presentation expects a base ring without a y-block");
    const std::vector<Poly>& f = ideal.gens();
    int m = static_cast<int>(f.size());
    if (m == 0) throw input_error("rees presentation of the zero ideal");
    for (const Poly& g : f)
        if (g.is_zero()) throw input_error("rees presentation needs nonzero generators");

    int n = base->nvars();
    RingPtr ext = extend_ring(base, presentation_var_names(*base, m), /*as_y=*/true);
    RingPtr work = extend_ring(ext, {fresh_var_name(*ext, "w")}, /*as_y=*/true);
    CoeffField F(base->characteristic());
    MonomialOrder drl_work = MonomialOrder::degrevlex(work->nvars());

    int widx = work->nvars() - 1;
    Poly w = poly_var(*work, widx);
    std::vector<Poly> gens;
    gens.reserve(m);
    for (int j = 0; j < m; ++j) {
        Poly yj = poly_var(*work, n + j);
        // f_j lives in S; lift across the y-block plus w.
        Poly wf = poly_mul(poly_lift(f[j], m + 1), w, F, drl_work);
        gens.push_back(poly_sub(yj, wf, F, drl_work));
    }
    Ideal aux(work, std::move(gens));
    Ideal elim = ideal_eliminate(aux, {widx}, OrderKind::DegRevLex, lim);

    std::vector<Poly> kgens;
    kgens.reserve(elim.gens().size());
    for (const Poly& g : elim.gens()) kgens.push_back(poly_project(g, 1));

    ReesPresentation p;
    p.base = base;
    p.ext = ext;
    p.images = f;
    p.kernel = Ideal(ext, std::move(kgens));
    return p;
}

std::vector<int> substitution_defects(const ReesPresentation& p) {
    const RingCtx& ext = *p.ext;
    CoeffField F(ext.characteristic());
    int n = p.base->nvars();
    int m = static_cast<int>(p.images.size());
    RingPtr work = extend_ring(p.ext, {fresh_var_name(ext, "w")}, /*as_y=*/true);
    MonomialOrder ord = MonomialOrder::degrevlex(work->nvars());
    Poly w = poly_var(*work, work->nvars() - 1);
    std::vector<std::optional<Poly>> images(work->nvars());
    for (int j = 0; j < m; ++j)
        images[n + j] = poly_mul(poly_lift(p.images[j], m + 1), w, F, ord);
    std::vector<int> bad;
    for (size_t k = 0; k < p.kernel.gens().size(); ++k) {
        Poly g = poly_lift(p.kernel.gens()[k], 1);
        Poly val = poly_substitute(poly_resort(g, F, ord), images, *work, F, ord);
        if (!val.is_zero()) bad.push_back(static_cast<int>(k));
    }
    return bad;
}

XConditionResult x_condition(const ReesPresentation& p, const GBLimits& lim) {
    XConditionResult res;
    MonomialOrder lex = MonomialOrder::lex(p.ext->nvars());
    const GroebnerBasis& gb = p.kernel.groebner(lex, lim);
    res.initial = initial_ideal(p.ext, gb);
    res.holds = true;
    for (const Monomial& u : res.initial.gens()) {
        if (mono_deg_range(u, 0, p.ext->x_count()) > 1) {
            res.holds = false;
            res.offending.push_back(u);
        }
    }
    return res;
}

} // namespace cwlin

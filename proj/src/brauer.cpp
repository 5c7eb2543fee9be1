#include "brauer.hpp"

#include "cone.hpp"
#include "errors.hpp"

namespace fanlab {

namespace {

void require_smooth(const Fan& f) {
    for (const Cone& c : f.cones)
        if (!classify(c).smooth) throw HypothesisError("fan not smooth");
}

void require_nu_valid(const Int& nu, const FieldDescriptor& k) {
    if (nu < 2) throw UsageError("nu must be at least 2");
    if (k.kind == FieldKind::real && nu != 2)
        throw UsageError("the real field preset carries nu = 2 data only");
    if (sgn(k.characteristic) != 0 && nu % k.characteristic == 0)
        throw HypothesisError("ν not invertible in k");
}

}  // namespace

FieldDescriptor FieldDescriptor::algebraically_closed_preset() {
    FieldDescriptor k;
    k.kind = FieldKind::algebraically_closed;
    k.characteristic = 0;
    k.has_primitive_root = true;
    return k;
}

FieldDescriptor FieldDescriptor::real_preset() {
    FieldDescriptor k;
    k.kind = FieldKind::real;
    k.characteristic = 0;
    k.h1_nu = AbelianGroup{0, {Int(2)}};
    k.brauer_nu = AbelianGroup{0, {Int(2)}};
    k.has_primitive_root = true;  // -1 generates mu_2
    return k;
}

std::vector<Int> invariant_factors(const Fan& f) {
    require_smooth(f);
    const std::size_t r = f.ambient_rank;
    std::vector<Int> a(r, Int(0));
    if (f.rays.empty()) return a;
    const SnfResult snf = smith_normal_form(IntMatrix::from_rows(f.rays, r));
    for (std::size_t i = 0; i < snf.diag.size(); ++i) a[i] = snf.diag[i];
    return a;
}

AbelianGroup h1_mu(const Fan& f, const Int& nu, const FieldDescriptor& k) {
    require_nu_valid(nu, k);
    std::vector<Int> orders;
    for (const Int& ai : invariant_factors(f))
        orders.push_back(sgn(ai) == 0 ? nu : gcd_int(nu, ai));
    return direct_sum(k.h1_nu, abelian_from_cyclic(std::move(orders)));
}

AbelianGroup brauer_nu(const Fan& f, const Int& nu, const FieldDescriptor& k) {
    require_nu_valid(nu, k);
    const std::vector<Int> a = invariant_factors(f);
    const std::size_t r = a.size();

    AbelianGroup out = k.brauer_nu;
    std::vector<Int> symbol_orders;
    for (std::size_t i = 0; i < r; ++i) {
        const Int g = sgn(a[i]) == 0 ? nu : gcd_int(nu, a[i]);
        out = direct_sum(out, tensor_with_cyclic(k.h1_nu, g));
        for (std::size_t copies = 0; copies + i + 1 < r; ++copies) symbol_orders.push_back(g);
    }
    return direct_sum(out, abelian_from_cyclic(std::move(symbol_orders)));
}

AbelianGroup brauer_real(const Fan& f) {
    std::size_t t = 0;
    for (const Int& ai : invariant_factors(f))
        if (gcd_int(Int(2), ai) != 1) ++t;
    const std::size_t rank = 1 + t + t * (t - 1) / 2;
    return abelian_from_cyclic(std::vector<Int>(rank, Int(2)));
}

BrauerReport brauer_report(const Fan& f, const Int& nu, const FieldDescriptor& k) {
    BrauerReport rep;
    rep.nu = nu;
    rep.factors = invariant_factors(f);
    rep.h1 = h1_mu(f, nu, k);
    rep.brauer = brauer_nu(f, nu, k);
    return rep;
}

}  // namespace fanlab

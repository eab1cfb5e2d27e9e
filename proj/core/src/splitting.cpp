#include "sullivan/splitting.hpp"

#include <algorithm>

namespace sullivan {

namespace {

using Images = std::vector<Polynomial>;

Polynomial apply_images(const Images& images, const GenSet& gens, const Polynomial& p) {
    Polynomial out(gens);
    for (const auto& [m, c] : p.terms()) {
        Polynomial prod = Polynomial::constant(gens, c);
        for (const auto& [g, e] : m.factors()) prod = prod * images.at(g).pow(e);
        out += prod;
    }
    return out;
}

Images identity_images(const GenSet& gens) {
    Images out;
    for (std::size_t i = 0; i < gens.size(); ++i) out.push_back(Polynomial::gen(gens, i));
    return out;
}

/// phi(x) = x - (-1)^|x| sigma(x) w  (equivalently x + w sigma(x)); the
/// parity-dependent sign is what makes the map multiplicative for odd w.
Images basis_change_images(const GenSet& gens, const PhiDerivation& sigma, std::size_t w,
                           const Rational& direction) {
    Images out;
    Polynomial wpoly = Polynomial::gen(gens, w);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        Polynomial img = Polynomial::gen(gens, g);
        const Polynomial& sg = sigma.value_on(g);
        if (!sg.is_zero()) {
            Rational sgn = gens.degree(g) % 2 == 0 ? 1 : -1;
            img += (sg * wpoly).scaled(-sgn * direction);
        }
        out.push_back(std::move(img));
    }
    return out;
}

void check_stage_generator(const SullivanAlgebra& total, std::size_t idx,
                           const std::string& name) {
    if (!total.gens().gen(idx).is_odd())
        throw RefusalError("splitting generator '" + name + "' must have odd degree");
    if (!total.d_of(idx).is_zero())
        throw RefusalError("splitting generator '" + name +
                           "' is not closed in the total differential");
}

std::size_t base_index_of(const KsExtension& ks, const std::string& name) {
    int idx = ks.base().gens().index_of(name);
    if (idx < 0) throw Error("'" + name + "' is not a base generator");
    return static_cast<std::size_t>(idx);
}

SplittingCertificate run_stages(const KsExtension& ks,
                                const std::vector<std::string>& names,
                                const std::vector<StageWitness>* given) {
    SplittingCertificate cert;
    cert.original = ks;
    const GenSet& gens = ks.total().gens();

    SullivanAlgebra cur = ks.total();
    Images alpha = identity_images(gens);      // phi_1 o ... o phi_i
    Images alpha_inv = identity_images(gens);  // phi_i^-1 o ... o phi_1^-1

    for (std::size_t stage = 0; stage < names.size(); ++stage) {
        const std::string& name = names[stage];
        std::size_t idx = base_index_of(ks, name);
        check_stage_generator(cur, idx, name);

        PhiDerivation sigma;
        if (given) {
            sigma = (*given)[stage].sigma;
        } else {
            auto id = std::make_shared<Morphism>(Morphism::identity(cur));
            auto slice = complex_slice(id, gens.degree(idx));
            auto closing = close_dual(slice, idx, idx, ks.base_count());
            if (!closing)
                throw RefusalError("no witness for '" + name +
                                   "' at stage " + std::to_string(stage + 1) +
                                   ": the dual does not extend to a closed derivation");
            sigma = closing->scaled(-1);  // delta(w^* - sigma) = 0
        }

        Images phi = basis_change_images(gens, sigma, idx, 1);
        Images phi_inv = basis_change_images(gens, sigma, idx, -1);

        std::vector<Polynomial> new_d;
        for (std::size_t g = 0; g < gens.size(); ++g)
            new_d.push_back(apply_images(phi_inv, gens, cur.apply_d(phi[g])));
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (const auto& [m, c] : new_d[g].terms())
                if (m.contains(static_cast<std::uint32_t>(idx)))
                    throw InternalError(
                        "conjugated differential still mentions '" + name +
                        "' on generator '" + gens.name(g) +
                        "': invalid witness or sign convention bug");
        cur = SullivanAlgebra(gens, std::move(new_d));

        // alpha <- alpha o phi_stage (phi applied first on the factored side).
        Images next_alpha;
        for (std::size_t g = 0; g < gens.size(); ++g)
            next_alpha.push_back(apply_images(alpha, gens, phi[g]));
        alpha = std::move(next_alpha);
        Images next_inv;
        for (std::size_t g = 0; g < gens.size(); ++g)
            next_inv.push_back(apply_images(phi_inv, gens, alpha_inv[g]));
        alpha_inv = std::move(next_inv);

        cert.split_names.push_back(name);
        cert.split_indices.push_back(idx);
        cert.witnesses.push_back({name, sigma});
    }

    cert.factored = cur;
    cert.automorphism = Morphism(cert.factored, ks.total(), alpha);
    cert.inverse = Morphism(ks.total(), cert.factored, alpha_inv);
    return cert;
}

}  // namespace

std::optional<PhiDerivation> find_witness(const KsExtension& ks, const std::string& generator) {
    std::size_t idx = base_index_of(ks, generator);
    check_stage_generator(ks.total(), idx, generator);
    auto id = std::make_shared<Morphism>(Morphism::identity(ks.total()));
    auto slice = complex_slice(id, ks.total().gens().degree(idx));
    auto closing = close_dual(slice, idx, idx, ks.base_count());
    if (!closing) return std::nullopt;
    return closing->scaled(-1);
}

SplittingCertificate change_of_basis(const KsExtension& ks,
                                     const std::vector<std::string>& generators) {
    return run_stages(ks, generators, nullptr);
}

SplittingCertificate change_of_basis(const KsExtension& ks,
                                     const std::vector<StageWitness>& witnesses) {
    std::vector<std::string> names;
    for (const auto& w : witnesses) names.push_back(w.generator);
    return run_stages(ks, names, &witnesses);
}

CertificateCheck verify_certificate(const SplittingCertificate& cert) {
    CertificateCheck check;
    const auto& gens = cert.original.total().gens();
    const auto& d_orig = cert.original.total();
    const auto& d_fact = cert.factored;
    auto fail = [&](const std::string& msg) {
        check.ok = false;
        check.failures.push_back(msg);
    };

    for (std::size_t i = 0; i < cert.split_indices.size(); ++i) {
        std::size_t w = cert.split_indices[i];
        if (!gens.gen(w).is_odd()) fail("split generator '" + gens.name(w) + "' is even");
        if (!d_orig.d_of(w).is_zero())
            fail("split generator '" + gens.name(w) + "' is not closed");
        if (!d_fact.d_of(w).is_zero())
            fail("factored differential does not close '" + gens.name(w) + "'");
    }
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (const auto& [m, c] : d_fact.d_of(g).terms())
            for (std::size_t w : cert.split_indices)
                if (m.contains(static_cast<std::uint32_t>(w)))
                    fail("factored differential of '" + gens.name(g) + "' mentions '" +
                         gens.name(w) + "'");
        auto dd = d_fact.apply_d(d_fact.d_of(g));
        if (!dd.is_zero())
            fail("factored differential does not square to zero on '" + gens.name(g) + "'");
        auto lhs = cert.automorphism.apply(d_fact.d_of(g));
        auto rhs = d_orig.apply_d(cert.automorphism.image_of(g));
        if (!(lhs == rhs))
            fail("automorphism does not intertwine the differentials on '" + gens.name(g) +
                 "'");
        auto round = cert.inverse.apply(cert.automorphism.image_of(g));
        if (!(round == Polynomial::gen(gens, g)))
            fail("inverse fails on '" + gens.name(g) + "'");
        auto round2 = cert.automorphism.apply(cert.inverse.image_of(g));
        if (!(round2 == Polynomial::gen(gens, g)))
            fail("automorphism o inverse fails on '" + gens.name(g) + "'");
    }
    return check;
}

PullbackReport associated_pullback(const KsExtension& ks, const SplittingCertificate& cert) {
    auto check = verify_certificate(cert);
    if (!check.ok)
        throw RefusalError("associated_pullback requires a verified certificate: " +
                           (check.failures.empty() ? std::string("unknown")
                                                   : check.failures.front()));
    PullbackReport report;
    const auto& base = ks.base();
    std::vector<bool> split(base.gen_count(), false);
    for (std::size_t w : cert.split_indices) split[w] = true;

    std::vector<Generator> kept;
    std::vector<int> remap(base.gen_count(), -1);
    for (std::size_t i = 0; i < base.gen_count(); ++i) {
        if (split[i]) continue;
        remap[i] = static_cast<int>(kept.size());
        kept.push_back(base.gens().gen(i));
    }
    GenSet quot_gens(kept);
    auto project = [&](const Polynomial& p) {
        Polynomial out(quot_gens);
        for (const auto& [m, c] : p.terms()) {
            bool dies = false;
            std::vector<std::uint32_t> factors;
            for (const auto& [g, e] : m.factors()) {
                if (split[g]) {
                    dies = true;
                    break;
                }
                for (std::uint32_t t = 0; t < e; ++t)
                    factors.push_back(static_cast<std::uint32_t>(remap[g]));
            }
            if (dies) continue;
            auto nm = Monomial::from_factors(quot_gens, factors);
            if (nm) out.add_term(nm->first, c * nm->second);
        }
        return out;
    };
    std::vector<Polynomial> quot_d;
    for (std::size_t i = 0; i < base.gen_count(); ++i)
        if (!split[i]) quot_d.push_back(project(base.d_of(i)));
    SullivanAlgebra quotient(quot_gens, std::move(quot_d));

    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < base.gen_count(); ++i)
        images.push_back(split[i] ? Polynomial(quot_gens)
                                  : Polynomial::gen(quot_gens, static_cast<std::size_t>(remap[i])));
    report.base_quotient = Morphism(base, quotient, std::move(images));
    report.model = pullback_model(ks, report.base_quotient);

    ObstructionOptions opts;
    opts.definition_cross_check = false;
    report.o_f = obstruction_group(ks, opts).o;
    report.o_fa = obstruction_group(report.model, opts).o;
    report.bound_satisfied = report.o_fa + cert.k() <= report.o_f;
    if (!report.bound_satisfied)
        throw InternalError("o(f_a) exceeds o(f) - k on a verified certificate");
    return report;
}

}  // namespace sullivan

//! The Bianchi three-forms of the system: the degree-3 generators of the
//! differential ideal, linear in the starred one-forms, with wedge partners
//! among {η, θ, θ̄} only.

use crate::exterior::{Form, StarFam};
use crate::scalar::GaussianRational;

use super::system::QcSystem;

/// A source of starred one-form components. The default is the system's own
/// coordinate resolution; the shifted system substitutes hatted forms.
pub type StarResolver<'a> = &'a dyn Fn(StarFam, &[u16], bool) -> Form;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum BianchiLabel {
    /// Δ_{ab} from d²Γ.
    Gamma(u16, u16),
    /// Δ_a from d²φ.
    Phi(u16),
    /// Ψ₁ from d²ψ₁ (real).
    Psi1,
    /// Ψ₂ + iΨ₃.
    Psi23,
}

impl std::fmt::Display for BianchiLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BianchiLabel::Gamma(a, b) => write!(f, "Δ[{a},{b}]"),
            BianchiLabel::Phi(a) => write!(f, "Δ[{a}]"),
            BianchiLabel::Psi1 => write!(f, "Ψ1"),
            BianchiLabel::Psi23 => write!(f, "Ψ2+iΨ3"),
        }
    }
}

/// The canonical set of Bianchi three-forms. By the 𝔧-symmetry of the
/// two-index family, the plain pairs `a ≤ b ≤ n` together with the mixed
/// pairs `(a, b+n)` span everything the conjugates would add.
#[derive(Clone, Debug)]
pub struct BianchiSet {
    pub n: u16,
    pub forms: Vec<(BianchiLabel, Form)>,
}

impl BianchiSet {
    pub fn get(&self, label: BianchiLabel) -> Option<&Form> {
        self.forms.iter().find(|(l, _)| *l == label).map(|(_, f)| f)
    }

    /// Rewrite every form over the adapted ε basis.
    pub fn to_epsilon(&self, sys: &QcSystem) -> BianchiSet {
        BianchiSet {
            n: self.n,
            forms: self
                .forms
                .iter()
                .map(|(l, f)| (*l, sys.to_epsilon(f)))
                .collect(),
        }
    }
}

fn gi() -> GaussianRational {
    GaussianRational::i()
}

/// 𝔧 applied to a starred component array: toggle, conjugate, sign.
pub fn star_j(sys: &QcSystem, star: StarResolver, fam: StarFam, idx: &[u16]) -> Form {
    let t = sys.spec.toggle_all(idx);
    let f = star(fam, &t, true);
    if sys.spec.j_sign(idx) < 0 {
        f.neg()
    } else {
        f
    }
}

/// Δ_{ab}, valid for any index pair.
pub fn delta_gamma(sys: &QcSystem, star: StarResolver, a: u16, b: u16) -> Form {
    let spec = sys.spec;
    let mut f = Form::zero();
    // π^σ_{δ̄} S*_{abγσ} ∧ θ^γ ∧ θ^δ̄
    for g in spec.range() {
        for d in spec.range() {
            let (s, c) = spec.pi_partner(d);
            f.add_assign(
                &star(StarFam::S, &[a, b, g, s], false)
                    .wedge(&sys.theta(g))
                    .wedge(&sys.theta_bar(d))
                    .scale_int(c),
            );
        }
    }
    // V*_{abγ}∧θ^γ∧η₁ + π^{μ̄}_a π^{ν̄}_b V*_{μ̄ν̄γ̄}∧θ^γ̄∧η₁
    let (sa, ca) = spec.pi_partner(a);
    let (sb, cb) = spec.pi_partner(b);
    for g in spec.range() {
        f.add_assign(
            &star(StarFam::V, &[a, b, g], false)
                .wedge(&sys.theta(g))
                .wedge(&sys.eta(1)),
        );
        f.add_assign(
            &star(StarFam::V, &[sa, sb, g], true)
                .wedge(&sys.theta_bar(g))
                .wedge(&sys.eta(1))
                .scale_int(ca * cb),
        );
    }
    // −i π^σ_{γ̄} V*_{abσ}∧θ^γ̄∧(η₂+iη₃) + i (𝔧V*)_{abγ}∧θ^γ∧(η₂−iη₃)
    for g in spec.range() {
        let (s, c) = spec.pi_partner(g);
        f.add_assign(
            &star(StarFam::V, &[a, b, s], false)
                .wedge(&sys.theta_bar(g))
                .wedge(&sys.eta23_plus())
                .scale_g(&gi().scale(&crate::scalar::rat(-c))),
        );
        f.add_assign(
            &star_j(sys, star, StarFam::V, &[a, b, g])
                .wedge(&sys.theta(g))
                .wedge(&sys.eta23_minus())
                .times_i(),
        );
    }
    // −i L*_{ab}∧(η₂+iη₃)∧(η₂−iη₃)
    f.add_assign(
        &star(StarFam::L, &[a, b], false)
            .wedge(&sys.eta23_plus())
            .wedge(&sys.eta23_minus())
            .times_i()
            .neg(),
    );
    // + M*_{ab}∧η₁∧(η₂+iη₃) + (𝔧M*)_{ab}∧η₁∧(η₂−iη₃)
    f.add_assign(
        &star(StarFam::M, &[a, b], false)
            .wedge(&sys.eta(1))
            .wedge(&sys.eta23_plus()),
    );
    f.add_assign(
        &star_j(sys, star, StarFam::M, &[a, b])
            .wedge(&sys.eta(1))
            .wedge(&sys.eta23_minus()),
    );
    f
}

/// Δ_a, valid for any index.
pub fn delta_phi(sys: &QcSystem, star: StarResolver, a: u16) -> Form {
    let spec = sys.spec;
    let mut f = Form::zero();
    // −i π^ν_{γ̄} V*_{abν}∧θ^b∧θ^γ̄
    for b in spec.range() {
        for g in spec.range() {
            let (s, c) = spec.pi_partner(g);
            f.add_assign(
                &star(StarFam::V, &[a, b, s], false)
                    .wedge(&sys.theta(b))
                    .wedge(&sys.theta_bar(g))
                    .scale_g(&gi().scale(&crate::scalar::rat(-c))),
            );
        }
    }
    let (sa, ca) = spec.pi_partner(a);
    for b in spec.range() {
        // + π^{μ̄}_a L*_{μ̄b̄}∧θ^b̄∧η₁
        f.add_assign(
            &star(StarFam::L, &[sa, b], true)
                .wedge(&sys.theta_bar(b))
                .wedge(&sys.eta(1))
                .scale_int(ca),
        );
        // + M*_{ab}∧θ^b∧η₁
        f.add_assign(
            &star(StarFam::M, &[a, b], false)
                .wedge(&sys.theta(b))
                .wedge(&sys.eta(1)),
        );
        // −i π^ν_{b̄} M*_{aν}∧θ^b̄∧(η₂+iη₃)
        let (s, c) = spec.pi_partner(b);
        f.add_assign(
            &star(StarFam::M, &[a, s], false)
                .wedge(&sys.theta_bar(b))
                .wedge(&sys.eta23_plus())
                .scale_g(&gi().scale(&crate::scalar::rat(-c))),
        );
        // + i L*_{ab}∧θ^b∧(η₂−iη₃)
        f.add_assign(
            &star(StarFam::L, &[a, b], false)
                .wedge(&sys.theta(b))
                .wedge(&sys.eta23_minus())
                .times_i(),
        );
    }
    // −C*_a∧(η₂+iη₃)∧(η₂−iη₃)
    f.add_assign(
        &star(StarFam::C, &[a], false)
            .wedge(&sys.eta23_plus())
            .wedge(&sys.eta23_minus())
            .neg(),
    );
    // + i π^{μ̄}_a C*_{μ̄}∧η₁∧(η₂−iη₃) + H*_a∧η₁∧(η₂+iη₃)
    f.add_assign(
        &star(StarFam::C, &[sa], true)
            .wedge(&sys.eta(1))
            .wedge(&sys.eta23_minus())
            .scale_g(&gi().scale(&crate::scalar::rat(ca))),
    );
    f.add_assign(
        &star(StarFam::H, &[a], false)
            .wedge(&sys.eta(1))
            .wedge(&sys.eta23_plus()),
    );
    f
}

/// Ψ₁.
pub fn psi1_form(sys: &QcSystem, star: StarResolver) -> Form {
    let spec = sys.spec;
    let mut f = Form::zero();
    // 4 π^μ_{γ̄} L*_{bμ}∧θ^b∧θ^γ̄
    for b in spec.range() {
        for g in spec.range() {
            let (s, c) = spec.pi_partner(g);
            f.add_assign(
                &star(StarFam::L, &[b, s], false)
                    .wedge(&sys.theta(b))
                    .wedge(&sys.theta_bar(g))
                    .scale_int(4 * c),
            );
        }
    }
    for b in spec.range() {
        // 4 C*_b∧θ^b∧η₁ + 4 C*_{b̄}∧θ^b̄∧η₁
        f.add_assign(
            &star(StarFam::C, &[b], false)
                .wedge(&sys.theta(b))
                .wedge(&sys.eta(1))
                .scale_int(4),
        );
        f.add_assign(
            &star(StarFam::C, &[b], true)
                .wedge(&sys.theta_bar(b))
                .wedge(&sys.eta(1))
                .scale_int(4),
        );
        // + 4i π_b^{μ̄} C*_{μ̄}∧θ^b∧(η₂−iη₃) − 4i π^μ_{b̄} C*_μ∧θ^b̄∧(η₂+iη₃)
        let (s, c) = spec.pi_partner(b);
        f.add_assign(
            &star(StarFam::C, &[s], true)
                .wedge(&sys.theta(b))
                .wedge(&sys.eta23_minus())
                .scale_g(&gi().scale(&crate::scalar::rat(4 * c))),
        );
        f.add_assign(
            &star(StarFam::C, &[s], false)
                .wedge(&sys.theta_bar(b))
                .wedge(&sys.eta23_plus())
                .scale_g(&gi().scale(&crate::scalar::rat(-4 * c))),
        );
    }
    // + P*∧η₁∧(η₂+iη₃) + conj(P*)∧η₁∧(η₂−iη₃) + i R*∧(η₂+iη₃)∧(η₂−iη₃)
    f.add_assign(
        &star(StarFam::P, &[], false)
            .wedge(&sys.eta(1))
            .wedge(&sys.eta23_plus()),
    );
    f.add_assign(
        &star(StarFam::P, &[], true)
            .wedge(&sys.eta(1))
            .wedge(&sys.eta23_minus()),
    );
    f.add_assign(
        &star(StarFam::R, &[], false)
            .wedge(&sys.eta23_plus())
            .wedge(&sys.eta23_minus())
            .times_i(),
    );
    f
}

/// Ψ₂ + iΨ₃.
pub fn psi23_form(sys: &QcSystem, star: StarResolver) -> Form {
    let spec = sys.spec;
    let mut f = Form::zero();
    for b in spec.range() {
        let (s, c) = spec.pi_partner(b);
        // 4i π^{μ̄}_b M*_{μ̄γ̄}∧θ^b∧θ^γ̄
        for g in spec.range() {
            f.add_assign(
                &star(StarFam::M, &[s, g], true)
                    .wedge(&sys.theta(b))
                    .wedge(&sys.theta_bar(g))
                    .scale_g(&gi().scale(&crate::scalar::rat(4 * c))),
            );
        }
        // + 4i π^{μ̄}_b C*_{μ̄}∧θ^b∧η₁
        f.add_assign(
            &star(StarFam::C, &[s], true)
                .wedge(&sys.theta(b))
                .wedge(&sys.eta(1))
                .scale_g(&gi().scale(&crate::scalar::rat(4 * c))),
        );
        // − 4 H*_{b̄}∧θ^b̄∧η₁ − 4 C*_{b̄}∧θ^b̄∧(η₂+iη₃)
        f.add_assign(
            &star(StarFam::H, &[b], true)
                .wedge(&sys.theta_bar(b))
                .wedge(&sys.eta(1))
                .scale_int(-4),
        );
        f.add_assign(
            &star(StarFam::C, &[b], true)
                .wedge(&sys.theta_bar(b))
                .wedge(&sys.eta23_plus())
                .scale_int(-4),
        );
        // − 4i π^{μ̄}_b H*_{μ̄}∧θ^b∧(η₂−iη₃)
        f.add_assign(
            &star(StarFam::H, &[s], true)
                .wedge(&sys.theta(b))
                .wedge(&sys.eta23_minus())
                .scale_g(&gi().scale(&crate::scalar::rat(-4 * c))),
        );
    }
    // −i R*∧η₁∧(η₂+iη₃) + conj(Q*)∧η₁∧(η₂−iη₃) − conj(P*)∧(η₂+iη₃)∧(η₂−iη₃)
    f.add_assign(
        &star(StarFam::R, &[], false)
            .wedge(&sys.eta(1))
            .wedge(&sys.eta23_plus())
            .times_i()
            .neg(),
    );
    f.add_assign(
        &star(StarFam::Q, &[], true)
            .wedge(&sys.eta(1))
            .wedge(&sys.eta23_minus()),
    );
    f.add_assign(
        &star(StarFam::P, &[], true)
            .wedge(&sys.eta23_plus())
            .wedge(&sys.eta23_minus())
            .neg(),
    );
    f
}

/// Build the canonical Bianchi set with the given starred resolver.
pub fn bianchi_forms_with(sys: &QcSystem, star: StarResolver) -> BianchiSet {
    let n = sys.n();
    let mut forms = vec![];
    for a in 1..=n {
        for b in a..=n {
            forms.push((BianchiLabel::Gamma(a, b), delta_gamma(sys, star, a, b)));
        }
    }
    for a in 1..=n {
        for b in 1..=n {
            forms.push((
                BianchiLabel::Gamma(a, b + n),
                delta_gamma(sys, star, a, b + n),
            ));
        }
    }
    for a in sys.spec.range() {
        forms.push((BianchiLabel::Phi(a), delta_phi(sys, star, a)));
    }
    forms.push((BianchiLabel::Psi1, psi1_form(sys, star)));
    forms.push((BianchiLabel::Psi23, psi23_form(sys, star)));
    BianchiSet { n, forms }
}

/// The canonical Bianchi set over the system's own starred coordinates.
pub fn bianchi_forms(sys: &QcSystem) -> BianchiSet {
    let star: StarResolver = &|fam, idx, barred| sys.star(fam, idx, barred);
    bianchi_forms_with(sys, star)
}

/// Count of canonical two-index labels `(a ≤ b)` over all `1..=2n` indices
/// before the 𝔧-identification (used by reports and tests).
pub fn two_index_pair_count(n: u16) -> u64 {
    let d = 2 * n as u64;
    d * (d + 1) / 2
}

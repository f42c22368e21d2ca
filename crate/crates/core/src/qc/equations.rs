//! Transcription of the structure equations of the canonical connection and
//! of the derivative rules for the curvature components.
//!
//! Index conventions used throughout: `g_{αβ̄} = δ`, so raising/lowering an
//! index just toggles its bar; every variant of π reduces to the constant
//! table `pi(a, b)` with the *lower-first* reading of mixed positions, e.g.
//! `π^α_{β̄} = pi(β, α)` and `π^{σ̄}_α = pi(α, σ)`. Complex one-forms are
//! combinations of the real coframe generators, so conjugation acts on
//! coefficients only.

use crate::exterior::{Form, StarFam};
use crate::scalar::GaussianRational;

use super::families::Shape;
use super::system::{Corruption, QcSystem};

fn gi() -> GaussianRational {
    GaussianRational::i()
}

fn gr(a: i64, b: i64) -> GaussianRational {
    GaussianRational::of(a, b, 0, 1)
}

/// dη_s.
pub fn d_eta(sys: &QcSystem, s: u8) -> Form {
    let spec = sys.spec;
    let mut f = Form::zero();
    match s {
        1 => {
            f.add_assign(&sys.phi0().wedge(&sys.eta(1)).neg());
            f.add_assign(&sys.phi_s(2).wedge(&sys.eta(3)).neg());
            f.add_assign(&sys.phi_s(3).wedge(&sys.eta(2)));
            for a in spec.range() {
                // 2i g_{αβ̄} θ^α ∧ θ^β̄
                f.add_assign(
                    &sys.theta(a)
                        .wedge(&sys.theta_bar(a))
                        .scale_g(&gi().scale(&crate::scalar::rat(2))),
                );
            }
        }
        2 => {
            f.add_assign(&sys.phi0().wedge(&sys.eta(2)).neg());
            f.add_assign(&sys.phi_s(3).wedge(&sys.eta(1)).neg());
            f.add_assign(&sys.phi_s(1).wedge(&sys.eta(3)));
            for a in spec.range() {
                for b in spec.range() {
                    let p = spec.pi(a, b);
                    if p == 0 {
                        continue;
                    }
                    f.add_assign(&sys.theta(a).wedge(&sys.theta(b)).scale_int(p));
                    f.add_assign(&sys.theta_bar(a).wedge(&sys.theta_bar(b)).scale_int(p));
                }
            }
        }
        3 => {
            f.add_assign(&sys.phi0().wedge(&sys.eta(3)).neg());
            f.add_assign(&sys.phi_s(1).wedge(&sys.eta(2)).neg());
            f.add_assign(&sys.phi_s(2).wedge(&sys.eta(1)));
            for a in spec.range() {
                for b in spec.range() {
                    let p = spec.pi(a, b);
                    if p == 0 {
                        continue;
                    }
                    f.add_assign(
                        &sys.theta(a)
                            .wedge(&sys.theta(b))
                            .scale_g(&gi().scale(&crate::scalar::rat(-p))),
                    );
                    f.add_assign(
                        &sys.theta_bar(a)
                            .wedge(&sys.theta_bar(b))
                            .scale_g(&gi().scale(&crate::scalar::rat(p))),
                    );
                }
            }
        }
        _ => unreachable!(),
    }
    f
}

/// dθ^α.
pub fn d_theta(sys: &QcSystem, a: u16) -> Form {
    let spec = sys.spec;
    let mut f = Form::zero();
    // −i φ^α ∧ η₁
    f.add_assign(&sys.phi_up(a).wedge(&sys.eta(1)).times_i().neg());
    // −π^α_{σ̄} φ^σ̄ ∧ (η₂+iη₃), π^α_{σ̄} = pi(σ, a)
    for s in spec.range() {
        let p = spec.pi(s, a);
        if p != 0 {
            f.add_assign(&sys.phi_up_bar(s).wedge(&sys.eta23_plus()).scale_int(-p));
        }
    }
    // −π^{ασ} Γ_{σβ} ∧ θ^β
    for s in spec.range() {
        let p = spec.pi(a, s);
        if p == 0 {
            continue;
        }
        for b in spec.range() {
            f.add_assign(&sys.gamma(s, b).wedge(&sys.theta(b)).scale_int(-p));
        }
    }
    // −½(φ₀+iφ₁) ∧ θ^α
    let w = sys.phi0().add(&sys.phi_s(1).times_i());
    f.add_assign(&w.wedge(&sys.theta(a)).scale_g(&gr(-1, 2)));
    // −½ π^α_{β̄} (φ₂+iφ₃) ∧ θ^β̄, π^α_{β̄} = pi(β, a)
    let w23 = sys.phi_s(2).add(&sys.phi_s(3).times_i());
    for b in spec.range() {
        let p = spec.pi(b, a);
        if p != 0 {
            f.add_assign(&w23.wedge(&sys.theta_bar(b)).scale_g(&gr(-p, 2)));
        }
    }
    f
}

/// dφ₀. The corruption hook flips the sign of the `−2φ_β∧θ^β` term.
pub fn d_phi0(sys: &QcSystem) -> Form {
    let spec = sys.spec;
    let mut f = Form::zero();
    for s in 1..=3 {
        f.add_assign(&sys.psi(s).wedge(&sys.eta(s)).neg());
    }
    let flip = if sys.corruption == Corruption::FlipPhi0ThetaTerm {
        -1
    } else {
        1
    };
    for b in spec.range() {
        f.add_assign(&sys.phi_low(b).wedge(&sys.theta(b)).scale_int(-2 * flip));
        f.add_assign(
            &sys.phi_low_bar(b)
                .wedge(&sys.theta_bar(b))
                .scale_int(-2 * flip),
        );
    }
    f
}

/// dφ_s for s = 1, 2, 3.
pub fn d_phis(sys: &QcSystem, s: u8) -> Form {
    let spec = sys.spec;
    let mut f = Form::zero();
    match s {
        1 => {
            f.add_assign(&sys.phi_s(2).wedge(&sys.phi_s(3)).neg());
            f.add_assign(&sys.psi(2).wedge(&sys.eta(3)).neg());
            f.add_assign(&sys.psi(3).wedge(&sys.eta(2)));
            for b in spec.range() {
                f.add_assign(&sys.phi_low(b).wedge(&sys.theta(b)).times_i().scale_int(2));
                f.add_assign(
                    &sys.phi_low_bar(b)
                        .wedge(&sys.theta_bar(b))
                        .times_i()
                        .scale_int(-2),
                );
            }
        }
        2 => {
            f.add_assign(&sys.phi_s(3).wedge(&sys.phi_s(1)).neg());
            f.add_assign(&sys.psi(3).wedge(&sys.eta(1)).neg());
            f.add_assign(&sys.psi(1).wedge(&sys.eta(3)));
            for s1 in spec.range() {
                for b in spec.range() {
                    let p = spec.pi(s1, b);
                    if p == 0 {
                        continue;
                    }
                    f.add_assign(&sys.phi_up(s1).wedge(&sys.theta(b)).scale_int(-2 * p));
                    f.add_assign(
                        &sys.phi_up_bar(s1)
                            .wedge(&sys.theta_bar(b))
                            .scale_int(-2 * p),
                    );
                }
            }
        }
        3 => {
            f.add_assign(&sys.phi_s(1).wedge(&sys.phi_s(2)).neg());
            f.add_assign(&sys.psi(1).wedge(&sys.eta(2)).neg());
            f.add_assign(&sys.psi(2).wedge(&sys.eta(1)));
            for s1 in spec.range() {
                for b in spec.range() {
                    let p = spec.pi(s1, b);
                    if p == 0 {
                        continue;
                    }
                    f.add_assign(
                        &sys.phi_up(s1)
                            .wedge(&sys.theta(b))
                            .times_i()
                            .scale_int(2 * p),
                    );
                    f.add_assign(
                        &sys.phi_up_bar(s1)
                            .wedge(&sys.theta_bar(b))
                            .times_i()
                            .scale_int(-2 * p),
                    );
                }
            }
        }
        _ => unreachable!(),
    }
    f
}

/// dΓ_{αβ}, valid for any index pair.
pub fn d_gamma(sys: &QcSystem, a: u16, b: u16) -> Form {
    let spec = sys.spec;
    let mut f = Form::zero();
    // −π^{στ} Γ_{ασ} ∧ Γ_{τβ}
    for s in spec.range() {
        for t in spec.range() {
            let p = spec.pi(s, t);
            if p != 0 {
                f.add_assign(&sys.gamma(a, s).wedge(&sys.gamma(t, b)).scale_int(-p));
            }
        }
    }
    // 2π^{σ̄}_α (φ_β∧θ_σ̄ − φ_σ̄∧θ_β) + (α ↔ β)
    for (x, y) in [(a, b), (b, a)] {
        let (s, c) = spec.pi_partner(x);
        // φ_y ∧ θ_σ̄ = φ^ȳ ∧ θ^σ; φ_σ̄ ∧ θ_y = φ^σ ∧ θ^ȳ
        f.add_assign(&sys.phi_low(y).wedge(&sys.theta_low_bar(s)).scale_int(2 * c));
        f.add_assign(
            &sys.phi_low_bar(s)
                .wedge(&sys.theta_low(y))
                .scale_int(-2 * c),
        );
    }
    // π^σ_{δ̄} S_{αβγσ} θ^γ ∧ θ^δ̄
    for g in spec.range() {
        for d in spec.range() {
            let (s, c) = spec.pi_partner(d);
            f.add_assign(
                &sys.theta(g)
                    .wedge(&sys.theta_bar(d))
                    .scale(&sys.curv(StarFam::S, &[a, b, g, s], false))
                    .scale_int(c),
            );
        }
    }
    // (V_{αβγ} θ^γ + π^{σ̄}_α π^{τ̄}_β V̄_{στγ} θ^γ̄) ∧ η₁
    let (sa, ca) = spec.pi_partner(a);
    let (sb, cb) = spec.pi_partner(b);
    for g in spec.range() {
        let mut t = sys.theta(g).scale(&sys.curv(StarFam::V, &[a, b, g], false));
        t.add_assign(
            &sys.theta_bar(g)
                .scale(&sys.curv(StarFam::V, &[sa, sb, g], true))
                .scale_int(ca * cb),
        );
        f.add_assign(&t.wedge(&sys.eta(1)));
    }
    // −i π^σ_{γ̄} V_{αβσ} θ^γ̄ ∧ (η₂+iη₃)
    for g in spec.range() {
        let (s, c) = spec.pi_partner(g);
        f.add_assign(
            &sys.theta_bar(g)
                .wedge(&sys.eta23_plus())
                .scale(&sys.curv(StarFam::V, &[a, b, s], false))
                .scale_g(&gi().scale(&crate::scalar::rat(-c))),
        );
    }
    // +i (𝔧V)_{αβγ} θ^γ ∧ (η₂−iη₃)
    for g in spec.range() {
        f.add_assign(
            &sys.theta(g)
                .wedge(&sys.eta23_minus())
                .scale(&sys.curv_j(StarFam::V, &[a, b, g]))
                .times_i(),
        );
    }
    // −i L_{αβ} (η₂+iη₃)∧(η₂−iη₃)
    f.add_assign(
        &sys.eta23_plus()
            .wedge(&sys.eta23_minus())
            .scale(&sys.curv(StarFam::L, &[a, b], false))
            .times_i()
            .neg(),
    );
    // + M_{αβ} η₁∧(η₂+iη₃) + (𝔧M)_{αβ} η₁∧(η₂−iη₃)
    f.add_assign(
        &sys.eta(1)
            .wedge(&sys.eta23_plus())
            .scale(&sys.curv(StarFam::M, &[a, b], false)),
    );
    f.add_assign(
        &sys.eta(1)
            .wedge(&sys.eta23_minus())
            .scale(&sys.curv_j(StarFam::M, &[a, b])),
    );
    f
}

/// dφ_α (the lowered component; dφ^α is its conjugate).
pub fn d_phi_low(sys: &QcSystem, a: u16) -> Form {
    let spec = sys.spec;
    let mut f = Form::zero();
    // ½(φ₀+iφ₁)∧φ_α
    f.add_assign(
        &sys.phi0()
            .add(&sys.phi_s(1).times_i())
            .wedge(&sys.phi_low(a))
            .scale_g(&gr(1, 2)),
    );
    // ½ π_{αγ} (φ₂−iφ₃)∧φ^γ
    let w23m = sys.phi_s(2).sub(&sys.phi_s(3).times_i());
    for g in spec.range() {
        let p = spec.pi(a, g);
        if p != 0 {
            f.add_assign(&w23m.wedge(&sys.phi_up(g)).scale_g(&gr(p, 2)));
        }
    }
    // −π^{σ̄}_α Γ_{σ̄γ̄} ∧ φ^γ̄
    let (sa, ca) = spec.pi_partner(a);
    for g in spec.range() {
        f.add_assign(
            &sys.gamma_bar(sa, g)
                .wedge(&sys.phi_up_bar(g))
                .scale_int(-ca),
        );
    }
    // −(i/2) ψ₁ ∧ θ_α
    f.add_assign(
        &sys.psi(1)
            .wedge(&sys.theta_low(a))
            .scale_g(&GaussianRational::of(0, 1, -1, 2)),
    );
    // −½ π_{αγ} (ψ₂−iψ₃) ∧ θ^γ
    let p23m = sys.psi(2).sub(&sys.psi(3).times_i());
    for g in spec.range() {
        let p = spec.pi(a, g);
        if p != 0 {
            f.add_assign(&p23m.wedge(&sys.theta(g)).scale_g(&gr(-p, 2)));
        }
    }
    // −i π^σ_{δ̄} V_{αγσ} θ^γ ∧ θ^δ̄
    for g in spec.range() {
        for d in spec.range() {
            let (s, c) = spec.pi_partner(d);
            f.add_assign(
                &sys.theta(g)
                    .wedge(&sys.theta_bar(d))
                    .scale(&sys.curv(StarFam::V, &[a, g, s], false))
                    .scale_g(&gi().scale(&crate::scalar::rat(-c))),
            );
        }
    }
    // + M_{αγ} θ^γ∧η₁ + π^{σ̄}_α L̄_{σγ} θ^γ̄∧η₁
    for g in spec.range() {
        f.add_assign(
            &sys.theta(g)
                .wedge(&sys.eta(1))
                .scale(&sys.curv(StarFam::M, &[a, g], false)),
        );
        f.add_assign(
            &sys.theta_bar(g)
                .wedge(&sys.eta(1))
                .scale(&sys.curv(StarFam::L, &[sa, g], true))
                .scale_int(ca),
        );
    }
    // + i L_{αγ} θ^γ∧(η₂−iη₃) − i π^σ_{γ̄} M_{ασ} θ^γ̄∧(η₂+iη₃)
    for g in spec.range() {
        f.add_assign(
            &sys.theta(g)
                .wedge(&sys.eta23_minus())
                .scale(&sys.curv(StarFam::L, &[a, g], false))
                .times_i(),
        );
        let (s, c) = spec.pi_partner(g);
        f.add_assign(
            &sys.theta_bar(g)
                .wedge(&sys.eta23_plus())
                .scale(&sys.curv(StarFam::M, &[a, s], false))
                .scale_g(&gi().scale(&crate::scalar::rat(-c))),
        );
    }
    // −C_α (η₂+iη₃)∧(η₂−iη₃)
    f.add_assign(
        &sys.eta23_plus()
            .wedge(&sys.eta23_minus())
            .scale(&sys.curv(StarFam::C, &[a], false))
            .neg(),
    );
    // + H_α η₁∧(η₂+iη₃) + i π_{ασ} C̄_σ η₁∧(η₂−iη₃)
    f.add_assign(
        &sys.eta(1)
            .wedge(&sys.eta23_plus())
            .scale(&sys.curv(StarFam::H, &[a], false)),
    );
    for s in spec.range() {
        let p = spec.pi(a, s);
        if p != 0 {
            f.add_assign(
                &sys.eta(1)
                    .wedge(&sys.eta23_minus())
                    .scale(&sys.curv(StarFam::C, &[s], true))
                    .scale_g(&gi().scale(&crate::scalar::rat(p))),
            );
        }
    }
    f
}

/// dψ₁.
pub fn d_psi1(sys: &QcSystem) -> Form {
    let spec = sys.spec;
    let mut f = Form::zero();
    f.add_assign(&sys.phi0().wedge(&sys.psi(1)));
    f.add_assign(&sys.phi_s(2).wedge(&sys.psi(3)).neg());
    f.add_assign(&sys.phi_s(3).wedge(&sys.psi(2)));
    // −4i φ_γ ∧ φ^γ
    for g in spec.range() {
        f.add_assign(&sys.phi_low(g).wedge(&sys.phi_up(g)).times_i().scale_int(-4));
    }
    // +4 π^σ_{δ̄} L_{γσ} θ^γ∧θ^δ̄
    for g in spec.range() {
        for d in spec.range() {
            let (s, c) = spec.pi_partner(d);
            f.add_assign(
                &sys.theta(g)
                    .wedge(&sys.theta_bar(d))
                    .scale(&sys.curv(StarFam::L, &[g, s], false))
                    .scale_int(4 * c),
            );
        }
    }
    // +4 C_γ θ^γ∧η₁ + 4 C̄_γ θ^γ̄∧η₁
    for g in spec.range() {
        f.add_assign(
            &sys.theta(g)
                .wedge(&sys.eta(1))
                .scale(&sys.curv(StarFam::C, &[g], false))
                .scale_int(4),
        );
        f.add_assign(
            &sys.theta_bar(g)
                .wedge(&sys.eta(1))
                .scale(&sys.curv(StarFam::C, &[g], true))
                .scale_int(4),
        );
    }
    // −4i π_{γ̄σ̄} C^σ̄ θ^γ̄∧(η₂+iη₃) + 4i π_{γσ} C^σ θ^γ∧(η₂−iη₃)
    for g in spec.range() {
        for s in spec.range() {
            let p = spec.pi(g, s);
            if p == 0 {
                continue;
            }
            // C^σ̄ = C_σ, C^σ = C̄_σ
            f.add_assign(
                &sys.theta_bar(g)
                    .wedge(&sys.eta23_plus())
                    .scale(&sys.curv(StarFam::C, &[s], false))
                    .scale_g(&gi().scale(&crate::scalar::rat(-4 * p))),
            );
            f.add_assign(
                &sys.theta(g)
                    .wedge(&sys.eta23_minus())
                    .scale(&sys.curv(StarFam::C, &[s], true))
                    .scale_g(&gi().scale(&crate::scalar::rat(4 * p))),
            );
        }
    }
    // + P η₁∧(η₂+iη₃) + P̄ η₁∧(η₂−iη₃) + iR (η₂+iη₃)∧(η₂−iη₃)
    f.add_assign(
        &sys.eta(1)
            .wedge(&sys.eta23_plus())
            .scale(&sys.curv(StarFam::P, &[], false)),
    );
    f.add_assign(
        &sys.eta(1)
            .wedge(&sys.eta23_minus())
            .scale(&sys.curv(StarFam::P, &[], true)),
    );
    f.add_assign(
        &sys.eta23_plus()
            .wedge(&sys.eta23_minus())
            .scale(&sys.curv(StarFam::R, &[], false))
            .times_i(),
    );
    f
}

/// d(ψ₂ + iψ₃).
pub fn d_psi23(sys: &QcSystem) -> Form {
    let spec = sys.spec;
    let mut f = Form::zero();
    // (φ₀−iφ₁)∧(ψ₂+iψ₃) + i(φ₂+iφ₃)∧ψ₁
    let psi23 = sys.psi(2).add(&sys.psi(3).times_i());
    f.add_assign(&sys.phi0().sub(&sys.phi_s(1).times_i()).wedge(&psi23));
    f.add_assign(
        &sys.phi_s(2)
            .add(&sys.phi_s(3).times_i())
            .wedge(&sys.psi(1))
            .times_i(),
    );
    // +4 π_{γδ} φ^γ∧φ^δ
    for g in spec.range() {
        for d in spec.range() {
            let p = spec.pi(g, d);
            if p != 0 {
                f.add_assign(&sys.phi_up(g).wedge(&sys.phi_up(d)).scale_int(4 * p));
            }
        }
    }
    // +4i π^{σ̄}_γ M̄_{σδ} θ^γ∧θ^δ̄
    for g in spec.range() {
        let (s, c) = spec.pi_partner(g);
        for d in spec.range() {
            f.add_assign(
                &sys.theta(g)
                    .wedge(&sys.theta_bar(d))
                    .scale(&sys.curv(StarFam::M, &[s, d], true))
                    .scale_g(&gi().scale(&crate::scalar::rat(4 * c))),
            );
        }
    }
    // +4i π^{σ̄}_γ C̄_σ θ^γ∧η₁ − 4 H̄_γ θ^γ̄∧η₁
    for g in spec.range() {
        let (s, c) = spec.pi_partner(g);
        f.add_assign(
            &sys.theta(g)
                .wedge(&sys.eta(1))
                .scale(&sys.curv(StarFam::C, &[s], true))
                .scale_g(&gi().scale(&crate::scalar::rat(4 * c))),
        );
        f.add_assign(
            &sys.theta_bar(g)
                .wedge(&sys.eta(1))
                .scale(&sys.curv(StarFam::H, &[g], true))
                .scale_int(-4),
        );
    }
    // −4 C̄_γ θ^γ̄∧(η₂+iη₃) − 4i π^{σ̄}_γ H̄_σ θ^γ∧(η₂−iη₃)
    // (the coefficient −4 is forced by d²φ₀ = 0 and matches the
    //  −4 C*_{γ̄}∧θ^γ̄∧(η₂+iη₃) term of the d²(ψ₂+iψ₃) identity)
    for g in spec.range() {
        f.add_assign(
            &sys.theta_bar(g)
                .wedge(&sys.eta23_plus())
                .scale(&sys.curv(StarFam::C, &[g], true))
                .scale_int(-4),
        );
        let (s, c) = spec.pi_partner(g);
        f.add_assign(
            &sys.theta(g)
                .wedge(&sys.eta23_minus())
                .scale(&sys.curv(StarFam::H, &[s], true))
                .scale_g(&gi().scale(&crate::scalar::rat(-4 * c))),
        );
    }
    // −iR η₁∧(η₂+iη₃) + Q̄ η₁∧(η₂−iη₃) − P̄ (η₂+iη₃)∧(η₂−iη₃)
    f.add_assign(
        &sys.eta(1)
            .wedge(&sys.eta23_plus())
            .scale(&sys.curv(StarFam::R, &[], false))
            .times_i()
            .neg(),
    );
    f.add_assign(
        &sys.eta(1)
            .wedge(&sys.eta23_minus())
            .scale(&sys.curv(StarFam::Q, &[], true)),
    );
    f.add_assign(
        &sys.eta23_plus()
            .wedge(&sys.eta23_minus())
            .scale(&sys.curv(StarFam::P, &[], true))
            .neg(),
    );
    f
}

/// The correction terms in `d(curvature) = starred + correction`.
pub fn star_correction(sys: &QcSystem, fam: StarFam, idx: &[u16]) -> Form {
    let spec = sys.spec;
    let mut f = Form::zero();
    // Γ-covariantization: Σ_slots π^{τν} Γ_{ν·} T_{…τ…}
    let gamma_terms = |f: &mut Form, fam2: StarFam, idx: &[u16]| {
        for slot in 0..idx.len() {
            for t in spec.range() {
                for v in spec.range() {
                    let p = spec.pi(t, v);
                    if p == 0 {
                        continue;
                    }
                    let mut jdx = idx.to_vec();
                    jdx[slot] = t;
                    f.add_assign(
                        &sys.gamma(v, idx[slot])
                            .scale(&sys.curv(fam2, &jdx, false))
                            .scale_int(p),
                    );
                }
            }
        }
    };
    match fam {
        StarFam::S => {
            let (a, b, g, d) = (idx[0], idx[1], idx[2], idx[3]);
            gamma_terms(&mut f, StarFam::S, idx);
            f.add_assign(&sys.phi0().scale(&sys.curv(StarFam::S, idx, false)));
            // 2i Σ_slots π_{·τ} V_{other three} θ^τ and the conjugate row
            for slot in 0..4 {
                let x = idx[slot];
                let others: Vec<u16> = (0..4).filter(|&k| k != slot).map(|k| idx[k]).collect();
                for t in spec.range() {
                    let p = spec.pi(x, t);
                    if p != 0 {
                        f.add_assign(
                            &sys.theta(t)
                                .scale(&sys.curv(StarFam::V, &others, false))
                                .scale_g(&gi().scale(&crate::scalar::rat(2 * p))),
                        );
                    }
                }
                // g_{xτ̄}(𝔧V)_{others} θ^τ̄ → τ = x
                f.add_assign(
                    &sys.theta_bar(x)
                        .scale(&sys.curv_j(StarFam::V, &others))
                        .scale_g(&gi().scale(&crate::scalar::rat(2))),
                );
            }
            let _ = (a, b, g, d);
        }
        StarFam::V => {
            gamma_terms(&mut f, StarFam::V, idx);
            // −i π^σ_{τ̄} φ^τ̄ S_{αβγσ}
            for t in spec.range() {
                let (s, c) = spec.pi_partner(t);
                let mut full = idx.to_vec();
                full.push(s);
                f.add_assign(
                    &sys.phi_up_bar(t)
                        .scale(&sys.curv(StarFam::S, &full, false))
                        .scale_g(&gi().scale(&crate::scalar::rat(-c))),
                );
            }
            // ½(3φ₀+iφ₁) V − ½(φ₂−iφ₃)(𝔧V)
            f.add_assign(
                &sys.phi0()
                    .scale_int(3)
                    .add(&sys.phi_s(1).times_i())
                    .scale(&sys.curv(StarFam::V, idx, false))
                    .scale_g(&gr(1, 2)),
            );
            f.add_assign(
                &sys.phi_s(2)
                    .sub(&sys.phi_s(3).times_i())
                    .scale(&sys.curv_j(StarFam::V, idx))
                    .scale_g(&gr(-1, 2)),
            );
            // −2 Σ_slots π_{·τ} M_{other two} θ^τ − 2 Σ_slots L_{other two} θ^{·̄}
            for slot in 0..3 {
                let x = idx[slot];
                let others: Vec<u16> = (0..3).filter(|&k| k != slot).map(|k| idx[k]).collect();
                for t in spec.range() {
                    let p = spec.pi(x, t);
                    if p != 0 {
                        f.add_assign(
                            &sys.theta(t)
                                .scale(&sys.curv(StarFam::M, &others, false))
                                .scale_int(-2 * p),
                        );
                    }
                }
                f.add_assign(
                    &sys.theta_bar(x)
                        .scale(&sys.curv(StarFam::L, &others, false))
                        .scale_int(-2),
                );
            }
        }
        StarFam::L => {
            let (a, b) = (idx[0], idx[1]);
            gamma_terms(&mut f, StarFam::L, idx);
            f.add_assign(
                &sys.phi0()
                    .scale(&sys.curv(StarFam::L, idx, false))
                    .scale_int(2),
            );
            f.add_assign(
                &sys.phi_s(2)
                    .add(&sys.phi_s(3).times_i())
                    .scale(&sys.curv(StarFam::M, idx, false))
                    .scale_g(&gr(1, 2)),
            );
            f.add_assign(
                &sys.phi_s(2)
                    .sub(&sys.phi_s(3).times_i())
                    .scale(&sys.curv_j(StarFam::M, idx))
                    .scale_g(&gr(1, 2)),
            );
            // + φ^σ V_{αβσ} + π^{μ̄}_α π^{ν̄}_β φ^σ̄ V̄_{μνσ}
            let (sa, ca) = spec.pi_partner(a);
            let (sb, cb) = spec.pi_partner(b);
            for s in spec.range() {
                f.add_assign(
                    &sys.phi_up(s)
                        .scale(&sys.curv(StarFam::V, &[a, b, s], false)),
                );
                f.add_assign(
                    &sys.phi_up_bar(s)
                        .scale(&sys.curv(StarFam::V, &[sa, sb, s], true))
                        .scale_int(ca * cb),
                );
            }
            // +2i(π_{ατ}C_β + π_{βτ}C_α)θ^τ + 2i(π_{βσ}C̄_σ θ^ᾱ + π_{ασ}C̄_σ θ^β̄)
            for (x, y) in [(a, b), (b, a)] {
                for t in spec.range() {
                    let p = spec.pi(x, t);
                    if p != 0 {
                        f.add_assign(
                            &sys.theta(t)
                                .scale(&sys.curv(StarFam::C, &[y], false))
                                .scale_g(&gi().scale(&crate::scalar::rat(2 * p))),
                        );
                    }
                }
                for s in spec.range() {
                    let p = spec.pi(y, s);
                    if p != 0 {
                        f.add_assign(
                            &sys.theta_bar(x)
                                .scale(&sys.curv(StarFam::C, &[s], true))
                                .scale_g(&gi().scale(&crate::scalar::rat(2 * p))),
                        );
                    }
                }
            }
        }
        StarFam::M => {
            let (a, b) = (idx[0], idx[1]);
            gamma_terms(&mut f, StarFam::M, idx);
            f.add_assign(
                &sys.phi0()
                    .scale_int(2)
                    .add(&sys.phi_s(1).times_i())
                    .scale(&sys.curv(StarFam::M, idx, false)),
            );
            f.add_assign(
                &sys.phi_s(2)
                    .sub(&sys.phi_s(3).times_i())
                    .scale(&sys.curv(StarFam::L, idx, false))
                    .neg(),
            );
            // −2 π^σ_{τ̄} φ^τ̄ V_{αβσ}
            for t in spec.range() {
                let (s, c) = spec.pi_partner(t);
                f.add_assign(
                    &sys.phi_up_bar(t)
                        .scale(&sys.curv(StarFam::V, &[a, b, s], false))
                        .scale_int(-2 * c),
                );
            }
            // −2(π_{ατ}H_β + π_{βτ}H_α)θ^τ + 2i(C_β θ^ᾱ + C_α θ^β̄)
            for (x, y) in [(a, b), (b, a)] {
                for t in spec.range() {
                    let p = spec.pi(x, t);
                    if p != 0 {
                        f.add_assign(
                            &sys.theta(t)
                                .scale(&sys.curv(StarFam::H, &[y], false))
                                .scale_int(-2 * p),
                        );
                    }
                }
                f.add_assign(
                    &sys.theta_bar(x)
                        .scale(&sys.curv(StarFam::C, &[y], false))
                        .scale_g(&gi().scale(&crate::scalar::rat(2))),
                );
            }
        }
        StarFam::C => {
            let a = idx[0];
            gamma_terms(&mut f, StarFam::C, idx);
            f.add_assign(
                &sys.phi0()
                    .scale_int(5)
                    .add(&sys.phi_s(1).times_i())
                    .scale(&sys.curv(StarFam::C, idx, false))
                    .scale_g(&gr(1, 2)),
            );
            // −π^{σ̄}_α (φ₂−iφ₃) C̄_σ
            let (sa, ca) = spec.pi_partner(a);
            f.add_assign(
                &sys.phi_s(2)
                    .sub(&sys.phi_s(3).times_i())
                    .scale(&sys.curv(StarFam::C, &[sa], true))
                    .scale_int(-ca),
            );
            // −2i π^σ_{τ̄} φ^τ̄ L_{ασ} + i φ^τ M_{ατ}
            for t in spec.range() {
                let (s, c) = spec.pi_partner(t);
                f.add_assign(
                    &sys.phi_up_bar(t)
                        .scale(&sys.curv(StarFam::L, &[a, s], false))
                        .scale_g(&gi().scale(&crate::scalar::rat(-2 * c))),
                );
                f.add_assign(
                    &sys.phi_up(t)
                        .scale(&sys.curv(StarFam::M, &[a, t], false))
                        .times_i(),
                );
            }
            // +(i/2)(φ₂+iφ₃) H_α
            f.add_assign(
                &sys.phi_s(2)
                    .add(&sys.phi_s(3).times_i())
                    .scale(&sys.curv(StarFam::H, &[a], false))
                    .scale_g(&GaussianRational::of(0, 1, 1, 2)),
            );
            // −½ π_{ατ} P θ^τ + ½ R θ^ᾱ
            for t in spec.range() {
                let p = spec.pi(a, t);
                if p != 0 {
                    f.add_assign(
                        &sys.theta(t)
                            .scale(&sys.curv(StarFam::P, &[], false))
                            .scale_g(&gr(-p, 2)),
                    );
                }
            }
            f.add_assign(
                &sys.theta_bar(a)
                    .scale(&sys.curv(StarFam::R, &[], false))
                    .scale_g(&gr(1, 2)),
            );
        }
        StarFam::H => {
            let a = idx[0];
            gamma_terms(&mut f, StarFam::H, idx);
            f.add_assign(
                &sys.phi0()
                    .scale_int(5)
                    .add(&sys.phi_s(1).times_i().scale_int(3))
                    .scale(&sys.curv(StarFam::H, idx, false))
                    .scale_g(&gr(1, 2)),
            );
            // +(3i/2)(φ₂−iφ₃) C_α
            f.add_assign(
                &sys.phi_s(2)
                    .sub(&sys.phi_s(3).times_i())
                    .scale(&sys.curv(StarFam::C, &[a], false))
                    .scale_g(&GaussianRational::of(0, 1, 3, 2)),
            );
            // −3 π^σ_{τ̄} φ^τ̄ M_{ασ}
            for t in spec.range() {
                let (s, c) = spec.pi_partner(t);
                f.add_assign(
                    &sys.phi_up_bar(t)
                        .scale(&sys.curv(StarFam::M, &[a, s], false))
                        .scale_int(-3 * c),
                );
            }
            // +½ π_{ατ} Q θ^τ + (i/2) P θ^ᾱ
            for t in spec.range() {
                let p = spec.pi(a, t);
                if p != 0 {
                    f.add_assign(
                        &sys.theta(t)
                            .scale(&sys.curv(StarFam::Q, &[], false))
                            .scale_g(&gr(p, 2)),
                    );
                }
            }
            f.add_assign(
                &sys.theta_bar(a)
                    .scale(&sys.curv(StarFam::P, &[], false))
                    .scale_g(&GaussianRational::of(0, 1, 1, 2)),
            );
        }
        StarFam::R => {
            f.add_assign(
                &sys.phi0()
                    .scale(&sys.curv(StarFam::R, &[], false))
                    .scale_int(3),
            );
            f.add_assign(
                &sys.phi_s(2)
                    .add(&sys.phi_s(3).times_i())
                    .scale(&sys.curv(StarFam::P, &[], false))
                    .neg(),
            );
            f.add_assign(
                &sys.phi_s(2)
                    .sub(&sys.phi_s(3).times_i())
                    .scale(&sys.curv(StarFam::P, &[], true))
                    .neg(),
            );
            for t in spec.range() {
                f.add_assign(
                    &sys.phi_up(t)
                        .scale(&sys.curv(StarFam::C, &[t], false))
                        .scale_int(-8),
                );
                f.add_assign(
                    &sys.phi_up_bar(t)
                        .scale(&sys.curv(StarFam::C, &[t], true))
                        .scale_int(-8),
                );
            }
        }
        StarFam::P => {
            f.add_assign(
                &sys.phi0()
                    .scale_int(3)
                    .add(&sys.phi_s(1).times_i())
                    .scale(&sys.curv(StarFam::P, &[], false)),
            );
            // −(i/2)(φ₂+iφ₃) Q + (3/2)(φ₂−iφ₃) R
            f.add_assign(
                &sys.phi_s(2)
                    .add(&sys.phi_s(3).times_i())
                    .scale(&sys.curv(StarFam::Q, &[], false))
                    .scale_g(&GaussianRational::of(0, 1, -1, 2)),
            );
            f.add_assign(
                &sys.phi_s(2)
                    .sub(&sys.phi_s(3).times_i())
                    .scale(&sys.curv(StarFam::R, &[], false))
                    .scale_g(&gr(3, 2)),
            );
            // +4i φ^τ H_τ − 12 π_{τσ} φ^τ̄ C^σ̄   (C^σ̄ = C_σ, forced by d²ψ₁ = 0)
            for t in spec.range() {
                f.add_assign(
                    &sys.phi_up(t)
                        .scale(&sys.curv(StarFam::H, &[t], false))
                        .scale_g(&gi().scale(&crate::scalar::rat(4))),
                );
                for s in spec.range() {
                    let p = spec.pi(t, s);
                    if p != 0 {
                        f.add_assign(
                            &sys.phi_up_bar(t)
                                .scale(&sys.curv(StarFam::C, &[s], false))
                                .scale_int(-12 * p),
                        );
                    }
                }
            }
        }
        StarFam::Q => {
            f.add_assign(
                &sys.phi0()
                    .scale_int(3)
                    .add(&sys.phi_s(1).times_i().scale_int(2))
                    .scale(&sys.curv(StarFam::Q, &[], false)),
            );
            // −2i(φ₂−iφ₃) P + 16 π_{τσ} φ^τ̄ H^σ̄   (H^σ̄ = H_σ)
            f.add_assign(
                &sys.phi_s(2)
                    .sub(&sys.phi_s(3).times_i())
                    .scale(&sys.curv(StarFam::P, &[], false))
                    .times_i()
                    .scale_int(-2),
            );
            for t in spec.range() {
                for s in spec.range() {
                    let p = spec.pi(t, s);
                    if p != 0 {
                        f.add_assign(
                            &sys.phi_up_bar(t)
                                .scale(&sys.curv(StarFam::H, &[s], false))
                                .scale_int(16 * p),
                        );
                    }
                }
            }
        }
    }
    f
}

/// `d(curvature component)` at an arbitrary index: starred form plus the
/// correction terms.
pub fn d_curvature(sys: &QcSystem, fam: StarFam, idx: &[u16]) -> Form {
    sys.star(fam, idx, false)
        .add(&star_correction(sys, fam, idx))
}

/// Build every derivation-table entry. Self-paired rows are checked for the
/// reality forced by their constraints; a failure here means a transcription
/// error in one of the equation builders.
pub fn install_derivation_table(sys: &mut QcSystem) {
    use crate::exterior::GenKey;

    let mut gen_entries: Vec<(crate::exterior::GenId, Form)> = vec![];
    let mut sym_entries: Vec<(crate::scalar::SymbolId, Form)> = vec![];
    let spec = sys.spec;

    let real_checked = |sys: &QcSystem, name: &str, f: Form| -> Form {
        assert_eq!(
            f.conj(&sys.symbols),
            f,
            "{name}: expected a real equation right-hand side"
        );
        f
    };

    for s in 1..=3u8 {
        let f = real_checked(sys, "dη", d_eta(sys, s));
        gen_entries.push((sys.catalog.expect(&GenKey::Eta(s)), f));
    }
    for a in spec.range() {
        let r = d_theta(sys, a);
        gen_entries.push((sys.catalog.expect(&GenKey::Xi(a)), r.re(&sys.symbols)));
        gen_entries.push((sys.catalog.expect(&GenKey::Zeta(a)), r.im(&sys.symbols)));
    }
    let f = real_checked(sys, "dφ0", d_phi0(sys));
    gen_entries.push((sys.catalog.expect(&GenKey::Phi0), f));
    for s in 1..=3u8 {
        let f = real_checked(sys, "dφs", d_phis(sys, s));
        gen_entries.push((sys.catalog.expect(&GenKey::PhiS(s)), f));
    }
    for (key, shape) in sys.star_canonical_keys(StarFam::L) {
        // Γ has the same canonical key structure as the L family (arity 2, 𝔧-fixed)
        let (a, b) = (key[0], key[1]);
        let r = d_gamma(sys, a, b);
        match shape {
            Shape::Complex => {
                gen_entries.push((
                    sys.catalog.expect(&GenKey::GammaRe(a, b)),
                    r.re(&sys.symbols),
                ));
                gen_entries.push((
                    sys.catalog.expect(&GenKey::GammaIm(a, b)),
                    r.im(&sys.symbols),
                ));
            }
            Shape::Real => {
                assert_eq!(r.conj(&sys.symbols), r, "dΓ[{a},{b}] should be real");
                gen_entries.push((sys.catalog.expect(&GenKey::GammaRe(a, b)), r));
            }
            Shape::Imag => {
                assert_eq!(
                    r.conj(&sys.symbols),
                    r.neg(),
                    "dΓ[{a},{b}] should be imaginary"
                );
                gen_entries.push((
                    sys.catalog.expect(&GenKey::GammaIm(a, b)),
                    r.scale_g(&GaussianRational::of(0, 1, -1, 1)),
                ));
            }
        }
    }
    for a in spec.range() {
        let r = d_phi_low(sys, a);
        // dφ^a = conj(dφ_a)
        gen_entries.push((sys.catalog.expect(&GenKey::PhiUpRe(a)), r.re(&sys.symbols)));
        gen_entries.push((
            sys.catalog.expect(&GenKey::PhiUpIm(a)),
            r.im(&sys.symbols).neg(),
        ));
    }
    let f = real_checked(sys, "dψ1", d_psi1(sys));
    gen_entries.push((sys.catalog.expect(&GenKey::Psi(1)), f));
    let r23 = d_psi23(sys);
    gen_entries.push((sys.catalog.expect(&GenKey::Psi(2)), r23.re(&sys.symbols)));
    gen_entries.push((sys.catalog.expect(&GenKey::Psi(3)), r23.im(&sys.symbols)));

    for fam in StarFam::ALL {
        for (key, shape) in sys.star_canonical_keys(fam) {
            let r = d_curvature(sys, fam, &key);
            match (sys.curvature_symbol_ids(fam, &key), shape) {
                ((s, Some(sb)), Shape::Complex) => {
                    sym_entries.push((sb, r.conj(&sys.symbols)));
                    sym_entries.push((s, r));
                }
                ((s, None), Shape::Real) => {
                    assert_eq!(
                        r.conj(&sys.symbols),
                        r,
                        "d{}{key:?} should be real",
                        fam.tag()
                    );
                    sym_entries.push((s, r));
                }
                ((s, None), Shape::Imag) => {
                    assert_eq!(
                        r.conj(&sys.symbols),
                        r.neg(),
                        "d{}{key:?} should be imaginary",
                        fam.tag()
                    );
                    sym_entries.push((s, r.scale_g(&GaussianRational::of(0, 1, -1, 1))));
                }
                _ => unreachable!(),
            }
        }
    }

    for (g, f) in gen_entries {
        sys.table.set_generator(g, f);
    }
    for (s, f) in sym_entries {
        sys.table.set_symbol(s, f);
    }
}

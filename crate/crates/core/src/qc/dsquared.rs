//! Consistency of the transcription: applying the table-driven derivation
//! to every structure equation must give zero on the first-level equations
//! and reproduce the Bianchi three-forms on the connection-level ones.

use crate::exterior::Form;

use super::bianchi;
use super::equations;
use super::system::QcSystem;

/// Residuals of the full d² sweep. Everything must be empty/zero on an
/// uncorrupted system.
#[derive(Clone, Debug)]
pub struct DSquaredReport {
    /// (equation name, residual) for equations whose d² must vanish.
    pub base_residuals: Vec<(String, Form)>,
    /// (equation name, difference) between d(structure equation) and the
    /// corresponding Bianchi three-form.
    pub bianchi_residuals: Vec<(String, Form)>,
}

impl DSquaredReport {
    pub fn all_zero(&self) -> bool {
        self.base_residuals.iter().all(|(_, f)| f.is_zero())
            && self.bianchi_residuals.iter().all(|(_, f)| f.is_zero())
    }

    pub fn nonzero_names(&self) -> Vec<String> {
        self.base_residuals
            .iter()
            .chain(&self.bianchi_residuals)
            .filter(|(_, f)| !f.is_zero())
            .map(|(n, _)| n.clone())
            .collect()
    }

    pub fn residual_term_count(&self) -> usize {
        self.base_residuals
            .iter()
            .chain(&self.bianchi_residuals)
            .map(|(_, f)| f.num_terms())
            .sum()
    }
}

fn d(sys: &QcSystem, f: &Form) -> Form {
    f.differentiate(sys.derivation_table(), &sys.symbols)
        .expect("derivation table is total on the structure equations")
}

/// Differentiate every structure equation and compare with what the ideal
/// structure demands.
pub fn verify_d_squared(sys: &QcSystem) -> DSquaredReport {
    let spec = sys.spec;
    let mut base = vec![];
    for s in 1..=3u8 {
        base.push((format!("d²η{s}"), d(sys, &equations::d_eta(sys, s))));
    }
    for a in spec.range() {
        base.push((format!("d²θ{a}"), d(sys, &equations::d_theta(sys, a))));
    }
    base.push(("d²φ0".into(), d(sys, &equations::d_phi0(sys))));
    for s in 1..=3u8 {
        base.push((format!("d²φ{s}"), d(sys, &equations::d_phis(sys, s))));
    }

    let star: bianchi::StarResolver = &|fam, idx, barred| sys.star(fam, idx, barred);
    let mut upper = vec![];
    for a in spec.range() {
        for b in a..=spec.dim() {
            let lhs = d(sys, &equations::d_gamma(sys, a, b));
            let rhs = bianchi::delta_gamma(sys, star, a, b);
            upper.push((format!("d²Γ[{a},{b}]"), lhs.sub(&rhs)));
        }
    }
    for a in spec.range() {
        let lhs = d(sys, &equations::d_phi_low(sys, a));
        let rhs = bianchi::delta_phi(sys, star, a);
        upper.push((format!("d²φ_{a}"), lhs.sub(&rhs)));
    }
    {
        let lhs = d(sys, &equations::d_psi1(sys));
        let rhs = bianchi::psi1_form(sys, star);
        upper.push(("d²ψ1".into(), lhs.sub(&rhs)));
    }
    {
        let lhs = d(sys, &equations::d_psi23(sys));
        let rhs = bianchi::psi23_form(sys, star);
        upper.push(("d²(ψ2+iψ3)".into(), lhs.sub(&rhs)));
    }

    DSquaredReport {
        base_residuals: base,
        bianchi_residuals: upper,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qc::system::{build_system, build_system_with, Corruption};

    #[test]
    fn d_squared_vanishes_n1() {
        let sys = build_system(1);
        let rep = verify_d_squared(&sys);
        assert!(
            rep.all_zero(),
            "nonzero residuals: {:?}",
            rep.nonzero_names()
        );
    }

    #[test]
    fn d_squared_vanishes_n2() {
        let sys = build_system(2);
        let rep = verify_d_squared(&sys);
        assert!(
            rep.all_zero(),
            "nonzero residuals: {:?}",
            rep.nonzero_names()
        );
    }

    #[test]
    fn corruption_is_detected() {
        let sys = build_system_with(1, Corruption::FlipPhi0ThetaTerm);
        let rep = verify_d_squared(&sys);
        assert!(!rep.all_zero());
        assert!(
            rep.nonzero_names().iter().any(|n| n == "d²φ0"),
            "the flipped term must surface in d²φ0: {:?}",
            rep.nonzero_names()
        );
    }
}

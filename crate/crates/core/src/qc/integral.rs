//! The covariant-derivative parameterization of the Bianchi solution space:
//! each starred one-form is expanded over the semibasic coframe with
//! coefficients linear in the second-order components, and substituting the
//! expansion into every Bianchi three-form must give the zero form.

use std::collections::{BTreeMap, HashMap};

use rand::Rng;

use crate::exterior::{Form, GenId, StarFam};
use crate::scalar::{GaussianRational, PolyScalar, SymbolId};
use crate::tensor::arrays::random_gaussian;

use super::bianchi::BianchiSet;
use super::families::{SecFam, Shape};
use super::system::QcSystem;

fn i_scalar() -> PolyScalar {
    PolyScalar::i()
}

/// The expansion of a starred component over {θ, θ̄, η} with coefficients
/// linear in the second-order symbols. Valid for any index tuple.
pub fn covder_expansion(sys: &QcSystem, fam: StarFam, idx: &[u16]) -> Form {
    let spec = sys.spec;
    let mut f = Form::zero();
    match fam {
        StarFam::S => {
            for e in spec.range() {
                let mut full = idx.to_vec();
                full.push(e);
                // A_{abgd e} θ^e
                f.add_assign(&sys.theta(e).scale(&sys.sec(SecFam::A5, &full, false)));
                // − π^σ_{ε̄} (𝔧A)_{abgd σ} θ^ε̄
                let (s, c) = spec.pi_partner(e);
                let mut fs = idx.to_vec();
                fs.push(s);
                f.add_assign(
                    &sys.theta_bar(e)
                        .scale(&sys.sec_j(SecFam::A5, &fs))
                        .scale_int(-c),
                );
            }
            // (B + 𝔧B) η₁ + i C4 (η₂+iη₃) − i (𝔧C4)(η₂−iη₃)
            f.add_assign(
                &sys.eta(1).scale(
                    &sys.sec(SecFam::B4, idx, false)
                        .add(&sys.sec_j(SecFam::B4, idx)),
                ),
            );
            f.add_assign(
                &sys.eta23_plus()
                    .scale(&sys.sec(SecFam::C4, idx, false).mul(&i_scalar())),
            );
            f.add_assign(
                &sys.eta23_minus()
                    .scale(&sys.sec_j(SecFam::C4, idx).mul(&i_scalar()))
                    .neg(),
            );
        }
        StarFam::V => {
            for e in spec.range() {
                let mut full = idx.to_vec();
                full.push(e);
                f.add_assign(&sys.theta(e).scale(&sys.sec(SecFam::C4, &full, false)));
                let (s, c) = spec.pi_partner(e);
                let mut fs = idx.to_vec();
                fs.push(s);
                f.add_assign(
                    &sys.theta_bar(e)
                        .scale(&sys.sec(SecFam::B4, &fs, false))
                        .scale_int(c),
                );
            }
            f.add_assign(&sys.eta(1).scale(&sys.sec(SecFam::D3, idx, false)));
            f.add_assign(&sys.eta23_plus().scale(&sys.sec(SecFam::E3, idx, false)));
            f.add_assign(&sys.eta23_minus().scale(&sys.sec(SecFam::F3, idx, false)));
        }
        StarFam::L => {
            for e in spec.range() {
                let mut full = idx.to_vec();
                full.push(e);
                f.add_assign(&sys.theta(e).scale(&sys.sec_j(SecFam::F3, &full)).neg());
                let (s, c) = spec.pi_partner(e);
                let mut fs = idx.to_vec();
                fs.push(s);
                f.add_assign(
                    &sys.theta_bar(e)
                        .scale(&sys.sec(SecFam::F3, &fs, false))
                        .scale_int(-c),
                );
            }
            // i(𝔧Z − Z) η₁ + i G (η₂+iη₃) − i (𝔧G)(η₂−iη₃)
            f.add_assign(
                &sys.eta(1).scale(
                    &sys.sec_j(SecFam::Z2, idx)
                        .sub(&sys.sec(SecFam::Z2, idx, false))
                        .mul(&i_scalar()),
                ),
            );
            f.add_assign(
                &sys.eta23_plus()
                    .scale(&sys.sec(SecFam::G2, idx, false).mul(&i_scalar())),
            );
            f.add_assign(
                &sys.eta23_minus()
                    .scale(&sys.sec_j(SecFam::G2, idx).mul(&i_scalar()))
                    .neg(),
            );
        }
        StarFam::M => {
            for e in spec.range() {
                let mut full = idx.to_vec();
                full.push(e);
                f.add_assign(&sys.theta(e).scale(&sys.sec(SecFam::E3, &full, false)).neg());
                let (s, c) = spec.pi_partner(e);
                let mut fs = idx.to_vec();
                fs.push(s);
                // π^σ_{ε̄}((𝔧F)_{abσ} − i D_{abσ}) θ^ε̄
                let coeff = sys
                    .sec_j(SecFam::F3, &fs)
                    .sub(&sys.sec(SecFam::D3, &fs, false).mul(&i_scalar()));
                f.add_assign(&sys.theta_bar(e).scale(&coeff).scale_int(c));
            }
            f.add_assign(&sys.eta(1).scale(&sys.sec(SecFam::X2, idx, false)));
            f.add_assign(&sys.eta23_plus().scale(&sys.sec(SecFam::Y2, idx, false)));
            f.add_assign(&sys.eta23_minus().scale(&sys.sec(SecFam::Z2, idx, false)));
        }
        StarFam::C => {
            let a = idx[0];
            for e in spec.range() {
                f.add_assign(&sys.theta(e).scale(&sys.sec(SecFam::G2, &[a, e], false)));
                let (s, c) = spec.pi_partner(e);
                f.add_assign(
                    &sys.theta_bar(e)
                        .scale(&sys.sec(SecFam::Z2, &[a, s], false).mul(&i_scalar()))
                        .scale_int(-c),
                );
            }
            f.add_assign(&sys.eta(1).scale(&sys.sec(SecFam::N(1), idx, false)));
            f.add_assign(&sys.eta23_plus().scale(&sys.sec(SecFam::N(2), idx, false)));
            f.add_assign(&sys.eta23_minus().scale(&sys.sec(SecFam::N(3), idx, false)));
        }
        StarFam::H => {
            let a = idx[0];
            for e in spec.range() {
                f.add_assign(
                    &sys.theta(e)
                        .scale(&sys.sec(SecFam::Y2, &[a, e], false))
                        .neg(),
                );
                let (s, c) = spec.pi_partner(e);
                let coeff = sys
                    .sec(SecFam::G2, &[a, s], false)
                    .sub(&sys.sec(SecFam::X2, &[a, s], false))
                    .mul(&i_scalar());
                f.add_assign(&sys.theta_bar(e).scale(&coeff).scale_int(c));
            }
            f.add_assign(&sys.eta(1).scale(&sys.sec(SecFam::N(4), idx, false)));
            f.add_assign(&sys.eta23_plus().scale(&sys.sec(SecFam::N(5), idx, false)));
            // (N1_a + i π^{σ̄}_a N3_{σ̄}) (η₂−iη₃)
            let (sa, ca) = spec.pi_partner(a);
            let coeff = sys.sec(SecFam::N(1), idx, false).add(
                &sys.sec(SecFam::N(3), &[sa], true)
                    .mul(&i_scalar())
                    .scale(&GaussianRational::from_int(ca)),
            );
            f.add_assign(&sys.eta23_minus().scale(&coeff));
        }
        StarFam::R => {
            // 4π^{σ̄}_ε N3_{σ̄} θ^ε + 4π^σ_{ε̄} N3_σ θ^ε̄
            for e in spec.range() {
                let (s, c) = spec.pi_partner(e);
                f.add_assign(
                    &sys.theta(e)
                        .scale(&sys.sec(SecFam::N(3), &[s], true))
                        .scale_int(4 * c),
                );
                f.add_assign(
                    &sys.theta_bar(e)
                        .scale(&sys.sec(SecFam::N(3), &[s], false))
                        .scale_int(4 * c),
                );
            }
            // i(U₃ − conj U₃) η₁ − i(U₁ + W₃)(η₂+iη₃) + i(conj U₁ + conj W₃)(η₂−iη₃)
            f.add_assign(
                &sys.eta(1).scale(
                    &sys.sec(SecFam::U(3), &[], false)
                        .sub(&sys.sec(SecFam::U(3), &[], true))
                        .mul(&i_scalar()),
                ),
            );
            f.add_assign(
                &sys.eta23_plus()
                    .scale(
                        &sys.sec(SecFam::U(1), &[], false)
                            .add(&sys.sec(SecFam::W(3), &[], false))
                            .mul(&i_scalar()),
                    )
                    .neg(),
            );
            f.add_assign(
                &sys.eta23_minus().scale(
                    &sys.sec(SecFam::U(1), &[], true)
                        .add(&sys.sec(SecFam::W(3), &[], true))
                        .mul(&i_scalar()),
                ),
            );
        }
        StarFam::P => {
            for e in spec.range() {
                f.add_assign(
                    &sys.theta(e)
                        .scale(&sys.sec(SecFam::N(2), &[e], false))
                        .scale_int(-4),
                );
                // −4(N3_{ε̄} + i π^σ_{ε̄} N1_σ) θ^ε̄
                let (s, c) = spec.pi_partner(e);
                let coeff = sys.sec(SecFam::N(3), &[e], true).add(
                    &sys.sec(SecFam::N(1), &[s], false)
                        .mul(&i_scalar())
                        .scale(&GaussianRational::from_int(c)),
                );
                f.add_assign(&sys.theta_bar(e).scale(&coeff).scale_int(-4));
            }
            f.add_assign(&sys.eta(1).scale(&sys.sec(SecFam::U(1), &[], false)));
            f.add_assign(&sys.eta23_plus().scale(&sys.sec(SecFam::U(2), &[], false)));
            f.add_assign(&sys.eta23_minus().scale(&sys.sec(SecFam::U(3), &[], false)));
        }
        StarFam::Q => {
            for e in spec.range() {
                f.add_assign(
                    &sys.theta(e)
                        .scale(&sys.sec(SecFam::N(5), &[e], false))
                        .scale_int(4),
                );
                // +4i π^σ_{ε̄}(N2_σ + N4_σ) θ^ε̄
                let (s, c) = spec.pi_partner(e);
                let coeff = sys
                    .sec(SecFam::N(2), &[s], false)
                    .add(&sys.sec(SecFam::N(4), &[s], false))
                    .mul(&i_scalar());
                f.add_assign(&sys.theta_bar(e).scale(&coeff).scale_int(4 * c));
            }
            f.add_assign(&sys.eta(1).scale(&sys.sec(SecFam::W(1), &[], false)));
            f.add_assign(&sys.eta23_plus().scale(&sys.sec(SecFam::W(2), &[], false)));
            f.add_assign(&sys.eta23_minus().scale(&sys.sec(SecFam::W(3), &[], false)));
        }
    }
    f
}

/// An assignment of each starred coordinate generator to a semibasic
/// one-form; substituting it into the Bianchi set must annihilate it.
#[derive(Clone, Debug)]
pub struct IntegralElement {
    pub rules: HashMap<GenId, Form>,
}

impl IntegralElement {
    /// Expansion of each starred coordinate over the ε basis.
    pub fn rules_epsilon(&self, sys: &QcSystem) -> HashMap<GenId, Form> {
        self.rules
            .iter()
            .map(|(&g, f)| (g, sys.to_epsilon(f)))
            .collect()
    }
}

/// The expansion with fully symbolic second-order coefficients. The
/// resolution of each starred coordinate checks the 𝔧-consistency of the
/// transcribed expansion as it goes.
pub fn integral_element_symbolic(sys: &QcSystem) -> IntegralElement {
    let mut rules = HashMap::new();
    for fam in StarFam::ALL {
        for (key, shape) in sys.star_canonical_keys(fam) {
            let x = covder_expansion(sys, fam, &key);
            let reprs = sys.star_coordinate_ids(fam, &key);
            match (shape, reprs) {
                (Shape::Complex, (re, Some(im))) => {
                    rules.insert(re, x.re(&sys.symbols));
                    rules.insert(im, x.im(&sys.symbols));
                }
                (Shape::Real, (re, None)) => {
                    assert_eq!(
                        x.conj(&sys.symbols),
                        x,
                        "expansion of {}*{key:?} must be real",
                        fam.tag()
                    );
                    rules.insert(re, x);
                }
                (Shape::Imag, (im, None)) => {
                    assert_eq!(
                        x.conj(&sys.symbols),
                        x.neg(),
                        "expansion of {}*{key:?} must be imaginary",
                        fam.tag()
                    );
                    rules.insert(im, x.scale_g(&GaussianRational::of(0, 1, -1, 1)));
                }
                _ => unreachable!(),
            }
        }
    }
    IntegralElement { rules }
}

/// Seeded random values for the second-order components: one Gaussian
/// rational per canonical component, conjugate symbols tied by conjugation.
pub fn random_second_order_values(
    sys: &QcSystem,
    rng: &mut impl Rng,
) -> BTreeMap<SymbolId, GaussianRational> {
    let mut vals = BTreeMap::new();
    for fam in SecFam::all() {
        for (key, _) in sys.sec_canonical_keys(fam) {
            let (s, sb) = sys.second_order_symbol_ids(fam, &key);
            let v = random_gaussian(rng);
            vals.insert(sb, v.conj());
            vals.insert(s, v);
        }
    }
    vals
}

/// Seeded variant of [`random_second_order_values`].
pub fn seeded_second_order_values(
    sys: &QcSystem,
    seed: u64,
) -> BTreeMap<SymbolId, GaussianRational> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    random_second_order_values(sys, &mut rng)
}

/// The zero element: all second-order components vanish.
pub fn integral_element_zero(sys: &QcSystem) -> IntegralElement {
    let zero: BTreeMap<SymbolId, GaussianRational> = sys
        .second_order_symbols()
        .iter()
        .map(|&s| (s, GaussianRational::zero()))
        .collect();
    instantiate(sys, &zero)
}

/// Instantiate the symbolic element at concrete second-order values.
pub fn instantiate(
    sys: &QcSystem,
    values: &BTreeMap<SymbolId, GaussianRational>,
) -> IntegralElement {
    let sym = integral_element_symbolic(sys);
    IntegralElement {
        rules: sym
            .rules
            .into_iter()
            .map(|(g, f)| (g, f.eval_symbols(values)))
            .collect(),
    }
}

/// Substitute the element into every Bianchi form; the returned residuals
/// must all be zero forms.
pub fn closure_residuals(bianchi: &BianchiSet, elem: &IntegralElement) -> Vec<(String, Form)> {
    bianchi
        .forms
        .iter()
        .map(|(label, f)| (label.to_string(), f.substitute_partial(&elem.rules)))
        .collect()
}

/// True when every residual vanishes.
pub fn closure_holds(bianchi: &BianchiSet, elem: &IntegralElement) -> bool {
    closure_residuals(bianchi, elem)
        .iter()
        .all(|(_, f)| f.is_zero())
}

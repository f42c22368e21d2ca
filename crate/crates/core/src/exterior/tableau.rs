//! Decomposition of degree-3 generators of the ideal into tableau columns:
//! every term must be (one unknown one-form) ∧ (two base one-forms).

use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::scalar::GaussianRational;

use super::form::{ExteriorError, Form};
use super::generator::GenId;

/// Result of a tableau extraction. Pair positions are 1-based positions in
/// the supplied base list, always `b < c`. Vectors are sparse maps from the
/// unknown generator to its exact coefficient.
#[derive(Clone, Debug, Default)]
pub struct Tableau {
    pub pairs: BTreeMap<(u16, u16), BTreeMap<GenId, GaussianRational>>,
    /// Terms whose two non-unknown factors are not both in the base list.
    pub outside: Vec<(Vec<GenId>, GaussianRational)>,
}

impl Tableau {
    pub fn vector(&self, b: u16, c: u16) -> Option<&BTreeMap<GenId, GaussianRational>> {
        self.pairs.get(&(b, c))
    }

    /// Reassemble Σ Π_{bc} ∧ ε_b ∧ ε_c (+ outside terms) as a form.
    pub fn reassemble(&self, base: &[GenId]) -> Form {
        let mut out = Form::zero();
        for (&(b, c), vec) in &self.pairs {
            for (&u, coeff) in vec {
                out.add_assign(&Form::from_terms([(
                    vec![u, base[b as usize - 1], base[c as usize - 1]],
                    crate::scalar::PolyScalar::constant(coeff.clone()),
                )]));
            }
        }
        for (tuple, c) in &self.outside {
            out.add_assign(&Form::from_terms([(
                tuple.clone(),
                crate::scalar::PolyScalar::constant(c.clone()),
            )]));
        }
        out
    }
}

/// Extract the tableau of a degree-3 form that is linear in the `unknowns`.
///
/// Each term must contain exactly one unknown generator; the other two
/// factors are looked up in `base` (1-based positions). Terms whose pair is
/// not fully inside `base` are reported in `outside` rather than dropped.
pub fn tableau_extract(
    f: &Form,
    unknowns: &dyn Fn(GenId) -> bool,
    base: &[GenId],
) -> Result<Tableau, ExteriorError> {
    let mut pos: HashMap<GenId, u16> = HashMap::new();
    for (k, &g) in base.iter().enumerate() {
        pos.insert(g, k as u16 + 1);
    }
    let mut out = Tableau::default();
    for (tuple, coeff) in f.terms() {
        if let Some(d) = Some(tuple.len()) {
            if d != 3 {
                return Err(ExteriorError::DegreeMismatch(d, 3));
            }
        }
        let c = coeff
            .as_constant()
            .ok_or(ExteriorError::NonConstantCoefficient)?;
        let unknown_positions: Vec<usize> = (0..3).filter(|&k| unknowns(tuple[k])).collect();
        if unknown_positions.len() != 1 {
            return Err(ExteriorError::StructuralLinearity(unknown_positions.len()));
        }
        let k = unknown_positions[0];
        let u = tuple[k];
        // sign to move the unknown to the front
        let sign_front = if k % 2 == 1 { -1i64 } else { 1 };
        let rest: Vec<GenId> = (0..3).filter(|&j| j != k).map(|j| tuple[j]).collect();
        match (pos.get(&rest[0]), pos.get(&rest[1])) {
            (Some(&p1), Some(&p2)) => {
                // rest is increasing in generator id; positions follow base order
                let (b, c2, sign_pair) = if p1 < p2 {
                    (p1, p2, 1i64)
                } else {
                    (p2, p1, -1)
                };
                let mut v = c;
                if sign_front * sign_pair < 0 {
                    v = -&v;
                }
                let entry = out.pairs.entry((b, c2)).or_default();
                let cur = entry.remove(&u).unwrap_or_else(GaussianRational::zero);
                let sum = &cur + &v;
                if !sum.is_zero() {
                    entry.insert(u, sum);
                }
            }
            _ => out.outside.push((tuple.to_vec(), c)),
        }
    }
    out.pairs.retain(|_, v| !v.is_empty());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::generator::Catalog;
    use crate::scalar::PolyScalar;

    #[test]
    fn unit_vector_and_reorder_sign() {
        let mut cat = Catalog::new();
        let u = cat.add_named("U");
        let e1 = cat.add_named("e1");
        let e2 = cat.add_named("e2");
        let base = vec![e1, e2];
        let is_unknown = |g: GenId| g == u;

        // U ∧ e1 ∧ e2 → {(1,2) ↦ +1 at U}
        let f = Form::from_terms([(vec![u, e1, e2], PolyScalar::one())]);
        let t = tableau_extract(&f, &is_unknown, &base).unwrap();
        assert_eq!(
            t.vector(1, 2).unwrap()[&u],
            crate::scalar::GaussianRational::one()
        );

        // U ∧ e2 ∧ e1 → {(1,2) ↦ −1 at U}
        let g = Form::from_terms([(vec![u, e2, e1], PolyScalar::one())]);
        let t2 = tableau_extract(&g, &is_unknown, &base).unwrap();
        assert_eq!(
            t2.vector(1, 2).unwrap()[&u],
            crate::scalar::GaussianRational::from_int(-1)
        );
    }

    #[test]
    fn structural_linearity_violation() {
        let mut cat = Catalog::new();
        let u = cat.add_named("U");
        let v = cat.add_named("V");
        let e1 = cat.add_named("e1");
        let base = vec![e1];
        let f = Form::from_terms([(vec![u, v, e1], PolyScalar::one())]);
        let err = tableau_extract(&f, &|g| g == u || g == v, &base).unwrap_err();
        assert_eq!(err, ExteriorError::StructuralLinearity(2));
    }

    #[test]
    fn outside_terms_are_reported_and_reassembly_is_exact() {
        let mut cat = Catalog::new();
        let u = cat.add_named("U");
        let e1 = cat.add_named("e1");
        let e2 = cat.add_named("e2");
        let e3 = cat.add_named("e3"); // not in base
        let base = vec![e1, e2];
        let f = Form::from_terms([
            (vec![u, e1, e2], PolyScalar::from_int(3)),
            (vec![u, e1, e3], PolyScalar::from_int(-2)),
        ]);
        let t = tableau_extract(&f, &|g| g == u, &base).unwrap();
        assert_eq!(t.outside.len(), 1);
        assert_eq!(t.reassemble(&base), f);
    }
}

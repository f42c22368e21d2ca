//! Sparse graded exterior forms and the table-driven derivation operator.

use std::collections::BTreeMap;
use std::collections::HashMap;

use smallvec::SmallVec;
use thiserror::Error;

use crate::scalar::{GaussianRational, PolyScalar, SymbolId, SymbolTable};

use super::generator::{Catalog, GenId};

pub type GenTuple = SmallVec<[GenId; 4]>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExteriorError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("no substitution rule for generator id {0}")]
    MissingRule(GenId),
    #[error("substitution image must have degree 1, got {0}")]
    BadRuleDegree(usize),
    #[error("derivation table does not cover generator id {0}")]
    UncoveredGenerator(GenId),
    #[error("derivation table does not cover symbol id {0}")]
    UncoveredSymbol(SymbolId),
    #[error("term has {0} unknown factors, expected exactly one")]
    StructuralLinearity(usize),
    #[error("tableau coefficient is not a constant scalar")]
    NonConstantCoefficient,
}

/// A graded exterior form: finite map from strictly increasing generator
/// tuples to polynomial scalars. The zero form is degree-polymorphic.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Form {
    terms: BTreeMap<GenTuple, PolyScalar>,
}

impl Form {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Degree-0 form from a scalar.
    pub fn scalar(c: PolyScalar) -> Self {
        let mut f = Form::zero();
        if !c.is_zero() {
            f.terms.insert(GenTuple::new(), c);
        }
        f
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::scalar(PolyScalar::constant(c))
    }

    /// The generator `g` as a one-form.
    pub fn generator(g: GenId) -> Self {
        let mut f = Form::zero();
        f.terms
            .insert(GenTuple::from_slice(&[g]), PolyScalar::one());
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree, if the form is nonzero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|t| t.len())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GenTuple, &PolyScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, tuple: &[GenId]) -> PolyScalar {
        self.terms.get(tuple).cloned().unwrap_or_default()
    }

    fn insert(&mut self, tuple: GenTuple, c: PolyScalar) {
        if c.is_zero() {
            return;
        }
        if let Some(d) = self.degree() {
            assert_eq!(d, tuple.len(), "mixed-degree form");
        }
        match self.terms.entry(tuple) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let mut s = e.get().clone();
                s.add_assign(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Build from raw (tuple, coefficient) pairs; tuples get sorted with signs.
    pub fn from_terms(items: impl IntoIterator<Item = (Vec<GenId>, PolyScalar)>) -> Self {
        let mut f = Form::zero();
        for (tuple, c) in items {
            if let Some((sorted, sign)) = sort_tuple(&tuple) {
                let c = if sign < 0 { c.neg() } else { c };
                f.insert(sorted, c);
            }
        }
        f
    }

    pub fn add(&self, other: &Form) -> Form {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Form) {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            assert_eq!(a, b, "adding forms of different degree");
        }
        for (t, c) in &other.terms {
            self.insert(t.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Form {
        Form {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &PolyScalar) -> Form {
        if c.is_zero() {
            return Form::zero();
        }
        let mut out = Form::zero();
        for (t, v) in &self.terms {
            out.insert(t.clone(), v.mul(c));
        }
        out
    }

    pub fn scale_g(&self, c: &GaussianRational) -> Form {
        self.scale(&PolyScalar::constant(c.clone()))
    }

    pub fn scale_int(&self, k: i64) -> Form {
        self.scale_g(&GaussianRational::from_int(k))
    }

    /// Multiplication by `i`.
    pub fn times_i(&self) -> Form {
        self.scale_g(&GaussianRational::i())
    }

    /// Exterior product. Bilinear, associative, graded-commutative.
    pub fn wedge(&self, other: &Form) -> Form {
        let mut out = Form::zero();
        for (t1, c1) in &self.terms {
            for (t2, c2) in &other.terms {
                if let Some((tuple, sign)) = merge_tuples(t1, t2) {
                    let mut c = c1.mul(c2);
                    if sign < 0 {
                        c = c.neg();
                    }
                    out.insert(tuple, c);
                }
            }
        }
        out
    }

    /// Conjugation: coefficients only. Generators are formal real
    /// one-forms, so this is the honest complex conjugate.
    pub fn conj(&self, table: &SymbolTable) -> Form {
        let mut out = Form::zero();
        for (t, c) in &self.terms {
            out.insert(t.clone(), c.conj(table));
        }
        out
    }

    /// Real part `(f + conj f)/2`.
    pub fn re(&self, table: &SymbolTable) -> Form {
        self.add(&self.conj(table))
            .scale(&PolyScalar::constant(GaussianRational::of(1, 2, 0, 1)))
    }

    /// Imaginary part `(f − conj f)/2i`.
    pub fn im(&self, table: &SymbolTable) -> Form {
        self.sub(&self.conj(table))
            .scale(&PolyScalar::constant(GaussianRational::of(0, 1, -1, 2)))
    }

    /// Substitute constants for symbols inside every coefficient.
    pub fn eval_symbols(
        &self,
        values: &std::collections::BTreeMap<SymbolId, GaussianRational>,
    ) -> Form {
        let mut out = Form::zero();
        for (t, c) in &self.terms {
            out.insert(t.clone(), c.eval_partial(values));
        }
        out
    }

    /// Linear substitution: replace every generator by a degree-1 form.
    /// Rules must cover every generator occurring in `self`.
    pub fn substitute(&self, rules: &HashMap<GenId, Form>) -> Result<Form, ExteriorError> {
        let mut out = Form::zero();
        for (t, c) in &self.terms {
            let mut acc = Form::scalar(c.clone());
            for &g in t.iter() {
                let img = rules.get(&g).ok_or(ExteriorError::MissingRule(g))?;
                if let Some(d) = img.degree() {
                    if d != 1 {
                        return Err(ExteriorError::BadRuleDegree(d));
                    }
                }
                acc = acc.wedge(img);
            }
            out.add_assign(&acc);
        }
        Ok(out)
    }

    /// Substitution that leaves unlisted generators alone.
    pub fn substitute_partial(&self, rules: &HashMap<GenId, Form>) -> Form {
        let mut out = Form::zero();
        for (t, c) in &self.terms {
            let mut acc = Form::scalar(c.clone());
            for &g in t.iter() {
                match rules.get(&g) {
                    Some(img) => acc = acc.wedge(img),
                    None => acc = acc.wedge(&Form::generator(g)),
                }
            }
            out.add_assign(&acc);
        }
        out
    }

    /// Graded Leibniz derivation driven by `table`.
    pub fn differentiate(
        &self,
        table: &DerivationTable,
        symbols: &SymbolTable,
    ) -> Result<Form, ExteriorError> {
        let mut out = Form::zero();
        for (t, c) in &self.terms {
            // d(coefficient) ∧ rest
            for s in c.symbols() {
                let ds = table.d_symbol(s).ok_or(ExteriorError::UncoveredSymbol(s))?;
                let dc = ds.scale(&c.diff(s));
                out.add_assign(&dc.wedge(&Form::from_tuple(t)));
            }
            let _ = symbols;
            // Σ_k (−1)^k (d e_k) ∧ (tuple minus k)
            for (k, &g) in t.iter().enumerate() {
                let dg = table
                    .d_generator(g)
                    .ok_or(ExteriorError::UncoveredGenerator(g))?;
                let mut rest: GenTuple = t.clone();
                rest.remove(k);
                let mut piece = dg.wedge(&Form::from_tuple(&rest)).scale(c);
                if k % 2 == 1 {
                    piece = piece.neg();
                }
                out.add_assign(&piece);
            }
        }
        Ok(out)
    }

    fn from_tuple(t: &[GenId]) -> Form {
        let mut f = Form::zero();
        f.terms.insert(GenTuple::from_slice(t), PolyScalar::one());
        f
    }

    pub fn display(&self, cat: &Catalog, symbols: &SymbolTable) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (t, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                s.push_str("  +  ");
            }
            s.push('(');
            s.push_str(&c.display(symbols));
            s.push(')');
            for &g in t.iter() {
                s.push('∧');
                s.push_str(cat.name(g));
            }
        }
        s
    }
}

/// Sort a tuple into strictly increasing order; `None` on repeats.
fn sort_tuple(t: &[GenId]) -> Option<(GenTuple, i32)> {
    let mut v: GenTuple = SmallVec::from_slice(t);
    let mut sign = 1;
    // insertion sort, counting swaps
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((v, sign))
}

/// Merge two strictly increasing tuples; `None` on a shared generator.
fn merge_tuples(a: &[GenId], b: &[GenId]) -> Option<(GenTuple, i32)> {
    let mut out = GenTuple::new();
    let (mut i, mut j) = (0usize, 0usize);
    let mut sign = 1;
    while i < a.len() || j < b.len() {
        if j >= b.len() {
            out.push(a[i]);
            i += 1;
        } else if i >= a.len() {
            out.push(b[j]);
            j += 1;
        } else if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else if b[j] < a[i] {
            // b[j] jumps over the remaining a-elements
            if (a.len() - i) % 2 == 1 {
                sign = -sign;
            }
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((out, sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::generator::Catalog;
    use crate::scalar::{GaussianRational, PolyScalar};
    use proptest::prelude::*;

    fn small_catalog(k: usize) -> (Catalog, Vec<GenId>) {
        let mut c = Catalog::new();
        let ids = (0..k).map(|i| c.add_named(&format!("e{i}"))).collect();
        (c, ids)
    }

    #[test]
    fn wedge_nilpotent_and_reorder() {
        let (_, e) = small_catalog(2);
        let e1 = Form::generator(e[0]);
        let e2 = Form::generator(e[1]);
        assert!(e1.wedge(&e1).is_zero());
        assert_eq!(e2.wedge(&e1), e1.wedge(&e2).neg());
    }

    #[test]
    fn complex_pair_expansion() {
        // (ξ+iζ)∧(ξ−iζ) = −2i ξ∧ζ
        let (_, e) = small_catalog(2);
        let xi = Form::generator(e[0]);
        let zeta = Form::generator(e[1]);
        let th = xi.add(&zeta.times_i());
        let thb = xi.sub(&zeta.times_i());
        let expect = xi.wedge(&zeta).scale_g(&GaussianRational::of(0, 1, -2, 1));
        assert_eq!(th.wedge(&thb), expect);
    }

    #[test]
    fn substitution_examples() {
        // identity rules leave the form unchanged; θ ↦ ξ+iζ sends
        // 2i θ∧θ̄ to 4 ξ∧ζ (the rank-one real form of the contact term)
        let mut c = Catalog::new();
        let th = c.add_named("θ");
        let thb = c.add_named("θ̄");
        let xi = c.add_named("ξ");
        let zeta = c.add_named("ζ");
        let f = Form::generator(th)
            .wedge(&Form::generator(thb))
            .scale_g(&GaussianRational::of(0, 1, 2, 1));
        let mut id_rules = HashMap::new();
        id_rules.insert(th, Form::generator(th));
        id_rules.insert(thb, Form::generator(thb));
        assert_eq!(f.substitute(&id_rules).unwrap(), f);

        let mut rules = HashMap::new();
        rules.insert(
            th,
            Form::generator(xi).add(&Form::generator(zeta).times_i()),
        );
        rules.insert(
            thb,
            Form::generator(xi).sub(&Form::generator(zeta).times_i()),
        );
        let g = f.substitute(&rules).unwrap();
        assert_eq!(
            g,
            Form::generator(xi)
                .wedge(&Form::generator(zeta))
                .scale_int(4)
        );

        rules.remove(&thb);
        assert_eq!(
            f.substitute(&rules).unwrap_err(),
            ExteriorError::MissingRule(thb)
        );
    }

    #[test]
    fn substitution_composes() {
        let (_, e) = small_catalog(6);
        let f = Form::generator(e[0])
            .wedge(&Form::generator(e[1]))
            .add(&Form::generator(e[0]).wedge(&Form::generator(e[2]).times_i()));
        let mut r1 = HashMap::new();
        for k in 0..3 {
            r1.insert(
                e[k],
                Form::generator(e[k + 3]).add(&Form::generator(e[(k + 1) % 3]).scale_int(2)),
            );
        }
        let mut r2 = HashMap::new();
        for k in 0..6 {
            r2.insert(
                e[k],
                Form::generator(e[(k + 1) % 6]).sub(&Form::generator(e[k]).times_i()),
            );
        }
        // substitute(r1) then substitute(r2) = substitute(r2 ∘ r1)
        let step = f.substitute_partial(&r1).substitute_partial(&r2);
        let composed: HashMap<GenId, Form> = r1
            .iter()
            .map(|(&g, img)| (g, img.substitute_partial(&r2)))
            .collect();
        assert_eq!(f.substitute_partial(&composed), step);
    }

    #[test]
    fn substitution_is_linear() {
        let (_, e) = small_catalog(5);
        let f = Form::generator(e[0]).wedge(&Form::generator(e[1]));
        let g = Form::generator(e[1]).wedge(&Form::generator(e[2])).times_i();
        let mut rules = HashMap::new();
        for k in 0..3 {
            rules.insert(
                e[k],
                Form::generator(e[3]).scale_int(k as i64 + 1).add(
                    &Form::generator(e[4]).scale_g(&GaussianRational::of(1, 2, -1, 3)),
                ),
            );
        }
        assert_eq!(
            f.add(&g).substitute_partial(&rules),
            f.substitute_partial(&rules).add(&g.substitute_partial(&rules))
        );
    }

    #[test]
    fn differentiate_constant_scalar_and_leibniz() {
        let (_, e) = small_catalog(4);
        let table = {
            let mut t = DerivationTable::new();
            // d e0 = e1∧e2, d e1 = −2 e2∧e3, d e2 = 0, d e3 = e0∧e1
            t.set_generator(e[0], Form::generator(e[1]).wedge(&Form::generator(e[2])));
            t.set_generator(
                e[1],
                Form::generator(e[2])
                    .wedge(&Form::generator(e[3]))
                    .scale_int(-2),
            );
            t.set_generator(e[2], Form::zero());
            t.set_generator(e[3], Form::generator(e[0]).wedge(&Form::generator(e[1])));
            t
        };
        let syms = crate::scalar::SymbolTable::new();
        let c = Form::constant(GaussianRational::of(3, 7, 1, 2));
        assert!(c.differentiate(&table, &syms).unwrap().is_zero());

        // Leibniz on products of two one-forms, all pairs
        for a in 0..4 {
            for b in 0..4 {
                let fa = Form::generator(e[a]);
                let fb = Form::generator(e[b]);
                let lhs = fa.wedge(&fb).differentiate(&table, &syms).unwrap();
                let rhs = table
                    .d_generator(e[a])
                    .unwrap()
                    .wedge(&fb)
                    .sub(&fa.wedge(table.d_generator(e[b]).unwrap()));
                assert_eq!(lhs, rhs, "Leibniz at ({a},{b})");
            }
        }
    }

    #[test]
    fn differentiate_symbol_coefficients() {
        // d(x·e0) = dx∧e0 + x·de0 with dx given by the table
        let mut syms = crate::scalar::SymbolTable::new();
        let x = syms.add_real("x");
        let (_, e) = small_catalog(3);
        let mut table = DerivationTable::new();
        table.set_generator(e[0], Form::zero());
        table.set_generator(e[1], Form::zero());
        table.set_generator(e[2], Form::zero());
        table.set_symbol(x, Form::generator(e[1]));
        let f = Form::generator(e[0]).scale(&PolyScalar::symbol(x));
        let df = f.differentiate(&table, &syms).unwrap();
        assert_eq!(df, Form::generator(e[1]).wedge(&Form::generator(e[0])));

        let g = Form::generator(e[2]).scale(&PolyScalar::symbol(x).mul(&PolyScalar::symbol(x)));
        let dg = g.differentiate(&table, &syms).unwrap();
        let expect = Form::generator(e[1])
            .wedge(&Form::generator(e[2]))
            .scale(&PolyScalar::symbol(x).scale(&GaussianRational::from_int(2)));
        assert_eq!(dg, expect);
    }

    #[test]
    fn uncovered_generator_reported() {
        let (_, e) = small_catalog(2);
        let table = DerivationTable::new();
        let syms = crate::scalar::SymbolTable::new();
        let err = Form::generator(e[0])
            .differentiate(&table, &syms)
            .unwrap_err();
        assert_eq!(err, ExteriorError::UncoveredGenerator(e[0]));
    }

    fn arb_form(gens: usize, degree: usize) -> impl Strategy<Value = Form> {
        proptest::collection::vec(
            (
                proptest::collection::vec(0..gens as u32, degree),
                -4i64..=4,
                -4i64..=4,
            ),
            0..5,
        )
        .prop_map(move |terms| {
            Form::from_terms(terms.into_iter().map(|(t, a, b)| {
                (
                    t,
                    PolyScalar::constant(GaussianRational::new(
                        crate::scalar::rat(a),
                        crate::scalar::rat(b),
                    )),
                )
            }))
        })
    }

    proptest! {
        #[test]
        fn wedge_graded_commutative(a in arb_form(8, 1), b in arb_form(8, 2)) {
            // deg 1 × deg 2: a∧b = (−1)^{1·2} b∧a = b∧a
            prop_assert_eq!(a.wedge(&b), b.wedge(&a));
        }

        #[test]
        fn wedge_odd_anticommutes(a in arb_form(8, 1), b in arb_form(8, 1)) {
            prop_assert_eq!(a.wedge(&b), b.wedge(&a).neg());
        }

        #[test]
        fn wedge_associative(a in arb_form(8, 1), b in arb_form(8, 1), c in arb_form(8, 1)) {
            prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
        }

        #[test]
        fn wedge_bilinear(a in arb_form(8, 1), b in arb_form(8, 1), c in arb_form(8, 2)) {
            prop_assert_eq!(a.add(&b).wedge(&c), a.wedge(&c).add(&b.wedge(&c)));
        }
    }
}

/// Images of `d` on generators and on function symbols.
#[derive(Clone, Debug, Default)]
pub struct DerivationTable {
    d_gen: HashMap<GenId, Form>,
    d_sym: HashMap<SymbolId, Form>,
}

impl DerivationTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_generator(&mut self, g: GenId, image: Form) {
        self.d_gen.insert(g, image);
    }

    pub fn set_symbol(&mut self, s: SymbolId, image: Form) {
        self.d_sym.insert(s, image);
    }

    pub fn d_generator(&self, g: GenId) -> Option<&Form> {
        self.d_gen.get(&g)
    }

    pub fn d_symbol(&self, s: SymbolId) -> Option<&Form> {
        self.d_sym.get(&s)
    }

    pub fn covered_generators(&self) -> impl Iterator<Item = GenId> + '_ {
        self.d_gen.keys().copied()
    }
}

//! Sparse multivariate polynomials in named formal symbols, with
//! Gaussian-rational coefficients.
//!
//! Symbols live in a [`SymbolTable`] which also records the conjugation
//! pairing: `conj` maps each symbol to its designated conjugate symbol
//! (itself, for symbols representing real quantities) and conjugates the
//! coefficients. Monomials are kept sorted by symbol id, so the term order
//! is the registration order of the symbols and equality is structural.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use smallvec::SmallVec;

use super::{GaussianRational, Rational};

pub type SymbolId = u32;

/// Registry of formal symbols and their conjugation pairing.
#[derive(Clone, Debug, Default)]
pub struct SymbolTable {
    names: Vec<String>,
    conj: Vec<SymbolId>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Register a self-conjugate (real) symbol.
    pub fn add_real(&mut self, name: impl Into<String>) -> SymbolId {
        let id = self.names.len() as SymbolId;
        self.names.push(name.into());
        self.conj.push(id);
        id
    }

    /// Register a conjugate pair; returns `(s, s̄)`.
    pub fn add_pair(
        &mut self,
        name: impl Into<String>,
        conj_name: impl Into<String>,
    ) -> (SymbolId, SymbolId) {
        let a = self.names.len() as SymbolId;
        let b = a + 1;
        self.names.push(name.into());
        self.names.push(conj_name.into());
        self.conj.push(b);
        self.conj.push(a);
        (a, b)
    }

    pub fn conj_of(&self, s: SymbolId) -> SymbolId {
        self.conj[s as usize]
    }

    pub fn name(&self, s: SymbolId) -> &str {
        &self.names[s as usize]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// A monomial: multiset of symbols, stored as a sorted exponent list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(SmallVec<[(SymbolId, u32); 2]>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn symbol(s: SymbolId) -> Self {
        Monomial(SmallVec::from_slice(&[(s, 1)]))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(SymbolId, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out: SmallVec<[(SymbolId, u32); 2]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            if j >= other.0.len() || (i < self.0.len() && self.0[i].0 < other.0[j].0) {
                out.push(self.0[i]);
                i += 1;
            } else if i >= self.0.len() || other.0[j].0 < self.0[i].0 {
                out.push(other.0[j]);
                j += 1;
            } else {
                out.push((self.0[i].0, self.0[i].1 + other.0[j].1));
                i += 1;
                j += 1;
            }
        }
        Monomial(out)
    }

    fn map_symbols(&self, f: impl Fn(SymbolId) -> SymbolId) -> Monomial {
        let mut v: SmallVec<[(SymbolId, u32); 2]> =
            self.0.iter().map(|&(s, e)| (f(s), e)).collect();
        v.sort_unstable();
        Monomial(v)
    }
}

/// Sparse polynomial over the Gaussian rationals. No zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PolyScalar {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl PolyScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn symbol(s: SymbolId) -> Self {
        let mut p = Self::zero();
        p.terms.insert(Monomial::symbol(s), GaussianRational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    /// The constant value, if this polynomial has no symbol content.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.terms.is_empty() {
            return Some(GaussianRational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    fn insert_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &PolyScalar) -> PolyScalar {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &PolyScalar) {
        for (m, c) in &other.terms {
            self.insert_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &PolyScalar) -> PolyScalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyScalar {
        PolyScalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &PolyScalar) -> PolyScalar {
        let mut out = PolyScalar::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> PolyScalar {
        if c.is_zero() {
            return PolyScalar::zero();
        }
        PolyScalar {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn scale_rat(&self, r: &Rational) -> PolyScalar {
        self.scale(&GaussianRational::from_rational(r.clone()))
    }

    /// Conjugation: swaps each symbol with its designated conjugate and
    /// conjugates the coefficients. An antilinear involution.
    pub fn conj(&self, table: &SymbolTable) -> PolyScalar {
        let mut out = PolyScalar::zero();
        for (m, c) in &self.terms {
            out.insert_term(m.map_symbols(|s| table.conj_of(s)), c.conj());
        }
        out
    }

    /// Formal partial derivative with respect to symbol `s`.
    pub fn diff(&self, s: SymbolId) -> PolyScalar {
        let mut out = PolyScalar::zero();
        for (m, c) in &self.terms {
            if let Some(pos) = m.factors().iter().position(|&(t, _)| t == s) {
                let e = m.factors()[pos].1;
                let mut fs: SmallVec<[(SymbolId, u32); 2]> = m.factors().into();
                if e == 1 {
                    fs.remove(pos);
                } else {
                    fs[pos].1 = e - 1;
                }
                out.insert_term(Monomial(fs), c.scale(&super::rat(e as i64)));
            }
        }
        out
    }

    /// Symbols occurring in this polynomial, deduplicated.
    pub fn symbols(&self) -> Vec<SymbolId> {
        let mut v: Vec<SymbolId> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(s, _)| s))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Substitute constants for the listed symbols (others untouched).
    pub fn eval_partial(&self, values: &BTreeMap<SymbolId, GaussianRational>) -> PolyScalar {
        let mut out = PolyScalar::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest: SmallVec<[(SymbolId, u32); 2]> = SmallVec::new();
            for &(s, e) in m.factors() {
                match values.get(&s) {
                    Some(v) => {
                        for _ in 0..e {
                            coeff = &coeff * v;
                        }
                    }
                    None => rest.push((s, e)),
                }
            }
            out.insert_term(Monomial(rest), coeff);
        }
        out
    }

    pub fn display(&self, table: &SymbolTable) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            if m.is_one() {
                let _ = write!(s, "{c}");
            } else {
                let _ = write!(s, "({c})");
                for &(sym, e) in m.factors() {
                    if e == 1 {
                        let _ = write!(s, "·{}", table.name(sym));
                    } else {
                        let _ = write!(s, "·{}^{}", table.name(sym), e);
                    }
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;

    fn xy() -> (SymbolTable, PolyScalar, PolyScalar) {
        let mut t = SymbolTable::new();
        let x = t.add_real("x");
        let y = t.add_real("y");
        (t, PolyScalar::symbol(x), PolyScalar::symbol(y))
    }

    #[test]
    fn difference_of_squares() {
        let (_, x, y) = xy();
        let lhs = x.add(&y).mul(&x.sub(&y));
        let rhs = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn conj_swaps_paired_symbols() {
        // conj(i·x) = −i·x̄
        let mut t = SymbolTable::new();
        let (x, xb) = t.add_pair("x", "x̄");
        let p = PolyScalar::symbol(x).mul(&PolyScalar::i());
        let q = p.conj(&t);
        assert_eq!(
            q,
            PolyScalar::symbol(xb).scale(&GaussianRational::of(0, 1, -1, 1))
        );
        assert_eq!(q.conj(&t), p);
    }

    #[test]
    fn derivative() {
        let (_, x, y) = xy();
        // d/dx (x²y + 3x) = 2xy + 3
        let p = x
            .mul(&x)
            .mul(&y)
            .add(&x.scale(&GaussianRational::from_int(3)));
        let d = p.diff(0);
        let expect = x
            .mul(&y)
            .scale(&GaussianRational::from_int(2))
            .add(&PolyScalar::from_int(3));
        assert_eq!(d, expect);
    }

    #[test]
    fn eval_partial_substitutes() {
        let (_, x, y) = xy();
        let p = x.mul(&y).add(&x);
        let mut vals = BTreeMap::new();
        vals.insert(0u32, GaussianRational::from_int(2));
        let q = p.eval_partial(&vals);
        // 2y + 2
        assert_eq!(
            q,
            y.scale(&GaussianRational::from_int(2))
                .add(&PolyScalar::from_int(2))
        );
    }

    #[test]
    fn constant_detection() {
        let (_, x, _) = xy();
        assert_eq!(
            PolyScalar::from_int(5).as_constant(),
            Some(GaussianRational::from_int(5))
        );
        assert_eq!(
            PolyScalar::zero().as_constant(),
            Some(GaussianRational::zero())
        );
        assert_eq!(x.as_constant(), None);
    }

    fn arb_poly() -> impl Strategy<Value = PolyScalar> {
        proptest::collection::vec(((0u32..3), (0u32..3), -5i64..5, -5i64..5), 0..6).prop_map(|ts| {
            let mut p = PolyScalar::zero();
            for (s1, e1, a, b) in ts {
                let m = Monomial::symbol(s1);
                let mut mm = m.clone();
                for _ in 0..e1 {
                    mm = mm.mul(&m);
                }
                p = p.add(&PolyScalar {
                    terms: [(mm, GaussianRational::new(rat(a), rat(b)))]
                        .into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .collect(),
                });
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
        }

        #[test]
        fn degree_additive(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!(a.mul(&b).degree(), a.degree() + b.degree());
        }
    }
}

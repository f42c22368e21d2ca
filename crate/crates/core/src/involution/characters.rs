//! The filtration and character sequence of the ideal, computed by brute
//! force: tableau extraction over the adapted ε basis, realification, and
//! exact ranks recomputed from scratch at every flag level.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::exterior::{tableau_extract, GenId};
use crate::qc::{bianchi_forms, QcSystem};
use crate::scalar::GaussianRational;

use super::closed_form;
use super::rank::{RowSpace, SparseRow};

/// Everything the involutivity analysis reports for one rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterReport {
    pub n: u16,
    pub d1: u64,
    pub d2: u64,
    /// dim 𝔉_λ for λ = 1..=2n+3 (constant afterwards).
    pub dim_f: Vec<u64>,
    /// v_1 … v_{d1}.
    pub v: Vec<u64>,
    /// Rank over all ε pairs, which must equal d₂ (stabilization).
    pub full_rank_all_pairs: u64,
    pub cartan_sum: u64,
    pub d_closed: u64,
    /// Filled in by the solution-space computation when it has been run.
    pub d_nullity: Option<u64>,
    pub involutive: bool,
}

impl CharacterReport {
    /// dim 𝔉_n, the filtration dimension at level n.
    pub fn dim_f_at_n(&self) -> u64 {
        self.dim_f[self.n as usize - 1]
    }

    /// Compare against every closed-form golden value.
    pub fn matches_closed_forms(&self) -> bool {
        self.v == closed_form::v_closed(self.n)
            && self.d1 == closed_form::d1(self.n)
            && self.d2 == closed_form::d2(self.n)
            && self.v.iter().sum::<u64>() == self.d2
            && self.cartan_sum == closed_form::big_d(self.n)
            && self.dim_f_at_n() == closed_form::dim_f_n(self.n)
    }

    pub fn with_nullity(mut self, nullity: u64) -> Self {
        self.d_nullity = Some(nullity);
        self.involutive = self.cartan_sum == self.d_closed && nullity == self.d_closed;
        self
    }
}

/// One realified tableau row, tagged with its ε pair.
pub(crate) struct PairRow {
    pub pair: (u16, u16),
    pub row: SparseRow,
}

pub(crate) fn realified_rows(sys: &QcSystem) -> Vec<PairRow> {
    let bset = bianchi_forms(sys).to_epsilon(sys);
    let base: Vec<GenId> = sys.eps_generators().to_vec();
    let mut rows = vec![];
    for (label, f) in &bset.forms {
        let tab = tableau_extract(f, &|g| sys.is_star_coordinate(g), &base)
            .unwrap_or_else(|e| panic!("tableau extraction failed on {label}: {e}"));
        assert!(
            tab.outside.is_empty(),
            "{label}: wedge partners outside the ε list"
        );
        for (&pair, vec) in &tab.pairs {
            let (re, im) = realify(sys, vec);
            if !re.is_empty() {
                rows.push(PairRow { pair, row: re });
            }
            if !im.is_empty() {
                rows.push(PairRow { pair, row: im });
            }
        }
    }
    rows
}

fn realify(sys: &QcSystem, vec: &BTreeMap<GenId, GaussianRational>) -> (SparseRow, SparseRow) {
    let mut re = SparseRow::new();
    let mut im = SparseRow::new();
    for (&g, c) in vec {
        let col = sys
            .star_coordinate_index(g)
            .expect("tableau unknowns are starred coordinates");
        if !num_traits::Zero::is_zero(&c.re) {
            re.push((col, c.re.clone()));
        }
        if !num_traits::Zero::is_zero(&c.im) {
            im.push((col, c.im.clone()));
        }
    }
    (re, im)
}

/// Compute the character sequence by rank differences of the filtration.
pub fn characters(sys: &QcSystem) -> CharacterReport {
    let n = sys.n();
    let rows = realified_rows(sys);
    let top = (2 * n + 3) as usize;

    let dim_f: Vec<u64> = (1..=top)
        .into_par_iter()
        .map(|lam| {
            let mut space = RowSpace::new();
            for pr in &rows {
                if (pr.pair.1 as usize) <= lam {
                    space.insert(pr.row.clone());
                }
            }
            space.rank() as u64
        })
        .collect();

    let mut full = RowSpace::new();
    for pr in &rows {
        full.insert(pr.row.clone());
    }
    let full_rank_all_pairs = full.rank() as u64;

    let d1 = closed_form::d1(n);
    let d2 = closed_form::d2(n);
    assert_eq!(
        full_rank_all_pairs, d2,
        "the full tableau span must be the whole starred coordinate space"
    );
    assert_eq!(
        dim_f[top - 1],
        d2,
        "the filtration must stabilize at d₂ by level 2n+3"
    );
    for w in dim_f.windows(2) {
        assert!(w[0] <= w[1], "filtration dimensions must be nondecreasing");
    }
    assert_eq!(dim_f[0], 0, "v₁ = 0");

    let mut v = vec![0u64; d1 as usize];
    for lam in 2..=top {
        v[lam - 1] = dim_f[lam - 1] - dim_f[lam - 2];
    }
    let cartan_sum = closed_form::cartan_sum(&v);
    let d_closed = closed_form::big_d(n);
    CharacterReport {
        n,
        d1,
        d2,
        dim_f,
        v,
        full_rank_all_pairs,
        cartan_sum,
        d_closed,
        d_nullity: None,
        involutive: cartan_sum == d_closed,
    }
}

/// Involutivity verdict with the per-level contribution ledger.
#[derive(Clone, Debug)]
pub struct CartanVerdict {
    pub involutive: bool,
    pub cartan_sum: u64,
    pub d_closed: u64,
    pub d_nullity: Option<u64>,
    /// (λ, v_λ, λ·v_λ) for the nonzero characters.
    pub contributions: Vec<(u64, u64, u64)>,
}

/// The Cartan test: `Σ λ·v_λ = D`, with the two D computations agreeing
/// whenever the nullity has been computed.
pub fn cartan_test(report: &CharacterReport) -> CartanVerdict {
    let contributions: Vec<(u64, u64, u64)> = report
        .v
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(k, &v)| ((k + 1) as u64, v, (k + 1) as u64 * v))
        .collect();
    let cartan_sum = closed_form::cartan_sum(&report.v);
    let nullity_ok = report.d_nullity.is_none_or(|x| x == report.d_closed);
    CartanVerdict {
        involutive: cartan_sum == report.d_closed && nullity_ok,
        cartan_sum,
        d_closed: report.d_closed,
        d_nullity: report.d_nullity,
        contributions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qc::build_system;

    #[test]
    fn n1_characters_and_ledger() {
        let sys = build_system(1);
        let rep = characters(&sys);
        assert_eq!(&rep.v[..5], &[0, 10, 12, 9, 4]);
        assert!(rep.v[5..].iter().all(|&x| x == 0));
        assert_eq!(rep.dim_f, vec![0, 10, 22, 31, 35]);
        // the full tableau matrix over all ε pairs spans everything
        assert_eq!(rep.full_rank_all_pairs, 35);
        assert!(rep.matches_closed_forms());

        let verdict = cartan_test(&rep.clone().with_nullity(112));
        assert!(verdict.involutive);
        // 2·10 + 3·12 + 4·9 + 5·4 = 112
        assert_eq!(
            verdict.contributions,
            vec![(2, 10, 20), (3, 12, 36), (4, 9, 36), (5, 4, 20)]
        );

        // synthetic failure: v₂ decremented breaks the test
        let mut broken = rep;
        broken.v[1] -= 1;
        assert!(!cartan_test(&broken).involutive);
    }

    #[test]
    fn nullity_must_agree() {
        let sys = build_system(1);
        let rep = characters(&sys).with_nullity(111);
        assert!(!rep.involutive);
        assert!(!cartan_test(&rep).involutive);
    }
}

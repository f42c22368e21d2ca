//! The solution-space dimension computed as the nullity of the assembled
//! Bianchi linear system: every starred coordinate is expanded over the
//! 4n+3 ε directions and the coefficient of each ε-triple in each Bianchi
//! three-form is set to zero.

use std::collections::BTreeMap;

use crate::qc::{bianchi_forms, QcSystem};
use crate::scalar::GaussianRational;

use super::rank::{RowSpace, SparseRow};

/// Nullity of the assembled system; must equal both the closed-form D and
/// the second-order parameter count.
pub fn solution_space_nullity(sys: &QcSystem) -> u64 {
    let bset = bianchi_forms(sys).to_epsilon(sys);
    let ne = sys.eps_generators().len() as u32; // 4n+3
    let ncols = sys.star_coordinates().len() as u32 * ne;

    let mut pos: BTreeMap<crate::exterior::GenId, u16> = BTreeMap::new();
    for (k, &g) in sys.eps_generators().iter().enumerate() {
        pos.insert(g, k as u16 + 1);
    }

    let mut space = RowSpace::new();
    for (label, f) in &bset.forms {
        // complex equations grouped by ε-triple
        let mut eqs: BTreeMap<(u16, u16, u16), BTreeMap<u32, GaussianRational>> = BTreeMap::new();
        for (tuple, coeff) in f.terms() {
            assert_eq!(tuple.len(), 3, "{label}: not a three-form");
            let c = coeff
                .as_constant()
                .expect("Bianchi coefficients are constants");
            let u = sys
                .star_coordinate_index(tuple[0])
                .unwrap_or_else(|| panic!("{label}: term without starred factor"));
            let b = pos[&tuple[1]];
            let c2 = pos[&tuple[2]];
            debug_assert!(b < c2);
            for a in 1..=ne as u16 {
                if a == b || a == c2 {
                    continue;
                }
                // sign of sorting ε_a into ε_a∧ε_b∧ε_c
                let smaller = (b < a) as i32 + (c2 < a) as i32;
                let mut key = [a, b, c2];
                key.sort_unstable();
                let mut v = c.clone();
                if smaller % 2 == 1 {
                    v = -&v;
                }
                let col = u * ne + (a as u32 - 1);
                let entry = eqs
                    .entry((key[0], key[1], key[2]))
                    .or_default()
                    .entry(col)
                    .or_insert_with(GaussianRational::zero);
                *entry += &v;
            }
        }
        for (_, eq) in eqs {
            let mut re = SparseRow::new();
            let mut im = SparseRow::new();
            for (col, v) in eq {
                if !num_traits::Zero::is_zero(&v.re) {
                    re.push((col, v.re));
                }
                if !num_traits::Zero::is_zero(&v.im) {
                    im.push((col, v.im));
                }
            }
            space.insert(re);
            space.insert(im);
        }
    }
    let rank = space.rank() as u32;
    (ncols - rank) as u64
}

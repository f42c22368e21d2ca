//! Closed-form values for the coframe size, the curvature coordinate count,
//! the solution-space dimension, and the character sequence. These are the
//! golden values that the brute-force rank computations must reproduce.

use crate::tensor::binomial;

/// Coframe size: `C(2n+5, 2) = (2n+5)(n+2)`.
pub fn d1(n: u16) -> u64 {
    let n = n as u64;
    binomial(2 * n + 5, 2)
}

/// Curvature coordinate count:
/// `C(2n+3,4) + 2C(2n+2,3) + 3C(2n+1,2) + 8n + 5 = (2n+5)(2n+3)(n+2)(n+1)/6`.
pub fn d2(n: u16) -> u64 {
    let n = n as u64;
    (2 * n + 5) * (2 * n + 3) * (n + 2) * (n + 1) / 6
}

/// The binomial-sum form of d₂, asserted equal to the product form.
pub fn d2_binomial_sum(n: u16) -> u64 {
    let n = n as u64;
    binomial(2 * n + 3, 4) + 2 * binomial(2 * n + 2, 3) + 3 * binomial(2 * n + 1, 2) + 8 * n + 5
}

/// Solution-space dimension:
/// `2C(2n+4,5) + 4C(2n+3,4) + 6C(2n+2,3) + 8C(2n+1,2) + 20n + 12
///  = 2(2n+5)(2n+3)(n+3)(n+2)(n+1)/15`.
pub fn big_d(n: u16) -> u64 {
    let n = n as u64;
    2 * (2 * n + 5) * (2 * n + 3) * (n + 3) * (n + 2) * (n + 1) / 15
}

pub fn big_d_binomial_sum(n: u16) -> u64 {
    let n = n as u64;
    2 * binomial(2 * n + 4, 5)
        + 4 * binomial(2 * n + 3, 4)
        + 6 * binomial(2 * n + 2, 3)
        + 8 * binomial(2 * n + 1, 2)
        + 20 * n
        + 12
}

/// Filtration dimension at level n: `n(n−1)(11n² + 61n + 86)/24`.
pub fn dim_f_n(n: u16) -> u64 {
    let n = n as u64;
    n * (n - 1) * (11 * n * n + 61 * n + 86) / 24
}

/// The closed-form character sequence `v_1 … v_{d1}`.
pub fn v_closed(n: u16) -> Vec<u64> {
    let nn = n as u64;
    let mut v = vec![0u64; d1(n) as usize];
    // v[k] holds v_{k+1}
    for lam in 2..=nn {
        v[lam as usize - 1] = (lam - 1) * (2 * nn + 4 - lam) * (2 * nn + 5 - lam) / 2;
    }
    for k in 1..=nn {
        v[(nn + k) as usize - 1] = (nn + k - 1) * (nn - k + 4) * (nn - k + 5) / 2;
    }
    v[2 * nn as usize] = 12 * nn; // v_{2n+1}
    v[2 * nn as usize + 1] = 6 * nn + 3; // v_{2n+2}
    v[2 * nn as usize + 2] = 2 * nn + 2; // v_{2n+3}
    v
}

/// `Σ λ·v_λ`.
pub fn cartan_sum(v: &[u64]) -> u64 {
    v.iter().enumerate().map(|(k, &x)| (k as u64 + 1) * x).sum()
}

/// All closed-form counts for a rank, as one record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormCounts {
    pub n: u16,
    pub d1: u64,
    pub d2: u64,
    pub big_d: u64,
    pub dim_f_n: u64,
    pub v: Vec<u64>,
}

pub fn closed_form_counts(n: u16) -> ClosedFormCounts {
    ClosedFormCounts {
        n,
        d1: d1(n),
        d2: d2(n),
        big_d: big_d(n),
        dim_f_n: dim_f_n(n),
        v: v_closed(n),
    }
}

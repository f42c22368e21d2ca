//! The integer sequence `a_1=1, a_2=0, a_3=−1, a_k + a_{k+1} + a_{k+3} = 0`
//! and symmetric-function arithmetic on the roots of `z³ + z + 1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Cached prefix of the recurrence.
#[derive(Clone, Debug, Default)]
pub struct RecurrenceSeq {
    a: Vec<BigInt>,
}

impl RecurrenceSeq {
    pub fn new() -> Self {
        RecurrenceSeq {
            a: vec![BigInt::one(), BigInt::zero(), BigInt::from(-1)],
        }
    }

    /// `a_k`, 1-based. Panics on `k = 0`.
    pub fn get(&mut self, k: usize) -> BigInt {
        assert!(k >= 1, "recurrence is 1-based");
        while self.a.len() < k {
            let m = self.a.len();
            // a_{m+1} = −a_{m-2} − a_{m-1}  (from a_k + a_{k+1} + a_{k+3} = 0)
            let next = -(&self.a[m - 3] + &self.a[m - 2]);
            self.a.push(next);
        }
        self.a[k - 1].clone()
    }
}

/// `a_k` as a standalone call.
pub fn recurrence(k: usize) -> BigInt {
    RecurrenceSeq::new().get(k)
}

/// Power sums `p_k = z_1^k + z_2^k + z_3^k` of the roots of `z³ + z + 1`:
/// `p_1 = 0, p_2 = −2, p_3 = −3, p_k = −p_{k−2} − p_{k−3}`.
pub fn power_sums_cubic(up_to: usize) -> Vec<BigInt> {
    let mut p = Vec::with_capacity(up_to + 1);
    p.push(BigInt::from(3)); // p_0 = number of roots
    if up_to >= 1 {
        p.push(BigInt::zero());
    }
    if up_to >= 2 {
        p.push(BigInt::from(-2));
    }
    if up_to >= 3 {
        p.push(BigInt::from(-3));
    }
    for k in 4..=up_to {
        let next = -(&p[k - 2] + &p[k - 3]);
        p.push(next);
    }
    p
}

/// Power sums `q_k = Σ_{i<j} (z_i z_j)^k`; the pairwise products are the
/// roots of `w³ − w² − 1`, so `q_1 = 1, q_2 = 1, q_3 = 4, q_k = q_{k−1} + q_{k−3}`.
pub fn power_sums_pair_products(up_to: usize) -> Vec<BigInt> {
    let mut q = Vec::with_capacity(up_to + 1);
    q.push(BigInt::from(3));
    if up_to >= 1 {
        q.push(BigInt::one());
    }
    if up_to >= 2 {
        q.push(BigInt::one());
    }
    if up_to >= 3 {
        q.push(BigInt::from(4));
    }
    for k in 4..=up_to {
        let next = &q[k - 1] + &q[k - 3];
        q.push(next);
    }
    q
}

/// `(z₁ⁿ−1)(z₂ⁿ−1)(z₃ⁿ−1)` as an exact integer:
/// `e₃ⁿ − qₙ + pₙ − 1` with `e₃ = −1`.
pub fn root_product_minus_one(n: usize) -> BigInt {
    let p = power_sums_cubic(n);
    let q = power_sums_pair_products(n);
    let e3n = if n.is_multiple_of(2) {
        BigInt::one()
    } else {
        BigInt::from(-1)
    };
    e3n - &q[n] + &p[n] - BigInt::one()
}

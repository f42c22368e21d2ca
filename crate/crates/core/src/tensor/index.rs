//! Index bookkeeping for quaternionic rank `n`.
//!
//! Greek indices run over `1..=2n`. An index `a <= n` is "plain"; `a > n`
//! is the primed partner of `a - n`. Bracketed values `[k]` reduce any
//! integer to the unique representative in `1..=n` congruent to it mod n.

/// The fixed constants and index helpers for a given rank.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct IndexSpec {
    pub n: u16,
}

impl IndexSpec {
    pub fn new(n: u16) -> Self {
        assert!(n >= 1, "rank must be at least 1");
        IndexSpec { n }
    }

    /// Number of index values, `2n`.
    pub fn dim(&self) -> u16 {
        2 * self.n
    }

    /// All index values `1..=2n`.
    pub fn range(&self) -> impl Iterator<Item = u16> {
        1..=self.dim()
    }

    /// Plain values `1..=n`.
    pub fn plain_range(&self) -> impl Iterator<Item = u16> {
        1..=self.n
    }

    /// `α' = α + n` for `α ∈ 1..=n`.
    pub fn primed(&self, a: u16) -> u16 {
        debug_assert!((1..=self.n).contains(&a));
        a + self.n
    }

    pub fn is_primed(&self, a: u16) -> bool {
        a > self.n
    }

    /// Swap an index with its primed partner.
    pub fn toggle(&self, a: u16) -> u16 {
        if a > self.n {
            a - self.n
        } else {
            a + self.n
        }
    }

    /// `[k]`: the unique value in `1..=n` congruent to `k` mod n.
    pub fn bracket(&self, k: i64) -> u16 {
        let n = self.n as i64;
        let r = k.rem_euclid(n);
        (if r == 0 { n } else { r }) as u16
    }

    /// Bracket followed by priming.
    pub fn bracket_primed(&self, k: i64) -> u16 {
        self.bracket(k) + self.n
    }

    /// The constant pairing `g_{αβ̄} = δ_{αβ}` (also `g^{αβ̄}`).
    pub fn g(&self, a: u16, b: u16) -> i64 {
        (a == b) as i64
    }

    /// The constant two-form coefficients `π_{αβ}`: `+1` if `β = α + n`,
    /// `−1` if `α = β + n`, else 0. All raised/barred variants of π reduce
    /// to this table; only the order of the two indices matters.
    pub fn pi(&self, a: u16, b: u16) -> i64 {
        if b == a + self.n {
            1
        } else if a == b + self.n {
            -1
        } else {
            0
        }
    }

    /// Pairs `(σ, coeff)` with `π_{aσ} = coeff ≠ 0` (exactly one for valid a).
    pub fn pi_partner(&self, a: u16) -> (u16, i64) {
        if a <= self.n {
            (a + self.n, 1)
        } else {
            (a - self.n, -1)
        }
    }

    /// Sign `(−1)^{#primed}` picked up when 𝔧 toggles the index tuple.
    pub fn j_sign(&self, idx: &[u16]) -> i64 {
        let primes = idx.iter().filter(|&&a| a > self.n).count();
        if primes % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Toggle every index, preserving order.
    pub fn toggle_all(&self, idx: &[u16]) -> Vec<u16> {
        idx.iter().map(|&a| self.toggle(a)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primed_and_bracket() {
        let s = IndexSpec::new(6);
        assert_eq!(s.primed(3), 9);
        assert_eq!(s.bracket(15), 3);
        assert_eq!(s.bracket(6), 6);
        assert_eq!(s.bracket(0), 6);
        assert_eq!(s.bracket(-1), 5);
        let s1 = IndexSpec::new(1);
        assert_eq!(s1.bracket(-5), 1);
        assert_eq!(s1.bracket(7), 1);
    }

    #[test]
    fn pi_square_is_minus_identity() {
        for n in 1..=4u16 {
            let s = IndexSpec::new(n);
            for a in s.range() {
                for b in s.range() {
                    // π^α_{σ̄} π^{σ̄}_β = Σ_σ π_{σα} π_{βσ} = −δ_{αβ}
                    let sum: i64 = s.range().map(|sg| s.pi(sg, a) * s.pi(b, sg)).sum();
                    assert_eq!(sum, -s.g(a, b));
                }
            }
        }
    }

    #[test]
    fn pi_antisymmetric() {
        let s = IndexSpec::new(3);
        for a in s.range() {
            for b in s.range() {
                assert_eq!(s.pi(a, b), -s.pi(b, a));
            }
        }
        assert_eq!(s.pi(1, 4), 1);
        assert_eq!(s.pi(4, 1), -1);
        assert_eq!(s.pi(1, 2), 0);
    }
}

//! Indexed arrays of exact scalars and the antilinear operator 𝔧.
//!
//! An array here stores components over index values `1..=2n` with a fixed
//! per-slot bar tag. The components with all slot bars toggled are, by the
//! standing convention, the complex conjugates of the stored ones, so 𝔧
//! reduces to one π-contraction per slot: toggle every index, conjugate,
//! and pick up a sign per primed index.

use std::collections::BTreeMap;

use rand::Rng;

use crate::scalar::{ratio, GaussianRational};

use super::index::IndexSpec;

/// A general indexed array with explicit slot bar tags.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexedArray {
    pub spec: IndexSpec,
    /// One entry per slot; `true` marks a barred slot.
    pub barred: Vec<bool>,
    comps: BTreeMap<Vec<u16>, GaussianRational>,
}

impl IndexedArray {
    pub fn zero(spec: IndexSpec, barred: Vec<bool>) -> Self {
        IndexedArray {
            spec,
            barred,
            comps: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.barred.len()
    }

    pub fn set(&mut self, idx: &[u16], v: GaussianRational) {
        assert_eq!(idx.len(), self.arity(), "arity mismatch");
        assert!(idx.iter().all(|&a| (1..=self.spec.dim()).contains(&a)));
        if v.is_zero() {
            self.comps.remove(idx);
        } else {
            self.comps.insert(idx.to_vec(), v);
        }
    }

    pub fn get(&self, idx: &[u16]) -> GaussianRational {
        self.comps
            .get(idx)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u16>, &GaussianRational)> {
        self.comps.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// The antilinear operator: each slot contracted with the π constants
    /// against the bar-swapped conjugate array.
    pub fn j_apply(&self) -> IndexedArray {
        let mut out = IndexedArray::zero(self.spec, self.barred.clone());
        for (idx, v) in &self.comps {
            // Component at `idx` contributes to (𝔧T) at the toggled tuple:
            // (𝔧T)_I = sign(I)·conj(T_Ĩ), and Ĩ = idx means I = toggle(idx).
            let target = self.spec.toggle_all(idx);
            let sign = self.spec.j_sign(&target);
            let mut c = v.conj();
            if sign < 0 {
                c = -&c;
            }
            if !c.is_zero() {
                out.comps.insert(target, c);
            }
        }
        out
    }
}

/// A totally symmetric array stored on canonical (weakly increasing)
/// multi-indices, all slots unbarred.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymArray {
    pub spec: IndexSpec,
    pub arity: u8,
    comps: BTreeMap<Vec<u16>, GaussianRational>,
}

impl SymArray {
    pub fn zero(spec: IndexSpec, arity: u8) -> Self {
        SymArray {
            spec,
            arity,
            comps: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, idx: &[u16], v: GaussianRational) {
        assert_eq!(idx.len(), self.arity as usize);
        let mut key = idx.to_vec();
        key.sort_unstable();
        if v.is_zero() {
            self.comps.remove(&key);
        } else {
            self.comps.insert(key, v);
        }
    }

    pub fn get(&self, idx: &[u16]) -> GaussianRational {
        let mut key = idx.to_vec();
        key.sort_unstable();
        self.comps
            .get(&key)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn canonical_components(&self) -> impl Iterator<Item = (&Vec<u16>, &GaussianRational)> {
        self.comps.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// 𝔧 on a totally symmetric array is again totally symmetric.
    pub fn j_apply(&self) -> SymArray {
        let mut out = SymArray::zero(self.spec, self.arity);
        for (idx, v) in &self.comps {
            let mut target = self.spec.toggle_all(idx);
            let sign = self.spec.j_sign(&target);
            target.sort_unstable();
            let mut c = v.conj();
            if sign < 0 {
                c = -&c;
            }
            out.set(&target, c);
        }
        out
    }

    pub fn conj(&self) -> SymArray {
        SymArray {
            spec: self.spec,
            arity: self.arity,
            comps: self
                .comps
                .iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| (k.clone(), v.conj()))
                .collect(),
        }
    }

    pub fn is_j_real(&self) -> bool {
        self.j_apply() == *self
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    fn canonical_keys(spec: IndexSpec, arity: u8) -> Vec<Vec<u16>> {
        let mut keys = vec![];
        let mut cur = vec![1u16; arity as usize];
        loop {
            keys.push(cur.clone());
            // next weakly increasing tuple
            let mut i = arity as usize;
            loop {
                if i == 0 {
                    return keys;
                }
                i -= 1;
                if cur[i] < spec.dim() {
                    cur[i] += 1;
                    for j in i + 1..arity as usize {
                        cur[j] = cur[i];
                    }
                    break;
                }
            }
        }
    }

    /// Random free complex symmetric array with small rational entries.
    pub fn random(spec: IndexSpec, arity: u8, rng: &mut impl Rng) -> SymArray {
        let mut a = SymArray::zero(spec, arity);
        for key in Self::canonical_keys(spec, arity) {
            a.set(&key, random_gaussian(rng));
        }
        a
    }

    /// Random symmetric array satisfying 𝔧T = T, built by filling one
    /// representative per toggle orbit and deriving the partner.
    pub fn random_j_real(spec: IndexSpec, arity: u8, rng: &mut impl Rng) -> SymArray {
        assert!(arity.is_multiple_of(2), "j-reality needs even arity");
        let mut a = SymArray::zero(spec, arity);
        for key in Self::canonical_keys(spec, arity) {
            let mut partner = spec.toggle_all(&key);
            partner.sort_unstable();
            let sign_partner = spec.j_sign(&partner);
            match key.cmp(&partner) {
                std::cmp::Ordering::Less => {
                    // free complex component; partner is derived
                    let v = random_gaussian(rng);
                    // T_partner = (−1)^{#primed(partner)} conj(T_key)
                    let mut w = v.conj();
                    if sign_partner < 0 {
                        w = -&w;
                    }
                    a.set(&key, v);
                    a.set(&partner, w);
                }
                std::cmp::Ordering::Equal => {
                    // self-paired: real or imaginary depending on the sign
                    let r = random_gaussian_real(rng);
                    if spec.j_sign(&key) > 0 {
                        a.set(&key, r);
                    } else {
                        a.set(&key, r.mul_i_pow(1));
                    }
                }
                std::cmp::Ordering::Greater => {}
            }
        }
        debug_assert!(a.is_j_real());
        a
    }
}

pub fn random_gaussian(rng: &mut impl Rng) -> GaussianRational {
    GaussianRational::new(
        ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)),
        ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)),
    )
}

pub fn random_gaussian_real(rng: &mut impl Rng) -> GaussianRational {
    GaussianRational::new(
        ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)),
        ratio(0, 1),
    )
}

/// Outcome of the Lie-algebra membership test, carrying both equivalent
/// conditions so the caller can assert their agreement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpReport {
    pub in_spn: bool,
    pub antisymmetric_pairing: bool,
    pub j_fixed: bool,
    pub via_quadratic_tensor: bool,
}

/// Membership of `X` (given as components `X_{αβ̄}`, first slot unbarred)
/// in the symplectic Lie algebra, tested two ways:
///
/// * directly: `X_{αβ̄} = −X_{β̄α}` together with `𝔧X = X`;
/// * through the symmetric tensor `Y_{σβ} = −π_{στ} X^τ_β`, which must be
///   symmetric and 𝔧-fixed.
///
/// The two verdicts are required to agree; disagreement panics, since it
/// would mean the π table itself is broken.
pub fn sp_membership(x: &IndexedArray) -> SpReport {
    assert_eq!(x.barred, vec![false, true], "expected components X_{{αβ̄}}");
    let spec = x.spec;

    // X_{β̄α} is the conjugate of the stored component at (β, α).
    let mut antisym = true;
    'outer: for a in spec.range() {
        for b in spec.range() {
            if x.get(&[a, b]) != -&x.get(&[b, a]).conj() {
                antisym = false;
                break 'outer;
            }
        }
    }
    let j_fixed = x.j_apply() == *x;

    // Condition (3): Y_{σβ} = −Σ_τ π_{στ} X_{βτ̄}; Y symmetric and 𝔧Y = Y.
    let mut y = SymArray::zero(spec, 2);
    let mut symmetric = true;
    let mut raw = BTreeMap::new();
    for s in spec.range() {
        for b in spec.range() {
            let (t, c) = spec.pi_partner(s);
            let mut v = x.get(&[b, t]);
            if c > 0 {
                v = -&v;
            }
            raw.insert((s, b), v);
        }
    }
    for s in spec.range() {
        for b in spec.range() {
            if raw[&(s, b)] != raw[&(b, s)] {
                symmetric = false;
            }
        }
    }
    if symmetric {
        for s in spec.range() {
            for b in spec.range() {
                if s <= b {
                    y.set(&[s, b], raw[&(s, b)].clone());
                }
            }
        }
    }
    let via_quadratic = symmetric && y.is_j_real();

    let direct = antisym && j_fixed;
    assert_eq!(
        direct, via_quadratic,
        "membership conditions disagree; π bookkeeping is inconsistent"
    );
    SpReport {
        in_spn: direct,
        antisymmetric_pairing: antisym,
        j_fixed,
        via_quadratic_tensor: via_quadratic,
    }
}

/// Build `X_{αβ̄}` from a symmetric tensor via `X^α_β = π^{ασ} Y_{σβ}`,
/// i.e. `X_{βᾱ} = Σ_σ π_{ασ} Y_{σβ}`. For 𝔧-fixed symmetric `Y` the result
/// lies in the Lie algebra.
pub fn x_from_quadratic(y: &SymArray) -> IndexedArray {
    assert_eq!(y.arity, 2);
    let spec = y.spec;
    let mut x = IndexedArray::zero(spec, vec![false, true]);
    for a in spec.range() {
        for b in spec.range() {
            let (s, c) = spec.pi_partner(a);
            let mut v = y.get(&[s, b]);
            if c < 0 {
                v = -&v;
            }
            // stored slot order is (lower unbarred, upper barred) = (β, ᾱ)
            x.set(&[b, a], v);
        }
    }
    x
}

/// The group defining relations for a two-tensor `U^α_β` (stored as
/// `u[(α,σ)] = U^σ_α`): preservation of both g and π.
pub fn is_sp_group_member(u: &IndexedArray) -> bool {
    assert_eq!(u.barred, vec![false, false]);
    let spec = u.spec;
    for a in spec.range() {
        for b in spec.range() {
            let mut s1 = GaussianRational::zero();
            for s in spec.range() {
                s1 += &(&u.get(&[a, s]) * &u.get(&[b, s]).conj());
            }
            if s1 != GaussianRational::from_int(spec.g(a, b)) {
                return false;
            }
            let mut s2 = GaussianRational::zero();
            for s in spec.range() {
                let (t, c) = spec.pi_partner(s);
                let mut v = &u.get(&[a, s]) * &u.get(&[b, t]);
                if c < 0 {
                    v = -&v;
                }
                s2 += &v;
            }
            if s2 != GaussianRational::from_int(spec.pi(a, b)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn j_of_zero() {
        let spec = IndexSpec::new(2);
        let z = IndexedArray::zero(spec, vec![false, false]);
        assert!(z.j_apply().is_zero());
    }

    #[test]
    fn j_single_component_n1() {
        // n=1, lower unbarred slots, T_{12} = 1:
        // (𝔧T)_{αβ} = Σ π_{ασ}π_{βτ} conj(T_{στ}) has the single nonzero
        // component (𝔧T)_{21} = π_{21}π_{12}·1 = −1.
        let spec = IndexSpec::new(1);
        let mut t = IndexedArray::zero(spec, vec![false, false]);
        t.set(&[1, 2], GaussianRational::one());
        let jt = t.j_apply();
        assert_eq!(jt.get(&[2, 1]), GaussianRational::from_int(-1));
        assert_eq!(jt.comps.len(), 1);
    }

    #[test]
    fn j_involution_on_two_index_arrays() {
        for n in 1..=3u16 {
            let spec = IndexSpec::new(n);
            let mut rng = ChaCha8Rng::seed_from_u64(7 + n as u64);
            for _ in 0..20 {
                let mut t = IndexedArray::zero(spec, vec![false, false]);
                for a in spec.range() {
                    for b in spec.range() {
                        t.set(&[a, b], random_gaussian(&mut rng));
                    }
                }
                assert_eq!(t.j_apply().j_apply(), t);
            }
        }
    }

    #[test]
    fn j_real_random_arrays_are_fixed() {
        for n in 1..=3u16 {
            let spec = IndexSpec::new(n);
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            let a = SymArray::random_j_real(spec, 4, &mut rng);
            assert!(a.is_j_real());
            assert!(!a.is_zero());
        }
    }

    #[test]
    fn zero_is_in_spn() {
        let spec = IndexSpec::new(2);
        let x = IndexedArray::zero(spec, vec![false, true]);
        assert!(sp_membership(&x).in_spn);
    }

    #[test]
    fn constructed_from_quadratic_is_in_spn() {
        for n in 1..=3u16 {
            let spec = IndexSpec::new(n);
            let mut rng = ChaCha8Rng::seed_from_u64(100 + n as u64);
            for _ in 0..20 {
                let y = SymArray::random_j_real(spec, 2, &mut rng);
                let x = x_from_quadratic(&y);
                let rep = sp_membership(&x);
                assert!(rep.in_spn, "n={n}: {rep:?}");
            }
        }
    }

    #[test]
    fn hermitian_unit_not_in_spn() {
        // X_{1 1̄} = 1 violates the antisymmetric pairing.
        let spec = IndexSpec::new(1);
        let mut x = IndexedArray::zero(spec, vec![false, true]);
        x.set(&[1, 1], GaussianRational::one());
        let rep = sp_membership(&x);
        assert!(!rep.in_spn);
        assert!(!rep.antisymmetric_pairing);
    }

    #[test]
    fn identity_satisfies_group_relations() {
        for n in 1..=3u16 {
            let spec = IndexSpec::new(n);
            let mut u = IndexedArray::zero(spec, vec![false, false]);
            for a in spec.range() {
                u.set(&[a, a], GaussianRational::one());
            }
            assert!(is_sp_group_member(&u));
        }
    }
}

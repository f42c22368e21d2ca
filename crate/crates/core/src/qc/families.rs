//! Component families of the connection system and the canonicalization
//! that resolves their reality constraints into free real coordinates.
//!
//! A totally symmetric family is stored on weakly increasing index tuples.
//! For 𝔧-fixed families the constraint ties each tuple to its prime-toggled
//! partner: `T_I = (−1)^{#primed(I)} · conj(T_Ĩ)`. One tuple per orbit is
//! canonical; self-paired tuples are forced real or purely imaginary by the
//! sign. This yields exactly the advertised number of free real coordinates.

use crate::exterior::StarFam;
use crate::scalar::GaussianRational;
use crate::tensor::{Constraint, IndexSpec};

/// The seventeen second-order families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SecFam {
    A5,
    B4,
    C4,
    D3,
    E3,
    F3,
    G2,
    X2,
    Y2,
    Z2,
    N(u8), // N1..N5, arity 1
    U(u8), // U1..U3, scalars
    W(u8), // W1..W3, scalars
}

impl SecFam {
    pub fn arity(self) -> u8 {
        match self {
            SecFam::A5 => 5,
            SecFam::B4 | SecFam::C4 => 4,
            SecFam::D3 | SecFam::E3 | SecFam::F3 => 3,
            SecFam::G2 | SecFam::X2 | SecFam::Y2 | SecFam::Z2 => 2,
            SecFam::N(_) => 1,
            SecFam::U(_) | SecFam::W(_) => 0,
        }
    }

    pub fn tag(self) -> String {
        match self {
            SecFam::A5 => "A".into(),
            SecFam::B4 => "B".into(),
            SecFam::C4 => "C4".into(),
            SecFam::D3 => "D".into(),
            SecFam::E3 => "E".into(),
            SecFam::F3 => "F".into(),
            SecFam::G2 => "G".into(),
            SecFam::X2 => "X".into(),
            SecFam::Y2 => "Y".into(),
            SecFam::Z2 => "Z".into(),
            SecFam::N(k) => format!("N{k}"),
            SecFam::U(s) => format!("U{s}"),
            SecFam::W(s) => format!("W{s}"),
        }
    }

    pub fn all() -> Vec<SecFam> {
        let mut v = vec![
            SecFam::A5,
            SecFam::B4,
            SecFam::C4,
            SecFam::D3,
            SecFam::E3,
            SecFam::F3,
            SecFam::G2,
            SecFam::X2,
            SecFam::Y2,
            SecFam::Z2,
        ];
        for k in 1..=5 {
            v.push(SecFam::N(k));
        }
        for s in 1..=3 {
            v.push(SecFam::U(s));
        }
        for s in 1..=3 {
            v.push(SecFam::W(s));
        }
        v
    }
}

/// Reality constraint of each curvature (and starred) family.
pub fn star_constraint(f: StarFam) -> Constraint {
    match f {
        StarFam::S | StarFam::L => Constraint::JReal,
        StarFam::R => Constraint::Real,
        _ => Constraint::None,
    }
}

/// How a canonical component decomposes into real coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Shape {
    /// Free complex: two real coordinates.
    Complex,
    /// Self-paired with positive sign: one real coordinate.
    Real,
    /// Self-paired with negative sign: `value = i · coordinate`.
    Imag,
}

/// Resolution of an arbitrary component reference onto a canonical one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canon {
    pub key: Vec<u16>,
    pub shape: Shape,
    /// Multiply the (possibly conjugated) canonical value by this.
    pub sign: i8,
    /// Take the conjugate of the canonical value first.
    pub conj: bool,
}

impl Canon {
    /// Apply the recorded transform to the canonical value.
    pub fn apply(&self, canonical_value: &GaussianRational) -> GaussianRational {
        let mut v = if self.conj {
            canonical_value.conj()
        } else {
            canonical_value.clone()
        };
        if self.sign < 0 {
            v = -&v;
        }
        v
    }
}

/// Canonicalize a component reference `T_{idx}` (conjugated when `barred`).
pub fn canonicalize(spec: IndexSpec, constraint: Constraint, idx: &[u16], barred: bool) -> Canon {
    let mut key = idx.to_vec();
    key.sort_unstable();
    match constraint {
        Constraint::None => Canon {
            key,
            shape: Shape::Complex,
            sign: 1,
            conj: barred,
        },
        Constraint::Real => {
            debug_assert!(idx.is_empty(), "only scalar real components are used");
            Canon {
                key,
                shape: Shape::Real,
                sign: 1,
                conj: false,
            }
        }
        Constraint::JReal => {
            let mut partner = spec.toggle_all(&key);
            partner.sort_unstable();
            match key.cmp(&partner) {
                std::cmp::Ordering::Less => Canon {
                    key,
                    shape: Shape::Complex,
                    sign: 1,
                    conj: barred,
                },
                std::cmp::Ordering::Greater => {
                    // T_key = (−1)^{#primed(key)} conj(T_partner)
                    let sign = if spec.j_sign(&key) < 0 { -1 } else { 1 };
                    Canon {
                        key: partner,
                        shape: Shape::Complex,
                        sign,
                        conj: !barred,
                    }
                }
                std::cmp::Ordering::Equal => {
                    if spec.j_sign(&key) > 0 {
                        // real component; conjugation is the identity
                        Canon {
                            key,
                            shape: Shape::Real,
                            sign: 1,
                            conj: false,
                        }
                    } else {
                        // purely imaginary: value = i·r, conj flips the sign
                        Canon {
                            key,
                            shape: Shape::Imag,
                            sign: if barred { -1 } else { 1 },
                            conj: false,
                        }
                    }
                }
            }
        }
    }
}

/// Enumerate the canonical keys (with shapes) of a family.
pub fn canonical_keys(
    spec: IndexSpec,
    constraint: Constraint,
    arity: u8,
) -> Vec<(Vec<u16>, Shape)> {
    let mut out = vec![];
    let mut cur = vec![1u16; arity as usize];
    loop {
        let canon = canonicalize(spec, constraint, &cur, false);
        if canon.key == cur {
            out.push((cur.clone(), canon.shape));
        }
        let mut i = arity as usize;
        loop {
            if i == 0 {
                return out;
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

/// Real-coordinate count of a family under canonicalization.
pub fn real_coordinate_count(spec: IndexSpec, constraint: Constraint, arity: u8) -> u64 {
    canonical_keys(spec, constraint, arity)
        .iter()
        .map(|(_, s)| match s {
            Shape::Complex => 2,
            Shape::Real | Shape::Imag => 1,
        })
        .sum()
}

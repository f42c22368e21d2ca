//! Generator identities and the per-system catalog.
//!
//! A catalog fixes the total order of the formal one-form generators once
//! and for all: the generator id is the position of insertion, and every
//! wedge tuple is kept strictly increasing in this order. Reports and
//! golden files therefore come out deterministic.

use std::collections::HashMap;

pub type GenId = u32;

/// The one-form families produced by exterior differentiation of the
/// connection; each is resolved into real coordinate generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum StarFam {
    S,
    V,
    L,
    M,
    C,
    H,
    P,
    Q,
    R,
}

impl StarFam {
    pub const ALL: [StarFam; 9] = [
        StarFam::S,
        StarFam::V,
        StarFam::L,
        StarFam::M,
        StarFam::C,
        StarFam::H,
        StarFam::P,
        StarFam::Q,
        StarFam::R,
    ];

    pub fn arity(self) -> u8 {
        match self {
            StarFam::S => 4,
            StarFam::V => 3,
            StarFam::L | StarFam::M => 2,
            StarFam::C | StarFam::H => 1,
            StarFam::P | StarFam::Q | StarFam::R => 0,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            StarFam::S => "S",
            StarFam::V => "V",
            StarFam::L => "L",
            StarFam::M => "M",
            StarFam::C => "C",
            StarFam::H => "H",
            StarFam::P => "P",
            StarFam::Q => "Q",
            StarFam::R => "R",
        }
    }
}

/// Identity of one formal generator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GenKey {
    /// η_s, s ∈ 1..=3
    Eta(u8),
    /// Re θ^a
    Xi(u16),
    /// Im θ^a
    Zeta(u16),
    /// φ_0
    Phi0,
    /// φ_s, s ∈ 1..=3
    PhiS(u8),
    /// Re Γ_{ab}, canonical a ≤ b
    GammaRe(u16, u16),
    /// Im Γ_{ab}
    GammaIm(u16, u16),
    /// Re φ^a
    PhiUpRe(u16),
    /// Im φ^a
    PhiUpIm(u16),
    /// ψ_s
    Psi(u8),
    /// Real part of a starred curvature one-form component
    StarRe(StarFam, Vec<u16>),
    /// Imaginary part
    StarIm(StarFam, Vec<u16>),
    /// ε^a, the adapted semibasic basis
    Eps(u16),
    /// Formal differential of a function symbol
    Diff(u32),
    /// Free generator for tests and generic algebra use
    Named(u32),
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    keys: Vec<GenKey>,
    names: Vec<String>,
    lookup: HashMap<GenKey, GenId>,
}

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, key: GenKey, name: impl Into<String>) -> GenId {
        assert!(
            !self.lookup.contains_key(&key),
            "duplicate generator {key:?}"
        );
        let id = self.keys.len() as GenId;
        self.lookup.insert(key.clone(), id);
        self.keys.push(key);
        self.names.push(name.into());
        id
    }

    /// Convenience for tests: a fresh named generator.
    pub fn add_named(&mut self, name: &str) -> GenId {
        let k = self
            .keys
            .iter()
            .filter(|k| matches!(k, GenKey::Named(_)))
            .count() as u32;
        self.add(GenKey::Named(k), name)
    }

    pub fn id(&self, key: &GenKey) -> Option<GenId> {
        self.lookup.get(key).copied()
    }

    pub fn expect(&self, key: &GenKey) -> GenId {
        self.id(key)
            .unwrap_or_else(|| panic!("generator not in catalog: {key:?}"))
    }

    pub fn key(&self, id: GenId) -> &GenKey {
        &self.keys[id as usize]
    }

    pub fn name(&self, id: GenId) -> &str {
        &self.names[id as usize]
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = GenId> {
        0..self.keys.len() as GenId
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insertion_order_is_total_order() {
        let mut c = Catalog::new();
        let a = c.add(GenKey::Eta(1), "η1");
        let b = c.add(GenKey::Xi(1), "ξ1");
        assert!(a < b);
        assert_eq!(c.id(&GenKey::Eta(1)), Some(a));
        assert_eq!(c.name(b), "ξ1");
    }

    #[test]
    #[should_panic(expected = "duplicate")]
    fn duplicate_rejected() {
        let mut c = Catalog::new();
        c.add(GenKey::Phi0, "φ0");
        c.add(GenKey::Phi0, "again");
    }
}

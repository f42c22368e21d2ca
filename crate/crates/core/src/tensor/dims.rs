//! Real-dimension counting for constrained symmetric arrays and the
//! family tables whose sums give the system's coordinate counts.

/// Reality constraint carried by a component family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Constraint {
    /// Free complex array.
    None,
    /// Fixed by the antilinear operator: 𝔧T = T.
    JReal,
    /// Componentwise real: T = conj(T).
    Real,
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Real dimension of the space of totally symmetric arity-`k` arrays over
/// index values `1..=2n` under the given constraint. A free complex array
/// contributes `2·C(2n+k−1, k)`; the 𝔧-reality and reality constraints
/// each halve that.
pub fn constrained_dimension(n: u16, arity: u8, constraint: Constraint) -> u64 {
    let complex_components = binomial(2 * n as u64 + arity as u64 - 1, arity as u64);
    match constraint {
        Constraint::None => 2 * complex_components,
        Constraint::JReal | Constraint::Real => complex_components,
    }
}

/// The nine curvature families `(tag, arity, constraint)`.
pub const CURVATURE_FAMILIES: [(&str, u8, Constraint); 9] = [
    ("S", 4, Constraint::JReal),
    ("V", 3, Constraint::None),
    ("L", 2, Constraint::JReal),
    ("M", 2, Constraint::None),
    ("C", 1, Constraint::None),
    ("H", 1, Constraint::None),
    ("P", 0, Constraint::None),
    ("Q", 0, Constraint::None),
    ("R", 0, Constraint::Real),
];

/// The seventeen second-order families `(tag, arity, constraint)`; the
/// three-component scalar families count each component separately.
pub fn second_order_families() -> Vec<(String, u8, Constraint)> {
    let mut v: Vec<(String, u8, Constraint)> = vec![
        ("A".into(), 5, Constraint::None),
        ("B".into(), 4, Constraint::None),
        ("C4".into(), 4, Constraint::None),
        ("D".into(), 3, Constraint::None),
        ("E".into(), 3, Constraint::None),
        ("F".into(), 3, Constraint::None),
        ("G".into(), 2, Constraint::None),
        ("X".into(), 2, Constraint::None),
        ("Y".into(), 2, Constraint::None),
        ("Z".into(), 2, Constraint::None),
    ];
    for k in 1..=5 {
        v.push((format!("N{k}"), 1, Constraint::None));
    }
    v.push(("U".into(), 0, Constraint::None)); // U_1..U_3
    v.push(("W".into(), 0, Constraint::None)); // W_1..W_3
    v
}

/// Sum of the curvature-family dimensions; equals the closed form for d₂.
pub fn curvature_dimension_sum(n: u16) -> u64 {
    CURVATURE_FAMILIES
        .iter()
        .map(|&(_, k, c)| constrained_dimension(n, k, c))
        .sum()
}

/// Sum of the second-order family dimensions; equals the closed form for D.
pub fn second_order_dimension_sum(n: u16) -> u64 {
    second_order_families()
        .iter()
        .map(|(tag, k, c)| {
            let d = constrained_dimension(n, *k, *c);
            // U and W are triples of complex scalars.
            if tag == "U" || tag == "W" {
                3 * d
            } else {
                d
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::closed_form::{big_d, d2};

    #[test]
    fn s_family_n1() {
        // arity 4, j-real, n=1: C(5,4) = 5
        assert_eq!(constrained_dimension(1, 4, Constraint::JReal), 5);
    }

    #[test]
    fn curvature_sum_matches_d2() {
        assert_eq!(curvature_dimension_sum(1), 35);
        assert_eq!(curvature_dimension_sum(2), 126);
        assert_eq!(curvature_dimension_sum(3), 330);
        for n in 1..=12 {
            assert_eq!(curvature_dimension_sum(n), d2(n));
        }
    }

    #[test]
    fn second_order_sum_matches_big_d() {
        assert_eq!(second_order_dimension_sum(1), 112);
        for n in 1..=12 {
            assert_eq!(second_order_dimension_sum(n), big_d(n));
        }
    }
}

//! The check implementations behind the subcommands.

use std::time::Instant;

use rayon::prelude::*;

use qc_cartan_core::circulant::{det3_check, nondegeneracy, recurrence, telescoping_check};
use qc_cartan_core::involution::{
    big_d, cartan_test, characters, closed_form_counts, d1, d2, solution_space_nullity,
};
use qc_cartan_core::qc::{
    bianchi_forms, build_system, build_system_with, closure_residuals, instantiate,
    integral_element_symbolic, integral_element_zero, seeded_second_order_values, shift_invariance,
    shift_invariance_zero, verify_d_squared, Corruption,
};
use qc_cartan_core::tensor::dims::{curvature_dimension_sum, second_order_dimension_sum};

use crate::report::{w, CheckRecord, Status};

fn record(
    id: String,
    rule: &str,
    ok: bool,
    witness: crate::report::WitnessBuilder,
    t0: Instant,
) -> CheckRecord {
    CheckRecord {
        id,
        rule: rule.into(),
        status: if ok { Status::Pass } else { Status::Fail },
        witness: witness.done(),
        timing_ms: Some(t0.elapsed().as_millis() as u64),
    }
}

pub fn analyze_checks_seeded(n: u16, seed: u64) -> Vec<CheckRecord> {
    // the analysis itself is deterministic; the seed only echoes through
    // the config for report reproducibility
    let _ = seed;
    analyze_checks(n)
}

pub fn analyze_checks(n: u16) -> Vec<CheckRecord> {
    let mut checks = vec![];
    let t0 = Instant::now();
    let sys = build_system(n);
    let counts_ok = sys.coframe_generators().len() as u64 == d1(n)
        && sys.star_coordinates().len() as u64 == d2(n);
    checks.push(record(
        format!("analyze:n={n}:counts"),
        "coframe and coordinate counts match the closed forms",
        counts_ok,
        w().num("d1", d1(n)).num("d2", d2(n)).num("D", big_d(n)),
        t0,
    ));

    let t1 = Instant::now();
    let rep = characters(&sys);
    let chars_ok = rep.matches_closed_forms();
    checks.push(record(
        format!("analyze:n={n}:characters"),
        "rank-computed character sequence equals the closed forms",
        chars_ok,
        w().nums("v", &rep.v)
            .nums("dim_F", &rep.dim_f)
            .num("dim_F_n", rep.dim_f_at_n())
            .num("sum_v", rep.v.iter().sum())
            .num("cartan_sum", rep.cartan_sum)
            .num("full_rank_all_pairs", rep.full_rank_all_pairs),
        t1,
    ));

    let t2 = Instant::now();
    let nullity = solution_space_nullity(&sys);
    let param_count = second_order_dimension_sum(n);
    let nullity_ok = nullity == big_d(n) && param_count == big_d(n);
    checks.push(record(
        format!("analyze:n={n}:nullity"),
        "solution-space dimension: nullity = parameter count = D",
        nullity_ok,
        w().num("nullity", nullity)
            .num("parameter_count", param_count)
            .num("D_closed", big_d(n)),
        t2,
    ));

    let t3 = Instant::now();
    let rep = rep.with_nullity(nullity);
    let verdict = cartan_test(&rep);
    checks.push(record(
        format!("analyze:n={n}:involution"),
        "Cartan test: Σ λ·v_λ = D, both D computations agreeing",
        verdict.involutive,
        w().num("cartan_sum", verdict.cartan_sum)
            .num("D_closed", verdict.d_closed)
            .num("D_nullity", verdict.d_nullity.unwrap_or(0))
            .boolean("involutive", verdict.involutive),
        t3,
    ));
    checks
}

pub fn counts_checks(n: u16) -> Vec<CheckRecord> {
    let t0 = Instant::now();
    let c = closed_form_counts(n);
    // the filtration level-n dimension is the partial character sum v₂+…+v_n
    let partial: u64 = c.v[1..n as usize].iter().sum();
    let ok = c.d2 == curvature_dimension_sum(n)
        && c.big_d == second_order_dimension_sum(n)
        && c.v.iter().sum::<u64>() == c.d2
        && qc_cartan_core::involution::cartan_sum(&c.v) == c.big_d
        && partial == c.dim_f_n;
    vec![record(
        format!("counts:n={n}"),
        "closed-form counts and their binomial-sum identities",
        ok,
        w().num("d1", c.d1)
            .num("d2", c.d2)
            .num("D", c.big_d)
            .num("dim_F_n", c.dim_f_n)
            .nums("v", &c.v),
        t0,
    )]
}

pub fn circulant_checks(range: &[u16]) -> Vec<CheckRecord> {
    let mut checks: Vec<CheckRecord> = range
        .par_iter()
        .map(|&n| {
            let t0 = Instant::now();
            let n = n as usize;
            let rep = nondegeneracy(n);
            let tel = telescoping_check(n, n.max(1));
            let mut ok = rep.full_rank && rep.oracles_agree() && tel.ok();
            let mut witness = w()
                .num("rank", rep.rank as u64)
                .num("gcd_degree", rep.gcd_degree as u64)
                .str("resultant", rep.resultant.to_string())
                .str(
                    "reduction_product_abs",
                    rep.reduction_product_abs.to_string(),
                )
                .boolean("telescoping", tel.ok())
                .boolean("bracket_collapse", tel.collapsed);
            if n >= 3 {
                let d3 = det3_check(n);
                ok &= d3.ok;
                witness = witness
                    .str("det3", d3.det.to_string())
                    .str("root_product", d3.root_product.to_string());
            }
            record(
                format!("circulant:n={n:04}"),
                "circulant nondegeneracy by three independent oracles",
                ok,
                witness,
                t0,
            )
        })
        .collect();
    let t0 = Instant::now();
    let a: Vec<i64> = (1..=6)
        .map(|k| i64::try_from(recurrence(k)).expect("small"))
        .collect();
    checks.push(record(
        "circulant:recurrence".into(),
        "initial recurrence values",
        a == vec![1, 0, -1, -1, 1, 2],
        w().str("a1..a6", format!("{a:?}")),
        t0,
    ));
    checks
}

pub fn dsquared_checks(n: u16) -> Vec<CheckRecord> {
    let mut checks = vec![];
    let t0 = Instant::now();
    let sys = build_system(n);
    let rep = verify_d_squared(&sys);
    checks.push(record(
        format!("dsquared:n={n}"),
        "d² of every structure equation vanishes / reproduces the three-forms",
        rep.all_zero(),
        w().num("residual_terms", rep.residual_term_count() as u64)
            .str("nonzero", format!("{:?}", rep.nonzero_names())),
        t0,
    ));
    let t1 = Instant::now();
    let bad = build_system_with(n, Corruption::FlipPhi0ThetaTerm);
    let rep_bad = verify_d_squared(&bad);
    let control_ok = !rep_bad.all_zero() && rep_bad.nonzero_names().iter().any(|s| s == "d²φ0");
    checks.push(record(
        format!("dsquared:n={n}:negative-control"),
        "a deliberately corrupted equation must leave a residual",
        control_ok,
        w().num("residual_terms", rep_bad.residual_term_count() as u64),
        t1,
    ));
    checks
}

pub fn bianchi_checks(n: u16, seed: u64) -> Vec<CheckRecord> {
    let mut checks = vec![];
    let sys = build_system(n);
    let bset = bianchi_forms(&sys);

    // 𝔧-symmetry of the two-index forms
    {
        use qc_cartan_core::qc::bianchi::delta_gamma;
        let t = Instant::now();
        let star: qc_cartan_core::qc::bianchi::StarResolver = &|f, i, b| sys.star(f, i, b);
        let mut ok = true;
        for a in 1..=n {
            for b in a..=n {
                ok &= delta_gamma(&sys, star, a + n, b + n)
                    == delta_gamma(&sys, star, a, b).conj(&sys.symbols);
            }
        }
        for a in 1..=n {
            for b in 1..=n {
                ok &= delta_gamma(&sys, star, a, b + n)
                    == delta_gamma(&sys, star, a + n, b).conj(&sys.symbols).neg();
            }
        }
        checks.push(record(
            format!("bianchi:n={n}:j-symmetry"),
            "the two-index three-forms satisfy the conjugation pairing",
            ok,
            w(),
            t,
        ));
    }

    let t0 = Instant::now();
    let sym = integral_element_symbolic(&sys);
    let residuals = closure_residuals(&bset, &sym);
    let sym_ok = residuals.iter().all(|(_, f)| f.is_zero());
    checks.push(record(
        format!("bianchi:n={n}:closure-symbolic"),
        "covariant-derivative expansion annihilates every three-form identically",
        sym_ok,
        w().num(
            "residual_terms",
            residuals.iter().map(|(_, f)| f.num_terms() as u64).sum(),
        ),
        t0,
    ));

    let t1 = Instant::now();
    let zero_ok = qc_cartan_core::qc::closure_holds(&bset, &integral_element_zero(&sys));
    checks.push(record(
        format!("bianchi:n={n}:closure-zero"),
        "the trivial integral element annihilates every three-form",
        zero_ok,
        w(),
        t1,
    ));

    let t2 = Instant::now();
    let vals = seeded_second_order_values(&sys, seed);
    let num_ok = qc_cartan_core::qc::closure_holds(&bset, &instantiate(&sys, &vals));
    checks.push(record(
        format!("bianchi:n={n}:closure-random"),
        "a seeded random instance of the expansion annihilates the three-forms",
        num_ok,
        w().num("seed", seed),
        t2,
    ));
    checks
}

pub fn shift_checks(n: u16, seed: u64) -> Vec<CheckRecord> {
    let sys = build_system(n);
    let t0 = Instant::now();
    let z = shift_invariance_zero(&sys);
    let mut checks = vec![record(
        format!("shift:n={n}:zero"),
        "zero constants give the identical three-form set",
        z.identical,
        w(),
        t0,
    )];
    let t1 = Instant::now();
    let rep = shift_invariance(&sys, seed);
    checks.push(record(
        format!("shift:n={n}:seed={seed}"),
        "hatted three-form set equals the original, term for term",
        rep.identical,
        w().num("seed", seed)
            .str("mismatched", format!("{:?}", rep.mismatched)),
        t1,
    ));
    checks
}

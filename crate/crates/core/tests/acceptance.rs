//! Acceptance suite. One test per criterion; each prints a single
//! pass/fail line (visible under `--nocapture`) before asserting.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use young_schur::graph::{
    brute_force_d_path_count, d_path_count, dim_f, dim_g, intermediates, Diagram,
};
use young_schur::kerov::{
    doubling_identity_holds, kerov_coords, shifted_kerov_coords, shifted_up_function, up_function,
};
use young_schur::measures::{
    alpha_measure_closed, build_measure, coherence_violations, down_equality_sides,
    p_up_alpha, p_up_plancherel, p_up_plancherel_shifted, p_up_z, proportionality_check,
    up_equality_sides, z_measure_closed, AlphaParam, CoherentFamily, DistributionTable,
    Proportionality, SchurFamily, YoungFamily, ZParams,
};
use young_schur::rational::{factorial, parse_rational, rat, Rational};
use young_schur::sample::{tv_distance, EmpiricalTable, ForcedSampler, GrowthTrace, Sampler};
use young_schur::{Partition, StrictPartition};

fn announce(id: u32, name: &str, failures: Vec<String>) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id} ({name}): {status}");
    assert!(
        failures.is_empty(),
        "criterion {id} ({name}) failed:\n{}",
        failures.join("\n")
    );
}

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn alphas() -> [AlphaParam; 3] {
    [
        AlphaParam::new(q("3/16")).unwrap(),
        AlphaParam::new(q("1/4")).unwrap(),
        AlphaParam::new(q("5")).unwrap(),
    ]
}

fn zparam_set() -> [ZParams; 3] {
    [
        ZParams::new(q("-1"), q("3/16")).unwrap(),
        ZParams::new(q("0"), q("1")).unwrap(),
        ZParams::new(q("-1"), q("5")).unwrap(),
    ]
}

/// Path counts by the recurrence `dim(v) = sum of dim over down covers`,
/// independent of the closed formulas.
fn recurrence_dims<D: Diagram>(n_max: u64) -> Vec<HashMap<D, BigUint>> {
    let mut levels = vec![HashMap::from([(D::empty(), BigUint::one())])];
    for n in 1..=n_max {
        let prev = &levels[n as usize - 1];
        let mut cur = HashMap::new();
        for v in D::layer(n) {
            let total = v
                .down_covers()
                .iter()
                .map(|d| prev[d].clone())
                .sum::<BigUint>();
            cur.insert(v, total);
        }
        levels.push(cur);
    }
    levels
}

#[test]
fn criterion_1_dimension_oracles() {
    let mut failures = Vec::new();
    let young = recurrence_dims::<Partition>(15);
    for (n, level) in young.iter().enumerate() {
        let mut square_sum = BigUint::ZERO;
        for (rho, rec) in level {
            let closed = dim_f(rho);
            if &closed != rec {
                failures.push(format!("f({rho}): closed {closed} vs recurrence {rec}"));
            }
            square_sum += rec * rec;
        }
        if square_sum != factorial(n as u64) {
            failures.push(format!("level {n}: sum of f^2 is {square_sum}, not {n}!"));
        }
    }
    let schur = recurrence_dims::<StrictPartition>(15);
    for (n, level) in schur.iter().enumerate() {
        let mut weighted_sum = BigUint::ZERO;
        for (lam, rec) in level {
            let closed = dim_g(lam);
            if &closed != rec {
                failures.push(format!("g({lam}): closed {closed} vs recurrence {rec}"));
            }
            weighted_sum += (rec * rec) << (n as u64 - lam.len() as u64);
        }
        if weighted_sum != factorial(n as u64) {
            failures.push(format!(
                "level {n}: sum of 2^(n-rows) g^2 is {weighted_sum}, not {n}!"
            ));
        }
    }
    announce(1, "dimension oracles", failures);
}

#[test]
fn criterion_2_d_path_counts_and_intermediates() {
    let mut failures = Vec::new();
    for n in 0..=8 {
        for lam in StrictPartition::layer(n) {
            let brute = brute_force_d_path_count(&lam).unwrap();
            let closed = d_path_count(&lam);
            if brute != closed {
                failures.push(format!("{lam}: walker {brute} vs closed {closed}"));
            }
        }
    }
    for n in 1..=12 {
        for lam in StrictPartition::layer(n) {
            for mu in lam.down_covers() {
                let count = intermediates(&mu, &lam).unwrap().len();
                let expected = if lam.len() == mu.len() { 2 } else { 1 };
                if count != expected {
                    failures.push(format!(
                        "{mu} -> {lam}: {count} intermediates, expected {expected}"
                    ));
                }
            }
        }
    }
    announce(2, "D-path counts and intermediates", failures);
}

#[test]
fn criterion_3_down_kernel_transfer() {
    let mut failures = Vec::new();
    for n in 1..=12 {
        for lam in StrictPartition::layer(n) {
            for mu in lam.down_covers() {
                let (lhs, rhs) = down_equality_sides(&lam, &mu).unwrap();
                if lhs != rhs {
                    failures.push(format!("{lam} -> {mu}: strict {lhs} vs doubled {rhs}"));
                }
            }
        }
    }
    announce(3, "down kernel transfer", failures);
}

#[test]
fn criterion_4_up_functions_and_residues() {
    let mut failures = Vec::new();

    // Worked coordinates.
    let p441: Partition = "4,4,1".parse().unwrap();
    let c = kerov_coords(&p441);
    if c.addable() != [-3, -1, 4] || c.removable() != [-2, 2] {
        failures.push(format!("coordinates of 4,4,1: {c:?}"));
    }
    let s532: StrictPartition = "5,3,2".parse().unwrap();
    let c = shifted_kerov_coords(&s532);
    if c.addable_nonzero() != [3, 5] || c.removable() != [1, 4] {
        failures.push(format!("shifted coordinates of 5,3,2: {c:?}"));
    }
    let rendered = up_function(&p441).render("u");
    if rendered != "(u^2 - 4) / (u^3 - 13*u - 12)" {
        failures.push(format!("up function of 4,4,1 rendered as {rendered}"));
    }
    let rendered = shifted_up_function(&s532).render("v");
    if rendered != "(v^2 - 22*v + 40) / (v^3 - 42*v^2 + 360*v)" {
        failures.push(format!("shifted up function of 5,3,2 rendered as {rendered}"));
    }

    // Polynomial identity under doubling.
    for n in 0..=10 {
        for lam in StrictPartition::layer(n) {
            if !doubling_identity_holds(&lam) {
                failures.push(format!("doubling identity fails for {lam}"));
            }
        }
    }

    // Residues reproduce the Plancherel kernels exactly.
    for n in 0..=12u64 {
        for rho in Partition::layer(n) {
            let residues = up_function(&rho).partial_fractions().unwrap();
            let cells = rho.addable_cells();
            if residues.len() != cells.len() {
                failures.push(format!("{rho}: {} poles for {} boxes", residues.len(), cells.len()));
                continue;
            }
            for (pole, residue) in residues {
                let Some(cell) = cells.iter().find(|c| rat(c.content()) == pole) else {
                    failures.push(format!("{rho}: pole {pole} is no addable content"));
                    continue;
                };
                let expected = p_up_plancherel(&rho, &rho.with_cell(*cell)).unwrap();
                if residue != expected {
                    failures.push(format!("{rho}, pole {pole}: residue {residue} vs {expected}"));
                }
            }
        }
        for lam in StrictPartition::layer(n) {
            let residues = shifted_up_function(&lam).partial_fractions().unwrap();
            let cells = lam.shifted_addable_cells();
            if residues.len() != cells.len() {
                failures.push(format!(
                    "{lam}: {} poles for {} boxes",
                    residues.len(),
                    cells.len()
                ));
                continue;
            }
            for (pole, residue) in residues {
                let Some(cell) = cells
                    .iter()
                    .find(|c| rat(c.content()) * rat(c.content() + 1) == pole)
                else {
                    failures.push(format!("{lam}: pole {pole} matches no addable box"));
                    continue;
                };
                let expected = p_up_plancherel_shifted(&lam, &lam.with_cell(*cell)).unwrap();
                if residue != expected {
                    failures.push(format!("{lam}, pole {pole}: residue {residue} vs {expected}"));
                }
            }
        }
    }
    announce(4, "interlacing functions and residues", failures);
}

#[test]
fn criterion_5_up_kernel_transfer() {
    let mut failures = Vec::new();
    for a in alphas() {
        for n in 1..=10 {
            for lam in StrictPartition::layer(n) {
                for mu in lam.down_covers() {
                    let (lhs, rhs) = up_equality_sides(&mu, &lam, &a).unwrap();
                    if lhs != rhs {
                        failures.push(format!(
                            "alpha {}: {mu} -> {lam}: {lhs} vs {rhs}",
                            a.alpha()
                        ));
                    }
                }
            }
        }
    }
    // Spot value: both sides are exactly 1/67.
    let mu: StrictPartition = "2".parse().unwrap();
    let lam: StrictPartition = "2,1".parse().unwrap();
    let a = AlphaParam::new(q("3/16")).unwrap();
    let (lhs, rhs) = up_equality_sides(&mu, &lam, &a).unwrap();
    if lhs != q("1/67") || rhs != q("1/67") {
        failures.push(format!("spot value: {lhs} and {rhs}, expected 1/67"));
    }
    announce(5, "up kernel transfer", failures);
}

#[test]
fn criterion_6_coherence_and_closed_forms() {
    let mut failures = Vec::new();
    let mut families_young = vec![YoungFamily::Plancherel];
    families_young.extend(zparam_set().into_iter().map(YoungFamily::Z));
    let mut families_schur = vec![SchurFamily::Plancherel];
    families_schur.extend(alphas().into_iter().map(SchurFamily::Alpha));

    for fam in &families_young {
        for n in 1..=12 {
            for (d, got, expected) in coherence_violations(fam, n) {
                failures.push(format!(
                    "{} level {n}, {d}: pushed down {got}, expected {expected}",
                    fam.label()
                ));
            }
        }
    }
    for fam in &families_schur {
        for n in 1..=12 {
            for (d, got, expected) in coherence_violations(fam, n) {
                failures.push(format!(
                    "{} level {n}, {d}: pushed down {got}, expected {expected}",
                    fam.label()
                ));
            }
        }
    }

    // Closed forms match the kernel-iterated tables entrywise.
    for n in 0..=12u64 {
        let table = build_measure(&YoungFamily::Plancherel, n);
        let nf = Rational::from_integer(factorial(n).into());
        for (rho, prob) in table.iter() {
            let f = Rational::from_integer(dim_f(rho).into());
            if prob != &(&f * &f / &nf) {
                failures.push(format!("plancherel({rho}) differs from f^2/n!"));
            }
        }
        let table = build_measure(&SchurFamily::Plancherel, n);
        for (lam, prob) in table.iter() {
            let g = Rational::from_integer(dim_g(lam).into());
            let two = rat(2).pow((n - lam.len() as u64) as i32);
            if prob != &(two * &g * &g / &nf) {
                failures.push(format!("shifted plancherel({lam}) differs from 2^(n-rows) g^2/n!"));
            }
        }
        for zp in zparam_set() {
            let table = build_measure(&YoungFamily::Z(zp.clone()), n);
            for (rho, prob) in table.iter() {
                let closed = z_measure_closed(rho, &zp);
                if prob != &closed {
                    failures.push(format!(
                        "z(s={},p={}) at {rho}: kernel {prob} vs closed {closed}",
                        zp.sum(),
                        zp.product()
                    ));
                }
            }
        }
        // The specialization argument is rational at alpha = 3/16.
        let a = AlphaParam::new(q("3/16")).unwrap();
        let table = build_measure(&SchurFamily::Alpha(a.clone()), n);
        for (lam, prob) in table.iter() {
            let closed = alpha_measure_closed(lam, &a).unwrap();
            if prob != &closed {
                failures.push(format!(
                    "alpha(3/16) at {lam}: kernel {prob} vs closed {closed}"
                ));
            }
        }
    }
    announce(6, "coherence and closed forms", failures);
}

#[test]
fn criterion_7_square_root_proportionality() {
    let mut failures = Vec::new();
    for a in [AlphaParam::new(q("3/16")).unwrap(), AlphaParam::new(q("5")).unwrap()] {
        for n in 1..=8 {
            match proportionality_check(n, &a) {
                Proportionality::Constant(_) => {}
                Proportionality::Varies(witnesses) => failures.push(format!(
                    "alpha {}, level {n}: ratios vary: {witnesses:?}",
                    a.alpha()
                )),
            }
        }
    }
    announce(7, "square-root proportionality", failures);
}

const SAMPLE_LEVEL: u64 = 8;
const SAMPLE_COUNT: u64 = 100_000;
const SAMPLE_SEED: u64 = 20_240_817;
const TV_BOUND: (&str, &str) = ("1", "50"); // 0.02

#[test]
fn criterion_8_samplers_match_exact_tables() {
    let mut failures = Vec::new();
    let a = AlphaParam::new(q("3/16")).unwrap();
    let exact = build_measure(&SchurFamily::Alpha(a.clone()), SAMPLE_LEVEL);
    let bound = Rational::new(
        TV_BOUND.0.parse().unwrap(),
        TV_BOUND.1.parse().unwrap(),
    );

    let direct = Sampler::new(SchurFamily::Alpha(a.clone()));
    let mut direct_emp = EmpiricalTable::new(SAMPLE_LEVEL);
    for i in 0..SAMPLE_COUNT {
        let t = direct.trace(SAMPLE_LEVEL, SAMPLE_SEED, i);
        direct_emp.record(t.final_diagram().clone()).unwrap();
    }
    let tv_direct = tv_distance(&direct_emp, &exact).unwrap();
    if tv_direct >= bound {
        failures.push(format!("direct sampler tv {tv_direct} is not below 1/50"));
    }

    let forced = ForcedSampler::new(a);
    let mut forced_emp = EmpiricalTable::new(SAMPLE_LEVEL);
    for i in 0..SAMPLE_COUNT {
        let t = forced.trace(SAMPLE_LEVEL, SAMPLE_SEED, i).unwrap();
        for (step, d) in t.diagrams.iter().enumerate().step_by(2) {
            if !d.is_d_symmetric() {
                failures.push(format!("trace {i}, step {step}: {d} is not D-symmetric"));
            }
        }
        forced_emp.record(t.undoubled_final().unwrap()).unwrap();
    }
    let tv_forced = tv_distance(&forced_emp, &exact).unwrap();
    if tv_forced >= bound {
        failures.push(format!("forced sampler tv {tv_forced} is not below 1/50"));
    }

    // The two samplers also agree with each other.
    let mut mutual = Rational::new(0.into(), 1.into());
    for lam in StrictPartition::layer(SAMPLE_LEVEL) {
        let diff = direct_emp.frequency(&lam) - forced_emp.frequency(&lam);
        mutual += if diff < rat(0) { -diff } else { diff };
    }
    mutual /= rat(2);
    if mutual >= bound {
        failures.push(format!("samplers disagree: mutual tv {mutual}"));
    }

    println!(
        "  (direct tv = {}, forced tv = {}, mutual tv = {})",
        tv_direct, tv_forced, mutual
    );
    announce(8, "sampler agreement at 100000 samples", failures);
}

fn render_run(traces: &[GrowthTrace<StrictPartition>], table: &DistributionTable<StrictPartition>) -> Vec<u8> {
    let mut out = String::new();
    for t in traces {
        out.push_str(&format!("{} seed={} index={}:", t.family, t.seed, t.index));
        for d in &t.diagrams {
            out.push_str(&format!(" [{d}]"));
        }
        out.push('\n');
    }
    for (d, p) in table.iter() {
        out.push_str(&format!("{d}\t{p}\n"));
    }
    out.into_bytes()
}

#[test]
fn criterion_9_seeded_runs_are_byte_identical() {
    let mut failures = Vec::new();
    let a = AlphaParam::new(q("3/16")).unwrap();
    let exact = build_measure(&SchurFamily::Alpha(a.clone()), 6);

    let run = |seed: u64| -> Vec<u8> {
        let sampler = Sampler::new(SchurFamily::Alpha(a.clone()));
        render_run(&sampler.traces(6, seed, 500), &exact)
    };
    if run(7) != run(7) {
        failures.push("same seed produced different bytes".into());
    }
    if run(7) == run(8) {
        failures.push("different seeds produced identical bytes".into());
    }

    let forced_run = |seed: u64| -> Vec<u8> {
        let sampler = ForcedSampler::new(a.clone());
        let mut out = Vec::new();
        for t in sampler.traces(6, seed, 500).unwrap() {
            out.extend_from_slice(t.family.as_bytes());
            for d in &t.diagrams {
                out.extend_from_slice(format!(";{d}").as_bytes());
            }
            out.push(b'\n');
        }
        out
    };
    if forced_run(11) != forced_run(11) {
        failures.push("same seed produced different forced bytes".into());
    }
    announce(9, "seeded determinism", failures);
}

// Cross-checks frozen while writing the suite: the two spot probabilities
// behind the sampler criterion.
#[test]
fn frozen_spot_values() {
    let a = AlphaParam::new(q("3/16")).unwrap();
    let m3 = build_measure(&SchurFamily::Alpha(a.clone()), 3);
    assert_eq!(m3.get(&"3".parse().unwrap()), Some(&q("66/67")));
    assert_eq!(m3.get(&"2,1".parse().unwrap()), Some(&q("1/67")));
    let zp = ZParams::new(q("-1"), q("3/16")).unwrap();
    assert_eq!(
        p_up_z(&"3,1".parse().unwrap(), &"3,2".parse().unwrap(), &zp).unwrap(),
        q("1/67")
    );
    assert_eq!(
        p_up_alpha(&"2".parse().unwrap(), &"2,1".parse().unwrap(), &a).unwrap(),
        q("1/67")
    );
}

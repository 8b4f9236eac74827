//! Verification sweeps behind `ys verify`, each returning a
//! machine-readable report.

use std::collections::BTreeMap;

use serde::Serialize;

use young_schur::graph::{
    brute_force_d_path_count, d_path_count, dim_f, dim_g, intermediates, Diagram,
    D_PATH_WALKER_CAP,
};
use young_schur::kerov::{
    doubling_identity_sides, shifted_up_function, up_function,
};
use young_schur::measures::{
    alpha_measure_closed, build_measure, coherence_violations, down_equality_sides,
    p_up_plancherel, p_up_plancherel_shifted, proportionality_check, up_equality_sides,
    z_measure_closed, AlphaParam, CoherentFamily, Proportionality, SchurFamily, YoungFamily,
    ZParams,
};
use young_schur::rational::{factorial, rat, Rational};
use young_schur::{Partition, StrictPartition};

#[derive(Debug, Serialize)]
pub struct Report {
    pub prop: String,
    pub n: u64,
    pub params: BTreeMap<String, Vec<String>>,
    pub range: String,
    pub status: String,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Serialize)]
pub struct Witness {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

impl Report {
    fn build(
        prop: &str,
        n: u64,
        params: BTreeMap<String, Vec<String>>,
        range: String,
        witnesses: Vec<Witness>,
    ) -> Report {
        Report {
            prop: prop.to_string(),
            n,
            params,
            range,
            status: if witnesses.is_empty() { "pass" } else { "fail" }.to_string(),
            witnesses,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

fn param_map(zset: &[ZParams], aset: &[AlphaParam]) -> BTreeMap<String, Vec<String>> {
    let mut map = BTreeMap::new();
    if !zset.is_empty() {
        map.insert(
            "zparams".to_string(),
            zset.iter()
                .map(|z| format!("{},{}", z.sum(), z.product()))
                .collect(),
        );
    }
    if !aset.is_empty() {
        map.insert(
            "alpha".to_string(),
            aset.iter().map(|a| a.alpha().to_string()).collect(),
        );
    }
    map
}

fn strict_covers(max_n: u64) -> impl Iterator<Item = (StrictPartition, StrictPartition)> {
    (1..=max_n).flat_map(|n| {
        StrictPartition::layer(n).into_iter().flat_map(|lam| {
            lam.down_covers()
                .into_iter()
                .map(move |mu| (mu, lam.clone()))
        })
    })
}

pub fn coherence(max_n: u64, zset: &[ZParams], aset: &[AlphaParam]) -> Report {
    let mut witnesses = Vec::new();
    let mut sweep_young = |fam: &YoungFamily| {
        for n in 1..=max_n {
            for (d, got, expected) in coherence_violations(fam, n) {
                witnesses.push(Witness {
                    input: format!("family={} n={n} sigma={d}", fam.label()),
                    lhs: got.to_string(),
                    rhs: expected.to_string(),
                });
            }
        }
    };
    sweep_young(&YoungFamily::Plancherel);
    for zp in zset {
        sweep_young(&YoungFamily::Z(zp.clone()));
    }
    let mut sweep_schur = |fam: &SchurFamily| {
        for n in 1..=max_n {
            for (d, got, expected) in coherence_violations(fam, n) {
                witnesses.push(Witness {
                    input: format!("family={} n={n} mu={d}", fam.label()),
                    lhs: got.to_string(),
                    rhs: expected.to_string(),
                });
            }
        }
    };
    sweep_schur(&SchurFamily::Plancherel);
    for a in aset {
        sweep_schur(&SchurFamily::Alpha(a.clone()));
    }
    Report::build(
        "coherence",
        max_n,
        param_map(zset, aset),
        format!("all families, levels 1..={max_n}"),
        witnesses,
    )
}

pub fn down_equality(max_n: u64) -> Report {
    let mut witnesses = Vec::new();
    for (mu, lam) in strict_covers(max_n) {
        let (lhs, rhs) = down_equality_sides(&lam, &mu).expect("enumerated covers");
        if lhs != rhs {
            witnesses.push(Witness {
                input: format!("lam={lam} mu={mu}"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    Report::build(
        "down-equality",
        max_n,
        BTreeMap::new(),
        format!("strict covers with weight <= {max_n}"),
        witnesses,
    )
}

pub fn planch_up(max_n: u64) -> Report {
    let mut witnesses = Vec::new();
    for n in 0..=max_n {
        for lam in StrictPartition::layer(n) {
            let (lhs, rhs) = doubling_identity_sides(&lam);
            if !lhs.eq_cross_mul(&rhs) {
                witnesses.push(Witness {
                    input: format!("lam={lam}"),
                    lhs: lhs.render("u"),
                    rhs: rhs.render("u"),
                });
            }
            // Shifted residues against the shifted Plancherel kernel.
            let residues = shifted_up_function(&lam)
                .partial_fractions()
                .expect("simple integer poles");
            let cells = lam.shifted_addable_cells();
            for (pole, residue) in residues {
                let found = cells.iter().find(|c| {
                    rat(c.content()) * rat(c.content() + 1) == pole
                });
                let expected = found.map(|c| {
                    p_up_plancherel_shifted(&lam, &lam.with_cell(*c)).unwrap()
                });
                if expected.as_ref() != Some(&residue) {
                    witnesses.push(Witness {
                        input: format!("lam={lam} pole={pole}"),
                        lhs: residue.to_string(),
                        rhs: expected.map_or("no box".into(), |e| e.to_string()),
                    });
                }
            }
        }
        for rho in Partition::layer(n) {
            let residues = up_function(&rho)
                .partial_fractions()
                .expect("simple integer poles");
            let cells = rho.addable_cells();
            for (pole, residue) in residues {
                let found = cells.iter().find(|c| rat(c.content()) == pole);
                let expected =
                    found.map(|c| p_up_plancherel(&rho, &rho.with_cell(*c)).unwrap());
                if expected.as_ref() != Some(&residue) {
                    witnesses.push(Witness {
                        input: format!("rho={rho} pole={pole}"),
                        lhs: residue.to_string(),
                        rhs: expected.map_or("no box".into(), |e| e.to_string()),
                    });
                }
            }
        }
    }
    Report::build(
        "planch-up",
        max_n,
        BTreeMap::new(),
        format!("doubling identity and kernel residues, weights <= {max_n}"),
        witnesses,
    )
}

pub fn z_up(max_n: u64, aset: &[AlphaParam]) -> Report {
    let mut witnesses = Vec::new();
    for a in aset {
        for (mu, lam) in strict_covers(max_n) {
            let (lhs, rhs) = up_equality_sides(&mu, &lam, a).expect("enumerated covers");
            if lhs != rhs {
                witnesses.push(Witness {
                    input: format!("mu={mu} lam={lam} alpha={}", a.alpha()),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    Report::build(
        "z-up",
        max_n,
        param_map(&[], aset),
        format!("strict covers with weight <= {max_n}"),
        witnesses,
    )
}

pub fn lemma_dpaths(max_n: u64) -> Result<Report, String> {
    if max_n > D_PATH_WALKER_CAP {
        return Err(format!(
            "the exhaustive D-path walker is capped at weight {D_PATH_WALKER_CAP}; \
             pass --max-n {D_PATH_WALKER_CAP} or lower"
        ));
    }
    let mut witnesses = Vec::new();
    for n in 0..=max_n {
        for lam in StrictPartition::layer(n) {
            let brute = brute_force_d_path_count(&lam).expect("within walker cap");
            let closed = d_path_count(&lam);
            if brute != closed {
                witnesses.push(Witness {
                    input: format!("lam={lam}"),
                    lhs: brute.to_string(),
                    rhs: closed.to_string(),
                });
            }
        }
    }
    for (mu, lam) in strict_covers(max_n) {
        let count = intermediates(&mu, &lam).expect("enumerated covers").len();
        let expected = if lam.len() == mu.len() { 2 } else { 1 };
        if count != expected {
            witnesses.push(Witness {
                input: format!("mu={mu} lam={lam}"),
                lhs: count.to_string(),
                rhs: expected.to_string(),
            });
        }
    }
    Ok(Report::build(
        "lemma-dpaths",
        max_n,
        BTreeMap::new(),
        format!("walker counts and intermediate counts, weights <= {max_n}"),
        witnesses,
    ))
}

pub fn proportionality(max_n: u64, aset: &[AlphaParam]) -> Report {
    let mut witnesses = Vec::new();
    for a in aset {
        for n in 1..=max_n {
            if let Proportionality::Varies(ratios) = proportionality_check(n, a) {
                let rendered: Vec<String> = ratios
                    .iter()
                    .map(|(lam, r)| format!("{lam}: {r}"))
                    .collect();
                witnesses.push(Witness {
                    input: format!("alpha={} n={n}", a.alpha()),
                    lhs: rendered.join("; "),
                    rhs: "a single constant".to_string(),
                });
            }
        }
    }
    Report::build(
        "proportionality",
        max_n,
        param_map(&[], aset),
        format!("strict levels 1..={max_n}"),
        witnesses,
    )
}

pub fn closed_forms(max_n: u64, zset: &[ZParams], aset: &[AlphaParam]) -> Report {
    let mut witnesses = Vec::new();
    for n in 0..=max_n {
        let nf = Rational::from_integer(factorial(n).into());
        for (rho, prob) in build_measure(&YoungFamily::Plancherel, n).iter() {
            let f = Rational::from_integer(dim_f(rho).into());
            let closed = &f * &f / &nf;
            if prob != &closed {
                witnesses.push(Witness {
                    input: format!("plancherel rho={rho}"),
                    lhs: prob.to_string(),
                    rhs: closed.to_string(),
                });
            }
        }
        for (lam, prob) in build_measure(&SchurFamily::Plancherel, n).iter() {
            let g = Rational::from_integer(dim_g(lam).into());
            let closed = rat(2).pow((n - lam.len() as u64) as i32) * &g * &g / &nf;
            if prob != &closed {
                witnesses.push(Witness {
                    input: format!("plancherel-shifted lam={lam}"),
                    lhs: prob.to_string(),
                    rhs: closed.to_string(),
                });
            }
        }
        for zp in zset {
            for (rho, prob) in build_measure(&YoungFamily::Z(zp.clone()), n).iter() {
                let closed = z_measure_closed(rho, zp);
                if prob != &closed {
                    witnesses.push(Witness {
                        input: format!("z(s={},p={}) rho={rho}", zp.sum(), zp.product()),
                        lhs: prob.to_string(),
                        rhs: closed.to_string(),
                    });
                }
            }
        }
        for a in aset {
            // The closed form needs a rational specialization argument.
            if alpha_measure_closed(&StrictPartition::empty(), a).is_err() {
                continue;
            }
            for (lam, prob) in build_measure(&SchurFamily::Alpha(a.clone()), n).iter() {
                let closed = alpha_measure_closed(lam, a).expect("rational argument");
                if prob != &closed {
                    witnesses.push(Witness {
                        input: format!("alpha({}) lam={lam}", a.alpha()),
                        lhs: prob.to_string(),
                        rhs: closed.to_string(),
                    });
                }
            }
        }
    }
    Report::build(
        "closed-forms",
        max_n,
        param_map(zset, aset),
        format!(
            "levels 0..={max_n}; alpha closed form only where 1-4*alpha is a rational square"
        ),
        witnesses,
    )
}

//! Verification suites backing the `verify` subcommand: each check
//! produces one machine-readable verdict per parameter cell.

use fuss_catalan::oracles::verdict;
use fuss_catalan::shi_tableaux::{hook_conditions_hold_flat, shi_conditions_hold_flat};
use fuss_catalan::{
    count_partitions, count_positive, enumerate_dissections, enumerate_partitions,
    enumerate_regions, exhaustive_refined_counts, exhaustive_tableaux,
    grid_region_oracle_stabilized, omega, omega_inverse, psi, psi_inverse, psi_prime,
    CountingParameters, Dissection, LabeledPolygon, Labeling, RefinedCountTable, ShiTableau,
    StaircasePartition, Verdict,
};
use num_bigint::BigUint;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Counts,
    Roundtrip,
    Walls,
    Refined,
    Oracle,
}

pub fn run_suite(suite: Suite, n_max: usize, m_max: usize) -> Vec<Verdict> {
    let mut verdicts = Vec::new();
    match suite {
        Suite::All => {
            verdicts.extend(counts_suite(n_max, m_max));
            verdicts.extend(roundtrip_suite(n_max, m_max));
            verdicts.extend(walls_suite(n_max, m_max));
            verdicts.extend(refined_suite(n_max, m_max));
            verdicts.extend(oracle_suite(n_max, m_max));
        }
        Suite::Counts => verdicts.extend(counts_suite(n_max, m_max)),
        Suite::Roundtrip => verdicts.extend(roundtrip_suite(n_max, m_max)),
        Suite::Walls => verdicts.extend(walls_suite(n_max, m_max)),
        Suite::Refined => verdicts.extend(refined_suite(n_max, m_max)),
        Suite::Oracle => verdicts.extend(oracle_suite(n_max, m_max)),
    }
    verdicts
}

fn counts_suite(n_max: usize, m_max: usize) -> Vec<Verdict> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for m in 1..=m_max {
            let formula = count_partitions(n, m);
            let product = CountingParameters::new(n, m).catalan_number();
            let partitions = BigUint::from(enumerate_partitions(n, m).count());
            let regions = BigUint::from(enumerate_regions(n, m).count());
            let dissections =
                BigUint::from(enumerate_dissections(n, m, Labeling::Alternating).count());
            let ok = formula == product
                && partitions == formula
                && regions == formula
                && dissections == formula;
            out.push(verdict(
                "counts.families",
                n,
                m,
                ok,
                format!(
                    "formula={formula} product={product} partitions={partitions} regions={regions} dissections={dissections}"
                ),
            ));

            let positive_formula = count_positive(n, m);
            let positive_product = CountingParameters::new(n, m).positive_catalan_number();
            let avoiding = BigUint::from(
                enumerate_partitions(n, m)
                    .filter(|p| p.is_positive())
                    .count(),
            );
            let bounded = BigUint::from(
                enumerate_regions(n, m)
                    .filter(|t| t.wall_profile().bounded())
                    .count(),
            );
            let snakeless = BigUint::from(
                enumerate_dissections(n, m, Labeling::Alternating)
                    .filter(|d| d.negative_roots_contained().is_empty())
                    .count(),
            );
            let ok = positive_formula == positive_product
                && avoiding == positive_formula
                && bounded == positive_formula
                && snakeless == positive_formula;
            out.push(verdict(
                "counts.positive",
                n,
                m,
                ok,
                format!(
                    "formula={positive_formula} avoiding={avoiding} bounded={bounded} snakeless={snakeless}"
                ),
            ));
        }
    }
    out
}

fn roundtrip_suite(n_max: usize, m_max: usize) -> Vec<Verdict> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for m in 1..=m_max {
            let mut mismatches = 0usize;
            let mut checked = 0usize;
            for t in enumerate_regions(n, m) {
                checked += 2;
                if ShiTableau::from_partition(&t.to_partition()) != t {
                    mismatches += 1;
                }
                if omega(&omega_inverse(&t)).expect("alternating") != t {
                    mismatches += 1;
                }
            }
            for p in enumerate_partitions(n, m) {
                checked += 2;
                if ShiTableau::from_partition(&p).to_partition() != p {
                    mismatches += 1;
                }
                if psi(&psi_inverse(&p)).expect("alternating") != p {
                    mismatches += 1;
                }
            }
            for d in enumerate_dissections(n, m, Labeling::Alternating) {
                checked += 2;
                if psi_inverse(&psi(&d).expect("alternating")) != d {
                    mismatches += 1;
                }
                if omega_inverse(&omega(&d).expect("alternating")) != d {
                    mismatches += 1;
                }
            }
            out.push(verdict(
                "roundtrip.bijections",
                n,
                m,
                mismatches == 0,
                format!("{checked} round trips, {mismatches} mismatches"),
            ));
        }
    }
    out
}

fn walls_suite(n_max: usize, m_max: usize) -> Vec<Verdict> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for m in 1..=m_max {
            let mut mismatches = 0usize;
            let mut checked = 0usize;
            for d in enumerate_dissections(n, m, Labeling::Alternating) {
                checked += 1;
                let contained = d.negative_roots_contained();
                let touch = psi(&d).expect("alternating").max_parts();
                let walls = omega(&d)
                    .expect("alternating")
                    .wall_profile()
                    .simple_walls()
                    .clone();
                if contained != touch || touch != walls {
                    mismatches += 1;
                }
            }
            out.push(verdict(
                "walls.correspondence",
                n,
                m,
                mismatches == 0,
                format!("{checked} dissections, {mismatches} mismatches"),
            ));

            if n >= 3 {
                let polygon = LabeledPolygon::standard(n, m);
                let fan: Vec<(usize, usize)> = (1..=n).map(|i| (i * m, m * (n + 1) + 1)).collect();
                let ok = match Dissection::new(polygon, fan) {
                    Ok(d) => {
                        let lam = psi_prime(&d).expect("standard");
                        lam.max_parts() == (1..=n).collect::<BTreeSet<_>>()
                            && d.negative_roots_contained().len() < n
                    }
                    Err(_) => false,
                };
                out.push(verdict(
                    "walls.standard_fan_counterexample",
                    n,
                    m,
                    ok,
                    "saturated image with fewer snake diagonals than rank",
                ));
            }
        }
    }
    let polygon = LabeledPolygon::alternating(4, 3);
    let ok = polygon.snake_diagonals() == vec![(12, 15), (9, 12), (6, 9), (3, 6)];
    out.push(verdict(
        "walls.alternating_snake_anchor",
        4,
        3,
        ok,
        "snake {12,15},{9,12},{6,9},{3,6}",
    ));
    out
}

fn refined_suite(n_max: usize, m_max: usize) -> Vec<Verdict> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for m in 1..=m_max {
            let (by_dissection, by_region) = exhaustive_refined_counts(n, m);
            let formula = RefinedCountTable::from_formula(n, m);
            let mut ok = by_dissection == by_region;
            for (subset, count) in formula.entries() {
                ok &= &by_dissection.get(subset) == count;
            }
            ok &= formula.total() == count_partitions(n, m);
            ok &= formula.positive_part() == count_positive(n, m);
            out.push(verdict(
                "refined.parabolic_product",
                n,
                m,
                ok,
                format!(
                    "{} subsets, total {}",
                    formula.entries().len(),
                    formula.total()
                ),
            ));
        }
    }
    out
}

fn oracle_suite(n_max: usize, m_max: usize) -> Vec<Verdict> {
    let mut out = Vec::new();
    // naive filter against the pruning enumerator
    for n in 1..=n_max.min(4) {
        for m in 1..=m_max {
            match exhaustive_tableaux(n, m) {
                Ok(tableaux) => {
                    let filtered: BTreeSet<ShiTableau> = tableaux.into_iter().collect();
                    let enumerated: BTreeSet<ShiTableau> = enumerate_regions(n, m).collect();
                    out.push(verdict(
                        "oracle.exhaustive_filter",
                        n,
                        m,
                        filtered == enumerated,
                        format!("{} tableaux", enumerated.len()),
                    ));
                }
                Err(e) => out.push(Verdict::mismatch(
                    "oracle.exhaustive_filter",
                    n,
                    m,
                    e.to_string(),
                )),
            }
        }
    }
    // hook route equals triplet route on every filling
    for n in 1..=n_max.min(4) {
        for m in 1..=m_max {
            let len = n * (n + 1) / 2;
            let mut filling = vec![0usize; len];
            let mut agree = true;
            loop {
                if shi_conditions_hold_flat(n, m, &filling)
                    != hook_conditions_hold_flat(n, m, &filling)
                {
                    agree = false;
                    break;
                }
                let mut pos = len;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    if filling[pos] < m {
                        filling[pos] += 1;
                        break;
                    }
                    filling[pos] = 0;
                }
                if filling.iter().all(|&v| v == 0) {
                    break;
                }
            }
            out.push(verdict(
                "oracle.hook_equivalence",
                n,
                m,
                agree,
                format!("{} fillings", (m + 1).pow(len as u32)),
            ));
        }
    }
    // rational grid sampling against the exact region sets
    for n in 1..=n_max.min(3) {
        for m in 1..=m_max.min(2) {
            let (sampled, resolution) = grid_region_oracle_stabilized(n, m);
            let exact: BTreeSet<ShiTableau> = enumerate_regions(n, m).collect();
            out.push(verdict(
                "oracle.grid_regions",
                n,
                m,
                sampled == exact,
                format!("{} regions at resolution {resolution}", exact.len()),
            ));
        }
    }
    if m_max >= 3 {
        let (sampled, resolution) = grid_region_oracle_stabilized(2, 3);
        let exact: BTreeSet<ShiTableau> = enumerate_regions(2, 3).collect();
        out.push(verdict(
            "oracle.grid_regions",
            2,
            3,
            sampled == exact,
            format!("{} regions at resolution {resolution}", exact.len()),
        ));
    }
    // peeling inverse against the search inverse
    for n in 1..=n_max.min(4) {
        for m in 1..=m_max {
            let by_search: BTreeMap<StaircasePartition, Dissection> =
                enumerate_dissections(n, m, Labeling::Alternating)
                    .map(|d| (psi(&d).expect("alternating"), d))
                    .collect();
            let mut mismatches = 0usize;
            for p in enumerate_partitions(n, m) {
                if by_search.get(&p) != Some(&psi_inverse(&p)) {
                    mismatches += 1;
                }
            }
            out.push(verdict(
                "oracle.search_inverse",
                n,
                m,
                mismatches == 0,
                format!("{} partitions, {mismatches} mismatches", by_search.len()),
            ));
        }
    }
    out
}

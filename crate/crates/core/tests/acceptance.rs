//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use grif_core::cochar::{
    is_minuscule, min_admissible_prime, orbitally_p_close, quasi_constant, AutomorphismSet,
};
use grif_core::exact::{format_rational, frac, rat};
use grif_core::griffiths::proportionality;
use grif_core::par::Execution;
use grif_core::repweights::{adjoint_weight_system, irrep_weight_system};
use grif_core::rootdata::{Coweight, Family, RootSystem, RootSystemSpec, Weight};
use grif_core::sweep::{self, box_grid, CheckSummary, SweepConfig};
use grif_core::table1;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn spec(f: Family, n: usize) -> RootSystemSpec {
    RootSystemSpec::new(f, n).unwrap()
}

fn grid_types() -> Vec<RootSystemSpec> {
    let mut v: Vec<_> = (1..=4).map(|n| spec(Family::A, n)).collect();
    v.extend((2..=4).map(|n| spec(Family::B, n)));
    v.extend((2..=4).map(|n| spec(Family::C, n)));
    v.push(spec(Family::D, 4));
    v.push(spec(Family::G, 2));
    v.push(spec(Family::F, 4));
    v
}

fn tallies_clean(s: &CheckSummary, names: &[&str]) -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for &n in names {
        let t = s.tally(n);
        ok &= t.fail == 0 && t.pass > 0;
        parts.push(format!("{n} {}/{}", t.pass, t.pass + t.fail));
    }
    let mut detail = parts.join(", ");
    if !ok {
        if let Some(f) = &s.first_failure {
            detail.push_str(&format!(
                "; first failure {} at {} {} mu={:?}: {}",
                f.invariant, f.system, f.rep, f.mu, f.detail
            ));
        }
    }
    outcome(ok, detail)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let rows = table1::reproduce(Execution::Parallel).unwrap();
    let elapsed = start.elapsed();
    let bad: Vec<String> = rows
        .iter()
        .flat_map(|r| r.instances.iter())
        .flat_map(|i| i.mismatches.iter().cloned())
        .collect();
    let n: usize = rows.iter().map(|r| r.instances.len()).sum();
    outcome(
        bad.is_empty() && rows.len() == 9 && elapsed < Duration::from_secs(10),
        format!(
            "{} family rows, {n} instances, {:.2?}{}",
            rows.len(),
            elapsed,
            if bad.is_empty() {
                String::new()
            } else {
                format!("; mismatches: {}", bad.join("; "))
            }
        ),
    )
}

fn criterion_6() -> Outcome {
    let rows = table1::reproduce(Execution::Parallel).unwrap();
    let mut checked = 0;
    let mut bad = Vec::new();
    for inst in rows.iter().flat_map(|r| r.instances.iter()) {
        if let Some(s) = inst.computed.s_simply_laced {
            checked += 1;
            if s != 4 * inst.computed.coxeter {
                bad.push(format!("{}: S={s} h={}", inst.spec, inst.computed.coxeter));
            }
        }
    }
    outcome(
        bad.is_empty() && checked > 0,
        format!("{checked} simply-laced instances{}", bad.join("; ")),
    )
}

fn criterion_8() -> Outcome {
    let mut types: Vec<RootSystemSpec> = Family::ALL
        .iter()
        .flat_map(|&f| (1..=4).filter_map(move |n| RootSystemSpec::new(f, n).ok()))
        .collect();
    types.dedup();
    let mut strings = 0;
    let mut bad = Vec::new();
    for s in types {
        let rs = RootSystem::new(s).unwrap();
        let c = rs.cartan();
        for i in 0..rs.rank() {
            for j in 0..rs.rank() {
                let (a, b) = (rs.simple_root(i), rs.simple_root(j));
                if i == j || c[i][j] == 0 || a.norm2() > b.norm2() {
                    continue;
                }
                strings += 1;
                let st = rs
                    .root_string(rs.simple_root_id(i), rs.simple_root_id(j))
                    .unwrap();
                let len = st.len() as i64 - 1;
                if len != c[i][j] * c[j][i] {
                    bad.push(format!("{s} ({i},{j}) length {len}"));
                }
                if a.norm2() < b.norm2() {
                    let norms: Vec<i64> = st.iter().map(|&r| rs.root(r).norm2()).collect();
                    let max = *norms.iter().max().unwrap();
                    let min = *norms.iter().min().unwrap();
                    let ends = norms[0] == max && norms[norms.len() - 1] == max;
                    let interior = norms[1..norms.len() - 1].iter().all(|&x| x == min);
                    if !(ends && interior) {
                        bad.push(format!("{s} ({i},{j}) norms {norms:?}"));
                    }
                }
            }
        }
    }
    outcome(
        bad.is_empty() && strings > 0,
        format!(
            "{strings} strings{}",
            if bad.is_empty() {
                String::new()
            } else {
                format!("; {}", bad.join("; "))
            }
        ),
    )
}

fn criterion_9(grid: &CheckSummary) -> Outcome {
    let split = AutomorphismSet::split();
    let mut count = 0;
    let mut bad = Vec::new();
    for s in grid_types() {
        let rs = RootSystem::new(s).unwrap();
        for v in box_grid(rs.rank(), 2) {
            let mu = Coweight::from_ints(&v);
            count += 1;
            let minu = is_minuscule(&rs, &mu);
            let qc = quasi_constant(&rs, &mu, &split);
            if minu && !qc {
                bad.push(format!("{s} {mu}: minuscule but not quasi-constant"));
            }
            for p in [2, 3, 5, 7] {
                if qc && !orbitally_p_close(&rs, &mu, p, &split).unwrap() {
                    bad.push(format!("{s} {mu}: quasi-constant but not {p}-close"));
                }
            }
        }
    }
    let a2 = RootSystem::new(spec(Family::A, 2)).unwrap();
    let p = min_admissible_prime(&a2, &Coweight::from_ints(&[1, 1]), &split);
    if p != 3 {
        bad.push(format!("A2 (1,1) minimal prime {p}"));
    }
    let eq = grid.tally(sweep::P_CLOSE);
    outcome(
        bad.is_empty() && eq.fail == 0 && eq.pass > 0,
        format!(
            "{count} cocharacters, A2 (1,1) min p = {p}, equivalence {}/{} without error{}",
            eq.pass,
            eq.pass + eq.fail,
            if bad.is_empty() {
                String::new()
            } else {
                format!("; {}", bad.join("; "))
            }
        ),
    )
}

fn criterion_10() -> Outcome {
    let rs = Arc::new(RootSystem::new(spec(Family::A, 1)).unwrap());
    let mu = Coweight::from_ints(&[1]);
    let ad = proportionality(&adjoint_weight_system(&rs), &mu).unwrap();
    let std = proportionality(&irrep_weight_system(&rs, &Weight::new([1])).unwrap(), &mu).unwrap();
    let ok = ad.grif_pairings == vec![rat(-4)]
        && ad.c == rat(4)
        && std.grif_pairings == vec![rat(-1)]
        && std.c == frac(1, 1);
    outcome(
        ok,
        format!(
            "adjoint ({}) c={}, standard ({}) c={}",
            format_rational(&ad.grif_pairings[0]),
            format_rational(&ad.c),
            format_rational(&std.grif_pairings[0]),
            format_rational(&std.c)
        ),
    )
}

fn main() -> ExitCode {
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();

    results.push((1, "root pairing sum table", criterion_1()));

    let start = Instant::now();
    let grid = sweep::run_check(&SweepConfig {
        families: grid_types(),
        max_weight_coord: 2,
        max_mu_coord: 3,
        include_adjoint: true,
        weyl_samples: 100,
        ..SweepConfig::default()
    })
    .unwrap();
    let grid_time = start.elapsed();
    eprintln!(
        "grid: {} systems, {} representations, {} points in {:.2?}",
        grid.systems, grid.reps_tested, grid.grid_points, grid_time
    );

    let mut c2 = tallies_clean(&grid, &[sweep::ORACLE]);
    c2.ok &= grid_time < Duration::from_secs(300) && grid.reps_excluded == 0;
    c2.detail = format!(
        "{} representations, {}; {:.2?}",
        grid.reps_tested, c2.detail, grid_time
    );
    results.push((2, "oracle equivalence", c2));
    results.push((
        3,
        "length invariant and ratio law",
        tallies_clean(
            &grid,
            &[
                sweep::LENGTH_INVARIANT,
                sweep::SAME_LENGTH_CONSTANCY,
                sweep::LENGTH_RATIO,
            ],
        ),
    ));
    results.push((
        4,
        "ray, c independence, representation independence",
        tallies_clean(
            &grid,
            &[sweep::RAY, sweep::C_MU_INDEPENDENCE, sweep::R_INDEPENDENCE],
        ),
    ));
    results.push((
        5,
        "Deligne identity and positive definiteness",
        tallies_clean(&grid, &[sweep::DELIGNE_IDENTITY, sweep::DELIGNE_FORM]),
    ));
    results.push((6, "adjoint S = 4h in simply-laced types", criterion_6()));
    results.push((
        7,
        "representation self-check",
        tallies_clean(
            &grid,
            &[
                sweep::FREUDENTHAL_WEYL,
                sweep::ZERO_SUM,
                sweep::W_INVARIANCE,
            ],
        ),
    ));
    results.push((8, "root strings", criterion_8()));
    results.push((9, "cocharacter predicates", criterion_9(&grid)));
    results.push((10, "A1 anchors", criterion_10()));

    let mut all_ok = true;
    for (n, name, o) in &results {
        all_ok &= o.ok;
        println!(
            "{} criterion {n}: {name}: {}",
            if o.ok { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

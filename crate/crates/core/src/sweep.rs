//! Verification sweeps over grids of (root system, representation, mu).
//!
//! Every grid point runs the full invariant suite. Work is split per
//! representation and fanned out through [`crate::par`]; tallies are merged
//! in job order, so the summary is identical for sequential and parallel
//! runs.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cochar::{p_close_ratios, root_orbits, AutomorphismSet, PCloseEquivalence};
use crate::error::Result;
use crate::exact::{format_rational, rat, rat_i128, Rational};
use crate::griffiths::{
    character_coweight_pairing, closed_from_s_values, deligne_gram, grif_pairings_direct,
    is_anti_dominant_off_levi, length_invariant, positive_multiple, ray_holds,
    weight_pairing_sum_int,
};
use crate::par::{self, Execution};
use crate::repweights::{
    adjoint_weight_system, has_central_kernel, irrep_weight_system, weyl_dimension, WeightSystem,
};
use crate::rootdata::{apply_matrix, Coweight, RootSystem, RootSystemSpec, Weight};

pub const ANTI_DOMINANCE: &str = "anti_dominance";
pub const C_MU_INDEPENDENCE: &str = "c_mu_independence";
pub const DELIGNE_FORM: &str = "deligne_form";
pub const DELIGNE_IDENTITY: &str = "deligne_identity";
pub const FREUDENTHAL_WEYL: &str = "freudenthal_weyl_dimension";
pub const LENGTH_INVARIANT: &str = "length_invariant";
pub const LENGTH_RATIO: &str = "length_ratio_law";
pub const W_INVARIANCE: &str = "multiplicity_w_invariance";
pub const ORACLE: &str = "oracle_equivalence";
pub const P_CLOSE: &str = "p_close_equivalence";
pub const R_INDEPENDENCE: &str = "r_independence";
pub const RAY: &str = "ray_proportionality";
pub const SAME_LENGTH_CONSTANCY: &str = "same_length_constancy";
pub const SAME_LENGTH_FORM: &str = "same_length_form";
pub const SCALING: &str = "scaling_covariance";
pub const TORUS_SPAN: &str = "torus_span";
pub const ZERO_SUM: &str = "zero_weighted_sum";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub families: Vec<RootSystemSpec>,
    /// Highest weights range over `{0..=max_weight_coord}^n` minus 0.
    pub max_weight_coord: u32,
    /// Dominant `mu` ranges over `{0..=max_mu_coord}^n` minus 0.
    pub max_mu_coord: u32,
    pub include_adjoint: bool,
    /// Skip highest-weight representations entirely.
    pub adjoint_only: bool,
    pub seed: u64,
    /// Sampled Weyl elements per system for the invariance checks.
    pub weyl_samples: usize,
    pub primes: Vec<u64>,
    pub execution: Execution,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            families: Vec::new(),
            max_weight_coord: 1,
            max_mu_coord: 2,
            include_adjoint: false,
            adjoint_only: false,
            seed: 0,
            weyl_samples: 100,
            primes: vec![2, 3, 5, 7],
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub invariant: &'static str,
    pub system: String,
    pub rep: String,
    pub mu: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckSummary {
    pub systems: usize,
    pub reps_tested: usize,
    pub reps_excluded: usize,
    pub grid_points: usize,
    pub tallies: BTreeMap<&'static str, Tally>,
    /// Earliest failure in grid order.
    pub first_failure: Option<Failure>,
    pub warnings: Vec<String>,
}

impl CheckSummary {
    pub fn ok(&self) -> bool {
        self.tallies.values().all(|t| t.fail == 0)
    }

    pub fn tally(&self, name: &str) -> Tally {
        self.tallies.get(name).copied().unwrap_or_default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Rep {
    Adjoint,
    Highest(Weight),
}

struct Job {
    system: usize,
    rep: Rep,
}

#[derive(Default)]
struct Recorder {
    tallies: BTreeMap<&'static str, Tally>,
    failures: Vec<Failure>,
}

impl Recorder {
    fn record(
        &mut self,
        name: &'static str,
        ok: bool,
        ctx: &Ctx,
        mu: Option<&Coweight>,
        detail: impl FnOnce() -> String,
    ) {
        let t = self.tallies.entry(name).or_default();
        if ok {
            t.pass += 1;
        } else {
            t.fail += 1;
            self.failures.push(Failure {
                invariant: name,
                system: ctx.system.to_string(),
                rep: ctx.rep.clone(),
                mu: mu.map(ToString::to_string),
                detail: detail(),
            });
        }
    }
}

struct Ctx {
    system: RootSystemSpec,
    rep: String,
}

struct JobResult {
    tested: bool,
    recorder: Recorder,
    pairings: Vec<Option<Vec<Rational>>>,
}

/// Every nonzero vector in `{0..=max}^n`, lexicographic.
pub fn box_grid(n: usize, max: u32) -> Vec<Vec<i64>> {
    let side = max as usize + 1;
    let total = side.pow(n as u32);
    (1..total)
        .map(|mut code| {
            let mut v = vec![0i64; n];
            for slot in v.iter_mut().rev() {
                *slot = (code % side) as i64;
                code /= side;
            }
            v
        })
        .collect()
}

fn job_seed(seed: u64, spec: RootSystemSpec, rep: &str) -> u64 {
    // FNV-1a over a stable key
    let key = format!("{spec}/{rep}");
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for b in key.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

fn run_job(
    rs: &Arc<RootSystem>,
    job: &Job,
    mus: &[Coweight],
    config: &SweepConfig,
) -> Result<JobResult> {
    let ws = match &job.rep {
        Rep::Adjoint => adjoint_weight_system(rs),
        Rep::Highest(l) => irrep_weight_system(rs, l)?,
    };
    let ctx = Ctx {
        system: rs.spec(),
        rep: ws.label().to_string(),
    };
    let mut rec = Recorder::default();
    if let Rep::Highest(l) = &job.rep {
        let wd = weyl_dimension(rs, l)?;
        rec.record(
            FREUDENTHAL_WEYL,
            wd == ws.dimension().into(),
            &ctx,
            None,
            || {
                format!(
                    "Freudenthal total {} vs Weyl dimension {wd}",
                    ws.dimension()
                )
            },
        );
    }
    if !has_central_kernel(&ws) {
        return Ok(JobResult {
            tested: false,
            recorder: rec,
            pairings: vec![None; mus.len()],
        });
    }
    let n = rs.rank();

    let sum = ws.weighted_sum();
    rec.record(ZERO_SUM, sum.iter().all(|&x| x == 0), &ctx, None, || {
        format!("Σ m(chi) chi = {sum:?}")
    });
    let span = ws.span_rank();
    rec.record(TORUS_SPAN, span == n, &ctx, None, || {
        format!("weights span rank {span} < {n}")
    });

    let mut rng = ChaCha8Rng::seed_from_u64(job_seed(config.seed, rs.spec(), &ctx.rep));
    let max_len = 2 * rs.num_positive_roots();
    let samples: Vec<_> = (0..config.weyl_samples)
        .map(|i| rs.random_weyl_element(&mut rng, 1 + (i * 7919) % max_len))
        .collect();
    let index = PackedIndex::new(&ws);
    for w in &samples {
        let m = rs.weyl_matrix(w);
        let bad = multiplicity_invariance_failure(&ws, index.as_ref(), &m);
        rec.record(W_INVARIANCE, bad.is_none(), &ctx, None, || {
            format!("word {:?} moves multiplicity at {:?}", w.word, bad.unwrap())
        });
    }

    let s_all: Vec<i128> = rs
        .roots()
        .iter()
        .map(|r| weight_pairing_sum_int(&ws, r))
        .collect();
    let s_simple: Vec<Rational> = (0..n)
        .map(|i| rat_i128(s_all[rs.simple_root_id(i)]))
        .collect();
    let li = length_invariant(&ws);
    rec.record(LENGTH_INVARIANT, li.is_ok(), &ctx, None, || {
        format!("{:?}", li.as_ref().unwrap_err())
    });
    let Ok(li) = li else {
        return Ok(JobResult {
            tested: true,
            recorder: rec,
            pairings: vec![None; mus.len()],
        });
    };
    let c = &li / rat(4);

    let orbits = root_orbits(rs, &AutomorphismSet::split());
    let constant = orbits
        .iter()
        .all(|o| o.iter().all(|&r| s_all[r] == s_all[o[0]]));
    rec.record(SAME_LENGTH_CONSTANCY, constant, &ctx, None, || {
        "S varies within a W-orbit of coroots".into()
    });
    // S(a)/S(b) = (b,b)/(a,a) across orbits, and long/short coroot ratio = d_max
    let reps: Vec<usize> = orbits.iter().map(|o| o[0]).collect();
    let mut ratio_ok = reps.iter().all(|&a| {
        reps.iter().all(|&b| {
            s_all[a] * rs.root(a).norm2() as i128 == s_all[b] * rs.root(b).norm2() as i128
        })
    });
    if !rs.is_simply_laced() {
        let short_root = reps.iter().find(|&&r| rs.root(r).norm2() == 2).copied();
        let long_root = reps.iter().find(|&&r| rs.root(r).norm2() != 2).copied();
        if let (Some(sr), Some(lr)) = (short_root, long_root) {
            // short root <-> long coroot
            let d_max = rs.long_norm2() / 2;
            ratio_ok &= s_all[sr] == d_max as i128 * s_all[lr];
        } else {
            ratio_ok = false;
        }
    }
    rec.record(LENGTH_RATIO, ratio_ok, &ctx, None, || {
        format!(
            "S over orbit representatives {:?}",
            reps.iter().map(|&r| s_all[r]).collect::<Vec<_>>()
        )
    });

    let gram = deligne_gram(&ws)?;
    let minors = gram.leading_minors();
    let mut form_ok = gram.is_symmetric() && minors.iter().all(Signed::is_positive);
    for w in samples.iter().take(10) {
        let images: Vec<Coweight> = (0..n)
            .map(|i| w.apply_coweight(rs, &Coweight::fundamental(n, i)))
            .collect();
        for i in 0..n {
            for j in 0..n {
                let mut v = Rational::zero();
                for a in 0..n {
                    for b in 0..n {
                        v += &images[i].coords()[a] * &images[j].coords()[b] * gram.get(a, b);
                    }
                }
                form_ok &= &v == gram.get(i, j);
            }
        }
    }
    rec.record(DELIGNE_FORM, form_ok, &ctx, None, || {
        format!("leading minors {}", fmt_vec(&minors))
    });

    let mut pairings = Vec::with_capacity(mus.len());
    let mut first_c: Option<Rational> = None;
    for mu in mus {
        let g = grif_pairings_direct(&ws, mu)?;
        let closed = closed_from_s_values(&s_simple, mu);
        rec.record(ORACLE, g == closed, &ctx, Some(mu), || {
            format!("direct {} closed {}", fmt_vec(&g), fmt_vec(&closed))
        });
        rec.record(
            ANTI_DOMINANCE,
            is_anti_dominant_off_levi(&g, mu),
            &ctx,
            Some(mu),
            || format!("pairings {}", fmt_vec(&g)),
        );
        rec.record(RAY, ray_holds(rs, &g, mu, &c), &ctx, Some(mu), || {
            format!(
                "pairings {} not -c m_i/d_i with c = {}",
                fmt_vec(&g),
                format_rational(&c)
            )
        });

        let observed_c = mu
            .coords()
            .iter()
            .enumerate()
            .find(|(_, m)| !m.is_zero())
            .map(|(i, m)| -(&g[i] * rat(rs.symmetrizer()[i])) / m)
            .expect("mu is non-central");
        let same_c = first_c.get_or_insert_with(|| observed_c.clone());
        rec.record(
            C_MU_INDEPENDENCE,
            *same_c == observed_c,
            &ctx,
            Some(mu),
            || {
                format!(
                    "c = {} here, {} at the first mu",
                    format_rational(&observed_c),
                    format_rational(same_c)
                )
            },
        );

        let mut deligne_ok = true;
        for j in 0..n {
            let lhs = character_coweight_pairing(rs, &g, &Coweight::fundamental(n, j))?;
            let rhs = -(0..n).fold(Rational::zero(), |acc, a| {
                acc + &mu.coords()[a] * gram.get(a, j)
            });
            deligne_ok &= lhs == rhs;
        }
        rec.record(DELIGNE_IDENTITY, deligne_ok, &ctx, Some(mu), || {
            "<grif, nu> != -(mu, nu)_V".into()
        });

        let doubled = mu.scaled(&rat(2));
        let g2 = grif_pairings_direct(&ws, &doubled)?;
        let scaled_ok = g2.iter().zip(&g).all(|(a, b)| *a == b * rat(2));
        rec.record(SCALING, scaled_ok, &ctx, Some(mu), || {
            format!(
                "grif(2 mu) = {} vs 2 grif(mu) from {}",
                fmt_vec(&g2),
                fmt_vec(&g)
            )
        });

        let moved: Vec<i64> = rs
            .roots()
            .iter()
            .filter(|r| !r.pair_coweight(mu).is_zero())
            .map(|r| r.norm2())
            .collect();
        if moved.iter().all(|&l| l == moved[0]) {
            let neg_mu: Vec<Rational> = mu.coords().iter().map(|m| -m).collect();
            rec.record(
                SAME_LENGTH_FORM,
                positive_multiple(&g, &neg_mu).is_some(),
                &ctx,
                Some(mu),
                || format!("pairings {} not a positive multiple of -mu", fmt_vec(&g)),
            );
        }

        let (mu_ratio, grif_ratio) = p_close_ratios(rs, mu, &g, &orbits);
        for &p in &config.primes {
            let e = PCloseEquivalence::at(mu, mu_ratio.clone(), grif_ratio.clone(), p);
            rec.record(P_CLOSE, e.is_ok(), &ctx, Some(mu), || {
                format!("{:?}", e.as_ref().unwrap_err())
            });
        }
        pairings.push(Some(g));
    }
    Ok(JobResult {
        tested: true,
        recorder: rec,
        pairings,
    })
}

/// Weights packed into one `u64` each (biased, big-endian), so lookups
/// compare integers instead of slices. Key order equals lexicographic order.
struct PackedIndex {
    bits: u32,
    bound: i64,
    keys: Vec<u64>,
}

impl PackedIndex {
    fn new(ws: &WeightSystem) -> Option<Self> {
        let bound = ws.max_abs_coord();
        let bits = (64 - (2 * bound as u64).leading_zeros()).max(1);
        if bits as usize * ws.rank() > 64 {
            return None;
        }
        let mut idx = PackedIndex {
            bits,
            bound,
            keys: Vec::with_capacity(ws.len()),
        };
        for (c, _) in ws.iter() {
            let k = idx.key(c)?;
            idx.keys.push(k);
        }
        Some(idx)
    }

    fn key(&self, chi: &[i64]) -> Option<u64> {
        let mut k = 0u64;
        for &x in chi {
            if x.abs() > self.bound {
                return None;
            }
            k = (k << self.bits) | (x + self.bound) as u64;
        }
        Some(k)
    }

    fn multiplicity(&self, ws: &WeightSystem, chi: &[i64]) -> u64 {
        self.key(chi)
            .and_then(|k| self.keys.binary_search(&k).ok())
            .map_or(0, |i| ws.multiplicity_at(i))
    }
}

/// First weight whose multiplicity changes under the matrix `m`.
fn multiplicity_invariance_failure(
    ws: &WeightSystem,
    index: Option<&PackedIndex>,
    m: &[Vec<i64>],
) -> Option<Vec<i64>> {
    let mut image = vec![0i64; ws.rank()];
    for (c, mult) in ws.iter() {
        apply_matrix(m, c, &mut image);
        let found = match index {
            Some(idx) => idx.multiplicity(ws, &image),
            None => ws.multiplicity(&image),
        };
        if found != mult {
            return Some(c.to_vec());
        }
    }
    None
}

pub fn run_check(config: &SweepConfig) -> Result<CheckSummary> {
    let systems: Vec<Arc<RootSystem>> = config
        .families
        .iter()
        .map(|&s| RootSystem::new(s).map(Arc::new))
        .collect::<Result<_>>()?;
    let mus: Vec<Vec<Coweight>> = systems
        .iter()
        .map(|rs| {
            box_grid(rs.rank(), config.max_mu_coord)
                .iter()
                .map(|v| Coweight::from_ints(v))
                .collect()
        })
        .collect();
    let mut jobs = Vec::new();
    for (i, rs) in systems.iter().enumerate() {
        if config.include_adjoint || config.adjoint_only {
            jobs.push(Job {
                system: i,
                rep: Rep::Adjoint,
            });
        }
        if !config.adjoint_only {
            for v in box_grid(rs.rank(), config.max_weight_coord) {
                jobs.push(Job {
                    system: i,
                    rep: Rep::Highest(Weight::new(v)),
                });
            }
        }
    }

    let results = par::map(config.execution, &jobs, |job| {
        run_job(&systems[job.system], job, &mus[job.system], config)
    });

    let mut summary = CheckSummary {
        systems: systems.len(),
        ..CheckSummary::default()
    };
    let mut failures = Vec::new();
    let mut reference: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
    for (job, res) in jobs.iter().zip(results) {
        let res = res?;
        if res.tested {
            summary.reps_tested += 1;
            summary.grid_points += mus[job.system].len();
        } else {
            summary.reps_excluded += 1;
        }
        for (name, t) in res.recorder.tallies {
            let e = summary.tallies.entry(name).or_default();
            e.pass += t.pass;
            e.fail += t.fail;
        }
        failures.extend(res.recorder.failures);

        let rs = &systems[job.system];
        for (k, g) in res.pairings.into_iter().enumerate() {
            let Some(g) = g else { continue };
            match reference.get(&(job.system, k)) {
                None => {
                    reference.insert((job.system, k), g);
                }
                Some(r) => {
                    let ok = positive_multiple(&g, r).is_some();
                    let e = summary.tallies.entry(R_INDEPENDENCE).or_default();
                    if ok {
                        e.pass += 1;
                    } else {
                        e.fail += 1;
                        failures.push(Failure {
                            invariant: R_INDEPENDENCE,
                            system: rs.spec().to_string(),
                            rep: match &job.rep {
                                Rep::Adjoint => "ad".into(),
                                Rep::Highest(l) => format!("hw:{l}"),
                            },
                            mu: Some(mus[job.system][k].to_string()),
                            detail: format!("{} vs reference {}", fmt_vec(&g), fmt_vec(r)),
                        });
                    }
                }
            }
        }
    }
    summary.first_failure = failures.into_iter().next();
    if summary.reps_tested == 0 {
        summary
            .warnings
            .push("no representations tested (trivial representation excluded)".into());
    }
    if summary.reps_excluded > 0 {
        summary.warnings.push(format!(
            "{} representation(s) without central kernel excluded",
            summary.reps_excluded
        ));
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Family;

    fn spec(f: Family, n: usize) -> RootSystemSpec {
        RootSystemSpec::new(f, n).unwrap()
    }

    #[test]
    fn box_grid_enumerates_nonzero_vectors() {
        let g = box_grid(2, 1);
        assert_eq!(g, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert!(box_grid(3, 0).is_empty());
        assert_eq!(box_grid(2, 2).len(), 8);
    }

    #[test]
    fn small_sweep_passes() {
        let config = SweepConfig {
            families: vec![
                spec(Family::A, 1),
                spec(Family::A, 2),
                spec(Family::B, 2),
                spec(Family::G, 2),
            ],
            max_weight_coord: 1,
            max_mu_coord: 2,
            include_adjoint: true,
            weyl_samples: 5,
            ..SweepConfig::default()
        };
        let s = run_check(&config).unwrap();
        assert!(s.ok(), "{:?}", s.first_failure);
        assert!(s.tally(ORACLE).pass > 0);
        assert!(s.tally(R_INDEPENDENCE).pass > 0);
        assert_eq!(s.reps_excluded, 0);
        assert_eq!(s.reps_tested, 14);
    }

    #[test]
    fn packed_index_agrees_with_binary_search() {
        let rs = Arc::new(RootSystem::new(spec(Family::B, 3)).unwrap());
        let ws = irrep_weight_system(&rs, &Weight::new([1, 0, 1])).unwrap();
        let idx = PackedIndex::new(&ws).unwrap();
        assert!(idx.keys.windows(2).all(|w| w[0] < w[1]));
        for (c, m) in ws.iter() {
            assert_eq!(idx.multiplicity(&ws, c), m);
        }
        assert_eq!(idx.multiplicity(&ws, &[99, 0, 0]), 0);
        assert_eq!(
            idx.multiplicity(&ws, &[1, 1, 1]),
            ws.multiplicity(&[1, 1, 1])
        );
    }

    #[test]
    fn empty_grid_warns() {
        let config = SweepConfig {
            families: vec![spec(Family::A, 1)],
            max_weight_coord: 0,
            ..SweepConfig::default()
        };
        let s = run_check(&config).unwrap();
        assert_eq!(s.reps_tested, 0);
        assert!(s.ok());
        assert!(!s.warnings.is_empty());
    }

    #[test]
    fn sequential_and_parallel_summaries_match() {
        let base = SweepConfig {
            families: vec![spec(Family::A, 2), spec(Family::C, 2)],
            max_weight_coord: 1,
            max_mu_coord: 1,
            include_adjoint: true,
            weyl_samples: 3,
            ..SweepConfig::default()
        };
        let seq = run_check(&SweepConfig {
            execution: Execution::Sequential,
            ..base.clone()
        })
        .unwrap();
        let par = run_check(&SweepConfig {
            execution: Execution::Parallel,
            ..base
        })
        .unwrap();
        assert_eq!(seq, par);
    }
}

//! Cocharacter predicates: dominance, Levi type, orbitally p-close,
//! quasi-constant and minuscule.
//!
//! The Galois part of `W ⋊ Gal` is modeled by an [`AutomorphismSet`] of
//! Dynkin diagram automorphisms; the split case is the empty set.

use std::collections::VecDeque;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, Rational};
use crate::griffiths::grif_pairings_direct;
use crate::repweights::WeightSystem;
use crate::rootdata::{Coweight, Family, RootSystem};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AutomorphismSet {
    generators: Vec<Vec<usize>>,
}

impl AutomorphismSet {
    pub fn split() -> Self {
        Self::default()
    }

    /// Each generator is a node permutation `i -> perm[i]` preserving the
    /// Cartan matrix.
    pub fn new(rs: &RootSystem, generators: Vec<Vec<usize>>) -> Result<Self> {
        let n = rs.rank();
        let c = rs.cartan();
        for perm in &generators {
            if perm.len() != n {
                return Err(Error::InvalidAutomorphism(format!(
                    "{perm:?} has length {}, expected {n}",
                    perm.len()
                )));
            }
            let mut hit = vec![false; n];
            for &p in perm {
                if p >= n || std::mem::replace(&mut hit[p], true) {
                    return Err(Error::InvalidAutomorphism(format!(
                        "{perm:?} is not a permutation"
                    )));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    if c[perm[i]][perm[j]] != c[i][j] {
                        return Err(Error::InvalidAutomorphism(format!(
                            "{perm:?} does not preserve the Cartan matrix"
                        )));
                    }
                }
            }
        }
        Ok(AutomorphismSet { generators })
    }

    /// The nontrivial diagram involution of types A (n ≥ 2), D and E6, or the
    /// empty set.
    pub fn standard_involution(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let perm: Option<Vec<usize>> = match rs.family() {
            Family::A if n >= 2 => Some((0..n).rev().collect()),
            Family::D => {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(n - 2, n - 1);
                Some(p)
            }
            Family::E if n == 6 => Some(vec![5, 1, 4, 3, 2, 0]),
            _ => None,
        };
        match perm {
            Some(p) => AutomorphismSet::new(rs, vec![p]).expect("standard involution"),
            None => AutomorphismSet::split(),
        }
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Partition of the root ids into `W ⋊ auts` orbits.
pub fn root_orbits(rs: &RootSystem, auts: &AutomorphismSet) -> Vec<Vec<usize>> {
    let nroots = rs.roots().len();
    let mut class = vec![usize::MAX; nroots];
    let mut out = Vec::new();
    for start in 0..nroots {
        if class[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![start];
        class[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(r) = queue.pop_front() {
            let mut next: Vec<usize> = (0..rs.rank())
                .filter_map(|i| rs.reflect_root(r, i))
                .collect();
            for perm in auts.generators() {
                let src = rs.root(r).simple_coords();
                let mut c = vec![0i64; src.len()];
                for (i, &x) in src.iter().enumerate() {
                    c[perm[i]] = x;
                }
                next.extend(rs.find_root(&c));
            }
            for t in next {
                if class[t] == usize::MAX {
                    class[t] = id;
                    members.push(t);
                    queue.push_back(t);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// The dominant W-conjugate of `mu`.
pub fn dominant_normalize(rs: &RootSystem, mu: &Coweight) -> Coweight {
    let mut m = mu.clone();
    while let Some(i) = m.coords().iter().position(Signed::is_negative) {
        m = rs.simple_reflect_coweight(&m, i);
    }
    m
}

/// `{alpha_i : <alpha_i, mu> = 0}` as node indices.
pub fn levi_type(rs: &RootSystem, mu: &Coweight) -> Result<Vec<usize>> {
    if mu.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: mu.rank(),
        });
    }
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.to_string()));
    }
    Ok((0..rs.rank())
        .filter(|&i| mu.coords()[i].is_zero())
        .collect())
}

/// Max over orbits of `max |v| / min_{v ≠ 0} |v|`, or `None` if every value
/// vanishes.
fn max_orbit_ratio(orbits: &[Vec<usize>], value: impl Fn(usize) -> Rational) -> Option<Rational> {
    let mut best: Option<Rational> = None;
    for orbit in orbits {
        let mut hi = Rational::zero();
        let mut lo: Option<Rational> = None;
        for &r in orbit {
            let v = value(r).abs();
            if v.is_zero() {
                continue;
            }
            if v > hi {
                hi = v.clone();
            }
            if lo.as_ref().is_none_or(|l| v < *l) {
                lo = Some(v);
            }
        }
        if let Some(lo) = lo {
            let ratio = hi / lo;
            if best.as_ref().is_none_or(|b| ratio > *b) {
                best = Some(ratio);
            }
        }
    }
    best
}

/// Largest `|<sigma alpha, mu> / <alpha, mu>|` over `sigma ∈ W ⋊ auts` and
/// roots with `<alpha, mu> ≠ 0`; `None` for central `mu`.
pub fn max_pairing_ratio(
    rs: &RootSystem,
    mu: &Coweight,
    auts: &AutomorphismSet,
) -> Option<Rational> {
    let orbits = root_orbits(rs, auts);
    max_orbit_ratio(&orbits, |r| rs.root(r).pair_coweight(mu))
}

/// Same ratio for a character given by simple-coroot pairings, measured
/// against all coroots.
pub fn character_max_ratio(
    rs: &RootSystem,
    pairings: &[Rational],
    auts: &AutomorphismSet,
) -> Option<Rational> {
    let orbits = root_orbits(rs, auts);
    max_orbit_ratio(&orbits, |r| {
        rs.root(r)
            .coroot_coords()
            .iter()
            .zip(pairings)
            .fold(Rational::zero(), |acc, (&c, g)| acc + g * rat(c))
    })
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidPrime(p))
    }
}

fn ratio_within(ratio: &Option<Rational>, bound: u64) -> bool {
    ratio.as_ref().is_none_or(|r| *r <= rat(bound as i64))
}

pub fn orbitally_p_close(
    rs: &RootSystem,
    mu: &Coweight,
    p: u64,
    auts: &AutomorphismSet,
) -> Result<bool> {
    check_prime(p)?;
    Ok(ratio_within(&max_pairing_ratio(rs, mu, auts), p - 1))
}

pub fn quasi_constant(rs: &RootSystem, mu: &Coweight, auts: &AutomorphismSet) -> bool {
    max_pairing_ratio(rs, mu, auts).is_none_or(|r| r <= Rational::one())
}

/// Smallest prime `p` for which `mu` is orbitally p-close.
pub fn min_admissible_prime(rs: &RootSystem, mu: &Coweight, auts: &AutomorphismSet) -> u64 {
    let ratio = max_pairing_ratio(rs, mu, auts);
    (2u64..)
        .filter(|&p| is_prime(p))
        .find(|&p| ratio_within(&ratio, p - 1))
        .expect("ratios are finite")
}

/// Every root pairs into `{-1, 0, 1}` with `mu`.
pub fn is_minuscule(rs: &RootSystem, mu: &Coweight) -> bool {
    rs.positive_roots()
        .all(|r| r.pair_coweight(mu).abs() <= Rational::one())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PCloseEquivalence {
    pub mu_side: bool,
    pub grif_side: bool,
    pub mu_ratio: Option<Rational>,
    pub grif_ratio: Option<Rational>,
}

/// Orbital p-closeness of `mu` and of its Griffiths character; a mismatch in
/// the verdicts raises [`Error::EquivalenceViolated`].
pub fn grif_p_close_equiv(ws: &WeightSystem, mu: &Coweight, p: u64) -> Result<(bool, bool)> {
    let e = grif_p_close_equiv_with(ws, mu, p, &AutomorphismSet::split())?;
    Ok((e.mu_side, e.grif_side))
}

pub fn grif_p_close_equiv_with(
    ws: &WeightSystem,
    mu: &Coweight,
    p: u64,
    auts: &AutomorphismSet,
) -> Result<PCloseEquivalence> {
    check_prime(p)?;
    if mu.is_central() {
        return Err(Error::CentralMu);
    }
    let rs = ws.root_system();
    let grif = grif_pairings_direct(ws, mu)?;
    let orbits = root_orbits(rs, auts);
    p_close_equivalence(rs, mu, &grif, p, &orbits)
}

/// The comparison behind [`grif_p_close_equiv`] for a precomputed Griffiths
/// pairing vector and precomputed root orbits.
pub fn p_close_equivalence(
    rs: &RootSystem,
    mu: &Coweight,
    grif: &[Rational],
    p: u64,
    orbits: &[Vec<usize>],
) -> Result<PCloseEquivalence> {
    check_prime(p)?;
    let (mu_ratio, grif_ratio) = p_close_ratios(rs, mu, grif, orbits);
    PCloseEquivalence::at(mu, mu_ratio, grif_ratio, p)
}

/// Maximal orbit ratios of `mu` and of the character `grif`; neither depends
/// on `p`.
pub fn p_close_ratios(
    rs: &RootSystem,
    mu: &Coweight,
    grif: &[Rational],
    orbits: &[Vec<usize>],
) -> (Option<Rational>, Option<Rational>) {
    let mu_ratio = max_orbit_ratio(orbits, |r| rs.root(r).pair_coweight(mu));
    let grif_ratio = max_orbit_ratio(orbits, |r| {
        rs.root(r)
            .coroot_coords()
            .iter()
            .zip(grif)
            .fold(Rational::zero(), |acc, (&c, g)| acc + g * rat(c))
    });
    (mu_ratio, grif_ratio)
}

impl PCloseEquivalence {
    /// Verdicts at `p` from precomputed ratios.
    pub fn at(
        mu: &Coweight,
        mu_ratio: Option<Rational>,
        grif_ratio: Option<Rational>,
        p: u64,
    ) -> Result<Self> {
        check_prime(p)?;
        let mu_side = ratio_within(&mu_ratio, p - 1);
        let grif_side = ratio_within(&grif_ratio, p - 1);
        if mu_side != grif_side {
            return Err(Error::EquivalenceViolated(format!(
                "mu {mu} at p = {p}: cocharacter side {mu_side}, character side {grif_side}"
            )));
        }
        Ok(PCloseEquivalence {
            mu_side,
            grif_side,
            mu_ratio,
            grif_ratio,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repweights::adjoint_weight_system;
    use crate::rootdata::RootSystemSpec;
    use std::sync::Arc;

    fn rs(f: Family, n: usize) -> Arc<RootSystem> {
        Arc::new(RootSystem::new(RootSystemSpec::new(f, n).unwrap()).unwrap())
    }

    fn mu(v: &[i64]) -> Coweight {
        Coweight::from_ints(v)
    }

    #[test]
    fn normalize_examples() {
        let a1 = rs(Family::A, 1);
        assert_eq!(dominant_normalize(&a1, &mu(&[-1])), mu(&[1]));
        let a2 = rs(Family::A, 2);
        assert_eq!(dominant_normalize(&a2, &mu(&[2, 1])), mu(&[2, 1]));
        assert_eq!(dominant_normalize(&a2, &mu(&[-1, 2])), mu(&[1, 1]));
    }

    #[test]
    fn levi_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(levi_type(&a2, &mu(&[1, 1])).unwrap(), Vec::<usize>::new());
        assert_eq!(levi_type(&a2, &mu(&[1, 0])).unwrap(), vec![1]);
        assert_eq!(levi_type(&a2, &mu(&[0, 0])).unwrap(), vec![0, 1]);
        assert!(matches!(
            levi_type(&a2, &mu(&[-1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn p_close_examples() {
        let a2 = rs(Family::A, 2);
        let split = AutomorphismSet::split();
        for p in [2, 3, 5, 7] {
            assert!(orbitally_p_close(&a2, &mu(&[1, 0]), p, &split).unwrap());
            assert!(orbitally_p_close(&a2, &mu(&[0, 0]), p, &split).unwrap());
        }
        assert!(!orbitally_p_close(&a2, &mu(&[1, 1]), 2, &split).unwrap());
        assert!(orbitally_p_close(&a2, &mu(&[1, 1]), 3, &split).unwrap());
        assert_eq!(min_admissible_prime(&a2, &mu(&[1, 1]), &split), 3);
        assert_eq!(
            orbitally_p_close(&a2, &mu(&[1, 1]), 4, &split),
            Err(Error::InvalidPrime(4))
        );
        assert_eq!(
            orbitally_p_close(&a2, &mu(&[1, 1]), 1, &split),
            Err(Error::InvalidPrime(1))
        );
    }

    #[test]
    fn quasi_constant_and_minuscule_examples() {
        let split = AutomorphismSet::split();
        let a2 = rs(Family::A, 2);
        assert!(quasi_constant(&a2, &mu(&[1, 0]), &split));
        assert!(!quasi_constant(&a2, &mu(&[1, 1]), &split));
        let b2 = rs(Family::B, 2);
        assert!(quasi_constant(&b2, &mu(&[1, 0]), &split));
        assert!(is_minuscule(&a2, &mu(&[1, 0])));
        assert!(!is_minuscule(&a2, &mu(&[1, 1])));
        assert!(is_minuscule(&a2, &mu(&[0, 0])));
    }

    #[test]
    fn orbits_are_length_classes() {
        let split = AutomorphismSet::split();
        for (f, n, k) in [(Family::A, 3, 1), (Family::B, 3, 2), (Family::G, 2, 2)] {
            let r = rs(f, n);
            assert_eq!(root_orbits(&r, &split).len(), k);
            let inv = AutomorphismSet::standard_involution(&r);
            assert_eq!(root_orbits(&r, &inv).len(), k);
        }
    }

    #[test]
    fn automorphisms_are_validated() {
        let a3 = rs(Family::A, 3);
        assert!(AutomorphismSet::new(&a3, vec![vec![2, 1, 0]]).is_ok());
        assert!(AutomorphismSet::new(&a3, vec![vec![1, 0, 2]]).is_err());
        assert!(AutomorphismSet::new(&a3, vec![vec![0, 0, 2]]).is_err());
        assert!(AutomorphismSet::new(&a3, vec![vec![0, 1]]).is_err());
        let b3 = rs(Family::B, 3);
        assert!(AutomorphismSet::new(&b3, vec![vec![2, 1, 0]]).is_err());
        let e6 = rs(Family::E, 6);
        assert!(!AutomorphismSet::standard_involution(&e6).is_empty());
    }

    #[test]
    fn grif_equivalence_examples() {
        let ad = adjoint_weight_system(&rs(Family::A, 2));
        assert_eq!(
            grif_p_close_equiv(&ad, &mu(&[1, 0]), 2).unwrap(),
            (true, true)
        );
        assert_eq!(
            grif_p_close_equiv(&ad, &mu(&[1, 1]), 2).unwrap(),
            (false, false)
        );
        assert_eq!(
            grif_p_close_equiv(&ad, &mu(&[1, 1]), 3).unwrap(),
            (true, true)
        );
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..20).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}

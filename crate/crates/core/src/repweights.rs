//! Weight systems `Φ(V, T)` with multiplicities `m_V(chi)`.
//!
//! Irreducible systems come from Freudenthal's recursion on dominant weights
//! followed by W-orbit expansion; the adjoint system is written down
//! directly. Weights are kept in one flat, lexicographically sorted buffer so
//! that sweeps over large systems stay cache friendly.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, Rational};
use crate::rootdata::{RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepLabel {
    Adjoint,
    HighestWeight(Weight),
    DirectSum(Vec<RepLabel>),
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::Adjoint => write!(f, "ad"),
            RepLabel::HighestWeight(w) => {
                write!(f, "hw:")?;
                for (i, x) in w.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            RepLabel::DirectSum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct WeightSystem {
    rs: Arc<RootSystem>,
    label: RepLabel,
    rank: usize,
    flat: Vec<i64>,
    mults: Vec<u64>,
    dimension: u64,
    max_abs: i64,
}

impl WeightSystem {
    /// Builds a system from an arbitrary multiplicity map; zero entries are
    /// dropped and repeated weights are merged.
    pub fn from_multiplicities(
        rs: Arc<RootSystem>,
        label: RepLabel,
        entries: impl IntoIterator<Item = (Weight, u64)>,
    ) -> Result<Self> {
        let rank = rs.rank();
        let mut merged: HashMap<Weight, u64> = HashMap::new();
        for (w, m) in entries {
            if w.len() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    got: w.len(),
                });
            }
            if m > 0 {
                let slot = merged.entry(w).or_insert(0);
                *slot = slot.checked_add(m).ok_or(Error::Overflow("multiplicity"))?;
            }
        }
        let mut sorted: Vec<(Weight, u64)> = merged.into_iter().collect();
        sorted.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut flat = Vec::with_capacity(sorted.len() * rank);
        let mut mults = Vec::with_capacity(sorted.len());
        let mut dimension: u64 = 0;
        for (w, m) in sorted {
            flat.extend_from_slice(&w);
            mults.push(m);
            dimension = dimension
                .checked_add(m)
                .ok_or(Error::Overflow("dimension"))?;
        }
        let max_abs = flat.iter().map(|x: &i64| x.abs()).max().unwrap_or(0);
        Ok(WeightSystem {
            rs,
            label,
            rank,
            flat,
            mults,
            dimension,
            max_abs,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn label(&self) -> &RepLabel {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn dimension(&self) -> u64 {
        self.dimension
    }

    /// Largest absolute weight coordinate.
    pub fn max_abs_coord(&self) -> i64 {
        self.max_abs
    }

    pub fn weight_coords(&self, idx: usize) -> &[i64] {
        &self.flat[idx * self.rank..(idx + 1) * self.rank]
    }

    pub fn multiplicity_at(&self, idx: usize) -> u64 {
        self.mults[idx]
    }

    /// `(coords, multiplicity)` in lexicographic weight order.
    pub fn iter(&self) -> impl Iterator<Item = (&[i64], u64)> + '_ {
        self.flat
            .chunks_exact(self.rank.max(1))
            .zip(self.mults.iter().copied())
    }

    pub fn weights(&self) -> impl Iterator<Item = (Weight, u64)> + '_ {
        self.iter()
            .map(|(c, m)| (Weight::new(c.iter().copied()), m))
    }

    pub fn multiplicity(&self, chi: &[i64]) -> u64 {
        if chi.len() != self.rank {
            return 0;
        }
        let (mut lo, mut hi) = (0usize, self.mults.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.weight_coords(mid).cmp(chi) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return self.mults[mid],
            }
        }
        0
    }

    /// `Σ m(chi) chi`, coordinatewise.
    pub fn weighted_sum(&self) -> Vec<i128> {
        let mut acc = vec![0i128; self.rank];
        for (c, m) in self.iter() {
            for (a, &x) in acc.iter_mut().zip(c) {
                *a += m as i128 * x as i128;
            }
        }
        acc
    }

    /// Rank of the span of the weights.
    pub fn span_rank(&self) -> usize {
        // incremental elimination over Q, stops once full rank is reached
        let n = self.rank;
        let mut basis: Vec<(usize, Vec<Rational>)> = Vec::new();
        for (c, _) in self.iter() {
            let mut v: Vec<Rational> = c.iter().map(|&x| rat(x)).collect();
            for (pivot, b) in &basis {
                if !v[*pivot].is_zero() {
                    let f = &v[*pivot] / &b[*pivot];
                    for j in 0..n {
                        let t = &b[j] * &f;
                        v[j] -= t;
                    }
                }
            }
            if let Some(p) = v.iter().position(|x| !x.is_zero()) {
                basis.push((p, v));
                if basis.len() == n {
                    break;
                }
            }
        }
        basis.len()
    }

    /// Direct sum of systems over the same root system.
    pub fn direct_sum(parts: &[WeightSystem]) -> Result<WeightSystem> {
        let first = parts.first().ok_or(Error::EmptySystem)?;
        let rs = first.rs.clone();
        let mut entries = Vec::new();
        for p in parts {
            if p.rs.spec() != rs.spec() {
                return Err(Error::DimensionMismatch {
                    expected: rs.rank(),
                    got: p.rank,
                });
            }
            entries.extend(p.weights());
        }
        let label = RepLabel::DirectSum(parts.iter().map(|p| p.label.clone()).collect());
        WeightSystem::from_multiplicities(rs, label, entries)
    }
}

/// Roots with multiplicity one and the zero weight with multiplicity `rank`.
pub fn adjoint_weight_system(rs: &Arc<RootSystem>) -> WeightSystem {
    let entries = rs
        .roots()
        .iter()
        .map(|r| (r.weight().clone(), 1))
        .chain(std::iter::once((Weight::zero(rs.rank()), rs.rank() as u64)));
    WeightSystem::from_multiplicities(rs.clone(), RepLabel::Adjoint, entries)
        .expect("adjoint weights are well formed")
}

fn check_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: lambda.len(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// `Π_{alpha > 0} <lambda + rho, alpha^vee> / <rho, alpha^vee>`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    check_dominant(rs, lambda)?;
    let shifted = lambda.add(&rs.rho());
    let rho = rs.rho();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for alpha in rs.positive_roots() {
        num *= alpha.pair(&shifted);
        den *= alpha.pair(&rho);
    }
    let q = Rational::new(num, den);
    debug_assert!(q.is_integer());
    Ok(q.to_integer())
}

/// Integer-scaled invariant form: `scale * (x, y)` for a fixed positive `scale`.
struct ScaledForm {
    gram: Vec<Vec<i128>>,
}

impl ScaledForm {
    fn new(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let g = rs.weight_gram();
        let mut lcm = BigInt::from(1);
        for i in 0..n {
            for j in 0..n {
                lcm = num_integer::Integer::lcm(&lcm, g.get(i, j).denom());
            }
        }
        let scale = Rational::from_integer(lcm);
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (g.get(i, j) * &scale)
                            .to_integer()
                            .to_i128()
                            .expect("small Gram entries")
                    })
                    .collect()
            })
            .collect();
        ScaledForm { gram }
    }

    #[inline]
    fn eval(&self, x: &[i64], y: &[i64]) -> i128 {
        let mut acc = 0i128;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let row = &self.gram[i];
            let mut s = 0i128;
            for (j, &yj) in y.iter().enumerate() {
                s += row[j] * yj as i128;
            }
            acc += xi as i128 * s;
        }
        acc
    }
}

/// Dominant weights `mu <= lambda` in the root-lattice coset of `lambda`,
/// ordered by increasing depth below `lambda`.
pub fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    check_dominant(rs, lambda)?;
    // every dominant mu <= lambda is reached by subtracting positive roots
    // through dominant weights only
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut stack = vec![lambda.clone()];
    seen.insert(lambda.clone());
    while let Some(mu) = stack.pop() {
        for alpha in rs.positive_roots() {
            let nu = mu.sub(alpha.weight());
            if nu.is_dominant() && seen.insert(nu.clone()) {
                stack.push(nu);
            }
        }
    }
    let mut out: Vec<(i64, Weight)> = seen
        .into_iter()
        .map(|mu| {
            let depth: Rational = rs
                .to_simple_root_coords(&lambda.sub(&mu))
                .into_iter()
                .fold(Rational::zero(), |a, b| a + b);
            (depth.to_integer().to_i64().expect("small depth"), mu)
        })
        .collect();
    out.sort();
    Ok(out.into_iter().map(|(_, w)| w).collect())
}

/// Freudenthal multiplicities of the dominant weights of `V(lambda)`.
pub fn dominant_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<Vec<(Weight, u64)>> {
    let dominants = dominant_weights_below(rs, lambda)?;
    let form = ScaledForm::new(rs);
    let rho = rs.rho();
    let top = {
        let s = lambda.add(&rho);
        form.eval(&s, &s)
    };
    let pos: Vec<&[i64]> = rs.positive_roots().map(|r| r.weight().coords()).collect();
    let mut table: HashMap<Weight, u64> = HashMap::with_capacity(dominants.len());
    let mut out = Vec::with_capacity(dominants.len());
    let mut nu = Weight::zero(rs.rank());
    for mu in dominants {
        if &mu == lambda {
            table.insert(mu.clone(), 1);
            out.push((mu, 1));
            continue;
        }
        let mut num: i128 = 0;
        for alpha in &pos {
            let mut k = 1i64;
            loop {
                for (i, v) in nu.coords_mut().iter_mut().enumerate() {
                    *v = mu[i] + k * alpha[i];
                }
                let dom = rs.dominant_representative(&nu);
                let Some(&m) = table.get(&dom) else { break };
                num = (m as i128)
                    .checked_mul(form.eval(&nu, alpha))
                    .and_then(|t| num.checked_add(t))
                    .ok_or(Error::Overflow("Freudenthal numerator"))?;
                k += 1;
            }
        }
        num *= 2;
        let shifted = mu.add(&rho);
        let den = top - form.eval(&shifted, &shifted);
        if den <= 0 || num % den != 0 {
            return Err(Error::InvariantViolated(format!(
                "Freudenthal step at {mu} is not an exact positive quotient"
            )));
        }
        let m = u64::try_from(num / den).map_err(|_| Error::Overflow("multiplicity"))?;
        table.insert(mu.clone(), m);
        if m > 0 {
            out.push((mu, m));
        }
    }
    Ok(out)
}

/// Weight system of the irreducible representation of highest weight `lambda`.
pub fn irrep_weight_system(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<WeightSystem> {
    let dominant = dominant_multiplicities(rs, lambda)?;
    let mut entries = Vec::new();
    for (mu, m) in dominant {
        for w in rs.weyl_orbit(&mu) {
            entries.push((w, m));
        }
    }
    WeightSystem::from_multiplicities(rs.clone(), RepLabel::HighestWeight(lambda.clone()), entries)
}

/// Direct sum of irreducibles `V(lambda_1) ⊕ ... ⊕ V(lambda_k)`.
pub fn sum_weight_system(rs: &Arc<RootSystem>, lambdas: &[Weight]) -> Result<WeightSystem> {
    let parts = lambdas
        .iter()
        .map(|l| irrep_weight_system(rs, l))
        .collect::<Result<Vec<_>>>()?;
    if parts.len() == 1 {
        return Ok(parts.into_iter().next().unwrap());
    }
    WeightSystem::direct_sum(&parts)
}

/// Every simple coroot pairs nonzero with some weight.
pub fn has_central_kernel(ws: &WeightSystem) -> bool {
    (0..ws.rank()).all(|i| ws.iter().any(|(c, _)| c[i] != 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{Family, RootSystemSpec};

    fn rs(f: Family, n: usize) -> Arc<RootSystem> {
        Arc::new(RootSystem::new(RootSystemSpec::new(f, n).unwrap()).unwrap())
    }

    #[test]
    fn adjoint_a1() {
        let ws = adjoint_weight_system(&rs(Family::A, 1));
        let w: Vec<(Weight, u64)> = ws.weights().collect();
        assert_eq!(
            w,
            vec![
                (Weight::new([-2]), 1),
                (Weight::new([0]), 1),
                (Weight::new([2]), 1)
            ]
        );
        assert_eq!(ws.dimension(), 3);
    }

    #[test]
    fn adjoint_dimensions() {
        let a2 = adjoint_weight_system(&rs(Family::A, 2));
        assert_eq!(a2.dimension(), 8);
        assert_eq!(a2.multiplicity(&[0, 0]), 2);
        assert_eq!(adjoint_weight_system(&rs(Family::E, 8)).dimension(), 248);
    }

    #[test]
    fn irrep_small_examples() {
        let a1 = rs(Family::A, 1);
        let ws = irrep_weight_system(&a1, &Weight::new([1])).unwrap();
        let w: Vec<(Weight, u64)> = ws.weights().collect();
        assert_eq!(w, vec![(Weight::new([-1]), 1), (Weight::new([1]), 1)]);

        let a2 = rs(Family::A, 2);
        let ws = irrep_weight_system(&a2, &Weight::new([1, 1])).unwrap();
        let ad = adjoint_weight_system(&a2);
        assert_eq!(
            ws.weights().collect::<Vec<_>>(),
            ad.weights().collect::<Vec<_>>()
        );

        let c2 = rs(Family::C, 2);
        let ws = irrep_weight_system(&c2, &Weight::new([1, 0])).unwrap();
        assert_eq!(ws.len(), 4);
        assert!(ws.iter().all(|(_, m)| m == 1));
        let mut orbit: Vec<Weight> = c2.weyl_orbit(&Weight::new([1, 0]));
        orbit.sort();
        assert_eq!(ws.weights().map(|(w, _)| w).collect::<Vec<_>>(), orbit);
    }

    #[test]
    fn not_dominant_is_rejected() {
        let a2 = rs(Family::A, 2);
        assert!(matches!(
            irrep_weight_system(&a2, &Weight::new([1, -1])),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(
            weyl_dimension(&a2, &Weight::new([-1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn weyl_dimension_examples() {
        for (f, n) in [(Family::A, 3), (Family::G, 2), (Family::E, 6)] {
            let r = rs(f, n);
            assert_eq!(
                weyl_dimension(&r, &Weight::zero(n)).unwrap(),
                BigInt::from(1)
            );
        }
        assert_eq!(
            weyl_dimension(&rs(Family::A, 2), &Weight::new([1, 1])).unwrap(),
            BigInt::from(8)
        );
        assert_eq!(
            weyl_dimension(&rs(Family::A, 3), &Weight::new([0, 1, 0])).unwrap(),
            BigInt::from(6)
        );
    }

    #[test]
    fn freudenthal_matches_known_g2_multiplicities() {
        // V(1,0) of G2 is 7-dimensional with the zero weight once.
        let g2 = rs(Family::G, 2);
        let ws = irrep_weight_system(&g2, &Weight::new([1, 0])).unwrap();
        assert_eq!(ws.dimension(), 7);
        assert_eq!(ws.multiplicity(&[0, 0]), 1);
        // adjoint V(0,1): zero weight twice
        let ws = irrep_weight_system(&g2, &Weight::new([0, 1])).unwrap();
        assert_eq!(ws.dimension(), 14);
        assert_eq!(ws.multiplicity(&[0, 0]), 2);
    }

    #[test]
    fn central_kernel_examples() {
        let a2 = rs(Family::A, 2);
        assert!(has_central_kernel(&adjoint_weight_system(&a2)));
        let triv = irrep_weight_system(&a2, &Weight::zero(2)).unwrap();
        assert!(!has_central_kernel(&triv));
        let std = irrep_weight_system(&a2, &Weight::new([1, 0])).unwrap();
        assert!(has_central_kernel(&std));
        let mut p1: Vec<i64> = std.iter().map(|(c, _)| c[0]).collect();
        p1.sort();
        assert_eq!(p1, vec![-1, 0, 1]);
    }

    #[test]
    fn direct_sum_adds_multiplicities() {
        let a1 = rs(Family::A, 1);
        let ws = sum_weight_system(&a1, &[Weight::new([1]), Weight::new([1])]).unwrap();
        assert_eq!(ws.multiplicity(&[1]), 2);
        assert_eq!(ws.dimension(), 4);
    }

    #[test]
    fn span_rank_of_trivial_is_zero() {
        let a2 = rs(Family::A, 2);
        let triv = irrep_weight_system(&a2, &Weight::zero(2)).unwrap();
        assert_eq!(triv.span_rank(), 0);
        assert_eq!(adjoint_weight_system(&a2).span_rank(), 2);
    }
}

//! Griffiths module and character of a triple `(G, mu, r)`.
//!
//! `r` is a [`WeightSystem`], `mu` a dominant [`Coweight`]. The Griffiths
//! module has weight multiplicities `m_V(chi) ((r∘mu)_max - <chi, mu>)`; the
//! Griffiths character is its determinant and is represented by its pairings
//! with the simple coroots.
//!
//! Two routes to those pairings are provided: [`grif_pairings_direct`] sums
//! over the module, [`grif_pairings_closed`] evaluates
//! `-1/2 <alpha, mu> S(alpha^vee, r)`. They share no code past the weight
//! system itself.

use num_traits::{Signed, Zero};

use crate::cochar;
use crate::error::{Error, Result};
use crate::exact::{common_denominator, frac, rat, rat_i128, RatMatrix, Rational};
use crate::repweights::{has_central_kernel, WeightSystem};
use crate::rootdata::{Coweight, Root, RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GriffithsModule {
    pub mu: Coweight,
    /// `(r∘mu)_max`.
    pub mu_max: Rational,
    /// Every weight of the base system with its Griffiths multiplicity
    /// (possibly zero), in the base system's order.
    pub mults: Vec<(Weight, Rational)>,
}

impl GriffithsModule {
    pub fn total(&self) -> Rational {
        self.mults
            .iter()
            .fold(Rational::zero(), |acc, (_, m)| acc + m)
    }

    pub fn multiplicity(&self, chi: &Weight) -> Rational {
        self.mults
            .iter()
            .find(|(w, _)| w == chi)
            .map_or_else(Rational::zero, |(_, m)| m.clone())
    }

    /// `det Grif` paired with each simple coroot.
    pub fn determinant_pairings(&self) -> Vec<Rational> {
        let n = self.mu.rank();
        let mut out = vec![Rational::zero(); n];
        for (w, m) in &self.mults {
            for (o, &x) in out.iter_mut().zip(w.iter()) {
                *o += m * rat(x);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GriffithsReport {
    pub mu: Coweight,
    /// `<grif, alpha_i^vee>` summed over the Griffiths module.
    pub grif_pairings: Vec<Rational>,
    /// Same, from the closed form.
    pub closed_pairings: Vec<Rational>,
    /// `S(alpha_i^vee, r)` per simple root.
    pub s_values: Vec<Rational>,
    /// `(alpha, alpha) S(alpha^vee, r)`, constant over all roots.
    pub length_invariant: Rational,
    /// `grif_i = -c m_i / d_i`.
    pub c: Rational,
    /// Simple roots pairing to zero with `mu` (0-based node indices).
    pub levi: Vec<usize>,
    pub ray_ok: bool,
    pub direct_eq_closed: bool,
    pub anti_dominant: bool,
}

fn check_coweight(rs: &RootSystem, mu: &Coweight) -> Result<()> {
    if mu.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: mu.rank(),
        });
    }
    Ok(())
}

fn check_preconditions(ws: &WeightSystem, mu: &Coweight) -> Result<()> {
    check_coweight(ws.root_system(), mu)?;
    if !has_central_kernel(ws) {
        return Err(Error::CentralKernelViolated);
    }
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.to_string()));
    }
    Ok(())
}

/// `mu` pairings of all weights over a common denominator:
/// `<chi, mu> = (Σ_i chi_i num_i) / den`.
pub(crate) struct ScaledCoweight {
    pub den: i128,
    pub num: Vec<i128>,
}

impl ScaledCoweight {
    pub fn new(rs: &RootSystem, mu: &Coweight) -> Result<Self> {
        let w = rs.fundamental_pairings(mu)?;
        let (den, num) = common_denominator(&w).ok_or(Error::Overflow("coweight scaling"))?;
        Ok(ScaledCoweight { den, num })
    }

    #[inline]
    pub fn eval(&self, chi: &[i64]) -> i128 {
        chi.iter()
            .zip(&self.num)
            .map(|(&x, &w)| x as i128 * w)
            .sum()
    }
}

/// Largest and smallest `<chi, mu>` over the weights.
pub fn mu_weight_extremes(ws: &WeightSystem, mu: &Coweight) -> Result<(Rational, Rational)> {
    check_coweight(ws.root_system(), mu)?;
    if ws.is_empty() {
        return Err(Error::EmptySystem);
    }
    let scaled = ScaledCoweight::new(ws.root_system(), mu)?;
    let (mut hi, mut lo) = (i128::MIN, i128::MAX);
    for (c, _) in ws.iter() {
        let p = scaled.eval(c);
        hi = hi.max(p);
        lo = lo.min(p);
    }
    let den = rat_i128(scaled.den);
    Ok((rat_i128(hi) / &den, rat_i128(lo) / den))
}

pub fn griffiths_module(ws: &WeightSystem, mu: &Coweight) -> Result<GriffithsModule> {
    check_preconditions(ws, mu)?;
    let eta = ws.root_system().fundamental_pairings(mu)?;
    let (mu_max, _) = mu_weight_extremes(ws, mu)?;
    let mults = ws
        .weights()
        .map(|(w, m)| {
            let p = w
                .iter()
                .zip(&eta)
                .fold(Rational::zero(), |acc, (&x, e)| acc + e * rat(x));
            let g = (&mu_max - p) * Rational::from_integer(m.into());
            (w, g)
        })
        .collect();
    Ok(GriffithsModule {
        mu: mu.clone(),
        mu_max,
        mults,
    })
}

/// `Σ_chi m_V(chi) ((r∘mu)_max - <chi, mu>) <chi, alpha_i^vee>` by brute force.
pub fn grif_pairings_direct(ws: &WeightSystem, mu: &Coweight) -> Result<Vec<Rational>> {
    check_preconditions(ws, mu)?;
    if ws.is_empty() {
        return Err(Error::EmptySystem);
    }
    let scaled = ScaledCoweight::new(ws.root_system(), mu)?;
    let acc = match narrow_bound(ws, &scaled) {
        Some(num) => direct_i64(ws, &num),
        None => direct_i128(ws, &scaled)?,
    };
    let den = rat_i128(scaled.den);
    Ok(acc.into_iter().map(|a| rat_i128(a) / &den).collect())
}

/// The scaled coweight as `i64` when every intermediate of [`direct_i64`]
/// provably fits.
fn narrow_bound(ws: &WeightSystem, scaled: &ScaledCoweight) -> Option<Vec<i64>> {
    let x = ws.max_abs_coord() as i128;
    let w: i128 = scaled.num.iter().map(|v| v.abs()).sum();
    // |gap| <= 2xw, and Σ m |gap| |chi_i| <= dim * 2xw * x
    let bound = (ws.dimension() as i128)
        .checked_mul(2)?
        .checked_mul(x.checked_mul(x)?)?
        .checked_mul(w)?;
    if bound >= i64::MAX as i128 {
        return None;
    }
    scaled.num.iter().map(|&v| i64::try_from(v).ok()).collect()
}

fn direct_i64(ws: &WeightSystem, num: &[i64]) -> Vec<i128> {
    let evals: Vec<i64> = ws
        .iter()
        .map(|(c, _)| c.iter().zip(num).map(|(&x, &w)| x * w).sum())
        .collect();
    let max = *evals.iter().max().expect("nonempty");
    let mut acc = vec![0i64; ws.rank()];
    for ((c, m), e) in ws.iter().zip(&evals) {
        let weight = m as i64 * (max - e);
        for (a, &x) in acc.iter_mut().zip(c) {
            *a += weight * x;
        }
    }
    acc.into_iter().map(i128::from).collect()
}

fn direct_i128(ws: &WeightSystem, scaled: &ScaledCoweight) -> Result<Vec<i128>> {
    let max = ws
        .iter()
        .map(|(c, _)| scaled.eval(c))
        .max()
        .ok_or(Error::EmptySystem)?;
    let mut acc = vec![0i128; ws.rank()];
    for (c, m) in ws.iter() {
        let gap = max - scaled.eval(c);
        if gap == 0 {
            continue;
        }
        let weight = (m as i128)
            .checked_mul(gap)
            .ok_or(Error::Overflow("Griffiths multiplicity"))?;
        for (a, &x) in acc.iter_mut().zip(c) {
            *a = weight
                .checked_mul(x as i128)
                .and_then(|t| a.checked_add(t))
                .ok_or(Error::Overflow("Griffiths pairing"))?;
        }
    }
    Ok(acc)
}

/// `S(gamma^vee, r) = Σ_chi m(chi) <chi, gamma^vee>^2`.
pub fn weight_pairing_sum(ws: &WeightSystem, gamma: &Root) -> Rational {
    rat_i128(weight_pairing_sum_int(ws, gamma))
}

pub(crate) fn weight_pairing_sum_int(ws: &WeightSystem, gamma: &Root) -> i128 {
    ws.iter()
        .map(|(c, m)| {
            let p = gamma.pair(c) as i128;
            m as i128 * p * p
        })
        .sum()
}

/// `S(alpha_i^vee, r)` for every simple root.
pub fn simple_s_values(ws: &WeightSystem) -> Vec<Rational> {
    let rs = ws.root_system();
    (0..rs.rank())
        .map(|i| weight_pairing_sum(ws, rs.simple_root(i)))
        .collect()
}

/// `-1/2 <alpha_i, mu> S(alpha_i^vee, r)`.
pub fn grif_pairings_closed(ws: &WeightSystem, mu: &Coweight) -> Result<Vec<Rational>> {
    check_preconditions(ws, mu)?;
    Ok(closed_from_s_values(&simple_s_values(ws), mu))
}

/// Closed form from precomputed `S(alpha_i^vee, r)`.
pub fn closed_from_s_values(s_values: &[Rational], mu: &Coweight) -> Vec<Rational> {
    let half = frac(-1, 2);
    s_values
        .iter()
        .zip(mu.coords())
        .map(|(s, m)| &half * m * s)
        .collect()
}

/// `pairings_i = -c m_i / d_i` for every simple root.
pub fn ray_holds(rs: &RootSystem, pairings: &[Rational], mu: &Coweight, c: &Rational) -> bool {
    pairings
        .iter()
        .zip(mu.coords())
        .zip(rs.symmetrizer())
        .all(|((g, m), &d)| *g == -(c * m) / rat(d))
}

/// All pairings `<= 0`, strictly negative exactly off the Levi type.
pub fn is_anti_dominant_off_levi(pairings: &[Rational], mu: &Coweight) -> bool {
    pairings
        .iter()
        .zip(mu.coords())
        .all(|(g, m)| !g.is_positive() && (g.is_negative() == !m.is_zero()))
}

/// `(alpha, alpha) S(alpha^vee, r)`, checked to agree over every root.
pub fn length_invariant(ws: &WeightSystem) -> Result<Rational> {
    if !has_central_kernel(ws) {
        return Err(Error::CentralKernelViolated);
    }
    let rs = ws.root_system();
    let mut value: Option<i128> = None;
    for root in rs.roots() {
        let v = root.norm2() as i128 * weight_pairing_sum_int(ws, root);
        match value {
            None => value = Some(v),
            Some(prev) if prev != v => {
                return Err(Error::InvariantViolated(format!(
                    "(alpha,alpha) S(alpha^vee) = {v} at root {:?}, expected {prev}",
                    root.simple_coords()
                )))
            }
            _ => {}
        }
    }
    Ok(rat_i128(value.expect("root systems are nonempty")))
}

pub fn proportionality(ws: &WeightSystem, mu: &Coweight) -> Result<GriffithsReport> {
    check_preconditions(ws, mu)?;
    if mu.is_central() {
        return Err(Error::CentralMu);
    }
    let rs = ws.root_system();
    let grif_pairings = grif_pairings_direct(ws, mu)?;
    let s_values = simple_s_values(ws);
    let closed_pairings = closed_from_s_values(&s_values, mu);
    let length_invariant = length_invariant(ws)?;
    let c = &length_invariant / rat(4);
    let ray_ok = ray_holds(rs, &grif_pairings, mu, &c);
    let levi = cochar::levi_type(rs, mu)?;
    let anti_dominant = is_anti_dominant_off_levi(&grif_pairings, mu);
    Ok(GriffithsReport {
        mu: mu.clone(),
        direct_eq_closed: grif_pairings == closed_pairings,
        grif_pairings,
        closed_pairings,
        s_values,
        length_invariant,
        c,
        levi,
        ray_ok,
        anti_dominant,
    })
}

/// `(nu, nu')_V = Σ_chi m(chi) <chi, nu> <chi, nu'>`.
pub fn deligne_pairing(ws: &WeightSystem, nu: &Coweight, nu2: &Coweight) -> Result<Rational> {
    let rs = ws.root_system();
    check_coweight(rs, nu)?;
    check_coweight(rs, nu2)?;
    if !has_central_kernel(ws) {
        return Err(Error::CentralKernelViolated);
    }
    let a = ScaledCoweight::new(rs, nu)?;
    let b = ScaledCoweight::new(rs, nu2)?;
    let mut acc: i128 = 0;
    for (c, m) in ws.iter() {
        let t = (m as i128)
            .checked_mul(a.eval(c))
            .and_then(|t| t.checked_mul(b.eval(c)))
            .and_then(|t| acc.checked_add(t))
            .ok_or(Error::Overflow("Deligne pairing"))?;
        acc = t;
    }
    Ok(rat_i128(acc) / (rat_i128(a.den) * rat_i128(b.den)))
}

/// Gram matrix of `(,)_V` on the fundamental coweights.
pub fn deligne_gram(ws: &WeightSystem) -> Result<RatMatrix> {
    if !has_central_kernel(ws) {
        return Err(Error::CentralKernelViolated);
    }
    let rs = ws.root_system();
    let n = rs.rank();
    // <chi, nu_j> = Σ_i chi_i C^{-1}[i][j]; scale column-wise
    let basis: Vec<ScaledCoweight> = (0..n)
        .map(|j| ScaledCoweight::new(rs, &Coweight::fundamental(n, j)))
        .collect::<Result<_>>()?;
    let mut acc = vec![vec![0i128; n]; n];
    let mut p = vec![0i128; n];
    for (c, m) in ws.iter() {
        for (pj, b) in p.iter_mut().zip(&basis) {
            *pj = b.eval(c);
        }
        for i in 0..n {
            for j in i..n {
                acc[i][j] += m as i128 * p[i] * p[j];
            }
        }
    }
    let mut g = RatMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let v = rat_i128(acc[i][j]) / (rat_i128(basis[i].den) * rat_i128(basis[j].den));
            g.set(i, j, v.clone());
            g.set(j, i, v);
        }
    }
    Ok(g)
}

/// `<lambda, nu>` for a character given by its simple-coroot pairings.
pub fn character_coweight_pairing(
    rs: &RootSystem,
    pairings: &[Rational],
    nu: &Coweight,
) -> Result<Rational> {
    let w = rs.fundamental_pairings(nu)?;
    Ok(pairings
        .iter()
        .zip(&w)
        .fold(Rational::zero(), |acc, (g, wi)| acc + g * wi))
}

/// Pairing vector of `a` as a positive rational multiple of `b`, if it is one.
pub fn positive_multiple(a: &[Rational], b: &[Rational]) -> Option<Rational> {
    let (i, bi) = b.iter().enumerate().find(|(_, x)| !x.is_zero())?;
    let k = &a[i] / bi;
    if !k.is_positive() {
        return None;
    }
    a.iter().zip(b).all(|(x, y)| *x == &k * y).then_some(k)
}

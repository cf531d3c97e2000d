//! Irreducible root systems of types A through G.
//!
//! Conventions used throughout the crate:
//!
//! * Nodes follow Bourbaki numbering (0-based in code), and the Cartan matrix
//!   is `C[i][j] = <alpha_i, alpha_j^vee>`.
//! * A [`Weight`] is stored in the fundamental-weight basis, so coordinate `i`
//!   is `<chi, alpha_i^vee>`. The simple root `alpha_j` is row `j` of `C`.
//! * A [`Coweight`] is stored through its simple-root pairings
//!   `m_i = <alpha_i, mu>`; central components are discarded.
//! * The invariant form is normalized so that short roots have squared
//!   length 2, i.e. `(alpha_i, alpha_i) = 2 d_i` with `d` the symmetrizer.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::exact::{rat, RatMatrix, Rational};

pub type Coords = SmallVec<[i64; 8]>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn rank_is_legal(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(format!("unknown root system family {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemSpec {
    family: Family,
    rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.rank_is_legal(rank) {
            return Err(Error::IllegalRank { family, rank });
        }
        Ok(RootSystemSpec { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Bourbaki Cartan matrix, `C[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                // 1-3-4-5-...-n with 2 attached to 4 (1-based)
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            // alpha_n short
            Family::B => c[n - 2][n - 1] = -2,
            // alpha_n long
            Family::C => c[n - 1][n - 2] = -2,
            Family::F => c[1][2] = -2,
            Family::G => c[1][0] = -3,
            _ => {}
        }
        c
    }

    /// `d_i = (alpha_i, alpha_i) / 2`, short roots normalized to 1.
    pub fn symmetrizer(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![1; n],
            Family::B => (0..n).map(|i| if i + 1 < n { 2 } else { 1 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 < n { 1 } else { 2 }).collect(),
            Family::F => vec![2, 2, 1, 1],
            Family::G => vec![1, 3],
        }
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemSpec {
    type Err = String;

    /// Parses `A2`, `e8`, `B 3`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let head = chars.next().ok_or("empty root system name")?;
        let family: Family = head.to_string().parse()?;
        let rank: usize = chars
            .as_str()
            .trim()
            .parse()
            .map_err(|_| format!("bad rank in {s:?}"))?;
        RootSystemSpec::new(family, rank).map_err(|e| e.to_string())
    }
}

/// Integer vector in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Coords);

impl Weight {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        Weight(coords.into_iter().collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(smallvec::smallvec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scaled(-1)
    }
}

impl Deref for Weight {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A cocharacter up to central components: `coords[i] = <alpha_i, mu>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight(Vec<Rational>);

impl Coweight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Coweight(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Coweight(coords.iter().map(|&m| rat(m)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Coweight(vec![Rational::zero(); rank])
    }

    /// Fundamental coweight: pairs to 1 with `alpha_i`, 0 with the others.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut c = Self::zero(rank);
        c.0[i] = Rational::one();
        c
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|m| !m.is_negative())
    }

    pub fn is_central(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, k: &Rational) -> Coweight {
        Coweight(self.0.iter().map(|m| m * k).collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    simple: Coords,
    weight: Weight,
    coroot: Coords,
    norm2: i64,
    positive: bool,
}

impl Root {
    /// Coordinates in the simple-root basis.
    pub fn simple_coords(&self) -> &[i64] {
        &self.simple
    }

    /// Coordinates in the fundamental-weight basis.
    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    /// Coefficients of the coroot over the simple coroots.
    pub fn coroot_coords(&self) -> &[i64] {
        &self.coroot
    }

    /// `(alpha, alpha)`; 2 for short roots.
    pub fn norm2(&self) -> i64 {
        self.norm2
    }

    pub fn squared_length(&self) -> Rational {
        rat(self.norm2)
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }

    /// `<chi, alpha^vee>` with no dimension check.
    #[inline]
    pub fn pair(&self, chi: &[i64]) -> i64 {
        self.coroot.iter().zip(chi).map(|(c, x)| c * x).sum()
    }

    /// `<alpha, mu>` for a cocharacter given by simple-root pairings.
    pub fn pair_coweight(&self, mu: &Coweight) -> Rational {
        self.simple
            .iter()
            .zip(mu.coords())
            .fold(Rational::zero(), |acc, (&c, m)| acc + m * rat(c))
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: RootSystemSpec,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    cartan_inv: RatMatrix,
    weight_gram: RatMatrix,
    roots: Vec<Root>,
    index: HashMap<Coords, usize>,
    simple: Vec<usize>,
}

pub fn build_root_system(spec: RootSystemSpec) -> Result<RootSystem> {
    RootSystem::new(spec)
}

impl RootSystem {
    pub fn new(spec: RootSystemSpec) -> Result<Self> {
        if !spec.family.rank_is_legal(spec.rank) {
            return Err(Error::IllegalRank {
                family: spec.family,
                rank: spec.rank,
            });
        }
        let n = spec.rank;
        let cartan = spec.cartan();
        let symmetrizer = spec.symmetrizer();
        let cartan_inv = RatMatrix::from_int_rows(&cartan)
            .inverse()
            .expect("Cartan matrices of finite type are invertible");
        // (eta_i, eta_j) = C^{-1}[i][j] d_j
        let mut weight_gram = RatMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                weight_gram.set(i, j, cartan_inv.get(i, j) * rat(symmetrizer[j]));
            }
        }

        // Closure of the simple roots under simple reflections.
        let to_weight = |c: &Coords| -> Weight {
            Weight(
                (0..n)
                    .map(|i| (0..n).map(|j| c[j] * cartan[j][i]).sum())
                    .collect(),
            )
        };
        let mut seen: HashSet<Coords> = HashSet::new();
        let mut queue: VecDeque<Coords> = VecDeque::new();
        for i in 0..n {
            let mut c: Coords = smallvec::smallvec![0; n];
            c[i] = 1;
            seen.insert(c.clone());
            queue.push_back(c);
        }
        while let Some(c) = queue.pop_front() {
            let w = to_weight(&c);
            for i in 0..n {
                if w[i] == 0 {
                    continue;
                }
                let mut r = c.clone();
                r[i] -= w[i];
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }

        let mut simple_coords: Vec<Coords> = seen.into_iter().collect();
        simple_coords.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            let pa = ha > 0;
            let pb = hb > 0;
            // positives by increasing height, then negatives by increasing depth
            pb.cmp(&pa)
                .then_with(|| ha.abs().cmp(&hb.abs()))
                .then_with(|| {
                    let ka: Coords = a.iter().map(|x| x.abs()).collect();
                    let kb: Coords = b.iter().map(|x| x.abs()).collect();
                    kb.cmp(&ka)
                })
        });

        let mut roots = Vec::with_capacity(simple_coords.len());
        for c in simple_coords {
            let norm2: i64 = (0..n)
                .flat_map(|j| (0..n).map(move |k| (j, k)))
                .map(|(j, k)| c[j] * c[k] * symmetrizer[k] * cartan[j][k])
                .sum();
            let d_beta = norm2 / 2;
            let coroot: Coords = (0..n)
                .map(|j| {
                    let num = c[j] * symmetrizer[j];
                    debug_assert_eq!(num % d_beta, 0);
                    num / d_beta
                })
                .collect();
            let positive = c.iter().all(|&x| x >= 0);
            roots.push(Root {
                weight: to_weight(&c),
                simple: c,
                coroot,
                norm2,
                positive,
            });
        }
        let index: HashMap<Coords, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.simple.clone(), i))
            .collect();
        let simple = (0..n)
            .map(|i| {
                let mut c: Coords = smallvec::smallvec![0; n];
                c[i] = 1;
                index[&c]
            })
            .collect();

        Ok(RootSystem {
            spec,
            cartan,
            symmetrizer,
            cartan_inv,
            weight_gram,
            roots,
            index,
            simple,
        })
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn cartan_inverse(&self) -> &RatMatrix {
        &self.cartan_inv
    }

    /// Gram matrix `(eta_i, eta_j)` of the invariant form on fundamental weights.
    pub fn weight_gram(&self) -> &RatMatrix {
        &self.weight_gram
    }

    /// Gram matrix `(alpha_i, alpha_j) = d_j C[i][j]` on simple roots.
    pub fn simple_root_gram(&self) -> RatMatrix {
        let n = self.rank();
        let mut m = RatMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, rat(self.symmetrizer[j] * self.cartan[i][j]));
            }
        }
        m
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, id: usize) -> &Root {
        &self.roots[id]
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.positive)
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len() / 2
    }

    /// Index of `alpha_i` in [`RootSystem::roots`].
    pub fn simple_root_id(&self, i: usize) -> usize {
        self.simple[i]
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        &self.roots[self.simple[i]]
    }

    pub fn find_root(&self, simple_coords: &[i64]) -> Option<usize> {
        self.index.get(simple_coords).copied()
    }

    /// Index of `-alpha`.
    pub fn negative_of(&self, id: usize) -> usize {
        let neg: Coords = self.roots[id].simple.iter().map(|x| -x).collect();
        self.index[&neg]
    }

    pub fn highest_root(&self) -> &Root {
        self.roots
            .iter()
            .filter(|r| r.positive)
            .max_by_key(|r| r.height())
            .expect("nonempty")
    }

    pub fn is_simply_laced(&self) -> bool {
        self.symmetrizer.iter().all(|&d| d == 1)
    }

    pub fn short_norm2(&self) -> i64 {
        2
    }

    pub fn long_norm2(&self) -> i64 {
        2 * self.symmetrizer.iter().copied().max().unwrap_or(1)
    }

    pub fn coxeter_number(&self) -> usize {
        self.roots.len() / self.rank()
    }

    pub fn rho(&self) -> Weight {
        Weight(smallvec::smallvec![1; self.rank()])
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: len,
            });
        }
        Ok(())
    }

    /// `<chi, alpha^vee>`.
    pub fn coroot_pairing(&self, chi: &Weight, alpha: &Root) -> Result<Rational> {
        self.check_dim(chi.len())?;
        self.check_dim(alpha.simple.len())?;
        Ok(rat(alpha.pair(chi)))
    }

    pub fn bilinear(&self, a: &Weight, b: &Weight) -> Result<Rational> {
        self.check_dim(a.len())?;
        self.check_dim(b.len())?;
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b[j] != 0 {
                    acc += self.weight_gram.get(i, j) * rat(a[i] * b[j]);
                }
            }
        }
        Ok(acc)
    }

    /// Invariant form on rational vectors in the fundamental-weight basis.
    pub fn bilinear_rational(&self, a: &[Rational], b: &[Rational]) -> Result<Rational> {
        self.check_dim(a.len())?;
        self.check_dim(b.len())?;
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                acc += self.weight_gram.get(i, j) * &a[i] * &b[j];
            }
        }
        Ok(acc)
    }

    /// `s_alpha(chi) = chi - <chi, alpha^vee> alpha`.
    pub fn reflect(&self, chi: &Weight, alpha: &Root) -> Result<Weight> {
        self.check_dim(chi.len())?;
        self.check_dim(alpha.simple.len())?;
        let k = alpha.pair(chi);
        Ok(Weight(
            chi.iter()
                .zip(alpha.weight.iter())
                .map(|(x, a)| x - k * a)
                .collect(),
        ))
    }

    /// In-place simple reflection `s_i` on fundamental-weight coordinates.
    #[inline]
    pub fn simple_reflect_in_place(&self, chi: &mut [i64], i: usize) {
        let k = chi[i];
        if k == 0 {
            return;
        }
        for (x, a) in chi.iter_mut().zip(&self.cartan[i]) {
            *x -= k * a;
        }
    }

    /// In-place simple reflection on coweight coordinates:
    /// `m_j <- m_j - m_i C[j][i]`.
    pub fn simple_reflect_coweight(&self, mu: &Coweight, i: usize) -> Coweight {
        let mi = mu.0[i].clone();
        Coweight(
            mu.0.iter()
                .enumerate()
                .map(|(j, mj)| mj - &mi * rat(self.cartan[j][i]))
                .collect(),
        )
    }

    /// The unique dominant element of the W-orbit of `chi`.
    pub fn dominant_representative(&self, chi: &Weight) -> Weight {
        let mut w = chi.clone();
        while let Some(i) = w.iter().position(|&x| x < 0) {
            self.simple_reflect_in_place(&mut w.0, i);
        }
        w
    }

    /// Breadth-first closure of `{chi}` under simple reflections, sorted.
    pub fn weyl_orbit(&self, chi: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(chi.clone());
        queue.push_back(chi.clone());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                if w[i] == 0 {
                    continue;
                }
                let mut r = w.clone();
                self.simple_reflect_in_place(&mut r.0, i);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Orbit of a root under W, as root indices (sorted).
    pub fn root_orbit(&self, id: usize) -> Vec<usize> {
        let mut seen = vec![false; self.roots.len()];
        let mut queue = VecDeque::from([id]);
        seen[id] = true;
        while let Some(r) = queue.pop_front() {
            for i in 0..self.rank() {
                if let Some(t) = self.reflect_root(r, i) {
                    if !seen[t] {
                        seen[t] = true;
                        queue.push_back(t);
                    }
                }
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }

    /// `s_i` applied to root `id`; `None` only if the result is not a root,
    /// which cannot happen for a valid system.
    pub fn reflect_root(&self, id: usize, i: usize) -> Option<usize> {
        let r = &self.roots[id];
        let k = r.weight[i];
        let mut c = r.simple.clone();
        c[i] -= k;
        self.find_root(&c)
    }

    /// Coordinates of `chi` in the simple-root basis.
    pub fn to_simple_root_coords(&self, chi: &Weight) -> Vec<Rational> {
        let n = self.rank();
        (0..n)
            .map(|j| {
                (0..n).fold(Rational::zero(), |acc, i| {
                    acc + self.cartan_inv.get(i, j) * rat(chi[i])
                })
            })
            .collect()
    }

    /// `<eta_i, mu>` for every fundamental weight.
    pub fn fundamental_pairings(&self, mu: &Coweight) -> Result<Vec<Rational>> {
        self.check_dim(mu.rank())?;
        let n = self.rank();
        Ok((0..n)
            .map(|i| {
                (0..n).fold(Rational::zero(), |acc, j| {
                    acc + self.cartan_inv.get(i, j) * &mu.0[j]
                })
            })
            .collect())
    }

    /// `<chi, mu>`.
    pub fn weight_coweight_pairing(&self, chi: &Weight, mu: &Coweight) -> Result<Rational> {
        self.check_dim(chi.len())?;
        let w = self.fundamental_pairings(mu)?;
        Ok(chi
            .iter()
            .zip(&w)
            .fold(Rational::zero(), |acc, (&x, wi)| acc + wi * rat(x)))
    }

    /// The alpha-string through beta, `(beta + Z alpha) ∩ Φ`, as root ids in
    /// increasing order of the alpha-coefficient.
    pub fn root_string(&self, alpha: usize, beta: usize) -> Result<Vec<usize>> {
        let a = &self.roots[alpha].simple;
        let b = &self.roots[beta].simple;
        if a == b || a.iter().zip(b).all(|(x, y)| *x == -y) {
            return Err(Error::InvalidPair);
        }
        let shift = |k: i64| -> Coords { b.iter().zip(a).map(|(y, x)| y + k * x).collect() };
        let mut lo = 0;
        while self.find_root(&shift(lo - 1)).is_some() {
            lo -= 1;
        }
        let mut out = Vec::new();
        let mut k = lo;
        while let Some(id) = self.find_root(&shift(k)) {
            out.push(id);
            k += 1;
        }
        Ok(out)
    }

    /// A uniformly random word of `len` simple reflections.
    pub fn random_weyl_element<R: Rng + ?Sized>(&self, rng: &mut R, len: usize) -> WeylElement {
        WeylElement {
            word: (0..len).map(|_| rng.gen_range(0..self.rank())).collect(),
        }
    }

    /// Matrix of `w` acting on fundamental-weight coordinates (row vectors:
    /// `w(chi) = chi * M`).
    pub fn weyl_matrix(&self, w: &WeylElement) -> Vec<Vec<i64>> {
        (0..self.rank())
            .map(|i| {
                w.apply(self, &Weight::fundamental(self.rank(), i))
                    .0
                    .to_vec()
            })
            .collect()
    }
}

/// A Weyl group element as a word in simple reflections, applied right to
/// left (`word[last]` acts first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn apply(&self, rs: &RootSystem, chi: &Weight) -> Weight {
        let mut w = chi.clone();
        for &i in self.word.iter().rev() {
            rs.simple_reflect_in_place(&mut w.0, i);
        }
        w
    }

    pub fn apply_coweight(&self, rs: &RootSystem, mu: &Coweight) -> Coweight {
        let mut m = mu.clone();
        for &i in self.word.iter().rev() {
            m = rs.simple_reflect_coweight(&m, i);
        }
        m
    }
}

/// Apply an integer matrix (rows = images of basis vectors) to a weight.
#[inline]
pub fn apply_matrix(m: &[Vec<i64>], chi: &[i64], out: &mut [i64]) {
    for (j, o) in out.iter_mut().enumerate() {
        *o = chi.iter().zip(m).map(|(x, row)| x * row[j]).sum();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(RootSystemSpec::new(f, n).unwrap()).unwrap()
    }

    #[test]
    fn rejects_illegal_ranks() {
        for (f, n) in [
            (Family::A, 0),
            (Family::B, 1),
            (Family::C, 1),
            (Family::D, 2),
            (Family::E, 5),
            (Family::E, 9),
            (Family::F, 3),
            (Family::G, 3),
        ] {
            assert_eq!(
                RootSystemSpec::new(f, n),
                Err(Error::IllegalRank { family: f, rank: n })
            );
        }
    }

    #[test]
    fn parses_spec_names() {
        let s: RootSystemSpec = "e8".parse().unwrap();
        assert_eq!(s, RootSystemSpec::new(Family::E, 8).unwrap());
        assert!("E5".parse::<RootSystemSpec>().is_err());
        assert!("X2".parse::<RootSystemSpec>().is_err());
    }

    #[test]
    fn a1_has_two_roots() {
        let a1 = rs(Family::A, 1);
        assert_eq!(a1.roots().len(), 2);
        assert_eq!(a1.cartan(), &[vec![2]]);
    }

    #[test]
    fn g2_cartan_and_roots() {
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.roots().len(), 12);
        assert_eq!(g2.cartan(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(g2.symmetrizer(), &[1, 3]);
        assert_eq!(g2.highest_root().simple_coords(), &[3, 2]);
    }

    #[test]
    fn e8_has_240_roots() {
        let e8 = rs(Family::E, 8);
        assert_eq!(e8.roots().len(), 240);
        assert_eq!(e8.coxeter_number(), 30);
    }

    #[test]
    fn coxeter_numbers() {
        assert_eq!(rs(Family::A, 4).coxeter_number(), 5);
        assert_eq!(rs(Family::G, 2).coxeter_number(), 6);
    }

    #[test]
    fn simple_roots_come_first() {
        let f4 = rs(Family::F, 4);
        for i in 0..4 {
            assert_eq!(f4.simple_root_id(i), i);
        }
    }

    #[test]
    fn coroot_pairing_examples() {
        let a2 = rs(Family::A, 2);
        let eta1 = Weight::fundamental(2, 0);
        let a1 = a2.simple_root(0);
        let a2r = a2.simple_root(1);
        assert_eq!(a2.coroot_pairing(&eta1, a1).unwrap(), rat(1));
        assert_eq!(a2.coroot_pairing(a1.weight(), a1).unwrap(), rat(2));
        assert_eq!(a2.coroot_pairing(a1.weight(), a2r).unwrap(), rat(-1));
        assert!(matches!(
            a2.coroot_pairing(&Weight::zero(3), a1),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn bilinear_examples() {
        let a2 = rs(Family::A, 2);
        let eta1 = Weight::fundamental(2, 0);
        assert_eq!(a2.bilinear(&eta1, &eta1).unwrap(), frac(2, 3));
        let g2 = rs(Family::G, 2);
        let a = g2.simple_root(1).weight().clone();
        assert_eq!(g2.bilinear(&a, &a).unwrap(), rat(6));
        for r in g2.roots() {
            assert_eq!(g2.bilinear(r.weight(), r.weight()).unwrap(), rat(r.norm2()));
        }
        assert!(a2.bilinear(&eta1, &Weight::zero(1)).is_err());
    }

    #[test]
    fn reflection_examples() {
        let a2 = rs(Family::A, 2);
        let a1 = a2.simple_root(0);
        let a2r = a2.simple_root(1);
        assert_eq!(a2.reflect(a1.weight(), a1).unwrap(), a1.weight().neg());
        let sum = a1.weight().add(a2r.weight());
        assert_eq!(a2.reflect(a2r.weight(), a1).unwrap(), sum);
        // (0,1) pairs to 0 with alpha_1^vee
        let fixed = Weight::new([0, 1]);
        assert_eq!(a2.reflect(&fixed, a1).unwrap(), fixed);
    }

    #[test]
    fn orbit_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.weyl_orbit(&Weight::zero(2)), vec![Weight::zero(2)]);
        let orbit = a2.weyl_orbit(&Weight::fundamental(2, 0));
        assert_eq!(
            orbit,
            vec![
                Weight::new([-1, 1]),
                Weight::new([0, -1]),
                Weight::new([1, 0])
            ]
        );
        let g2 = rs(Family::G, 2);
        let orbit = g2.weyl_orbit(&Weight::fundamental(2, 0));
        let mut short: Vec<Weight> = g2
            .roots()
            .iter()
            .filter(|r| r.norm2() == 2)
            .map(|r| r.weight().clone())
            .collect();
        short.sort();
        assert_eq!(orbit, short);
    }

    #[test]
    fn root_string_examples() {
        let a2 = rs(Family::A, 2);
        let s = a2
            .root_string(a2.simple_root_id(0), a2.simple_root_id(1))
            .unwrap();
        let coords: Vec<&[i64]> = s.iter().map(|&i| a2.root(i).simple_coords()).collect();
        assert_eq!(coords, vec![&[0, 1][..], &[1, 1][..]]);

        // B2: alpha_1 long, alpha_2 short; long-root string through the short one
        let b2 = rs(Family::B, 2);
        let s = b2
            .root_string(b2.simple_root_id(0), b2.simple_root_id(1))
            .unwrap();
        let coords: Vec<&[i64]> = s.iter().map(|&i| b2.root(i).simple_coords()).collect();
        assert_eq!(coords, vec![&[0, 1][..], &[1, 1][..]]);

        let g2 = rs(Family::G, 2);
        let s = g2
            .root_string(g2.simple_root_id(0), g2.simple_root_id(1))
            .unwrap();
        assert_eq!(s.len(), 4);

        assert_eq!(a2.root_string(0, 0), Err(Error::InvalidPair));
        assert_eq!(
            a2.root_string(0, a2.negative_of(0)),
            Err(Error::InvalidPair)
        );
    }

    #[test]
    fn coweight_reflection() {
        let a2 = rs(Family::A, 2);
        let mu = Coweight::from_ints(&[-1, 2]);
        assert_eq!(
            a2.simple_reflect_coweight(&mu, 0),
            Coweight::from_ints(&[1, 1])
        );
    }

    #[test]
    fn a2_pairing_of_fundamental_weight_with_coweight() {
        let a2 = rs(Family::A, 2);
        let mu = Coweight::from_ints(&[1, 0]);
        // eta_1 = (2 alpha_1 + alpha_2)/3
        assert_eq!(
            a2.weight_coweight_pairing(&Weight::fundamental(2, 0), &mu)
                .unwrap(),
            frac(2, 3)
        );
    }
}

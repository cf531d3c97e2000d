//! Exact rational helpers shared by every module.
//!
//! Everything user-facing is a [`Rational`] (arbitrary precision). Hot loops
//! work on integer numerators over a shared denominator and convert back at
//! the end, see [`common_denominator`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_i128(n: i128) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Always `p/q`, including integers (`-6/1`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p`, `p/q` and surrounding whitespace.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// Lowest common denominator of `values` and the integer numerators over it.
///
/// Returns `None` if a numerator does not fit in `i128`.
pub fn common_denominator(values: &[Rational]) -> Option<(i128, Vec<i128>)> {
    let mut lcm = BigInt::one();
    for v in values {
        lcm = lcm.lcm(v.denom());
    }
    let nums = values
        .iter()
        .map(|v| (v.numer() * (&lcm / v.denom())).to_i128())
        .collect::<Option<Vec<_>>>()?;
    Some((lcm.to_i128()?, nums))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Square matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(n: usize) -> Self {
        RatMatrix {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * n + j] = rat(v);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = RatMatrix::zeros(n);
        for i in 0..n {
            inv.set(i, i, Rational::one());
        }
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                let v = a.get(col, j) / &p;
                a.set(col, j, v);
                let v = inv.get(col, j) / &p;
                inv.set(col, j, v);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let v = a.get(r, j) - &f * a.get(col, j);
                    a.set(r, j, v);
                    let v = inv.get(r, j) - &f * inv.get(col, j);
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }

    /// Leading principal minors `det(A[..k][..k])` for `k = 1..=n`.
    pub fn leading_minors(&self) -> Vec<Rational> {
        (1..=self.n).map(|k| self.minor_det(k)).collect()
    }

    pub fn determinant(&self) -> Rational {
        self.minor_det(self.n)
    }

    fn minor_det(&self, k: usize) -> Rational {
        let mut a: Vec<Vec<Rational>> = (0..k)
            .map(|i| (0..k).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut det = Rational::one();
        for col in 0..k {
            let Some(pivot) = (col..k).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in col + 1..k {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &p;
                for j in col..k {
                    let v = &a[col][j] * &f;
                    a[r][j] -= v;
                }
            }
        }
        det
    }
}

/// Rank of an integer matrix given as rows, computed with exact fraction-free
/// elimination.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| rat(v)).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot, rank);
        let p = a[rank][col].clone();
        for r in 0..a.len() {
            if r != rank && !a[r][col].is_zero() {
                let f = &a[r][col] / &p;
                for j in col..cols {
                    let v = &a[rank][j] * &f;
                    a[r][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

//! Exact rational linear systems solved by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Outcome of [`solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    /// `x` solves the system with all free variables set to zero; `kernel`
    /// is a basis of the homogeneous solution space.
    Feasible {
        x: Vec<BigRational>,
        kernel: Vec<Vec<BigRational>>,
    },
    /// `y^T A = 0` and `y^T b != 0`; `y` has coprime integer entries.
    Infeasible { multipliers: Vec<BigInt> },
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<(usize, usize)>,
}

fn to_integer_rows(a: &[Vec<BigRational>], b: &[BigRational]) -> Vec<Vec<BigInt>> {
    a.iter()
        .zip(b)
        .map(|(row, rhs)| {
            let lcm = row
                .iter()
                .chain(std::iter::once(rhs))
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            row.iter()
                .chain(std::iter::once(rhs))
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect()
}

fn bareiss(mut m: Vec<Vec<BigInt>>, ncols: usize) -> Result<Echelon> {
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in col + 1..m[i].len() {
                let num = &m[r][col] * &m[i][j] - &m[i][col] * &m[r][j];
                let (q, rem) = num.div_rem(&prev);
                if !rem.is_zero() {
                    return Err(Error::Inconsistent(
                        "fraction-free elimination produced an inexact division".into(),
                    ));
                }
                m[i][j] = q;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[r][col].clone();
        pivots.push((r, col));
        r += 1;
    }
    Ok(Echelon { rows: m, pivots })
}

fn back_substitute(e: &Echelon, ncols: usize, rhs_col: Option<usize>, free: Option<usize>) -> Vec<BigRational> {
    let mut x = vec![BigRational::zero(); ncols];
    if let Some(f) = free {
        x[f] = BigRational::one();
    }
    for &(r, c) in e.pivots.iter().rev() {
        let row = &e.rows[r];
        let mut acc = match rhs_col {
            Some(k) => BigRational::from_integer(row[k].clone()),
            None => BigRational::zero(),
        };
        for j in c + 1..ncols {
            if !row[j].is_zero() && !x[j].is_zero() {
                acc -= BigRational::from_integer(row[j].clone()) * &x[j];
            }
        }
        x[c] = acc / BigRational::from_integer(row[c].clone());
    }
    x
}

/// Rank of a rational matrix.
pub fn rank(a: &[Vec<BigRational>], ncols: usize) -> Result<usize> {
    let zeros = vec![BigRational::zero(); a.len()];
    let m = to_integer_rows(a, &zeros);
    Ok(bareiss(m, ncols)?.pivots.len())
}

/// Basis of `{x : A x = 0}`.
pub fn kernel(a: &[Vec<BigRational>], ncols: usize) -> Result<Vec<Vec<BigRational>>> {
    let zeros = vec![BigRational::zero(); a.len()];
    let e = bareiss(to_integer_rows(a, &zeros), ncols)?;
    let pivot_cols: Vec<usize> = e.pivots.iter().map(|&(_, c)| c).collect();
    Ok((0..ncols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|f| back_substitute(&e, ncols, None, Some(f)))
        .collect())
}

fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = match ints.iter().find(|c| !c.is_zero()) {
        Some(c) if c.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g * &sign).collect()
}

/// Solve `A x = b` exactly over the rationals.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational], ncols: usize) -> Result<Solution> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    if let Some(row) = a.iter().find(|r| r.len() != ncols) {
        return Err(Error::DimensionMismatch {
            expected: ncols,
            got: row.len(),
        });
    }
    let e = bareiss(to_integer_rows(a, b), ncols)?;
    let rank = e.pivots.len();
    let inconsistent = e.rows[rank..].iter().any(|row| !row[ncols].is_zero());
    if inconsistent {
        // Left kernel of A: kernel of A^T. Some basis vector must detect b.
        let at: Vec<Vec<BigRational>> = (0..ncols)
            .map(|j| a.iter().map(|row| row[j].clone()).collect())
            .collect();
        let left = kernel(&at, a.len())?;
        let y = left
            .into_iter()
            .find(|y| !dot(y, b).is_zero())
            .ok_or_else(|| Error::Inconsistent("no left-null vector detects the right-hand side".into()))?;
        return Ok(Solution::Infeasible {
            multipliers: primitive_integer(&y),
        });
    }
    let x = back_substitute(&e, ncols, Some(ncols), None);
    for (row, rhs) in a.iter().zip(b) {
        if dot(row, &x) != *rhs {
            return Err(Error::Inconsistent("solution failed substitution check".into()));
        }
    }
    let pivot_cols: Vec<usize> = e.pivots.iter().map(|&(_, c)| c).collect();
    let homogeneous = Echelon {
        rows: e.rows.clone(),
        pivots: e.pivots.clone(),
    };
    let kernel = (0..ncols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|f| back_substitute(&homogeneous, ncols, None, Some(f)))
        .collect();
    Ok(Solution::Feasible { x, kernel })
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Greedy deletion to an inclusion-minimal infeasible subsystem.
///
/// Returns the kept row indices (in input order) and integer multipliers on
/// them certifying infeasibility; `None` when the full system is feasible.
pub fn minimal_infeasible_subset(
    a: &[Vec<BigRational>],
    b: &[BigRational],
    ncols: usize,
) -> Result<Option<(Vec<usize>, Vec<BigInt>)>> {
    let sub = |keep: &[usize]| -> Result<Solution> {
        let ra: Vec<Vec<BigRational>> = keep.iter().map(|&i| a[i].clone()).collect();
        let rb: Vec<BigRational> = keep.iter().map(|&i| b[i].clone()).collect();
        solve(&ra, &rb, ncols)
    };
    let mut keep: Vec<usize> = (0..a.len()).collect();
    if matches!(sub(&keep)?, Solution::Feasible { .. }) {
        return Ok(None);
    }
    let mut k = 0;
    while k < keep.len() {
        let mut trial = keep.clone();
        trial.remove(k);
        if matches!(sub(&trial)?, Solution::Infeasible { .. }) {
            keep = trial;
        } else {
            k += 1;
        }
    }
    match sub(&keep)? {
        Solution::Infeasible { multipliers } => Ok(Some((keep, multipliers))),
        Solution::Feasible { .. } => Err(Error::Inconsistent("minimal subset became feasible".into())),
    }
}

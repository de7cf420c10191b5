//! Dense matrices over `Z/p` and the rank-counting function `Z(p, m, n, r)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pgroup::{is_prime, Limits};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert_eq!(r0, 1, "{a} is not invertible mod {p}");
    s0.rem_euclid(p as i128) as u64
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Builds a matrix from signed rows, reducing every entry mod `p`.
    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(FpMatrix {
            p,
            rows: rows.len(),
            cols,
            data: rows
                .iter()
                .flatten()
                .map(|&e| e.rem_euclid(p as i64) as u64)
                .collect(),
        })
    }

    /// Builds an `rows x cols` matrix from row-major residues (reduced mod `p`).
    pub fn from_vec(p: u64, rows: usize, cols: usize, data: Vec<u64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(FpMatrix {
            p,
            rows,
            cols,
            data: data.into_iter().map(|e| e % p).collect(),
        })
    }

    /// The `idx`-th matrix in lexicographic order of row-major entries.
    pub fn from_index(p: u64, rows: usize, cols: usize, mut idx: u128) -> Self {
        let mut data = vec![0u64; rows * cols];
        for slot in data.iter_mut().rev() {
            *slot = (idx % p as u128) as u64;
            idx /= p as u128;
        }
        FpMatrix {
            p,
            rows,
            cols,
            data,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        FpMatrix {
            data: self.data.iter().map(|&e| (self.p - e) % self.p).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.cols != other.rows || self.p != other.p {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = (out.data[idx] + a * other.get(k, j)) % self.p;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u64]) -> Result<Vec<u64>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| (acc + a * (b % self.p)) % self.p)
            })
            .collect())
    }

    /// Keeps the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.p, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.data[a * cols.len() + b] = self.get(i, j);
            }
        }
        out
    }

    /// Reduced row echelon form with 0-based pivot columns (leftmost pivot, topmost row).
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(r) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if r != row {
                for j in 0..m.cols {
                    m.data.swap(r * m.cols + j, row * m.cols + j);
                }
            }
            let inv = inv_mod(m.get(row, col), p);
            for j in col..m.cols {
                let idx = row * m.cols + j;
                m.data[idx] = m.data[idx] * inv % p;
            }
            for r in 0..m.rows {
                let f = m.get(r, col);
                if r == row || f == 0 {
                    continue;
                }
                for j in col..m.cols {
                    let sub = f * m.get(row, j) % p;
                    let idx = r * m.cols + j;
                    m.data[idx] = (m.data[idx] + p - sub) % p;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{b : M b = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; self.cols];
                v[f] = 1 % p;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - r.get(i, f)) % p;
                }
                v
            })
            .collect()
    }

    /// Nonzero rows of the reduced row echelon form.
    pub fn row_space_basis(&self) -> FpMatrix {
        let (r, pivots) = self.rref();
        let rows: Vec<usize> = (0..pivots.len()).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        r.select(&rows, &cols)
    }

    /// Text form: rows separated by `;`, entries by `,`.
    pub fn parse(p: u64, s: &str) -> Result<Self> {
        let rows: Vec<Vec<i64>> = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad matrix entry {e:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Self::from_rows(p, &rows)
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&rows.join(";"))
    }
}

fn checked_pow(p: u64, e: u64) -> Result<u128> {
    (p as u128)
        .checked_pow(u32::try_from(e).map_err(|_| Error::Overflow("power of p"))?)
        .ok_or(Error::Overflow("power of p"))
}

/// Number of `m x n` matrices of rank `r` over `Z/p`, by the closed form
/// `prod_{j=1}^r (p^n - p^{j-1}) * sum p^{sum_i i j_i}` over `j_1 + ... + j_r <= m - r`.
pub fn count_rank_formula(p: u64, m: usize, n: usize, r: usize) -> Result<u128> {
    if r > m.min(n) {
        return Err(Error::RankOutOfRange { r, m, n });
    }
    if r == 0 {
        return Ok(1);
    }
    let pn = checked_pow(p, n as u64)?;
    let mut prod: u128 = 1;
    for j in 1..=r {
        let term = pn - checked_pow(p, j as u64 - 1)?;
        prod = prod
            .checked_mul(term)
            .ok_or(Error::Overflow("Z(p,m,n,r)"))?;
    }
    // sum over (j_1..j_r), sum j_i <= budget, of p^{sum i j_i}
    fn comp_sum(p: u64, i: usize, r: usize, budget: usize, weight: u64) -> Result<u128> {
        if i > r {
            return checked_pow(p, weight);
        }
        let mut total: u128 = 0;
        for j in 0..=budget {
            let w = weight + (i * j) as u64;
            total = total
                .checked_add(comp_sum(p, i + 1, r, budget - j, w)?)
                .ok_or(Error::Overflow("Z(p,m,n,r)"))?;
        }
        Ok(total)
    }
    let sum = comp_sum(p, 1, r, m - r, 0)?;
    prod.checked_mul(sum).ok_or(Error::Overflow("Z(p,m,n,r)"))
}

/// Counts of `m x n` matrices by rank (index = rank), by exhaustive enumeration.
pub fn rank_distribution(p: u64, m: usize, n: usize, limits: &Limits) -> Result<Vec<u128>> {
    let total = checked_pow(p, (m * n) as u64)?;
    limits.check("matrix enumeration", total, limits.max_matrices)?;
    let mut counts = vec![0u128; m.min(n) + 1];
    for idx in 0..total {
        counts[FpMatrix::from_index(p, m, n, idx).rank()] += 1;
    }
    Ok(counts)
}

pub fn count_rank_enumerate(p: u64, m: usize, n: usize, r: usize, limits: &Limits) -> Result<u128> {
    if r > m.min(n) {
        return Err(Error::RankOutOfRange { r, m, n });
    }
    Ok(rank_distribution(p, m, n, limits)?[r])
}

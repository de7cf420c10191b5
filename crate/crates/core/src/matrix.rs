//! Dense matrices over `Q(xi_p)` and exact linear solves.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde_json::Value;

use crate::cyclotomic::{Coeff, Cyclotomic};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicMatrix<T> {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic<T>>,
}

impl<T: Coeff> CyclotomicMatrix<T> {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        CyclotomicMatrix {
            p,
            rows,
            cols,
            data: vec![Cyclotomic::zero(p); rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = Cyclotomic::one(p);
        }
        m
    }

    pub fn diag(p: u64, entries: Vec<Cyclotomic<T>>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(p, n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn from_fn(
        p: u64,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Cyclotomic<T>,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CyclotomicMatrix {
            p,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(p: u64, rows: Vec<Vec<Cyclotomic<T>>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        if rows.iter().flatten().any(|e| e.p() != p) {
            return Err(Error::ShapeMismatch(format!("entry outside Q(xi_{p})")));
        }
        let n = rows.len();
        Ok(CyclotomicMatrix {
            p,
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic<T> {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic<T>) {
        assert_eq!(v.p(), self.p);
        self.data[i * self.cols + j] = v;
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
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
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::ShapeMismatch("kron across different fields".into()));
        }
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        Ok(Self::from_fn(self.p, r, c, |i, j| {
            let a = self.get(i / other.rows, j / other.cols);
            if a.is_zero() {
                return Cyclotomic::zero(self.p);
            }
            a * other.get(i % other.rows, j % other.cols)
        }))
    }

    pub fn scalar_mul(&self, c: &Cyclotomic<T>) -> Self {
        CyclotomicMatrix {
            data: self.data.iter().map(|e| e * c).collect(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols, self.p) != (other.rows, other.cols, other.p) {
            return Err(Error::ShapeMismatch(
                "cannot add matrices of different shapes".into(),
            ));
        }
        Ok(CyclotomicMatrix {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
            ..self.clone()
        })
    }

    /// Exact entrywise equality; shapes must agree.
    pub fn mat_eq(&self, other: &Self) -> Result<bool> {
        if (self.rows, self.cols, self.p) != (other.rows, other.cols, other.p) {
            return Err(Error::ShapeMismatch(
                "cannot compare matrices of different shapes".into(),
            ));
        }
        Ok(self.data == other.data)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.p, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_fn(
            self.p,
            self.rows + other.rows,
            self.cols + other.cols,
            |i, j| match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - self.rows, j - self.cols).clone(),
                _ => Cyclotomic::zero(self.p),
            },
        )
    }

    pub fn pow(&self, e: u64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("power of a non-square matrix".into()));
        }
        let mut acc = Self::identity(self.p, self.rows);
        for _ in 0..e {
            acc = acc.mat_mul(self)?;
        }
        Ok(acc)
    }

    pub fn rank(&self) -> usize {
        let mut elim = Eliminator::new(self.cols);
        for i in 0..self.rows {
            elim.insert(
                (0..self.cols)
                    .filter(|&j| !self.get(i, j).is_zero())
                    .map(|j| (j, self.get(i, j).clone()))
                    .collect(),
            );
        }
        elim.rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

/// Incremental Gaussian elimination over `Q(xi_p)` on sparse rows.
///
/// Each stored row has leading entry 1 (normalized by the exact inverse);
/// new rows are reduced against stored leading columns, first nonzero first.
pub struct Eliminator<T> {
    unknowns: usize,
    pivots: BTreeMap<usize, BTreeMap<usize, Cyclotomic<T>>>,
}

impl<T: Coeff> Eliminator<T> {
    pub fn new(unknowns: usize) -> Self {
        Eliminator {
            unknowns,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.unknowns - self.rank()
    }

    /// Adds the equation `sum coeff * x_col = 0`; repeated columns are summed.
    pub fn insert(&mut self, terms: Vec<(usize, Cyclotomic<T>)>) {
        if self.pivots.len() == self.unknowns {
            return;
        }
        let mut row: BTreeMap<usize, Cyclotomic<T>> = BTreeMap::new();
        for (c, v) in terms {
            assert!(c < self.unknowns, "unknown index out of range");
            let slot = row.entry(c).or_insert_with(|| Cyclotomic::zero(v.p()));
            *slot = &*slot + &v;
        }
        row.retain(|_, v| !v.is_zero());
        while let Some((&lead, lead_val)) = row.iter().next() {
            match self.pivots.get(&lead) {
                Some(pivot) => {
                    let f = lead_val.clone();
                    for (&c, v) in pivot {
                        let sub = &f * v;
                        let slot = row.entry(c).or_insert_with(|| Cyclotomic::zero(sub.p()));
                        *slot = &*slot - &sub;
                        if slot.is_zero() {
                            row.remove(&c);
                        }
                    }
                }
                None => {
                    let inv = lead_val.inv().expect("nonzero leading entry");
                    for v in row.values_mut() {
                        *v = &*v * &inv;
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }

    /// Basis of the solution space, one vector per free unknown.
    pub fn nullspace(&self) -> Vec<Vec<Cyclotomic<T>>> {
        let Some(p) = self
            .pivots
            .values()
            .flat_map(|r| r.values())
            .map(|v| v.p())
            .next()
        else {
            return Vec::new();
        };
        let mut rows = self.pivots.clone();
        let cols: Vec<usize> = rows.keys().rev().copied().collect();
        for &c in &cols {
            let pivot = rows[&c].clone();
            for (&other, row) in rows.range_mut(..c) {
                debug_assert!(other < c);
                if let Some(f) = row.get(&c).cloned() {
                    for (&k, v) in &pivot {
                        let sub = &f * v;
                        let slot = row.entry(k).or_insert_with(|| Cyclotomic::zero(p));
                        *slot = &*slot - &sub;
                        if slot.is_zero() {
                            row.remove(&k);
                        }
                    }
                }
            }
        }
        (0..self.unknowns)
            .filter(|c| !rows.contains_key(c))
            .map(|free| {
                let mut v = vec![Cyclotomic::zero(p); self.unknowns];
                v[free] = Cyclotomic::one(p);
                for (&pc, row) in &rows {
                    if let Some(e) = row.get(&free) {
                        v[pc] = -e;
                    }
                }
                v
            })
            .collect()
    }
}

fn check_square(mats: &[&CyclotomicMatrix<impl Coeff>], d: usize) -> Result<()> {
    for m in mats {
        if m.rows != d || m.cols != d {
            return Err(Error::ShapeMismatch(format!(
                "expected {d}x{d}, got {}x{}",
                m.rows, m.cols
            )));
        }
    }
    Ok(())
}

fn intertwiner_system<T: Coeff>(
    left: &[CyclotomicMatrix<T>],
    right: &[CyclotomicMatrix<T>],
    d: usize,
) -> Result<Option<Eliminator<T>>> {
    if left.len() != right.len() {
        return Err(Error::ShapeMismatch(
            "unequal numbers of generator images".into(),
        ));
    }
    check_square(&left.iter().chain(right).collect::<Vec<_>>(), d)?;
    let mut elim = Eliminator::new(d * d);
    if left.is_empty() {
        return Ok(Some(elim));
    }
    let p = left[0].p;
    if left.iter().chain(right).any(|m| m.p != p) {
        return Err(Error::ShapeMismatch(
            "matrices over different fields".into(),
        ));
    }
    // unknown (a, b) sits at a * d + b; equation (i, j) of M A - B M = 0
    for (a, b) in left.iter().zip(right) {
        for i in 0..d {
            for j in 0..d {
                let mut terms = Vec::new();
                for k in 0..d {
                    let akj = a.get(k, j);
                    if !akj.is_zero() {
                        terms.push((i * d + k, akj.clone()));
                    }
                    let bik = b.get(i, k);
                    if !bik.is_zero() {
                        terms.push((k * d + j, -bik));
                    }
                }
                elim.insert(terms);
                if elim.nullity() == 0 {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(elim))
}

/// Dimension of `{M : M A = A M for all A in mats}` for `d x d` inputs.
pub fn commutant_dimension<T: Coeff>(mats: &[CyclotomicMatrix<T>], d: usize) -> Result<usize> {
    Ok(intertwiner_system(mats, mats, d)?.map_or(0, |e| e.nullity()))
}

/// Basis of `{M : M a_i = b_i M for all i}`.
pub fn intertwiners<T: Coeff>(
    a: &[CyclotomicMatrix<T>],
    b: &[CyclotomicMatrix<T>],
    d: usize,
) -> Result<Vec<CyclotomicMatrix<T>>> {
    let Some(elim) = intertwiner_system(a, b, d)? else {
        return Ok(Vec::new());
    };
    let p = a.first().map_or(2, |m| m.p);
    Ok(elim
        .nullspace()
        .into_iter()
        .map(|v| CyclotomicMatrix {
            p,
            rows: d,
            cols: d,
            data: v,
        })
        .collect())
}

impl CyclotomicMatrix<BigRational> {
    /// Nested array of scalar objects.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array((0..self.cols).map(|j| self.get(i, j).to_json()).collect()))
                .collect(),
        )
    }

    pub fn from_json(p: u64, v: &Value) -> Result<Self> {
        let rows = v
            .as_array()
            .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?
                    .iter()
                    .map(Cyclotomic::from_json)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(p, rows)
    }
}

impl<T: Coeff> fmt::Display for CyclotomicMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str("  ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            f.write_str("]")?;
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

//! Monomial matrices whose nonzero entries are powers of `xi_p`.
//!
//! Column `j` holds `xi^{phase[j]}` in row `perm[j]`. All constructions in the
//! crate produce such matrices; dense `CyclotomicMatrix` stays the reference.

use crate::cyclotomic::{Coeff, Cyclotomic};
use crate::matrix::CyclotomicMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialMatrix {
    p: u64,
    perm: Vec<usize>,
    phase: Vec<u64>,
}

impl MonomialMatrix {
    pub fn identity(p: u64, d: usize) -> Self {
        MonomialMatrix {
            p,
            perm: (0..d).collect(),
            phase: vec![0; d],
        }
    }

    /// `perm` must be a permutation of `0..d`.
    pub fn new(p: u64, perm: Vec<usize>, phase: Vec<u64>) -> Self {
        assert_eq!(perm.len(), phase.len());
        let mut seen = vec![false; perm.len()];
        for &i in &perm {
            assert!(!std::mem::replace(&mut seen[i], true), "not a permutation");
        }
        let phase = phase.into_iter().map(|e| e % p).collect();
        MonomialMatrix { p, perm, phase }
    }

    pub fn diagonal(p: u64, phase: Vec<u64>) -> Self {
        let d = phase.len();
        Self::new(p, (0..d).collect(), phase)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn phase(&self) -> &[u64] {
        &self.phase
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &i)| i == j) && self.phase.iter().all(|&e| e == 0)
    }

    /// `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        MonomialMatrix {
            p: self.p,
            perm: other.perm.iter().map(|&k| self.perm[k]).collect(),
            phase: other
                .phase
                .iter()
                .zip(&other.perm)
                .map(|(&e, &k)| (e + self.phase[k]) % self.p)
                .collect(),
        }
    }

    /// Whether `self * other == xi^e * target`, without allocating the product.
    pub fn product_is(&self, other: &Self, target: &Self, e: u64) -> bool {
        other
            .perm
            .iter()
            .zip(&other.phase)
            .enumerate()
            .all(|(j, (&k, &f))| {
                self.perm[k] == target.perm[j]
                    && (f + self.phase[k]) % self.p == (target.phase[j] + e) % self.p
            })
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::identity(self.p, self.dim());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn inverse(&self) -> Self {
        let d = self.dim();
        let mut perm = vec![0; d];
        let mut phase = vec![0; d];
        for (j, &i) in self.perm.iter().enumerate() {
            perm[i] = j;
            phase[i] = (self.p - self.phase[j]) % self.p;
        }
        MonomialMatrix {
            p: self.p,
            perm,
            phase,
        }
    }

    /// Multiplication by the scalar `xi^e`.
    pub fn scale(&self, e: u64) -> Self {
        MonomialMatrix {
            phase: self.phase.iter().map(|&x| (x + e) % self.p).collect(),
            ..self.clone()
        }
    }

    pub fn kron(&self, other: &Self) -> Self {
        let b = other.dim();
        let mut perm = Vec::with_capacity(self.dim() * b);
        let mut phase = Vec::with_capacity(self.dim() * b);
        for (&ia, &ea) in self.perm.iter().zip(&self.phase) {
            for (&ib, &eb) in other.perm.iter().zip(&other.phase) {
                perm.push(ia * b + ib);
                phase.push((ea + eb) % self.p);
            }
        }
        MonomialMatrix {
            p: self.p,
            perm,
            phase,
        }
    }

    /// `Some(e)` when `self = xi^e * other`.
    pub fn scalar_ratio(&self, other: &Self) -> Option<u64> {
        if self.perm != other.perm {
            return None;
        }
        let e = (self.phase.first()? + self.p - other.phase[0]) % self.p;
        self.phase
            .iter()
            .zip(&other.phase)
            .all(|(&a, &b)| (b + e) % self.p == a)
            .then_some(e)
    }

    pub fn to_dense<T: Coeff>(&self) -> CyclotomicMatrix<T> {
        let d = self.dim();
        let mut m = CyclotomicMatrix::zeros(self.p, d, d);
        for (j, (&i, &e)) in self.perm.iter().zip(&self.phase).enumerate() {
            m.set(i, j, Cyclotomic::root_power(self.p, e as i64));
        }
        m
    }

    pub fn from_dense<T: Coeff>(m: &CyclotomicMatrix<T>) -> Option<Self> {
        if !m.is_square() {
            return None;
        }
        let d = m.rows();
        let mut perm = Vec::with_capacity(d);
        let mut phase = Vec::with_capacity(d);
        for j in 0..d {
            let mut nonzero = (0..d).filter(|&i| !m.get(i, j).is_zero());
            let i = nonzero.next()?;
            if nonzero.next().is_some() {
                return None;
            }
            perm.push(i);
            phase.push(m.get(i, j).as_root_power()?);
        }
        let mut seen = vec![false; d];
        for &i in &perm {
            if std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(MonomialMatrix {
            p: m.p(),
            perm,
            phase,
        })
    }
}

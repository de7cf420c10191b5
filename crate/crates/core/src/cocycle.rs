//! Bilinear cocycles `alpha(g, h) = xi^{sum c(i,j) m_i(h) k_j(g)}` given by a `t x s`
//! matrix `C` over `Z/p`. The `k` exponents come from the first argument, the
//! `m` exponents from the second.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fpmatrix::FpMatrix;
use crate::pgroup::{subgroup, subgroup_set, AbelianPGroup, GroupElement, Limits, SubgroupSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearCocycle {
    group: AbelianPGroup,
    c: FpMatrix,
}

/// Generators of the subgroup `G0` of alpha-regular elements, with `|G/G0| = p^index_exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSet {
    pub generators: Vec<GroupElement>,
    pub index_exponent: usize,
}

/// The restricted cocycle matrix in the subgroup's own coordinates: `C` with the
/// rows and columns of the removed generators deleted. Either dimension may be 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub spec: SubgroupSpec,
    pub matrix: FpMatrix,
    /// Rows of `C` (x-generators) that survive, in order.
    pub kept_rows: Vec<usize>,
    /// Columns of `C` (y-generators) that survive, in order.
    pub kept_cols: Vec<usize>,
}

impl Restriction {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Exponent of the restricted cocycle at `(h, h')`, both in ambient coordinates.
    pub fn evaluate(&self, h: &GroupElement, h2: &GroupElement) -> u64 {
        let p = self.matrix.p();
        let mut e = 0;
        for (a, &i) in self.kept_rows.iter().enumerate() {
            for (b, &j) in self.kept_cols.iter().enumerate() {
                e = (e + self.matrix.get(a, b) * (h2.m()[i] % p) % p * (h.k()[j] % p)) % p;
            }
        }
        e
    }

    /// The restricted class as a cocycle on the surviving cyclic factors, when
    /// both factor lists are non-empty.
    pub fn to_cocycle(&self, ambient: &AbelianPGroup) -> Option<BilinearCocycle> {
        if self.kept_rows.is_empty() || self.kept_cols.is_empty() {
            return None;
        }
        let r: Vec<u32> = self.kept_rows.iter().map(|&i| ambient.r()[i]).collect();
        let n: Vec<u32> = self.kept_cols.iter().map(|&j| ambient.n()[j]).collect();
        let group = AbelianPGroup::new(ambient.p(), &r, &n).ok()?;
        BilinearCocycle::new(group, self.matrix.clone()).ok()
    }
}

impl BilinearCocycle {
    pub fn new(group: AbelianPGroup, c: FpMatrix) -> Result<Self> {
        if c.p() != group.p() || c.rows() != group.t() || c.cols() != group.s() {
            return Err(Error::ShapeMismatch(format!(
                "cocycle matrix is {}x{} over Z/{}, group needs {}x{} over Z/{}",
                c.rows(),
                c.cols(),
                c.p(),
                group.t(),
                group.s(),
                group.p()
            )));
        }
        Ok(BilinearCocycle { group, c })
    }

    /// Parses the matrix text format against a group descriptor.
    pub fn parse(group: &str, matrix: &str) -> Result<Self> {
        let group: AbelianPGroup = group.parse()?;
        let c = FpMatrix::parse(group.p(), matrix)?;
        Self::new(group, c)
    }

    pub fn trivial(group: AbelianPGroup) -> Self {
        let c = FpMatrix::zeros(group.p(), group.t(), group.s());
        BilinearCocycle { group, c }
    }

    pub fn group(&self) -> &AbelianPGroup {
        &self.group
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.c
    }

    pub fn p(&self) -> u64 {
        self.group.p()
    }

    pub fn is_trivial(&self) -> bool {
        self.c.is_zero()
    }

    /// Rank of `C`, the exponent `n` of `dim rho = p^n`.
    pub fn rank(&self) -> usize {
        self.c.rank()
    }

    /// Exponent `e` with `alpha(g, h) = xi^e`.
    pub fn evaluate(&self, g: &GroupElement, h: &GroupElement) -> Result<u64> {
        if !self.group.contains(g) || !self.group.contains(h) {
            return Err(Error::GroupMismatch);
        }
        Ok(self.evaluate_unchecked(g, h))
    }

    pub(crate) fn evaluate_unchecked(&self, g: &GroupElement, h: &GroupElement) -> u64 {
        self.pairing(h.m(), g.k())
    }

    /// `sum c(i,j) m_i k_j mod p` for raw exponent slices.
    pub fn pairing(&self, m: &[u64], k: &[u64]) -> u64 {
        let p = self.p();
        let mut e = 0;
        for (i, &mi) in m.iter().enumerate() {
            let mi = mi % p;
            if mi == 0 {
                continue;
            }
            for (j, &kj) in k.iter().enumerate() {
                e += self.c.get(i, j) * mi % p * (kj % p);
            }
            e %= p;
        }
        e % p
    }

    /// The alternating form `[[0, C], [-C^T, 0]]` on `(Z/p)^{t+s}`.
    pub fn a_matrix(&self) -> FpMatrix {
        let (t, s) = (self.group.t(), self.group.s());
        let mut a = FpMatrix::zeros(self.p(), t + s, t + s);
        for i in 0..t {
            for j in 0..s {
                let c = self.c.get(i, j);
                a.set(i, t + j, c);
                a.set(t + j, i, (self.p() - c) % self.p());
            }
        }
        a
    }

    /// `G0` as the preimage of `ker A_alpha` under reduction mod `p`: lifts of a
    /// kernel basis (leading entry scaled to 1) together with the `p`-th powers
    /// of the generators of order above `p`.
    pub fn regular_elements(&self) -> RegularSet {
        let g = &self.group;
        let p = self.p();
        let a = self.a_matrix();
        let mut generators: Vec<GroupElement> = g
            .moduli()
            .iter()
            .enumerate()
            .filter(|&(_, &q)| q > p)
            .map(|(i, _)| g.unit(i, p))
            .collect();
        for v in a.kernel_basis() {
            let lead = v
                .iter()
                .copied()
                .find(|&e| e != 0)
                .expect("nonzero kernel vector");
            let scale = crate::fpmatrix::inv_mod(lead, p);
            let exps: Vec<i64> = v.iter().map(|&e| (e * scale % p) as i64).collect();
            generators.push(g.from_exponents(&exps).expect("shape matches"));
        }
        RegularSet {
            generators,
            index_exponent: a.rank(),
        }
    }

    /// Brute force: `alpha(g, x) = alpha(x, g)` for every `x` in `G`.
    pub fn is_regular_bruteforce(&self, g: &GroupElement, limits: &Limits) -> Result<bool> {
        if !self.group.contains(g) {
            return Err(Error::GroupMismatch);
        }
        limits.check("group order", self.group.order(), limits.max_elements)?;
        Ok((0..self.group.order() as usize).all(|i| {
            let x = self.group.element_at(i);
            self.evaluate_unchecked(g, &x) == self.evaluate_unchecked(&x, g)
        }))
    }

    /// Brute-force regular set as a membership mask over enumeration indices.
    pub fn regular_mask_bruteforce(&self, limits: &Limits) -> Result<Vec<bool>> {
        let elements = self.group.enumerate_elements(limits)?;
        Ok(elements
            .par_iter()
            .map(|g| {
                elements
                    .iter()
                    .all(|x| self.evaluate_unchecked(g, x) == self.evaluate_unchecked(x, g))
            })
            .collect())
    }

    /// Membership mask of the subgroup generated by `regular_elements`.
    pub fn regular_mask(&self, limits: &Limits) -> Result<Vec<bool>> {
        let set = subgroup_set(&self.group, &self.regular_elements().generators, limits)?;
        Ok((0..self.group.order() as usize)
            .map(|i| set.contains_index(i))
            .collect())
    }

    /// `alpha(g,h) - alpha(h,g)` as an exponent.
    pub fn commutator(&self, g: &GroupElement, h: &GroupElement) -> u64 {
        let p = self.p();
        (self.evaluate_unchecked(g, h) + p - self.evaluate_unchecked(h, g)) % p
    }

    pub fn restrict(&self, spec: SubgroupSpec) -> Result<Restriction> {
        subgroup(&self.group, spec, &Limits::default())?;
        let (kept_rows, kept_cols) = spec.kept_coordinates(self.group.t(), self.group.s());
        Ok(Restriction {
            spec,
            matrix: self.c.select(&kept_rows, &kept_cols),
            kept_rows,
            kept_cols,
        })
    }

    /// The same matrix on a group that differs only in the orders of the `y_j`.
    /// Evaluation there reads `k_j mod p`.
    pub fn inflate(&self, target: &AbelianPGroup) -> Result<BilinearCocycle> {
        if !self.group.is_elementary_g2() {
            return Err(Error::ShapeMismatch(
                "inflation starts from a group with every y_j of order p".into(),
            ));
        }
        if target.p() != self.p() || target.r() != self.group.r() || target.s() != self.group.s() {
            return Err(Error::ShapeMismatch(format!(
                "cannot inflate from {} to {target}",
                self.group
            )));
        }
        BilinearCocycle::new(target.clone(), self.c.clone())
    }
}

impl fmt::Display for BilinearCocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} C={}", self.group, self.c)
    }
}

/// Number of bilinear classes, `p^{st}`.
pub fn class_count(group: &AbelianPGroup) -> Result<u128> {
    (group.p() as u128)
        .checked_pow((group.t() * group.s()) as u32)
        .ok_or(Error::Overflow("class count"))
}

/// All `p^{st}` classes, lexicographic in the row-major entries of `C` (zero first).
pub fn enumerate_classes<'a>(
    group: &'a AbelianPGroup,
    limits: &Limits,
) -> Result<impl Iterator<Item = BilinearCocycle> + 'a> {
    let total = class_count(group)?;
    limits.check("class count", total, limits.max_classes)?;
    Ok((0..total).map(move |idx| BilinearCocycle {
        group: group.clone(),
        c: FpMatrix::from_index(group.p(), group.t(), group.s(), idx),
    }))
}

/// The `idx`-th class in enumeration order.
pub fn class_at(group: &AbelianPGroup, idx: u128) -> BilinearCocycle {
    BilinearCocycle {
        group: group.clone(),
        c: FpMatrix::from_index(group.p(), group.t(), group.s(), idx),
    }
}

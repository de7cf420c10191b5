//! Irreducible alpha-representations.
//!
//! Convention: `rho(g) rho(h) = xi^{alpha(g,h)} rho(gh)`, and `rho(g)` for a
//! general element is the canonical product
//! `rho(x_1)^{m_1} ... rho(x_t)^{m_t} rho(y_1)^{k_1} ... rho(y_s)^{k_s}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cocycle::BilinearCocycle;
use crate::error::{Error, Result};
use crate::fpmatrix::FpMatrix;
use crate::matrix::{commutant_dimension, intertwiners};
use crate::monomial::MonomialMatrix;
use crate::pgroup::{subgroup_set, transversal, AbelianPGroup, GroupElement, Limits};
use crate::{CycMatrix, CycScalar, SCHEMA};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjRep {
    cocycle: BilinearCocycle,
    dim: usize,
    images: Vec<CycMatrix>,
    monomial: Option<Vec<MonomialMatrix>>,
}

/// Outcome of checking the cocycle identity over pairs of group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub exhaustive: bool,
    pub pairs_checked: u128,
    /// First failing pair, if any.
    pub failure: Option<(GroupElement, GroupElement)>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl ProjRep {
    /// Generator images in the order `x_1..x_t, y_1..y_s`.
    pub fn new(cocycle: BilinearCocycle, images: Vec<CycMatrix>) -> Result<Self> {
        let g = cocycle.group();
        if images.len() != g.rank() {
            return Err(Error::ShapeMismatch(format!(
                "{} generator images for {} generators",
                images.len(),
                g.rank()
            )));
        }
        let dim = images.first().map_or(0, CycMatrix::rows);
        for m in &images {
            if m.rows() != dim || m.cols() != dim || m.p() != g.p() {
                return Err(Error::ShapeMismatch(format!(
                    "generator image is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let monomial = images.iter().map(MonomialMatrix::from_dense).collect();
        Ok(ProjRep {
            cocycle,
            dim,
            images,
            monomial,
        })
    }

    fn from_monomial(cocycle: BilinearCocycle, mono: Vec<MonomialMatrix>) -> Self {
        let dim = mono.first().map_or(1, MonomialMatrix::dim);
        ProjRep {
            cocycle,
            dim,
            images: mono.iter().map(MonomialMatrix::to_dense).collect(),
            monomial: Some(mono),
        }
    }

    pub fn trivial(cocycle: BilinearCocycle) -> Self {
        let p = cocycle.p();
        let n = cocycle.group().rank();
        Self::from_monomial(cocycle, vec![MonomialMatrix::identity(p, 1); n])
    }

    pub fn group(&self) -> &AbelianPGroup {
        self.cocycle.group()
    }

    pub fn cocycle(&self) -> &BilinearCocycle {
        &self.cocycle
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn images(&self) -> &[CycMatrix] {
        &self.images
    }

    pub fn monomial_images(&self) -> Option<&[MonomialMatrix]> {
        self.monomial.as_deref()
    }

    /// Canonical-order product of generator powers (dense).
    pub fn evaluate_rep(&self, g: &GroupElement) -> Result<CycMatrix> {
        if !self.group().contains(g) {
            return Err(Error::GroupMismatch);
        }
        let mut acc = CycMatrix::identity(self.cocycle.p(), self.dim);
        for (img, e) in self.images.iter().zip(g.exponents()) {
            for _ in 0..e {
                acc = acc.mat_mul(img)?;
            }
        }
        Ok(acc)
    }

    /// Canonical-order product on the monomial fast path.
    pub fn evaluate_monomial(&self, g: &GroupElement) -> Option<MonomialMatrix> {
        let mono = self.monomial.as_ref()?;
        let mut acc = MonomialMatrix::identity(self.cocycle.p(), self.dim);
        for (img, e) in mono.iter().zip(g.exponents()) {
            acc = acc.mul(&img.pow(e));
        }
        Some(acc)
    }

    /// `rho(g)` for every element, indexed like `AbelianPGroup::element_at`.
    fn monomial_table(&self, limits: &Limits) -> Result<Option<Vec<MonomialMatrix>>> {
        let Some(mono) = &self.monomial else {
            return Ok(None);
        };
        let g = self.group();
        limits.check("group order", g.order(), limits.max_elements)?;
        let n = g.order() as usize;
        let mut table = Vec::with_capacity(n);
        table.push(MonomialMatrix::identity(g.p(), self.dim));
        for idx in 1..n {
            // drop one from the last nonzero exponent: rho(g) = rho(g') * image
            let el = g.element_at(idx);
            let exps: Vec<u64> = el.exponents().collect();
            let last = exps.iter().rposition(|&e| e != 0).expect("non-identity");
            let prev = idx - g.moduli()[last + 1..].iter().product::<u64>() as usize;
            let next = table[prev].mul(&mono[last]);
            table.push(next);
        }
        Ok(Some(table))
    }

    fn identity_holds_dense(&self, g: &GroupElement, h: &GroupElement) -> Result<bool> {
        let grp = self.group();
        let lhs = self.evaluate_rep(g)?.mat_mul(&self.evaluate_rep(h)?)?;
        let e = self.cocycle.evaluate(g, h)?;
        let rhs = self
            .evaluate_rep(&grp.mul(g, h)?)?
            .scalar_mul(&CycScalar::root_power(grp.p(), e as i64));
        lhs.mat_eq(&rhs)
    }

    /// Checks `rho(g) rho(h) = xi^{alpha(g,h)} rho(gh)` on all pairs.
    pub fn check_identity_exhaustive(&self, limits: &Limits) -> Result<IdentityCheck> {
        let g = self.group();
        let n = g.order() as usize;
        let pairs = g.order() * g.order();
        match self.monomial_table(limits)? {
            Some(table) => {
                let elements: Vec<GroupElement> = (0..n).map(|i| g.element_at(i)).collect();
                let moduli = g.moduli();
                let failure = (0..n).into_par_iter().find_map_first(|a| {
                    let ga = &elements[a];
                    let va: Vec<u64> = ga.exponents().collect();
                    elements.iter().enumerate().find_map(|(b, gb)| {
                        let e = self.cocycle.evaluate_unchecked(ga, gb);
                        let ab = va
                            .iter()
                            .zip(gb.exponents())
                            .zip(moduli)
                            .fold(0usize, |acc, ((&x, y), &q)| {
                                acc * q as usize + ((x + y) % q) as usize
                            });
                        let ok = table[a].product_is(&table[b], &table[ab], e);
                        (!ok).then(|| (ga.clone(), gb.clone()))
                    })
                });
                Ok(IdentityCheck {
                    exhaustive: true,
                    pairs_checked: pairs,
                    failure,
                })
            }
            None => {
                let elements = g.enumerate_elements(limits)?;
                for a in &elements {
                    for b in &elements {
                        if !self.identity_holds_dense(a, b)? {
                            return Ok(IdentityCheck {
                                exhaustive: true,
                                pairs_checked: pairs,
                                failure: Some((a.clone(), b.clone())),
                            });
                        }
                    }
                }
                Ok(IdentityCheck {
                    exhaustive: true,
                    pairs_checked: pairs,
                    failure: None,
                })
            }
        }
    }

    /// Checks the identity on `samples` random pairs, evaluated densely.
    pub fn check_identity_sampled(&self, samples: usize, seed: u64) -> Result<IdentityCheck> {
        let g = self.group();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut random = || {
            let exps: Vec<i64> = g
                .moduli()
                .iter()
                .map(|&q| rng.gen_range(0..q) as i64)
                .collect();
            g.from_exponents(&exps).expect("shape matches")
        };
        for _ in 0..samples {
            let (a, b) = (random(), random());
            let ok = match (self.evaluate_monomial(&a), self.evaluate_monomial(&b)) {
                (Some(ma), Some(mb)) => {
                    let e = self.cocycle.evaluate_unchecked(&a, &b);
                    let mab = self
                        .evaluate_monomial(&g.mul_unchecked(&a, &b))
                        .expect("monomial");
                    ma.mul(&mb) == mab.scale(e)
                }
                _ => self.identity_holds_dense(&a, &b)?,
            };
            if !ok {
                return Ok(IdentityCheck {
                    exhaustive: false,
                    pairs_checked: samples as u128,
                    failure: Some((a, b)),
                });
            }
        }
        Ok(IdentityCheck {
            exhaustive: false,
            pairs_checked: samples as u128,
            failure: None,
        })
    }

    pub fn commutant_dimension(&self) -> Result<usize> {
        commutant_dimension(&self.images, self.dim)
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        Ok(self.commutant_dimension()? == 1)
    }

    /// Dimension of `{M : M rho(gen) = other(gen) M}`.
    pub fn intertwiner_dimension(&self, other: &ProjRep) -> Result<usize> {
        self.check_same_class(other)?;
        if self.dim != other.dim {
            return Ok(0);
        }
        Ok(intertwiners(&self.images, &other.images, self.dim)?.len())
    }

    /// Linear equivalence: a one-dimensional intertwiner space spanned by an invertible matrix.
    pub fn is_equivalent(&self, other: &ProjRep) -> Result<bool> {
        self.check_same_class(other)?;
        if self.dim != other.dim {
            return Ok(false);
        }
        let basis = intertwiners(&self.images, &other.images, self.dim)?;
        Ok(basis.len() == 1 && basis[0].is_invertible())
    }

    fn check_same_class(&self, other: &ProjRep) -> Result<()> {
        if self.cocycle != other.cocycle {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let names = self.group().generator_names();
        json!({
            "schema": SCHEMA,
            "group": self.group().to_string(),
            "cocycle": self.cocycle.matrix().to_string(),
            "dim": self.dim,
            "generators": names
                .iter()
                .zip(&self.images)
                .map(|(n, m)| json!({"name": n, "matrix": m.to_json()}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| {
            v.get(k)
                .ok_or_else(|| Error::Parse(format!("missing field {k:?}")))
        };
        let group = field("group")?
            .as_str()
            .ok_or_else(|| Error::Parse("group must be a string".into()))?;
        let c = field("cocycle")?
            .as_str()
            .ok_or_else(|| Error::Parse("cocycle must be a string".into()))?;
        let cocycle = BilinearCocycle::parse(group, c)?;
        let dim = field("dim")?
            .as_u64()
            .ok_or_else(|| Error::Parse("dim must be an integer".into()))?
            as usize;
        let gens = field("generators")?
            .as_array()
            .ok_or_else(|| Error::Parse("generators must be an array".into()))?;
        let names = cocycle.group().generator_names();
        if gens.len() != names.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} generators listed, group has {}",
                gens.len(),
                names.len()
            )));
        }
        let images = gens
            .iter()
            .zip(&names)
            .map(|(gv, name)| {
                if gv.get("name").and_then(Value::as_str) != Some(name) {
                    return Err(Error::Parse(format!("expected generator {name}")));
                }
                CycMatrix::from_json(cocycle.p(), gv.get("matrix").unwrap_or(&Value::Null))
            })
            .collect::<Result<Vec<_>>>()?;
        let rep = ProjRep::new(cocycle, images)?;
        if rep.dim != dim {
            return Err(Error::ShapeMismatch(format!(
                "dim {dim} but matrices are {}x{}",
                rep.dim, rep.dim
            )));
        }
        Ok(rep)
    }
}

/// A representation of a subgroup `H`, queried at elements given in ambient coordinates.
pub trait SubgroupRep {
    fn dim(&self) -> usize;
    fn image(&self, h: &GroupElement) -> Result<CycMatrix>;
}

/// The one-dimensional representation `h -> [1]`.
pub struct TrivialRep {
    pub p: u64,
}

impl SubgroupRep for TrivialRep {
    fn dim(&self) -> usize {
        1
    }

    fn image(&self, _h: &GroupElement) -> Result<CycMatrix> {
        Ok(CycMatrix::identity(self.p, 1))
    }
}

/// Checks `rho_H(h) rho_H(h') = xi^{alpha(h,h')} rho_H(hh')` on `H`, exhaustively for
/// small `H` and on generator pairs otherwise.
fn check_subgroup_rep(
    alpha: &BilinearCocycle,
    members: &[GroupElement],
    h_gens: &[GroupElement],
    rho: &dyn SubgroupRep,
) -> Result<()> {
    let g = alpha.group();
    let pool: &[GroupElement] = if members.len() <= 64 { members } else { h_gens };
    for a in pool {
        for b in pool {
            let lhs = rho.image(a)?.mat_mul(&rho.image(b)?)?;
            let e = alpha.evaluate(a, b)?;
            let rhs = rho
                .image(&g.mul(a, b)?)?
                .scalar_mul(&CycScalar::root_power(g.p(), e as i64));
            if !lhs.mat_eq(&rhs)? {
                return Err(Error::CocycleMismatch(format!(
                    "subgroup representation fails at ({a}, {b})"
                )));
            }
        }
    }
    Ok(())
}

/// Induces `rho_H` from `H = <h_gens>` to `G` along `transversal(G, H)`:
/// block `(i, j)` of `Gamma(g)` is `alpha(g, t_j) alpha(t_i, h)^{-1} rho_H(h)` where
/// `h = t_i^{-1} g t_j` lies in `H`, and zero otherwise.
pub fn induce(
    alpha: &BilinearCocycle,
    h_gens: &[GroupElement],
    rho: &dyn SubgroupRep,
    limits: &Limits,
) -> Result<ProjRep> {
    let g = alpha.group();
    let p = g.p();
    let set = subgroup_set(g, h_gens, limits)?;
    let members: Vec<GroupElement> = (0..g.order() as usize)
        .filter(|&i| set.contains_index(i))
        .map(|i| g.element_at(i))
        .collect();
    check_subgroup_rep(alpha, &members, h_gens, rho)?;
    let reps = transversal(g, h_gens, limits)?;
    let d = rho.dim();
    let n = reps.len();
    let mut images = Vec::with_capacity(g.rank());
    for x in g.generators() {
        let mut m = CycMatrix::zeros(p, n * d, n * d);
        for (j, tj) in reps.iter().enumerate() {
            let y = g.mul_unchecked(&x, tj);
            let (i, h) = reps
                .iter()
                .enumerate()
                .map(|(i, ti)| (i, g.mul_unchecked(&g.inv(ti), &y)))
                .find(|(_, h)| set.contains(g, h))
                .ok_or_else(|| Error::NotASubgroup("transversal misses a coset".into()))?;
            let e =
                (alpha.evaluate_unchecked(&x, tj) + p - alpha.evaluate_unchecked(&reps[i], &h)) % p;
            let block = rho
                .image(&h)?
                .scalar_mul(&CycScalar::root_power(p, e as i64));
            for a in 0..d {
                for b in 0..d {
                    m.set(i * d + a, j * d + b, block.get(a, b).clone());
                }
            }
        }
        images.push(m);
    }
    ProjRep::new(alpha.clone(), images)
}

/// Generators of the index-`p^n` subgroup `G3` on which `alpha` is trivial:
/// all `x_i` and, per non-pivot column `j` of `RREF(C)`, `y_j prod_l y_{k_l}^{-a_{l,j}}`.
pub fn trivializing_subgroup(alpha: &BilinearCocycle) -> Vec<GroupElement> {
    let g = alpha.group();
    let p = g.p();
    let (r, pivots) = alpha.matrix().rref();
    let mut gens: Vec<GroupElement> = (0..g.t()).map(|i| g.x(i)).collect();
    for j in (0..g.s()).filter(|j| !pivots.contains(j)) {
        let mut k = vec![0i64; g.s()];
        k[j] = 1;
        for (l, &kl) in pivots.iter().enumerate() {
            k[kl] = ((p - r.get(l, j)) % p) as i64;
        }
        gens.push(g.element(&vec![0; g.t()], &k).expect("shape matches"));
    }
    gens
}

fn require_elementary(alpha: &BilinearCocycle) -> Result<()> {
    if alpha.group().is_elementary_g2() {
        Ok(())
    } else {
        Err(Error::NotElementaryG2)
    }
}

/// Induction of the trivial representation of `G3`, written out in closed form.
///
/// Basis vectors are indexed by `r in (Z/p)^n` (first pivot most significant),
/// standing for the coset representative `prod_l y_{k_l}^{r_l}`. Then
/// `x_i` acts diagonally by `xi^{-(C k)_i}` and `y_j` translates `r` by column
/// `j` of the nonzero rows of `RREF(C)`.
pub fn construct_general(alpha: &BilinearCocycle) -> Result<ProjRep> {
    require_elementary(alpha)?;
    if alpha.is_trivial() {
        return Ok(ProjRep::trivial(alpha.clone()));
    }
    let g = alpha.group();
    let p = g.p();
    let c = alpha.matrix();
    let (rref, pivots) = c.rref();
    let n = pivots.len();
    let d = (p as usize).pow(n as u32);
    let coords = |mut idx: usize| {
        let mut r = vec![0u64; n];
        for slot in r.iter_mut().rev() {
            *slot = (idx % p as usize) as u64;
            idx /= p as usize;
        }
        r
    };
    let index = |r: &[u64]| {
        r.iter()
            .fold(0usize, |acc, &e| acc * p as usize + e as usize)
    };
    let mut images = Vec::with_capacity(g.rank());
    for i in 0..g.t() {
        let phase = (0..d)
            .map(|idx| {
                let r = coords(idx);
                let ck: u64 = pivots
                    .iter()
                    .zip(&r)
                    .map(|(&kl, &rl)| c.get(i, kl) * rl)
                    .sum::<u64>()
                    % p;
                (p - ck) % p
            })
            .collect();
        images.push(MonomialMatrix::diagonal(p, phase));
    }
    for j in 0..g.s() {
        let perm = (0..d)
            .map(|idx| {
                let r = coords(idx);
                let moved: Vec<u64> = r
                    .iter()
                    .enumerate()
                    .map(|(l, &rl)| (rl + rref.get(l, j)) % p)
                    .collect();
                index(&moved)
            })
            .collect();
        images.push(MonomialMatrix::new(p, perm, vec![0; d]));
    }
    Ok(ProjRep::from_monomial(alpha.clone(), images))
}

fn clock(p: u64, c: u64) -> MonomialMatrix {
    MonomialMatrix::diagonal(p, (0..p).map(|m| (p - m * c % p) % p).collect())
}

fn shift(p: u64) -> MonomialMatrix {
    MonomialMatrix::new(
        p,
        (0..p as usize).map(|n| (n + 1) % p as usize).collect(),
        vec![0; p as usize],
    )
}

/// For `s = t` and a generalized permutation pattern `C` (one nonzero `c(i, j_i)` per row
/// and column): `x_i` acts by `diag(xi^{-m c(i,j_i)})` and `y_{j_i}` by the cyclic shift,
/// both in tensor slot `i` of `(C^p)^{tensor t}`.
pub fn construct_tensor(alpha: &BilinearCocycle) -> Result<ProjRep> {
    require_elementary(alpha)?;
    if alpha.is_trivial() {
        return Ok(ProjRep::trivial(alpha.clone()));
    }
    let g = alpha.group();
    let (t, s, p) = (g.t(), g.s(), g.p());
    let c = alpha.matrix();
    if s != t {
        return Err(Error::PatternMismatch(format!(
            "needs s = t, got t = {t}, s = {s}"
        )));
    }
    let mut partner = vec![0usize; t];
    for (i, slot) in partner.iter_mut().enumerate() {
        let nz: Vec<usize> = (0..s).filter(|&j| c.get(i, j) != 0).collect();
        if nz.len() != 1 {
            return Err(Error::PatternMismatch(format!(
                "row {} has {} nonzero entries",
                i + 1,
                nz.len()
            )));
        }
        *slot = nz[0];
    }
    for j in 0..s {
        let hits = partner.iter().filter(|&&x| x == j).count();
        if hits != 1 {
            return Err(Error::PatternMismatch(format!(
                "column {} has {hits} nonzero entries",
                j + 1
            )));
        }
    }
    let slot = |i: usize, m: MonomialMatrix| {
        (0..t).fold(MonomialMatrix::identity(p, 1), |acc, a| {
            acc.kron(&if a == i {
                m.clone()
            } else {
                MonomialMatrix::identity(p, p as usize)
            })
        })
    };
    let mut images: Vec<MonomialMatrix> = (0..t)
        .map(|i| slot(i, clock(p, c.get(i, partner[i]))))
        .collect();
    for j in 0..s {
        let i = partner
            .iter()
            .position(|&x| x == j)
            .expect("pattern checked");
        images.push(slot(i, shift(p)));
    }
    Ok(ProjRep::from_monomial(alpha.clone(), images))
}

/// Builds the representation on `G1 x (Z/p)^s` for the same matrix and reads it on
/// `G`; the `y_j` images have order `p`, so `rho` factors through `y_j -> y_j <y_j^p>`.
pub fn construct_inflated(alpha: &BilinearCocycle) -> Result<ProjRep> {
    if alpha.is_trivial() {
        return Ok(ProjRep::trivial(alpha.clone()));
    }
    let quotient = alpha.group().elementary_quotient();
    let beta = BilinearCocycle::new(quotient, alpha.matrix().clone())?;
    let rho = construct_general(&beta)?;
    Ok(ProjRep::from_monomial(
        alpha.clone(),
        rho.monomial.expect("construct_general is monomial"),
    ))
}

/// Scaling exponent of `rho^{(z)}(x) = alpha^{-1}(xz, z^{-1}) alpha^{-1}(z, z^{-1}xz) alpha(z, z^{-1}) rho(z^{-1}xz)`
/// relative to `rho(x)` on an abelian group; for bilinear alpha it is `alpha(x,z) - alpha(z,x)`.
pub fn conjugation_exponent(alpha: &BilinearCocycle, z: &GroupElement, x: &GroupElement) -> u64 {
    let g = alpha.group();
    let p = g.p();
    let zi = g.inv(z);
    let xz = g.mul_unchecked(x, z);
    let neg = alpha.evaluate_unchecked(&xz, &zi) + alpha.evaluate_unchecked(z, x);
    (alpha.evaluate_unchecked(z, &zi) + 2 * p - neg % p) % p
}

/// The shortened scaling `alpha^{-1}(z, x)`.
pub fn conjugation_exponent_simplified(
    alpha: &BilinearCocycle,
    z: &GroupElement,
    x: &GroupElement,
) -> u64 {
    let p = alpha.p();
    (p - alpha.evaluate_unchecked(z, x)) % p
}

/// `rho^{(z)}`: every generator image scaled by its conjugation exponent.
pub fn conjugate_rep(rho: &ProjRep, z: &GroupElement) -> Result<ProjRep> {
    let g = rho.group();
    if !g.contains(z) {
        return Err(Error::GroupMismatch);
    }
    let images = g
        .generators()
        .iter()
        .zip(&rho.images)
        .map(|(x, m)| {
            let e = conjugation_exponent(&rho.cocycle, z, x);
            m.scalar_mul(&CycScalar::root_power(g.p(), e as i64))
        })
        .collect();
    ProjRep::new(rho.cocycle.clone(), images)
}

/// For each non-identity `z` in the transversal of `G3`, a generator `x_i` whose
/// conjugation exponent is nonzero, so `rho^{(z)}` and `rho` differ on `G3`.
/// `None` if some `z` has no witness.
pub fn mackey_witnesses(
    alpha: &BilinearCocycle,
    limits: &Limits,
) -> Result<Option<Vec<(GroupElement, usize)>>> {
    let g = alpha.group();
    let reps = transversal(g, &trivializing_subgroup(alpha), limits)?;
    let mut out = Vec::new();
    for z in reps.into_iter().filter(|z| !z.is_identity()) {
        match (0..g.t()).find(|&i| conjugation_exponent(alpha, &z, &g.x(i)) != 0) {
            Some(i) => out.push((z, i)),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// Checks the dimension law `dim = p^{rank C}`.
pub fn dim_matches_rank(rho: &ProjRep) -> bool {
    (rho.cocycle.p() as usize).checked_pow(rho.cocycle.rank() as u32) == Some(rho.dim)
}

/// Generic-induction counterpart of `construct_general`, used as a cross-check.
pub fn construct_by_induction(alpha: &BilinearCocycle, limits: &Limits) -> Result<ProjRep> {
    require_elementary(alpha)?;
    induce(
        alpha,
        &trivializing_subgroup(alpha),
        &TrivialRep { p: alpha.p() },
        limits,
    )
}

/// Class with a single nonzero entry, handy for tests and examples.
pub fn elementary_class(
    group: &AbelianPGroup,
    i: usize,
    j: usize,
    c: u64,
) -> Result<BilinearCocycle> {
    let mut m = FpMatrix::zeros(group.p(), group.t(), group.s());
    m.set(i, j, c);
    BilinearCocycle::new(group.clone(), m)
}

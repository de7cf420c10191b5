//! Finite abelian p-groups `G = G1 x G2` with
//! `G1 = Z/p^{r_1} x ... x Z/p^{r_t}` generated by `x_1..x_t` and
//! `G2 = Z/p^{n_1} x ... x Z/p^{n_s}` generated by `y_1..y_s`.
//!
//! Elements are exponent vectors `(m_1..m_t, k_1..k_s)`, the canonical word
//! `x_1^{m_1}...x_t^{m_t} y_1^{k_1}...y_s^{k_s}`. Every ordering in the crate
//! (enumeration, transversals, generator lists) follows this x-then-y layout.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Runtime caps for the brute-force enumerations. Exceeding a cap is an
/// error, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_elements: u128,
    pub max_matrices: u128,
    pub max_classes: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 1_000_000,
            max_matrices: 10_000_000,
            max_classes: 100_000,
        }
    }
}

impl Limits {
    pub(crate) fn check(&self, what: &'static str, size: u128, cap: u128) -> Result<()> {
        if size > cap {
            Err(Error::TooLarge { what, size, cap })
        } else {
            Ok(())
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianPGroup {
    p: u64,
    r: Vec<u32>,
    n: Vec<u32>,
    moduli: Vec<u64>,
    order: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    m: Vec<u64>,
    k: Vec<u64>,
}

impl GroupElement {
    pub fn m(&self) -> &[u64] {
        &self.m
    }

    pub fn k(&self) -> &[u64] {
        &self.k
    }

    pub fn is_identity(&self) -> bool {
        self.m.iter().chain(&self.k).all(|&e| e == 0)
    }

    /// Exponent vector in canonical order.
    pub fn exponents(&self) -> impl Iterator<Item = u64> + '_ {
        self.m.iter().chain(self.k.iter()).copied()
    }

    /// Exponent vector reduced mod `p`, the coordinates seen by a bilinear cocycle.
    pub fn reduced(&self, p: u64) -> Vec<u64> {
        self.exponents().map(|e| e % p).collect()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let names = self
            .m
            .iter()
            .enumerate()
            .map(|(i, &e)| ('x', i, e))
            .chain(self.k.iter().enumerate().map(|(j, &e)| ('y', j, e)));
        for (c, i, e) in names.filter(|&(_, _, e)| e != 0) {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{c}{}", i + 1)?;
            } else {
                write!(f, "{c}{}^{e}", i + 1)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

fn check_exponents(list: &[u32]) -> Result<()> {
    if list.is_empty() {
        return Err(Error::EmptyFactorList);
    }
    if list.contains(&0) || list.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotSorted(list.to_vec()));
    }
    Ok(())
}

impl AbelianPGroup {
    /// Validated group descriptor for `Z/p^{r_1} x ... x Z/p^{r_t} x Z/p^{n_1} x ... x Z/p^{n_s}`.
    pub fn new(p: u64, r: &[u32], n: &[u32]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        check_exponents(r)?;
        check_exponents(n)?;
        let mut moduli = Vec::with_capacity(r.len() + n.len());
        let mut order: u128 = 1;
        for &e in r.iter().chain(n) {
            let q = p.checked_pow(e).ok_or(Error::Overflow("factor order"))?;
            // keep room for exponent sums in u64
            if q > u64::MAX / 2 {
                return Err(Error::Overflow("factor order"));
            }
            moduli.push(q);
            order = order
                .checked_mul(q as u128)
                .ok_or(Error::Overflow("group order"))?;
        }
        Ok(AbelianPGroup {
            p,
            r: r.to_vec(),
            n: n.to_vec(),
            moduli,
            order,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> &[u32] {
        &self.r
    }

    pub fn n(&self) -> &[u32] {
        &self.n
    }

    pub fn t(&self) -> usize {
        self.r.len()
    }

    pub fn s(&self) -> usize {
        self.n.len()
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    /// Orders of the cyclic factors in canonical order.
    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_elementary_g2(&self) -> bool {
        self.n.iter().all(|&e| e == 1)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            m: vec![0; self.t()],
            k: vec![0; self.s()],
        }
    }

    /// The element with a single `e` at canonical coordinate `idx`, reduced.
    pub fn unit(&self, idx: usize, e: u64) -> GroupElement {
        let mut g = self.identity();
        let q = self.moduli[idx];
        if idx < self.t() {
            g.m[idx] = e % q;
        } else {
            g.k[idx - self.t()] = e % q;
        }
        g
    }

    pub fn x(&self, i: usize) -> GroupElement {
        self.unit(i, 1)
    }

    pub fn y(&self, j: usize) -> GroupElement {
        self.unit(self.t() + j, 1)
    }

    /// Generators `x_1..x_t, y_1..y_s`.
    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.rank()).map(|i| self.unit(i, 1)).collect()
    }

    pub fn generator_names(&self) -> Vec<String> {
        (1..=self.t())
            .map(|i| format!("x{i}"))
            .chain((1..=self.s()).map(|j| format!("y{j}")))
            .collect()
    }

    /// Element from exponents, each reduced modulo its factor order.
    pub fn element(&self, m: &[i64], k: &[i64]) -> Result<GroupElement> {
        if m.len() != self.t() || k.len() != self.s() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} x-exponents and {} y-exponents, got {} and {}",
                self.t(),
                self.s(),
                m.len(),
                k.len()
            )));
        }
        let reduce = |e: i64, q: u64| e.rem_euclid(q as i64) as u64;
        Ok(GroupElement {
            m: m.iter()
                .zip(&self.moduli)
                .map(|(&e, &q)| reduce(e, q))
                .collect(),
            k: k.iter()
                .zip(&self.moduli[self.t()..])
                .map(|(&e, &q)| reduce(e, q))
                .collect(),
        })
    }

    /// Element from a canonical exponent vector (x's then y's), reduced.
    pub fn from_exponents(&self, v: &[i64]) -> Result<GroupElement> {
        if v.len() != self.rank() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} exponents, got {}",
                self.rank(),
                v.len()
            )));
        }
        self.element(&v[..self.t()], &v[self.t()..])
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.m.len() == self.t()
            && g.k.len() == self.s()
            && g.exponents().zip(&self.moduli).all(|(e, &q)| e < q)
    }

    fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "{g} is not an element of {self}"
            )))
        }
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.mul_unchecked(g, h))
    }

    pub(crate) fn mul_unchecked(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let t = self.t();
        GroupElement {
            m: (0..t).map(|i| (g.m[i] + h.m[i]) % self.moduli[i]).collect(),
            k: (0..self.s())
                .map(|j| (g.k[j] + h.k[j]) % self.moduli[t + j])
                .collect(),
        }
    }

    pub fn inv(&self, g: &GroupElement) -> GroupElement {
        let t = self.t();
        GroupElement {
            m: (0..t)
                .map(|i| (self.moduli[i] - g.m[i]) % self.moduli[i])
                .collect(),
            k: (0..self.s())
                .map(|j| (self.moduli[t + j] - g.k[j]) % self.moduli[t + j])
                .collect(),
        }
    }

    pub fn pow(&self, g: &GroupElement, e: u64) -> GroupElement {
        let t = self.t();
        let scale = |x: u64, q: u64| ((x as u128 * e as u128) % q as u128) as u64;
        GroupElement {
            m: (0..t).map(|i| scale(g.m[i], self.moduli[i])).collect(),
            k: (0..self.s())
                .map(|j| scale(g.k[j], self.moduli[t + j]))
                .collect(),
        }
    }

    /// Order of `g`: the lcm (here: max, all factors being p-power cyclic) of coordinate orders.
    pub fn element_order(&self, g: &GroupElement) -> u64 {
        g.exponents()
            .zip(&self.moduli)
            .map(|(e, &q)| q / num_integer::gcd(e, q))
            .max()
            .unwrap_or(1)
    }

    /// Position of `g` in lexicographic enumeration order (mixed radix, `x_1` most significant).
    pub fn index_of(&self, g: &GroupElement) -> usize {
        g.exponents()
            .zip(&self.moduli)
            .fold(0usize, |acc, (e, &q)| acc * q as usize + e as usize)
    }

    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        let mut v = vec![0u64; self.rank()];
        for (slot, &q) in v.iter_mut().zip(&self.moduli).rev() {
            *slot = (idx % q as usize) as u64;
            idx /= q as usize;
        }
        let k = v.split_off(self.t());
        GroupElement { m: v, k }
    }

    /// All elements exactly once, lexicographic on `(m, k)`.
    pub fn enumerate_elements(&self, limits: &Limits) -> Result<Vec<GroupElement>> {
        limits.check("group order", self.order, limits.max_elements)?;
        Ok((0..self.order as usize)
            .map(|i| self.element_at(i))
            .collect())
    }

    /// The same group with every `y_j` of order `p`: the quotient by `<y_j^p>`.
    pub fn elementary_quotient(&self) -> AbelianPGroup {
        AbelianPGroup::new(self.p, &self.r, &vec![1; self.s()]).expect("valid quotient")
    }

    /// Image of `g` under `y_j -> y_j N`, `N = <y_j^p>`.
    pub fn project_to_elementary(&self, g: &GroupElement) -> GroupElement {
        GroupElement {
            m: g.m.clone(),
            k: g.k.iter().map(|&e| e % self.p).collect(),
        }
    }
}

impl fmt::Display for AbelianPGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| {
            v.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "p={};r={};s={}", self.p, join(&self.r), join(&self.n))
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad exponent {x:?}")))
        })
        .collect()
}

/// Parses the descriptor format `p=<int>;r=<list>;s=<list>`.
impl FromStr for AbelianPGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = None;
        let mut r = None;
        let mut n = None;
        for part in s.split(';').map(str::trim).filter(|x| !x.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
            match key.trim() {
                "p" => {
                    p = Some(
                        value
                            .trim()
                            .parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad prime {value:?}")))?,
                    )
                }
                "r" => r = Some(parse_list(value)?),
                "s" => n = Some(parse_list(value)?),
                other => return Err(Error::Parse(format!("unknown key {other:?}"))),
            }
        }
        let p = p.ok_or_else(|| Error::Parse("missing p".into()))?;
        let r = r.ok_or_else(|| Error::Parse("missing r".into()))?;
        let n = n.ok_or_else(|| Error::Parse("missing s".into()))?;
        AbelianPGroup::new(p, &r, &n)
    }
}

/// Canonical small-index subgroups. Indices are 0-based; the text form is 1-based
/// (`X1`, `Y2`, `A1,2`, `B1`, `C2,1`, `FULL`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupSpec {
    /// `<x_i^p> x prod_{k != i} <x_k> x G2`, index p.
    X(usize),
    /// `G1 x prod_{r != j} <y_r>`, index p.
    Y(usize),
    /// `<x_i^p> x <x_j^p> x prod_{k != i,j} <x_k> x G2`, index p^2.
    A(usize, usize),
    /// `<x_i^{p^2}> x prod_{k != i} <x_k> x G2`, index p^2.
    B(usize),
    /// `<x_i^p> x prod_{k != i} <x_k> x prod_{r != j} <y_r>`, index p^2.
    C(usize, usize),
    Full,
}

impl SubgroupSpec {
    /// log_p of the index.
    pub fn index_exponent(&self) -> u32 {
        match self {
            SubgroupSpec::X(_) | SubgroupSpec::Y(_) => 1,
            SubgroupSpec::A(..) | SubgroupSpec::B(_) | SubgroupSpec::C(..) => 2,
            SubgroupSpec::Full => 0,
        }
    }

    /// Rows and columns of the cocycle matrix that survive restriction.
    pub fn kept_coordinates(&self, t: usize, s: usize) -> (Vec<usize>, Vec<usize>) {
        let rows = |skip: &[usize]| (0..t).filter(|i| !skip.contains(i)).collect::<Vec<_>>();
        let cols = |skip: &[usize]| (0..s).filter(|j| !skip.contains(j)).collect::<Vec<_>>();
        match *self {
            SubgroupSpec::X(i) | SubgroupSpec::B(i) => (rows(&[i]), cols(&[])),
            SubgroupSpec::Y(j) => (rows(&[]), cols(&[j])),
            SubgroupSpec::A(i, j) => (rows(&[i, j]), cols(&[])),
            SubgroupSpec::C(i, j) => (rows(&[i]), cols(&[j])),
            SubgroupSpec::Full => (rows(&[]), cols(&[])),
        }
    }

    /// Every valid spec of the given index exponent for `g`, in a fixed order.
    pub fn all_valid(g: &AbelianPGroup, index_exponent: u32) -> Vec<SubgroupSpec> {
        let (t, s) = (g.t(), g.s());
        let mut out = Vec::new();
        match index_exponent {
            0 => out.push(SubgroupSpec::Full),
            1 => {
                out.extend((0..t).map(SubgroupSpec::X));
                out.extend((0..s).map(SubgroupSpec::Y));
            }
            2 => {
                for i in 0..t {
                    for j in 0..t {
                        if i < j {
                            out.push(SubgroupSpec::A(i, j));
                        }
                    }
                }
                out.extend((0..t).map(SubgroupSpec::B));
                for i in 0..t {
                    for j in 0..s {
                        out.push(SubgroupSpec::C(i, j));
                    }
                }
            }
            _ => {}
        }
        out.retain(|spec| subgroup(g, *spec, &Limits::default()).is_ok());
        out
    }
}

impl fmt::Display for SubgroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SubgroupSpec::X(i) => write!(f, "X{}", i + 1),
            SubgroupSpec::Y(j) => write!(f, "Y{}", j + 1),
            SubgroupSpec::A(i, j) => write!(f, "A{},{}", i + 1, j + 1),
            SubgroupSpec::B(i) => write!(f, "B{}", i + 1),
            SubgroupSpec::C(i, j) => write!(f, "C{},{}", i + 1, j + 1),
            SubgroupSpec::Full => f.write_str("FULL"),
        }
    }
}

impl FromStr for SubgroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("full") {
            return Ok(SubgroupSpec::Full);
        }
        let bad = || Error::Parse(format!("bad subgroup form {s:?}"));
        let mut chars = s.chars();
        let tag = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let idx: Vec<usize> = chars
            .as_str()
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| v >= 1)
                    .map(|v| v - 1)
            })
            .collect::<Option<_>>()
            .ok_or_else(bad)?;
        match (tag, idx.as_slice()) {
            ('X', &[i]) => Ok(SubgroupSpec::X(i)),
            ('Y', &[j]) => Ok(SubgroupSpec::Y(j)),
            ('A', &[i, j]) => Ok(SubgroupSpec::A(i, j)),
            ('B', &[i]) => Ok(SubgroupSpec::B(i)),
            ('C', &[i, j]) => Ok(SubgroupSpec::C(i, j)),
            _ => Err(bad()),
        }
    }
}

/// A canonical subgroup: generators with their orders and the index in `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSubgroup {
    pub spec: SubgroupSpec,
    pub generators: Vec<(GroupElement, u64)>,
    pub index: u128,
}

impl CanonicalSubgroup {
    pub fn elements(&self) -> Vec<GroupElement> {
        self.generators.iter().map(|(g, _)| g.clone()).collect()
    }
}

/// Generators and index of the canonical subgroup `spec` of `g`. The index is
/// re-derived by enumeration whenever `|G|` is under `limits.max_elements`.
pub fn subgroup(
    g: &AbelianPGroup,
    spec: SubgroupSpec,
    limits: &Limits,
) -> Result<CanonicalSubgroup> {
    let (t, s) = (g.t(), g.s());
    let p = g.p();
    let invalid = |why: String| Err(Error::InvalidForm(format!("{spec}: {why}")));
    // exponent applied to each x_i (1 = untouched, 0 = dropped y is handled separately)
    let mut x_pow = vec![1u64; t];
    let mut drop_y = vec![false; s];
    match spec {
        SubgroupSpec::X(i) => {
            if i >= t {
                return invalid(format!("needs 1 <= i <= t = {t}"));
            }
            x_pow[i] = p;
        }
        SubgroupSpec::Y(j) => {
            if j >= s {
                return invalid(format!("needs 1 <= j <= s = {s}"));
            }
            if g.n()[j] != 1 {
                return invalid(format!("y{} must have order p", j + 1));
            }
            drop_y[j] = true;
        }
        SubgroupSpec::A(i, j) => {
            if t < 2 || i >= t || j >= t || i == j {
                return invalid(format!("needs distinct i, j <= t = {t}"));
            }
            x_pow[i] = p;
            x_pow[j] = p;
        }
        SubgroupSpec::B(i) => {
            if i >= t {
                return invalid(format!("needs 1 <= i <= t = {t}"));
            }
            if g.r()[i] < 2 {
                return invalid(format!(
                    "x{} has order p, so x^(p^2) = 1 gives index p",
                    i + 1
                ));
            }
            x_pow[i] = p * p;
        }
        SubgroupSpec::C(i, j) => {
            if i >= t || j >= s {
                return invalid(format!("needs i <= t = {t} and j <= s = {s}"));
            }
            if g.n()[j] != 1 {
                return invalid(format!("y{} must have order p", j + 1));
            }
            x_pow[i] = p;
            drop_y[j] = true;
        }
        SubgroupSpec::Full => {}
    }
    let mut generators = Vec::new();
    for (i, &e) in x_pow.iter().enumerate() {
        let q = g.moduli()[i];
        if e < q {
            generators.push((g.unit(i, e), q / e));
        }
    }
    if generators.is_empty() && spec != SubgroupSpec::Full {
        return invalid("the subgroup lies inside G2".into());
    }
    for (j, &dropped) in drop_y.iter().enumerate() {
        if !dropped {
            generators.push((g.y(j), g.moduli()[t + j]));
        }
    }
    let index = (p as u128).pow(spec.index_exponent());
    if g.order() <= limits.max_elements {
        let gens: Vec<GroupElement> = generators.iter().map(|(x, _)| x.clone()).collect();
        let h = generated_subgroup(g, &gens, limits)?;
        if g.order() != index * h.len() as u128 {
            return invalid(format!("generated subgroup has order {}", h.len()));
        }
    }
    Ok(CanonicalSubgroup {
        spec,
        generators,
        index,
    })
}

/// Membership bitmap of a subgroup over element indices.
#[derive(Clone, Debug)]
pub struct SubgroupSet {
    present: Vec<bool>,
    members: Vec<usize>,
}

impl SubgroupSet {
    fn trivial(g: &AbelianPGroup) -> Self {
        let mut present = vec![false; g.order() as usize];
        present[0] = true;
        SubgroupSet {
            present,
            members: vec![0],
        }
    }

    pub fn contains_index(&self, idx: usize) -> bool {
        self.present[idx]
    }

    pub fn contains(&self, g: &AbelianPGroup, x: &GroupElement) -> bool {
        self.present[g.index_of(x)]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Smallest `e >= 1` with `x^e` in the set.
    fn relative_order(&self, g: &AbelianPGroup, x: &GroupElement) -> u64 {
        let mut acc = x.clone();
        let mut e = 1;
        while !self.contains(g, &acc) {
            acc = g.mul_unchecked(&acc, x);
            e += 1;
        }
        e
    }

    /// Replaces the set by `<set, x>`; returns the relative order of `x`.
    fn adjoin(&mut self, g: &AbelianPGroup, x: &GroupElement) -> u64 {
        let o = self.relative_order(g, x);
        let base: Vec<GroupElement> = self.members.iter().map(|&i| g.element_at(i)).collect();
        let mut shift = g.identity();
        for _ in 1..o {
            shift = g.mul_unchecked(&shift, x);
            for b in &base {
                let idx = g.index_of(&g.mul_unchecked(b, &shift));
                if !self.present[idx] {
                    self.present[idx] = true;
                    self.members.push(idx);
                }
            }
        }
        o
    }
}

/// Membership set of `<gens>`.
pub fn subgroup_set(
    g: &AbelianPGroup,
    gens: &[GroupElement],
    limits: &Limits,
) -> Result<SubgroupSet> {
    limits.check("group order", g.order(), limits.max_elements)?;
    let mut set = SubgroupSet::trivial(g);
    for x in gens {
        if !g.contains(x) {
            return Err(Error::NotASubgroup(format!("{x} is not an element of {g}")));
        }
        set.adjoin(g, x);
    }
    Ok(set)
}

/// Elements of `<gens>` in lexicographic order.
pub fn generated_subgroup(
    g: &AbelianPGroup,
    gens: &[GroupElement],
    limits: &Limits,
) -> Result<Vec<GroupElement>> {
    let set = subgroup_set(g, gens, limits)?;
    let mut idx = set.members.clone();
    idx.sort_unstable();
    Ok(idx.into_iter().map(|i| g.element_at(i)).collect())
}

/// Coset representatives of `H = <h_gens>` in `G`, identity first, sorted lexicographically.
///
/// Representatives are products of powers of `G`'s generators: walking
/// `x_1..x_t, y_1..y_s` in order, each generator contributes the exponents
/// below its order relative to the subgroup generated so far.
pub fn transversal(
    g: &AbelianPGroup,
    h_gens: &[GroupElement],
    limits: &Limits,
) -> Result<Vec<GroupElement>> {
    let mut k = subgroup_set(g, h_gens, limits)?;
    let mut reps = vec![g.identity()];
    for x in g.generators() {
        let o = k.adjoin(g, &x);
        if o > 1 {
            let mut next = Vec::with_capacity(reps.len() * o as usize);
            for r in &reps {
                for e in 0..o {
                    next.push(g.mul_unchecked(r, &g.pow(&x, e)));
                }
            }
            reps = next;
        }
    }
    reps.sort();
    Ok(reps)
}

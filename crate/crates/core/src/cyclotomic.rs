//! Exact arithmetic in `Q(xi_p)`, `xi = exp(2 pi i / p)`.
//!
//! Elements are stored in the power basis `1, xi, ..., xi^{p-2}` with
//! `xi^{p-1} = -(1 + xi + ... + xi^{p-2})`. Products go through the length-`p`
//! representation modulo `x^p - 1` and are reduced back.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Exact coefficient types usable in `Cyclotomic<T>`.
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + fmt::Display + Num + Signed + FromPrimitive + Send + Sync
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + fmt::Debug + fmt::Display + Num + Signed + FromPrimitive + Send + Sync
{
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic<T> {
    p: u64,
    coeffs: Vec<T>,
}

fn int<T: Coeff>(v: i64) -> T {
    T::from_i64(v).expect("small integer fits the coefficient type")
}

impl<T: Coeff> Cyclotomic<T> {
    pub fn zero(p: u64) -> Self {
        Cyclotomic {
            p,
            coeffs: vec![T::zero(); (p - 1) as usize],
        }
    }

    pub fn one(p: u64) -> Self {
        Self::from_coeff(p, T::one())
    }

    pub fn from_coeff(p: u64, c: T) -> Self {
        let mut z = Self::zero(p);
        z.coeffs[0] = c;
        z
    }

    pub fn from_integer(p: u64, v: i64) -> Self {
        Self::from_coeff(p, int(v))
    }

    /// Power-basis coefficients; the length must be `p - 1`.
    pub fn new(p: u64, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() as u64 != p - 1 {
            return Err(Error::ShapeMismatch(format!(
                "expected {} coefficients for p = {p}, got {}",
                p - 1,
                coeffs.len()
            )));
        }
        Ok(Cyclotomic { p, coeffs })
    }

    /// `xi^{e mod p}` in the power basis.
    pub fn root_power(p: u64, e: i64) -> Self {
        let e = e.rem_euclid(p as i64) as u64;
        let mut z = Self::zero(p);
        if e == p - 1 {
            for c in &mut z.coeffs {
                *c = -T::one();
            }
        } else {
            z.coeffs[e as usize] = T::one();
        }
        z
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.p, other.p, "cyclotomic fields of different primes");
    }

    /// Reduce a representation modulo `x^p - 1` to the power basis.
    fn from_full(p: u64, mut full: Vec<T>) -> Self {
        let top = full.pop().expect("length p");
        if !top.is_zero() {
            for c in &mut full {
                *c = c.clone() - top.clone();
            }
        }
        Cyclotomic { p, coeffs: full }
    }

    fn to_full(&self) -> Vec<T> {
        let mut v = self.coeffs.clone();
        v.push(T::zero());
        v
    }

    /// Multiplication by `xi^e`, a rotation of the length-`p` representation.
    pub fn mul_root(&self, e: i64) -> Self {
        let p = self.p as usize;
        let e = e.rem_euclid(p as i64) as usize;
        if e == 0 {
            return self.clone();
        }
        let full = self.to_full();
        let mut out = vec![T::zero(); p];
        for (i, c) in full.into_iter().enumerate() {
            out[(i + e) % p] = c;
        }
        Self::from_full(self.p, out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Cyclotomic {
            p: self.p,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Galois automorphism `xi -> xi^k`, `k` prime to `p`.
    pub fn galois(&self, k: u64) -> Self {
        let p = self.p as usize;
        let mut out = vec![T::zero(); p];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let j = (i * k as usize) % p;
                out[j] = out[j].clone() + c.clone();
            }
        }
        Self::from_full(self.p, out)
    }

    /// Product of all Galois conjugates other than the identity.
    fn conjugate_product(&self) -> Self {
        let mut acc = Self::one(self.p);
        for k in 2..self.p {
            acc = &acc * &self.galois(k);
        }
        acc
    }

    /// Field norm down to `Q`.
    pub fn norm(&self) -> T {
        let n = self * &self.conjugate_product();
        debug_assert!(n.coeffs[1..].iter().all(Zero::is_zero));
        n.coeffs[0].clone()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let rest = self.conjugate_product();
        let n = (self * &rest).coeffs[0].clone();
        Some(rest.scale(&(T::one() / n)))
    }

    /// `Some(e)` when the value is exactly `xi^e`.
    pub fn as_root_power(&self) -> Option<u64> {
        (0..self.p).find(|&e| *self == Self::root_power(self.p, e as i64))
    }
}

impl<T: Coeff> Add for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn add(self, rhs: Self) -> Cyclotomic<T> {
        self.same_field(rhs);
        Cyclotomic {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Coeff> Sub for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn sub(self, rhs: Self) -> Cyclotomic<T> {
        self.same_field(rhs);
        Cyclotomic {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Coeff> Mul for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn mul(self, rhs: Self) -> Cyclotomic<T> {
        self.same_field(rhs);
        let p = self.p as usize;
        let mut out = vec![T::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    let k = (i + j) % p;
                    out[k] = out[k].clone() + a.clone() * b.clone();
                }
            }
        }
        Cyclotomic::from_full(self.p, out)
    }
}

impl<T: Coeff> Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic {
            p: self.p,
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<T: Coeff> Add for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Coeff> Sub for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Coeff> Mul for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Coeff> Neg for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Self {
        -&self
    }
}

/// Polynomial in `z = xi`, e.g. `1 - z + 1/2*z^2`.
impl<T: Coeff> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            wrote = true;
            let var = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn bigint_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("non-integer coefficient {n}"))),
        Value::String(s) => {
            BigInt::from_str_radix(s, 10).map_err(|_| Error::Parse(format!("bad integer {s:?}")))
        }
        other => Err(Error::Parse(format!("expected integer, got {other}"))),
    }
}

impl Cyclotomic<BigRational> {
    /// `{"p": p, "coeffs": [[num, den], ...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "coeffs": self
                .coeffs
                .iter()
                .map(|c| json!([bigint_json(c.numer()), bigint_json(c.denom())]))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let p = v
            .get("p")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("scalar without p".into()))?;
        if !crate::pgroup::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let coeffs = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("scalar without coeffs".into()))?
            .iter()
            .map(|pair| {
                let pair = pair
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| Error::Parse("coefficient must be [num, den]".into()))?;
                let den = bigint_from_json(&pair[1])?;
                if den.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                Ok(BigRational::new(bigint_from_json(&pair[0])?, den))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;
    use num_traits::One;
    use proptest::prelude::*;

    type Q = Cyclotomic<BigRational>;

    fn q(p: u64, v: &[i64]) -> Q {
        Q::new(
            p,
            v.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn root_power_examples() {
        assert_eq!(Q::root_power(2, 1), q(2, &[-1]));
        for p in [2, 3, 5, 7] {
            assert!(Q::root_power(p, 0).is_one());
            assert_eq!(Q::root_power(p, p as i64), Q::one(p));
            assert_eq!(Q::root_power(p, -1), Q::root_power(p, p as i64 - 1));
        }
        assert_eq!(Q::root_power(3, 2), q(3, &[-1, -1]));
    }

    #[test]
    fn cyclotomic_relations() {
        for p in [2u64, 3, 5, 7] {
            let xi = Q::root_power(p, 1);
            let mut acc = Q::one(p);
            let mut sum = Q::zero(p);
            for _ in 0..p {
                sum = &sum + &acc;
                acc = &acc * &xi;
            }
            assert!(acc.is_one(), "xi^p = 1 for p = {p}");
            assert!(sum.is_zero(), "sum of powers vanishes for p = {p}");
        }
    }

    #[test]
    fn powers_multiply() {
        for p in [3u64, 5] {
            for a in 0..p as i64 {
                for b in 0..p as i64 {
                    assert_eq!(
                        Q::root_power(p, a) * Q::root_power(p, b),
                        Q::root_power(p, a + b)
                    );
                    assert_eq!(Q::root_power(p, a).mul_root(b), Q::root_power(p, a + b));
                }
            }
        }
    }

    #[test]
    fn inverse_and_norm() {
        let one_plus_xi = q(5, &[1, 1, 0, 0]);
        let inv = one_plus_xi.inv().unwrap();
        assert!((&one_plus_xi * &inv).is_one());
        // N(1 + xi) = Phi_5(-1) = 1
        assert_eq!(one_plus_xi.norm(), BigRational::one());
        // N(1 - xi) = p
        assert_eq!(
            q(7, &[1, -1, 0, 0, 0, 0]).norm(),
            BigRational::from_integer(7.into())
        );
        assert!(Q::zero(3).inv().is_none());
        assert_eq!(
            q(2, &[4]).inv().unwrap(),
            Q::new(2, vec![BigRational::new(1.into(), 4.into())]).unwrap()
        );
    }

    #[test]
    fn display_in_z() {
        assert_eq!(Q::root_power(2, 1).to_string(), "-1");
        assert_eq!(Q::root_power(3, 2).to_string(), "-1 - z");
        assert_eq!(Q::root_power(5, 3).to_string(), "z^3");
        assert_eq!(Q::zero(5).to_string(), "0");
        let half = Q::new(
            3,
            vec![BigRational::zero(), BigRational::new(1.into(), 2.into())],
        )
        .unwrap();
        assert_eq!(half.to_string(), "1/2*z");
    }

    #[test]
    fn json_round_trip() {
        let x = Q::new(
            5,
            vec![
                BigRational::new(1.into(), 3.into()),
                BigRational::from_integer((-2).into()),
                BigRational::zero(),
                BigRational::new(BigInt::from(10).pow(30), 7.into()),
            ],
        )
        .unwrap();
        assert_eq!(Q::from_json(&x.to_json()).unwrap(), x);
        assert!(Q::from_json(&json!({"p": 4, "coeffs": []})).is_err());
        assert!(Q::from_json(&json!({"p": 3, "coeffs": [[1, 1]]})).is_err());
    }

    #[test]
    fn machine_rationals() {
        let a: Cyclotomic<Rational64> = Cyclotomic::root_power(5, 2);
        let b = Cyclotomic::<Rational64>::from_integer(5, 3) + a.clone();
        let inv = b.inv().unwrap();
        assert!((&b * &inv).is_one());
        assert_eq!(a.as_root_power(), Some(2));
    }

    fn arb(p: u64) -> impl Strategy<Value = Q> {
        prop::collection::vec(-3i64..4, (p - 1) as usize).prop_map(move |v| q(p, &v))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb(5), b in arb(5), c in arb(5)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if let Some(inv) = a.inv() {
                prop_assert!((&a * &inv).is_one());
            } else {
                prop_assert!(a.is_zero());
            }
        }

        #[test]
        fn galois_is_multiplicative(a in arb(7), b in arb(7), k in 1u64..7) {
            prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        }
    }
}

//! Exact sparse polynomials with big-integer coefficients.
//!
//! One generic container, [`Poly`], is instantiated over three exponent
//! kinds: [`Xyz`] for the three-variable ring of the ribbon-graph polynomial,
//! [`APow`] for Laurent polynomials in `A`, and [`TQuarter`] for Laurent
//! polynomials in `t` whose exponents are multiples of 1/4.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Exponent of a monomial. `combine` is the exponent of a product.
pub trait Exponent: Copy + Ord + fmt::Debug {
    fn unit() -> Self;
    fn combine(self, other: Self) -> Self;
    fn to_json(self) -> serde_json::Value;
    fn from_json(v: &serde_json::Value) -> Option<Self>;
    /// Writes the monomial without its coefficient; `None` for the unit.
    fn fmt_monomial(self) -> Option<String>;
}

/// `X^x Y^y Z^z`. Ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Xyz {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Xyz {
    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        Xyz { x, y, z }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y + self.z
    }
}

impl Ord for Xyz {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.x, self.y, self.z).cmp(&(other.degree(), other.x, other.y, other.z))
    }
}

impl PartialOrd for Xyz {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Exponent for Xyz {
    fn unit() -> Self {
        Xyz::new(0, 0, 0)
    }

    fn combine(self, o: Self) -> Self {
        Xyz::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }

    fn to_json(self) -> serde_json::Value {
        serde_json::json!([self.x, self.y, self.z])
    }

    fn from_json(v: &serde_json::Value) -> Option<Self> {
        let a = v.as_array()?;
        if a.len() != 3 {
            return None;
        }
        let get = |i: usize| a[i].as_u64().and_then(|n| u32::try_from(n).ok());
        Some(Xyz::new(get(0)?, get(1)?, get(2)?))
    }

    fn fmt_monomial(self) -> Option<String> {
        let parts: Vec<String> = [("X", self.x), ("Y", self.y), ("Z", self.z)]
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            None
        } else {
            Some(parts.join("*"))
        }
    }
}

/// Power of `A`, possibly negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct APow(pub i64);

impl Exponent for APow {
    fn unit() -> Self {
        APow(0)
    }

    fn combine(self, o: Self) -> Self {
        APow(self.0 + o.0)
    }

    fn to_json(self) -> serde_json::Value {
        serde_json::json!(self.0)
    }

    fn from_json(v: &serde_json::Value) -> Option<Self> {
        v.as_i64().map(APow)
    }

    fn fmt_monomial(self) -> Option<String> {
        match self.0 {
            0 => None,
            1 => Some("A".into()),
            k => Some(format!("A^{k}")),
        }
    }
}

/// Power of `t` stored as the numerator over the fixed denominator 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TQuarter(pub i64);

impl TQuarter {
    pub fn is_integral(self) -> bool {
        self.0 % 4 == 0
    }
}

impl Exponent for TQuarter {
    fn unit() -> Self {
        TQuarter(0)
    }

    fn combine(self, o: Self) -> Self {
        TQuarter(self.0 + o.0)
    }

    fn to_json(self) -> serde_json::Value {
        serde_json::json!(self.0)
    }

    fn from_json(v: &serde_json::Value) -> Option<Self> {
        v.as_i64().map(TQuarter)
    }

    fn fmt_monomial(self) -> Option<String> {
        let q = fmt_quarter(self.0);
        match self.0 {
            0 => None,
            4 => Some("t".into()),
            n if n % 4 == 0 && n > 0 => Some(format!("t^{q}")),
            _ => Some(format!("t^({q})")),
        }
    }
}

/// Renders `n/4` in lowest terms.
pub fn fmt_quarter(n: i64) -> String {
    match n.rem_euclid(4) {
        0 => (n / 4).to_string(),
        2 => format!("{}/2", n / 2),
        _ => format!("{n}/4"),
    }
}

/// Sparse polynomial: a map from exponents to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<E: Exponent> {
    terms: BTreeMap<E, BigInt>,
}

pub type MultiPoly = Poly<Xyz>;
pub type LaurentA = Poly<APow>;
pub type LaurentT = Poly<TQuarter>;

impl<E: Exponent> Poly<E> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(E::unit(), 1)
    }

    pub fn monomial(e: E, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (E, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, e: E, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: E) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in canonical (ascending exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (E, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn shift(&self, e: E) -> Self {
        Poly { terms: self.terms.iter().map(|(k, v)| (k.combine(e), v.clone())).collect() }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Maps exponents through `f`; coefficients of colliding images are summed.
    pub fn map_exponents<F: Exponent>(&self, f: impl Fn(E) -> F) -> Poly<F> {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            out.add_term(f(*e), c.clone());
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms.iter().map(|(e, c)| serde_json::json!({ "exp": e.to_json(), "coeff": c.to_string() })).collect(),
        )
    }

    pub fn from_json_value(v: &serde_json::Value) -> Option<Self> {
        let mut p = Self::zero();
        for t in v.as_array()? {
            let e = E::from_json(t.get("exp")?)?;
            let c: BigInt = t.get("coeff")?.as_str()?.parse().ok()?;
            p.add_term(e, c);
        }
        Some(p)
    }
}

impl<E: Exponent> fmt::Display for Poly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match e.fmt_monomial() {
                None => write!(f, "{mag}")?,
                Some(m) if mag.is_one() => write!(f, "{m}")?,
                Some(m) => write!(f, "{mag}*{m}")?,
            }
        }
        Ok(())
    }
}

impl<E: Exponent> fmt::Debug for Poly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<E: Exponent> Serialize for Poly<E> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

impl<'de, E: Exponent> Deserialize<'de> for Poly<E> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        Poly::from_json_value(&v).ok_or_else(|| D::Error::custom("malformed polynomial term list"))
    }
}

impl<E: Exponent> Add<&Poly<E>> for &Poly<E> {
    type Output = Poly<E>;
    fn add(self, rhs: &Poly<E>) -> Poly<E> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<E: Exponent> Add for Poly<E> {
    type Output = Poly<E>;
    fn add(mut self, rhs: Poly<E>) -> Poly<E> {
        self += &rhs;
        self
    }
}

impl<E: Exponent> AddAssign<&Poly<E>> for Poly<E> {
    fn add_assign(&mut self, rhs: &Poly<E>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<E: Exponent> AddAssign for Poly<E> {
    fn add_assign(&mut self, rhs: Poly<E>) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<E: Exponent> Neg for &Poly<E> {
    type Output = Poly<E>;
    fn neg(self) -> Poly<E> {
        Poly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl<E: Exponent> Neg for Poly<E> {
    type Output = Poly<E>;
    fn neg(self) -> Poly<E> {
        -&self
    }
}

impl<E: Exponent> Sub<&Poly<E>> for &Poly<E> {
    type Output = Poly<E>;
    fn sub(self, rhs: &Poly<E>) -> Poly<E> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<E: Exponent> Sub for Poly<E> {
    type Output = Poly<E>;
    fn sub(self, rhs: Poly<E>) -> Poly<E> {
        &self - &rhs
    }
}

impl<E: Exponent> Mul<&Poly<E>> for &Poly<E> {
    type Output = Poly<E>;
    fn mul(self, rhs: &Poly<E>) -> Poly<E> {
        let mut out = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.combine(*e2), c1 * c2);
            }
        }
        out
    }
}

impl<E: Exponent> Mul for Poly<E> {
    type Output = Poly<E>;
    fn mul(self, rhs: Poly<E>) -> Poly<E> {
        &self * &rhs
    }
}

impl<E: Exponent> std::iter::Sum for Poly<E> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |a, b| a + b)
    }
}

impl MultiPoly {
    pub fn x() -> Self {
        Self::monomial(Xyz::new(1, 0, 0), 1)
    }

    pub fn y() -> Self {
        Self::monomial(Xyz::new(0, 1, 0), 1)
    }

    pub fn z() -> Self {
        Self::monomial(Xyz::new(0, 0, 1), 1)
    }

    pub fn xyz(x: u32, y: u32, z: u32) -> Self {
        Self::monomial(Xyz::new(x, y, z), 1)
    }

    /// Evaluates at integer points (used for sanity checks).
    pub fn eval(&self, x: &BigInt, y: &BigInt, z: &BigInt) -> BigInt {
        self.terms()
            .map(|(e, c)| {
                c * num_traits::pow(x.clone(), e.x as usize)
                    * num_traits::pow(y.clone(), e.y as usize)
                    * num_traits::pow(z.clone(), e.z as usize)
            })
            .sum()
    }
}

impl LaurentA {
    pub fn a_pow(k: i64) -> Self {
        Self::monomial(APow(k), 1)
    }

    /// `δ = −A² − A⁻²`, the value of an extra unlinked circle.
    pub fn delta() -> Self {
        Self::from_terms([(APow(2), -1), (APow(-2), -1)])
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms().next().map(|(e, _)| e.0)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms().last().map(|(e, _)| e.0)
    }

    /// `maxDegree − minDegree`, or 0 for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Substitutes `A → A⁻¹`.
    pub fn invert_variable(&self) -> Self {
        self.map_exponents(|e| APow(-e.0))
    }
}

impl LaurentT {
    pub fn min_quarter(&self) -> Option<i64> {
        self.terms().next().map(|(e, _)| e.0)
    }

    pub fn max_quarter(&self) -> Option<i64> {
        self.terms().last().map(|(e, _)| e.0)
    }

    /// Span measured in quarters of a unit of `t`.
    pub fn span_quarters(&self) -> i64 {
        match (self.min_quarter(), self.max_quarter()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn has_integral_exponents(&self) -> bool {
        self.terms().all(|(e, _)| e.is_integral())
    }

    /// Substitutes `t → t⁻¹`.
    pub fn invert_variable(&self) -> Self {
        self.map_exponents(|e| TQuarter(-e.0))
    }
}

/// Evaluates `A^e · A^(2−2v) · c(−A⁴, A⁻²δ, δ⁻²)` without leaving the Laurent ring.
///
/// Each monomial `X^a Y^b Z^g` contributes `(−A⁴)^a · A^(−2b) · δ^(b−2g)`, so
/// `b ≥ 2g` must hold for every monomial.
pub fn specialize_brt(c: &MultiPoly, edges: usize, vertices: usize) -> Result<LaurentA, Error> {
    let delta = LaurentA::delta();
    let mut delta_pows: Vec<LaurentA> = vec![LaurentA::one()];
    let mut out = LaurentA::zero();
    for (m, coeff) in c.terms() {
        if m.y < 2 * m.z {
            return Err(Error::NegativeDeltaExponent { y: m.y, z: m.z });
        }
        let d = (m.y - 2 * m.z) as usize;
        while delta_pows.len() <= d {
            let next = delta_pows.last().unwrap() * &delta;
            delta_pows.push(next);
        }
        let sign = if m.x % 2 == 1 { -coeff.clone() } else { coeff.clone() };
        let shift = 4 * m.x as i64 - 2 * m.y as i64;
        out += delta_pows[d].shift(APow(shift)).scale(&sign);
    }
    let prefactor = edges as i64 + 2 - 2 * vertices as i64;
    Ok(out.shift(APow(prefactor)))
}

/// Normalizes a bracket by `(−A)^(−3w)` and substitutes `A = t^(−1/4)`.
pub fn substitute_t(bracket: &LaurentA, writhe: i64) -> LaurentT {
    let sign = if writhe.rem_euclid(2) == 1 { BigInt::from(-1) } else { BigInt::one() };
    let mut out = LaurentT::zero();
    for (e, c) in bracket.terms() {
        out.add_term(TQuarter(3 * writhe - e.0), c * &sign);
    }
    out
}

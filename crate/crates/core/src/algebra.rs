//! Exact 2x2 integer matrices, primitive slopes on the torus and the
//! monodromy quadratic form `Q_L(v) = det(v, Lv)`.
//!
//! All arithmetic is over [`BigInt`]; entries of `L^n` grow like `lambda^n`
//! and overflow any fixed width long before the interesting cases end.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A 2x2 matrix `[[a, b], [c, d]]` with unbounded integer entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMatrix2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        IntMatrix2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    /// `R = [[1,1],[0,1]]`.
    pub fn r() -> Self {
        Self::new(1, 1, 0, 1)
    }

    /// `S = [[1,0],[1,1]]`.
    pub fn s() -> Self {
        Self::new(1, 0, 1, 1)
    }

    /// `R^k` for any integer `k`.
    pub fn r_pow(k: &BigInt) -> Self {
        Self::new(1, k.clone(), 0, 1)
    }

    /// `S^k` for any integer `k`.
    pub fn s_pow(k: &BigInt) -> Self {
        Self::new(1, 0, k.clone(), 1)
    }

    /// `diag(1, -1)`, the orientation-reversing reflection used to pass
    /// between mirror classes.
    pub fn reflection() -> Self {
        Self::new(1, 0, 0, -1)
    }

    /// The swap `[[0,1],[1,0]]`.
    pub fn swap() -> Self {
        Self::new(0, 1, 1, 0)
    }

    /// `[[m, -1], [1, 0]]`.
    pub fn standard_form(m: impl Into<BigInt>) -> Self {
        Self::new(m, -1, 1, 0)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    pub fn is_sl2(&self) -> bool {
        self.det().is_one()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntMatrix2 {
            a: &self.a * k,
            b: &self.b * k,
            c: &self.c * k,
            d: &self.d * k,
        }
    }

    /// gcd of the four entries.
    pub fn content(&self) -> BigInt {
        self.a.gcd(&self.b).gcd(&self.c).gcd(&self.d)
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn require_unimodular(&self) -> Result<()> {
        if self.is_unimodular() {
            Ok(())
        } else {
            Err(Error::NotUnimodular(self.to_string()))
        }
    }

    pub fn require_sl2(&self) -> Result<()> {
        if self.is_sl2() {
            Ok(())
        } else {
            Err(Error::NotSL2(self.to_string()))
        }
    }

    /// Exact inverse of a unimodular matrix: `det * [[d,-b],[-c,a]]`.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(self.to_string()));
        }
        Ok(IntMatrix2 {
            a: &self.d * &det,
            b: -&self.b * &det,
            c: -&self.c * &det,
            d: &self.a * &det,
        })
    }

    /// The adjugate `[[d,-b],[-c,a]]`; equals the inverse when det = 1.
    pub fn adjugate(&self) -> Self {
        IntMatrix2 {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// `K * self * K^{-1}` for unimodular `K`.
    pub fn conjugate_by(&self, k: &IntMatrix2) -> Result<Self> {
        Ok(&(k * self) * &k.inverse()?)
    }

    /// Matrix times column vector.
    pub fn apply_vec(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (
            &self.a * x + &self.b * y,
            &self.c * x + &self.d * y,
        )
    }

    /// Matrix whose columns are `u` and `v`.
    pub fn from_columns(u: (&BigInt, &BigInt), v: (&BigInt, &BigInt)) -> Self {
        IntMatrix2 {
            a: u.0.clone(),
            b: v.0.clone(),
            c: u.1.clone(),
            d: v.1.clone(),
        }
    }
}

impl Mul for &IntMatrix2 {
    type Output = IntMatrix2;

    fn mul(self, o: &IntMatrix2) -> IntMatrix2 {
        IntMatrix2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

impl Mul for IntMatrix2 {
    type Output = IntMatrix2;

    fn mul(self, o: IntMatrix2) -> IntMatrix2 {
        &self * &o
    }
}

impl Neg for &IntMatrix2 {
    type Output = IntMatrix2;

    fn neg(self) -> IntMatrix2 {
        IntMatrix2 {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }
}

impl Neg for IntMatrix2 {
    type Output = IntMatrix2;

    fn neg(self) -> IntMatrix2 {
        -&self
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for IntMatrix2 {
    type Err = Error;

    /// Parses `"a,b;c,d"`; whitespace around separators is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            return Err(Error::Parse(format!(
                "expected two rows separated by ';' in {s:?}"
            )));
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 2 {
                return Err(Error::Parse(format!(
                    "expected two entries separated by ',' in row {row:?}"
                )));
            }
            for col in cols {
                let t = col.trim();
                let v = t
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad integer {t:?}")))?;
                entries.push(v);
            }
        }
        let mut it = entries.into_iter();
        Ok(IntMatrix2 {
            a: it.next().unwrap(),
            b: it.next().unwrap(),
            c: it.next().unwrap(),
            d: it.next().unwrap(),
        })
    }
}

impl Serialize for IntMatrix2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// An essential simple closed curve on the torus: a primitive vector
/// `(p, q)` taken up to sign. The stored representative has `q > 0`,
/// or `q = 0` and `p = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveSlope {
    p: BigInt,
    q: BigInt,
}

impl PrimitiveSlope {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if !p.gcd(&q).is_one() {
            return Err(Error::NotPrimitive(p.to_string(), q.to_string()));
        }
        let flip = q.is_negative() || (q.is_zero() && p.is_negative());
        Ok(if flip {
            PrimitiveSlope { p: -p, q: -q }
        } else {
            PrimitiveSlope { p, q }
        })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn vector(&self) -> (&BigInt, &BigInt) {
        (&self.p, &self.q)
    }
}

impl fmt::Display for PrimitiveSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for PrimitiveSlope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected p/q, got {s:?}")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
        };
        PrimitiveSlope::new(parse(p)?, parse(q)?)
    }
}

impl Serialize for PrimitiveSlope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The integral binary quadratic form `qa x^2 + qb xy + qc y^2`.
///
/// Built from a monodromy `L = [[a,b],[c,d]]` it is `det(v, Lv)` with
/// coefficients `(c, d - a, -b)`, and `|Q_L(v)|` is the intersection
/// number of the curve `v` with its image `L(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonodromyForm {
    #[serde(serialize_with = "ser_display")]
    pub qa: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub qb: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub qc: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub disc: BigInt,
}

impl MonodromyForm {
    pub fn new(qa: BigInt, qb: BigInt, qc: BigInt) -> Self {
        let disc = &qb * &qb - BigInt::from(4) * &qa * &qc;
        MonodromyForm { qa, qb, qc, disc }
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.qa * x * x + &self.qb * x * y + &self.qc * y * y
    }

    /// The form `v -> self(M v)`.
    pub fn compose(&self, m: &IntMatrix2) -> Self {
        // (a x + b y, c x + d y) substituted into the form
        let (a, b, c, d) = (&m.a, &m.b, &m.c, &m.d);
        let qa = self.eval(a, c);
        let qc = self.eval(b, d);
        let two = BigInt::from(2);
        let qb = &two * &self.qa * a * b + &self.qb * (a * d + b * c) + &two * &self.qc * c * d;
        MonodromyForm::new(qa, qb, qc)
    }
}

impl fmt::Display for MonodromyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.qa, self.qb, self.qc)
    }
}

pub(crate) fn ser_display<T: fmt::Display, S: Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Geometric intersection number of two slopes, `|p q' - q p'|`.
pub fn intersection_number(c: &PrimitiveSlope, c2: &PrimitiveSlope) -> BigInt {
    (&c.p * &c2.q - &c.q * &c2.p).abs()
}

/// Image of a slope under a unimodular matrix.
pub fn apply(l: &IntMatrix2, c: &PrimitiveSlope) -> Result<PrimitiveSlope> {
    l.require_unimodular()?;
    let (x, y) = l.apply_vec(&c.p, &c.q);
    PrimitiveSlope::new(x, y)
}

pub fn monodromy_form(l: &IntMatrix2) -> Result<MonodromyForm> {
    l.require_sl2()?;
    Ok(MonodromyForm::new(
        l.c.clone(),
        &l.d - &l.a,
        -&l.b,
    ))
}

pub fn is_anosov(l: &IntMatrix2) -> Result<bool> {
    l.require_sl2()?;
    Ok(l.trace().abs() > BigInt::from(2))
}

pub(crate) fn require_anosov(l: &IntMatrix2) -> Result<()> {
    if is_anosov(l)? {
        Ok(())
    } else {
        Err(Error::NotAnosov(l.to_string()))
    }
}

/// `trace(L^n)` for any `L` with trace `t` and determinant 1, via
/// `t_0 = 2, t_1 = t, t_{n+1} = t t_n - t_{n-1}`.
pub fn power_trace(t: &BigInt, n: u64) -> BigInt {
    let mut prev = BigInt::from(2);
    if n == 0 {
        return prev;
    }
    let mut cur = t.clone();
    for _ in 1..n {
        let next = t * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Exact `L^n`; negative `n` goes through the unimodular inverse.
pub fn mat_pow(l: &IntMatrix2, n: i64) -> Result<IntMatrix2> {
    let mut base = if n < 0 { l.inverse()? } else { l.clone() };
    let mut e = n.unsigned_abs();
    let mut acc = IntMatrix2::identity();
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    Ok(acc)
}

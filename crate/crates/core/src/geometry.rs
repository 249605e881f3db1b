//! Exact upper-half-plane geometry of the axis of a hyperbolic matrix.
//!
//! Fixed points, centers, radii and the arc `alpha` between the unit
//! semicircles `C_0` and `C_m` are kept as rationals or quadratic
//! irrationals; only the translation length and drawing coordinates are
//! ever floating point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::{require_anosov, IntMatrix2};
use crate::centralizer::is_reversible;
use crate::error::{Error, Result};

/// Trial division bound used when pulling square factors out of a radicand.
const SQUARE_FACTOR_BOUND: u64 = 1_000_000;

/// `(p + q sqrt(disc)) / r` in lowest terms with `r > 0`.
///
/// `disc` is squarefree and greater than 1 when `q != 0`; rationals have
/// `q = 0` and `disc = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    disc: BigInt,
}

/// Splits `n > 0` as `f^2 * core`. Square factors are found by trial
/// division up to a fixed bound plus a final perfect-square check, which is
/// exhaustive for every radicand below `10^12`.
fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut core = n.clone();
    let mut f = BigInt::one();
    let mut k = BigInt::from(2);
    let bound = BigInt::from(SQUARE_FACTOR_BOUND);
    while &k * &k <= core && k <= bound {
        let kk = &k * &k;
        while (&core % &kk).is_zero() {
            core /= &kk;
            f *= &k;
        }
        k += 1;
    }
    let root = core.sqrt();
    if &root * &root == core {
        f *= &root;
        core = BigInt::one();
    }
    (f, core)
}

impl QuadraticIrrational {
    pub fn new(p: BigInt, q: BigInt, r: BigInt, disc: BigInt) -> Self {
        assert!(!r.is_zero(), "zero denominator");
        assert!(!disc.is_negative(), "negative radicand");
        let (mut p, mut q, mut r) = (p, q, r);
        let mut disc = disc;
        if !q.is_zero() && !disc.is_zero() {
            let (f, core) = square_part(&disc);
            q *= f;
            disc = core;
            if disc.is_one() {
                p += &q;
                q = BigInt::zero();
            }
        }
        if q.is_zero() || disc.is_zero() {
            q = BigInt::zero();
            disc = BigInt::zero();
        }
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        QuadraticIrrational { p, q, r, disc }
    }

    pub fn rational(x: &BigRational) -> Self {
        Self::new(x.numer().clone(), BigInt::zero(), x.denom().clone(), BigInt::zero())
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self::new(n.into(), BigInt::zero(), BigInt::one(), BigInt::zero())
    }

    /// `sqrt(x)` for a rational `x >= 0`: `sqrt(n/d) = sqrt(n d) / d`.
    pub fn sqrt_rational(x: &BigRational) -> Self {
        assert!(!x.is_negative(), "square root of a negative rational");
        let (n, d) = (x.numer(), x.denom());
        Self::new(BigInt::zero(), BigInt::one(), d.clone(), n * d)
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.p.clone(), self.r.clone()))
    }

    pub fn parts(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.p, &self.q, &self.r, &self.disc)
    }

    fn field(&self, other: &Self) -> Result<BigInt> {
        match (self.is_rational(), other.is_rational()) {
            (true, true) => Ok(BigInt::zero()),
            (false, true) => Ok(self.disc.clone()),
            (true, false) => Ok(other.disc.clone()),
            (false, false) if self.disc == other.disc => Ok(self.disc.clone()),
            _ => Err(Error::IncompatibleFields),
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let disc = self.field(o)?;
        Ok(Self::new(
            &self.p * &o.r + &o.p * &self.r,
            &self.q * &o.r + &o.q * &self.r,
            &self.r * &o.r,
            disc,
        ))
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.p, -&self.q, self.r.clone(), self.disc.clone())
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        let disc = self.field(o)?;
        // (p + q s)(p' + q' s) = p p' + q q' D + (p q' + q p') s
        Ok(Self::new(
            &self.p * &o.p + &self.q * &o.q * &disc,
            &self.p * &o.q + &self.q * &o.p,
            &self.r * &o.r,
            disc,
        ))
    }

    pub fn signum(&self) -> Ordering {
        let sp = self.p.sign();
        let sq = self.q.sign();
        use num_bigint::Sign::*;
        match (sp, sq) {
            (NoSign, NoSign) => Ordering::Equal,
            (Plus, Plus) | (Plus, NoSign) | (NoSign, Plus) => Ordering::Greater,
            (Minus, Minus) | (Minus, NoSign) | (NoSign, Minus) => Ordering::Less,
            // opposite signs: compare p^2 with q^2 D (never equal, D non-square)
            (Plus, Minus) => (&self.p * &self.p).cmp(&(&self.q * &self.q * &self.disc)),
            (Minus, Plus) => (&self.q * &self.q * &self.disc).cmp(&(&self.p * &self.p)),
        }
    }

    pub fn try_cmp(&self, o: &Self) -> Result<Ordering> {
        Ok(self.sub(o)?.signum())
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        let d = self.disc.to_f64().unwrap_or(f64::NAN);
        (p + q * d.sqrt()) / r
    }
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            if self.r.is_one() {
                write!(f, "{}", self.p)
            } else {
                write!(f, "{}/{}", self.p, self.r)
            }
        } else {
            let sign = if self.q.is_negative() { '-' } else { '+' };
            write!(f, "({}{}{}*sqrt({}))", self.p, sign, self.q.abs(), self.disc)?;
            if !self.r.is_one() {
                write!(f, "/{}", self.r)?;
            }
            Ok(())
        }
    }
}

impl Serialize for QuadraticIrrational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("QuadraticIrrational", 6)?;
        st.serialize_field("exact", &self.to_string())?;
        st.serialize_field("p", &self.p.to_string())?;
        st.serialize_field("q", &self.q.to_string())?;
        st.serialize_field("r", &self.r.to_string())?;
        st.serialize_field("disc", &self.disc.to_string())?;
        st.serialize_field("approx", &format!("{:.12}", self.to_f64()))?;
        st.end()
    }
}

/// A point of the upper half plane with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactPoint {
    pub x: QuadraticIrrational,
    pub y: QuadraticIrrational,
}

impl ExactPoint {
    pub fn new(x: QuadraticIrrational, y: QuadraticIrrational) -> Self {
        ExactPoint { x, y }
    }

    pub fn rational(x: BigRational, y: BigRational) -> Self {
        ExactPoint::new(QuadraticIrrational::rational(&x), QuadraticIrrational::rational(&y))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainPosition {
    Interior,
    Boundary,
    Outside,
}

fn half() -> QuadraticIrrational {
    QuadraticIrrational::new(BigInt::one(), BigInt::zero(), BigInt::from(2), BigInt::zero())
}

/// Position relative to `D = { |x| <= 1/2, x^2 + y^2 >= 1 }`.
pub fn in_fundamental_domain(z: &ExactPoint) -> Result<DomainPosition> {
    if z.y.signum() != Ordering::Greater {
        return Err(Error::NotUpperHalfPlane);
    }
    let right = z.x.try_cmp(&half())?;
    let left = z.x.try_cmp(&half().neg())?;
    let norm = z.x.mul(&z.x)?.add(&z.y.mul(&z.y)?)?;
    let outer = norm.try_cmp(&QuadraticIrrational::integer(1))?;
    if right == Ordering::Greater || left == Ordering::Less || outer == Ordering::Less {
        Ok(DomainPosition::Outside)
    } else if right == Ordering::Less && left == Ordering::Greater && outer == Ordering::Greater {
        Ok(DomainPosition::Interior)
    } else {
        Ok(DomainPosition::Boundary)
    }
}

/// Axis of a hyperbolic isometry.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Geodesic {
    /// `(z_minus, z_plus)` with `z_minus < z_plus`.
    pub endpoints: (QuadraticIrrational, QuadraticIrrational),
    #[serde(serialize_with = "crate::algebra::ser_display")]
    pub center: BigRational,
    #[serde(serialize_with = "crate::algebra::ser_display")]
    pub radius_sq: BigRational,
    #[serde(serialize_with = "crate::algebra::ser_display")]
    pub discriminant: BigInt,
    /// `2 arccosh(|t|/2)`; the only approximate field.
    pub translation_length: f64,
    /// `cosh(translation_length / 2) = |t| / 2`, exact.
    #[serde(serialize_with = "crate::algebra::ser_display")]
    pub cosh_half_length: BigRational,
}

pub fn translation_length(trace: &BigInt) -> f64 {
    let half = trace.abs().to_f64().unwrap_or(f64::INFINITY) / 2.0;
    2.0 * half.acosh()
}

/// The fixed points of `z -> (a z + b) / (c z + d)` solve
/// `c z^2 + (d - a) z - b = 0`, i.e. `z = ((a - d) +- sqrt(t^2 - 4)) / 2c`.
pub fn axis(l: &IntMatrix2) -> Result<Geodesic> {
    require_anosov(l)?;
    if l.c.is_zero() {
        return Err(Error::VerticalAxis(l.to_string()));
    }
    let t = l.trace();
    let disc = &t * &t - BigInt::from(4);
    let two_c = BigInt::from(2) * &l.c;
    let diff = &l.a - &l.d;
    let plus = QuadraticIrrational::new(diff.clone(), BigInt::one(), two_c.clone(), disc.clone());
    let minus = QuadraticIrrational::new(diff.clone(), -BigInt::one(), two_c.clone(), disc.clone());
    let endpoints = match minus.try_cmp(&plus)? {
        Ordering::Less => (minus, plus),
        _ => (plus, minus),
    };
    Ok(Geodesic {
        endpoints,
        center: BigRational::new(diff, two_c.clone()),
        radius_sq: BigRational::new(disc.clone(), &two_c * &two_c),
        discriminant: disc,
        translation_length: translation_length(&t),
        cosh_half_length: BigRational::new(t.abs(), BigInt::from(2)),
    })
}

/// Where an endpoint of `alpha` sits on the bottom arc of its translate of `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcPosition {
    /// Strictly between the two corners of the arc.
    InteriorOfArc,
    /// Exactly at a corner, an orbit point of `exp(pi i / 3)`.
    Corner,
    OutsideDomain,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlphaArc {
    #[serde(serialize_with = "crate::algebra::ser_display")]
    pub m: BigInt,
    /// `alpha ∩ C_0`, at `x = 2/m`.
    pub start: ExactPoint,
    /// `alpha ∩ C_m`, at `x = m - 2/m`.
    pub end: ExactPoint,
    #[serde(serialize_with = "crate::algebra::ser_display")]
    pub y_sq: BigRational,
    pub start_position: ArcPosition,
    pub end_position: ArcPosition,
    /// `|center distance|^2 = r1^2 + r2^2` for `(C_0, axis)` and `(C_m, axis)`.
    pub orthogonality: Vec<(String, bool)>,
}

fn arc_position(offset: &BigRational) -> ArcPosition {
    let h = BigRational::new(BigInt::one(), BigInt::from(2));
    match offset.abs().cmp(&h) {
        Ordering::Less => ArcPosition::InteriorOfArc,
        Ordering::Equal => ArcPosition::Corner,
        Ordering::Greater => ArcPosition::OutsideDomain,
    }
}

/// Orthogonality of the axis of `[[m,-1],[1,0]]` (center `m/2`, radius^2
/// `(m^2-4)/4`) with a unit semicircle centered at `k`.
pub fn orthogonal_to_unit_circle(m: &BigInt, k: &BigInt) -> bool {
    let center = BigRational::new(m.clone(), BigInt::from(2));
    let r_sq = BigRational::new(m * m - BigInt::from(4), BigInt::from(4));
    let dist = center - BigRational::from_integer(k.clone());
    &dist * &dist == BigRational::one() + r_sq
}

/// The fundamental arc of the axis of `[[m,-1],[1,0]]` between `C_0` and
/// `C_m`. Intersecting `x^2 + y^2 = 1` with the axis circle gives
/// `1 - m x = -1`, so `x = 2/m` and `y^2 = 1 - 4/m^2`.
pub fn alpha_arc(m: &BigInt) -> Result<AlphaArc> {
    if m.abs() < BigInt::from(3) {
        return Err(Error::TraceTooSmall(m.abs().to_string()));
    }
    let x0 = BigRational::new(BigInt::from(2), m.clone());
    let y_sq = BigRational::one() - &x0 * &x0;
    let y = QuadraticIrrational::sqrt_rational(&y_sq);
    let x1 = BigRational::from_integer(m.clone()) - &x0;
    let start = ExactPoint::new(QuadraticIrrational::rational(&x0), y.clone());
    let end = ExactPoint::new(QuadraticIrrational::rational(&x1), y);
    let orthogonality = vec![
        ("C_0 ⊥ axis".to_string(), orthogonal_to_unit_circle(m, &BigInt::zero())),
        (format!("C_{m} ⊥ axis"), orthogonal_to_unit_circle(m, m)),
    ];
    Ok(AlphaArc {
        m: m.clone(),
        start_position: arc_position(&x0),
        end_position: arc_position(&(&x1 - BigRational::from_integer(m.clone()))),
        start,
        end,
        y_sq,
        orthogonality,
    })
}

/// Integers `n` with `n + i` on the axis of `[[m,-1],[1,0]]`:
/// `(n - m/2)^2 + 1 = (m^2 - 4)/4`, i.e. `(2n - m)^2 = m^2 - 8`.
pub fn order2_points_on_standard_axis(m: &BigInt) -> Vec<BigInt> {
    let rhs = m * m - BigInt::from(8);
    if rhs.is_negative() {
        return Vec::new();
    }
    let k = rhs.sqrt();
    if &k * &k != rhs {
        return Vec::new();
    }
    let mut out: Vec<BigInt> = [m - &k, m + &k]
        .into_iter()
        .filter(|s| s.is_even())
        .map(|s| s / BigInt::from(2))
        .collect();
    out.sort();
    out.dedup();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Order2Incidence {
    pub hits: bool,
    /// `K L K^{-1} = L^{-1}`; the elliptic element fixing the cone point is
    /// built from it.
    pub reversing_witness: Option<IntMatrix2>,
    /// Integer translates `n + i` of `i` on the axis, standard form only.
    pub integer_points: Option<Vec<String>>,
}

/// Whether the projected axis passes through the order-2 cone point of the
/// modular surface, which happens exactly when `L` is reversible.
pub fn hits_order2_cone(l: &IntMatrix2) -> Result<Order2Incidence> {
    require_anosov(l)?;
    let witness = is_reversible(l)?;
    let is_standard = l.b == -BigInt::one() && l.c.is_one() && l.d.is_zero();
    Ok(Order2Incidence {
        hits: witness.is_some(),
        reversing_witness: witness,
        integer_points: is_standard.then(|| {
            order2_points_on_standard_axis(&l.a)
                .into_iter()
                .map(|n| n.to_string())
                .collect()
        }),
    })
}

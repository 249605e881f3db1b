//! Conjugacy of hyperbolic elements of SL(2,Z).
//!
//! Every hyperbolic matrix of positive trace is conjugate to a product
//! `R^{a1} S^{b1} ... R^{ak} S^{bk}` with all exponents positive, and that
//! word is unique up to cyclic rotation. The canonical rotation, together
//! with the sign of the trace, is therefore a complete conjugacy invariant.
//!
//! A nonnegative conjugate is found by reducing the monodromy form: a
//! reduced form `(c, d - a, -b)` with `c > 0` has `b, c > 0`, and then
//! `a, d > 0` follow from `ad = 1 + bc` and `a + d > 0`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::{monodromy_form, require_anosov, IntMatrix2, MonodromyForm, PrimitiveSlope};
use crate::error::{Error, Result};
use crate::forms::{reduce, reduced_cycle, rho, TrackedForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(x: &BigInt) -> Sign {
        if x.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_int(self) -> BigInt {
        match self {
            Sign::Plus => BigInt::one(),
            Sign::Minus => -BigInt::one(),
        }
    }

    pub fn apply(self, m: &IntMatrix2) -> IntMatrix2 {
        match self {
            Sign::Plus => m.clone(),
            Sign::Minus => -m,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        })
    }
}

/// Exponents `(a1, b1, ..., ak, bk)` of the word `R^{a1} S^{b1} ...`,
/// kept in its lexicographically least even rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    exponents: Vec<BigInt>,
}

impl CyclicWord {
    /// Builds the canonical rotation of the given exponents. Returns `None`
    /// for an empty, odd-length or non-positive exponent list.
    pub fn new(exponents: Vec<BigInt>) -> Option<Self> {
        if exponents.is_empty()
            || exponents.len() % 2 == 1
            || exponents.iter().any(|e| !e.is_positive())
        {
            return None;
        }
        let start = least_even_rotation(&exponents);
        Some(CyclicWord {
            exponents: rotate(&exponents, start),
        })
    }

    pub fn exponents(&self) -> &[BigInt] {
        &self.exponents
    }

    /// `R^{a1} S^{b1} ...` multiplied out.
    pub fn matrix(&self) -> IntMatrix2 {
        word_matrix(&self.exponents)
    }

    /// Two rotations are the same cyclic word iff they differ by an even
    /// shift; this checks that relation directly.
    pub fn is_rotation_of(&self, exps: &[BigInt]) -> bool {
        let n = self.exponents.len();
        exps.len() == n && (0..n).step_by(2).any(|j| rotate(exps, j) == self.exponents)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.exponents.iter().enumerate() {
            let letter = if i % 2 == 0 { 'R' } else { 'S' };
            write!(f, "{letter}^{e}")?;
        }
        Ok(())
    }
}

impl Serialize for CyclicWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn rotate(exps: &[BigInt], j: usize) -> Vec<BigInt> {
    exps[j..].iter().chain(&exps[..j]).cloned().collect()
}

fn least_even_rotation(exps: &[BigInt]) -> usize {
    (0..exps.len())
        .step_by(2)
        .min_by(|&i, &j| rotate(exps, i).cmp(&rotate(exps, j)))
        .unwrap_or(0)
}

fn word_matrix(exps: &[BigInt]) -> IntMatrix2 {
    exps.iter()
        .enumerate()
        .fold(IntMatrix2::identity(), |acc, (i, e)| {
            let f = if i % 2 == 0 {
                IntMatrix2::r_pow(e)
            } else {
                IntMatrix2::s_pow(e)
            };
            &acc * &f
        })
}

/// Conjugacy invariant of an Anosov matrix with the conjugator that
/// realizes it: `conjugator * L * conjugator^{-1} = sign * word.matrix()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordReduction {
    pub sign: Sign,
    pub word: CyclicWord,
    pub conjugator: IntMatrix2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Letter {
    R,
    S,
}

/// `(sign, canonical word)`; equal pairs exactly for conjugate matrices.
pub fn cyclic_word(l: &IntMatrix2) -> Result<(Sign, CyclicWord)> {
    let red = word_reduction(l)?;
    Ok((red.sign, red.word))
}

pub fn word_reduction(l: &IntMatrix2) -> Result<WordReduction> {
    require_anosov(l)?;
    let sign = Sign::of(&l.trace());
    let pos = sign.apply(l);

    // reduced form with positive leading coefficient
    let mut tracked = reduce(&monodromy_form(&pos)?);
    if tracked.form.qa.is_negative() {
        let (form, m) = rho(&tracked.form);
        tracked.form = form;
        tracked.transform = &tracked.transform * &m;
    }
    // Q_{G L G^-1} = Q_L o G^{-1}, so G = T^{-1}
    let mut conj = tracked.transform.inverse()?;
    let mut n = pos.conjugate_by(&conj)?;
    debug_assert!(n.entries().iter().all(|e| !e.is_negative()));

    let mut blocks = peel(&n);

    // merge a wrapped block, then start on R
    if blocks.len() > 1 && blocks[0].0 == blocks[blocks.len() - 1].0 {
        let (letter, k) = blocks.pop().unwrap();
        let y = letter_pow(letter, &k);
        conj = &y * &conj;
        n = n.conjugate_by(&y)?;
        blocks[0].1 += k;
    }
    if blocks[0].0 == Letter::S {
        let (letter, k) = blocks.remove(0);
        let x_inv = letter_pow(letter, &-&k);
        conj = &x_inv * &conj;
        n = n.conjugate_by(&x_inv)?;
        blocks.push((letter, k));
    }
    let exps: Vec<BigInt> = blocks.into_iter().map(|(_, k)| k).collect();
    debug_assert_eq!(word_matrix(&exps), n);

    let start = least_even_rotation(&exps);
    let prefix = word_matrix(&exps[..start]);
    conj = &prefix.inverse()? * &conj;
    let word = CyclicWord {
        exponents: rotate(&exps, start),
    };
    Ok(WordReduction {
        sign,
        word,
        conjugator: conj,
    })
}

fn letter_pow(letter: Letter, k: &BigInt) -> IntMatrix2 {
    match letter {
        Letter::R => IntMatrix2::r_pow(k),
        Letter::S => IntMatrix2::s_pow(k),
    }
}

/// Factors a nonnegative matrix of SL(2,Z) into maximal `R`/`S` blocks.
fn peel(n: &IntMatrix2) -> Vec<(Letter, BigInt)> {
    let (mut a, mut b, mut c, mut d) = (n.a.clone(), n.b.clone(), n.c.clone(), n.d.clone());
    let mut out = Vec::new();
    loop {
        if a.is_one() && b.is_zero() && c.is_zero() && d.is_one() {
            return out;
        }
        if a >= c && b >= d {
            let k = max_multiple(&(&a, &b), &(&c, &d));
            a -= &k * &c;
            b -= &k * &d;
            out.push((Letter::R, k));
        } else {
            debug_assert!(c >= a && d >= b);
            let k = max_multiple(&(&c, &d), &(&a, &b));
            c -= &k * &a;
            d -= &k * &b;
            out.push((Letter::S, k));
        }
    }
}

/// Largest `k` with `top - k * bottom >= 0` entrywise.
fn max_multiple(top: &(&BigInt, &BigInt), bottom: &(&BigInt, &BigInt)) -> BigInt {
    [(top.0, bottom.0), (top.1, bottom.1)]
        .into_iter()
        .filter(|(_, y)| y.is_positive())
        .map(|(x, y)| x.div_floor(y))
        .min()
        .expect("bottom row of a unimodular matrix is nonzero")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Sl,
    Gl,
}

/// Decides whether `B = K A K^{-1}` for some `K` in SL(2,Z) (or GL(2,Z)),
/// returning such a `K` when it exists.
pub fn are_conjugate(a: &IntMatrix2, b: &IntMatrix2, group: Group) -> Result<Option<IntMatrix2>> {
    a.require_sl2()?;
    b.require_sl2()?;
    let ra = word_reduction(a)?;
    let rb = word_reduction(b)?;
    if ra.sign == rb.sign && ra.word == rb.word {
        return Ok(Some(&rb.conjugator.inverse()? * &ra.conjugator));
    }
    if group == Group::Gl {
        let j = IntMatrix2::reflection();
        let mirror = b.conjugate_by(&j)?;
        let rm = word_reduction(&mirror)?;
        if ra.sign == rm.sign && ra.word == rm.word {
            // K0 A K0^-1 = J B J, so (J K0) A (J K0)^-1 = B
            let k0 = &rm.conjugator.inverse()? * &ra.conjugator;
            return Ok(Some(&j * &k0));
        }
    }
    Ok(None)
}

/// A curve `c` whose image meets it once: `Q_L(c) = value = +-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitWitness {
    pub curve: PrimitiveSlope,
    pub value: i8,
}

/// Finds a primitive `v` with `Q_L(v) = value`. The coordinate curves are
/// tried first, then the reduced cycle: since `|value| = 1 < sqrt(D)/2`,
/// a representation exists iff `value` is a leading coefficient there.
pub fn represent(l: &IntMatrix2, value: i8) -> Result<Option<PrimitiveSlope>> {
    require_anosov(l)?;
    let form = monodromy_form(l)?;
    Ok(find_value(&form, &reduced_cycle(&form), value))
}

fn find_value(form: &MonodromyForm, cycle: &[TrackedForm], value: i8) -> Option<PrimitiveSlope> {
    let target = BigInt::from(value);
    let slope = |p: &BigInt, q: &BigInt| PrimitiveSlope::new(p.clone(), q.clone()).ok();
    if form.qa == target {
        return slope(&BigInt::one(), &BigInt::zero());
    }
    if form.qc == target {
        return slope(&BigInt::zero(), &BigInt::one());
    }
    cycle
        .iter()
        .find(|t| t.form.qa == target)
        // leading coefficient = form(1, 0) = Q_L(T e1)
        .and_then(|t| slope(&t.transform.a, &t.transform.c))
}

/// A curve meeting its image exactly once, preferring `Q_L = +1`.
pub fn represent_unit(l: &IntMatrix2) -> Result<Option<UnitWitness>> {
    require_anosov(l)?;
    let form = monodromy_form(l)?;
    let cycle = reduced_cycle(&form);
    Ok([1i8, -1].into_iter().find_map(|value| {
        find_value(&form, &cycle, value).map(|curve| UnitWitness { curve, value })
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub sign: Sign,
    pub word: CyclicWord,
    pub representative: IntMatrix2,
}

/// One representative per SL(2,Z) conjugacy class of trace `t`, ordered
/// by canonical word.
pub fn classes_of_trace(t: &BigInt) -> Result<Vec<ConjugacyClass>> {
    if t.abs() <= BigInt::from(2) {
        return Err(Error::TraceTooSmall(t.abs().to_string()));
    }
    if t.is_negative() {
        return Ok(classes_of_trace(&-t)?
            .into_iter()
            .map(|cl| ConjugacyClass {
                sign: Sign::Minus,
                representative: -&cl.representative,
                word: cl.word,
            })
            .collect());
    }
    let disc = t * t - BigInt::from(4);
    let c_max = (&disc / BigInt::from(3)).sqrt();
    let root_ceil = disc.sqrt() + BigInt::one();
    let mut found: BTreeMap<CyclicWord, ()> = BTreeMap::new();

    let mut c = -&c_max;
    while c <= c_max {
        if !c.is_zero() {
            let bound = BigInt::from(2) * c.abs() + &root_ceil;
            let mut delta = -&bound;
            while delta <= bound {
                let sum = t + &delta;
                if sum.is_even() {
                    let a: BigInt = &sum / BigInt::from(2);
                    let d = t - &a;
                    let (b, rem) = (&a * &d - BigInt::one()).div_rem(&c);
                    if rem.is_zero() {
                        let m = IntMatrix2::new(a, b, c.clone(), d);
                        let (_, word) = cyclic_word(&m)?;
                        found.insert(word, ());
                    }
                }
                delta += 1;
            }
        }
        c += 1;
    }
    Ok(found
        .into_keys()
        .map(|word| ConjugacyClass {
            sign: Sign::Plus,
            representative: word.matrix(),
            word,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> IntMatrix2 {
        IntMatrix2::new(a, b, c, d)
    }

    fn word(e: &[i64]) -> CyclicWord {
        CyclicWord::new(e.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    #[test]
    fn word_examples() {
        assert_eq!(cyclic_word(&m(2, 1, 1, 1)).unwrap(), (Sign::Plus, word(&[1, 1])));
        assert_eq!(cyclic_word(&m(3, -1, 1, 0)).unwrap(), (Sign::Plus, word(&[1, 1])));
        assert_eq!(cyclic_word(&m(3, 2, 1, 1)).unwrap(), (Sign::Plus, word(&[2, 1])));
        assert_eq!(cyclic_word(&m(3, 1, 2, 1)).unwrap(), (Sign::Plus, word(&[1, 2])));
        assert_eq!(cyclic_word(&m(-2, -1, -1, -1)).unwrap(), (Sign::Minus, word(&[1, 1])));
    }

    #[test]
    fn word_reduction_conjugator_is_exact() {
        for l in [m(2, 1, 1, 1), m(3, -1, 1, 0), m(1, 2, 2, 5), m(-7, 3, -5, 2), m(13, -35, 3, -8)] {
            let r = word_reduction(&l).unwrap();
            assert!(r.conjugator.is_sl2());
            assert_eq!(l.conjugate_by(&r.conjugator).unwrap(), r.sign.apply(&r.word.matrix()));
        }
    }

    #[test]
    fn word_rejects_non_anosov() {
        assert!(matches!(cyclic_word(&m(1, 1, 0, 1)), Err(Error::NotAnosov(_))));
        assert!(matches!(cyclic_word(&m(2, 1, 1, 2)), Err(Error::NotSL2(_))));
    }

    #[test]
    fn canonical_rotation_is_even_and_least() {
        let w = word(&[3, 1, 1, 2]);
        assert_eq!(w.exponents(), &[1, 2, 3, 1].map(BigInt::from));
        assert!(w.is_rotation_of(&[3, 1, 1, 2].map(BigInt::from)));
        assert!(!w.is_rotation_of(&[1, 3, 1, 2].map(BigInt::from)));
        assert!(CyclicWord::new(vec![BigInt::from(1)]).is_none());
        assert!(CyclicWord::new(vec![BigInt::from(1), BigInt::from(0)]).is_none());
    }

    #[test]
    fn conjugate_examples() {
        let a = m(2, 1, 1, 1);
        let b = m(3, -1, 1, 0);
        let k = are_conjugate(&a, &b, Group::Sl).unwrap().unwrap();
        assert!(k.is_sl2());
        assert_eq!(&k * &a, &b * &k);

        assert!(are_conjugate(&m(3, 2, 1, 1), &m(3, 1, 2, 1), Group::Sl).unwrap().is_none());

        let a = m(4, -1, 1, 0);
        let b = m(4, 1, -1, 0);
        assert!(are_conjugate(&a, &b, Group::Sl).unwrap().is_none());
        let k = are_conjugate(&a, &b, Group::Gl).unwrap().unwrap();
        assert_eq!(k.det(), BigInt::from(-1));
        assert_eq!(&k * &a, &b * &k);
    }

    #[test]
    fn opposite_trace_signs_are_not_conjugate() {
        let a = m(2, 1, 1, 1);
        assert!(are_conjugate(&a, &-&a, Group::Gl).unwrap().is_none());
    }

    #[test]
    fn unit_examples() {
        let w = represent_unit(&m(3, -1, 1, 0)).unwrap().unwrap();
        assert_eq!(w.value, 1);
        assert_eq!(w.curve, PrimitiveSlope::new(1, 0).unwrap());
        let w = represent_unit(&m(2, 1, 1, 1)).unwrap().unwrap();
        assert_eq!((w.value, w.curve), (1, PrimitiveSlope::new(1, 0).unwrap()));
        assert!(represent_unit(&m(1, 2, 2, 5)).unwrap().is_none());
    }

    #[test]
    fn negative_unit_only() {
        // mirror standard form: Q = -x^2 - 4xy - y^2 never takes the value +1
        let l = m(4, 1, -1, 0);
        let w = represent_unit(&l).unwrap().unwrap();
        assert_eq!(w.value, -1);
        assert!(represent(&l, 1).unwrap().is_none());
        let f = monodromy_form(&l).unwrap();
        let (p, q) = w.curve.vector();
        assert_eq!(f.eval(p, q), BigInt::from(-1));
    }

    #[test]
    fn class_counts() {
        assert_eq!(classes_of_trace(&3.into()).unwrap().len(), 1);
        assert_eq!(classes_of_trace(&(-3).into()).unwrap().len(), 1);
        let four = classes_of_trace(&4.into()).unwrap();
        assert_eq!(four.len(), 2);
        let words: Vec<CyclicWord> = four.iter().map(|c| c.word.clone()).collect();
        assert_eq!(words, vec![word(&[1, 2]), word(&[2, 1])]);
        assert!(matches!(classes_of_trace(&2.into()), Err(Error::TraceTooSmall(_))));
        assert!(matches!(classes_of_trace(&(-1).into()), Err(Error::TraceTooSmall(_))));
    }

    #[test]
    fn negative_trace_classes_are_negated() {
        let pos = classes_of_trace(&5.into()).unwrap();
        let neg = classes_of_trace(&(-5).into()).unwrap();
        assert_eq!(pos.len(), neg.len());
        for (p, n) in pos.iter().zip(&neg) {
            assert_eq!(n.representative, -&p.representative);
            assert_eq!(n.sign, Sign::Minus);
        }
    }
}

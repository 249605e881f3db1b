//! Matrices commuting with a standard-form monodromy `[[m,-1],[1,0]]`, and
//! reversibility (conjugacy of `L` with `L^{-1}`).
//!
//! In SL(2,Z) the centralizer is `{+-L^n}`. In GL(2,Z) there is one more
//! coset exactly when `|m| = 3`, represented by a fixed det -1 matrix.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::algebra::{mat_pow, power_trace, IntMatrix2};
use crate::conjugacy::{are_conjugate, Group, Sign};
use crate::error::{Error, Result};

pub fn commutes(k: &IntMatrix2, l: &IntMatrix2) -> bool {
    k * l == l * k
}

/// `m` if `l = [[m,-1],[1,0]]` with `|m| >= 3`.
pub fn standard_form_trace(l: &IntMatrix2) -> Result<BigInt> {
    let shape_ok = l.b == -BigInt::one() && l.c.is_one() && l.d == BigInt::from(0);
    if shape_ok && l.a.abs() >= BigInt::from(3) {
        Ok(l.a.clone())
    } else {
        Err(Error::NotStandardForm(l.to_string()))
    }
}

/// Writes `k = sign * L^n` for `k` in SL(2,Z) commuting with a standard
/// form `L`. `|n|` is read off from `|trace k|` against the strictly
/// increasing sequence `trace(|L|^n)`, then the four candidates
/// `+-L^{+-n}` are tested exactly.
pub fn express_power(k: &IntMatrix2, l: &IntMatrix2) -> Result<(Sign, i64)> {
    let m = standard_form_trace(l)?;
    if !commutes(k, l) {
        return Err(Error::NotCommuting);
    }
    let not_expressible = || Error::NotExpressible(k.to_string(), k.det().to_string());
    if !k.is_sl2() {
        return Err(not_expressible());
    }
    let id = IntMatrix2::identity();
    if *k == id {
        return Ok((Sign::Plus, 0));
    }
    if *k == -&id {
        return Ok((Sign::Minus, 0));
    }
    let target = k.trace().abs();
    let abs_m = m.abs();
    let mut n: u64 = 1;
    loop {
        let t = power_trace(&abs_m, n);
        if t == target {
            break;
        }
        if t > target {
            return Err(not_expressible());
        }
        n += 1;
    }
    let n = i64::try_from(n).map_err(|_| not_expressible())?;
    for exp in [n, -n] {
        let p = mat_pow(l, exp)?;
        if *k == p {
            return Ok((Sign::Plus, exp));
        }
        if *k == -&p {
            return Ok((Sign::Minus, exp));
        }
    }
    Err(not_expressible())
}

/// How the extra det -1 centralizer element squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareRelation {
    Base,
    NegBase,
    Inverse,
    NegInverse,
    Other,
}

impl fmt::Display for SquareRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SquareRelation::Base => "L",
            SquareRelation::NegBase => "-L",
            SquareRelation::Inverse => "L^-1",
            SquareRelation::NegInverse => "-L^-1",
            SquareRelation::Other => "other",
        })
    }
}

impl Serialize for SquareRelation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlExtra {
    pub matrix: IntMatrix2,
    pub square: SquareRelation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerDescription {
    pub base: IntMatrix2,
    pub sl_part: String,
    pub gl_extra: Option<GlExtra>,
    pub reversible: bool,
    pub reversing_witness: Option<IntMatrix2>,
}

pub fn centralizer_description(l: &IntMatrix2) -> Result<CentralizerDescription> {
    let m = standard_form_trace(l)?;
    let extra = match m.to_i64() {
        Some(3) => Some(IntMatrix2::new(-2, 1, -1, 1)),
        Some(-3) => Some(IntMatrix2::new(2, 1, -1, -1)),
        _ => None,
    };
    let gl_extra = match extra {
        Some(b) => {
            let sq = &b * &b;
            let inv = l.inverse()?;
            let square = if sq == *l {
                SquareRelation::Base
            } else if sq == -l {
                SquareRelation::NegBase
            } else if sq == inv {
                SquareRelation::Inverse
            } else if sq == -&inv {
                SquareRelation::NegInverse
            } else {
                SquareRelation::Other
            };
            Some(GlExtra { matrix: b, square })
        }
        None => None,
    };
    let reversing_witness = is_reversible(l)?;
    Ok(CentralizerDescription {
        base: l.clone(),
        sl_part: "{±L^n : n ∈ Z}".to_string(),
        gl_extra,
        reversible: reversing_witness.is_some(),
        reversing_witness,
    })
}

/// `Some(K)` with `K L K^{-1} = L^{-1}`, `K` in SL(2,Z), when `L` is
/// reversible.
pub fn is_reversible(l: &IntMatrix2) -> Result<Option<IntMatrix2>> {
    let inv = mat_pow(l, -1)?;
    are_conjugate(l, &inv, Group::Sl)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> IntMatrix2 {
        IntMatrix2::new(a, b, c, d)
    }

    #[test]
    fn commute_examples() {
        assert!(commutes(&m(-2, 1, -1, 1), &m(3, -1, 1, 0)));
        assert!(commutes(&m(2, 1, -1, -1), &m(-3, -1, 1, 0)));
        assert!(!commutes(&IntMatrix2::r(), &m(3, -1, 1, 0)));
    }

    #[test]
    fn express_examples() {
        let l3 = m(3, -1, 1, 0);
        assert_eq!(express_power(&IntMatrix2::identity(), &l3).unwrap(), (Sign::Plus, 0));
        let l4 = m(4, -1, 1, 0);
        assert_eq!(express_power(&m(-56, 15, -15, 4), &l4).unwrap(), (Sign::Minus, 3));
        assert!(matches!(
            express_power(&m(-2, 1, -1, 1), &l3),
            Err(Error::NotExpressible(..))
        ));
        assert!(matches!(express_power(&IntMatrix2::r(), &l3), Err(Error::NotCommuting)));
        assert!(matches!(
            express_power(&IntMatrix2::identity(), &m(2, 1, 1, 1)),
            Err(Error::NotStandardForm(_))
        ));
    }

    #[test]
    fn express_negative_m_and_negative_powers() {
        let l = m(-5, -1, 1, 0);
        for n in -6..=6 {
            let p = mat_pow(&l, n).unwrap();
            assert_eq!(express_power(&p, &l).unwrap(), (Sign::Plus, n));
            assert_eq!(express_power(&-&p, &l).unwrap(), (Sign::Minus, n));
        }
    }

    #[test]
    fn description_examples() {
        let d = centralizer_description(&m(3, -1, 1, 0)).unwrap();
        let extra = d.gl_extra.unwrap();
        assert_eq!(extra.matrix, m(-2, 1, -1, 1));
        assert_eq!(extra.square, SquareRelation::Base);
        assert!(d.reversible);

        let d = centralizer_description(&m(-3, -1, 1, 0)).unwrap();
        let extra = d.gl_extra.unwrap();
        assert_eq!(extra.matrix, m(2, 1, -1, -1));
        assert_eq!(extra.square, SquareRelation::NegBase);
        assert!(d.reversible);

        let d = centralizer_description(&m(4, -1, 1, 0)).unwrap();
        assert!(d.gl_extra.is_none());
        assert!(!d.reversible);
    }

    #[test]
    fn reversibility_examples() {
        let l = m(3, -1, 1, 0);
        let k = is_reversible(&l).unwrap().unwrap();
        assert!(k.is_sl2());
        assert_eq!(&k * &l, &l.inverse().unwrap() * &k);
        // the hand-checked witness also works
        let k = m(1, -2, 1, -1);
        assert_eq!(&k * &l, &l.inverse().unwrap() * &k);
        assert!(is_reversible(&m(4, -1, 1, 0)).unwrap().is_none());
        assert!(is_reversible(&m(2, 1, 1, 1)).unwrap().is_some());
    }
}

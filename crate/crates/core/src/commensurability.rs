//! Virtual conjugacy of Anosov monodromies: integer intertwiners `P` with
//! `P A = B P` and `det P != 0`. The image lattice `P(Z^2)` has index
//! `|det P|` and the induced torus cover realizes the commensurability of
//! the two solvmanifolds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{power_trace, require_anosov, IntMatrix2};
use crate::conjugacy::{are_conjugate, Group};
use crate::error::Result;

/// Half-width of the coefficient box searched over the kernel basis.
pub const KERNEL_SEARCH_RADIUS: i64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntertwinerSource {
    /// A GL(2,Z) conjugator; index 1.
    Conjugacy,
    /// Smallest `|det|` found in the bounded kernel search.
    KernelSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Intertwiner {
    pub p: IntMatrix2,
    #[serde(serialize_with = "crate::algebra::ser_display")]
    pub index: BigInt,
    pub source: IntertwinerSource,
}

impl Intertwiner {
    pub fn verify(&self, a: &IntMatrix2, b: &IntMatrix2) -> bool {
        let det = self.p.det();
        !det.is_zero()
            && det.abs() == self.index
            && self.p.content().is_one()
            && &self.p * a == b * &self.p
    }
}

/// Integer basis of the kernel of an integer matrix, computed by
/// fraction-free elimination. Each basis vector is primitive.
pub fn integer_kernel(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        for i in 0..m.len() {
            if i == r || m[i][col].is_zero() {
                continue;
            }
            let (p, f) = (m[r][col].clone(), m[i][col].clone());
            let (top, other) = if i < r {
                let (lo, hi) = m.split_at_mut(r);
                (&hi[0], &mut lo[i])
            } else {
                let (lo, hi) = m.split_at_mut(i);
                (&lo[r], &mut hi[0])
            };
            for (x, y) in other.iter_mut().zip(top) {
                *x = &*x * &p - &f * y;
            }
            make_primitive(other);
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }

    let pivot_rows: Vec<(usize, &Vec<BigInt>)> = pivots.iter().copied().zip(&m).collect();
    let lcm = pivot_rows
        .iter()
        .fold(BigInt::one(), |acc, (c, row)| acc.lcm(&row[*c]));
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigInt::zero(); ncols];
            v[free] = lcm.clone();
            for (c, row) in &pivot_rows {
                // row[c] x_c + row[free] x_free = 0
                v[*c] = -(&row[free] * &lcm) / &row[*c];
            }
            make_primitive(&mut v);
            v
        })
        .collect()
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Coefficients of the linear map `P -> P A - B P` on
/// `P = [[p1, p2], [p3, p4]]`.
fn intertwining_system(a: &IntMatrix2, b: &IntMatrix2) -> Vec<Vec<BigInt>> {
    let z = BigInt::zero;
    vec![
        vec![&a.a - &b.a, a.c.clone(), -&b.b, z()],
        vec![a.b.clone(), &a.d - &b.a, z(), -&b.b],
        vec![-&b.c, z(), &a.a - &b.d, a.c.clone()],
        vec![z(), -&b.c, a.b.clone(), &a.d - &b.d],
    ]
}

/// An integer `P` with `P A = B P`, `det P != 0` and coprime entries, or
/// `None` when the traces differ. GL(2,Z)-conjugate pairs get their
/// conjugator (index 1); otherwise the kernel is searched over a bounded
/// coefficient box for the smallest nonzero `|det|`.
pub fn intertwiner(a: &IntMatrix2, b: &IntMatrix2) -> Result<Option<Intertwiner>> {
    require_anosov(a)?;
    require_anosov(b)?;
    if a.trace() != b.trace() {
        return Ok(None);
    }
    if let Some(k) = are_conjugate(a, b, Group::Gl)? {
        return Ok(Some(Intertwiner {
            index: BigInt::one(),
            p: k,
            source: IntertwinerSource::Conjugacy,
        }));
    }

    let basis = integer_kernel(&intertwining_system(a, b));
    debug_assert_eq!(basis.len(), 2);
    let to_matrix = |v: &[BigInt]| IntMatrix2::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone());
    let (u, v) = (to_matrix(&basis[0]), to_matrix(&basis[1]));

    let rad = KERNEL_SEARCH_RADIUS;
    let mut best: Option<(BigInt, IntMatrix2)> = None;
    for x in -rad..=rad {
        for y in -rad..=rad {
            if x.gcd(&y) != 1 {
                continue;
            }
            let mut p = IntMatrix2::new(
                &u.a * x + &v.a * y,
                &u.b * x + &v.b * y,
                &u.c * x + &v.c * y,
                &u.d * x + &v.d * y,
            );
            let g = p.content();
            if !g.is_one() {
                p = IntMatrix2::new(&p.a / &g, &p.b / &g, &p.c / &g, &p.d / &g);
            }
            let det = p.det().abs();
            if det.is_zero() {
                continue;
            }
            let better = match &best {
                None => true,
                Some((d, q)) => det < *d || (det == *d && p < *q),
            };
            if better {
                best = Some((det, p));
            }
        }
    }
    Ok(best.map(|(index, p)| Intertwiner {
        p,
        index,
        source: IntertwinerSource::KernelSearch,
    }))
}

/// For `|trace| >= 3`, virtual conjugacy is equality of traces; the
/// intertwiner is attached as a witness.
pub fn virtually_conjugate(a: &IntMatrix2, b: &IntMatrix2) -> Result<Option<Intertwiner>> {
    intertwiner(a, b)
}

/// Least `n >= 1` with `trace(A^n) = s`.
pub fn has_power_with_trace(a: &IntMatrix2, s: &BigInt) -> Result<Option<u64>> {
    require_anosov(a)?;
    let t = a.trace();
    let mut n = 1u64;
    loop {
        // the recursion is valid for negative t: t_n(-t) = (-1)^n t_n(t)
        let tn = power_trace(&t, n);
        if tn == *s {
            return Ok(Some(n));
        }
        if tn.abs() > s.abs() {
            return Ok(None);
        }
        n += 1;
    }
}

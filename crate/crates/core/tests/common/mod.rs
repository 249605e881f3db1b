//! Brute-force oracles and random generators shared by the integration
//! tests. Everything here works on plain `i64`/`i128` and never calls into
//! the library's reduction code, so agreement is an independent check.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use solvgenus::IntMatrix2;

pub type M = [i64; 4];

pub fn to_big(m: &M) -> IntMatrix2 {
    IntMatrix2::new(m[0], m[1], m[2], m[3])
}

pub fn to_small(m: &IntMatrix2) -> M {
    let f = |x: &BigInt| x.to_i64().expect("entry fits in i64");
    [f(&m.a), f(&m.b), f(&m.c), f(&m.d)]
}

pub fn mul(x: &M, y: &M) -> M {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

pub fn det(m: &M) -> i64 {
    m[0] * m[3] - m[1] * m[2]
}

pub fn trace(m: &M) -> i64 {
    m[0] + m[3]
}

/// Bounded conjugator search: every `K` with entries in `[-bound, bound]` and `K A = B K`,
/// `det K` in `dets`, found by exhausting the top row. Given the top row,
/// the first row of `K A = B K` fixes the bottom row because `B[0][1] != 0`
/// for hyperbolic `B`.
pub fn conjugators(a: &M, b: &M, bound: i64, dets: &[i64], first_only: bool) -> Vec<M> {
    let (a1, b1, c1, d1) = (a[0] as i128, a[1] as i128, a[2] as i128, a[3] as i128);
    let (e, f) = (b[0] as i128, b[1] as i128);
    assert!(f != 0, "oracle needs B[0][1] != 0");
    let mut out = Vec::new();
    for p in -bound..=bound {
        for q in -bound..=bound {
            let (p, q) = (p as i128, q as i128);
            let rn = p * (a1 - e) + q * c1;
            let sn = p * b1 + q * (d1 - e);
            if rn % f != 0 || sn % f != 0 {
                continue;
            }
            let (r, s) = (rn / f, sn / f);
            if r.abs() > bound as i128 || s.abs() > bound as i128 {
                continue;
            }
            let k = [p as i64, q as i64, r as i64, s as i64];
            if !dets.contains(&det(&k)) {
                continue;
            }
            if mul(&k, a) == mul(b, &k) {
                out.push(k);
                if first_only {
                    return out;
                }
            }
        }
    }
    out
}

pub fn conjugate_sl_bruteforce(a: &M, b: &M, bound: i64) -> Option<M> {
    conjugators(a, b, bound, &[1], true).pop()
}

pub fn conjugate_gl_bruteforce(a: &M, b: &M, bound: i64) -> Option<M> {
    conjugators(a, b, bound, &[1, -1], true).pop()
}

/// Unit representation by exhaustion: some primitive `(p, q)` with `|p|, |q| <= bound` and
/// `|det(v, L v)| = 1`. Only `q >= 0` is scanned since the form is even.
pub fn unit_bruteforce(l: &M, bound: i64) -> Option<(i64, i64, i64)> {
    let (a, b, c, d) = (l[0] as i128, l[1] as i128, l[2] as i128, l[3] as i128);
    for q in 0..=bound {
        for p in -bound..=bound {
            let (x, y) = (p as i128, q as i128);
            let v = c * x * x + (d - a) * x * y - b * y * y;
            if v == 1 || v == -1 {
                return Some((p, q, v as i64));
            }
        }
    }
    None
}

/// Exhaustive centralizer scan: every matrix with entries in `[-bound, bound]` commuting with `l`.
pub fn commuting_bruteforce(l: &M, bound: i64) -> Vec<M> {
    let mut out = Vec::new();
    for p in -bound..=bound {
        for q in -bound..=bound {
            for r in -bound..=bound {
                for s in -bound..=bound {
                    let k = [p, q, r, s];
                    if mul(&k, l) == mul(l, &k) {
                        out.push(k);
                    }
                }
            }
        }
    }
    out
}

/// All trace-`t` matrices of SL(2,Z) with entries in `[-bound, bound]`.
pub fn matrices_of_trace(t: i64, bound: i64) -> Vec<M> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        let d = t - a;
        if d.abs() > bound {
            continue;
        }
        for c in -bound..=bound {
            if c == 0 {
                continue;
            }
            let num = a * d - 1;
            if num % c == 0 {
                let b = num / c;
                if b.abs() <= bound {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// Number of clusters of trace-`t` matrices with entries `<= entry_bound`
/// under the bounded conjugator search (`conj_bound`). A matrix joins a
/// cluster when it is conjugate to one of its first few members, which
/// are the smallest since matrices are visited in order of size.
pub fn cluster_count(t: i64, entry_bound: i64, conj_bound: i64) -> usize {
    let mut mats = matrices_of_trace(t, entry_bound);
    mats.sort_by_key(|m| (m.iter().map(|x| x.abs()).sum::<i64>(), *m));
    let mut clusters: Vec<Vec<M>> = Vec::new();
    'outer: for m in mats {
        for cl in clusters.iter_mut() {
            for rep in cl.iter().take(4) {
                if conjugate_sl_bruteforce(rep, &m, conj_bound).is_some() {
                    cl.push(m);
                    continue 'outer;
                }
            }
        }
        clusters.push(vec![m]);
    }
    clusters.len()
}

const GENERATORS: [M; 4] = [[1, 1, 0, 1], [1, -1, 0, 1], [1, 0, 1, 1], [1, 0, -1, 1]];

/// A random element of SL(2,Z) as a word of the given length in
/// `R^{+-1}, S^{+-1}`.
pub fn random_sl2(rng: &mut ChaCha8Rng, len: usize) -> IntMatrix2 {
    let mut m = IntMatrix2::identity();
    for _ in 0..len {
        let g = GENERATORS[rng.gen_range(0..4)];
        m = &m * &to_big(&g);
    }
    m
}

/// A random Anosov matrix with `3 <= |trace| <= max_trace` and small entries.
pub fn random_anosov(rng: &mut ChaCha8Rng, max_trace: i64) -> M {
    loop {
        let len = rng.gen_range(2..10);
        let mut m: M = [1, 0, 0, 1];
        for _ in 0..len {
            m = mul(&m, &GENERATORS[rng.gen_range(0..4)]);
        }
        if rng.gen_bool(0.5) {
            m = m.map(|x| -x);
        }
        let t = trace(&m).abs();
        if (3..=max_trace).contains(&t) && m.iter().all(|x| x.abs() <= 200) {
            return m;
        }
    }
}

//! Reduction theory of indefinite binary quadratic forms with non-square
//! discriminant.
//!
//! A form `(a, b, c)` of discriminant `D > 0` is reduced when
//! `0 < b < sqrt(D)` and `sqrt(D) - b < 2|a| < sqrt(D) + b`. The reduction
//! operator `(a, b, c) -> (c, r, (r^2 - D) / 4c)` reaches a reduced form in
//! finitely many steps, after which it permutes the reduced forms of the
//! proper equivalence class in a single cycle.
//!
//! Every step is a substitution `f -> f o M` with `M = [[0,-1],[1,s]]`, and
//! the accumulated product is carried along so callers can map results back
//! to the original variables.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::algebra::{IntMatrix2, MonodromyForm};

/// A form together with the substitution `t` such that
/// `form = original o t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackedForm {
    pub form: MonodromyForm,
    pub transform: IntMatrix2,
}

/// `x < sqrt(d)` for non-square `d > 0`.
fn lt_sqrt(x: &BigInt, d: &BigInt) -> bool {
    x.is_negative() || &(x * x) < d
}

/// `x > sqrt(d)` for non-square `d > 0`.
fn gt_sqrt(x: &BigInt, d: &BigInt) -> bool {
    x.is_positive() && &(x * x) > d
}

pub fn is_reduced(f: &MonodromyForm) -> bool {
    let d = &f.disc;
    let two_a = BigInt::from(2) * f.qa.abs();
    f.qb.is_positive()
        && lt_sqrt(&f.qb, d)
        && gt_sqrt(&(&two_a + &f.qb), d)
        && lt_sqrt(&(&two_a - &f.qb), d)
}

/// One application of the reduction operator. Requires `qc != 0`, which
/// always holds when the discriminant is not a square.
pub fn rho(f: &MonodromyForm) -> (MonodromyForm, IntMatrix2) {
    let (a, b, c, d) = (&f.qa, &f.qb, &f.qc, &f.disc);
    debug_assert!(!c.is_zero());
    let abs_c = c.abs();
    let two_abs_c = BigInt::from(2) * &abs_c;
    let neg_b = -b;
    let r = if gt_sqrt(&abs_c, d) {
        // representative of -b mod 2|c| in (-|c|, |c|]
        let mut r = neg_b.mod_floor(&two_abs_c);
        if r > abs_c {
            r -= &two_abs_c;
        }
        r
    } else {
        // largest r < sqrt(D) with r = -b mod 2|c|; it is > sqrt(D) - 2|c|
        let root = d.sqrt();
        &neg_b + &two_abs_c * (&root - &neg_b).div_floor(&two_abs_c)
    };
    let s = (&r + b) / (BigInt::from(2) * c);
    let m = IntMatrix2::new(0, -1, 1, s.clone());
    let next = MonodromyForm::new(c.clone(), r, a - b * &s + c * &s * &s);
    debug_assert_eq!(next.disc, *d);
    (next, m)
}

/// Applies the reduction operator until the form is reduced.
pub fn reduce(f: &MonodromyForm) -> TrackedForm {
    let mut cur = TrackedForm {
        form: f.clone(),
        transform: IntMatrix2::identity(),
    };
    while !is_reduced(&cur.form) {
        cur = step(&cur);
    }
    cur
}

fn step(t: &TrackedForm) -> TrackedForm {
    let (form, m) = rho(&t.form);
    TrackedForm {
        form,
        transform: &t.transform * &m,
    }
}

/// The full cycle of reduced forms properly equivalent to `f`, starting at
/// the first reduced form reached from `f`. Every entry carries the
/// substitution from the original variables.
pub fn reduced_cycle(f: &MonodromyForm) -> Vec<TrackedForm> {
    let start = reduce(f);
    let mut out = vec![start.clone()];
    let mut cur = step(&start);
    while cur.form != start.form {
        out.push(cur.clone());
        cur = step(&cur);
    }
    out
}

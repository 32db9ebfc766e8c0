//! Steenrod squares on the polynomial algebra `F2[w_2, ..., w_n]` and the
//! construction of the generator sequence `v_0, ..., v_{h'-1}`.
//!
//! On a generator the action is unstable: `Sq^0 w_m = w_{2m-1}` (zero once
//! `2m - 1 > n`), `Sq^1 w_m = w_m^2`, and `Sq^j w_m = 0` for `j >= 2`; note
//! that `Sq^0` is not the identity. Products follow the Cartan formula
//! `Sq^k(xy) = sum_{i+j=k} Sq^i(x) Sq^j(y)`, and the whole action extends
//! linearly over GF(2). The truncation rule `w_j = 0` for `j > n` is applied
//! once per square, after the expansion.

use std::collections::BTreeSet;

use crate::f2poly::{Monomial, Polynomial};
use crate::spinarith::{Check, CheckReport, SpinParams};

/// `Sq^k` on a polynomial in its own context `n`.
pub fn sq(k: u32, p: &Polynomial) -> Polynomial {
    let n = p.n();
    // One square on input over w_2..w_n reaches indices at most 2n - 1.
    let wide = 2 * n;
    let mut acc = Polynomial::zero(wide);
    for m in p.terms() {
        acc = &acc + &sq_monomial(k, m, wide);
    }
    acc.truncated(n)
}

/// Cartan recursion on one monomial: peel generator factors one at a time,
/// tracking `Sq^j` of the processed prefix for every `j <= k`.
fn sq_monomial(k: u32, m: &Monomial, wide: u32) -> Polynomial {
    let k = k as usize;
    let mut table: Vec<Polynomial> = Vec::with_capacity(k + 1);
    table.push(Polynomial::one(wide));
    table.resize(k + 1, Polynomial::zero(wide));
    for &(a, e) in m.exponents() {
        let block = sq_power_block(a, e, k, wide);
        let mut next = vec![Polynomial::zero(wide); k + 1];
        for (j1, b) in block.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for j2 in 0..=(k - j1) {
                if table[j2].is_zero() {
                    continue;
                }
                next[j1 + j2] = &next[j1 + j2] + &b.mul(&table[j2]);
            }
        }
        table = next;
    }
    table.pop().unwrap()
}

/// `Sq^j(w_a^e)` for all `j <= k`, by peeling single factors of `w_a`.
/// Every entry is a single monomial `w_a^(2j) w_{2a-1}^(e-j)` or zero, with
/// the binomial parity handled by GF(2) cancellation.
fn sq_power_block(a: u32, e: u32, k: usize, wide: u32) -> Vec<Polynomial> {
    let doubled = Polynomial::var(wide, 2 * a - 1);
    let squared = Polynomial::var(wide, a).mul(&Polynomial::var(wide, a));
    let mut table: Vec<Polynomial> = Vec::with_capacity(k + 1);
    table.push(Polynomial::one(wide));
    table.resize(k + 1, Polynomial::zero(wide));
    for _ in 0..e {
        let mut next = vec![Polynomial::zero(wide); k + 1];
        for j in 0..=k {
            if !table[j].is_zero() {
                next[j] = &next[j] + &doubled.mul(&table[j]);
            }
            if j >= 1 && !table[j - 1].is_zero() {
                next[j] = &next[j] + &squared.mul(&table[j - 1]);
            }
        }
        table = next;
    }
    table
}

/// The composite `Sq^(2^(k-1)) ... Sq^2 Sq^1` applied to `p`.
pub fn sq_chain(p: &Polynomial, k: u32) -> Polynomial {
    assert!(k >= 1, "sq_chain needs at least one square");
    let mut cur = sq(1, p);
    for i in 2..=k {
        cur = sq(1 << (i - 1), &cur);
    }
    cur
}

/// The bilinear sum `v_s = sum_{i+j=2^(s-1)} w_{2i+1} w_{2j}` with the
/// conventions `w_0 = w_1 = 0` and `w_i = 0` for `i > n`.
fn v_s_raw(params: &SpinParams) -> Polynomial {
    let n = params.n;
    let half = 1u32 << (params.s - 1);
    let mut p = Polynomial::zero(n);
    for i in 0..=half {
        let j = half - i;
        let a = 2 * i + 1;
        let b = 2 * j;
        if a < 2 || b < 2 || a > n || b > n {
            continue;
        }
        p = p.xor_monomial(Monomial::from_pairs([(a, 1), (b, 1)]));
    }
    p
}

/// The generators `v_0, ..., v_{h'-1}` of the relation ideal, as elements
/// of `F2[w_2, ..., w_n]`:
/// `v_k = w_{2^k+1}` for `k < s` (iterated `Sq^0` of `v_0 = w_2`), then the
/// bilinear sum `v_s`, then `v_{s+k} = Sq^(2^(k-1)) ... Sq^1 v_s`.
pub fn v_generators(params: &SpinParams) -> Vec<Polynomial> {
    let mut vs: Vec<Polynomial> = Vec::with_capacity(params.h_prime as usize);
    for k in 0..params.s.min(params.h_prime) {
        vs.push(Polynomial::var(params.n, (1u32 << k) + 1));
    }
    if params.h_prime > params.s {
        let mut cur = v_s_raw(params);
        vs.push(cur.clone());
        for k in 1..(params.h_prime - params.s) {
            cur = sq(1 << (k - 1), &cur);
            vs.push(cur.clone());
        }
    }
    vs
}

/// Passes to the quotient by `(v_0, ..., v_{s-1})`: every variable outside
/// `E` (that is `w_2` and the `w_{2^j+1}`) is set to zero. The quotient is
/// the polynomial ring on the `E`-variables.
pub fn project_to_r(p: &Polynomial, params: &SpinParams) -> Polynomial {
    let keep: BTreeSet<u32> = params.e_set.iter().copied().collect();
    let kill: BTreeSet<u32> = (2..=params.n).filter(|k| !keep.contains(k)).collect();
    p.substitute_zero(&kill)
}

/// Images in `R` of `v_s, ..., v_{h'-1}` — the relations that actually cut
/// the quotient down. Empty when `h' = s`.
pub fn v_generators_in_r(params: &SpinParams) -> Vec<Polynomial> {
    v_generators(params)
        .iter()
        .skip(params.s as usize)
        .map(|v| project_to_r(v, params))
        .collect()
}

/// Checks the vanishing pattern in `R`: `v_{2s-t+1}` projects to zero,
/// `v_{2s-t}` projects to zero when `epsilon = 0`, and the retained
/// generators `v_s, ..., v_{h'-1}` stay nonzero. Not applicable when `D` is
/// empty.
pub fn verify_vanishing(params: &SpinParams) -> CheckReport {
    let mut report = CheckReport::new(params.n);
    if params.d_set.is_empty() {
        report.push(Check::not_applicable("vanishing_above_top"));
        report.push(Check::not_applicable("vanishing_at_top_eps0"));
        report.push(Check::not_applicable("generators_nonzero_in_r"));
        return report;
    }
    let (s, t) = (params.s, params.t);
    let eps = params.epsilon.unwrap();

    // Raw v_s .. v_{2s-t+1}; h' is 2s-t or 2s-t+1, so this covers one or
    // two indices past the generator list.
    let top = 2 * s - t + 1;
    let mut raw = vec![v_s_raw(params)];
    for k in 1..=(top - s) {
        let next = sq(1 << (k - 1), raw.last().unwrap());
        raw.push(next);
    }
    let image = |idx: u32| project_to_r(&raw[(idx - s) as usize], params);

    report.push(Check::new(
        "vanishing_above_top",
        image(2 * s - t + 1).is_zero(),
    ));
    if eps == 0 {
        report.push(Check::new(
            "vanishing_at_top_eps0",
            image(2 * s - t).is_zero(),
        ));
    } else {
        report.push(Check::not_applicable("vanishing_at_top_eps0"));
    }
    let nonzero = (s..params.h_prime).all(|idx| !image(idx).is_zero());
    report.push(Check::new("generators_nonzero_in_r", nonzero));
    report
}

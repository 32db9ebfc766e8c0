//! Integer combinatorics attached to Spin(n): the parameters
//! `s, t, E, D, m, m', epsilon, h'`, the enumerations `sigma`, `tau`,
//! the sets `C0`, `C1`, and the Hurwitz-Radon number `h`.
//!
//! The comparison `h' = h` versus `h' < h` decides whether the
//! Rothenberg-Steenrod spectral sequence for `BSpin(n)` collapses, so these
//! definitions feed everything else in the crate.

use std::fmt;

/// Number of ones in the binary expansion of `k`.
pub fn alpha(k: u64) -> u32 {
    assert!(k >= 1, "alpha is defined for positive integers, got {k}");
    k.count_ones()
}

/// The Hurwitz-Radon number of `n`, written piecewise with `n = 8l + r`,
/// `1 <= r <= 8`:
/// `4l` for `r = 1`, `4l + 1` for `r = 2`, `4l + 2` for `r in {3, 4}` and
/// `4l + 3` for `r in {5, ..., 8}`.
pub fn hurwitz_radon(n: u32) -> u32 {
    assert!(n >= 9, "defined here for n >= 9, got {n}");
    let ell = (n - 1) / 8;
    let r = n - 8 * ell;
    let add = match r {
        1 => 0,
        2 => 1,
        3 | 4 => 2,
        _ => 3,
    };
    4 * ell + add
}

/// Everything the rest of the crate needs to know about one `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinParams {
    pub n: u32,
    /// `2^(s-1) < n <= 2^s`.
    pub s: u32,
    /// `2^s - 2^t - 1 <= n < 2^s - 2^(t-1) - 1`, with `t = 1` when
    /// `n >= 2^s - 2`.
    pub t: u32,
    /// `E = { k | 2 <= k <= n, alpha(k-1) >= 2 }`, ascending.
    pub e_set: Vec<u32>,
    /// `D = { k | k <= n, 2^s - k + 1 <= n, alpha(k-1) >= 2, alpha(2^s - k) >= 2 }`.
    pub d_set: Vec<u32>,
    /// `max D`; absent exactly when `D` is empty.
    pub m: Option<u32>,
    /// `2^(s-t) (2^s - m) + 1`.
    pub m_prime: Option<u32>,
    /// `1` when `m' <= n`, `0` when `m' > n`.
    pub epsilon: Option<u8>,
    /// `s` when `D` is empty, `2s - t + epsilon` otherwise.
    pub h_prime: u32,
    /// `n = 8 ell + r` with `1 <= r <= 8`.
    pub ell: u32,
    pub h: u32,
    /// A reordering of `E`: `sigma(k) = 2^s - 2^(s-1-k) - 1` for
    /// `k < s - t`, then `m` when `epsilon = 1`, then the remaining
    /// elements of `E` in ascending order.
    pub sigma: Vec<u32>,
    /// `tau(k) = 2^(s-1) + 2^k + 1` for `k < s - t`.
    pub tau: Vec<u32>,
    /// `C0 = { sigma(k) | k < s - t }`.
    pub c0: Vec<u32>,
    /// `C1 = { tau(k) | k < s - t }`.
    pub c1: Vec<u32>,
}

/// Computes all parameters for one `n >= 9`.
pub fn spin_params(n: u32) -> SpinParams {
    assert!(n >= 9, "parameters are defined for n >= 9, got {n}");
    let s = 32 - (n - 1).leading_zeros();
    debug_assert!((1u64 << (s - 1)) < u64::from(n) && u64::from(n) <= (1u64 << s));
    let pow_s = 1u64 << s;

    let t = if u64::from(n) >= pow_s - 2 {
        1
    } else {
        // Unique t with 2^(t-1) < 2^s - n - 1 <= 2^t.
        let gap = pow_s - u64::from(n) - 1;
        let t = 64 - (gap - 1).leading_zeros();
        debug_assert!((1u64 << (t - 1)) < gap && gap <= (1u64 << t));
        t
    };
    // The two defining cases cover every n >= 9 with this unique t.
    assert!((1..s).contains(&t), "t = {t} escaped its range for n = {n}");
    if u64::from(n) < pow_s - 2 {
        assert!(
            pow_s - (1 << t) - 1 <= u64::from(n) && u64::from(n) < pow_s - (1 << (t - 1)) - 1,
            "t = {t} fails its defining inequalities for n = {n}"
        );
    }

    let e_set: Vec<u32> = (2..=n).filter(|&k| (k - 1).count_ones() >= 2).collect();
    assert_eq!(e_set.len() as u32, n - s - 1);

    let d_set: Vec<u32> = (2..=n)
        .filter(|&k| {
            // 2^s - k + 1 <= n, alpha(k-1) >= 2, alpha(2^s - k) >= 2.
            pow_s - u64::from(k) < u64::from(n)
                && (k - 1).count_ones() >= 2
                && (pow_s - u64::from(k)).count_ones() >= 2
        })
        .collect();

    let (m, m_prime, epsilon) = match d_set.last() {
        None => (None, None, None),
        Some(&m) => {
            let mp = (1u64 << (s - t)) * (pow_s - u64::from(m)) + 1;
            let eps = u8::from(mp <= u64::from(n));
            (Some(m), Some(mp as u32), Some(eps))
        }
    };

    let h_prime = match epsilon {
        None => s,
        Some(eps) => 2 * s - t + u32::from(eps),
    };

    let ell = (n - 1) / 8;
    let h = hurwitz_radon(n);

    let st = (s - t) as usize;
    let mut sigma: Vec<u32> = (0..st)
        .map(|k| (pow_s - (1u64 << (s as usize - 1 - k)) - 1) as u32)
        .collect();
    let c0 = sigma.clone();
    let tau: Vec<u32> = (0..st)
        .map(|k| ((1u64 << (s - 1)) + (1u64 << k) + 1) as u32)
        .collect();
    let c1 = tau.clone();
    if epsilon == Some(1) {
        sigma.push(m.unwrap());
    }
    let head: Vec<u32> = sigma.clone();
    for &k in &e_set {
        if !head.contains(&k) {
            sigma.push(k);
        }
    }
    // sigma must be a permutation of E.
    assert_eq!(sigma.len(), e_set.len());
    {
        let mut sorted = sigma.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, e_set, "sigma is not a permutation of E for n = {n}");
    }

    SpinParams {
        n,
        s,
        t,
        e_set,
        d_set,
        m,
        m_prime,
        epsilon,
        h_prime,
        ell,
        h,
        sigma,
        tau,
        c0,
        c1,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "FAIL"),
            CheckStatus::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// One named verification outcome.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: &str, ok: bool) -> Self {
        Check {
            name: name.to_string(),
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            detail: None,
        }
    }

    pub fn not_applicable(name: &str) -> Self {
        Check {
            name: name.to_string(),
            status: CheckStatus::NotApplicable,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }
}

/// A list of named checks for one `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckReport {
    pub n: u32,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new(n: u32) -> Self {
        CheckReport {
            n,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    /// True when no check failed (not-applicable entries do not count).
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

/// Runs the elementary arithmetic properties of `D`, `sigma`, `tau`, `C`
/// for one `n` by direct enumeration.
pub fn verify_parameter_properties(n: u32) -> CheckReport {
    let p = spin_params(n);
    let pow_s = 1u64 << p.s;
    let mut report = CheckReport::new(n);

    // D is empty exactly at n = 2^(s-1) + 1.
    report.push(Check::new(
        "d_empty_iff_boundary",
        p.d_set.is_empty() == (u64::from(n) == (1u64 << (p.s - 1)) + 1),
    ));

    // k in D implies 2^s - k + 1 in D.
    if p.d_set.is_empty() {
        report.push(Check::not_applicable("d_symmetry"));
    } else {
        let ok = p
            .d_set
            .iter()
            .all(|&k| p.d_set.contains(&((pow_s - u64::from(k) + 1) as u32)));
        report.push(Check::new("d_symmetry", ok));
    }

    // Index growth: 2^(s-t+1) (k-1) + 1 > n for k in D, and with epsilon = 0
    // also 2^(s-t) (k-1) + 1 > n.
    if p.d_set.is_empty() {
        report.push(Check::not_applicable("d_index_growth"));
        report.push(Check::not_applicable("d_index_growth_eps0"));
    } else {
        let grow = |shift: u32| {
            p.d_set
                .iter()
                .all(|&k| (1u64 << shift) * (u64::from(k) - 1) + 1 > u64::from(n))
        };
        report.push(Check::new("d_index_growth", grow(p.s - p.t + 1)));
        if p.epsilon == Some(0) {
            report.push(Check::new("d_index_growth_eps0", grow(p.s - p.t)));
        } else {
            report.push(Check::not_applicable("d_index_growth_eps0"));
        }
    }

    let sigma_tau_hypotheses = n >= 18 && u64::from(n) != (1u64 << (p.s - 1)) + 1;

    // The 2(s-t) integers sigma(k), tau(k) are pairwise distinct.
    if sigma_tau_hypotheses {
        let mut all: Vec<u32> = p.c0.iter().chain(p.c1.iter()).copied().collect();
        let len = all.len();
        all.sort_unstable();
        all.dedup();
        report.push(Check::new("sigma_tau_distinct", all.len() == len));
    } else {
        report.push(Check::not_applicable("sigma_tau_distinct"));
    }

    // With epsilon = 1, m and m' avoid C = C0 union C1.
    if sigma_tau_hypotheses && p.epsilon == Some(1) {
        let in_c = |x: u32| p.c0.contains(&x) || p.c1.contains(&x);
        report.push(Check::new(
            "m_mprime_outside_c",
            !in_c(p.m.unwrap()) && !in_c(p.m_prime.unwrap()),
        ));
    } else {
        report.push(Check::not_applicable("m_mprime_outside_c"));
    }

    // With epsilon = 1, m = n and 2^(t-1) + 1 < 2^s - n <= 2^t + 1.
    if sigma_tau_hypotheses && p.epsilon == Some(1) {
        let gap = pow_s - u64::from(n);
        let ok = p.m == Some(n) && (1u64 << (p.t - 1)) + 1 < gap && gap <= (1u64 << p.t) + 1;
        report.push(Check::new("eps1_forces_m_eq_n", ok));
    } else {
        report.push(Check::not_applicable("eps1_forces_m_eq_n"));
    }

    report
}

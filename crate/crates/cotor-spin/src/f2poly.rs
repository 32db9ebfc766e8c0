//! Sparse multivariate polynomial arithmetic over GF(2).
//!
//! Polynomials live in `F2[w_2, ..., w_n]` where the generator `w_k` has
//! graded degree `k`. Coefficients are implicit: a polynomial is a finite
//! set of monomials and addition is symmetric difference, so cancellation
//! in characteristic 2 is automatic.

use std::collections::BTreeSet;
use std::fmt;

/// A monomial `w_{k1}^{e1} * ... * w_{kr}^{er}`, stored as a sparse list of
/// `(variable index, exponent)` pairs with strictly ascending indices and
/// all exponents positive. The empty list is the unit monomial `1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    /// The unit monomial `1`.
    pub fn unit() -> Self {
        Monomial { exps: Vec::new() }
    }

    /// The single generator `w_index`.
    pub fn var(index: u32) -> Self {
        assert!(index >= 2, "variable index must be >= 2, got {index}");
        Monomial {
            exps: vec![(index, 1)],
        }
    }

    /// Builds a monomial from `(index, exponent)` pairs. Repeated indices
    /// are merged by adding exponents; zero exponents are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(u32, u32)> = Vec::new();
        for (index, e) in pairs {
            assert!(index >= 2, "variable index must be >= 2, got {index}");
            if e == 0 {
                continue;
            }
            exps.push((index, e));
        }
        exps.sort_unstable_by_key(|&(k, _)| k);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(exps.len());
        for (k, e) in exps {
            match merged.last_mut() {
                Some((k0, e0)) if *k0 == k => *e0 += e,
                _ => merged.push((k, e)),
            }
        }
        Monomial { exps: merged }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    /// Sparse `(index, exponent)` view, ascending in the index.
    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn exponent_of(&self, index: u32) -> u32 {
        self.exps
            .binary_search_by_key(&index, |&(k, _)| k)
            .map_or(0, |i| self.exps[i].1)
    }

    pub fn contains_var(&self, index: u32) -> bool {
        self.exponent_of(index) > 0
    }

    pub fn max_index(&self) -> Option<u32> {
        self.exps.last().map(|&(k, _)| k)
    }

    /// Graded degree `sum(index * exponent)`, so `deg w_k = k`.
    pub fn graded_degree(&self) -> u64 {
        self.exps
            .iter()
            .map(|&(k, e)| u64::from(k) * u64::from(e))
            .sum()
    }

    /// Number of generator factors counted with multiplicity.
    pub fn total_exponents(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            match (self.exps.get(i), other.exps.get(j)) {
                (Some(&(ka, ea)), Some(&(kb, eb))) if ka == kb => {
                    exps.push((ka, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&(ka, ea)), Some(&(kb, _))) if ka < kb => {
                    exps.push((ka, ea));
                    i += 1;
                }
                (Some(_), Some(&(kb, eb))) => {
                    exps.push((kb, eb));
                    j += 1;
                }
                (Some(&(ka, ea)), None) => {
                    exps.push((ka, ea));
                    i += 1;
                }
                (None, Some(&(kb, eb))) => {
                    exps.push((kb, eb));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial { exps }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::unit();
        }
        Monomial {
            exps: self.exps.iter().map(|&(k, x)| (k, x * e)).collect(),
        }
    }

    /// Does `self` divide `other` componentwise?
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(k, e)| other.exponent_of(k) >= e)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for &(k, e) in &self.exps {
            let d = other.exponent_of(k);
            if d > e {
                return None;
            }
            if e - d > 0 {
                exps.push((k, e - d));
            }
        }
        if other.exps.iter().any(|&(k, _)| self.exponent_of(k) == 0) {
            return None;
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            match (self.exps.get(i), other.exps.get(j)) {
                (Some(&(ka, ea)), Some(&(kb, eb))) if ka == kb => {
                    exps.push((ka, ea.max(eb)));
                    i += 1;
                    j += 1;
                }
                (Some(&(ka, ea)), Some(&(kb, _))) if ka < kb => {
                    exps.push((ka, ea));
                    i += 1;
                }
                (Some(_), Some(&(kb, eb))) => {
                    exps.push((kb, eb));
                    j += 1;
                }
                (Some(&(ka, ea)), None) => {
                    exps.push((ka, ea));
                    i += 1;
                }
                (None, Some(&(kb, eb))) => {
                    exps.push((kb, eb));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial { exps }
    }

    /// True when the two monomials have a common variable, i.e. their
    /// gcd is not `1`.
    pub fn shares_variable(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                std::cmp::Ordering::Equal => return true,
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
            }
        }
        false
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(k, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "w{k}")?;
            } else {
                write!(f, "w{k}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial over GF(2) in `w_2, ..., w_n`: a set of monomials together
/// with its variable context `n`. The empty set is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    n: u32,
    terms: BTreeSet<Monomial>,
}

impl Polynomial {
    pub fn zero(n: u32) -> Self {
        assert!(n >= 2, "context must admit at least w_2, got n = {n}");
        Polynomial {
            n,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(n: u32) -> Self {
        let mut p = Polynomial::zero(n);
        p.terms.insert(Monomial::unit());
        p
    }

    /// The generator `w_index` as a polynomial in context `n`.
    pub fn var(n: u32, index: u32) -> Self {
        let mut p = Polynomial::zero(n);
        assert!(index <= n, "variable index {index} exceeds context n = {n}");
        p.terms.insert(Monomial::var(index));
        p
    }

    /// Builds a polynomial from monomials; a monomial appearing an even
    /// number of times cancels.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(n: u32, monomials: I) -> Self {
        let mut p = Polynomial::zero(n);
        for m in monomials {
            p.toggle(m);
        }
        p
    }

    fn toggle(&mut self, m: Monomial) {
        if let Some(&(k, _)) = m.exponents().last() {
            assert!(
                k <= self.n,
                "variable index {k} exceeds context n = {}",
                self.n
            );
        }
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// GF(2) sum `self + {m}`.
    pub fn xor_monomial(&self, m: Monomial) -> Polynomial {
        let mut out = self.clone();
        out.toggle(m);
        out
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn contains_term(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// GF(2) addition: symmetric difference of the term sets.
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(
            self.n, other.n,
            "context mismatch: n = {} vs n = {}",
            self.n, other.n
        );
        let mut out = self.clone();
        for m in &other.terms {
            out.toggle(m.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(
            self.n, other.n,
            "context mismatch: n = {} vs n = {}",
            self.n, other.n
        );
        let mut out = Polynomial::zero(self.n);
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.mul(b));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for a in &self.terms {
            out.toggle(a.mul(m));
        }
        out
    }

    /// Sets every listed variable to zero: each monomial containing a
    /// killed index is removed.
    pub fn substitute_zero(&self, kill: &BTreeSet<u32>) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for m in &self.terms {
            if m.exponents().iter().any(|&(k, _)| kill.contains(&k)) {
                continue;
            }
            out.terms.insert(m.clone());
        }
        out
    }

    /// Applies the truncation rule `w_j = 0 for j > new_n` and shrinks the
    /// context to `new_n`.
    pub fn truncated(&self, new_n: u32) -> Polynomial {
        let mut out = Polynomial::zero(new_n);
        for m in &self.terms {
            if m.max_index().is_none_or(|k| k <= new_n) {
                out.terms.insert(m.clone());
            }
        }
        out
    }

    /// Widens the context; every polynomial in `w_2..w_n` is also one in
    /// `w_2..w_{new_n}` for `new_n >= n`.
    pub fn extended(&self, new_n: u32) -> Polynomial {
        assert!(
            new_n >= self.n,
            "cannot extend context {} to {}",
            self.n,
            new_n
        );
        Polynomial {
            n: new_n,
            terms: self.terms.clone(),
        }
    }

    /// `Some(d)` when the polynomial is nonzero and every term has graded
    /// degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut iter = self.terms.iter();
        let d = iter.next()?.graded_degree();
        iter.all(|m| m.graded_degree() == d).then_some(d)
    }

    /// Terms in canonical emission order: descending under degree reverse
    /// lexicographic order with the variables ranked `w_2 > w_3 > ... > w_n`.
    pub fn sorted_terms(&self) -> Vec<&Monomial> {
        let mut terms: Vec<&Monomial> = self.terms.iter().collect();
        terms.sort_by(|a, b| format_order(b, a));
        terms
    }

    /// Parses the `+`/`*` grammar produced by `Display`, e.g.
    /// `"w7*w10 + w6*w11 + w4*w13"`, `"w13^5"`, `"0"`, `"1"`.
    pub fn parse(text: &str, n: u32) -> Result<Polynomial, ParseError> {
        let mut p = Polynomial::zero(n);
        let text = text.trim();
        if text.is_empty() {
            return Err(ParseError::Malformed {
                token: String::from("<empty>"),
            });
        }
        if text == "0" {
            return Ok(p);
        }
        for term in text.split('+') {
            let term = term.trim();
            if term == "1" {
                p.toggle(Monomial::unit());
                continue;
            }
            let mut pairs = Vec::new();
            for factor in term.split('*') {
                let factor = factor.trim();
                let rest = factor
                    .strip_prefix('w')
                    .ok_or_else(|| ParseError::Malformed {
                        token: factor.to_string(),
                    })?;
                let (idx_str, exp_str) = match rest.split_once('^') {
                    Some((i, e)) => (i, Some(e)),
                    None => (rest, None),
                };
                let index: u32 = idx_str.parse().map_err(|_| ParseError::Malformed {
                    token: factor.to_string(),
                })?;
                let exponent: u32 = match exp_str {
                    Some(e) => e.parse().map_err(|_| ParseError::Malformed {
                        token: factor.to_string(),
                    })?,
                    None => 1,
                };
                if index < 2 || index > n {
                    return Err(ParseError::IndexOutOfRange { index, n });
                }
                if exponent == 0 {
                    return Err(ParseError::Malformed {
                        token: factor.to_string(),
                    });
                }
                pairs.push((index, exponent));
            }
            p.toggle(Monomial::from_pairs(pairs));
        }
        Ok(p)
    }
}

/// Emission order used by `Display`: degree reverse lexicographic where the
/// degree is the number of generator factors and the ranking is by ascending
/// variable index. Returns `Less` when `a < b`.
fn format_order(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    match a.total_exponents().cmp(&b.total_exponents()) {
        Ordering::Equal => {}
        other => return other,
    }
    // Tie break: larger exponent on the least-ranked (highest index)
    // differing variable means smaller.
    let (ea, eb) = (a.exponents(), b.exponents());
    let (mut i, mut j) = (ea.len(), eb.len());
    while i > 0 || j > 0 {
        let ka = if i > 0 { Some(ea[i - 1].0) } else { None };
        let kb = if j > 0 { Some(eb[j - 1].0) } else { None };
        match (ka, kb) {
            (Some(x), Some(y)) if x == y => {
                let (xa, xb) = (ea[i - 1].1, eb[j - 1].1);
                if xa != xb {
                    return if xa > xb {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
                i -= 1;
                j -= 1;
            }
            (Some(x), Some(y)) => {
                // The monomial with a positive exponent on the higher index
                // differs there; it is the smaller one.
                return if x > y {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (None, None) => unreachable!(),
        }
    }
    Ordering::Equal
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for m in self.sorted_terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParseError {
    Malformed { token: String },
    IndexOutOfRange { index: u32, n: u32 },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Malformed { token } => write!(f, "malformed token `{token}`"),
            ParseError::IndexOutOfRange { index, n } => {
                write!(f, "variable index {index} outside [2, {n}]")
            }
        }
    }
}

impl std::error::Error for ParseError {}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(text: &str, n: u32) -> Polynomial {
        Polynomial::parse(text, n).unwrap()
    }

    #[test]
    fn addition_cancels_in_characteristic_two() {
        let a = poly("w4*w13 + w6*w11", 13);
        let b = poly("w6*w11", 13);
        assert_eq!(&a + &b, poly("w4*w13", 13));

        let p = poly("w7*w10 + w6*w11 + w4*w13", 13);
        assert!((&p + &p).is_zero());
    }

    #[test]
    fn addition_recovers_v4_term() {
        // v_4 in the quotient for n = 13 minus its first term.
        let v4 = poly("w7*w10 + w6*w11 + w4*w13", 13);
        let sum = &v4 + &poly("w7*w10", 13);
        assert_eq!(sum, poly("w6*w11 + w4*w13", 13));
    }

    #[test]
    #[should_panic(expected = "context mismatch")]
    fn addition_rejects_context_mismatch() {
        let _ = &poly("w4", 13) + &poly("w4", 14);
    }

    #[test]
    fn multiplication_basics() {
        assert_eq!(&poly("w7", 13) * &poly("w10", 13), poly("w7*w10", 13));

        // Frobenius: (p + q)^2 = p^2 + q^2.
        let pq = poly("w4 + w6", 13);
        assert_eq!(&pq * &pq, poly("w4^2 + w6^2", 13));

        let p = poly("w7*w10 + w6*w11", 13);
        assert_eq!(&p * &Polynomial::one(13), p);
    }

    #[test]
    fn multiplication_is_distributive_and_commutative() {
        let p = poly("w4 + w6*w7", 13);
        let q = poly("w10 + w11", 13);
        let r = poly("w13 + 1", 13);
        assert_eq!(&p * &q, &q * &p);
        let lhs = &p * &(&q + &r);
        let rhs = &(&p * &q) + &(&p * &r);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_zero_kills_named_variables() {
        // The raw bilinear sum for s = 4, n = 13 before passing to the
        // quotient ring.
        let raw = poly("w5*w12 + w7*w10 + w8*w9 + w6*w11 + w4*w13", 13);
        let kill: BTreeSet<u32> = [2, 3, 5, 9].into_iter().collect();
        assert_eq!(
            raw.substitute_zero(&kill),
            poly("w7*w10 + w6*w11 + w4*w13", 13)
        );

        assert!(Polynomial::zero(13).substitute_zero(&kill).is_zero());

        let untouched = poly("w13^5", 13);
        let kill7: BTreeSet<u32> = [7].into_iter().collect();
        assert_eq!(untouched.substitute_zero(&kill7), untouched);
    }

    #[test]
    fn graded_degree_examples() {
        assert_eq!(Monomial::from_pairs([(7, 1), (10, 1)]).graded_degree(), 17);
        assert_eq!(Monomial::from_pairs([(13, 5)]).graded_degree(), 65);
        assert_eq!(Monomial::unit().graded_degree(), 0);
    }

    #[test]
    fn degree_of_product_is_sum_of_degrees() {
        let a = Monomial::from_pairs([(4, 2), (7, 1)]);
        let b = Monomial::from_pairs([(7, 3), (13, 1)]);
        assert_eq!(
            a.mul(&b).graded_degree(),
            a.graded_degree() + b.graded_degree()
        );
    }

    #[test]
    fn parse_format_round_trip() {
        for text in [
            "w7*w10 + w6*w11 + w4*w13",
            "0",
            "1",
            "w13^5",
            "w11^3 + w10^2*w13 + w7*w13^2",
        ] {
            let p = poly(text, 13);
            assert_eq!(p.to_string(), text);
            assert_eq!(Polynomial::parse(&p.to_string(), 13).unwrap(), p);
        }
    }

    #[test]
    fn canonical_order_puts_v4_terms_in_display_order() {
        let p = poly("w4*w13 + w7*w10 + w6*w11", 13);
        assert_eq!(p.to_string(), "w7*w10 + w6*w11 + w4*w13");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Polynomial::parse("w1", 13),
            Err(ParseError::IndexOutOfRange { index: 1, n: 13 })
        ));
        assert!(matches!(
            Polynomial::parse("w14", 13),
            Err(ParseError::IndexOutOfRange { index: 14, n: 13 })
        ));
        assert!(matches!(
            Polynomial::parse("x3", 13),
            Err(ParseError::Malformed { .. })
        ));
        assert!(matches!(
            Polynomial::parse("w4^0", 13),
            Err(ParseError::Malformed { .. })
        ));
    }

    #[test]
    fn parse_merges_repeated_factors_and_cancels_repeated_terms() {
        assert_eq!(poly("w4*w4", 13), poly("w4^2", 13));
        assert!(poly("w4 + w4", 13).is_zero());
    }

    #[test]
    fn truncation_and_extension() {
        let p = poly("w7*w13^2 + w11^3", 13);
        let wide = p.extended(26);
        assert_eq!(wide.n(), 26);
        assert_eq!(wide.truncated(13), p);
        assert_eq!(wide.truncated(12), poly("w11^3", 12));
    }

    #[test]
    fn monomial_division_and_lcm() {
        let a = Monomial::from_pairs([(7, 2), (10, 1)]);
        let b = Monomial::from_pairs([(7, 1)]);
        assert!(b.divides(&a));
        assert_eq!(a.div(&b), Some(Monomial::from_pairs([(7, 1), (10, 1)])));
        assert_eq!(b.div(&a), None);
        assert_eq!(
            a.lcm(&Monomial::from_pairs([(10, 3), (11, 1)])),
            Monomial::from_pairs([(7, 2), (10, 3), (11, 1)])
        );
        assert!(a.shares_variable(&b));
        assert!(!b.shares_variable(&Monomial::from_pairs([(11, 1)])));
    }

    #[test]
    fn random_algebra_laws() {
        // Deterministic xorshift; small random polynomials in context 13.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let rand_poly = |next: &mut dyn FnMut() -> u64| {
            let mut p = Polynomial::zero(13);
            for _ in 0..(next() % 5) {
                let m = Monomial::from_pairs([
                    (2 + (next() % 12) as u32, 1 + (next() % 3) as u32),
                    (2 + (next() % 12) as u32, 1 + (next() % 3) as u32),
                ]);
                p = p.xor_monomial(m);
            }
            p
        };
        for _ in 0..200 {
            let p = rand_poly(&mut next);
            let q = rand_poly(&mut next);
            let r = rand_poly(&mut next);
            assert_eq!(&p + &q, &q + &p);
            assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            assert!((&p + &p).is_zero());
            assert_eq!(&(&p + &q) * &(&p + &q), &(&p * &p) + &(&q * &q));
            assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            let back = Polynomial::parse(&p.to_string(), 13).unwrap();
            assert_eq!(back, p);
        }
    }
}

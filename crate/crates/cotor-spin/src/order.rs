//! Term orders on monomials: degree reverse lexicographic with an explicit
//! variable ranking, and a weight-block order that counts the exponents of a
//! prefix of the ranking and breaks ties lexicographically.
//!
//! Both are multiplicative total orders, so leading monomials behave well
//! under products and the division algorithm terminates.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::f2poly::{Monomial, Polynomial};
use crate::spinarith::SpinParams;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderKind {
    DegRevLex,
    WeightLex,
}

/// A term order over a fixed variable set. `ranking` lists the variables
/// from greatest to least; for `WeightLex` the weight of a monomial is the
/// sum of its exponents on the first `weight_block` ranked variables.
#[derive(Clone, Debug)]
pub struct TermOrder {
    kind: OrderKind,
    ranking: Vec<u32>,
    weight_block: usize,
    pos: HashMap<u32, usize>,
}

impl TermOrder {
    /// Degree reverse lexicographic order. The degree component counts each
    /// generator factor with weight one; ties go to reverse lexicographic
    /// comparison against the ranking, where a larger exponent on the
    /// least-ranked differing variable makes a monomial smaller.
    pub fn degrevlex(ranking: Vec<u32>) -> Self {
        Self::build(OrderKind::DegRevLex, ranking, 0)
    }

    /// Weight-block order: compare by weight, then lexicographically along
    /// the ranking (first differing position, larger exponent wins).
    pub fn weight_lex(ranking: Vec<u32>, weight_block: usize) -> Self {
        assert!(weight_block <= ranking.len());
        Self::build(OrderKind::WeightLex, ranking, weight_block)
    }

    fn build(kind: OrderKind, ranking: Vec<u32>, weight_block: usize) -> Self {
        let mut pos = HashMap::with_capacity(ranking.len());
        for (i, &v) in ranking.iter().enumerate() {
            let clash = pos.insert(v, i);
            assert!(clash.is_none(), "variable w{v} ranked twice");
        }
        TermOrder {
            kind,
            ranking,
            weight_block,
            pos,
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn ranking(&self) -> &[u32] {
        &self.ranking
    }

    pub fn weight_block(&self) -> usize {
        self.weight_block
    }

    fn position(&self, var: u32) -> usize {
        *self
            .pos
            .get(&var)
            .unwrap_or_else(|| panic!("variable w{var} outside the order's ranking"))
    }

    /// Exponents keyed by ranking position, ascending in the position.
    fn ranked(&self, m: &Monomial) -> Vec<(usize, u32)> {
        let mut v: Vec<(usize, u32)> = m
            .exponents()
            .iter()
            .map(|&(var, e)| (self.position(var), e))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let ra = self.ranked(a);
        let rb = self.ranked(b);
        match self.kind {
            OrderKind::DegRevLex => {
                let (da, db): (u64, u64) = (
                    ra.iter().map(|&(_, e)| u64::from(e)).sum(),
                    rb.iter().map(|&(_, e)| u64::from(e)).sum(),
                );
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    other => return other,
                }
                // Scan from the least-ranked end; a larger exponent at the
                // first differing position loses.
                let (mut i, mut j) = (ra.len(), rb.len());
                while i > 0 || j > 0 {
                    let pa = (i > 0).then(|| ra[i - 1].0);
                    let pb = (j > 0).then(|| rb[j - 1].0);
                    match (pa, pb) {
                        (Some(x), Some(y)) if x == y => {
                            let (ea, eb) = (ra[i - 1].1, rb[j - 1].1);
                            match ea.cmp(&eb) {
                                Ordering::Equal => {}
                                Ordering::Greater => return Ordering::Less,
                                Ordering::Less => return Ordering::Greater,
                            }
                            i -= 1;
                            j -= 1;
                        }
                        (Some(x), Some(y)) => {
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
            OrderKind::WeightLex => {
                let weight = |r: &[(usize, u32)]| -> u64 {
                    r.iter()
                        .take_while(|&&(p, _)| p < self.weight_block)
                        .map(|&(_, e)| u64::from(e))
                        .sum()
                };
                match weight(&ra).cmp(&weight(&rb)) {
                    Ordering::Equal => {}
                    other => return other,
                }
                // Lexicographic along the ranking: first differing position,
                // larger exponent wins.
                let (mut i, mut j) = (0, 0);
                while i < ra.len() || j < rb.len() {
                    let pa = ra.get(i).map(|&(p, _)| p);
                    let pb = rb.get(j).map(|&(p, _)| p);
                    match (pa, pb) {
                        (Some(x), Some(y)) if x == y => {
                            let (ea, eb) = (ra[i].1, rb[j].1);
                            match ea.cmp(&eb) {
                                Ordering::Equal => {}
                                other => return other,
                            }
                            i += 1;
                            j += 1;
                        }
                        (Some(x), Some(y)) => {
                            return if x < y {
                                Ordering::Greater
                            } else {
                                Ordering::Less
                            };
                        }
                        (Some(_), None) => return Ordering::Greater,
                        (None, Some(_)) => return Ordering::Less,
                        (None, None) => unreachable!(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// One-line description: kind, ranking chain, and weight block size.
    pub fn describe(&self) -> String {
        let chain = self
            .ranking
            .iter()
            .map(|v| format!("w{v}"))
            .collect::<Vec<_>>()
            .join(" > ");
        match self.kind {
            OrderKind::DegRevLex => format!("degrevlex {chain}"),
            OrderKind::WeightLex => {
                format!("weightlex block={} {chain}", self.weight_block)
            }
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// The compare-maximal monomial of `p`, or `None` for the zero polynomial.
pub fn leading_monomial<'a>(p: &'a Polynomial, ord: &TermOrder) -> Option<&'a Monomial> {
    p.terms().max_by(|a, b| ord.compare(a, b))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OrderError {
    /// No term order is defined for this `n` (`n = 9` or `n = 2^(s-1) + 1`,
    /// where the generator list above `v_{s-1}` is empty and no order is
    /// needed).
    NoOrderDefined { n: u32 },
}

impl fmt::Display for OrderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderError::NoOrderDefined { n } => {
                write!(f, "no term order is defined for n = {n}")
            }
        }
    }
}

impl std::error::Error for OrderError {}

/// The term order used by the regular-sequence certificate for this `n`:
/// degrevlex over `E` ascending for `10 <= n <= 16`, and the weight-block
/// order over the `sigma` enumeration with block size `s - t + epsilon` for
/// `n >= 18`.
pub fn build_order_for_n(params: &SpinParams) -> Result<TermOrder, OrderError> {
    if params.n == 9 || params.d_set.is_empty() {
        return Err(OrderError::NoOrderDefined { n: params.n });
    }
    if params.n <= 16 {
        Ok(TermOrder::degrevlex(params.e_set.clone()))
    } else {
        let block = (params.s - params.t + u32::from(params.epsilon.unwrap())) as usize;
        Ok(TermOrder::weight_lex(params.sigma.clone(), block))
    }
}

//! The Groebner engine on its own: S-polynomials, Buchberger completion,
//! ideal membership, and standard-monomial counting.
//!
//! ```bash
//! cargo run --release --example groebner_basics
//! ```

use cotor_spin::f2poly::Polynomial;
use cotor_spin::groebner::{
    buchberger_completion, ideal_membership, is_groebner, reduce, s_polynomial,
    standard_monomial_series, BasisSet,
};
use cotor_spin::order::TermOrder;

fn main() {
    let n = 13;
    let ord = TermOrder::degrevlex(vec![4, 6, 7, 8, 10, 11, 12, 13]);
    let f = Polynomial::parse("w4 + w6", n).unwrap();
    let g = Polynomial::parse("w4 + w7", n).unwrap();

    println!("f = {f}");
    println!("g = {g}");
    println!("S(f, g) = {}", s_polynomial(&f, &g, &ord));

    let basis = BasisSet::new(vec![f, g], ord).unwrap();
    println!("is_groebner({{f, g}}) = {}", is_groebner(&basis));

    let completed = buchberger_completion(&basis);
    println!("completion has {} generators:", completed.len());
    for p in completed.generators() {
        println!("  {p}");
    }
    println!("is_groebner(completion) = {}", is_groebner(&completed));

    let candidate = Polynomial::parse("w6 + w7", n).unwrap();
    println!(
        "w6 + w7 in the ideal: {}",
        ideal_membership(&candidate, &completed).unwrap()
    );
    let outsider = Polynomial::parse("w6*w7 + w8", n).unwrap();
    let (normal_form, in_ideal) = reduce(&outsider, &completed);
    println!("normal form of w6*w7 + w8: {normal_form} (member: {in_ideal})");

    // Standard monomials of the quotient by (w4 + w6, w4 + w7): the leading
    // monomials w4 and w6 are knocked out, so only monomials in w7 and w8
    // are counted.
    let vars: Vec<(u32, u64)> = [4u32, 6, 7, 8].iter().map(|&k| (k, u64::from(k))).collect();
    let series = standard_monomial_series(&completed, &vars, 12).unwrap();
    println!("standard monomial counts through degree 12: {series}");
}

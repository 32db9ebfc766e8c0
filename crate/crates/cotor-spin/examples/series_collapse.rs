//! Compares the Poincare series of the cotorsion product against the one
//! of H*(BSpin(n); F2). Equality through every degree means the spectral
//! sequence collapses; the first discrepancy always shows up at degree
//! 2^h'.
//!
//! ```bash
//! cargo run --release --example series_collapse
//! ```

use cotor_spin::series::{first_divergence, poincare_cotor, poincare_quillen};
use cotor_spin::spinarith::spin_params;

fn main() {
    for n in [12u32, 16, 17, 18, 22, 26] {
        let p = spin_params(n);
        let d = ((1usize << p.h_prime) + 8).max(64);
        let cotor = poincare_cotor(n, d);
        let quillen = poincare_quillen(n, d);
        match first_divergence(&cotor, &quillen) {
            None => println!("n = {n:>2}: series identical (h' = h = {}); collapses", p.h),
            Some(deg) => println!(
                "n = {n:>2}: first divergence at degree {deg} = 2^{} (h' = {}, h = {}); does not collapse",
                p.h_prime, p.h_prime, p.h
            ),
        }
    }

    // The low-degree coefficients for n = 17, where the two series first
    // part ways at degree 32.
    let d = 36;
    let cotor = poincare_cotor(17, d);
    let quillen = poincare_quillen(17, d);
    println!("\nn = 17, degrees 28..36:");
    println!(
        "  degree : {}",
        (28..=d).map(|i| format!("{i:>4}")).collect::<String>()
    );
    println!(
        "  cotor  : {}",
        (28..=d)
            .map(|i| format!("{:>4}", cotor.coeff(i)))
            .collect::<String>()
    );
    println!(
        "  quillen: {}",
        (28..=d)
            .map(|i| format!("{:>4}", quillen.coeff(i)))
            .collect::<String>()
    );
}

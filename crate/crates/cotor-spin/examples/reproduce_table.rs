//! Recomputes the parameter table for 9 <= n <= 32: for each n the
//! integers s, t, m, m', epsilon, h' and the Hurwitz-Radon number h.
//! The collapse boundary is visible in the last two columns: h' = h holds
//! exactly up to n = 16.
//!
//! ```bash
//! cargo run --release --example reproduce_table
//! ```

use cotor_spin::spinarith::spin_params;

fn opt(x: Option<u32>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}

fn main() {
    println!(
        "{:>3} {:>2} {:>2} {:>3} {:>3} {:>3} {:>3} {:>2} {:>3}",
        "n", "s", "t", "m", "m'", "eps", "h'", "l", "h"
    );
    for n in 9..=32u32 {
        let p = spin_params(n);
        println!(
            "{:>3} {:>2} {:>2} {:>3} {:>3} {:>3} {:>3} {:>2} {:>3} {}",
            p.n,
            p.s,
            p.t,
            opt(p.m),
            opt(p.m_prime),
            p.epsilon.map_or_else(|| "-".into(), |e: u8| e.to_string()),
            p.h_prime,
            p.ell,
            p.h,
            if p.h_prime == p.h {
                "collapses"
            } else {
                "does not collapse"
            },
        );
    }
}

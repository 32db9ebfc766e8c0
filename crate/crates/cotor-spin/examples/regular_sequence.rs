//! Regular-sequence certificates under the weight-block order: for n >= 18
//! the leading monomial of the image of v_{s+k} is w_sigma(k)^(2^k) w_tau(k)
//! (and w_m^(2^(s-t)) w_m' when epsilon = 1), and these are pairwise
//! coprime, which certifies that the images form a regular sequence.
//!
//! ```bash
//! cargo run --release --example regular_sequence          # n = 22
//! cargo run --release --example regular_sequence -- 26
//! ```

use cotor_spin::groebner::{coprime_pairs_criterion, is_regular_sequence_by_coprimality, BasisSet};
use cotor_spin::order::{build_order_for_n, leading_monomial};
use cotor_spin::spinarith::spin_params;
use cotor_spin::steenrod::v_generators_in_r;

fn main() {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("n must be an integer"))
        .unwrap_or(22);

    let params = spin_params(n);
    let ord = match build_order_for_n(&params) {
        Ok(ord) => ord,
        Err(e) => {
            println!("{e}");
            return;
        }
    };
    println!(
        "n = {n}: s = {}, t = {}, epsilon = {:?}, h' = {}",
        params.s, params.t, params.epsilon, params.h_prime
    );
    println!("sigma = {:?}", params.sigma);
    println!("tau   = {:?}", params.tau);
    println!("order: {}", ord.describe());

    let images = v_generators_in_r(&params);
    println!("\nrelation images and their leading monomials:");
    for (i, v) in images.iter().enumerate() {
        let idx = params.s + i as u32;
        let lt = leading_monomial(v, &ord).unwrap();
        let terms = v.num_terms();
        println!("  v_{idx} ({terms} terms): lt = {lt}");
    }

    let basis = BasisSet::new(images, ord).unwrap();
    println!(
        "\npairwise coprime leading monomials: {}",
        coprime_pairs_criterion(&basis)
    );
    println!(
        "regular sequence certified: {}",
        is_regular_sequence_by_coprimality(&basis)
    );
}

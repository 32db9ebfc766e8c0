//! Full analysis of one spinor group: parameters, generators, relations,
//! term order, regular-sequence certificate, and the collapse verdict.
//!
//! ```bash
//! cargo run --release --example analyze_spin          # n = 13
//! cargo run --release --example analyze_spin -- 22
//! ```

use cotor_spin::groebner::{is_regular_sequence_by_coprimality, BasisSet};
use cotor_spin::order::{build_order_for_n, leading_monomial};
use cotor_spin::series::{collapse_verdict, collapse_window};
use cotor_spin::spinarith::spin_params;
use cotor_spin::steenrod::{v_generators, v_generators_in_r};

fn main() {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("n must be an integer"))
        .unwrap_or(13);
    assert!(n >= 9, "defined for n >= 9");

    let params = spin_params(n);
    println!(
        "Spin({n}): s = {}, t = {}, h' = {}, h = {}",
        params.s, params.t, params.h_prime, params.h
    );
    println!("E = {:?}", params.e_set);
    println!("D = {:?}", params.d_set);

    println!("\ngenerators of the relation ideal (in F2[w_2..w_{n}]):");
    for (k, v) in v_generators(&params).iter().enumerate() {
        println!("  v_{k} = {v}");
    }

    let images = v_generators_in_r(&params);
    if images.is_empty() {
        println!(
            "\nno relations beyond v_0..v_{}; the cotorsion product is free",
            params.s - 1
        );
    } else {
        println!(
            "\nimages of v_{}..v_{} in R = F2[w_k : k in E]:",
            params.s,
            params.h_prime - 1
        );
        for (i, v) in images.iter().enumerate() {
            println!("  v_{} = {v}", params.s + i as u32);
        }
        match build_order_for_n(&params) {
            Ok(ord) => {
                println!("\nterm order: {}", ord.describe());
                for (i, v) in images.iter().enumerate() {
                    println!(
                        "  lt(v_{}) = {}",
                        params.s + i as u32,
                        leading_monomial(v, &ord).unwrap()
                    );
                }
                let basis = BasisSet::new(images.clone(), ord).unwrap();
                println!(
                    "regular sequence certified by coprime leading monomials: {}",
                    is_regular_sequence_by_coprimality(&basis)
                );
            }
            Err(e) => println!("\n{e}"),
        }
    }

    let d = collapse_window(n) as usize + 6;
    let verdict = collapse_verdict(n, d).unwrap();
    println!("\nRothenberg-Steenrod spectral sequence for BSpin({n}): {verdict}");
}

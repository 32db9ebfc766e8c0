//! The Steenrod action on cotorsion representatives: the Sq^0 tower, the
//! Cartan formula, iterated squares, and how they assemble the generators
//! v_0, ..., v_{h'-1}.
//!
//! ```bash
//! cargo run --release --example steenrod_action
//! ```

use cotor_spin::f2poly::Polynomial;
use cotor_spin::spinarith::spin_params;
use cotor_spin::steenrod::{project_to_r, sq, sq_chain, v_generators};

fn main() {
    let n = 13;

    // Sq^0 doubles the representative: w_m goes to w_{2m-1}. It is not the
    // identity, and iterating it from w_2 walks the tower w_3, w_5, w_9, ...
    let mut tower = Polynomial::var(n, 2);
    print!("Sq^0 tower from w2:");
    for _ in 0..3 {
        tower = sq(0, &tower);
        print!(" {tower}");
    }
    println!();

    // Sq^1 squares: on w4*w13 one term truncates away in context n = 13.
    let p = Polynomial::parse("w4*w13", n).unwrap();
    println!("Sq^1(w4*w13) = {}", sq(1, &p));
    println!("Sq^2 Sq^1 (w4*w13) = {}", sq_chain(&p, 2));

    // Higher squares vanish on single generators.
    println!("Sq^2(w7) = {}", sq(2, &Polynomial::var(n, 7)));

    // The generator sequence for n = 13 and its image in the quotient R.
    let params = spin_params(n);
    println!("\ngenerators for n = {n}:");
    for (k, v) in v_generators(&params).iter().enumerate() {
        let image = project_to_r(v, &params);
        println!("  v_{k} = {v}");
        if image != *v {
            println!("        -> {image} in R");
        }
    }
}

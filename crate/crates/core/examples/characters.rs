//! Characters of a finite abelian group and their orthogonality.
//!
//! Run with `cargo run --example characters -- 2 6` for `Z₂ × Z₆`.

use flatsets::cyclotomic;
use flatsets::groups::FiniteAbelianGroup;

fn main() -> flatsets::Result<()> {
    let orders: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("cyclic orders must be integers"))
        .collect();
    let orders = if orders.is_empty() { vec![2, 6] } else { orders };
    let g = FiniteAbelianGroup::new(&orders)?;
    let e = g.exponent();
    println!("G = {:?}, |G| = {}, exponent {e}", g.cyclic_orders(), g.order());
    for chi in g.characters() {
        let values: Vec<u32> = g.elements().map(|x| g.character_value(&chi, &x)).collect();
        // Σ_g χ(g) vanishes unless χ is trivial
        let sum_zero = cyclotomic::is_zero(&g.character_sum_counts(&chi), e);
        println!(
            "χ{:?}: exponents of ζ_{e} = {values:?}  sum zero: {sum_zero}",
            chi.exponents
        );
    }
    Ok(())
}

//! Floor division and the sign-of-modulus remainder.
//!
//! ```text
//! cargo run --example floor_modulo
//! ```

use modrecip::{floor_div, floor_mod, Integer};

fn main() {
    for (a, m) in [(7, 3), (-7, 3), (7, -3), (-7, -3), (0, 5)] {
        let (a, m) = (Integer::from(a), Integer::from(m));
        let q = floor_div(&a, &m).unwrap();
        let r = floor_mod(&a, &m).unwrap();
        println!("{a:>3} = {m:>3} * {q:>3} + {r:>3}");
    }
    println!(
        "7 mod 0 -> {}",
        floor_mod(&Integer::from(7), &Integer::from(0)).unwrap_err()
    );
}

//! The signed modular inverse next to the classical one.
//!
//! The two agree for every `|m| > 1` with `m > 0`. They differ at the unit
//! moduli and, for negative moduli, by one period.

use modrecip::{brute_force_inverse, classical_inverse, extended_gcd, mod_inverse, Integer};

fn show(a: i64, m: i64) {
    let (a, m) = (Integer::from(a), Integer::from(m));
    match mod_inverse(&a, &m) {
        Ok(x) => {
            let classical = classical_inverse(&a, &m).unwrap();
            println!("({a}⁻¹)_{m} = {x}  classical {classical}");
        }
        Err(e) => println!("({a}⁻¹)_{m} undefined: {e}"),
    }
}

fn main() {
    show(7, 22);
    show(3, -5);
    show(7, 1);
    show(-4, 1);
    show(5, -1);
    show(-5, -1);
    show(2, 4);

    let (g, x, y) = extended_gcd(&Integer::from(240), &Integer::from(46)).unwrap();
    println!("240·{x} + 46·{y} = {g}");

    let searched = brute_force_inverse(&Integer::from(5), &Integer::from(-7)).unwrap();
    println!("exhaustive search for (5⁻¹)_-7: {searched}");
}

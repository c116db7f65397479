//! Computing inverses by repeatedly applying the reciprocity identity, and
//! solving `a·x − k·m = 1` from the result.

use modrecip::recip::inverse_via_reciprocity_counted;
use modrecip::{mod_inverse, solve_diophantine, Integer};

fn main() {
    let a: Integer = "123456789012345678901234567890123".parse().unwrap();
    let m: Integer = "-170141183460469231731687303715884105727".parse().unwrap();

    let (x, steps) = inverse_via_reciprocity_counted(&a, &m).unwrap();
    println!("a = {a}");
    println!("m = {m}");
    println!("(a⁻¹)_m = {x}  ({steps} reduction steps)");
    assert_eq!(x, mod_inverse(&a, &m).unwrap());

    let (x, k) = solve_diophantine(&a, &m).unwrap();
    println!("a·{x} − ({k})·m = {}", &a * &x - &k * &m);
}

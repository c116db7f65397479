//! `a·(a⁻¹)_b + b·(b⁻¹)_a = 1 + ab` for coprime nonzero `a`, `b`.

use modrecip::{reciprocity_check, Integer};

fn main() {
    let pairs = [
        (3, 5),
        (-3, 5),
        (3, -5),
        (-3, -5),
        (5, 1),
        (-5, 1),
        (7, -1),
        (101, 64),
    ];
    for (a, b) in pairs {
        let r = reciprocity_check(&Integer::from(a), &Integer::from(b)).unwrap();
        println!(
            "a={a:>4} b={b:>4}  (a⁻¹)_b={:>4}  (b⁻¹)_a={:>4}  lhs={:>6} rhs={:>6} k={} {}",
            r.inv_a_mod_b,
            r.inv_b_mod_a,
            r.lhs,
            r.rhs,
            r.k,
            if r.holds { "ok" } else { "FAILED" }
        );
    }
}

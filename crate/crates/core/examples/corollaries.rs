//! Shift invariance, inverse reduction, squared moduli and the paired
//! quadruple inverses.

use modrecip::identities::{
    positive_case_exact, quad_pair_inverses, reduce_inverse_minus, reduce_inverse_plus,
    reduce_inverse_plus_with, shift_invariance, square_inverse, sum_of_squares_inverses,
};
use modrecip::modular::InverseDefinition;
use modrecip::Integer;

fn int(v: i64) -> Integer {
    Integer::from(v)
}

fn main() {
    println!(
        "((3·1 + 2)⁻¹)_1 = {}",
        shift_invariance(&int(1), &int(2), &int(3)).unwrap()
    );
    println!(
        "((2·5 + 3)⁻¹)_5 = {}",
        shift_invariance(&int(5), &int(3), &int(2)).unwrap()
    );

    let plus = reduce_inverse_plus(&int(7), &int(1), &int(3)).unwrap();
    let replay =
        reduce_inverse_plus_with(InverseDefinition::ClassicalUnit, &int(7), &int(1), &int(3))
            .unwrap();
    println!("(7⁻¹)_22 via 22 = 3·7 + 1: {plus} (classical unit inverse gives {replay})");
    println!(
        "(3⁻¹)_4 via 4 = 2·3 − 2: {}",
        reduce_inverse_minus(&int(3), &int(2), &int(2)).unwrap()
    );

    println!("(4⁻¹)_9 = {}", square_inverse(&int(3), &int(2)).unwrap());

    let quad = quad_pair_inverses(&int(3), &int(2), &int(1), &int(2)).unwrap();
    println!(
        "u = {}, v = {}, x = {:?}, y = {:?}",
        quad.u, quad.v, quad.x, quad.y
    );
    println!("all identities hold: {}", quad.all_pass());
    println!(
        "positive case y₁ = {}",
        positive_case_exact(&int(3), &int(2), &int(1), &int(2)).unwrap()
    );

    let sums = sum_of_squares_inverses(&int(3), &int(2), &int(1), &int(2)).unwrap();
    println!("s = {}, t = {}, sums {:?}", sums.s, sums.t, sums.sums);
}

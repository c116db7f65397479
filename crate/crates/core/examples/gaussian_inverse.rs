//! Inverses in the Gaussian integers.

use modrecip::gaussian::{
    gaussian_bezout_identity, gaussian_divmod, gaussian_inverse, inverse_mod_gaussian_linear,
};
use modrecip::{GaussianInteger, Integer};

fn main() {
    let z: GaussianInteger = "1+1i".parse().unwrap();
    let w: GaussianInteger = "2+1i".parse().unwrap();

    let qr = gaussian_divmod(&"7+3i".parse().unwrap(), &w).unwrap();
    println!("7+3i = ({w})·({}) + ({})", qr.quotient, qr.remainder);

    let inv = gaussian_inverse(&z, &w).unwrap();
    println!(
        "({z})⁻¹ mod ({w}): representative {}, canonical {}",
        inv.representative, inv.canonical
    );
    println!(
        "bezout identity holds: {}",
        gaussian_bezout_identity(&z, &w).unwrap()
    );

    match gaussian_inverse(&"1+2i".parse().unwrap(), &"3+4i".parse().unwrap()) {
        Ok(_) => println!("unexpected inverse"),
        Err(e) => println!("(1+2i)⁻¹ mod (3+4i): {e}"),
    }

    let linear = inverse_mod_gaussian_linear(&Integer::from(7), &Integer::from(1)).unwrap();
    println!("7⁻¹ mod (7 + 1i): {linear}");
}

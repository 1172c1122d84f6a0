//! How far the arity-2 pair map can stretch squared Euclidean distance.
//!
//! cargo run --example pair_distance

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use padic_kas::cantor::{
    combine, squared_distance_constant, squared_distance_constant_sound, CantorValue,
};

fn main() -> padic_kas::Result<()> {
    let a = [CantorValue::parse("3:3:2,0,0", 2)?, CantorValue::parse("3:3:0,0,0", 2)?];
    let b = [CantorValue::parse("3:3:0,2,2", 2)?, CantorValue::parse("3:3:0,0,0", 2)?];
    let lhs = (combine(&a)?.to_rational() - combine(&b)?.to_rational()).abs();
    let dx = a[0].to_rational() - b[0].to_rational();
    let d2 = &dx * &dx;
    println!("|combine(a) - combine(b)| = {lhs}, d^2 = {d2}, ratio {}", &lhs / &d2);
    println!("quoted constant {} < ratio", squared_distance_constant(2));
    println!("q^3/(q+1) = {} >= ratio", squared_distance_constant_sound(2));

    // Largest ratio over all pairs of length-L Cantor pairs.
    for p in [2u32, 3] {
        let len = if p == 2 { 4 } else { 2 };
        let count = (p as u64).pow(len as u32);
        let values: Vec<_> = (0..count)
            .map(|i| CantorValue::from_prefix_index(i, p, 2, len))
            .collect::<padic_kas::Result<_>>()?;
        let mut worst = BigRational::zero();
        for x1 in &values {
            for y1 in &values {
                let za = combine(&[x1.clone(), y1.clone()])?.to_rational();
                for x2 in &values {
                    for y2 in &values {
                        let dx = x1.to_rational() - x2.to_rational();
                        let dy = y1.to_rational() - y2.to_rational();
                        let d2 = &dx * &dx + &dy * &dy;
                        if d2.is_zero() {
                            continue;
                        }
                        let zb = combine(&[x2.clone(), y2.clone()])?.to_rational();
                        let ratio = (&za - zb).abs() / d2;
                        if ratio > worst {
                            worst = ratio;
                        }
                    }
                }
            }
        }
        println!(
            "p={p} L={len}: largest ratio {worst}, quoted {}, q^3/(q+1) = {}",
            squared_distance_constant(p),
            squared_distance_constant_sound(p)
        );
    }
    Ok(())
}

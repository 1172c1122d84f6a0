//! Digit interleaving of points of Z_p^n into Z_p, and its contraction property.
//!
//! cargo run --example interleave

use padic_kas::interleave::{deinterleave, interleave, interleave_by_addition, omega};
use padic_kas::padic::{point_distance, PadicPoint};

fn main() -> padic_kas::Result<()> {
    let x: PadicPoint = "(2:3:1,0,0;2:3:1,1,0)".parse()?;
    let z = interleave(&x);
    println!("interleave{x} = {z}");
    println!("omega(x_2) = {}", omega(x.coord(1), 2)?);
    assert_eq!(interleave_by_addition(&x)?, *z.value());
    assert_eq!(deinterleave(&z), x);

    // d(interleave a, interleave b) <= d(a,b)^n: agreement on k digits per coordinate
    // gives agreement on n·k interleaved digits.
    let (p, n, k) = (3, 2, 3);
    let count = 3u64.pow((n * k) as u32);
    let mut tight = 0;
    for i in 0..count {
        for j in 0..count {
            let (a, b) = (PadicPoint::from_index(i, p, n, k)?, PadicPoint::from_index(j, p, n, k)?);
            let lhs = interleave(&a).value().sub(interleave(&b).value())?.norm();
            let rhs = num_traits::pow(point_distance(&a, &b)?, n);
            assert!(lhs <= rhs);
            tight += usize::from(lhs == rhs);
        }
    }
    println!("{} pairs checked, bound attained by {tight}", count * count);
    Ok(())
}

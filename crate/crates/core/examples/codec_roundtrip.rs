//! Truncated p-adic integers, their Cantor images and the way back.
//!
//! cargo run --example codec_roundtrip

use padic_kas::{cantor_decode, cantor_encode, make_padic, phi_full, TruncatedPadicInt};

fn main() -> padic_kas::Result<()> {
    // 3 in Z_2 to three digits, units digit first.
    let x: TruncatedPadicInt = "2:3:1,1,0".parse()?;
    println!("x = {x} (value {}, norm {})", x.to_u64().unwrap(), x.norm());

    let one = make_padic(&[1], 2, 3)?;
    let minus_one = TruncatedPadicInt::zero(2, 3)?.sub(&one)?;
    println!("-1 to three digits is {minus_one}; x - 1 = {}", x.add(&minus_one)?);

    for n in 1..=3 {
        let c = cantor_encode(&x, n)?;
        let spread = phi_full(&x, n)?;
        println!(
            "n={n}: encode -> {c} = {}, phi_full -> {spread} = {}",
            c.to_rational(),
            spread.to_rational()
        );
        assert_eq!(cantor_decode(&c), x);
    }

    // Every residue mod 5^4 survives the trip through the Cantor set.
    for v in 0..625 {
        let x = TruncatedPadicInt::from_u64(v, 5, 4)?;
        assert_eq!(cantor_decode(&cantor_encode(&x, 2)?), x);
    }
    println!("all 625 residues mod 5^4 round-trip");
    Ok(())
}

//! A real-valued function of two 2-adic variables as g of one real variable.
//!
//! cargo run --example real_superposition

use num_rational::BigRational;
use padic_kas::padic::PadicPoint;
use padic_kas::superposition::{build_g, superpose1, superposition_argument, Builtin, CylinderFunction};

fn main() -> padic_kas::Result<()> {
    let (p, n, k) = (2, 2, 2);
    let f = CylinderFunction::builtin(Builtin::NormProduct, p, n, k)?;
    let g = build_g(&f)?;

    for i in 0..f.point_count() {
        let x = PadicPoint::from_index(i, p, n, k)?;
        let t = superposition_argument(&x)?.to_rational();
        let v = superpose1(&g, &x)?;
        assert_eq!(v.to_bits(), f.eval_real(&x)?.to_bits());
        println!("{x}  t = {t:>6}  g(t) = {v}");
    }

    // Between blocks g interpolates linearly.
    let gap = g.gap(0);
    println!(
        "gap ({}, {}): g = {} .. {}, midpoint value {}",
        gap.left,
        gap.right,
        gap.left_value,
        gap.right_value,
        g.eval(&gap.midpoint())?
    );
    println!("g(1/2) = {}", g.eval(&BigRational::new(1.into(), 2.into()))?);
    Ok(())
}

//! A p-adic-valued function of three 3-adic variables as h of one p-adic variable.
//!
//! cargo run --example padic_superposition

use padic_kas::padic::PadicPoint;
use padic_kas::superposition::{
    build_h, superpose2_with, Builtin, CylinderFunction, WeightConvention,
};

fn main() -> padic_kas::Result<()> {
    let (p, n, k) = (3, 3, 2);
    let f = CylinderFunction::builtin(Builtin::PadicSum, p, n, k)?;
    let h = build_h(&f)?;
    println!("h tabulated on {} arguments", h.len());

    let x: PadicPoint = "(3:2:2,1;3:2:1,1;3:2:0,2)".parse()?;
    for weights in [WeightConvention::Unshifted, WeightConvention::Shifted] {
        let z = h.argument(&x, weights)?;
        let v = superpose2_with(&h, &x, weights)?;
        println!("{weights:?}: h({z}) = {v}");
        assert_eq!(v, f.eval_padic(&x)?);
    }

    for i in 0..f.point_count() {
        let x = PadicPoint::from_index(i, p, n, k)?;
        assert_eq!(superpose2_with(&h, &x, WeightConvention::Unshifted)?, f.eval_padic(&x)?);
    }
    println!("identity holds at all {} points", f.point_count());
    Ok(())
}

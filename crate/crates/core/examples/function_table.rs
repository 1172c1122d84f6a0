//! Cylinder functions as JSON tables: write one, read it back, build g from it.
//!
//! cargo run --example function_table

use padic_kas::padic::PadicPoint;
use padic_kas::superposition::{build_g, superpose1, CylinderFunction};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> padic_kas::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = CylinderFunction::random_real(3, 2, 1, &mut rng)?;
    let json = f.to_json();
    for line in json.lines().take(8) {
        println!("{line}");
    }
    println!("  ...");

    let path = std::env::temp_dir().join("padic_kas_table.json");
    std::fs::write(&path, &json).expect("temp dir is writable");
    let loaded = CylinderFunction::load(&path)?;
    let g = build_g(&loaded)?;
    for i in 0..loaded.point_count() {
        let x = PadicPoint::from_index(i, 3, 2, 1)?;
        assert_eq!(superpose1(&g, &x)?.to_bits(), f.eval_real(&x)?.to_bits());
    }
    println!("table at {} reproduced through g", path.display());

    // Broken tables name the offending field.
    let broken = json.replacen("\"value\": ", "\"value\": \"oops\", \"v\": ", 1);
    if let Err(e) = CylinderFunction::from_json(&broken) {
        println!("rejected: {e}");
    }
    Ok(())
}

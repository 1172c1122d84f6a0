//! Level-L blocks and gaps of the Cantor-like set, and its CSV dump.
//!
//! cargo run --example cantor_set -- 3 2 2

use padic_kas::cantor::{cantor_left_endpoints, gap_intervals};
use padic_kas::emit::write_cantor_csv;

fn main() -> padic_kas::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("arguments are p n L"))
        .collect();
    let (p, n, level) = match args[..] {
        [p, n, l] => (p as u32, n, l),
        _ => (2, 2, 2),
    };

    let q = n as u32 * (p - 1) + 1;
    println!("p={p} n={n} L={level}: base {q}, {} blocks of width 1/{}", p.pow(level as u32), q.pow(level as u32));
    for (a, b) in gap_intervals(p, n, level)?.iter().take(6) {
        println!("  gap ({a}, {b}) width {}", b - a);
    }

    let lefts = cantor_left_endpoints(p, n, level)?;
    println!("first endpoints: {:?}", lefts.iter().take(4).map(|t| t.to_string()).collect::<Vec<_>>());

    write_cantor_csv(p, n, level, std::io::stdout().lock())
}

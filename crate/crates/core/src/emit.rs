//! CSV emission of the level-L Cantor block endpoints for plotting.

use std::io::Write;
use std::path::Path;

use num_traits::ToPrimitive;

use crate::cantor::cantor_left_endpoints;
use crate::error::{Error, Result};
use crate::padic::{check_prime, checked_pow};

pub const MAX_CSV_ROWS: u64 = 1_000_000;

/// Writes `index,rational,decimal` rows for every level-L block's left endpoint, in
/// increasing order, after a header row.
pub fn write_cantor_csv<W: Write>(p: u32, n: usize, level: usize, out: W) -> Result<()> {
    check_prime(p)?;
    let rows = checked_pow(p, level)
        .filter(|&r| r <= MAX_CSV_ROWS)
        .ok_or(Error::SizeLimitExceeded {
            what: "cantor csv",
            count: (p as u128).saturating_pow(level as u32),
            limit: MAX_CSV_ROWS as u128,
        })?;
    let endpoints = cantor_left_endpoints(p, n, level)?;
    debug_assert_eq!(endpoints.len() as u64, rows);
    let mut writer = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| Error::Config(format!("csv: {e}"));
    writer
        .write_record(["index", "rational", "decimal"])
        .map_err(csv_err)?;
    for (i, t) in endpoints.iter().enumerate() {
        let decimal = t.to_f64().expect("endpoint in [0,1]");
        writer
            .write_record([i.to_string(), t.to_string(), decimal.to_string()])
            .map_err(csv_err)?;
    }
    writer.flush().map_err(|e| Error::Config(format!("csv: {e}")))?;
    Ok(())
}

pub fn emit_cantor_csv(p: u32, n: usize, level: usize, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_cantor_csv(p, n, level, std::io::BufWriter::new(file))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(p: u32, n: usize, level: usize) -> String {
        let mut buf = Vec::new();
        write_cantor_csv(p, n, level, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn middle_thirds() {
        assert_eq!(
            render(2, 2, 1),
            "index,rational,decimal\n0,0,0\n1,2/3,0.6666666666666666\n"
        );
        let rows: Vec<String> = render(2, 2, 2)
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap().to_owned())
            .collect();
        assert_eq!(rows, ["0", "2/9", "2/3", "8/9"]);
    }

    #[test]
    fn arity_one_is_uniform_grid() {
        let rows: Vec<String> = render(5, 1, 1)
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap().to_owned())
            .collect();
        assert_eq!(rows, ["0", "1/5", "2/5", "3/5", "4/5"]);
    }

    #[test]
    fn size_limit() {
        assert!(matches!(
            write_cantor_csv(2, 2, 21, Vec::new()),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}

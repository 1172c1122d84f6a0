use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::padic::{check_prime, checked_pow, padic_add, PadicPoint, PadicScalar, TruncatedPadicInt};

/// Largest table a cylinder function (or a constructed representative) may hold.
pub const MAX_TABLE_ENTRIES: u64 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Codomain {
    Real,
    Padic,
}

impl Codomain {
    pub fn name(self) -> &'static str {
        match self {
            Codomain::Real => "real",
            Codomain::Padic => "padic",
        }
    }
}

impl FromStr for Codomain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "real" => Ok(Codomain::Real),
            "padic" => Ok(Codomain::Padic),
            _ => Err(Error::parse("codomain", s, "expected real or padic")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Real(f64),
    Padic(PadicScalar),
}

impl Value {
    pub fn codomain(&self) -> Codomain {
        match self {
            Value::Real(_) => Codomain::Real,
            Value::Padic(_) => Codomain::Padic,
        }
    }

    /// Bit-level equality for reals, digit equality for p-adic values.
    pub fn identical(&self, other: &Value) -> bool {
        match (self, other) {
            (Value::Real(a), Value::Real(b)) => a.to_bits() == b.to_bits(),
            (Value::Padic(a), Value::Padic(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Real(v) => write!(f, "{v}"),
            Value::Padic(v) => write!(f, "{v}"),
        }
    }
}

/// Named cylinder functions. Coordinate indices are 0-based here and 1-based in names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Zero,
    /// `x_k` (p-adic).
    Projection(usize),
    /// `x₁ + … + xₙ` modulo `p^K` (p-adic).
    PadicSum,
    /// `|x_k|ₚ` (real).
    Norm(usize),
    /// `Π |x_i|ₚ` (real).
    NormProduct,
    /// Units digit of `x_k` (real).
    UnitDigit(usize),
}

impl Builtin {
    /// `None` for [`Builtin::Zero`], which lives in either codomain.
    pub fn natural_codomain(self) -> Option<Codomain> {
        match self {
            Builtin::Zero => None,
            Builtin::Projection(_) | Builtin::PadicSum => Some(Codomain::Padic),
            Builtin::Norm(_) | Builtin::NormProduct | Builtin::UnitDigit(_) => Some(Codomain::Real),
        }
    }

    fn coordinate(self) -> Option<usize> {
        match self {
            Builtin::Projection(k) | Builtin::Norm(k) | Builtin::UnitDigit(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Zero => f.write_str("zero"),
            Builtin::Projection(k) => write!(f, "proj-{}", k + 1),
            Builtin::PadicSum => f.write_str("padic-sum"),
            Builtin::Norm(k) => write!(f, "norm-{}", k + 1),
            Builtin::NormProduct => f.write_str("norm-product"),
            Builtin::UnitDigit(k) => write!(f, "digit0-{}", k + 1),
        }
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let indexed = |prefix: &str| -> Option<Result<usize>> {
            let k = s.strip_prefix(prefix)?;
            Some(match k.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(Error::parse("builtin", s, "coordinate index must be 1 or more")),
            })
        };
        match s {
            "zero" => return Ok(Builtin::Zero),
            "padic-sum" => return Ok(Builtin::PadicSum),
            "norm-product" => return Ok(Builtin::NormProduct),
            _ => {}
        }
        if let Some(k) = indexed("proj-") {
            return k.map(Builtin::Projection);
        }
        if let Some(k) = indexed("norm-") {
            return k.map(Builtin::Norm);
        }
        if let Some(k) = indexed("digit0-") {
            return k.map(Builtin::UnitDigit);
        }
        Err(Error::parse(
            "builtin",
            s,
            "expected zero, proj-k, padic-sum, norm-k, norm-product or digit0-k",
        ))
    }
}

#[derive(Clone, Debug)]
enum Body {
    Builtin(Builtin),
    Real(Vec<f64>),
    Padic(Vec<PadicScalar>),
    /// Evaluates the inner function on the coordinates truncated to its level.
    Truncated(Box<CylinderFunction>),
}

/// A level-K locally constant function on ℤₚⁿ: its value depends only on the first `K`
/// digits of each coordinate.
///
/// Tables are indexed by [`PadicPoint::index`].
#[derive(Clone, Debug)]
pub struct CylinderFunction {
    p: u32,
    n: usize,
    level: usize,
    codomain: Codomain,
    body: Body,
}

fn validate_shape(p: u32, n: usize, level: usize) -> Result<u64> {
    check_prime(p)?;
    if n == 0 {
        return Err(Error::ZeroArity);
    }
    if level == 0 {
        return Err(Error::ZeroPrecision);
    }
    checked_pow(p, n * level)
        .filter(|&c| c <= MAX_TABLE_ENTRIES)
        .ok_or(Error::SizeLimitExceeded {
            what: "cylinder function table",
            count: (p as u128).saturating_pow((n * level) as u32),
            limit: MAX_TABLE_ENTRIES as u128,
        })
}

impl CylinderFunction {
    /// A builtin in its natural codomain; `zero` is real-valued.
    pub fn builtin(builtin: Builtin, p: u32, n: usize, level: usize) -> Result<Self> {
        let codomain = builtin.natural_codomain().unwrap_or(Codomain::Real);
        Self::builtin_with_codomain(builtin, p, n, level, codomain)
    }

    pub fn builtin_with_codomain(
        builtin: Builtin,
        p: u32,
        n: usize,
        level: usize,
        codomain: Codomain,
    ) -> Result<Self> {
        validate_shape(p, n, level)?;
        if let Some(natural) = builtin.natural_codomain() {
            if natural != codomain {
                return Err(Error::CodomainMismatch {
                    expected: codomain.name(),
                    found: natural.name(),
                });
            }
        }
        if let Some(k) = builtin.coordinate() {
            if k >= n {
                return Err(Error::IndexOutOfRange { index: k + 1, bound: n + 1 });
            }
        }
        Ok(CylinderFunction {
            p,
            n,
            level,
            codomain,
            body: Body::Builtin(builtin),
        })
    }

    pub fn zero(p: u32, n: usize, level: usize, codomain: Codomain) -> Result<Self> {
        Self::builtin_with_codomain(Builtin::Zero, p, n, level, codomain)
    }

    pub fn real_table(p: u32, n: usize, level: usize, values: Vec<f64>) -> Result<Self> {
        let count = validate_shape(p, n, level)?;
        if values.len() as u64 != count {
            return Err(Error::TableFormat {
                location: "entries".into(),
                message: format!("expected {count} values, found {}", values.len()),
            });
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::TableFormat {
                location: format!("entries[{i}]"),
                message: "real values must be finite".into(),
            });
        }
        Ok(CylinderFunction {
            p,
            n,
            level,
            codomain: Codomain::Real,
            body: Body::Real(values),
        })
    }

    pub fn padic_table(p: u32, n: usize, level: usize, values: Vec<PadicScalar>) -> Result<Self> {
        let count = validate_shape(p, n, level)?;
        if values.len() as u64 != count {
            return Err(Error::TableFormat {
                location: "entries".into(),
                message: format!("expected {count} values, found {}", values.len()),
            });
        }
        if let Some(i) = values.iter().position(|v| v.p() != p) {
            return Err(Error::TableFormat {
                location: format!("entries[{i}]"),
                message: format!("value has p={}, table has p={p}", values[i].p()),
            });
        }
        Ok(CylinderFunction {
            p,
            n,
            level,
            codomain: Codomain::Padic,
            body: Body::Padic(values),
        })
    }

    /// Tabulates `f` over every point of `(ℤ/p^K)ⁿ`.
    pub fn tabulate(
        p: u32,
        n: usize,
        level: usize,
        codomain: Codomain,
        f: impl Fn(&PadicPoint) -> Value,
    ) -> Result<Self> {
        let count = validate_shape(p, n, level)?;
        let points = (0..count).map(|i| PadicPoint::from_index_unchecked(i, p, n, level));
        match codomain {
            Codomain::Real => {
                let values = points
                    .map(|x| match f(&x) {
                        Value::Real(v) => Ok(v),
                        other => Err(Error::CodomainMismatch {
                            expected: "real",
                            found: other.codomain().name(),
                        }),
                    })
                    .collect::<Result<_>>()?;
                Self::real_table(p, n, level, values)
            }
            Codomain::Padic => {
                let values = points
                    .map(|x| match f(&x) {
                        Value::Padic(v) => Ok(v),
                        other => Err(Error::CodomainMismatch {
                            expected: "padic",
                            found: other.codomain().name(),
                        }),
                    })
                    .collect::<Result<_>>()?;
                Self::padic_table(p, n, level, values)
            }
        }
    }

    /// Uniform values in `[-1, 1)`.
    pub fn random_real<R: Rng + ?Sized>(p: u32, n: usize, level: usize, rng: &mut R) -> Result<Self> {
        let count = validate_shape(p, n, level)?;
        let values = (0..count).map(|_| rng.gen_range(-1.0..1.0)).collect();
        Self::real_table(p, n, level, values)
    }

    /// Uniform residues modulo `p^K`.
    pub fn random_padic<R: Rng + ?Sized>(p: u32, n: usize, level: usize, rng: &mut R) -> Result<Self> {
        let count = validate_shape(p, n, level)?;
        let values = (0..count)
            .map(|_| {
                let digits = (0..level).map(|_| rng.gen_range(0..p)).collect();
                PadicScalar::from_int(&TruncatedPadicInt::from_digits_unchecked(p, digits))
            })
            .collect();
        Self::padic_table(p, n, level, values)
    }

    /// The same function read at level `K+1`: the new digit of every coordinate is ignored.
    pub fn lift(&self) -> Result<Self> {
        validate_shape(self.p, self.n, self.level + 1)?;
        Ok(CylinderFunction {
            p: self.p,
            n: self.n,
            level: self.level + 1,
            codomain: self.codomain,
            body: Body::Truncated(Box::new(self.clone())),
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn codomain(&self) -> Codomain {
        self.codomain
    }

    /// `p^(nK)`.
    pub fn point_count(&self) -> u64 {
        checked_pow(self.p, self.n * self.level).expect("validated at construction")
    }

    pub fn builtin_kind(&self) -> Option<Builtin> {
        match self.body {
            Body::Builtin(b) => Some(b),
            _ => None,
        }
    }

    fn check_point(&self, x: &PadicPoint) -> Result<()> {
        if x.dimension() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.dimension(),
            });
        }
        if x.p() != self.p || x.precision() != self.level {
            return Err(Error::PrecisionMismatch(
                format!("p={} K={}", self.p, self.level),
                format!("p={} K={}", x.p(), x.precision()),
            ));
        }
        Ok(())
    }

    pub fn evaluate(&self, x: &PadicPoint) -> Result<Value> {
        self.check_point(x)?;
        Ok(self.evaluate_unchecked(x))
    }

    pub fn eval_real(&self, x: &PadicPoint) -> Result<f64> {
        match self.evaluate(x)? {
            Value::Real(v) => Ok(v),
            Value::Padic(_) => Err(Error::CodomainMismatch {
                expected: "real",
                found: "padic",
            }),
        }
    }

    pub fn eval_padic(&self, x: &PadicPoint) -> Result<PadicScalar> {
        match self.evaluate(x)? {
            Value::Padic(v) => Ok(v),
            Value::Real(_) => Err(Error::CodomainMismatch {
                expected: "padic",
                found: "real",
            }),
        }
    }

    fn table_index(&self, x: &PadicPoint) -> usize {
        x.index().expect("table sizes fit in u64") as usize
    }

    fn evaluate_unchecked(&self, x: &PadicPoint) -> Value {
        match &self.body {
            Body::Real(values) => Value::Real(values[self.table_index(x)]),
            Body::Padic(values) => Value::Padic(values[self.table_index(x)].clone()),
            Body::Truncated(inner) => {
                let coords = x
                    .coords()
                    .iter()
                    .map(|c| c.with_precision(inner.level).expect("nonzero level"))
                    .collect();
                inner.evaluate_unchecked(&PadicPoint::new(coords).expect("shared shape"))
            }
            Body::Builtin(b) => self.evaluate_builtin(*b, x),
        }
    }

    fn evaluate_builtin(&self, builtin: Builtin, x: &PadicPoint) -> Value {
        let norm_f64 = |r: BigRational| r.to_f64().expect("norms are finite");
        match builtin {
            Builtin::Zero => match self.codomain {
                Codomain::Real => Value::Real(0.0),
                Codomain::Padic => Value::Padic(
                    PadicScalar::zero(self.p, self.level).expect("validated prime"),
                ),
            },
            Builtin::Projection(k) => Value::Padic(PadicScalar::from_int(x.coord(k))),
            Builtin::PadicSum => {
                let sum = x.coords()[1..]
                    .iter()
                    .try_fold(x.coord(0).clone(), |acc, c| padic_add(&acc, c))
                    .expect("coordinates share p and K");
                Value::Padic(PadicScalar::from_int(&sum))
            }
            Builtin::Norm(k) => Value::Real(norm_f64(x.coord(k).norm())),
            Builtin::NormProduct => {
                let product = x
                    .coords()
                    .iter()
                    .fold(BigRational::one(), |acc, c| acc * c.norm());
                Value::Real(norm_f64(product))
            }
            Builtin::UnitDigit(k) => Value::Real(x.coord(k).digit(0) as f64),
        }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    /// Parses the JSON table format:
    /// `{"p", "n", "K", "codomain", "entries": [{"x": [[digits]...], "value": ...}]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: TableFile = serde_json::from_str(text).map_err(|e| Error::TableFormat {
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        file.into_function()
    }

    /// Writes the table format; builtins and lifts are tabulated.
    pub fn to_json(&self) -> String {
        let entries = (0..self.point_count())
            .map(|i| {
                let x = PadicPoint::from_index_unchecked(i, self.p, self.n, self.level);
                let value = match self.evaluate_unchecked(&x) {
                    Value::Real(v) => serde_json::Value::from(v),
                    Value::Padic(v) => serde_json::Value::from(v.to_string()),
                };
                TableEntry {
                    x: x.coords().iter().map(|c| c.digits().iter().map(|&d| d as i64).collect()).collect(),
                    value,
                }
            })
            .collect();
        let file = TableFile {
            p: self.p,
            n: self.n,
            level: self.level,
            codomain: self.codomain,
            entries,
        };
        serde_json::to_string_pretty(&file).expect("table serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    p: u32,
    n: usize,
    #[serde(rename = "K")]
    level: usize,
    codomain: Codomain,
    entries: Vec<TableEntry>,
}

#[derive(Serialize, Deserialize)]
struct TableEntry {
    x: Vec<Vec<i64>>,
    value: serde_json::Value,
}

impl TableFile {
    fn into_function(self) -> Result<CylinderFunction> {
        let table_err = |location: String, message: String| Error::TableFormat { location, message };
        let count = validate_shape(self.p, self.n, self.level)
            .map_err(|e| table_err("header".into(), e.to_string()))?;
        let mut slots: Vec<Option<Value>> = vec![None; count as usize];
        for (i, entry) in self.entries.into_iter().enumerate() {
            if entry.x.len() != self.n {
                return Err(table_err(
                    format!("entries[{i}].x"),
                    format!("expected {} coordinates, found {}", self.n, entry.x.len()),
                ));
            }
            let coords = entry
                .x
                .iter()
                .enumerate()
                .map(|(k, digits)| {
                    crate::padic::make_padic(digits, self.p, self.level)
                        .map_err(|e| table_err(format!("entries[{i}].x[{k}]"), e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            let point = PadicPoint::new(coords).expect("shared shape");
            let value = match (self.codomain, &entry.value) {
                (Codomain::Real, serde_json::Value::Number(v)) => {
                    Value::Real(v.as_f64().ok_or_else(|| {
                        table_err(format!("entries[{i}].value"), "not a finite number".into())
                    })?)
                }
                (Codomain::Padic, serde_json::Value::String(s)) => {
                    let v: PadicScalar = s
                        .parse()
                        .map_err(|e: Error| table_err(format!("entries[{i}].value"), e.to_string()))?;
                    if v.p() != self.p {
                        return Err(table_err(
                            format!("entries[{i}].value"),
                            format!("value has p={}, table has p={}", v.p(), self.p),
                        ));
                    }
                    Value::Padic(v)
                }
                (codomain, other) => {
                    return Err(table_err(
                        format!("entries[{i}].value"),
                        format!("{other} is not a {} value", codomain.name()),
                    ))
                }
            };
            let slot = &mut slots[point.index().expect("bounded table") as usize];
            if slot.is_some() {
                return Err(table_err(
                    format!("entries[{i}].x"),
                    format!("duplicate entry for {point}"),
                ));
            }
            *slot = Some(value);
        }
        if let Some(missing) = slots.iter().position(Option::is_none) {
            let x = PadicPoint::from_index_unchecked(missing as u64, self.p, self.n, self.level);
            return Err(table_err("entries".into(), format!("table is not total: no entry for {x}")));
        }
        let values = slots.into_iter().map(Option::unwrap);
        match self.codomain {
            Codomain::Real => CylinderFunction::real_table(
                self.p,
                self.n,
                self.level,
                values
                    .map(|v| match v {
                        Value::Real(v) => v,
                        Value::Padic(_) => unreachable!(),
                    })
                    .collect(),
            ),
            Codomain::Padic => CylinderFunction::padic_table(
                self.p,
                self.n,
                self.level,
                values
                    .map(|v| match v {
                        Value::Padic(v) => v,
                        Value::Real(_) => unreachable!(),
                    })
                    .collect(),
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn point(values: &[u64], p: u32, k: usize) -> PadicPoint {
        PadicPoint::new(
            values
                .iter()
                .map(|&v| TruncatedPadicInt::from_u64(v, p, k).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn builtin_names_round_trip() {
        for name in ["zero", "proj-1", "proj-3", "padic-sum", "norm-2", "norm-product", "digit0-1"] {
            assert_eq!(name.parse::<Builtin>().unwrap().to_string(), name);
        }
        assert!("proj-0".parse::<Builtin>().is_err());
        assert!("cube".parse::<Builtin>().is_err());
    }

    #[test]
    fn builtin_values() {
        let sum = CylinderFunction::builtin(Builtin::PadicSum, 2, 2, 2).unwrap();
        let v = sum.eval_padic(&point(&[1, 1], 2, 2)).unwrap();
        assert_eq!(v.to_padic_int().unwrap().to_u64(), Some(2));
        let v = sum.eval_padic(&point(&[3, 1], 2, 2)).unwrap();
        assert!(v.is_zero());

        let norm = CylinderFunction::builtin(Builtin::Norm(0), 2, 2, 1).unwrap();
        assert_eq!(norm.eval_real(&point(&[1, 0], 2, 1)).unwrap(), 1.0);
        assert_eq!(norm.eval_real(&point(&[0, 1], 2, 1)).unwrap(), 0.0);

        let prod = CylinderFunction::builtin(Builtin::NormProduct, 3, 2, 2).unwrap();
        assert_eq!(prod.eval_real(&point(&[3, 1], 3, 2)).unwrap(), 1.0 / 3.0);

        let digit = CylinderFunction::builtin(Builtin::UnitDigit(1), 3, 2, 2).unwrap();
        assert_eq!(digit.eval_real(&point(&[0, 5], 3, 2)).unwrap(), 2.0);
    }

    #[test]
    fn builtin_validation() {
        assert!(matches!(
            CylinderFunction::builtin(Builtin::Projection(2), 2, 2, 1),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            CylinderFunction::builtin_with_codomain(Builtin::PadicSum, 2, 2, 1, Codomain::Real),
            Err(Error::CodomainMismatch { .. })
        ));
        assert!(matches!(
            CylinderFunction::builtin(Builtin::Zero, 4, 2, 1),
            Err(Error::NonPrimeModulus(4))
        ));
        let f = CylinderFunction::builtin(Builtin::Zero, 2, 2, 2).unwrap();
        assert!(matches!(
            f.evaluate(&point(&[1, 1, 1], 2, 2)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            f.evaluate(&point(&[1, 1], 2, 3)),
            Err(Error::PrecisionMismatch(..))
        ));
    }

    #[test]
    fn lift_ignores_new_digit() {
        let f = CylinderFunction::builtin(Builtin::PadicSum, 2, 2, 2).unwrap();
        let lifted = f.lift().unwrap();
        assert_eq!(lifted.level(), 3);
        let v = lifted.eval_padic(&point(&[1 + 4, 1 + 4], 2, 3)).unwrap();
        assert_eq!(v, f.eval_padic(&point(&[1, 1], 2, 2)).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = CylinderFunction::random_real(3, 2, 1, &mut rng).unwrap();
        let g = CylinderFunction::from_json(&f.to_json()).unwrap();
        for i in 0..f.point_count() {
            let x = PadicPoint::from_index(i, 3, 2, 1).unwrap();
            assert!(f.evaluate(&x).unwrap().identical(&g.evaluate(&x).unwrap()));
        }
        let f = CylinderFunction::random_padic(2, 2, 2, &mut rng).unwrap();
        let g = CylinderFunction::from_json(&f.to_json()).unwrap();
        for i in 0..f.point_count() {
            let x = PadicPoint::from_index(i, 2, 2, 2).unwrap();
            assert_eq!(f.evaluate(&x).unwrap(), g.evaluate(&x).unwrap());
        }
    }

    #[test]
    fn json_diagnostics() {
        let err = CylinderFunction::from_json("{\"p\": 2,\n \"n\": }").unwrap_err();
        assert!(matches!(err, Error::TableFormat { ref location, .. } if location.starts_with("line 2")));

        let missing = r#"{"p":2,"n":1,"K":1,"codomain":"real","entries":[{"x":[[0]],"value":1.0}]}"#;
        let err = CylinderFunction::from_json(missing).unwrap_err();
        assert!(err.to_string().contains("not total"), "{err}");

        let dup = r#"{"p":2,"n":1,"K":1,"codomain":"real","entries":[
            {"x":[[0]],"value":1.0},{"x":[[0]],"value":2.0}]}"#;
        let err = CylinderFunction::from_json(dup).unwrap_err();
        assert!(matches!(err, Error::TableFormat { ref location, .. } if location == "entries[1].x"));

        let bad_digit = r#"{"p":2,"n":1,"K":1,"codomain":"real","entries":[
            {"x":[[0]],"value":1.0},{"x":[[2]],"value":2.0}]}"#;
        let err = CylinderFunction::from_json(bad_digit).unwrap_err();
        assert!(matches!(err, Error::TableFormat { ref location, .. } if location == "entries[1].x[0]"));

        let wrong_kind = r#"{"p":2,"n":1,"K":1,"codomain":"padic","entries":[
            {"x":[[0]],"value":1.0},{"x":[[1]],"value":"2:1:1"}]}"#;
        let err = CylinderFunction::from_json(wrong_kind).unwrap_err();
        assert!(matches!(err, Error::TableFormat { ref location, .. } if location == "entries[0].value"));
    }

    #[test]
    fn padic_table_from_json() {
        let text = r#"{"p":2,"n":1,"K":2,"codomain":"padic","entries":[
            {"x":[[0,0]],"value":"2:2:0,0"},{"x":[[1,0]],"value":"2:2:1,0"},
            {"x":[[0,1]],"value":"2:2:0,1"},{"x":[[1,1]],"value":"2:2:1,1@-1"}]}"#;
        let f = CylinderFunction::from_json(text).unwrap();
        let v = f.eval_padic(&point(&[3], 2, 2)).unwrap();
        assert_eq!(v.valuation(), Some(-1));
    }
}

//! Truncated p-adic integers, p-adic scalars and the max-norm ultrametric on ℤₚⁿ.
//!
//! Every [`TruncatedPadicInt`] is a residue modulo `p^K`: the first `K` digits of the
//! canonical expansion `x = Σ xᵢ pⁱ`, stored units-first. All arithmetic is exact on these
//! residues.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn check_prime(p: u32) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NonPrimeModulus(p as u64))
    }
}

/// `p^exp` when it fits in a `u64`.
pub fn checked_pow(p: u32, exp: usize) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..exp {
        acc = acc.checked_mul(p as u64)?;
    }
    Some(acc)
}

/// `p^(-exp)` as an exact rational; `exp` may be negative.
pub fn inverse_power(p: u32, exp: i64) -> BigRational {
    let base = BigInt::from(p).pow(exp.unsigned_abs() as u32);
    if exp >= 0 {
        BigRational::new(BigInt::one(), base)
    } else {
        BigRational::from_integer(base)
    }
}

/// An element of ℤₚ known to `K` base-p digits, index 0 being the units digit.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruncatedPadicInt {
    p: u32,
    digits: Vec<u32>,
}

/// Builds a truncated p-adic integer from little-endian digits, zero-padding to `precision`.
pub fn make_padic(digits: &[i64], p: u32, precision: usize) -> Result<TruncatedPadicInt> {
    check_prime(p)?;
    if precision == 0 {
        return Err(Error::ZeroPrecision);
    }
    if digits.len() > precision {
        return Err(Error::TooManyDigits(digits.len(), precision));
    }
    let mut out = Vec::with_capacity(precision);
    for (index, &digit) in digits.iter().enumerate() {
        if digit < 0 || digit >= p as i64 {
            return Err(Error::DigitOutOfRange {
                index,
                digit,
                max: p - 1,
            });
        }
        out.push(digit as u32);
    }
    out.resize(precision, 0);
    Ok(TruncatedPadicInt { p, digits: out })
}

/// `|x|ₚ = p^(-N)` for the first nonzero digit index `N`; an all-zero residue reports 0.
pub fn padic_norm(x: &TruncatedPadicInt) -> BigRational {
    match x.valuation() {
        Some(v) => inverse_power(x.p, v as i64),
        None => BigRational::zero(),
    }
}

/// Addition modulo `p^K`, digit by digit with carry.
pub fn padic_add(x: &TruncatedPadicInt, y: &TruncatedPadicInt) -> Result<TruncatedPadicInt> {
    x.check_compatible(y)?;
    let p = x.p as u64;
    let mut carry = 0u64;
    let digits = x
        .digits
        .iter()
        .zip(&y.digits)
        .map(|(&a, &b)| {
            let s = a as u64 + b as u64 + carry;
            carry = s / p;
            (s % p) as u32
        })
        .collect();
    Ok(TruncatedPadicInt { p: x.p, digits })
}

/// Subtraction modulo `p^K`, digit by digit with borrow.
pub fn padic_sub(x: &TruncatedPadicInt, y: &TruncatedPadicInt) -> Result<TruncatedPadicInt> {
    x.check_compatible(y)?;
    let p = x.p as i64;
    let mut borrow = 0i64;
    let digits = x
        .digits
        .iter()
        .zip(&y.digits)
        .map(|(&a, &b)| {
            let mut d = a as i64 - b as i64 - borrow;
            if d < 0 {
                d += p;
                borrow = 1;
            } else {
                borrow = 0;
            }
            d as u32
        })
        .collect();
    Ok(TruncatedPadicInt { p: x.p, digits })
}

impl TruncatedPadicInt {
    pub fn zero(p: u32, precision: usize) -> Result<Self> {
        make_padic(&[], p, precision)
    }

    /// The residue of `value` modulo `p^precision`.
    pub fn from_u64(value: u64, p: u32, precision: usize) -> Result<Self> {
        check_prime(p)?;
        if precision == 0 {
            return Err(Error::ZeroPrecision);
        }
        Ok(Self::from_u64_unchecked(value, p, precision))
    }

    pub(crate) fn from_u64_unchecked(mut value: u64, p: u32, precision: usize) -> Self {
        let base = p as u64;
        let digits = (0..precision)
            .map(|_| {
                let d = (value % base) as u32;
                value /= base;
                d
            })
            .collect();
        TruncatedPadicInt { p, digits }
    }

    /// Digits must already be validated against `p`.
    pub(crate) fn from_digits_unchecked(p: u32, digits: Vec<u32>) -> Self {
        debug_assert!(digits.iter().all(|&d| d < p));
        TruncatedPadicInt { p, digits }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn precision(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn digit(&self, i: usize) -> u32 {
        self.digits[i]
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    /// Index of the first nonzero digit, `None` for the zero residue.
    pub fn valuation(&self) -> Option<usize> {
        self.digits.iter().position(|&d| d != 0)
    }

    pub fn norm(&self) -> BigRational {
        padic_norm(self)
    }

    /// Number of leading (low-order) digits shared with `other`.
    pub fn common_prefix_len(&self, other: &Self) -> usize {
        self.digits
            .iter()
            .zip(&other.digits)
            .take_while(|(a, b)| a == b)
            .count()
    }

    pub fn to_u64(&self) -> Option<u64> {
        let mut acc = 0u64;
        for &d in self.digits.iter().rev() {
            acc = acc.checked_mul(self.p as u64)?.checked_add(d as u64)?;
        }
        Some(acc)
    }

    pub fn to_biguint(&self) -> BigUint {
        self.digits
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        padic_add(self, other)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        padic_sub(self, other)
    }

    /// Multiplication by `p^k` modulo `p^K`: digits move up by `k` places.
    pub fn shift_up(&self, k: usize) -> Self {
        let precision = self.precision();
        let mut digits = vec![0; precision];
        for (i, &d) in self.digits.iter().enumerate().take(precision.saturating_sub(k)) {
            digits[i + k] = d;
        }
        TruncatedPadicInt { p: self.p, digits }
    }

    /// Same residue read at a higher precision (new digits zero) or truncated to a lower one.
    pub fn with_precision(&self, precision: usize) -> Result<Self> {
        if precision == 0 {
            return Err(Error::ZeroPrecision);
        }
        let mut digits = self.digits.clone();
        digits.resize(precision, 0);
        Ok(TruncatedPadicInt { p: self.p, digits })
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.precision() != other.precision() {
            return Err(Error::PrecisionMismatch(
                format!("p={} K={}", self.p, self.precision()),
                format!("p={} K={}", other.p, other.precision()),
            ));
        }
        Ok(())
    }
}

fn write_digits(f: &mut fmt::Formatter<'_>, digits: &[u32]) -> fmt::Result {
    for (i, d) in digits.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{d}")?;
    }
    Ok(())
}

/// `p:K:d0,d1,...,d(K-1)`, units digit first.
impl fmt::Display for TruncatedPadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:", self.p, self.precision())?;
        write_digits(f, &self.digits)
    }
}

pub(crate) fn parse_triple(what: &'static str, s: &str) -> Result<(u32, usize, Vec<i64>)> {
    let mut parts = s.trim().splitn(3, ':');
    let (Some(base), Some(len), Some(body)) = (parts.next(), parts.next(), parts.next()) else {
        return Err(Error::parse(what, s, "expected base:length:digits"));
    };
    let base = base
        .trim()
        .parse::<u32>()
        .map_err(|e| Error::parse(what, s, format!("base: {e}")))?;
    let len = len
        .trim()
        .parse::<usize>()
        .map_err(|e| Error::parse(what, s, format!("length: {e}")))?;
    let digits = if body.trim().is_empty() {
        Vec::new()
    } else {
        body.split(',')
            .map(|d| d.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::parse(what, s, format!("digit: {e}")))?
    };
    if digits.len() != len {
        return Err(Error::parse(
            what,
            s,
            format!("length {len} but {} digits listed", digits.len()),
        ));
    }
    Ok((base, len, digits))
}

impl FromStr for TruncatedPadicInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, precision, digits) = parse_triple("p-adic integer", s)?;
        make_padic(&digits, p, precision)
    }
}

/// A point of ℤₚⁿ at shared precision `K`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PadicPoint {
    coords: Vec<TruncatedPadicInt>,
}

impl PadicPoint {
    pub fn new(coords: Vec<TruncatedPadicInt>) -> Result<Self> {
        let first = coords.first().ok_or(Error::ZeroArity)?;
        for c in &coords[1..] {
            first.check_compatible(c)?;
        }
        Ok(PadicPoint { coords })
    }

    /// The point with mixed-radix index `index`: coordinate `k` is `(index / p^(kK)) mod p^K`.
    pub fn from_index(index: u64, p: u32, n: usize, precision: usize) -> Result<Self> {
        check_prime(p)?;
        if n == 0 {
            return Err(Error::ZeroArity);
        }
        if precision == 0 {
            return Err(Error::ZeroPrecision);
        }
        Ok(Self::from_index_unchecked(index, p, n, precision))
    }

    pub(crate) fn from_index_unchecked(mut index: u64, p: u32, n: usize, precision: usize) -> Self {
        let block = checked_pow(p, precision).unwrap_or(u64::MAX);
        let coords = (0..n)
            .map(|_| {
                let c = TruncatedPadicInt::from_u64_unchecked(index % block, p, precision);
                index /= block;
                c
            })
            .collect();
        PadicPoint { coords }
    }

    /// Inverse of [`PadicPoint::from_index`]; `None` if `p^(nK)` overflows `u64`.
    pub fn index(&self) -> Option<u64> {
        let block = checked_pow(self.p(), self.precision())?;
        let mut acc = 0u64;
        for c in self.coords.iter().rev() {
            acc = acc.checked_mul(block)?.checked_add(c.to_u64()?)?;
        }
        Some(acc)
    }

    pub fn p(&self) -> u32 {
        self.coords[0].p
    }

    pub fn precision(&self) -> usize {
        self.coords[0].precision()
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[TruncatedPadicInt] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> &TruncatedPadicInt {
        &self.coords[k]
    }

    pub fn into_coords(self) -> Vec<TruncatedPadicInt> {
        self.coords
    }

    /// Smallest valuation of a coordinate difference; `None` when the points coincide.
    pub fn distance_valuation(&self, other: &Self) -> Option<usize> {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.common_prefix_len(b))
            .filter(|&v| v < self.precision())
            .min()
    }
}

impl fmt::Display for PadicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for PadicPoint {
    type Err = Error;

    /// `(a;b;...)` with each coordinate in the textual p-adic format; parentheses optional.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = body
            .split(';')
            .map(str::parse)
            .collect::<Result<Vec<TruncatedPadicInt>>>()?;
        PadicPoint::new(coords)
    }
}

/// `max_k |X_k − Y_k|ₚ`.
pub fn point_distance(x: &PadicPoint, y: &PadicPoint) -> Result<BigRational> {
    if x.dimension() != y.dimension() {
        return Err(Error::DimensionMismatch {
            expected: x.dimension(),
            found: y.dimension(),
        });
    }
    let mut best = BigRational::zero();
    for (a, b) in x.coords.iter().zip(&y.coords) {
        let d = padic_norm(&padic_sub(a, b)?);
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum ScalarRepr {
    /// Zero known to `precision` absolute digits.
    Zero { p: u32, precision: usize },
    /// `p^valuation · unit`, with `unit`'s units digit nonzero.
    Unit {
        valuation: i64,
        unit: TruncatedPadicInt,
    },
}

/// An element of ℚₚ: a valuation together with a unit.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PadicScalar(ScalarRepr);

impl PadicScalar {
    pub fn zero(p: u32, precision: usize) -> Result<Self> {
        check_prime(p)?;
        Ok(PadicScalar(ScalarRepr::Zero { p, precision }))
    }

    pub fn new(valuation: i64, unit: TruncatedPadicInt) -> Result<Self> {
        if unit.digit(0) == 0 {
            return Err(Error::DomainViolation(format!(
                "unit {unit} has a zero units digit"
            )));
        }
        Ok(PadicScalar(ScalarRepr::Unit { valuation, unit }))
    }

    /// Normalizes a truncated integer; absolute precision is preserved.
    pub fn from_int(x: &TruncatedPadicInt) -> Self {
        match x.valuation() {
            None => PadicScalar(ScalarRepr::Zero {
                p: x.p,
                precision: x.precision(),
            }),
            Some(v) => PadicScalar(ScalarRepr::Unit {
                valuation: v as i64,
                unit: TruncatedPadicInt {
                    p: x.p,
                    digits: x.digits[v..].to_vec(),
                },
            }),
        }
    }

    pub fn p(&self) -> u32 {
        match &self.0 {
            ScalarRepr::Zero { p, .. } => *p,
            ScalarRepr::Unit { unit, .. } => unit.p,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, ScalarRepr::Zero { .. })
    }

    pub fn valuation(&self) -> Option<i64> {
        match &self.0 {
            ScalarRepr::Zero { .. } => None,
            ScalarRepr::Unit { valuation, .. } => Some(*valuation),
        }
    }

    pub fn unit(&self) -> Option<&TruncatedPadicInt> {
        match &self.0 {
            ScalarRepr::Zero { .. } => None,
            ScalarRepr::Unit { unit, .. } => Some(unit),
        }
    }

    /// `p^(-v)`; zero has norm 0.
    pub fn norm(&self) -> BigRational {
        match self.valuation() {
            None => BigRational::zero(),
            Some(v) => inverse_power(self.p(), v),
        }
    }

    /// Expands back into ℤₚ at the scalar's absolute precision; `None` for negative valuation.
    pub fn to_padic_int(&self) -> Option<TruncatedPadicInt> {
        match &self.0 {
            ScalarRepr::Zero { p, precision } => Some(TruncatedPadicInt {
                p: *p,
                digits: vec![0; (*precision).max(1)],
            }),
            ScalarRepr::Unit { valuation, unit } => {
                let v = usize::try_from(*valuation).ok()?;
                let mut digits = vec![0; v];
                digits.extend_from_slice(&unit.digits);
                Some(TruncatedPadicInt { p: unit.p, digits })
            }
        }
    }
}

impl From<TruncatedPadicInt> for PadicScalar {
    fn from(x: TruncatedPadicInt) -> Self {
        PadicScalar::from_int(&x)
    }
}

/// Nonnegative valuations print as the expanded p-adic integer; otherwise `unit@v`
/// meaning `unit · p^v`.
impl fmt::Display for PadicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.0, self.to_padic_int()) {
            (_, Some(x)) => write!(f, "{x}"),
            (ScalarRepr::Unit { valuation, unit }, None) => write!(f, "{unit}@{valuation}"),
            (ScalarRepr::Zero { .. }, None) => unreachable!(),
        }
    }
}

impl FromStr for PadicScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('@') {
            None => Ok(PadicScalar::from_int(&s.parse()?)),
            Some((unit, v)) => {
                let v = v
                    .trim()
                    .parse::<i64>()
                    .map_err(|e| Error::parse("p-adic scalar", s, e.to_string()))?;
                PadicScalar::new(v, unit.parse()?)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(value: u64, p: u32, k: usize) -> TruncatedPadicInt {
        TruncatedPadicInt::from_u64(value, p, k).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn make_padic_pads_and_validates() {
        assert_eq!(make_padic(&[], 2, 3).unwrap().digits(), &[0, 0, 0]);
        let three = make_padic(&[1, 1], 2, 3).unwrap();
        assert_eq!(three.digits(), &[1, 1, 0]);
        assert_eq!(three.to_u64(), Some(3));
        assert!(matches!(
            make_padic(&[2], 2, 3),
            Err(Error::DigitOutOfRange { digit: 2, .. })
        ));
        assert!(matches!(
            make_padic(&[-1], 3, 3),
            Err(Error::DigitOutOfRange { .. })
        ));
        assert!(matches!(make_padic(&[1], 4, 3), Err(Error::NonPrimeModulus(4))));
        assert!(matches!(
            make_padic(&[1, 0, 1, 1], 2, 3),
            Err(Error::TooManyDigits(4, 3))
        ));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(7919 * 7907));
    }

    #[test]
    fn norm_examples() {
        let twelve = int(12, 3, 3);
        assert_eq!(twelve.digits(), &[0, 1, 1]);
        assert_eq!(padic_norm(&twelve), rat(1, 3));
        assert_eq!(padic_norm(&int(1, 5, 3)), rat(1, 1));
        assert_eq!(padic_norm(&int(0, 2, 4)), rat(0, 1));
    }

    #[test]
    fn distance_examples() {
        let pt = |a, b| PadicPoint::new(vec![int(a, 2, 3), int(b, 2, 3)]).unwrap();
        assert_eq!(point_distance(&pt(1, 1), &pt(1, 1)).unwrap(), rat(0, 1));
        assert_eq!(point_distance(&pt(0, 0), &pt(2, 1)).unwrap(), rat(1, 1));
        assert_eq!(point_distance(&pt(3, 2), &pt(1, 2)).unwrap(), rat(1, 2));

        let short = PadicPoint::new(vec![int(1, 2, 3)]).unwrap();
        assert!(matches!(
            point_distance(&pt(0, 0), &short),
            Err(Error::DimensionMismatch { .. })
        ));
        let other_k = PadicPoint::new(vec![int(1, 2, 4), int(1, 2, 4)]).unwrap();
        assert!(matches!(
            point_distance(&pt(0, 0), &other_k),
            Err(Error::PrecisionMismatch(..))
        ));
    }

    #[test]
    fn mixed_precision_point_rejected() {
        assert!(PadicPoint::new(vec![int(1, 2, 3), int(1, 2, 4)]).is_err());
        assert!(PadicPoint::new(vec![int(1, 2, 3), int(1, 3, 3)]).is_err());
        assert!(matches!(PadicPoint::new(vec![]), Err(Error::ZeroArity)));
    }

    #[test]
    fn add_examples() {
        let y = int(5, 2, 3);
        assert_eq!(padic_add(&int(0, 2, 3), &y).unwrap(), y);
        let s = padic_add(&int(3, 2, 3), &int(1, 2, 3)).unwrap();
        assert_eq!(s.digits(), &[0, 0, 1]);
        assert_eq!(s.to_u64(), Some(4));
        assert_eq!(padic_add(&int(5, 3, 2), &int(5, 3, 2)).unwrap().to_u64(), Some(1));
        assert!(padic_add(&int(1, 2, 3), &int(1, 2, 2)).is_err());
    }

    #[test]
    fn add_and_sub_match_integer_arithmetic_exhaustively() {
        for p in [2u32, 3] {
            for k in 1..=3 {
                let m = checked_pow(p, k).unwrap();
                for a in 0..m {
                    for b in 0..m {
                        let (x, y) = (int(a, p, k), int(b, p, k));
                        assert_eq!(x.add(&y).unwrap().to_u64(), Some((a + b) % m));
                        assert_eq!(x.sub(&y).unwrap().to_u64(), Some((a + m - b) % m));
                    }
                }
            }
        }
    }

    #[test]
    fn text_format() {
        let three: TruncatedPadicInt = "2:3:1,1,0".parse().unwrap();
        assert_eq!(three.to_u64(), Some(3));
        assert_eq!(three.to_string(), "2:3:1,1,0");
        assert!("2:3:1".parse::<TruncatedPadicInt>().is_err());
        assert!("2:3".parse::<TruncatedPadicInt>().is_err());
        assert!("2:3:1,x".parse::<TruncatedPadicInt>().is_err());
        assert!("6:3:1".parse::<TruncatedPadicInt>().is_err());

        let pt: PadicPoint = "(2:2:1,0;2:2:1,1)".parse().unwrap();
        assert_eq!(pt.coord(1).to_u64(), Some(3));
        assert_eq!(pt.to_string(), "(2:2:1,0;2:2:1,1)");
    }

    #[test]
    fn scalar_normalization() {
        let x = int(12, 3, 3);
        let s = PadicScalar::from_int(&x);
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(s.unit().unwrap().digits(), &[1, 1]);
        assert_eq!(s.norm(), rat(1, 3));
        assert_eq!(s.to_padic_int(), Some(x));
        assert_eq!(s.to_string(), "3:3:0,1,1");

        let z = PadicScalar::from_int(&int(0, 3, 3));
        assert!(z.is_zero());
        assert_eq!(z.norm(), rat(0, 1));
        assert_eq!(z.to_string(), "3:3:0,0,0");

        let frac: PadicScalar = "2:2:1,1@-2".parse().unwrap();
        assert_eq!(frac.norm(), rat(4, 1));
        assert_eq!(frac.to_string(), "2:2:1,1@-2");
        assert!(PadicScalar::new(0, int(2, 2, 3)).is_err());
    }

    #[test]
    fn point_index_round_trip() {
        for i in 0..64 {
            let pt = PadicPoint::from_index(i, 2, 2, 3).unwrap();
            assert_eq!(pt.index(), Some(i));
        }
        let pt = PadicPoint::from_index(5 + 8 * 3, 2, 2, 3).unwrap();
        assert_eq!(pt.coord(0).to_u64(), Some(5));
        assert_eq!(pt.coord(1).to_u64(), Some(3));
    }

    #[test]
    fn shift_up_multiplies_by_powers_of_p() {
        let x = int(5, 3, 3);
        assert_eq!(x.shift_up(1).to_u64(), Some(15));
        assert_eq!(x.shift_up(2).to_u64(), Some(45 % 27));
        assert!(x.shift_up(3).is_zero());
    }
}

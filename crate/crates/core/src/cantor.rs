//! Exact codec between ℤₚ and the Cantor-like set Cₚ ⊂ [0, 1].
//!
//! With arity `n` and `q = n(p−1)+1`, a p-adic integer `Σ xᵢ pⁱ` maps to the base-q
//! expansion whose i-th digit (most significant first) is `n·xᵢ`. Only the digits
//! `{0, n, …, n(p−1)}` occur, which leaves gaps of width `(n−1)·q^(−d)` between the level-d
//! blocks. Values are kept as digit strings; rationals appear only when asked for.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::padic::{check_prime, checked_pow, parse_triple, TruncatedPadicInt};

pub(crate) fn cantor_base(p: u32, n: usize) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroArity);
    }
    u32::try_from(n)
        .ok()
        .and_then(|n| n.checked_mul(p - 1))
        .and_then(|d| d.checked_add(1))
        .ok_or(Error::Config(format!("cantor base for p={p}, n={n} overflows")))
}

/// An element of Cₚ known to `L` base-q digits, most significant (coefficient of q⁻¹) first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CantorValue {
    p: u32,
    n: usize,
    q: u32,
    digits: Vec<u32>,
}

impl CantorValue {
    pub fn new(p: u32, n: usize, digits: Vec<u32>) -> Result<Self> {
        check_prime(p)?;
        let q = cantor_base(p, n)?;
        for (position, &digit) in digits.iter().enumerate() {
            if digit % n as u32 != 0 || digit >= q {
                return Err(Error::InvalidCantorDigit {
                    position,
                    digit,
                    arity: n,
                    max: q - 1,
                });
            }
        }
        Ok(CantorValue { p, n, q, digits })
    }

    pub fn zero(p: u32, n: usize, len: usize) -> Result<Self> {
        Self::new(p, n, vec![0; len])
    }

    /// Parses `q:L:d0,d1,...`; `p` is recovered from `q = n(p−1)+1`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroArity);
        }
        let (q, len, raw) = parse_triple("cantor value", s)?;
        if q < 2 || (q - 1) % n as u32 != 0 {
            return Err(Error::parse(
                "cantor value",
                s,
                format!("base {q} is not of the form {n}(p-1)+1"),
            ));
        }
        let p = (q - 1) / n as u32 + 1;
        if raw.len() > len {
            return Err(Error::TooManyDigits(raw.len(), len));
        }
        let mut digits = Vec::with_capacity(len);
        for (position, &d) in raw.iter().enumerate() {
            let digit = u32::try_from(d).map_err(|_| Error::InvalidCantorDigit {
                position,
                digit: 0,
                arity: n,
                max: q - 1,
            })?;
            digits.push(digit);
        }
        digits.resize(len, 0);
        Self::new(p, n, digits)
    }

    pub(crate) fn from_digits_unchecked(p: u32, n: usize, q: u32, digits: Vec<u32>) -> Self {
        CantorValue { p, n, q, digits }
    }

    /// The length-`len` prefix with order index `index` (the base-p number formed by the
    /// digits divided by `n`, most significant first).
    pub fn from_prefix_index(index: u64, p: u32, n: usize, len: usize) -> Result<Self> {
        check_prime(p)?;
        let q = cantor_base(p, n)?;
        Ok(Self::from_prefix_index_unchecked(index, p, n, q, len))
    }

    pub(crate) fn from_prefix_index_unchecked(
        mut index: u64,
        p: u32,
        n: usize,
        q: u32,
        len: usize,
    ) -> Self {
        let mut digits = vec![0; len];
        for d in digits.iter_mut().rev() {
            *d = (index % p as u64) as u32 * n as u32;
            index /= p as u64;
        }
        CantorValue { p, n, q, digits }
    }

    /// Order-preserving index of this digit string among all strings of the same length.
    pub fn prefix_index(&self) -> Option<u64> {
        let mut acc = 0u64;
        for &d in &self.digits {
            acc = acc
                .checked_mul(self.p as u64)?
                .checked_add((d / self.n as u32) as u64)?;
        }
        Some(acc)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    pub fn common_prefix_len(&self, other: &Self) -> usize {
        self.digits
            .iter()
            .zip(&other.digits)
            .take_while(|(a, b)| a == b)
            .count()
    }

    pub fn to_rational(&self) -> BigRational {
        cantor_to_rational(self)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.n != other.n || self.len() != other.len() {
            return Err(Error::PrecisionMismatch(
                format!("p={} n={} L={}", self.p, self.n, self.len()),
                format!("p={} n={} L={}", other.p, other.n, other.len()),
            ));
        }
        Ok(())
    }
}

/// `q:L:d0,d1,...`, most significant digit first.
impl fmt::Display for CantorValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:", self.q, self.len())?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

pub fn cantor_encode(x: &TruncatedPadicInt, n: usize) -> Result<CantorValue> {
    let q = cantor_base(x.p(), n)?;
    let digits = x.digits().iter().map(|&d| d * n as u32).collect();
    Ok(CantorValue::from_digits_unchecked(x.p(), n, q, digits))
}

pub fn cantor_decode(c: &CantorValue) -> TruncatedPadicInt {
    let digits = c.digits.iter().map(|&d| d / c.n as u32).collect();
    TruncatedPadicInt::from_digits_unchecked(c.p, digits)
}

/// Moves digit `i` to position `n·i`, zeros elsewhere; output length `n(L−1)+1`.
pub fn spread(c: &CantorValue) -> CantorValue {
    if c.is_empty() {
        return c.clone();
    }
    let mut digits = vec![0; c.n * (c.len() - 1) + 1];
    for (i, &d) in c.digits.iter().enumerate() {
        digits[c.n * i] = d;
    }
    CantorValue::from_digits_unchecked(c.p, c.n, c.q, digits)
}

/// Base-q digit interleave: output position `n·i+k` carries `parts[k]`'s digit `i`.
///
/// This is `Σ_k q^(−k)·spread(parts[k])`; every digit is at most `q−1`, so no carries occur.
pub fn combine(parts: &[CantorValue]) -> Result<CantorValue> {
    let first = parts.first().ok_or(Error::ArityMismatch {
        expected: 1,
        found: 0,
    })?;
    let n = first.n;
    if parts.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: parts.len(),
        });
    }
    for part in &parts[1..] {
        first.same_shape(part)?;
    }
    let len = first.len();
    let mut digits = vec![0; n * len];
    for (k, part) in parts.iter().enumerate() {
        for (i, &d) in part.digits.iter().enumerate() {
            digits[n * i + k] = d;
        }
    }
    Ok(CantorValue::from_digits_unchecked(first.p, n, first.q, digits))
}

/// Digits at positions `n·i+k`; inverse of [`combine`] in slot `k`.
pub fn extract(z: &CantorValue, k: usize) -> Result<CantorValue> {
    if k >= z.n {
        return Err(Error::IndexOutOfRange {
            index: k,
            bound: z.n,
        });
    }
    let digits = z.digits.iter().skip(k).step_by(z.n).copied().collect();
    Ok(CantorValue::from_digits_unchecked(z.p, z.n, z.q, digits))
}

/// All `n` slots of [`extract`].
pub fn extract_all(z: &CantorValue) -> Vec<CantorValue> {
    (0..z.n)
        .map(|k| extract(z, k).expect("slot below arity"))
        .collect()
}

/// `Σ n·xᵢ·q^(−n·i−1)`, i.e. `spread(cantor_encode(x, n))`.
pub fn phi_full(x: &TruncatedPadicInt, n: usize) -> Result<CantorValue> {
    Ok(spread(&cantor_encode(x, n)?))
}

pub fn cantor_to_rational(c: &CantorValue) -> BigRational {
    let q = BigInt::from(c.q);
    let mut numer = BigInt::zero();
    let mut denom = BigInt::one();
    for &d in &c.digits {
        numer = numer * &q + d;
        denom *= &q;
    }
    BigRational::new(numer, denom)
}

fn level_blocks(p: u32, len: usize) -> Result<u64> {
    checked_pow(p, len)
        .filter(|&m| m <= MAX_LEVEL_BLOCKS)
        .ok_or(Error::SizeLimitExceeded {
            what: "cantor level",
            count: (p as u128).saturating_pow(len as u32),
            limit: MAX_LEVEL_BLOCKS as u128,
        })
}

/// Upper bound on the number of level-L blocks enumerated by [`gap_intervals`] and
/// [`cantor_left_endpoints`].
pub const MAX_LEVEL_BLOCKS: u64 = 1 << 24;

/// Left endpoints of the `p^L` level-L blocks `[v, v + q^(−L)]`, increasing.
pub fn cantor_left_endpoints(p: u32, n: usize, len: usize) -> Result<Vec<BigRational>> {
    check_prime(p)?;
    let q = cantor_base(p, n)?;
    let count = level_blocks(p, len)?;
    let scale = BigInt::from(q).pow(len as u32);
    Ok((0..count)
        .map(|i| block_numerator(i, p, n, q, len))
        .map(|num| BigRational::new(num, scale.clone()))
        .collect())
}

/// Numerator over `q^L` of the left endpoint of block `index`.
pub(crate) fn block_numerator(mut index: u64, p: u32, n: usize, q: u32, len: usize) -> BigInt {
    let mut acc = BigInt::zero();
    let mut weight = BigInt::one();
    for _ in 0..len {
        acc += &weight * ((index % p as u64) * n as u64);
        index /= p as u64;
        weight *= q;
    }
    acc
}

/// The open intervals of `[0,1]` not covered by the level-L blocks, increasing.
///
/// Between consecutive blocks first differing at depth `d` the gap has width `(n−1)·q^(−d)`;
/// with `n = 1` the blocks tile `[0,1]` and the list is empty.
pub fn gap_intervals(p: u32, n: usize, len: usize) -> Result<Vec<(BigRational, BigRational)>> {
    check_prime(p)?;
    let q = cantor_base(p, n)?;
    let count = level_blocks(p, len)?;
    if n == 1 {
        return Ok(Vec::new());
    }
    let scale = BigInt::from(q).pow(len as u32);
    let mut gaps = Vec::with_capacity(count.saturating_sub(1) as usize);
    let mut prev_right = block_numerator(0, p, n, q, len) + 1;
    for i in 1..count {
        let left = block_numerator(i, p, n, q, len);
        gaps.push((
            BigRational::new(prev_right, scale.clone()),
            BigRational::new(left.clone(), scale.clone()),
        ));
        prev_right = left + 1;
    }
    Ok(gaps)
}

/// `((2p−1)²−1) / (2(p−1)²)`, the constant usually quoted for bounding the pair map
/// `(x̃, ỹ) ↦ combine(x̃, ỹ)` (arity 2) by the squared Euclidean distance.
///
/// The inequality does not hold for all pairs: with `p = 2` the points
/// `((2,0,0), ỹ)` and `((0,2,2), ỹ)` give `142/243 > 4·(10/27)²`. See
/// [`squared_distance_constant_sound`].
pub fn squared_distance_constant(p: u32) -> BigRational {
    let q = BigInt::from(2 * p - 1);
    let pm1 = BigInt::from(p - 1);
    BigRational::new(&q * &q - 1, BigInt::from(2) * &pm1 * &pm1)
}

/// `q³/(q+1)` with `q = 2p−1`: a constant for which
/// `|combine(a) − combine(b)| ≤ C·d²(a, b)` holds for every pair of arity-2 Cantor pairs.
///
/// If the first coordinates first differ at depth `Nx` and the second at `Ny`, the gap
/// structure gives `d² ≥ q^(−2Nx−2) + q^(−2Ny−2)` while the interleaved difference is at most
/// `(q·q^(−2Nx) + q^(−2Ny))/(q+1)`.
pub fn squared_distance_constant_sound(p: u32) -> BigRational {
    let q = BigInt::from(2 * p - 1);
    BigRational::new(q.pow(3), q + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn int(v: u64, p: u32, k: usize) -> TruncatedPadicInt {
        TruncatedPadicInt::from_u64(v, p, k).unwrap()
    }

    fn cv(p: u32, n: usize, digits: &[u32]) -> CantorValue {
        CantorValue::new(p, n, digits.to_vec()).unwrap()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(cantor_encode(&int(0, 2, 3), 2).unwrap().to_rational(), rat(0, 1));
        let one = cantor_encode(&int(1, 2, 3), 2).unwrap();
        assert_eq!(one.digits(), &[2, 0, 0]);
        assert_eq!(one.to_rational(), rat(2, 3));
        let all_ones = cantor_encode(&int(7, 2, 3), 2).unwrap();
        assert_eq!(all_ones.digits(), &[2, 2, 2]);
        assert_eq!(all_ones.to_rational(), rat(26, 27));
        let two = cantor_encode(&int(2, 3, 1), 2).unwrap();
        assert_eq!(two.base(), 5);
        assert_eq!(two.digits(), &[4]);
        assert_eq!(two.to_rational(), rat(4, 5));
        assert!(matches!(cantor_encode(&int(1, 2, 3), 0), Err(Error::ZeroArity)));
    }

    #[test]
    fn decode_examples() {
        assert!(cantor_decode(&cv(2, 2, &[0, 0, 0])).is_zero());
        assert_eq!(cantor_decode(&cv(2, 2, &[2, 0, 0])), int(1, 2, 3));
        assert!(matches!(
            CantorValue::new(2, 2, vec![1, 0, 0]),
            Err(Error::InvalidCantorDigit { position: 0, digit: 1, .. })
        ));
        assert!(matches!(
            CantorValue::parse("3:1:1", 2),
            Err(Error::InvalidCantorDigit { .. })
        ));
        assert_eq!(CantorValue::parse("3:3:2,0,0", 2).unwrap(), cv(2, 2, &[2, 0, 0]));
        assert!(CantorValue::parse("4:1:0", 2).is_err());
    }

    #[test]
    fn spread_examples() {
        assert!(spread(&cv(2, 2, &[0, 0])).is_zero());
        let s = spread(&cv(2, 2, &[2, 2]));
        assert_eq!(s.digits(), &[2, 0, 2]);
        assert_eq!(s.to_rational(), rat(20, 27));
        let c = cv(3, 1, &[1, 2, 0]);
        assert_eq!(spread(&c), c);
    }

    #[test]
    fn combine_examples() {
        let z = cv(2, 2, &[0]);
        assert!(combine(&[z.clone(), z.clone()]).unwrap().is_zero());
        let c = combine(&[cv(2, 2, &[2]), cv(2, 2, &[2])]).unwrap();
        assert_eq!(c.digits(), &[2, 2]);
        assert_eq!(c.to_rational(), rat(8, 9));
        let c = combine(&[cv(2, 2, &[2]), cv(2, 2, &[0])]).unwrap();
        assert_eq!(c.digits(), &[2, 0]);
        assert_eq!(c.to_rational(), rat(2, 3));
        assert!(matches!(
            combine(&[cv(2, 2, &[2])]),
            Err(Error::ArityMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn extract_examples() {
        let z = cv(2, 2, &[0, 0]);
        assert!(extract(&z, 0).unwrap().is_zero());
        let z = cv(2, 2, &[2, 2]);
        assert_eq!(extract(&z, 0).unwrap().to_rational(), rat(2, 3));
        assert_eq!(extract(&z, 1).unwrap().to_rational(), rat(2, 3));
        let z = cv(2, 2, &[2, 0, 2, 0]);
        let x = extract(&z, 0).unwrap();
        assert_eq!(x.digits(), &[2, 2]);
        assert_eq!(x.to_rational(), rat(8, 9));
        assert!(extract(&z, 1).unwrap().is_zero());
        assert!(matches!(extract(&z, 2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn phi_full_examples() {
        assert!(phi_full(&int(0, 2, 3), 2).unwrap().is_zero());
        assert_eq!(phi_full(&int(3, 2, 2), 2).unwrap().to_rational(), rat(20, 27));
        assert_eq!(phi_full(&int(1, 2, 3), 2).unwrap().to_rational(), rat(2, 3));
        assert_eq!(phi_full(&int(1, 2, 3), 2).unwrap().len(), 5);
    }

    #[test]
    fn rational_examples() {
        assert_eq!(cv(2, 2, &[0]).to_rational(), rat(0, 1));
        assert_eq!(cv(2, 2, &[2, 2]).to_rational(), rat(8, 9));
        assert_eq!(cv(3, 2, &[4]).to_rational(), rat(4, 5));
    }

    #[test]
    fn gap_examples() {
        assert_eq!(gap_intervals(2, 2, 1).unwrap(), vec![(rat(1, 3), rat(2, 3))]);
        assert_eq!(
            gap_intervals(2, 2, 2).unwrap(),
            vec![
                (rat(1, 9), rat(2, 9)),
                (rat(1, 3), rat(2, 3)),
                (rat(7, 9), rat(8, 9))
            ]
        );
        assert!(gap_intervals(5, 1, 3).unwrap().is_empty());
    }

    #[test]
    fn gap_widths_follow_first_difference_depth() {
        // Brute force: block k and k+1 first differ at depth d = L - (trailing p-1 digits of k).
        let (p, n, len) = (3u32, 3usize, 3usize);
        let q = 7i64;
        let gaps = gap_intervals(p, n, len).unwrap();
        assert_eq!(gaps.len(), 26);
        for (k, (a, b)) in gaps.iter().enumerate() {
            let mut idx = k as u64;
            let mut trailing = 0;
            while idx % p as u64 == (p - 1) as u64 {
                trailing += 1;
                idx /= p as u64;
            }
            let depth = (len - trailing) as u32;
            assert_eq!(b - a, rat(n as i64 - 1, q.pow(depth)));
        }
    }

    #[test]
    fn left_endpoints() {
        assert_eq!(cantor_left_endpoints(2, 2, 1).unwrap(), vec![rat(0, 1), rat(2, 3)]);
        assert_eq!(
            cantor_left_endpoints(2, 2, 2).unwrap(),
            vec![rat(0, 1), rat(2, 9), rat(2, 3), rat(8, 9)]
        );
        assert_eq!(
            cantor_left_endpoints(5, 1, 1).unwrap(),
            (0..5).map(|i| rat(i, 5)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn prefix_index_is_order_preserving() {
        let values: Vec<_> = (0..27)
            .map(|i| CantorValue::from_prefix_index(i, 3, 2, 3).unwrap())
            .collect();
        for (i, v) in values.iter().enumerate() {
            assert_eq!(v.prefix_index(), Some(i as u64));
        }
        assert!(values.windows(2).all(|w| w[0].to_rational() < w[1].to_rational()));
    }

    #[test]
    fn distance_constants() {
        assert_eq!(squared_distance_constant(2), rat(4, 1));
        assert_eq!(squared_distance_constant(3), rat(3, 1));
        assert_eq!(squared_distance_constant_sound(2), rat(27, 4));
    }

    #[test]
    fn stated_constant_has_a_counterexample() {
        let a = combine(&[cv(2, 2, &[2, 0, 0]), cv(2, 2, &[0, 0, 0])]).unwrap();
        let b = combine(&[cv(2, 2, &[0, 2, 2]), cv(2, 2, &[0, 0, 0])]).unwrap();
        let lhs = (a.to_rational() - b.to_rational()).abs();
        let dx = rat(2, 3) - rat(8, 27);
        assert_eq!(lhs, rat(142, 243));
        assert!(lhs > squared_distance_constant(2) * &dx * &dx);
        assert!(lhs <= squared_distance_constant_sound(2) * &dx * &dx);
    }
}

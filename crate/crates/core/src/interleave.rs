//! The ℤₚⁿ ↔ ℤₚ digit interleave, a base-p generalization of Morton order.
//!
//! Digit `i` of coordinate `k` lands at index `n·i+k` of the interleaved value. Interleaving
//! is done by digit placement; since the digit supports of the `p^k·ω(X_k)` are disjoint, this
//! agrees with summing them with carries.

use std::fmt;

use crate::error::{Error, Result};
use crate::padic::{PadicPoint, TruncatedPadicInt};

/// A p-adic integer of precision `n·K` read as the interleave of `n` coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct InterleavedPadic {
    arity: usize,
    value: TruncatedPadicInt,
}

impl InterleavedPadic {
    pub fn new(value: TruncatedPadicInt, arity: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        if value.precision() % arity != 0 {
            return Err(Error::PrecisionMismatch(
                format!("precision {}", value.precision()),
                format!("a multiple of arity {arity}"),
            ));
        }
        Ok(InterleavedPadic { arity, value })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn value(&self) -> &TruncatedPadicInt {
        &self.value
    }

    pub fn into_value(self) -> TruncatedPadicInt {
        self.value
    }

    /// Per-coordinate precision `K`.
    pub fn coord_precision(&self) -> usize {
        self.value.precision() / self.arity
    }
}

impl fmt::Display for InterleavedPadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// `ω(x) = Σ xᵢ p^(n·i)` at precision `n·K`.
pub fn omega(x: &TruncatedPadicInt, n: usize) -> Result<TruncatedPadicInt> {
    if n == 0 {
        return Err(Error::ZeroArity);
    }
    let mut digits = vec![0; n * x.precision()];
    for (i, &d) in x.digits().iter().enumerate() {
        digits[n * i] = d;
    }
    Ok(TruncatedPadicInt::from_digits_unchecked(x.p(), digits))
}

pub fn interleave(point: &PadicPoint) -> InterleavedPadic {
    let n = point.dimension();
    let mut digits = vec![0; n * point.precision()];
    for (k, coord) in point.coords().iter().enumerate() {
        for (i, &d) in coord.digits().iter().enumerate() {
            digits[n * i + k] = d;
        }
    }
    InterleavedPadic {
        arity: n,
        value: TruncatedPadicInt::from_digits_unchecked(point.p(), digits),
    }
}

/// Coordinate `k` of the de-interleave: digits at indices `n·i+k`.
pub fn deinterleave_k(z: &InterleavedPadic, k: usize) -> Result<TruncatedPadicInt> {
    if k >= z.arity {
        return Err(Error::IndexOutOfRange {
            index: k,
            bound: z.arity,
        });
    }
    let digits = z
        .value
        .digits()
        .iter()
        .skip(k)
        .step_by(z.arity)
        .copied()
        .collect();
    Ok(TruncatedPadicInt::from_digits_unchecked(z.value.p(), digits))
}

pub fn deinterleave(z: &InterleavedPadic) -> PadicPoint {
    let coords = (0..z.arity)
        .map(|k| deinterleave_k(z, k).expect("slot below arity"))
        .collect();
    PadicPoint::new(coords).expect("slots share p and precision")
}

/// `Σ_k p^k·ω(X_k)` evaluated with carrying additions; equals [`interleave`].
pub fn interleave_by_addition(point: &PadicPoint) -> Result<TruncatedPadicInt> {
    let n = point.dimension();
    let mut acc = TruncatedPadicInt::zero(point.p(), n * point.precision())?;
    for (k, coord) in point.coords().iter().enumerate() {
        acc = acc.add(&omega(coord, n)?.shift_up(k))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: u64, p: u32, k: usize) -> TruncatedPadicInt {
        TruncatedPadicInt::from_u64(v, p, k).unwrap()
    }

    fn point(values: &[u64], p: u32, k: usize) -> PadicPoint {
        PadicPoint::new(values.iter().map(|&v| int(v, p, k)).collect()).unwrap()
    }

    fn z(v: u64, p: u32, len: usize, n: usize) -> InterleavedPadic {
        InterleavedPadic::new(int(v, p, len), n).unwrap()
    }

    #[test]
    fn omega_examples() {
        assert!(omega(&int(0, 2, 2), 2).unwrap().is_zero());
        let w = omega(&int(3, 2, 2), 2).unwrap();
        assert_eq!(w.to_u64(), Some(5));
        assert_eq!(w.precision(), 4);
        assert_eq!(omega(&int(2, 3, 1), 3).unwrap().to_u64(), Some(2));
    }

    #[test]
    fn interleave_examples() {
        assert!(interleave(&point(&[0, 0], 2, 2)).value().is_zero());
        assert_eq!(interleave(&point(&[1, 1], 2, 2)).value().to_u64(), Some(3));
        let v = interleave(&point(&[1, 3], 2, 2));
        assert_eq!(v.value().digits(), &[1, 1, 0, 1]);
        assert_eq!(v.value().to_u64(), Some(11));
    }

    #[test]
    fn deinterleave_examples() {
        let zero = z(0, 2, 4, 2);
        assert!(deinterleave_k(&zero, 0).unwrap().is_zero());
        let three = z(3, 2, 4, 2);
        assert_eq!(deinterleave_k(&three, 0).unwrap().to_u64(), Some(1));
        assert_eq!(deinterleave_k(&three, 1).unwrap().to_u64(), Some(1));
        let eleven = z(11, 2, 4, 2);
        assert_eq!(deinterleave_k(&eleven, 0).unwrap().digits(), &[1, 0]);
        assert_eq!(deinterleave_k(&eleven, 1).unwrap().digits(), &[1, 1]);
        assert!(matches!(
            deinterleave_k(&eleven, 2),
            Err(Error::IndexOutOfRange { .. })
        ));

        assert_eq!(deinterleave(&zero), point(&[0, 0], 2, 2));
        assert_eq!(deinterleave(&three), point(&[1, 1], 2, 2));
        let five = z(5, 3, 2, 2);
        assert_eq!(deinterleave(&five), point(&[2, 1], 3, 1));
        assert_eq!(interleave(&point(&[2, 1], 3, 1)), five);
    }

    #[test]
    fn arity_must_divide_precision() {
        assert!(InterleavedPadic::new(int(1, 2, 3), 2).is_err());
        assert!(InterleavedPadic::new(int(1, 2, 3), 0).is_err());
    }

    #[test]
    fn placement_agrees_with_carrying_sum() {
        for p in [2u32, 3] {
            for n in [2usize, 3] {
                for i in 0..(p as u64).pow(2 * n as u32) {
                    let x = PadicPoint::from_index(i, p, n, 2).unwrap();
                    assert_eq!(&interleave_by_addition(&x).unwrap(), interleave(&x).value());
                }
            }
        }
    }
}

//! The univariate representative of a real-valued cylinder function.
//!
//! `g` is tabulated on the `p^L` level-L blocks of Cₚ (`L = n·K`) and extended to all of
//! `[0,1]` by linear interpolation across the complementary gaps. The extension agrees with
//! the table at both ends of every gap, so `g` is continuous on `[0,1]` whenever `n ≥ 2`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::cylinder::{Codomain, CylinderFunction};
use crate::cantor::{block_numerator, cantor_base, cantor_encode, combine, phi_full, CantorValue};
use crate::error::{Error, Result};
use crate::padic::PadicPoint;

#[derive(Clone, Debug)]
pub struct GFunction {
    p: u32,
    n: usize,
    level: usize,
    q: u32,
    /// Indexed by [`CantorValue::prefix_index`] of the length-`n·K` block prefix.
    table: Vec<f64>,
}

/// Where a point of `[0,1]` falls at the table's resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    /// Inside the closed block with this index.
    Block(u64),
    /// Strictly between blocks `i` and `i+1`.
    Gap(u64),
}

/// One complementary interval with the table values at its two ends.
#[derive(Clone, Debug, PartialEq)]
pub struct GapSegment {
    pub left: BigRational,
    pub right: BigRational,
    pub left_value: f64,
    pub right_value: f64,
}

impl GapSegment {
    /// Linear interpolation on the closed interval `[left, right]`, computed exactly and
    /// rounded once.
    pub fn interpolate(&self, t: &BigRational) -> Result<f64> {
        if t < &self.left || t > &self.right {
            return Err(Error::DomainViolation(format!(
                "{t} is outside [{}, {}]",
                self.left, self.right
            )));
        }
        let a = exact(self.left_value);
        let b = exact(self.right_value);
        let lambda = (t - &self.left) / (&self.right - &self.left);
        let value = &a + lambda * (b - &a);
        Ok(value.to_f64().expect("between two finite values"))
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.left + &self.right) / BigRational::from_integer(2.into())
    }
}

fn exact(v: f64) -> BigRational {
    BigRational::from_float(v).expect("table values are finite")
}

/// Builds `g` so that `g(Σ_k q^(−k)·phi_full(x_k)) = f(x)` on every block.
pub fn build_g(f: &CylinderFunction) -> Result<GFunction> {
    if f.codomain() != Codomain::Real {
        return Err(Error::CodomainMismatch {
            expected: "real",
            found: f.codomain().name(),
        });
    }
    let (p, n, level) = (f.p(), f.arity(), f.level());
    let q = cantor_base(p, n)?;
    let mut table = vec![f64::NAN; f.point_count() as usize];
    for i in 0..f.point_count() {
        let x = PadicPoint::from_index(i, p, n, level)?;
        let parts = x
            .coords()
            .iter()
            .map(|c| cantor_encode(c, n))
            .collect::<Result<Vec<_>>>()?;
        let key = combine(&parts)?;
        let slot = key.prefix_index().expect("bounded table") as usize;
        table[slot] = f.eval_real(&x)?;
    }
    Ok(GFunction {
        p,
        n,
        level: n * level,
        q,
        table,
    })
}

/// `Σ_k q^(−k)·phi_full(x_k)` as an exact length-`n·K` Cantor value.
///
/// The shifted spreads occupy disjoint digit positions, so the sum is a digit placement.
pub fn superposition_argument(x: &PadicPoint) -> Result<CantorValue> {
    let n = x.dimension();
    let q = cantor_base(x.p(), n)?;
    let mut digits = vec![0u32; n * x.precision()];
    for (k, coord) in x.coords().iter().enumerate() {
        for (j, &d) in phi_full(coord, n)?.digits().iter().enumerate() {
            digits[j + k] += d;
        }
    }
    debug_assert!(digits.iter().all(|&d| d < q));
    Ok(CantorValue::from_digits_unchecked(x.p(), n, q, digits))
}

impl GFunction {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// Cantor digit count `L = n·K`.
    pub fn level(&self) -> usize {
        self.level
    }

    /// Per-coordinate level `K`.
    pub fn input_level(&self) -> usize {
        self.level / self.n
    }

    pub fn base(&self) -> u32 {
        self.q
    }

    pub fn block_count(&self) -> u64 {
        self.table.len() as u64
    }

    pub fn block_value(&self, index: u64) -> f64 {
        self.table[index as usize]
    }

    pub fn block_prefix(&self, index: u64) -> CantorValue {
        CantorValue::from_prefix_index_unchecked(index, self.p, self.n, self.q, self.level)
    }

    fn scale(&self) -> BigInt {
        BigInt::from(self.q).pow(self.level as u32)
    }

    /// `[left, right]` of block `index`; `right − left = q^(−L)`.
    pub fn block_bounds(&self, index: u64) -> (BigRational, BigRational) {
        let num = block_numerator(index, self.p, self.n, self.q, self.level);
        let scale = self.scale();
        (
            BigRational::new(num.clone(), scale.clone()),
            BigRational::new(num + 1, scale),
        )
    }

    /// Table value at an exact block prefix.
    pub fn value_at(&self, prefix: &CantorValue) -> Result<f64> {
        if prefix.p() != self.p || prefix.arity() != self.n || prefix.len() != self.level {
            return Err(Error::PrecisionMismatch(
                format!("p={} n={} L={}", self.p, self.n, self.level),
                format!("p={} n={} L={}", prefix.p(), prefix.arity(), prefix.len()),
            ));
        }
        Ok(self.table[prefix.prefix_index().expect("bounded table") as usize])
    }

    pub fn locate(&self, t: &BigRational) -> Result<Location> {
        if t < &BigRational::zero() || t > &BigRational::one() {
            return Err(Error::DomainViolation(t.to_string()));
        }
        let last = self.block_count() - 1;
        // m = floor(t·q^L); blocks are [W/q^L, (W+1)/q^L] for admissible digit strings W.
        let scaled = t * BigRational::from_integer(self.scale());
        let m = scaled.floor().to_integer();
        let m = m.to_biguint().expect("t is nonnegative");
        if m >= self.scale().to_biguint().expect("positive") {
            return Ok(Location::Block(last));
        }
        let digits = base_q_digits(&m, self.q, self.level);
        // Largest admissible W ≤ m: follow m while its digits are multiples of n, then
        // round the first offending digit down and fill with the top digit.
        let n = self.n as u32;
        let mut index = 0u64;
        let mut exact_match = true;
        for &d in &digits {
            let c = if exact_match {
                if d % n != 0 {
                    exact_match = false;
                }
                d / n
            } else {
                self.p - 1
            };
            index = index * self.p as u64 + c as u64;
        }
        let (_, right) = self.block_bounds(index);
        if t <= &right || index == last {
            Ok(Location::Block(index))
        } else {
            Ok(Location::Gap(index))
        }
    }

    /// Evaluates the extended `g` at `t ∈ [0,1]`.
    pub fn eval(&self, t: &BigRational) -> Result<f64> {
        match self.locate(t)? {
            Location::Block(i) => Ok(self.table[i as usize]),
            Location::Gap(i) => self.gap(i).interpolate(t),
        }
    }

    /// The gap between blocks `index` and `index+1`.
    pub fn gap(&self, index: u64) -> GapSegment {
        let (_, left) = self.block_bounds(index);
        let (right, _) = self.block_bounds(index + 1);
        GapSegment {
            left,
            right,
            left_value: self.table[index as usize],
            right_value: self.table[index as usize + 1],
        }
    }

    /// All gaps in increasing order; empty when `n = 1`.
    pub fn gaps(&self) -> Vec<GapSegment> {
        if self.n == 1 {
            return Vec::new();
        }
        (0..self.block_count() - 1).map(|i| self.gap(i)).collect()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Entry {
            prefix: String,
            left: String,
            value: f64,
        }
        #[derive(Serialize)]
        struct Out {
            p: u32,
            n: usize,
            #[serde(rename = "K")]
            k: usize,
            #[serde(rename = "L")]
            l: usize,
            q: u32,
            gaps: u64,
            table: Vec<Entry>,
        }
        let out = Out {
            p: self.p,
            n: self.n,
            k: self.input_level(),
            l: self.level,
            q: self.q,
            gaps: if self.n == 1 { 0 } else { self.block_count() - 1 },
            table: (0..self.block_count())
                .map(|i| Entry {
                    prefix: self.block_prefix(i).to_string(),
                    left: self.block_bounds(i).0.to_string(),
                    value: self.table[i as usize],
                })
                .collect(),
        };
        serde_json::to_string_pretty(&out).expect("serializable")
    }
}

fn base_q_digits(m: &BigUint, q: u32, len: usize) -> Vec<u32> {
    let mut rest = m.clone();
    let q = BigUint::from(q);
    let mut digits = vec![0; len];
    for d in digits.iter_mut().rev() {
        let (quot, rem) = rest.div_rem(&q);
        *d = rem.to_u32().expect("digit below q");
        rest = quot;
    }
    digits
}

pub fn eval_g(g: &GFunction, t: &BigRational) -> Result<f64> {
    g.eval(t)
}

/// `g(Σ_k q^(−k)·phi_full(x_k))`.
pub fn superpose1(g: &GFunction, x: &PadicPoint) -> Result<f64> {
    if x.dimension() != g.n {
        return Err(Error::DimensionMismatch {
            expected: g.n,
            found: x.dimension(),
        });
    }
    if x.p() != g.p || x.precision() != g.input_level() {
        return Err(Error::PrecisionMismatch(
            format!("p={} K={}", g.p, g.input_level()),
            format!("p={} K={}", x.p(), x.precision()),
        ));
    }
    let s = superposition_argument(x)?;
    g.eval(&s.to_rational())
}
